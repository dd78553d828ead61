#include "k3/elliptic.hpp"

#include <algorithm>

#include "k3/error.hpp"

namespace k3 {

namespace {

constexpr int kWeightA = 8;
constexpr int kWeightB = 12;
constexpr int kWeightDelta = 24;

RatPoly compute_discriminant(const RatPoly& a, const RatPoly& b) {
  return Rational(4) * a.pow(3) + Rational(27) * b.pow(2);
}

bool divides(const RatPoly& factor, const RatPoly& p) { return divmod(p, factor).second.is_zero(); }

}  // namespace

WeierstrassModel::WeierstrassModel(RatPoly a, RatPoly b) : a_(std::move(a)), b_(std::move(b)) {
  if (a_.degree() > kWeightA) throw InvalidArgument("deg a exceeds 8: " + a_.to_string());
  if (b_.degree() > kWeightB) throw InvalidArgument("deg b exceeds 12: " + b_.to_string());
}

RatPoly discriminant(const WeierstrassModel& w) {
  RatPoly d = compute_discriminant(w.a(), w.b());
  if (d.is_zero()) throw DegenerateModel("discriminant vanishes identically");
  return d;
}

std::string place_label(const Place& place) {
  if (std::holds_alternative<Infinity>(place)) return "inf";
  if (const auto* r = std::get_if<Rational>(&place)) return to_string(*r);
  return std::get<RatPoly>(place).to_string();
}

VanishingOrders vanishing_orders(const WeierstrassModel& w, const Place& place) {
  const RatPoly delta = discriminant(w);
  if (std::holds_alternative<Infinity>(place)) {
    return {valuation_at(w.a().reversed(kWeightA), 0), valuation_at(w.b().reversed(kWeightB), 0),
            valuation_at(delta.reversed(kWeightDelta), 0)};
  }
  RatPoly factor;
  if (const auto* r = std::get_if<Rational>(&place)) {
    factor = RatPoly::linear_factor(*r);
  } else {
    factor = std::get<RatPoly>(place);
    if (factor.degree() < 1) throw InvalidPlace("place factor must have positive degree");
  }
  if (!divides(factor, delta)) throw InvalidPlace("not a zero of the discriminant: " + place_label(place));
  return {valuation(w.a(), factor), valuation(w.b(), factor), valuation(delta, factor)};
}

std::string KodairaType::label() const {
  switch (family) {
    case KodairaFamily::I: return "I" + std::to_string(n);
    case KodairaFamily::II: return "II";
    case KodairaFamily::III: return "III";
    case KodairaFamily::IV: return "IV";
    case KodairaFamily::IStar: return "I" + std::to_string(n) + "*";
    case KodairaFamily::IVStar: return "IV*";
    case KodairaFamily::IIIStar: return "III*";
    case KodairaFamily::IIStar: return "II*";
  }
  return "?";
}

int KodairaType::euler() const {
  switch (family) {
    case KodairaFamily::I: return n;
    case KodairaFamily::II: return 2;
    case KodairaFamily::III: return 3;
    case KodairaFamily::IV: return 4;
    case KodairaFamily::IStar: return 6 + n;
    case KodairaFamily::IVStar: return 8;
    case KodairaFamily::IIIStar: return 9;
    case KodairaFamily::IIStar: return 10;
  }
  return 0;
}

KodairaType kodaira_type(VanishingOrders o) {
  if (o.a < 0 || o.b < 0 || o.delta < 0) throw InvalidArgument("negative vanishing order");
  KodairaType t;
  while (o.a >= 4 && o.b >= 6 && o.delta >= 12) {
    o.a -= 4;
    o.b -= 6;
    o.delta -= 12;
    ++t.reductions;
  }
  const int a = o.a, b = o.b, d = o.delta;
  if (d == 0) {
    t.family = KodairaFamily::I;
  } else if (a == 0 && b == 0) {
    t.family = KodairaFamily::I;
    t.n = d;
  } else if (a >= 1 && b == 1 && d == 2) {
    t.family = KodairaFamily::II;
  } else if (a == 1 && b >= 2 && d == 3) {
    t.family = KodairaFamily::III;
  } else if (a >= 2 && b == 2 && d == 4) {
    t.family = KodairaFamily::IV;
  } else if (d == 6 && ((a == 2 && b >= 3) || (a >= 2 && b == 3))) {
    t.family = KodairaFamily::IStar;
  } else if (a == 2 && b == 3 && d > 6) {
    t.family = KodairaFamily::IStar;
    t.n = d - 6;
  } else if (a >= 3 && b == 4 && d == 8) {
    t.family = KodairaFamily::IVStar;
  } else if (a == 3 && b >= 5 && d == 9) {
    t.family = KodairaFamily::IIIStar;
  } else if (a >= 4 && b == 5 && d == 10) {
    t.family = KodairaFamily::IIStar;
  } else {
    throw InconsistentOrders("no Kodaira type for orders (" + std::to_string(a) + "," + std::to_string(b) + "," +
                             std::to_string(d) + ")");
  }
  return t;
}

std::vector<FiberReport> fiber_analysis(const WeierstrassModel& w) {
  const RatPoly delta = discriminant(w);
  std::vector<FiberReport> out;

  for (const Rational& r : rational_roots(delta)) {
    const Place place = r;
    const VanishingOrders o = vanishing_orders(w, place);
    out.push_back({place, kodaira_type(o), o, 1});
  }

  const VanishingOrders inf = vanishing_orders(w, Infinity{});
  if (inf.delta > 0) out.push_back({Infinity{}, kodaira_type(inf), inf, 1});

  const auto parts = squarefree_decomposition(delta);
  for (std::size_t i = 0; i < parts.size(); ++i) {
    RatPoly rest = parts[i];
    for (const Rational& r : rational_roots(rest)) rest = divmod(rest, RatPoly::linear_factor(r)).first;
    if (rest.degree() < 1) continue;
    const int multiplicity = static_cast<int>(i) + 1;
    if (multiplicity >= 2) {
      throw UnresolvedCluster("irrational roots of multiplicity " + std::to_string(multiplicity) + ": " +
                              rest.to_string());
    }
    const VanishingOrders o = vanishing_orders(w, Place{rest});
    const KodairaType t = kodaira_type(o);
    if (t.family != KodairaFamily::I || t.n != 1) {
      throw InconsistentOrders("simple irrational cluster is not of type I1: " + rest.to_string());
    }
    out.push_back({Place{rest}, t, o, rest.degree()});
  }
  return out;
}

int euler_total(const std::vector<FiberReport>& reports) {
  int total = 0;
  for (const auto& r : reports) total += r.euler();
  return total;
}

}  // namespace k3
