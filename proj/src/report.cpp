#include "k3/report.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>
#include <variant>

#include "k3/error.hpp"

namespace k3 {

namespace {

using ojson = nlohmann::ordered_json;

const std::vector<std::string> kCsvColumns = {
    "m2", "m1", "m", "l", "r", "N", "k", "pic", "status", "predicates", "N_table", "flags",
    "n_on_C", "g", "points16", "points8", "k2", "N4", "k4", "sigma4_elliptic", "configuration"};

std::vector<CandidateRow> sorted(std::vector<CandidateRow> rows) {
  std::sort(rows.begin(), rows.end(), row_less);
  return rows;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) out += sep;
    out += parts[i];
  }
  return out;
}

template <std::size_t N>
std::string join_counts(const std::array<int, N>& counts) {
  std::vector<std::string> parts;
  for (int c : counts) parts.push_back(std::to_string(c));
  return join(parts, ",");
}

std::vector<std::string> csv_cells(const CandidateRow& row) {
  auto opt = [](const auto& v) { return v ? std::to_string(*v) : std::string(); };
  return {std::to_string(row.profile.m2),
          std::to_string(row.profile.m1),
          std::to_string(row.profile.m),
          std::to_string(row.profile.l),
          std::to_string(row.profile.r),
          std::to_string(row.N()),
          std::to_string(row.k()),
          row.picard,
          to_string(row.status),
          join(row.predicates, ";"),
          opt(row.table_N),
          join(row.flags, ";"),
          opt(row.points_on_curve),
          opt(row.curve_genus),
          join_counts(row.sigma.n),
          join_counts(row.sigma2.n),
          std::to_string(row.sigma2.k),
          std::to_string(row.N4),
          std::to_string(row.k4),
          row.sigma4_elliptic ? "true" : "false",
          row.configuration.value_or("")};
}

void write_csv_header(std::ostringstream& os) {
  std::vector<std::string> cells;
  for (const auto& c : kCsvColumns) cells.push_back(csv_field(c));
  os << join(cells, ",") << "\r\n";
}

void write_csv_rows(std::ostringstream& os, const std::vector<CandidateRow>& rows) {
  for (const auto& row : sorted(rows)) {
    std::vector<std::string> cells;
    for (const auto& c : csv_cells(row)) cells.push_back(csv_field(c));
    os << join(cells, ",") << "\r\n";
  }
}

void write_text(std::ostringstream& os, const RankReport& rep) {
  os << "Picard rank " << rep.rank << ": " << rep.rows.size() << (rep.rows.size() == 1 ? " row" : " rows") << '\n';
  os << std::left << std::setw(4) << "m2" << std::setw(4) << "m1" << std::setw(4) << "m" << std::setw(4) << "l"
     << std::setw(4) << "r" << std::setw(4) << "N" << std::setw(4) << "k" << std::setw(20) << "Pic" << std::setw(24)
     << "status"
     << "notes" << '\n';
  for (const auto& row : sorted(rep.rows)) {
    std::vector<std::string> notes;
    if (row.table_N) notes.push_back("table N=" + std::to_string(*row.table_N));
    if (row.curve_genus) notes.push_back("g(C)=" + std::to_string(*row.curve_genus));
    if (row.points_on_curve) notes.push_back("N'=" + std::to_string(*row.points_on_curve));
    if (row.invariant_fiber) notes.push_back("C'=" + *row.invariant_fiber);
    notes.push_back("points=(" + join_counts(row.sigma.n) + ")");
    os << std::left << std::setw(4) << row.profile.m2 << std::setw(4) << row.profile.m1 << std::setw(4) << row.profile.m
       << std::setw(4) << row.profile.l << std::setw(4) << row.profile.r << std::setw(4) << row.N() << std::setw(4)
       << row.k() << std::setw(20) << row.picard << std::setw(24) << to_string(row.status) << join(notes, " ") << '\n';
  }
}

}  // namespace

Format parse_format(std::string_view name) {
  if (name == "text") return Format::Text;
  if (name == "json") return Format::Json;
  if (name == "csv") return Format::Csv;
  throw InvalidArgument("unknown format '" + std::string(name) + "'");
}

ojson to_json(const FixedLocusProfile& f) {
  ojson points = ojson::object();
  for (const auto& [t, c] : f.points) points[t.label()] = c;
  return {{"order", f.order}, {"points", points}, {"k", f.rational_curves}, {"genera", f.genera}};
}

ojson to_json(const CandidateRow& row) {
  ojson j;
  j["m2"] = row.profile.m2;
  j["m1"] = row.profile.m1;
  j["m"] = row.profile.m;
  j["l"] = row.profile.l;
  j["r"] = row.profile.r;
  j["N"] = row.N();
  j["k"] = row.k();
  j["pic"] = row.picard;
  j["status"] = to_string(row.status);
  j["predicates"] = row.predicates;
  if (row.table_N) j["N_table"] = *row.table_N;
  j["flags"] = row.flags;
  if (row.points_on_curve) j["n_on_C"] = *row.points_on_curve;
  if (row.curve_genus) j["g"] = *row.curve_genus;
  if (row.invariant_fiber) j["invariant_fiber"] = *row.invariant_fiber;
  j["a"] = row.a;
  j["involution"] = {{"g", row.involution.genus}, {"k", row.involution.rational_curves}};
  j["points16"] = to_json(row.fixed16());
  j["points8"] = to_json(row.fixed8());
  j["N4"] = row.N4;
  j["k4"] = row.k4;
  j["sigma4_elliptic"] = row.sigma4_elliptic;
  if (row.configuration) j["configuration"] = *row.configuration;
  return j;
}

ojson to_json(const RankReport& rep) {
  ojson rows = ojson::array();
  for (const auto& row : sorted(rep.rows)) rows.push_back(to_json(row));
  return {{"rank", rep.rank}, {"rows", rows}};
}

std::string csv_field(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) return std::string(text);
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string report(const RankReport& rep, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text: write_text(os, rep); break;
    case Format::Json: os << to_json(rep).dump(2) << '\n'; break;
    case Format::Csv:
      write_csv_header(os);
      write_csv_rows(os, rep.rows);
      break;
  }
  return os.str();
}

std::string report(const std::vector<RankReport>& reports, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      for (std::size_t i = 0; i < reports.size(); ++i) {
        if (i) os << '\n';
        write_text(os, reports[i]);
      }
      break;
    case Format::Json: {
      ojson arr = ojson::array();
      for (const auto& rep : reports) arr.push_back(to_json(rep));
      os << ojson{{"reports", arr}}.dump(2) << '\n';
      break;
    }
    case Format::Csv:
      write_csv_header(os);
      for (const auto& rep : reports) write_csv_rows(os, rep.rows);
      break;
  }
  return os.str();
}

namespace {

std::string orders_label(const VanishingOrders& o) {
  return "(" + std::to_string(o.a) + "," + std::to_string(o.b) + "," + std::to_string(o.delta) + ")";
}

std::string big(const Integer& x) { return x.get_str(); }

}  // namespace

ojson to_json(const WeierstrassModel& w, const std::vector<FiberReport>& fibers) {
  ojson list = ojson::array();
  for (const auto& f : fibers) {
    ojson e;
    if (std::holds_alternative<RatPoly>(f.place)) {
      e["cluster_degree"] = f.cluster_degree;
    } else {
      e["place"] = place_label(f.place);
    }
    e["type"] = f.type.label();
    e["euler"] = f.euler();
    list.push_back(e);
  }
  return {{"model", {{"a", w.a().to_string()}, {"b", w.b().to_string()}}},
          {"discriminant", discriminant(w).to_string()},
          {"fibers", list},
          {"euler_total", euler_total(fibers)}};
}

std::string fiber_report(const WeierstrassModel& w, Format format) {
  const auto fibers = fiber_analysis(w);
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      os << "a = " << w.a() << '\n' << "b = " << w.b() << '\n' << "discriminant = " << discriminant(w) << '\n';
      os << std::left << std::setw(8) << "type" << std::setw(8) << "euler" << std::setw(12) << "orders" << "place"
         << '\n';
      for (const auto& f : fibers) {
        std::string where = place_label(f.place);
        if (f.cluster_degree > 1) where = std::to_string(f.cluster_degree) + " roots of " + where;
        os << std::left << std::setw(8) << f.type.label() << std::setw(8) << f.euler() << std::setw(12)
           << orders_label(f.orders) << where << '\n';
      }
      os << "euler total = " << euler_total(fibers) << '\n';
      break;
    case Format::Json: os << to_json(w, fibers).dump(2) << '\n'; break;
    case Format::Csv:
      os << "place,cluster_degree,type,euler,v_a,v_b,v_delta\r\n";
      for (const auto& f : fibers) {
        os << csv_field(place_label(f.place)) << ',' << f.cluster_degree << ',' << csv_field(f.type.label()) << ','
           << f.euler() << ',' << f.orders.a << ',' << f.orders.b << ',' << f.orders.delta << "\r\n";
      }
      break;
  }
  return os.str();
}

ojson lattice_json(const GramLattice& l) {
  const Signature sig = signature(l);
  ojson disc = ojson::array();
  for (const auto& d : discriminant_group(l)) disc.push_back(big(d));
  ojson j;
  j["lattice"] = l.name();
  j["rank"] = rank(l);
  j["determinant"] = big(determinant(l));
  j["signature"] = {sig.positive, sig.negative};
  j["discriminant_group"] = disc;
  j["a"] = nullptr;
  j["involution"] = nullptr;
  try {
    j["a"] = two_elementary_a(l);
    const InvolutionFixedLocus inv = nikulin_fixed_locus(l);
    ojson fix = {{"kind", to_string(inv.kind)}};
    if (inv.kind == FixedLocusKind::CurveAndRationals) {
      fix["g"] = inv.genus;
      fix["k"] = inv.rational_curves;
    }
    j["involution"] = fix;
  } catch (const Error&) {
  }
  return j;
}

std::string lattice_report(const GramLattice& l, Format format) {
  const ojson j = lattice_json(l);
  std::vector<std::string> disc;
  for (const auto& d : j["discriminant_group"]) disc.push_back("Z/" + d.get<std::string>());
  const std::string group = disc.empty() ? "0" : join(disc, " x ");
  const std::string a = j["a"].is_null() ? "" : std::to_string(j["a"].get<int>());
  std::string g, k, kind;
  if (!j["involution"].is_null()) {
    kind = j["involution"]["kind"].get<std::string>();
    if (j["involution"].contains("g")) {
      g = std::to_string(j["involution"]["g"].get<int>());
      k = std::to_string(j["involution"]["k"].get<int>());
    }
  }
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      os << "lattice: " << l.name() << '\n'
         << "rank: " << rank(l) << '\n'
         << "determinant: " << j["determinant"].get<std::string>() << '\n'
         << "signature: (" << j["signature"][0].get<int>() << "," << j["signature"][1].get<int>() << ")\n"
         << "discriminant group: " << group << '\n'
         << "a: " << (a.empty() ? "not 2-elementary" : a) << '\n';
      if (kind.empty()) {
        os << "involution fixed locus: n/a\n";
      } else if (g.empty()) {
        os << "involution fixed locus: " << kind << '\n';
      } else {
        os << "involution fixed locus: g=" << g << " k=" << k << '\n';
      }
      break;
    case Format::Json: os << j.dump(2) << '\n'; break;
    case Format::Csv:
      os << "lattice,rank,determinant,signature_pos,signature_neg,discriminant_group,a,fixed_locus,g,k\r\n";
      os << csv_field(l.name()) << ',' << rank(l) << ',' << j["determinant"].get<std::string>() << ','
         << j["signature"][0].get<int>() << ',' << j["signature"][1].get<int>() << ',' << csv_field(group) << ',' << a
         << ',' << kind << ',' << g << ',' << k << "\r\n";
      break;
  }
  return os.str();
}

ojson to_json(const EquivalenceReport& rep) {
  ojson mismatches = ojson::array();
  for (const auto& m : rep.mismatches) {
    mismatches.push_back(
        {{"counts", m.counts}, {"k", m.k}, {"residual_zero", m.residual_zero}, {"equations_hold", m.equations_hold}});
  }
  ojson types = ojson::array();
  for (const auto& t : local_types(rep.order)) types.push_back(t.label());
  return {{"order", rep.order},
          {"bound", rep.bound},
          {"max_k", rep.max_k},
          {"types", types},
          {"checked", rep.checked},
          {"residual_zero", rep.residual_zero},
          {"equations_hold", rep.equations_hold},
          {"equivalent", rep.equivalent()},
          {"mismatches", mismatches}};
}

std::string equivalence_report(const EquivalenceReport& rep, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      os << "order " << rep.order << ", counts 0.." << rep.bound << ", k 0.." << rep.max_k << '\n'
         << "checked: " << rep.checked << '\n'
         << "residual zero: " << rep.residual_zero << '\n'
         << "relations hold: " << rep.equations_hold << '\n'
         << "mismatches: " << rep.mismatches.size() << '\n';
      for (const auto& m : rep.mismatches) {
        std::vector<std::string> c;
        for (int x : m.counts) c.push_back(std::to_string(x));
        os << "  counts=(" << join(c, ",") << ") k=" << m.k << " residual_zero=" << m.residual_zero
           << " relations_hold=" << m.equations_hold << '\n';
      }
      os << (rep.equivalent() ? "equivalent" : "NOT equivalent") << '\n';
      break;
    case Format::Json: os << to_json(rep).dump(2) << '\n'; break;
    case Format::Csv:
      os << "counts,k,residual_zero,equations_hold\r\n";
      for (const auto& m : rep.mismatches) {
        std::vector<std::string> c;
        for (int x : m.counts) c.push_back(std::to_string(x));
        os << csv_field(join(c, ",")) << ',' << m.k << ',' << m.residual_zero << ',' << m.equations_hold << "\r\n";
      }
      break;
  }
  return os.str();
}

}  // namespace k3
