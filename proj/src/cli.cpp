#include "k3/cli.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "k3/classify.hpp"
#include "k3/elliptic.hpp"
#include "k3/equivalence.hpp"
#include "k3/error.hpp"
#include "k3/lattice.hpp"
#include "k3/lefschetz.hpp"
#include "k3/report.hpp"

#ifndef K3_VERSION
#define K3_VERSION "0.0.0"
#endif
#ifndef K3_DEFAULT_GOLDEN
#define K3_DEFAULT_GOLDEN "data/classification_golden.json"
#endif

namespace k3::cli {

namespace {

using ojson = nlohmann::ordered_json;

constexpr int kOk = 0;
constexpr int kMismatch = 1;
constexpr int kUsage = 2;

// The fields a golden row pins down.
using GoldenKey = std::tuple<int, int, int, int, int, int, int, int, std::string, std::string, int, std::vector<int>>;

GoldenKey key_of(const CandidateRow& row) {
  return {row.rank(), row.profile.m2, row.profile.m1, row.profile.m, row.profile.l,
          row.profile.r, row.N(), row.k(), row.picard, to_string(row.status),
          row.table_N.value_or(-1), std::vector<int>(row.sigma.n.begin(), row.sigma.n.end())};
}

GoldenKey key_of(const ojson& j) {
  return {j.at("rank").get<int>(), j.at("m2").get<int>(), j.at("m1").get<int>(),
          j.at("m").get<int>(), j.at("l").get<int>(), j.at("r").get<int>(),
          j.at("N").get<int>(), j.at("k").get<int>(), j.at("pic").get<std::string>(),
          j.at("status").get<std::string>(), j.value("N_table", -1), j.at("points16").get<std::vector<int>>()};
}

std::string describe(const GoldenKey& k) {
  std::ostringstream os;
  os << "rank " << std::get<0>(k) << " (m2,m1,m,l,r,N,k)=(" << std::get<1>(k) << "," << std::get<2>(k) << ","
     << std::get<3>(k) << "," << std::get<4>(k) << "," << std::get<5>(k) << "," << std::get<6>(k) << ","
     << std::get<7>(k) << ") " << std::get<8>(k) << " " << std::get<9>(k);
  return os.str();
}

std::vector<GoldenKey> load_golden(const std::string& path, const std::vector<int>& ranks) {
  std::ifstream in(path);
  if (!in) throw InvalidArgument("cannot open golden file " + path);
  ojson doc;
  try {
    doc = ojson::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed golden file " + path + ": " + e.what());
  }
  std::vector<GoldenKey> keys;
  try {
    for (const auto& row : doc.at("rows")) {
      GoldenKey k = key_of(row);
      if (std::find(ranks.begin(), ranks.end(), std::get<0>(k)) != ranks.end()) keys.push_back(std::move(k));
    }
  } catch (const nlohmann::json::exception& e) {
    throw InvalidArgument("malformed golden row in " + path + ": " + e.what());
  }
  return keys;
}

// Geometry on: the emitted rows must equal the golden rows. Geometry off: they
// must contain them.
int check_classification(const std::vector<RankReport>& reports, bool geometry, const std::string& golden,
                         std::ostream& err) {
  std::vector<int> ranks;
  std::map<GoldenKey, int> emitted;
  for (const auto& rep : reports) {
    ranks.push_back(rep.rank);
    for (const auto& row : rep.rows) ++emitted[key_of(row)];
  }
  std::map<GoldenKey, int> expected;
  for (auto& k : load_golden(golden, ranks)) ++expected[k];

  int problems = 0;
  for (const auto& [k, n] : expected) {
    auto it = emitted.find(k);
    const int got = it == emitted.end() ? 0 : it->second;
    if (got < n) {
      err << "check: missing golden row " << describe(k) << '\n';
      ++problems;
    }
  }
  if (geometry) {
    for (const auto& [k, n] : emitted) {
      auto it = expected.find(k);
      const int want = it == expected.end() ? 0 : it->second;
      if (n > want) {
        err << "check: unexpected row " << describe(k) << '\n';
        ++problems;
      }
    }
  }
  if (problems > 0) {
    err << "check: " << problems << " mismatch(es) against " << golden << '\n';
    return kMismatch;
  }
  return kOk;
}

std::pair<int, int> parse_pair(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw ParseError("expected j,k", 0);
  try {
    std::size_t used = 0;
    const int j = std::stoi(text.substr(0, comma), &used);
    if (used != comma) throw ParseError("trailing characters", used);
    const std::string rest = text.substr(comma + 1);
    const int k = std::stoi(rest, &used);
    if (used != rest.size()) throw ParseError("trailing characters", comma + 1 + used);
    return {j, k};
  } catch (const std::logic_error&) {
    throw ParseError("expected integers j,k", 0);
  }
}

std::string chain_report(const std::vector<ChainPoint>& points, Format format) {
  std::vector<std::string> labels;
  for (const auto& p : points) labels.push_back(p.label());
  std::ostringstream os;
  switch (format) {
    case Format::Text:
      for (std::size_t i = 0; i < labels.size(); ++i) os << (i ? " " : "") << labels[i];
      os << '\n';
      break;
    case Format::Json:
      os << ojson{{"order", points.front().order}, {"points", labels}}.dump(2) << '\n';
      break;
    case Format::Csv:
      os << "step,j,k\r\n";
      for (std::size_t i = 0; i < points.size(); ++i) os << i << ',' << points[i].j << ',' << points[i].k << "\r\n";
      break;
  }
  return os.str();
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Order-16 non-symplectic automorphisms of K3 surfaces: classification and checks", "k3sixteen"};
  app.require_subcommand(0, 1);
  bool show_version = false;
  app.add_flag("--version", show_version, "Print the version and exit");

  std::string format_name = "text";
  const std::vector<std::string> formats{"text", "json", "csv"};

  auto* classify_cmd = app.add_subcommand("classify", "Enumerate fixed-locus invariants for a Picard rank");
  std::string rank_arg;
  std::string geometry_arg = "on";
  bool classify_check = false;
  std::string golden = K3_DEFAULT_GOLDEN;
  classify_cmd->add_option("--rank", rank_arg, "6, 14 or all")->required()->check(CLI::IsMember({"6", "14", "all"}));
  classify_cmd->add_option("--geometry", geometry_arg, "Apply the geometric predicates")
      ->check(CLI::IsMember({"on", "off"}));
  classify_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));
  classify_cmd->add_flag("--check", classify_check, "Compare against the golden rows");
  classify_cmd->add_option("--golden", golden, "Golden rows file");

  auto* verify_cmd = app.add_subcommand("verify", "Check residual vanishing against the linear relations");
  int order = 16;
  int bound = 6;
  int max_k = 3;
  bool verify_check = false;
  verify_cmd->add_option("--order", order)->required()->check(CLI::IsMember({8, 16}));
  verify_cmd->add_option("--bound", bound, "Largest count per local type")->check(CLI::Range(0, 12));
  verify_cmd->add_option("--max-k", max_k, "Largest number of fixed rational curves")->check(CLI::Range(0, 6));
  verify_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));
  verify_cmd->add_flag("--check", verify_check, "Exit 1 if any vector disagrees");

  auto* fiber_cmd = app.add_subcommand("fiber", "Singular fibers of y^2 = x^3 + a(t)x + b(t)");
  std::string a_text, b_text;
  bool fiber_check = false;
  fiber_cmd->add_option("--a", a_text)->required();
  fiber_cmd->add_option("--b", b_text)->required();
  fiber_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));
  fiber_cmd->add_flag("--check", fiber_check, "Exit 1 unless the Euler numbers sum to 24");

  auto* lattice_cmd = app.add_subcommand("lattice", "Invariants of a lattice such as U(2)+D4+E8");
  std::string expression;
  lattice_cmd->add_option("expr", expression)->required();
  lattice_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));

  auto* chain_cmd = app.add_subcommand("chain", "Local types along a chain of invariant curves");
  std::string start_text;
  int chain_order = 16;
  int steps = 0;
  chain_cmd->add_option("--start", start_text, "j,k")->required();
  chain_cmd->add_option("--order", chain_order)->required()->check(CLI::IsMember({8, 16}));
  chain_cmd->add_option("--steps", steps)->required()->check(CLI::Range(0, 1000));
  chain_cmd->add_option("--format", format_name)->check(CLI::IsMember(formats));

  try {
    std::vector<std::string> args;
    for (int i = argc - 1; i >= 1; --i) args.emplace_back(argv[i]);
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  if (show_version) {
    out << "k3sixteen " << K3_VERSION << '\n';
    return kOk;
  }

  try {
    const Format format = parse_format(format_name);
    if (*classify_cmd) {
      std::vector<int> ranks;
      if (rank_arg == "all") {
        ranks = {6, 14};
      } else {
        ranks = {std::stoi(rank_arg)};
      }
      const bool geometry = geometry_arg == "on";
      std::vector<RankReport> reports;
      for (int r : ranks) reports.push_back({r, classify(r, geometry)});
      out << (reports.size() == 1 ? report(reports.front(), format) : report(reports, format));
      return classify_check ? check_classification(reports, geometry, golden, err) : kOk;
    }
    if (*verify_cmd) {
      const EquivalenceReport rep = verify_equivalence(order, bound, max_k, Exec::Parallel);
      out << equivalence_report(rep, format);
      return verify_check && !rep.equivalent() ? kMismatch : kOk;
    }
    if (*fiber_cmd) {
      const WeierstrassModel w(RatPoly::parse(a_text), RatPoly::parse(b_text));
      out << fiber_report(w, format);
      if (fiber_check) {
        const int total = euler_total(fiber_analysis(w));
        if (total != 24) {
          err << "check: Euler numbers sum to " << total << ", expected 24\n";
          return kMismatch;
        }
      }
      return kOk;
    }
    if (*lattice_cmd) {
      out << lattice_report(named_lattice(expression), format);
      return kOk;
    }
    if (*chain_cmd) {
      const auto [j, k] = parse_pair(start_text);
      out << chain_report(chain_sequence(make_chain_point(chain_order, j, k), steps), format);
      return kOk;
    }
    out << app.help();
    return kUsage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
}

}  // namespace k3::cli
