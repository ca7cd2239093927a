// coulomb-hs: command line front end for the coulomb library.
//
// Exit codes: 0 success, 1 validation error, 2 computational error,
// 3 a check reported FAIL.

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "coulomb/check_suite.hpp"
#include "coulomb/gale.hpp"
#include "coulomb/implosion.hpp"
#include "coulomb/monopole.hpp"
#include "coulomb/plethystic.hpp"
#include "coulomb/quiver_json.hpp"

#ifndef COULOMB_VERSION
#define COULOMB_VERSION "unknown"
#endif

namespace {

using namespace coulomb;
using Json = nlohmann::ordered_json;

constexpr int kValidation = 1;
constexpr int kComputational = 2;
constexpr int kCheckFailed = 3;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text << "\n";
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::InvalidArgument, "cannot write '" + path + "'");
  out << text << "\n";
}

unsigned threads_from_env() {
  if (const char* env = std::getenv("COULOMB_HS_THREADS")) {
    try {
      const long n = std::stol(env);
      if (n >= 1) return static_cast<unsigned>(n);
    } catch (const std::exception&) {
    }
    std::cerr << "warning: ignoring COULOMB_HS_THREADS='" << env << "'\n";
  }
  return 1;
}

std::string manifest(const std::string& command, const std::string& input_hash, int order, const EngineStats& stats) {
  Json m;
  m["command"] = command;
  m["input_hash"] = input_hash;
  m["order"] = order;
  m["charge_bound"] = stats.bound_reached;
  m["charges"] = stats.charges;
  m["strategy"] = stats.strategy;
  m["wall_time"] = stats.seconds;
  m["version"] = COULOMB_VERSION;
  return m.dump();
}

// --- generate ---------------------------------------------------------------

struct GenerateArgs {
  std::string kind;
  int n = 0;
  std::vector<int> partition;
  bool flavor = false;
  std::string output;
};

int cmd_generate(const GenerateArgs& a) {
  Quiver q;
  if (a.kind == "nilpotent") {
    q = build_linear_nilpotent_quiver(a.n);
  } else if (a.kind == "bouquet") {
    q = build_bouquet_quiver(a.n);
  } else if (a.kind == "partial") {
    if (a.partition.empty()) throw Error(ErrorCode::InvalidArgument, "partial needs --partition");
    q = build_partial_implosion_quiver(a.n, a.partition);
  } else {
    q = build_dn_implosion_quiver(a.n, a.flavor ? DnVariant::Flavor : DnVariant::Bouquet);
  }
  write_output(a.output, quiver_to_json(q));
  return 0;
}

// --- report -----------------------------------------------------------------

std::string group_name(const SymmetryFactor& f) {
  switch (f.type) {
    case DynkinType::A: return "SU(" + std::to_string(f.rank + 1) + ")";
    case DynkinType::D: return "SO(" + std::to_string(2 * f.rank) + ")";
    case DynkinType::E: return "E" + std::to_string(f.rank);
    case DynkinType::Unrecognized: break;
  }
  return f.label;
}

int cmd_report(const std::string& path, bool as_json) {
  const Quiver q = quiver_from_json(read_file(path));
  const BalanceReport balance = balance_report(q);
  const SymmetryPrediction sym = predict_global_symmetry(q);
  const bool decoupled = detect_decoupled_u1(q);

  std::vector<std::string> labels;
  for (const BalancedComponent& c : balanced_subquiver_classification(q)) labels.push_back(c.label);
  std::string groups;
  for (const SymmetryFactor& f : sym.factors) groups += (groups.empty() ? "" : " x ") + group_name(f);
  if (sym.abelian_rank > 0) {
    groups += (groups.empty() ? "" : " x ") + std::string("U(1)");
    if (sym.abelian_rank > 1) groups += "^" + std::to_string(sym.abelian_rank);
  }
  std::string summary;
  for (const SymmetryFactor& f : sym.factors) summary += (summary.empty() ? "" : " + ") + f.label;
  if (sym.abelian_rank > 0) summary += (summary.empty() ? "" : " + ") + ("abelian rank " + std::to_string(sym.abelian_rank));

  std::string coulomb_dim;
  std::string higgs_dim;
  try {
    coulomb_dim = std::to_string(expected_coulomb_dimension_real(q));
  } catch (const Error&) {
    coulomb_dim = "unresolved (decoupled U(1); ungauge one U(1) node, e.g. hs --ungauge ID)";
  }
  try {
    higgs_dim = std::to_string(higgs_quaternionic_dimension(q));
  } catch (const Error& e) {
    higgs_dim = "n/a (" + e.message() + ")";
  }

  if (as_json) {
    Json j;
    Json bal = Json::object();
    for (const NodeBalance& b : balance.balances) bal[b.id] = b.balance;
    j["balances"] = bal;
    j["all_balanced"] = balance.all_balanced;
    j["balanced_components"] = labels;
    j["predicted_symmetry"] = groups.empty() ? "none" : groups;
    j["symmetry_summary"] = summary;
    j["symmetry_dimension"] = sym.total_dimension;
    j["gauge_rank"] = gauge_group_rank(q);
    j["coulomb_dimension_real"] = coulomb_dim;
    j["higgs_dimension_quaternionic"] = higgs_dim;
    j["decoupled_u1"] = decoupled;
    std::cout << j.dump(2) << "\n";
    return 0;
  }

  std::cout << "balance:\n";
  for (const NodeBalance& b : balance.balances) {
    std::cout << "  " << b.id << " " << q.node(b.id).group.label() << " " << b.balance << "\n";
  }
  std::string joined;
  for (const std::string& l : labels) joined += (joined.empty() ? "" : ", ") + l;
  std::cout << "balanced components: " << (joined.empty() ? "none" : joined) << "\n"
            << "predicted symmetry: " << (groups.empty() ? "none" : groups) << "\n"
            << "symmetry summary: " << (summary.empty() ? "none" : summary) << "\n"
            << "symmetry dimension: " << sym.total_dimension << "\n"
            << "gauge rank: " << gauge_group_rank(q) << "\n"
            << "Coulomb dimension (real): " << coulomb_dim << "\n"
            << "Higgs dimension (quaternionic): " << higgs_dim << "\n"
            << "decoupled U(1): " << (decoupled ? "yes" : "no") << "\n";
  return 0;
}

// --- hs ---------------------------------------------------------------------

struct HsArgs {
  std::string path;
  int order = 8;
  std::string ungauge;
  std::vector<std::string> refine;
  bool pl = false;
  unsigned threads = 0;
  std::string strategy = "auto";
  std::string half_hyper = "quarter";
  bool o2 = false;
  int max_bound = ChargeBoundPolicy{}.max_bound;
};

int cmd_hs(const HsArgs& a) {
  const std::string text = read_file(a.path);
  HSRequest r;
  r.quiver = quiver_from_json(text);
  r.order = a.order;
  if (!a.ungauge.empty()) r.ungauge = a.ungauge;
  r.refined = a.refine;
  r.threads = a.threads > 0 ? a.threads : threads_from_env();
  r.policy.max_bound = a.max_bound;
  r.conventions.half_hyper = a.half_hyper == "eighth" ? HalfHyperWeight::Eighth : HalfHyperWeight::Quarter;
  r.conventions.so2_as_o2 = a.o2;
  r.strategy = a.strategy == "tree" ? EngineStrategy::TreeMessages
               : a.strategy == "lattice" ? EngineStrategy::LatticeSum
                                         : EngineStrategy::Auto;

  // Threads are left out: they never change the output.
  std::string flags = "order=" + std::to_string(a.order) + ";ungauge=" + a.ungauge + ";refine=";
  for (const std::string& id : a.refine) flags += id + ",";
  flags += ";strategy=" + a.strategy + ";half_hyper=" + a.half_hyper + ";o2=" + (a.o2 ? "1" : "0") +
           ";max_bound=" + std::to_string(a.max_bound) + ";pl=" + (a.pl ? "1" : "0");
  const std::string input_hash = fnv1a_hex(text + '\0' + flags);

  TruncatedSeries unrefined(0);
  EngineStats stats;
  if (r.refined.empty()) {
    HSResult<BigInt> res = coulomb_hilbert_series(r);
    std::cout << "series: " << to_text(res.series) << "\n" << "json: " << to_json(res.series) << "\n";
    unrefined = std::move(res.series);
    stats = res.stats;
  } else {
    HSResult<LaurentMultinomial> res = refined_coulomb_hilbert_series(r);
    std::cout << "series: " << to_text(res.series) << "\n" << "json: " << to_json(res.series) << "\n";
    unrefined = evaluate_at_one(res.series);
    stats = res.stats;
  }
  if (a.pl) std::cout << "pl: " << to_text(plethystic_log(unrefined, unrefined.order())) << "\n";
  std::cout << "manifest: " << manifest("hs", input_hash, a.order, stats) << "\n";
  return 0;
}

// --- implosion-check --------------------------------------------------------

int cmd_implosion_check(int n, int order, std::optional<int> prefactor, unsigned threads) {
  bool ok = true;
  auto line = [&](bool pass, const std::string& what) {
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << what << "\n";
  };

  HSRequest r = refined_bouquet_request(n, order);
  r.threads = threads;
  const TruncatedSeries integral = refined_implosion_integral(r, n, prefactor);
  const TruncatedSeries nilcone = nilcone_reference_hs(n, order);
  line(integral == nilcone, "refined integral = nilcone series to t^" + std::to_string(order) + ": " +
                                to_text(integral) + (integral == nilcone ? "" : " vs " + to_text(nilcone)));

  const ContributionReport c = hs_contribution_check(n, threads);
  std::string expected = "t^2 coefficient " + c.t2.str() + ", expected " + std::to_string(c.t2_expected);
  if (c.enhanced_group) expected += " (enhanced to " + *c.enhanced_group + ")";
  else expected += " (n^2+n-2)";
  line(c.t2_matches, expected);
  line(c.identified_have_degree, "t^" + std::to_string(n - 1) + " coefficient " + c.t_n_minus_1.str() + " includes " +
                                     std::to_string(c.identified.size()) + " bare monopoles with 2 Delta = " +
                                     std::to_string(n - 1));
  return ok ? 0 : kCheckFailed;
}

// --- gale -------------------------------------------------------------------

int cmd_gale(const std::string& path) {
  const ToricConfig c = toric_config_from_json(read_file(path));
  const ToricConfig dual = gale_dual(c);
  const DualityReport rep = duality_report(c);
  std::cout << "dual: " << to_json(dual) << "\n";
  std::cout << "                 primal  dual\n";
  auto row = [](const char* name, std::size_t a, std::size_t b) {
    std::printf("%-16s %6zu %5zu\n", name, a, b);
  };
  row("dimension", rep.dim_primal, rep.dim_dual);
  row("FI parameters", rep.fi_primal, rep.fi_dual);
  row("isometry rank", rep.isometry_rank_primal, rep.isometry_rank_dual);
  std::cout << std::flush << "image index: " << rep.image_index << "\n" << "non-primitive columns:";
  if (rep.non_primitive_columns.empty()) std::cout << " none";
  for (std::size_t j : rep.non_primitive_columns) std::cout << " " << j;
  std::cout << "\n";
  return 0;
}

// --- check-suite ------------------------------------------------------------

int cmd_check_suite(bool skip_d4, unsigned threads) {
  SuiteOptions opt;
  opt.include_d4 = !skip_d4;
  opt.threads = threads;
  const SuiteResult r = run_check_suite(opt);
  std::cout << suite_table(r);
  return r.all_passed ? 0 : kCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Coulomb branch Hilbert series and implosion checks"};
  app.set_version_flag("--version", COULOMB_VERSION);
  app.require_subcommand(1);

  GenerateArgs gen;
  auto* generate = app.add_subcommand("generate", "Write a quiver as JSON");
  generate->add_option("kind", gen.kind, "nilpotent | bouquet | partial | dn")
      ->required()
      ->check(CLI::IsMember({"nilpotent", "bouquet", "partial", "dn"}));
  generate->add_option("--n", gen.n, "Rank parameter n")->required();
  generate->add_option("--partition", gen.partition, "Leg sizes for partial (e.g. 2,2)")->delimiter(',');
  generate->add_flag("--flavor", gen.flavor, "dn: keep the SO(2n) flavor node instead of the bouquet");
  generate->add_flag("--bouquet", "dn: bouquet of SO(2) nodes (default)");
  generate->add_option("-o,--output", gen.output, "Output file (default stdout)");

  std::string report_path;
  bool report_json = false;
  auto* report = app.add_subcommand("report", "Balance, symmetry and dimension report");
  report->add_option("quiver", report_path, "Quiver JSON file")->required();
  report->add_flag("--json", report_json, "Emit JSON");

  HsArgs hs;
  auto* hs_cmd = app.add_subcommand("hs", "Coulomb branch Hilbert series");
  hs_cmd->add_option("quiver", hs.path, "Quiver JSON file")->required();
  hs_cmd->add_option("--order", hs.order, "Truncation order K")->check(CLI::NonNegativeNumber);
  hs_cmd->add_option("--ungauge", hs.ungauge, "U(1) gauge node to ungauge");
  hs_cmd->add_option("--refine", hs.refine, "Unitary gauge nodes that carry a fugacity");
  hs_cmd->add_flag("--pl", hs.pl, "Also print the plethystic logarithm");
  hs_cmd->add_option("--threads", hs.threads, "Worker threads (default: COULOMB_HS_THREADS or 1)");
  hs_cmd->add_option("--strategy", hs.strategy, "auto | tree | lattice")
      ->check(CLI::IsMember({"auto", "tree", "lattice"}));
  hs_cmd->add_option("--half-hyper", hs.half_hyper, "SO x USp half-hyper weight: quarter | eighth")
      ->check(CLI::IsMember({"quarter", "eighth"}));
  hs_cmd->add_flag("--o2", hs.o2, "Treat SO(2) gauge nodes as O(2)");
  hs_cmd->add_option("--max-bound", hs.max_bound, "Largest charge shell radius")->check(CLI::NonNegativeNumber);

  int imp_n = 0;
  int imp_order = 8;
  std::optional<int> imp_prefactor;
  unsigned imp_threads = 0;
  auto* implosion = app.add_subcommand("implosion-check", "Refined integral and t^2 checks for bouquet(n)");
  implosion->add_option("--n", imp_n, "n >= 2")->required()->check(CLI::Range(2, 64));
  implosion->add_option("--order", imp_order, "Truncation order K")->check(CLI::NonNegativeNumber);
  implosion->add_option("--prefactor-exponent", imp_prefactor, "Override the (1-t^2) exponent");
  implosion->add_option("--threads", imp_threads, "Worker threads");

  std::string gale_path;
  auto* gale = app.add_subcommand("gale", "Gale dual of an integer vector configuration");
  gale->add_option("matrix", gale_path, "Matrix JSON file")->required();

  bool skip_d4 = false;
  unsigned suite_threads = 0;
  auto* suite = app.add_subcommand("check-suite", "Run every acceptance check");
  suite->add_flag("--skip-d4", skip_d4, "Leave out the D_4 check");
  suite->add_option("--threads", suite_threads, "Worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kValidation;
  }

  auto threads_or_env = [](unsigned t) { return t > 0 ? t : threads_from_env(); };
  try {
    if (*generate) return cmd_generate(gen);
    if (*report) return cmd_report(report_path, report_json);
    if (*hs_cmd) return cmd_hs(hs);
    if (*implosion) return cmd_implosion_check(imp_n, imp_order, imp_prefactor, threads_or_env(imp_threads));
    if (*gale) return cmd_gale(gale_path);
    if (*suite) return cmd_check_suite(skip_d4, threads_or_env(suite_threads));
  } catch (const Error& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return is_computational(e.code()) ? kComputational : kValidation;
  } catch (const std::exception& e) {
    std::cout.flush();
    std::cerr << "error: " << e.what() << "\n";
    return kComputational;
  }
  return 0;
}
