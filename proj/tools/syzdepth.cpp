// Command line front end: Hilbert depth tables, multigraded decompositions,
// Stanley hook verification and the asymptotic gamma(beta) curve.

#include "syzdepth/asymptotics.hpp"
#include "syzdepth/depth.hpp"
#include "syzdepth/multigraded.hpp"
#include "syzdepth/report.hpp"
#include "syzdepth/serialize.hpp"
#include "syzdepth/stanley.hpp"

#include <CLI11.hpp>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <thread>

namespace {

using namespace syzdepth;

constexpr int kExitOk = 0;
constexpr int kExitRejected = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Context {
  RunManifest manifest;
  std::string manifest_path;

  void record(const std::string& path, const std::string& digest) {
    manifest.outputs.emplace_back(path, digest);
  }

  void flush() {
    if (manifest.outputs.empty() && manifest_path.empty()) return;
    const std::string path =
        manifest_path.empty() ? manifest.outputs.front().first + ".manifest.json" : manifest_path;
    manifest.timestamp = utc_timestamp();
    write_artifact(path, manifest.to_json());
  }
};

void require_nk(int n, int k) {
  if (n < 1) throw UsageError("--n: must be >= 1");
  if (k < 1 || k > n) throw UsageError("--k: must satisfy 1 <= k <= n");
}

int default_threads() {
  if (const char* env = std::getenv("SYZDEPTH_THREADS")) {
    try {
      const int t = std::stoi(env);
      if (t >= 1) return t;
    } catch (const std::exception&) {
    }
    throw UsageError("SYZDEPTH_THREADS: expected a positive integer");
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

void print_report_line(const char* label, const PositivityReport& r) {
  if (r.positive()) {
    std::cout << label << " s=" << r.s << ": positive (coefficients checked for j <= "
              << r.checked_range << ")\n";
  } else {
    std::cout << label << " s=" << r.s << ": first negative coefficient at j=" << *r.witness_j
              << " (T^" << *r.witness_j + r.k << "): " << r.witness_coeff->get_str() << "\n";
  }
}

int run_hdepth(int n, int k, bool oracle, bool json) {
  require_nk(n, k);
  const DepthResult r = hdepth_std(n, k);
  std::optional<DepthResult> check;
  if (oracle) check = hdepth_std_oracle(n, k);
  if (json) {
    Json out = to_json(r);
    if (check) out["oracle_hdepth"] = check->hdepth;
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "M(" << n << "," << k << "): hdepth = " << r.hdepth << " (min_u = " << r.min_u
              << ")\n";
    std::cout << "bounds: " << r.lower_bound << " <= hdepth <= " << r.upper_bound << "\n";
    if (auto cf = closed_form(n, k)) std::cout << "closed form: " << *cf << "\n";
    print_report_line("at", r.witness_positive);
    if (r.witness_negative) print_report_line("at", *r.witness_negative);
    if (check) std::cout << "oracle (prefix sums): hdepth = " << check->hdepth << "\n";
  }
  if (check && check->hdepth != r.hdepth) {
    std::cerr << "error: closed-form scan and prefix-sum oracle disagree\n";
    return kExitRejected;
  }
  return kExitOk;
}

int run_table(Context& ctx, int n_max, const std::string& out, std::string format, int threads) {
  if (n_max < 1) throw UsageError("--n-max: must be >= 1");
  if (format.empty())
    format = out.size() >= 5 && out.substr(out.size() - 5) == ".json" ? "json" : "csv";
  if (format != "csv" && format != "json") throw UsageError("--format: expected csv or json");
  const auto rows = depth_table(n_max, threads);
  const TableFormat f = format == "csv" ? TableFormat::csv : TableFormat::json;
  if (out.empty()) {
    std::cout << (f == TableFormat::csv ? table_csv(rows) : table_json(rows));
  } else {
    ctx.record(out, write_table(rows, f, out));
    std::cout << "wrote " << rows.size() << " rows to " << out << "\n";
  }
  return kExitOk;
}

int run_decompose(Context& ctx, int n, int k, const std::string& strategy, bool verify,
                  const std::string& out) {
  require_nk(n, k);
  if (k < n / 2 || k >= n) throw UsageError("--k: decompositions need floor(n/2) <= k < n");
  if (n > kDefaultMultiCap) throw UsageError("--n: at most " + std::to_string(kDefaultMultiCap));
  Strategy s;
  try {
    s = parse_strategy(strategy);
  } catch (const std::invalid_argument&) {
    throw UsageError("--strategy: expected scd, lex or matching");
  }
  const Decomposition d = build_upper_decomposition(n, k, s);
  const std::string text = to_json(d).dump(2) + "\n";
  if (out.empty())
    std::cout << text;
  else
    ctx.record(out, write_artifact(out, text));
  std::cerr << d.pieces.size() << " pieces, strategy " << strategy_name(d.strategy)
            << (d.fell_back ? " (fell back to matching)" : "") << "\n";
  if (verify) {
    const auto v = verify_hilbert_decomposition(d);
    std::cerr << (v.accepted ? "verified: numerator identity and Hilbert function agree\n"
                             : "rejected: " + v.message + "\n");
    if (!v.accepted) return kExitRejected;
  }
  return kExitOk;
}

int run_stanley(Context& ctx, int n, int k, const std::string& strategy,
                const std::string& hooks_path, bool search, double budget,
                const std::string& out) {
  require_nk(n, k);
  if (k < n / 2 || k >= n) throw UsageError("--k: decompositions need floor(n/2) <= k < n");
  if (!hooks_path.empty() && search) throw UsageError("--hooks and --search are exclusive");
  if (budget <= 0) throw UsageError("--budget: must be positive");
  Strategy s;
  try {
    s = parse_strategy(strategy);
  } catch (const std::invalid_argument&) {
    throw UsageError("--strategy: expected scd, lex or matching");
  }
  const Decomposition d = build_upper_decomposition(n, k, s);

  HookAssignment hooks;
  if (!hooks_path.empty()) {
    std::ifstream in(hooks_path);
    if (!in) throw UsageError("--hooks: cannot open " + hooks_path);
    Json j;
    try {
      j = Json::parse(in);
      hooks = hooks_from_json(j, n);
    } catch (const std::exception& e) {
      throw UsageError(std::string("--hooks: ") + e.what());
    }
    for (auto& [shift, hook] : default_hooks(d)) hooks.try_emplace(shift, hook);
  } else {
    const auto found = search_hooks(d, std::chrono::duration<double>(budget));
    if (found.status != HookSearchResult::Status::found) {
      std::cout << "hook search "
                << (found.status == HookSearchResult::Status::timeout ? "inconclusive (budget exhausted)"
                                                                      : "exhausted without a valid assignment")
                << " after " << found.nodes << " nodes\n";
      return kExitRejected;
    }
    std::cout << "hook search found an assignment after " << found.nodes << " nodes\n";
    hooks = *found.hooks;
  }

  const StanleyReport report = verify_stanley(d, hooks);
  Json result = to_json(report);
  result["hooks"] = to_json(hooks);
  if (!out.empty()) ctx.record(out, write_artifact(out, result.dump(2) + "\n"));
  if (report.accepted) {
    std::cout << "accepted: Stanley decomposition of depth " << *report.certified_depth << " ("
              << report.chain_certified << " degrees by union chain, " << report.rank_certified
              << " by exact rank)\n";
    return kExitOk;
  }
  std::cout << "rejected: " << report.message << "\n";
  if (!report.dependent_family.empty()) {
    std::cout << "dependent family:";
    for (Subset g : report.dependent_family) std::cout << " [" << g.label() << "]";
    std::cout << "\n";
  }
  return kExitRejected;
}

int run_gamma(double beta, double tol, bool json) {
  if (!(beta > 0 && beta <= 0.5)) throw UsageError("--beta: must lie in (0, 1/2]");
  if (!(tol > 0)) throw UsageError("--tol: must be positive");
  const GammaSolution s = solve_gamma(beta, tol);
  if (json) {
    std::cout << to_json(s).dump(2) << "\n";
  } else {
    std::printf("beta = %.12Lg\ngamma = %.12Lg\nalpha0 = %.12Lg\nresidual = %.3Le\n", s.beta,
                s.gamma, s.alpha0, s.residual);
  }
  return kExitOk;
}

int run_gamma_curve(Context& ctx, int steps, double tol, const std::string& out,
                    const std::string& json_out, int threads) {
  if (steps < 2) throw UsageError("--steps: must be >= 2");
  if (!(tol > 0)) throw UsageError("--tol: must be positive");
  const auto points = gamma_curve(steps, tol, threads);
  ctx.record(out, write_curve(points, out));
  if (!json_out.empty()) ctx.record(json_out, write_artifact(json_out, curve_json(points)));
  std::cout << "wrote " << points.size() << " points to " << out << "\n";
  return kExitOk;
}

int run_predict(long n, int k) {
  if (n < 3) throw UsageError("--n: must be >= 3");
  if (k < 1) throw UsageError("--k: must be >= 1");
  const auto p = predict_regimeA(n, k);
  std::printf("predicted hdepth = %.6Lf\n  n/2 = %.6Lf\n  sqrt term = %.6Lf\n  loglog term = %.6Lf\n",
              p.value, p.terms[0], p.terms[1], p.terms[2]);
  std::printf("j_min estimate = %.6Lf\n", j_min_estimate(n, k));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hilbert depth of Koszul syzygy modules M(n,k)"};
  app.require_subcommand(1);

  int threads = 0;
  int cache = BinomialProvider::kDefaultCacheRows;
  std::string manifest_path;
  app.add_option("--threads", threads, "worker threads (default: SYZDEPTH_THREADS or all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--cache", cache, "rows of Pascal's triangle to cache")->check(CLI::NonNegativeNumber);
  app.add_option("--manifest", manifest_path, "where to write the run manifest");

  int n = 0, k = 0, n_max = 0, steps = 0;
  long n_long = 0;
  bool oracle = false, json = false, verify = false, search = false;
  std::string out, format, strategy = "scd", stanley_strategy = "lex", hooks_path, json_out;
  double beta = 0, tol = 1e-12, budget = 10;

  auto* hdepth = app.add_subcommand("hdepth", "standard graded Hilbert depth of M(n,k)");
  hdepth->add_option("--n", n)->required();
  hdepth->add_option("--k", k)->required();
  hdepth->add_flag("--oracle", oracle, "cross-check with the prefix-sum expansion");
  hdepth->add_flag("--json", json);

  auto* table = app.add_subcommand("table", "Hilbert depth table for all 1 <= k <= n <= n-max");
  table->add_option("--n-max", n_max)->required();
  table->add_option("--out", out, "output file (.csv or .json)");
  table->add_option("--format", format, "csv or json");

  auto* decompose = app.add_subcommand("decompose", "multigraded Hilbert decomposition, floor(n/2) <= k < n");
  decompose->add_option("--n", n)->required();
  decompose->add_option("--k", k)->required();
  decompose->add_option("--strategy", strategy, "scd, lex or matching");
  decompose->add_flag("--verify", verify);
  decompose->add_option("--out", out);

  auto* stanley = app.add_subcommand("stanley", "verify or search Stanley hooks");
  stanley->add_option("--n", n)->required();
  stanley->add_option("--k", k)->required();
  stanley->add_option("--hooks", hooks_path, "hook assignment JSON to verify");
  stanley->add_flag("--search", search, "search for hooks (default without --hooks)");
  stanley->add_option("--budget", budget, "search time budget in seconds");
  stanley->add_option("--strategy", stanley_strategy, "injection strategy for the decomposition");
  stanley->add_option("--out", out, "write the report and hooks as JSON");

  auto* gamma = app.add_subcommand("gamma", "solve for gamma(beta)");
  gamma->add_option("--beta", beta)->required();
  gamma->add_option("--tol", tol);
  gamma->add_flag("--json", json);

  auto* curve = app.add_subcommand("gamma-curve", "gamma(beta) at beta = i/(2 steps)");
  curve->add_option("--steps", steps)->required();
  curve->add_option("--out", out)->required();
  curve->add_option("--json", json_out, "also write a JSON variant with residuals");
  curve->add_option("--tol", tol);

  auto* predict = app.add_subcommand("predict", "fixed-k asymptotic prediction");
  predict->add_option("--n", n_long)->required();
  predict->add_option("--k", k)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  Context ctx;
  try {
    if (threads == 0) threads = default_threads();
    BinomialProvider::configure(cache);
    if (stanley->parsed() && hooks_path.empty()) search = true;
    ctx.manifest_path = manifest_path;
    std::string command_line;
    for (int i = 0; i < argc; ++i) command_line += (i ? " " : "") + std::string(argv[i]);
    ctx.manifest.command_line = command_line;
    ctx.manifest.threads = threads;
    ctx.manifest.binomial_cache = cache;
    ctx.manifest.tolerances = {{"gamma_tol", tol}};

    int status = kExitOk;
    if (hdepth->parsed()) status = run_hdepth(n, k, oracle, json);
    else if (table->parsed()) status = run_table(ctx, n_max, out, format, threads);
    else if (decompose->parsed()) status = run_decompose(ctx, n, k, strategy, verify, out);
    else if (stanley->parsed())
      status = run_stanley(ctx, n, k, stanley_strategy, hooks_path, search, budget, out);
    else if (gamma->parsed()) status = run_gamma(beta, tol, json);
    else if (curve->parsed()) status = run_gamma_curve(ctx, steps, tol, out, json_out, threads);
    else if (predict->parsed()) status = run_predict(n_long, k);
    ctx.flush();
    return status;
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const InconsistencyError& e) {
    std::cerr << "inconsistency: " << e.what() << "\n";
    return kExitRejected;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRejected;
  }
}
