// wulff-tension: surface tension, Wulff shapes, killed-walk Green functions,
// and near-critical scaling checks on the command line.
//
// Exit codes: 0 success, 1 usage error or oversize grid, 2 domain error,
// 3 validation failure (cross-method disagreement beyond tolerance).

#include <algorithm>
#include <cinttypes>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "wulff/asymptotics.hpp"
#include "wulff/duality.hpp"
#include "wulff/green.hpp"
#include "wulff/kernels.hpp"
#include "wulff/montecarlo.hpp"
#include "wulff/rate.hpp"
#include "wulff/scaling.hpp"
#include "wulff/tension.hpp"
#include "wulff/version.hpp"

namespace {

using Value = std::variant<double, long long, std::string>;

std::string fmt_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

std::string fmt_value(const Value& v) {
  if (std::holds_alternative<double>(v)) return fmt_double(std::get<double>(v));
  if (std::holds_alternative<long long>(v))
    return std::to_string(std::get<long long>(v));
  return std::get<std::string>(v);
}

struct Table {
  std::map<std::string, std::string> config;  // sorted, deterministic echo
  std::vector<std::string> columns;
  std::vector<std::vector<Value>> rows;

  void write_csv(std::ostream& os) const {
    os << "# wulff-tension v" << wulff::kVersion << "\n";
    for (const auto& [k, v] : config) os << "# " << k << "=" << v << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i)
      os << columns[i] << (i + 1 < columns.size() ? "," : "\n");
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i)
        os << fmt_value(row[i]) << (i + 1 < row.size() ? "," : "\n");
    }
  }

  void write_json(std::ostream& os) const {
    nlohmann::json j;
    j["tool"] = "wulff-tension";
    j["version"] = wulff::kVersion;
    j["config"] = config;
    j["columns"] = columns;
    auto& out_rows = j["rows"] = nlohmann::json::array();
    for (const auto& row : rows) {
      nlohmann::json jr = nlohmann::json::array();
      for (const auto& v : row) {
        if (std::holds_alternative<double>(v))
          jr.push_back(std::get<double>(v));
        else if (std::holds_alternative<long long>(v))
          jr.push_back(std::get<long long>(v));
        else
          jr.push_back(std::get<std::string>(v));
      }
      out_rows.push_back(std::move(jr));
    }
    os << j.dump(2) << "\n";
  }
};

struct OutputOptions {
  std::string format = "csv";
  std::string path;  // empty = stdout
};

int emit(const Table& table, const OutputOptions& out) {
  std::ofstream file;
  std::ostream* os = &std::cout;
  if (!out.path.empty()) {
    file.open(out.path, std::ios::binary);
    if (!file) {
      std::cerr << "wulff-tension: cannot open output file '" << out.path << "'\n";
      return 1;
    }
    os = &file;
  }
  if (out.format == "json")
    table.write_json(*os);
  else
    table.write_csv(*os);
  return 0;
}

// "a" | "a,b,c" | "lo:hi:count" (inclusive linspace), combinable by commas
std::vector<double> parse_num_list(const std::string& text) {
  std::vector<double> vals;
  std::stringstream ss(text);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    if (tok.empty()) continue;
    const auto c1 = tok.find(':');
    if (c1 != std::string::npos) {
      const auto c2 = tok.find(':', c1 + 1);
      if (c2 == std::string::npos)
        throw CLI::ValidationError("range must be lo:hi:count: " + tok);
      const double lo = std::stod(tok.substr(0, c1));
      const double hi = std::stod(tok.substr(c1 + 1, c2 - c1 - 1));
      const long n = std::stol(tok.substr(c2 + 1));
      if (n < 1) throw CLI::ValidationError("range count must be >= 1: " + tok);
      for (long i = 0; i < n; ++i)
        vals.push_back(n == 1 ? lo : lo + (hi - lo) * i / (n - 1));
    } else {
      vals.push_back(std::stod(tok));
    }
  }
  return vals;
}

std::vector<double> parse_num_lists(const std::vector<std::string>& texts) {
  std::vector<double> vals;
  for (const auto& t : texts) {
    auto part = parse_num_list(t);
    vals.insert(vals.end(), part.begin(), part.end());
  }
  return vals;
}

std::vector<wulff::LatticePoint> parse_points(const std::vector<std::string>& texts) {
  std::vector<wulff::LatticePoint> pts;
  for (const auto& t : texts) {
    long long a = 0, b = 0;
    if (std::sscanf(t.c_str(), "%lld,%lld", &a, &b) != 2)
      throw CLI::ValidationError("--x expects a,b: " + t);
    pts.push_back({a, b});
  }
  return pts;
}

std::string join(const std::vector<std::string>& v, char sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

// Mutually exclusive temperature entry, converted through the duality module.
struct TempEntry {
  std::vector<std::string> beta, beta_low, m, lambda;

  int flags_used() const {
    return (beta.empty() ? 0 : 1) + (beta_low.empty() ? 0 : 1) +
           (m.empty() ? 0 : 1) + (lambda.empty() ? 0 : 1);
  }

  void echo(std::map<std::string, std::string>& config) const {
    if (!beta.empty()) config["beta"] = join(beta, ',');
    if (!beta_low.empty()) config["beta-low"] = join(beta_low, ',');
    if (!m.empty()) config["m"] = join(m, ',');
    if (!lambda.empty()) config["lambda"] = join(lambda, ',');
  }

  std::vector<wulff::TemperaturePair> pairs() const {
    if (flags_used() > 1)
      throw CLI::ValidationError(
          "--beta, --beta-low, --m, --lambda are mutually exclusive");
    std::vector<wulff::TemperaturePair> out;
    for (double b : parse_num_lists(beta)) out.push_back(wulff::make_pair(b));
    for (double b : parse_num_lists(beta_low))
      out.push_back(wulff::pair_from_beta_low(b));
    for (double v : parse_num_lists(m)) out.push_back(wulff::pair_from_m(v));
    for (double v : parse_num_lists(lambda))
      out.push_back(wulff::pair_from_lambda(v));
    return out;
  }

  // survival parameters only, for the walk commands (m may be 0 here)
  std::vector<double> m_values() const {
    if (flags_used() > 1)
      throw CLI::ValidationError(
          "--beta, --beta-low, --m, --lambda are mutually exclusive");
    if (!m.empty()) return parse_num_lists(m);
    std::vector<double> out;
    for (const auto& p : pairs()) out.push_back(p.m);
    return out;
  }
};

void add_temp_flags(CLI::App* cmd, TempEntry& t) {
  cmd->add_option("--beta", t.beta, "supercritical inverse temperature (list or lo:hi:n)");
  cmd->add_option("--beta-low", t.beta_low, "subcritical inverse temperature");
  cmd->add_option("--m", t.m, "walk survival probability");
  cmd->add_option("--lambda", t.lambda, "kill rate -log(m)");
}

constexpr long long kMaxCells = 1000000;

int check_grid(long long cells) {
  if (cells > kMaxCells) {
    std::cerr << "wulff-tension: grid of " << cells << " cells exceeds the "
              << kMaxCells << " cell limit\n";
    return 1;
  }
  return 0;
}

std::uint64_t cell_seed(std::uint64_t run_seed, std::uint64_t cell_index) {
  return wulff::PhiloxStream(run_seed, cell_index).next_u64();
}

// ---------------------------------------------------------------- tension --

int run_tension(const TempEntry& temps, const std::vector<std::string>& xs,
                const OutputOptions& out) {
  const auto pairs = temps.pairs();
  auto points = parse_points(xs);
  if (pairs.empty()) throw CLI::ValidationError("tension: temperature required");
  if (points.empty()) points.push_back({1, 0});
  if (int rc = check_grid(static_cast<long long>(pairs.size()) * points.size()))
    return rc;

  Table t;
  t.config["command"] = "tension";
  temps.echo(t.config);
  t.config["x"] = join(xs.empty() ? std::vector<std::string>{"1,0"} : xs, ';');
  t.columns = {"x1", "x2", "beta_high", "beta_low", "m", "lambda", "s", "tau"};
  for (const auto& pair : pairs) {
    for (const auto& p : points) {
      const wulff::Direction d(static_cast<double>(p.x1), static_cast<double>(p.x2));
      const wulff::TensionValue tv = wulff::tau(d, pair);
      t.rows.push_back({static_cast<double>(p.x1), static_cast<double>(p.x2),
                        pair.beta_high, pair.beta_low, pair.m, pair.lambda,
                        tv.s, tv.tau});
    }
  }
  return emit(t, out);
}

// ------------------------------------------------------------------ wulff --

int run_wulff(const TempEntry& temps, int n_points, const OutputOptions& out) {
  const auto pairs = temps.pairs();
  if (pairs.empty()) throw CLI::ValidationError("wulff: temperature required");
  if (int rc = check_grid(static_cast<long long>(pairs.size()) * n_points))
    return rc;

  Table t;
  t.config["command"] = "wulff";
  temps.echo(t.config);
  t.config["points"] = std::to_string(n_points);
  t.columns = {"beta_high", "index", "angle", "y1", "y2", "degenerate"};
  for (const auto& pair : pairs) {
    const wulff::WulffBoundary wb = wulff::wulff_boundary(pair, n_points);
    for (int i = 0; i < n_points; ++i) {
      t.rows.push_back({pair.beta_high, static_cast<long long>(i),
                        2.0 * M_PI * i / n_points, wb.points[i][0],
                        wb.points[i][1],
                        static_cast<long long>(wb.degenerate ? 1 : 0)});
    }
  }
  return emit(t, out);
}

// ------------------------------------------------------------------ green --

int run_green(const TempEntry& temps, const std::vector<std::string>& xs,
              const std::vector<std::string>& methods_flag, int grid,
              double tol, const OutputOptions& out) {
  const auto ms = temps.m_values();
  const auto points = parse_points(xs);
  if (ms.empty()) throw CLI::ValidationError("green: survival parameter required");
  if (points.empty()) throw CLI::ValidationError("green: --x required");

  std::vector<std::string> methods = methods_flag;
  const bool methods_explicit = !methods.empty();
  if (methods.empty()) methods = {"series", "quadrature", "bessel"};
  for (const auto& m : methods)
    if (m != "series" && m != "quadrature" && m != "bessel")
      throw CLI::ValidationError("green: unknown method " + m);

  if (int rc = check_grid(static_cast<long long>(ms.size()) * points.size() *
                          methods.size()))
    return rc;

  Table t;
  t.config["command"] = "green";
  temps.echo(t.config);
  t.config["x"] = join(xs, ';');
  t.config["methods"] = join(methods, ',');
  if (grid > 0) t.config["grid"] = std::to_string(grid);
  t.config["tol"] = fmt_double(tol);
  t.columns = {"x1", "x2", "m", "method", "value", "err_est", "params"};

  bool validation_failed = false;
  std::string worst;
  std::optional<wulff::GreenWindow> window;  // reused across cells per m

  for (double m : ms) {
    const int auto_kmax = [&] {
      if (m == 0) return 1;
      const int k =
          static_cast<int>(std::ceil(std::log(1e-10 * (1.0 - m)) / std::log(m)));
      return std::clamp(k, 32, 1024);
    }();
    const int k_max = grid > 0 ? grid : auto_kmax;
    const int n_grid = grid > 0 ? grid : (m <= 0.9 ? 256 : (m <= 0.99 ? 512 : 2048));
    for (const auto& x : points) {
      std::vector<wulff::GreenValue> got;
      for (const auto& name : methods) {
        if (name == "bessel" && x.x1 == 0 && x.x2 == 0 && !methods_explicit)
          continue;  // representation excludes the origin; skip in default mode
        wulff::GreenValue gv;
        if (name == "series") {
          const int radius = static_cast<int>(
              std::max(std::llabs(x.x1), std::llabs(x.x2)));
          if (!window || window->m != m || window->k_max != k_max ||
              window->radius < radius)
            window = wulff::green_series_window(m, k_max, std::max(radius, 8));
          gv.value = window->at(x.x1, x.x2);
          gv.method = wulff::GreenMethod::series;
          gv.err_est = window->err_est;
          gv.params = "k_max=" + std::to_string(k_max);
        } else if (name == "quadrature") {
          gv = wulff::green_quadrature(x, m, n_grid);
        } else {
          wulff::BesselQuad bq;
          if (grid > 0) bq.panels = std::max(2, grid / 8);
          gv = wulff::green_bessel(x, m, bq);
        }
        got.push_back(gv);
        t.rows.push_back({static_cast<double>(x.x1), static_cast<double>(x.x2),
                          m, wulff::green_method_name(gv.method), gv.value,
                          gv.err_est, gv.params});
      }
      for (std::size_t i = 0; i < got.size(); ++i)
        for (std::size_t j = i + 1; j < got.size(); ++j) {
          const double diff = std::fabs(got[i].value - got[j].value);
          const double allow =
              std::max(tol, 3.0 * std::max(got[i].err_est, got[j].err_est));
          if (diff > allow) {
            validation_failed = true;
            worst = "x=(" + std::to_string(x.x1) + "," + std::to_string(x.x2) +
                    ") m=" + fmt_double(m) + " " +
                    wulff::green_method_name(got[i].method) + " vs " +
                    wulff::green_method_name(got[j].method) + " diff " +
                    fmt_double(diff) + " > " + fmt_double(allow);
          }
        }
    }
  }

  if (int rc = emit(t, out)) return rc;
  if (validation_failed) {
    std::cerr << "wulff-tension: cross-method disagreement: " << worst << "\n";
    return 3;
  }
  return 0;
}

// --------------------------------------------------------------------- mc --

int run_mc(const TempEntry& temps, const std::vector<std::string>& xs,
           const std::vector<std::string>& methods_flag, long long samples,
           std::uint64_t seed, const OutputOptions& out) {
  const auto ms = temps.m_values();
  const auto points = parse_points(xs);
  if (ms.empty()) throw CLI::ValidationError("mc: survival parameter required");
  if (points.empty()) throw CLI::ValidationError("mc: --x required");
  if (samples < 1) throw CLI::ValidationError("mc: --samples must be >= 1");

  std::vector<std::string> stats = methods_flag;
  if (stats.empty()) stats = {"visits", "hit"};
  for (const auto& s : stats)
    if (s != "visits" && s != "hit")
      throw CLI::ValidationError("mc: statistic must be visits or hit");

  if (int rc = check_grid(static_cast<long long>(ms.size()) * points.size() *
                          stats.size()))
    return rc;

  Table t;
  t.config["command"] = "mc";
  temps.echo(t.config);
  t.config["x"] = join(xs, ';');
  t.config["methods"] = join(stats, ',');
  t.config["samples"] = std::to_string(samples);
  t.config["seed"] = std::to_string(seed);
  t.columns = {"x1", "x2", "m",      "statistic",   "n_samples", "cell_seed",
               "mean", "std_error", "n_truncated"};

  std::uint64_t cell = 0;
  for (double m : ms) {
    for (const auto& x : points) {
      for (const auto& stat : stats) {
        if (stat == "hit" && x.x1 == 0 && x.x2 == 0 && methods_flag.empty())
          continue;  // hit statistic undefined at the origin
        const std::uint64_t cseed = cell_seed(seed, cell++);
        const wulff::McEstimate est =
            stat == "visits" ? wulff::simulate_visits(x, m, samples, cseed)
                             : wulff::simulate_hit(x, m, samples, cseed);
        t.rows.push_back({static_cast<double>(x.x1), static_cast<double>(x.x2),
                          m, stat, est.n_samples,
                          static_cast<long long>(est.seed), est.mean,
                          est.std_error, est.n_truncated});
      }
    }
  }
  return emit(t, out);
}

// ------------------------------------------------------------ asymptotics --

int run_asymptotics(const TempEntry& temps, const std::vector<std::string>& xs,
                    const std::vector<std::string>& phis,
                    const OutputOptions& out) {
  const bool have_pairs = !temps.beta.empty() || !temps.beta_low.empty();
  std::vector<wulff::TemperaturePair> pairs;
  std::vector<double> ms;
  if (have_pairs) {
    pairs = temps.pairs();
    for (const auto& p : pairs) ms.push_back(p.m);
  } else {
    ms = temps.m_values();
  }
  if (ms.empty())
    throw CLI::ValidationError("asymptotics: survival parameter required");

  Table t;
  t.config["command"] = "asymptotics";
  temps.echo(t.config);

  if (!xs.empty()) {
    const auto points = parse_points(xs);
    if (int rc = check_grid(static_cast<long long>(ms.size()) * points.size()))
      return rc;
    t.config["x"] = join(xs, ';');
    t.columns = {"x1", "x2", "m", "r", "oz_visits", "green_bessel", "ratio"};
    if (have_pairs) t.columns.push_back("oz_correlation");
    for (std::size_t mi = 0; mi < ms.size(); ++mi) {
      for (const auto& x : points) {
        const double oz = wulff::oz_visits_asymptotic(x, ms[mi]);
        const wulff::GreenValue gb = wulff::green_bessel(x, ms[mi]);
        std::vector<Value> row{
            static_cast<double>(x.x1), static_cast<double>(x.x2), ms[mi],
            std::hypot(static_cast<double>(x.x1), static_cast<double>(x.x2)),
            oz, gb.value, oz / gb.value};
        if (have_pairs)
          row.push_back(wulff::oz_correlation_asymptotic(x, pairs[mi]));
        t.rows.push_back(std::move(row));
      }
    }
    return emit(t, out);
  }

  std::vector<double> phi_vals = parse_num_lists(phis);
  if (phi_vals.empty()) phi_vals.push_back(0.0);
  if (int rc = check_grid(static_cast<long long>(ms.size()) * phi_vals.size()))
    return rc;
  t.config["phi"] = join(phis.empty() ? std::vector<std::string>{"0"} : phis, ',');
  t.columns = {"phi",      "m",          "u_star",     "theta1_star",
               "theta2_star", "f_star",  "hess_det",   "decay_rate",
               "prefactor"};
  for (double m : ms) {
    for (double phi : phi_vals) {
      const wulff::SaddleData sd = wulff::saddle(phi, m);
      t.rows.push_back({phi, m, sd.u_star, sd.theta1_star, sd.theta2_star,
                        sd.f_star, sd.hess_det, sd.decay_rate, sd.prefactor});
    }
  }
  return emit(t, out);
}

// ---------------------------------------------------------------- scaling --

int run_scaling(const TempEntry& temps, const std::vector<std::string>& eps_flag,
                const std::vector<std::string>& xs, int n_points,
                const OutputOptions& out) {
  Table t;
  t.config["command"] = "scaling";

  if (!eps_flag.empty()) {
    const auto eps = parse_num_lists(eps_flag);
    if (int rc = check_grid(static_cast<long long>(eps.size()) * n_points))
      return rc;
    t.config["eps"] = join(eps_flag, ',');
    t.config["points"] = std::to_string(n_points);
    t.columns = {"eps", "x1", "x2", "phi", "ratio", "gap"};
    for (const auto& row : wulff::isotropy_sweep(eps, n_points)) {
      t.rows.push_back({row.eps, row.direction.x1, row.direction.x2,
                        row.direction.phi, row.ratio, row.gap});
    }
    return emit(t, out);
  }

  if (!xs.empty()) {
    // moderate-deviation functional at integer scale n (--points)
    const auto points = parse_points(xs);
    const auto lambdas = parse_num_lists(temps.lambda);
    if (lambdas.empty())
      throw CLI::ValidationError("scaling: md mode requires --lambda");
    if (int rc = check_grid(static_cast<long long>(points.size()) * lambdas.size()))
      return rc;
    temps.echo(t.config);
    t.config["x"] = join(xs, ';');
    t.config["points"] = std::to_string(n_points);
    t.columns = {"x1", "x2", "lambda", "n", "md_empirical", "regime_parameter"};
    for (const auto& x : points) {
      for (double lam : lambdas) {
        const double md = wulff::md_empirical(x, lam, n_points);
        const double beta =
            wulff::pair_from_lambda(lam).beta_high;
        t.rows.push_back({static_cast<double>(x.x1), static_cast<double>(x.x2),
                          lam, static_cast<long long>(n_points), md,
                          wulff::joint_regime_parameter(n_points, beta)});
      }
    }
    return emit(t, out);
  }

  const auto lambdas = parse_num_lists(temps.lambda);
  if (lambdas.empty())
    throw CLI::ValidationError(
        "scaling: need --eps (isotropy), --x with --lambda (md), or --lambda "
        "(moderate rate)");
  if (int rc = check_grid(static_cast<long long>(lambdas.size()))) return rc;
  temps.echo(t.config);
  t.columns = {"lambda", "moderate_rate"};
  for (double lam : lambdas)
    t.rows.push_back({lam, wulff::moderate_rate(lam)});
  return emit(t, out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"2d Ising surface tension, Wulff shapes, and killed-walk Green functions"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string("wulff-tension v") + wulff::kVersion);

  OutputOptions out;
  TempEntry temps;
  std::vector<std::string> xs, phis, methods, eps;
  int points = 64;
  int grid = 0;
  long long samples = 1000000;
  std::uint64_t seed = 0;
  double tol = 1e-8;

  const auto add_common = [&](CLI::App* cmd) {
    add_temp_flags(cmd, temps);
    cmd->add_option("--format", out.format, "csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", out.path, "output path (default stdout)");
  };

  CLI::App* c_tension = app.add_subcommand("tension", "exact surface tension");
  add_common(c_tension);
  c_tension->add_option("--x", xs, "direction a,b (repeatable)");

  CLI::App* c_wulff = app.add_subcommand("wulff", "Wulff crystal boundary");
  add_common(c_wulff);
  c_wulff->add_option("--points", points, "boundary points");

  CLI::App* c_green = app.add_subcommand("green", "killed-walk Green function");
  add_common(c_green);
  c_green->add_option("--x", xs, "site a,b (repeatable)");
  c_green->add_option("--methods", methods,
                      "series,quadrature,bessel (default all)")
      ->delimiter(',');
  c_green->add_option("--grid", grid, "resolution override (k_max / nodes per axis)");
  c_green->add_option("--tol", tol, "cross-method tolerance floor");

  CLI::App* c_mc = app.add_subcommand("mc", "killed-walk Monte Carlo");
  add_common(c_mc);
  c_mc->add_option("--x", xs, "site a,b (repeatable)");
  c_mc->add_option("--methods", methods, "visits,hit (default both)")
      ->delimiter(',');
  c_mc->add_option("--samples", samples, "samples per cell");
  c_mc->add_option("--seed", seed, "run seed; cells derive from (seed, cell)");

  CLI::App* c_asy = app.add_subcommand("asymptotics", "saddle point and OZ estimate");
  add_common(c_asy);
  c_asy->add_option("--x", xs, "site a,b: OZ/Bessel ratio mode");
  c_asy->add_option("--phi", phis, "direction angle(s): saddle data mode");

  CLI::App* c_scaling = app.add_subcommand("scaling", "near-critical limit checks");
  add_common(c_scaling);
  c_scaling->add_option("--eps", eps, "beta - beta_c list: isotropy sweep");
  c_scaling->add_option("--x", xs, "direction a,b: md mode (with --lambda)");
  c_scaling->add_option("--points", points,
                        "directions (isotropy) or integer scale n (md)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    if (app.got_subcommand(c_tension)) return run_tension(temps, xs, out);
    if (app.got_subcommand(c_wulff)) return run_wulff(temps, points, out);
    if (app.got_subcommand(c_green))
      return run_green(temps, xs, methods, grid, tol, out);
    if (app.got_subcommand(c_mc))
      return run_mc(temps, xs, methods, samples, seed, out);
    if (app.got_subcommand(c_asy)) return run_asymptotics(temps, xs, phis, out);
    if (app.got_subcommand(c_scaling))
      return run_scaling(temps, eps, xs, points, out);
  } catch (const CLI::ValidationError& e) {
    std::cerr << "wulff-tension: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "wulff-tension: domain error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "wulff-tension: " << e.what() << "\n";
    return 2;
  }
  return 1;
}
