#include "gabor/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <future>
#include <json.hpp>
#include <optional>
#include <sstream>
#include <thread>

#include "gabor/certify.hpp"
#include "gabor/discrete_oracle.hpp"
#include "gabor/errors.hpp"
#include "gabor/optimizer.hpp"
#include "gabor/window_bounds.hpp"

namespace gabor::cli {
namespace {

using nlohmann::json;

struct Common {
  std::string family;
  double gamma = 1.0;
};

struct EvalArgs {
  Common c;
  int n = 0;
  std::optional<double> eta, a;
};

struct SweepArgs {
  Common c;
  std::vector<int> n;
  std::vector<double> eta_range, gamma_range;
  std::optional<double> a;
  std::string output, format = "csv";
};

struct OptimizeArgs {
  Common c;
  int n = 0;
  std::string quantity, over = "eta";
  std::optional<double> a;
};

struct CertifyArgs {
  std::string filter, corpus, output;
  bool inject_negative = false;
};

struct OracleArgs {
  Common c;
  int n = 0;
  std::optional<double> eta, a;
  int L = 2048;
  long max_denominator = 0;
  std::string output;
};

double series_eps() {
  const char* env = std::getenv("GABOR_BOUNDS_EPS");
  if (!env || !*env) return series::default_eps;
  char* end = nullptr;
  double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw DomainError(std::string("GABOR_BOUNDS_EPS must be a positive number, got '") + env + "'");
  return v;
}

void add_common(CLI::App* sub, Common& c) {
  sub->add_option("--family", c.family, "sech, cutoff1, cutoff2, onesided or twosided")->required();
  sub->add_option("--gamma", c.gamma, "dilation or decay parameter (default 1)");
}

// Shape eta that puts the dilated window on time step a.
double eta_from_a(const WindowSpec& w, int n, double a) {
  switch (w.family) {
    case Family::Sech: return n * a / w.gamma;
    case Family::OneSided:
    case Family::TwoSided: return w.gamma * n * a;
    case Family::CutoffM1:
    case Family::CutoffM2: return n * a;
  }
  return 0.0;
}

double resolve_eta(const WindowSpec& w, int n, const std::optional<double>& eta, const std::optional<double>& a) {
  if (eta && a) throw DomainError("give either --eta or --a, not both");
  if (eta) return *eta;
  if (a) {
    if (!(*a > 0.0)) throw DomainError("a must be positive");
    return eta_from_a(w, n, *a);
  }
  throw DomainError("one of --eta or --a is required");
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw UnwritableOutput("cannot open '" + path + "' for writing");
  f << text;
  f.flush();
  if (!f) throw UnwritableOutput("write to '" + path + "' failed");
}

json number_json(double v) {
  if (std::isinf(v)) return "inf";
  return v;
}

json bounds_json(const BoundsValue& v) {
  return json{{"A", v.A}, {"B", v.B}, {"kappa", number_json(v.kappa)}, {"trunc_bound", v.trunc_bound},
              {"degenerate", v.degenerate}};
}

int cmd_eval(const EvalArgs& args, std::ostream& out) {
  WindowSpec w{parse_family(args.c.family), args.c.gamma};
  LatticeShape s{args.n, resolve_eta(w, args.n, args.eta, args.a)};
  BoundsValue v = bounds(w, s, series_eps());
  Lattice lat = physical_lattice(w, s);
  out << "family " << family_name(w.family) << '\n'
      << "gamma " << format_number(w.gamma) << '\n'
      << "n " << s.n << '\n'
      << "eta " << format_number(s.eta) << '\n'
      << "a " << format_number(lat.a) << '\n'
      << "b " << format_number(lat.b) << '\n'
      << "A " << format_number(v.A) << '\n'
      << "B " << format_number(v.B) << '\n'
      << "kappa " << format_number(v.kappa) << '\n'
      << "trunc_bound " << format_number(v.trunc_bound) << '\n';
  if (v.degenerate) out << "warning lower bound vanishes: not a frame\n";
  return ok;
}

struct Row {
  double x;
  BoundsValue v;
};

std::vector<double> grid(const std::vector<double>& range, const char* name) {
  if (range.size() != 3) throw DomainError(std::string(name) + " expects LO HI STEPS");
  double lo = range[0], hi = range[1], steps = range[2];
  if (!(steps >= 2) || steps != std::floor(steps)) throw DomainError("steps must be an integer >= 2");
  if (!(lo < hi) || !std::isfinite(lo) || !std::isfinite(hi)) throw DomainError(std::string(name) + " needs LO < HI");
  auto k = static_cast<std::size_t>(steps);
  std::vector<double> xs(k);
  for (std::size_t i = 0; i < k; ++i) xs[i] = lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(k - 1);
  xs.back() = hi;
  return xs;
}

std::vector<Row> sweep_rows(const WindowSpec& w, int n, const std::vector<double>& xs, bool over_gamma,
                            std::optional<double> a, double eps) {
  auto eval_at = [&](double x) {
    WindowSpec wx = w;
    double eta;
    if (over_gamma) {
      wx.gamma = x;
      eta = eta_from_a(wx, n, *a);
    } else {
      eta = x;
    }
    return Row{x, bounds(wx, LatticeShape{n, eta}, eps)};
  };
  std::vector<Row> rows(xs.size());
  unsigned workers = std::max(1u, std::min(8u, std::thread::hardware_concurrency()));
  std::size_t chunk = (xs.size() + workers - 1) / workers;
  std::vector<std::future<void>> jobs;
  for (std::size_t start = 0; start < xs.size(); start += chunk) {
    std::size_t stop = std::min(xs.size(), start + chunk);
    jobs.push_back(std::async(std::launch::async, [&, start, stop] {
      for (std::size_t i = start; i < stop; ++i) rows[i] = eval_at(xs[i]);
    }));
  }
  for (auto& j : jobs) j.get();
  return rows;
}

std::string csv(const std::vector<Row>& rows, const char* var) {
  std::ostringstream s;
  s << var << ",A,B,kappa,trunc_bound\n";
  for (const auto& r : rows)
    s << format_number(r.x) << ',' << format_number(r.v.A) << ',' << format_number(r.v.B) << ','
      << format_number(r.v.kappa) << ',' << format_number(r.v.trunc_bound) << '\n';
  return s.str();
}

int cmd_sweep(const SweepArgs& args, std::ostream& out) {
  WindowSpec w{parse_family(args.c.family), args.c.gamma};
  if (args.format != "csv" && args.format != "json") throw DomainError("--format must be csv or json");
  if (args.n.empty()) throw DomainError("--n needs at least one density");
  const bool over_gamma = !args.gamma_range.empty();
  if (over_gamma == !args.eta_range.empty()) throw DomainError("give exactly one of --eta-range or --gamma-range");
  if (over_gamma && !args.a) throw DomainError("--gamma-range needs a fixed time step --a");
  if (!over_gamma && args.a) throw DomainError("--a only applies to --gamma-range sweeps");
  auto xs = grid(over_gamma ? args.gamma_range : args.eta_range, over_gamma ? "--gamma-range" : "--eta-range");
  const char* var = over_gamma ? "gamma" : "eta";
  const double eps = series_eps();

  std::vector<std::pair<int, std::vector<Row>>> all;
  for (int n : args.n) all.emplace_back(n, sweep_rows(w, n, xs, over_gamma, args.a, eps));

  if (args.format == "json") {
    json doc{{"family", family_name(w.family)}, {"variable", var}, {"series", json::array()}};
    if (over_gamma) doc["a"] = *args.a;
    else doc["gamma"] = w.gamma;
    for (const auto& [n, rows] : all) {
      json rs = json::array();
      for (const auto& r : rows) {
        json row = bounds_json(r.v);
        row[var] = r.x;
        rs.push_back(row);
      }
      doc["series"].push_back(json{{"n", n}, {"rows", rs}});
    }
    std::string text = doc.dump(2) + "\n";
    if (args.output.empty()) out << text;
    else write_file(args.output, text);
    return ok;
  }

  if (args.output.empty()) {
    if (all.size() > 1) throw DomainError("a CSV sweep over several n needs --output (one file per n)");
    out << csv(all.front().second, var);
    return ok;
  }
  if (all.size() == 1) {
    write_file(args.output, csv(all.front().second, var));
    return ok;
  }
  for (const auto& [n, rows] : all) {
    std::string path = per_n_path(args.output, n);
    write_file(path, csv(rows, var));
    out << "wrote " << path << '\n';
  }
  return ok;
}

std::string_view kind_name(Extremum e) { return e == Extremum::Max ? "max" : "min"; }

int cmd_optimize(const OptimizeArgs& args, std::ostream& out) {
  WindowSpec w{parse_family(args.c.family), args.c.gamma};
  validate(w);
  Quantity q = parse_quantity(args.quantity);
  out << "family " << family_name(w.family) << '\n' << "n " << args.n << '\n' << "quantity " << quantity_name(q) << '\n';
  if (args.over == "gamma") {
    if (w.family != Family::CutoffM2) throw DomainError("--over gamma is only available for cutoff2");
    if (!args.a) throw DomainError("--over gamma needs a fixed time step --a");
    CriticalPoint cp = find_critical_gamma_cutoff_m2(q, args.n, *args.a);
    out << "kind " << kind_name(cp.kind) << '\n'
        << "gamma_star " << format_number(cp.eta_star) << '\n'
        << "a " << format_number(*args.a) << '\n'
        << "b " << format_number(1.0 / (args.n * *args.a)) << '\n'
        << "residual " << format_number(cp.residual) << '\n'
        << "bracket " << format_number(cp.lo) << ' ' << format_number(cp.hi) << '\n';
    return ok;
  }
  if (args.over != "eta") throw DomainError("--over must be eta or gamma");
  if (args.a) throw DomainError("--a only applies to --over gamma");
  CriticalPoint cp = find_critical_point(w, q, args.n, series_eps());
  Lattice lat = physical_lattice(w, LatticeShape{args.n, cp.eta_star});
  out << "kind " << kind_name(cp.kind) << '\n'
      << "eta_star " << format_number(cp.eta_star) << '\n'
      << "a " << format_number(lat.a) << '\n'
      << "b " << format_number(lat.b) << '\n'
      << "residual " << format_number(cp.residual) << '\n'
      << "bracket " << format_number(cp.lo) << ' ' << format_number(cp.hi) << '\n';
  return ok;
}

std::vector<ival::Certificate> load_corpus(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw DomainError("cannot read corpus '" + path + "'");
  json doc;
  try {
    doc = json::parse(f);
  } catch (const json::exception& e) {
    throw DomainError("corpus '" + path + "' is not valid JSON: " + e.what());
  }
  const json& list = doc.is_object() && doc.contains("certificates") ? doc["certificates"] : doc;
  if (!list.is_array()) throw DomainError("corpus must be a JSON array of certificates");
  std::vector<ival::Certificate> cs;
  for (const auto& j : list) {
    try {
      cs.push_back(ival::certificate_from_json(j));
    } catch (const json::exception& e) {
      throw DomainError(std::string("bad certificate entry: ") + e.what());
    }
  }
  return cs;
}

int cmd_certify(const CertifyArgs& args, std::ostream& out) {
  std::vector<ival::Certificate> cs = args.corpus.empty() ? ival::builtin_certificates() : load_corpus(args.corpus);
  if (!args.filter.empty()) {
    std::erase_if(cs, [&](const ival::Certificate& c) { return c.name.find(args.filter) == std::string::npos; });
    if (cs.empty()) throw DomainError("no certificate name contains '" + args.filter + "'");
  }
  if (args.inject_negative) cs.push_back(ival::negative_sanity_certificate());

  auto results = ival::check_all(cs);
  ival::Status overall = ival::Status::Proved;
  json rs = json::array();
  for (const auto& r : results) {
    overall = ival::merge(overall, r.status);
    rs.push_back(ival::to_json(r));
  }
  json doc{{"status", ival::status_name(overall)}, {"results", rs}};
  std::string text = doc.dump(2) + "\n";
  if (args.output.empty()) {
    out << text;
  } else {
    write_file(args.output, text);
    for (const auto& r : results) {
      out << r.certificate.name << ' ' << ival::status_name(r.status) << ' ' << r.leaves_checked;
      if (r.witness) out << " witness " << *r.witness;
      out << '\n';
    }
  }
  switch (overall) {
    case ival::Status::Proved: return ok;
    case ival::Status::Failed: return verification_failed;
    case ival::Status::DepthExceeded: return depth_exceeded;
  }
  return ok;
}

int cmd_oracle(const OracleArgs& args, std::ostream& out) {
  WindowSpec w{parse_family(args.c.family), args.c.gamma};
  LatticeShape s{args.n, resolve_eta(w, args.n, args.eta, args.a)};
  if (args.max_denominator < 0) throw DomainError("--max-denominator must be nonnegative");
  auto report = oracle::compare(w, s, args.L, args.max_denominator);
  std::string text = oracle::to_json(report).dump(2) + "\n";
  if (args.output.empty()) out << text;
  else write_file(args.output, text);
  return oracle::within_tolerance(report) ? ok : verification_failed;
}

}  // namespace

std::string format_number(double v) {
  if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

std::string per_n_path(const std::string& path, int n) {
  auto slash = path.find_last_of('/');
  auto dot = path.find_last_of('.');
  std::string suffix = "_n" + std::to_string(n);
  if (dot == std::string::npos || (slash != std::string::npos && dot < slash) || dot == slash + 1)
    return path + suffix;
  return path.substr(0, dot) + suffix + path.substr(dot);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Frame bounds, optimal lattices and certificates for Gabor systems with hyperbolic-type windows"};
  app.name("gabor-bounds");
  app.require_subcommand(1);

  EvalArgs ea;
  auto* eval = app.add_subcommand("eval", "closed-form A, B, kappa at one lattice");
  add_common(eval, ea.c);
  eval->add_option("--n", ea.n, "density 1/(ab)")->required();
  eval->add_option("--eta", ea.eta, "lattice shape");
  eval->add_option("--a", ea.a, "time step of the (dilated) window lattice");

  SweepArgs sa;
  auto* sweep = app.add_subcommand("sweep", "bounds on a grid of eta or gamma");
  add_common(sweep, sa.c);
  sweep->add_option("--n", sa.n, "densities, comma separated")->required()->delimiter(',');
  sweep->add_option("--eta-range", sa.eta_range, "LO HI STEPS")->expected(3)->delimiter(',');
  sweep->add_option("--gamma-range", sa.gamma_range, "LO HI STEPS")->expected(3)->delimiter(',');
  sweep->add_option("--a", sa.a, "fixed time step for gamma sweeps");
  sweep->add_option("--output", sa.output, "output file (default stdout)");
  sweep->add_option("--format", sa.format, "csv or json");

  OptimizeArgs oa;
  auto* optimize = app.add_subcommand("optimize", "critical lattice shape for A, B or kappa");
  add_common(optimize, oa.c);
  optimize->add_option("--n", oa.n, "density")->required();
  optimize->add_option("--quantity", oa.quantity, "A, B or kappa")->required();
  optimize->add_option("--over", oa.over, "eta (default) or gamma (cutoff2 at fixed --a)");
  optimize->add_option("--a", oa.a, "fixed time step for --over gamma");

  CertifyArgs ca;
  auto* certify = app.add_subcommand("certify", "run the interval-arithmetic certificate corpus");
  certify->add_option("--filter", ca.filter, "keep certificates whose name contains this text");
  certify->add_option("--corpus", ca.corpus, "JSON corpus file instead of the built-in one");
  certify->add_option("--output", ca.output, "results file (default: JSON on stdout)");
  certify->add_flag("--inject-negative", ca.inject_negative, "append a certificate that must fail");

  OracleArgs ora;
  auto* oracle_cmd = app.add_subcommand("oracle", "compare closed forms with a discrete Gabor frame");
  add_common(oracle_cmd, ora.c);
  oracle_cmd->add_option("--n", ora.n, "density")->required();
  oracle_cmd->add_option("--eta", ora.eta, "lattice shape");
  oracle_cmd->add_option("--a", ora.a, "time step of the (dilated) window lattice");
  oracle_cmd->add_option("--L", ora.L, "largest signal length (default 2048)");
  oracle_cmd->add_option("--max-denominator", ora.max_denominator, "round eta to p/q with q at most this");
  oracle_cmd->add_option("--output", ora.output, "report file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? ok : invalid_parameters;
  }

  try {
    if (eval->parsed()) return cmd_eval(ea, out);
    if (sweep->parsed()) return cmd_sweep(sa, out);
    if (optimize->parsed()) return cmd_optimize(oa, out);
    if (certify->parsed()) return cmd_certify(ca, out);
    if (oracle_cmd->parsed()) return cmd_oracle(ora, out);
  } catch (const UnwritableOutput& e) {
    err << "error: " << e.what() << '\n';
    return unwritable_output;
  } catch (const NoOptimizer& e) {
    err << "no optimizer: " << e.what() << '\n';
    return no_optimizer;
  } catch (const NoSignChange& e) {
    err << "no optimizer: " << e.what() << '\n';
    return no_optimizer;
  } catch (const InvalidDensity& e) {
    err << "invalid density: " << e.what() << '\n';
    return invalid_parameters;
  } catch (const DomainError& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return invalid_parameters;
  } catch (const IncommensurableLattice& e) {
    err << "invalid parameters: " << e.what() << '\n';
    return invalid_parameters;
  }
  return invalid_parameters;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"gabor-bounds"};
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace gabor::cli
