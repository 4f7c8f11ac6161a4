#include <CLI11.hpp>
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <json.hpp>
#include <memory>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "stable_info/alphapower.hpp"
#include "stable_info/bounds.hpp"
#include "stable_info/capacity.hpp"
#include "stable_info/cli.hpp"
#include "stable_info/config.hpp"
#include "stable_info/errors.hpp"
#include "stable_info/estimate.hpp"
#include "stable_info/jalpha.hpp"
#include "stable_info/law.hpp"
#include "stable_info/specfun.hpp"
#include "stable_info/stable.hpp"

namespace stable_info {

namespace {

using json = nlohmann::ordered_json;

std::string num(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.10g", x);
  return buf;
}

json jnum(double x) { return std::isfinite(x) ? json(x) : json(num(x)); }

std::string csv_cell(const json& v) {
  if (v.is_null()) return {};
  if (v.is_number()) return num(v.get<double>());
  if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
  std::string s = v.is_string() ? v.get<std::string>() : v.dump();
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char c : s) q += c == '"' ? std::string("\"\"") : std::string(1, c);
  return q + "\"";
}

struct Table {
  std::vector<std::string> cols;
  std::vector<std::vector<json>> rows;

  void write(std::ostream& os, const std::string& format) const {
    if (format == "json") {
      json arr = json::array();
      for (const auto& r : rows) {
        json o = json::object();
        for (std::size_t i = 0; i < cols.size(); ++i) o[cols[i]] = r[i];
        arr.push_back(o);
      }
      os << arr.dump(2) << '\n';
      return;
    }
    for (std::size_t i = 0; i < cols.size(); ++i) os << (i ? "," : "") << cols[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
      os << '\n';
    }
  }
};

// Output goes to the configured file, or to `out`.
class Sink {
 public:
  Sink(const RunConfig& cfg, std::ostream& out) : os_(&out) {
    if (!cfg.path.empty()) {
      file_ = std::make_unique<std::ofstream>(cfg.path);
      if (!*file_) throw ConfigError("cannot open output file '" + cfg.path + "'");
      os_ = file_.get();
    }
  }
  std::ostream& os() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_;
};

int code_for(const std::exception& e) {
  if (dynamic_cast<const ConfigError*>(&e) || dynamic_cast<const DomainError*>(&e)) return exit_config;
  return exit_numeric;
}

AlphaPowerOptions power_options(const RunConfig& cfg) {
  AlphaPowerOptions o;
  o.root_tol = cfg.tol_root;
  o.grid = cfg.grid();
  return o;
}

json config_json(const RunConfig& cfg) {
  return json{{"grid.n_points", cfg.n_points}, {"grid.extent_factor", cfg.extent_factor},
              {"tol.root", cfg.tol_root},      {"tol.entropy", cfg.tol_entropy},
              {"tol.slack", cfg.tol_slack},    {"seed", cfg.seed}};
}

json report_json(const BoundReport& r) {
  json in = json::object();
  for (const auto& [k, v] : r.inputs) in[k] = jnum(v);
  return json{{"name", r.name},   {"lhs", jnum(r.lhs)},
              {"rhs", jnum(r.rhs)}, {"slack", jnum(r.slack)},
              {"rel_error", jnum(r.rel_error)}, {"inputs", in},
              {"method", r.method}};
}

// ---- commands ----

const std::vector<std::string> kPowerLaws{"gaussian:1.4142135623730951", "uniform:1", "laplace:1", "cauchy:1",
                                          "sas:1.5:1"};

int cmd_power_table(const RunConfig& cfg, const std::vector<double>& alphas, const std::vector<std::string>& specs,
                    std::ostream& out, std::ostream& err) {
  std::vector<RandomLaw> laws;
  for (const auto& s : specs) laws.push_back(parse_law(s));
  Table t{{"alpha", "law", "params", "alpha_power", "method", "residual", "error"}, {}};
  int code = exit_ok;
  for (double a : alphas)
    for (const auto& law : laws) {
      try {
        const AlphaPowerResult r = alpha_power(law, a, power_options(cfg));
        t.rows.push_back({a, law.name(), law.describe(), r.infinite() ? json("infinite") : json(r.value),
                          to_string(r.method), r.residual, json()});
      } catch (const std::exception& e) {
        t.rows.push_back({a, law.name(), law.describe(), json(), json(), json(), std::string(e.what())});
        err << "power-table: alpha=" << num(a) << " " << law.name() << ": " << e.what() << '\n';
        code = std::max(code, code_for(e));
      }
    }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  return code;
}

int cmd_jalpha_table(const RunConfig& cfg, const std::vector<double>& alphas, const std::vector<double>& rs,
                     std::ostream& out) {
  Table t{{"alpha", "r", "J_alpha", "method", "relerr_vs_closed_form_if_stable"}, {}};
  for (double a : alphas)
    for (double r : rs) {
      const double g = std::pow(r, -1.0 / r);
      const JAlphaEstimate e = jalpha_spectral(realize(RandomLaw::sas(r, g), cfg.grid()), a);
      json rel;
      if (std::abs(r - a) < 1e-12) rel = std::abs(e.value / jalpha_closed_stable(a, g, 1) - 1.0);
      t.rows.push_back({a, r, jnum(e.value), to_string(e.method), rel});
    }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  return exit_ok;
}

int cmd_giie_table(const RunConfig& cfg, const std::vector<double>& alphas, const std::vector<double>& rs,
                   std::ostream& out, std::ostream& err) {
  Table t{{"alpha", "r", "product", "kappa_alpha"}, {}};
  int code = exit_ok;
  for (const auto& row : giie_table(alphas, rs, cfg.grid())) {
    t.rows.push_back({row.alpha, row.r, jnum(row.product), row.kappa});
    if (row.product < row.kappa - cfg.tol_slack) {
      err << "giie-table: bound violated at alpha=" << num(row.alpha) << " r=" << num(row.r) << '\n';
      code = exit_violation;
    }
  }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  return code;
}

int cmd_giie_mix(const RunConfig& cfg, const std::vector<double>& sigmas, double alpha, double r, std::ostream& out,
                 std::ostream& err) {
  const auto rows = giie_mix(sigmas, alpha, r, cfg.grid());
  Table t{{"sigma", "product", "kappa_18"}, {}};
  int code = exit_ok;
  for (const auto& row : rows) {
    t.rows.push_back({row.sigma, jnum(row.product), row.kappa});
    if (row.product < row.kappa - cfg.tol_slack) {
      err << "giie-mix: bound violated at sigma=" << num(row.sigma) << '\n';
      code = exit_violation;
    }
  }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  err << "giie-mix: minimum at sigma=" << num(giie_mix_argmin(rows)) << '\n';
  return code;
}

int cmd_sum_bound(const RunConfig& cfg, const std::vector<std::string>& specs, const std::vector<double>& alphas,
                  double gamma, std::ostream& out, std::ostream& err) {
  Table t{{"law", "alpha", "gamma", "h_sum_numeric", "h_sum_bound", "slack"}, {}};
  int code = exit_ok;
  for (const auto& s : specs)
    for (double a : alphas) {
      const BoundReport b = sum_bound_check(parse_law(s), a, gamma, cfg.grid());
      t.rows.push_back({s, a, gamma, jnum(b.lhs), jnum(b.rhs), jnum(b.slack)});
      if (!b.holds(cfg.tol_slack)) {
        err << "sum-bound: bound violated for " << s << " at alpha=" << num(a) << '\n';
        code = exit_violation;
      }
    }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  return code;
}

int cmd_debruijn(const RunConfig& cfg, const std::vector<std::string>& specs, double alpha, double gamma,
                 const std::vector<double>& etas, double tol, std::ostream& out, std::ostream& err) {
  Table t{{"law", "alpha", "gamma", "eta", "dh_deta", "gamma_alpha_J", "rel_error"}, {}};
  int code = exit_ok;
  for (const auto& s : specs)
    for (double eta : etas) {
      const BoundReport b = debruijn_check(parse_law(s), alpha, gamma, eta, cfg.grid());
      t.rows.push_back({s, alpha, gamma, eta, b.lhs, b.rhs, b.rel_error});
      if (!(b.rel_error < tol)) {
        err << "debruijn-check: identity off by " << num(b.rel_error) << " for " << s << " at eta=" << num(eta) << '\n';
        code = exit_violation;
      }
    }
  Sink sink(cfg, out);
  t.write(sink.os(), cfg.format);
  return code;
}

struct CapacityResult {
  json body;
  bool ok = true;
};

CapacityResult capacity_json(const RunConfig& cfg, const ChannelSpec& spec, std::size_t mc_samples) {
  CapacityResult r;
  r.body = json{{"alpha", spec.alpha},
                {"gamma_N", spec.gamma_N},
                {"A", spec.A},
                {"d", spec.d},
                {"C_nats", capacity_stable(spec)},
                {"gamma_x_star", optimal_input_scale(spec)},
                {"p_alpha_N", spec.noise_power()}};
  if (spec.d != 1) {
    r.body["checks"] = json();
    return r;
  }
  const OutputCheck o = optimal_output_check(spec, cfg.grid());
  const CostCheck c = cost_constraint_check(spec, mc_samples, cfg.seed);
  const double prel = std::abs(o.alpha_power / spec.A - 1.0);
  const double herr = std::abs(o.entropy - o.entropy_target);
  const bool cost_ok = std::abs(c.mean_divergence - c.target) <= std::max(0.02 * c.target, 3.0 * c.std_error);
  r.ok = prel < 0.01 && herr < cfg.tol_entropy && cost_ok;
  r.body["checks"] = json{{"output_alpha_power", o.alpha_power},
                          {"output_alpha_power_rel_error", prel},
                          {"output_entropy", o.entropy},
                          {"output_entropy_target", o.entropy_target},
                          {"cost_mean_divergence", c.mean_divergence},
                          {"cost_target", c.target},
                          {"cost_std_error", c.std_error},
                          {"cost_samples", c.samples},
                          {"passed", r.ok}};
  return r;
}

int cmd_capacity(const RunConfig& cfg, const ChannelSpec& spec, std::size_t mc_samples, std::ostream& out) {
  const CapacityResult r = capacity_json(cfg, spec, mc_samples);
  Sink sink(cfg, out);
  sink.os() << r.body.dump(2) << '\n';
  return r.ok ? exit_ok : exit_violation;
}

json run_json(const EstimatorRun& run) {
  const double ratio = run.error_alpha_power / run.crb;
  return json{{"estimator", to_string(run.config.estimator)},
              {"alpha", run.config.noise.alpha},
              {"gamma_N", run.config.noise.gamma},
              {"trials", run.config.trials},
              {"n", run.config.samples_per_trial},
              {"seed", run.config.seed},
              {"K", run.config.K},
              {"error_alpha_power", jnum(run.error_alpha_power)},
              {"crb", run.crb},
              {"ratio", jnum(ratio)},
              {"diagnostics",
               {{"error_alpha_power_se", run.error_alpha_power_se},
                {"kept_trials", run.errors.size()},
                {"flagged_trials", run.flagged}}}};
}

int cmd_crb_bench(const RunConfig& cfg, EstimatorConfig ec, const std::string& errors_csv, std::ostream& out,
                  std::ostream& err) {
  const EstimatorRun run = run_estimator(ec);
  if (!errors_csv.empty()) {
    std::ofstream f(errors_csv);
    if (!f) throw ConfigError("cannot open '" + errors_csv + "'");
    f << "error\n";
    f.precision(17);
    for (double e : run.errors) f << e << '\n';
  }
  Sink sink(cfg, out);
  sink.os() << run_json(run).dump(2) << '\n';
  if (run.error_alpha_power < run.crb * 0.98) {
    err << "crb-bench: error alpha-power below the bound\n";
    return exit_violation;
  }
  return exit_ok;
}

// Every check family with its own pass/fail; "reproduction" entries do not affect the exit code.
int cmd_suite(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const GridOptions g = cfg.grid();
  const double tol = cfg.tol_slack;
  json checks = json::array();
  int code = exit_ok;
  auto run = [&](const std::string& name, const std::string& group, const std::function<json(bool&)>& body) {
    json entry{{"name", name}, {"group", group}};
    try {
      bool ok = true;
      entry["detail"] = body(ok);
      entry["passed"] = ok;
      if (!ok && group != "reproduction") code = std::max(code, int(exit_violation));
    } catch (const std::exception& e) {
      entry["passed"] = false;
      entry["error"] = e.what();
      code = exit_numeric;
    }
    err << "suite: " << name << (entry["passed"].get<bool>() ? " ok" : " FAILED") << '\n';
    checks.push_back(entry);
  };

  run("kappa", "identity", [&](bool& ok) {
    json d = json::object();
    for (double a : {1.2, 1.4, 1.6, 1.8, 2.0}) d[num(a)] = kappa_alpha(a);
    ok = std::abs(kappa_alpha(2.0) - 1.0) < 1e-10;
    return d;
  });
  run("debruijn", "identity", [&](bool& ok) {
    json d = json::array();
    struct Case {
      const char* law;
      double alpha, gamma, tol;
    };
    for (const Case& c : {Case{"sas:1.5:1", 1.5, 1.0, 0.01}, Case{"gaussian:1", 2.0, std::sqrt(0.5), 0.01},
                          Case{"laplace:1", 1.5, 1.0, 0.02}, Case{"uniform:1+gaussian:0.5", 1.8, 1.0, 0.02}})
      for (double eta : {0.2, 0.5}) {
        const BoundReport b = debruijn_check(parse_law(c.law), c.alpha, c.gamma, eta, g);
        ok = ok && b.rel_error < c.tol;
        json e = report_json(b);
        e["law"] = c.law;
        d.push_back(e);
      }
    return d;
  });
  run("gfii", "bound", [&](bool& ok) {
    json d = json::array();
    struct Case {
      const char *a, *b;
      double alpha;
    };
    for (const Case& c : {Case{"gaussian:1", "gaussian:2", 2.0}, Case{"sas:1.5:1", "sas:1.5:0.5", 1.5},
                          Case{"gaussian:1", "sas:1.8:1", 1.8}, Case{"laplace:1", "sas:1.5:1", 1.5},
                          Case{"laplace:1", "gaussian:1", 2.0}}) {
      const BoundReport b = gfii_check(parse_law(c.a), parse_law(c.b), c.alpha, g);
      ok = ok && b.holds(tol);
      json e = report_json(b);
      e["laws"] = std::string(c.a) + "," + c.b;
      d.push_back(e);
    }
    return d;
  });
  run("sum_bound", "bound", [&](bool& ok) {
    json d = json::array();
    struct Case {
      const char* law;
      double alpha, gamma;
    };
    for (const Case& c : {Case{"gaussian:1", 2.0, std::sqrt(0.5)}, Case{"laplace:1", 1.5, 1.0},
                          Case{"cauchy:1", 1.5, 1.0}, Case{"laplace:1", 1.2, 0.5}, Case{"sas:1.2:1", 1.8, 0.7}}) {
      const BoundReport b = sum_bound_check(parse_law(c.law), c.alpha, c.gamma, g);
      ok = ok && b.holds(tol);
      json e = report_json(b);
      e["law"] = c.law;
      d.push_back(e);
    }
    return d;
  });
  run("giie_table", "bound", [&](bool& ok) {
    json d = json::array();
    for (const auto& r : giie_table({1.2, 1.4, 1.6, 1.8, 2.0}, {0.4, 0.6, 0.8, 1.0, 1.2, 1.4, 1.6, 1.8}, g)) {
      ok = ok && r.product >= r.kappa - tol;
      d.push_back({{"alpha", r.alpha}, {"r", r.r}, {"product", jnum(r.product)}, {"kappa", r.kappa}});
    }
    for (const char* law : {"gaussian:1", "laplace:1", "uniform:1+gaussian:0.2"})
      for (double a : {1.5, 2.0}) {
        const BoundReport b = giie_product(parse_law(law), a, g);
        ok = ok && b.holds(tol);
        json e = report_json(b);
        e["law"] = law;
        d.push_back(e);
      }
    return d;
  });
  std::vector<GiieMixRow> mix;
  run("giie_mix", "bound", [&](bool& ok) {
    std::vector<double> sig;
    for (int i = 0; i <= 16; ++i) sig.push_back(0.5 * i);
    mix = giie_mix(sig, 1.8, 1.8, g);
    json d = json::array();
    for (const auto& r : mix) {
      ok = ok && r.product >= r.kappa - tol;
      d.push_back({{"sigma", r.sigma}, {"product", r.product}, {"kappa_18", r.kappa}});
    }
    return d;
  });
  run("giie_mix_argmin", "reproduction", [&](bool& ok) {
    const double s = giie_mix_argmin(mix);
    ok = s >= 3.0 && s <= 5.0;
    return json{{"argmin_sigma", s}, {"expected", "[3, 5]"}};
  });
  run("power_fisher", "bound", [&](bool& ok) {
    json d = json::array();
    for (const char* law : {"sas:1.5:1", "laplace:1", "cauchy:1", "gaussian:1+sas:1.8:1"})
      for (double a : {1.5, 1.8}) {
        const BoundReport b = power_fisher_bound(parse_law(law), a, g);
        ok = ok && b.holds(tol);
        json e = report_json(b);
        e["law"] = law;
        d.push_back(e);
      }
    return d;
  });
  run("crb", "bound", [&](bool& ok) {
    json d = json::array();
    struct Case {
      Estimator e;
      std::size_t n;
    };
    for (double a : {1.2, 1.5, 1.8})
      for (const Case& c : {Case{Estimator::ml_identity, 1}, Case{Estimator::sample_mean, 10},
                            Case{Estimator::sample_median, 11}, Case{Estimator::myriad, 11}}) {
        EstimatorConfig ec;
        ec.estimator = c.e;
        ec.noise = StableParams::symmetric(a, 1.0);
        ec.samples_per_trial = c.n;
        ec.seed = cfg.seed;
        const EstimatorRun r = run_estimator(ec);
        ok = ok && r.error_alpha_power >= 0.98 * r.crb;
        d.push_back(run_json(r));
      }
    return d;
  });
  run("capacity", "identity", [&](bool& ok) {
    const CapacityResult r = capacity_json(cfg, ChannelSpec{1.5, 1.0, 3.0, 1}, 20000);
    const double sigma = 1.3, P = 2.0;
    const double awgn = capacity_stable(ChannelSpec{2.0, sigma / std::sqrt(2.0), std::sqrt(sigma * sigma + P), 1});
    const double ref = 0.5 * std::log1p(P / (sigma * sigma));
    ok = r.ok && std::abs(awgn - ref) < 1e-12;
    json d = r.body;
    d["awgn_capacity"] = awgn;
    d["awgn_reference"] = ref;
    return d;
  });

  std::size_t failed = 0;
  for (const auto& c : checks)
    if (!c["passed"].get<bool>()) ++failed;
  json summary{{"config", config_json(cfg)}, {"checks", checks}, {"failed", failed}, {"exit_code", code}};
  Sink sink(cfg, out);
  sink.os() << summary.dump(2) << '\n';
  return code;
}

std::vector<double> range(double lo, double hi, double step) {
  std::vector<double> v;
  for (int i = 0; lo + i * step <= hi + 1e-9; ++i) v.push_back(std::round((lo + i * step) * 1e9) / 1e9);
  return v;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Alpha-power, alpha-Fisher information and related bounds for stable laws", "stable-info"};
  app.fallthrough();
  app.require_subcommand(0, 1);

  std::string config_path, format, path;
  bool show_config = false;
  std::size_t n_points = 0;
  double extent = 0, tol_root = 0, tol_entropy = 0, tol_slack = 0;
  std::uint64_t seed = 0;
  app.add_option("--config", config_path, "key = value config file (default: $STABLE_INFO_CONFIG)");
  app.add_flag("--show-config", show_config, "print the effective configuration and exit");
  auto* o_n = app.add_option("--n-points", n_points, "minimum grid size (power of two)");
  auto* o_ext = app.add_option("--extent-factor", extent, "grid half-width in heavy-tail scales");
  auto* o_root = app.add_option("--tol-root", tol_root, "relative root tolerance");
  auto* o_ent = app.add_option("--tol-entropy", tol_entropy, "entropy tolerance (nats)");
  auto* o_slack = app.add_option("--tol-slack", tol_slack, "negative-slack tolerance for bounds");
  auto* o_seed = app.add_option("--seed", seed, "random seed");
  auto* o_fmt = app.add_option("--format", format, "csv or json");
  auto* o_path = app.add_option("--output", path, "write to this file instead of stdout");

  std::vector<double> alphas, rs, sigmas, etas;
  std::vector<std::string> laws;
  double alpha = 1.5, mix_alpha = 1.8, gamma = 1.0, r = 1.8, A = 3.0, K = 0.0, tol = 0.02;
  int d = 1;
  std::size_t trials = 10000, n = 1, mc = 20000;
  std::string estimator = "ml", errors_csv;

  auto* power = app.add_subcommand("power-table", "alpha-power of several laws over alpha");
  power->add_option("--alphas", alphas, "alpha values")->delimiter(',');
  power->add_option("--laws", laws, "laws, e.g. gaussian:1.414 uniform:1 sas:1.5:1")->delimiter(',');

  auto* jt = app.add_subcommand("jalpha-table", "J_alpha of S(r, r^(-1/r))");
  jt->add_option("--alphas", alphas)->delimiter(',');
  jt->add_option("--rs", rs)->delimiter(',');

  auto* gt = app.add_subcommand("giie-table", "N_alpha J_alpha of S(r, r^(-1/r)) against kappa_alpha");
  gt->add_option("--alphas", alphas)->delimiter(',');
  gt->add_option("--rs", rs)->delimiter(',');

  auto* gm = app.add_subcommand("giie-mix", "N_a J_a of S(r, r^(-1/r)) + N(0, sigma^2)");
  gm->add_option("--sigmas", sigmas)->delimiter(',');
  gm->add_option("--alpha", mix_alpha)->capture_default_str();
  gm->add_option("--r", r)->capture_default_str();

  auto* sb = app.add_subcommand("sum-bound", "numeric h(X + Z) against the entropy-of-sum bound");
  sb->add_option("--laws", laws)->delimiter(',');
  sb->add_option("--alphas", alphas)->delimiter(',');
  sb->add_option("--gamma", gamma)->capture_default_str();

  auto* db = app.add_subcommand("debruijn-check", "dh/d eta against gamma^alpha J_alpha");
  db->add_option("--laws", laws)->delimiter(',');
  db->add_option("--alpha", alpha)->capture_default_str();
  db->add_option("--gamma", gamma)->capture_default_str();
  db->add_option("--etas", etas)->delimiter(',');
  db->add_option("--tol", tol, "largest accepted relative error")->capture_default_str();

  auto* cap = app.add_subcommand("capacity", "capacity of the additive stable-noise channel");
  cap->add_option("--alpha", alpha)->capture_default_str();
  cap->add_option("--gamma-n", gamma)->capture_default_str();
  cap->add_option("--A", A)->capture_default_str();
  cap->add_option("--d", d)->capture_default_str();
  cap->add_option("--mc-samples", mc, "Monte Carlo draws for the cost-constraint check")->capture_default_str();

  auto* crb = app.add_subcommand("crb-bench", "estimator error alpha-power against the Cramer-Rao bound");
  crb->add_option("--alpha", alpha)->capture_default_str();
  crb->add_option("--gamma-n", gamma)->capture_default_str();
  crb->add_option("--estimator", estimator, "ml, mean, median or myriad")->capture_default_str();
  crb->add_option("--trials", trials)->capture_default_str();
  crb->add_option("--n", n, "samples per trial")->capture_default_str();
  auto* crb_seed = crb->add_option("--seed", seed, "random seed");
  crb->add_option("--K", K, "myriad tuning constant (default gamma_n)");
  crb->add_option("--errors-csv", errors_csv, "also write the raw errors here");

  auto* suite = app.add_subcommand("suite", "run every check family and summarize");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int c = app.exit(e, out, err);
    return c == 0 ? exit_ok : exit_config;
  }

  try {
    RunConfig cfg;
    if (config_path.empty())
      if (const char* env = std::getenv("STABLE_INFO_CONFIG"); env && *env) config_path = env;
    if (!config_path.empty()) cfg.load_file(config_path);
    if (*o_n) cfg.n_points = n_points;
    if (*o_ext) cfg.extent_factor = extent;
    if (*o_root) cfg.tol_root = tol_root;
    if (*o_ent) cfg.tol_entropy = tol_entropy;
    if (*o_slack) cfg.tol_slack = tol_slack;
    if (*o_seed || *crb_seed) cfg.seed = seed;
    if (*o_fmt) cfg.format = format;
    if (*o_path) cfg.path = path;
    cfg.validate();

    if (show_config) {
      out << cfg.show();
      return exit_ok;
    }
    if (*power) {
      if (alphas.empty()) alphas = range(0.4, 1.8, 0.2);
      if (laws.empty()) laws = kPowerLaws;
      return cmd_power_table(cfg, alphas, laws, out, err);
    }
    if (*jt) {
      if (alphas.empty()) alphas = range(1.2, 1.8, 0.2);
      if (rs.empty()) rs = range(0.4, 1.8, 0.2);
      return cmd_jalpha_table(cfg, alphas, rs, out);
    }
    if (*gt) {
      if (alphas.empty()) alphas = range(1.2, 1.8, 0.2);
      if (rs.empty()) rs = range(0.4, 1.8, 0.2);
      return cmd_giie_table(cfg, alphas, rs, out, err);
    }
    if (*gm) {
      if (sigmas.empty()) sigmas = range(0.0, 8.0, 0.5);
      return cmd_giie_mix(cfg, sigmas, mix_alpha, r, out, err);
    }
    if (*sb) {
      if (laws.empty()) laws = {"gaussian:1", "laplace:1", "cauchy:1"};
      if (alphas.empty()) alphas = {1.5, 2.0};
      return cmd_sum_bound(cfg, laws, alphas, gamma, out, err);
    }
    if (*db) {
      if (laws.empty()) laws = {"sas:1.5:1", "laplace:1", "gaussian:1+sas:1.2:0.5"};
      if (etas.empty()) etas = {0.2, 0.5};
      return cmd_debruijn(cfg, laws, alpha, gamma, etas, tol, out, err);
    }
    if (*cap) return cmd_capacity(cfg, ChannelSpec{alpha, gamma, A, d}, mc, out);
    if (*crb) {
      EstimatorConfig ec;
      ec.estimator = parse_estimator(estimator);
      ec.noise = StableParams::symmetric(alpha, gamma);
      ec.trials = trials;
      ec.samples_per_trial = n;
      ec.seed = cfg.seed;
      ec.K = K;
      return cmd_crb_bench(cfg, ec, errors_csv, out, err);
    }
    if (*suite) return cmd_suite(cfg, out, err);
    out << app.help();
    return exit_config;
  } catch (const std::exception& e) {
    err << "stable-info: " << e.what() << '\n';
    return code_for(e);
  }
}

}  // namespace stable_info
