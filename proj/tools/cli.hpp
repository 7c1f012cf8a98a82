#pragma once

// Command-line front end. `run` is the whole program; main() only forwards.

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <iomanip>
#include <iostream>
#include <optional>
#include <string>

#include "rhocalc/rhocalc.hpp"

namespace rhocalc::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitError = 1;
inline constexpr int kExitFails = 2;
inline constexpr int kExitUndecided = 3;
inline constexpr int kExitUsage = 64;

inline int exit_code(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Holds: return kExitOk;
    case SeriesVerdict::Fails: return kExitFails;
    default: return kExitUndecided;
  }
}

/// "10", "5/2" or "(5/2)".
inline Exponent parse_order(std::string text) {
  if (!text.empty() && text.front() == '(' && text.back() == ')') text = text.substr(1, text.size() - 2);
  const auto slash = text.find('/');
  std::size_t used = 0;
  try {
    if (slash == std::string::npos) {
      const auto n = std::stoll(text, &used);
      if (used == text.size()) return Exponent(n);
    } else {
      const auto num = std::stoll(text.substr(0, slash), &used);
      if (used == slash) {
        const auto den_text = text.substr(slash + 1);
        const auto den = std::stoll(den_text, &used);
        if (used == den_text.size() && den != 0) return Exponent(num, den);
      }
    }
  } catch (const std::logic_error&) {
  }
  throw Error("bad order '" + text + "'");
}

struct Options {
  std::string order_text;
  double tau = kDefaultTau;
  std::uint64_t seed = 42;
  std::size_t samples = 20;
  std::size_t depth = 3;
  std::string mollifier = "gaussian";
  bool json = false;

  std::string expr;
  std::string at;
  std::string domain;
  std::string wrt = "x";
  std::size_t times = 1;
  std::string mode = "continuity";
  std::int64_t nmax = 5;
  std::string h;
  std::string suite;
};

inline Config make_config(const Options& o) {
  Config cfg;
  if (const char* env = std::getenv("RHOCALC_ORDER"); env && *env) cfg.order = parse_order(env);
  if (!o.order_text.empty()) cfg.order = parse_order(o.order_text);
  cfg.tau = o.tau;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.deriv_depth = o.depth;
  cfg.mollifier = o.mollifier;
  cfg.validate();
  return cfg;
}

inline void emit(std::ostream& out, const Json& j) { out << dump_json(j) << "\n"; }

inline DomainSpec domain_for(const Options& o, std::size_t d) {
  return o.domain.empty() ? DomainSpec::whole_space(d) : parse_domain(o.domain);
}

inline int cmd_eval(const Options& o, const Config& cfg, std::ostream& out) {
  const auto p = parse_point(o.at, cfg.order);
  const AsymptoticFunction f{parse_expression(o.expr), domain_for(o, p.dimension())};
  const auto v = evaluate(f, p, cfg);
  if (o.json) {
    Json j;
    j["expr"] = o.expr;
    j["at"] = o.at;
    j["value"] = to_json(v);
    emit(out, j);
  } else {
    out << to_string(v) << "\n";
  }
  return kExitOk;
}

inline int cmd_diff(const Options& o, std::ostream& out) {
  const auto idx = dsl_detail::variable_index(o.wrt);
  if (!idx) throw UnboundVariable("cannot differentiate with respect to '" + o.wrt + "'");
  Expr d = parse_expression(o.expr);
  for (std::size_t k = 0; k < o.times; ++k) d = differentiate(d, *idx);
  if (o.json) {
    Json j;
    j["expr"] = o.expr;
    j["wrt"] = o.wrt;
    j["times"] = o.times;
    j["derivative"] = to_dsl(d);
    emit(out, j);
  } else {
    out << to_dsl(d) << "\n";
  }
  return kExitOk;
}

inline int cmd_limit(const Options& o, const Config& cfg, std::ostream& out) {
  if (o.nmax < 1) throw Error("--nmax must be at least 1");
  const auto p = parse_point(o.at, cfg.order);
  const AsymptoticFunction f{parse_expression(o.expr), domain_for(o, p.dimension())};
  const auto report = o.mode == "continuity" ? continuity_check(f, p, o.nmax, cfg)
                                             : differentiability_check(f, p, o.nmax, cfg);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    out << "check: " << report.check << "\n";
    out << "n  m\n";
    for (const auto& w : report.witnesses) {
      out << std::left << std::setw(3) << w.n;
      if (w.m) out << *w.m << "\n";
      else out << "-  " << w.failure << "\n";
    }
    out << "probes: " << report.probe_count << " (valuations 1.." << report.max_probe_valuation << ")\n";
    out << "verdict: " << to_string(report.verdict) << "\n";
  }
  return exit_code(report.verdict);
}

inline int cmd_scalar(const Options& o, const Config& cfg, std::ostream& out) {
  if (o.domain.empty()) throw Error("--domain is required");
  const auto program = parse_program(o.expr, o.domain);
  const AsymptoticFunction f{program.expr, program.domain};
  const auto report = scalar_detect(f, cfg.samples, cfg);
  if (o.json) {
    Json j;
    j["expr"] = o.expr;
    j["domain"] = program.domain.name();
    j["is_scalar"] = to_string(report.is_scalar);
    j["constant"] = report.constant ? to_json(*report.constant) : Json(nullptr);
    Json evidence = Json::array();
    for (const auto& g : report.gradient_evidence) {
      Json e;
      e["point"] = format_point(g.point);
      Json grad = Json::array();
      for (const auto& c : g.gradient) grad.push_back(to_json(c));
      e["gradient"] = std::move(grad);
      evidence.push_back(std::move(e));
    }
    j["gradient_evidence"] = std::move(evidence);
    j["seed"] = cfg.seed;
    emit(out, j);
    return exit_code(report.is_scalar);
  }
  if (report.is_scalar == SeriesVerdict::Holds) {
    out << "SCALAR C = " << to_string(*report.constant) << "\n";
  } else {
    out << (report.is_scalar == SeriesVerdict::Fails ? "NOT SCALAR" : "UNDECIDED") << "\n";
    std::size_t shown = 0;
    for (const auto& g : report.gradient_evidence) {
      const bool nonnull = std::any_of(g.gradient.begin(), g.gradient.end(),
                                       [](const AsymptoticComplex& c) { return !c.is_null(); });
      if (!nonnull) continue;
      out << "  grad at " << format_point(g.point) << ":";
      for (const auto& c : g.gradient) out << " [" << to_string(c) << "]";
      out << "\n";
      if (++shown == 3) break;
    }
  }
  return exit_code(report.is_scalar);
}

inline int cmd_quotient(const Options& o, const Config& cfg, std::ostream& out) {
  const auto p = parse_point(o.at, cfg.order);
  const AsymptoticFunction f{parse_expression(o.expr), domain_for(o, p.dimension())};
  const Expr h_expr = parse_expression(o.h);
  if (arity(h_expr) != 0) throw Error("--h must not depend on variables");
  Config exact = cfg;
  exact.tau = 0.0;
  const auto h = evaluate(h_expr, AsymptoticPoint{}, exact);
  if (!h.is_real()) throw Error("--h must be real");
  const auto q = derivative_quotient(f, p, h.re(), cfg);
  if (o.json) {
    Json j;
    j["expr"] = o.expr;
    j["at"] = o.at;
    j["h"] = to_json(h);
    j["quotient"] = to_json(q);
    emit(out, j);
  } else {
    out << to_string(q) << "\n";
  }
  return kExitOk;
}

inline int cmd_suite(const Options& o, const Config& cfg, std::ostream& out) {
  const auto report = run_suite(o.suite, cfg);
  if (o.json) {
    emit(out, to_json(report));
  } else {
    out << "suite: " << report.suite << " (seed " << report.seed << ", order " << report.order.to_string() << ")\n";
    for (const auto& c : report.checks) {
      out << "  " << to_string(c.verdict) << "  " << c.name << " [" << c.cases << "]";
      if (!c.detail.empty()) out << "  " << c.detail;
      out << "\n";
    }
    out << "verdict: " << to_string(report.verdict()) << "\n";
  }
  return exit_code(report.verdict());
}

inline int run(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  CLI::App app{"Asymptotic series calculus over Levi-Civita expansions in the scale s"};
  app.name("rhocalc");
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  app.add_option("--order", o.order_text, "Truncation order N (integer or p/q); overrides RHOCALC_ORDER");
  app.add_option("--tau", o.tau, "Coefficient threshold below which terms are dropped");
  app.add_option("--seed", o.seed, "Seed for samplers and generators");
  app.add_option("--samples", o.samples, "Sampler points per domain");
  app.add_option("--depth", o.depth, "Derivative depth of null tests");
  app.add_option("--mollifier", o.mollifier, "Kernel family for delta and heaviside")->check(CLI::IsMember({"gaussian"}));
  app.add_flag("--json", o.json, "Machine-readable output");

  auto* eval = app.add_subcommand("eval", "Value of an expression at a point");
  eval->add_option("--expr", o.expr)->required();
  eval->add_option("--at", o.at, "Point, e.g. \"x=0.5+s^2, y=0\"")->required();
  eval->add_option("--domain", o.domain, "Domain (default R^d)");

  auto* diff = app.add_subcommand("diff", "Symbolic derivative");
  diff->add_option("--expr", o.expr)->required();
  diff->add_option("--wrt", o.wrt)->check(CLI::IsMember({"x", "y", "z"}));
  diff->add_option("--times", o.times)->check(CLI::PositiveNumber);

  auto* limit = app.add_subcommand("limit", "Continuity or differentiability witnesses");
  limit->add_option("--expr", o.expr)->required();
  limit->add_option("--at", o.at)->required();
  limit->add_option("--mode", o.mode)->check(CLI::IsMember({"continuity", "differential"}));
  limit->add_option("--nmax", o.nmax);
  limit->add_option("--domain", o.domain);

  auto* scalar = app.add_subcommand("scalar", "Scalar detection on a connected domain");
  scalar->add_option("--expr", o.expr)->required();
  scalar->add_option("--domain", o.domain)->required();

  auto* quotient = app.add_subcommand("quotient", "Difference quotient (F(p+h) - F(p)) / h");
  quotient->add_option("--expr", o.expr)->required();
  quotient->add_option("--at", o.at)->required();
  quotient->set_help_flag("--help", "Print this help message and exit");  // frees -h for --h
  quotient->add_option("--h", o.h, "Increment, e.g. \"s^2\"")->required();
  quotient->add_option("--domain", o.domain);

  auto* suite = app.add_subcommand("suite", "Randomized property suite");
  suite->add_option("--name", o.suite)->required()->check(CLI::IsMember(suite_names()));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == static_cast<int>(CLI::ExitCodes::Success)) {
      app.exit(e, out, err);
      return kExitOk;
    }
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const Config cfg = make_config(o);
    if (*eval) return cmd_eval(o, cfg, out);
    if (*diff) return cmd_diff(o, out);
    if (*limit) return cmd_limit(o, cfg, out);
    if (*scalar) return cmd_scalar(o, cfg, out);
    if (*quotient) return cmd_quotient(o, cfg, out);
    return cmd_suite(o, cfg, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
}

}  // namespace rhocalc::cli
