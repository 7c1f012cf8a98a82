#pragma once

/**
 * @file calculus.hpp
 * @brief Pointwise calculus of asymptotic functions as runnable checks.
 *
 * Limits in the interval topology are checked in their quantifier form: for
 * each target neighbourhood s^n, search the smallest ball index m such that
 * every probe h in B_m keeps the tested quantity strictly below s^n. The
 * universally quantified h is replaced by a finite probe family (valuations
 * 1..V, coefficients {1, -1, 0.37}, coordinate axes and the diagonal); reports
 * carry that census.
 */

#include <cmath>
#include <cstdint>
#include <functional>
#include <numbers>
#include <optional>
#include <string>
#include <vector>

#include "rhocalc/asymfunc.hpp"
#include "rhocalc/series_io.hpp"

namespace rhocalc {

struct ProbeFamily {
  std::vector<AsymptoticVector> probes;
  std::int64_t max_valuation = 0;
  std::vector<double> coefficients;
};

/// Probes c s^v along every axis (and the diagonal when d > 1) for
/// v = 1..max_valuation and c in `coefficients`.
inline ProbeFamily make_probes(std::size_t d, std::int64_t max_valuation, Exponent order,
                               std::vector<double> coefficients = {1.0, -1.0, 0.37}) {
  ProbeFamily family;
  family.max_valuation = max_valuation;
  family.coefficients = coefficients;
  for (std::int64_t v = 1; v <= max_valuation; ++v) {
    for (double c : coefficients) {
      const auto mono = AsymptoticScalar::monomial(c, v, order);
      for (std::size_t axis = 0; axis < d; ++axis) {
        std::vector<AsymptoticScalar> coords(d, AsymptoticScalar::zero(order));
        coords[axis] = mono;
        family.probes.emplace_back(std::move(coords));
      }
      if (d > 1) family.probes.emplace_back(std::vector<AsymptoticScalar>(d, mono));
    }
  }
  return family;
}

/// Default family for a check up to n_max: valuations 1..n_max+3, so that
/// every witness up to n_max + 2 is tested on a non-empty ball.
inline ProbeFamily default_probes(std::size_t d, std::int64_t n_max, Exponent order) {
  return make_probes(d, n_max + 3, order);
}

struct Witness {
  std::int64_t n = 0;
  std::optional<std::int64_t> m;
  std::string failure;
};

struct LimitReport {
  std::string check;
  std::int64_t n_max = 0;
  std::vector<Witness> witnesses;
  SeriesVerdict verdict = SeriesVerdict::Holds;
  std::size_t probe_count = 0;
  std::int64_t max_probe_valuation = 0;
  std::vector<double> probe_coefficients;
  std::uint64_t seed = 0;
};

inline Json to_json(const LimitReport& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) {
    Json item{{"n", w.n}};
    item["m"] = w.m ? Json(*w.m) : Json(nullptr);
    if (!w.failure.empty()) item["failure"] = w.failure;
    witnesses.push_back(item);
  }
  Json coeffs = Json::array();
  for (double c : r.probe_coefficients) coeffs.push_back(c);
  return Json{{"check", r.check},
              {"n_max", r.n_max},
              {"witnesses", witnesses},
              {"verdict", to_string(r.verdict)},
              {"probes",
               Json{{"count", r.probe_count},
                    {"max_valuation", r.max_probe_valuation},
                    {"coefficients", coeffs}}},
              {"seed", r.seed}};
}

namespace detail {

// Working order for quotient-style checks: enough to compare against s^n_max
// after dividing by the smallest probe.
inline Config check_config(const Config& cfg, std::int64_t n_max, std::int64_t max_valuation) {
  Config work = cfg;
  work.order = max(cfg.order, Exponent(n_max + 2 * max_valuation + 2));
  return work;
}

inline std::vector<AsymptoticVector> restamp(const std::vector<AsymptoticVector>& probes,
                                             Exponent order, double tau) {
  std::vector<AsymptoticVector> out;
  for (const auto& h : probes) {
    std::vector<AsymptoticScalar> coords;
    for (const auto& c : h.coords()) coords.push_back(c.restamped(order, tau));
    out.emplace_back(std::move(coords), tau);
  }
  return out;
}

inline LimitReport search_witnesses(std::string check, std::int64_t n_max, const ProbeFamily& family,
                                    const std::vector<AsymptoticVector>& probes,
                                    const std::vector<AsymptoticScalar>& quantity, const Config& cfg) {
  LimitReport report;
  report.check = std::move(check);
  report.n_max = n_max;
  report.probe_count = probes.size();
  report.max_probe_valuation = family.max_valuation;
  report.probe_coefficients = family.coefficients;
  report.seed = cfg.seed;

  // deepest ball containing each probe (-1: none)
  std::vector<std::int64_t> deepest(probes.size(), -1);
  std::int64_t top = -1;
  for (std::size_t j = 0; j < probes.size(); ++j) {
    for (std::int64_t m = 0; m <= family.max_valuation + 1; ++m) {
      if (in_ball(probes[j], m, cfg.tau) != SeriesVerdict::Holds) break;
      deepest[j] = m;
    }
    top = std::max(top, deepest[j]);
  }

  for (std::int64_t n = 1; n <= n_max; ++n) {
    const auto target = AsymptoticScalar::monomial(1.0, n, cfg.order);
    std::vector<SeriesVerdict> below(probes.size());
    for (std::size_t j = 0; j < probes.size(); ++j) {
      below[j] = strictly_below(quantity[j], target, cfg.tau);
    }
    Witness w{n, std::nullopt, {}};
    SeriesVerdict last = SeriesVerdict::Fails;
    for (std::int64_t m = 0; m <= top; ++m) {
      SeriesVerdict all = SeriesVerdict::Holds;
      for (std::size_t j = 0; j < probes.size(); ++j) {
        if (deepest[j] >= m) all = conjunction(all, below[j]);
      }
      last = all;
      if (all == SeriesVerdict::Holds) {
        w.m = m;
        break;
      }
    }
    if (!w.m) {
      w.failure = top < 0 ? "no probe lies in any tested ball"
                          : "no tested ball B_m forces the quantity below s^" + std::to_string(n);
      report.verdict = conjunction(report.verdict, top < 0 ? SeriesVerdict::Fails : last);
    }
    report.witnesses.push_back(std::move(w));
  }
  return report;
}

}  // namespace detail

/// lim_{h -> 0} F(x + h) = F(x): quantity |F(p+h) - F(p)|.
inline LimitReport continuity_check(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                    std::int64_t n_max, const ProbeFamily& family,
                                    const Config& cfg = {}) {
  const Config work = detail::check_config(cfg, n_max, family.max_valuation);
  const auto probes = detail::restamp(family.probes, work.order, work.tau);
  const auto base = evaluate(f, p, work);
  std::vector<AsymptoticScalar> quantity;
  for (const auto& h : probes) {
    quantity.push_back(cabs(csub(evaluate(f, p.shifted(h, work.tau), work), base, work.tau), work.tau));
  }
  return detail::search_witnesses("continuity", n_max, family, probes, quantity, work);
}

inline LimitReport continuity_check(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                    std::int64_t n_max, const Config& cfg = {}) {
  return continuity_check(f, p, n_max, default_probes(f.dom.dimension(), n_max, cfg.order), cfg);
}

/// First-order Taylor remainder: |F(p+h) - F(p) - grad F(p) . h| / |h| -> 0.
inline LimitReport differentiability_check(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                           std::int64_t n_max, const ProbeFamily& family,
                                           const Config& cfg = {}) {
  const Config work = detail::check_config(cfg, n_max, family.max_valuation);
  const auto probes = detail::restamp(family.probes, work.order, work.tau);
  const auto base = evaluate(f, p, work);
  std::vector<AsymptoticComplex> grad;
  for (const auto& g : gradient(f.expr, f.dom.dimension())) grad.push_back(evaluate(g, p, work));
  std::vector<AsymptoticScalar> quantity;
  for (const auto& h : probes) {
    auto residual = csub(evaluate(f, p.shifted(h, work.tau), work), base, work.tau);
    for (std::size_t i = 0; i < grad.size(); ++i) {
      residual = csub(residual, cmul(grad[i], AsymptoticComplex(h[i]), work.tau), work.tau);
    }
    quantity.push_back(mul(cabs(residual, work.tau), inv(norm(h, work.tau), work.tau), work.tau));
  }
  return detail::search_witnesses("differentiability", n_max, family, probes, quantity, work);
}

inline LimitReport differentiability_check(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                           std::int64_t n_max, const Config& cfg = {}) {
  return differentiability_check(f, p, n_max, default_probes(f.dom.dimension(), n_max, cfg.order),
                                 cfg);
}

/// (F(p+h) - F(p)) / h for a one-dimensional F.
inline AsymptoticComplex derivative_quotient(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                             const AsymptoticScalar& h, const Config& cfg = {}) {
  if (f.dom.dimension() != 1) throw Error("derivative quotient needs a one-dimensional function");
  if (h.is_null()) throw NullDivision("increment is null at order " + h.order().to_string());
  Config work = cfg;
  work.order = cfg.order + Exponent(2 * std::max<std::int64_t>(0, h.valuation().ceil()));
  const auto step = h.restamped(work.order, work.tau);
  const auto diff = csub(evaluate(f, p.shifted(AsymptoticVector{step}, work.tau), work),
                         evaluate(f, p, work), work.tau);
  return cmul(diff, AsymptoticComplex(inv(step, work.tau)), work.tau).truncated(cfg.order, cfg.tau);
}

/// Pointwise image V(F): x -> F(x).
class ValueMap {
 public:
  ValueMap(AsymptoticFunction f, Config cfg) : f_(std::move(f)), cfg_(std::move(cfg)) {}

  AsymptoticComplex operator()(const AsymptoticPoint& x) const { return evaluate(f_, x, cfg_); }

  const AsymptoticFunction& function() const noexcept { return f_; }

 private:
  AsymptoticFunction f_;
  Config cfg_;
};

inline ValueMap value_map(const AsymptoticFunction& f, const Config& cfg = {}) { return {f, cfg}; }

struct GradientSample {
  AsymptoticPoint point;
  std::vector<AsymptoticComplex> gradient;
};

struct ScalarReport {
  SeriesVerdict is_scalar = SeriesVerdict::Fails;
  std::optional<AsymptoticComplex> constant;
  std::optional<AsymptoticFunction> witness;  ///< constant_function(C), present with `constant`
  std::vector<GradientSample> gradient_evidence;
};

/// Detects scalars: the gradient is null (with derivatives up to cfg.deriv_depth)
/// at every sample point, and then the values agree with C = F(x_0) everywhere.
inline ScalarReport scalar_detect(const AsymptoticFunction& f, std::size_t samples,
                                  const Config& cfg = {}) {
  if (!f.dom.arcwise_connected()) {
    throw NotConnected(f.dom.name() + " is not arcwise connected");
  }
  const std::size_t d = f.dom.dimension();
  std::vector<std::vector<Expr>> families;
  const auto grad = gradient(f.expr, d);
  for (const auto& g : grad) families.push_back(derivative_family(g, d, cfg.deriv_depth));

  ScalarReport report;
  SeriesVerdict verdict = SeriesVerdict::Holds;
  const auto points = sample_points(f.dom, cfg.seed, samples, cfg.order);
  for (const auto& p : points) {
    GradientSample evidence{p, {}};
    for (const auto& g : grad) evidence.gradient.push_back(evaluate(g, p, cfg));
    report.gradient_evidence.push_back(std::move(evidence));
    for (const auto& family : families) verdict = conjunction(verdict, detail::null_verdict(family, p, cfg));
  }
  if (verdict == SeriesVerdict::Holds) {
    const auto c = evaluate(f, points.front(), cfg);
    for (const auto& p : points) {
      if (!csub(evaluate(f, p, cfg), c, cfg.tau).is_null()) {
        verdict = SeriesVerdict::Fails;
        break;
      }
    }
    if (verdict == SeriesVerdict::Holds) {
      report.constant = c;
      report.witness = constant_function(c, f.dom);
    }
  }
  report.is_scalar = verdict;
  return report;
}

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// Gauss-Legendre rule on [0, 1]; exact for polynomials of degree <= 2n - 1.
inline QuadratureRule gauss_legendre(std::size_t n) {
  if (n < 1) throw Error("quadrature needs at least one node");
  QuadratureRule rule;
  rule.nodes.resize(n);
  rule.weights.resize(n);
  for (std::size_t i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (static_cast<double>(i) + 0.75) / (static_cast<double>(n) + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = x;
      for (std::size_t k = 2; k <= n; ++k) {
        const double pk = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / static_cast<double>(k);
        p0 = p1;
        p1 = pk;
      }
      dp = static_cast<double>(n) * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    rule.nodes[i] = 0.5 * (1.0 - x);
    rule.nodes[n - 1 - i] = 0.5 * (1.0 + x);
    rule.weights[i] = 0.5 * w;
    rule.weights[n - 1 - i] = 0.5 * w;
  }
  return rule;
}

/// Integral of grad F along the straight segment p1 -> p2, by Gauss-Legendre
/// quadrature over standard nodes with series-valued integrand.
inline AsymptoticComplex line_integral_gradient(const AsymptoticFunction& f, const AsymptoticPoint& p1,
                                                const AsymptoticPoint& p2, std::size_t nodes,
                                                const Config& cfg = {}) {
  if (nodes < 2) throw Error("line integral needs at least two quadrature nodes");
  const std::size_t d = f.dom.dimension();
  if (p1.dimension() != d || p2.dimension() != d) throw Error("segment dimension mismatch");
  const auto& x1 = p1.standard_part();
  const auto& x2 = p2.standard_part();
  constexpr int kChecks = 64;
  for (int k = 0; k <= kChecks; ++k) {
    const double t = static_cast<double>(k) / kChecks;
    std::vector<double> x(d);
    for (std::size_t i = 0; i < d; ++i) x[i] = (1.0 - t) * x1[i] + t * x2[i];
    if (!f.dom.contains(x)) throw OutsideDomain("segment leaves " + f.dom.name());
  }

  const auto grad = gradient(f.expr, d);
  std::vector<AsymptoticComplex> displacement;
  for (std::size_t i = 0; i < d; ++i) {
    displacement.emplace_back(sub(p2.coordinate(i, cfg.order, cfg.tau), p1.coordinate(i, cfg.order, cfg.tau), cfg.tau));
  }
  const auto rule = gauss_legendre(nodes);
  AsymptoticComplex total = AsymptoticComplex::zero(cfg.order);
  for (std::size_t k = 0; k < nodes; ++k) {
    const double t = rule.nodes[k];
    std::vector<double> x(d);
    std::vector<AsymptoticScalar> h;
    for (std::size_t i = 0; i < d; ++i) {
      x[i] = (1.0 - t) * x1[i] + t * x2[i];
      h.push_back(add(scaled(p1.infinitesimal_part()[i], 1.0 - t, 0.0),
                      scaled(p2.infinitesimal_part()[i], t, 0.0), cfg.tau));
    }
    const AsymptoticPoint at(x, AsymptoticVector(std::move(h), cfg.tau));
    AsymptoticComplex integrand = AsymptoticComplex::zero(cfg.order);
    for (std::size_t i = 0; i < d; ++i) {
      integrand = cadd(integrand, cmul(evaluate(grad[i], at, cfg), displacement[i], cfg.tau), cfg.tau);
    }
    total = cadd(total, cscale(integrand, rule.weights[k], cfg.tau), cfg.tau);
  }
  return total.truncated(cfg.order, cfg.tau);
}

}  // namespace rhocalc
