#pragma once

/**
 * @file asymfunc.hpp
 * @brief Asymptotic functions: a representative expression tree on a domain,
 *        evaluated at nearstandard points.
 *
 * The value of F = [f] at x = [xi] is the class of f(xi). Here f is the tree
 * and xi the point's series; evaluation is exact series arithmetic, with every
 * primitive lifted by its Taylor expansion (or its infinite-argument rule).
 *
 * Leaves are read at a working order. When factors of negative valuation
 * (s^-1 in a mollified kernel, say) eat into the known precision, the working
 * order is raised and the tree re-evaluated until the value is known to the
 * requested order. Values are always reported at that order.
 */

#include <array>
#include <complex>
#include <unordered_map>
#include <vector>

#include "rhocalc/asymvec.hpp"
#include "rhocalc/complex.hpp"
#include "rhocalc/config.hpp"
#include "rhocalc/expr.hpp"
#include "rhocalc/primitives.hpp"

namespace rhocalc {

/// A representative tree together with the open set it lives on.
struct AsymptoticFunction {
  Expr expr;
  DomainSpec dom;
};

inline AsymptoticFunction operator+(const AsymptoticFunction& f, const AsymptoticFunction& g) {
  return {f.expr + g.expr, f.dom};
}
inline AsymptoticFunction operator-(const AsymptoticFunction& f, const AsymptoticFunction& g) {
  return {f.expr - g.expr, f.dom};
}
inline AsymptoticFunction operator*(const AsymptoticFunction& f, const AsymptoticFunction& g) {
  return {f.expr * g.expr, f.dom};
}

inline AsymptoticFunction differentiate(const AsymptoticFunction& f, const MultiIndex& alpha) {
  return {differentiate(f.expr, alpha), f.dom};
}

/// Symbolic gradient, one tree per coordinate.
inline std::vector<Expr> gradient(const Expr& e, std::size_t d) {
  std::vector<Expr> out;
  for (std::size_t i = 0; i < d; ++i) out.push_back(differentiate(e, i));
  return out;
}

namespace detail {

class Evaluator {
 public:
  Evaluator(const AsymptoticPoint& point, Exponent work, double tau)
      : point_(point), work_(work), tau_(tau) {}

  AsymptoticComplex eval(const Expr& e) {
    if (auto it = memo_.find(e.get()); it != memo_.end()) return it->second;
    AsymptoticComplex value = std::visit([&](const auto& n) { return visit(n); }, e.node().value);
    memo_.emplace(e.get(), value);
    return value;
  }

 private:
  AsymptoticComplex visit(const Var& n) {
    if (n.index >= point_.dimension()) {
      throw UnboundVariable("variable index " + std::to_string(n.index) + " on a " +
                            std::to_string(point_.dimension()) + "-dimensional point");
    }
    return AsymptoticComplex(point_.coordinate(n.index, work_, tau_));
  }
  AsymptoticComplex visit(const Const& n) { return AsymptoticComplex::constant(n.value, work_, tau_); }
  AsymptoticComplex visit(const RhoPow& n) {
    return AsymptoticComplex(AsymptoticScalar::monomial(1.0, n.exp, work_, tau_));
  }
  AsymptoticComplex visit(const Add& n) { return cadd(eval(n.lhs), eval(n.rhs), tau_); }
  AsymptoticComplex visit(const Mul& n) { return cmul(eval(n.lhs), eval(n.rhs), tau_); }
  AsymptoticComplex visit(const IntPow& n) { return cint_pow(eval(n.base), n.power, tau_); }
  AsymptoticComplex visit(const RatPow& n) {
    const auto base = eval(n.base);
    if (!base.is_real()) throw DomainError("rational power of a non-real value");
    return AsymptoticComplex(pow_positive(base.re(), n.power, tau_));
  }
  AsymptoticComplex visit(const Comp& n) {
    const auto arg = eval(n.arg);
    if (!arg.is_real()) {
      throw DomainError(std::string(name(n.fn)) + " applied to a non-real value");
    }
    return AsymptoticComplex(lift_analytic(n.fn, arg.re(), tau_));
  }

  const AsymptoticPoint& point_;
  Exponent work_;
  double tau_;
  std::unordered_map<const Node*, AsymptoticComplex> memo_;
};

inline constexpr int kMaxBoostRounds = 6;

}  // namespace detail

/// Value of the tree at p, known to cfg.order when reachable. No domain check.
inline AsymptoticComplex evaluate(const Expr& e, const AsymptoticPoint& p, const Config& cfg = {}) {
  Exponent work = cfg.order;
  AsymptoticComplex result;
  for (int round = 0;; ++round) {
    try {
      result = detail::Evaluator(p, work, cfg.tau).eval(e);
    } catch (const NullDivision&) {
      // a divisor may only look null because too few terms were kept
      if (round >= detail::kMaxBoostRounds) throw;
      work += max(cfg.order, Exponent(1));
      continue;
    }
    if (result.order() >= cfg.order || round >= detail::kMaxBoostRounds) break;
    work += Exponent((cfg.order - result.order()).ceil());
  }
  return result.truncated(cfg.order, cfg.tau);
}

/// Value F(x) of an asymptotic function at a nearstandard point.
inline AsymptoticComplex evaluate(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                  const Config& cfg = {}) {
  if (p.dimension() != f.dom.dimension()) {
    throw OutsideDomain("point of dimension " + std::to_string(p.dimension()) + " for " +
                        f.dom.name());
  }
  if (!f.dom.contains(p.standard_part())) {
    throw OutsideDomain("standard part outside " + f.dom.name());
  }
  return evaluate(f.expr, p, cfg);
}

/// sigma(f) for a standard primitive: the tree p(x_0).
inline AsymptoticFunction lift_standard(Primitive p, const DomainSpec& dom) {
  return {expr::compose(p, expr::var(0)), dom};
}

/// sigma(f) for the polynomial sum_k coeffs[k] x^k.
inline AsymptoticFunction lift_polynomial(const std::vector<double>& coeffs, const DomainSpec& dom) {
  Expr out = expr::constant(coeffs.empty() ? 0.0 : coeffs[0]);
  for (std::size_t k = 1; k < coeffs.size(); ++k) {
    if (coeffs[k] == 0.0) continue;
    const Expr mono = k == 1 ? expr::var(0) : expr::int_pow(expr::var(0), static_cast<std::int64_t>(k));
    out = out + expr::constant(coeffs[k]) * mono;
  }
  return {out, dom};
}

/// delta_rho(x) = s^{-1} gauss(x / s).
inline AsymptoticFunction embed_delta(const DomainSpec& dom) {
  if (dom.dimension() != 1) throw Error("delta embedding is one-dimensional");
  return {expr::delta_kernel(expr::var(0)), dom};
}

/// H_rho(x) = gausscdf(x / s).
inline AsymptoticFunction embed_heaviside(const DomainSpec& dom) {
  if (dom.dimension() != 1) throw Error("heaviside embedding is one-dimensional");
  return {expr::heaviside_kernel(expr::var(0)), dom};
}

/// The function with the value c at every point: a tree without variables.
inline AsymptoticFunction constant_function(const AsymptoticComplex& c, const DomainSpec& dom) {
  std::vector<Exponent> exps;
  for (const auto& t : c.re().terms()) exps.push_back(t.exp);
  for (const auto& t : c.im().terms()) exps.push_back(t.exp);
  std::sort(exps.begin(), exps.end());
  exps.erase(std::unique(exps.begin(), exps.end()), exps.end());
  Expr out = expr::constant(0.0);
  bool first = true;
  for (Exponent e : exps) {
    Expr term = expr::constant(c.coefficient(e));
    if (e != 0) term = term * expr::rho_pow(e);
    out = first ? term : out + term;
    first = false;
  }
  return {out, dom};
}

/// Sample points of a domain: each sampler point with the infinitesimal offsets
/// {0, s, 0.37 s^2} applied to every coordinate.
inline std::vector<AsymptoticPoint> sample_points(const DomainSpec& dom, std::uint64_t seed,
                                                  std::size_t count, Exponent order) {
  std::vector<AsymptoticPoint> out;
  const std::array<AsymptoticScalar, 3> offsets = {
      AsymptoticScalar::zero(order), AsymptoticScalar::monomial(1.0, 1, order),
      AsymptoticScalar::monomial(0.37, 2, order)};
  for (std::size_t i = 0; i < count; ++i) {
    const auto x = dom.sample(seed, i);
    for (const auto& off : offsets) {
      out.emplace_back(x, AsymptoticVector(std::vector<AsymptoticScalar>(x.size(), off)));
    }
  }
  return out;
}

/// All derivative trees d^alpha e with |alpha| <= depth.
inline std::vector<Expr> derivative_family(const Expr& e, std::size_t d, std::size_t depth) {
  std::vector<Expr> out;
  for (const auto& alpha : multi_indices(d, depth)) out.push_back(differentiate(e, alpha));
  return out;
}

namespace detail {

inline SeriesVerdict null_verdict(const std::vector<Expr>& family, const AsymptoticPoint& p,
                                  const Config& cfg) {
  SeriesVerdict verdict = SeriesVerdict::Holds;
  for (const auto& tree : family) {
    const auto v = evaluate(tree, p, cfg);
    if (!v.is_null()) return SeriesVerdict::Fails;
    if (v.order() < cfg.order) verdict = SeriesVerdict::IndistinguishableAtOrder;
  }
  return verdict;
}

}  // namespace detail

/// Holds iff every derivative of order <= depth is null at p. A null value that
/// could not be resolved to the requested order leaves the verdict undecided.
inline SeriesVerdict is_null_at(const AsymptoticFunction& f, const AsymptoticPoint& p,
                                std::size_t depth, const Config& cfg = {}) {
  if (!f.dom.contains(p.standard_part())) throw OutsideDomain("standard part outside " + f.dom.name());
  return detail::null_verdict(derivative_family(f.expr, f.dom.dimension(), depth), p, cfg);
}

/// Sampled equality in the factor algebra: F - G null with its derivatives
/// at the sample points.
inline SeriesVerdict equal_mod_null(const AsymptoticFunction& f, const AsymptoticFunction& g,
                                    std::size_t samples, std::size_t depth, const Config& cfg = {}) {
  if (f.dom.dimension() != g.dom.dimension()) throw Error("functions live in different dimensions");
  const auto family = derivative_family(f.expr - g.expr, f.dom.dimension(), depth);
  SeriesVerdict verdict = SeriesVerdict::Holds;
  for (const auto& p : sample_points(f.dom, cfg.seed, samples, cfg.order)) {
    verdict = conjunction(verdict, detail::null_verdict(family, p, cfg));
    if (verdict == SeriesVerdict::Fails) break;
  }
  return verdict;
}

}  // namespace rhocalc
