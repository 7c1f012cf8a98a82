#pragma once

/**
 * @file primitives.hpp
 * @brief Table of smooth primitives and their lifting to asymptotic arguments.
 *
 * A finite argument a = a0 + d (a0 standard, d infinitesimal) is lifted by the
 * Taylor series of the primitive around a0, which terminates at the knowledge
 * horizon because d has positive valuation. An infinitely large argument is
 * handled by the primitive's infinite-argument rule.
 */

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <string_view>
#include <vector>

#include "rhocalc/error.hpp"
#include "rhocalc/scalar.hpp"

namespace rhocalc {

enum class Primitive { Exp, Log, Sin, Cos, Gauss, GaussCdf };

inline constexpr std::array<Primitive, 6> kAllPrimitives = {
    Primitive::Exp, Primitive::Log, Primitive::Sin, Primitive::Cos, Primitive::Gauss,
    Primitive::GaussCdf};

/// Behaviour at an infinitely large argument of one sign.
enum class InfiniteRule {
  DecaysToZero,     ///< value is null at every order
  TendsToOne,       ///< value is 1 up to a null difference
  Diverges,         ///< value exceeds every s^-n: not moderate
  Unrepresentable,  ///< moderate, but not a Levi-Civita series (e.g. sin(1/s))
};

struct PrimitiveInfo {
  std::string_view name;
  InfiniteRule positive_side;
  InfiniteRule negative_side;
};

inline const PrimitiveInfo& info(Primitive p) {
  static const std::array<PrimitiveInfo, 6> table = {{
      {"exp", InfiniteRule::Diverges, InfiniteRule::DecaysToZero},
      {"log", InfiniteRule::Unrepresentable, InfiniteRule::Unrepresentable},
      {"sin", InfiniteRule::Unrepresentable, InfiniteRule::Unrepresentable},
      {"cos", InfiniteRule::Unrepresentable, InfiniteRule::Unrepresentable},
      {"gauss", InfiniteRule::DecaysToZero, InfiniteRule::DecaysToZero},
      {"gausscdf", InfiniteRule::TendsToOne, InfiniteRule::DecaysToZero},
  }};
  return table[static_cast<std::size_t>(p)];
}

inline std::string_view name(Primitive p) { return info(p).name; }

/// Real domain of the standard primitive.
inline bool in_domain(Primitive p, double t) {
  if (!std::isfinite(t)) return false;
  return p != Primitive::Log || t > 0.0;
}

/// gauss(t) = pi^{-1/2} e^{-t^2}; integrates to one.
inline double gauss(double t) { return std::exp(-t * t) / std::sqrt(std::numbers::pi); }

/// Antiderivative of gauss with limits 0 at -inf and 1 at +inf.
inline double gauss_cdf(double t) { return 0.5 * std::erfc(-t); }

inline double standard_value(Primitive p, double t) {
  switch (p) {
    case Primitive::Exp: return std::exp(t);
    case Primitive::Log: return std::log(t);
    case Primitive::Sin: return std::sin(t);
    case Primitive::Cos: return std::cos(t);
    case Primitive::Gauss: return gauss(t);
    case Primitive::GaussCdf: return gauss_cdf(t);
  }
  return 0.0;
}

/// Normalized Taylor coefficients p^{(k)}(t0) / k! for k = 0..max_k.
inline std::vector<double> taylor_coefficients(Primitive p, double t0, std::size_t max_k) {
  std::vector<double> c(max_k + 1, 0.0);
  switch (p) {
    case Primitive::Exp: {
      double v = std::exp(t0);
      for (std::size_t k = 0; k <= max_k; ++k) {
        c[k] = v;
        v /= static_cast<double>(k + 1);
      }
      break;
    }
    case Primitive::Log: {
      c[0] = std::log(t0);
      double inv_power = 1.0;
      for (std::size_t k = 1; k <= max_k; ++k) {
        inv_power /= t0;
        c[k] = ((k % 2 == 1) ? 1.0 : -1.0) * inv_power / static_cast<double>(k);
      }
      break;
    }
    case Primitive::Sin:
    case Primitive::Cos: {
      const double s = std::sin(t0);
      const double co = std::cos(t0);
      // derivative cycle of sin: sin, cos, -sin, -cos
      const std::array<double, 4> cycle =
          p == Primitive::Sin ? std::array<double, 4>{s, co, -s, -co}
                              : std::array<double, 4>{co, -s, -co, s};
      double inv_fact = 1.0;
      for (std::size_t k = 0; k <= max_k; ++k) {
        c[k] = cycle[k % 4] * inv_fact;
        inv_fact /= static_cast<double>(k + 1);
      }
      break;
    }
    case Primitive::Gauss:
    case Primitive::GaussCdf: {
      // gauss^{(k)}(t)/k! = (-1)^k h_k(t) gauss(t), h_k = H_k / k! (physicists' Hermite)
      const std::size_t n = p == Primitive::Gauss ? max_k : (max_k == 0 ? 0 : max_k - 1);
      std::vector<double> g(n + 1);
      const double base = gauss(t0);
      double h_prev = 1.0;
      double h = 2.0 * t0;
      for (std::size_t k = 0; k <= n; ++k) {
        double hk = 1.0;
        if (k == 1) hk = h;
        if (k >= 2) {
          const double next = (2.0 * t0 * h - 2.0 * h_prev) / static_cast<double>(k);
          h_prev = h;
          h = next;
          hk = h;
        }
        g[k] = ((k % 2 == 0) ? 1.0 : -1.0) * hk * base;
      }
      if (p == Primitive::Gauss) {
        c = g;
      } else {
        c[0] = gauss_cdf(t0);
        for (std::size_t k = 1; k <= max_k; ++k) c[k] = g[k - 1] / static_cast<double>(k);
      }
      break;
    }
  }
  return c;
}

/// Value of p at an asymptotic argument.
///
/// Finite arguments use the Taylor series around the standard part, with the
/// number of terms K minimal such that (K+1) v(a - a0) >= a.order(); the result
/// carries a.order(). Infinitely large arguments follow the primitive's rule.
inline AsymptoticScalar lift_analytic(Primitive p, const AsymptoticScalar& a,
                                      double tau = kDefaultTau) {
  const Exponent order = a.order();
  if (classify(a) == Classification::InfinitelyLarge) {
    const bool positive = a.leading_coefficient() > 0.0;
    const InfiniteRule rule = positive ? info(p).positive_side : info(p).negative_side;
    const std::string where = std::string(name(p)) + " at an infinitely large " +
                              (positive ? "positive" : "negative") + " argument";
    switch (rule) {
      case InfiniteRule::DecaysToZero: return AsymptoticScalar::zero(order);
      case InfiniteRule::TendsToOne: return AsymptoticScalar::constant(1.0, order, tau);
      case InfiniteRule::Diverges: throw NotModerate(where + " exceeds every power s^-n");
      case InfiniteRule::Unrepresentable:
        throw DomainError(where + " has no series value");
    }
  }
  const double a0 = a.standard_part();
  if (!in_domain(p, a0)) {
    throw DomainError(std::string(name(p)) + " outside its domain at standard part " +
                      std::to_string(a0));
  }
  const auto d = sub(a, AsymptoticScalar::constant(a0, order, 0.0), 0.0);
  std::size_t max_k = 0;
  if (!d.is_null()) {
    // (K+1) v >= order, solved exactly in integers
    const Exponent v = d.valuation();
    const std::int64_t top = order.num() * v.den();
    const std::int64_t bottom = v.num() * order.den();
    if (top > 0) max_k = static_cast<std::size_t>((top + bottom - 1) / bottom - 1);
  }
  const auto c = taylor_coefficients(p, a0, max_k);
  // Horner: c0 + d (c1 + d (c2 + ...))
  std::vector<Term> acc{Term{0, c[max_k]}};
  for (std::size_t k = max_k; k-- > 0;) {
    auto raw = detail::product_terms(acc, d.terms(), order);
    raw.push_back(Term{0, c[k]});
    acc = normalize(std::move(raw), order, 0.0).terms();
  }
  return normalize(std::move(acc), order, tau);
}

}  // namespace rhocalc
