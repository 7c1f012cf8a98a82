#pragma once

// Independent reference computations for the tests. Nothing here goes
// through the series arithmetic.

#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "rhocalc/expr.hpp"

namespace oracle {

inline constexpr long double kPi = 3.141592653589793238462643383279502884L;

inline long double inv_sqrt_pi() { return 1.0L / std::sqrt(kPi); }

/// Direct evaluation of a tree at real coordinates x with the scale s = rho.
inline std::complex<double> numeric(const rhocalc::Expr& e, const std::vector<double>& x, double rho) {
  using namespace rhocalc;
  return std::visit(
      [&](const auto& n) -> std::complex<double> {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return x.at(n.index);
        } else if constexpr (std::is_same_v<T, Const>) {
          return n.value;
        } else if constexpr (std::is_same_v<T, RhoPow>) {
          return std::pow(rho, n.exp.to_double());
        } else if constexpr (std::is_same_v<T, Add>) {
          return numeric(n.lhs, x, rho) + numeric(n.rhs, x, rho);
        } else if constexpr (std::is_same_v<T, Mul>) {
          return numeric(n.lhs, x, rho) * numeric(n.rhs, x, rho);
        } else if constexpr (std::is_same_v<T, IntPow>) {
          return std::pow(numeric(n.base, x, rho), static_cast<double>(n.power));
        } else if constexpr (std::is_same_v<T, RatPow>) {
          return std::pow(numeric(n.base, x, rho).real(), n.power.to_double());
        } else {
          const double t = numeric(n.arg, x, rho).real();
          switch (n.fn) {
            case Primitive::Exp: return std::exp(t);
            case Primitive::Log: return std::log(t);
            case Primitive::Sin: return std::sin(t);
            case Primitive::Cos: return std::cos(t);
            case Primitive::Gauss: return std::exp(-t * t) / std::sqrt(static_cast<double>(kPi));
            case Primitive::GaussCdf: return 0.5 * std::erfc(-t);
          }
          return 0.0;
        }
      },
      e.node().value);
}

/// Physicists' Hermite polynomial H_k(t): H_{k+1} = 2t H_k - 2k H_{k-1}.
inline long double hermite(int k, long double t) {
  long double h0 = 1.0L, h1 = 2.0L * t;
  if (k == 0) return h0;
  for (int j = 1; j < k; ++j) {
    const long double h2 = 2.0L * t * h1 - 2.0L * j * h0;
    h0 = h1;
    h1 = h2;
  }
  return h1;
}

/// k-th Taylor coefficient of exp(-t^2)/sqrt(pi) at t0: (-1)^k H_k(t0) g(t0) / k!.
inline long double gauss_taylor(int k, long double t0) {
  long double fact = 1.0L;
  for (int j = 2; j <= k; ++j) fact *= j;
  const long double g = std::exp(-t0 * t0) * inv_sqrt_pi();
  return ((k % 2) ? -1.0L : 1.0L) * hermite(k, t0) * g / fact;
}

/// Generalized binomial coefficient r choose k.
inline long double binomial(long double r, int k) {
  long double c = 1.0L;
  for (int j = 0; j < k; ++j) c *= (r - j) / (j + 1);
  return c;
}

/// Leading behaviour a s^e of a series quantity, or nothing when it is null.
struct Leading {
  double exp;
  double coef;
};

/// |q| < s^n for a quantity with leading behaviour `lead`.
inline bool below_power(const std::optional<Leading>& lead, int n) {
  if (!lead) return true;
  return lead->exp > n || (lead->exp == n && std::abs(lead->coef) < 1.0);
}

/// Brute-force witness search over probes c s^v: m(n) is the least m with
/// every probe in B_m = {|h| < s^m} satisfying |q(h)| < s^n.
inline std::vector<std::optional<int>> witnesses(
    int n_max, int max_v, const std::vector<double>& coefs,
    const std::function<std::optional<Leading>(double c, int v)>& quantity) {
  std::vector<std::optional<int>> out;
  for (int n = 1; n <= n_max; ++n) {
    std::optional<int> found;
    for (int m = 0; m <= max_v && !found; ++m) {
      bool all = true;
      for (int v = 1; v <= max_v && all; ++v) {
        for (double c : coefs) {
          const bool in_ball = v > m || (v == m && std::abs(c) < 1.0);
          if (in_ball && !below_power(quantity(c, v), n)) {
            all = false;
            break;
          }
        }
      }
      if (all) found = m;
    }
    out.push_back(found);
  }
  return out;
}

}  // namespace oracle
