#pragma once

/**
 * @file scalar.hpp
 * @brief Truncated Levi-Civita series: the computable model of real
 *        asymptotic numbers.
 *
 * An AsymptoticScalar is a finite sum  c_1 s^{q_1} + ... + c_k s^{q_k}  with
 * q_1 < ... < q_k rational, together with a knowledge order N > q_k. Anything
 * at or beyond s^N is unknown and is treated as null; a series with no stored
 * terms is therefore "zero modulo its order", never exactly zero.
 *
 * All operations are pure. Coefficients below the zero threshold tau are
 * dropped whenever a series is normalized.
 */

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <utility>
#include <vector>

#include "rhocalc/error.hpp"
#include "rhocalc/exponent.hpp"

namespace rhocalc {

inline constexpr double kDefaultTau = 1e-12;
inline constexpr std::int64_t kDefaultOrder = 10;

struct Term {
  Exponent exp;
  double coef = 0.0;

  friend bool operator==(const Term&, const Term&) = default;
};

/// Three-way outcome of an order comparison at finite truncation.
enum class Ordering { Less, Greater, IndistinguishableAtOrder };

/// Outcome of a predicate that truncation may be unable to decide.
enum class SeriesVerdict { Holds, Fails, IndistinguishableAtOrder };

enum class Classification { Infinitesimal, FiniteAppreciable, InfinitelyLarge, NullAtOrder };

inline const char* to_string(SeriesVerdict v) {
  switch (v) {
    case SeriesVerdict::Holds: return "holds";
    case SeriesVerdict::Fails: return "fails";
    case SeriesVerdict::IndistinguishableAtOrder: return "indistinguishable-at-order";
  }
  return "?";
}

inline const char* to_string(Classification c) {
  switch (c) {
    case Classification::Infinitesimal: return "infinitesimal";
    case Classification::FiniteAppreciable: return "finite-appreciable";
    case Classification::InfinitelyLarge: return "infinitely-large";
    case Classification::NullAtOrder: return "null-at-order";
  }
  return "?";
}

/// Combines verdicts of a conjunction: any failure wins, then any undecided.
inline SeriesVerdict conjunction(SeriesVerdict a, SeriesVerdict b) {
  if (a == SeriesVerdict::Fails || b == SeriesVerdict::Fails) return SeriesVerdict::Fails;
  if (a == SeriesVerdict::IndistinguishableAtOrder || b == SeriesVerdict::IndistinguishableAtOrder) {
    return SeriesVerdict::IndistinguishableAtOrder;
  }
  return SeriesVerdict::Holds;
}

class AsymptoticScalar;
AsymptoticScalar normalize(std::vector<Term> raw, Exponent order, double tau = kDefaultTau);

class AsymptoticScalar {
 public:
  /// The null element at the default order.
  AsymptoticScalar() = default;

  static AsymptoticScalar zero(Exponent order = kDefaultOrder) {
    AsymptoticScalar a;
    a.order_ = order;
    return a;
  }
  static AsymptoticScalar constant(double c, Exponent order = kDefaultOrder,
                                   double tau = kDefaultTau) {
    return monomial(c, 0, order, tau);
  }
  static AsymptoticScalar monomial(double c, Exponent exp, Exponent order = kDefaultOrder,
                                   double tau = kDefaultTau) {
    return normalize({Term{exp, c}}, order, tau);
  }
  /// The scale s itself.
  static AsymptoticScalar scale(Exponent order = kDefaultOrder) { return monomial(1.0, 1, order); }

  const std::vector<Term>& terms() const noexcept { return terms_; }
  Exponent order() const noexcept { return order_; }
  bool is_null() const noexcept { return terms_.empty(); }

  /// Smallest stored exponent; the order itself when nothing is stored.
  Exponent valuation() const noexcept { return terms_.empty() ? order_ : terms_.front().exp; }
  double leading_coefficient() const noexcept { return terms_.empty() ? 0.0 : terms_.front().coef; }

  double coefficient(Exponent e) const noexcept {
    for (const auto& t : terms_) {
      if (t.exp == e) return t.coef;
      if (e < t.exp) break;
    }
    return 0.0;
  }

  /// Coefficient at s^0; meaningful as a standard part only for finite values.
  double standard_part() const noexcept { return coefficient(0); }

  /// Re-normalizes at min(order(), order).
  AsymptoticScalar truncated(Exponent order, double tau = kDefaultTau) const {
    return normalize(terms_, rhocalc::min(order_, order), tau);
  }

  /// Same stored terms, with the order stamp raised or lowered. Lowering drops terms.
  AsymptoticScalar restamped(Exponent order, double tau = kDefaultTau) const {
    return normalize(terms_, order, tau);
  }

  /// Partial sum evaluated at a concrete numeric value of the scale.
  double evaluate_at(double rho) const {
    double sum = 0.0;
    for (const auto& t : terms_) sum += t.coef * std::pow(rho, t.exp.to_double());
    return sum;
  }

  friend bool operator==(const AsymptoticScalar&, const AsymptoticScalar&) = default;

 private:
  friend AsymptoticScalar normalize(std::vector<Term> raw, Exponent order, double tau);

  std::vector<Term> terms_;
  Exponent order_{kDefaultOrder};
};

/// Sorts, merges equal exponents, drops everything at or beyond `order` and
/// every coefficient whose magnitude is below `tau`.
inline AsymptoticScalar normalize(std::vector<Term> raw, Exponent order, double tau) {
  std::stable_sort(raw.begin(), raw.end(),
                   [](const Term& a, const Term& b) { return a.exp < b.exp; });
  AsymptoticScalar out;
  out.order_ = order;
  out.terms_.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size();) {
    const Exponent e = raw[i].exp;
    double sum = 0.0;
    for (; i < raw.size() && raw[i].exp == e; ++i) sum += raw[i].coef;
    if (e < order && sum != 0.0 && std::abs(sum) >= tau) out.terms_.push_back(Term{e, sum});
  }
  return out;
}

namespace detail {

// Cauchy product of raw term lists, keeping only exponents below `limit`.
inline std::vector<Term> product_terms(const std::vector<Term>& a, const std::vector<Term>& b,
                                       Exponent limit) {
  std::vector<Term> raw;
  raw.reserve(a.size() * b.size());
  for (const auto& x : a) {
    for (const auto& y : b) {
      const Exponent e = x.exp + y.exp;
      if (e < limit) raw.push_back(Term{e, x.coef * y.coef});
      else break;  // b is sorted, later exponents are larger
    }
  }
  return raw;
}

inline std::vector<Term> shifted_scaled(const std::vector<Term>& a, Exponent shift, double factor) {
  std::vector<Term> out;
  out.reserve(a.size());
  for (const auto& t : a) out.push_back(Term{t.exp + shift, t.coef * factor});
  return out;
}

// Writes a = c s^q (1 + u) and returns u as raw terms (valuation > 0).
inline std::vector<Term> unit_tail(const AsymptoticScalar& a) {
  const Exponent q = a.valuation();
  const double c = a.leading_coefficient();
  std::vector<Term> u;
  for (std::size_t i = 1; i < a.terms().size(); ++i) {
    u.push_back(Term{a.terms()[i].exp - q, a.terms()[i].coef / c});
  }
  return u;
}

// Sum_k coeff(k) u^k truncated below `limit`, for u of positive valuation.
template <typename CoefficientFn>
std::vector<Term> unit_power_series(const std::vector<Term>& u, Exponent limit, double tau,
                                    CoefficientFn coeff) {
  std::vector<Term> sum{Term{0, coeff(0)}};
  std::vector<Term> power{Term{0, 1.0}};
  for (int k = 1; !u.empty(); ++k) {
    power = normalize(product_terms(power, u, limit), limit, 0.0).terms();
    if (power.empty()) break;
    const double ck = coeff(k);
    for (const auto& t : power) sum.push_back(Term{t.exp, ck * t.coef});
  }
  return normalize(std::move(sum), limit, tau).terms();
}

}  // namespace detail

inline Exponent valuation(const AsymptoticScalar& a) { return a.valuation(); }

inline Classification classify(const AsymptoticScalar& a) {
  if (a.is_null()) return Classification::NullAtOrder;
  const Exponent v = a.valuation();
  if (v < 0) return Classification::InfinitelyLarge;
  if (v == 0) return Classification::FiniteAppreciable;
  return Classification::Infinitesimal;
}

inline AsymptoticScalar add(const AsymptoticScalar& a, const AsymptoticScalar& b,
                            double tau = kDefaultTau) {
  std::vector<Term> raw = a.terms();
  raw.insert(raw.end(), b.terms().begin(), b.terms().end());
  return normalize(std::move(raw), min(a.order(), b.order()), tau);
}

inline AsymptoticScalar scaled(const AsymptoticScalar& a, double factor, double tau = kDefaultTau) {
  return normalize(detail::shifted_scaled(a.terms(), 0, factor), a.order(), tau);
}

inline AsymptoticScalar neg(const AsymptoticScalar& a) { return scaled(a, -1.0, 0.0); }

inline AsymptoticScalar sub(const AsymptoticScalar& a, const AsymptoticScalar& b,
                            double tau = kDefaultTau) {
  return add(a, neg(b), tau);
}

/// Cauchy product. The result is known to min(a.order + v(b), b.order + v(a)),
/// with the valuation of a null operand counted as its order.
inline AsymptoticScalar mul(const AsymptoticScalar& a, const AsymptoticScalar& b,
                            double tau = kDefaultTau) {
  const Exponent order = min(a.order() + b.valuation(), b.order() + a.valuation());
  return normalize(detail::product_terms(a.terms(), b.terms(), order), order, tau);
}

/// Multiplicative inverse; the result is known to a.order - 2 v(a).
inline AsymptoticScalar inv(const AsymptoticScalar& a, double tau = kDefaultTau) {
  if (a.is_null()) {
    throw NullDivision("inverse of an element that is null at order " + a.order().to_string());
  }
  const Exponent q = a.valuation();
  const double c = a.leading_coefficient();
  const Exponent relative = a.order() - q;
  const auto u = detail::unit_tail(a);
  const auto series = detail::unit_power_series(u, relative, 0.0, [](int k) {
    return (k % 2 == 0) ? 1.0 : -1.0;
  });
  return normalize(detail::shifted_scaled(series, -q, 1.0 / c), relative - q, tau);
}

inline AsymptoticScalar div(const AsymptoticScalar& a, const AsymptoticScalar& b,
                            double tau = kDefaultTau) {
  return mul(a, inv(b, tau), tau);
}

/// a^r for a with positive leading coefficient, via the binomial series of (1+u)^r.
/// The relative precision of a is preserved: the result is known to q r + (order - q).
inline AsymptoticScalar pow_positive(const AsymptoticScalar& a, Exponent r,
                                     double tau = kDefaultTau) {
  if (a.is_null()) {
    if (r > 0) return AsymptoticScalar::zero(a.order() * r);
    throw NullDivision("negative power of an element that is null at order " +
                       a.order().to_string());
  }
  if (a.leading_coefficient() <= 0.0) {
    throw NotPositive("power " + r.to_string() + " of an element with non-positive leading term");
  }
  const Exponent q = a.valuation();
  const double c = a.leading_coefficient();
  const Exponent relative = a.order() - q;
  const double rd = r.to_double();
  const auto u = detail::unit_tail(a);
  double binom = 1.0;
  int last = 0;
  const auto series = detail::unit_power_series(u, relative, 0.0, [&](int k) {
    for (; last < k; ++last) binom *= (rd - last) / (last + 1);
    return binom;
  });
  const Exponent shift = q * r;
  return normalize(detail::shifted_scaled(series, shift, std::pow(c, rd)), shift + relative, tau);
}

inline AsymptoticScalar sqrt_positive(const AsymptoticScalar& a, double tau = kDefaultTau) {
  if (a.is_null() || a.leading_coefficient() <= 0.0) {
    throw NotPositive("square root outside the positive cone");
  }
  return pow_positive(a, Exponent(1, 2), tau);
}

/// Integer power by repeated squaring; negative powers go through inv.
inline AsymptoticScalar int_pow(const AsymptoticScalar& a, std::int64_t k, double tau = kDefaultTau) {
  if (k < 0) return int_pow(inv(a, tau), -k, tau);
  if (k == 0) return AsymptoticScalar::constant(1.0, a.order());
  AsymptoticScalar result;
  AsymptoticScalar base = a;
  bool first = true;
  while (k > 0) {
    if (k & 1) {
      result = first ? base : mul(result, base, tau);
      first = false;
    }
    k >>= 1;
    if (k > 0) base = mul(base, base, tau);
  }
  return result;
}

/// Sign of the leading coefficient of b - a decides; a null difference cannot.
inline Ordering compare(const AsymptoticScalar& a, const AsymptoticScalar& b,
                        double tau = kDefaultTau) {
  const auto d = sub(b, a, tau);
  if (d.is_null()) return Ordering::IndistinguishableAtOrder;
  return d.leading_coefficient() > 0.0 ? Ordering::Less : Ordering::Greater;
}

/// a < b strictly. Agreement on a non-null leading part counts as a failure
/// (the two sides coincide through the horizon); only a pair of null values is
/// left undecided.
inline SeriesVerdict strictly_below(const AsymptoticScalar& a, const AsymptoticScalar& b,
                                    double tau = kDefaultTau) {
  switch (compare(a, b, tau)) {
    case Ordering::Less: return SeriesVerdict::Holds;
    case Ordering::Greater: return SeriesVerdict::Fails;
    case Ordering::IndistinguishableAtOrder: break;
  }
  if (a.is_null() && b.is_null()) return SeriesVerdict::IndistinguishableAtOrder;
  return SeriesVerdict::Fails;
}

inline AsymptoticScalar abs(const AsymptoticScalar& a) {
  return a.leading_coefficient() < 0.0 ? neg(a) : a;
}

inline AsymptoticScalar operator+(const AsymptoticScalar& a, const AsymptoticScalar& b) { return add(a, b); }
inline AsymptoticScalar operator-(const AsymptoticScalar& a, const AsymptoticScalar& b) { return sub(a, b); }
inline AsymptoticScalar operator-(const AsymptoticScalar& a) { return neg(a); }
inline AsymptoticScalar operator*(const AsymptoticScalar& a, const AsymptoticScalar& b) { return mul(a, b); }
inline AsymptoticScalar operator/(const AsymptoticScalar& a, const AsymptoticScalar& b) { return div(a, b); }
inline AsymptoticScalar operator*(double c, const AsymptoticScalar& a) { return scaled(a, c); }

}  // namespace rhocalc
