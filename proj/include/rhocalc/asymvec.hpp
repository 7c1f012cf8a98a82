#pragma once

/**
 * @file asymvec.hpp
 * @brief Asymptotic vectors, their norm, the neighbourhood balls B_n, and
 *        nearstandard points x + h of an open domain.
 */

#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

#include "rhocalc/complex.hpp"
#include "rhocalc/domain.hpp"
#include "rhocalc/scalar.hpp"

namespace rhocalc {

/// d-tuple of asymptotic scalars sharing one order.
class AsymptoticVector {
 public:
  AsymptoticVector() = default;
  explicit AsymptoticVector(std::vector<AsymptoticScalar> coords, double tau = kDefaultTau)
      : coords_(std::move(coords)) {
    if (coords_.empty()) return;
    Exponent order = coords_.front().order();
    for (const auto& c : coords_) order = min(order, c.order());
    for (auto& c : coords_) c = c.truncated(order, tau);
  }
  AsymptoticVector(std::initializer_list<AsymptoticScalar> coords)
      : AsymptoticVector(std::vector<AsymptoticScalar>(coords)) {}

  static AsymptoticVector zero(std::size_t d, Exponent order = kDefaultOrder) {
    return AsymptoticVector(std::vector<AsymptoticScalar>(d, AsymptoticScalar::zero(order)));
  }

  std::size_t dimension() const noexcept { return coords_.size(); }
  const AsymptoticScalar& operator[](std::size_t i) const { return coords_.at(i); }
  const std::vector<AsymptoticScalar>& coords() const noexcept { return coords_; }
  Exponent order() const noexcept { return coords_.empty() ? Exponent(kDefaultOrder) : coords_.front().order(); }

  bool is_null() const noexcept {
    for (const auto& c : coords_) {
      if (!c.is_null()) return false;
    }
    return true;
  }

  friend bool operator==(const AsymptoticVector&, const AsymptoticVector&) = default;

 private:
  std::vector<AsymptoticScalar> coords_;
};

inline AsymptoticVector add(const AsymptoticVector& u, const AsymptoticVector& v,
                            double tau = kDefaultTau) {
  if (u.dimension() != v.dimension()) throw Error("vector dimensions differ");
  std::vector<AsymptoticScalar> out;
  for (std::size_t i = 0; i < u.dimension(); ++i) out.push_back(add(u[i], v[i], tau));
  return AsymptoticVector(std::move(out), tau);
}

inline AsymptoticVector sub(const AsymptoticVector& u, const AsymptoticVector& v,
                            double tau = kDefaultTau) {
  if (u.dimension() != v.dimension()) throw Error("vector dimensions differ");
  std::vector<AsymptoticScalar> out;
  for (std::size_t i = 0; i < u.dimension(); ++i) out.push_back(sub(u[i], v[i], tau));
  return AsymptoticVector(std::move(out), tau);
}

inline AsymptoticVector mul(const AsymptoticScalar& a, const AsymptoticVector& v,
                            double tau = kDefaultTau) {
  std::vector<AsymptoticScalar> out;
  for (const auto& c : v.coords()) out.push_back(mul(a, c, tau));
  return AsymptoticVector(std::move(out), tau);
}

/// Euclidean norm; the null series when every coordinate is null. For d = 1
/// this is the absolute value.
inline AsymptoticScalar norm(const AsymptoticVector& v, double tau = kDefaultTau) {
  if (v.dimension() == 1) return abs(v[0]);
  AsymptoticScalar sum = AsymptoticScalar::zero(v.order() + v.order());
  for (const auto& c : v.coords()) sum = add(sum, mul(c, c, tau), tau);
  if (sum.is_null()) return AsymptoticScalar::zero(min(sum.order(), v.order()));
  return sqrt_positive(sum, tau);
}

inline Classification classify_vector(const AsymptoticVector& v, double tau = kDefaultTau) {
  return classify(norm(v, tau));
}

/// Membership in B_n = { ||v|| < s^n }. A norm that coincides with s^n through
/// the horizon is not strictly inside.
inline SeriesVerdict in_ball(const AsymptoticVector& v, std::int64_t n, double tau = kDefaultTau) {
  if (n < 0) throw Error("ball index must be non-negative");
  const auto r = norm(v, tau);
  return strictly_below(r, AsymptoticScalar::monomial(1.0, n, r.order()), tau);
}

/// A point x + h of the nearstandard set: x standard in the domain, h infinitesimal.
///
/// The infinitesimal part is taken to be exact as stored: its order records
/// which terms were kept, and evaluation may read it at any working order.
class AsymptoticPoint {
 public:
  AsymptoticPoint() = default;
  AsymptoticPoint(std::vector<double> standard, AsymptoticVector infinitesimal)
      : standard_(std::move(standard)), infinitesimal_(std::move(infinitesimal)) {
    if (infinitesimal_.dimension() != standard_.size()) {
      throw Error("standard and infinitesimal parts differ in dimension");
    }
  }

  /// A standard point (zero infinitesimal part).
  static AsymptoticPoint standard(std::vector<double> x, Exponent order = kDefaultOrder) {
    const auto d = x.size();
    return {std::move(x), AsymptoticVector::zero(d, order)};
  }

  std::size_t dimension() const noexcept { return standard_.size(); }
  const std::vector<double>& standard_part() const noexcept { return standard_; }
  const AsymptoticVector& infinitesimal_part() const noexcept { return infinitesimal_; }

  /// Coordinate i as a series x_i + h_i stamped at `order`.
  AsymptoticScalar coordinate(std::size_t i, Exponent order, double tau = kDefaultTau) const {
    std::vector<Term> raw = infinitesimal_[i].terms();
    raw.push_back(Term{0, standard_.at(i)});
    return normalize(std::move(raw), order, tau);
  }

  /// x + (h + delta). delta must be infinitesimal for the result to stay nearstandard.
  AsymptoticPoint shifted(const AsymptoticVector& delta, double tau = kDefaultTau) const {
    const Exponent order = max(infinitesimal_.order(), delta.order());
    std::vector<AsymptoticScalar> sum;
    for (std::size_t i = 0; i < dimension(); ++i) {
      std::vector<Term> raw = infinitesimal_[i].terms();
      raw.insert(raw.end(), delta[i].terms().begin(), delta[i].terms().end());
      sum.push_back(normalize(std::move(raw), order, tau));
    }
    return {standard_, AsymptoticVector(std::move(sum), tau)};
  }

  friend bool operator==(const AsymptoticPoint&, const AsymptoticPoint&) = default;

 private:
  std::vector<double> standard_;
  AsymptoticVector infinitesimal_;
};

inline AsymptoticPoint make_nearstandard(std::vector<double> x, const AsymptoticVector& h,
                                         const DomainSpec& dom) {
  if (x.size() != dom.dimension() || h.dimension() != dom.dimension()) {
    throw Error("point dimension does not match the domain");
  }
  if (!dom.contains(x)) throw OutsideDomain("standard part outside " + dom.name());
  for (const auto& c : h.coords()) {
    if (!c.is_null() && c.valuation() <= 0) {
      throw NotInfinitesimal("infinitesimal part has a coordinate of valuation " +
                             c.valuation().to_string());
    }
  }
  return {std::move(x), h};
}

}  // namespace rhocalc
