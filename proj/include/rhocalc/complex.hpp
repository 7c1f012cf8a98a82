#pragma once

#include <complex>

#include "rhocalc/scalar.hpp"

namespace rhocalc {

/// Element of the complex asymptotic field, re + i im. Both parts always carry
/// the same order.
class AsymptoticComplex {
 public:
  AsymptoticComplex() = default;
  AsymptoticComplex(const AsymptoticScalar& re)  // NOLINT: real embedding
      : re_(re), im_(AsymptoticScalar::zero(re.order())) {}
  AsymptoticComplex(const AsymptoticScalar& re, const AsymptoticScalar& im, double tau = kDefaultTau)
      : re_(re.truncated(im.order(), tau)), im_(im.truncated(re.order(), tau)) {}

  static AsymptoticComplex zero(Exponent order = kDefaultOrder) {
    return AsymptoticComplex(AsymptoticScalar::zero(order));
  }
  static AsymptoticComplex constant(std::complex<double> c, Exponent order = kDefaultOrder,
                                    double tau = kDefaultTau) {
    return monomial(c, 0, order, tau);
  }
  static AsymptoticComplex monomial(std::complex<double> c, Exponent exp,
                                    Exponent order = kDefaultOrder, double tau = kDefaultTau) {
    return {AsymptoticScalar::monomial(c.real(), exp, order, tau),
            AsymptoticScalar::monomial(c.imag(), exp, order, tau), tau};
  }

  const AsymptoticScalar& re() const noexcept { return re_; }
  const AsymptoticScalar& im() const noexcept { return im_; }
  Exponent order() const noexcept { return re_.order(); }
  bool is_null() const noexcept { return re_.is_null() && im_.is_null(); }
  bool is_real() const noexcept { return im_.is_null(); }

  Exponent valuation() const noexcept { return min(re_.valuation(), im_.valuation()); }

  std::complex<double> coefficient(Exponent e) const noexcept {
    return {re_.coefficient(e), im_.coefficient(e)};
  }

  AsymptoticComplex truncated(Exponent order, double tau = kDefaultTau) const {
    return {re_.truncated(order, tau), im_.truncated(order, tau), tau};
  }
  AsymptoticComplex restamped(Exponent order, double tau = kDefaultTau) const {
    return {re_.restamped(order, tau), im_.restamped(order, tau), tau};
  }

  std::complex<double> evaluate_at(double rho) const {
    return {re_.evaluate_at(rho), im_.evaluate_at(rho)};
  }

  friend bool operator==(const AsymptoticComplex&, const AsymptoticComplex&) = default;

 private:
  AsymptoticScalar re_;
  AsymptoticScalar im_;
};

inline AsymptoticComplex cadd(const AsymptoticComplex& a, const AsymptoticComplex& b,
                              double tau = kDefaultTau) {
  return {add(a.re(), b.re(), tau), add(a.im(), b.im(), tau), tau};
}

inline AsymptoticComplex csub(const AsymptoticComplex& a, const AsymptoticComplex& b,
                              double tau = kDefaultTau) {
  return {sub(a.re(), b.re(), tau), sub(a.im(), b.im(), tau), tau};
}

inline AsymptoticComplex cneg(const AsymptoticComplex& a) { return {neg(a.re()), neg(a.im())}; }

inline AsymptoticComplex cmul(const AsymptoticComplex& a, const AsymptoticComplex& b,
                              double tau = kDefaultTau) {
  if (a.is_real() && b.is_real()) {
    const auto re = mul(a.re(), b.re(), tau);
    return AsymptoticComplex(re);
  }
  return {sub(mul(a.re(), b.re(), tau), mul(a.im(), b.im(), tau), tau),
          add(mul(a.re(), b.im(), tau), mul(a.im(), b.re(), tau), tau), tau};
}

inline AsymptoticComplex cscale(const AsymptoticComplex& a, std::complex<double> c,
                                double tau = kDefaultTau) {
  if (c.imag() == 0.0) return {scaled(a.re(), c.real(), tau), scaled(a.im(), c.real(), tau), tau};
  return {sub(scaled(a.re(), c.real(), tau), scaled(a.im(), c.imag(), tau), tau),
          add(scaled(a.re(), c.imag(), tau), scaled(a.im(), c.real(), tau), tau), tau};
}

/// |a|^2 = re^2 + im^2.
inline AsymptoticScalar cnorm(const AsymptoticComplex& a, double tau = kDefaultTau) {
  if (a.is_real()) return mul(a.re(), a.re(), tau);
  return add(mul(a.re(), a.re(), tau), mul(a.im(), a.im(), tau), tau);
}

inline AsymptoticComplex cinv(const AsymptoticComplex& a, double tau = kDefaultTau) {
  if (a.is_real()) return AsymptoticComplex(inv(a.re(), tau));
  const auto inv_norm = inv(cnorm(a, tau), tau);
  return {mul(a.re(), inv_norm, tau), neg(mul(a.im(), inv_norm, tau)), tau};
}

/// Modulus. For real values this is the absolute value, computed exactly.
inline AsymptoticScalar cabs(const AsymptoticComplex& a, double tau = kDefaultTau) {
  if (a.is_null()) return AsymptoticScalar::zero(a.order());
  if (a.is_real()) return abs(a.re());
  return sqrt_positive(cnorm(a, tau), tau);
}

inline AsymptoticComplex cint_pow(const AsymptoticComplex& a, std::int64_t k,
                                  double tau = kDefaultTau) {
  if (a.is_real()) return AsymptoticComplex(int_pow(a.re(), k, tau));
  if (k < 0) return cint_pow(cinv(a, tau), -k, tau);
  AsymptoticComplex result = AsymptoticComplex::constant(1.0, a.order());
  for (std::int64_t i = 0; i < k; ++i) result = (i == 0) ? a : cmul(result, a, tau);
  return result;
}

inline AsymptoticComplex operator+(const AsymptoticComplex& a, const AsymptoticComplex& b) { return cadd(a, b); }
inline AsymptoticComplex operator-(const AsymptoticComplex& a, const AsymptoticComplex& b) { return csub(a, b); }
inline AsymptoticComplex operator*(const AsymptoticComplex& a, const AsymptoticComplex& b) { return cmul(a, b); }

}  // namespace rhocalc
