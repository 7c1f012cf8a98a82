#pragma once

/**
 * @file expr.hpp
 * @brief Immutable expression trees representing asymptotic functions, and
 *        their symbolic partial derivatives.
 *
 * Nodes are shared, never mutated. Powers of the scale (RhoPow) are constants
 * under differentiation. No algebraic simplification is performed beyond
 * dropping literal zeros and ones produced by the derivative rules.
 */

#include <complex>
#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "rhocalc/exponent.hpp"
#include "rhocalc/primitives.hpp"

namespace rhocalc {

struct Node;

/// Handle to an immutable expression node.
class Expr {
 public:
  Expr() = default;
  explicit Expr(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  const Node& node() const { return *node_; }
  const Node* get() const noexcept { return node_.get(); }
  explicit operator bool() const noexcept { return static_cast<bool>(node_); }

 private:
  std::shared_ptr<const Node> node_;
};

struct Var {
  std::size_t index;
};
struct Const {
  std::complex<double> value;
};
struct RhoPow {
  Exponent exp;
};
struct Add {
  Expr lhs, rhs;
};
struct Mul {
  Expr lhs, rhs;
};
struct IntPow {
  Expr base;
  std::int64_t power;
};
/// Rational power of a value with positive leading coefficient.
struct RatPow {
  Expr base;
  Exponent power;
};
struct Comp {
  Primitive fn;
  Expr arg;
};

struct Node {
  std::variant<Var, Const, RhoPow, Add, Mul, IntPow, RatPow, Comp> value;
};

namespace expr {

template <typename T>
Expr make(T node) {
  return Expr(std::make_shared<const Node>(Node{std::move(node)}));
}

inline Expr var(std::size_t i) { return make(Var{i}); }
inline Expr constant(std::complex<double> c) { return make(Const{c}); }
inline Expr rho_pow(Exponent q) { return make(RhoPow{q}); }
inline Expr add(Expr a, Expr b) { return make(Add{std::move(a), std::move(b)}); }
inline Expr mul(Expr a, Expr b) { return make(Mul{std::move(a), std::move(b)}); }
inline Expr int_pow(Expr a, std::int64_t k) { return make(IntPow{std::move(a), k}); }
inline Expr rat_pow(Expr a, Exponent q) {
  if (q.is_integer()) return int_pow(std::move(a), q.num());
  return make(RatPow{std::move(a), q});
}
inline Expr compose(Primitive p, Expr a) { return make(Comp{p, std::move(a)}); }
inline Expr neg(Expr a) { return mul(constant(-1.0), std::move(a)); }
inline Expr sub(Expr a, Expr b) { return add(std::move(a), neg(std::move(b))); }
inline Expr div(Expr a, Expr b) { return mul(std::move(a), int_pow(std::move(b), -1)); }

/// delta(t) = s^{-1} gauss(t s^{-1}).
inline Expr delta_kernel(Expr arg) {
  return mul(rho_pow(-1), compose(Primitive::Gauss, mul(std::move(arg), rho_pow(-1))));
}

/// heaviside(t) = gausscdf(t s^{-1}).
inline Expr heaviside_kernel(Expr arg) {
  return compose(Primitive::GaussCdf, mul(std::move(arg), rho_pow(-1)));
}

inline const Const* as_const(const Expr& e) { return std::get_if<Const>(&e.node().value); }

inline bool is_zero(const Expr& e) {
  const auto* c = as_const(e);
  return c && c->value == std::complex<double>(0.0);
}

inline bool is_one(const Expr& e) {
  const auto* c = as_const(e);
  return c && c->value == std::complex<double>(1.0);
}

// Folding constructors used by the derivative rules only.
inline Expr sum(Expr a, Expr b) {
  if (is_zero(a)) return b;
  if (is_zero(b)) return a;
  return add(std::move(a), std::move(b));
}

inline Expr product(Expr a, Expr b) {
  if (is_zero(a) || is_zero(b)) return constant(0.0);
  if (is_one(a)) return b;
  if (is_one(b)) return a;
  return mul(std::move(a), std::move(b));
}

}  // namespace expr

inline Expr operator+(Expr a, Expr b) { return expr::add(std::move(a), std::move(b)); }
inline Expr operator-(Expr a, Expr b) { return expr::sub(std::move(a), std::move(b)); }
inline Expr operator-(Expr a) { return expr::neg(std::move(a)); }
inline Expr operator*(Expr a, Expr b) { return expr::mul(std::move(a), std::move(b)); }
inline Expr operator/(Expr a, Expr b) { return expr::div(std::move(a), std::move(b)); }

/// d/dt p(t), expressed at the argument `arg`.
inline Expr primitive_derivative(Primitive p, const Expr& arg) {
  using namespace expr;
  switch (p) {
    case Primitive::Exp: return compose(Primitive::Exp, arg);
    case Primitive::Log: return int_pow(arg, -1);
    case Primitive::Sin: return compose(Primitive::Cos, arg);
    case Primitive::Cos: return neg(compose(Primitive::Sin, arg));
    case Primitive::Gauss: return mul(mul(constant(-2.0), arg), compose(Primitive::Gauss, arg));
    case Primitive::GaussCdf: return compose(Primitive::Gauss, arg);
  }
  return constant(0.0);
}

/// Partial derivative with respect to variable i.
inline Expr differentiate(const Expr& e, std::size_t i) {
  using namespace expr;
  return std::visit(
      [&](const auto& n) -> Expr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return constant(n.index == i ? 1.0 : 0.0);
        } else if constexpr (std::is_same_v<T, Const> || std::is_same_v<T, RhoPow>) {
          return constant(0.0);
        } else if constexpr (std::is_same_v<T, Add>) {
          return sum(differentiate(n.lhs, i), differentiate(n.rhs, i));
        } else if constexpr (std::is_same_v<T, Mul>) {
          return sum(product(differentiate(n.lhs, i), n.rhs), product(n.lhs, differentiate(n.rhs, i)));
        } else if constexpr (std::is_same_v<T, IntPow>) {
          if (n.power == 0) return constant(0.0);
          const Expr outer = n.power == 1 ? constant(1.0)
                                          : product(constant(static_cast<double>(n.power)),
                                                    n.power == 2 ? n.base : int_pow(n.base, n.power - 1));
          return product(outer, differentiate(n.base, i));
        } else if constexpr (std::is_same_v<T, RatPow>) {
          const Expr outer = product(constant(n.power.to_double()), rat_pow(n.base, n.power - 1));
          return product(outer, differentiate(n.base, i));
        } else {
          const Expr inner = differentiate(n.arg, i);
          if (is_zero(inner)) return constant(0.0);
          return product(primitive_derivative(n.fn, n.arg), inner);
        }
      },
      e.node().value);
}

/// Multi-index alpha in N_0^d.
using MultiIndex = std::vector<std::size_t>;

inline std::size_t order_of(const MultiIndex& alpha) {
  std::size_t total = 0;
  for (auto a : alpha) total += a;
  return total;
}

inline Expr differentiate(const Expr& e, const MultiIndex& alpha) {
  Expr out = e;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    for (std::size_t k = 0; k < alpha[i]; ++k) out = differentiate(out, i);
  }
  return out;
}

/// All multi-indices of dimension d with |alpha| <= max_order, by increasing |alpha|.
inline std::vector<MultiIndex> multi_indices(std::size_t d, std::size_t max_order) {
  std::vector<MultiIndex> out;
  MultiIndex current(d, 0);
  // enumerate by total degree so callers can build derivatives incrementally
  for (std::size_t total = 0; total <= max_order; ++total) {
    std::vector<MultiIndex> level;
    auto rec = [&](auto&& self, std::size_t pos, std::size_t left) -> void {
      if (pos + 1 == d) {
        current[pos] = left;
        level.push_back(current);
        return;
      }
      for (std::size_t a = left + 1; a-- > 0;) {
        current[pos] = a;
        self(self, pos + 1, left - a);
      }
    };
    rec(rec, 0, total);
    out.insert(out.end(), level.begin(), level.end());
  }
  return out;
}

/// Largest variable index used, plus one.
inline std::size_t arity(const Expr& e) {
  return std::visit(
      [](const auto& n) -> std::size_t {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Var>) {
          return n.index + 1;
        } else if constexpr (std::is_same_v<T, Const> || std::is_same_v<T, RhoPow>) {
          return 0;
        } else if constexpr (std::is_same_v<T, Add> || std::is_same_v<T, Mul>) {
          return std::max(arity(n.lhs), arity(n.rhs));
        } else if constexpr (std::is_same_v<T, IntPow> || std::is_same_v<T, RatPow>) {
          return arity(n.base);
        } else {
          return arity(n.arg);
        }
      },
      e.node().value);
}

}  // namespace rhocalc
