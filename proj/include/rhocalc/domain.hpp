#pragma once

#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <memory>
#include <random>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "rhocalc/error.hpp"

namespace rhocalc {

/// An open subset of R^d: membership test, deterministic sampler, and whether
/// it is arcwise connected.
///
/// Sample index 0 is always the domain's centre point; later indices are
/// pseudo-random draws determined by (seed, index) alone.
class DomainSpec {
 public:
  using Point = std::vector<double>;
  using Membership = std::function<bool(std::span<const double>)>;
  using Sampler = std::function<Point(std::uint64_t seed, std::size_t index)>;

  DomainSpec(std::string name, std::size_t dimension, Membership contains, Sampler sampler,
             bool arcwise_connected)
      : name_(std::move(name)),
        dimension_(dimension),
        contains_(std::move(contains)),
        sampler_(std::move(sampler)),
        arcwise_connected_(arcwise_connected) {
    if (dimension_ == 0) throw Error("domain dimension must be positive");
  }

  const std::string& name() const noexcept { return name_; }
  std::size_t dimension() const noexcept { return dimension_; }
  bool arcwise_connected() const noexcept { return arcwise_connected_; }

  bool contains(std::span<const double> x) const {
    return x.size() == dimension_ && contains_(x);
  }

  Point sample(std::uint64_t seed, std::size_t index) const { return sampler_(seed, index); }

  std::vector<Point> samples(std::uint64_t seed, std::size_t count) const {
    std::vector<Point> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(sample(seed, i));
    return out;
  }

  /// R^d. Samples are drawn from [-5, 5]^d.
  static DomainSpec whole_space(std::size_t d) {
    DomainSpec box_domain = box(Point(d, -kInf), Point(d, kInf));
    box_domain.name_ = d == 1 ? "R" : "R^" + std::to_string(d);
    return box_domain;
  }

  /// Open box prod (lo_i, hi_i); infinite bounds allowed.
  static DomainSpec box(Point lo, Point hi) {
    if (lo.size() != hi.size() || lo.empty()) throw Error("box bounds must have equal, positive length");
    Point wlo(lo.size());
    Point whi(lo.size());
    std::string label = "box(";
    for (std::size_t i = 0; i < lo.size(); ++i) {
      if (!(lo[i] < hi[i])) throw Error("box with empty side");
      // finite sampling window inside each side
      wlo[i] = std::isfinite(lo[i]) ? lo[i] : (std::isfinite(hi[i]) ? hi[i] - 10.0 : -5.0);
      whi[i] = std::isfinite(hi[i]) ? hi[i] : (std::isfinite(lo[i]) ? lo[i] + 10.0 : 5.0);
      label += (i ? "," : "") + bound(lo[i]) + "," + bound(hi[i]);
    }
    label += ")";
    auto contains = [lo, hi](std::span<const double> x) {
      for (std::size_t i = 0; i < x.size(); ++i) {
        if (!(lo[i] < x[i] && x[i] < hi[i])) return false;
      }
      return true;
    };
    auto sampler = [wlo, whi, contains](std::uint64_t seed, std::size_t index) {
      Point x(wlo.size());
      for (std::size_t i = 0; i < x.size(); ++i) x[i] = 0.5 * (wlo[i] + whi[i]);
      if (index == 0) return x;
      auto rng = generator(seed, index);
      do {
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = std::uniform_real_distribution<double>(wlo[i], whi[i])(rng);
        }
      } while (!contains(x));
      return x;
    };
    return {label, lo.size(), contains, sampler, true};
  }

  /// Open Euclidean ball.
  static DomainSpec ball(Point center, double radius) {
    if (center.empty() || !(radius > 0.0)) throw Error("ball needs a centre and a positive radius");
    std::string label = "ball(";
    for (double c : center) label += bound(c) + ",";
    label += bound(radius) + ")";
    auto contains = [center, radius](std::span<const double> x) {
      double r2 = 0.0;
      for (std::size_t i = 0; i < x.size(); ++i) r2 += (x[i] - center[i]) * (x[i] - center[i]);
      return r2 < radius * radius;
    };
    auto sampler = [center, radius, contains](std::uint64_t seed, std::size_t index) {
      if (index == 0) return center;
      auto rng = generator(seed, index);
      Point x(center.size());
      do {
        for (std::size_t i = 0; i < x.size(); ++i) {
          x[i] = std::uniform_real_distribution<double>(center[i] - radius, center[i] + radius)(rng);
        }
      } while (!contains(x));
      return x;
    };
    return {label, center.size(), contains, sampler, true};
  }

  /// Planar open annulus r_in < |x - c| < r_out: connected but not convex.
  static DomainSpec annulus(double cx, double cy, double r_in, double r_out) {
    if (!(0.0 <= r_in && r_in < r_out)) throw Error("annulus needs 0 <= r_in < r_out");
    const std::string label =
        "annulus(" + bound(cx) + "," + bound(cy) + "," + bound(r_in) + "," + bound(r_out) + ")";
    auto contains = [=](std::span<const double> x) {
      const double r2 = (x[0] - cx) * (x[0] - cx) + (x[1] - cy) * (x[1] - cy);
      return r_in * r_in < r2 && r2 < r_out * r_out;
    };
    auto sampler = [=](std::uint64_t seed, std::size_t index) {
      if (index == 0) return Point{cx + 0.5 * (r_in + r_out), cy};
      auto rng = generator(seed, index);
      Point x(2);
      do {
        x[0] = std::uniform_real_distribution<double>(cx - r_out, cx + r_out)(rng);
        x[1] = std::uniform_real_distribution<double>(cy - r_out, cy + r_out)(rng);
      } while (!contains(x));
      return x;
    };
    return {label, 2, contains, sampler, true};
  }

  /// Union of two open intervals (a, b) and (c, d); connected only when they overlap.
  static DomainSpec interval_union(double a, double b, double c, double d) {
    if (!(a < b && c < d)) throw Error("union needs two non-empty intervals");
    const bool connected = c < b && a < d;
    const std::string label =
        "union(" + bound(a) + "," + bound(b) + "," + bound(c) + "," + bound(d) + ")";
    auto contains = [=](std::span<const double> x) {
      return (a < x[0] && x[0] < b) || (c < x[0] && x[0] < d);
    };
    auto left = box({a}, {b});
    auto right = box({c}, {d});
    auto sampler = [left, right](std::uint64_t seed, std::size_t index) {
      return index % 2 == 0 ? left.sample(seed, index / 2) : right.sample(seed, index / 2);
    };
    return {label, 1, contains, sampler, connected};
  }

 private:
  static constexpr double kInf = std::numeric_limits<double>::infinity();

  static std::mt19937_64 generator(std::uint64_t seed, std::size_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return std::mt19937_64(seq);
  }

  static std::string bound(double v) {
    if (std::isinf(v)) return v > 0 ? "inf" : "-inf";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
  }

  std::string name_;
  std::size_t dimension_;
  Membership contains_;
  Sampler sampler_;
  bool arcwise_connected_;
};

}  // namespace rhocalc
