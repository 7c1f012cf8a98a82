// Acceptance run: one PASS/FAIL line per criterion at order 10, seed 42.
// Exits nonzero when any criterion fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "rhocalc/rhocalc.hpp"

using namespace rhocalc;

namespace {

// Tolerances, fixed here independently of the library constants.
constexpr double kFieldRel = 1e-10;
constexpr double kStandardAbs = 1e-12;
constexpr double kKernelAbs = 1e-9;
constexpr double kHeavisideAbs = 1e-12;
constexpr double kFundamentalAbs = 1e-10;
constexpr double kSuiteSecondsLimit = 10.0;

struct Outcome {
  bool pass = true;
  std::vector<std::string> notes;
  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED " + what);
    }
  }
};

void require_suite(Outcome& o, const SuiteReport& r) {
  for (const auto& c : r.checks) {
    o.require(c.verdict == SeriesVerdict::Holds,
              c.name + " (" + to_string(c.verdict) + ", " + std::to_string(c.cases) + " cases)" +
                  (c.detail.empty() ? "" : ": " + c.detail));
  }
}

double leading_or_nan(const AsymptoticComplex& v, Exponent exp) {
  if (v.re().is_null() || !v.im().is_null() || v.valuation() != exp) return std::nan("");
  return v.re().leading_coefficient();
}

Config acceptance_config() {
  Config cfg;
  cfg.order = Exponent(10);
  cfg.seed = 42;
  return cfg;
}

Outcome criterion1(const Config& cfg) {
  Outcome o;
  (void)kFieldRel;  // the suite's tolerance must match
  o.require(kFieldTolerance == kFieldRel, "library field tolerance is 1e-10");
  const auto r = field_axioms_suite(cfg, 1000);
  require_suite(o, r);
  for (const auto& c : r.checks) o.require(c.cases == 1000, c.name + " ran 1000 triples");
  return o;
}

Outcome criterion2(const Config& cfg) {
  Outcome o;
  require_suite(o, order_suite(cfg, 1000, 1000000));
  return o;
}

Outcome criterion3(const Config& cfg) {
  Outcome o;
  require_suite(o, standard_values_suite(cfg, 100));
  // direct comparison against the C library
  const auto dom = DomainSpec::box({-2.0}, {2.0});
  const std::vector<std::pair<AsymptoticFunction, std::function<double(double)>>> fs = {
      {lift_standard(Primitive::Exp, dom), [](double x) { return std::exp(x); }},
      {lift_standard(Primitive::Sin, dom), [](double x) { return std::sin(x); }},
      {lift_standard(Primitive::Cos, dom), [](double x) { return std::cos(x); }},
      {lift_polynomial({0, 0, 1}, dom), [](double x) { return x * x; }},
      {lift_polynomial({0, 0, 0, 1}, dom), [](double x) { return x * x * x; }},
  };
  std::size_t bad = 0;
  for (const auto& [f, ref] : fs) {
    for (std::size_t i = 0; i < 100; ++i) {
      const double x = dom.sample(cfg.seed, i)[0];
      const auto v = evaluate(f, AsymptoticPoint::standard({x}, cfg.order), cfg);
      const bool single = v.im().is_null() && v.re().terms().size() <= 1 &&
                          (v.re().is_null() || v.re().terms().front().exp == Exponent(0));
      if (!single || std::abs(v.coefficient(0).real() - ref(x)) > kStandardAbs) ++bad;
    }
  }
  o.require(bad == 0, std::to_string(bad) + " of 500 values off the C library");
  return o;
}

Outcome criterion4(const Config& cfg) {
  Outcome o;
  require_suite(o, homomorphism_suite(cfg, 100, 20));
  return o;
}

Outcome criterion5(const Config& cfg) {
  Outcome o;
  const auto r = pointwise_suite(cfg, 10);
  require_suite(o, r);
  return o;
}

Outcome criterion6(const Config& cfg) {
  Outcome o;
  require_suite(o, distributions_suite(cfg));
  const auto dom = DomainSpec::whole_space(1);
  const auto delta = embed_delta(dom);
  const auto heaviside = embed_heaviside(dom);
  const auto at = [&](double x) { return AsymptoticPoint::standard({x}, cfg.order); };
  const long double pi = oracle::kPi;
  const long double rsp = oracle::inv_sqrt_pi();
  const auto close = [](double got, long double want, double tol) {
    return std::abs(static_cast<long double>(got) - want) <= tol;
  };
  o.require(close(leading_or_nan(evaluate(delta, at(0.0), cfg), -1), rsp, kKernelAbs), "delta(0) vs 1/sqrt(pi)");
  o.require(evaluate(delta, at(1.0), cfg).is_null(), "delta(1) null");
  o.require(close(leading_or_nan(evaluate(delta * delta, at(0.0), cfg), -2), 1.0L / pi, kKernelAbs),
            "delta(0)^2 vs 1/pi");
  o.require(close(leading_or_nan(evaluate(heaviside * delta, at(0.0), cfg), -1), rsp / 2.0L, kKernelAbs),
            "(H delta)(0) vs 1/(2 sqrt(pi))");
  o.require(close(leading_or_nan(evaluate(heaviside, at(0.0), cfg), 0), 0.5L, kHeavisideAbs), "H(0) vs 1/2");
  return o;
}

Outcome criterion7(const Config& cfg) {
  Outcome o;
  o.require(kFundamentalTolerance == kFundamentalAbs, "library fundamental tolerance is 1e-10");
  require_suite(o, fundamental_suite(cfg, 20, 50));
  return o;
}

Outcome criterion8(const Config& cfg) {
  Outcome o;
  require_suite(o, representation_suite(cfg, 50));
  return o;
}

}  // namespace

int main() {
  const Config cfg = acceptance_config();
  const std::vector<std::pair<std::string, std::function<Outcome(const Config&)>>> criteria = {
      {"field axioms", criterion1},
      {"order", criterion2},
      {"standard values of smooth functions", criterion3},
      {"homomorphism and injectivity", criterion4},
      {"pointwise limits, Taylor residual and difference quotient", criterion5},
      {"distribution values", criterion6},
      {"scalar detection and line integrals", criterion7},
      {"representation independence", criterion8},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o = criteria[k].second(cfg);
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    o.require(secs < kSuiteSecondsLimit, "time limit of 10 s");
    std::printf("[%s] criterion %zu: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), secs);
    for (const auto& n : o.notes) std::printf("    %s\n", n.c_str());
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
