// Scalar detection and the line integral of a gradient on an annulus.

#include <iostream>

#include "rhocalc/rhocalc.hpp"

int main() {
  using namespace rhocalc;
  const Config cfg;

  const AsymptoticFunction trig{parse_expression("sin(x)^2 + cos(x)^2"), parse_domain("box(-2,2)")};
  const auto report = scalar_detect(trig, cfg.samples, cfg);
  std::cout << "sin^2 + cos^2: " << to_string(report.is_scalar);
  if (report.constant) std::cout << ", C = " << to_string(*report.constant);
  std::cout << "\n";

  const AsymptoticFunction f{parse_expression("x^3*y - 2*x*y^2 + y"), parse_domain("annulus(0,0,1,2)")};
  const auto p1 = parse_point("x=1.2, y=0.3 + s");
  const auto p2 = parse_point("x=0.4, y=1.5 - 2*s^2");
  const auto integral = line_integral_gradient(f, p1, p2, 3, cfg);
  const auto direct = evaluate(f, p2, cfg) - evaluate(f, p1, cfg);
  std::cout << "integral of grad F: " << to_string(integral) << "\n";
  std::cout << "F(p2) - F(p1):      " << to_string(direct) << "\n";
}
