// Values of the embedded delta and Heaviside kernels and their products.

#include <iostream>

#include "rhocalc/rhocalc.hpp"

int main() {
  using namespace rhocalc;
  const auto line = DomainSpec::whole_space(1);
  const auto delta = embed_delta(line);
  const auto heaviside = embed_heaviside(line);

  for (double x : {0.0, 0.5, 1.0}) {
    const auto p = AsymptoticPoint::standard({x});
    std::cout << "delta(" << x << ")     = " << to_string(evaluate(delta, p)) << "\n";
    std::cout << "H(" << x << ")         = " << to_string(evaluate(heaviside, p)) << "\n";
  }
  const auto origin = AsymptoticPoint::standard({0.0});
  std::cout << "delta(0)^2     = " << to_string(evaluate(delta * delta, origin)) << "\n";
  std::cout << "(H delta)(0)   = " << to_string(evaluate(heaviside * delta, origin)) << "\n";

  // an infinitesimal point: x = s, where delta_s(s) = s^-1 gauss(1)
  const auto near = parse_point("x=s");
  std::cout << "delta(s)       = " << to_string(evaluate(delta, near)) << "\n";
}
