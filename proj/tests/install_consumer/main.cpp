#include <cmath>
#include <cstdio>

#include "bohr/problem.hpp"

int main() {
  const bohr::RadiusProblem problem{bohr::StableConvex{}, bohr::BohrPolynomial(),
                                    bohr::MajorantOnly{}};
  const double r = bohr::solve_radius(problem).radius;
  std::printf("%.12g\n", r);
  return std::fabs(r - 1.0 / 3.0) <= 1e-12 ? 0 : 1;
}
