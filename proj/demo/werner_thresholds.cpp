// Walks the Werner family for a few local dimensions and prints where each
// ball certifier stops firing, next to the known exact separability edge.

#include "sepball/certifiers.hpp"
#include "sepball/families.hpp"

#include <cstdio>

int main() {
  using namespace sepball;

  std::printf("Werner-state certification boundaries (b in [0, 1])\n");
  std::printf("%4s %14s %14s %14s %10s\n", "d", "nested", "nested-scaled", "frobenius",
              "exact");
  for (int d = 2; d <= 6; ++d) {
    auto family = [d](double b) { return werner(d, b); };
    auto boundary = [&](auto certify, double lo) {
      return threshold_scan(
          family, [&](const QuantumState& s) { return certify(s, kDefaultCertifierTol); }, lo,
          1.0, 1e-7);
    };
    const double nested = boundary(
        [](const QuantumState& s, double tol) { return certify_nested_ball(s, tol); }, 0.0);
    const double scaled = boundary(
        [](const QuantumState& s, double tol) { return certify_nested_ball_scaled(s, tol); },
        0.0);
    // the frobenius ball certifies an interval interior to [0, 1]; start the
    // scan at b = 1/d where the distance is zero to pick up its upper edge
    const double frobenius = boundary(
        [](const QuantumState& s, double tol) { return certify_frobenius_ball(s, tol); },
        1.0 / d);
    std::printf("%4d %14.6f %14.6f %14.6f %10.6f\n", d, nested, scaled, frobenius, 1.0);
  }
  std::printf("\nnested certifies up to 2/d, the scaled variant up to (2d-1)/(d^2-d+1);\n");
  std::printf("for d = 2 both reach the exact edge b = 1.\n");
  return 0;
}
