// Ends of the Lorentzian interval of the Betsy Ross family by bisection.

#include <cstdio>

#include "lorentz/grassmann.hpp"
#include "lorentz/lorentzian.hpp"

namespace {

bool lorentzian(double t) { return lorentz::is_lorentzian(lorentz::betsy_polynomial(t)).lorentzian; }

double boundary(double inside, double outside) {
  for (int k = 0; k < 50; ++k) {
    const double mid = 0.5 * (inside + outside);
    (lorentzian(mid) ? inside : outside) = mid;
  }
  return 0.5 * (inside + outside);
}

}  // namespace

int main() {
  std::printf("lower %.9f\nupper %.9f\n", boundary(0, -4), boundary(0, 4));
  const auto f = lorentz::grassmann_map(lorentz::betsy_ross_matrix(), 2.0);
  std::printf("golden-ratio matrix image is Lorentzian: %s\n", lorentz::is_lorentzian(f).lorentzian ? "yes" : "no");
}
