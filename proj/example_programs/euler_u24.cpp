// Euler characteristic of the closed Lorentzian stratum of U(2,4).

#include <iostream>

#include "lorentz/euler.hpp"

int main() {
  const auto J = lorentz::uniform_matroid(2, 4);
  const auto rays = lorentz::enumerate_rays(J);
  std::cout << "rays: " << rays.rays.size() << (rays.complete ? " (complete)" : "") << "\n";
  for (const auto& r : rays.rays) {
    for (const auto& x : r.values) std::cout << x << " ";
    std::cout << "\n";
  }
  const auto rep = lorentz::euler_characteristic(J, rays);
  std::cout << "g:";
  for (long x : rep.tallies.g) std::cout << " " << x;
  std::cout << "\nchi: " << rep.chi << "\n";
}
