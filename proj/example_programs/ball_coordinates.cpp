// Ball coordinates of a few Lorentzian polynomials supported on U(2,4).

#include <complex>
#include <cstdio>

#include "lorentz/dressian.hpp"
#include "lorentz/gauge.hpp"
#include "lorentz/grassmann.hpp"

namespace {

void show(const char* name, const lorentz::GaugeModel& model, const lorentz::FloatPolynomial& f) {
  const auto b = lorentz::ball_coordinates(model, f);
  std::printf("%-10s psi %.6f%s norm %.6f coords", name, b.psi, b.probe_limited ? " (probe-limited)" : "", b.norm);
  for (double x : b.coords) std::printf(" %+.4f", x);
  std::printf("\n");
}

}  // namespace

int main() {
  const auto J = lorentz::uniform_matroid(2, 4);
  const lorentz::GaugeModel model(J, 1.0);
  show("base", model, lorentz::generating_polynomial(J).to_float());
  show("boundary", model, lorentz::grassmann_map(lorentz::FieldMatrix<double>{{1, 0, 1, 2}, {0, 1, 3, 0.5}}, 2.0));
  show("interior", model,
       lorentz::grassmann_map(lorentz::FieldMatrix<std::complex<double>>{{1, 0, 1, 2}, {0, 1, {3, 1}, 0.5}}, 2.0));
  std::vector<lorentz::Rational> split(J.size(), 0);
  split[*J.index_of({1, 1, 0, 0})] = 1;
  split[*J.index_of({0, 0, 1, 1})] = 1;
  for (double t : {1.0, 10.0}) show("split", model, lorentz::dressian_to_polynomial({J, split}, t));
}
