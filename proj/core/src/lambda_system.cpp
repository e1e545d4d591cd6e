#include "fewcycle/lambda_system.hpp"

#include <cmath>
#include <string>

#include "fewcycle/errors.hpp"

namespace fewcycle {

LambdaAtom::LambdaAtom(double omega31, double omega21) : omega31_(omega31), omega21_(omega21) {
  if (!std::isfinite(omega31) || !std::isfinite(omega21))
    throw ValidationError("atom level spacings must be finite");
  if (!(omega21 >= 0.0))
    throw ValidationError("omega21 must be >= 0, got " + std::to_string(omega21));
  if (!(omega31 > omega21))
    throw ValidationError("omega31 must exceed omega21 (omega32 > 0)");
}

Detunings detunings(const LambdaAtom& atom, const PulseSpec& pump, const PulseSpec& stokes) {
  const double d1 = atom.omega31() - pump.omega_carrier;
  const double d2 = atom.omega32() - stokes.omega_carrier;
  return {d1, d2, d1 - d2};
}

namespace {

bool finite(const BlochVector& c) {
  auto ok = [](cplx z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); };
  return std::isfinite(c.rho11) && std::isfinite(c.rho22) && std::isfinite(c.rho33) &&
         ok(c.rho31) && ok(c.rho32) && ok(c.rho21);
}

}  // namespace

BlochVector outer_product(const StateVector& psi) {
  BlochVector c;
  c.rho11 = std::norm(psi[0]);
  c.rho22 = std::norm(psi[1]);
  c.rho33 = std::norm(psi[2]);
  c.rho31 = psi[2] * std::conj(psi[0]);
  c.rho32 = psi[2] * std::conj(psi[1]);
  c.rho21 = psi[1] * std::conj(psi[0]);
  return c;
}

DensityState::DensityState() : c_{1.0, 0.0, 0.0, {}, {}, {}} {}

DensityState::DensityState(const BlochVector& components) : c_(components) {
  if (!finite(c_)) throw ValidationError("density matrix has non-finite entries");
  if (std::abs(trace() - 1.0) > 1e-12)
    throw ValidationError("density matrix trace must be 1, got " + std::to_string(trace()));
}

DensityState DensityState::from_integrator(const BlochVector& components) {
  return DensityState(Unchecked{}, components);
}

DensityState DensityState::pure(const StateVector& psi) {
  const double norm2 = std::norm(psi[0]) + std::norm(psi[1]) + std::norm(psi[2]);
  if (std::abs(norm2 - 1.0) > 1e-12) throw ValidationError("state vector must be normalised");
  return DensityState(Unchecked{}, outer_product(psi));
}

double DensityState::population(int level) const {
  switch (level) {
    case 1:
      return c_.rho11;
    case 2:
      return c_.rho22;
    case 3:
      return c_.rho33;
  }
  throw ValidationError("level index must be 1, 2 or 3");
}

cplx DensityState::at(int i, int j) const {
  if (i < 1 || i > 3 || j < 1 || j > 3) throw ValidationError("level index must be 1, 2 or 3");
  if (i == j) return population(i);
  if (i < j) return std::conj(at(j, i));
  if (i == 3 && j == 1) return c_.rho31;
  if (i == 3 && j == 2) return c_.rho32;
  return c_.rho21;
}

Matrix3 DensityState::matrix() const {
  Matrix3 m;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) m[i][j] = at(i + 1, j + 1);
  return m;
}

double DensityState::purity() const {
  return c_.rho11 * c_.rho11 + c_.rho22 * c_.rho22 + c_.rho33 * c_.rho33 +
         2.0 * (std::norm(c_.rho31) + std::norm(c_.rho32) + std::norm(c_.rho21));
}

DensityState ground_state() { return DensityState(); }

}  // namespace fewcycle
