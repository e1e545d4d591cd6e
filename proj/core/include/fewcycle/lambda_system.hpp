#pragma once

// Lambda-type three-level atom: |1> and |2> couple to the common upper
// level |3>; |1> <-> |2> is dipole-forbidden and has no coupling anywhere.

#include <array>
#include <complex>

#include "fewcycle/pulse.hpp"

namespace fewcycle {

using cplx = std::complex<double>;

class LambdaAtom {
 public:
  /// Throws ValidationError unless omega31 > omega21 >= 0.
  LambdaAtom(double omega31, double omega21);

  double omega31() const { return omega31_; }
  double omega21() const { return omega21_; }
  double omega32() const { return omega31_ - omega21_; }

  friend bool operator==(const LambdaAtom&, const LambdaAtom&) = default;

 private:
  double omega31_;
  double omega21_;
};

struct Detunings {
  double pump;        // omega31 - pump carrier
  double stokes;      // omega32 - stokes carrier
  double two_photon;  // pump - stokes
};

Detunings detunings(const LambdaAtom& atom, const PulseSpec& pump, const PulseSpec& stokes);

/// Independent components of a Hermitian 3x3 matrix: three real diagonal
/// entries and the coherences rho31, rho32, rho21 (rho_ji = conj(rho_ij)).
/// Also used unvalidated for derivatives and RK4 stage arithmetic.
struct BlochVector {
  double rho11 = 0.0;
  double rho22 = 0.0;
  double rho33 = 0.0;
  cplx rho31{};
  cplx rho32{};
  cplx rho21{};

  BlochVector& operator+=(const BlochVector& o) {
    rho11 += o.rho11;
    rho22 += o.rho22;
    rho33 += o.rho33;
    rho31 += o.rho31;
    rho32 += o.rho32;
    rho21 += o.rho21;
    return *this;
  }
  friend BlochVector operator+(BlochVector a, const BlochVector& b) { return a += b; }
  friend BlochVector operator*(double s, const BlochVector& v) {
    return {s * v.rho11, s * v.rho22, s * v.rho33, s * v.rho31, s * v.rho32, s * v.rho21};
  }
  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

using Matrix3 = std::array<std::array<cplx, 3>, 3>;
using StateVector = std::array<cplx, 3>;

/// Components of |psi><psi| (no normalisation check).
BlochVector outer_product(const StateVector& psi);

class DensityState {
 public:
  /// Ground state |1><1|.
  DensityState();

  /// Throws ValidationError if |trace - 1| > 1e-12 or any entry is non-finite.
  explicit DensityState(const BlochVector& components);

  /// Wraps an integrator output without the exact-trace check; the
  /// propagator enforces its own looser drift bound.
  static DensityState from_integrator(const BlochVector& components);

  /// |psi><psi| for a unit vector psi (throws if | |psi| - 1 | > 1e-12).
  static DensityState pure(const StateVector& psi);

  const BlochVector& components() const { return c_; }
  double population(int level) const;  // level in {1,2,3}
  /// Element rho_ij with 1-based level labels.
  cplx at(int i, int j) const;
  Matrix3 matrix() const;

  double trace() const { return c_.rho11 + c_.rho22 + c_.rho33; }
  /// Tr(rho^2).
  double purity() const;

  friend bool operator==(const DensityState&, const DensityState&) = default;

 private:
  struct Unchecked {};
  DensityState(Unchecked, const BlochVector& c) : c_(c) {}

  BlochVector c_;
};

DensityState ground_state();

}  // namespace fewcycle
