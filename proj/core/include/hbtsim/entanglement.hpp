#pragma once

#include <Eigen/Dense>

#include "hbtsim/polarization.hpp"

namespace hbtsim {

// One photon's amplitudes over the {short, long} interferometer arms.
class OrbitalState {
 public:
  // Normalises; throws DegenerateError for a null vector.
  OrbitalState(Complex short_amp, Complex long_amp);
  static OrbitalState path_short() { return OrbitalState(1.0, 0.0); }
  static OrbitalState path_long() { return OrbitalState(0.0, 1.0); }

  const Eigen::Vector2cd& amplitudes() const { return v_; }
  Complex overlap(const OrbitalState& other) const { return v_.dot(other.v_); }

 private:
  Eigen::Vector2cd v_;
};

// Normalized pair state on the {SS, SL, LS, LL} basis of beams 3 and 4.
struct TwoPhotonOrbitalState {
  Eigen::Vector4cd amplitudes;
};

enum class Subsystem { three, four };

// The pair emerging from the exchange construction,
//
//     phi (x) psi + exp(i omega / 2) psi (x) phi,
//
// normalized. The direct and exchange amplitudes interfere, so the squared
// norm is 2 + 2 cos(omega/2) |<phi|psi>|^2; a parallel pair with
// cos(omega/2) = -1 cancels outright and raises DegenerateError.
TwoPhotonOrbitalState output_state(const OrbitalState& phi,
                                   const OrbitalState& psi, double omega);

// Partial trace over the complementary beam; Hermitian, unit trace.
Eigen::Matrix2cd reduced_density(const TwoPhotonOrbitalState& state,
                                 Subsystem keep);

// -sum lambda log2 lambda over the spectrum, in bits. Eigenvalues are
// required to lie in [0, 1] within 1e-8 and are clamped before the log.
double von_neumann_entropy(const Eigen::Matrix2cd& rho);

// Largest CHSH expectation reachable with ideal measurements,
// 2 sqrt(t1^2 + t2^2) from the two leading singular values of the Pauli
// correlation matrix T_ij = <sigma_i (x) sigma_j>. Exceeds 2 exactly for
// entangled pure states; reaches 2 sqrt(2) on Bell states.
double chsh_max(const TwoPhotonOrbitalState& state);

// Entropy through the Schmidt route: singular values of the 2x2 coefficient
// matrix rather than eigenvalues of a partial trace. Kept as a separate
// code path for cross-checking the two computations against each other.
double schmidt_entropy(const TwoPhotonOrbitalState& state);

// Closed forms for the output_state family in terms of x = |<phi|psi>| and
// omega alone; phases of the overlap are gauge and drop out. Derived from
// the Schmidt pair lambda+- = (1 +- sqrt(1 - 4 q^2))/2 with
// q = (1 - x^2) / (2 + 2 x^2 cos(omega/2)).
double output_entropy_closed_form(double overlap_mod, double omega);
double output_chsh_closed_form(double overlap_mod, double omega);

}  // namespace hbtsim
