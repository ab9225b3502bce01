#include "hbtsim/entanglement.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "hbtsim/errors.hpp"

namespace hbtsim {

namespace {

double binary_entropy_of(double lo, double hi) {
  double h = 0.0;
  for (double lambda : {lo, hi}) {
    if (lambda > 0.0) h -= lambda * std::log2(lambda);
  }
  return h;
}

}  // namespace

OrbitalState::OrbitalState(Complex short_amp, Complex long_amp) {
  v_ << short_amp, long_amp;
  const double n = v_.norm();
  if (n < 1e-12) throw DegenerateError("null orbital state");
  v_ /= n;
}

TwoPhotonOrbitalState output_state(const OrbitalState& phi,
                                   const OrbitalState& psi, double omega) {
  const Complex exchange = std::polar(1.0, omega / 2.0);
  Eigen::Vector4cd v;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      v(2 * i + j) = phi.amplitudes()(i) * psi.amplitudes()(j) +
                     exchange * psi.amplitudes()(i) * phi.amplitudes()(j);
  const double n = v.norm();
  if (n < 1e-10)
    throw DegenerateError("direct and exchange amplitudes cancel");
  return TwoPhotonOrbitalState{v / n};
}

Eigen::Matrix2cd reduced_density(const TwoPhotonOrbitalState& state,
                                 Subsystem keep) {
  // amplitudes(2i + j): i indexes beam three, j beam four.
  const Eigen::Vector4cd& v = state.amplitudes;
  Eigen::Matrix2cd rho = Eigen::Matrix2cd::Zero();
  for (int a = 0; a < 2; ++a)
    for (int b = 0; b < 2; ++b)
      for (int t = 0; t < 2; ++t) {
        if (keep == Subsystem::three)
          rho(a, b) += v(2 * a + t) * std::conj(v(2 * b + t));
        else
          rho(a, b) += v(2 * t + a) * std::conj(v(2 * t + b));
      }
  return rho;
}

double von_neumann_entropy(const Eigen::Matrix2cd& rho) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> solver(rho);
  const Eigen::Vector2d ev = solver.eigenvalues();
  for (int i = 0; i < 2; ++i) {
    if (ev(i) < -1e-8 || ev(i) > 1.0 + 1e-8)
      throw std::invalid_argument("not a density-matrix spectrum");
  }
  return binary_entropy_of(std::clamp(ev(0), 0.0, 1.0),
                           std::clamp(ev(1), 0.0, 1.0));
}

double chsh_max(const TwoPhotonOrbitalState& state) {
  const Eigen::Vector4cd& v = state.amplitudes;
  Eigen::Matrix2cd sigma[3];
  sigma[0] << 0, 1, 1, 0;
  sigma[1] << 0, Complex(0, -1), Complex(0, 1), 0;
  sigma[2] << 1, 0, 0, -1;
  Eigen::Matrix3d t;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Complex acc(0.0, 0.0);
      for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 2; ++b)
          for (int c = 0; c < 2; ++c)
            for (int d = 0; d < 2; ++d)
              acc += std::conj(v(2 * a + b)) * sigma[i](a, c) *
                     sigma[j](b, d) * v(2 * c + d);
      t(i, j) = acc.real();
    }
  const Eigen::Vector3d sv =
      t.jacobiSvd(Eigen::ComputeThinU | Eigen::ComputeThinV).singularValues();
  return 2.0 * std::sqrt(sv(0) * sv(0) + sv(1) * sv(1));
}

double schmidt_entropy(const TwoPhotonOrbitalState& state) {
  Eigen::Matrix2cd m;
  m << state.amplitudes(0), state.amplitudes(1), state.amplitudes(2),
      state.amplitudes(3);
  const Eigen::Vector2d sv = m.jacobiSvd().singularValues();
  return binary_entropy_of(sv(0) * sv(0), sv(1) * sv(1));
}

namespace {

double schmidt_q(double overlap_mod, double omega) {
  if (overlap_mod < 0.0 || overlap_mod > 1.0 + 1e-12)
    throw std::invalid_argument("overlap modulus must lie in [0, 1]");
  const double x2 = std::min(overlap_mod * overlap_mod, 1.0);
  const double norm2 = 2.0 + 2.0 * std::cos(omega / 2.0) * x2;
  if (norm2 < 1e-10)
    throw DegenerateError("direct and exchange amplitudes cancel");
  return (1.0 - x2) / norm2;
}

}  // namespace

double output_entropy_closed_form(double overlap_mod, double omega) {
  const double q = schmidt_q(overlap_mod, omega);
  const double root = std::sqrt(std::max(0.0, 1.0 - 4.0 * q * q));
  return binary_entropy_of(0.5 * (1.0 - root), 0.5 * (1.0 + root));
}

double output_chsh_closed_form(double overlap_mod, double omega) {
  const double q = schmidt_q(overlap_mod, omega);
  return 2.0 * std::sqrt(1.0 + 4.0 * q * q);
}

}  // namespace hbtsim
