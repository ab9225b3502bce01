#include "hbtsim/correlator.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <stdexcept>

#include "hbtsim/errors.hpp"

namespace hbtsim {

Analyser Analyser::polarizer(const PolarizationState& s) {
  return Analyser(Projector::onto(s).matrix(), false);
}

Analyser Analyser::polarizer(const Projector& p) {
  return Analyser(p.matrix(), false);
}

Analyser Analyser::unpolarized() {
  return Analyser(Eigen::Matrix2cd::Identity(), true);
}

void ExperimentSetup::validate() const {
  geometry.validate();
  if (source_analysers.size() != geometry.sources.size())
    throw std::invalid_argument("one analyser per source required");
  if (detector_analysers.size() != geometry.detectors.size())
    throw std::invalid_argument("one analyser per detector required");
  if (occupations.size() != geometry.sources.size())
    throw std::invalid_argument("one occupation per source required");
  for (double n : occupations)
    if (!(n >= 0.0))
      throw std::invalid_argument("occupations must be nonnegative");
}

ExperimentSetup canonical_setup(const Geometry& g, double phi3, double phi4,
                                double n_b) {
  if (g.sources.size() != 2 || g.detectors.size() != 2)
    throw std::invalid_argument(
        "canonical setup needs two sources and two detectors");
  ExperimentSetup setup;
  setup.geometry = g;
  setup.source_analysers = {
      Analyser::polarizer(PolarizationState::circular(Handedness::right)),
      Analyser::polarizer(PolarizationState::circular(Handedness::left))};
  setup.detector_analysers = {
      Analyser::polarizer(PolarizationState::linear(phi3)),
      Analyser::polarizer(PolarizationState::linear(phi4))};
  setup.occupations = {n_b, n_b};
  return setup;
}

Eigen::MatrixXcd detector_coherence_matrix(const ExperimentSetup& setup,
                                           double time_phase) {
  setup.validate();
  const auto n_det = static_cast<Eigen::Index>(setup.geometry.detectors.size());
  const auto n_src = static_cast<Eigen::Index>(setup.geometry.sources.size());
  Eigen::MatrixXcd amp(n_det, n_src);
  for (Eigen::Index b = 0; b < n_det; ++b)
    for (Eigen::Index s = 0; s < n_src; ++s)
      amp(b, s) = propagation_amplitude(setup.geometry, static_cast<int>(b),
                                        static_cast<int>(s), setup.mode,
                                        time_phase);

  Eigen::MatrixXcd g = Eigen::MatrixXcd::Zero(2 * n_det, 2 * n_det);
  for (Eigen::Index s = 0; s < n_src; ++s) {
    const Eigen::Matrix2cd& ps = setup.source_analysers[s].matrix();
    for (Eigen::Index b1 = 0; b1 < n_det; ++b1) {
      const Eigen::Matrix2cd& pb1 = setup.detector_analysers[b1].matrix();
      for (Eigen::Index b2 = 0; b2 < n_det; ++b2) {
        const Eigen::Matrix2cd& pb2 = setup.detector_analysers[b2].matrix();
        // Entry (alpha, beta) of the block is [P_b2 P_s P_b1]^(beta, alpha),
        // hence the transpose.
        g.block<2, 2>(2 * b1, 2 * b2) +=
            setup.occupations[s] * std::conj(amp(b1, s)) * amp(b2, s) *
            (pb2 * ps * pb1).transpose();
      }
    }
  }
  return g;
}

Complex permanent(const Eigen::MatrixXcd& a) {
  const auto n = a.rows();
  if (a.cols() != n) throw std::invalid_argument("permanent needs square");
  if (n == 0) return Complex(1.0, 0.0);
  if (n > 62) throw CapacityError("permanent order too large");

  // Ryser: perm = (-1)^n sum_{S nonempty} (-1)^|S| prod_i sum_{j in S} a_ij,
  // with row sums updated one column per Gray-code step.
  Eigen::VectorXcd sums = Eigen::VectorXcd::Zero(n);
  Complex total(0.0, 0.0);
  std::uint64_t prev = 0;
  const std::uint64_t stop = std::uint64_t{1} << n;
  for (std::uint64_t k = 1; k < stop; ++k) {
    const std::uint64_t gray = k ^ (k >> 1);
    const std::uint64_t diff = gray ^ prev;
    const int j = std::countr_zero(diff);
    if (gray & diff)
      sums += a.col(j);
    else
      sums -= a.col(j);
    prev = gray;
    const Complex prod = sums.prod();
    if ((n - std::popcount(gray)) % 2 == 0)
      total += prod;
    else
      total -= prod;
  }
  return total;
}

namespace {

double moment_from_coherence(const Eigen::MatrixXcd& g,
                             std::span<const int> detectors) {
  const auto k = static_cast<int>(detectors.size());
  if (k == 0) return 1.0;
  if (k > kMaxMomentOrder)
    throw CapacityError("moment order exceeds supported maximum");
  for (int d : detectors)
    if (d < 0 || 2 * d + 1 >= g.rows())
      throw std::invalid_argument("detector index out of range");

  // Sum over the polarisation assignment of every slot; each assignment
  // selects a k x k submatrix of the coherence matrix whose permanent is
  // that assignment's Wick sum.
  Complex total(0.0, 0.0);
  Eigen::MatrixXcd sub(k, k);
  const std::uint32_t assignments = std::uint32_t{1} << k;
  for (std::uint32_t mask = 0; mask < assignments; ++mask) {
    for (int i = 0; i < k; ++i) {
      const Eigen::Index row = 2 * detectors[i] + ((mask >> i) & 1u);
      for (int j = 0; j < k; ++j)
        sub(i, j) = g(row, 2 * detectors[j] + ((mask >> j) & 1u));
    }
    total += permanent(sub);
  }
  if (std::abs(total.imag()) >
      1e-10 * std::max(1.0, std::abs(total.real())))
    throw std::logic_error("moment has nonreal residue");
  return total.real();
}

}  // namespace

double mean_count(const ExperimentSetup& setup, int detector) {
  const int d[] = {detector};
  return moment_from_coherence(detector_coherence_matrix(setup), d);
}

double normally_ordered_moment(const ExperimentSetup& setup,
                               std::span<const int> detectors) {
  return moment_from_coherence(detector_coherence_matrix(setup), detectors);
}

double coincidence(const ExperimentSetup& setup) {
  if (setup.geometry.detectors.size() != 2)
    throw std::invalid_argument("coincidence needs exactly two detectors");
  const Eigen::MatrixXcd g = detector_coherence_matrix(setup);
  const int pair[] = {0, 1};
  const int d0[] = {0};
  const int d1[] = {1};
  return moment_from_coherence(g, pair) /
         (moment_from_coherence(g, d0) * moment_from_coherence(g, d1));
}

double self_correlation(const ExperimentSetup& setup, int detector) {
  const Eigen::MatrixXcd g = detector_coherence_matrix(setup);
  const int twice[] = {detector, detector};
  const int once[] = {detector};
  const double mean = moment_from_coherence(g, once);
  return moment_from_coherence(g, twice) / (mean * mean);
}

std::vector<WickTerm> wick_expansion(const ExperimentSetup& setup) {
  setup.validate();
  if (setup.geometry.sources.size() != 2 ||
      setup.geometry.detectors.size() != 2)
    throw std::invalid_argument(
        "wick expansion covers the two-source, two-detector case");

  Eigen::Matrix2cd amp;
  for (int b = 0; b < 2; ++b)
    for (int s = 0; s < 2; ++s)
      amp(b, s) = propagation_amplitude(setup.geometry, b, s, setup.mode);
  const Eigen::Matrix2cd& a3 = setup.detector_analysers[0].matrix();
  const Eigen::Matrix2cd& a4 = setup.detector_analysers[1].matrix();

  // Term (s, s', t, t'): source s feeds the creation operator of N_3, s'
  // its annihilation, t and t' likewise for N_4. Thermal contraction pairs
  // creations with annihilations of the same source only, leaving the
  // direct pairing (s=s', t=t') and the exchange pairing (s=t', t=s').
  std::vector<WickTerm> terms;
  terms.reserve(16);
  for (int s = 0; s < 2; ++s)
    for (int sp = 0; sp < 2; ++sp)
      for (int t = 0; t < 2; ++t)
        for (int tp = 0; tp < 2; ++tp) {
          const Eigen::Matrix2cd& ps = setup.source_analysers[s].matrix();
          const Eigen::Matrix2cd& psp = setup.source_analysers[sp].matrix();
          const Eigen::Matrix2cd& pt = setup.source_analysers[t].matrix();
          const Eigen::Matrix2cd& ptp = setup.source_analysers[tp].matrix();
          Complex bracket(0.0, 0.0);
          if (s == sp && t == tp)
            bracket += (ps * a3 * psp).trace() * (pt * a4 * ptp).trace();
          if (s == tp && t == sp)
            bracket += (ps * a3 * psp * pt * a4 * ptp).trace();
          const Complex value = std::conj(amp(0, s)) * amp(0, sp) *
                                std::conj(amp(1, t)) * amp(1, tp) *
                                setup.occupations[s] * setup.occupations[t] *
                                bracket;
          terms.push_back({s, sp, t, tp, value});
        }
  return terms;
}

}  // namespace hbtsim
