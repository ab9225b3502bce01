#pragma once

#include <complex>
#include <span>
#include <vector>

#include <Eigen/Dense>

#include "hbtsim/optics.hpp"
#include "hbtsim/polarization.hpp"

namespace hbtsim {

// A polarisation analyser in a beam path: either a rank-1 projector or an
// open (unpolarized) port, which passes both components. The open port is
// the one place a rank-2 idempotent enters the model.
class Analyser {
 public:
  static Analyser polarizer(const PolarizationState& s);
  static Analyser polarizer(const Projector& p);
  static Analyser unpolarized();

  const Eigen::Matrix2cd& matrix() const { return m_; }
  bool is_unpolarized() const { return open_; }

 private:
  Analyser(Eigen::Matrix2cd m, bool open) : m_(std::move(m)), open_(open) {}
  Eigen::Matrix2cd m_;
  bool open_;
};

// Independent thermal sources behind analysers, detectors behind analysers.
// occupations[s] is the mean photon number per polarisation mode of source
// s before its analyser. Field units are chosen so a far-field amplitude
// carries 1/meters; counts then scale as occupations/l^2.
struct ExperimentSetup {
  Geometry geometry;
  std::vector<Analyser> source_analysers;
  std::vector<Analyser> detector_analysers;
  std::vector<double> occupations;
  PropagationMode mode = PropagationMode::far_field;

  void validate() const;
};

// The arrangement the two-detector results quote: source 1 analysed right
// circular, source 2 left circular, detectors analysed linear at phi3 and
// phi4, equal occupations.
ExperimentSetup canonical_setup(const Geometry& g, double phi3, double phi4,
                                double n_b);

// First-order coherence G[(b,alpha),(b',beta)] = <a_b^dag,alpha a_b'^beta>
// over composite (detector, polarisation) modes, detector-major ordering.
// Each detector mode is a_b = P_b sum_s u_bs P_s a_s, and the thermal
// sources satisfy <a_s^dag,gamma a_s'^delta> = delta_ss' delta^gamma,delta
// n_s, which contracts to
//
//     G[(b,a),(b',c)] = sum_s n_s conj(u_bs) u_b's [P_b' P_s P_b]^(c,a).
//
// G is Hermitian and positive semidefinite; every source contributes a
// sandwich of rank at most its analyser rank.
Eigen::MatrixXcd detector_coherence_matrix(const ExperimentSetup& setup,
                                           double time_phase = 0.0);

// Permanent by Ryser's formula with Gray-code subset stepping; exact, cost
// O(2^n n). Guarded by kMaxMomentOrder at the call sites below.
Complex permanent(const Eigen::MatrixXcd& a);

inline constexpr int kMaxMomentOrder = 8;

// <N_b> in 1/meters^2.
double mean_count(const ExperimentSetup& setup, int detector);

// Normally ordered <: N_b1 ... N_bk :> for a multiset of detectors (repeats
// raise the order on one detector). Wick's theorem for the thermal state
// turns this into permanents of coherence submatrices, summed over the
// polarisation assignment of each slot. Throws CapacityError past
// kMaxMomentOrder.
double normally_ordered_moment(const ExperimentSetup& setup,
                               std::span<const int> detectors);

// <: N_3 N_4 :> / (<N_3><N_4>) for a two-detector setup; dimensionless,
// in [1, 2] for the canonical arrangement.
double coincidence(const ExperimentSetup& setup);

// <: N_b^2 :> / <N_b>^2; equals 2 for thermal light through any single
// analyser chain and carries no dependence on the far detector's analyser.
double self_correlation(const ExperimentSetup& setup, int detector);

// One term of the sixteen-fold expansion of <: N_3 N_4 :> obtained by
// choosing a source for each of the four mode operators. create3 is the
// source feeding the creation operator of detector 3's number operator,
// annihilate3 its annihilation partner, likewise for detector 4. The value
// carries the thermal contraction; terms whose pairing would couple
// distinct independent sources are exactly zero.
struct WickTerm {
  int create3 = 0;
  int annihilate3 = 0;
  int create4 = 0;
  int annihilate4 = 0;
  Complex value;
};

// All sixteen terms for a two-source, two-detector setup, in lexicographic
// (create3, annihilate3, create4, annihilate4) order. Their sum equals
// normally_ordered_moment on {3, 4}.
std::vector<WickTerm> wick_expansion(const ExperimentSetup& setup);

}  // namespace hbtsim
