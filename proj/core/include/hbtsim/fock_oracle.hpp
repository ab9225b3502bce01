#pragma once

#include <span>

#include "hbtsim/correlator.hpp"

namespace hbtsim {

// Brute-force cross-check for the Gaussian-state correlator. The same
// setup is evaluated on an explicitly truncated Fock space: every source
// polarisation mode carries a geometric photon-number distribution
//
//     p(n) = nbar^n / (1 + nbar)^(n + 1),    n = 0 .. cutoff,
//
// kept unnormalized so that raising the cutoff only adds tail weight, and
// normally ordered moments are evaluated by applying the detector-mode
// lowering operators column by column:
//
//     <: N_b1 ... N_bk :> = sum_assignments || A_bk ... A_b1 sqrt(rho) ||_F^2.
//
// Nothing here uses Wick's theorem, permanents, or the coherence matrix;
// agreement with the correlator is therefore evidence, not tautology.
//
// Truncation is the one approximation, and it enters twice: the counted
// mode loses its distribution tail, and every spectator mode scales the
// result by its kept weight because the truncated state is deliberately
// left unnormalized. Each result reports the shift from dropping the top
// occupation layer, a cheap proxy for both effects combined; for the
// canonical occupation 0.1 and cutoff 6 the relative deficit on a mean
// count sits near 3.8e-6, so gates tighter than that must raise the
// cutoff.

struct FockOracleResult {
  double value = 0.0;
  // |value(cutoff) - value(cutoff - 1)|, same units as value.
  double truncation_error = 0.0;
};

inline constexpr int kDefaultFockCutoff = 6;

// Hilbert space dimension (cutoff + 1)^(2 * sources) above which the
// evaluation refuses to start.
inline constexpr std::uint64_t kMaxFockDimension = 6'000'000;

std::uint64_t fock_dimension(const ExperimentSetup& setup, int cutoff);

FockOracleResult fock_normally_ordered_moment(const ExperimentSetup& setup,
                                              std::span<const int> detectors,
                                              int cutoff = kDefaultFockCutoff);

FockOracleResult fock_mean_count(const ExperimentSetup& setup, int detector,
                                 int cutoff = kDefaultFockCutoff);

// Ratio <: N_3 N_4 :> / (<N_3><N_4>) with every factor truncated at the
// same cutoff; the reported truncation error is the cutoff-to-cutoff shift
// of the ratio itself.
FockOracleResult fock_coincidence(const ExperimentSetup& setup,
                                  int cutoff = kDefaultFockCutoff);

}  // namespace hbtsim
