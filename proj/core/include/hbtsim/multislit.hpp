#pragma once

#include "hbtsim/correlator.hpp"

namespace hbtsim {

// Single-particle amplitudes through three slits at one detection point.
struct SlitAmplitudes {
  Complex psi_a;
  Complex psi_b;
  Complex psi_c;
};

// Inclusion-exclusion residual of the three-slit detection probability,
//
//   eps = P_abc - P_ab - P_bc - P_ca + P_a + P_b + P_c,
//
// with P_x.. = |sum of the open amplitudes|^2. Identically zero: squaring a
// sum produces only pairwise cross terms, so three slits add nothing that
// pairs of slits do not already contain.
double sorkin_parameter(const SlitAmplitudes& amps);

// Three polarised sources behind analysers a, b, c and three unpolarised
// detectors (identity analysers), equal occupation per source.
ExperimentSetup triple_setup(const Geometry& g, const PolarizationState& a,
                             const PolarizationState& b,
                             const PolarizationState& c, double n_b);

// <: N_4 N_5 N_6 :> in 1/meters^6 via the permanent engine. Requires three
// sources and three unpolarised detectors.
double triple_coincidence(const ExperimentSetup& setup);

// Connected three-detector part of the moment:
//
//   kappa = <:N4 N5 N6:> - m4 m5 m6 - x45 m6 - x46 m5 - x56 m4,
//
// where m are mean counts and x_ab = <:Na Nb:> - ma mb. What survives is
// the sum over closed source paths 4 -> 5 -> 6 -> 4 (both orientations),
// the only place a product of three distinct projectors, and with it the
// triangle phase, can appear.
double cyclic_cumulant(const ExperimentSetup& setup);

// The part of cyclic_cumulant jointly linear in all three occupations,
// extracted by rerunning it over the seven nonempty source subsets with
// signs (-1)^(3 - |subset|). Paths revisiting a source drop out; the
// remainder is 2 Re{Z tau} with tau = Tr[P_a P_b P_c] and Z a computable
// geometry factor.
double multilinear_cyclic_term(const ExperimentSetup& setup);

struct GeometricIsolation {
  // arg Tr[P_a P_b P_c]: half the signed solid angle of the analyser
  // triangle on the sphere, modulo 2*pi.
  double phase = 0.0;
  double magnitude = 0.0;
  // Fewer than three distinct analyser points, or magnitude too small to
  // carry a phase; phase is reported as 0.
  bool degenerate = false;
};

// Recovers the triangle phase from counting data alone. The multilinear
// cyclic term is evaluated on several copies of the setup that differ only
// in a transverse offset of detector 6; each offset rotates the known
// factor Z, and a least-squares fit of 2 Re{Z tau} across the offsets
// separates Re tau from Im tau. No polarisation algebra enters on the data
// side, so agreement with the projector trace is a genuine closed loop.
// Requires spatially separated sources (the offsets must change relative
// source phases); throws std::invalid_argument otherwise.
GeometricIsolation geometric_isolation(const ExperimentSetup& setup);

}  // namespace hbtsim
