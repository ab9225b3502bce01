#include "hbtsim/fock_oracle.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "hbtsim/errors.hpp"

namespace hbtsim {

namespace {

struct LoweringTerm {
  std::uint64_t stride;  // code decrement for one quantum out of this mode
  int base;              // occupation radix, cutoff + 1
  Complex coefficient;   // u_bs [P_b P_s]^(alpha, gamma)
};

struct SparseState {
  std::vector<std::uint64_t> code;
  std::vector<Complex> amp;
};

// Applies sum_m c_m a_m to a sparse Fock vector, merging duplicate basis
// states so later squaring sees interference.
void apply_lowering(const std::vector<LoweringTerm>& terms,
                    const SparseState& in, SparseState* out,
                    std::vector<std::size_t>* order) {
  out->code.clear();
  out->amp.clear();
  for (std::size_t i = 0; i < in.code.size(); ++i) {
    const std::uint64_t c = in.code[i];
    for (const LoweringTerm& t : terms) {
      const auto n = static_cast<int>((c / t.stride) % t.base);
      if (n == 0) continue;
      out->code.push_back(c - t.stride);
      out->amp.push_back(in.amp[i] * t.coefficient * std::sqrt(double(n)));
    }
  }
  order->resize(out->code.size());
  for (std::size_t i = 0; i < order->size(); ++i) (*order)[i] = i;
  std::sort(order->begin(), order->end(), [&](std::size_t a, std::size_t b) {
    return out->code[a] < out->code[b];
  });
  SparseState merged;
  merged.code.reserve(out->code.size());
  merged.amp.reserve(out->code.size());
  for (std::size_t i : *order) {
    if (!merged.code.empty() && merged.code.back() == out->code[i]) {
      merged.amp.back() += out->amp[i];
    } else {
      merged.code.push_back(out->code[i]);
      merged.amp.push_back(out->amp[i]);
    }
  }
  *out = std::move(merged);
}

double moment_truncated(const ExperimentSetup& setup,
                        std::span<const int> detectors, int cutoff) {
  setup.validate();
  const auto n_src = static_cast<int>(setup.geometry.sources.size());
  const auto n_det = static_cast<int>(setup.geometry.detectors.size());
  const auto k = static_cast<int>(detectors.size());
  if (k > kMaxMomentOrder)
    throw CapacityError("moment order exceeds supported maximum");
  for (int d : detectors)
    if (d < 0 || d >= n_det)
      throw std::invalid_argument("detector index out of range");

  const int base = cutoff + 1;
  const int n_modes = 2 * n_src;
  std::uint64_t dim = 1;
  for (int m = 0; m < n_modes; ++m) {
    if (dim > kMaxFockDimension / static_cast<std::uint64_t>(base))
      throw CapacityError("truncated Fock space too large");
    dim *= static_cast<std::uint64_t>(base);
  }

  // component[2b + alpha]: lowering terms of detector mode component
  // (b, alpha), one per contributing source mode (s, gamma).
  std::vector<std::vector<LoweringTerm>> component(
      static_cast<std::size_t>(2 * n_det));
  for (int b = 0; b < n_det; ++b) {
    const Eigen::Matrix2cd& pb = setup.detector_analysers[b].matrix();
    for (int s = 0; s < n_src; ++s) {
      const Complex u = propagation_amplitude(setup.geometry, b, s, setup.mode);
      const Eigen::Matrix2cd chain = pb * setup.source_analysers[s].matrix();
      for (int alpha = 0; alpha < 2; ++alpha)
        for (int gamma = 0; gamma < 2; ++gamma) {
          const Complex coeff = u * chain(alpha, gamma);
          if (std::abs(coeff) == 0.0) continue;
          std::uint64_t stride = 1;
          for (int m = 0; m < 2 * s + gamma; ++m)
            stride *= static_cast<std::uint64_t>(base);
          component[static_cast<std::size_t>(2 * b + alpha)].push_back(
              {stride, base, coeff});
        }
    }
  }

  // Per-mode sqrt of the unnormalized geometric weights; the column weight
  // is the product over modes of sqrt(p(n_m)).
  std::vector<std::vector<double>> sqrt_p(static_cast<std::size_t>(n_modes));
  for (int m = 0; m < n_modes; ++m) {
    const double nbar = setup.occupations[static_cast<std::size_t>(m / 2)];
    sqrt_p[m].resize(static_cast<std::size_t>(base));
    for (int n = 0; n < base; ++n)
      sqrt_p[m][n] = std::sqrt(std::pow(nbar, n) /
                               std::pow(1.0 + nbar, n + 1));
  }

  double total = 0.0;
  SparseState state, next;
  std::vector<std::size_t> order;
  const std::uint32_t assignments = std::uint32_t{1} << k;
  for (std::uint64_t col = 0; col < dim; ++col) {
    double weight = 1.0;
    std::uint64_t rem = col;
    for (int m = 0; m < n_modes; ++m) {
      weight *= sqrt_p[m][rem % static_cast<std::uint64_t>(base)];
      rem /= static_cast<std::uint64_t>(base);
    }
    for (std::uint32_t mask = 0; mask < assignments; ++mask) {
      state.code.assign(1, col);
      state.amp.assign(1, Complex(weight, 0.0));
      for (int i = 0; i < k && !state.code.empty(); ++i) {
        const auto slot = static_cast<std::size_t>(
            2 * detectors[i] + ((mask >> i) & 1u));
        apply_lowering(component[slot], state, &next, &order);
        std::swap(state, next);
      }
      for (const Complex& a : state.amp) total += std::norm(a);
    }
  }
  return total;
}

}  // namespace

std::uint64_t fock_dimension(const ExperimentSetup& setup, int cutoff) {
  std::uint64_t dim = 1;
  for (std::size_t m = 0; m < 2 * setup.geometry.sources.size(); ++m)
    dim *= static_cast<std::uint64_t>(cutoff + 1);
  return dim;
}

FockOracleResult fock_normally_ordered_moment(const ExperimentSetup& setup,
                                              std::span<const int> detectors,
                                              int cutoff) {
  if (cutoff < 1)
    throw std::invalid_argument("cutoff must be at least 1");
  FockOracleResult r;
  r.value = moment_truncated(setup, detectors, cutoff);
  r.truncation_error =
      std::abs(r.value - moment_truncated(setup, detectors, cutoff - 1));
  return r;
}

FockOracleResult fock_mean_count(const ExperimentSetup& setup, int detector,
                                 int cutoff) {
  const int d[] = {detector};
  return fock_normally_ordered_moment(setup, d, cutoff);
}

FockOracleResult fock_coincidence(const ExperimentSetup& setup, int cutoff) {
  if (cutoff < 1)
    throw std::invalid_argument("cutoff must be at least 1");
  if (setup.geometry.detectors.size() != 2)
    throw std::invalid_argument("coincidence needs exactly two detectors");
  const auto ratio = [&setup](int c) {
    const int pair[] = {0, 1};
    const int d0[] = {0};
    const int d1[] = {1};
    return moment_truncated(setup, pair, c) /
           (moment_truncated(setup, d0, c) * moment_truncated(setup, d1, c));
  };
  FockOracleResult r;
  r.value = ratio(cutoff);
  r.truncation_error = std::abs(r.value - ratio(cutoff - 1));
  return r;
}

}  // namespace hbtsim
