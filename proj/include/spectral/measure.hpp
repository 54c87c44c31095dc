#pragma once

#include <complex>
#include <cstdint>
#include <span>
#include <vector>

namespace spectral {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;

/// A weighted sum of point masses on the circle [0, 2*pi).
///
/// Invariants (enforced by make_spike_measure):
///   - locations sorted ascending, all in [0, 2*pi)
///   - pairwise circular gap >= min_gap > 0
///   - every |weights[k]| > 0
struct SpikeMeasure {
  std::vector<double> locations;
  std::vector<std::complex<double>> weights;
  double min_gap = 0.0;

  int order() const { return static_cast<int>(locations.size()); }
};

/// Frequency-dependent complex Gaussian noise: entry j gets
/// |j|^exponent * sigma * z with z standard complex Gaussian (E|z|^2 = 1).
/// The same (master_seed, n, trial_index) always reproduces the same vector.
struct NoiseModel {
  double sigma = 0.0;
  double exponent = 0.0;  // p >= 0
  std::uint64_t master_seed = 0;
};

/// Complex samples indexed j = -max_freq .. max_freq (2n+1 values).
struct MeasurementSet {
  int max_freq = 0;
  std::vector<std::complex<double>> samples;

  // provenance of the noise applied (all zero when noiseless)
  double sigma = 0.0;
  double exponent = 0.0;
  std::uint64_t seed = 0;

  std::complex<double> at(int j) const { return samples[j + max_freq]; }
};

/// min(|a-b|, 2*pi - |a-b|) for angles in radians.
double circular_distance(double a, double b);

/// Smallest pairwise circular gap of a sorted location list.
/// Returns 2*pi for a single location (no pair to constrain).
double min_circular_gap(std::span<const double> sorted_locations);

/// Wrap an angle into [0, 2*pi).
double wrap_angle(double x);

/// Validating constructor. Locations may be passed unsorted; weights are
/// permuted along. min_gap must be positive and no larger than the measured
/// minimum circular gap.
SpikeMeasure make_spike_measure(std::vector<double> locations,
                                std::vector<std::complex<double>> weights,
                                double min_gap);

/// As above with min_gap set to the measured minimum circular gap.
SpikeMeasure make_spike_measure(std::vector<double> locations,
                                std::vector<std::complex<double>> weights);

/// sum_k e^{i j x_k} w_k
std::complex<double> fourier_coefficient(const SpikeMeasure& measure, int j);

/// Exact coefficients for j = -n .. n. Requires n >= 1.
MeasurementSet sample_noiseless(const SpikeMeasure& measure, int n);

/// 2n+1 independent noise values, entry j scaled by |j|^p * sigma.
/// (|0|^p is 1 for p = 0 and 0 for p > 0.) Deterministic in
/// (model.master_seed, n, trial_index), independent of call order.
std::vector<std::complex<double>> draw_noise(const NoiseModel& model, int n,
                                             std::int64_t trial_index);

/// clean + draw_noise(model, clean.max_freq, trial_index), with provenance
/// recorded on the result.
MeasurementSet apply_noise(const MeasurementSet& clean, const NoiseModel& model,
                           std::int64_t trial_index);

/// Random measure with r spikes, circular gaps >= min_gap, and real weights
/// uniform on [weight_low, weight_high]. Locations are distributed uniformly
/// conditioned on the gap constraint. Requires r >= 1, r * min_gap < 2*pi,
/// 0 < weight_low <= weight_high. Deterministic given seed.
SpikeMeasure random_measure(int r, double min_gap, double weight_low,
                            double weight_high, std::uint64_t seed);

}  // namespace spectral
