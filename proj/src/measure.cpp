#include "spectral/measure.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "spectral/errors.hpp"
#include "spectral/rng.hpp"

namespace spectral {

double wrap_angle(double x) {
  double w = std::fmod(x, kTwoPi);
  if (w < 0.0) w += kTwoPi;
  if (w >= kTwoPi) w = 0.0;  // fmod can round up to 2*pi
  return w;
}

double circular_distance(double a, double b) {
  double d = std::fabs(std::fmod(a - b, kTwoPi));
  return std::min(d, kTwoPi - d);
}

double min_circular_gap(std::span<const double> sorted_locations) {
  const std::size_t r = sorted_locations.size();
  if (r < 2) return kTwoPi;
  double gap = kTwoPi - (sorted_locations[r - 1] - sorted_locations[0]);
  for (std::size_t k = 0; k + 1 < r; ++k) {
    gap = std::min(gap, sorted_locations[k + 1] - sorted_locations[k]);
  }
  return gap;
}

SpikeMeasure make_spike_measure(std::vector<double> locations,
                                std::vector<std::complex<double>> weights,
                                double min_gap) {
  if (locations.empty()) throw ConfigError("spike measure needs at least one spike");
  if (locations.size() != weights.size()) {
    throw ConfigError("spike measure: locations and weights must have equal length");
  }
  if (!(min_gap > 0.0)) throw ConfigError("spike measure: min_gap must be positive");
  for (double x : locations) {
    if (!(x >= 0.0 && x < kTwoPi)) {
      throw ConfigError("spike measure: locations must lie in [0, 2*pi)");
    }
  }
  for (const auto& w : weights) {
    if (!(std::abs(w) > 0.0)) throw ConfigError("spike measure: weights must be nonzero");
  }

  std::vector<std::size_t> idx(locations.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::sort(idx.begin(), idx.end(),
            [&](std::size_t a, std::size_t b) { return locations[a] < locations[b]; });

  SpikeMeasure m;
  m.locations.reserve(locations.size());
  m.weights.reserve(weights.size());
  for (std::size_t i : idx) {
    m.locations.push_back(locations[i]);
    m.weights.push_back(weights[i]);
  }
  m.min_gap = min_gap;

  const double measured = min_circular_gap(m.locations);
  if (measured < min_gap) {
    std::ostringstream msg;
    msg << "spike measure: measured circular gap " << measured
        << " is below declared min_gap " << min_gap;
    throw ConfigError(msg.str());
  }
  return m;
}

SpikeMeasure make_spike_measure(std::vector<double> locations,
                                std::vector<std::complex<double>> weights) {
  std::vector<double> sorted = locations;
  std::sort(sorted.begin(), sorted.end());
  const double measured = min_circular_gap(sorted);
  if (!(measured > 0.0)) {
    throw ConfigError("spike measure: duplicate locations");
  }
  return make_spike_measure(std::move(locations), std::move(weights), measured);
}

std::complex<double> fourier_coefficient(const SpikeMeasure& measure, int j) {
  std::complex<double> acc = 0.0;
  for (int k = 0; k < measure.order(); ++k) {
    acc += std::polar(1.0, j * measure.locations[k]) * measure.weights[k];
  }
  return acc;
}

MeasurementSet sample_noiseless(const SpikeMeasure& measure, int n) {
  if (n < 1) throw ConfigError("sample_noiseless: n must be >= 1");
  MeasurementSet out;
  out.max_freq = n;
  out.samples.resize(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    out.samples[j + n] = fourier_coefficient(measure, j);
  }
  return out;
}

std::vector<std::complex<double>> draw_noise(const NoiseModel& model, int n,
                                             std::int64_t trial_index) {
  if (n < 1) throw ConfigError("draw_noise: n must be >= 1");
  if (model.sigma < 0.0 || model.exponent < 0.0) {
    throw ConfigError("draw_noise: sigma and exponent must be nonnegative");
  }
  Rng rng = Rng::stream(model.master_seed, static_cast<std::uint64_t>(n),
                        static_cast<std::uint64_t>(trial_index), StreamKind::Noise);
  std::vector<std::complex<double>> z(2 * n + 1);
  for (int j = -n; j <= n; ++j) {
    // draw unconditionally so entry j is the same regardless of sigma, p
    const std::complex<double> g = rng.gaussian_complex();
    const double scale =
        model.sigma * std::pow(std::fabs(static_cast<double>(j)), model.exponent);
    z[j + n] = scale * g;
  }
  return z;
}

MeasurementSet apply_noise(const MeasurementSet& clean, const NoiseModel& model,
                           std::int64_t trial_index) {
  if (static_cast<int>(clean.samples.size()) != 2 * clean.max_freq + 1) {
    throw ConfigError("apply_noise: malformed measurement set");
  }
  MeasurementSet out = clean;
  const auto z = draw_noise(model, clean.max_freq, trial_index);
  for (std::size_t i = 0; i < out.samples.size(); ++i) out.samples[i] += z[i];
  out.sigma = model.sigma;
  out.exponent = model.exponent;
  out.seed = model.master_seed;
  return out;
}

SpikeMeasure random_measure(int r, double min_gap, double weight_low,
                            double weight_high, std::uint64_t seed) {
  if (r < 1) throw ConfigError("random_measure: r must be >= 1");
  if (!(min_gap > 0.0)) throw ConfigError("random_measure: min_gap must be positive");
  if (!(r * min_gap < kTwoPi)) {
    std::ostringstream msg;
    msg << "random_measure: infeasible, r * min_gap = " << r * min_gap
        << " must be < 2*pi = " << kTwoPi;
    throw ConfigError(msg.str());
  }
  if (!(weight_low > 0.0 && weight_low <= weight_high)) {
    throw ConfigError("random_measure: need 0 < weight_low <= weight_high");
  }

  Rng rng(seed);
  const double slack = kTwoPi - r * min_gap;

  // Gaps between consecutive spikes are min_gap plus a uniform split of the
  // slack (Dirichlet via normalized exponentials); together with a uniform
  // rotation this is exactly the uniform distribution on r points conditioned
  // on every circular gap being >= min_gap.
  std::vector<double> locations(r);
  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<double> e(r);
    double total = 0.0;
    for (double& v : e) {
      v = rng.exponential();
      total += v;
    }
    const double rotation = rng.uniform(0.0, kTwoPi);
    double pos = rotation;
    for (int k = 0; k < r; ++k) {
      locations[k] = wrap_angle(pos);
      pos += min_gap + slack * e[k] / total;
    }
    std::sort(locations.begin(), locations.end());
    if (r == 1 || min_circular_gap(locations) >= min_gap) break;
    // only reachable through rounding at the wrap point; redraw
  }

  std::vector<std::complex<double>> weights(r);
  for (auto& w : weights) w = rng.uniform(weight_low, weight_high);

  return make_spike_measure(std::move(locations), std::move(weights), min_gap);
}

}  // namespace spectral
