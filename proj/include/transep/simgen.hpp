#pragma once

#include "transep/types.hpp"

#include <cstdint>
#include <utility>
#include <vector>

namespace transep::simgen {

struct SimSpec {
    double fs = 1024.0;
    std::vector<double> freqs = {45.0, 55.0, 65.0, 75.0, 85.0};
    double snr_db = 10.0;
    int n_realizations = 100;
    int overlap_steps = 5;
    double trial_ms = 1000.0;
    double spike_width_ms = 50.0;
    double burst_ms = 200.0;
    double transient_amp = 1.0;
    double burst_amp = 0.5;
    std::uint64_t seed = 0;
};

void validate(const SimSpec& spec);

/// Clean per-component signals plus the transient extremum samples.
struct GroundTruth {
    Recording transient;
    Recording oscillation;
    Recording noise;
    EventList true_peaks;
};

/// Biphasic transient (Gaussian first derivative), odd about its center,
/// truncated at +/-4 sigma, discrete extremum magnitude == amplitude.
Eigen::VectorXd gen_transient(double fs, double width_ms, double amplitude);

/// Sinusoid at f0 under a Hann envelope of burst_ms; envelope peak == amplitude.
Eigen::VectorXd gen_burst(double fs, double f0, double burst_ms, double amplitude);

/// Zero-mean unit-variance series with amplitude spectrum ~ 1/sqrt(f).
Eigen::VectorXd gen_pink_noise(Eigen::Index n, std::uint64_t seed);

/// Rescales noise so 10*log10(clean_power / noise_power) == snr_db.
Eigen::VectorXd scale_to_snr(double clean_power, const Eigen::VectorXd& noise,
                             double snr_db);

/// Burst center offset (samples) relative to the transient center for
/// overlap step s: equal steps from full separation down to coincident centers.
Eigen::Index burst_offset(const SimSpec& spec, int step);

/// One realization: mixture Recording (one channel per gamma frequency) and
/// its exact additive decomposition.
std::pair<Recording, GroundTruth> simulate(const SimSpec& spec, int realization);

} // namespace transep::simgen
