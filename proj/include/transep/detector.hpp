#pragma once

#include "transep/types.hpp"

namespace transep::detector {

struct ThresholdPair {
    double thr_l = 0.0;
    double thr_h = 0.0;
    double q25 = 0.0;
    double q50 = 0.0;
    double q75 = 0.0;
    double d = 0.0;
};

/// Per-channel sorted peak sample indices; within a channel consecutive
/// peaks differ by at least the refractory distance.
struct PeakSet {
    std::vector<std::vector<Eigen::Index>> peaks;
};

struct EpochMatrix {
    int channel_index = 0;
    std::vector<Eigen::Index> peak_samples;
    std::vector<Eigen::Index> dropped; // peaks too close to the series boundary
    Eigen::Index half_width = 0;
    Eigen::MatrixXd X; // n_epochs x L, L = 2*half_width+1
};

/// Linear-interpolation quantile of the order statistics, p in [0,1].
double quantile(const Eigen::VectorXd& x, double p);

/// thr_h = Q50 + d*(Q75 - Q25), thr_l mirrored about the median.
ThresholdPair quantile_thresholds(const Eigen::VectorXd& x, double d);

struct DetectParams {
    double d = 3.0;
    double refractory_ms = 10.0;
};

/// Local extrema beyond the thresholds; among candidates closer than the
/// refractory distance the largest |x - median| wins (earlier sample on ties).
std::vector<Eigen::Index> detect_peaks(const Eigen::VectorXd& x, double fs,
                                       const DetectParams& params);

PeakSet detect_all(const Recording& rec, const DetectParams& params);

/// Rows are x[p-half_width .. p+half_width]; half_width = round(epoch_ms/2 * fs/1000).
/// Peaks without a full window are dropped and reported, not fatal.
EpochMatrix extract_epochs(const Eigen::VectorXd& x,
                           const std::vector<Eigen::Index>& peaks, double fs,
                           double epoch_ms, int channel_index = 0);

} // namespace transep::detector
