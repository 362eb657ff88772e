#pragma once

#include "transep/types.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace transep::metrics {

/// residual_ratio = sum((x - xhat)^2) / sum(x^2); fit = 1 - residual_ratio.
struct GofResult {
    double fit = 0.0;
    double residual_ratio = 0.0;
    Eigen::Index n_samples = 0;
};

GofResult gof(const Eigen::VectorXd& x_true, const Eigen::VectorXd& x_hat);

struct MatchResult {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    std::vector<std::pair<Eigen::Index, Eigen::Index>> pairing; // (detected, reference)
};

/// Greedy nearest-neighbor matching in increasing time; each reference is
/// matched at most once; a pair must lie within tol_ms.
MatchResult match_events(const std::vector<Eigen::Index>& detected,
                         const std::vector<Eigen::Index>& reference, double fs,
                         double tol_ms);

struct DetectionScore {
    int tp = 0;
    int fp = 0;
    int fn = 0;
    std::optional<double> precision; // empty when tp+fp == 0 ("no detections")
};

/// TP/(TP+FP); empty when there are no detections.
std::optional<double> precision(int tp, int fp);

DetectionScore score(const MatchResult& m);

/// Per-channel 10*log10(P_clean/P_noise) with whole-series mean-square powers.
std::vector<double> measure_snr_db(const Recording& clean, const Recording& noise);

} // namespace transep::metrics
