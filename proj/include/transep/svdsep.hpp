#pragma once

#include "transep/detector.hpp"
#include "transep/types.hpp"

namespace transep::svdsep {

/// Thin SVD X = U * diag(S) * V^T with a fixed sign gauge: each column of V
/// is flipped so its largest-magnitude entry is positive.
struct SvdBasis {
    Eigen::MatrixXd U; // n_epochs x r
    Eigen::VectorXd S; // r, nonincreasing
    Eigen::MatrixXd V; // L x r
};

/// Rank-K temporal basis: the first K right singular vectors.
struct TransientModel {
    Eigen::MatrixXd basis; // L x K, orthonormal columns
    int K = 0;
    int channel_index = 0;
};

struct EventWindow {
    int channel = 0;
    Eigen::Index start = 0; // inclusive
    Eigen::Index end = 0;   // exclusive
};

struct SeparationResult {
    Recording transient; // projections inside event windows, zero elsewhere
    Recording residual;  // original - transient, exact
    std::vector<EventWindow> windows;
    std::vector<std::string> warnings;
};

SvdBasis compute_svd(const Eigen::MatrixXd& X);

TransientModel build_model(const SvdBasis& svd, int K, int channel_index = 0);

/// Orthogonal projection of a length-L segment onto span(model.basis).
Eigen::VectorXd project_epoch(const Eigen::VectorXd& segment,
                              const TransientModel& model);

/// Per channel: rank-K basis from the detected-event epochs, each event
/// window replaced by its projection; overlapping windows are blended with a
/// linear crossfade. jobs > 1 processes channels in parallel; results do not
/// depend on the worker count.
SeparationResult despike(const Recording& rec, const detector::PeakSet& peaks,
                         const RunConfig& config, int jobs = 1);

} // namespace transep::svdsep
