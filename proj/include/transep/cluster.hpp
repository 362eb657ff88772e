#pragma once

#include "transep/types.hpp"

#include <cstdint>
#include <string>
#include <vector>

namespace transep::cluster {

struct AlignResult {
    Eigen::MatrixXd X;       // rows circularly shifted, global |extremum| centered
    std::vector<int> shifts; // applied shift per row (positive = right)
};

/// Requires an odd row length. Ties on |extremum| resolve toward the sample
/// closest to the center, so alignment is idempotent.
AlignResult align_epochs(const Eigen::MatrixXd& X);

struct ClusterResult {
    std::vector<int> assignments;
    Eigen::MatrixXd centroids; // k x L
    double inertia = 0.0;
    int n_iter = 0;
    std::vector<double> inertia_history; // per Lloyd iteration of the winning restart
};

/// Lloyd iterations from k-means++ seeding, best of n_init restarts by
/// inertia. Empty clusters are repaired with the farthest point.
ClusterResult kmeans(const Eigen::MatrixXd& X, int k, std::uint64_t seed,
                     int n_init = 10);

enum class SortKey { amplitude, latency };

SortKey parse_sort_key(const std::string& key);

/// Stable permutation of row indices by peak amplitude or extremum latency.
std::vector<Eigen::Index> sort_order(const Eigen::MatrixXd& X, SortKey key);

} // namespace transep::cluster
