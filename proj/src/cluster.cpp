#include "transep/cluster.hpp"

#include "transep/rng.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>

namespace transep::cluster {

namespace {

// extremum index: largest |value|, ties resolve toward the center, then earlier
Eigen::Index extremum_index(const Eigen::VectorXd& row, Eigen::Index center) {
    Eigen::Index best = 0;
    double best_val = -1.0;
    Eigen::Index best_center_dist = std::numeric_limits<Eigen::Index>::max();
    for (Eigen::Index i = 0; i < row.size(); ++i) {
        const double a = std::abs(row[i]);
        const Eigen::Index cd = std::abs(i - center);
        if (a > best_val || (a == best_val && cd < best_center_dist)) {
            best_val = a;
            best = i;
            best_center_dist = cd;
        }
    }
    return best;
}

Eigen::MatrixXd kmeanspp_seed(const Eigen::MatrixXd& X, int k, std::mt19937_64& rng) {
    const auto n = X.rows();
    Eigen::MatrixXd centroids(k, X.cols());
    std::vector<Eigen::Index> chosen;
    chosen.push_back(static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n)));
    centroids.row(0) = X.row(chosen[0]);
    Eigen::VectorXd d2 = (X.rowwise() - centroids.row(0)).rowwise().squaredNorm();
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int j = 1; j < k; ++j) {
        const double total = d2.sum();
        Eigen::Index pick = 0;
        if (total > 0.0) {
            const double u = unit(rng) * total;
            double acc = 0.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                acc += d2[i];
                if (u < acc) {
                    pick = i;
                    break;
                }
                pick = i; // falls through to the last row on rounding
            }
        } else {
            pick = static_cast<Eigen::Index>(rng() % static_cast<std::uint64_t>(n));
        }
        centroids.row(j) = X.row(pick);
        d2 = d2.cwiseMin((X.rowwise() - centroids.row(j)).rowwise().squaredNorm());
    }
    return centroids;
}

struct LloydRun {
    std::vector<int> assignments;
    Eigen::MatrixXd centroids;
    double inertia = 0.0;
    int n_iter = 0;
    std::vector<double> history;
};

LloydRun lloyd(const Eigen::MatrixXd& X, int k, std::mt19937_64& rng, int max_iter) {
    const auto n = X.rows();
    LloydRun run;
    run.centroids = kmeanspp_seed(X, k, rng);
    run.assignments.assign(static_cast<std::size_t>(n), -1);
    std::vector<int> prev;
    for (int iter = 0; iter < max_iter; ++iter) {
        prev = run.assignments;
        for (Eigen::Index i = 0; i < n; ++i) {
            int best = 0;
            double best_d = (X.row(i) - run.centroids.row(0)).squaredNorm();
            for (int c = 1; c < k; ++c) {
                const double d = (X.row(i) - run.centroids.row(c)).squaredNorm();
                if (d < best_d) {
                    best_d = d;
                    best = c;
                }
            }
            run.assignments[static_cast<std::size_t>(i)] = best;
        }
        // empty clusters take the point farthest from its current centroid
        std::vector<Eigen::Index> counts(static_cast<std::size_t>(k), 0);
        for (int a : run.assignments) ++counts[static_cast<std::size_t>(a)];
        for (int c = 0; c < k; ++c) {
            if (counts[static_cast<std::size_t>(c)] > 0) continue;
            Eigen::Index far = 0;
            double far_d = -1.0;
            for (Eigen::Index i = 0; i < n; ++i) {
                const auto a = run.assignments[static_cast<std::size_t>(i)];
                if (counts[static_cast<std::size_t>(a)] <= 1) continue;
                const double d = (X.row(i) - run.centroids.row(a)).squaredNorm();
                if (d > far_d) {
                    far_d = d;
                    far = i;
                }
            }
            --counts[static_cast<std::size_t>(run.assignments[static_cast<std::size_t>(far)])];
            run.assignments[static_cast<std::size_t>(far)] = c;
            counts[static_cast<std::size_t>(c)] = 1;
            run.centroids.row(c) = X.row(far);
        }
        run.centroids.setZero();
        for (Eigen::Index i = 0; i < n; ++i)
            run.centroids.row(run.assignments[static_cast<std::size_t>(i)]) += X.row(i);
        for (int c = 0; c < k; ++c)
            run.centroids.row(c) /= static_cast<double>(counts[static_cast<std::size_t>(c)]);
        double inertia = 0.0;
        for (Eigen::Index i = 0; i < n; ++i)
            inertia +=
                (X.row(i) - run.centroids.row(run.assignments[static_cast<std::size_t>(i)]))
                    .squaredNorm();
        run.inertia = inertia;
        run.history.push_back(inertia);
        run.n_iter = iter + 1;
        if (run.assignments == prev) break;
    }
    return run;
}

} // namespace

AlignResult align_epochs(const Eigen::MatrixXd& X) {
    if (X.cols() % 2 == 0)
        throw std::invalid_argument("alignment needs an odd epoch length");
    const Eigen::Index L = X.cols();
    const Eigen::Index center = (L - 1) / 2;
    AlignResult out;
    out.X.resizeLike(X);
    out.shifts.reserve(static_cast<std::size_t>(X.rows()));
    for (Eigen::Index r = 0; r < X.rows(); ++r) {
        const Eigen::Index at = extremum_index(X.row(r).transpose(), center);
        Eigen::Index shift = center - at; // circular, positive = right
        for (Eigen::Index i = 0; i < L; ++i)
            out.X(r, (i + shift + L) % L) = X(r, i);
        out.shifts.push_back(static_cast<int>(shift));
    }
    return out;
}

ClusterResult kmeans(const Eigen::MatrixXd& X, int k, std::uint64_t seed, int n_init) {
    if (k < 1) throw std::invalid_argument("k must be at least 1");
    if (X.rows() < k) throw std::invalid_argument("k exceeds the number of rows");
    if (n_init < 1) throw std::invalid_argument("n_init must be at least 1");
    constexpr int max_iter = 300;
    LloydRun best;
    bool have = false;
    for (int restart = 0; restart < n_init; ++restart) {
        std::mt19937_64 rng(derive_seed(seed, static_cast<std::uint64_t>(restart)));
        auto run = lloyd(X, k, rng, max_iter);
        if (!have || run.inertia < best.inertia) {
            best = std::move(run);
            have = true;
        }
    }
    ClusterResult result;
    result.assignments = std::move(best.assignments);
    result.centroids = std::move(best.centroids);
    result.inertia = best.inertia;
    result.n_iter = best.n_iter;
    result.inertia_history = std::move(best.history);
    return result;
}

SortKey parse_sort_key(const std::string& key) {
    if (key == "amplitude") return SortKey::amplitude;
    if (key == "latency") return SortKey::latency;
    throw std::invalid_argument("unknown sort key: " + key);
}

std::vector<Eigen::Index> sort_order(const Eigen::MatrixXd& X, SortKey key) {
    if (X.rows() < 1) throw std::invalid_argument("sort_order of empty matrix");
    std::vector<Eigen::Index> order(static_cast<std::size_t>(X.rows()));
    std::iota(order.begin(), order.end(), 0);
    std::vector<double> keys(order.size());
    const Eigen::Index center = (X.cols() - 1) / 2;
    for (Eigen::Index r = 0; r < X.rows(); ++r) {
        if (key == SortKey::amplitude)
            keys[static_cast<std::size_t>(r)] = X.row(r).cwiseAbs().maxCoeff();
        else
            keys[static_cast<std::size_t>(r)] =
                static_cast<double>(extremum_index(X.row(r).transpose(), center));
    }
    std::stable_sort(order.begin(), order.end(), [&](Eigen::Index a, Eigen::Index b) {
        return keys[static_cast<std::size_t>(a)] < keys[static_cast<std::size_t>(b)];
    });
    return order;
}

} // namespace transep::cluster
