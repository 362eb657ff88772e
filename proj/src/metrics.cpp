#include "transep/metrics.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace transep::metrics {

GofResult gof(const Eigen::VectorXd& x_true, const Eigen::VectorXd& x_hat) {
    if (x_true.size() != x_hat.size())
        throw std::invalid_argument("gof: length mismatch");
    if (x_true.size() < 1) throw std::invalid_argument("gof: empty series");
    const double ref_energy = x_true.squaredNorm();
    if (!(ref_energy > 0.0)) throw std::invalid_argument("gof: zero-energy reference");
    GofResult g;
    g.n_samples = x_true.size();
    g.residual_ratio = (x_true - x_hat).squaredNorm() / ref_energy;
    g.fit = 1.0 - g.residual_ratio;
    return g;
}

MatchResult match_events(const std::vector<Eigen::Index>& detected,
                         const std::vector<Eigen::Index>& reference, double fs,
                         double tol_ms) {
    if (tol_ms < 0.0) throw std::invalid_argument("match tolerance must be nonnegative");
    const auto tol = static_cast<Eigen::Index>(std::llround(tol_ms * fs / 1000.0));
    MatchResult m;
    std::vector<bool> used(reference.size(), false);
    std::size_t lo = 0;
    for (const auto d : detected) {
        while (lo < reference.size() && reference[lo] < d - tol) ++lo;
        // nearest unmatched reference within tolerance, earlier one on ties
        std::size_t best = reference.size();
        Eigen::Index best_dist = tol + 1;
        for (std::size_t j = lo; j < reference.size() && reference[j] <= d + tol; ++j) {
            if (used[j]) continue;
            const Eigen::Index dist = std::abs(reference[j] - d);
            if (dist < best_dist) {
                best_dist = dist;
                best = j;
            }
        }
        if (best < reference.size()) {
            used[best] = true;
            m.pairing.emplace_back(d, reference[best]);
        }
    }
    m.tp = static_cast<int>(m.pairing.size());
    m.fp = static_cast<int>(detected.size()) - m.tp;
    m.fn = static_cast<int>(reference.size()) - m.tp;
    return m;
}

std::optional<double> precision(int tp, int fp) {
    if (tp < 0 || fp < 0) throw std::invalid_argument("negative detection counts");
    if (tp + fp == 0) return std::nullopt; // no detections
    return static_cast<double>(tp) / static_cast<double>(tp + fp);
}

DetectionScore score(const MatchResult& m) {
    return {m.tp, m.fp, m.fn, precision(m.tp, m.fp)};
}

std::vector<double> measure_snr_db(const Recording& clean, const Recording& noise) {
    if (clean.data.rows() != noise.data.rows() || clean.data.cols() != noise.data.cols())
        throw std::invalid_argument("snr: shape mismatch");
    std::vector<double> out;
    for (Eigen::Index c = 0; c < clean.n_channels(); ++c) {
        const double p_clean = clean.data.col(c).squaredNorm() /
                               static_cast<double>(clean.n_samples());
        const double p_noise = noise.data.col(c).squaredNorm() /
                               static_cast<double>(noise.n_samples());
        if (!(p_noise > 0.0)) throw std::invalid_argument("snr: zero noise power");
        out.push_back(10.0 * std::log10(p_clean / p_noise));
    }
    return out;
}

} // namespace transep::metrics
