#include "transep/detector.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <stdexcept>
#include <vector>

namespace transep::detector {

double quantile(const Eigen::VectorXd& x, double p) {
    if (x.size() < 1) throw std::invalid_argument("quantile of empty series");
    std::vector<double> sorted(x.data(), x.data() + x.size());
    std::sort(sorted.begin(), sorted.end());
    const double pos = p * static_cast<double>(sorted.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

ThresholdPair quantile_thresholds(const Eigen::VectorXd& x, double d) {
    if (x.size() < 4) throw std::invalid_argument("series too short for quantile thresholds");
    if (!(d > 0.0)) throw std::invalid_argument("d must be positive");
    std::vector<double> sorted(x.data(), x.data() + x.size());
    std::sort(sorted.begin(), sorted.end());
    auto interp = [&](double p) {
        const double pos = p * static_cast<double>(sorted.size() - 1);
        const auto lo = static_cast<std::size_t>(std::floor(pos));
        const auto hi = static_cast<std::size_t>(std::ceil(pos));
        const double frac = pos - static_cast<double>(lo);
        return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
    };
    ThresholdPair t;
    t.q25 = interp(0.25);
    t.q50 = interp(0.50);
    t.q75 = interp(0.75);
    t.d = d;
    const double iqr = t.q75 - t.q25;
    t.thr_h = t.q50 + d * iqr;
    t.thr_l = t.q50 - d * iqr;
    return t;
}

std::vector<Eigen::Index> detect_peaks(const Eigen::VectorXd& x, double fs,
                                       const DetectParams& params) {
    const auto thr = quantile_thresholds(x, params.d);
    const auto refractory =
        static_cast<Eigen::Index>(std::llround(params.refractory_ms * fs / 1000.0));

    struct Candidate {
        Eigen::Index idx;
        double dev; // |x - median|
    };
    std::vector<Candidate> candidates;
    for (Eigen::Index i = 1; i + 1 < x.size(); ++i) {
        const bool is_max = x[i - 1] <= x[i] && x[i] >= x[i + 1] && x[i] > thr.thr_h;
        const bool is_min = x[i - 1] >= x[i] && x[i] <= x[i + 1] && x[i] < thr.thr_l;
        if (is_max || is_min) candidates.push_back({i, std::abs(x[i] - thr.q50)});
    }
    // strongest deviation wins a refractory conflict, earlier sample on ties
    std::stable_sort(candidates.begin(), candidates.end(),
                     [](const Candidate& a, const Candidate& b) {
                         if (a.dev != b.dev) return a.dev > b.dev;
                         return a.idx < b.idx;
                     });
    std::set<Eigen::Index> kept;
    for (const auto& c : candidates) {
        auto right = kept.lower_bound(c.idx);
        if (right != kept.end() && *right - c.idx < refractory) continue;
        if (right != kept.begin() && c.idx - *std::prev(right) < refractory) continue;
        kept.insert(c.idx);
    }
    return {kept.begin(), kept.end()};
}

PeakSet detect_all(const Recording& rec, const DetectParams& params) {
    PeakSet set;
    set.peaks.resize(static_cast<std::size_t>(rec.n_channels()));
    for (Eigen::Index c = 0; c < rec.n_channels(); ++c)
        set.peaks[static_cast<std::size_t>(c)] =
            detect_peaks(rec.data.col(c), rec.fs, params);
    return set;
}

EpochMatrix extract_epochs(const Eigen::VectorXd& x,
                           const std::vector<Eigen::Index>& peaks, double fs,
                           double epoch_ms, int channel_index) {
    EpochMatrix m;
    m.channel_index = channel_index;
    m.half_width = static_cast<Eigen::Index>(std::llround(epoch_ms / 2.0 * fs / 1000.0));
    const Eigen::Index L = 2 * m.half_width + 1;
    for (const auto p : peaks) {
        if (p < m.half_width || p + m.half_width >= x.size())
            m.dropped.push_back(p);
        else
            m.peak_samples.push_back(p);
    }
    m.X.resize(static_cast<Eigen::Index>(m.peak_samples.size()), L);
    for (std::size_t r = 0; r < m.peak_samples.size(); ++r)
        m.X.row(static_cast<Eigen::Index>(r)) =
            x.segment(m.peak_samples[r] - m.half_width, L).transpose();
    return m;
}

} // namespace transep::detector
