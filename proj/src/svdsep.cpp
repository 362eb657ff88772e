#include "transep/svdsep.hpp"

#include "transep/parallel.hpp"

#include <Eigen/SVD>

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace transep::svdsep {

SvdBasis compute_svd(const Eigen::MatrixXd& X) {
    if (X.rows() < 1 || X.cols() < 1) throw std::invalid_argument("svd of empty matrix");
    if (!X.allFinite()) throw std::invalid_argument("svd input has non-finite entries");
    Eigen::BDCSVD<Eigen::MatrixXd> svd(X, Eigen::ComputeThinU | Eigen::ComputeThinV);
    SvdBasis b;
    b.U = svd.matrixU();
    b.S = svd.singularValues();
    b.V = svd.matrixV();
    // gauge fix: largest-magnitude entry of each right singular vector positive
    for (Eigen::Index i = 0; i < b.V.cols(); ++i) {
        Eigen::Index at = 0;
        b.V.col(i).cwiseAbs().maxCoeff(&at);
        if (b.V(at, i) < 0.0) {
            b.V.col(i) = -b.V.col(i);
            b.U.col(i) = -b.U.col(i);
        }
    }
    return b;
}

TransientModel build_model(const SvdBasis& svd, int K, int channel_index) {
    if (K < 1 || K > svd.V.cols())
        throw std::invalid_argument("model rank out of range");
    TransientModel m;
    m.basis = svd.V.leftCols(K);
    m.K = K;
    m.channel_index = channel_index;
    return m;
}

Eigen::VectorXd project_epoch(const Eigen::VectorXd& segment,
                              const TransientModel& model) {
    if (segment.size() != model.basis.rows())
        throw std::invalid_argument("segment length does not match model");
    return model.basis * (model.basis.transpose() * segment);
}

SeparationResult despike(const Recording& rec, const detector::PeakSet& peaks,
                         const RunConfig& config, int jobs) {
    validate(rec);
    validate(config);
    if (peaks.peaks.size() != static_cast<std::size_t>(rec.n_channels()))
        throw std::invalid_argument("peak set channel count does not match recording");

    const auto n_ch = static_cast<std::size_t>(rec.n_channels());
    SeparationResult result;
    result.transient.fs = result.residual.fs = rec.fs;
    result.transient.channels = result.residual.channels = rec.channels;
    result.transient.data = Eigen::MatrixXd::Zero(rec.n_samples(), rec.n_channels());

    std::vector<std::vector<EventWindow>> windows(n_ch);
    std::vector<std::vector<std::string>> warnings(n_ch);

    parallel_for(n_ch, jobs, [&](std::size_t c) {
        const auto ci = static_cast<Eigen::Index>(c);
        const Eigen::VectorXd x = rec.data.col(ci);
        const auto epochs = detector::extract_epochs(
            x, peaks.peaks[c], rec.fs, config.epoch_ms, static_cast<int>(c));
        const auto n_epochs = epochs.X.rows();
        if (n_epochs == 0) return; // channel stays all-zero in the transient part

        int K = config.rank;
        if (n_epochs < K) {
            K = static_cast<int>(n_epochs);
            warnings[c] = {"channel " + rec.channels[c].name + ": only " +
                           std::to_string(n_epochs) + " epochs, rank reduced to " +
                           std::to_string(K)};
        }
        const auto model = build_model(compute_svd(epochs.X), K, static_cast<int>(c));

        // tent weights: linear crossfade wherever event windows overlap
        Eigen::VectorXd num = Eigen::VectorXd::Zero(x.size());
        Eigen::VectorXd den = Eigen::VectorXd::Zero(x.size());
        const Eigen::Index L = epochs.X.cols();
        for (Eigen::Index r = 0; r < n_epochs; ++r) {
            const Eigen::VectorXd proj = project_epoch(epochs.X.row(r).transpose(), model);
            const Eigen::Index start = epochs.peak_samples[static_cast<std::size_t>(r)] -
                                       epochs.half_width;
            for (Eigen::Index t = 0; t < L; ++t) {
                const double w = static_cast<double>(std::min(t + 1, L - t));
                num[start + t] += w * proj[t];
                den[start + t] += w;
            }
            windows[c].push_back({static_cast<int>(c), start, start + L});
        }
        for (Eigen::Index t = 0; t < x.size(); ++t)
            if (den[t] > 0.0) result.transient.data(t, ci) = num[t] / den[t];
    });

    result.residual.data = rec.data - result.transient.data;
    for (auto& w : windows)
        result.windows.insert(result.windows.end(), w.begin(), w.end());
    for (auto& w : warnings)
        result.warnings.insert(result.warnings.end(), w.begin(), w.end());
    return result;
}

} // namespace transep::svdsep
