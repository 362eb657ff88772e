#include "transep/simgen.hpp"

#include "transep/dsp.hpp"
#include "transep/rng.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>
#include <stdexcept>

namespace transep::simgen {

namespace {

Eigen::Index round_samples(double ms, double fs) {
    return static_cast<Eigen::Index>(std::llround(ms * fs / 1000.0));
}

double sigma_samples(double fs, double width_ms) {
    // main peak-to-trough of the Gaussian first derivative spans 2*sigma
    return (width_ms / 2.0) * fs / 1000.0;
}

Eigen::Index transient_half_support(double fs, double width_ms) {
    return static_cast<Eigen::Index>(std::floor(4.0 * sigma_samples(fs, width_ms)));
}

std::string channel_name(double freq) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "ch%g", freq);
    return buf;
}

} // namespace

void validate(const SimSpec& spec) {
    if (!(spec.fs > 0.0)) throw std::invalid_argument("sim: fs must be positive");
    if (spec.freqs.empty()) throw std::invalid_argument("sim: no gamma frequencies");
    for (double f : spec.freqs)
        if (!(f > 0.0) || !(f < spec.fs / 2.0))
            throw std::invalid_argument("sim: gamma frequency outside (0, fs/2)");
    if (spec.overlap_steps < 1)
        throw std::invalid_argument("sim: overlap_steps must be at least 1");
    if (spec.n_realizations < 1)
        throw std::invalid_argument("sim: n_realizations must be at least 1");
    if (!(spec.spike_width_ms > 0.0))
        throw std::invalid_argument("sim: spike width must be positive");
    if (!(spec.burst_ms > 0.0))
        throw std::invalid_argument("sim: burst length must be positive");
    if (!(spec.transient_amp > 0.0))
        throw std::invalid_argument("sim: transient amplitude must be positive");
    if (spec.burst_amp < 0.0)
        throw std::invalid_argument("sim: burst amplitude must be nonnegative");

    const Eigen::Index n = round_samples(spec.trial_ms, spec.fs);
    const Eigen::Index center = n / 2;
    const Eigen::Index half_t = transient_half_support(spec.fs, spec.spike_width_ms);
    const Eigen::Index n_burst = round_samples(spec.burst_ms, spec.fs);
    const Eigen::Index max_off = burst_offset(spec, 0);
    if (center - half_t < 0 || center + half_t >= n)
        throw std::invalid_argument("sim: trial too short for the transient window");
    if (center + max_off + n_burst / 2 >= n)
        throw std::invalid_argument("sim: trial too short for the separated burst");
}

Eigen::VectorXd gen_transient(double fs, double width_ms, double amplitude) {
    if (!(width_ms > 0.0)) throw std::invalid_argument("transient width must be positive");
    if (!(amplitude > 0.0)) throw std::invalid_argument("transient amplitude must be positive");
    const double sigma = sigma_samples(fs, width_ms);
    const Eigen::Index half = static_cast<Eigen::Index>(std::floor(4.0 * sigma));
    Eigen::VectorXd w(2 * half + 1);
    for (Eigen::Index i = -half; i <= half; ++i) {
        const double u = static_cast<double>(i) / sigma;
        w[i + half] = -u * std::exp(-0.5 * u * u);
    }
    const double peak = w.cwiseAbs().maxCoeff();
    w *= amplitude / peak;
    return w;
}

Eigen::VectorXd gen_burst(double fs, double f0, double burst_ms, double amplitude) {
    if (!(f0 > 0.0) || !(f0 < fs / 2.0))
        throw std::invalid_argument("burst frequency outside (0, fs/2)");
    if (!(burst_ms > 0.0)) throw std::invalid_argument("burst length must be positive");
    const Eigen::Index n = std::max<Eigen::Index>(round_samples(burst_ms, fs), 2);
    Eigen::VectorXd b(n);
    const double center = static_cast<double>(n - 1) / 2.0;
    for (Eigen::Index i = 0; i < n; ++i) {
        const double hann =
            0.5 * (1.0 - std::cos(2.0 * std::numbers::pi * static_cast<double>(i) /
                                  static_cast<double>(n - 1)));
        const double carrier =
            std::cos(2.0 * std::numbers::pi * f0 * (static_cast<double>(i) - center) / fs);
        b[i] = amplitude * hann * carrier;
    }
    return b;
}

Eigen::VectorXd gen_pink_noise(Eigen::Index n, std::uint64_t seed) {
    if (n < 2) throw std::invalid_argument("pink noise length must be at least 2");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> gauss(0.0, 1.0);
    std::vector<std::complex<double>> spectrum(static_cast<std::size_t>(n / 2 + 1));
    spectrum[0] = 0.0; // zero-mean by construction
    for (Eigen::Index k = 1; k <= n / 2; ++k) {
        const double amp = 1.0 / std::sqrt(static_cast<double>(k));
        const double re = gauss(rng) * amp;
        double im = gauss(rng) * amp;
        if (n % 2 == 0 && k == n / 2) im = 0.0; // Nyquist bin must be real
        spectrum[static_cast<std::size_t>(k)] = {re, im};
    }
    Eigen::VectorXd x = dsp::irfft(spectrum, n);
    x.array() -= x.mean();
    const double sd = std::sqrt(x.squaredNorm() / static_cast<double>(n));
    if (!(sd > 0.0)) throw std::runtime_error("degenerate pink noise draw");
    x /= sd;
    return x;
}

Eigen::VectorXd scale_to_snr(double clean_power, const Eigen::VectorXd& noise,
                             double snr_db) {
    if (!(clean_power > 0.0)) throw std::invalid_argument("clean power must be positive");
    const double cur = noise.squaredNorm() / static_cast<double>(noise.size());
    if (!(cur > 0.0)) throw std::invalid_argument("zero-power noise");
    const double target = clean_power / std::pow(10.0, snr_db / 10.0);
    return noise * std::sqrt(target / cur);
}

Eigen::Index burst_offset(const SimSpec& spec, int step) {
    const Eigen::Index half_t = transient_half_support(spec.fs, spec.spike_width_ms);
    const Eigen::Index n_burst = round_samples(spec.burst_ms, spec.fs);
    const Eigen::Index burst_half = (n_burst - 1) / 2;
    if (spec.overlap_steps == 1) return 0;
    const Eigen::Index steps = spec.overlap_steps - 1;
    // smallest equal step whose first offset fully separates burst and transient
    const Eigen::Index min_sep = half_t + burst_half + 1;
    const Eigen::Index step_size = (min_sep + steps - 1) / steps;
    return step_size * (steps - static_cast<Eigen::Index>(step));
}

std::pair<Recording, GroundTruth> simulate(const SimSpec& spec, int realization) {
    validate(spec);
    if (realization < 0 || realization >= spec.n_realizations)
        throw std::invalid_argument("realization index out of range");

    const Eigen::Index n = round_samples(spec.trial_ms, spec.fs);
    const auto n_ch = static_cast<Eigen::Index>(spec.freqs.size());
    const Eigen::Index center = n / 2;
    const int step = realization % spec.overlap_steps;
    const Eigen::Index offset = burst_offset(spec, step);

    const Eigen::VectorXd spike =
        gen_transient(spec.fs, spec.spike_width_ms, spec.transient_amp);
    const Eigen::Index half_t = (spike.size() - 1) / 2;

    Recording mixture;
    mixture.fs = spec.fs;
    mixture.data = Eigen::MatrixXd::Zero(n, n_ch);
    GroundTruth truth;
    truth.transient = truth.oscillation = truth.noise = mixture;

    for (Eigen::Index k = 0; k < n_ch; ++k) {
        auto name = channel_name(spec.freqs[static_cast<std::size_t>(k)]);
        for (const auto& ch : mixture.channels)
            if (ch.name == name) name += "_" + std::to_string(k);
        mixture.channels.push_back({name, std::nullopt});

        truth.transient.data.col(k).segment(center - half_t, spike.size()) = spike;

        const Eigen::VectorXd burst = gen_burst(
            spec.fs, spec.freqs[static_cast<std::size_t>(k)], spec.burst_ms, spec.burst_amp);
        const Eigen::Index burst_start = center + offset - (burst.size() - 1) / 2;
        truth.oscillation.data.col(k).segment(burst_start, burst.size()) = burst;

        const Eigen::VectorXd clean =
            truth.transient.data.col(k) + truth.oscillation.data.col(k);
        const double clean_power = clean.squaredNorm() / static_cast<double>(n);
        const std::uint64_t noise_seed = derive_seed(
            spec.seed + static_cast<std::uint64_t>(realization), static_cast<std::uint64_t>(k));
        truth.noise.data.col(k) =
            scale_to_snr(clean_power, gen_pink_noise(n, noise_seed), spec.snr_db);

        mixture.data.col(k) = clean + truth.noise.data.col(k);

        // ground-truth peak: earliest global |extremum| of the clean transient
        Eigen::Index peak = 0;
        double best = -1.0;
        for (Eigen::Index s = 0; s < n; ++s) {
            const double a = std::abs(truth.transient.data(s, k));
            if (a > best) {
                best = a;
                peak = s;
            }
        }
        truth.true_peaks.entries.push_back(
            {static_cast<int>(k), static_cast<std::int64_t>(peak), "transient"});
    }
    truth.transient.channels = truth.oscillation.channels = truth.noise.channels =
        mixture.channels;
    truth.true_peaks.sort_entries();
    return {std::move(mixture), std::move(truth)};
}

} // namespace transep::simgen
