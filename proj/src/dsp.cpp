#include "transep/dsp.hpp"

#include <fftw3.h>

#include <mutex>
#include <stdexcept>

namespace transep::dsp {

namespace {
// FFTW plan creation is not thread-safe; execution is.
std::mutex& plan_mutex() {
    static std::mutex m;
    return m;
}
} // namespace

std::vector<std::complex<double>> rfft(const Eigen::VectorXd& x) {
    const auto n = x.size();
    if (n < 1) throw std::invalid_argument("rfft: empty input");
    std::vector<double> in(x.data(), x.data() + n);
    std::vector<std::complex<double>> out(static_cast<std::size_t>(n / 2 + 1));
    fftw_plan plan;
    {
        std::lock_guard lock(plan_mutex());
        plan = fftw_plan_dft_r2c_1d(static_cast<int>(n), in.data(),
                                    reinterpret_cast<fftw_complex*>(out.data()),
                                    FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    return out;
}

Eigen::VectorXd irfft(const std::vector<std::complex<double>>& spectrum,
                      Eigen::Index n) {
    if (n < 1) throw std::invalid_argument("irfft: invalid length");
    if (spectrum.size() != static_cast<std::size_t>(n / 2 + 1))
        throw std::invalid_argument("irfft: spectrum size does not match length");
    std::vector<std::complex<double>> in(spectrum); // c2r destroys its input
    Eigen::VectorXd out(n);
    fftw_plan plan;
    {
        std::lock_guard lock(plan_mutex());
        plan = fftw_plan_dft_c2r_1d(static_cast<int>(n),
                                    reinterpret_cast<fftw_complex*>(in.data()),
                                    out.data(), FFTW_ESTIMATE);
    }
    fftw_execute(plan);
    {
        std::lock_guard lock(plan_mutex());
        fftw_destroy_plan(plan);
    }
    out /= static_cast<double>(n);
    return out;
}

Eigen::VectorXd periodogram(const Eigen::VectorXd& x) {
    const auto spec = rfft(x);
    Eigen::VectorXd p(static_cast<Eigen::Index>(spec.size()));
    for (Eigen::Index k = 0; k < p.size(); ++k)
        p[k] = std::norm(spec[static_cast<std::size_t>(k)]) / static_cast<double>(x.size());
    return p;
}

} // namespace transep::dsp
