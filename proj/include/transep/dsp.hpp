#pragma once

#include <Eigen/Dense>

#include <complex>
#include <vector>

namespace transep::dsp {

/// Forward real FFT, bins 0..n/2 (FFTW halfcomplex layout unpacked).
std::vector<std::complex<double>> rfft(const Eigen::VectorXd& x);

/// Inverse of rfft for a length-n real output; spectrum holds n/2+1 bins.
/// The result is normalized (irfft(rfft(x)) == x).
Eigen::VectorXd irfft(const std::vector<std::complex<double>>& spectrum,
                      Eigen::Index n);

/// One-sided periodogram |X_k|^2 / n for bins 0..n/2.
Eigen::VectorXd periodogram(const Eigen::VectorXd& x);

} // namespace transep::dsp
