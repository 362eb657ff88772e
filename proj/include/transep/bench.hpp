#pragma once

#include <cstdint>
#include <string>

namespace transep::bench {

struct BenchReport {
    int n_windows = 0;
    int n_channels = 0;
    int window_len = 0;
    int workers = 0;
    double wall_ms = 0.0;
    double windows_per_s = 0.0; // channel-windows per second
    double speedup_vs_1 = 1.0;
    std::string checksum; // digest over all singular values, canonical order
};

std::string to_json(const BenchReport& report);

/// Seeded synthetic epoch matrices, one SVD + rank-3 model per
/// (channel, window) task, distributed over a fixed pool of worker lanes.
/// Numeric results and checksum are independent of the worker count.
BenchReport run_bench(int n_channels, int window_len, int n_windows,
                      int workers, std::uint64_t seed);

} // namespace transep::bench
