#pragma once

#include <Eigen/Dense>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace transep {

/// Planar sensor coordinates, head circle normalized to radius 1.
struct ChannelMeta {
    std::string name;
    std::optional<Eigen::Vector2d> pos2d;
};

/// Multichannel sampled signal. data is n_samples x n_channels.
struct Recording {
    double fs = 0.0;
    std::vector<ChannelMeta> channels;
    Eigen::MatrixXd data;

    Eigen::Index n_samples() const { return data.rows(); }
    Eigen::Index n_channels() const { return data.cols(); }
};

/// Throws std::invalid_argument with a distinct message per violated invariant.
void validate(const Recording& rec);

struct EventList {
    struct Entry {
        int channel_index = 0;
        std::int64_t sample = 0;
        std::string label;
    };
    std::vector<Entry> entries;

    void sort_entries();
    bool is_sorted() const;
};

/// Checks entry indices against a recording's shape.
void validate(const EventList& events, const Recording& rec);

struct RunConfig {
    double d = 3.0;              // threshold width factor
    double refractory_ms = 10.0; // minimum peak spacing
    double epoch_ms = 300.0;     // event window length
    int rank = 3;                // retained SVD components
    double match_tol_ms = 50.0;  // event-matching tolerance
    std::uint64_t seed = 0;
};

void validate(const RunConfig& cfg);

} // namespace transep
