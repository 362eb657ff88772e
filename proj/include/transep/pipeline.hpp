#pragma once

#include "transep/detector.hpp"
#include "transep/simgen.hpp"
#include "transep/svdsep.hpp"
#include "transep/types.hpp"

#include <vector>

namespace transep::pipeline {

/// One row of the GOF table: fit statistics over realizations for one channel.
struct GofRow {
    double snr_db = 0.0;
    double freq_hz = 0.0;
    double fit_mean = 0.0;
    double fit_std = 0.0;
    int n = 0;
};

struct SimPipelineResult {
    Recording mixture;   // realizations concatenated in time
    simgen::GroundTruth truth;
    detector::PeakSet detected;
    svdsep::SeparationResult separation;
    std::vector<GofRow> gof_rows;            // one per channel
    std::vector<int> true_peaks_matched;     // per channel, within +/-10 ms
    std::vector<int> true_peaks_total;       // per channel
};

/// Concatenates all realizations of one SimSpec, then detect -> despike ->
/// per-realization GOF at the true-event windows (fit of the reconstruction
/// against the clean transient over epoch_ms around each true peak).
SimPipelineResult run_sim_pipeline(const simgen::SimSpec& spec,
                                   const RunConfig& cfg, int jobs = 1);

} // namespace transep::pipeline
