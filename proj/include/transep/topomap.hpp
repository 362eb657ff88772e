#pragma once

#include <Eigen/Dense>

#include <vector>

namespace transep::topo {

struct TopoMap {
    int G = 64;
    Eigen::MatrixXd grid; // G x G, NaN outside the head circle
    Eigen::Matrix<bool, Eigen::Dynamic, Eigen::Dynamic> mask;
    std::vector<double> sensor_values;

    double node_x(int col) const { return -1.0 + 2.0 * col / (G - 1); }
    double node_y(int row) const { return -1.0 + 2.0 * row / (G - 1); }
};

/// Inverse-distance-weighted (power 2) interpolation over grid nodes inside
/// the unit circle; a node closer than 1e-9 to a sensor takes its value exactly.
/// Requires >= 3 positioned sensors.
TopoMap interpolate(const std::vector<double>& values,
                    const std::vector<Eigen::Vector2d>& positions, int G = 64);

struct DipolarityScore {
    double score = 0.0;
    int n_pos_regions = 0;
    int n_neg_regions = 0;
};

/// Thresholds the map at +/-0.7 of the respective extremum, counts
/// 4-connected supra-threshold regions per polarity, and scores amplitude
/// balance penalized by extra regions. Zero when either polarity is absent.
DipolarityScore dipolarity(const TopoMap& map);

} // namespace transep::topo
