#include "transep/topomap.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>
#include <vector>

namespace transep::topo {

TopoMap interpolate(const std::vector<double>& values,
                    const std::vector<Eigen::Vector2d>& positions, int G) {
    if (values.size() != positions.size())
        throw std::invalid_argument("topo: values/positions size mismatch");
    if (positions.size() < 3)
        throw std::invalid_argument("topo: need at least 3 positioned sensors");
    if (G < 2) throw std::invalid_argument("topo: grid too small");
    for (const auto& p : positions)
        if (p.norm() > 1.05)
            throw std::invalid_argument("topo: sensor position outside head circle");

    TopoMap map;
    map.G = G;
    map.sensor_values = values;
    map.grid.setConstant(G, G, std::numeric_limits<double>::quiet_NaN());
    map.mask.setConstant(G, G, false);
    for (int row = 0; row < G; ++row) {
        for (int col = 0; col < G; ++col) {
            const Eigen::Vector2d node(map.node_x(col), map.node_y(row));
            if (node.squaredNorm() > 1.0) continue;
            map.mask(row, col) = true;
            double num = 0.0;
            double den = 0.0;
            bool exact = false;
            for (std::size_t s = 0; s < positions.size(); ++s) {
                const double dist = (node - positions[s]).norm();
                if (dist < 1e-9) {
                    map.grid(row, col) = values[s];
                    exact = true;
                    break;
                }
                const double w = 1.0 / (dist * dist);
                num += w * values[s];
                den += w;
            }
            if (!exact) map.grid(row, col) = num / den;
        }
    }
    return map;
}

namespace {

// 4-connected supra-threshold regions; sign selects the polarity
int count_regions(const TopoMap& map, double threshold, int sign) {
    const int G = map.G;
    std::vector<std::uint8_t> visited(static_cast<std::size_t>(G) * G, 0);
    auto supra = [&](int r, int c) {
        if (!map.mask(r, c)) return false;
        const double v = map.grid(r, c) * sign;
        return v >= threshold;
    };
    int regions = 0;
    std::vector<std::pair<int, int>> stack;
    for (int r = 0; r < G; ++r) {
        for (int c = 0; c < G; ++c) {
            if (visited[static_cast<std::size_t>(r) * G + c] || !supra(r, c)) continue;
            ++regions;
            stack.push_back({r, c});
            visited[static_cast<std::size_t>(r) * G + c] = 1;
            while (!stack.empty()) {
                const auto [cr, cc] = stack.back();
                stack.pop_back();
                constexpr int dr[] = {1, -1, 0, 0};
                constexpr int dc[] = {0, 0, 1, -1};
                for (int k = 0; k < 4; ++k) {
                    const int nr = cr + dr[k];
                    const int nc = cc + dc[k];
                    if (nr < 0 || nr >= G || nc < 0 || nc >= G) continue;
                    auto& seen = visited[static_cast<std::size_t>(nr) * G + nc];
                    if (seen || !supra(nr, nc)) continue;
                    seen = 1;
                    stack.push_back({nr, nc});
                }
            }
        }
    }
    return regions;
}

} // namespace

DipolarityScore dipolarity(const TopoMap& map) {
    double vmax = -std::numeric_limits<double>::infinity();
    double vmin = std::numeric_limits<double>::infinity();
    for (int r = 0; r < map.G; ++r)
        for (int c = 0; c < map.G; ++c)
            if (map.mask(r, c)) {
                vmax = std::max(vmax, map.grid(r, c));
                vmin = std::min(vmin, map.grid(r, c));
            }
    DipolarityScore s;
    if (!(vmax > 0.0) || !(vmin < 0.0)) return s; // one polarity missing
    s.n_pos_regions = count_regions(map, 0.7 * vmax, +1);
    s.n_neg_regions = count_regions(map, 0.7 * (-vmin), -1);
    if (s.n_pos_regions == 0 || s.n_neg_regions == 0) return s;
    const double balance = std::min(vmax, -vmin) / std::max(vmax, -vmin);
    if (s.n_pos_regions == 1 && s.n_neg_regions == 1)
        s.score = balance;
    else
        s.score = balance / (static_cast<double>(s.n_pos_regions) *
                             static_cast<double>(s.n_neg_regions));
    return s;
}

} // namespace transep::topo
