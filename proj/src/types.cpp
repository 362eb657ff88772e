#include "transep/types.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <unordered_set>

namespace transep {

void validate(const Recording& rec) {
    if (!(rec.fs > 0.0)) throw std::invalid_argument("invalid sampling rate");
    if (rec.data.rows() < 1) throw std::invalid_argument("recording has no samples");
    if (rec.data.cols() < 1) throw std::invalid_argument("recording has no channels");
    if (static_cast<Eigen::Index>(rec.channels.size()) != rec.data.cols())
        throw std::invalid_argument("channel metadata count does not match data columns");
    std::unordered_set<std::string> names;
    for (const auto& ch : rec.channels) {
        if (ch.name.empty()) throw std::invalid_argument("empty channel name");
        if (!names.insert(ch.name).second)
            throw std::invalid_argument("duplicate channel name: " + ch.name);
        if (ch.pos2d && ch.pos2d->norm() > 1.05)
            throw std::invalid_argument("sensor position outside head circle: " + ch.name);
    }
    if (!rec.data.allFinite())
        throw std::invalid_argument("non-finite sample value");
}

void EventList::sort_entries() {
    std::stable_sort(entries.begin(), entries.end(),
                     [](const Entry& a, const Entry& b) {
                         if (a.channel_index != b.channel_index)
                             return a.channel_index < b.channel_index;
                         return a.sample < b.sample;
                     });
}

bool EventList::is_sorted() const {
    return std::is_sorted(entries.begin(), entries.end(),
                          [](const Entry& a, const Entry& b) {
                              if (a.channel_index != b.channel_index)
                                  return a.channel_index < b.channel_index;
                              return a.sample < b.sample;
                          });
}

void validate(const EventList& events, const Recording& rec) {
    for (const auto& e : events.entries) {
        if (e.channel_index < 0 || e.channel_index >= rec.n_channels())
            throw std::invalid_argument("event channel index out of range");
        if (e.sample < 0 || e.sample >= rec.n_samples())
            throw std::invalid_argument("event sample out of range");
    }
}

void validate(const RunConfig& cfg) {
    if (!(cfg.d > 0.0)) throw std::invalid_argument("d must be positive");
    if (!(cfg.refractory_ms > 0.0))
        throw std::invalid_argument("refractory_ms must be positive");
    if (!(cfg.epoch_ms > cfg.refractory_ms))
        throw std::invalid_argument("epoch_ms must exceed refractory_ms");
    if (cfg.rank < 1) throw std::invalid_argument("rank must be at least 1");
    if (cfg.match_tol_ms < 0.0)
        throw std::invalid_argument("match_tol_ms must be nonnegative");
}

} // namespace transep
