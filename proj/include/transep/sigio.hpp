#pragma once

#include "transep/types.hpp"

#include <filesystem>

namespace transep::sigio {

// Recordings are stored as <name>.csv (samples x channels, header row with
// channel names) plus a <name>.csv.meta.json sidecar {fs, channels:[{name,pos2d?}]}.
// Numeric text round-trips bit-for-value.

Recording read_recording(const std::filesystem::path& path);
void write_recording(const Recording& rec, const std::filesystem::path& path);

// Events are CSV rows channel_index,sample,label; sorted on read.
EventList read_events(const std::filesystem::path& path);
void write_events(const EventList& events, const std::filesystem::path& path);

} // namespace transep::sigio
