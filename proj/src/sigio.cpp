#include "transep/sigio.hpp"

#include <nlohmann/json.hpp>

#include <charconv>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <system_error>
#include <vector>

namespace transep::sigio {

namespace {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), v,
                                   std::chars_format::general, 17);
    if (ec != std::errc{}) throw std::runtime_error("number formatting failed");
    return std::string(buf, ptr);
}

double parse_double(std::string_view tok, const std::string& context) {
    double v = 0.0;
    const char* first = tok.data();
    const char* last = tok.data() + tok.size();
    while (first != last && (*first == ' ' || *first == '\t')) ++first;
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        throw std::runtime_error("unparsable number in " + context + ": '" +
                                 std::string(tok) + "'");
    return v;
}

std::vector<std::string> split_csv_line(const std::string& line) {
    std::vector<std::string> fields;
    std::size_t start = 0;
    for (;;) {
        const auto comma = line.find(',', start);
        if (comma == std::string::npos) {
            fields.push_back(line.substr(start));
            break;
        }
        fields.push_back(line.substr(start, comma - start));
        start = comma + 1;
    }
    if (!fields.empty() && !fields.back().empty() && fields.back().back() == '\r')
        fields.back().pop_back();
    return fields;
}

std::filesystem::path meta_path(const std::filesystem::path& path) {
    auto p = path;
    p += ".meta.json";
    return p;
}

} // namespace

Recording read_recording(const std::filesystem::path& path) {
    std::ifstream csv(path);
    if (!csv) throw std::runtime_error("cannot open recording file: " + path.string());
    std::ifstream meta_file(meta_path(path));
    if (!meta_file)
        throw std::runtime_error("missing metadata sidecar: " + meta_path(path).string());

    json meta;
    try {
        meta_file >> meta;
    } catch (const json::exception& e) {
        throw std::runtime_error("unparsable metadata: " + std::string(e.what()));
    }
    Recording rec;
    if (!meta.contains("fs") || !meta["fs"].is_number())
        throw std::runtime_error("metadata missing sampling rate");
    rec.fs = meta["fs"].get<double>();
    if (!(rec.fs > 0.0)) throw std::invalid_argument("invalid sampling rate");
    if (!meta.contains("channels") || !meta["channels"].is_array())
        throw std::runtime_error("metadata missing channels");
    for (const auto& jc : meta["channels"]) {
        ChannelMeta ch;
        ch.name = jc.at("name").get<std::string>();
        if (jc.contains("pos2d")) {
            const auto& p = jc["pos2d"];
            if (!p.is_array() || p.size() != 2)
                throw std::runtime_error("pos2d must be a [x, y] pair");
            ch.pos2d = Eigen::Vector2d(p[0].get<double>(), p[1].get<double>());
        }
        rec.channels.push_back(std::move(ch));
    }
    const auto n_channels = static_cast<Eigen::Index>(rec.channels.size());

    std::string line;
    if (!std::getline(csv, line))
        throw std::runtime_error("recording CSV is empty: " + path.string());
    const auto header = split_csv_line(line);
    if (static_cast<Eigen::Index>(header.size()) != n_channels)
        throw std::runtime_error("channel-count mismatch between CSV and metadata");
    for (Eigen::Index c = 0; c < n_channels; ++c)
        if (header[static_cast<std::size_t>(c)] != rec.channels[static_cast<std::size_t>(c)].name)
            throw std::runtime_error("channel name mismatch between CSV and metadata");

    std::vector<double> values;
    Eigen::Index n_samples = 0;
    while (std::getline(csv, line)) {
        if (line.empty() || line == "\r") continue;
        const auto fields = split_csv_line(line);
        if (static_cast<Eigen::Index>(fields.size()) != n_channels)
            throw std::runtime_error("channel-count mismatch between CSV and metadata");
        for (const auto& f : fields) values.push_back(parse_double(f, path.string()));
        ++n_samples;
    }
    rec.data.resize(n_samples, n_channels);
    for (Eigen::Index s = 0; s < n_samples; ++s)
        for (Eigen::Index c = 0; c < n_channels; ++c)
            rec.data(s, c) = values[static_cast<std::size_t>(s * n_channels + c)];
    validate(rec);
    return rec;
}

void write_recording(const Recording& rec, const std::filesystem::path& path) {
    validate(rec);
    std::ofstream csv(path);
    if (!csv) throw std::runtime_error("cannot write recording file: " + path.string());
    std::ostringstream out;
    for (Eigen::Index c = 0; c < rec.n_channels(); ++c) {
        if (c) out << ',';
        out << rec.channels[static_cast<std::size_t>(c)].name;
    }
    out << '\n';
    for (Eigen::Index s = 0; s < rec.n_samples(); ++s) {
        for (Eigen::Index c = 0; c < rec.n_channels(); ++c) {
            if (c) out << ',';
            out << format_double(rec.data(s, c));
        }
        out << '\n';
    }
    csv << out.str();
    if (!csv) throw std::runtime_error("write failed: " + path.string());

    json meta;
    meta["fs"] = rec.fs;
    meta["channels"] = json::array();
    for (const auto& ch : rec.channels) {
        json jc;
        jc["name"] = ch.name;
        if (ch.pos2d) jc["pos2d"] = {ch.pos2d->x(), ch.pos2d->y()};
        meta["channels"].push_back(jc);
    }
    std::ofstream meta_file(meta_path(path));
    if (!meta_file)
        throw std::runtime_error("cannot write metadata sidecar: " + meta_path(path).string());
    meta_file << meta.dump(2) << '\n';
    if (!meta_file) throw std::runtime_error("write failed: " + meta_path(path).string());
}

EventList read_events(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open events file: " + path.string());
    EventList events;
    std::string line;
    bool first = true;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (first) {
            first = false;
            if (line.rfind("channel_index", 0) == 0) continue; // header row
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? std::string::npos : line.find(',', c1 + 1);
        if (c1 == std::string::npos || c2 == std::string::npos)
            throw std::runtime_error("malformed event row: '" + line + "'");
        EventList::Entry e;
        e.channel_index =
            static_cast<int>(parse_double(std::string_view(line).substr(0, c1), path.string()));
        e.sample = static_cast<std::int64_t>(
            parse_double(std::string_view(line).substr(c1 + 1, c2 - c1 - 1), path.string()));
        e.label = line.substr(c2 + 1);
        events.entries.push_back(std::move(e));
    }
    events.sort_entries();
    return events;
}

void write_events(const EventList& events, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write events file: " + path.string());
    out << "channel_index,sample,label\n";
    for (const auto& e : events.entries)
        out << e.channel_index << ',' << e.sample << ',' << e.label << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

} // namespace transep::sigio
