#include "qsar/params_io.hpp"

#include "qsar/errors.hpp"
#include "qsar/matrix_io.hpp"

#include <charconv>
#include <cstdio>
#include <map>
#include <string>

namespace qsar::io {

namespace {

std::string_view trim(std::string_view s) {
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

double parse_double(std::string_view text, std::size_t offset) {
    double value = 0.0;
    const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc{} || ptr != text.data() + text.size()) {
        throw FormatError("malformed number '" + std::string(text) + "'", offset);
    }
    return value;
}

// Calls fn(line, byte_offset) for each non-empty line with comments stripped.
template <class Fn>
void for_each_line(std::string_view text, Fn&& fn) {
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t end = text.find('\n', pos);
        if (end == std::string_view::npos) {
            end = text.size();
        }
        std::string_view line = text.substr(pos, end - pos);
        if (const auto hash = line.find('#'); hash != std::string_view::npos) {
            line = line.substr(0, hash);
        }
        const std::string_view trimmed = trim(line);
        if (!trimmed.empty()) {
            fn(trimmed, pos + static_cast<std::size_t>(trimmed.data() - line.data()));
        }
        pos = end + 1;
    }
}

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

}  // namespace

SarParams parse_params(std::string_view text) {
    SarParams p;
    const std::map<std::string, double*, std::less<>> slots = {
        {"wavelength", &p.wavelength},
        {"chirp_rate", &p.chirp_rate},
        {"pulse_duration", &p.pulse_duration},
        {"range_sample_rate", &p.range_sample_rate},
        {"prf", &p.prf},
        {"velocity", &p.velocity},
        {"reference_range", &p.reference_range},
        {"c", &p.c},
    };
    std::map<std::string, std::size_t, std::less<>> seen;

    for_each_line(text, [&](std::string_view line, std::size_t offset) {
        const auto eq = line.find('=');
        if (eq == std::string_view::npos) {
            throw FormatError("expected key=value", offset);
        }
        const std::string key(trim(line.substr(0, eq)));
        const std::string_view value = trim(line.substr(eq + 1));
        const auto slot = slots.find(key);
        if (slot == slots.end()) {
            throw FormatError("unknown parameter '" + key + "'", offset);
        }
        if (!seen.emplace(key, offset).second) {
            throw FormatError("duplicate parameter '" + key + "'", offset);
        }
        *slot->second = parse_double(value, offset + eq + 1);
        if (key == "c" && p.c != kSpeedOfLight) {
            throw FormatError("c is fixed at 299792458 m/s", offset);
        }
    });

    for (const auto& [key, slot] : slots) {
        if (key != "c" && !seen.contains(key)) {
            throw FormatError("missing parameter '" + key + "'", text.size());
        }
    }
    p.validate();
    return p;
}

std::string format_params(const SarParams& params) {
    std::string out;
    out += "wavelength=" + fmt(params.wavelength) + "\n";
    out += "chirp_rate=" + fmt(params.chirp_rate) + "\n";
    out += "pulse_duration=" + fmt(params.pulse_duration) + "\n";
    out += "range_sample_rate=" + fmt(params.range_sample_rate) + "\n";
    out += "prf=" + fmt(params.prf) + "\n";
    out += "velocity=" + fmt(params.velocity) + "\n";
    out += "reference_range=" + fmt(params.reference_range) + "\n";
    out += "c=" + fmt(params.c) + "\n";
    return out;
}

SarParams load_params(const std::filesystem::path& path) { return parse_params(read_file(path)); }

std::vector<PointTarget> parse_targets(std::string_view text) {
    std::vector<PointTarget> targets;
    for_each_line(text, [&](std::string_view line, std::size_t offset) {
        double fields[4];
        std::size_t start = 0;
        for (int i = 0; i < 4; ++i) {
            const std::size_t comma = i < 3 ? line.find(',', start) : line.size();
            if (comma == std::string_view::npos) {
                throw FormatError("target line needs 4 comma-separated fields", offset + start);
            }
            fields[i] = parse_double(trim(line.substr(start, comma - start)), offset + start);
            start = comma + 1;
        }
        targets.push_back(PointTarget{fields[0], fields[1], cplx{fields[2], fields[3]}});
    });
    return targets;
}

std::string format_targets(const std::vector<PointTarget>& targets) {
    std::string out = "# range_offset_m,azimuth_time_s,reflectivity_re,reflectivity_im\n";
    for (const PointTarget& t : targets) {
        out += fmt(t.range_offset) + "," + fmt(t.azimuth_time) + "," + fmt(t.reflectivity.real()) + "," +
               fmt(t.reflectivity.imag()) + "\n";
    }
    return out;
}

std::vector<PointTarget> load_targets(const std::filesystem::path& path) { return parse_targets(read_file(path)); }

}  // namespace qsar::io
