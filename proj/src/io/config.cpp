#include "io/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <map>
#include <sstream>
#include <vector>

namespace wsar {

namespace {

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t\r");
    if (begin == std::string::npos) {
        return {};
    }
    const auto end = s.find_last_not_of(" \t\r");
    return s.substr(begin, end - begin + 1);
}

double parse_number(const std::string& s, int line) {
    std::size_t used = 0;
    double v = 0.0;
    try {
        v = std::stod(s, &used);
    } catch (const std::exception&) {
        throw ConfigError("not a number: '" + s + "'", line);
    }
    if (trim(s.substr(used)) != "") {
        throw ConfigError("trailing characters after number: '" + s + "'", line);
    }
    return v;
}

std::int64_t parse_integer(const std::string& s, int line) {
    const double v = parse_number(s, line);
    const double r = std::round(v);
    if (std::abs(v - r) > 1e-9) {
        throw ConfigError("expected an integer: '" + s + "'", line);
    }
    return static_cast<std::int64_t>(r);
}

std::vector<double> parse_tuple(const std::string& s, int line) {
    std::vector<double> out;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) {
        out.push_back(parse_number(trim(item), line));
    }
    return out;
}

struct KeyValue {
    std::string value;
    int line;
};

}  // namespace

Scenario parse_scenario(std::istream& in) {
    std::map<std::string, KeyValue> kv;
    std::vector<std::pair<std::string, int>> targets;
    std::string raw;
    int line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        const auto hash = raw.find('#');
        std::string line = trim(hash == std::string::npos ? raw : raw.substr(0, hash));
        if (line.empty()) {
            continue;
        }
        const auto eq = line.find('=');
        if (eq == std::string::npos) {
            throw ConfigError("expected 'key = value'", line_no);
        }
        const std::string key = trim(line.substr(0, eq));
        const std::string value = trim(line.substr(eq + 1));
        if (key.empty() || value.empty()) {
            throw ConfigError("empty key or value", line_no);
        }
        if (key == "target") {
            targets.emplace_back(value, line_no);
        } else if (kv.count(key) != 0) {
            throw ConfigError("duplicate key '" + key + "'", line_no);
        } else {
            kv[key] = {value, line_no};
        }
    }

    const auto take = [&](const std::string& key) -> KeyValue {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            throw ConfigError("missing required key '" + key + "'");
        }
        KeyValue v = it->second;
        kv.erase(it);
        return v;
    };
    const auto take_opt = [&](const std::string& key, double fallback) -> double {
        const auto it = kv.find(key);
        if (it == kv.end()) {
            return fallback;
        }
        const double v = parse_number(it->second.value, it->second.line);
        kv.erase(it);
        return v;
    };
    const auto number = [&](const std::string& key) {
        const KeyValue v = take(key);
        return parse_number(v.value, v.line);
    };
    const auto integer = [&](const std::string& key) {
        const KeyValue v = take(key);
        return parse_integer(v.value, v.line);
    };

    Scenario sc;
    try {
        sc.sim.params = RadarParams(number("f_c"), number("b"), number("T"), number("f_s"));
        sc.sim.track =
            ApertureTrack(number("track_start"), number("track_spacing"), integer("track_count"));
        sc.grid.x0 = number("grid_x0");
        sc.grid.y0 = number("grid_y0");
        sc.grid.dx = number("grid_dx");
        sc.grid.dy = number("grid_dy");
        sc.grid.nx = integer("grid_nx");
        sc.grid.ny = integer("grid_ny");
        sc.grid.validate();

        sc.sim.noise_sigma = take_opt("noise_sigma", 0.0);
        sc.sim.antenna_q = take_opt("antenna_q", 0.0);
        sc.sim.rng_seed = static_cast<std::uint64_t>(take_opt("seed", 1.0));

        if (kv.count("snr_region") != 0) {
            const KeyValue v = take("snr_region");
            const std::vector<double> r = parse_tuple(v.value, v.line);
            if (r.size() != 4) {
                throw ConfigError("snr_region needs x0,x1,y0,y1", v.line);
            }
            sc.snr_region = {r[0], r[1], r[2], r[3]};
            sc.has_snr_region = true;
        }

        for (const auto& [value, line] : targets) {
            const std::vector<double> f = parse_tuple(value, line);
            if (f.size() != 4 && f.size() != 5) {
                throw ConfigError("target needs x,y,re,im[,slope]", line);
            }
            PointTarget t;
            t.x = f[0];
            t.y = f[1];
            t.sigma = {f[2], f[3]};
            t.rcs_slope = f.size() == 5 ? f[4] : 0.0;
            t.validate();
            sc.sim.scene.push_back(t);
        }
        sc.sim.validate();
    } catch (const ContractError& e) {
        throw ConfigError(e.what());
    }

    if (!kv.empty()) {
        const auto& [key, v] = *kv.begin();
        throw ConfigError("unknown key '" + key + "'", v.line);
    }
    return sc;
}

Scenario load_scenario(const std::string& path) {
    std::ifstream in(path);
    if (!in) {
        throw IoError("cannot open config: " + path);
    }
    return parse_scenario(in);
}

}  // namespace wsar
