// Copyright 2026 The colorjit Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "colorjit/harness/config.h"

#include <charconv>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "colorjit/errors.h"

namespace colorjit {

std::string decoder_selection_name(DecoderSelection d) {
    switch (d) {
        case DecoderSelection::Conventional:
            return "conventional";
        case DecoderSelection::Jit:
            return "jit";
        case DecoderSelection::Both:
            return "both";
    }
    return "?";
}

DecoderSelection parse_decoder_selection(const std::string &name) {
    if (name == "conventional") return DecoderSelection::Conventional;
    if (name == "jit") return DecoderSelection::Jit;
    if (name == "both") return DecoderSelection::Both;
    throw ParseError("unknown decoder '" + name + "'");
}

std::string experiment_kind_name(ExperimentKind k) { return k == ExperimentKind::Threshold ? "threshold" : "comparison"; }

ExperimentKind parse_experiment_kind(const std::string &name) {
    if (name == "threshold") return ExperimentKind::Threshold;
    if (name == "comparison") return ExperimentKind::Comparison;
    throw ParseError("unknown experiment '" + name + "'");
}

void ExperimentConfig::validate() const {
    if (sizes.empty()) throw std::invalid_argument("no sizes given");
    for (int d : sizes)
        if (d < 2 || d > 9) throw std::invalid_argument("size " + std::to_string(d) + " outside 2..9");
    if (thickness < 1) throw std::invalid_argument("thickness must be at least 1");
    if (rates.empty()) throw std::invalid_argument("no rates given");
    for (double p : rates)
        if (!(p >= 0 && p <= 1)) throw std::invalid_argument("rate outside [0, 1]");
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (lookahead < 0) throw std::invalid_argument("lookahead must be non-negative");
    if (fail_distance < 0) throw std::invalid_argument("fail_distance must be non-negative");
    if (format != "csv" && format != "json") throw std::invalid_argument("format must be csv or json");
    if (kind == ExperimentKind::Comparison && decoder != DecoderSelection::Both)
        throw std::invalid_argument("comparison experiments need decoder = both");
}

namespace {

std::string trim(const std::string &s) {
    size_t a = s.find_first_not_of(" \t\r");
    if (a == std::string::npos) return "";
    size_t b = s.find_last_not_of(" \t\r");
    return s.substr(a, b - a + 1);
}

template <typename T>
T parse_number(const std::string &key, const std::string &text) {
    T v{};
    auto t = trim(text);
    auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || ptr != t.data() + t.size())
        throw ParseError("bad value '" + text + "' for " + key);
    return v;
}

template <typename T>
std::vector<T> parse_list(const std::string &key, const std::string &text) {
    std::vector<T> out;
    size_t start = 0;
    while (true) {
        size_t comma = text.find(',', start);
        out.push_back(parse_number<T>(key, text.substr(start, comma - start)));
        if (comma == std::string::npos) return out;
        start = comma + 1;
    }
}

bool parse_bool(const std::string &key, const std::string &v) {
    if (v == "true" || v == "1" || v == "yes") return true;
    if (v == "false" || v == "0" || v == "no") return false;
    throw ParseError("bad boolean '" + v + "' for " + key);
}

}  // namespace

void apply_setting(ExperimentConfig &cfg, const std::string &key, const std::string &raw) {
    std::string value = trim(raw);
    if (key == "experiment") {
        cfg.kind = parse_experiment_kind(value);
    } else if (key == "family") {
        try {
            cfg.family = parse_family(value);
        } catch (const std::exception &) {
            throw ParseError("unknown family '" + value + "'");
        }
    } else if (key == "sizes" || key == "size") {
        cfg.sizes = parse_list<int>(key, value);
    } else if (key == "thickness" || key == "layers") {
        cfg.thickness = parse_number<int>(key, value);
    } else if (key == "rates" || key == "rate") {
        cfg.rates = parse_list<double>(key, value);
    } else if (key == "trials") {
        cfg.trials = parse_number<uint64_t>(key, value);
    } else if (key == "seed") {
        cfg.seed = parse_number<uint64_t>(key, value);
    } else if (key == "decoder") {
        cfg.decoder = parse_decoder_selection(value);
    } else if (key == "lookahead") {
        cfg.lookahead = parse_number<int>(key, value);
    } else if (key == "fail_distance") {
        cfg.fail_distance = parse_number<int64_t>(key, value);
    } else if (key == "confinement") {
        cfg.confinement = parse_bool(key, value);
    } else if (key == "threads") {
        cfg.threads = parse_number<unsigned>(key, value);
    } else if (key == "out") {
        cfg.out = value;
    } else if (key == "format") {
        cfg.format = value;
    } else {
        throw ParseError("unknown key '" + key + "'");
    }
}

ExperimentConfig parse_config(std::istream &in) {
    ExperimentConfig cfg;
    std::string line;
    size_t line_no = 0;
    while (std::getline(in, line)) {
        line_no++;
        auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        if (trim(line).empty()) continue;
        auto eq = line.find('=');
        if (eq == std::string::npos) throw ParseError("expected key = value on line " + std::to_string(line_no));
        try {
            apply_setting(cfg, trim(line.substr(0, eq)), line.substr(eq + 1));
        } catch (const ParseError &e) {
            std::string msg = e.what();
            msg.erase(0, msg.find(": ") + 2);
            throw ParseError(msg + " on line " + std::to_string(line_no));
        }
    }
    return cfg;
}

ExperimentConfig parse_config_text(const std::string &text) {
    std::istringstream in(text);
    return parse_config(in);
}

std::string format_config(const ExperimentConfig &cfg) {
    std::ostringstream out;
    out.precision(17);
    auto join = [&](const auto &xs) {
        std::ostringstream s;
        s.precision(17);
        for (size_t k = 0; k < xs.size(); k++) s << (k ? "," : "") << xs[k];
        return s.str();
    };
    out << "experiment = " << experiment_kind_name(cfg.kind) << "\n";
    out << "family = " << family_name(cfg.family) << "\n";
    out << "sizes = " << join(cfg.sizes) << "\n";
    out << "thickness = " << cfg.thickness << "\n";
    out << "rates = " << join(cfg.rates) << "\n";
    out << "trials = " << cfg.trials << "\n";
    out << "seed = " << cfg.seed << "\n";
    out << "decoder = " << decoder_selection_name(cfg.decoder) << "\n";
    out << "lookahead = " << cfg.lookahead << "\n";
    out << "fail_distance = " << cfg.fail_distance << "\n";
    out << "confinement = " << (cfg.confinement ? "true" : "false") << "\n";
    out << "threads = " << cfg.threads << "\n";
    if (!cfg.out.empty()) out << "out = " << cfg.out << "\n";
    out << "format = " << cfg.format << "\n";
    return out.str();
}

}  // namespace colorjit
