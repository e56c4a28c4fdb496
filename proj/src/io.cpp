#include "causet/io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace causet::io {

using nlohmann::json;

ParseError::ParseError(const std::string& source, std::size_t line, const std::string& what)
    : std::runtime_error(source + (line ? ":" + std::to_string(line) : "") + ": " + what),
      line_(line) {}

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

namespace {

std::vector<std::string> split_lines(const std::string& text) {
    std::vector<std::string> lines;
    std::string current;
    for (char c : text) {
        if (c == '\n') {
            lines.push_back(std::move(current));
            current.clear();
        } else if (c != '\r') {
            current.push_back(c);
        }
    }
    if (!current.empty()) lines.push_back(std::move(current));
    return lines;
}

std::string trim(const std::string& s) {
    const auto begin = s.find_first_not_of(" \t");
    if (begin == std::string::npos) return "";
    const auto end = s.find_last_not_of(" \t");
    return s.substr(begin, end - begin + 1);
}

std::vector<std::string> split_fields(const std::string& line) {
    std::vector<std::string> fields;
    std::string field;
    for (char c : line) {
        if (c == ',') {
            fields.push_back(trim(field));
            field.clear();
        } else {
            field.push_back(c);
        }
    }
    fields.push_back(trim(field));
    return fields;
}

double parse_double(const std::string& field, const std::string& source, std::size_t line) {
    if (field.empty()) throw ParseError(source, line, "empty numeric field");
    char* end = nullptr;
    const double v = std::strtod(field.c_str(), &end);
    if (end != field.c_str() + field.size()) {
        throw ParseError(source, line, "bad number '" + field + "'");
    }
    return v;
}

json json_parse(const std::string& text, const std::string& source) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) throw ParseError(source, 0, "invalid JSON");
    return j;
}

}  // namespace

std::string events_to_csv(std::span<const Event> events) {
    std::string out = "t,x\n";
    for (const Event& e : events) {
        out += format_double(e.t);
        out += ',';
        out += format_double(e.x);
        out += '\n';
    }
    return out;
}

std::vector<Event> events_from_csv(const std::string& text, const std::string& source) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty file");
    if (trim(lines[0]) != "t,x") throw ParseError(source, 1, "expected header 't,x'");
    std::vector<Event> events;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 2) throw ParseError(source, i + 1, "expected two fields 't,x'");
        Event e{parse_double(fields[0], source, i + 1), parse_double(fields[1], source, i + 1)};
        if (!is_finite(e)) throw ParseError(source, i + 1, "non-finite coordinate");
        events.push_back(e);
    }
    return events;
}

namespace {

json config_to_json(const SprinkleConfig& config) {
    return json{{"n", config.n},
                {"S", config.edge},
                {"seed", config.seed},
                {"mode", to_string(config.mode)}};
}

json events_array(std::span<const Event> events) {
    json arr = json::array();
    for (const Event& e : events) arr.push_back(json{{"t", e.t}, {"x", e.x}});
    return arr;
}

}  // namespace

std::string sprinkle_to_json(const Sprinkle& sprinkle) {
    const json j{{"config", config_to_json(sprinkle.config)},
                 {"events", events_array(sprinkle.events)}};
    return j.dump(2) + "\n";
}

std::string events_to_json(std::span<const Event> events) {
    const json j{{"events", events_array(events)}};
    return j.dump(2) + "\n";
}

std::vector<Event> events_from_json(const std::string& text, const std::string& source) {
    const json j = json_parse(text, source);
    if (!j.is_object() || !j.contains("events") || !j["events"].is_array()) {
        throw ParseError(source, 0, "expected object with an 'events' array");
    }
    std::vector<Event> events;
    for (const auto& entry : j["events"]) {
        if (!entry.is_object() || !entry.contains("t") || !entry.contains("x") ||
            !entry["t"].is_number() || !entry["x"].is_number()) {
            throw ParseError(source, 0, "event entries need numeric 't' and 'x'");
        }
        Event e{entry["t"].get<double>(), entry["x"].get<double>()};
        if (!is_finite(e)) throw ParseError(source, 0, "non-finite coordinate");
        events.push_back(e);
    }
    return events;
}

std::string matrix_to_csv(const BitMatrix& m) {
    std::string out;
    const std::size_t n = m.size();
    out.reserve(n * (2 * n + 1));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            if (j) out += ',';
            out += m.get(i, j) ? '1' : '0';
        }
        out += '\n';
    }
    return out;
}

BitMatrix matrix_from_csv(const std::string& text, const std::string& source) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty file");
    const std::size_t n = lines.size();
    BitMatrix m(n);
    for (std::size_t i = 0; i < n; ++i) {
        const auto fields = split_fields(lines[i]);
        if (fields.size() != n) {
            throw ParseError(source, i + 1, "matrix is not square");
        }
        for (std::size_t j = 0; j < n; ++j) {
            if (fields[j] == "1") {
                m.set(i, j);
            } else if (fields[j] != "0") {
                throw ParseError(source, i + 1, "matrix entries must be 0 or 1");
            }
        }
    }
    return m;
}

std::string matrix_to_json(const BitMatrix& m) {
    json edges = json::array();
    for (std::size_t i = 0; i < m.size(); ++i) {
        m.for_each_in_row(i, [&](std::size_t j) { edges.push_back(json::array({i, j})); });
    }
    const json j{{"n", m.size()}, {"edges", edges}};
    return j.dump() + "\n";
}

BitMatrix matrix_from_json(const std::string& text, const std::string& source) {
    const json j = json_parse(text, source);
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_unsigned() ||
        !j.contains("edges") || !j["edges"].is_array()) {
        throw ParseError(source, 0, "expected object with unsigned 'n' and 'edges'");
    }
    const auto n = j["n"].get<std::size_t>();
    BitMatrix m(n);
    for (const auto& edge : j["edges"]) {
        if (!edge.is_array() || edge.size() != 2 || !edge[0].is_number_unsigned() ||
            !edge[1].is_number_unsigned()) {
            throw ParseError(source, 0, "edges must be [i,j] index pairs");
        }
        const auto i = edge[0].get<std::size_t>();
        const auto k = edge[1].get<std::size_t>();
        if (i >= n || k >= n) throw ParseError(source, 0, "edge index out of range");
        m.set(i, k);
    }
    return m;
}

std::string function_to_csv(const TestFunction& f) {
    std::string out = "x,re,im\n";
    for (std::size_t i = 0; i < f.size(); ++i) {
        out += format_double(f.x(i));
        out += ',';
        out += format_double(f.values()[i].real());
        out += ',';
        out += format_double(f.values()[i].imag());
        out += '\n';
    }
    return out;
}

TestFunction function_from_csv(const std::string& text, const std::string& source) {
    const std::vector<std::string> lines = split_lines(text);
    if (lines.empty()) throw ParseError(source, 1, "empty file");
    if (trim(lines[0]) != "x,re,im") throw ParseError(source, 1, "expected header 'x,re,im'");
    std::vector<double> xs;
    std::vector<std::complex<double>> values;
    for (std::size_t i = 1; i < lines.size(); ++i) {
        if (trim(lines[i]).empty()) continue;
        const auto fields = split_fields(lines[i]);
        if (fields.size() != 3) throw ParseError(source, i + 1, "expected three fields 'x,re,im'");
        xs.push_back(parse_double(fields[0], source, i + 1));
        values.emplace_back(parse_double(fields[1], source, i + 1),
                            parse_double(fields[2], source, i + 1));
    }
    if (values.size() < 2) throw ParseError(source, 0, "need at least two samples");

    // the grid must be uniform and symmetric about zero
    const double R = xs.back();
    const double h = (xs.back() - xs.front()) / static_cast<double>(xs.size() - 1);
    if (!(R > 0.0) || std::abs(xs.front() + R) > 1e-9 * R) {
        throw ParseError(source, 0, "grid must span [-R, R]");
    }
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double expected = -R + static_cast<double>(i) * h;
        if (std::abs(xs[i] - expected) > 1e-9 * std::max(1.0, R)) {
            throw ParseError(source, i + 2, "grid spacing is not uniform");
        }
    }
    return TestFunction(R, std::move(values));
}

std::string ensemble_to_json(const WorldlineEnsemble& ensemble) {
    json chains = json::array();
    for (const Chain& chain : ensemble.chains) chains.push_back(chain);
    const json j{{"source", ensemble.source},
                 {"target", ensemble.target},
                 {"chains", chains},
                 {"weights", ensemble.weights},
                 {"total", {{"re", ensemble.total.real()}, {"im", ensemble.total.imag()}}},
                 {"truncated", ensemble.truncated}};
    return j.dump(2) + "\n";
}

std::uint64_t fnv1a64(std::span<const char> bytes) {
    std::uint64_t hash = 0xCBF29CE484222325ull;
    for (char c : bytes) {
        hash ^= static_cast<unsigned char>(c);
        hash *= 0x100000001B3ull;
    }
    return hash;
}

std::string digest_hex(std::span<const char> bytes) {
    char buf[17];
    std::snprintf(buf, sizeof(buf), "%016llx",
                  static_cast<unsigned long long>(fnv1a64(bytes)));
    return buf;
}

std::string read_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << content;
    if (!out) throw std::runtime_error("write failed for " + path.string());
}

std::vector<Event> load_events(const std::filesystem::path& path) {
    const std::string text = read_file(path);
    if (path.extension() == ".json") return events_from_json(text, path.string());
    return events_from_csv(text, path.string());
}

}
