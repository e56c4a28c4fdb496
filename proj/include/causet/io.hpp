#pragma once

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "causet/bitmatrix.hpp"
#include "causet/schwartz.hpp"
#include "causet/sprinkle.hpp"
#include "causet/worldline.hpp"

namespace causet::io {

/// Malformed content; `line` is 1-based (0 when unknown).
class ParseError : public std::runtime_error {
public:
    ParseError(const std::string& source, std::size_t line, const std::string& what);
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

/// Shortest representation that round-trips a double (17 significant digits).
std::string format_double(double v);

// events: CSV header "t,x", one row per event
std::string events_to_csv(std::span<const Event> events);
std::vector<Event> events_from_csv(const std::string& text, const std::string& source = "events");

// events JSON: {"config":{...},"events":[{"t":...,"x":...},...]}
std::string sprinkle_to_json(const Sprinkle& sprinkle);
std::string events_to_json(std::span<const Event> events);
std::vector<Event> events_from_json(const std::string& text, const std::string& source = "events");

// matrices: dense 0/1 CSV and sparse edge-list JSON {"n":...,"edges":[[i,j],...]}
std::string matrix_to_csv(const BitMatrix& m);
BitMatrix matrix_from_csv(const std::string& text, const std::string& source = "matrix");
std::string matrix_to_json(const BitMatrix& m);
BitMatrix matrix_from_json(const std::string& text, const std::string& source = "matrix");

// sampled functions: CSV header "x,re,im"
std::string function_to_csv(const TestFunction& f);
TestFunction function_from_csv(const std::string& text, const std::string& source = "function");

std::string ensemble_to_json(const WorldlineEnsemble& ensemble);

/// FNV-1a 64-bit content digest, rendered as 16 hex digits.
std::uint64_t fnv1a64(std::span<const char> bytes);
std::string digest_hex(std::span<const char> bytes);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, const std::string& content);

/// Reads events from a .csv or .json file (decided by extension).
std::vector<Event> load_events(const std::filesystem::path& path);

}
