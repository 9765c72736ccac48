#pragma once

#include <chrono>
#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "admiss/epimorphism.hpp"
#include "admiss/group.hpp"

namespace admiss::cli {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

enum class Format { text, structured };

struct Context {
  Format format = Format::text;
  bool timings = false;
  SearchOptions search;
  GroupOptions group;
  std::string echo;  // canonical command line, without output-only flags
};

/// Everything one command produces: verdicts, witnesses and supporting
/// details in insertion order, plus optional wall-clock timings.
class Report {
 public:
  void verdict(const std::string& key, Json value) { verdicts_.emplace_back(key, std::move(value)); }
  void witness(const std::string& key, Json value) { witnesses_.emplace_back(key, std::move(value)); }
  void detail(const std::string& key, Json value) { details_.emplace_back(key, std::move(value)); }
  void timing(const std::string& key, double ms) { timings_.emplace_back(key, ms); }

  void print(std::ostream& os, const Context& ctx) const;

 private:
  using Section = std::vector<std::pair<std::string, Json>>;
  Section verdicts_, witnesses_, details_;
  std::vector<std::pair<std::string, double>> timings_;
};

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace admiss::cli
