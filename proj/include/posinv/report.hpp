#pragma once

/**
 * @file report.hpp
 * @brief Structured check results shared by validators and theorem checkers.
 */

#include <chrono>
#include <string>
#include <vector>

#include "json.hpp"

namespace posinv {

using Json = nlohmann::ordered_json;

enum class Status { kPass, kFail, kNotApplicable };

const char* to_string(Status s);

struct CheckResult {
  std::string check;
  Status status = Status::kPass;
  /// One JSON object per failure; each can be replayed through the library.
  Json witnesses = Json::array();
  Json details = Json::object();
  std::vector<std::string> notes;
  double seconds = 0;
  unsigned precision_used = 0;

  explicit CheckResult(std::string name = {}) : check(std::move(name)) {}

  void fail(Json witness) {
    status = Status::kFail;
    witnesses.push_back(std::move(witness));
  }
  void not_applicable(const std::string& why) {
    status = Status::kNotApplicable;
    notes.push_back("hypothesis not met: " + why);
  }
  bool ok() const { return status != Status::kFail; }
  bool passed() const { return status == Status::kPass; }
};

struct Report {
  std::vector<CheckResult> checks;

  void add(CheckResult r) { checks.push_back(std::move(r)); }
  void append(const Report& other) { checks.insert(checks.end(), other.checks.begin(), other.checks.end()); }
  bool ok() const;
  const CheckResult* find(const std::string& name) const;
};

Json to_json(const CheckResult& r);
Json to_json(const Report& r);
std::string to_text(const Report& r);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace posinv
