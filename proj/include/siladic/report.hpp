#pragma once

#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>

namespace siladic {

// One failing cell (or rule-pair case) of a check. lhs/rhs are the exact
// values the two sides produced there.
struct Counterexample {
  std::string equation;
  std::int64_t k = 0;
  std::int64_t n = 0;
  std::int64_t lhs = 0;
  std::int64_t rhs = 0;
};

enum class CheckStatus { pass, fail };

// Machine-readable outcome of one identity check.
//
// status == fail exactly when a counterexample is present; the first
// counterexample (equation order, then ascending (n, k)) is kept.
// elapsed_ms is informational only and never serialized, so emitted reports
// are byte-stable across runs.
struct CheckReport {
  std::string check_name;
  std::map<std::string, std::int64_t> parameters;
  CheckStatus status = CheckStatus::pass;
  std::optional<Counterexample> counterexample;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == CheckStatus::pass; }

  void record_failure(Counterexample ce) {
    if (status == CheckStatus::fail) return;
    status = CheckStatus::fail;
    counterexample = std::move(ce);
  }
};

class Stopwatch {
 public:
  std::int64_t elapsed_ms() const {
    using namespace std::chrono;
    return duration_cast<milliseconds>(steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

}  // namespace siladic
