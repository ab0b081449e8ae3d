#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "dendrix/codec.hpp"

namespace dendrix {

struct CheckOutcome {
  std::string name;
  bool passed = false;
  std::optional<int> first_failing_order;
};

struct TrialReport {
  std::uint64_t seed = 0;
  std::vector<CheckOutcome> checks;
  std::optional<std::string> error;  // a library error aborted the trial

  bool passed() const;
  std::optional<int> first_failing_order() const;
};

struct VerifyOptions {
  std::string check;
  ModelChoice model = FreeModel{};
  int order = 8;
  std::uint64_t seed = 1;
  int trials = 1;
  bool parallel = false;
};

struct VerifyReport {
  VerifyOptions options;
  std::vector<TrialReport> trials;  // in seed order

  bool passed() const;
};

const std::vector<std::string>& verify_check_names();

// Trial t uses seed options.seed + t. Throws UsageError when the check does
// not apply to the model.
VerifyReport run_verification(const VerifyOptions& options);
TrialReport run_trial(const std::string& check, const ModelChoice& model, int order, std::uint64_t seed);

Json to_json(const VerifyReport& report);

}  // namespace dendrix
