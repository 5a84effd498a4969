#pragma once

#include "glinf/gt_oracle.hpp"
#include "glinf/weights.hpp"

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

namespace glinf {

struct SweepOptions {
  /// Upper bound on the invariant order used by every criterion.
  unsigned m_max = 6;
  std::uint64_t seed = 42;
  /// Test hook: every cached module gets one perturbed generator entry.
  bool inject_mutation = false;
};

struct CriterionResult {
  int id = 0;
  std::string title;
  bool passed = false;
  /// First counterexample on failure, a short summary otherwise.
  std::string detail;
  double seconds = 0;
  double budget_seconds = 0;
};

/// Runs the acceptance criteria 1-9. Modules are built once and shared
/// between criteria; criterion 8 validates every module built before it.
class Sweep {
public:
  static constexpr int kCriteria = 9;

  explicit Sweep(SweepOptions options = {});

  CriterionResult run(int id);
  /// Runs 1..9 in order, calling `report` after each.
  std::vector<CriterionResult> run_all(const std::function<void(const CriterionResult&)>& report = {});

  static std::string title(int id);

private:
  const ModuleRep& module(const HighestWeight& lambda, std::size_t n);

  bool c1_formula_cross_validation(std::string& detail);
  bool c2_second_order(std::string& detail);
  bool c3_glk_formula(std::string& detail);
  bool c4_identity(std::string& detail);
  bool c5_reduced(std::string& detail);
  bool c6_generalized_identity(std::string& detail);
  bool c7_commutator_and_tail(std::string& detail);
  bool c8_oracle_integrity(std::string& detail);
  bool c9_tensor(std::string& detail);

  SweepOptions options_;
  std::map<std::pair<HighestWeight, std::size_t>, std::unique_ptr<ModuleRep>> modules_;
};

}  // namespace glinf
