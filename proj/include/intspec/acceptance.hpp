#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace intspec {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  std::vector<std::string> details; // one line per sub-check or failure
  double seconds = 0;
};

struct AcceptanceCriterion {
  int id;
  std::string name;
  std::function<CriterionResult()> run;
};

const std::vector<AcceptanceCriterion>& acceptance_criteria();

// Runs the criteria whose ids are listed (all when empty). Exceptions become failures.
std::vector<CriterionResult> run_acceptance(const std::vector<int>& only = {},
                                            const std::function<void(const CriterionResult&)>& on_done = {});

// Maximum coclique size by the textbook independent-set recursion (no colouring
// bound); independent of the solver and used as its oracle. With forced set,
// only cocliques through that vertex are considered.
std::uint64_t reference_coclique_number(const std::vector<std::vector<bool>>& adj,
                                        std::optional<std::size_t> forced = std::nullopt);

} // namespace intspec
