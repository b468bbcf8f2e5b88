#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>

#include "stackseries/machine.hpp"
#include "stackseries/permutation.hpp"

namespace stackseries {

struct Sorted {
  Trace trace;
};

struct Stuck {
  MachineState state;
  std::string reason;
};

/// Result of running the deterministic DI sorting procedure.
class SortOutcome {
public:
  SortOutcome(Sorted s) : result_(std::move(s)) {}
  SortOutcome(Stuck s) : result_(std::move(s)) {}

  bool is_sorted() const noexcept { return std::holds_alternative<Sorted>(result_); }
  const Sorted* sorted() const noexcept { return std::get_if<Sorted>(&result_); }
  const Stuck* stuck() const noexcept { return std::get_if<Stuck>(&result_); }

private:
  std::variant<Sorted, Stuck> result_;
};

/// Sorts `perm` on the DI machine by applying the first applicable rule, in priority order:
///
///   1. the top of I is the next output value: output it;
///   2. (optional) the m entries of D are exactly the next m output values: move all of them to I;
///   3. the next input is below the top of I and above the top of D: push it onto D;
///   4. otherwise move the top of D onto I.
///
/// Rule 2 with an empty D never applies. The run halts as Stuck the first time no rule applies;
/// there is no backtracking. Disabling rule 2 does not change which permutations get sorted.
SortOutcome di_sort(const Permutation& perm, bool use_step2 = true);

struct StuckDiagnosis {
  int top_of_i = 0;
  int next_input = 0;
  int next_output = 0;

  friend bool operator==(const StuckDiagnosis&, const StuckDiagnosis&) = default;
};

/// Blocking triple of a Stuck outcome; nullopt for Sorted ones.
/// Throws std::logic_error if the stuck state is not of the expected shape
/// (D empty, input nonempty, next input above the top of I).
std::optional<StuckDiagnosis> diagnose_stuck(const SortOutcome& outcome);

/// Post-move states of the di_sort run (step 2 enabled) with both stacks empty,
/// counting the final state. nullopt when the permutation is not sortable.
std::optional<std::size_t> empty_stacks_statistic(const Permutation& perm);

}  // namespace stackseries
