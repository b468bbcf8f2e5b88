#include "stackseries/di_algorithm.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

namespace stackseries {

namespace {

constexpr Move kPush{0};
constexpr Move kTransfer{1};
constexpr Move kOutput{2};

// Empty I behaves as +infinity, empty D as -infinity.
int top_or(const std::vector<int>& stack, int sentinel) {
  return stack.empty() ? sentinel : stack.back();
}

// D holds exactly next..next+m-1 (it is increasing bottom to top).
bool holds_next_block(const std::vector<int>& d, int next_output) {
  if (d.empty()) return false;
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (d[j] != next_output + static_cast<int>(j)) return false;
  }
  return true;
}

std::string stuck_reason(const MachineState& s) {
  std::ostringstream msg;
  const auto& d = s.stacks[0];
  const auto& i = s.stacks[1];
  msg << "no rule applies:";
  if (!i.empty()) msg << " top of I is " << i.back() << ',';
  msg << " next output is " << s.next_output;
  if (!s.remaining_input.empty()) msg << ", next input " << s.remaining_input.front();
  if (d.empty()) msg << ", D is empty";
  return msg.str();
}

}  // namespace

SortOutcome di_sort(const Permutation& perm, bool use_step2) {
  const MachineConfig config = MachineConfig::di();
  MachineState state = MachineState::initial(perm, config);
  Trace trace;
  trace.reserve(perm.size() * 3);

  auto step = [&](Move m) {
    apply_move_in_place(state, m, config);
    trace.push_back(m);
  };

  while (!state.fully_sorted()) {
    const auto& d = state.stacks[0];
    const auto& i = state.stacks[1];

    if (!i.empty() && i.back() == state.next_output) {
      step(kOutput);
      continue;
    }
    if (use_step2 && holds_next_block(d, state.next_output)) {
      for (std::size_t m = d.size(); m > 0; --m) step(kTransfer);
      continue;
    }
    if (!state.remaining_input.empty()) {
      const int next = state.remaining_input.front();
      if (next < top_or(i, std::numeric_limits<int>::max()) &&
          next > top_or(d, std::numeric_limits<int>::min())) {
        step(kPush);
        continue;
      }
    }
    if (!d.empty() && !move_violation(state, kTransfer, config)) {
      step(kTransfer);
      continue;
    }
    std::string reason = stuck_reason(state);
    return Stuck{std::move(state), std::move(reason)};
  }
  return Sorted{std::move(trace)};
}

std::optional<StuckDiagnosis> diagnose_stuck(const SortOutcome& outcome) {
  const Stuck* stuck = outcome.stuck();
  if (!stuck) return std::nullopt;
  const MachineState& s = stuck->state;
  if (s.stacks.size() != 2 || !s.stacks[0].empty() || s.remaining_input.empty() ||
      s.stacks[1].empty() || s.remaining_input.front() <= s.stacks[1].back()) {
    throw std::logic_error("stuck state does not have the expected blocking shape: " +
                           stuck->reason);
  }
  return StuckDiagnosis{s.stacks[1].back(), s.remaining_input.front(), s.next_output};
}

std::optional<std::size_t> empty_stacks_statistic(const Permutation& perm) {
  const SortOutcome outcome = di_sort(perm, true);
  const Sorted* sorted = outcome.sorted();
  if (!sorted) return std::nullopt;
  return count_empty_stack_states(perm, sorted->trace, MachineConfig::di());
}

}  // namespace stackseries
