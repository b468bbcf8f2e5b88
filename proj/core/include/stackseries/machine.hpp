#pragma once

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "stackseries/errors.hpp"
#include "stackseries/permutation.hpp"

namespace stackseries {

// Read top to bottom, a Decreasing stack strictly decreases (a push must exceed the
// top) and an Increasing stack strictly increases (a push must be below the top).
enum class StackRestriction { Decreasing, Increasing, Unrestricted };

char restriction_letter(StackRestriction r) noexcept;

/// Whether `value` may be pushed onto `stack` (stored bottom to top). Empty stacks accept anything.
bool admits(StackRestriction r, const std::vector<int>& stack, int value) noexcept;

/// Stages of a series machine, listed from the input side to the output side.
class MachineConfig {
public:
  MachineConfig(std::initializer_list<StackRestriction> stages);
  explicit MachineConfig(std::vector<StackRestriction> stages);

  /// Decreasing stack feeding an increasing stack.
  static MachineConfig di();
  static MachineConfig single_stack();

  std::size_t stage_count() const noexcept { return stages_.size(); }
  StackRestriction operator[](std::size_t i) const { return stages_[i]; }
  const std::vector<StackRestriction>& stages() const noexcept { return stages_; }
  bool is_di() const noexcept;

  friend bool operator==(const MachineConfig&, const MachineConfig&) = default;

private:
  std::vector<StackRestriction> stages_;
};

/// Parses a string over {D, I, U}, input side first ("DI", "DDI", "U", "II").
MachineConfig parse_machine(std::string_view text);
std::string to_string(const MachineConfig& config);

/// A transfer between adjacent stages. For a k-stage machine, index 0 moves
/// input -> stack 1, index i moves stack i -> stack i+1, and index k moves
/// the last stack to the output.
struct Move {
  std::size_t stage_index = 0;
  friend auto operator<=>(const Move&, const Move&) = default;
};

using Trace = std::vector<Move>;

struct MachineState {
  std::vector<int> remaining_input;     // front is the next entry to enter
  std::vector<std::vector<int>> stacks; // one per stage, bottom to top
  int next_output = 1;

  static MachineState initial(const Permutation& perm, const MachineConfig& config);

  bool stacks_empty() const noexcept;
  /// Input consumed and every stack drained; next_output is then n + 1.
  bool fully_sorted() const noexcept { return remaining_input.empty() && stacks_empty(); }

  friend bool operator==(const MachineState&, const MachineState&) = default;
};

/// Reason `move` is illegal in `state`, or nullopt when it is legal.
std::optional<std::string> move_violation(const MachineState& state, Move move,
                                          const MachineConfig& config);

/// Legal moves in ascending stage order. Output moves appear only for the forced value.
std::vector<Move> legal_moves(const MachineState& state, const MachineConfig& config);

/// Successor state. Throws illegal_move_error naming the violated rule.
MachineState apply_move(const MachineState& state, Move move, const MachineConfig& config);

/// In-place form of apply_move, same checks.
void apply_move_in_place(MachineState& state, Move move, const MachineConfig& config);

/// Checks stack restrictions and conservation against a permutation of length n.
std::optional<std::string> state_invariant_violation(const MachineState& state,
                                                     const MachineConfig& config, std::size_t n);

class trace_replay_error : public illegal_move_error {
public:
  trace_replay_error(std::size_t move_index, const std::string& rule);
  std::size_t move_index() const noexcept { return move_index_; }
  const std::string& rule() const noexcept { return rule_; }

private:
  std::size_t move_index_;
  std::string rule_;
};

struct ReplayResult {
  MachineState final_state;
  bool fully_sorted = false;
};

/// Replays `trace` from the initial state. Throws trace_replay_error at the first illegal move.
ReplayResult replay_trace(const Permutation& perm, const Trace& trace, const MachineConfig& config);

/// Number of post-move states along `trace` in which every stack is empty.
std::size_t count_empty_stack_states(const Permutation& perm, const Trace& trace,
                                     const MachineConfig& config);

/// Tokens "s0".."sk"; the DI machine uses "in", "xfer", "out" instead.
std::string format_trace(const Trace& trace, const MachineConfig& config);

/// Accepts "s0".."sk" for any machine and, for DI, the "in"/"xfer"/"out" aliases.
Trace parse_trace(std::string_view text, const MachineConfig& config);

}  // namespace stackseries
