#include "stackseries/machine.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace stackseries {

namespace {

std::string describe_push_violation(StackRestriction r, int value, int top) {
  std::ostringstream msg;
  if (r == StackRestriction::Decreasing) {
    msg << "decreasing-stack violation: " << value << " over " << top
        << " (a push must exceed the top)";
  } else {
    msg << "increasing-stack violation: " << value << " over " << top
        << " (a push must be below the top)";
  }
  return msg.str();
}

std::string token_for(std::size_t index, const MachineConfig& config) {
  if (config.is_di()) {
    static constexpr const char* kAliases[] = {"in", "xfer", "out"};
    return kAliases[index];
  }
  return "s" + std::to_string(index);
}

}  // namespace

char restriction_letter(StackRestriction r) noexcept {
  switch (r) {
    case StackRestriction::Decreasing:
      return 'D';
    case StackRestriction::Increasing:
      return 'I';
    case StackRestriction::Unrestricted:
      return 'U';
  }
  return '?';
}

bool admits(StackRestriction r, const std::vector<int>& stack, int value) noexcept {
  if (stack.empty()) return true;
  switch (r) {
    case StackRestriction::Decreasing:
      return value > stack.back();
    case StackRestriction::Increasing:
      return value < stack.back();
    case StackRestriction::Unrestricted:
      return true;
  }
  return false;
}

MachineConfig::MachineConfig(std::initializer_list<StackRestriction> stages)
    : MachineConfig(std::vector<StackRestriction>(stages)) {}

MachineConfig::MachineConfig(std::vector<StackRestriction> stages) : stages_(std::move(stages)) {
  if (stages_.empty()) {
    throw config_error("a machine needs at least one stack");
  }
}

MachineConfig MachineConfig::di() {
  return {StackRestriction::Decreasing, StackRestriction::Increasing};
}

MachineConfig MachineConfig::single_stack() { return {StackRestriction::Unrestricted}; }

bool MachineConfig::is_di() const noexcept {
  return stages_.size() == 2 && stages_[0] == StackRestriction::Decreasing &&
         stages_[1] == StackRestriction::Increasing;
}

MachineConfig parse_machine(std::string_view text) {
  std::vector<StackRestriction> stages;
  for (char c : text) {
    switch (c) {
      case 'D':
      case 'd':
        stages.push_back(StackRestriction::Decreasing);
        break;
      case 'I':
      case 'i':
        stages.push_back(StackRestriction::Increasing);
        break;
      case 'U':
      case 'u':
        stages.push_back(StackRestriction::Unrestricted);
        break;
      default:
        throw parse_error("machine spec must be a string over {D, I, U}: '" + std::string(text) +
                          "'");
    }
  }
  if (stages.empty()) {
    throw parse_error("machine spec is empty");
  }
  return MachineConfig(std::move(stages));
}

std::string to_string(const MachineConfig& config) {
  std::string out;
  for (auto r : config.stages()) out += restriction_letter(r);
  return out;
}

MachineState MachineState::initial(const Permutation& perm, const MachineConfig& config) {
  MachineState s;
  s.remaining_input.assign(perm.begin(), perm.end());
  s.stacks.resize(config.stage_count());
  return s;
}

bool MachineState::stacks_empty() const noexcept {
  return std::all_of(stacks.begin(), stacks.end(), [](const auto& st) { return st.empty(); });
}

std::optional<std::string> move_violation(const MachineState& state, Move move,
                                          const MachineConfig& config) {
  const std::size_t k = config.stage_count();
  if (state.stacks.size() != k) {
    throw config_error("state has " + std::to_string(state.stacks.size()) +
                       " stacks but the machine has " + std::to_string(k) + " stages");
  }
  const std::size_t i = move.stage_index;
  if (i > k) {
    return "move index " + std::to_string(i) + " out of range for a " + std::to_string(k) +
           "-stage machine";
  }

  int value = 0;
  if (i == 0) {
    if (state.remaining_input.empty()) return std::string("empty source: input is exhausted");
    value = state.remaining_input.front();
  } else {
    const auto& src = state.stacks[i - 1];
    if (src.empty()) return "empty source: stack " + std::to_string(i) + " is empty";
    value = src.back();
  }

  if (i == k) {
    if (value != state.next_output) {
      return "output violation: " + std::to_string(value) + " is not the next output (" +
             std::to_string(state.next_output) + ")";
    }
    return std::nullopt;
  }

  const auto r = config[i];
  const auto& dst = state.stacks[i];
  if (!admits(r, dst, value)) {
    return describe_push_violation(r, value, dst.back());
  }
  return std::nullopt;
}

std::vector<Move> legal_moves(const MachineState& state, const MachineConfig& config) {
  std::vector<Move> moves;
  for (std::size_t i = 0; i <= config.stage_count(); ++i) {
    if (!move_violation(state, Move{i}, config)) moves.push_back(Move{i});
  }
  return moves;
}

MachineState apply_move(const MachineState& state, Move move, const MachineConfig& config) {
  MachineState next = state;
  apply_move_in_place(next, move, config);
  return next;
}

void apply_move_in_place(MachineState& state, Move move, const MachineConfig& config) {
  if (auto why = move_violation(state, move, config)) {
    throw illegal_move_error(*why);
  }
  const std::size_t i = move.stage_index;
  int value = 0;
  if (i == 0) {
    value = state.remaining_input.front();
    state.remaining_input.erase(state.remaining_input.begin());
  } else {
    value = state.stacks[i - 1].back();
    state.stacks[i - 1].pop_back();
  }
  if (i == config.stage_count()) {
    ++state.next_output;
  } else {
    state.stacks[i].push_back(value);
  }
}

std::optional<std::string> state_invariant_violation(const MachineState& state,
                                                     const MachineConfig& config, std::size_t n) {
  if (state.stacks.size() != config.stage_count()) return std::string("stage count mismatch");
  for (std::size_t s = 0; s < state.stacks.size(); ++s) {
    const auto& st = state.stacks[s];
    for (std::size_t j = 1; j < st.size(); ++j) {
      const bool ok = config[s] == StackRestriction::Unrestricted ||
                      (config[s] == StackRestriction::Decreasing ? st[j] > st[j - 1]
                                                                  : st[j] < st[j - 1]);
      if (!ok) return "stack " + std::to_string(s + 1) + " breaks its restriction";
    }
  }
  std::vector<int> seen(n + 1, 0);
  auto mark = [&](int v) {
    if (v >= 1 && static_cast<std::size_t>(v) <= n) ++seen[v];
  };
  for (int v : state.remaining_input) mark(v);
  for (const auto& st : state.stacks)
    for (int v : st) mark(v);
  for (int v = 1; v < state.next_output; ++v) mark(v);
  std::size_t total = state.remaining_input.size() + static_cast<std::size_t>(state.next_output - 1);
  for (const auto& st : state.stacks) total += st.size();
  if (total != n || std::any_of(seen.begin() + 1, seen.end(), [](int c) { return c != 1; })) {
    return std::string("conservation violated: entries do not partition 1..n");
  }
  return std::nullopt;
}

trace_replay_error::trace_replay_error(std::size_t move_index, const std::string& rule)
    : illegal_move_error("illegal move at index " + std::to_string(move_index) + ": " + rule),
      move_index_(move_index),
      rule_(rule) {}

ReplayResult replay_trace(const Permutation& perm, const Trace& trace,
                          const MachineConfig& config) {
  MachineState state = MachineState::initial(perm, config);
  for (std::size_t idx = 0; idx < trace.size(); ++idx) {
    if (auto why = move_violation(state, trace[idx], config)) {
      throw trace_replay_error(idx, *why);
    }
    apply_move_in_place(state, trace[idx], config);
  }
  const bool sorted = state.fully_sorted();
  return {std::move(state), sorted};
}

std::size_t count_empty_stack_states(const Permutation& perm, const Trace& trace,
                                     const MachineConfig& config) {
  MachineState state = MachineState::initial(perm, config);
  std::size_t count = 0;
  for (std::size_t idx = 0; idx < trace.size(); ++idx) {
    if (auto why = move_violation(state, trace[idx], config)) {
      throw trace_replay_error(idx, *why);
    }
    apply_move_in_place(state, trace[idx], config);
    if (state.stacks_empty()) ++count;
  }
  return count;
}

std::string format_trace(const Trace& trace, const MachineConfig& config) {
  std::string out;
  for (std::size_t i = 0; i < trace.size(); ++i) {
    if (i) out += ' ';
    out += token_for(trace[i].stage_index, config);
  }
  return out;
}

Trace parse_trace(std::string_view text, const MachineConfig& config) {
  Trace trace;
  std::istringstream in{std::string(text)};
  std::string token;
  const std::size_t k = config.stage_count();
  while (in >> token) {
    if (config.is_di() && token == "in") {
      trace.push_back({0});
    } else if (config.is_di() && token == "xfer") {
      trace.push_back({1});
    } else if (config.is_di() && token == "out") {
      trace.push_back({2});
    } else if (token.size() >= 2 && token[0] == 's' &&
               std::all_of(token.begin() + 1, token.end(),
                           [](unsigned char c) { return std::isdigit(c); }) &&
               token.size() <= 4) {
      const std::size_t idx = std::stoul(token.substr(1));
      if (idx > k) {
        throw parse_error("trace token '" + token + "' exceeds the " + std::to_string(k) +
                          "-stage machine");
      }
      trace.push_back({idx});
    } else {
      throw parse_error("unknown trace token '" + token + "'");
    }
  }
  return trace;
}

}  // namespace stackseries
