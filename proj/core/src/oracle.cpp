#include "stackseries/oracle.hpp"

#include <string>
#include <unordered_set>

namespace stackseries {

namespace {

class Search {
public:
  Search(const MachineConfig& config, const OracleOptions& options)
      : config_(config), options_(options) {}

  bool run(const Permutation& perm) {
    if (perm.size() > options_.search_cap) {
      throw limit_error("oracle search limited to n <= " + std::to_string(options_.search_cap) +
                        " (requested " + std::to_string(perm.size()) + ")");
    }
    path_.clear();
    failed_.clear();
    return dfs(MachineState::initial(perm, config_));
  }

  const Trace& path() const noexcept { return path_; }

private:
  // The remaining input is a suffix of the permutation and next_output follows from
  // conservation, so the input length plus the stack contents identify a state.
  static std::string key_of(const MachineState& s) {
    std::string key;
    key.push_back(static_cast<char>(s.remaining_input.size()));
    for (const auto& st : s.stacks) {
      for (int v : st) key.push_back(static_cast<char>(v));
      key.push_back('\0');
    }
    return key;
  }

  bool dfs(const MachineState& state) {
    if (state.fully_sorted()) return true;
    std::string key = key_of(state);
    if (failed_.contains(key)) return false;

    const Move output{config_.stage_count()};
    if (options_.eager_output && !move_violation(state, output, config_)) {
      if (descend(state, output)) return true;
    } else {
      for (Move m : legal_moves(state, config_)) {
        if (descend(state, m)) return true;
      }
    }
    failed_.insert(std::move(key));
    return false;
  }

  bool descend(const MachineState& state, Move m) {
    path_.push_back(m);
    if (dfs(apply_move(state, m, config_))) return true;
    path_.pop_back();
    return false;
  }

  const MachineConfig& config_;
  const OracleOptions& options_;
  std::unordered_set<std::string> failed_;
  Trace path_;
};

}  // namespace

bool oracle_sortable(const Permutation& perm, const MachineConfig& config,
                     const OracleOptions& options) {
  Search search(config, options);
  return search.run(perm);
}

std::optional<Trace> oracle_witness(const Permutation& perm, const MachineConfig& config,
                                    const OracleOptions& options) {
  Search search(config, options);
  if (!search.run(perm)) return std::nullopt;
  return search.path();
}

}  // namespace stackseries
