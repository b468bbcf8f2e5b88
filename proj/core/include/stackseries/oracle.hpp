#pragma once

#include <cstddef>
#include <optional>

#include "stackseries/machine.hpp"
#include "stackseries/permutation.hpp"

namespace stackseries {

inline constexpr std::size_t kDefaultSearchCap = 12;

struct OracleOptions {
  std::size_t search_cap = kDefaultSearchCap;
  // Take a legal output move as the only successor. Popping the forced value never
  // disables another move, so this prunes without losing completeness. Turning it
  // off exists to cross-check that claim.
  bool eager_output = true;
};

/// Exhaustive depth-first search for a sequence of legal moves that sorts `perm`.
/// Failed states are memoized per call. Throws limit_error above the search cap.
bool oracle_sortable(const Permutation& perm, const MachineConfig& config,
                     const OracleOptions& options = {});

/// The first sorting trace found exploring moves in ascending stage order, or nullopt.
std::optional<Trace> oracle_witness(const Permutation& perm, const MachineConfig& config,
                                    const OracleOptions& options = {});

}  // namespace stackseries
