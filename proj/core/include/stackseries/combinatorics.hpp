#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "stackseries/machine.hpp"
#include "stackseries/permutation.hpp"

namespace stackseries {

inline constexpr unsigned kMaxSequenceIndex = 30;

// R(29) already exceeds 2^64 (R(30) ~ 4.4e20), so sequence terms are 128-bit.
__extension__ typedef unsigned __int128 SequenceValue;

std::string to_decimal(SequenceValue value);

/// Large Schröder number: lattice paths (0,0) -> (k,k) with steps (1,0), (0,1), (1,1)
/// that stay weakly below the diagonal, counted by dynamic programming.
SequenceValue schroder_large(unsigned k);

/// Large Schröder number from (k+1) R(k) = 3(2k-1) R(k-1) - (k-2) R(k-2).
/// Independent of the path count; the two must agree.
SequenceValue schroder_large_by_recurrence(unsigned k);

/// Half the large Schröder number, k >= 1.
SequenceValue schroder_small(unsigned k);

/// Catalan number by the convolution C(k+1) = sum C(i) C(k-i).
SequenceValue catalan(unsigned k);

enum class CountMethod { Algorithm, Oracle, Avoidance };

struct EnumerationMethod {
  CountMethod kind = CountMethod::Algorithm;
  PatternSet patterns;  // used by Avoidance only

  static EnumerationMethod algorithm() { return {CountMethod::Algorithm, {}}; }
  static EnumerationMethod oracle() { return {CountMethod::Oracle, {}}; }
  static EnumerationMethod avoidance(PatternSet patterns) {
    return {CountMethod::Avoidance, std::move(patterns)};
  }
};

inline constexpr std::size_t kAlgorithmEnumerationCap = 10;
inline constexpr std::size_t kOracleEnumerationCap = 9;

/// {3142, 3241}
PatternSet di_basis();

/// Length-n permutations accepted by `method`. The Algorithm method requires the DI machine,
/// Avoidance requires a nonempty pattern set. Caps: 10 (algorithm, avoidance), 9 (oracle).
std::uint64_t enumerate_sortable(std::size_t n, const MachineConfig& config,
                                 const EnumerationMethod& method);

struct CountRow {
  std::size_t n = 0;
  std::uint64_t count = 0;
  std::optional<std::uint64_t> reference;  // nullopt: no reference requested
  bool matches = true;

  friend bool operator==(const CountRow&, const CountRow&) = default;
};

struct CountTable {
  std::vector<CountRow> rows;  // n = 1, 2, ...
  std::string note;

  bool all_match() const;
};

/// Right-aligned columns with a header; the note (if any) follows on its own line.
std::string format_text(const CountTable& table);

/// Tab-separated "n count reference matches" header plus one line per row.
std::string format_records(const CountTable& table);

enum class ReferenceSequence { None, LargeSchroder, Catalan, Av1342 };

/// Counts for n = 1..n_max next to the chosen reference: R(n-1), C(n), or the
/// brute-force number of length-n permutations avoiding 1342.
CountTable count_table(std::size_t n_max, const MachineConfig& config,
                       const EnumerationMethod& method, ReferenceSequence reference);

/// DI counts (algorithm or oracle) against R(n-1) for n = 1..n_max.
CountTable schroder_check(std::size_t n_max, CountMethod method = CountMethod::Algorithm);

struct DecomposableCensus {
  CountTable table;
  // count(n) = schroder_small(n + offset), fitted on n = 2..5.
  std::optional<int> offset;
};

/// Sum-decomposable DI-sortable permutations per length, n = 1..n_max (<= 10).
DecomposableCensus decomposable_census(std::size_t n_max);

/// Whether alpha ⊕ beta stays DI-sortable for DI-sortable alpha, beta of lengths 1..max_len.
/// All pairs are checked when there are at most `sample_size` of them; otherwise a
/// fixed-seed sample of `sample_size` pairs.
bool closure_check(std::size_t sample_size, std::size_t max_len);

/// Unsortable permutations of length <= max_len (<= 8) whose one-entry deletions are all
/// sortable, decided by the oracle. Shortlex order.
PatternSet basis_search(std::size_t max_len, const MachineConfig& config);

/// [Increasing, Increasing] oracle counts against brute-force Av(1342), n = 1..n_max (<= 7).
CountTable av1342_crosscheck(std::size_t n_max);

}  // namespace stackseries
