#include "stackseries/combinatorics.hpp"

#include <algorithm>
#include <array>
#include <cstdlib>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "stackseries/di_algorithm.hpp"
#include "stackseries/errors.hpp"
#include "stackseries/oracle.hpp"

namespace stackseries {

namespace {

void check_index(unsigned k, const char* what) {
  if (k > kMaxSequenceIndex) {
    throw limit_error(std::string(what) + " index limited to k <= " +
                      std::to_string(kMaxSequenceIndex) + " (requested " + std::to_string(k) +
                      ")");
  }
}

SequenceValue checked_add(SequenceValue a, SequenceValue b) {
  SequenceValue out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow");
  return out;
}

SequenceValue checked_mul(SequenceValue a, SequenceValue b) {
  SequenceValue out = 0;
  if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("128-bit overflow");
  return out;
}

std::uint64_t narrow(SequenceValue v) {
  if (v > std::numeric_limits<std::uint64_t>::max()) {
    throw std::overflow_error("reference value exceeds 64 bits");
  }
  return static_cast<std::uint64_t>(v);
}

void check_cap(std::size_t n, std::size_t cap, const std::string& what) {
  if (n > cap) {
    throw limit_error(what + " limited to n <= " + std::to_string(cap) + " (requested " +
                      std::to_string(n) + ")");
  }
}

bool di_sortable(const Permutation& p) { return di_sort(p).is_sorted(); }

std::uint64_t av1342_count(std::size_t n) {
  const PatternSet forbidden{Permutation{1, 3, 4, 2}};
  std::uint64_t count = 0;
  for (const auto& p : all_permutations(n)) {
    if (avoids_all(p, forbidden)) ++count;
  }
  return count;
}

}  // namespace

std::string to_decimal(SequenceValue value) {
  if (value == 0) return "0";
  std::string digits;
  while (value > 0) {
    digits.push_back(static_cast<char>('0' + static_cast<int>(value % 10)));
    value /= 10;
  }
  return {digits.rbegin(), digits.rend()};
}

SequenceValue schroder_large(unsigned k) {
  check_index(k, "large Schröder");
  // paths[x][y], y <= x
  std::vector<std::vector<SequenceValue>> paths(k + 1, std::vector<SequenceValue>(k + 1, 0));
  paths[0][0] = 1;
  for (unsigned x = 0; x <= k; ++x) {
    for (unsigned y = 0; y <= x; ++y) {
      if (x == 0 && y == 0) continue;
      SequenceValue total = 0;
      if (x > 0) total = checked_add(total, paths[x - 1][y]);
      if (y > 0) total = checked_add(total, paths[x][y - 1]);
      if (x > 0 && y > 0) total = checked_add(total, paths[x - 1][y - 1]);
      paths[x][y] = total;
    }
  }
  return paths[k][k];
}

SequenceValue schroder_large_by_recurrence(unsigned k) {
  check_index(k, "large Schröder");
  SequenceValue prev2 = 1;  // R(0)
  SequenceValue prev1 = 2;  // R(1)
  if (k == 0) return prev2;
  for (unsigned j = 2; j <= k; ++j) {
    const SequenceValue lhs = checked_mul(3 * (2 * j - 1), prev1) - (j - 2) * prev2;
    if (lhs % (j + 1) != 0) {
      throw std::logic_error("Schröder recurrence produced a non-integer");
    }
    prev2 = prev1;
    prev1 = lhs / (j + 1);
  }
  return prev1;
}

SequenceValue schroder_small(unsigned k) {
  if (k == 0) {
    throw limit_error("small Schröder numbers start at k = 1");
  }
  const SequenceValue large = schroder_large(k);
  if (large % 2 != 0) {
    throw std::logic_error("large Schröder number R(" + std::to_string(k) + ") is odd");
  }
  return large / 2;
}

SequenceValue catalan(unsigned k) {
  check_index(k, "Catalan");
  std::vector<SequenceValue> c(k + 1, 0);
  c[0] = 1;
  for (unsigned m = 1; m <= k; ++m) {
    SequenceValue total = 0;
    for (unsigned i = 0; i < m; ++i) total = checked_add(total, checked_mul(c[i], c[m - 1 - i]));
    c[m] = total;
  }
  return c[k];
}

PatternSet di_basis() { return {Permutation{3, 1, 4, 2}, Permutation{3, 2, 4, 1}}; }

std::uint64_t enumerate_sortable(std::size_t n, const MachineConfig& config,
                                 const EnumerationMethod& method) {
  std::uint64_t count = 0;
  switch (method.kind) {
    case CountMethod::Algorithm:
      if (!config.is_di()) {
        throw config_error("the algorithm method only applies to the DI machine, not " +
                           to_string(config));
      }
      check_cap(n, kAlgorithmEnumerationCap, "algorithm enumeration");
      for (const auto& p : all_permutations(n)) {
        if (di_sortable(p)) ++count;
      }
      break;
    case CountMethod::Oracle:
      check_cap(n, kOracleEnumerationCap, "oracle enumeration");
      for (const auto& p : all_permutations(n)) {
        if (oracle_sortable(p, config)) ++count;
      }
      break;
    case CountMethod::Avoidance:
      if (method.patterns.empty()) {
        throw config_error("the avoidance method needs a pattern set");
      }
      check_cap(n, kAlgorithmEnumerationCap, "avoidance enumeration");
      for (const auto& p : all_permutations(n)) {
        if (avoids_all(p, method.patterns)) ++count;
      }
      break;
  }
  return count;
}

bool CountTable::all_match() const {
  return std::all_of(rows.begin(), rows.end(), [](const CountRow& r) { return r.matches; });
}

std::string format_text(const CountTable& table) {
  const std::array<std::string, 4> header{"n", "count", "reference", "matches"};
  std::vector<std::array<std::string, 4>> cells;
  for (const auto& r : table.rows) {
    cells.push_back({std::to_string(r.n), std::to_string(r.count),
                     r.reference ? std::to_string(*r.reference) : "-",
                     r.reference ? (r.matches ? "yes" : "NO") : "-"});
  }
  std::array<std::size_t, 4> width{};
  for (std::size_t c = 0; c < 4; ++c) {
    width[c] = header[c].size();
    for (const auto& row : cells) width[c] = std::max(width[c], row[c].size());
  }
  std::ostringstream out;
  auto emit = [&](const std::array<std::string, 4>& row) {
    for (std::size_t c = 0; c < 4; ++c) {
      if (c) out << "  ";
      out << std::string(width[c] - row[c].size(), ' ') << row[c];
    }
    out << '\n';
  };
  emit(header);
  for (const auto& row : cells) emit(row);
  if (!table.note.empty()) out << table.note << '\n';
  return out.str();
}

std::string format_records(const CountTable& table) {
  std::ostringstream out;
  out << "n\tcount\treference\tmatches\n";
  for (const auto& r : table.rows) {
    out << r.n << '\t' << r.count << '\t'
        << (r.reference ? std::to_string(*r.reference) : std::string("-")) << '\t'
        << (r.matches ? "true" : "false") << '\n';
  }
  return out.str();
}

CountTable count_table(std::size_t n_max, const MachineConfig& config,
                       const EnumerationMethod& method, ReferenceSequence reference) {
  CountTable table;
  for (std::size_t n = 1; n <= n_max; ++n) {
    CountRow row;
    row.n = n;
    row.count = enumerate_sortable(n, config, method);
    switch (reference) {
      case ReferenceSequence::None:
        break;
      case ReferenceSequence::LargeSchroder:
        row.reference = narrow(schroder_large(static_cast<unsigned>(n - 1)));
        break;
      case ReferenceSequence::Catalan:
        row.reference = narrow(catalan(static_cast<unsigned>(n)));
        break;
      case ReferenceSequence::Av1342:
        row.reference = av1342_count(n);
        break;
    }
    row.matches = !row.reference || *row.reference == row.count;
    table.rows.push_back(row);
  }
  return table;
}

CountTable schroder_check(std::size_t n_max, CountMethod method) {
  if (method == CountMethod::Avoidance) {
    return count_table(n_max, MachineConfig::di(), EnumerationMethod::avoidance(di_basis()),
                       ReferenceSequence::LargeSchroder);
  }
  return count_table(n_max, MachineConfig::di(), {method, {}}, ReferenceSequence::LargeSchroder);
}

DecomposableCensus decomposable_census(std::size_t n_max) {
  check_cap(n_max, kAlgorithmEnumerationCap, "decomposable census");
  std::vector<std::uint64_t> counts(n_max + 1, 0);
  for (std::size_t n = 1; n <= n_max; ++n) {
    for (const auto& p : all_permutations(n)) {
      if (is_sum_decomposable(p) && di_sortable(p)) ++counts[n];
    }
  }

  auto reference_at = [](std::size_t n, int offset) -> std::optional<std::uint64_t> {
    const long k = static_cast<long>(n) + offset;
    if (k < 1 || k > static_cast<long>(kMaxSequenceIndex)) return std::nullopt;
    return narrow(schroder_small(static_cast<unsigned>(k)));
  };

  DecomposableCensus census;
  const std::size_t fit_hi = std::min<std::size_t>(5, n_max);
  if (fit_hi >= 2) {
    for (int offset : {0, -1, 1, -2, 2}) {
      bool fits = true;
      for (std::size_t n = 2; n <= fit_hi && fits; ++n) {
        const auto ref = reference_at(n, offset);
        fits = ref && *ref == counts[n];
      }
      if (fits) {
        census.offset = offset;
        break;
      }
    }
  }

  for (std::size_t n = 1; n <= n_max; ++n) {
    CountRow row;
    row.n = n;
    row.count = counts[n];
    if (census.offset) {
      // No Schröder index below 1: the only consistent count there is zero.
      row.reference = reference_at(n, *census.offset).value_or(0);
    } else {
      row.reference = 0;
    }
    row.matches = census.offset && *row.reference == row.count;
    census.table.rows.push_back(row);
  }

  if (census.offset) {
    const int off = *census.offset;
    std::ostringstream note;
    note << "offset: count(n) = small_schroder(n";
    if (off != 0) note << (off < 0 ? " - " : " + ") << std::abs(off);
    note << ')';
    census.table.note = note.str();
  } else {
    census.table.note = "offset: none of -2..2 fits n = 2..5";
  }
  return census;
}

bool closure_check(std::size_t sample_size, std::size_t max_len) {
  check_cap(max_len, 6, "closure check");
  std::vector<Permutation> sortable;
  for (std::size_t len = 1; len <= max_len; ++len) {
    for (const auto& p : all_permutations(len)) {
      if (di_sortable(p)) sortable.push_back(p);
    }
  }
  const std::size_t total = sortable.size() * sortable.size();
  if (sample_size >= total) {
    for (const auto& a : sortable) {
      for (const auto& b : sortable) {
        if (!di_sortable(direct_sum(a, b))) return false;
      }
    }
    return true;
  }
  std::mt19937_64 rng(0x5eedf00dULL);
  std::uniform_int_distribution<std::size_t> pick(0, sortable.size() - 1);
  for (std::size_t s = 0; s < sample_size; ++s) {
    if (!di_sortable(direct_sum(sortable[pick(rng)], sortable[pick(rng)]))) return false;
  }
  return true;
}

PatternSet basis_search(std::size_t max_len, const MachineConfig& config) {
  check_cap(max_len, 8, "basis search");
  PatternSet basis;
  // The empty permutation is sortable by every machine.
  std::set<Permutation, ShortlexLess> previous{Permutation{}};
  for (std::size_t len = 1; len <= max_len; ++len) {
    std::set<Permutation, ShortlexLess> current;
    for (const auto& p : all_permutations(len)) {
      if (oracle_sortable(p, config)) {
        current.insert(p);
        continue;
      }
      bool minimal = true;
      for (std::size_t pos = 0; pos < len && minimal; ++pos) {
        minimal = previous.contains(p.delete_at(pos));
      }
      if (minimal) basis.insert(p);
    }
    previous = std::move(current);
  }
  return basis;
}

CountTable av1342_crosscheck(std::size_t n_max) {
  check_cap(n_max, 7, "Av(1342) cross-check");
  const MachineConfig two_increasing{StackRestriction::Increasing, StackRestriction::Increasing};
  return count_table(n_max, two_increasing, EnumerationMethod::oracle(),
                     ReferenceSequence::Av1342);
}

}  // namespace stackseries
