// Randomized and exhaustive invariants. Generators are hand-rolled over a fixed-seed
// engine so failures reproduce.

#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <sstream>

#include "cli.hpp"
#include "stackseries/combinatorics.hpp"
#include "stackseries/di_algorithm.hpp"
#include "stackseries/machine.hpp"
#include "stackseries/oracle.hpp"

namespace stackseries {
namespace {

class Gen {
public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::size_t below(std::size_t bound) {
    return std::uniform_int_distribution<std::size_t>(0, bound - 1)(rng_);
  }

  Permutation permutation(std::size_t n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    std::shuffle(v.begin(), v.end(), rng_);
    return Permutation(std::move(v));
  }

  // A random pattern occurring in `p`: keep a random subset of positions.
  Permutation subpattern(const Permutation& p) {
    std::vector<int> kept;
    for (int v : p)
      if (below(2)) kept.push_back(v);
    return Permutation::from_pattern_of(kept);
  }

private:
  std::mt19937_64 rng_;
};

TEST(PatternProperties, LongerPatternsNeverContained) {
  Gen g(1);
  for (int trial = 0; trial < 500; ++trial) {
    const auto p = g.permutation(g.below(7));
    const auto q = g.permutation(p.size() + 1 + g.below(3));
    ASSERT_FALSE(contains_pattern(p, q));
  }
}

TEST(PatternProperties, ReflexiveAndTransitive) {
  Gen g(2);
  for (int trial = 0; trial < 2000; ++trial) {
    const auto p = g.permutation(g.below(10));
    ASSERT_TRUE(contains_pattern(p, p));
    const auto q = g.subpattern(p);
    const auto r = g.subpattern(q);
    ASSERT_TRUE(contains_pattern(p, q)) << to_string(p) << " / " << to_string(q);
    ASSERT_TRUE(contains_pattern(q, r));
    ASSERT_TRUE(contains_pattern(p, r));
  }
  // Unconstrained triples: whenever the premises hold, so does the conclusion.
  for (int trial = 0; trial < 5000; ++trial) {
    const auto p = g.permutation(5 + g.below(3));
    const auto q = g.permutation(3 + g.below(2));
    const auto r = g.permutation(2 + g.below(2));
    if (contains_pattern(p, q) && contains_pattern(q, r)) ASSERT_TRUE(contains_pattern(p, r));
  }
}

TEST(DirectSumProperties, AssociativeAdditiveDecomposable) {
  Gen g(3);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto a = g.permutation(g.below(5));
    const auto b = g.permutation(g.below(5));
    const auto c = g.permutation(g.below(5));
    ASSERT_EQ(direct_sum(direct_sum(a, b), c), direct_sum(a, direct_sum(b, c)));
    ASSERT_EQ(direct_sum(a, b).size(), a.size() + b.size());
    if (!a.empty() && !b.empty()) ASSERT_TRUE(is_sum_decomposable(direct_sum(a, b)));
  }
}

TEST(MachineProperties, RandomWalksPreserveInvariants) {
  Gen g(4);
  for (const auto* spec : {"DI", "DDI", "U", "II", "DIDI"}) {
    const MachineConfig config = parse_machine(spec);
    for (int trial = 0; trial < 300; ++trial) {
      const auto p = g.permutation(g.below(10));
      MachineState s = MachineState::initial(p, config);
      std::vector<int> emitted;
      for (;;) {
        const auto moves = legal_moves(s, config);
        if (moves.empty()) break;
        for (Move m : moves) {
          ASSERT_FALSE(move_violation(s, m, config));
          if (m.stage_index == config.stage_count()) {
            ASSERT_EQ(s.stacks.back().back(), s.next_output);
          }
        }
        const Move m = moves[g.below(moves.size())];
        if (m.stage_index == config.stage_count()) emitted.push_back(s.next_output);
        s = apply_move(s, m, config);
        ASSERT_EQ(state_invariant_violation(s, config, p.size()), std::nullopt) << spec;
      }
      // Whatever got out is exactly 1..k in order.
      for (std::size_t i = 0; i < emitted.size(); ++i) {
        ASSERT_EQ(emitted[i], static_cast<int>(i) + 1);
      }
      if (s.fully_sorted()) ASSERT_EQ(emitted.size(), p.size());
    }
  }
}

TEST(AlgorithmProperties, ExhaustiveThroughSeven) {
  const MachineConfig di = MachineConfig::di();
  for (int n = 0; n <= 7; ++n) {
    for (const auto& p : all_permutations(n)) {
      const auto with = di_sort(p, true);
      const auto without = di_sort(p, false);
      ASSERT_EQ(with.is_sorted(), without.is_sorted()) << to_string(p);
      for (const auto* outcome : {&with, &without}) {
        if (const Sorted* s = outcome->sorted()) {
          ASSERT_EQ(s->trace.size(), 3 * p.size());
          ASSERT_TRUE(replay_trace(p, s->trace, di).fully_sorted) << to_string(p);
        } else {
          const MachineState& st = outcome->stuck()->state;
          ASSERT_TRUE(st.stacks[0].empty());
          ASSERT_FALSE(st.remaining_input.empty());
          ASSERT_FALSE(st.stacks[1].empty());
          ASSERT_GT(st.remaining_input.front(), st.stacks[1].back());
          ASSERT_TRUE(diagnose_stuck(*outcome).has_value());
        }
      }
    }
  }
}

TEST(AlgorithmProperties, CharacterizationThroughEight) {
  const PatternSet basis = di_basis();
  for (int n = 0; n <= 8; ++n) {
    for (const auto& p : all_permutations(n)) {
      ASSERT_EQ(di_sort(p).is_sorted(), avoids_all(p, basis)) << to_string(p);
    }
  }
}

TEST(OracleProperties, WitnessesReplay) {
  for (const auto* spec : {"DI", "U", "II", "DDI", "DIDI", "D", "I", "UU"}) {
    const MachineConfig config = parse_machine(spec);
    for (int n = 0; n <= 6; ++n) {
      for (const auto& p : all_permutations(n)) {
        const auto w = oracle_witness(p, config);
        ASSERT_EQ(w.has_value(), oracle_sortable(p, config));
        if (w) ASSERT_TRUE(replay_trace(p, *w, config).fully_sorted) << spec << to_string(p);
      }
    }
  }
}

TEST(OracleProperties, SingleStackIsAv231AndCatalan) {
  const MachineConfig u = MachineConfig::single_stack();
  const PatternSet av231{Permutation{2, 3, 1}};
  for (int n = 0; n <= 8; ++n) {
    std::uint64_t count = 0;
    for (const auto& p : all_permutations(n)) {
      const bool sortable = oracle_sortable(p, u);
      ASSERT_EQ(sortable, avoids_all(p, av231)) << to_string(p);
      count += sortable;
    }
    ASSERT_EQ(count, catalan(static_cast<unsigned>(n)));
  }
}

TEST(CliProperties, CheckAllNeverDisagrees) {
  for (int n = 1; n <= 6; ++n) {
    for (const auto& p : all_permutations(n)) {
      std::ostringstream out, err;
      const int status = cli::run({"check", to_string(p), "--method", "all"}, out, err);
      ASSERT_NE(status, 2) << to_string(p) << ": " << err.str();
    }
  }
}

}  // namespace
}  // namespace stackseries
