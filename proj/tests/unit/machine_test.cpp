#include "stackseries/machine.hpp"

#include <gtest/gtest.h>

namespace stackseries {
namespace {

const std::string kWorkedTrace = "in in in xfer xfer xfer in xfer out out in xfer out out out";

MachineState di_state(std::vector<int> input, std::vector<int> d, std::vector<int> i, int next) {
  MachineState s;
  s.remaining_input = std::move(input);
  s.stacks = {std::move(d), std::move(i)};
  s.next_output = next;
  return s;
}

TEST(MachineConfigTest, ParsesLetters) {
  EXPECT_EQ(parse_machine("DI"), MachineConfig::di());
  EXPECT_TRUE(parse_machine("DI").is_di());
  EXPECT_FALSE(parse_machine("DDI").is_di());
  EXPECT_EQ(parse_machine("U"), MachineConfig::single_stack());
  EXPECT_EQ(to_string(parse_machine("DIDI")), "DIDI");
  EXPECT_THROW(parse_machine(""), parse_error);
  EXPECT_THROW(parse_machine("DX"), parse_error);
  EXPECT_THROW(MachineConfig(std::vector<StackRestriction>{}), config_error);
}

TEST(LegalMovesTest, BlockedStateFromThe3142Argument) {
  const auto s = di_state({4, 2}, {}, {3}, 1);
  EXPECT_EQ(legal_moves(s, MachineConfig::di()), (std::vector<Move>{{0}}));
}

TEST(LegalMovesTest, TransferOntoEmptyI) {
  const auto s = di_state({}, {2, 4, 5}, {}, 1);
  EXPECT_EQ(legal_moves(s, MachineConfig::di()), (std::vector<Move>{{1}}));
}

TEST(LegalMovesTest, NothingToMove) {
  EXPECT_TRUE(legal_moves(di_state({}, {}, {}, 1), MachineConfig::di()).empty());
}

TEST(LegalMovesTest, StageCountMismatch) {
  MachineState s;
  s.stacks.resize(3);
  EXPECT_THROW(legal_moves(s, MachineConfig::di()), config_error);
}

TEST(LegalMovesTest, OutputOnlyForForcedValue) {
  EXPECT_TRUE(legal_moves(di_state({}, {}, {3}, 1), MachineConfig::di()).empty());
  EXPECT_EQ(legal_moves(di_state({}, {}, {1}, 1), MachineConfig::di()),
            (std::vector<Move>{{2}}));
}

TEST(ApplyMoveTest, WorkedExampleStep) {
  const auto s = di_state({4, 5, 1, 3}, {2}, {}, 1);
  EXPECT_EQ(apply_move(s, Move{0}, MachineConfig::di()), di_state({5, 1, 3}, {2, 4}, {}, 1));
}

TEST(ApplyMoveTest, ForcedFinalOutput) {
  EXPECT_EQ(apply_move(di_state({}, {}, {1}, 1), Move{2}, MachineConfig::di()),
            di_state({}, {}, {}, 2));
}

TEST(ApplyMoveTest, NamesTheViolatedRule) {
  try {
    apply_move(di_state({}, {}, {3}, 1), Move{2}, MachineConfig::di());
    FAIL() << "expected illegal_move_error";
  } catch (const illegal_move_error& e) {
    EXPECT_NE(std::string(e.what()).find("not the next output"), std::string::npos);
  }
  try {
    apply_move(di_state({}, {4}, {3}, 1), Move{1}, MachineConfig::di());
    FAIL() << "expected illegal_move_error";
  } catch (const illegal_move_error& e) {
    EXPECT_NE(std::string(e.what()).find("increasing-stack violation: 4 over 3"),
              std::string::npos);
  }
  EXPECT_THROW(apply_move(di_state({}, {}, {}, 1), Move{0}, MachineConfig::di()),
               illegal_move_error);
  EXPECT_THROW(apply_move(di_state({1}, {}, {}, 1), Move{3}, MachineConfig::di()),
               illegal_move_error);
}

TEST(ReplayTest, WorkedTraceSorts) {
  const MachineConfig di = MachineConfig::di();
  const Trace trace = parse_trace(kWorkedTrace, di);
  ASSERT_EQ(trace.size(), 15u);
  const auto result = replay_trace(Permutation{2, 4, 5, 1, 3}, trace, di);
  EXPECT_TRUE(result.fully_sorted);
  EXPECT_EQ(result.final_state.next_output, 6);
}

TEST(ReplayTest, EmptyPermutation) {
  EXPECT_TRUE(replay_trace(Permutation{}, Trace{}, MachineConfig::di()).fully_sorted);
}

TEST(ReplayTest, PartialTraceIsNotSorted) {
  const auto result = replay_trace(Permutation{1}, Trace{{0}, {1}}, MachineConfig::di());
  EXPECT_FALSE(result.fully_sorted);
  EXPECT_EQ(result.final_state.stacks[1], std::vector<int>{1});
}

TEST(ReplayTest, ReportsIndexOfFirstIllegalMove) {
  try {
    replay_trace(Permutation{3, 1, 2}, Trace{{0}, {0}}, MachineConfig::di());
    FAIL() << "expected trace_replay_error";
  } catch (const trace_replay_error& e) {
    EXPECT_EQ(e.move_index(), 1u);
    EXPECT_NE(e.rule().find("decreasing-stack violation: 1 over 3"), std::string::npos);
  }
}

TEST(TraceFormatTest, AliasesOnlyForDi) {
  const MachineConfig di = MachineConfig::di();
  EXPECT_EQ(format_trace(parse_trace(kWorkedTrace, di), di), kWorkedTrace);
  EXPECT_EQ(parse_trace("s0 s1 s2", di), parse_trace("in xfer out", di));

  const MachineConfig ddi = parse_machine("DDI");
  EXPECT_EQ(format_trace(Trace{{0}, {1}, {2}, {3}}, ddi), "s0 s1 s2 s3");
  EXPECT_THROW(parse_trace("in", ddi), parse_error);
  EXPECT_THROW(parse_trace("s4", ddi), parse_error);
  EXPECT_THROW(parse_trace("push", di), parse_error);
}

TEST(StateInvariantTest, DetectsBrokenStates) {
  const MachineConfig di = MachineConfig::di();
  EXPECT_FALSE(state_invariant_violation(di_state({1, 3}, {2}, {}, 1), di, 3));
  EXPECT_TRUE(state_invariant_violation(di_state({}, {3, 2}, {1}, 1), di, 3));  // D order
  EXPECT_TRUE(state_invariant_violation(di_state({}, {}, {1, 2}, 3), di, 4));   // I order
  EXPECT_TRUE(state_invariant_violation(di_state({1}, {}, {}, 2), di, 1));     // duplicated 1
}

TEST(EmptyStackStatesTest, CountsPostMoveStates) {
  const MachineConfig di = MachineConfig::di();
  EXPECT_EQ(count_empty_stack_states(Permutation{2, 4, 5, 1, 3}, parse_trace(kWorkedTrace, di),
                                     di),
            1u);
  EXPECT_EQ(count_empty_stack_states(Permutation{1, 2, 3},
                                     parse_trace("in xfer out in xfer out in xfer out", di), di),
            3u);
}

}  // namespace
}  // namespace stackseries
