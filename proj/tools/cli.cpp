#include "cli.hpp"

#include <CLI11.hpp>

#include <optional>
#include <ostream>

#include "stackseries/combinatorics.hpp"
#include "stackseries/di_algorithm.hpp"
#include "stackseries/errors.hpp"
#include "stackseries/machine.hpp"
#include "stackseries/oracle.hpp"
#include "stackseries/permutation.hpp"

namespace stackseries::cli {

namespace {

struct SortArgs {
  std::string perm;
  std::string machine = "DI";
  bool trace = false;
  bool no_step2 = false;
  bool stat = false;
};

struct CheckArgs {
  std::string perm;
  std::string machine = "DI";
  std::string method;
};

struct EnumerateArgs {
  std::string machine = "DI";
  std::size_t max_n = 8;
  std::string method;
  std::string reference = "none";
  std::string format = "text";
};

struct BasisArgs {
  std::string machine = "DI";
  std::size_t max_len = 6;
};

struct SequenceArgs {
  std::string name;
  std::size_t count = 10;
};

/// Patterns known to characterize the machine's class, when there is a finite answer on file.
std::optional<PatternSet> known_basis(const MachineConfig& config) {
  if (config.is_di()) return di_basis();
  if (config == MachineConfig::single_stack()) return PatternSet{Permutation{2, 3, 1}};
  return std::nullopt;
}

std::string default_method(const MachineConfig& config) {
  return config.is_di() ? "algorithm" : "oracle";
}

int cmd_sort(const SortArgs& a, std::ostream& out, std::ostream& err) {
  const Permutation perm = parse_permutation(a.perm);
  const MachineConfig config = parse_machine(a.machine);

  if (config.is_di()) {
    const SortOutcome outcome = di_sort(perm, !a.no_step2);
    if (const Sorted* s = outcome.sorted()) {
      out << "SORTED\n";
      if (a.trace) out << format_trace(s->trace, config) << '\n';
      if (a.stat) out << "empty-stacks: " << *empty_stacks_statistic(perm) << '\n';
      return kSuccess;
    }
    const auto diag = diagnose_stuck(outcome);
    out << "STUCK (top of I = " << diag->top_of_i << ", next input = " << diag->next_input
        << ", next output = " << diag->next_output << ")\n";
    if (a.stat) out << "empty-stacks: undefined\n";
    return kNegativeAnswer;
  }

  if (a.no_step2) {
    err << "error: --no-step2 only applies to the DI machine\n";
    return kUsageError;
  }
  const auto witness = oracle_witness(perm, config);
  if (witness) {
    out << "SORTED\n";
    if (a.trace) out << format_trace(*witness, config) << '\n';
    if (a.stat) {
      out << "empty-stacks: " << count_empty_stack_states(perm, *witness, config) << '\n';
    }
    return kSuccess;
  }
  out << "STUCK (no sequence of legal moves sorts this permutation on " << to_string(config)
      << ")\n";
  if (a.stat) out << "empty-stacks: undefined\n";
  return kNegativeAnswer;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& err) {
  const Permutation perm = parse_permutation(a.perm);
  const MachineConfig config = parse_machine(a.machine);
  const std::string method = a.method.empty() ? default_method(config) : a.method;
  const auto basis = known_basis(config);

  auto by_algorithm = [&] { return di_sort(perm).is_sorted(); };
  auto by_oracle = [&] { return oracle_sortable(perm, config); };
  auto by_avoidance = [&] { return avoids_all(perm, *basis); };
  auto yes_no = [](bool b) { return b ? "yes" : "no"; };

  if (method == "all") {
    std::vector<std::pair<std::string, bool>> answers;
    if (config.is_di()) answers.emplace_back("algorithm", by_algorithm());
    answers.emplace_back("oracle", by_oracle());
    if (basis) answers.emplace_back("avoidance", by_avoidance());
    bool agree = true;
    for (const auto& [name, answer] : answers) {
      out << name << ": " << yes_no(answer) << '\n';
      agree = agree && answer == answers.front().second;
    }
    out << "agree: " << yes_no(agree) << '\n';
    if (!agree) {
      err << "internal inconsistency: sortability methods disagree on " << to_string(perm)
          << '\n';
      return kUsageError;
    }
    return answers.front().second ? kSuccess : kNegativeAnswer;
  }

  bool answer = false;
  if (method == "algorithm") {
    if (!config.is_di()) {
      throw config_error("the algorithm method only applies to the DI machine");
    }
    answer = by_algorithm();
  } else if (method == "oracle") {
    answer = by_oracle();
  } else {
    if (!basis) {
      throw config_error("no known finite basis for machine " + to_string(config));
    }
    answer = by_avoidance();
  }
  out << yes_no(answer) << '\n';
  return answer ? kSuccess : kNegativeAnswer;
}

int cmd_enumerate(const EnumerateArgs& a, std::ostream& out, std::ostream&) {
  const MachineConfig config = parse_machine(a.machine);
  const std::string method_name = a.method.empty() ? default_method(config) : a.method;

  EnumerationMethod method;
  if (method_name == "algorithm") {
    method = EnumerationMethod::algorithm();
  } else if (method_name == "oracle") {
    method = EnumerationMethod::oracle();
  } else {
    const auto basis = known_basis(config);
    if (!basis) {
      throw config_error("no known finite basis for machine " + to_string(config));
    }
    method = EnumerationMethod::avoidance(*basis);
  }

  ReferenceSequence reference = ReferenceSequence::None;
  if (a.reference == "schroder") reference = ReferenceSequence::LargeSchroder;
  if (a.reference == "catalan") reference = ReferenceSequence::Catalan;
  if (a.reference == "av1342") reference = ReferenceSequence::Av1342;

  const CountTable table = count_table(a.max_n, config, method, reference);
  out << (a.format == "records" ? format_records(table) : format_text(table));
  return table.all_match() ? kSuccess : kNegativeAnswer;
}

int cmd_basis(const BasisArgs& a, std::ostream& out, std::ostream&) {
  const MachineConfig config = parse_machine(a.machine);
  for (const auto& p : basis_search(a.max_len, config)) {
    out << to_compact_string(p) << '\n';
  }
  return kSuccess;
}

int cmd_sequence(const SequenceArgs& a, std::ostream& out, std::ostream&) {
  if (a.count > kMaxSequenceIndex + 1) {
    throw limit_error("sequence output limited to " + std::to_string(kMaxSequenceIndex + 1) +
                      " terms");
  }
  // Validate the whole range before printing anything.
  std::vector<SequenceValue> terms;
  for (std::size_t i = 0; i < a.count; ++i) {
    const auto k = static_cast<unsigned>(i);
    if (a.name == "large-schroder") {
      terms.push_back(schroder_large(k));
    } else if (a.name == "small-schroder") {
      terms.push_back(schroder_small(k + 1));
    } else {
      terms.push_back(catalan(k));
    }
  }
  for (auto t : terms) out << to_decimal(t) << '\n';
  return kSuccess;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Sorting machines built from restricted stacks in series", "stackseries"};
  app.require_subcommand(1);

  const std::string machine_help = "machine as a string over {D,I,U}, input side first";

  SortArgs sort_args;
  auto* sort = app.add_subcommand("sort", "sort a permutation and report the outcome");
  sort->add_option("permutation", sort_args.perm, "e.g. 24513 or \"2 4 5 1 3\"")->required();
  sort->add_option("--machine", sort_args.machine, machine_help);
  sort->add_flag("--trace", sort_args.trace, "print the move sequence");
  sort->add_flag("--no-step2", sort_args.no_step2, "skip the block-transfer rule (DI only)");
  sort->add_flag("--stat", sort_args.stat, "report how often both stacks are empty");

  CheckArgs check_args;
  auto* check = app.add_subcommand("check", "decide sortability");
  check->add_option("permutation", check_args.perm)->required();
  check->add_option("--machine", check_args.machine, machine_help);
  check->add_option("--method", check_args.method)
      ->check(CLI::IsMember({"algorithm", "oracle", "avoidance", "all"}));

  EnumerateArgs enum_args;
  auto* enumerate = app.add_subcommand("enumerate", "count sortable permutations per length");
  enumerate->add_option("--machine", enum_args.machine, machine_help);
  enumerate->add_option("--max-n", enum_args.max_n)->check(CLI::PositiveNumber);
  enumerate->add_option("--method", enum_args.method)
      ->check(CLI::IsMember({"algorithm", "oracle", "avoidance"}));
  enumerate->add_option("--reference", enum_args.reference)
      ->check(CLI::IsMember({"schroder", "catalan", "av1342", "none"}));
  enumerate->add_option("--format", enum_args.format)->check(CLI::IsMember({"text", "records"}));

  BasisArgs basis_args;
  auto* basis = app.add_subcommand("basis", "find the minimal unsortable permutations");
  basis->add_option("--machine", basis_args.machine, machine_help);
  basis->add_option("--max-len", basis_args.max_len)->check(CLI::PositiveNumber);

  SequenceArgs seq_args;
  auto* sequence = app.add_subcommand("sequence", "print reference sequence terms");
  sequence->add_option("--name", seq_args.name)
      ->required()
      ->check(CLI::IsMember({"large-schroder", "small-schroder", "catalan"}));
  sequence->add_option("--count", seq_args.count);

  std::vector<std::string> argv_storage;
  argv_storage.reserve(args.size() + 1);
  argv_storage.emplace_back("stackseries");
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& s : argv_storage) argv.push_back(s.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::Success&) {
    const auto parsed = app.get_subcommands();
    out << (parsed.empty() ? app.help() : parsed.front()->help());
    return kSuccess;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (sort->parsed()) return cmd_sort(sort_args, out, err);
    if (check->parsed()) return cmd_check(check_args, out, err);
    if (enumerate->parsed()) return cmd_enumerate(enum_args, out, err);
    if (basis->parsed()) return cmd_basis(basis_args, out, err);
    return cmd_sequence(seq_args, out, err);
  } catch (const limit_error& e) {
    err << "limit: " << e.what() << '\n';
    return kLimitError;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  } catch (const config_error& e) {
    err << "error: " << e.what() << '\n';
    return kUsageError;
  }
}

}  // namespace stackseries::cli
