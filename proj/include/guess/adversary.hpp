#pragma once

#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "guess/guesser.hpp"
#include "guess/oracle.hpp"

namespace guess {

// Extensions of a finite prefix inside and outside a set S. Either side may
// return nullopt when no such extension exists; a returned oracle must agree
// with the prefix on its indices.
struct ExtensionOracles {
  std::function<std::optional<SequenceOracle>(const FinitePrefix&)> in_s;
  std::function<std::optional<SequenceOracle>(const FinitePrefix&)> out_s;
  std::string description;
};

// S = sequences with infinitely many zeros: extend by zeros / by ones.
ExtensionOracles infinitely_many_zeros_extensions();
// S = sequences containing a zero: extend by zeros; no extension leaves S
// once a zero has appeared.
ExtensionOracles contains_zero_extensions();

struct FlipTrace {
  enum class Status { Completed, BudgetExhausted };

  std::vector<Index> flips;  // x_1 < x_2 < ...
  std::vector<int> guesses;  // guess at each flip
  Status status = Status::Completed;
  std::size_t phase = 0;     // 1-based phase that ran out of budget
  std::size_t steps = 0;     // entries appended in that phase

  // Guess sought in phase 1; later phases alternate.
  int first_target = 1;

  bool completed() const { return status == Status::Completed; }
  // "flips=[..] guesses=[..] status=Completed(n)" or "status=BudgetExhausted(phase=p,steps=s)".
  std::string str() const;
};

struct AdversaryRun {
  FinitePrefix prefix;
  FlipTrace trace;
};

// Thrown when a set has no extension of the required kind at some prefix.
struct ExtensionUnavailable : std::runtime_error {
  ExtensionUnavailable(FinitePrefix prefix, bool inside);
  FinitePrefix prefix;
  bool inside;
};

// Builds a sequence on which `g` keeps changing its mind. Phase k extends the
// current prefix along in_s (k odd) or out_s (k even) one entry at a time until
// g outputs k mod 2. Stops after `target_flips` flips, or when a phase appends
// `step_budget` entries without the guess turning.
AdversaryRun diagonalize(const Guesser& g, const ExtensionOracles& ext, std::size_t target_flips,
                         std::size_t step_budget);

// Counts 0, 1, 2, ... until g says 1; then skips the next value until g says
// 0; then fills the gap and resumes counting until g says 1; and so on. The
// prefix is injective throughout.
AdversaryRun permutation_adversary(const Guesser& g, std::size_t target_flips, std::size_t step_budget);

// Runs of 0s until g says 0, then runs of 5s until g says 1, alternating.
AdversaryRun cantor_adversary(const Guesser& g, std::size_t target_flips, std::size_t step_budget);

}  // namespace guess
