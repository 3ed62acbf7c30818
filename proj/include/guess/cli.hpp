#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "guess/guesser.hpp"
#include "guess/oracle.hpp"
#include "guess/signature.hpp"

namespace guess::cli {

enum ExitCode : int {
  kOk = 0,
  kFailure = 1,
  kUsage = 2,  // parse, signature and usage errors
  kBudgetExhausted = 3,
  kDensityViolation = 4,
};

// guesses[k] is the guess on (f(0), ..., f(k)) for k = 0..horizon.
struct GuessTrace {
  std::vector<int> guesses;
  // Least m > 0 such that the guesses are constant on k = m..horizon; none
  // when only k = 0 has been observed.
  std::optional<std::size_t> stable_from;

  int final_guess() const { return guesses.back(); }
  std::string str() const;
};

std::optional<std::size_t> stable_from(const std::vector<int>& guesses);
GuessTrace guess_trace(const Guesser& g, SequenceOracle& o, std::size_t horizon);

// Builtin host keys plus the guessers and the constants-family overguesser
// (mu_const) as sequence-ary keys.
HostRegistry cli_registry();

// Guesser names accepted on the command line: contains-zero, parity,
// const-0, const-1, initial-segment, last-is:<n>, and delta2:<symbol> for the
// Delta2 pair synthesized from a sequence-ary symbol of `sig`.
Guesser resolve_guesser(const std::string& ref, const Signature& sig);
std::vector<std::string> builtin_guesser_names();

// Runs one command line (without the program name) and returns the exit code.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err);

// Interactive session: each natural number read from `in` is appended to the
// prefix and every guesser's current guess is shown.
int play(const std::vector<std::string>& guesser_refs, const Signature& sig, std::istream& in, std::ostream& out);

}  // namespace guess::cli
