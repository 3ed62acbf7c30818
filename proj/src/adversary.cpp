#include "guess/adversary.hpp"

#include <algorithm>
#include <sstream>

#include "guess/seqspec.hpp"

namespace guess {

std::string FlipTrace::str() const {
  std::ostringstream os;
  auto list = [&os](const auto& v) {
    os << '[';
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ']';
  };
  os << "flips=";
  list(flips);
  os << " guesses=";
  list(guesses);
  if (completed())
    os << " status=Completed(" << flips.size() << ")";
  else
    os << " status=BudgetExhausted(phase=" << phase << ",steps=" << steps << ")";
  return os.str();
}

ExtensionUnavailable::ExtensionUnavailable(FinitePrefix p, bool inside)
    : std::runtime_error("no extension of " + to_string(p) + (inside ? " inside" : " outside") + " the set"),
      prefix(std::move(p)),
      inside(inside) {}

namespace {

SequenceOracle extend_with(const FinitePrefix& p, Nat tail, const std::string& name) {
  auto values = std::make_shared<const std::vector<Nat>>(p.entries());
  return SequenceOracle([values, tail](Index i) { return i < values->size() ? (*values)[i] : tail; },
                        prefix_spec(p) + "+" + name);
}

bool has_zero(const FinitePrefix& p) {
  return std::find(p.entries().begin(), p.entries().end(), Nat{0}) != p.entries().end();
}

// Supplies the next entry for the given phase and current prefix.
using Emitter = std::function<Nat(std::size_t phase, const FinitePrefix& prefix)>;
// Called when a phase begins.
using PhaseStart = std::function<void(std::size_t phase, const FinitePrefix& prefix)>;

AdversaryRun run_phases(const Guesser& g, int first_target, std::size_t target_flips, std::size_t step_budget,
                        const PhaseStart& start, const Emitter& emit) {
  if (target_flips == 0) throw std::invalid_argument("target_flips must be at least 1");
  if (step_budget == 0) throw std::invalid_argument("step_budget must be at least 1");
  AdversaryRun run;
  run.trace.first_target = first_target;
  for (std::size_t phase = 1; phase <= target_flips; ++phase) {
    const int want = phase % 2 == 1 ? first_target : 1 - first_target;
    start(phase, run.prefix);
    std::size_t steps = 0;
    while (true) {
      run.prefix.push_back(emit(phase, run.prefix));
      ++steps;
      const int guess = g(run.prefix);
      if (guess == want) {
        run.trace.flips.push_back(run.prefix.size() - 1);
        run.trace.guesses.push_back(guess);
        break;
      }
      if (steps >= step_budget) {
        run.trace.status = FlipTrace::Status::BudgetExhausted;
        run.trace.phase = phase;
        run.trace.steps = steps;
        return run;
      }
    }
  }
  return run;
}

}  // namespace

ExtensionOracles infinitely_many_zeros_extensions() {
  return ExtensionOracles{
      [](const FinitePrefix& p) { return std::optional<SequenceOracle>(extend_with(p, 0, "zeros")); },
      [](const FinitePrefix& p) { return std::optional<SequenceOracle>(extend_with(p, 1, "ones")); },
      "infinitely-many-zeros",
  };
}

ExtensionOracles contains_zero_extensions() {
  return ExtensionOracles{
      [](const FinitePrefix& p) { return std::optional<SequenceOracle>(extend_with(p, 0, "zeros")); },
      [](const FinitePrefix& p) -> std::optional<SequenceOracle> {
        if (has_zero(p)) return std::nullopt;
        return extend_with(p, 1, "ones");
      },
      "contains-zero",
  };
}

AdversaryRun diagonalize(const Guesser& g, const ExtensionOracles& ext, std::size_t target_flips,
                         std::size_t step_budget) {
  std::optional<SequenceOracle> branch;
  auto start = [&](std::size_t phase, const FinitePrefix& prefix) {
    const bool inside = phase % 2 == 1;
    branch = inside ? ext.in_s(prefix) : ext.out_s(prefix);
    if (!branch) throw ExtensionUnavailable(prefix, inside);
  };
  auto emit = [&](std::size_t, const FinitePrefix& prefix) { return branch->query(prefix.size()); };
  return run_phases(g, 1, target_flips, step_budget, start, emit);
}

AdversaryRun permutation_adversary(const Guesser& g, std::size_t target_flips, std::size_t step_budget) {
  Nat next = 0;
  std::optional<Nat> gap;
  bool fill_pending = false;
  auto start = [&](std::size_t phase, const FinitePrefix&) {
    if (phase % 2 == 0) {
      gap = next++;
    } else {
      fill_pending = gap.has_value();
    }
  };
  auto emit = [&](std::size_t, const FinitePrefix&) -> Nat {
    if (fill_pending) {
      fill_pending = false;
      const Nat v = *gap;
      gap.reset();
      return v;
    }
    return next++;
  };
  return run_phases(g, 1, target_flips, step_budget, start, emit);
}

AdversaryRun cantor_adversary(const Guesser& g, std::size_t target_flips, std::size_t step_budget) {
  auto start = [](std::size_t, const FinitePrefix&) {};
  auto emit = [](std::size_t phase, const FinitePrefix&) -> Nat { return phase % 2 == 1 ? 0 : 5; };
  return run_phases(g, 0, target_flips, step_budget, start, emit);
}

}  // namespace guess
