// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any FAIL.

#include <chrono>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

#include "guess/adversary.hpp"
#include "guess/cli.hpp"
#include "guess/pairing.hpp"
#include "guess/semantics.hpp"
#include "guess/synth.hpp"
#include "guess/syntax.hpp"
#include "support/random_syntax.hpp"

using namespace guess;
using guess::testing::SyntaxGen;

namespace {

struct Verdict {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

// Sentences produced along the way, replayed by the round-trip criterion.
std::vector<Formula>& generated() {
  static std::vector<Formula> corpus;
  return corpus;
}

// --- locality --------------------------------------------------------------

Verdict locality() {
  const Signature sig = Signature::standard();
  SyntaxGen gen(1001);
  Verdict v;
  int queried = 0;
  for (int round = 0; round < 500; ++round) {
    const Formula phi = gen.formula(3, {}, {"x", "y", "z"});
    auto f = gen.oracle();
    const auto r = eval_qf(phi, f, {}, sig);
    const auto k = r.queries.max_queried();
    if (k) ++queried;
    for (int ext = 0; ext < 4; ++ext) {
      auto g = k ? gen.extension(f, *k) : gen.oracle();
      const auto rg = eval_qf(phi, g, {}, sig);
      const bool beyond = k ? rg.queries.max_queried() > k : !rg.queries.empty();
      if (rg.value != r.value || beyond) v.fail("sentence " + print(phi) + " is not local");
    }
  }
  if (queried < 250) v.fail("too few sentences read the oracle: " + std::to_string(queried));
  v.detail = v.pass ? "500 sentences x 4 extensions, " + std::to_string(queried) + " with queries" : v.detail;
  return v;
}

// --- weak substitution -----------------------------------------------------

bool has_ellipsis_binding(const Formula& f, const std::string& x, bool binder_is_x) {
  bool found = false;
  std::function<void(const Term&)> term = [&](const Term& t) {
    if (const auto* e = std::get_if<EllipsisApp>(&t.node)) {
      if (binder_is_x ? e->binder == x : (e->binder != x && free_vars(*e->body).count(x)))
        found = true;
      term(*e->body);
      term(*e->bound);
    } else if (const auto* a = std::get_if<FixedApp>(&t.node)) {
      for (const auto& arg : a->args) term(arg);
    } else if (const auto* s = std::get_if<SeqApp>(&t.node)) {
      term(*s->arg);
    }
  };
  std::function<void(const Formula&)> formula = [&](const Formula& g) {
    std::visit(
        [&](const auto& n) {
          using N = std::decay_t<decltype(n)>;
          if constexpr (std::is_same_v<N, Eq>) {
            term(n.lhs);
            term(n.rhs);
          } else if constexpr (std::is_same_v<N, Pred>) {
            for (const auto& arg : n.args) term(arg);
          } else if constexpr (std::is_same_v<N, Not>) {
            formula(*n.operand);
          } else if constexpr (std::is_same_v<N, Binary>) {
            formula(*n.lhs);
            formula(*n.rhs);
          } else {
            formula(*n.body);
          }
        },
        g.node);
  };
  formula(f);
  return found;
}

Verdict weak_substitution() {
  const Signature sig = Signature::standard();
  SyntaxGen gen(1002);
  Verdict v;
  int binder_rule = 0, pass_through_rule = 0;
  for (int round = 0; round < 500; ++round) {
    const Formula phi = gen.formula(3, {"x", "y"}, {"x", "y", "z"});
    const std::string x = gen.coin() ? "x" : "y";
    const Nat c = gen.below(10);
    const Assignment s{{"x", gen.below(10)}, {"y", gen.below(10)}, {"z", gen.below(10)}};
    auto o = gen.oracle();
    binder_rule += has_ellipsis_binding(phi, x, true);
    pass_through_rule += has_ellipsis_binding(phi, x, false);
    const bool lhs = eval_qf(substitute(phi, x, num(c)), o, s, sig).value;
    const bool rhs = eval_qf(phi, o, s.with(x, c), sig).value;
    if (lhs != rhs) v.fail("mismatch on " + print(phi) + " with " + x + " := " + std::to_string(c));
  }
  if (binder_rule == 0 || pass_through_rule == 0) v.fail("an ellipsis substitution rule was never exercised");
  if (v.pass)
    v.detail = "500 cases, " + std::to_string(binder_rule) + " substitute the binder, " +
               std::to_string(pass_through_rule) + " pass into the body";
  return v;
}

// --- end-to-end Delta2 guesser ---------------------------------------------

Verdict delta2_guesser() {
  const Signature sig = Signature::standard();
  const auto spec = sentences_from_guesser("Gz", sig);
  generated().push_back(spec.pi2.formula());
  generated().push_back(spec.sigma2.formula());
  generated().push_back(spec.pi2.complement().formula());
  const auto g = guesser_from_delta2(spec, sig);
  Verdict v;

  const std::vector<Index> planted{0, 1, 2, 3, 5, 7, 9, 12, 15, 18, 21, 24, 27, 30, 33, 36, 40, 44, 47, 50};
  for (Index p : planted) {
    auto o = plant_zero(p);
    const auto t = cli::guess_trace(g, o, p + 12);
    if (t.final_guess() != 1 || !t.stable_from || *t.stable_from > p + 1)
      v.fail("plantzero:" + std::to_string(p) + " gave " + t.str());
  }

  std::vector<std::pair<std::string, SequenceOracle>> zero_free;
  for (Nat c = 1; c <= 6; ++c) zero_free.emplace_back("const:" + std::to_string(c), constant_oracle(c));
  zero_free.emplace_back("cycle:[1,2,3]", cycle_oracle({1, 2, 3}));
  zero_free.emplace_back("cycle:[9,4]", cycle_oracle({9, 4}));
  zero_free.emplace_back("id+1", SequenceOracle([](Index i) { return i + 1; }, "id+1"));
  zero_free.emplace_back("2i+3", SequenceOracle([](Index i) { return 2 * i + 3; }, "2i+3"));
  SyntaxGen gen(1003);
  while (zero_free.size() < 20) {
    const std::uint64_t seed = gen.rng()();
    zero_free.emplace_back("random", SequenceOracle([seed](Index i) { return 1 + SyntaxGen::mix(seed + i) % 9; },
                                                    "random nonzero"));
  }
  for (auto& [name, o] : zero_free) {
    const auto t = cli::guess_trace(g, o, 40);
    if (t.final_guess() != 0 || t.stable_from != std::size_t{1}) v.fail(name + " gave " + t.str());
  }
  if (v.pass) v.detail = "20 planted zeros (p <= 50) settle on 1 by p+1, 20 zero-free settle on 0 from 1";
  return v;
}

// --- bounded mu on the constants family ------------------------------------

// Least a in the window with f(b) = a for every b < n; the frontier otherwise.
ExtendedNat reference_constants_mu(const FinitePrefix& p) {
  const Nat n = p.size();
  for (Nat a = 0; a < n; ++a) {
    bool nice = true;
    for (Nat b = 0; b < n && nice; ++b) nice = p[b] == a;
    if (nice) return ExtendedNat::finite(a);
  }
  return ExtendedNat::finite(n);
}

Verdict bounded_mu() {
  Signature sig = Signature::standard();
  const auto fam = constants_family("g");
  register_family(sig, fam);
  const auto s = sigma2_from_countable_family(fam, sig);
  generated().push_back(s.formula());
  Verdict v;
  auto h3 = constant_oracle(3);
  auto id = identity_oracle();
  for (Index k = 0; k <= 100; ++k) {
    const auto on_h3 = mu_from_sigma2(s, prefix_of(h3, k), sig);
    if (k >= 3 && on_h3 != ExtendedNat::finite(3)) v.fail("h3 at k=" + std::to_string(k) + ": " + on_h3.str());
    if (on_h3 != reference_constants_mu(prefix_of(h3, k))) v.fail("h3 disagrees with the reference at " + std::to_string(k));
    const auto on_id = mu_from_sigma2(s, prefix_of(id, k), sig);
    if (k >= 1 && on_id != ExtendedNat::finite(k + 1)) v.fail("identity at k=" + std::to_string(k) + ": " + on_id.str());
    if (on_id != reference_constants_mu(prefix_of(id, k))) v.fail("identity disagrees with the reference at " + std::to_string(k));
  }
  if (v.pass) v.detail = "h3 gives 3 for 3 <= k <= 100, identity gives k+1 for 1 <= k <= 100";
  return v;
}

// --- permanent exclusion ---------------------------------------------------

Verdict permanent_exclusion() {
  const Signature sig = Signature::standard();
  SyntaxGen gen(1005);
  Verdict v;
  int excluded = 0;
  for (int round = 0; round < 200; ++round) {
    const Sigma2Sentence s{"x", "y", gen.formula(2, {"x", "y"}, {"z"})};
    auto f = gen.oracle();
    std::vector<FinitePrefix> prefixes;
    for (Index k = 0; k <= 100; ++k) prefixes.push_back(prefix_of(f, k));
    for (Nat a = 0; a < 4; ++a) {
      std::optional<Index> since;
      for (Index k = 0; k <= 100; ++k) {
        const bool out = refutation(s, prefixes[k], a, sig).has_value();
        if (out && !since) {
          since = k;
          ++excluded;
        }
        if (since && !out) {
          v.fail("a=" + std::to_string(a) + " excluded at k=" + std::to_string(*since) + " but not at k=" +
                 std::to_string(k) + " for " + print(s.formula()));
          break;
        }
      }
    }
  }
  if (excluded < 100) v.fail("too few exclusions to be meaningful: " + std::to_string(excluded));
  if (v.pass) v.detail = "200 sentence/oracle pairs, " + std::to_string(excluded) + " exclusions held up to k=100";
  return v;
}

// --- adversaries -----------------------------------------------------------

bool alternates(const FlipTrace& t) {
  for (std::size_t i = 0; i < t.flips.size(); ++i) {
    if (t.guesses[i] != (i % 2 == 0 ? t.first_target : 1 - t.first_target)) return false;
    if (i > 0 && t.flips[i - 1] >= t.flips[i]) return false;
  }
  return true;
}

bool replays(const AdversaryRun& run, const Guesser& g) {
  for (std::size_t i = 0; i < run.trace.flips.size(); ++i)
    if (g(run.prefix.first(run.trace.flips[i] + 1)) != run.trace.guesses[i]) return false;
  return true;
}

Verdict diagonalizer() {
  Verdict v;
  const auto parity = parity_guesser();
  const auto run = diagonalize(parity, infinitely_many_zeros_extensions(), 10, 10000);
  if (!run.trace.completed() || run.trace.flips.size() < 10) v.fail("parity: " + run.trace.str());
  if (run.trace.first_target != 1 || !alternates(run.trace)) v.fail("parity flips do not alternate: " + run.trace.str());
  if (!replays(run, parity)) v.fail("parity run does not replay");
  if (run.prefix.size() > 10000) v.fail("parity run used more than 10^4 steps");
  const auto stuck = diagonalize(constant_guesser(1), infinitely_many_zeros_extensions(), 10, 10000);
  if (stuck.trace.completed() || stuck.trace.phase != 2) v.fail("constant-1: " + stuck.trace.str());
  if (v.pass) v.detail = "parity: " + run.trace.str() + "; constant-1: BudgetExhausted at phase 2";
  return v;
}

Verdict named_adversaries() {
  Verdict v;
  const auto seg = initial_segment_guesser();
  const auto perm = permutation_adversary(seg, 6, 1000);
  if (!perm.trace.completed() || perm.trace.flips.size() < 6 || !alternates(perm.trace) || !replays(perm, seg))
    v.fail("permutation: " + perm.trace.str());
  std::set<Nat> seen;
  for (Nat x : perm.prefix.entries())
    if (!seen.insert(x).second) v.fail("permutation prefix repeats " + std::to_string(x));

  const auto five = last_entry_guesser(5);
  const auto cantor = cantor_adversary(five, 10, 1000);
  if (!cantor.trace.completed() || cantor.trace.flips.size() < 10 || !alternates(cantor.trace) || !replays(cantor, five))
    v.fail("cantor: " + cantor.trace.str());
  for (Nat x : cantor.prefix.entries())
    if (x != 0 && x != 5) v.fail("cantor emitted " + std::to_string(x));
  if (v.pass)
    v.detail = "permutation " + to_string(perm.prefix) + " injective, cantor " + to_string(cantor.prefix) +
               " within {0,5}";
  return v;
}

// --- overguesser round trip ------------------------------------------------

// Least m in the window such that every m3 in the window with m3 > d2(m)
// either reaches past the prefix or has 0 < mu'(prefix up to m3) < d1(m).
ExtendedNat reference_mu_hat(const FinitePrefix& p) {
  const Nat n = p.size();
  std::vector<Nat> mu_prime(n);
  for (Nat m3 = 0; m3 < n; ++m3) mu_prime[m3] = reference_constants_mu(p.first(m3 + 1)).value() + 1;
  for (Nat m = 0; m < n; ++m) {
    const Nat a = PairingCodec::d1(m), b = PairingCodec::d2(m);
    bool nice = true;
    for (Nat m3 = b + 1; m3 < n && nice; ++m3) nice = 0 < mu_prime[m3] && mu_prime[m3] < a;
    if (nice) return ExtendedNat::finite(m);
  }
  return ExtendedNat::finite(n);
}

// Largest value on members for k = 20..150, frozen: const:c settles at the
// code of the pair (c + 2, 0).
const std::map<std::string, Nat> kMemberBound{{"const:0", 3}, {"const:3", 15}, {"const:6", 36}};

Verdict overguesser_round_trip() {
  Signature sig = Signature::standard();
  const auto fam = constants_family("g");
  register_family(sig, fam);
  const auto mu = overguesser_from_sigma2(sigma2_from_countable_family(fam, sig), sig);
  sig.add_seq_function("Mu", mu_prime_host(mu), "mu' of the constants family");
  const auto s = sigma2_from_overguesser("Mu", sig);
  generated().push_back(s.formula());
  Verdict v;

  constexpr Index horizon = 150;
  struct Labeled {
    std::string name;
    SequenceOracle oracle;
    bool member;
  };
  std::vector<Labeled> corpus{{"const:3", constant_oracle(3), true},     {"const:0", constant_oracle(0), true},
                              {"const:6", constant_oracle(6), true},     {"id", identity_oracle(), false},
                              {"cycle:[3,4]", cycle_oracle({3, 4}), false}, {"plantzero:4", plant_zero(4), false}};
  std::ostringstream summary;
  for (auto& [name, o, member] : corpus) {
    const auto full = prefix_of(o, horizon);
    Nat member_max = 0;
    Nat non_member_floor = ~Nat{0};
    for (Index k = 0; k <= horizon; ++k) {
      const auto p = full.first(k + 1);
      const auto value = mu_from_sigma2(s, p, sig);
      if (value != reference_mu_hat(p)) {
        v.fail(name + " disagrees with the reference at k=" + std::to_string(k));
        break;
      }
      if (k >= 20) member_max = std::max(member_max, value.value());
      if (k >= 100) non_member_floor = std::min(non_member_floor, value.value());
    }
    if (member && member_max > kMemberBound.at(name)) v.fail(name + " reached " + std::to_string(member_max));
    if (!member && non_member_floor <= 20) v.fail(name + " fell to " + std::to_string(non_member_floor) + " after k=100");
    summary << name << (member ? " max " + std::to_string(member_max) : " min " + std::to_string(non_member_floor))
            << "; ";
  }
  auto h3 = constant_oracle(3);
  if (mu_from_sigma2(s, prefix_of(h3, horizon), sig) != ExtendedNat::finite(15)) v.fail("const:3 does not settle at 15");
  if (v.pass) v.detail = summary.str() + "non-members above 20 from k=100";
  return v;
}

// --- topology --------------------------------------------------------------

Verdict topology() {
  TopologySpec is7, not7;
  is7.set_default({7});
  is7.set(0, 0, {7});
  not7.set_default({0});
  for (Nat m = 0; m <= 40; ++m)
    if (m != 7) not7.set(0, m, {m});
  Signature sig = Signature::standard();
  const auto spec = delta2_from_topology(is7, not7, sig);
  generated().push_back(spec.pi2.formula());
  generated().push_back(spec.sigma2.formula());
  generated().push_back(spec.pi2.complement().formula());
  const auto g = guesser_from_delta2(spec, sig);
  Verdict v;

  std::vector<std::pair<std::string, SequenceOracle>> corpus;
  for (Nat tail : {0, 1, 7, 40}) corpus.emplace_back("7 then " + std::to_string(tail), zero_pad({7, tail, tail}));
  corpus.emplace_back("const:7", constant_oracle(7));
  corpus.emplace_back("cycle:[7,0]", cycle_oracle({7, 0}));
  corpus.emplace_back("cycle:[7,3,9]", cycle_oracle({7, 3, 9}));
  corpus.emplace_back("7,id", SequenceOracle([](Index i) { return i == 0 ? 7 : i; }, "7,id"));
  corpus.emplace_back("7,plantzero", SequenceOracle([](Index i) { return i == 0 ? 7 : i == 5 ? 0 : 1; }, "7,pz"));
  corpus.emplace_back("7,2i", SequenceOracle([](Index i) { return i == 0 ? 7 : 2 * i; }, "7,2i"));
  for (Nat first : {0, 1, 3, 6, 8, 12, 20, 33, 39, 40})
    corpus.emplace_back("starts " + std::to_string(first), cycle_oracle({first, 7}));
  for (auto& [name, o] : corpus) {
    const bool member = o.query(0) == 7;
    const auto t = cli::guess_trace(g, o, 20);
    if (t.final_guess() != (member ? 1 : 0) || t.stable_from != std::size_t{1}) v.fail(name + " gave " + t.str());
  }
  if (v.pass) v.detail = "20 labeled sequences (10 members) correct with stable_from=1";
  return v;
}

// --- parser round trip -----------------------------------------------------

Verdict parser_round_trip() {
  const std::vector<std::string> written{
      "0 = 0",
      "f(1) = 0",
      "f(0) = 0 | f(0) = 3",
      "exists x. forall y. f(x) = 0",
      "forall x. exists y. f(y) = 0",
      "forall a. forall b. exists n. f(n) = b",
      "G[ f(z) : z .. y ] = 1",
      "sum[ f(x) : x .. 99 ] = 4950",
      "!(f(0) = 1 & f(1) = 2) -> f(2) = 3",
      "(f(0) = 1 -> f(1) = 2) -> f(2) = 3",
      "f(0) = 1 | f(1) = 2 & f(2) = 3",
      "(f(0) = 1 | f(1) = 2) & f(2) = 3",
      "!!(f(3) < 4)",
      "exists x. (f(x) = 0 & (forall y. (y < x -> !(f(y) = 0))))",
      "forall x. exists y. (y > x & Gpar[ f(z) : z .. y ] = 1)",
      "max[ add(f(z), z) : z .. f(f(0)) ] >= mul(2, 3)",
      "len[ 0 : z .. 5 ] = 6",
      "last[ sum[ f(w) : w .. z ] : z .. 4 ] <= 100",
      "d1(5) = 0 & d2(5) = 2",
      "monus(f(0), 1) = mod(f(1), 3)",
      "pick(z, 1, 2, 3) = 1",
      "exists m. forall m3. (m3 > d2(m) -> (0 < Mu[ f(z) : z .. m3 ] & Mu[ f(z) : z .. m3 ] < d1(m)))",
      "even(f(2))",
      "forall x. (even(x) | !even(x))",
  };
  std::vector<Formula> corpus;
  for (const auto& text : written) corpus.push_back(parse_formula(text));
  const Signature sig = Signature::standard();
  for (const char* g : {"Gz", "Gpar"}) {
    const auto spec = sentences_from_guesser(g, sig);
    corpus.push_back(spec.pi2.formula());
    corpus.push_back(spec.sigma2.formula());
  }
  corpus.insert(corpus.end(), generated().begin(), generated().end());

  Verdict v;
  for (const auto& f : corpus) {
    const std::string text = print(f);
    if (parse_formula(text) != f) v.fail("round trip changed " + text);
    if (print(parse_formula(text)) != text) v.fail("printing is not stable for " + text);
  }
  if (corpus.size() < 30) v.fail("corpus has only " + std::to_string(corpus.size()) + " sentences");
  if (v.pass)
    v.detail = std::to_string(corpus.size()) + " sentences, " + std::to_string(generated().size()) + " of them generated";
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"locality of quantifier-free sentences", locality},
      {"weak substitution", weak_substitution},
      {"contains-zero guesser from a Delta2 pair", delta2_guesser},
      {"bounded overguesser on the constants family", bounded_mu},
      {"permanent exclusion", permanent_exclusion},
      {"diagonalizer", diagonalizer},
      {"permutation and cantor adversaries", named_adversaries},
      {"overguesser to sentence and back", overguesser_round_trip},
      {"Delta2 pair from topology tables", topology},
      {"parser round trip", parser_round_trip},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.fail(std::string("exception: ") + e.what());
    }
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " [" << i + 1 << "] " << criteria[i].first << ": " << v.detail << " ("
              << ms << " ms)" << std::endl;
  }
  std::cout << (criteria.size() - failures) << "/" << criteria.size() << " criteria passed" << std::endl;
  return failures == 0 ? 0 : 1;
}
