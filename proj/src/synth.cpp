#include "guess/synth.hpp"

#include <memory>

#include "guess/error.hpp"
#include "guess/semantics.hpp"
#include "guess/syntax.hpp"

namespace guess {

namespace {

struct Window {
  Nat candidates;  // a in [0, candidates)
  Nat challenge;   // b in [0, challenge]
};

Window window(const FinitePrefix& p, const MuSearch& search) {
  const Nat n = p.size();
  return {std::max(n, search.min_candidates), std::max(n, search.min_challenge)};
}

std::optional<Nat> refute(const Formula& matrix_at_a, const std::string& inner, SequenceOracle& padded,
                          std::size_t available, Nat challenge, const Signature& sig) {
  for (Nat b = 0; b <= challenge; ++b) {
    const auto outcome = attempt(substitute(matrix_at_a, inner, num(b)), padded, available, sig);
    if (outcome.is_false()) return b;
  }
  return std::nullopt;
}

void require_nonempty(const FinitePrefix& p) {
  if (p.empty()) throw std::invalid_argument("overguesser evaluated on the empty prefix");
}

void require_seq_symbol(const Signature& sig, const std::string& name) {
  if (!sig.seq_function(name)) throw SignatureError("'" + name + "' is not a declared sequence-ary symbol");
}

void require_symbols(const Signature& sig, std::initializer_list<const char*> preds,
                     std::initializer_list<const char*> fns) {
  for (const char* p : preds)
    if (!sig.predicate(p)) throw SignatureError(std::string("signature lacks predicate '") + p + "'");
  for (const char* f : fns)
    if (!sig.function(f)) throw SignatureError(std::string("signature lacks function '") + f + "'");
}

// G[ f(z) : z .. bound ]
Term applied_to_prefix(const std::string& symbol, Term bound) { return ellipsis(symbol, seq(var("z")), "z", std::move(bound)); }

}  // namespace

std::optional<Nat> refutation(const Sigma2Sentence& s, const FinitePrefix& p, Nat a, const Signature& sig,
                              const MuSearch& search) {
  auto padded = zero_pad(p);
  return refute(substitute(s.matrix, s.outer, num(a)), s.inner, padded, p.size(), window(p, search).challenge, sig);
}

ExtendedNat mu_from_sigma2(const Sigma2Sentence& s, const FinitePrefix& p, const Signature& sig,
                           const MuSearch& search) {
  require_nonempty(p);
  const auto w = window(p, search);
  auto padded = zero_pad(p);
  for (Nat a = 0; a < w.candidates; ++a) {
    if (!refute(substitute(s.matrix, s.outer, num(a)), s.inner, padded, p.size(), w.challenge, sig))
      return ExtendedNat::finite(a);
  }
  return ExtendedNat::finite(w.candidates);
}

Overguesser overguesser_from_sigma2(const Sigma2Sentence& s, const Signature& sig, const MuSearch& search) {
  return Overguesser([s, sig, search](const FinitePrefix& p) { return mu_from_sigma2(s, p, sig, search); },
                     "mu from " + print(s.formula()));
}

Guesser guesser_from_delta2(const Delta2Spec& spec, const Signature& sig) {
  sig.check(spec.sigma2.formula());
  sig.check(spec.pi2.formula());
  auto mu = overguesser_from_sigma2(spec.sigma2, sig, spec.sigma2_search);
  auto nu = overguesser_from_sigma2(spec.pi2.complement(), sig, spec.complement_search);
  return Guesser([mu, nu](const FinitePrefix& p) { return mu(p) <= nu(p) ? 1 : 0; },
                 "delta2 guesser for " + print(spec.sigma2.formula()));
}

Delta2Spec sentences_from_guesser(const std::string& guesser_symbol, const Signature& sig) {
  require_seq_symbol(sig, guesser_symbol);
  require_symbols(sig, {">"}, {});
  auto after = [] { return pred(">", {var("y"), var("x")}); };
  auto guesses_one = [&] { return eq(applied_to_prefix(guesser_symbol, var("y")), num(1)); };
  return Delta2Spec{
      Pi2Sentence{"x", "y", conj(after(), guesses_one())},
      Sigma2Sentence{"x", "y", implies(after(), guesses_one())},
  };
}

Sigma2Sentence sigma2_from_overguesser(const std::string& mu_symbol, const Signature& sig) {
  require_seq_symbol(sig, mu_symbol);
  require_symbols(sig, {">", "<"}, {"d1", "d2"});
  auto mu_at = [&] { return applied_to_prefix(mu_symbol, var("m3")); };
  auto matrix = implies(pred(">", {var("m3"), app("d2", {var("m")})}),
                        conj(pred("<", {num(0), mu_at()}), pred("<", {mu_at(), app("d1", {var("m")})})));
  return Sigma2Sentence{"m", "m3", std::move(matrix)};
}

CountableFamily constants_family(std::string symbol) {
  return CountableFamily{std::move(symbol), [](Nat m, Nat) { return m; }, "constant sequences h_m(n) = m"};
}

void register_family(Signature& sig, const CountableFamily& fam) {
  auto g = fam.g;
  sig.add_function(fam.symbol, 2, [g](std::span<const Nat> a) { return g(a[0], a[1]); }, fam.description);
}

Sigma2Sentence sigma2_from_countable_family(const CountableFamily& fam, const Signature& sig) {
  const auto* sym = sig.function(fam.symbol);
  if (!sym || sym->arity != 2) throw SignatureError("family symbol '" + fam.symbol + "' must be a binary function");
  return Sigma2Sentence{"x", "y", eq(app(fam.symbol, {var("x"), var("y")}), seq(var("y")))};
}

namespace {

// TauX[ pick(z, i, j, f(monus(z, 2))) : z .. LenX(i, j) ] = 1
Formula extends_entry(const std::string& tau, const std::string& len) {
  auto entry = app("pick", {var("z"), var("i"), var("j"), seq(app("monus", {var("z"), num(2)}))});
  return eq(ellipsis(tau, std::move(entry), "z", app(len, {var("i"), var("j")})), num(1));
}

void register_table(Signature& sig, const TopologySpec& table, const std::string& tau, const std::string& len) {
  auto shared = std::make_shared<const TopologySpec>(table);
  sig.add_seq_function(tau, [shared](std::span<const Nat> t) { return shared->tau(t); }, "topology tau");
  sig.add_function(len, 2, [shared](std::span<const Nat> a) { return shared->length(a[0], a[1]) + 1; },
                   "topology length + 1");
}

}  // namespace

Delta2Spec delta2_from_topology(const TopologySpec& for_set, const TopologySpec& for_complement, Signature& sig) {
  if (for_set.empty()) throw std::invalid_argument("topology table for the set is empty");
  if (for_complement.empty()) throw std::invalid_argument("topology table for the complement is empty");
  require_symbols(sig, {}, {"pick", "monus"});
  register_table(sig, for_set, "TauS", "LenS");
  register_table(sig, for_complement, "TauC", "LenC");
  // Rows past row_count() all behave alike, as do columns past column_count().
  return Delta2Spec{
      Pi2Sentence{"i", "j", extends_entry("TauS", "LenS")},
      Sigma2Sentence{"i", "j", negate(extends_entry("TauC", "LenC"))},
      MuSearch{for_complement.row_count() + 1, for_complement.column_count()},
      MuSearch{for_set.row_count() + 1, for_set.column_count()},
  };
}

}  // namespace guess
