#pragma once

#include <functional>
#include <optional>
#include <string>

#include "guess/ast.hpp"
#include "guess/extended_nat.hpp"
#include "guess/guesser.hpp"
#include "guess/oracle.hpp"
#include "guess/pairing.hpp"
#include "guess/signature.hpp"
#include "guess/topology.hpp"

namespace guess {

// Search window of the bounded overguesser. For a prefix of length n the
// candidates a = 0 .. max(n, min_candidates) - 1 are tested against the
// challenges b = 0 .. max(n, min_challenge); when every candidate is refuted
// the first untested candidate is returned.
struct MuSearch {
  Nat min_candidates = 0;
  Nat min_challenge = 0;
};

// A Pi2 and a Sigma2 sentence taken to define the same set.
struct Delta2Spec {
  Pi2Sentence pi2;
  Sigma2Sentence sigma2;
  // Windows for the overguessers of the set (from sigma2) and of its
  // complement (from the negated pi2 matrix).
  MuSearch sigma2_search{};
  MuSearch complement_search{};
};

// Least challenge b in the window for which the attempt of matrix(a, b)
// succeeds with "false", i.e. the witness that candidate a is not very nice.
std::optional<Nat> refutation(const Sigma2Sentence& s, const FinitePrefix& p, Nat a, const Signature& sig,
                              const MuSearch& search = {});

// Bounded overguesser of the set defined by `s`: the least very nice
// candidate, where (a, b) is nice when its attempt fails or succeeds with
// "true". Requires a nonempty prefix.
ExtendedNat mu_from_sigma2(const Sigma2Sentence& s, const FinitePrefix& p, const Signature& sig,
                           const MuSearch& search = {});

Overguesser overguesser_from_sigma2(const Sigma2Sentence& s, const Signature& sig, const MuSearch& search = {});

// 1 iff mu(p) <= nu(p), where mu overguesses the set and nu its complement.
// The signature is copied into the guesser.
Guesser guesser_from_delta2(const Delta2Spec& spec, const Signature& sig);

// exists x. forall y. (y > x -> G[ f(z) : z .. y ] = 1)
// forall x. exists y. (y > x & G[ f(z) : z .. y ] = 1)
Delta2Spec sentences_from_guesser(const std::string& guesser_symbol, const Signature& sig);

// exists m. forall m3. (m3 > d2(m) -> (0 < Mu[ f(z) : z .. m3 ] & Mu[ f(z) : z .. m3 ] < d1(m)))
// with d1, d2 the projections of PairingCodec. `mu_symbol` must be bound to
// a mu' host (see mu_prime_host).
Sigma2Sentence sigma2_from_overguesser(const std::string& mu_symbol, const Signature& sig);

// g(m, n) = h_m(n), the m-th sequence of a countable set.
struct CountableFamily {
  std::string symbol;
  std::function<Nat(Nat, Nat)> g;
  std::string description;
};

CountableFamily constants_family(std::string symbol = "g");
void register_family(Signature& sig, const CountableFamily& fam);

// exists x. forall y. g(x, y) = f(y)
Sigma2Sentence sigma2_from_countable_family(const CountableFamily& fam, const Signature& sig);

// Registers tau and length symbols for both tables (TauS, LenS, TauC, LenC)
// and returns
//   pi2    = forall i. exists j. TauS[ pick(z, i, j, f(monus(z, 2))) : z .. LenS(i, j) ] = 1
//   sigma2 = exists i. forall j. !(TauC[ ... : z .. LenC(i, j) ] = 1)
// where LenX(i, j) is the length of T(i, j) plus one, so that the tuple is
// (i, j, f(0), ..., f(len - 1)). Search windows cover each table.
Delta2Spec delta2_from_topology(const TopologySpec& for_set, const TopologySpec& for_complement, Signature& sig);

}  // namespace guess
