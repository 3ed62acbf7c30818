#pragma once

#include <functional>
#include <string>

#include "guess/extended_nat.hpp"
#include "guess/oracle.hpp"
#include "guess/signature.hpp"

namespace guess {

// A map from nonempty finite prefixes to {0,1}.
class Guesser {
 public:
  using Fn = std::function<int(const FinitePrefix&)>;

  Guesser(Fn fn, std::string provenance);

  // Throws std::invalid_argument on the empty prefix or a non-bit result.
  int operator()(const FinitePrefix& p) const;
  const std::string& provenance() const { return provenance_; }

 private:
  Fn fn_;
  std::string provenance_;
};

// A map from finite prefixes to N u {inf}.
class Overguesser {
 public:
  using Fn = std::function<ExtendedNat(const FinitePrefix&)>;

  Overguesser(Fn fn, std::string provenance) : fn_(std::move(fn)), provenance_(std::move(provenance)) {}

  ExtendedNat operator()(const FinitePrefix& p) const { return fn_(p); }
  const std::string& provenance() const { return provenance_; }

 private:
  Fn fn_;
  std::string provenance_;
};

// "Guess no until a 0 appears, then yes forever."
Guesser contains_zero_guesser();
// 1 iff the prefix has even length; alternates on every new entry.
Guesser parity_guesser();
Guesser constant_guesser(int bit);
// 1 iff the prefix values are exactly {0, ..., len-1}.
Guesser initial_segment_guesser();
Guesser last_entry_guesser(Nat value);

Guesser guesser_not(const Guesser& g);
Guesser guesser_and(const Guesser& a, const Guesser& b);
Guesser guesser_or(const Guesser& a, const Guesser& b);

// Host for registering a guesser as a sequence-ary symbol; the empty tuple maps to 0.
SeqHost guesser_host(Guesser g);

// mu'(p) = mu(p) + 1 when finite, 0 when infinite.
SeqHost mu_prime_host(Overguesser mu);

}  // namespace guess
