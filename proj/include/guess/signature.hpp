#pragma once

#include <functional>
#include <istream>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "guess/ast.hpp"
#include "guess/oracle.hpp"

namespace guess {

using FixedHost = std::function<Nat(std::span<const Nat>)>;
using PredHost = std::function<bool(std::span<const Nat>)>;
// Host of a symbol without fixed arity: a function on all finite tuples.
using SeqHost = std::function<Nat(std::span<const Nat>)>;

struct FixedSymbol {
  std::size_t arity = 0;
  FixedHost host;
  std::string origin;
};

struct PredSymbol {
  std::size_t arity = 0;
  PredHost host;
  std::string origin;
};

struct SeqSymbol {
  SeqHost host;
  std::string origin;
};

// A finite fragment of the full language: only the symbols a session needs.
// Names are unique across kinds and `f` is reserved for the sequence.
class Signature {
 public:
  void add_function(const std::string& name, std::size_t arity, FixedHost host, std::string origin = {});
  void add_predicate(const std::string& name, std::size_t arity, PredHost host, std::string origin = {});
  void add_seq_function(const std::string& name, SeqHost host, std::string origin = {});

  const FixedSymbol* function(const std::string& name) const;
  const PredSymbol* predicate(const std::string& name) const;
  const SeqSymbol* seq_function(const std::string& name) const;
  bool declares(const std::string& name) const;

  // Throws SignatureError on unknown symbols or arity mismatches.
  void check(const Term& t) const;
  void check(const Formula& f) const;

  // add, mul, monus, mod, d1, d2, pick; < > <= >=; sum, max, len, last,
  // and the builtin guessers Gz (contains a zero) and Gpar (even length).
  static Signature standard();

 private:
  void reserve_name(const std::string& name);

  std::map<std::string, FixedSymbol> functions_;
  std::map<std::string, PredSymbol> predicates_;
  std::map<std::string, SeqSymbol> seq_functions_;
};

// Named host implementations that signature files bind to.
class HostRegistry {
 public:
  struct FixedEntry {
    std::optional<std::size_t> arity;  // nullopt: any arity
    FixedHost host;
  };
  struct PredEntry {
    std::optional<std::size_t> arity;
    PredHost host;
  };

  void add_function(const std::string& key, std::optional<std::size_t> arity, FixedHost host);
  void add_predicate(const std::string& key, std::optional<std::size_t> arity, PredHost host);
  void add_seq_function(const std::string& key, SeqHost host);

  const FixedEntry* function(const std::string& key) const;
  const PredEntry* predicate(const std::string& key) const;
  const SeqHost* seq_function(const std::string& key) const;

  static HostRegistry builtin();

 private:
  std::map<std::string, FixedEntry> functions_;
  std::map<std::string, PredEntry> predicates_;
  std::map<std::string, SeqHost> seq_functions_;
};

// Reads lines `fn <name> <arity> <key>`, `pred <name> <arity> <key>` and
// `seqfn <name> <key>` into `sig`; `#` starts a comment.
void load_signature(std::istream& in, const HostRegistry& registry, Signature& sig);

}  // namespace guess
