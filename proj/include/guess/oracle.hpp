#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace guess {

using Nat = std::uint64_t;
using Index = std::uint64_t;

// A finite sequence (f(0), ..., f(k)); may be empty.
class FinitePrefix {
 public:
  FinitePrefix() = default;
  FinitePrefix(std::initializer_list<Nat> entries) : entries_(entries) {}
  explicit FinitePrefix(std::vector<Nat> entries) : entries_(std::move(entries)) {}

  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  Nat operator[](std::size_t i) const { return entries_[i]; }
  Nat at(std::size_t i) const { return entries_.at(i); }
  Nat back() const { return entries_.back(); }
  std::span<const Nat> values() const { return entries_; }
  const std::vector<Nat>& entries() const { return entries_; }

  void push_back(Nat n) { entries_.push_back(n); }
  FinitePrefix first(std::size_t n) const;

  friend bool operator==(const FinitePrefix&, const FinitePrefix&) = default;

 private:
  std::vector<Nat> entries_;
};

// "(3,0,2)"; the empty prefix prints as "()".
std::string to_string(const FinitePrefix& p);

class QueryLog {
 public:
  void record(Index i);
  bool contains(Index i) const { return queried_.count(i) != 0; }
  bool empty() const { return queried_.empty(); }
  std::size_t size() const { return queried_.size(); }
  std::optional<Index> max_queried() const;
  const std::set<Index>& queried() const { return queried_; }
  void merge(const QueryLog& other);

  friend bool operator==(const QueryLog&, const QueryLog&) = default;

 private:
  std::set<Index> queried_;
};

// A total function N -> N. The first answer for an index is memoized and wins
// over any later answer from the rule, so lookups are deterministic even when
// the rule is not.
class SequenceOracle {
 public:
  using Rule = std::function<Nat(Index)>;

  SequenceOracle(Rule rule, std::string description);

  // Memoized value, recorded in the oracle's own session log.
  Nat query(Index i);
  // Memoized value, recorded in a caller-owned log instead.
  Nat query(Index i, QueryLog& log);

  const QueryLog& log() const { return log_; }
  // Start a new evaluation session; memoized values are kept.
  void reset_log() { log_ = QueryLog{}; }

  const std::string& description() const { return description_; }

 private:
  Nat lookup(Index i);

  Rule rule_;
  std::map<Index, Nat> memo_;
  QueryLog log_;
  std::string description_;
};

SequenceOracle identity_oracle();
SequenceOracle constant_oracle(Nat value);
SequenceOracle zero_pad(const FinitePrefix& p);
// 1 everywhere except a 0 at index `position`.
SequenceOracle plant_zero(Index position);
// Periodic repetition of a nonempty block.
SequenceOracle cycle_oracle(const FinitePrefix& block);

// (o(0), ..., o(k)), read through the oracle's session log.
FinitePrefix prefix_of(SequenceOracle& o, Index k);

bool agrees_through(SequenceOracle& a, SequenceOracle& b, Index k);

}  // namespace guess
