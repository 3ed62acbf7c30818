#include "guess/oracle.hpp"

#include <algorithm>
#include <memory>
#include <sstream>
#include <stdexcept>

namespace guess {

FinitePrefix FinitePrefix::first(std::size_t n) const {
  n = std::min(n, entries_.size());
  return FinitePrefix(std::vector<Nat>(entries_.begin(), entries_.begin() + static_cast<std::ptrdiff_t>(n)));
}

std::string to_string(const FinitePrefix& p) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) os << ',';
    os << p[i];
  }
  os << ')';
  return os.str();
}

void QueryLog::record(Index i) { queried_.insert(i); }

std::optional<Index> QueryLog::max_queried() const {
  if (queried_.empty()) return std::nullopt;
  return *queried_.rbegin();
}

void QueryLog::merge(const QueryLog& other) { queried_.insert(other.queried_.begin(), other.queried_.end()); }

SequenceOracle::SequenceOracle(Rule rule, std::string description)
    : rule_(std::move(rule)), description_(std::move(description)) {
  if (!rule_) throw std::invalid_argument("SequenceOracle: empty rule");
}

Nat SequenceOracle::lookup(Index i) {
  auto it = memo_.find(i);
  if (it != memo_.end()) return it->second;
  return memo_.emplace(i, rule_(i)).first->second;
}

Nat SequenceOracle::query(Index i) { return query(i, log_); }

Nat SequenceOracle::query(Index i, QueryLog& log) {
  log.record(i);
  return lookup(i);
}

SequenceOracle identity_oracle() {
  return SequenceOracle([](Index i) { return Nat{i}; }, "id");
}

SequenceOracle constant_oracle(Nat value) {
  return SequenceOracle([value](Index) { return value; }, "const:" + std::to_string(value));
}

namespace {

std::string list_text(const FinitePrefix& p) {
  std::string s = "[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]";
}

}  // namespace

SequenceOracle zero_pad(const FinitePrefix& p) {
  auto values = std::make_shared<const std::vector<Nat>>(p.entries());
  return SequenceOracle(
      [values](Index i) { return i < values->size() ? (*values)[i] : Nat{0}; },
      "prefix:" + list_text(p) + ":pad0");
}

SequenceOracle plant_zero(Index position) {
  return SequenceOracle([position](Index i) { return i == position ? Nat{0} : Nat{1}; },
                        "plantzero:" + std::to_string(position));
}

SequenceOracle cycle_oracle(const FinitePrefix& block) {
  if (block.empty()) throw std::invalid_argument("cycle: empty block");
  auto values = std::make_shared<const std::vector<Nat>>(block.entries());
  return SequenceOracle([values](Index i) { return (*values)[i % values->size()]; }, "cycle:" + list_text(block));
}

FinitePrefix prefix_of(SequenceOracle& o, Index k) {
  std::vector<Nat> out;
  out.reserve(k + 1);
  for (Index i = 0; i <= k; ++i) out.push_back(o.query(i));
  return FinitePrefix(std::move(out));
}

bool agrees_through(SequenceOracle& a, SequenceOracle& b, Index k) {
  for (Index i = 0; i <= k; ++i)
    if (a.query(i) != b.query(i)) return false;
  return true;
}

}  // namespace guess
