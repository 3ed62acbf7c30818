#pragma once

#include <istream>
#include <map>
#include <span>
#include <utility>

#include "guess/oracle.hpp"

namespace guess {

// A finite description of a G-delta set: the intersection over rows i of the
// union over columns j of the basic open sets {f : f extends T(i,j)}.
//
// Rows at or past row_count() impose no constraint (their prefix is the empty
// one, i.e. the whole space). Every other unlisted (i, j) uses the default
// prefix.
class TopologySpec {
 public:
  void set(Nat i, Nat j, FinitePrefix p);
  void set_default(FinitePrefix p) { default_ = std::move(p); }

  bool empty() const { return entries_.empty(); }
  // One past the largest listed row / column.
  Nat row_count() const;
  Nat column_count() const;

  const FinitePrefix& lookup(Nat i, Nat j) const;
  Nat length(Nat i, Nat j) const { return lookup(i, j).size(); }
  // 1 iff tuple = (i, j, x_0, ..., x_k) with (x_0, ..., x_k) = T(i,j).
  Nat tau(std::span<const Nat> tuple) const;
  // Membership of a sequence, read through the first max-length entries.
  bool contains(SequenceOracle& o) const;

  // Lines `<i> <j> : <v>,<v>,...` and `default : <v>,...`; the value list may
  // be empty. `#` starts a comment. Throws ParseError.
  static TopologySpec parse(std::istream& in);

 private:
  std::map<std::pair<Nat, Nat>, FinitePrefix> entries_;
  FinitePrefix default_;
  FinitePrefix whole_space_;
};

}  // namespace guess
