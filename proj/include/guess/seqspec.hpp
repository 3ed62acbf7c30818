#pragma once

#include <string>
#include <string_view>

#include "guess/oracle.hpp"

namespace guess {

// Sequence spec strings:
//
//   spec   := "id" | "const:" NAT | "prefix:" list ":pad0" | "plantzero:" NAT | "cycle:" list
//   list   := "[" [ NAT { "," NAT } ] "]"
//
// No whitespace is allowed anywhere. `cycle` requires a nonempty list.
SequenceOracle parse_sequence_spec(std::string_view spec);

// Canonical spec text for a zero-padded prefix, e.g. "prefix:[3,0,2]:pad0".
std::string prefix_spec(const FinitePrefix& p);

}  // namespace guess
