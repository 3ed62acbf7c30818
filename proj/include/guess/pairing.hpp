#pragma once

#include <utility>

#include "guess/oracle.hpp"

namespace guess {

// The diagonal (Cantor) enumeration of N x N:
//   0 -> (0,0), 1 -> (1,0), 2 -> (0,1), 3 -> (2,0), 4 -> (1,1), 5 -> (0,2), ...
// Within diagonal s = a + b the first component counts down.
struct PairingCodec {
  static Nat encode(Nat a, Nat b);
  static std::pair<Nat, Nat> decode(Nat n);
  static Nat d1(Nat n) { return decode(n).first; }
  static Nat d2(Nat n) { return decode(n).second; }
  static constexpr const char* name = "cantor-diagonal";
};

}  // namespace guess
