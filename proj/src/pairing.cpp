#include "guess/pairing.hpp"

#include <cmath>

namespace guess {

Nat PairingCodec::encode(Nat a, Nat b) {
  const Nat s = a + b;
  return s * (s + 1) / 2 + b;
}

std::pair<Nat, Nat> PairingCodec::decode(Nat n) {
  // Largest s with s(s+1)/2 <= n.
  auto s = static_cast<Nat>((std::sqrt(8.0L * static_cast<long double>(n) + 1.0L) - 1.0L) / 2.0L);
  while (s * (s + 1) / 2 > n) --s;
  while ((s + 1) * (s + 2) / 2 <= n) ++s;
  const Nat b = n - s * (s + 1) / 2;
  return {s - b, b};
}

}  // namespace guess
