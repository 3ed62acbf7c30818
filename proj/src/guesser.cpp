#include "guess/guesser.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

namespace guess {

Guesser::Guesser(Fn fn, std::string provenance) : fn_(std::move(fn)), provenance_(std::move(provenance)) {
  if (!fn_) throw std::invalid_argument("Guesser: empty function");
}

int Guesser::operator()(const FinitePrefix& p) const {
  if (p.empty()) throw std::invalid_argument("guesser '" + provenance_ + "' evaluated on the empty prefix");
  const int g = fn_(p);
  if (g != 0 && g != 1) throw std::invalid_argument("guesser '" + provenance_ + "' returned a non-bit");
  return g;
}

Guesser contains_zero_guesser() {
  return Guesser(
      [](const FinitePrefix& p) {
        const auto& e = p.entries();
        return std::find(e.begin(), e.end(), Nat{0}) != e.end() ? 1 : 0;
      },
      "contains-zero");
}

Guesser parity_guesser() {
  return Guesser([](const FinitePrefix& p) { return p.size() % 2 == 0 ? 1 : 0; }, "parity");
}

Guesser constant_guesser(int bit) {
  if (bit != 0 && bit != 1) throw std::invalid_argument("constant_guesser: bit must be 0 or 1");
  return Guesser([bit](const FinitePrefix&) { return bit; }, "const-" + std::to_string(bit));
}

Guesser initial_segment_guesser() {
  return Guesser(
      [](const FinitePrefix& p) {
        std::vector<bool> seen(p.size(), false);
        for (Nat v : p.entries()) {
          if (v >= p.size() || seen[v]) return 0;
          seen[v] = true;
        }
        return 1;
      },
      "initial-segment");
}

Guesser last_entry_guesser(Nat value) {
  return Guesser([value](const FinitePrefix& p) { return p.back() == value ? 1 : 0; },
                 "last-is-" + std::to_string(value));
}

Guesser guesser_not(const Guesser& g) {
  return Guesser([g](const FinitePrefix& p) { return 1 - g(p); }, "not(" + g.provenance() + ")");
}

Guesser guesser_and(const Guesser& a, const Guesser& b) {
  return Guesser([a, b](const FinitePrefix& p) { return std::min(a(p), b(p)); },
                 "and(" + a.provenance() + "," + b.provenance() + ")");
}

Guesser guesser_or(const Guesser& a, const Guesser& b) {
  return Guesser([a, b](const FinitePrefix& p) { return std::max(a(p), b(p)); },
                 "or(" + a.provenance() + "," + b.provenance() + ")");
}

SeqHost guesser_host(Guesser g) {
  return [g = std::move(g)](std::span<const Nat> t) -> Nat {
    if (t.empty()) return 0;
    return static_cast<Nat>(g(FinitePrefix(std::vector<Nat>(t.begin(), t.end()))));
  };
}

SeqHost mu_prime_host(Overguesser mu) {
  return [mu = std::move(mu)](std::span<const Nat> t) -> Nat {
    const auto m = mu(FinitePrefix(std::vector<Nat>(t.begin(), t.end())));
    return m.is_finite() ? m.value() + 1 : 0;
  };
}

}  // namespace guess
