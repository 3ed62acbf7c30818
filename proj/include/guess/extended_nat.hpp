#pragma once

#include <compare>
#include <optional>
#include <ostream>
#include <string>

#include "guess/oracle.hpp"

namespace guess {

// N together with a top element.
class ExtendedNat {
 public:
  static ExtendedNat finite(Nat n) { return ExtendedNat(n); }
  static ExtendedNat infinity() { return ExtendedNat(); }

  bool is_finite() const { return value_.has_value(); }
  bool is_infinite() const { return !value_; }
  // Precondition: is_finite().
  Nat value() const { return *value_; }

  friend bool operator==(const ExtendedNat&, const ExtendedNat&) = default;
  friend std::strong_ordering operator<=>(const ExtendedNat& a, const ExtendedNat& b) {
    if (a.is_infinite() && b.is_infinite()) return std::strong_ordering::equal;
    if (a.is_infinite()) return std::strong_ordering::greater;
    if (b.is_infinite()) return std::strong_ordering::less;
    return *a.value_ <=> *b.value_;
  }

  std::string str() const { return value_ ? std::to_string(*value_) : "inf"; }
  friend std::ostream& operator<<(std::ostream& os, const ExtendedNat& e) { return os << e.str(); }

 private:
  ExtendedNat() = default;
  explicit ExtendedNat(Nat n) : value_(n) {}
  std::optional<Nat> value_;
};

}  // namespace guess
