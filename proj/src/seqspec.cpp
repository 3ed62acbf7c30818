#include "guess/seqspec.hpp"

#include <charconv>

#include "guess/error.hpp"

namespace guess {

namespace {

[[noreturn]] void bad_spec(std::string_view spec, const std::string& why) {
  throw ParseError("bad sequence spec '" + std::string(spec) + "': " + why, 1, 1);
}

Nat parse_nat(std::string_view spec, std::string_view text) {
  Nat value = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (text.empty() || ec != std::errc{} || ptr != text.data() + text.size())
    bad_spec(spec, "expected a natural number, got '" + std::string(text) + "'");
  return value;
}

FinitePrefix parse_list(std::string_view spec, std::string_view text) {
  if (text.size() < 2 || text.front() != '[' || text.back() != ']') bad_spec(spec, "expected [a,b,...]");
  text = text.substr(1, text.size() - 2);
  FinitePrefix out;
  if (text.empty()) return out;
  std::size_t start = 0;
  while (true) {
    auto comma = text.find(',', start);
    out.push_back(parse_nat(spec, text.substr(start, comma == std::string_view::npos ? text.npos : comma - start)));
    if (comma == std::string_view::npos) break;
    start = comma + 1;
  }
  return out;
}

bool starts_with(std::string_view s, std::string_view p) { return s.substr(0, p.size()) == p; }

}  // namespace

SequenceOracle parse_sequence_spec(std::string_view spec) {
  if (spec == "id") return identity_oracle();
  if (starts_with(spec, "const:")) return constant_oracle(parse_nat(spec, spec.substr(6)));
  if (starts_with(spec, "plantzero:")) return plant_zero(parse_nat(spec, spec.substr(10)));
  if (starts_with(spec, "cycle:")) {
    auto block = parse_list(spec, spec.substr(6));
    if (block.empty()) bad_spec(spec, "cycle block must be nonempty");
    return cycle_oracle(block);
  }
  if (starts_with(spec, "prefix:")) {
    constexpr std::string_view suffix = ":pad0";
    auto body = spec.substr(7);
    if (body.size() < suffix.size() || body.substr(body.size() - suffix.size()) != suffix)
      bad_spec(spec, "prefix spec must end in :pad0");
    return zero_pad(parse_list(spec, body.substr(0, body.size() - suffix.size())));
  }
  bad_spec(spec, "unknown kind");
}

std::string prefix_spec(const FinitePrefix& p) {
  std::string s = "prefix:[";
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(p[i]);
  }
  return s + "]:pad0";
}

}  // namespace guess
