#include "guess/signature.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "guess/error.hpp"
#include "guess/pairing.hpp"

namespace guess {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

bool is_identifier(const std::string& s) {
  if (s.empty() || !(std::isalpha(static_cast<unsigned char>(s[0])) || s[0] == '_')) return false;
  return std::all_of(s.begin(), s.end(), [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; });
}

bool is_relation(const std::string& s) { return s == "<" || s == ">" || s == "<=" || s == ">="; }

}  // namespace

void Signature::reserve_name(const std::string& name) {
  if (name == kSequenceSymbol) throw SignatureError("'f' is reserved for the sequence symbol");
  if (name == "forall" || name == "exists") throw SignatureError("'" + name + "' is a keyword");
  if (declares(name)) throw SignatureError("symbol '" + name + "' is already declared");
}

void Signature::add_function(const std::string& name, std::size_t arity, FixedHost host, std::string origin) {
  if (!is_identifier(name)) throw SignatureError("bad function name '" + name + "'");
  if (arity == 0) throw SignatureError("function '" + name + "' needs arity > 0; use a numeral for constants");
  reserve_name(name);
  functions_.emplace(name, FixedSymbol{arity, std::move(host), std::move(origin)});
}

void Signature::add_predicate(const std::string& name, std::size_t arity, PredHost host, std::string origin) {
  if (!is_identifier(name) && !(is_relation(name) && arity == 2))
    throw SignatureError("bad predicate name '" + name + "'");
  if (arity == 0) throw SignatureError("predicate '" + name + "' needs arity > 0");
  reserve_name(name);
  predicates_.emplace(name, PredSymbol{arity, std::move(host), std::move(origin)});
}

void Signature::add_seq_function(const std::string& name, SeqHost host, std::string origin) {
  if (!is_identifier(name)) throw SignatureError("bad function name '" + name + "'");
  reserve_name(name);
  seq_functions_.emplace(name, SeqSymbol{std::move(host), std::move(origin)});
}

const FixedSymbol* Signature::function(const std::string& name) const {
  auto it = functions_.find(name);
  return it == functions_.end() ? nullptr : &it->second;
}

const PredSymbol* Signature::predicate(const std::string& name) const {
  auto it = predicates_.find(name);
  return it == predicates_.end() ? nullptr : &it->second;
}

const SeqSymbol* Signature::seq_function(const std::string& name) const {
  auto it = seq_functions_.find(name);
  return it == seq_functions_.end() ? nullptr : &it->second;
}

bool Signature::declares(const std::string& name) const {
  return functions_.count(name) || predicates_.count(name) || seq_functions_.count(name);
}

void Signature::check(const Term& t) const {
  std::visit(overloaded{
                 [](const Variable&) {},
                 [](const Numeral&) {},
                 [&](const FixedApp& a) {
                   const auto* sym = function(a.symbol);
                   if (!sym) throw SignatureError("unknown function symbol '" + a.symbol + "'");
                   if (sym->arity != a.args.size())
                     throw SignatureError("arity mismatch for '" + a.symbol + "': expected " +
                                          std::to_string(sym->arity) + ", got " + std::to_string(a.args.size()));
                   for (const auto& arg : a.args) check(arg);
                 },
                 [&](const SeqApp& s) { check(*s.arg); },
                 [&](const EllipsisApp& e) {
                   if (!seq_function(e.symbol))
                     throw SignatureError("'" + e.symbol + "' is not a declared sequence-ary symbol");
                   check(*e.body);
                   check(*e.bound);
                 },
             },
             t.node);
}

void Signature::check(const Formula& f) const {
  std::visit(overloaded{
                 [&](const Eq& e) {
                   check(e.lhs);
                   check(e.rhs);
                 },
                 [&](const Pred& p) {
                   const auto* sym = predicate(p.symbol);
                   if (!sym) throw SignatureError("unknown predicate symbol '" + p.symbol + "'");
                   if (sym->arity != p.args.size())
                     throw SignatureError("arity mismatch for '" + p.symbol + "': expected " +
                                          std::to_string(sym->arity) + ", got " + std::to_string(p.args.size()));
                   for (const auto& arg : p.args) check(arg);
                 },
                 [&](const Not& n) { check(*n.operand); },
                 [&](const Binary& b) {
                   check(*b.lhs);
                   check(*b.rhs);
                 },
                 [&](const Quantified& q) { check(*q.body); },
             },
             f.node);
}

void HostRegistry::add_function(const std::string& key, std::optional<std::size_t> arity, FixedHost host) {
  functions_[key] = FixedEntry{arity, std::move(host)};
}

void HostRegistry::add_predicate(const std::string& key, std::optional<std::size_t> arity, PredHost host) {
  predicates_[key] = PredEntry{arity, std::move(host)};
}

void HostRegistry::add_seq_function(const std::string& key, SeqHost host) { seq_functions_[key] = std::move(host); }

const HostRegistry::FixedEntry* HostRegistry::function(const std::string& key) const {
  auto it = functions_.find(key);
  return it == functions_.end() ? nullptr : &it->second;
}

const HostRegistry::PredEntry* HostRegistry::predicate(const std::string& key) const {
  auto it = predicates_.find(key);
  return it == predicates_.end() ? nullptr : &it->second;
}

const SeqHost* HostRegistry::seq_function(const std::string& key) const {
  auto it = seq_functions_.find(key);
  return it == seq_functions_.end() ? nullptr : &it->second;
}

namespace hosts {

Nat add(std::span<const Nat> a) { return a[0] + a[1]; }
Nat mul(std::span<const Nat> a) { return a[0] * a[1]; }
Nat monus(std::span<const Nat> a) { return a[0] > a[1] ? a[0] - a[1] : 0; }
Nat mod(std::span<const Nat> a) { return a[1] == 0 ? a[0] : a[0] % a[1]; }
Nat d1(std::span<const Nat> a) { return PairingCodec::d1(a[0]); }
Nat d2(std::span<const Nat> a) { return PairingCodec::d2(a[0]); }
// pick(z, a, b, c) = a if z = 0, b if z = 1, c otherwise
Nat pick(std::span<const Nat> a) { return a[0] == 0 ? a[1] : a[0] == 1 ? a[2] : a[3]; }
// g(m, n) = m: the family of constant sequences
Nat constfam(std::span<const Nat> a) { return a[0]; }

Nat sum(std::span<const Nat> t) {
  Nat s = 0;
  for (Nat v : t) s += v;
  return s;
}
Nat max(std::span<const Nat> t) { return t.empty() ? 0 : *std::max_element(t.begin(), t.end()); }
Nat len(std::span<const Nat> t) { return t.size(); }
Nat last(std::span<const Nat> t) { return t.empty() ? 0 : t.back(); }
Nat contains_zero(std::span<const Nat> t) { return std::find(t.begin(), t.end(), Nat{0}) != t.end() ? 1 : 0; }
Nat even_length(std::span<const Nat> t) { return t.size() % 2 == 0 ? 1 : 0; }

}  // namespace hosts

HostRegistry HostRegistry::builtin() {
  HostRegistry r;
  r.add_function("add", 2, hosts::add);
  r.add_function("+", 2, hosts::add);
  r.add_function("mul", 2, hosts::mul);
  r.add_function("*", 2, hosts::mul);
  r.add_function("monus", 2, hosts::monus);
  r.add_function("mod", 2, hosts::mod);
  r.add_function("d1", 1, hosts::d1);
  r.add_function("d2", 1, hosts::d2);
  r.add_function("pick", 4, hosts::pick);
  r.add_function("constfam", 2, hosts::constfam);
  r.add_predicate("<", 2, [](std::span<const Nat> a) { return a[0] < a[1]; });
  r.add_predicate(">", 2, [](std::span<const Nat> a) { return a[0] > a[1]; });
  r.add_predicate("<=", 2, [](std::span<const Nat> a) { return a[0] <= a[1]; });
  r.add_predicate(">=", 2, [](std::span<const Nat> a) { return a[0] >= a[1]; });
  r.add_predicate("lt", 2, [](std::span<const Nat> a) { return a[0] < a[1]; });
  r.add_predicate("gt", 2, [](std::span<const Nat> a) { return a[0] > a[1]; });
  r.add_predicate("le", 2, [](std::span<const Nat> a) { return a[0] <= a[1]; });
  r.add_predicate("ge", 2, [](std::span<const Nat> a) { return a[0] >= a[1]; });
  r.add_predicate("even", 1, [](std::span<const Nat> a) { return a[0] % 2 == 0; });
  r.add_seq_function("sum", hosts::sum);
  r.add_seq_function("max", hosts::max);
  r.add_seq_function("len", hosts::len);
  r.add_seq_function("last", hosts::last);
  r.add_seq_function("contains_zero", hosts::contains_zero);
  r.add_seq_function("parity", hosts::even_length);
  return r;
}

Signature Signature::standard() {
  Signature s;
  s.add_function("add", 2, hosts::add, "builtin");
  s.add_function("mul", 2, hosts::mul, "builtin");
  s.add_function("monus", 2, hosts::monus, "builtin");
  s.add_function("mod", 2, hosts::mod, "builtin");
  s.add_function("d1", 1, hosts::d1, std::string("builtin ") + PairingCodec::name);
  s.add_function("d2", 1, hosts::d2, std::string("builtin ") + PairingCodec::name);
  s.add_function("pick", 4, hosts::pick, "builtin");
  for (const char* rel : {"<", ">", "<=", ">="}) s.add_predicate(rel, 2, HostRegistry::builtin().predicate(rel)->host, "builtin");
  s.add_seq_function("sum", hosts::sum, "builtin");
  s.add_seq_function("max", hosts::max, "builtin");
  s.add_seq_function("len", hosts::len, "builtin");
  s.add_seq_function("last", hosts::last, "builtin");
  s.add_seq_function("Gz", hosts::contains_zero, "builtin contains_zero");
  s.add_seq_function("Gpar", hosts::even_length, "builtin parity");
  return s;
}

void load_signature(std::istream& in, const HostRegistry& registry, Signature& sig) {
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream words(line);
    std::vector<std::string> w;
    for (std::string s; words >> s;) w.push_back(s);
    if (w.empty()) continue;
    auto fail = [&](const std::string& why) -> void {
      throw SignatureError("signature line " + std::to_string(lineno) + ": " + why);
    };
    auto parse_arity = [&](const std::string& text) -> std::size_t {
      std::size_t pos = 0;
      unsigned long n = 0;
      try {
        n = std::stoul(text, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos != text.size() || n == 0) fail("bad arity '" + text + "'");
      return n;
    };
    if (w[0] == "fn" && w.size() == 4) {
      const auto arity = parse_arity(w[2]);
      const auto* entry = registry.function(w[3]);
      if (!entry) fail("unknown function key '" + w[3] + "'");
      if (entry->arity && *entry->arity != arity) fail("key '" + w[3] + "' has arity " + std::to_string(*entry->arity));
      sig.add_function(w[1], arity, entry->host, w[3]);
    } else if (w[0] == "pred" && w.size() == 4) {
      const auto arity = parse_arity(w[2]);
      const auto* entry = registry.predicate(w[3]);
      if (!entry) fail("unknown predicate key '" + w[3] + "'");
      if (entry->arity && *entry->arity != arity) fail("key '" + w[3] + "' has arity " + std::to_string(*entry->arity));
      sig.add_predicate(w[1], arity, entry->host, w[3]);
    } else if (w[0] == "seqfn" && w.size() == 3) {
      const auto* host = registry.seq_function(w[2]);
      if (!host) fail("unknown sequence function key '" + w[2] + "'");
      sig.add_seq_function(w[1], *host, w[2]);
    } else {
      fail("expected 'fn <name> <arity> <key>', 'pred <name> <arity> <key>' or 'seqfn <name> <key>'");
    }
  }
}

}  // namespace guess
