#include "guess/syntax.hpp"

namespace guess {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void print_args(const std::vector<Term>& args, std::string& out) {
  out += '(';
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (i) out += ", ";
    out += print(args[i]);
  }
  out += ')';
}

bool is_relation(const std::string& s) { return s == "<" || s == ">" || s == "<=" || s == ">="; }

bool is_binary(const Formula& f) { return std::holds_alternative<Binary>(f.node); }
bool is_quantified(const Formula& f) { return std::holds_alternative<Quantified>(f.node); }

std::string parenthesized(const Formula& f) { return "(" + print(f) + ")"; }

// Operands of connectives and negation that are themselves connectives or
// quantifiers are always parenthesized.
std::string operand(const Formula& f) { return is_binary(f) || is_quantified(f) ? parenthesized(f) : print(f); }

const char* connective(Connective c) {
  switch (c) {
    case Connective::And: return " & ";
    case Connective::Or: return " | ";
    case Connective::Implies: return " -> ";
  }
  return " ? ";
}

}  // namespace

std::string print(const Term& t) {
  return std::visit(overloaded{
                        [](const Variable& v) { return v.name; },
                        [](const Numeral& n) { return std::to_string(n.value); },
                        [](const FixedApp& a) {
                          std::string out = a.symbol;
                          print_args(a.args, out);
                          return out;
                        },
                        [](const SeqApp& s) { return std::string(kSequenceSymbol) + "(" + print(*s.arg) + ")"; },
                        [](const EllipsisApp& e) {
                          return e.symbol + "[ " + print(*e.body) + " : " + e.binder + " .. " + print(*e.bound) + " ]";
                        },
                    },
                    t.node);
}

std::string print(const Formula& f) {
  return std::visit(overloaded{
                        [](const Eq& e) { return print(e.lhs) + " = " + print(e.rhs); },
                        [](const Pred& p) {
                          if (is_relation(p.symbol) && p.args.size() == 2)
                            return print(p.args[0]) + " " + p.symbol + " " + print(p.args[1]);
                          std::string out = p.symbol;
                          print_args(p.args, out);
                          return out;
                        },
                        [](const Not& n) { return "!" + operand(*n.operand); },
                        [](const Binary& b) { return operand(*b.lhs) + connective(b.op) + operand(*b.rhs); },
                        [](const Quantified& q) {
                          std::string head = q.q == Quantifier::Forall ? "forall " : "exists ";
                          const auto& body = *q.body;
                          return head + q.variable + ". " + (is_binary(body) ? parenthesized(body) : print(body));
                        },
                    },
                    f.node);
}

}  // namespace guess
