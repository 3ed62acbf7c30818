#pragma once

#include <memory>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "guess/oracle.hpp"

namespace guess {

// Immutable, shared, value-compared indirection for recursive AST nodes.
template <typename T>
class Box {
 public:
  Box(T value) : ptr_(std::make_shared<const T>(std::move(value))) {}
  const T& operator*() const { return *ptr_; }
  const T* operator->() const { return ptr_.get(); }
  friend bool operator==(const Box& a, const Box& b) { return a.ptr_ == b.ptr_ || *a.ptr_ == *b.ptr_; }

 private:
  std::shared_ptr<const T> ptr_;
};

// The distinguished unary symbol interpreted by the ambient sequence.
inline constexpr const char* kSequenceSymbol = "f";

struct Term;

struct Variable {
  std::string name;
  friend bool operator==(const Variable&, const Variable&) = default;
};

struct Numeral {
  Nat value = 0;
  friend bool operator==(const Numeral&, const Numeral&) = default;
};

// w(t1, ..., tn) for a fixed-arity symbol.
struct FixedApp {
  std::string symbol;
  std::vector<Term> args;
  friend bool operator==(const FixedApp&, const FixedApp&) = default;
};

// f(t)
struct SeqApp {
  Box<Term> arg;
  friend bool operator==(const SeqApp&, const SeqApp&) = default;
};

// G(u(0), ..._x, u(v)), written G[ u : x .. v ].
struct EllipsisApp {
  std::string symbol;
  Box<Term> body;
  std::string binder;
  Box<Term> bound;
  friend bool operator==(const EllipsisApp&, const EllipsisApp&) = default;
};

struct Term {
  std::variant<Variable, Numeral, FixedApp, SeqApp, EllipsisApp> node;
  friend bool operator==(const Term&, const Term&) = default;
};

Term var(std::string name);
Term num(Nat value);
Term app(std::string symbol, std::vector<Term> args);
Term seq(Term arg);
Term ellipsis(std::string symbol, Term body, std::string binder, Term bound);

struct Formula;

struct Eq {
  Term lhs, rhs;
  friend bool operator==(const Eq&, const Eq&) = default;
};

struct Pred {
  std::string symbol;
  std::vector<Term> args;
  friend bool operator==(const Pred&, const Pred&) = default;
};

struct Not {
  Box<Formula> operand;
  friend bool operator==(const Not&, const Not&) = default;
};

enum class Connective { And, Or, Implies };

struct Binary {
  Connective op;
  Box<Formula> lhs, rhs;
  friend bool operator==(const Binary&, const Binary&) = default;
};

enum class Quantifier { Forall, Exists };

struct Quantified {
  Quantifier q;
  std::string variable;
  Box<Formula> body;
  friend bool operator==(const Quantified&, const Quantified&) = default;
};

struct Formula {
  std::variant<Eq, Pred, Not, Binary, Quantified> node;
  friend bool operator==(const Formula&, const Formula&) = default;
};

Formula eq(Term lhs, Term rhs);
Formula pred(std::string symbol, std::vector<Term> args);
Formula negate(Formula f);
Formula conj(Formula a, Formula b);
Formula disj(Formula a, Formula b);
Formula implies(Formula a, Formula b);
Formula forall(std::string v, Formula body);
Formula exists(std::string v, Formula body);

using VarSet = std::set<std::string>;

VarSet free_vars(const Term& t);
VarSet free_vars(const Formula& f);

bool is_closed(const Term& t);
bool is_quantifier_free(const Formula& f);

// t(var|repl). Ellipsis terms follow two rules: for a binder other than `var`
// the substitution passes into both body and bound; for the binder itself
// only the bound is rewritten. Throws SubstitutionError when a free variable
// of `repl` would be captured by an ellipsis binder or a quantifier.
Term substitute(const Term& t, const std::string& var, const Term& repl);
Formula substitute(const Formula& f, const std::string& var, const Term& repl);

enum class SentenceClass { QuantifierFree, Sigma2, Pi2, NestedOther };

const char* to_string(SentenceClass c);

// Syntactic class of a closed formula; Sigma2/Pi2 mean prenex exists-forall /
// forall-exists over a quantifier-free matrix. Anything else with quantifiers
// is NestedOther. Throws ShapeError for open formulas.
SentenceClass classify_sentence(const Formula& f);

// exists outer. forall inner. matrix
struct Sigma2Sentence {
  std::string outer;
  std::string inner;
  Formula matrix;

  Formula formula() const;
  // Throws ShapeError unless f is closed, prenex exists-forall, distinct
  // variables and a quantifier-free matrix.
  static Sigma2Sentence from_formula(const Formula& f);
  friend bool operator==(const Sigma2Sentence&, const Sigma2Sentence&) = default;
};

// forall outer. exists inner. matrix
struct Pi2Sentence {
  std::string outer;
  std::string inner;
  Formula matrix;

  Formula formula() const;
  static Pi2Sentence from_formula(const Formula& f);
  // exists outer. forall inner. !matrix, which defines the complement.
  Sigma2Sentence complement() const;
  friend bool operator==(const Pi2Sentence&, const Pi2Sentence&) = default;
};

}  // namespace guess
