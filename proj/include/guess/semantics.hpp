#pragma once

#include <map>
#include <optional>
#include <string>

#include "guess/ast.hpp"
#include "guess/oracle.hpp"
#include "guess/signature.hpp"

namespace guess {

// Variables not mapped explicitly evaluate to 0.
class Assignment {
 public:
  Assignment() = default;
  Assignment(std::initializer_list<std::pair<const std::string, Nat>> init) : values_(init) {}

  Nat operator()(const std::string& v) const;
  // s(x|n)
  Assignment with(const std::string& v, Nat n) const;
  void set(const std::string& v, Nat n) { values_[v] = n; }

  friend bool operator==(const Assignment&, const Assignment&) = default;

 private:
  std::map<std::string, Nat> values_;
};

struct EvalLimits {
  // Longest tuple an ellipsis term may build before evaluation is refused.
  Nat max_ellipsis_length = Nat{1} << 22;
};

template <typename T>
struct EvalResult {
  T value;
  // Exactly the oracle indices read during this evaluation.
  QueryLog queries;
};

// Evaluates `t` in M_f where f is the oracle. Ellipsis terms evaluate the
// bound first, then the body at binder = 0, 1, ..., bound in ascending order,
// then apply the host to that tuple.
EvalResult<Nat> eval_term(const Term& t, SequenceOracle& o, const Assignment& s, const Signature& sig,
                          const EvalLimits& limits = {});

// Truth-functional evaluation of a quantifier-free formula. Every subformula
// is evaluated (no short-circuiting), so the query set depends only on the
// syntax and the values read. Throws EvalError on a quantifier.
EvalResult<bool> eval_qf(const Formula& f, SequenceOracle& o, const Assignment& s, const Signature& sig,
                         const EvalLimits& limits = {});

// Outcome of evaluating a sentence over a zero-padded prefix.
struct AttemptOutcome {
  enum class Kind { Succeeded, Failed };
  Kind kind;
  bool truth = false;          // meaningful when Succeeded
  Index offending_index = 0;   // first index past the prefix that was needed, when Failed

  static AttemptOutcome succeeded(bool truth) { return {Kind::Succeeded, truth, 0}; }
  static AttemptOutcome failed(Index i) { return {Kind::Failed, false, i}; }
  bool is_failed() const { return kind == Kind::Failed; }
  bool is_true() const { return kind == Kind::Succeeded && truth; }
  bool is_false() const { return kind == Kind::Succeeded && !truth; }
  friend bool operator==(const AttemptOutcome&, const AttemptOutcome&) = default;
};

std::string to_string(const AttemptOutcome& a);

// Evaluates a closed quantifier-free sentence over zero_pad(p), failing the
// moment an index >= p.size() is queried.
AttemptOutcome attempt(const Formula& f, const FinitePrefix& p, const Signature& sig, const EvalLimits& limits = {});

// Same as above with the padded oracle built once by the caller:
// `padded` must be zero_pad(p) and `available` must be p.size().
AttemptOutcome attempt(const Formula& f, SequenceOracle& padded, std::size_t available, const Signature& sig,
                       const EvalLimits& limits = {});

// Approximation for tests and the CLI: quantifiers range over 0..bound only.
bool eval_bounded(const Formula& f, SequenceOracle& o, const Assignment& s, const Signature& sig, Nat bound,
                  const EvalLimits& limits = {});

}  // namespace guess
