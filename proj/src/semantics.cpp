#include "guess/semantics.hpp"

#include <vector>

#include "guess/error.hpp"

namespace guess {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

// Thrown through the evaluator when an attempt reads past its prefix.
struct QueryOutOfRange {
  Index index;
};

class Evaluator {
 public:
  // `available`: when set, reading any index >= available aborts the evaluation.
  Evaluator(SequenceOracle& o, const Signature& sig, const EvalLimits& limits, std::optional<Index> available)
      : oracle_(o), sig_(sig), limits_(limits), available_(available) {}

  QueryLog& log() { return log_; }

  Nat term(const Term& t, const Assignment& s) {
    return std::visit(overloaded{
                          [&](const Variable& v) { return s(v.name); },
                          [](const Numeral& n) { return n.value; },
                          [&](const FixedApp& a) {
                            const auto* sym = sig_.function(a.symbol);
                            if (!sym) throw SignatureError("unknown function symbol '" + a.symbol + "'");
                            if (sym->arity != a.args.size())
                              throw SignatureError("arity mismatch for '" + a.symbol + "'");
                            std::vector<Nat> args;
                            args.reserve(a.args.size());
                            for (const auto& arg : a.args) args.push_back(term(arg, s));
                            return sym->host(args);
                          },
                          [&](const SeqApp& q) {
                            const Nat i = term(*q.arg, s);
                            if (available_ && i >= *available_) throw QueryOutOfRange{i};
                            return oracle_.query(i, log_);
                          },
                          [&](const EllipsisApp& e) {
                            const auto* sym = sig_.seq_function(e.symbol);
                            if (!sym) throw SignatureError("'" + e.symbol + "' is not a declared sequence-ary symbol");
                            const Nat bound = term(*e.bound, s);
                            if (bound >= limits_.max_ellipsis_length)
                              throw EvalError("ellipsis bound " + std::to_string(bound) + " exceeds the evaluation limit");
                            std::vector<Nat> tuple;
                            tuple.reserve(bound + 1);
                            for (Nat i = 0; i <= bound; ++i) tuple.push_back(term(*e.body, s.with(e.binder, i)));
                            return sym->host(tuple);
                          },
                      },
                      t.node);
  }

  bool formula(const Formula& f, const Assignment& s) {
    return std::visit(overloaded{
                          [&](const Eq& e) {
                            const Nat l = term(e.lhs, s);
                            const Nat r = term(e.rhs, s);
                            return l == r;
                          },
                          [&](const Pred& p) {
                            const auto* sym = sig_.predicate(p.symbol);
                            if (!sym) throw SignatureError("unknown predicate symbol '" + p.symbol + "'");
                            if (sym->arity != p.args.size())
                              throw SignatureError("arity mismatch for '" + p.symbol + "'");
                            std::vector<Nat> args;
                            args.reserve(p.args.size());
                            for (const auto& arg : p.args) args.push_back(term(arg, s));
                            return sym->host(args);
                          },
                          [&](const Not& n) { return !formula(*n.operand, s); },
                          [&](const Binary& b) {
                            const bool l = formula(*b.lhs, s);
                            const bool r = formula(*b.rhs, s);
                            switch (b.op) {
                              case Connective::And: return l && r;
                              case Connective::Or: return l || r;
                              case Connective::Implies: return !l || r;
                            }
                            return false;
                          },
                          [&](const Quantified& q) -> bool {
                            if (!bound_) throw EvalError("quantifier '" + q.variable + "' in a quantifier-free evaluation");
                            bool any = false, all = true;
                            for (Nat n = 0; n <= *bound_; ++n) {
                              const bool v = formula(*q.body, s.with(q.variable, n));
                              any = any || v;
                              all = all && v;
                            }
                            return q.q == Quantifier::Forall ? all : any;
                          },
                      },
                      f.node);
  }

  void set_quantifier_bound(Nat b) { bound_ = b; }

 private:
  SequenceOracle& oracle_;
  const Signature& sig_;
  const EvalLimits& limits_;
  std::optional<Index> available_;
  std::optional<Nat> bound_;
  QueryLog log_;
};

}  // namespace

Nat Assignment::operator()(const std::string& v) const {
  auto it = values_.find(v);
  return it == values_.end() ? 0 : it->second;
}

Assignment Assignment::with(const std::string& v, Nat n) const {
  Assignment out = *this;
  out.values_[v] = n;
  return out;
}

EvalResult<Nat> eval_term(const Term& t, SequenceOracle& o, const Assignment& s, const Signature& sig,
                          const EvalLimits& limits) {
  Evaluator ev(o, sig, limits, std::nullopt);
  const Nat v = ev.term(t, s);
  return {v, ev.log()};
}

EvalResult<bool> eval_qf(const Formula& f, SequenceOracle& o, const Assignment& s, const Signature& sig,
                         const EvalLimits& limits) {
  Evaluator ev(o, sig, limits, std::nullopt);
  const bool v = ev.formula(f, s);
  return {v, ev.log()};
}

std::string to_string(const AttemptOutcome& a) {
  if (a.is_failed()) return "Failed(index " + std::to_string(a.offending_index) + ")";
  return a.truth ? "Succeeded(true)" : "Succeeded(false)";
}

AttemptOutcome attempt(const Formula& f, const FinitePrefix& p, const Signature& sig, const EvalLimits& limits) {
  if (!free_vars(f).empty()) throw EvalError("attempt: sentence has free variables");
  auto padded = zero_pad(p);
  return attempt(f, padded, p.size(), sig, limits);
}

AttemptOutcome attempt(const Formula& f, SequenceOracle& padded, std::size_t available, const Signature& sig,
                       const EvalLimits& limits) {
  Evaluator ev(padded, sig, limits, static_cast<Index>(available));
  try {
    return AttemptOutcome::succeeded(ev.formula(f, {}));
  } catch (const QueryOutOfRange& q) {
    return AttemptOutcome::failed(q.index);
  }
}

bool eval_bounded(const Formula& f, SequenceOracle& o, const Assignment& s, const Signature& sig, Nat bound,
                  const EvalLimits& limits) {
  Evaluator ev(o, sig, limits, std::nullopt);
  ev.set_quantifier_bound(bound);
  return ev.formula(f, s);
}

}  // namespace guess
