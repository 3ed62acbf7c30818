#include "guess/ast.hpp"

#include "guess/error.hpp"

namespace guess {

Term var(std::string name) { return Term{Variable{std::move(name)}}; }
Term num(Nat value) { return Term{Numeral{value}}; }
Term app(std::string symbol, std::vector<Term> args) { return Term{FixedApp{std::move(symbol), std::move(args)}}; }
Term seq(Term arg) { return Term{SeqApp{std::move(arg)}}; }
Term ellipsis(std::string symbol, Term body, std::string binder, Term bound) {
  return Term{EllipsisApp{std::move(symbol), std::move(body), std::move(binder), std::move(bound)}};
}

Formula eq(Term lhs, Term rhs) { return Formula{Eq{std::move(lhs), std::move(rhs)}}; }
Formula pred(std::string symbol, std::vector<Term> args) { return Formula{Pred{std::move(symbol), std::move(args)}}; }
Formula negate(Formula f) { return Formula{Not{std::move(f)}}; }
Formula conj(Formula a, Formula b) { return Formula{Binary{Connective::And, std::move(a), std::move(b)}}; }
Formula disj(Formula a, Formula b) { return Formula{Binary{Connective::Or, std::move(a), std::move(b)}}; }
Formula implies(Formula a, Formula b) { return Formula{Binary{Connective::Implies, std::move(a), std::move(b)}}; }
Formula forall(std::string v, Formula body) { return Formula{Quantified{Quantifier::Forall, std::move(v), std::move(body)}}; }
Formula exists(std::string v, Formula body) { return Formula{Quantified{Quantifier::Exists, std::move(v), std::move(body)}}; }

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

namespace {

void collect(const Term& t, VarSet& out) {
  std::visit(overloaded{
                 [&](const Variable& v) { out.insert(v.name); },
                 [](const Numeral&) {},
                 [&](const FixedApp& a) {
                   for (const auto& arg : a.args) collect(arg, out);
                 },
                 [&](const SeqApp& s) { collect(*s.arg, out); },
                 [&](const EllipsisApp& e) {
                   VarSet body;
                   collect(*e.body, body);
                   body.erase(e.binder);
                   out.insert(body.begin(), body.end());
                   collect(*e.bound, out);
                 },
             },
             t.node);
}

void collect(const Formula& f, VarSet& out) {
  std::visit(overloaded{
                 [&](const Eq& e) {
                   collect(e.lhs, out);
                   collect(e.rhs, out);
                 },
                 [&](const Pred& p) {
                   for (const auto& arg : p.args) collect(arg, out);
                 },
                 [&](const Not& n) { collect(*n.operand, out); },
                 [&](const Binary& b) {
                   collect(*b.lhs, out);
                   collect(*b.rhs, out);
                 },
                 [&](const Quantified& q) {
                   VarSet body;
                   collect(*q.body, body);
                   body.erase(q.variable);
                   out.insert(body.begin(), body.end());
                 },
             },
             f.node);
}

}  // namespace

VarSet free_vars(const Term& t) {
  VarSet out;
  collect(t, out);
  return out;
}

VarSet free_vars(const Formula& f) {
  VarSet out;
  collect(f, out);
  return out;
}

bool is_closed(const Term& t) { return free_vars(t).empty(); }

bool is_quantifier_free(const Formula& f) {
  return std::visit(overloaded{
                        [](const Eq&) { return true; },
                        [](const Pred&) { return true; },
                        [](const Not& n) { return is_quantifier_free(*n.operand); },
                        [](const Binary& b) { return is_quantifier_free(*b.lhs) && is_quantifier_free(*b.rhs); },
                        [](const Quantified&) { return false; },
                    },
                    f.node);
}

namespace {

// Shared state for one substitution; the free variables of the replacement
// are computed once.
struct Substitution {
  const std::string& var;
  const Term& repl;
  VarSet repl_fv;

  void check_capture(const std::string& binder, bool var_free_below) const {
    if (var_free_below && repl_fv.count(binder))
      throw SubstitutionError("substituting for '" + var + "' would capture '" + binder + "'");
  }

  Term operator()(const Term& t) const {
    return std::visit(overloaded{
                          [&](const Variable& v) { return v.name == var ? repl : t; },
                          [&](const Numeral&) { return t; },
                          [&](const FixedApp& a) {
                            std::vector<Term> args;
                            args.reserve(a.args.size());
                            for (const auto& arg : a.args) args.push_back((*this)(arg));
                            return app(a.symbol, std::move(args));
                          },
                          [&](const SeqApp& s) { return seq((*this)(*s.arg)); },
                          [&](const EllipsisApp& e) {
                            if (e.binder == var) return ellipsis(e.symbol, *e.body, e.binder, (*this)(*e.bound));
                            check_capture(e.binder, free_vars(*e.body).count(var) != 0);
                            return ellipsis(e.symbol, (*this)(*e.body), e.binder, (*this)(*e.bound));
                          },
                      },
                      t.node);
  }

  Formula operator()(const Formula& f) const {
    return std::visit(overloaded{
                          [&](const Eq& e) { return eq((*this)(e.lhs), (*this)(e.rhs)); },
                          [&](const Pred& p) {
                            std::vector<Term> args;
                            args.reserve(p.args.size());
                            for (const auto& arg : p.args) args.push_back((*this)(arg));
                            return pred(p.symbol, std::move(args));
                          },
                          [&](const Not& n) { return negate((*this)(*n.operand)); },
                          [&](const Binary& b) {
                            return Formula{Binary{b.op, (*this)(*b.lhs), (*this)(*b.rhs)}};
                          },
                          [&](const Quantified& q) {
                            if (q.variable == var) return f;
                            check_capture(q.variable, free_vars(*q.body).count(var) != 0);
                            return Formula{Quantified{q.q, q.variable, (*this)(*q.body)}};
                          },
                      },
                      f.node);
  }
};

}  // namespace

Term substitute(const Term& t, const std::string& var, const Term& repl) {
  return Substitution{var, repl, free_vars(repl)}(t);
}

Formula substitute(const Formula& f, const std::string& var, const Term& repl) {
  return Substitution{var, repl, free_vars(repl)}(f);
}

const char* to_string(SentenceClass c) {
  switch (c) {
    case SentenceClass::QuantifierFree: return "QuantifierFree";
    case SentenceClass::Sigma2: return "Sigma2";
    case SentenceClass::Pi2: return "Pi2";
    case SentenceClass::NestedOther: return "NestedOther";
  }
  return "?";
}

SentenceClass classify_sentence(const Formula& f) {
  if (!free_vars(f).empty()) throw ShapeError("classify_sentence: formula has free variables");
  if (is_quantifier_free(f)) return SentenceClass::QuantifierFree;
  const auto* outer = std::get_if<Quantified>(&f.node);
  if (outer) {
    const auto* inner = std::get_if<Quantified>(&outer->body->node);
    if (inner && inner->q != outer->q && is_quantifier_free(*inner->body))
      return outer->q == Quantifier::Exists ? SentenceClass::Sigma2 : SentenceClass::Pi2;
  }
  return SentenceClass::NestedOther;
}

namespace {

struct Prenex {
  std::string outer, inner;
  Formula matrix;
};

Prenex split_prenex(const Formula& f, SentenceClass want) {
  if (classify_sentence(f) != want)
    throw ShapeError(std::string("expected a ") + to_string(want) + " sentence");
  const auto& outer = std::get<Quantified>(f.node);
  const auto& inner = std::get<Quantified>(outer.body->node);
  if (outer.variable == inner.variable) throw ShapeError("prenex variables must be distinct");
  return {outer.variable, inner.variable, *inner.body};
}

}  // namespace

Formula Sigma2Sentence::formula() const { return exists(outer, forall(inner, matrix)); }

Sigma2Sentence Sigma2Sentence::from_formula(const Formula& f) {
  auto p = split_prenex(f, SentenceClass::Sigma2);
  return {p.outer, p.inner, p.matrix};
}

Formula Pi2Sentence::formula() const { return forall(outer, exists(inner, matrix)); }

Pi2Sentence Pi2Sentence::from_formula(const Formula& f) {
  auto p = split_prenex(f, SentenceClass::Pi2);
  return {p.outer, p.inner, p.matrix};
}

Sigma2Sentence Pi2Sentence::complement() const { return {outer, inner, negate(matrix)}; }

}  // namespace guess
