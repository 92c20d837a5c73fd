#include "relprove/ast.hpp"

#include <algorithm>
#include <cassert>

namespace relprove {

// ------------------------------------------------------------ constructors ----

TermPtr mk_int(long long v) {
  if (v < 0) return mk_neg(mk_int(-v));
  return mk_int(std::to_string(v));
}

TermPtr mk_int(std::string digits, Span span) {
  // Canonicalize: strip leading zeros so structural equality is value equality.
  std::size_t i = 0;
  while (i + 1 < digits.size() && digits[i] == '0') ++i;
  digits.erase(0, i);
  return std::make_shared<Term>(Term{span, IntLit{std::move(digits)}});
}

TermPtr mk_var(std::string name, Span span) {
  return std::make_shared<Term>(Term{span, VarRef{std::move(name)}});
}

TermPtr mk_neg(TermPtr t, Span span) {
  return std::make_shared<Term>(Term{span, NegTerm{std::move(t)}});
}

TermPtr mk_arith(ArithOp op, TermPtr l, TermPtr r, Span span) {
  return std::make_shared<Term>(Term{span, ArithTerm{op, std::move(l), std::move(r)}});
}

TermPtr mk_call(std::string callee, std::vector<TermPtr> args, Span span) {
  return std::make_shared<Term>(Term{span, CallTerm{std::move(callee), std::move(args)}});
}

TermPtr mk_result(Span span) {
  return std::make_shared<Term>(Term{span, ResultTerm{}});
}

TermPtr mk_logic_app(std::string fn, std::vector<TermPtr> args, Span span) {
  return std::make_shared<Term>(Term{span, LogicApp{std::move(fn), std::move(args)}});
}

PredPtr mk_bool(bool v, Span span) {
  return std::make_shared<Pred>(Pred{span, BoolLit{v}});
}

PredPtr mk_cmp(CmpOp op, TermPtr l, TermPtr r, Span span) {
  return std::make_shared<Pred>(Pred{span, Compare{op, std::move(l), std::move(r)}});
}

PredPtr mk_and(PredPtr l, PredPtr r) {
  return std::make_shared<Pred>(Pred{{}, BinaryPred{Connective::And, std::move(l), std::move(r)}});
}

PredPtr mk_or(PredPtr l, PredPtr r) {
  return std::make_shared<Pred>(Pred{{}, BinaryPred{Connective::Or, std::move(l), std::move(r)}});
}

PredPtr mk_implies(PredPtr l, PredPtr r) {
  return std::make_shared<Pred>(Pred{{}, BinaryPred{Connective::Implies, std::move(l), std::move(r)}});
}

PredPtr mk_not(PredPtr p) {
  return std::make_shared<Pred>(Pred{{}, NotPred{std::move(p)}});
}

PredPtr mk_quant(Quantifier q, std::vector<std::string> binders, PredPtr body,
                 Span span) {
  assert(!binders.empty());
  return std::make_shared<Pred>(Pred{span, QuantPred{q, std::move(binders), std::move(body)}});
}

PredPtr mk_label(std::string vc_id, int kind, Span origin, PredPtr body) {
  return std::make_shared<Pred>(Pred{origin, LabelPred{std::move(vc_id), kind, origin, std::move(body)}});
}

PredPtr mk_conj(const std::vector<PredPtr>& ps) {
  if (ps.empty()) return mk_bool(true);
  PredPtr acc = ps.front();
  for (std::size_t i = 1; i < ps.size(); ++i) acc = mk_and(acc, ps[i]);
  return acc;
}

StmtPtr mk_decl(std::string name, TermPtr init, Span span) {
  return std::make_shared<Stmt>(Stmt{span, DeclStmt{std::move(name), std::move(init)}});
}

StmtPtr mk_assign(std::string name, TermPtr value, Span span) {
  return std::make_shared<Stmt>(Stmt{span, AssignStmt{std::move(name), std::move(value)}});
}

StmtPtr mk_if(PredPtr cond, StmtPtr then_b, StmtPtr else_b, Span span) {
  return std::make_shared<Stmt>(Stmt{span, IfStmt{std::move(cond), std::move(then_b), std::move(else_b)}});
}

StmtPtr mk_while(std::vector<PredPtr> invs, PredPtr cond, StmtPtr body, Span span) {
  return std::make_shared<Stmt>(Stmt{span, WhileStmt{std::move(invs), std::move(cond), std::move(body)}});
}

StmtPtr mk_return(TermPtr value, Span span) {
  return std::make_shared<Stmt>(Stmt{span, ReturnStmt{std::move(value)}});
}

StmtPtr mk_assert(PredPtr pred, Span span) {
  return std::make_shared<Stmt>(Stmt{span, AssertStmt{std::move(pred)}});
}

StmtPtr mk_block(std::vector<StmtPtr> stmts, Span span) {
  return std::make_shared<Stmt>(Stmt{span, BlockStmt{std::move(stmts)}});
}

// ---------------------------------------------------------------- program ----

const FunctionDef* Program::find_function(std::string_view name) const {
  for (const auto& f : functions)
    if (f.name == name) return &f;
  return nullptr;
}

const LogicFunction* Program::find_logic_function(std::string_view name) const {
  for (const auto& d : logic_decls)
    if (const auto* lf = std::get_if<LogicFunction>(&d))
      if (lf->name == name) return lf;
  return nullptr;
}

const Lemma* Program::find_lemma(std::string_view name) const {
  for (const auto& d : logic_decls)
    if (const auto* lm = std::get_if<Lemma>(&d))
      if (lm->name == name) return lm;
  return nullptr;
}

std::size_t Program::function_index(std::string_view name) const {
  for (std::size_t i = 0; i < functions.size(); ++i)
    if (functions[i].name == name) return i;
  return npos;
}

// ------------------------------------------------------ structural equality ----

bool equal(const TermPtr& a, const TermPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, IntLit>) {
          return na.digits == nb.digits;
        } else if constexpr (std::is_same_v<T, VarRef>) {
          return na.name == nb.name;
        } else if constexpr (std::is_same_v<T, NegTerm>) {
          return equal(na.operand, nb.operand);
        } else if constexpr (std::is_same_v<T, ArithTerm>) {
          return na.op == nb.op && equal(na.lhs, nb.lhs) && equal(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, CallTerm>) {
          if (na.callee != nb.callee || na.args.size() != nb.args.size()) return false;
          for (std::size_t i = 0; i < na.args.size(); ++i)
            if (!equal(na.args[i], nb.args[i])) return false;
          return true;
        } else if constexpr (std::is_same_v<T, ResultTerm>) {
          return true;
        } else {
          static_assert(std::is_same_v<T, LogicApp>);
          if (na.fn != nb.fn || na.args.size() != nb.args.size()) return false;
          for (std::size_t i = 0; i < na.args.size(); ++i)
            if (!equal(na.args[i], nb.args[i])) return false;
          return true;
        }
      },
      a->node);
}

bool equal(const PredPtr& a, const PredPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, BoolLit>) {
          return na.value == nb.value;
        } else if constexpr (std::is_same_v<T, Compare>) {
          return na.op == nb.op && equal(na.lhs, nb.lhs) && equal(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          return na.op == nb.op && equal(na.lhs, nb.lhs) && equal(na.rhs, nb.rhs);
        } else if constexpr (std::is_same_v<T, NotPred>) {
          return equal(na.operand, nb.operand);
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          return na.quant == nb.quant && na.binders == nb.binders &&
                 equal(na.body, nb.body);
        } else {
          static_assert(std::is_same_v<T, LabelPred>);
          return na.vc_id == nb.vc_id && na.kind == nb.kind && equal(na.body, nb.body);
        }
      },
      a->node);
}

bool equal(const StmtPtr& a, const StmtPtr& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  if (a->node.index() != b->node.index()) return false;
  return std::visit(
      [&](const auto& na) -> bool {
        using T = std::decay_t<decltype(na)>;
        const auto& nb = std::get<T>(b->node);
        if constexpr (std::is_same_v<T, DeclStmt>) {
          return na.name == nb.name && equal(na.init, nb.init);
        } else if constexpr (std::is_same_v<T, AssignStmt>) {
          return na.name == nb.name && equal(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, IfStmt>) {
          return equal(na.cond, nb.cond) && equal(na.then_branch, nb.then_branch) &&
                 equal(na.else_branch, nb.else_branch);
        } else if constexpr (std::is_same_v<T, WhileStmt>) {
          if (na.invariants.size() != nb.invariants.size()) return false;
          for (std::size_t i = 0; i < na.invariants.size(); ++i)
            if (!equal(na.invariants[i], nb.invariants[i])) return false;
          return equal(na.cond, nb.cond) && equal(na.body, nb.body);
        } else if constexpr (std::is_same_v<T, ReturnStmt>) {
          return equal(na.value, nb.value);
        } else if constexpr (std::is_same_v<T, AssertStmt>) {
          return equal(na.pred, nb.pred);
        } else {
          static_assert(std::is_same_v<T, BlockStmt>);
          if (na.stmts.size() != nb.stmts.size()) return false;
          for (std::size_t i = 0; i < na.stmts.size(); ++i)
            if (!equal(na.stmts[i], nb.stmts[i])) return false;
          return true;
        }
      },
      a->node);
}

bool equal(const Contract& a, const Contract& b) {
  if (a.assigns_nothing != b.assigns_nothing) return false;
  if (a.requires_clauses.size() != b.requires_clauses.size()) return false;
  for (std::size_t i = 0; i < a.requires_clauses.size(); ++i)
    if (!equal(a.requires_clauses[i], b.requires_clauses[i])) return false;
  if (a.ensures_clauses.size() != b.ensures_clauses.size()) return false;
  for (std::size_t i = 0; i < a.ensures_clauses.size(); ++i) {
    if (a.ensures_clauses[i].behavior != b.ensures_clauses[i].behavior) return false;
    if (!equal(a.ensures_clauses[i].pred, b.ensures_clauses[i].pred)) return false;
  }
  if (a.relational.size() != b.relational.size()) return false;
  for (std::size_t i = 0; i < a.relational.size(); ++i) {
    const auto& ra = a.relational[i];
    const auto& rb = b.relational[i];
    if (ra.name != rb.name || ra.binders.size() != rb.binders.size()) return false;
    for (std::size_t j = 0; j < ra.binders.size(); ++j)
      if (ra.binders[j].name != rb.binders[j].name) return false;
    if (!equal(ra.body, rb.body)) return false;
  }
  return true;
}

bool equal(const FunctionDef& a, const FunctionDef& b) {
  if (a.name != b.name || a.params != b.params) return false;
  if (a.has_body() != b.has_body()) return false;
  if (a.has_body()) {
    auto ba = std::make_shared<Stmt>(Stmt{{}, *a.body});
    auto bb = std::make_shared<Stmt>(Stmt{{}, *b.body});
    if (!equal(ba, bb)) return false;
  }
  return equal(a.contract, b.contract);
}

bool equal(const LogicDecl& a, const LogicDecl& b) {
  if (a.index() != b.index()) return false;
  if (const auto* fa = std::get_if<LogicFunction>(&a)) {
    const auto& fb = std::get<LogicFunction>(b);
    return fa->name == fb.name && fa->params == fb.params;
  }
  const auto& la = std::get<Lemma>(a);
  const auto& lb = std::get<Lemma>(b);
  // origin_property is bookkeeping, not structure.
  return la.name == lb.name && equal(la.body, lb.body);
}

bool equal(const Program& a, const Program& b) {
  if (a.logic_decls.size() != b.logic_decls.size()) return false;
  for (std::size_t i = 0; i < a.logic_decls.size(); ++i)
    if (!equal(a.logic_decls[i], b.logic_decls[i])) return false;
  if (a.functions.size() != b.functions.size()) return false;
  for (std::size_t i = 0; i < a.functions.size(); ++i)
    if (!equal(a.functions[i], b.functions[i])) return false;
  return true;
}

// --------------------------------------------------------------- traversal ----

namespace {

void free_vars_term(const TermPtr& t, const std::set<std::string>& bound,
                    std::set<std::string>& out) {
  if (!t) return;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          if (!bound.contains(n.name)) out.insert(n.name);
        } else if constexpr (std::is_same_v<T, NegTerm>) {
          free_vars_term(n.operand, bound, out);
        } else if constexpr (std::is_same_v<T, ArithTerm>) {
          free_vars_term(n.lhs, bound, out);
          free_vars_term(n.rhs, bound, out);
        } else if constexpr (std::is_same_v<T, CallTerm> ||
                             std::is_same_v<T, LogicApp>) {
          for (const auto& a : n.args) free_vars_term(a, bound, out);
        }
      },
      t->node);
}

void free_vars_pred(const PredPtr& p, std::set<std::string> bound,
                    std::set<std::string>& out) {
  if (!p) return;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Compare>) {
          free_vars_term(n.lhs, bound, out);
          free_vars_term(n.rhs, bound, out);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          free_vars_pred(n.lhs, bound, out);
          free_vars_pred(n.rhs, bound, out);
        } else if constexpr (std::is_same_v<T, NotPred>) {
          free_vars_pred(n.operand, bound, out);
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          auto inner = bound;
          for (const auto& b : n.binders) inner.insert(b);
          free_vars_pred(n.body, std::move(inner), out);
        } else if constexpr (std::is_same_v<T, LabelPred>) {
          free_vars_pred(n.body, bound, out);
        }
      },
      p->node);
}

}  // namespace

void free_vars(const TermPtr& t, std::set<std::string>& out) {
  free_vars_term(t, {}, out);
}

void free_vars(const PredPtr& p, std::set<std::string>& out) {
  free_vars_pred(p, {}, out);
}

std::set<std::string> free_vars(const PredPtr& p) {
  std::set<std::string> out;
  free_vars(p, out);
  return out;
}

void visit_terms(const TermPtr& t, const std::function<void(const TermPtr&)>& f) {
  if (!t) return;
  f(t);
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NegTerm>) {
          visit_terms(n.operand, f);
        } else if constexpr (std::is_same_v<T, ArithTerm>) {
          visit_terms(n.lhs, f);
          visit_terms(n.rhs, f);
        } else if constexpr (std::is_same_v<T, CallTerm> ||
                             std::is_same_v<T, LogicApp>) {
          for (const auto& a : n.args) visit_terms(a, f);
        }
      },
      t->node);
}

void visit_terms(const PredPtr& p, const std::function<void(const TermPtr&)>& f) {
  if (!p) return;
  std::visit(
      [&](const auto& n) {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Compare>) {
          visit_terms(n.lhs, f);
          visit_terms(n.rhs, f);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          visit_terms(n.lhs, f);
          visit_terms(n.rhs, f);
        } else if constexpr (std::is_same_v<T, NotPred>) {
          visit_terms(n.operand, f);
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          visit_terms(n.body, f);
        } else if constexpr (std::is_same_v<T, LabelPred>) {
          visit_terms(n.body, f);
        }
      },
      p->node);
}

bool contains_call_term(const PredPtr& p) {
  bool found = false;
  visit_terms(p, [&](const TermPtr& t) {
    if (std::holds_alternative<CallTerm>(t->node)) found = true;
  });
  return found;
}

bool contains_label(const PredPtr& p) {
  if (!p) return false;
  return std::visit(
      [&](const auto& n) -> bool {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, LabelPred>) {
          return true;
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          return contains_label(n.lhs) || contains_label(n.rhs);
        } else if constexpr (std::is_same_v<T, NotPred>) {
          return contains_label(n.operand);
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          return contains_label(n.body);
        } else {
          return false;
        }
      },
      p->node);
}

// ------------------------------------------------------------- substitution ----

namespace {

using SubstEnv = std::vector<std::pair<std::string, TermPtr>>;

const TermPtr* lookup(const SubstEnv& env, const std::string& name) {
  for (const auto& [k, v] : env)
    if (k == name) return &v;
  return nullptr;
}

TermPtr subst_term_impl(const TermPtr& t, const SubstEnv& env) {
  if (!t || env.empty()) return t;
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, VarRef>) {
          if (const TermPtr* r = lookup(env, n.name)) return *r;
          return t;
        } else if constexpr (std::is_same_v<T, NegTerm>) {
          TermPtr o = subst_term_impl(n.operand, env);
          return o == n.operand ? t : mk_neg(std::move(o), t->span);
        } else if constexpr (std::is_same_v<T, ArithTerm>) {
          TermPtr l = subst_term_impl(n.lhs, env);
          TermPtr r = subst_term_impl(n.rhs, env);
          return (l == n.lhs && r == n.rhs)
                     ? t
                     : mk_arith(n.op, std::move(l), std::move(r), t->span);
        } else if constexpr (std::is_same_v<T, CallTerm>) {
          std::vector<TermPtr> args;
          args.reserve(n.args.size());
          bool changed = false;
          for (const auto& a : n.args) {
            args.push_back(subst_term_impl(a, env));
            changed |= args.back() != a;
          }
          return changed ? mk_call(n.callee, std::move(args), t->span) : t;
        } else if constexpr (std::is_same_v<T, LogicApp>) {
          std::vector<TermPtr> args;
          args.reserve(n.args.size());
          bool changed = false;
          for (const auto& a : n.args) {
            args.push_back(subst_term_impl(a, env));
            changed |= args.back() != a;
          }
          return changed ? mk_logic_app(n.fn, std::move(args), t->span) : t;
        } else {
          return t;  // IntLit, ResultTerm
        }
      },
      t->node);
}

PredPtr subst_pred_impl(const PredPtr& p, const SubstEnv& env,
                        const FreshNameFn& fresh) {
  if (!p || env.empty()) return p;
  return std::visit(
      [&](const auto& n) -> PredPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, BoolLit>) {
          return p;
        } else if constexpr (std::is_same_v<T, Compare>) {
          TermPtr l = subst_term_impl(n.lhs, env);
          TermPtr r = subst_term_impl(n.rhs, env);
          return (l == n.lhs && r == n.rhs)
                     ? p
                     : mk_cmp(n.op, std::move(l), std::move(r), p->span);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          PredPtr l = subst_pred_impl(n.lhs, env, fresh);
          PredPtr r = subst_pred_impl(n.rhs, env, fresh);
          if (l == n.lhs && r == n.rhs) return p;
          return std::make_shared<Pred>(
              Pred{p->span, BinaryPred{n.op, std::move(l), std::move(r)}});
        } else if constexpr (std::is_same_v<T, NotPred>) {
          PredPtr o = subst_pred_impl(n.operand, env, fresh);
          return o == n.operand ? p : mk_not(std::move(o));
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          // Drop mappings shadowed by the binders, then alpha-rename any
          // binder that would capture a free variable of the range.
          SubstEnv inner;
          for (const auto& [k, v] : env) {
            bool shadowed = false;
            for (const auto& b : n.binders) shadowed |= (b == k);
            if (!shadowed) inner.emplace_back(k, v);
          }
          if (inner.empty()) return p;
          std::set<std::string> range_free;
          for (const auto& [k, v] : inner) free_vars(v, range_free);
          std::vector<std::string> binders = n.binders;
          SubstEnv renames;
          for (auto& b : binders) {
            if (range_free.contains(b)) {
              std::string nb = fresh(b);
              renames.emplace_back(b, mk_var(nb));
              b = nb;
            }
          }
          PredPtr body = n.body;
          if (!renames.empty()) body = subst_pred_impl(body, renames, fresh);
          body = subst_pred_impl(body, inner, fresh);
          if (body == n.body && binders == n.binders) return p;
          return mk_quant(n.quant, std::move(binders), std::move(body), p->span);
        } else {
          static_assert(std::is_same_v<T, LabelPred>);
          PredPtr body = subst_pred_impl(n.body, env, fresh);
          return body == n.body ? p : mk_label(n.vc_id, n.kind, n.origin, std::move(body));
        }
      },
      p->node);
}

}  // namespace

TermPtr subst_term(const TermPtr& t, const SubstEnv& env) {
  return subst_term_impl(t, env);
}

PredPtr subst_pred(const PredPtr& p, const SubstEnv& env, const FreshNameFn& fresh) {
  return subst_pred_impl(p, env, fresh);
}

PredPtr subst_result(const PredPtr& p, const TermPtr& value) {
  if (!p) return p;
  return std::visit(
      [&](const auto& n) -> PredPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Compare>) {
          auto replace = [&](const TermPtr& t) -> TermPtr {
            // Rebuild the term replacing every ResultTerm leaf.
            std::function<TermPtr(const TermPtr&)> go = [&](const TermPtr& u) -> TermPtr {
              return std::visit(
                  [&](const auto& m) -> TermPtr {
                    using U = std::decay_t<decltype(m)>;
                    if constexpr (std::is_same_v<U, ResultTerm>) {
                      return value;
                    } else if constexpr (std::is_same_v<U, NegTerm>) {
                      TermPtr o = go(m.operand);
                      return o == m.operand ? u : mk_neg(std::move(o), u->span);
                    } else if constexpr (std::is_same_v<U, ArithTerm>) {
                      TermPtr l = go(m.lhs), r = go(m.rhs);
                      return (l == m.lhs && r == m.rhs)
                                 ? u
                                 : mk_arith(m.op, std::move(l), std::move(r), u->span);
                    } else if constexpr (std::is_same_v<U, CallTerm>) {
                      std::vector<TermPtr> args;
                      bool changed = false;
                      for (const auto& a : m.args) {
                        args.push_back(go(a));
                        changed |= args.back() != a;
                      }
                      return changed ? mk_call(m.callee, std::move(args), u->span) : u;
                    } else if constexpr (std::is_same_v<U, LogicApp>) {
                      std::vector<TermPtr> args;
                      bool changed = false;
                      for (const auto& a : m.args) {
                        args.push_back(go(a));
                        changed |= args.back() != a;
                      }
                      return changed ? mk_logic_app(m.fn, std::move(args), u->span) : u;
                    } else {
                      return u;
                    }
                  },
                  u->node);
            };
            return go(t);
          };
          TermPtr l = replace(n.lhs), r = replace(n.rhs);
          return (l == n.lhs && r == n.rhs) ? p : mk_cmp(n.op, std::move(l), std::move(r), p->span);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          PredPtr l = subst_result(n.lhs, value), r = subst_result(n.rhs, value);
          if (l == n.lhs && r == n.rhs) return p;
          return std::make_shared<Pred>(Pred{p->span, BinaryPred{n.op, std::move(l), std::move(r)}});
        } else if constexpr (std::is_same_v<T, NotPred>) {
          PredPtr o = subst_result(n.operand, value);
          return o == n.operand ? p : mk_not(std::move(o));
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          PredPtr body = subst_result(n.body, value);
          return body == n.body ? p : mk_quant(n.quant, n.binders, std::move(body), p->span);
        } else if constexpr (std::is_same_v<T, LabelPred>) {
          PredPtr body = subst_result(n.body, value);
          return body == n.body ? p : mk_label(n.vc_id, n.kind, n.origin, std::move(body));
        } else {
          return p;
        }
      },
      p->node);
}

TermPtr rewrite_calls(const TermPtr& t, const CallRewriteFn& rw) {
  if (!t) return t;
  return std::visit(
      [&](const auto& n) -> TermPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, NegTerm>) {
          TermPtr o = rewrite_calls(n.operand, rw);
          return o == n.operand ? t : mk_neg(std::move(o), t->span);
        } else if constexpr (std::is_same_v<T, ArithTerm>) {
          TermPtr l = rewrite_calls(n.lhs, rw);
          TermPtr r = rewrite_calls(n.rhs, rw);
          return (l == n.lhs && r == n.rhs) ? t : mk_arith(n.op, std::move(l), std::move(r), t->span);
        } else if constexpr (std::is_same_v<T, CallTerm>) {
          std::vector<TermPtr> args;
          args.reserve(n.args.size());
          for (const auto& a : n.args) args.push_back(rewrite_calls(a, rw));
          return rw(n.callee, std::move(args), t->span);
        } else if constexpr (std::is_same_v<T, LogicApp>) {
          std::vector<TermPtr> args;
          args.reserve(n.args.size());
          bool changed = false;
          for (const auto& a : n.args) {
            args.push_back(rewrite_calls(a, rw));
            changed |= args.back() != a;
          }
          return changed ? mk_logic_app(n.fn, std::move(args), t->span) : t;
        } else {
          return t;
        }
      },
      t->node);
}

PredPtr rewrite_calls(const PredPtr& p, const CallRewriteFn& rw) {
  if (!p) return p;
  return std::visit(
      [&](const auto& n) -> PredPtr {
        using T = std::decay_t<decltype(n)>;
        if constexpr (std::is_same_v<T, Compare>) {
          TermPtr l = rewrite_calls(n.lhs, rw);
          TermPtr r = rewrite_calls(n.rhs, rw);
          return (l == n.lhs && r == n.rhs) ? p : mk_cmp(n.op, std::move(l), std::move(r), p->span);
        } else if constexpr (std::is_same_v<T, BinaryPred>) {
          PredPtr l = rewrite_calls(n.lhs, rw);
          PredPtr r = rewrite_calls(n.rhs, rw);
          if (l == n.lhs && r == n.rhs) return p;
          return std::make_shared<Pred>(Pred{p->span, BinaryPred{n.op, std::move(l), std::move(r)}});
        } else if constexpr (std::is_same_v<T, NotPred>) {
          PredPtr o = rewrite_calls(n.operand, rw);
          return o == n.operand ? p : mk_not(std::move(o));
        } else if constexpr (std::is_same_v<T, QuantPred>) {
          PredPtr body = rewrite_calls(n.body, rw);
          return body == n.body ? p : mk_quant(n.quant, n.binders, std::move(body), p->span);
        } else if constexpr (std::is_same_v<T, LabelPred>) {
          PredPtr body = rewrite_calls(n.body, rw);
          return body == n.body ? p : mk_label(n.vc_id, n.kind, n.origin, std::move(body));
        } else {
          return p;
        }
      },
      p->node);
}

}  // namespace relprove
