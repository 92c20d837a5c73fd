#ifndef RELPROVE_AST_HPP
#define RELPROVE_AST_HPP

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "relprove/diagnostics.hpp"

// AST of the RelC mini language. The only value type is the unbounded
// mathematical integer, so types are never stored; arity is all that matters.
// Nodes are immutable and shared: rewrites build new spines over old subtrees.
// Structural equality and printing ignore spans.

namespace relprove {

// ---------------------------------------------------------------- terms ----

struct Term;
using TermPtr = std::shared_ptr<const Term>;

enum class ArithOp { Add, Sub, Mul, Div, Mod };
enum class CmpOp { Eq, Ne, Lt, Le, Gt, Ge };

// Canonical decimal digits, no sign, no leading zeros ("0" for zero).
struct IntLit {
  std::string digits;
};

struct VarRef {
  std::string name;
};

struct NegTerm {
  TermPtr operand;
};

struct ArithTerm {
  ArithOp op;
  TermPtr lhs;
  TermPtr rhs;
};

// In program code: a direct call f(args). In annotations: \call(f, args),
// legal only inside relational property bodies.
struct CallTerm {
  std::string callee;
  std::vector<TermPtr> args;
};

// \result, legal only inside ensures clauses.
struct ResultTerm {};

// Application of a declared logic function, e.g. f1_acsl(x).
struct LogicApp {
  std::string fn;
  std::vector<TermPtr> args;
};

struct Term {
  Span span;
  std::variant<IntLit, VarRef, NegTerm, ArithTerm, CallTerm, ResultTerm,
               LogicApp>
      node;
};

// ----------------------------------------------------------- predicates ----

struct Pred;
using PredPtr = std::shared_ptr<const Pred>;

enum class Connective { And, Or, Implies };
enum class Quantifier { Forall, Exists };

struct BoolLit {
  bool value;
};

struct Compare {
  CmpOp op;
  TermPtr lhs;
  TermPtr rhs;
};

struct BinaryPred {
  Connective op;
  PredPtr lhs;
  PredPtr rhs;
};

struct NotPred {
  PredPtr operand;
};

struct QuantPred {
  Quantifier quant;
  std::vector<std::string> binders;
  PredPtr body;
};

// Internal marker produced by the WP pass: tags the subformula that is the
// goal of one proof obligation. Never produced by the parser and never
// printed; the VC splitter consumes it.
struct LabelPred {
  std::string vc_id;
  int kind = 0;  // holds a VcKind, kept as int to avoid a header cycle
  Span origin;
  PredPtr body;
};

struct Pred {
  Span span;
  std::variant<BoolLit, Compare, BinaryPred, NotPred, QuantPred, LabelPred>
      node;
};

// ------------------------------------------------------------ statements ----

struct Stmt;
using StmtPtr = std::shared_ptr<const Stmt>;

struct DeclStmt {
  std::string name;
  TermPtr init;  // null for "int x;"
};

struct AssignStmt {
  std::string name;
  TermPtr value;
};

struct IfStmt {
  PredPtr cond;  // restricted to a comparison by typecheck
  StmtPtr then_branch;
  StmtPtr else_branch;  // null when absent
};

struct WhileStmt {
  std::vector<PredPtr> invariants;  // may be empty after parsing; vcgen insists
  PredPtr cond;
  StmtPtr body;
};

struct ReturnStmt {
  TermPtr value;
};

struct AssertStmt {
  PredPtr pred;
};

struct BlockStmt {
  std::vector<StmtPtr> stmts;
};

struct Stmt {
  Span span;
  std::variant<DeclStmt, AssignStmt, IfStmt, WhileStmt, ReturnStmt, AssertStmt,
               BlockStmt>
      node;
};

// ---------------------------------------------------- contracts, functions ----

struct Binder {
  std::string name;
  Span span;
};

// relational <name>: \forall int b1, ..., bn; body;
struct RelationalProperty {
  std::string name;
  std::vector<Binder> binders;
  PredPtr body;  // free variables must be binders; contains >= 1 CallTerm
  Span span;
};

inline constexpr const char* kBridgeBehavior = "bridge_acsl";

struct EnsuresClause {
  PredPtr pred;
  std::string behavior;  // empty string = default behavior
  Span span;

  bool is_bridge() const { return behavior == kBridgeBehavior; }
};

struct Contract {
  std::vector<PredPtr> requires_clauses;
  std::vector<EnsuresClause> ensures_clauses;
  bool assigns_nothing = false;
  std::vector<RelationalProperty> relational;

  bool empty() const {
    return requires_clauses.empty() && ensures_clauses.empty() &&
           !assigns_nothing && relational.empty();
  }
};

struct FunctionDef {
  std::string name;
  std::vector<std::string> params;  // all of type int
  std::optional<BlockStmt> body;    // nullopt: prototype-only declaration
  Contract contract;
  Span span;

  bool has_body() const { return body.has_value(); }
};

// ------------------------------------------------------ logic declarations ----

struct LogicFunction {
  std::string name;
  std::vector<std::string> params;  // names kept for printing; arity is what counts

  std::size_t arity() const { return params.size(); }
};

struct Lemma {
  std::string name;
  PredPtr body;                 // closed; contains no CallTerm
  std::string origin_property;  // property id this lemma restates; "" if user-written
};

using LogicDecl = std::variant<LogicFunction, Lemma>;

// ---------------------------------------------------------------- program ----

struct Program {
  std::vector<LogicDecl> logic_decls;
  std::vector<FunctionDef> functions;

  const FunctionDef* find_function(std::string_view name) const;
  const LogicFunction* find_logic_function(std::string_view name) const;
  const Lemma* find_lemma(std::string_view name) const;
  // Index of a function in declaration order, or npos.
  std::size_t function_index(std::string_view name) const;

  static constexpr std::size_t npos = static_cast<std::size_t>(-1);
};

// ------------------------------------------------------------ constructors ----

TermPtr mk_int(long long v);
TermPtr mk_int(std::string digits, Span span = {});
TermPtr mk_var(std::string name, Span span = {});
TermPtr mk_neg(TermPtr t, Span span = {});
TermPtr mk_arith(ArithOp op, TermPtr l, TermPtr r, Span span = {});
TermPtr mk_call(std::string callee, std::vector<TermPtr> args, Span span = {});
TermPtr mk_result(Span span = {});
TermPtr mk_logic_app(std::string fn, std::vector<TermPtr> args, Span span = {});

PredPtr mk_bool(bool v, Span span = {});
PredPtr mk_cmp(CmpOp op, TermPtr l, TermPtr r, Span span = {});
PredPtr mk_and(PredPtr l, PredPtr r);
PredPtr mk_or(PredPtr l, PredPtr r);
PredPtr mk_implies(PredPtr l, PredPtr r);
PredPtr mk_not(PredPtr p);
PredPtr mk_quant(Quantifier q, std::vector<std::string> binders, PredPtr body,
                 Span span = {});
PredPtr mk_label(std::string vc_id, int kind, Span origin, PredPtr body);
// Conjunction of a clause list; \true when empty.
PredPtr mk_conj(const std::vector<PredPtr>& ps);

StmtPtr mk_decl(std::string name, TermPtr init, Span span = {});
StmtPtr mk_assign(std::string name, TermPtr value, Span span = {});
StmtPtr mk_if(PredPtr cond, StmtPtr then_b, StmtPtr else_b, Span span = {});
StmtPtr mk_while(std::vector<PredPtr> invs, PredPtr cond, StmtPtr body,
                 Span span = {});
StmtPtr mk_return(TermPtr value, Span span = {});
StmtPtr mk_assert(PredPtr pred, Span span = {});
StmtPtr mk_block(std::vector<StmtPtr> stmts, Span span = {});

// ------------------------------------------------------ structural equality ----

bool equal(const TermPtr& a, const TermPtr& b);
bool equal(const PredPtr& a, const PredPtr& b);
bool equal(const StmtPtr& a, const StmtPtr& b);
bool equal(const Contract& a, const Contract& b);
bool equal(const FunctionDef& a, const FunctionDef& b);
bool equal(const LogicDecl& a, const LogicDecl& b);
bool equal(const Program& a, const Program& b);

// --------------------------------------------------------------- traversal ----

// Free variables (VarRef names not captured by a quantifier).
void free_vars(const TermPtr& t, std::set<std::string>& out);
void free_vars(const PredPtr& p, std::set<std::string>& out);
std::set<std::string> free_vars(const PredPtr& p);

// Every identifier introduced or referenced anywhere in the program:
// function names, params, locals, binders, quantified vars, logic names.
std::set<std::string> collect_identifiers(const Program& program);

// Depth-first visit of every term inside a predicate (pre-order).
void visit_terms(const PredPtr& p, const std::function<void(const TermPtr&)>& f);
void visit_terms(const TermPtr& t, const std::function<void(const TermPtr&)>& f);

bool contains_call_term(const PredPtr& p);
bool contains_label(const PredPtr& p);

// ------------------------------------------------------------- substitution ----

// Capture-avoiding substitution of variables by terms. When a quantifier
// binder collides with a free variable of a replacement, the binder is
// alpha-renamed using `fresh` (name -> unused name).
using FreshNameFn = std::function<std::string(const std::string&)>;

TermPtr subst_term(const TermPtr& t,
                   const std::vector<std::pair<std::string, TermPtr>>& env);
PredPtr subst_pred(const PredPtr& p,
                   const std::vector<std::pair<std::string, TermPtr>>& env,
                   const FreshNameFn& fresh);
// Replace every ResultTerm by `value`.
PredPtr subst_result(const PredPtr& p, const TermPtr& value);

// Bottom-up rewrite of CallTerms: `rw` receives the callee, the already
// rewritten argument list and the original span, and returns the replacement.
// Call sites are visited left-to-right, innermost first.
using CallRewriteFn = std::function<TermPtr(
    const std::string& callee, std::vector<TermPtr> args, Span span)>;
TermPtr rewrite_calls(const TermPtr& t, const CallRewriteFn& rw);
PredPtr rewrite_calls(const PredPtr& p, const CallRewriteFn& rw);

}  // namespace relprove

#endif
