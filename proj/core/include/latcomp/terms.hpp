#pragma once

#include <map>
#include <memory>
#include <string>
#include <utility>
#include <vector>

#include "latcomp/algebra.hpp"

namespace latcomp {

/// Immutable term tree over the signature (join, meet, comp, bot, top).
class Term {
 public:
  enum class Kind { Var, Bot, Top, Comp, Join, Meet };

  static Term variable(std::string name);
  static Term bot();
  static Term top();
  static Term comp(Term t);
  static Term join(Term a, Term b);
  static Term meet(Term a, Term b);
  /// k-fold complementation; k = 0 returns t itself.
  static Term iterated_comp(Term t, int k);

  Kind kind() const { return node_->kind; }
  const std::string& var_name() const { return node_->name; }
  Term left() const { return Term(node_->left); }
  Term right() const { return Term(node_->right); }

  /// Sorted distinct variable names.
  std::vector<std::string> variables() const;
  /// Capture-free substitution of a variable by a term.
  Term substitute(const std::string& var, const Term& replacement) const;

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::shared_ptr<const Node> left, right;
  };
  Term() = default;
  explicit Term(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Prefix s-expression, e.g. "(join x (comp x))".
std::string to_text(const Term& t);
/// Parses the prefix s-expression form; throws SyntaxError with position.
Term parse_term(const std::string& text);

/// Evaluates t in the algebra under the given assignment.
int eval_term(const CompLattice& a, const Term& t, const std::map<std::string, int>& assignment);

struct TermIdentity {
  Term lhs, rhs;
};

/// One implication: premises (identities) jointly entail the conclusion.
struct Clause {
  std::vector<TermIdentity> premises;
  TermIdentity conclusion;
};

/// A named conjunction of clauses over a shared variable space. A plain
/// identity is a single clause with no premises; an inequality s <= t is
/// sugar for s = s ^ t; a quasi-identity is a single clause with premises.
class Formula {
 public:
  Formula(std::string name, std::vector<Clause> clauses);

  const std::string& name() const { return name_; }
  const std::vector<Clause>& clauses() const { return clauses_; }
  /// Sorted distinct variable names over all clauses.
  const std::vector<std::string>& variables() const { return vars_; }

  static Formula identity(std::string name, Term lhs, Term rhs);
  static Formula inequality(std::string name, Term lhs, Term rhs);
  static Formula quasi(std::string name, std::vector<TermIdentity> premises, TermIdentity conclusion);

 private:
  std::string name_;
  std::vector<Clause> clauses_;
  std::vector<std::string> vars_;
};

struct FormulaCheck {
  bool holds = true;
  int failed_clause = -1;
  /// Lexicographically least counterexample, (variable, element) pairs in
  /// variable order. For a quasi-identity it satisfies all premises and
  /// violates the conclusion.
  std::vector<std::pair<std::string, int>> assignment;
  explicit operator bool() const { return holds; }
};

struct CheckOptions {
  unsigned long long budget = 1'000'000'000ULL;  // max assignments
  int jobs = 1;
};

/// Exhaustive check over all assignments, enumerated in mixed-radix order
/// over the alphabetically sorted variables. The verdict is bit-identical
/// for any number of jobs.
FormulaCheck check_formula(const CompLattice& a, const Formula& f, const CheckOptions& opts = {});

/// The registry of named formulas. Parameterized names (Mn, Tn, ATAU)
/// take their parameter from `params`.
Formula builtin_formula(const std::string& name, const std::vector<int>& params = {});
std::vector<std::string> builtin_formula_names();

/// tau_n(x), the meet of x v x^(k) for k = 2..n-1; requires n >= 3.
Term tau_term(int n);
/// x + y = (x' ^ y) v (x ^ y')
Term symdiff_term();
/// x (+) y = (x v y) ^ (x ^ y)'
Term oplus_term();
/// x (.) y = (x ^ y) v (x v y)'
Term odot_term();
/// Ternary terms in variables x, y, z.
Term pixley_p_term();
Term pixley_q_term();
/// Discriminator-style term for the width-n cyclic algebras; with
/// use_symdiff the difference term is x + y instead of x (+) y.
Term discriminator_term(int n, bool use_symdiff = false);

}  // namespace latcomp
