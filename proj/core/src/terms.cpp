#include "latcomp/terms.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <thread>

#include "latcomp/errors.hpp"

namespace latcomp {

Term Term::variable(std::string name) {
  return Term(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}
Term Term::bot() {
  return Term(std::make_shared<const Node>(Node{Kind::Bot, {}, nullptr, nullptr}));
}
Term Term::top() {
  return Term(std::make_shared<const Node>(Node{Kind::Top, {}, nullptr, nullptr}));
}
Term Term::comp(Term t) {
  return Term(std::make_shared<const Node>(Node{Kind::Comp, {}, std::move(t.node_), nullptr}));
}
Term Term::join(Term a, Term b) {
  return Term(
      std::make_shared<const Node>(Node{Kind::Join, {}, std::move(a.node_), std::move(b.node_)}));
}
Term Term::meet(Term a, Term b) {
  return Term(
      std::make_shared<const Node>(Node{Kind::Meet, {}, std::move(a.node_), std::move(b.node_)}));
}
Term Term::iterated_comp(Term t, int k) {
  if (k < 0) throw BadParams("negative complementation depth");
  for (int i = 0; i < k; ++i) t = Term::comp(std::move(t));
  return t;
}

namespace {

void collect_vars(const Term& t, std::set<std::string>& out) {
  switch (t.kind()) {
    case Term::Kind::Var:
      out.insert(t.var_name());
      break;
    case Term::Kind::Bot:
    case Term::Kind::Top:
      break;
    case Term::Kind::Comp:
      collect_vars(t.left(), out);
      break;
    case Term::Kind::Join:
    case Term::Kind::Meet:
      collect_vars(t.left(), out);
      collect_vars(t.right(), out);
      break;
  }
}

}  // namespace

std::vector<std::string> Term::variables() const {
  std::set<std::string> s;
  collect_vars(*this, s);
  return {s.begin(), s.end()};
}

Term Term::substitute(const std::string& var, const Term& replacement) const {
  switch (kind()) {
    case Kind::Var:
      return var_name() == var ? replacement : *this;
    case Kind::Bot:
    case Kind::Top:
      return *this;
    case Kind::Comp:
      return Term::comp(left().substitute(var, replacement));
    case Kind::Join:
      return Term::join(left().substitute(var, replacement), right().substitute(var, replacement));
    case Kind::Meet:
      return Term::meet(left().substitute(var, replacement), right().substitute(var, replacement));
  }
  throw Error("corrupt term");
}

std::string to_text(const Term& t) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return t.var_name();
    case Term::Kind::Bot:
      return "bot";
    case Term::Kind::Top:
      return "top";
    case Term::Kind::Comp:
      return "(comp " + to_text(t.left()) + ")";
    case Term::Kind::Join:
      return "(join " + to_text(t.left()) + " " + to_text(t.right()) + ")";
    case Term::Kind::Meet:
      return "(meet " + to_text(t.left()) + " " + to_text(t.right()) + ")";
  }
  throw Error("corrupt term");
}

namespace {

struct Parser {
  const std::string& s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  static bool symbol_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '-' || c == '\'';
  }

  std::string symbol() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && symbol_char(s[pos])) ++pos;
    if (pos == start) throw SyntaxError("expected a symbol", start);
    return s.substr(start, pos - start);
  }

  void expect(char c) {
    skip_ws();
    if (pos >= s.size() || s[pos] != c)
      throw SyntaxError(std::string("expected '") + c + "'", pos);
    ++pos;
  }

  Term term() {
    skip_ws();
    if (pos >= s.size()) throw SyntaxError("unexpected end of input", pos);
    if (s[pos] == '(') {
      ++pos;
      std::size_t op_pos = pos;
      std::string op = symbol();
      if (op == "comp") {
        Term t = term();
        expect(')');
        return Term::comp(std::move(t));
      }
      if (op == "join" || op == "meet") {
        Term a = term();
        Term b = term();
        expect(')');
        return op == "join" ? Term::join(std::move(a), std::move(b))
                            : Term::meet(std::move(a), std::move(b));
      }
      throw SyntaxError("unknown operator '" + op + "'", op_pos);
    }
    std::size_t sym_pos = pos;
    std::string sym = symbol();
    if (sym == "bot") return Term::bot();
    if (sym == "top") return Term::top();
    if (sym == "join" || sym == "meet" || sym == "comp")
      throw SyntaxError("operator '" + sym + "' outside parentheses", sym_pos);
    return Term::variable(sym);
  }
};

}  // namespace

Term parse_term(const std::string& text) {
  Parser p{text};
  Term t = p.term();
  p.skip_ws();
  if (p.pos != text.size()) throw SyntaxError("trailing input", p.pos);
  return t;
}

namespace {

int eval_rec(const CompLattice& a, const Term& t, const std::map<std::string, int>& asg) {
  switch (t.kind()) {
    case Term::Kind::Var:
      return asg.at(t.var_name());
    case Term::Kind::Bot:
      return a.bottom();
    case Term::Kind::Top:
      return a.top();
    case Term::Kind::Comp:
      return a.comp(eval_rec(a, t.left(), asg));
    case Term::Kind::Join: {
      int l = eval_rec(a, t.left(), asg);
      if (l == a.top()) return l;
      return a.join(l, eval_rec(a, t.right(), asg));
    }
    case Term::Kind::Meet: {
      int l = eval_rec(a, t.left(), asg);
      if (l == a.bottom()) return l;
      return a.meet(l, eval_rec(a, t.right(), asg));
    }
  }
  throw Error("corrupt term");
}

}  // namespace

int eval_term(const CompLattice& a, const Term& t, const std::map<std::string, int>& assignment) {
  for (const auto& v : t.variables()) {
    auto it = assignment.find(v);
    if (it == assignment.end()) throw UnboundVariable(v);
    if (it->second < 0 || it->second >= a.size())
      throw InputError("assignment value out of range for '" + v + "'");
  }
  return eval_rec(a, t, assignment);
}

Formula::Formula(std::string name, std::vector<Clause> clauses)
    : name_(std::move(name)), clauses_(std::move(clauses)) {
  std::set<std::string> s;
  for (const auto& c : clauses_) {
    for (const auto& p : c.premises) {
      collect_vars(p.lhs, s);
      collect_vars(p.rhs, s);
    }
    collect_vars(c.conclusion.lhs, s);
    collect_vars(c.conclusion.rhs, s);
  }
  vars_.assign(s.begin(), s.end());
}

Formula Formula::identity(std::string name, Term lhs, Term rhs) {
  return Formula(std::move(name), {Clause{{}, TermIdentity{std::move(lhs), std::move(rhs)}}});
}

Formula Formula::inequality(std::string name, Term lhs, Term rhs) {
  Term l2 = lhs;
  return Formula(std::move(name),
                 {Clause{{}, TermIdentity{lhs, Term::meet(std::move(l2), std::move(rhs))}}});
}

Formula Formula::quasi(std::string name, std::vector<TermIdentity> premises, TermIdentity conclusion) {
  return Formula(std::move(name), {Clause{std::move(premises), std::move(conclusion)}});
}

// ----- exhaustive checking -----

namespace {

// Flattened term with variable slots; evaluation short-circuits meets at
// bottom and joins at top.
struct Compiled {
  struct CNode {
    Term::Kind kind;
    int a = -1, b = -1;
    int slot = -1;
  };
  std::vector<CNode> nodes;
  int root = -1;
};

int compile_node(const Term& t, const std::vector<std::string>& vars, Compiled& out) {
  Compiled::CNode n;
  n.kind = t.kind();
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = std::lower_bound(vars.begin(), vars.end(), t.var_name());
      n.slot = static_cast<int>(it - vars.begin());
      break;
    }
    case Term::Kind::Bot:
    case Term::Kind::Top:
      break;
    case Term::Kind::Comp:
      n.a = compile_node(t.left(), vars, out);
      break;
    case Term::Kind::Join:
    case Term::Kind::Meet:
      n.a = compile_node(t.left(), vars, out);
      n.b = compile_node(t.right(), vars, out);
      break;
  }
  out.nodes.push_back(n);
  return static_cast<int>(out.nodes.size()) - 1;
}

Compiled compile(const Term& t, const std::vector<std::string>& vars) {
  Compiled c;
  c.root = compile_node(t, vars, c);
  return c;
}

int ceval(const Compiled& c, int i, const CompLattice& a, const int* asg) {
  const auto& n = c.nodes[i];
  switch (n.kind) {
    case Term::Kind::Var:
      return asg[n.slot];
    case Term::Kind::Bot:
      return a.bottom();
    case Term::Kind::Top:
      return a.top();
    case Term::Kind::Comp:
      return a.comp(ceval(c, n.a, a, asg));
    case Term::Kind::Join: {
      int l = ceval(c, n.a, a, asg);
      if (l == a.top()) return l;
      return a.join(l, ceval(c, n.b, a, asg));
    }
    case Term::Kind::Meet: {
      int l = ceval(c, n.a, a, asg);
      if (l == a.bottom()) return l;
      return a.meet(l, ceval(c, n.b, a, asg));
    }
  }
  return 0;
}

struct CompiledClause {
  std::vector<std::pair<Compiled, Compiled>> premises;
  std::pair<Compiled, Compiled> conclusion;
};

struct Hit {
  unsigned long long index;
  int clause;
};

}  // namespace

FormulaCheck check_formula(const CompLattice& a, const Formula& f, const CheckOptions& opts) {
  const auto& vars = f.variables();
  const int v = static_cast<int>(vars.size());
  const int n = a.size();

  unsigned __int128 total = 1;
  for (int i = 0; i < v; ++i) {
    total *= static_cast<unsigned>(n);
    if (total > opts.budget)
      throw BudgetExceeded("formula '" + f.name() + "' needs " + std::to_string(n) + "^" +
                           std::to_string(v) + " evaluations, over the budget of " +
                           std::to_string(opts.budget));
  }
  const auto count = static_cast<unsigned long long>(total);

  std::vector<CompiledClause> clauses;
  clauses.reserve(f.clauses().size());
  for (const auto& cl : f.clauses()) {
    CompiledClause cc;
    for (const auto& p : cl.premises)
      cc.premises.emplace_back(compile(p.lhs, vars), compile(p.rhs, vars));
    cc.conclusion = {compile(cl.conclusion.lhs, vars), compile(cl.conclusion.rhs, vars)};
    clauses.push_back(std::move(cc));
  }

  auto scan = [&](unsigned long long lo, unsigned long long hi) -> std::vector<Hit> {
    std::vector<int> asg(std::max(v, 1), 0);
    unsigned long long rem = lo;
    for (int i = v - 1; i >= 0; --i) {
      asg[i] = static_cast<int>(rem % n);
      rem /= n;
    }
    for (unsigned long long idx = lo; idx < hi; ++idx) {
      for (std::size_t c = 0; c < clauses.size(); ++c) {
        const auto& cc = clauses[c];
        bool premises_hold = true;
        for (const auto& p : cc.premises) {
          if (ceval(p.first, p.first.root, a, asg.data()) !=
              ceval(p.second, p.second.root, a, asg.data())) {
            premises_hold = false;
            break;
          }
        }
        if (!premises_hold) continue;
        if (ceval(cc.conclusion.first, cc.conclusion.first.root, a, asg.data()) !=
            ceval(cc.conclusion.second, cc.conclusion.second.root, a, asg.data()))
          return {Hit{idx, static_cast<int>(c)}};
      }
      // odometer step, least significant digit is the last variable
      for (int i = v - 1; i >= 0; --i) {
        if (++asg[i] < n) break;
        asg[i] = 0;
      }
    }
    return {};
  };

  std::vector<Hit> hits;
  if (opts.jobs <= 1 || count < 1024) {
    hits = scan(0, count);
  } else {
    const int jobs = opts.jobs;
    std::vector<std::vector<Hit>> results(jobs);
    std::vector<std::thread> threads;
    const unsigned long long chunk = (count + jobs - 1) / jobs;
    for (int j = 0; j < jobs; ++j) {
      unsigned long long lo = chunk * j;
      unsigned long long hi = std::min(count, lo + chunk);
      if (lo >= hi) continue;
      threads.emplace_back([&, j, lo, hi] { results[j] = scan(lo, hi); });
    }
    for (auto& t : threads) t.join();
    for (const auto& r : results)
      for (const auto& h : r)
        if (hits.empty() || h.index < hits.front().index) hits = {h};
  }

  FormulaCheck res;
  if (hits.empty()) return res;
  res.holds = false;
  res.failed_clause = hits.front().clause;
  unsigned long long rem = hits.front().index;
  std::vector<int> digits(v, 0);
  for (int i = v - 1; i >= 0; --i) {
    digits[i] = static_cast<int>(rem % n);
    rem /= n;
  }
  for (int i = 0; i < v; ++i) res.assignment.emplace_back(vars[i], digits[i]);
  return res;
}

// ----- named terms -----

namespace {

Term x() { return Term::variable("x"); }
Term y() { return Term::variable("y"); }
Term z() { return Term::variable("z"); }
Term u() { return Term::variable("u"); }
Term J(Term a, Term b) { return Term::join(std::move(a), std::move(b)); }
Term M(Term a, Term b) { return Term::meet(std::move(a), std::move(b)); }
Term C(Term a) { return Term::comp(std::move(a)); }

}  // namespace

Term tau_term(int n) {
  if (n < 3) throw BadParams("tau_n requires n >= 3");
  Term acc = J(x(), Term::iterated_comp(x(), 2));
  for (int k = 3; k < n; ++k) acc = M(std::move(acc), J(x(), Term::iterated_comp(x(), k)));
  return acc;
}

Term symdiff_term() { return J(M(C(x()), y()), M(x(), C(y()))); }
Term oplus_term() { return M(J(x(), y()), C(M(x(), y()))); }
Term odot_term() { return J(M(x(), y()), C(J(x(), y()))); }

Term pixley_p_term() {
  return J(J(M(M(x(), y()), z()), M(x(), C(M(x(), y())))), M(z(), C(M(z(), y()))));
}

Term pixley_q_term() {
  return M(M(J(J(x(), y()), z()), J(x(), C(J(x(), y())))), J(z(), C(J(z(), y()))));
}

Term discriminator_term(int n, bool use_symdiff) {
  Term diff = use_symdiff ? symdiff_term() : oplus_term();
  Term tau = tau_term(n).substitute("x", diff);
  Term tau2 = tau;
  return J(M(std::move(tau), x()), M(C(std::move(tau2)), z()));
}

namespace {

std::string canonical_name(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char c) { return static_cast<char>(std::toupper(c)); });
  return s;
}

int the_param(const std::string& name, const std::vector<int>& params, int lower) {
  if (params.size() != 1)
    throw BadParams("formula '" + name + "' takes exactly one integer parameter");
  if (params[0] < lower)
    throw BadParams("formula '" + name + "' requires n >= " + std::to_string(lower));
  return params[0];
}

Formula mn_formula(int n) {
  std::vector<Term> xs;
  for (int i = 0; i <= n; ++i) xs.push_back(Term::variable("x" + std::to_string(i)));
  Term lhs = xs[0];
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) lhs = M(std::move(lhs), J(xs[i], xs[j]));
  Term rhs = M(xs[0], xs[1]);
  for (int i = 2; i <= n; ++i) rhs = J(std::move(rhs), M(xs[0], xs[i]));
  return Formula::inequality("M" + std::to_string(n), std::move(lhs), std::move(rhs));
}

Formula tn_formula(int n) {
  Term tau = tau_term(n).substitute("x", y());
  Term tau2 = tau;
  return Formula::identity("T" + std::to_string(n), M(x(), J(std::move(tau), z())),
                           J(M(x(), tau2), M(x(), z())));
}

}  // namespace

Formula builtin_formula(const std::string& name, const std::vector<int>& params) {
  const std::string id = canonical_name(name);
  auto no_params = [&] {
    if (!params.empty()) throw BadParams("formula '" + name + "' takes no parameters");
  };

  if (id == "W") {
    no_params();
    return Formula::quasi("W", {{M(C(x()), y()), Term::bot()}, {M(x(), C(y())), Term::bot()}},
                          {x(), y()});
  }
  if (id == "W+" || id == "WPLUS") {
    no_params();
    return Formula::quasi("W+", {{symdiff_term(), Term::bot()}}, {x(), y()});
  }
  if (id == "EQ2") {
    no_params();
    return Formula("EQ2", {Clause{{{M(x(), C(y())), Term::bot()}}, {x(), M(x(), y())}}});
  }
  if (id == "DM") {
    no_params();
    return Formula("DM", {Clause{{}, {C(J(x(), y())), M(C(x()), C(y()))}},
                          Clause{{}, {C(M(x(), y())), J(C(x()), C(y()))}}});
  }
  if (id == "WOML") {
    no_params();
    return Formula::quasi("WOML", {{x(), M(x(), y())}}, {J(x(), M(C(x()), y())), y()});
  }
  if (id == "DWOML") {
    no_params();
    return Formula::quasi("DWOML", {{y(), M(x(), y())}}, {M(x(), J(C(x()), y())), y()});
  }
  if (id == "WOML-ID") {
    no_params();
    return Formula::identity("WOML-ID", J(x(), M(C(M(x(), y())), y())), J(x(), y()));
  }
  if (id == "DWOML-ID") {
    no_params();
    return Formula::identity("DWOML-ID", M(x(), J(C(J(x(), y())), y())), M(x(), y()));
  }
  if (id == "WOML+" || id == "WOMLPLUS") {
    no_params();
    return Formula::quasi("WOML+", {{C(x()), M(C(x()), y())}}, {J(C(x()), M(x(), y())), y()});
  }
  if (id == "DWOML+" || id == "DWOMLPLUS") {
    no_params();
    return Formula::quasi("DWOML+", {{y(), M(C(x()), y())}}, {M(C(x()), J(x(), y())), y()});
  }
  if (id == "MN") return mn_formula(the_param(name, params, 2));
  if (id == "M3") {
    no_params();
    Term lhs = M(M(M(u(), J(x(), y())), J(x(), z())), J(y(), z()));
    Term rhs = J(J(M(u(), x()), M(u(), y())), M(u(), z()));
    return Formula::inequality("M3", std::move(lhs), std::move(rhs));
  }
  if (id == "JO") {
    no_params();
    Term lhs = M(M(u(), J(x(), M(y(), z()))), J(y(), z()));
    Term rhs = J(J(x(), M(u(), y())), M(u(), z()));
    return Formula::inequality("jo", std::move(lhs), std::move(rhs));
  }
  if (id == "TN") return tn_formula(the_param(name, params, 3));
  if (id == "EXX") {
    no_params();
    Term t = J(x(), Term::iterated_comp(x(), 2));
    return Formula::identity("EXX", Term::iterated_comp(t, 2), t);
  }
  if (id == "ATAU") {
    int n = the_param(name, params, 3);
    Term t = tau_term(n);
    return Formula::identity("ATAU" + std::to_string(n), Term::iterated_comp(t, 2), t);
  }
  if (id == "PIXLEY-P") {
    no_params();
    Term p = pixley_p_term();
    return Formula("PIXLEY-P",
                   {Clause{{}, {p.substitute("z", y()), x()}},
                    Clause{{}, {p.substitute("z", x()), x()}},
                    Clause{{}, {p.substitute("x", y()).substitute("z", x()), x()}}});
  }
  if (id == "PIXLEY-Q") {
    no_params();
    Term q = pixley_q_term();
    return Formula("PIXLEY-Q",
                   {Clause{{}, {q.substitute("z", y()), x()}},
                    Clause{{}, {q.substitute("z", x()), x()}},
                    Clause{{}, {q.substitute("x", y()).substitute("z", x()), x()}}});
  }
  if (id == "REG-D") {
    no_params();
    Term d = oplus_term();
    return Formula("REG-D", {Clause{{{d, Term::bot()}}, {x(), y()}},
                             Clause{{}, {d.substitute("y", x()), Term::bot()}}});
  }
  if (id == "REG-DD") {
    no_params();
    Term d = odot_term();
    return Formula("REG-DD", {Clause{{{d, Term::top()}}, {x(), y()}},
                              Clause{{}, {d.substitute("y", x()), Term::top()}}});
  }
  if (id == "PENTA-II") {
    no_params();
    return Formula::quasi("PENTA-II", {{x(), M(x(), y())}, {C(x()), C(y())}}, {x(), y()});
  }
  throw UnknownFormula(name);
}

std::vector<std::string> builtin_formula_names() {
  return {"W",     "W+",       "EQ2",      "DM",    "WOML",     "DWOML",    "WOML-ID",
          "DWOML-ID", "WOML+", "DWOML+",   "Mn",    "M3",       "jo",       "Tn",
          "EXX",   "ATAU",     "PIXLEY-P", "PIXLEY-Q", "REG-D", "REG-DD",   "PENTA-II"};
}

}  // namespace latcomp
