#include "unifint/terms.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace unifint {

Signature::Signature(std::string name, std::vector<OpSym> ops,
                     bool allow_no_constants)
    : name_(std::move(name)), ops_(std::move(ops)) {
  std::set<std::string> seen;
  for (const auto& op : ops_) {
    if (op.arity < 0) throw std::invalid_argument("negative arity: " + op.symbol);
    if (!seen.insert(op.symbol).second)
      throw std::invalid_argument("duplicate operation symbol: " + op.symbol);
  }
  if (!allow_no_constants && !has_constant())
    throw std::invalid_argument(
        "signature '" + name_ +
        "' has no constant symbol (pass allow_no_constants to override)");
}

int Signature::index_of(const std::string& sym) const {
  for (size_t i = 0; i < ops_.size(); ++i)
    if (ops_[i].symbol == sym) return static_cast<int>(i);
  return -1;
}

bool Signature::has_constant() const {
  return std::any_of(ops_.begin(), ops_.end(),
                     [](const OpSym& o) { return o.arity == 0; });
}

void Signature::require_constant(const std::string& what) const {
  if (!has_constant())
    throw std::runtime_error(what + " requires a signature with a constant symbol");
}

Term Term::variable(std::string name) {
  Term t;
  t.head = std::move(name);
  t.var = true;
  return t;
}

Term Term::app(std::string sym, std::vector<Term> children) {
  Term t;
  t.head = std::move(sym);
  t.args = std::move(children);
  return t;
}

bool Term::operator<(const Term& other) const {
  if (var != other.var) return var && !other.var;
  if (head != other.head) return head < other.head;
  return args < other.args;
}

std::string to_string(const Term& t) {
  if (t.var || t.args.empty()) return t.head;
  std::string out = t.head + "(";
  for (size_t i = 0; i < t.args.size(); ++i) {
    if (i) out += ", ";
    out += to_string(t.args[i]);
  }
  return out + ")";
}

void check_term(const Term& t, const Signature& sig,
                const std::set<std::string>& vars) {
  if (t.var) {
    if (!vars.count(t.head))
      throw std::runtime_error("undeclared variable: " + t.head);
    if (sig.index_of(t.head) >= 0)
      throw std::runtime_error("identifier clashes with operation symbol: " +
                               t.head);
    return;
  }
  int op = sig.index_of(t.head);
  if (op < 0) throw std::runtime_error("unknown symbol: " + t.head);
  if (static_cast<int>(t.args.size()) != sig.arity(op))
    throw std::runtime_error("arity mismatch for '" + t.head + "': expected " +
                             std::to_string(sig.arity(op)) + ", got " +
                             std::to_string(t.args.size()));
  for (const auto& a : t.args) check_term(a, sig, vars);
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.var) {
    if (std::find(out.begin(), out.end(), t.head) == out.end())
      out.push_back(t.head);
    return;
  }
  for (const auto& a : t.args) collect_variables(a, out);
}

namespace {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  }
  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }
  void expect(char c) {
    skip_ws();
    if (pos >= text.size() || text[pos] != c)
      throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  std::string ident() {
    skip_ws();
    size_t start = pos;
    auto head = [](char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; };
    auto body = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; };
    if (pos >= text.size() || !head(text[pos]))
      throw ParseError("expected identifier", pos);
    while (pos < text.size() && body(text[pos])) ++pos;
    return text.substr(start, pos - start);
  }
};

Term parse_rec(Lexer& lx, const Signature& sig,
               const std::set<std::string>& vars) {
  size_t at = lx.pos;
  std::string name = lx.ident();
  int op = sig.index_of(name);
  if (lx.peek() == '(') {
    if (op < 0) throw ParseError("unknown symbol: " + name, at);
    lx.expect('(');
    std::vector<Term> args;
    if (lx.peek() != ')') {
      args.push_back(parse_rec(lx, sig, vars));
      while (lx.peek() == ',') {
        lx.expect(',');
        args.push_back(parse_rec(lx, sig, vars));
      }
    }
    lx.expect(')');
    if (static_cast<int>(args.size()) != sig.arity(op))
      throw ParseError("arity mismatch for '" + name + "': expected " +
                           std::to_string(sig.arity(op)) + ", got " +
                           std::to_string(args.size()),
                       at);
    return Term::app(name, std::move(args));
  }
  if (op >= 0) {
    if (sig.arity(op) != 0)
      throw ParseError("arity mismatch for '" + name + "': expected " +
                           std::to_string(sig.arity(op)) + ", got 0",
                       at);
    return Term::app(name);
  }
  if (!vars.count(name)) throw ParseError("unknown symbol: " + name, at);
  return Term::variable(name);
}

}  // namespace

Term parse_term(const std::string& text, const Signature& sig,
                const std::set<std::string>& vars) {
  for (const auto& v : vars)
    if (sig.index_of(v) >= 0)
      throw ParseError("variable clashes with operation symbol: " + v, 0);
  Lexer lx{text};
  Term t = parse_rec(lx, sig, vars);
  if (!lx.at_end()) throw ParseError("trailing input", lx.pos);
  return t;
}

std::string to_string(const Equation& e) {
  return to_string(e.lhs) + " = " + to_string(e.rhs);
}

void EquationSet::check(const Signature& sig) const {
  std::set<std::string> declared(vars.begin(), vars.end());
  for (const auto& e : equations) {
    check_term(e.lhs, sig, declared);
    check_term(e.rhs, sig, declared);
  }
}

EquationSet parse_equation_set(const std::string& text, const Signature& sig) {
  EquationSet es;
  std::istringstream in(text);
  std::string line;
  bool have_vars = false;
  size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (!have_vars) {
      if (line.compare(first, 5, "vars:") != 0)
        throw ParseError("expected 'vars:' header line", lineno);
      std::string rest = line.substr(first + 5);
      std::string cur;
      for (char c : rest + ",") {
        if (c == ',') {
          auto b = cur.find_first_not_of(" \t\r");
          auto e = cur.find_last_not_of(" \t\r");
          if (b != std::string::npos)
            es.vars.push_back(cur.substr(b, e - b + 1));
          cur.clear();
        } else {
          cur += c;
        }
      }
      have_vars = true;
      continue;
    }
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ParseError("expected 'lhs = rhs' on line " + std::to_string(lineno),
                       lineno);
    std::set<std::string> declared(es.vars.begin(), es.vars.end());
    Term lhs = parse_term(line.substr(0, eq), sig, declared);
    Term rhs = parse_term(line.substr(eq + 1), sig, declared);
    es.equations.push_back({std::move(lhs), std::move(rhs)});
  }
  if (!have_vars) throw ParseError("missing 'vars:' header", 0);
  return es;
}

std::string to_string(const EquationSet& es) {
  std::string out = "vars:";
  for (size_t i = 0; i < es.vars.size(); ++i)
    out += (i ? ", " : " ") + es.vars[i];
  out += "\n";
  for (const auto& e : es.equations) out += to_string(e) + "\n";
  return out;
}

Term substitute(const Term& t, const Substitution& s) {
  if (t.var) {
    auto it = s.find(t.head);
    return it == s.end() ? t : it->second;
  }
  Term out = Term::app(t.head);
  out.args.reserve(t.args.size());
  for (const auto& a : t.args) out.args.push_back(substitute(a, s));
  return out;
}

}  // namespace unifint
