#ifndef UNIFINT_TERMS_HPP
#define UNIFINT_TERMS_HPP

#include <map>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace unifint {

/// Thrown when a subuniverse / congruence-count limit is exceeded.
/// Mapped to exit code 3 by the CLI.
struct BudgetError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Syntax error with a character position and what was expected.
struct ParseError : std::runtime_error {
  size_t position;
  ParseError(const std::string& msg, size_t pos)
      : std::runtime_error(msg + " (at position " + std::to_string(pos) + ")"),
        position(pos) {}
};

struct OpSym {
  std::string symbol;
  int arity = 0;
  bool operator==(const OpSym&) const = default;
};

/// An algebraic signature: a finite list of operation symbols with arities.
/// Unless allow_no_constants is set, at least one symbol of arity 0 is
/// required; operations that need a nonempty subuniverse from an empty
/// generating set refuse to run without one.
class Signature {
 public:
  Signature() = default;
  Signature(std::string name, std::vector<OpSym> ops,
            bool allow_no_constants = false);

  const std::string& name() const { return name_; }
  const std::vector<OpSym>& ops() const { return ops_; }
  int op_count() const { return static_cast<int>(ops_.size()); }
  int arity(int op) const { return ops_[op].arity; }
  const std::string& symbol(int op) const { return ops_[op].symbol; }

  /// Index of a symbol, -1 when absent.
  int index_of(const std::string& sym) const;
  bool has_constant() const;
  void require_constant(const std::string& what) const;

  bool operator==(const Signature& other) const { return ops_ == other.ops_; }

 private:
  std::string name_;
  std::vector<OpSym> ops_;
};

/// A term tree: a variable leaf or an application of an operation symbol.
struct Term {
  std::string head;
  std::vector<Term> args;
  bool var = false;

  static Term variable(std::string name);
  static Term app(std::string sym, std::vector<Term> children = {});

  bool operator==(const Term&) const = default;
  bool operator<(const Term& other) const;
};

std::string to_string(const Term& t);

/// Validates arities and symbol membership against a signature.
void check_term(const Term& t, const Signature& sig,
                const std::set<std::string>& vars);

/// Collects the variables occurring in a term, in first-occurrence order.
void collect_variables(const Term& t, std::vector<std::string>& out);

/// Parses prefix functional notation: IDENT | IDENT "(" term ("," term)* ")".
/// Constants may be written without parentheses. A variable identifier that
/// clashes with an operation symbol is a parse error.
Term parse_term(const std::string& text, const Signature& sig,
                const std::set<std::string>& vars);

struct Equation {
  Term lhs, rhs;
  bool operator==(const Equation&) const = default;
};

std::string to_string(const Equation& e);

/// A finite set of equations together with its declared variable list. The
/// declared list may be strictly larger than the variables that occur.
struct EquationSet {
  std::vector<std::string> vars;
  std::vector<Equation> equations;

  void check(const Signature& sig) const;
};

/// File format: a header line "vars: x, y1, y2", then one "lhs = rhs" per
/// line; '#' starts a comment; blank lines ignored.
EquationSet parse_equation_set(const std::string& text, const Signature& sig);
std::string to_string(const EquationSet& es);

using Substitution = std::map<std::string, Term>;

/// Simultaneous replacement; variables not in s are unchanged.
Term substitute(const Term& t, const Substitution& s);

}  // namespace unifint

#endif
