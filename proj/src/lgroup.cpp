#include "unifint/lgroup.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace unifint {

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'';
}

std::string trim(const std::string& s) {
  size_t a = s.find_first_not_of(" \t\r");
  if (a == std::string::npos) return "";
  size_t b = s.find_last_not_of(" \t\r");
  return s.substr(a, b - a + 1);
}

/// Parses "2*x + y1 - 3*y2" into a LinearTerm. A literal integer is only
/// allowed when it is 0 (the signature has no other constants).
LinearTerm parse_linear_term(const std::string& s, size_t line_no) {
  LinearTerm t;
  size_t i = 0;
  auto skip = [&] { while (i < s.size() && std::isspace(static_cast<unsigned char>(s[i]))) ++i; };
  auto fail = [&](const std::string& msg) -> ParseError {
    return ParseError("line " + std::to_string(line_no) + ": " + msg, i);
  };
  bool first = true;
  skip();
  while (i < s.size()) {
    long long sign = 1;
    if (s[i] == '+' || s[i] == '-') {
      if (s[i] == '-') sign = -1;
      ++i;
      skip();
    } else if (!first) {
      throw fail("expected '+' or '-' before next summand");
    }
    first = false;
    long long mag = 1;
    bool saw_number = false;
    if (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) {
      saw_number = true;
      mag = 0;
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i])))
        mag = mag * 10 + (s[i++] - '0');
      skip();
      if (i < s.size() && s[i] == '*') {
        ++i;
        skip();
      } else if (i < s.size() && ident_start(s[i])) {
        throw fail("missing '*' between coefficient and variable");
      } else {
        if (mag != 0) throw fail("nonzero constant term is not expressible");
        skip();
        continue;  // literal 0 contributes nothing
      }
    }
    if (i >= s.size() || !ident_start(s[i]))
      throw fail(saw_number ? "expected a variable after '*'"
                            : "expected a coefficient or a variable");
    size_t start = i;
    while (i < s.size() && ident_char(s[i])) ++i;
    std::string var = s.substr(start, i - start);
    long long& c = t.coeffs[var];
    c += sign * mag;
    if (c == 0) t.coeffs.erase(var);
    skip();
  }
  return t;
}

LinearTerm minus(const LinearTerm& a, const LinearTerm& b) {
  return a.plus(b.scaled(-1));
}

void append_inequation(InequationSystem& S, Inequation ineq) {
  for (const auto& [v, c] : ineq.rhs.coeffs)
    if (std::find(S.variables.begin(), S.variables.end(), v) ==
        S.variables.end())
      S.variables.push_back(v);
  S.inequations.push_back(std::move(ineq));
}

}  // namespace

long long LinearTerm::coeff(const std::string& v) const {
  auto it = coeffs.find(v);
  return it == coeffs.end() ? 0 : it->second;
}

LinearTerm LinearTerm::scaled(long long k) const {
  LinearTerm out;
  if (k == 0) return out;
  for (const auto& [v, c] : coeffs) out.coeffs[v] = c * k;
  return out;
}

LinearTerm LinearTerm::plus(const LinearTerm& other) const {
  LinearTerm out = *this;
  for (const auto& [v, c] : other.coeffs) {
    long long& t = out.coeffs[v];
    t += c;
    if (t == 0) out.coeffs.erase(v);
  }
  return out;
}

Rational LinearTerm::evaluate(const RationalPoint& p) const {
  Rational sum(0);
  for (const auto& [v, c] : coeffs) {
    auto it = p.find(v);
    if (it == p.end())
      throw std::invalid_argument("unassigned variable: " + v);
    sum += Rational(c) * it->second;
  }
  return sum;
}

std::string LinearTerm::to_string() const {
  if (coeffs.empty()) return "0";
  std::string out;
  for (const auto& [v, c] : coeffs) {
    long long mag = c < 0 ? -c : c;
    if (out.empty())
      out += c < 0 ? "-" : "";
    else
      out += c < 0 ? " - " : " + ";
    if (mag != 1) out += std::to_string(mag) + "*";
    out += v;
  }
  return out;
}

Inequation Inequation::normalized() const {
  long long g = 0;
  for (const auto& [v, c] : rhs.coeffs) g = std::gcd(g, c < 0 ? -c : c);
  if (g <= 1) return *this;
  Inequation out;
  for (const auto& [v, c] : rhs.coeffs) out.rhs.coeffs[v] = c / g;
  return out;
}

std::string Inequation::to_string() const { return "0 <= " + rhs.to_string(); }

std::string to_string(const InequationSystem& S) {
  std::string out;
  for (const auto& ineq : S.inequations) out += ineq.to_string() + "\n";
  return out;
}

InequationSystem parse_inequation_system(const std::string& text) {
  InequationSystem S;
  std::istringstream in(text);
  std::string raw;
  size_t line_no = 0;
  while (std::getline(in, raw)) {
    ++line_no;
    std::string line = raw;
    if (size_t h = line.find('#'); h != std::string::npos) line = line.substr(0, h);
    line = trim(line);
    if (line.empty()) continue;
    if (line.find("\\/") != std::string::npos)
      throw ParseError("line " + std::to_string(line_no) +
                           ": joins (\\/) are not supported; only meets of "
                           "linear inequations",
                       line.find("\\/"));
    size_t le = line.find("<=");
    if (le != std::string::npos) {
      if (trim(line.substr(0, le)) != "0")
        throw ParseError("line " + std::to_string(line_no) +
                             ": inequations must have the form 0 <= t",
                         0);
      std::string rest = line.substr(le + 2);
      size_t pos = 0;
      while (true) {
        size_t meet = rest.find("/\\", pos);
        std::string piece = meet == std::string::npos
                                ? rest.substr(pos)
                                : rest.substr(pos, meet - pos);
        append_inequation(S, Inequation{parse_linear_term(piece, line_no)});
        if (meet == std::string::npos) break;
        pos = meet + 2;
      }
      continue;
    }
    size_t eq = line.find('=');
    if (eq != std::string::npos) {
      LinearTerm lhs = parse_linear_term(line.substr(0, eq), line_no);
      LinearTerm rhs = parse_linear_term(line.substr(eq + 1), line_no);
      append_inequation(S, Inequation{minus(lhs, rhs)});
      append_inequation(S, Inequation{minus(rhs, lhs)});
      continue;
    }
    throw ParseError(
        "line " + std::to_string(line_no) + ": expected '0 <= t' or 't = s'",
        0);
  }
  return S;
}

ScaleResult scale_to_common(const InequationSystem& S, const std::string& x) {
  long long n = 1;
  for (const auto& ineq : S.inequations)
    if (long long c = ineq.rhs.coeff(x); c != 0)
      n = std::lcm(n, c < 0 ? -c : c);
  ScaleResult res;
  res.n = n;
  res.system.variables = S.variables;
  for (const auto& ineq : S.inequations) {
    long long c = ineq.rhs.coeff(x);
    long long k = c == 0 ? 1 : n / (c < 0 ? -c : c);
    res.system.inequations.push_back(Inequation{ineq.rhs.scaled(k)});
  }
  return res;
}

EliminationResult eliminate(const InequationSystem& S, const std::string& x) {
  ScaleResult sc = scale_to_common(S, x);
  EliminationResult res;
  res.scaled = sc.system;
  res.n = sc.n;
  res.pi.variables = S.variables;
  std::erase(res.pi.variables, x);

  std::vector<int> lowers, uppers, frees;  // indices into the scaled system
  for (int k = 0; k < static_cast<int>(sc.system.inequations.size()); ++k) {
    long long c = sc.system.inequations[k].rhs.coeff(x);
    if (c == 0)
      frees.push_back(k);
    else if (c > 0)
      lowers.push_back(k);
    else
      uppers.push_back(k);
  }

  std::vector<LinearTerm> seen;
  auto emit = [&](const LinearTerm& sum, std::vector<std::pair<int, long long>> ins) {
    Inequation out = Inequation{sum}.normalized();
    if (std::find(seen.begin(), seen.end(), out.rhs) != seen.end()) return;
    seen.push_back(out.rhs);
    // g * out == sum, where g is the gcd that normalized() divided out.
    long long g = 1;
    if (!out.rhs.coeffs.empty()) {
      auto it = sum.coeffs.begin();
      g = it->second / out.rhs.coeffs.at(it->first);
    }
    res.pi.inequations.push_back(out);
    res.certificate.push_back(CertificateLine{g, std::move(ins)});
  };

  for (int i : lowers)
    for (int j : uppers)
      emit(sc.system.inequations[i].rhs.plus(sc.system.inequations[j].rhs),
           {{i, 1}, {j, 1}});
  for (int k : frees) emit(sc.system.inequations[k].rhs, {{k, 1}});
  return res;
}

bool point_satisfies(const InequationSystem& S, const RationalPoint& p) {
  for (const auto& ineq : S.inequations)
    if (ineq.rhs.evaluate(p) < Rational(0)) return false;
  return true;
}

Interval witness_interval(const InequationSystem& S, const std::string& x,
                          const RationalPoint& p) {
  Interval iv;
  for (const auto& ineq : S.inequations) {
    long long c = ineq.rhs.coeff(x);
    LinearTerm rest = ineq.rhs;
    rest.coeffs.erase(x);
    Rational val = rest.evaluate(p);
    if (c == 0) {
      if (val < Rational(0)) iv.feasible = false;
    } else if (c > 0) {  // 0 <= val + c x  =>  x >= -val/c
      Rational bound = -val / Rational(c);
      if (!iv.lo || bound > *iv.lo) iv.lo = bound;
    } else {  // 0 <= val + c x  =>  x <= val/(-c)
      Rational bound = val / Rational(-c);
      if (!iv.hi || bound < *iv.hi) iv.hi = bound;
    }
  }
  return iv;
}

bool check_certificate(const EliminationResult& r) {
  if (r.certificate.size() != r.pi.inequations.size()) return false;
  for (size_t i = 0; i < r.certificate.size(); ++i) {
    const CertificateLine& line = r.certificate[i];
    if (line.output_multiplier < 1) return false;
    LinearTerm lhs = r.pi.inequations[i].rhs.scaled(line.output_multiplier);
    LinearTerm acc;
    for (auto [k, lambda] : line.input_multipliers) {
      if (lambda < 0 || k < 0 ||
          k >= static_cast<int>(r.scaled.inequations.size()))
        return false;
      acc = acc.plus(r.scaled.inequations[k].rhs.scaled(lambda));
    }
    if (!(lhs == acc)) return false;
  }
  return true;
}

}  // namespace unifint
