#ifndef UNIFINT_LGROUP_HPP
#define UNIFINT_LGROUP_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <boost/rational.hpp>

#include "unifint/terms.hpp"

namespace unifint {

using Rational = boost::rational<long long>;
using RationalPoint = std::map<std::string, Rational>;

/// Integer combination of variables; the only constant of the signature is 0,
/// so there is no constant part. Zero coefficients are never stored.
struct LinearTerm {
  std::map<std::string, long long> coeffs;

  long long coeff(const std::string& v) const;
  bool mentions(const std::string& v) const { return coeff(v) != 0; }
  bool is_zero() const { return coeffs.empty(); }

  LinearTerm scaled(long long k) const;
  LinearTerm plus(const LinearTerm& other) const;
  /// Throws std::invalid_argument on an unassigned variable.
  Rational evaluate(const RationalPoint& p) const;

  std::string to_string() const;  // e.g. "2*x + y1 - 3*y2", "0" when empty
  bool operator==(const LinearTerm& o) const { return coeffs == o.coeffs; }
};

/// 0 <= rhs, with integer coefficients normalized by their gcd.
struct Inequation {
  LinearTerm rhs;

  /// Divides all coefficients by their gcd (sign-preserving).
  Inequation normalized() const;
  std::string to_string() const;  // "0 <= rhs"
  bool operator==(const Inequation& o) const { return rhs == o.rhs; }
};

struct InequationSystem {
  std::vector<Inequation> inequations;
  std::vector<std::string> variables;  // declaration / first-appearance order
};

/// Parses one constraint per line: `0 <= t`, meets `0 <= t1 /\ t2` (split into
/// one inequation per meetand), or equations `t = s` (split into 0 <= t-s and
/// 0 <= s-t). Joins (`\/`) are rejected; `#` starts a comment. Variables are
/// collected in first-appearance order.
InequationSystem parse_inequation_system(const std::string& text);

struct ScaleResult {
  InequationSystem system;
  long long n = 1;  // common |coefficient| of x after scaling
};

/// Multiplies every inequation mentioning x by the positive integer that makes
/// x's coefficient +/-n, n = lcm of the |coefficients of x|.
ScaleResult scale_to_common(const InequationSystem& S, const std::string& x);

/// One output inequation certified against the scaled inputs:
/// output_multiplier * output == sum of input_multipliers[k] * scaled input k,
/// all multipliers positive / nonnegative integers.
struct CertificateLine {
  long long output_multiplier = 1;
  std::vector<std::pair<int, long long>> input_multipliers;
};

struct EliminationResult {
  InequationSystem pi;      // the right uniform interpolant, x eliminated
  InequationSystem scaled;  // the scaled input the certificate refers to
  long long n = 1;
  std::vector<CertificateLine> certificate;  // one line per pi inequation
};

/// Scales to common coefficient n, then pairs every lower constraint
/// 0 <= a_i + n x with every upper constraint 0 <= b_j - n x into
/// 0 <= a_i + b_j, and keeps the x-free inequations 0 <= g_k unchanged.
EliminationResult eliminate(const InequationSystem& S, const std::string& x);

/// Exact-rational satisfaction; throws on a variable missing from p.
bool point_satisfies(const InequationSystem& S, const RationalPoint& p);

/// Closed feasible interval for x given values for the other variables;
/// unbounded sides are absent optionals, infeasible x-free constraints make
/// the whole interval empty.
struct Interval {
  bool feasible = true;  // false when an x-free inequation fails at p
  std::optional<Rational> lo, hi;
  bool nonempty() const { return feasible && (!lo || !hi || *lo <= *hi); }
};

Interval witness_interval(const InequationSystem& S, const std::string& x,
                          const RationalPoint& p);

/// Re-checks every certificate line as an exact linear identity.
bool check_certificate(const EliminationResult& r);

std::string to_string(const InequationSystem& S);

}  // namespace unifint

#endif
