// Exact Laurent polynomial arithmetic over Z with integer exponents.
// This is the coefficient ring A = Z[q, q^-1] used everywhere else;
// the weight group is instantiated as the integers with its natural order.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <limits>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hc {

using Coeff = boost::multiprecision::cpp_int;
using Exponent = int;

enum class GroupType { C2affine, G2affine };

std::string to_string(GroupType t);

/// Positive weight triple (a,b,c) for C2affine, pair (a,b) for G2affine.
/// Generator weights: C2: L(s0)=c, L(s1)=b, L(s2)=a (convention a >= c);
/// G2: L(s0)=L(s1)=b, L(s2)=a.
struct WeightSpec {
  GroupType type;
  int a = 1;
  int b = 1;
  int c = 1;

  static WeightSpec c2(int a, int b, int c);
  static WeightSpec g2(int a, int b);

  int weight_of_gen(int s) const;
  std::string render() const;  // "a=5,b=1,c=2" / "a=3,b=1"

  friend bool operator==(const WeightSpec&, const WeightSpec&) = default;
};

class ParseError : public std::runtime_error {
 public:
  explicit ParseError(const std::string& msg) : std::runtime_error(msg) {}
};

/// An element of A: finite map exponent -> nonzero integer coefficient,
/// kept sorted by exponent. Value type, immutable in spirit (all mutating
/// operations are private to the arithmetic routines).
class LaurentPoly {
 public:
  using Term = std::pair<Exponent, Coeff>;

  // degree() of the zero polynomial; below every genuine exponent.
  static constexpr Exponent kNegInf = std::numeric_limits<Exponent>::min();

  LaurentPoly() = default;

  static LaurentPoly zero() { return LaurentPoly(); }
  static LaurentPoly constant(Coeff n);
  static LaurentPoly q_power(Exponent g);           // q^g
  static LaurentPoly monomial(Coeff n, Exponent g);  // n*q^g
  static LaurentPoly xi(Exponent g);   // q^g - q^-g   (xi_0 = 0)
  static LaurentPoly eta(Exponent g);  // q^g + q^-g   (eta_0 = 2)

  bool is_zero() const { return terms_.empty(); }
  bool is_one() const;
  size_t term_count() const { return terms_.size(); }
  const std::vector<Term>& terms() const { return terms_; }

  Coeff coeff_at(Exponent g) const;
  Exponent degree() const;      // kNegInf for 0
  Exponent min_exponent() const;  // +inf sentinel (max int) for 0

  LaurentPoly operator-() const;
  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }

  LaurentPoly scaled(const Coeff& n) const;

  /// p += q * r without materializing q * r.
  void add_mul(const LaurentPoly& q, const LaurentPoly& r);

  /// Exponent-negation of every term: bar(q^g) = q^-g.
  LaurentPoly bar() const;

  /// Strictly negative / zero / strictly positive exponent parts:
  /// *this == neg + constant*q^0 + pos.
  struct Split;
  Split split() const;

  LaurentPoly negative_part() const;  // terms with exponent < 0
  bool all_degrees_negative() const { return degree() < 0; }

  /// Terms in decreasing exponent order, e.g. "q^3 - q^-1 + 2"; "0" for zero.
  std::string render() const;
  static LaurentPoly parse(const std::string& text);

 private:
  std::vector<Term> terms_;  // ascending exponent, no zero coefficients
  void prune();
  friend class LaurentBuilder;
};

struct LaurentPoly::Split {
  LaurentPoly negative;
  Coeff constant;
  LaurentPoly positive;
};

/// Accumulates terms in arbitrary order, then normalizes once.
class LaurentBuilder {
 public:
  void add_term(Exponent g, const Coeff& c);
  LaurentPoly take();

 private:
  std::vector<LaurentPoly::Term> terms_;
};

}  // namespace hc
