#pragma once

// Dense univariate polynomials over Z with exact GMP coefficients.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace irrcert {

using Integer = mpz_class;
using Rational = mpq_class;

/// Ascending dense coefficients: coeffs()[i] is the coefficient of x^i.
/// Trailing zeros are stripped on construction, so the zero polynomial has
/// no coefficients at all.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Integer> coeffs);
  Polynomial(std::initializer_list<long> coeffs);

  /// The monomial c*x^e.
  static Polynomial monomial(const Integer& c, std::size_t e);

  const std::vector<Integer>& coeffs() const { return coeffs_; }
  std::span<const Integer> view() const { return coeffs_; }

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree of a nonzero polynomial; -1 for zero.
  long degree() const { return static_cast<long>(coeffs_.size()) - 1; }
  const Integer& leading() const { return coeffs_.back(); }
  /// Coefficient of x^i, zero past the degree.
  Integer coeff(std::size_t i) const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Integer& c, const Polynomial& f);

 private:
  void normalize();
  std::vector<Integer> coeffs_;
};

/// Coefficients s_0..s_m of f(x+n); s_i = f^(i)(n)/i!.
struct TaylorCoefficients {
  Integer shift;
  std::vector<Integer> s;

  Polynomial as_polynomial() const { return Polynomial(s); }
};

/// H = num/den with num = max_{i<m} |a_i| and den = |a_m|, kept unreduced.
struct RootBound {
  Integer num;
  Integer den;

  Rational value() const;
  /// true iff H <= q, decided exactly.
  bool at_most(const Rational& q) const;
};

Integer evaluate(const Polynomial& f, const Integer& x);
Polynomial derivative(const Polynomial& f);

/// Taylor shift by n using m rounds of synthetic division.
/// Throws std::invalid_argument on the zero polynomial.
TaylorCoefficients taylor_shift(const Polynomial& f, const Integer& n);

/// Positive gcd of the coefficients. Throws on the zero polynomial.
Integer content(const Polynomial& f);
bool is_primitive(const Polynomial& f);
/// f / content(f), with the sign of the leading coefficient kept.
Polynomial primitive_part(const Polynomial& f);

/// Throws std::invalid_argument when degree(f) < 1.
RootBound root_bound(const Polynomial& f);

/// n >= H + d + 1, i.e. (n - d - 1)*|a_m| >= max_{i<m} |a_i|.
bool admissible(const RootBound& h, const Integer& n, const Integer& d);
bool admissible(const Polynomial& f, const Integer& n, const Integer& d);

/// Smallest n >= 1 with admissible(f, n, d).
Integer smallest_admissible_n(const RootBound& h, const Integer& d);

/// Exact division over Z. Returns false (and leaves q untouched) unless
/// divisor | f in Z[x].
bool divides_exactly(const Polynomial& f, const Polynomial& divisor,
                     Polynomial& quotient);

/// Canonical text: ascending comma-separated coefficient list; "0" for zero.
std::string to_string(const Polynomial& f);
/// Human-readable expression, descending powers, e.g. "4*x^2-x+7".
std::string to_expression(const Polynomial& f);

}  // namespace irrcert
