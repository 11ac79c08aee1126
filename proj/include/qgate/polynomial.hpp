#pragma once

#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace qgate {

using Rational = boost::multiprecision::cpp_rational;

/// Exact conversion; every finite double is a dyadic rational.
Rational to_rational(double x);

/// Dense univariate polynomial in the energy E with exact rational
/// coefficients. coeffs()[k] multiplies E^k; the representation is always
/// trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coeffs);
  static Polynomial constant(const Rational& c);
  /// a + b E
  static Polynomial linear(const Rational& a, const Rational& b);

  const std::vector<Rational>& coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  /// Lowest power with a nonzero coefficient; -1 for the zero polynomial.
  int order() const;
  const Rational& lowest_coeff() const;
  const Rational& leading_coeff() const { return coeffs_.back(); }

  Rational evaluate(const Rational& e) const;
  double evaluate(double e) const;

  Polynomial operator-() const;
  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Rational& s, const Polynomial& p);
  friend bool operator==(const Polynomial&, const Polynomial&) = default;

  /// Euclidean division; throws std::domain_error on a zero divisor.
  static void divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r);
  /// Monic greatest common divisor (zero only if both inputs are zero).
  static Polynomial gcd(Polynomial a, Polynomial b);

  std::string to_string() const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Projective ratio of two polynomials. A zero denominator polynomial means
/// the ratio is infinite for every E.
struct RationalFunction {
  Polynomial num;
  Polynomial den;

  /// Cancels the common factor and makes the denominator monic.
  void reduce();
  bool is_identically_infinite() const { return den.is_zero(); }
  bool is_identically_zero() const { return num.is_zero(); }
};

}  // namespace qgate
