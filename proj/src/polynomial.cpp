#include "qgate/polynomial.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace qgate {

Rational to_rational(double x) {
  if (!std::isfinite(x)) {
    throw std::domain_error("cannot convert a non-finite value to a rational");
  }
  return Rational(x);
}

Polynomial::Polynomial(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::constant(const Rational& c) { return Polynomial({c}); }

Polynomial Polynomial::linear(const Rational& a, const Rational& b) { return Polynomial({a, b}); }

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) {
    coeffs_.pop_back();
  }
}

int Polynomial::order() const {
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] != 0) {
      return static_cast<int>(k);
    }
  }
  return -1;
}

const Rational& Polynomial::lowest_coeff() const {
  const int k = order();
  if (k < 0) {
    throw std::domain_error("zero polynomial has no lowest coefficient");
  }
  return coeffs_[static_cast<std::size_t>(k)];
}

Rational Polynomial::evaluate(const Rational& e) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * e + *it;
  }
  return acc;
}

double Polynomial::evaluate(double e) const {
  double acc = 0.0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc = acc * e + static_cast<double>(*it);
  }
  return acc;
}

Polynomial Polynomial::operator-() const {
  Polynomial out = *this;
  for (auto& c : out.coeffs_) {
    c = -c;
  }
  return out;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  std::vector<Rational> c(std::max(a.coeffs_.size(), b.coeffs_.size()));
  for (std::size_t k = 0; k < a.coeffs_.size(); ++k) c[k] += a.coeffs_[k];
  for (std::size_t k = 0; k < b.coeffs_.size(); ++k) c[k] += b.coeffs_[k];
  return Polynomial(std::move(c));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + (-b); }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) {
    return {};
  }
  std::vector<Rational> c(a.coeffs_.size() + b.coeffs_.size() - 1);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
      c[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return Polynomial(std::move(c));
}

Polynomial operator*(const Rational& s, const Polynomial& p) {
  std::vector<Rational> c = p.coeffs_;
  for (auto& x : c) x *= s;
  return Polynomial(std::move(c));
}

void Polynomial::divmod(const Polynomial& a, const Polynomial& b, Polynomial& q, Polynomial& r) {
  if (b.is_zero()) {
    throw std::domain_error("polynomial division by zero");
  }
  std::vector<Rational> rem = a.coeffs_;
  const int db = b.degree();
  std::vector<Rational> quot(a.degree() >= db ? static_cast<std::size_t>(a.degree() - db + 1) : 0);
  for (int k = a.degree(); k >= db; --k) {
    const Rational f = rem[static_cast<std::size_t>(k)] / b.leading_coeff();
    quot[static_cast<std::size_t>(k - db)] = f;
    if (f == 0) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= f * b.coeffs_[static_cast<std::size_t>(j)];
    }
  }
  q = Polynomial(std::move(quot));
  r = Polynomial(std::move(rem));
}

Polynomial Polynomial::gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial q, r;
    divmod(a, b, q, r);
    a = std::move(b);
    b = std::move(r);
  }
  if (a.is_zero()) {
    return a;
  }
  const Rational lead = a.leading_coeff();
  return (Rational(1) / lead) * a;
}

std::string Polynomial::to_string() const {
  if (coeffs_.empty()) {
    return "0";
  }
  std::ostringstream os;
  bool first = true;
  for (std::size_t k = 0; k < coeffs_.size(); ++k) {
    if (coeffs_[k] == 0) continue;
    if (!first) os << " + ";
    os << "(" << coeffs_[k] << ")";
    if (k > 0) os << "*E^" << k;
    first = false;
  }
  return os.str();
}

void RationalFunction::reduce() {
  if (den.is_zero()) {
    // Infinite everywhere; keep only the sign information of the numerator.
    if (!num.is_zero()) {
      num = Polynomial::constant(num.leading_coeff() > 0 ? 1 : -1);
    }
    return;
  }
  if (num.is_zero()) {
    den = Polynomial::constant(1);
    return;
  }
  const Polynomial g = Polynomial::gcd(num, den);
  if (g.degree() > 0) {
    Polynomial q, r;
    Polynomial::divmod(num, g, q, r);
    num = q;
    Polynomial::divmod(den, g, q, r);
    den = q;
  }
  const Rational lead = den.leading_coeff();
  num = (Rational(1) / lead) * num;
  den = (Rational(1) / lead) * den;
}

}  // namespace qgate
