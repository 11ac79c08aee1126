#include "doctest.h"

#include "qgate/builders.hpp"
#include "qgate/polynomial.hpp"
#include "qgate/scatter.hpp"

using namespace qgate;

TEST_CASE("doubles convert exactly") {
  CHECK(to_rational(0.5) == Rational(1, 2));
  CHECK(to_rational(-2.4) != Rational(-24, 10));  // binary rounding is kept, not guessed away
  CHECK(static_cast<double>(to_rational(-2.4)) == -2.4);
  CHECK(to_rational(0.0) == 0);
}

TEST_CASE("polynomial arithmetic") {
  const Polynomial x = Polynomial::linear(0, 1);
  const Polynomial one = Polynomial::constant(1);
  const Polynomial p = (x + one) * (x - one);  // E^2 - 1
  CHECK(p.degree() == 2);
  CHECK(p.order() == 0);
  CHECK(p.evaluate(Rational(3)) == 8);
  CHECK((p - p).is_zero());
  Polynomial q, r;
  Polynomial::divmod(p, x - one, q, r);
  CHECK(q == x + one);
  CHECK(r.is_zero());
  CHECK(Polynomial::gcd(p, Rational(3) * (x - one)) == x - one);
  CHECK_THROWS_AS(Polynomial::divmod(p, Polynomial{}, q, r), std::domain_error);
  CHECK((x * x * x).order() == 3);
}

TEST_CASE("rational functions reduce to lowest terms") {
  const Polynomial x = Polynomial::linear(0, 1);
  RationalFunction f{Rational(2) * x * x, Rational(4) * x};
  f.reduce();
  CHECK(f.num == Polynomial::linear(0, Rational(1, 2)));
  CHECK(f.den == Polynomial::constant(1));
}

TEST_CASE("exact ratios of the two input encodings") {
  const auto g = build_nand_tree(1, std::vector<int>{0, 1}, ParameterPreset::uniform());
  auto y1 = exact_node_ratio(g, 1);
  CHECK(y1.num == Polynomial::constant(-1));
  CHECK(y1.den == Polynomial::linear(0, 1));
  auto y2 = exact_node_ratio(g, 2);
  CHECK(y2.num == Polynomial::linear(0, -1));
  CHECK(y2.den == Polynomial(std::vector<Rational>{-1, 0, 1}));
}

TEST_CASE("exact limit classification") {
  const Polynomial x = Polynomial::linear(0, 1);
  CHECK(classify_exact({Polynomial::constant(-1), x}).value == BitValue::Zero);
  CHECK(classify_exact({x, Polynomial::constant(1)}).value == BitValue::One);
  CHECK(classify_exact({Polynomial::constant(2), Polynomial::constant(1)}).value == BitValue::Indeterminate);
  CHECK(classify_exact({Polynomial::constant(1), Polynomial{}}).value == BitValue::Zero);
  CHECK(classify_exact({Polynomial{}, Polynomial::constant(1)}).value == BitValue::One);
}
