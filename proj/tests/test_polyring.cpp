#include <gtest/gtest.h>

#include <random>

#include "jacring/errors.hpp"
#include "support.hpp"

using namespace jacring;
using namespace jacring::testing;

TEST(Field, ModularArithmetic) {
  const Field f(7);
  EXPECT_EQ(f.add(f.from_int(5), f.from_int(4)), f.from_int(2));
  EXPECT_EQ(f.mul(f.from_int(3), f.inv(f.from_int(3))), f.one());
  EXPECT_EQ(f.from_int(-1), f.from_int(6));
  EXPECT_EQ(f.to_string(f.from_int(6)), "-1");
  EXPECT_EQ(f.from_fraction(1, 2), f.from_int(4));
  EXPECT_THROW(f.from_fraction(1, 7), PreconditionError);
  EXPECT_THROW(f.inv(f.zero()), PreconditionError);
}

TEST(Field, RationalArithmetic) {
  const Field q(0);
  const auto half = q.from_fraction(1, 2);
  EXPECT_EQ(q.add(half, half), q.one());
  EXPECT_EQ(q.to_string(q.from_fraction(-2, 4)), "-1/2");
  EXPECT_EQ(q.div(q.one(), q.from_int(3)), q.from_fraction(1, 3));
}

TEST(Field, RejectsComposite) {
  EXPECT_THROW(Field(32004), PreconditionError);
  EXPECT_THROW(Field(1), PreconditionError);
  EXPECT_NO_THROW(Field(2));
  EXPECT_TRUE(is_prime(32003));
  EXPECT_FALSE(is_prime(32001));
}

TEST(Monomial, Operations) {
  const Monomial a{2, 1, 0};
  const Monomial b{1, 0, 3};
  EXPECT_EQ(a.degree(), 3u);
  EXPECT_EQ(a * b, (Monomial{3, 1, 3}));
  EXPECT_EQ(lcm(a, b), (Monomial{2, 1, 3}));
  EXPECT_EQ(gcd(a, b), (Monomial{1, 0, 0}));
  EXPECT_TRUE((Monomial{1, 0, 0}).divides(a));
  EXPECT_FALSE(a.divides(b));
  EXPECT_TRUE(coprime(Monomial{1, 0, 0}, Monomial{0, 2, 1}));
}

TEST(Order, GrevlexExamples) {
  auto r = xyz();
  const Monomial x2y{2, 1, 0};
  const Monomial xyz_m{1, 1, 1};
  EXPECT_EQ(r->compare(x2y, xyz_m), std::strong_ordering::greater);
  EXPECT_EQ(r->compare(x2y, x2y), std::strong_ordering::equal);
  EXPECT_EQ(r->compare(Monomial{2, 0, 0}, Monomial{0, 0, 3}), std::strong_ordering::less);
  // The two orders disagree on xz vs y^2.
  EXPECT_EQ(compare_monomials(Monomial{1, 0, 1}, Monomial{0, 2, 0}, MonomialOrder::Grevlex),
            std::strong_ordering::less);
  EXPECT_EQ(compare_monomials(Monomial{1, 0, 1}, Monomial{0, 2, 0}, MonomialOrder::Grlex),
            std::strong_ordering::greater);
}

TEST(Order, TotalAndMultiplicative) {
  std::mt19937_64 rng(11);
  for (auto order : {MonomialOrder::Grevlex, MonomialOrder::Grlex}) {
    auto random_monomial = [&] {
      Monomial m(4);
      for (std::size_t i = 0; i < 4; ++i) m.set(i, static_cast<std::uint16_t>(rng() % 4));
      return m;
    };
    for (int trial = 0; trial < 2000; ++trial) {
      const Monomial a = random_monomial(), b = random_monomial(), c = random_monomial();
      const auto ab = compare_monomials(a, b, order);
      EXPECT_EQ(ab == std::strong_ordering::equal, a == b);
      EXPECT_EQ(compare_monomials(b, a, order), 0 <=> ab);
      if (ab < 0 && compare_monomials(b, c, order) < 0) EXPECT_TRUE(compare_monomials(a, c, order) < 0);
      if (ab < 0) EXPECT_TRUE(compare_monomials(a * c, b * c, order) < 0);
    }
  }
}

TEST(Ring, Validation) {
  EXPECT_THROW(RingContext::make({"x"}, kP), PreconditionError);
  EXPECT_THROW(RingContext::make({"x", "x"}, kP), PreconditionError);
  EXPECT_THROW(RingContext::make({"x", "y"}, 10), PreconditionError);
  auto r = xyz();
  EXPECT_EQ(r->variable_index("y"), 1u);
  EXPECT_EQ(r->monomials_of_degree(2).size(), 6u);
  EXPECT_EQ(monomial_count(4, 3), 20);
}

TEST(Parser, SpecExamples) {
  auto q = xyz(0);
  const Polynomial f = parse_polynomial("x^3 - y^2*z", *q);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_EQ(f.degree(*q), 3);
  EXPECT_THROW(parse_polynomial("x + y^2", *q), NonHomogeneousError);
  auto f3 = xyz(3);
  EXPECT_THROW(parse_polynomial("3*x^2", *f3), PreconditionError);
}

TEST(Parser, Grammar) {
  auto r = xyz(0);
  EXPECT_EQ(to_string(*r, parse_polynomial("(x+y)^2", *r)), "x^2 + 2*x*y + y^2");
  EXPECT_EQ(to_string(*r, parse_polynomial("-x*y + 1/2*z^2", *r)), "-x*y + 1/2*z^2");
  EXPECT_EQ(to_string(*r, parse_polynomial("2/4 * x", *r)), "1/2*x");
  EXPECT_EQ(to_string(*r, parse_polynomial("x*x*y - x^2*y + z^3", *r)), "z^3");
}

TEST(Parser, ErrorsCarryPositions) {
  auto r = xyz();
  try {
    parse_polynomial("x^2 + q*y", *r);
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.position(), 6u);
  }
  EXPECT_THROW(parse_polynomial("x^2 +", *r), ParseError);
  EXPECT_THROW(parse_polynomial("(x + y", *r), ParseError);
  EXPECT_THROW(parse_polynomial("x/0", *r), ParseError);
  EXPECT_THROW(parse_polynomial("x^", *r), ParseError);
  EXPECT_THROW(parse_polynomial("1/32003*x", *r), ParseError);
}

TEST(Polynomial, PartialDerivatives) {
  auto r = xyz(0);
  EXPECT_EQ(partial_derivative(*r, poly(r, "x^3+y^3+z^3"), 0), poly(r, "3*x^2"));
  EXPECT_EQ(partial_derivative(*r, poly(r, "x*y*z"), 0), poly(r, "y*z"));
  EXPECT_TRUE(partial_derivative(*r, poly(r, "x^3"), 1).is_zero());
  EXPECT_THROW(partial_derivative(*r, poly(r, "x"), 3), PreconditionError);
}

TEST(Polynomial, ExactDivisionAndPrimitive) {
  auto r = xyz(0);
  EXPECT_EQ(exact_divide(*r, poly(r, "x^2 - y^2"), poly(r, "x + y")), poly(r, "x - y"));
  EXPECT_THROW(exact_divide(*r, poly(r, "x^2 + y^2"), poly(r, "x + y")), PreconditionError);
  EXPECT_EQ(make_primitive(*r, poly(r, "-4/3*x + 2*y")), poly(r, "2*x - 3*y"));
  EXPECT_EQ(make_monic(*r, poly(r, "2*x + y")), poly(r, "x + 1/2*y"));
}

TEST(Polynomial, MixedDegreeSumThrows) {
  auto r = xyz();
  EXPECT_THROW(add(*r, poly(r, "x"), poly(r, "y^2")), NonHomogeneousError);
  EXPECT_EQ(add(*r, poly(r, "x"), Polynomial{}), poly(r, "x"));
}

class PolyringProperties : public ::testing::TestWithParam<std::uint32_t> {};

TEST_P(PolyringProperties, EulerRelation) {
  auto r = xyzw(GetParam());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 5);
    const Polynomial f = random_form(*r, d, rng);
    Polynomial lhs;
    for (std::size_t i = 0; i < r->num_vars(); ++i) {
      lhs = add(*r, lhs, mul(*r, Polynomial::variable(*r, i), partial_derivative(*r, f, i)));
    }
    EXPECT_EQ(lhs, scale(*r, f, r->field().from_int(d)));
  }
}

TEST_P(PolyringProperties, RingAxioms) {
  auto r = xyz(GetParam());
  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 40; ++trial) {
    const int d = 1 + static_cast<int>(rng() % 3);
    const Polynomial a = random_form(*r, d, rng), b = random_form(*r, d, rng), c = random_form(*r, d, rng);
    EXPECT_EQ(add(*r, a, b), add(*r, b, a));
    EXPECT_EQ(mul(*r, a, b), mul(*r, b, a));
    EXPECT_EQ(add(*r, add(*r, a, b), c), add(*r, a, add(*r, b, c)));
    EXPECT_EQ(mul(*r, mul(*r, a, b), c), mul(*r, a, mul(*r, b, c)));
    EXPECT_EQ(mul(*r, a, add(*r, b, c)), add(*r, mul(*r, a, b), mul(*r, a, c)));
    EXPECT_TRUE(sub(*r, a, a).is_zero());
    EXPECT_EQ(pow(*r, a, 2), mul(*r, a, a));
  }
}

TEST_P(PolyringProperties, PrintParseRoundTrip) {
  auto r = xyzw(GetParam());
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 60; ++trial) {
    const Polynomial f = random_nonzero_form(*r, 1 + static_cast<int>(rng() % 4), rng);
    const std::string text = to_string(*r, f);
    const Polynomial back = parse_polynomial(text, *r);
    EXPECT_EQ(back, f) << text;
    EXPECT_EQ(to_string(*r, back), text);
  }
}

INSTANTIATE_TEST_SUITE_P(Fields, PolyringProperties, ::testing::Values(32003u, 0u, 7u));
