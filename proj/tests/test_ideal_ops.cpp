#include <gtest/gtest.h>

#include <random>
#include <thread>

#include "jacring/errors.hpp"
#include "jacring/oracle.hpp"
#include "support.hpp"

using namespace jacring;
using namespace jacring::testing;

namespace {

// Ideals used for the corpus-wide properties below.
std::vector<Ideal> corpus_ideals() {
  auto r = xyz();
  auto r4 = xyzw();
  return {
      ideal(r, {"x^2", "y", "x*z"}),
      ideal(r, {"y*z", "x*z", "x*y"}),
      ideal(r, {"3*x^2", "-2*y*z", "-y^2"}),
      ideal(r, {"4*x^3 + 2*x*y*z", "4*y^3 + x^2*z", "x^2*y"}),
      ideal(r, {"x^2", "y^2", "z^2"}),
      ideal(r, {"x", "y", "z"}),
      ideal(r, {"x^2", "x*y"}),
      ideal(r4, {"y*z + y*w + z*w", "x*z + x*w + z*w", "x*y + x*w + y*w", "x*y + x*z + y*z"}),
  };
}

}  // namespace

TEST(IdealSum, Examples) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(ideal_sum(ideal(r, {"x"}), ideal(r, {"y"})), ideal(r, {"x", "y"})));
  EXPECT_TRUE(ideal_equal(ideal_sum(ideal(r, {"x^2"}), Ideal::zero(r)), ideal(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(ideal_sum(ideal(r, {"x^2"}), ideal(r, {"x"})), ideal(r, {"x"})));
  EXPECT_THROW(ideal_sum(ideal(r, {"x"}), ideal(xyzw(), {"x"})), RingMismatchError);
}

TEST(Intersect, AgainstOracle) {
  auto r = xyz();
  const Ideal a = ideal(r, {"x", "y"});
  const Ideal b = ideal(r, {"y", "z"});
  EXPECT_TRUE(ideal_equal(intersect(a, b), ideal(r, {"y", "x*z"})));
  const Ideal c = ideal(r, {"x^2 + y*z", "y^2"});
  const Ideal d = ideal(r, {"x*y", "z^2"});
  const Ideal both = intersect(c, d);
  EXPECT_TRUE(c.contains(both));
  EXPECT_TRUE(d.contains(both));
  // dim (c ∩ d)_k = dim c_k + dim d_k - dim (c + d)_k
  for (int k = 0; k <= 6; ++k) {
    EXPECT_EQ(macaulay_dim(*r, both.generators(), k),
              macaulay_dim(*r, c.generators(), k) + macaulay_dim(*r, d.generators(), k) -
                  macaulay_dim(*r, ideal_sum(c, d).generators(), k))
        << k;
  }
}

TEST(Colon, Examples) {
  auto r = xyz();
  EXPECT_TRUE(ideal_equal(colon(ideal(r, {"x^2", "x*y"}), poly(r, "x")), ideal(r, {"x", "y"})));
  EXPECT_TRUE(ideal_equal(colon(ideal(r, {"x^2", "y"}), ideal(r, {"x", "y"})), ideal(r, {"x", "y"})));
  EXPECT_TRUE(ideal_equal(colon(ideal(r, {"x^2", "y"}), Ideal::unit(r)), ideal(r, {"x^2", "y"})));
  EXPECT_TRUE(colon(ideal(r, {"x^2", "y"}), poly(r, "y")).is_unit());
  EXPECT_THROW(colon(ideal(r, {"x"}), Polynomial{}), PreconditionError);
  EXPECT_THROW(colon(ideal(r, {"x"}), Ideal::zero(r)), PreconditionError);
}

TEST(Colon, MembershipOracle) {
  // ((x^2, y) : (x, y)) = (x, y): check every degree-2 monomial's membership
  // by explicit multiplication.
  auto r = xyz();
  const Ideal i = ideal(r, {"x^2", "y"});
  const Ideal c = colon(i, ideal(r, {"x", "y"}));
  for (const auto& m : r->monomials_of_degree(2)) {
    const Polynomial f = Polynomial::monomial(*r, m);
    const bool in_colon = i.contains(mul(*r, f, poly(r, "x"))) && i.contains(mul(*r, f, poly(r, "y")));
    EXPECT_EQ(c.contains(f), in_colon) << to_string(*r, m);
  }
}

TEST(Saturate, Examples) {
  auto r2 = ring_of({"x", "y"});
  EXPECT_TRUE(ideal_equal(saturate(ideal(r2, {"x^2", "x*y"})).ideal, ideal(r2, {"x"})));
  auto r = xyz();
  const auto points = saturate(ideal(r, {"x*y", "x*z", "y*z"}));
  EXPECT_TRUE(ideal_equal(points.ideal, ideal(r, {"x*y", "x*z", "y*z"})));
  EXPECT_EQ(points.iterations, 0);
  EXPECT_TRUE(saturate(ideal(r, {"x", "y", "z"})).ideal.is_unit());
  const auto unit = saturate(Ideal::unit(r));
  EXPECT_TRUE(unit.input_was_unit);
}

TEST(Saturate, IndexCountsSteps) {
  auto r = xyz();
  // x * (x, y, z)^2 saturates to (x) in two colon steps.
  const auto sat = saturate(ideal(r, {"x^3", "x^2*y", "x^2*z", "x*y^2", "x*y*z", "x*z^2"}));
  EXPECT_TRUE(ideal_equal(sat.ideal, ideal(r, {"x"})));
  EXPECT_EQ(sat.iterations, 2);
}

TEST(IdealEqual, Examples) {
  auto r = ring_of({"x", "y"});
  EXPECT_TRUE(ideal_equal(ideal(r, {"x^2", "x*y", "y*x"}), ideal(r, {"x^2", "x*y"})));
  EXPECT_FALSE(ideal_equal(ideal(r, {"x"}), ideal(r, {"x^2"})));
  EXPECT_TRUE(ideal_equal(ideal(r, {"x^2 + y^2", "x*y"}), ideal(r, {"x^2 + y^2", "x*y", "y^3"})));
}

TEST(Hilbert, SeriesExamples) {
  auto r = xyz();
  EXPECT_EQ(hilbert_series(Ideal::zero(r)).numerator(), (std::vector<std::int64_t>{1}));
  EXPECT_EQ(hilbert_series(ideal(r, {"x"})).numerator(), (std::vector<std::int64_t>{1, -1}));
  auto r2 = ring_of({"x", "y"});
  const Ideal i = ideal(r2, {"x^2", "x*y", "y^3"});
  MacaulayOracle oracle(r2, i.generators());
  for (int k = 0; k <= 6; ++k) EXPECT_EQ(hilbert_function(i, k), oracle.quotient_dim(k));
  EXPECT_EQ(hilbert_function(i, 0), 1);
  EXPECT_EQ(hilbert_function(i, 1), 2);
  EXPECT_EQ(hilbert_function(i, 2), 1);
  EXPECT_EQ(hilbert_function(i, 3), 0);
}

TEST(Hilbert, FunctionExamples) {
  auto r = xyz();
  EXPECT_EQ(hilbert_function(Ideal::zero(r), 2), 6);
  auto q = xyz(0);
  const Ideal jac = ideal(q, {"3*x^2", "3*y^2", "3*z^2"});
  MacaulayOracle oracle(q, jac.generators());
  const std::int64_t expected[] = {1, 3, 3, 1, 0, 0};
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(oracle.quotient_dim(k), expected[k]);
    EXPECT_EQ(hilbert_function(jac, k), expected[k]);
  }
  const Ideal m = ideal(r, {"x", "y", "z"});
  EXPECT_EQ(hilbert_function(m, 0), 1);
  EXPECT_EQ(hilbert_function(m, 1), 0);
  EXPECT_EQ(hilbert_function(m, 5), 0);
}

TEST(Hilbert, KrullDim) {
  auto r = xyz();
  EXPECT_EQ(krull_dim(ideal(r, {"x", "y", "z"})), 0);
  EXPECT_EQ(krull_dim(ideal(r, {"y*z", "x*z + x*y"})), 1);
  EXPECT_EQ(krull_dim(ideal(r, {"x"})), 2);
  EXPECT_EQ(krull_dim(Ideal::zero(r)), 3);
  EXPECT_THROW(krull_dim(Ideal::unit(r)), PreconditionError);
  // The oracle sees an eventually constant Hilbert function for (yz, xz + xy).
  MacaulayOracle oracle(r, polys(r, {"y*z", "x*z + x*y"}));
  EXPECT_EQ(oracle.quotient_dim(8), oracle.quotient_dim(9));
  EXPECT_GT(oracle.quotient_dim(9), 0);
}

TEST(Hilbert, DegreeOf) {
  auto r = xyz();
  EXPECT_EQ(degree_of(ideal(r, {"x", "y"})), 1);
  EXPECT_EQ(degree_of(ideal(r, {"x*y", "x*z", "y*z"})), 3);
  EXPECT_EQ(degree_of(ideal(r, {"x^2", "y"})), 2);
  MacaulayOracle three(r, polys(r, {"x*y", "x*z", "y*z"}));
  EXPECT_EQ(three.quotient_dim(6), 3);
  MacaulayOracle two(r, polys(r, {"x^2", "y"}));
  EXPECT_EQ(two.quotient_dim(6), 2);
  EXPECT_THROW(degree_of(ideal(r, {"x"})), PreconditionError);
}

TEST(CorpusProperties, SaturationIdempotentAndColonStable) {
  for (const auto& i : corpus_ideals()) {
    const Ideal s = saturate(i).ideal;
    EXPECT_TRUE(ideal_equal(saturate(s).ideal, s));
    if (!s.is_unit()) EXPECT_TRUE(ideal_equal(colon(s, Ideal::irrelevant(s.ring_ptr())), s));
    EXPECT_TRUE(s.contains(i));
  }
}

TEST(CorpusProperties, HilbertAgreesWithOracle) {
  for (const auto& i : corpus_ideals()) {
    const std::size_t nv = i.ring().num_vars();
    MacaulayOracle oracle(i.ring_ptr(), i.generators());
    const HilbertSeries hs = hilbert_series(i);
    const Ideal s = saturate(i).ideal;
    const HilbertSeries hsat = hilbert_series(s);
    const int bound = 10;
    for (int k = 0; k <= bound; ++k) {
      EXPECT_EQ(monomial_count(nv, k) - hs.dimension(k), oracle.ideal_dim(k));
      EXPECT_EQ(monomial_count(nv, k) - hsat.dimension(k), oracle.saturation_dim(k, bound));
    }
    // I and I^s agree from some degree on.
    EXPECT_EQ(hs.dimension(bound), hsat.dimension(bound));
  }
}

TEST(HilbertTable, EventuallyConstant) {
  auto r = xyz();
  const GradedDims t = hilbert_table(ideal(r, {"x*y", "x*z", "y*z"}), 5);
  EXPECT_EQ(t.at(0), 1);
  EXPECT_EQ(t.at(1), 3);
  EXPECT_EQ(t.at(5), 3);
  ASSERT_TRUE(t.eventually_constant.has_value());
  EXPECT_EQ(*t.eventually_constant, 3);
  EXPECT_EQ(t.at(40), 3);
}

TEST(IdealCache, ConcurrentReaders) {
  auto r = xyz();
  const Ideal i = ideal(r, {"x^2 + y*z", "y^3 - x*z^2", "x*y*z + z^3"});
  std::vector<std::thread> threads;
  std::vector<std::size_t> sizes(8);
  for (std::size_t t = 0; t < sizes.size(); ++t) {
    threads.emplace_back([&, t] { sizes[t] = i.groebner().size(); });
  }
  for (auto& t : threads) t.join();
  for (auto s : sizes) EXPECT_EQ(s, sizes[0]);
}
