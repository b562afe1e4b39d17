#include <gtest/gtest.h>

#include <random>

#include "hasse/base_ring.hpp"
#include "hasse/field.hpp"
#include "hasse/poly.hpp"

using namespace hasse;
using P = poly::Poly<Field>;

namespace {

// Exhaustive irreducibility over F_p for tiny degrees: no monic factor of
// degree 1..d/2 divides g.
bool brute_irreducible(const Field& f, const P& g) {
  const std::size_t d = g.size() - 1;
  const std::uint64_t q = f.size();
  for (std::size_t e = 1; e <= d / 2; ++e) {
    std::uint64_t count = checked_pow(q, static_cast<unsigned>(e));
    for (std::uint64_t c = 0; c < count; ++c) {
      P h(e + 1, 0);
      std::uint64_t t = c;
      for (std::size_t i = 0; i < e; ++i) {
        h[i] = static_cast<Field::value_type>(t % q);
        t /= q;
      }
      h[e] = 1;
      if (poly::mod(f, g, h).empty()) return false;
    }
  }
  return true;
}

}  // namespace

TEST(Field, PrimeFieldDefiningPolynomialIsT) {
  Field f = Field::make(3, 1);
  EXPECT_EQ(f.size(), 3u);
  EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{0, 1}));
}

TEST(Field, F4GeneratorHasOrderThree) {
  Field f = Field::make(2, 2);
  EXPECT_EQ(f.size(), 4u);
  auto z = f.generator();
  EXPECT_NE(f.pow(z, 1), 1u);
  EXPECT_EQ(f.pow(z, 3), 1u);
}

TEST(Field, F8UsesSmallestCubic) {
  Field f = Field::make(2, 3);
  // T^3 + T + 1
  EXPECT_EQ(f.modulus(), (std::vector<std::uint64_t>{1, 1, 0, 1}));
}

TEST(Field, RejectsBadParameters) {
  EXPECT_THROW(Field::make(4, 1), Error);
  EXPECT_THROW(Field::make(3, 0), Error);
  EXPECT_THROW(Field::from_modulus(2, {1, 0, 1}), Error);  // T^2+1 = (T+1)^2
}

TEST(Field, RingAxiomsOnRandomTriples) {
  std::mt19937_64 rng(7);
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 1}, {2, 4}, {3, 3}, {5, 2}, {7, 1}, {3, 11}, {2, 17}}) {
    Field f = Field::make(p, k);
    std::uniform_int_distribution<std::uint64_t> pick(0, f.size() - 1);
    for (int trial = 0; trial < 300; ++trial) {
      auto a = static_cast<Field::value_type>(pick(rng));
      auto b = static_cast<Field::value_type>(pick(rng));
      auto c = static_cast<Field::value_type>(pick(rng));
      EXPECT_EQ(f.add(a, b), f.add(b, a));
      EXPECT_EQ(f.mul(a, b), f.mul(b, a));
      EXPECT_EQ(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
      EXPECT_EQ(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
      EXPECT_EQ(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
      EXPECT_EQ(f.add(a, f.neg(a)), 0u);
      if (a != 0) EXPECT_EQ(f.mul(a, f.inv(a)), 1u) << f.name() << " a=" << a;
    }
  }
}

TEST(Field, EveryNonzeroElementInvertsSmallFields) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 3}, {3, 2}, {5, 3}}) {
    Field f = Field::make(p, k);
    for (std::uint64_t a = 1; a < f.size(); ++a) {
      auto x = static_cast<Field::value_type>(a);
      ASSERT_EQ(f.mul(x, f.inv(x)), 1u);
    }
  }
}

TEST(Field, FrobeniusHasOrderK) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{2, 4}, {3, 3}, {5, 2}}) {
    Field f = Field::make(p, k);
    auto z = f.generator();
    auto x = z;
    for (unsigned i = 1; i <= k; ++i) {
      x = f.pow(x, p);
      if (i < k) EXPECT_NE(x, z);
    }
    EXPECT_EQ(x, z);
  }
}

TEST(Irreducibles, DegreeOneOverF2) {
  Field f = Field::make(2, 1);
  EXPECT_EQ(irreducibles(f, 1), (std::vector<P>{{0, 1}, {1, 1}}));
}

TEST(Irreducibles, DegreeTwoOverF3HasThree) {
  Field f = Field::make(3, 1);
  EXPECT_EQ(irreducibles(f, 2).size(), 3u);  // (9 - 3) / 2
}

TEST(Irreducibles, CubicsOverF2) {
  Field f = Field::make(2, 1);
  EXPECT_EQ(irreducibles(f, 3), (std::vector<P>{{1, 1, 0, 1}, {1, 0, 1, 1}}));
}

TEST(Irreducibles, MatchBruteForceOnSmallCases) {
  for (auto [p, k, d] : {std::tuple<std::uint64_t, unsigned, unsigned>{2, 1, 4}, {3, 1, 3}, {2, 2, 2}, {5, 1, 2}}) {
    Field f = Field::make(p, k);
    auto list = irreducibles(f, d);
    std::size_t brute = 0;
    std::uint64_t count = checked_pow(f.size(), d);
    for (std::uint64_t c = 0; c < count; ++c) {
      P g(d + 1, 0);
      std::uint64_t t = c;
      for (unsigned i = 0; i < d; ++i) {
        g[i] = static_cast<Field::value_type>(t % f.size());
        t /= f.size();
      }
      g[d] = 1;
      bool irr = brute_irreducible(f, g);
      brute += irr;
      EXPECT_EQ(irr, std::find(list.begin(), list.end(), g) != list.end());
    }
    EXPECT_EQ(list.size(), brute);
  }
}

TEST(Irreducibles, CountMatchesMobiusFormula) {
  for (std::uint64_t p : {2, 3, 5, 7}) {
    for (unsigned k : {1u, 2u}) {
      Field f = Field::make(p, k);
      for (unsigned d = 1; checked_pow(f.size(), d) <= (1u << 16); ++d) {
        auto list = irreducibles(f, d);
        EXPECT_EQ(Integer(list.size()), count_irreducibles(f.size(), d)) << f.name() << " d=" << d;
        EXPECT_TRUE(std::is_sorted(list.begin(), list.end(), [](const P& a, const P& b) {
          for (std::size_t i = a.size(); i-- > 0;)
            if (a[i] != b[i]) return a[i] < b[i];
          return false;
        }));
      }
    }
  }
}

TEST(BaseMaxIdeals, PrimesUpToTen) {
  auto ms = base_max_ideals(BaseRing::integers(), 10);
  std::vector<std::uint64_t> ps;
  for (auto& m : ms) ps.push_back(m.prime);
  EXPECT_EQ(ps, (std::vector<std::uint64_t>{2, 3, 5, 7}));
}

TEST(BaseMaxIdeals, LinearPolynomialsOverF3) {
  Field f = Field::make(3, 1);
  auto ms = base_max_ideals(BaseRing::polynomial_ring(f), 1);
  ASSERT_EQ(ms.size(), 3u);
  EXPECT_EQ(ms[0].to_string(), "T");
  EXPECT_EQ(ms[1].to_string(), "T+1");
  EXPECT_EQ(ms[2].to_string(), "T+2");
}

TEST(BaseMaxIdeals, FieldHasOnlyZeroIdeal) {
  auto ms = base_max_ideals(BaseRing::finite_field(Field::make(5, 1)), 100);
  ASSERT_EQ(ms.size(), 1u);
  EXPECT_EQ(ms[0].to_string(), "0");
  EXPECT_EQ(ms[0].norm, 5);
}

TEST(BaseMaxIdeals, MonotoneAndReproducible) {
  Field f = Field::make(2, 1);
  auto a = base_max_ideals(BaseRing::polynomial_ring(f), 5);
  auto b = base_max_ideals(BaseRing::polynomial_ring(f), 5);
  ASSERT_EQ(a.size(), b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    EXPECT_EQ(a[i].generator, b[i].generator);
    if (i > 0) EXPECT_LE(a[i - 1].norm, a[i].norm);
  }
}

TEST(SplitRoots, FindsAllRootsOfSplitPolynomials) {
  for (auto [p, k] : {std::pair<std::uint64_t, unsigned>{5, 1}, {2, 3}, {3, 2}, {7, 2}}) {
    Field f = Field::make(p, k);
    std::vector<Field::value_type> want{0, 1, static_cast<Field::value_type>(f.size() - 1)};
    P m{1};
    for (auto r : want) m = poly::mul(f, m, P{f.neg(r), 1});
    EXPECT_EQ(split_roots(f, m), want) << f.name();
  }
}
