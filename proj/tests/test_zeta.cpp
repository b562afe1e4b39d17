#include <gtest/gtest.h>

#include <numeric>

#include "hasse/description.hpp"
#include "hasse/presets.hpp"
#include "hasse/zeta.hpp"

using namespace hasse;

namespace {

using Coeffs = std::vector<Integer>;

Coeffs ints(std::initializer_list<long long> xs) {
  Coeffs c;
  for (auto x : xs) c.push_back(x);
  return c;
}

Coeffs poly_product(const Coeffs& a, const Coeffs& b) {
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

BaseRing gf(std::uint64_t q) {
  auto pk = prime_power(q);
  return BaseRing::finite_field(Field::make(pk->first, pk->second));
}
BaseRing gft(std::uint64_t q) {
  auto pk = prime_power(q);
  return BaseRing::polynomial_ring(Field::make(pk->first, pk->second));
}

Order order_of(const std::string& name, const BaseRing& base) { return make_order(preset(name, base)); }

// A x B rewritten in the basis (1,1), (1,0), (x,0), (0,y) with x, y running
// over the non-unit basis vectors, so that it serializes as an order.
template <CoefficientRing R>
SCAlgebra<R> unit_first_product(const SCAlgebra<R>& a, const SCAlgebra<R>& b) {
  const auto p = product_algebra(a, b);
  const R& r = a.ring();
  const std::size_t n = a.dim(), D = p.dim();
  auto to_new = [&](const Vec<R>& x) {
    Vec<R> y(D, r.zero());
    y[0] = x[n];
    y[1] = r.sub(x[0], x[n]);
    for (std::size_t i = 1; i < n; ++i) y[1 + i] = x[i];
    for (std::size_t j = 1; j < b.dim(); ++j) y[n + j] = x[n + j];
    return y;
  };
  std::vector<Vec<R>> old(D);
  old[0] = p.one();
  old[1] = p.basis(0);
  for (std::size_t i = 1; i < n; ++i) old[1 + i] = p.basis(i);
  for (std::size_t j = 1; j < b.dim(); ++j) old[n + j] = p.basis(n + j);
  std::vector<std::string> labels{"1"};
  for (std::size_t k = 1; k < D; ++k) labels.push_back("x" + std::to_string(k));
  std::vector<typename R::value_type> t;
  for (std::size_t i = 0; i < D; ++i)
    for (std::size_t j = 0; j < D; ++j)
      for (const auto& c : to_new(p.mul(old[i], old[j]))) t.push_back(c);
  return SCAlgebra<R>::build(r, labels, t, vec::unit(r, D, 0));
}

template <CoefficientRing R>
Order product_order(const Order& a, const Order& b, const SCAlgebra<R>& x, const SCAlgebra<R>& y) {
  return make_order(parse_description(serialize(unit_first_product(x, y), a.base())));
}

// Number of ideals of norm n in Z[i]: r_2(n) / 4.
Integer gaussian_ideals(std::uint64_t n) {
  long long count = 0;
  for (long long x = -8; x <= 8; ++x)
    for (long long y = -8; y <= 8; ++y)
      if (x * x + y * y == static_cast<long long>(n)) ++count;
  return count / 4;
}

}  // namespace

TEST(LocalZeta, Examples) {
  const Field f3 = Field::make(3, 1), f5 = Field::make(5, 1), f9 = Field::make(3, 2);
  EXPECT_EQ(local_zeta(group_algebra(f3, s3_group_table())), (std::vector<EulerFactor>{{1, 2}}));
  EXPECT_EQ(local_zeta(group_algebra(f5, s3_group_table())), (std::vector<EulerFactor>{{1, 3}}));
  EXPECT_EQ(local_zeta(matrix_algebra(ground_algebra(f9), 2), 2), (std::vector<EulerFactor>{{2, 1}}));
  EXPECT_EQ(local_zeta(group_algebra(Field::make(2, 1), s3_group_table())), (std::vector<EulerFactor>{{1, 2}}));
}

TEST(ZetaSeries, GroupAlgebraOverF3) {
  auto s = zeta_series(order_of("s3", gf(3)), 5);
  EXPECT_EQ(s.coeffs, ints({1, 2, 3, 4, 5, 6}));
  auto s20 = zeta_series(order_of("s3", gf(3)), 20);
  EXPECT_TRUE(compare_rational(s20, ints({1}), ints({1, -2, 1})));
  EXPECT_FALSE(compare_rational(s20, ints({1}), ints({1, -3, 3, -1})));
}

TEST(ZetaSeries, Dihedral) {
  for (std::uint64_t q : {3, 5}) {
    auto s = zeta_series(order_of("dihedral", gft(q)), 6, 4);
    const auto den = poly_product(ints({1, -2, 1}), ints({1, -static_cast<long long>(q)}));
    EXPECT_TRUE(compare_rational(s, ints({1}), den)) << "q=" << q;
    EXPECT_FALSE(compare_rational(s, ints({1}), ints({1, -3, 3, -1})));
  }
}

TEST(ZetaSeries, AffineLine) {
  for (std::uint64_t q : {2, 3, 4, 5}) {
    auto s = zeta_series(order_of("rank1", gft(q)), 5);
    Integer x = 1;
    for (unsigned n = 0; n <= 5; ++n, x *= q) EXPECT_EQ(s.coeffs[n], x) << "q=" << q << " n=" << n;
  }
}

TEST(ZetaSeries, ThreadCountDoesNotChangeOutput) {
  const auto o = order_of("dihedral", gft(3));
  auto a = zeta_series(o, 5, 1);
  auto b = zeta_series(o, 5, 8);
  EXPECT_EQ(a.coeffs, b.coeffs);
  ASSERT_EQ(a.provenance.size(), b.provenance.size());
  for (std::size_t i = 0; i < a.provenance.size(); ++i) {
    EXPECT_EQ(a.provenance[i].over.generator, b.provenance[i].over.generator);
    EXPECT_EQ(a.provenance[i].factors, b.provenance[i].factors);
  }
}

TEST(ZetaSeries, Multiplicativity) {
  {
    const auto x = order_of("s3", gf(3)), y = order_of("mat2", gf(3));
    const auto xy = product_order(x, y, x.over_field(), y.over_field());
    EXPECT_EQ(zeta_series(xy, 8).coeffs, series_product(zeta_series(x, 8).coeffs, zeta_series(y, 8).coeffs));
  }
  {
    const auto x = order_of("dihedral", gft(3)), y = order_of("rank1", gft(3));
    const auto xy = product_order(x, y, x.over_polynomials(), y.over_polynomials());
    EXPECT_EQ(zeta_series(xy, 4).coeffs, series_product(zeta_series(x, 4).coeffs, zeta_series(y, 4).coeffs));
  }
}

TEST(ZetaSeries, NondecreasingForDegreeOneFactors) {
  for (const char* name : {"s3", "mat2", "c2", "gauss"}) {
    auto s = zeta_series(order_of(name, gf(5)), 12);
    bool degree_one = true;
    for (const auto& part : s.provenance)
      for (const auto& f : part.factors) degree_one = degree_one && f.degree == 1;
    if (!degree_one) continue;
    for (std::size_t n = 1; n < s.coeffs.size(); ++n) EXPECT_LE(s.coeffs[n - 1], s.coeffs[n]) << name;
  }
}

TEST(ZetaSeries, Errors) {
  EXPECT_THROW(zeta_series(order_of("s3", BaseRing::integers()), 3), Error);
  EXPECT_THROW(zeta_series(order_of("s3", gf(3)), 0), Error);
  auto s = zeta_series(order_of("s3", gf(3)), 3);
  EXPECT_THROW(compare_rational(s, ints({1}), ints({0, 1})), Error);
}

TEST(Dirichlet, Riemann) {
  auto d = dirichlet_prefix(order_of("rank1", BaseRing::integers()), 10);
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(d[n], 1);
}

TEST(Dirichlet, GaussianIntegers) {
  auto d = dirichlet_prefix(order_of("gauss", BaseRing::integers()), 50, 4);
  const auto expect = ints({1, 1, 0, 1, 2, 0, 0, 1, 1, 2});
  for (std::uint64_t n = 1; n <= 10; ++n) EXPECT_EQ(d[n], expect[n - 1]) << n;
  for (std::uint64_t n = 1; n <= 50; ++n) EXPECT_EQ(d[n], gaussian_ideals(n)) << n;
}

TEST(Dirichlet, GroupAlgebraLocalFactors) {
  auto d = dirichlet_prefix(order_of("s3", BaseRing::integers()), 23);
  for (const auto& lf : d.local) {
    if (lf.prime == 2 || lf.prime == 3)
      EXPECT_EQ(lf.factors, (std::vector<EulerFactor>{{1, 2}})) << lf.prime;
    else
      EXPECT_EQ(lf.factors, (std::vector<EulerFactor>{{1, 3}})) << lf.prime;
  }
  for (std::uint64_t m = 1; m <= 23; ++m)
    for (std::uint64_t n = 1; m * n <= 23; ++n)
      if (std::gcd(m, n) == 1) EXPECT_EQ(d[m * n], d[m] * d[n]);
}

TEST(NormCompatibility, Examples) {
  const Field f3 = Field::make(3, 1), f9 = Field::make(3, 2);
  const auto a = group_algebra(f3, s3_group_table());
  for (const auto& row : norm_compatibility(identity_morphism(a))) EXPECT_EQ(row.exponent, 1u);
  auto unit = norm_compatibility(unit_morphism(a));
  ASSERT_EQ(unit.size(), 2u);
  for (const auto& row : unit) {
    EXPECT_EQ(row.target_norm, 3);
    EXPECT_EQ(row.exponent, 1u);
  }
  const auto m = detail::restrict_to_prime_field(matrix_algebra(ground_algebra(f9), 2)).algebra;
  auto rows = norm_compatibility(unit_morphism(m));
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].target_norm, 9);
  EXPECT_EQ(rows[0].source_norm, 3);
  EXPECT_EQ(rows[0].exponent, 2u);
}
