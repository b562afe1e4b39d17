#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "hasse/algebra.hpp"
#include "hasse/base_ring.hpp"
#include "hasse/description.hpp"
#include "hasse/error.hpp"
#include "hasse/qfactor.hpp"
#include "hasse/structure.hpp"

// Orders over Z, F_q and F_q[T]: fibers at maximal ideals of the base, their
// closed points, the minimal primes of the generic fiber over Z, and the
// resulting specialization posets.
namespace hasse {

class Order {
 public:
  using ZAlgebra = SCAlgebra<Integers>;
  using TAlgebra = SCAlgebra<PolynomialRing>;
  using Storage = std::variant<ZAlgebra, FqAlgebra, TAlgebra>;

  Order(BaseRing base, Storage algebra) : base_(std::move(base)), algebra_(std::move(algebra)) {}

  const BaseRing& base() const noexcept { return base_; }
  const Storage& storage() const noexcept { return algebra_; }
  std::size_t rank() const {
    return std::visit([](const auto& a) { return a.dim(); }, algebra_);
  }
  const std::vector<std::string>& labels() const {
    return std::visit([](const auto& a) -> const std::vector<std::string>& { return a.labels(); }, algebra_);
  }
  const ZAlgebra& over_integers() const {
    if (auto* a = std::get_if<ZAlgebra>(&algebra_)) return *a;
    throw Error("order is not over Z");
  }
  const FqAlgebra& over_field() const {
    if (auto* a = std::get_if<FqAlgebra>(&algebra_)) return *a;
    throw Error("order is not over a finite field");
  }
  const TAlgebra& over_polynomials() const {
    if (auto* a = std::get_if<TAlgebra>(&algebra_)) return *a;
    throw Error("order is not over GF(q)[T]");
  }

 private:
  BaseRing base_;
  Storage algebra_;
};

// Verifies associativity, the unit law and centrality of the base.
inline Order make_order(const Description& d) {
  switch (d.base.kind()) {
    case BaseRing::Kind::integers: return Order(d.base, to_algebra(d, Integers{}));
    case BaseRing::Kind::finite_field: return Order(d.base, to_algebra(d, d.base.field()));
    case BaseRing::Kind::polynomial_ring: return Order(d.base, to_algebra(d, PolynomialRing(d.base.field())));
  }
  throw InternalError("unknown base kind");
}

// The residue field of a base maximal ideal with the reduction map on base
// coefficients. For F_q[T] at f: F_q embeds in F_{q^deg f} by a root of its
// defining polynomial, and T goes to the least root of f.
struct Residue {
  Field field;
  Field::value_type tau = 0;               // image of T
  std::vector<Field::value_type> embed;    // image of each element code of F_q
};

inline Residue residue_of(const BaseMaxIdeal& m) {
  switch (m.kind) {
    case BaseRing::Kind::integers: return {Field::make(m.prime, 1), 0, {}};
    case BaseRing::Kind::finite_field: {
      std::vector<Field::value_type> id(m.field->size());
      for (std::size_t c = 0; c < id.size(); ++c) id[c] = static_cast<Field::value_type>(c);
      return {*m.field, 0, std::move(id)};
    }
    case BaseRing::Kind::polynomial_ring: {
      const Field& f = *m.field;
      const unsigned k = f.degree();
      const Field big = Field::make(f.characteristic(), k * m.degree());
      Field::value_type rho = 0;  // image of the generator of F_q
      if (k > 1) {
        poly::Poly<Field> mod;
        for (auto c : f.modulus()) mod.push_back(big.from_int(static_cast<long long>(c)));
        auto roots = split_roots(big, mod);
        detail::ensure(!roots.empty(), "base field does not embed in the residue field");
        rho = roots.front();
      }
      std::vector<Field::value_type> embed(f.size());
      for (std::size_t c = 0; c < embed.size(); ++c) {
        auto digits = f.digits(static_cast<Field::value_type>(c));
        Field::value_type v = 0, power = big.one();
        for (auto d : digits) {
          v = big.add(v, big.mul(big.from_int(static_cast<long long>(d)), power));
          power = big.mul(power, rho);
        }
        embed[c] = v;
      }
      poly::Poly<Field> g;
      for (auto c : m.generator) g.push_back(embed[c]);
      auto roots = split_roots(big, g);
      detail::ensure(!roots.empty(), "generator has no root in the residue field");
      return {big, roots.front(), std::move(embed)};
    }
  }
  throw InternalError("unknown base ideal kind");
}

inline void check_base(const Order& o, const BaseMaxIdeal& m) {
  if (m.kind != o.base().kind()) throw Error("maximal ideal belongs to a different base ring");
  if (m.kind != BaseRing::Kind::integers && !(*m.field == o.base().field()))
    throw Error("maximal ideal belongs to a different coefficient field");
}

// A / mA over the residue field of m.
inline FqAlgebra fiber(const Order& o, const BaseMaxIdeal& m) {
  check_base(o, m);
  const Residue r = residue_of(m);
  const Field& k = r.field;
  return std::visit(
      [&](const auto& a) -> FqAlgebra {
        using A = std::decay_t<decltype(a)>;
        if constexpr (std::is_same_v<A, Order::ZAlgebra>) {
          return change_ring(a, k, [&](const Integer& c) { return k.from_integer(c); });
        } else if constexpr (std::is_same_v<A, FqAlgebra>) {
          return a;
        } else {
          return change_ring(a, k, [&](const poly::Poly<Field>& c) {
            Field::value_type v = 0;
            for (std::size_t i = c.size(); i-- > 0;) v = k.add(k.mul(v, r.tau), r.embed[c[i]]);
            return v;
          });
        }
      },
      o.storage());
}

// ---------------------------------------------------------------------------
// Points of Spec.

struct SpecPoint {
  enum class Kind { closed, generic };
  Kind kind = Kind::closed;
  std::string label;

  // closed
  std::optional<BaseMaxIdeal> over;
  std::optional<Point> point;
  std::optional<Field> residue_field;  // coefficient field of the fiber

  // generic: a Q-basis of the minimal prime, cleared to primitive integer rows
  std::vector<std::vector<Integer>> generators;
  std::size_t residue_dim = 0;       // dim_Q of A_Q / p
  std::size_t center_degree = 0;     // [Z(A_Q / p) : Q]

  // Residue size of the center of kappa(x) for closed points.
  Integer norm() const { return point ? point->norm : Integer(0); }

  // Degree of N(x) over the base residue characteristic's field: N = q^degree
  // for F_q, F_q[T] (q the size of the coefficient field), p^degree for Z.
  unsigned degree() const {
    if (!point) return 0;
    const unsigned ext = over->kind == BaseRing::Kind::polynomial_ring ? over->degree() : 1;
    return ext * point->center_degree;
  }

  std::string residue_name() const {
    if (kind == Kind::closed) return point->residue_name(*residue_field);
    return "simple Q-algebra of dimension " + std::to_string(residue_dim) + " with center of degree " + std::to_string(center_degree);
  }
};

// The closed points of Spec A lying over m, in max_two_sided_ideals order.
inline std::vector<SpecPoint> closed_points_over(const Order& o, const BaseMaxIdeal& m) {
  const FqAlgebra a = fiber(o, m);
  std::vector<SpecPoint> out;
  for (auto& p : max_two_sided_ideals(a)) {
    SpecPoint s;
    s.kind = SpecPoint::Kind::closed;
    s.over = m;
    s.residue_field = a.ring();
    s.point = std::move(p);
    out.push_back(std::move(s));
  }
  return out;
}

namespace detail {

using QAlgebra = SCAlgebra<Rationals>;
using QVec = Vec<Rationals>;

inline QAlgebra rationalize(const Order::ZAlgebra& a) {
  return change_ring(a, Rationals{}, [](const Integer& c) { return Rational(c); });
}

// Semisimple in characteristic 0 iff the trace form Tr(L_xy) is nondegenerate.
inline bool trace_form_nondegenerate(const QAlgebra& a) {
  const std::size_t n = a.dim();
  std::vector<Rational> tr(n, 0);
  for (std::size_t m = 0; m < n; ++m)
    for (std::size_t k = 0; k < n; ++k) tr[m] += a.constant(m, k, k);
  std::vector<QVec> gram(n, QVec(n, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t m = 0; m < n; ++m) gram[i][j] += a.constant(i, j, m) * tr[m];
  return rref(Rationals{}, gram, n).first.size() == n;
}

inline std::vector<Integer> clear_denominators(const QVec& v) {
  Integer l = 1;
  for (const auto& c : v) l = boost::multiprecision::lcm(l, denominator(c));
  std::vector<Integer> z;
  for (const auto& c : v) z.push_back(numerator(c) * (l / denominator(c)));
  Integer g = 0;
  for (const auto& c : z) g = boost::multiprecision::gcd(g, c);
  if (g > 1)
    for (auto& c : z) c /= g;
  return z;
}

inline QVec eval_in(const QAlgebra& a, const qfactor::QPoly& p, const QVec& x) {
  QVec r = a.zero();
  for (std::size_t i = p.size(); i-- > 0;) r = a.add(a.mul(r, x), a.scale(a.one(), p[i]));
  return r;
}

}  // namespace detail

// Minimal primes of an order over Z: kernels of A_Q onto its simple factors,
// found by splitting the center with the factorization over Q of the minimal
// polynomial of a primitive element.
inline std::vector<SpecPoint> generic_minimal_primes(const Order& o) {
  if (o.base().kind() != BaseRing::Kind::integers) throw Error("generic minimal primes are only computed over Z");
  const Rationals q;
  const auto a = detail::rationalize(o.over_integers());
  if (!detail::trace_form_nondegenerate(a)) throw Error("the rational algebra is not semisimple");
  const auto z = center(a);
  const auto zalg = subalgebra(a, z);
  const std::size_t m = z.dim();

  std::vector<detail::QVec> candidates;
  for (std::size_t i = 0; i < m; ++i) candidates.push_back(zalg.algebra.basis(i));
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = i + 1; j < m; ++j) candidates.push_back(zalg.algebra.add(zalg.algebra.basis(i), zalg.algebra.basis(j)));
  std::optional<std::pair<detail::QVec, qfactor::QPoly>> primitive;
  for (const auto& c : candidates) {
    auto mp = minimal_polynomial(zalg.algebra, c, zalg.algebra.one());
    if (mp.size() == m + 1) {
      primitive.emplace(c, std::move(mp));
      break;
    }
  }
  if (!primitive) throw Error("no primitive element of the rational center among the candidates");
  const auto& [theta, mp] = *primitive;
  const auto factors = qfactor::factor_squarefree(mp);

  std::vector<SpecPoint> out;
  for (const auto& fi : factors) {
    const auto [rest, rem] = poly::divmod(q, mp, fi);
    detail::ensure(rem.empty(), "factor does not divide the minimal polynomial");
    const auto [g, s, t] = poly::xgcd(q, rest, fi);
    detail::ensure(g.size() == 1, "factors are not coprime");
    // e = s * rest is 1 mod fi and 0 mod rest
    const auto e_poly = poly::mod(q, poly::mul(q, s, rest), mp);
    const detail::QVec e = zalg.include(detail::eval_in(zalg.algebra, e_poly, theta));
    const detail::QVec comp = a.sub(a.one(), e);
    std::vector<detail::QVec> span;
    for (std::size_t i = 0; i < a.dim(); ++i) span.push_back(a.mul(comp, a.basis(i)));
    const auto v = Subspace<Rationals>::span(q, a.dim(), span);
    SpecPoint p;
    p.kind = SpecPoint::Kind::generic;
    for (const auto& row : v.basis()) p.generators.push_back(detail::clear_denominators(row));
    p.residue_dim = a.dim() - v.dim();
    p.center_degree = fi.size() - 1;
    out.push_back(std::move(p));
  }
  std::sort(out.begin(), out.end(), [](const SpecPoint& x, const SpecPoint& y) {
    if (x.residue_dim != y.residue_dim) return x.residue_dim < y.residue_dim;
    return x.generators < y.generators;
  });
  return out;
}

// A short list of two-sided generators of a generic point's ideal in A_Q,
// picked greedily from the cleared basis, sparsest rows first.
inline std::vector<std::vector<Integer>> ideal_generators(const Order& o, const SpecPoint& p) {
  if (p.kind != SpecPoint::Kind::generic) throw Error("ideal generators are listed for generic points");
  const auto a = detail::rationalize(o.over_integers());
  auto rows = p.generators;
  auto weight = [](const std::vector<Integer>& r) { return std::count_if(r.begin(), r.end(), [](const Integer& c) { return c != 0; }); };
  std::stable_sort(rows.begin(), rows.end(), [&](const auto& x, const auto& y) { return weight(x) < weight(y); });
  std::vector<detail::QVec> kept;
  std::vector<std::vector<Integer>> out;
  Subspace<Rationals> span(Rationals{}, a.dim());
  for (const auto& r : rows) {
    if (span.dim() == p.generators.size()) break;
    detail::QVec v;
    for (const auto& c : r) v.push_back(Rational(c));
    if (span.contains(v)) continue;
    kept.push_back(std::move(v));
    out.push_back(r);
    span = ideal_generated(a, kept).space();
  }
  return out;
}

// Reduction mod l of the l-saturation of the lattice spanned by integer rows:
// while the reductions are dependent, a dependency divided by l is added.
inline Subspace<Field> saturated_reduction(std::vector<std::vector<Integer>> rows, std::uint64_t l, std::size_t n) {
  const Field f = Field::make(l, 1);
  while (true) {
    std::vector<FqVec> red;
    for (const auto& r : rows) {
      FqVec v;
      for (const auto& c : r) v.push_back(f.from_integer(c));
      red.push_back(std::move(v));
    }
    // dependencies among the reduced rows = kernel of the column map
    const auto deps = kernel_of_columns(f, red, n);
    if (deps.dim() == 0) return Subspace<Field>::span(f, n, red);
    const auto& c = deps.basis().front();
    std::size_t pivot = 0;
    while (c[pivot] == 0) ++pivot;
    std::vector<Integer> combo(n, 0);
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t k = 0; k < n; ++k) combo[k] += Integer(c[i]) * rows[i][k];
    for (auto& x : combo) {
      detail::ensure(x % l == 0, "dependency mod l is not divisible by l");
      x /= l;
    }
    rows[pivot] = std::move(combo);
  }
}

// Whether the closed point m over l lies in the closure of the generic point p,
// i.e. (p cap A) + lA is inside m.
inline bool specializes_to(const SpecPoint& generic, const SpecPoint& closed, std::size_t rank) {
  if (generic.kind != SpecPoint::Kind::generic || closed.kind != SpecPoint::Kind::closed) return false;
  if (closed.over->kind != BaseRing::Kind::integers) return false;
  return closed.point->ideal.space().contains(saturated_reduction(generic.generators, closed.over->prime, rank));
}

struct SpecPoset {
  std::vector<SpecPoint> points;
  std::vector<std::pair<std::size_t, std::size_t>> closure;  // (p, m): m in closure of p, reflexive

  bool in_closure(std::size_t p, std::size_t m) const {
    return std::find(closure.begin(), closure.end(), std::make_pair(p, m)) != closure.end();
  }
  std::vector<std::size_t> closure_of(std::size_t p) const {
    std::vector<std::size_t> out;
    for (const auto& [x, y] : closure)
      if (x == p) out.push_back(y);
    std::sort(out.begin(), out.end());
    return out;
  }
  std::optional<std::size_t> find(const std::string& label) const {
    for (std::size_t i = 0; i < points.size(); ++i)
      if (points[i].label == label) return i;
    return std::nullopt;
  }
};

// Which fibers to include, and whether to add the generic minimal primes.
struct Selector {
  std::vector<BaseMaxIdeal> fibers;
  bool generic = false;

  static Selector localize(std::uint64_t p, bool generic) { return {{BaseMaxIdeal::of_prime(p)}, generic}; }
  static Selector bounded(const BaseRing& base, std::uint64_t bound, bool generic) { return {base_max_ideals(base, bound), generic}; }
};

// Closed points labelled P0, P1, ... in fiber order, then generic points G0, ...
inline SpecPoset spec_poset(const Order& o, const Selector& sel) {
  SpecPoset poset;
  for (const auto& m : sel.fibers)
    for (auto& p : closed_points_over(o, m)) {
      p.label = "P" + std::to_string(poset.points.size());
      poset.points.push_back(std::move(p));
    }
  const std::size_t closed = poset.points.size();
  if (sel.generic) {
    std::size_t g = 0;
    for (auto& p : generic_minimal_primes(o)) {
      p.label = "G" + std::to_string(g++);
      poset.points.push_back(std::move(p));
    }
  }
  for (std::size_t i = 0; i < poset.points.size(); ++i) {
    poset.closure.emplace_back(i, i);
    if (i < closed) continue;
    for (std::size_t j = 0; j < closed; ++j)
      if (specializes_to(poset.points[i], poset.points[j], o.rank())) poset.closure.emplace_back(i, j);
  }
  std::sort(poset.closure.begin(), poset.closure.end());
  return poset;
}

// U(x) = {p : x in closure(p)}.
inline std::vector<std::size_t> smallest_neighborhood(const SpecPoset& poset, std::size_t x) {
  if (x >= poset.points.size()) throw Error("point is not in the poset");
  if (poset.points[x].kind != SpecPoint::Kind::closed) throw Error("point " + poset.points[x].label + " is not closed");
  std::vector<std::size_t> out;
  for (std::size_t p = 0; p < poset.points.size(); ++p)
    if (poset.in_closure(p, x)) out.push_back(p);
  return out;
}

}  // namespace hasse
