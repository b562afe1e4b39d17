#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/integer.hpp"
#include "hasse/linalg.hpp"
#include "hasse/rings.hpp"

namespace hasse {

// A unital associative algebra, free of rank d over its coefficient ring, with
// e_i e_j = sum_k c[i][j][k] e_k.
template <CoefficientRing R>
class SCAlgebra {
 public:
  using ring_type = R;
  using value_type = typename R::value_type;
  using Element = Vec<R>;

  // Checks associativity, centrality of the unit and the unit law exhaustively
  // over basis triples; throws LawError with the failing indices.
  static SCAlgebra build(R ring, std::vector<std::string> labels, std::vector<value_type> table, Element unit) {
    SCAlgebra a = unchecked(std::move(ring), std::move(labels), std::move(table), std::move(unit));
    a.verify();
    return a;
  }

  // Skips the law checks. For constructions whose laws are inherited.
  static SCAlgebra unchecked(R ring, std::vector<std::string> labels, std::vector<value_type> table, Element unit) {
    const std::size_t d = labels.size();
    if (d == 0) throw Error("the zero ring is not supported");
    if (table.size() != d * d * d) throw Error("structure tensor has wrong size");
    if (unit.size() != d) throw Error("unit vector has wrong size");
    SCAlgebra a(std::move(ring));
    a.labels_ = std::move(labels);
    a.dim_ = d;
    a.table_ = std::move(table);
    a.unit_ = std::move(unit);
    a.index();
    return a;
  }

  const R& ring() const noexcept { return ring_; }
  std::size_t dim() const noexcept { return dim_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const std::vector<value_type>& table() const noexcept { return table_; }
  const value_type& constant(std::size_t i, std::size_t j, std::size_t k) const { return table_[(i * dim_ + j) * dim_ + k]; }

  const Element& one() const noexcept { return unit_; }
  Element zero() const { return vec::zero(ring_, dim_); }
  Element basis(std::size_t i) const { return vec::unit(ring_, dim_, i); }
  const Element& product(std::size_t i, std::size_t j) const { return products_[i * dim_ + j]; }

  Element mul(const Element& x, const Element& y) const {
    Element r = zero();
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(x[i])) continue;
      for (std::size_t j = 0; j < dim_; ++j) {
        if (ring_.is_zero(y[j])) continue;
        const auto s = ring_.mul(x[i], y[j]);
        for (const auto& [k, c] : sparse_[i * dim_ + j]) r[k] = ring_.add(r[k], ring_.mul(s, c));
      }
    }
    return r;
  }

  Element add(const Element& x, const Element& y) const { return vec::add(ring_, x, y); }
  Element sub(const Element& x, const Element& y) const { return vec::sub(ring_, x, y); }
  Element scale(const Element& x, const value_type& s) const { return vec::scale(ring_, x, s); }
  Element commutator(const Element& x, const Element& y) const { return sub(mul(x, y), mul(y, x)); }

  Element pow(Element x, Integer e) const {
    Element r = unit_;
    while (e > 0) {
      if (boost::multiprecision::bit_test(e, 0)) r = mul(r, x);
      e >>= 1;
      if (e > 0) x = mul(x, x);
    }
    return r;
  }

  bool is_commutative() const {
    for (std::size_t i = 0; i < dim_; ++i)
      for (std::size_t j = i + 1; j < dim_; ++j)
        if (product(i, j) != product(j, i)) return false;
    return true;
  }

  // Columns are x e_j (left multiplication by x).
  std::vector<Element> left_columns(const Element& x) const {
    std::vector<Element> cols;
    for (std::size_t j = 0; j < dim_; ++j) cols.push_back(mul(x, basis(j)));
    return cols;
  }

  std::string format(const Element& x) const {
    std::string s;
    for (std::size_t i = 0; i < dim_; ++i) {
      if (ring_.is_zero(x[i])) continue;
      std::string c = ring_.to_string(x[i]);
      bool negative = c[0] == '-';
      if (negative) c.erase(0, 1);
      if (c.find_first_of("+-") != std::string::npos) c = "(" + c + ")";
      s += s.empty() ? (negative ? "-" : "") : (negative ? " - " : " + ");
      if (c != "1") s += c + "*";
      s += labels_[i];
    }
    return s.empty() ? "0" : s;
  }

  void verify() const {
    const std::size_t d = dim_;
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          Element left = zero(), right = zero();
          const auto& ij = product(i, j);
          const auto& jk = product(j, k);
          for (std::size_t m = 0; m < d; ++m) {
            if (!ring_.is_zero(ij[m])) vec::axpy(ring_, left, ij[m], product(m, k));
            if (!ring_.is_zero(jk[m])) vec::axpy(ring_, right, jk[m], product(i, m));
          }
          if (left != right)
            throw LawError(LawError::Law::associativity, {i, j, k},
                           "structure constants are not associative at (" + labels_[i] + ", " + labels_[j] + ", " + labels_[k] + ")");
        }
    // Scalars act through the unit; R.1 is central iff the unit commutes with every basis element.
    for (std::size_t i = 0; i < d; ++i) {
      const Element ei = basis(i);
      if (mul(unit_, ei) != mul(ei, unit_))
        throw LawError(LawError::Law::centrality, {i, LawError::npos, LawError::npos},
                       "base element not central: 1 does not commute with " + labels_[i]);
    }
    for (std::size_t i = 0; i < d; ++i) {
      const Element ei = basis(i);
      if (mul(unit_, ei) != ei || mul(ei, unit_) != ei)
        throw LawError(LawError::Law::unit, {i, LawError::npos, LawError::npos}, "unit law fails at " + labels_[i]);
    }
  }

  friend bool operator==(const SCAlgebra& a, const SCAlgebra& b) {
    return a.ring_ == b.ring_ && a.dim_ == b.dim_ && a.table_ == b.table_ && a.unit_ == b.unit_;
  }

 private:
  explicit SCAlgebra(R ring) : ring_(std::move(ring)) {}

  void index() {
    const std::size_t d = dim_;
    sparse_.assign(d * d, {});
    products_.assign(d * d, zero());
    for (std::size_t i = 0; i < d; ++i)
      for (std::size_t j = 0; j < d; ++j)
        for (std::size_t k = 0; k < d; ++k) {
          const auto& c = constant(i, j, k);
          if (ring_.is_zero(c)) continue;
          sparse_[i * d + j].emplace_back(k, c);
          products_[i * d + j][k] = c;
        }
  }

  R ring_;
  std::vector<std::string> labels_;
  std::size_t dim_ = 0;
  std::vector<value_type> table_;
  Element unit_;
  std::vector<std::vector<std::pair<std::size_t, value_type>>> sparse_;
  std::vector<Element> products_;
};

// Group ring over R from a Cayley table (table[g][h] = index of gh).
template <CoefficientRing R>
SCAlgebra<R> group_algebra(const R& ring, const std::vector<std::vector<std::size_t>>& table, std::vector<std::string> labels = {}) {
  const std::size_t n = table.size();
  if (n == 0) throw LawError(LawError::Law::group, {LawError::npos, LawError::npos, LawError::npos}, "empty group table");
  for (const auto& row : table)
    for (auto x : row)
      if (row.size() != n || x >= n)
        throw LawError(LawError::Law::group, {LawError::npos, LawError::npos, LawError::npos}, "table is not square over its index set");
  std::optional<std::size_t> identity;
  for (std::size_t e = 0; e < n && !identity; ++e) {
    bool ok = true;
    for (std::size_t g = 0; g < n && ok; ++g) ok = table[e][g] == g && table[g][e] == g;
    if (ok) identity = e;
  }
  if (!identity) throw LawError(LawError::Law::group, {LawError::npos, LawError::npos, LawError::npos}, "table has no identity");
  for (std::size_t g = 0; g < n; ++g) {
    bool has_inverse = false;
    for (std::size_t h = 0; h < n && !has_inverse; ++h) has_inverse = table[g][h] == *identity && table[h][g] == *identity;
    if (!has_inverse) throw LawError(LawError::Law::group, {g, LawError::npos, LawError::npos}, "element has no inverse");
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c)
        if (table[table[a][b]][c] != table[a][table[b][c]])
          throw LawError(LawError::Law::group, {a, b, c}, "table is not associative");
  if (labels.empty())
    for (std::size_t g = 0; g < n; ++g) labels.push_back("g" + std::to_string(g));
  std::vector<typename R::value_type> t(n * n * n, ring.zero());
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[(a * n + b) * n + table[a][b]] = ring.one();
  return SCAlgebra<R>::unchecked(ring, std::move(labels), std::move(t), vec::unit(ring, n, *identity));
}

// Cyclic group C_n with elements 1, g, ..., g^(n-1).
inline std::vector<std::vector<std::size_t>> cyclic_group_table(std::size_t n) {
  std::vector<std::vector<std::size_t>> t(n, std::vector<std::size_t>(n));
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) t[a][b] = (a + b) % n;
  return t;
}

// S_3 = <a, b | a^2 = b^3 = 1, a b a^-1 = b^-1>, elements a^i b^j indexed 3i + j.
inline std::vector<std::vector<std::size_t>> s3_group_table() {
  std::vector<std::vector<std::size_t>> t(6, std::vector<std::size_t>(6));
  for (std::size_t x = 0; x < 6; ++x)
    for (std::size_t y = 0; y < 6; ++y) {
      std::size_t i = x / 3, j = x % 3, k = y / 3, l = y % 3;
      // b^j a^k = a^k b^(+-j)
      std::size_t jj = k == 0 ? j : (3 - j) % 3;
      t[x][y] = ((i + k) % 2) * 3 + (jj + l) % 3;
    }
  return t;
}

// M_n(A) on the basis E_ij (x) e_b, indexed (i n + j) dim A + b.
template <CoefficientRing R>
SCAlgebra<R> matrix_algebra(const SCAlgebra<R>& a, std::size_t n) {
  if (n < 1) throw Error("matrix size must be at least 1");
  const R& ring = a.ring();
  const std::size_t d = a.dim(), D = n * n * d;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t b = 0; b < d; ++b)
        labels.push_back(n == 1 ? a.labels()[b] : "E" + std::to_string(i + 1) + std::to_string(j + 1) + ":" + a.labels()[b]);
  auto idx = [&](std::size_t i, std::size_t j, std::size_t b) { return (i * n + j) * d + b; };
  std::vector<typename R::value_type> t(D * D * D, ring.zero());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      for (std::size_t l = 0; l < n; ++l)
        for (std::size_t b = 0; b < d; ++b)
          for (std::size_t c = 0; c < d; ++c)
            for (std::size_t m = 0; m < d; ++m) t[(idx(i, j, b) * D + idx(j, l, c)) * D + idx(i, l, m)] = a.constant(b, c, m);
  auto unit = vec::zero(ring, D);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t b = 0; b < d; ++b) unit[idx(i, i, b)] = a.one()[b];
  return SCAlgebra<R>::build(ring, std::move(labels), std::move(t), std::move(unit));
}

// A x B with block-diagonal structure constants.
template <CoefficientRing R>
SCAlgebra<R> product_algebra(const SCAlgebra<R>& a, const SCAlgebra<R>& b) {
  const R& ring = a.ring();
  const std::size_t da = a.dim(), db = b.dim(), D = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back(l + ":1");
  for (const auto& l : b.labels()) labels.push_back(l + ":2");
  std::vector<typename R::value_type> t(D * D * D, ring.zero());
  for (std::size_t i = 0; i < da; ++i)
    for (std::size_t j = 0; j < da; ++j)
      for (std::size_t k = 0; k < da; ++k) t[(i * D + j) * D + k] = a.constant(i, j, k);
  for (std::size_t i = 0; i < db; ++i)
    for (std::size_t j = 0; j < db; ++j)
      for (std::size_t k = 0; k < db; ++k) t[((da + i) * D + da + j) * D + da + k] = b.constant(i, j, k);
  auto unit = vec::zero(ring, D);
  for (std::size_t i = 0; i < da; ++i) unit[i] = a.one()[i];
  for (std::size_t i = 0; i < db; ++i) unit[da + i] = b.one()[i];
  return SCAlgebra<R>::build(ring, std::move(labels), std::move(t), std::move(unit));
}

// Same structure constants pushed through a ring map.
template <CoefficientRing R, CoefficientRing S, class Map>
SCAlgebra<S> change_ring(const SCAlgebra<R>& a, const S& target, Map&& map) {
  std::vector<typename S::value_type> t;
  t.reserve(a.table().size());
  for (const auto& c : a.table()) t.push_back(map(c));
  Vec<S> unit;
  for (const auto& c : a.one()) unit.push_back(map(c));
  return SCAlgebra<S>::unchecked(target, a.labels(), std::move(t), std::move(unit));
}

// ---------------------------------------------------------------------------
// Linear-algebra computations over field coefficients.

// A subspace closed under multiplication by basis elements on both sides.
template <CoefficientField F>
class TwoSidedIdeal {
 public:
  static TwoSidedIdeal verified(const SCAlgebra<F>& a, Subspace<F> s) {
    for (const auto& x : s.basis())
      for (std::size_t i = 0; i < a.dim(); ++i) {
        const auto ei = a.basis(i);
        if (!s.contains(a.mul(ei, x)) || !s.contains(a.mul(x, ei))) throw Error("subspace is not a two-sided ideal");
      }
    return TwoSidedIdeal(std::move(s));
  }
  // For subspaces already known to be closed (saturation results).
  static TwoSidedIdeal trusted(Subspace<F> s) { return TwoSidedIdeal(std::move(s)); }
  static TwoSidedIdeal zero(const SCAlgebra<F>& a) { return TwoSidedIdeal(Subspace<F>(a.ring(), a.dim())); }
  static TwoSidedIdeal whole(const SCAlgebra<F>& a) { return TwoSidedIdeal(Subspace<F>::whole(a.ring(), a.dim())); }

  const Subspace<F>& space() const noexcept { return space_; }
  std::size_t dim() const noexcept { return space_.dim(); }
  const std::vector<Vec<F>>& basis() const noexcept { return space_.basis(); }
  bool contains(const Vec<F>& v) const { return space_.contains(v); }
  bool contains(const TwoSidedIdeal& o) const { return space_.contains(o.space_); }

  friend bool operator==(const TwoSidedIdeal& a, const TwoSidedIdeal& b) { return a.space_ == b.space_; }

 private:
  explicit TwoSidedIdeal(Subspace<F> s) : space_(std::move(s)) {}
  Subspace<F> space_;
};

// Smallest two-sided ideal containing gens, by saturation to a fixed point.
template <CoefficientField F>
TwoSidedIdeal<F> ideal_generated(const SCAlgebra<F>& a, const std::vector<Vec<F>>& gens) {
  Subspace<F> s(a.ring(), a.dim());
  std::vector<Vec<F>> queue;
  for (const auto& g : gens)
    if (s.insert(g)) queue.push_back(g);
  while (!queue.empty()) {
    Vec<F> x = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const auto ei = a.basis(i);
      for (auto y : {a.mul(ei, x), a.mul(x, ei)})
        if (s.insert(y)) queue.push_back(std::move(y));
    }
  }
  return TwoSidedIdeal<F>::trusted(std::move(s));
}

// The ideal generated by all products x y, x in I, y in J.
template <CoefficientField F>
TwoSidedIdeal<F> ideal_product(const SCAlgebra<F>& a, const TwoSidedIdeal<F>& i, const TwoSidedIdeal<F>& j) {
  std::vector<Vec<F>> gens;
  for (const auto& x : i.basis())
    for (const auto& y : j.basis()) gens.push_back(a.mul(x, y));
  return ideal_generated(a, gens);
}

// {x : s x = x s for all s in S}.
template <CoefficientField F>
Subspace<F> centralizer(const SCAlgebra<F>& a, const std::vector<Vec<F>>& elements) {
  const std::size_t d = a.dim();
  std::vector<Vec<F>> rows;
  for (const auto& s : elements) {
    // column j of the map x -> s x - x s is s e_j - e_j s
    std::vector<Vec<F>> cols;
    for (std::size_t j = 0; j < d; ++j) cols.push_back(a.commutator(s, a.basis(j)));
    for (std::size_t i = 0; i < d; ++i) {
      Vec<F> row(d);
      for (std::size_t j = 0; j < d; ++j) row[j] = cols[j][i];
      rows.push_back(std::move(row));
    }
  }
  return kernel(a.ring(), rows, d);
}

template <CoefficientField F>
Subspace<F> center(const SCAlgebra<F>& a) {
  std::vector<Vec<F>> all;
  for (std::size_t i = 0; i < a.dim(); ++i) all.push_back(a.basis(i));
  return centralizer(a, all);
}

// The algebra structure on a subspace that contains 1 and is closed under
// multiplication, on the subspace's echelon basis.
template <CoefficientField F>
struct Subalgebra {
  SCAlgebra<F> algebra;
  Subspace<F> space;

  Vec<F> include(const Vec<F>& x) const {
    Vec<F> v = vec::zero(space.field(), space.ambient());
    for (std::size_t i = 0; i < x.size(); ++i) vec::axpy(space.field(), v, x[i], space.basis()[i]);
    return v;
  }
  Vec<F> restrict(const Vec<F>& v) const {
    auto c = space.coordinates(v);
    if (!c) throw InternalError("element outside subalgebra");
    return *c;
  }
};

template <CoefficientField F>
Subalgebra<F> subalgebra(const SCAlgebra<F>& a, const Subspace<F>& s, const std::string& prefix = "z") {
  const F& f = a.ring();
  const std::size_t m = s.dim();
  std::vector<typename F::value_type> t(m * m * m, f.zero());
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) {
      auto c = s.coordinates(a.mul(s.basis()[i], s.basis()[j]));
      if (!c) throw Error("subspace is not closed under multiplication");
      for (std::size_t k = 0; k < m; ++k) t[(i * m + j) * m + k] = (*c)[k];
    }
  auto unit = s.coordinates(a.one());
  if (!unit) throw Error("subspace does not contain 1");
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) labels.push_back(prefix + std::to_string(i));
  return {SCAlgebra<F>::unchecked(f, std::move(labels), std::move(t), std::move(*unit)), s};
}

// Minimal polynomial of x over the coefficient field, with `unit` as x^0
// (so it can be taken inside a corner e A e).
template <CoefficientField F>
poly::Poly<F> minimal_polynomial(const SCAlgebra<F>& a, const Vec<F>& x, const Vec<F>& unit) {
  const F& f = a.ring();
  std::vector<Vec<F>> powers{unit};
  while (true) {
    Vec<F> next = a.mul(powers.back(), x);
    if (auto c = solve_combination(f, powers, next)) {
      poly::Poly<F> m(powers.size() + 1, f.zero());
      for (std::size_t i = 0; i < powers.size(); ++i) m[i] = f.neg((*c)[i]);
      m[powers.size()] = f.one();
      return m;
    }
    powers.push_back(std::move(next));
    if (powers.size() > a.dim() + 1) throw InternalError("minimal polynomial degree exceeds dimension");
  }
}

// A / I on the unit vectors of the non-pivot columns of I, with the projection.
template <CoefficientField F>
struct Quotient {
  SCAlgebra<F> algebra;
  TwoSidedIdeal<F> ideal;
  std::vector<std::size_t> kept;

  Vec<F> project(const Vec<F>& x) const {
    Vec<F> r = ideal.space().reduce(x);
    Vec<F> out;
    out.reserve(kept.size());
    for (auto c : kept) out.push_back(r[c]);
    return out;
  }
  // The section sending a quotient basis vector to the kept basis vector.
  Vec<F> lift(const Vec<F>& y) const {
    Vec<F> x = vec::zero(ideal.space().field(), ideal.space().ambient());
    for (std::size_t i = 0; i < kept.size(); ++i) x[kept[i]] = y[i];
    return x;
  }
};

template <CoefficientField F>
Quotient<F> quotient(const SCAlgebra<F>& a, const TwoSidedIdeal<F>& ideal) {
  if (ideal.contains(a.one())) throw Error("quotient by an improper ideal");
  const F& f = a.ring();
  Quotient<F> q{a, ideal, ideal.space().free_columns()};
  const std::size_t m = q.kept.size();
  std::vector<typename F::value_type> t(m * m * m, f.zero());
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(a.labels()[q.kept[i]]);
    for (std::size_t j = 0; j < m; ++j) {
      auto c = q.project(a.product(q.kept[i], q.kept[j]));
      for (std::size_t k = 0; k < m; ++k) t[(i * m + j) * m + k] = c[k];
    }
  }
  q.algebra = SCAlgebra<F>::build(f, std::move(labels), std::move(t), q.project(a.one()));
  return q;
}

}  // namespace hasse
