#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "hasse/algebra.hpp"
#include "hasse/error.hpp"
#include "hasse/linalg.hpp"
#include "hasse/structure.hpp"

// Morphisms of algebras, the Procesi and relative-commutativity conditions,
// pullback of primes, and tensor products over a noncommutative base.
namespace hasse {

template <CoefficientRing F>
struct AlgMorphism {
  SCAlgebra<F> source;
  SCAlgebra<F> target;
  std::vector<Vec<F>> images;  // h(e_i)

  Vec<F> apply(const Vec<F>& x) const {
    Vec<F> y = target.zero();
    for (std::size_t i = 0; i < x.size(); ++i) vec::axpy(target.ring(), y, x[i], images[i]);
    return y;
  }
};

// Checks h(1) = 1 and h(e_i e_j) = h(e_i) h(e_j) on all basis pairs.
template <CoefficientRing F>
AlgMorphism<F> make_morphism(SCAlgebra<F> source, SCAlgebra<F> target, std::vector<Vec<F>> images) {
  if (!(source.ring() == target.ring())) throw Error("morphism between algebras over different fields");
  if (images.size() != source.dim()) throw Error("morphism needs one image per source basis vector");
  for (const auto& v : images)
    if (v.size() != target.dim()) throw Error("morphism image has wrong length");
  AlgMorphism<F> h{std::move(source), std::move(target), std::move(images)};
  if (h.apply(h.source.one()) != h.target.one())
    throw LawError(LawError::Law::unitality, {LawError::npos, LawError::npos, LawError::npos}, "morphism does not preserve 1");
  for (std::size_t i = 0; i < h.source.dim(); ++i)
    for (std::size_t j = 0; j < h.source.dim(); ++j)
      if (h.apply(h.source.product(i, j)) != h.target.mul(h.images[i], h.images[j]))
        throw LawError(LawError::Law::multiplicativity, {i, j, LawError::npos},
                       "morphism is not multiplicative at (" + h.source.labels()[i] + ", " + h.source.labels()[j] + ")");
  return h;
}

template <CoefficientRing F>
AlgMorphism<F> identity_morphism(const SCAlgebra<F>& a) {
  std::vector<Vec<F>> im;
  for (std::size_t i = 0; i < a.dim(); ++i) im.push_back(a.basis(i));
  return make_morphism(a, a, std::move(im));
}

// g o h
template <CoefficientRing F>
AlgMorphism<F> compose(const AlgMorphism<F>& g, const AlgMorphism<F>& h) {
  if (!(h.target == g.source)) throw Error("morphisms are not composable");
  std::vector<Vec<F>> im;
  for (const auto& v : h.images) im.push_back(g.apply(v));
  return make_morphism(h.source, g.target, std::move(im));
}

// The rank-1 algebra on the coefficient field and its unit map into `a`.
template <CoefficientRing F>
SCAlgebra<F> ground_algebra(const F& f) {
  return SCAlgebra<F>::unchecked(f, {"1"}, {f.one()}, {f.one()});
}

template <CoefficientRing F>
AlgMorphism<F> unit_morphism(const SCAlgebra<F>& a) {
  return make_morphism(ground_algebra(a.ring()), a, {a.one()});
}

template <CoefficientField F>
bool is_isomorphism(const AlgMorphism<F>& h) {
  return h.source.dim() == h.target.dim() && Subspace<F>::span(h.target.ring(), h.target.dim(), h.images).dim() == h.target.dim();
}

template <CoefficientField F>
Subspace<F> image(const AlgMorphism<F>& h) {
  return Subspace<F>::span(h.target.ring(), h.target.dim(), h.images);
}

// C_B(A) for B an A-algebra via h.
template <CoefficientField F>
Subspace<F> centralizer_of(const AlgMorphism<F>& h) {
  return centralizer(h.target, h.images);
}

namespace detail {
template <CoefficientField F>
bool generates_with(const AlgMorphism<F>& h, const Subspace<F>& s) {
  Subspace<F> span(h.target.ring(), h.target.dim());
  for (const auto& a : h.images)
    for (const auto& z : s.basis()) {
      span.insert(h.target.mul(a, z));
      if (span.dim() == h.target.dim()) return true;
    }
  return span.dim() == h.target.dim();
}
}  // namespace detail

// B is spanned by h(A) C_B(A).
template <CoefficientField F>
bool procesi_check(const AlgMorphism<F>& h) {
  return detail::generates_with(h, centralizer_of(h));
}

// B is spanned by h(A) Z(B).
template <CoefficientField F>
bool rc_check(const AlgMorphism<F>& h) {
  return detail::generates_with(h, center(h.target));
}

// h^-1(q) for a two-sided ideal q of the target.
inline FqIdeal preimage(const AlgMorphism<Field>& h, const FqIdeal& q) {
  std::vector<FqVec> cols;
  for (const auto& v : h.images) cols.push_back(q.space().reduce(v));
  return FqIdeal::verified(h.source, kernel_of_columns(h.source.ring(), cols, h.target.dim()));
}

// Primality of an ideal of a finite-dimensional algebra: the quotient is simple.
struct PrimalityReport {
  FqIdeal ideal;
  std::size_t blocks = 0;
  std::size_t radical_dim = 0;
  bool prime() const { return blocks == 1 && radical_dim == 0; }
};

inline PrimalityReport primality(const FqAlgebra& a, const FqIdeal& ideal) {
  if (ideal.contains(a.one())) return {ideal, 0, 0};
  const auto w = wedderburn(quotient(a, ideal).algebra);
  return {ideal, w.blocks.size(), w.radical.dim()};
}

// h^-1(q) for a maximal q; only defined for Procesi morphisms.
inline FqIdeal pullback_point(const AlgMorphism<Field>& h, const FqIdeal& q) {
  if (!procesi_check(h)) throw Error("the target is not an algebra over the source in the Procesi sense; pullback of primes is undefined");
  auto rep = primality(h.source, preimage(h, q));
  detail::ensure(rep.prime(), "pullback of a maximal ideal along a Procesi morphism is not prime");
  return rep.ideal;
}

// Demonstration mode: computes h^-1(q) without the Procesi precondition and
// reports whether it is prime.
inline PrimalityReport demonstrate_pullback(const AlgMorphism<Field>& h, const FqIdeal& q) {
  return primality(h.source, preimage(h, q));
}

// ---------------------------------------------------------------------------
// B (x)_A C for A-algebras f: A -> B and g: A -> C over a field.

template <CoefficientField F>
struct TensorAlgebra {
  SCAlgebra<F> algebra;
  AlgMorphism<F> from_left;   // B -> B (x)_A C
  AlgMorphism<F> from_right;  // C -> B (x)_A C
  std::vector<std::pair<std::size_t, Vec<F>>> family;  // chosen b_i (x) z
  Subspace<F> relations;                                // inside B (x)_F C
  std::size_t left_dim = 0, right_dim = 0;

  // b (x) c in B (x)_F C, index i * dim C + j.
  Vec<F> pure(const Vec<F>& b, const Vec<F>& c) const {
    const F& f = relations.field();
    Vec<F> v(left_dim * right_dim, f.zero());
    for (std::size_t i = 0; i < left_dim; ++i) {
      if (f.is_zero(b[i])) continue;
      for (std::size_t j = 0; j < right_dim; ++j) v[i * right_dim + j] = f.mul(b[i], c[j]);
    }
    return v;
  }

  // Coefficients of x over the chosen family, modulo the balancing relations.
  Vec<F> rewrite(const Vec<F>& x) const {
    auto c = solve_combination(relations.field(), reduced_family, relations.reduce(x));
    detail::ensure(c.has_value(), "tensor element outside the span of the centralizer family");
    return *c;
  }

  // The B (x)_F C representative of family coefficients.
  Vec<F> reconstruct(const Vec<F>& coeffs) const {
    Vec<F> v(left_dim * right_dim, relations.field().zero());
    for (std::size_t k = 0; k < family.size(); ++k) vec::axpy(relations.field(), v, coeffs[k], family_vectors[k]);
    return v;
  }

  std::vector<Vec<F>> family_vectors;
  std::vector<Vec<F>> reduced_family;
};

template <CoefficientField F>
TensorAlgebra<F> tensor(const AlgMorphism<F>& f, const AlgMorphism<F>& g) {
  if (!(f.source == g.source)) throw Error("tensor factors are algebras over different rings");
  if (!procesi_check(f)) throw Error("left factor fails the Procesi condition");
  if (!procesi_check(g)) throw Error("right factor fails the Procesi condition");
  const SCAlgebra<F>& b = f.target;
  const SCAlgebra<F>& c = g.target;
  const F& field = b.ring();
  TensorAlgebra<F> t{b, f, g, {}, Subspace<F>(field, b.dim() * c.dim()), b.dim(), c.dim(), {}, {}};

  // b f(a) (x) c - b (x) g(a) c
  std::vector<Vec<F>> rel;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t k = 0; k < f.source.dim(); ++k) {
      const auto bf = b.mul(b.basis(i), f.images[k]);
      for (std::size_t j = 0; j < c.dim(); ++j)
        rel.push_back(vec::sub(field, t.pure(bf, c.basis(j)), t.pure(b.basis(i), c.mul(g.images[k], c.basis(j)))));
    }
  t.relations = Subspace<F>::span(field, b.dim() * c.dim(), rel);

  const auto z = centralizer_of(g);
  Subspace<F> acc = t.relations;
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (const auto& zj : z.basis()) {
      const auto v = t.pure(b.basis(i), zj);
      if (acc.insert(v)) {
        t.family.emplace_back(i, zj);
        t.family_vectors.push_back(v);
        t.reduced_family.push_back(t.relations.reduce(v));
      }
    }
  detail::ensure(acc.dim() == b.dim() * c.dim(), "centralizer family does not span the tensor product");

  const std::size_t n = t.family.size();
  std::vector<std::string> labels;
  for (const auto& [i, zj] : t.family) {
    std::size_t which = 0;
    while (z.basis()[which] != zj) ++which;
    labels.push_back(b.labels()[i] + "*z" + std::to_string(which));
  }
  std::vector<typename F::value_type> table(n * n * n, field.zero());
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      const auto& [bi, zi] = t.family[x];
      const auto& [bj, zj] = t.family[y];
      const auto coeffs = t.rewrite(t.pure(b.product(bi, bj), c.mul(zi, zj)));
      for (std::size_t k = 0; k < n; ++k) table[(x * n + y) * n + k] = coeffs[k];
    }
  auto unit = t.rewrite(t.pure(b.one(), c.one()));
  t.algebra = SCAlgebra<F>::build(field, std::move(labels), std::move(table), std::move(unit));

  std::vector<Vec<F>> left, right;
  for (std::size_t i = 0; i < b.dim(); ++i) left.push_back(t.rewrite(t.pure(b.basis(i), c.one())));
  for (std::size_t j = 0; j < c.dim(); ++j) right.push_back(t.rewrite(t.pure(b.one(), c.basis(j))));
  t.from_left = make_morphism(b, t.algebra, std::move(left));
  t.from_right = make_morphism(c, t.algebra, std::move(right));
  return t;
}

// Coefficients of x in B (x)_F C over the chosen b_i (x) z_j family.
template <CoefficientField F>
Vec<F> rewrite_over_centralizer(const TensorAlgebra<F>& t, const Vec<F>& x) {
  return t.rewrite(x);
}

// B (x)_A C -> C (x)_A B, b (x) z -> z (x) b for z in C_C(A).
template <CoefficientField F>
AlgMorphism<F> swap_iso(const TensorAlgebra<F>& bc, const TensorAlgebra<F>& cb) {
  if (bc.left_dim != cb.right_dim || bc.right_dim != cb.left_dim) throw Error("tensor products do not have swapped factors");
  std::vector<Vec<F>> images;
  for (const auto& [i, z] : bc.family) images.push_back(cb.rewrite(cb.pure(z, bc.from_left.source.basis(i))));
  auto h = make_morphism(bc.algebra, cb.algebra, std::move(images));
  if (!is_isomorphism(h)) throw InternalError("swap map is not bijective");
  return h;
}

}  // namespace hasse
