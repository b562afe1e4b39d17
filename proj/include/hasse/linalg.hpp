#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/poly.hpp"

namespace hasse {

template <CoefficientRing R>
using Vec = std::vector<typename R::value_type>;

namespace vec {

template <CoefficientRing R>
Vec<R> zero(const R& r, std::size_t n) {
  return Vec<R>(n, r.zero());
}

template <CoefficientRing R>
Vec<R> unit(const R& r, std::size_t n, std::size_t i) {
  Vec<R> v(n, r.zero());
  v[i] = r.one();
  return v;
}

template <CoefficientRing R>
bool is_zero(const R& r, const Vec<R>& v) {
  return std::all_of(v.begin(), v.end(), [&](const auto& x) { return r.is_zero(x); });
}

template <CoefficientRing R>
Vec<R> add(const R& r, Vec<R> a, const Vec<R>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = r.add(a[i], b[i]);
  return a;
}

template <CoefficientRing R>
Vec<R> sub(const R& r, Vec<R> a, const Vec<R>& b) {
  for (std::size_t i = 0; i < a.size(); ++i) a[i] = r.sub(a[i], b[i]);
  return a;
}

template <CoefficientRing R>
Vec<R> scale(const R& r, Vec<R> a, const typename R::value_type& s) {
  for (auto& x : a) x = r.mul(x, s);
  return a;
}

// y += s x
template <CoefficientRing R>
void axpy(const R& r, Vec<R>& y, const typename R::value_type& s, const Vec<R>& x) {
  if (r.is_zero(s)) return;
  for (std::size_t i = 0; i < y.size(); ++i)
    if (!r.is_zero(x[i])) y[i] = r.add(y[i], r.mul(s, x[i]));
}

}  // namespace vec

// Reduced row-echelon form of a list of rows; returns the nonzero rows and
// their pivot columns (strictly increasing).
template <CoefficientField F>
std::pair<std::vector<Vec<F>>, std::vector<std::size_t>> rref(const F& f, std::vector<Vec<F>> rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t col = 0; col < ncols && rank < rows.size(); ++col) {
    std::size_t sel = rank;
    while (sel < rows.size() && f.is_zero(rows[sel][col])) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[rank], rows[sel]);
    const auto inv = f.inv(rows[rank][col]);
    for (auto& x : rows[rank]) x = f.mul(x, inv);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == rank || f.is_zero(rows[i][col])) continue;
      const auto c = f.neg(rows[i][col]);
      vec::axpy(f, rows[i], c, rows[rank]);
    }
    pivots.push_back(col);
    ++rank;
  }
  rows.resize(rank);
  return {std::move(rows), std::move(pivots)};
}

// A linear subspace of F^n kept in reduced row-echelon form, so two subspaces
// are equal exactly when their bases are.
template <CoefficientField F>
class Subspace {
 public:
  Subspace(F f, std::size_t ambient) : field_(std::move(f)), ambient_(ambient) {}

  static Subspace span(F f, std::size_t ambient, const std::vector<Vec<F>>& vectors) {
    Subspace s(std::move(f), ambient);
    auto [rows, pivots] = rref(s.field_, vectors, ambient);
    s.rows_ = std::move(rows);
    s.pivots_ = std::move(pivots);
    return s;
  }

  static Subspace whole(F f, std::size_t ambient) {
    std::vector<Vec<F>> rows;
    for (std::size_t i = 0; i < ambient; ++i) rows.push_back(vec::unit(f, ambient, i));
    return span(std::move(f), ambient, rows);
  }

  const F& field() const noexcept { return field_; }
  std::size_t ambient() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return rows_.size(); }
  const std::vector<Vec<F>>& basis() const noexcept { return rows_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  // v minus its projection along the pivot columns; zero iff v is contained.
  Vec<F> reduce(Vec<F> v) const {
    for (std::size_t i = 0; i < rows_.size(); ++i) {
      const auto& c = v[pivots_[i]];
      if (!field_.is_zero(c)) vec::axpy(field_, v, field_.neg(c), rows_[i]);
    }
    return v;
  }

  bool contains(const Vec<F>& v) const { return vec::is_zero(field_, reduce(v)); }

  bool contains(const Subspace& other) const {
    return std::all_of(other.rows_.begin(), other.rows_.end(), [&](const auto& r) { return contains(r); });
  }

  // Coefficients of v in basis(), if v lies in the subspace.
  std::optional<Vec<F>> coordinates(const Vec<F>& v) const {
    if (!contains(v)) return std::nullopt;
    Vec<F> c(rows_.size());
    for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
    return c;
  }

  // Adds v to the span; returns false if it was already contained.
  bool insert(const Vec<F>& v) {
    Vec<F> r = reduce(v);
    std::size_t col = 0;
    while (col < ambient_ && field_.is_zero(r[col])) ++col;
    if (col == ambient_) return false;
    r = vec::scale(field_, std::move(r), field_.inv(r[col]));
    for (auto& row : rows_)
      if (!field_.is_zero(row[col])) vec::axpy(field_, row, field_.neg(row[col]), r);
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), col) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, col);
    rows_.insert(rows_.begin() + pos, std::move(r));
    return true;
  }

  Subspace sum(const Subspace& other) const {
    Subspace s = *this;
    for (const auto& r : other.rows_) s.insert(r);
    return s;
  }

  Subspace intersect(const Subspace& other) const;

  // Columns that are not pivots; the unit vectors on them span a complement.
  std::vector<std::size_t> free_columns() const {
    std::vector<std::size_t> out;
    std::size_t j = 0;
    for (std::size_t c = 0; c < ambient_; ++c) {
      if (j < pivots_.size() && pivots_[j] == c)
        ++j;
      else
        out.push_back(c);
    }
    return out;
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.pivots_ == b.pivots_ && a.rows_ == b.rows_;
  }

 private:
  F field_;
  std::size_t ambient_;
  std::vector<Vec<F>> rows_;
  std::vector<std::size_t> pivots_;
};

// Null space {x : M x = 0} of a matrix given by its rows (each of length ncols).
template <CoefficientField F>
Subspace<F> kernel(const F& f, const std::vector<Vec<F>>& rows, std::size_t ncols) {
  auto [red, pivots] = rref(f, rows, ncols);
  std::vector<Vec<F>> basis;
  std::vector<bool> is_pivot(ncols, false);
  for (auto p : pivots) is_pivot[p] = true;
  for (std::size_t free = 0; free < ncols; ++free) {
    if (is_pivot[free]) continue;
    Vec<F> v = vec::unit(f, ncols, free);
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = f.neg(red[i][free]);
    basis.push_back(std::move(v));
  }
  return Subspace<F>::span(f, ncols, basis);
}

// Kernel of the map F^m -> F^n, x -> sum_i x_i columns[i].
template <CoefficientField F>
Subspace<F> kernel_of_columns(const F& f, const std::vector<Vec<F>>& columns, std::size_t n) {
  std::vector<Vec<F>> rows(n, vec::zero(f, columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j)
    for (std::size_t i = 0; i < n; ++i) rows[i][j] = columns[j][i];
  return kernel(f, rows, columns.size());
}

// Some x with sum_i x_i vectors[i] = target, if one exists.
template <CoefficientField F>
std::optional<Vec<F>> solve_combination(const F& f, const std::vector<Vec<F>>& vectors, const Vec<F>& target) {
  const std::size_t m = vectors.size(), n = target.size();
  std::vector<Vec<F>> rows(n, vec::zero(f, m + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) rows[i][j] = vectors[j][i];
    rows[i][m] = target[i];
  }
  auto [red, pivots] = rref(f, std::move(rows), m + 1);
  if (!pivots.empty() && pivots.back() == m) return std::nullopt;
  Vec<F> x = vec::zero(f, m);
  for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = red[i][m];
  return x;
}

template <CoefficientField F>
Subspace<F> Subspace<F>::intersect(const Subspace& other) const {
  // Solve sum a_i r_i = sum b_j s_j; the a-parts give the intersection.
  std::vector<Vec<F>> cols;
  for (const auto& r : rows_) cols.push_back(r);
  for (const auto& s : other.rows_) cols.push_back(vec::scale(field_, s, field_.neg(field_.one())));
  auto ker = kernel_of_columns(field_, cols, ambient_);
  std::vector<Vec<F>> out;
  for (const auto& k : ker.basis()) {
    Vec<F> v = vec::zero(field_, ambient_);
    for (std::size_t i = 0; i < rows_.size(); ++i) vec::axpy(field_, v, k[i], rows_[i]);
    out.push_back(std::move(v));
  }
  return span(field_, ambient_, out);
}

}  // namespace hasse
