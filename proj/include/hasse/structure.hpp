#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hasse/algebra.hpp"
#include "hasse/error.hpp"
#include "hasse/field.hpp"
#include "hasse/linalg.hpp"
#include "hasse/poly.hpp"

// Structure theory of finite-dimensional algebras over finite fields.
namespace hasse {

using FqAlgebra = SCAlgebra<Field>;
using FqVec = Vec<Field>;
using FqIdeal = TwoSidedIdeal<Field>;

namespace detail {

// The algebra viewed over its prime field: basis e_i z^s, index i k + s.
struct PrimeFieldView {
  Field prime;
  std::size_t k;
  FqAlgebra algebra;
};

inline PrimeFieldView restrict_to_prime_field(const FqAlgebra& a) {
  const Field& f = a.ring();
  const std::size_t k = f.degree(), d = a.dim(), n = d * k;
  Field fp = Field::make(f.characteristic(), 1);
  if (k == 1) return {fp, 1, a};
  std::vector<Field::value_type> zpow(2 * k - 1);
  zpow[0] = f.one();
  for (std::size_t s = 1; s < zpow.size(); ++s) zpow[s] = f.mul(zpow[s - 1], f.generator());
  std::vector<Field::value_type> t(n * n * n, 0);
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j)
      for (const auto& [m, c] : [&] {
             std::vector<std::pair<std::size_t, Field::value_type>> nz;
             for (std::size_t m = 0; m < d; ++m)
               if (!f.is_zero(a.constant(i, j, m))) nz.emplace_back(m, a.constant(i, j, m));
             return nz;
           }())
        for (std::size_t s = 0; s < k; ++s)
          for (std::size_t u = 0; u < k; ++u) {
            auto digits = f.digits(f.mul(zpow[s + u], c));
            for (std::size_t w = 0; w < k; ++w)
              t[((i * k + s) * n + (j * k + u)) * n + (m * k + w)] = static_cast<Field::value_type>(digits[w]);
          }
  FqVec unit(n, 0);
  for (std::size_t i = 0; i < d; ++i) {
    auto digits = f.digits(a.one()[i]);
    for (std::size_t w = 0; w < k; ++w) unit[i * k + w] = static_cast<Field::value_type>(digits[w]);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t s = 0; s < k; ++s) labels.push_back(a.labels()[i] + "*z^" + std::to_string(s));
  return {fp, k, FqAlgebra::unchecked(fp, std::move(labels), std::move(t), std::move(unit))};
}

// g_i(x) = Tr(X^(p^i)) / p^i mod p for an integer lift X of left
// multiplication by x.
inline std::uint64_t power_trace_form(const FqAlgebra& a, const FqVec& x, unsigned level) {
  const std::uint64_t p = a.ring().characteristic();
  const std::size_t n = a.dim();
  const std::uint64_t pi = checked_pow(p, level), mod = pi * p;
  auto cols = a.left_columns(x);
  std::vector<std::uint64_t> m(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m[i * n + j] = cols[j][i];
  auto matmul = [&](const std::vector<std::uint64_t>& u, const std::vector<std::uint64_t>& v) {
    std::vector<std::uint64_t> w(n * n, 0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) {
        const std::uint64_t c = u[i * n + l];
        if (c == 0) continue;
        for (std::size_t j = 0; j < n; ++j) w[i * n + j] = (w[i * n + j] + c * v[l * n + j]) % mod;
      }
    return w;
  };
  std::vector<std::uint64_t> r(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) r[i * n + i] = 1 % mod;
  std::uint64_t e = pi;
  while (e) {
    if (e & 1) r = matmul(r, m);
    e >>= 1;
    if (e) m = matmul(m, m);
  }
  std::uint64_t tr = 0;
  for (std::size_t i = 0; i < n; ++i) tr = (tr + r[i * n + i]) % mod;
  ensure(tr % pi == 0, "power trace not divisible by p^i");
  return (tr / pi) % p;
}

}  // namespace detail

// Jacobson radical over a finite field, by the power-trace-form filtration of
// Cohen, Ivanyos and Wales applied over the prime field: I_{-1} = A,
// I_i = {x in I_{i-1} : g_i(x y) = 0 for all y}, and J = I_l, l = floor(log_p n).
inline FqIdeal radical(const FqAlgebra& a) {
  const Field& f = a.ring();
  const auto view = detail::restrict_to_prime_field(a);
  const FqAlgebra& b = view.algebra;
  const Field& fp = view.prime;
  const std::size_t n = b.dim();
  const std::uint64_t p = f.characteristic();
  unsigned top = 0;
  for (std::uint64_t w = p; w <= n; w *= p) ++top;

  std::vector<FqVec> current;
  for (std::size_t i = 0; i < n; ++i) current.push_back(b.basis(i));
  for (unsigned level = 0; level <= top && !current.empty(); ++level) {
    std::vector<FqVec> rows(n, FqVec(current.size(), 0));
    for (std::size_t j = 0; j < n; ++j) {
      const FqVec y = b.basis(j);
      for (std::size_t c = 0; c < current.size(); ++c)
        rows[j][c] = static_cast<Field::value_type>(detail::power_trace_form(b, b.mul(current[c], y), level));
    }
    auto ker = kernel(fp, rows, current.size());
    std::vector<FqVec> next;
    for (const auto& coeffs : ker.basis()) {
      FqVec v(n, 0);
      for (std::size_t c = 0; c < current.size(); ++c) vec::axpy(fp, v, coeffs[c], current[c]);
      next.push_back(std::move(v));
    }
    current = std::move(next);
  }

  std::vector<FqVec> gens;
  const std::size_t k = view.k;
  for (const auto& v : current) {
    FqVec w(a.dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      std::vector<std::uint64_t> digits(v.begin() + i * k, v.begin() + (i + 1) * k);
      w[i] = f.from_digits(digits);
    }
    gens.push_back(std::move(w));
  }
  return FqIdeal::verified(a, Subspace<Field>::span(f, a.dim(), gens));
}

// Smallest k with I^k = 0, or 0 if I is not nilpotent.
inline std::size_t nilpotency_index(const FqAlgebra& a, const FqIdeal& ideal) {
  FqIdeal power = ideal;
  for (std::size_t k = 1; k <= a.dim() + 1; ++k) {
    if (power.dim() == 0) return k;
    power = ideal_product(a, power, ideal);
  }
  return 0;
}

// Complete orthogonal primitive idempotents of a commutative semisimple
// algebra, sorted by coefficient vector. The Berlekamp subalgebra
// ker(x -> x^q - x) is a product of copies of F_q; each of its basis vectors
// refines the current idempotents by the distinct eigenvalues it takes.
inline std::vector<FqVec> split_commutative(const FqAlgebra& c) {
  if (!c.is_commutative()) throw Error("split_commutative: algebra is not commutative");
  if (radical(c).dim() != 0) throw Error("split_commutative: radical is nonzero");
  const Field& f = c.ring();
  const Integer q = f.size();
  std::vector<FqVec> cols;
  for (std::size_t j = 0; j < c.dim(); ++j) cols.push_back(c.sub(c.pow(c.basis(j), q), c.basis(j)));
  const auto berlekamp = kernel_of_columns(f, cols, c.dim());

  std::vector<FqVec> idempotents{c.one()};
  for (const auto& b : berlekamp.basis()) {
    std::vector<FqVec> refined;
    for (const auto& e : idempotents) {
      const FqVec be = c.mul(b, e);
      const auto roots = split_roots(f, minimal_polynomial(c, be, e));
      if (roots.size() == 1) {
        refined.push_back(e);
        continue;
      }
      for (auto lambda : roots) {
        FqVec part = e;
        for (auto mu : roots) {
          if (mu == lambda) continue;
          FqVec factor = c.sub(be, c.scale(e, mu));
          part = c.scale(c.mul(part, factor), f.inv(f.sub(lambda, mu)));
        }
        refined.push_back(std::move(part));
      }
    }
    idempotents = std::move(refined);
  }
  std::sort(idempotents.begin(), idempotents.end());
  return idempotents;
}

struct WedderburnBlock {
  unsigned matrix_size = 1;    // r
  unsigned center_degree = 1;  // n, the block's center is F_{q^n}
  FqIdeal kernel;              // kernel of A -> block
  FqVec central_idempotent;    // in A/J, on the quotient basis
};

struct WedderburnData {
  FqIdeal radical;
  Quotient<Field> semisimple;  // A/J
  std::vector<WedderburnBlock> blocks;
};

inline bool ideal_basis_less(const FqIdeal& a, const FqIdeal& b) { return a.basis() < b.basis(); }

// Radical and simple blocks; block sizes come from dim = r^2 n, valid since
// finite fields have trivial Brauer group.
inline WedderburnData wedderburn(const FqAlgebra& a) {
  const Field& f = a.ring();
  FqIdeal j = radical(a);
  Quotient<Field> q = quotient(a, j);
  const FqAlgebra& s = q.algebra;
  const Subspace<Field> z = center(s);
  const auto zalg = subalgebra(s, z);
  std::vector<WedderburnBlock> blocks;
  for (const auto& idem : split_commutative(zalg.algebra)) {
    const FqVec eps = zalg.include(idem);
    std::vector<FqVec> span_block, span_center;
    for (std::size_t i = 0; i < s.dim(); ++i) span_block.push_back(s.mul(eps, s.basis(i)));
    for (const auto& zb : z.basis()) span_center.push_back(s.mul(eps, zb));
    const std::size_t dim_block = Subspace<Field>::span(f, s.dim(), span_block).dim();
    const std::size_t n = Subspace<Field>::span(f, s.dim(), span_center).dim();
    detail::ensure(n > 0 && dim_block % n == 0, "block dimension not divisible by center degree");
    const auto r = exact_sqrt(dim_block / n);
    detail::ensure(r.has_value(), "block dimension over its center is not a square");

    const FqVec complement = s.sub(s.one(), eps);
    std::vector<FqVec> gens = j.basis();
    for (std::size_t i = 0; i < s.dim(); ++i) gens.push_back(q.lift(s.mul(complement, s.basis(i))));
    FqIdeal kernel = FqIdeal::verified(a, Subspace<Field>::span(f, a.dim(), gens));
    blocks.push_back({static_cast<unsigned>(*r), static_cast<unsigned>(n), std::move(kernel), eps});
  }
  std::sort(blocks.begin(), blocks.end(), [](const WedderburnBlock& x, const WedderburnBlock& y) {
    if (x.center_degree != y.center_degree) return x.center_degree < y.center_degree;
    if (x.matrix_size != y.matrix_size) return x.matrix_size < y.matrix_size;
    return ideal_basis_less(x.kernel, y.kernel);
  });
  return {std::move(j), std::move(q), std::move(blocks)};
}

// A closed point of a finite-dimensional algebra: a maximal two-sided ideal
// with residue algebra M_r(F_{q'}), q' = q^n.
struct Point {
  FqIdeal ideal;
  unsigned matrix_size = 1;
  unsigned center_degree = 1;
  Integer norm;  // q'

  std::string residue_name(const Field& f) const {
    std::string field = "GF(" + std::to_string(f.characteristic());
    const unsigned e = f.degree() * center_degree;
    if (e > 1) field += "^" + std::to_string(e);
    field += ")";
    return "M_" + std::to_string(matrix_size) + "(" + field + ")";
  }
};

inline std::vector<Point> max_two_sided_ideals(const FqAlgebra& a, const WedderburnData& w) {
  std::vector<Point> pts;
  for (const auto& b : w.blocks)
    pts.push_back({b.kernel, b.matrix_size, b.center_degree, ipow(Integer(a.ring().size()), b.center_degree)});
  std::sort(pts.begin(), pts.end(), [](const Point& x, const Point& y) {
    if (x.norm != y.norm) return x.norm < y.norm;
    return ideal_basis_less(x.ideal, y.ideal);
  });
  return pts;
}

inline std::vector<Point> max_two_sided_ideals(const FqAlgebra& a) { return max_two_sided_ideals(a, wedderburn(a)); }

// Pairs (m_i, e_i): e_i^2 = e_i, e_i e_j = 0, sum e_i = 1, e_i outside m_i and
// inside every other maximal ideal.
struct IdempotentFamily {
  std::vector<std::pair<FqIdeal, FqVec>> members;
};

inline void check_idempotent_family(const FqAlgebra& a, const IdempotentFamily& fam) {
  FqVec total = a.zero();
  for (std::size_t i = 0; i < fam.members.size(); ++i) {
    const auto& [mi, ei] = fam.members[i];
    if (a.mul(ei, ei) != ei) throw Error("idempotent family: e^2 != e");
    if (mi.contains(ei)) throw Error("idempotent family: e lies in its own maximal ideal");
    for (std::size_t j = 0; j < fam.members.size(); ++j) {
      if (i == j) continue;
      if (!vec::is_zero(a.ring(), a.mul(ei, fam.members[j].second))) throw Error("idempotent family: not orthogonal");
      if (!fam.members[j].first.contains(ei)) throw Error("idempotent family: e not in the other maximal ideals");
    }
    total = a.add(total, ei);
  }
  if (total != a.one()) throw Error("idempotent family: does not sum to 1");
}

// Lifts the central idempotents of A/J to a complete orthogonal family in A
// with e <- e + (1 - 2e)(e^2 - e); the family follows max_two_sided_ideals order.
inline IdempotentFamily block_idempotents(const FqAlgebra& a) {
  const Field& f = a.ring();
  const WedderburnData w = wedderburn(a);
  const auto points = max_two_sided_ideals(a, w);
  std::size_t bound = 1;
  while ((std::size_t{1} << (bound - 1)) < a.dim()) ++bound;
  bound += 1;

  IdempotentFamily fam;
  FqVec rest = a.one();
  for (std::size_t i = 0; i < points.size(); ++i) {
    const auto it = std::find_if(w.blocks.begin(), w.blocks.end(), [&](const auto& b) { return b.kernel == points[i].ideal; });
    detail::ensure(it != w.blocks.end(), "block for point not found");
    FqVec e;
    if (i + 1 == points.size()) {
      e = rest;
    } else {
      e = a.mul(a.mul(rest, w.semisimple.lift(it->central_idempotent)), rest);
      std::size_t steps = 0;
      while (true) {
        const FqVec defect = a.sub(a.mul(e, e), e);
        if (vec::is_zero(f, defect)) break;
        detail::ensure(++steps <= bound, "idempotent lifting did not converge");
        const FqVec factor = a.sub(a.one(), a.scale(e, f.from_int(2)));
        e = a.add(e, a.mul(factor, defect));
      }
    }
    rest = a.sub(rest, e);
    fam.members.emplace_back(points[i].ideal, std::move(e));
  }
  check_idempotent_family(a, fam);
  return fam;
}

// Whether I is contained in m, cross-checked against e not in I for an
// idempotent e for (A, m).
inline bool idempotent_detects_ideal(const FqAlgebra& a, const FqIdeal& m, const FqVec& e, const FqIdeal& i) {
  if (a.mul(e, e) != e || m.contains(e)) throw Error("element is not an idempotent for the maximal ideal");
  for (const auto& other : max_two_sided_ideals(a))
    if (!(other.ideal == m) && !other.ideal.contains(e)) throw Error("element is not an idempotent for the maximal ideal");
  const bool contained = m.contains(i);
  detail::ensure(contained == !i.contains(e), "idempotent criterion disagrees with containment");
  return contained;
}

}  // namespace hasse
