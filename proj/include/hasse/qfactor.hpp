#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/integer.hpp"
#include "hasse/poly.hpp"
#include "hasse/rings.hpp"

// Factorization of squarefree polynomials over Q: rational roots first, then
// Kronecker's interpolation search for the higher-degree factors.
namespace hasse::qfactor {

using QPoly = poly::Poly<Rationals>;
using ZPoly = std::vector<Integer>;

inline Integer content(const ZPoly& f) {
  Integer g = 0;
  for (const auto& c : f) g = boost::multiprecision::gcd(g, c);
  return g;
}

// Integer multiple with coprime coefficients and positive leading coefficient.
inline ZPoly primitive_part(const QPoly& f) {
  Integer l = 1;
  for (const auto& c : f) l = boost::multiprecision::lcm(l, denominator(c));
  ZPoly z;
  for (const auto& c : f) z.push_back(numerator(c) * (l / denominator(c)));
  const Integer g = content(z);
  if (g != 0)
    for (auto& c : z) c /= g;
  if (!z.empty() && z.back() < 0)
    for (auto& c : z) c = -c;
  return z;
}

inline QPoly to_q(const ZPoly& z) {
  QPoly q;
  for (const auto& c : z) q.push_back(Rational(c));
  poly::trim(Rationals{}, q);
  return q;
}

inline Integer eval(const ZPoly& f, const Integer& x) {
  Integer r = 0;
  for (std::size_t i = f.size(); i-- > 0;) r = r * x + f[i];
  return r;
}

// Positive divisors of |n|, n != 0.
inline std::vector<Integer> divisors(Integer n) {
  if (n < 0) n = -n;
  if (n == 0) throw InternalError("divisors of zero");
  if (n > Integer(1000000000000LL)) throw Error("rational factorization: coefficient too large for the divisor search");
  std::vector<Integer> small, large;
  for (Integer d = 1; d * d <= n; ++d)
    if (n % d == 0) {
      small.push_back(d);
      if (d * d != n) large.push_back(n / d);
    }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

// Exact division over Z; nullopt if g does not divide f.
inline std::optional<ZPoly> divide_exact(const ZPoly& f, const ZPoly& g) {
  Rationals q;
  auto [quo, rem] = poly::divmod(q, to_q(f), to_q(g));
  if (!rem.empty()) return std::nullopt;
  ZPoly out;
  for (const auto& c : quo) {
    if (denominator(c) != 1) return std::nullopt;
    out.push_back(numerator(c));
  }
  return out;
}

// Lagrange interpolation through (x_i, y_i); nullopt if not integral.
inline std::optional<ZPoly> interpolate(const std::vector<Integer>& xs, const std::vector<Integer>& ys) {
  Rationals q;
  QPoly acc;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    QPoly term{Rational(ys[i])};
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (i == j) continue;
      const Rational inv = Rational(1) / Rational(xs[i] - xs[j]);
      term = poly::mul(q, term, QPoly{Rational(-xs[j]) * inv, inv});
    }
    acc = poly::add(q, acc, term);
  }
  ZPoly out;
  for (const auto& c : acc) {
    if (denominator(c) != 1) return std::nullopt;
    out.push_back(numerator(c));
  }
  return out;
}

namespace detail {

inline std::vector<Integer> sample_points(std::size_t count) {
  std::vector<Integer> xs;
  for (long long k = 0; xs.size() < count; ++k) {
    xs.push_back(k);
    if (k > 0 && xs.size() < count) xs.push_back(-k);
  }
  return xs;
}

// One nontrivial factor of degree e of a primitive f without rational roots.
inline std::optional<ZPoly> kronecker_factor(const ZPoly& f, std::size_t e) {
  const auto xs = sample_points(e + 1);
  std::vector<std::vector<Integer>> choices;
  std::size_t combos = 1;
  for (const auto& x : xs) {
    const Integer v = eval(f, x);
    std::vector<Integer> ds;
    for (const auto& d : divisors(v)) {
      ds.push_back(d);
      ds.push_back(-d);
    }
    combos *= ds.size();
    if (combos > 4000000) throw Error("rational factorization: Kronecker search too large");
    choices.push_back(std::move(ds));
  }
  std::vector<std::size_t> idx(xs.size(), 0);
  while (true) {
    std::vector<Integer> ys;
    for (std::size_t i = 0; i < xs.size(); ++i) ys.push_back(choices[i][idx[i]]);
    if (auto g = interpolate(xs, ys); g && g->size() == e + 1 && g->back() > 0)
      if (divide_exact(f, *g)) return g;
    std::size_t k = 0;
    while (k < idx.size() && ++idx[k] == choices[k].size()) idx[k++] = 0;
    if (k == idx.size()) return std::nullopt;
  }
}

inline void split_no_roots(const ZPoly& f, std::vector<ZPoly>& out) {
  const std::size_t n = f.size() - 1;
  for (std::size_t e = 2; 2 * e <= n; ++e)
    if (auto g = kronecker_factor(f, e)) {
      split_no_roots(*g, out);
      split_no_roots(*divide_exact(f, *g), out);
      return;
    }
  out.push_back(f);
}

}  // namespace detail

// Monic irreducible factors of a squarefree polynomial over Q, sorted by
// degree and then coefficients.
inline std::vector<QPoly> factor_squarefree(const QPoly& m) {
  Rationals q;
  if (m.size() < 2) throw Error("factorization of a constant");
  ZPoly f = primitive_part(m);
  std::vector<ZPoly> factors;
  while (f.size() > 1 && f[0] == 0) {
    factors.push_back({0, 1});
    f.erase(f.begin());
  }
  bool found = true;
  while (found && f.size() > 2) {
    found = false;
    for (const auto& num : divisors(f.front())) {
      for (const auto& den : divisors(f.back())) {
        for (int s : {1, -1}) {
          // root s num / den  <->  factor den x - s num
          if (boost::multiprecision::gcd(num, den) != 1) continue;
          ZPoly lin{-s * num, den};
          if (auto quo = divide_exact(f, lin)) {
            factors.push_back(lin);
            f = *quo;
            found = true;
            break;
          }
        }
        if (found) break;
      }
      if (found) break;
    }
  }
  if (f.size() == 2) {
    factors.push_back(f);
  } else if (f.size() > 2) {
    detail::split_no_roots(f, factors);
  }
  std::vector<QPoly> out;
  for (const auto& z : factors) out.push_back(poly::monic(q, to_q(z)));
  std::sort(out.begin(), out.end(), [](const QPoly& a, const QPoly& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return std::lexicographical_compare(a.rbegin(), a.rend(), b.rbegin(), b.rend());
  });
  return out;
}

}  // namespace hasse::qfactor
