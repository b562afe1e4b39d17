#pragma once

#include <algorithm>
#include <concepts>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/field.hpp"
#include "hasse/integer.hpp"

namespace hasse {

// A coefficient ring is a stateless-or-cheap context object that performs the
// arithmetic on its value_type; values are canonical so == is equality.
template <class R>
concept CoefficientRing = requires(const R& r, typename R::value_type a, long long n) {
  { r.zero() } -> std::convertible_to<typename R::value_type>;
  { r.one() } -> std::convertible_to<typename R::value_type>;
  { r.from_int(n) } -> std::convertible_to<typename R::value_type>;
  { r.add(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.sub(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.neg(a) } -> std::convertible_to<typename R::value_type>;
  { r.mul(a, a) } -> std::convertible_to<typename R::value_type>;
  { r.is_zero(a) } -> std::convertible_to<bool>;
  { r.to_string(a) } -> std::convertible_to<std::string>;
};

template <class F>
concept CoefficientField = CoefficientRing<F> && requires(const F& f, typename F::value_type a) {
  { f.inv(a) } -> std::convertible_to<typename F::value_type>;
};

// Dense univariate polynomials as coefficient vectors, low degree first, with
// no trailing zeros. The zero polynomial is the empty vector.
namespace poly {

template <CoefficientRing R>
using Poly = std::vector<typename R::value_type>;

template <CoefficientRing R>
void trim(const R& r, Poly<R>& a) {
  while (!a.empty() && r.is_zero(a.back())) a.pop_back();
}

template <CoefficientRing R>
long degree(const Poly<R>& a) {
  return static_cast<long>(a.size()) - 1;
}

template <CoefficientRing R>
Poly<R> constant(const R& r, typename R::value_type c) {
  Poly<R> p{c};
  trim(r, p);
  return p;
}

template <CoefficientRing R>
Poly<R> monomial(const R& r, typename R::value_type c, std::size_t deg) {
  if (r.is_zero(c)) return {};
  Poly<R> p(deg + 1, r.zero());
  p[deg] = c;
  return p;
}

template <CoefficientRing R>
Poly<R> add(const R& r, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> c(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = r.add(c[i], b[i]);
  trim(r, c);
  return c;
}

template <CoefficientRing R>
Poly<R> sub(const R& r, const Poly<R>& a, const Poly<R>& b) {
  Poly<R> c(std::max(a.size(), b.size()), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = r.sub(c[i], b[i]);
  trim(r, c);
  return c;
}

template <CoefficientRing R>
Poly<R> scale(const R& r, const Poly<R>& a, const typename R::value_type& s) {
  Poly<R> c(a.size(), r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = r.mul(a[i], s);
  trim(r, c);
  return c;
}

template <CoefficientRing R>
Poly<R> mul(const R& r, const Poly<R>& a, const Poly<R>& b) {
  if (a.empty() || b.empty()) return {};
  Poly<R> c(a.size() + b.size() - 1, r.zero());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (r.is_zero(a[i])) continue;
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] = r.add(c[i + j], r.mul(a[i], b[j]));
  }
  trim(r, c);
  return c;
}

template <CoefficientRing R>
typename R::value_type eval(const R& r, const Poly<R>& a, const typename R::value_type& x) {
  typename R::value_type acc = r.zero();
  for (std::size_t i = a.size(); i-- > 0;) acc = r.add(r.mul(acc, x), a[i]);
  return acc;
}

// Division with remainder by a polynomial whose leading coefficient is a unit.
template <CoefficientField F>
std::pair<Poly<F>, Poly<F>> divmod(const F& f, Poly<F> a, const Poly<F>& b) {
  if (b.empty()) throw Error("polynomial division by zero");
  trim(f, a);
  const auto lead_inv = f.inv(b.back());
  if (a.size() < b.size()) return {{}, std::move(a)};
  Poly<F> q(a.size() - b.size() + 1, f.zero());
  while (a.size() >= b.size() && !a.empty()) {
    const std::size_t shift = a.size() - b.size();
    const auto c = f.mul(a.back(), lead_inv);
    q[shift] = c;
    for (std::size_t i = 0; i < b.size(); ++i) a[shift + i] = f.sub(a[shift + i], f.mul(c, b[i]));
    a.pop_back();
    trim(f, a);
  }
  trim(f, q);
  return {std::move(q), std::move(a)};
}

template <CoefficientField F>
Poly<F> mod(const F& f, Poly<F> a, const Poly<F>& b) {
  return divmod(f, std::move(a), b).second;
}

template <CoefficientField F>
Poly<F> monic(const F& f, const Poly<F>& a) {
  if (a.empty()) return a;
  return scale(f, a, f.inv(a.back()));
}

template <CoefficientField F>
Poly<F> gcd(const F& f, Poly<F> a, Poly<F> b) {
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    a = mod(f, std::move(a), b);
    std::swap(a, b);
  }
  return monic(f, a);
}

// Returns (g, s, t) with s a + t b = g, g monic.
template <CoefficientField F>
std::tuple<Poly<F>, Poly<F>, Poly<F>> xgcd(const F& f, Poly<F> a, Poly<F> b) {
  Poly<F> s0{f.one()}, s1{}, t0{}, t1{f.one()};
  trim(f, a);
  trim(f, b);
  while (!b.empty()) {
    auto [q, rem] = divmod(f, a, b);
    a = std::move(b);
    b = std::move(rem);
    auto s2 = sub(f, s0, mul(f, q, s1));
    auto t2 = sub(f, t0, mul(f, q, t1));
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (a.empty()) return {a, s0, t0};
  const auto li = f.inv(a.back());
  return {scale(f, a, li), scale(f, s0, li), scale(f, t0, li)};
}

template <CoefficientField F>
Poly<F> mulmod(const F& f, const Poly<F>& a, const Poly<F>& b, const Poly<F>& m) {
  return mod(f, mul(f, a, b), m);
}

template <CoefficientField F>
Poly<F> powmod(const F& f, Poly<F> base, Integer e, const Poly<F>& m) {
  Poly<F> r = mod(f, Poly<F>{f.one()}, m);
  base = mod(f, std::move(base), m);
  while (e > 0) {
    if (boost::multiprecision::bit_test(e, 0)) r = mulmod(f, r, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(f, base, base, m);
  }
  return r;
}

template <CoefficientRing R>
Poly<R> derivative(const R& r, const Poly<R>& a) {
  if (a.size() <= 1) return {};
  Poly<R> d(a.size() - 1, r.zero());
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = r.mul(r.from_int(static_cast<long long>(i)), a[i]);
  trim(r, d);
  return d;
}

// Renders with the given variable name, highest degree first, e.g. T^2+4.
template <CoefficientRing R>
std::string to_string(const R& r, const Poly<R>& a, const std::string& var = "T") {
  if (a.empty()) return "0";
  std::string s;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (r.is_zero(a[i])) continue;
    std::string c = r.to_string(a[i]);
    bool negative = !c.empty() && c[0] == '-';
    if (negative) c.erase(0, 1);
    bool compound = c.find_first_of("+-") != std::string::npos;
    if (compound) c = "(" + c + ")";
    if (!s.empty() || negative) s += negative ? "-" : "+";
    if (i == 0)
      s += c;
    else {
      if (c != "1") s += c + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
  }
  return s;
}

}  // namespace poly

// Roots in F of a polynomial that splits into distinct linear factors over F,
// sorted by element code. Deterministic: candidate shifts are tried in code
// order, with the quadratic character (odd q) or the absolute trace (q = 2^k)
// separating roots.
inline std::vector<Field::value_type> split_roots(const Field& f, poly::Poly<Field> m) {
  using P = poly::Poly<Field>;
  m = poly::monic(f, m);
  std::vector<Field::value_type> roots;
  std::vector<P> work{m};
  const std::uint64_t q = f.size();
  while (!work.empty()) {
    P g = std::move(work.back());
    work.pop_back();
    if (g.size() <= 1) continue;
    if (g.size() == 2) {
      roots.push_back(f.neg(g[0]));
      continue;
    }
    bool split = false;
    for (std::uint64_t c = 0; c < q && !split; ++c) {
      const auto a = static_cast<Field::value_type>(c);
      std::vector<P> probes;
      if (q % 2 == 1) {
        P shifted{a, f.one()};
        probes.push_back(poly::gcd(f, g, shifted));
        P w = poly::powmod(f, shifted, Integer((q - 1) / 2), g);
        probes.push_back(poly::gcd(f, g, poly::sub(f, w, P{f.one()})));
      } else {
        // Tr(a x) = sum_{i<k} (a x)^(2^i) over F_2.
        P ax = poly::mod(f, P{f.zero(), a}, g), acc{}, t = ax;
        const unsigned k = f.degree();
        for (unsigned i = 0; i < k; ++i) {
          acc = poly::add(f, acc, t);
          t = poly::mulmod(f, t, t, g);
        }
        probes.push_back(poly::gcd(f, g, acc));
      }
      for (auto& h : probes) {
        if (h.size() > 1 && h.size() < g.size()) {
          work.push_back(poly::divmod(f, g, h).first);
          work.push_back(h);
          split = true;
          break;
        }
      }
    }
    if (!split) throw InternalError("split_roots: polynomial does not split into distinct linear factors");
  }
  std::sort(roots.begin(), roots.end());
  return roots;
}

}  // namespace hasse
