#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <cstdint>
#include <exception>
#include <mutex>
#include <string>
#include <thread>
#include <vector>

#include "hasse/base_ring.hpp"
#include "hasse/error.hpp"
#include "hasse/integer.hpp"
#include "hasse/order.hpp"
#include "hasse/procesi.hpp"
#include "hasse/structure.hpp"

namespace hasse {

// (1 - u^degree)^-multiplicity, or (1 - p^-degree s)^-multiplicity over Z.
struct EulerFactor {
  unsigned degree = 1;
  unsigned multiplicity = 1;

  friend bool operator==(const EulerFactor&, const EulerFactor&) = default;
};

namespace detail {

inline std::vector<EulerFactor> collect_factors(std::vector<unsigned> degrees) {
  std::sort(degrees.begin(), degrees.end());
  std::vector<EulerFactor> out;
  for (unsigned d : degrees) {
    if (!out.empty() && out.back().degree == d)
      ++out.back().multiplicity;
    else
      out.push_back({d, 1});
  }
  return out;
}

// Multiplies a truncated series by (1 - u^d)^-m in place.
inline void divide_by_cyclotomic(std::vector<Integer>& a, unsigned d, unsigned m) {
  for (unsigned k = 0; k < m; ++k)
    for (std::size_t n = d; n < a.size(); ++n) a[n] += a[n - d];
}

// Runs job(i) for i < count on up to `threads` workers; each job writes only
// its own slot.
template <class Job>
void for_each_parallel(std::size_t count, unsigned threads, Job job) {
  if (threads <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) job(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  const unsigned n = static_cast<unsigned>(std::min<std::size_t>(threads, count));
  for (unsigned t = 0; t < n; ++t)
    pool.emplace_back([&] {
      for (std::size_t i; (i = next.fetch_add(1)) < count;) {
        try {
          job(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
}

}  // namespace detail

// Euler factors of a fiber whose coefficient field has degree e over the base
// residue field: a point with center F_{(q^e)^n} contributes degree e n.
inline std::vector<EulerFactor> local_zeta(const FqAlgebra& fiber, unsigned e = 1) {
  std::vector<unsigned> degrees;
  for (const auto& p : max_two_sided_ideals(fiber)) degrees.push_back(e * p.center_degree);
  return detail::collect_factors(std::move(degrees));
}

struct FiberContribution {
  BaseMaxIdeal over;
  std::vector<EulerFactor> factors;
};

struct ZetaSeries {
  unsigned degree = 0;                  // D
  std::vector<Integer> coeffs;          // a_0 .. a_D
  std::vector<FiberContribution> provenance;
};

inline std::vector<Integer> series_product(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  const std::size_t n = std::min(a.size(), b.size());
  std::vector<Integer> c(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; i + j < n; ++j) c[i + j] += a[i] * b[j];
  return c;
}

// Product of the local factors of every fiber over a base ideal of degree at
// most D, truncated at u^D.
inline ZetaSeries zeta_series(const Order& o, unsigned D, unsigned threads = 1) {
  if (D < 1) throw Error("truncation degree must be at least 1");
  const auto kind = o.base().kind();
  if (kind == BaseRing::Kind::integers) throw Error("zeta series in u need a base F_q or F_q[T]; use the Dirichlet prefix over Z");
  const auto fibers = base_max_ideals(o.base(), D);
  std::vector<FiberContribution> parts(fibers.size());
  detail::for_each_parallel(fibers.size(), threads, [&](std::size_t i) {
    parts[i] = {fibers[i], local_zeta(fiber(o, fibers[i]), fibers[i].degree())};
  });
  ZetaSeries s;
  s.degree = D;
  s.coeffs.assign(D + 1, 0);
  s.coeffs[0] = 1;
  for (const auto& part : parts)
    for (const auto& f : part.factors) detail::divide_by_cyclotomic(s.coeffs, f.degree, f.multiplicity);
  s.provenance = std::move(parts);
  return s;
}

// True iff series * den = num mod u^(D+1).
inline bool compare_rational(const ZetaSeries& s, const std::vector<Integer>& num, const std::vector<Integer>& den) {
  if (den.empty() || den[0] == 0) throw Error("denominator must have a nonzero constant term");
  for (std::size_t n = 0; n < s.coeffs.size(); ++n) {
    Integer c = 0;
    for (std::size_t k = 0; k <= n && k < den.size(); ++k) c += den[k] * s.coeffs[n - k];
    const Integer want = n < num.size() ? num[n] : Integer(0);
    if (c != want) return false;
  }
  return true;
}

struct LocalFactor {
  std::uint64_t prime = 0;
  std::vector<EulerFactor> factors;
};

struct DirichletPrefix {
  std::uint64_t length = 0;      // N
  std::vector<Integer> coeffs;   // coeffs[n] = a_n for 1 <= n <= N; coeffs[0] unused
  std::vector<LocalFactor> local;

  const Integer& operator[](std::uint64_t n) const { return coeffs.at(n); }
};

// Dirichlet coefficients up to N of the product of local factors at p <= N.
inline DirichletPrefix dirichlet_prefix(const Order& o, std::uint64_t N, unsigned threads = 1) {
  if (N < 1) throw Error("prefix length must be at least 1");
  if (o.base().kind() != BaseRing::Kind::integers) throw Error("Dirichlet prefixes are computed over Z");
  const auto primes = primes_up_to(N);
  std::vector<LocalFactor> local(primes.size());
  detail::for_each_parallel(primes.size(), threads, [&](std::size_t i) {
    local[i] = {primes[i], local_zeta(fiber(o, BaseMaxIdeal::of_prime(primes[i])))};
  });
  DirichletPrefix d;
  d.length = N;
  d.coeffs.assign(N + 1, 0);
  d.coeffs[1] = 1;
  for (const auto& lf : local) {
    const std::uint64_t p = lf.prime;
    std::size_t top = 0;
    for (std::uint64_t q = p; q <= N / p; q *= p) ++top;
    std::vector<Integer> b(top + 2, 0);  // coefficients in x = p^-s up to p^k <= N
    b[0] = 1;
    for (const auto& f : lf.factors) detail::divide_by_cyclotomic(b, f.degree, f.multiplicity);
    std::vector<Integer> next(N + 1, 0);
    for (std::uint64_t n = 1; n <= N; ++n) {
      if (d.coeffs[n] == 0 || n % p == 0) continue;
      std::uint64_t m = n;
      for (std::size_t k = 0; k < b.size() && m <= N; ++k) {
        next[m] += d.coeffs[n] * b[k];
        if (m > N / p) break;
        m *= p;
      }
    }
    d.coeffs = std::move(next);
  }
  d.local = std::move(local);
  return d;
}

// N(target point) = N(pullback point)^exponent for every maximal ideal of the
// target.
struct NormRow {
  std::size_t target_point = 0;
  std::size_t source_point = 0;
  Integer target_norm;
  Integer source_norm;
  unsigned exponent = 0;
};

inline std::vector<NormRow> norm_compatibility(const AlgMorphism<Field>& h) {
  if (!procesi_check(h)) throw Error("norm compatibility needs a Procesi morphism");
  const auto src = max_two_sided_ideals(h.source);
  const auto tgt = max_two_sided_ideals(h.target);
  std::vector<NormRow> rows;
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    const FqIdeal p = pullback_point(h, tgt[j].ideal);
    std::size_t i = 0;
    while (i < src.size() && !(src[i].ideal.space() == p.space())) ++i;
    detail::ensure(i < src.size(), "pullback of a maximal ideal is not a maximal ideal of the source");
    NormRow r{j, i, tgt[j].norm, src[i].norm, 0};
    Integer x = 1;
    while (x < r.target_norm) {
      x *= r.source_norm;
      ++r.exponent;
    }
    detail::ensure(x == r.target_norm && r.exponent >= 1, "N(x) is not a power of N(y)");
    rows.push_back(r);
  }
  return rows;
}

}  // namespace hasse
