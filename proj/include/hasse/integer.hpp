#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "hasse/error.hpp"

namespace hasse {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

inline std::vector<std::uint64_t> prime_divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) {
      out.push_back(d);
      while (n % d == 0) n /= d;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

inline std::vector<std::uint64_t> primes_up_to(std::uint64_t bound) {
  std::vector<std::uint64_t> out;
  if (bound < 2) return out;
  std::vector<bool> composite(bound + 1, false);
  for (std::uint64_t i = 2; i <= bound; ++i) {
    if (composite[i]) continue;
    out.push_back(i);
    for (std::uint64_t j = i * i; j <= bound; j += i) composite[j] = true;
  }
  return out;
}

// b^e, throwing on overflow of 64 bits.
inline std::uint64_t checked_pow(std::uint64_t b, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (b != 0 && r > UINT64_MAX / b) throw Error("integer overflow in power");
    r *= b;
  }
  return r;
}

inline std::optional<std::uint64_t> exact_sqrt(std::uint64_t n) {
  std::uint64_t r = 0;
  while ((r + 1) * (r + 1) <= n) ++r;
  if (r * r != n) return std::nullopt;
  return r;
}

// If n = p^k for a prime p, returns (p, k).
inline std::optional<std::pair<std::uint64_t, unsigned>> prime_power(std::uint64_t n) {
  if (n < 2) return std::nullopt;
  auto ps = prime_divisors(n);
  if (ps.size() != 1) return std::nullopt;
  unsigned k = 0;
  while (n > 1) {
    n /= ps[0];
    ++k;
  }
  return std::pair{ps[0], k};
}

inline Integer ipow(const Integer& b, unsigned e) {
  Integer r = 1;
  for (unsigned i = 0; i < e; ++i) r *= b;
  return r;
}

// Nonnegative residue.
inline std::uint64_t mod_u64(const Integer& a, std::uint64_t m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r.convert_to<std::uint64_t>();
}

inline std::string to_string(const Integer& a) { return a.str(); }

}  // namespace hasse
