#pragma once

#include <algorithm>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <utility>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/integer.hpp"

namespace hasse {

namespace detail {

// Dense polynomials over Z/p with coefficients low degree first; used only
// while a Field is being constructed.
using FpPoly = std::vector<std::uint64_t>;

inline void fp_trim(FpPoly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

inline std::uint64_t fp_inv(std::uint64_t a, std::uint64_t p) {
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline FpPoly fp_mod(FpPoly a, const FpPoly& m, std::uint64_t p) {
  fp_trim(a);
  const std::size_t dm = m.size() - 1;
  const std::uint64_t lead_inv = fp_inv(m.back(), p);
  while (a.size() > dm) {
    std::uint64_t c = a.back() * lead_inv % p;
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) a[shift + i] = (a[shift + i] + p - c * m[i] % p) % p;
    fp_trim(a);
  }
  return a;
}

inline FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  FpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return fp_mod(std::move(r), m, p);
}

inline FpPoly fp_gcd(FpPoly a, FpPoly b, std::uint64_t p) {
  fp_trim(a);
  fp_trim(b);
  while (!b.empty()) {
    a = fp_mod(std::move(a), b, p);
    std::swap(a, b);
  }
  return a;
}

// x^(p^e) mod m.
inline FpPoly fp_frobenius_power(const FpPoly& m, std::uint64_t p, unsigned e) {
  FpPoly x = fp_mod({0, 1}, m, p);
  for (unsigned i = 0; i < e; ++i) {
    FpPoly base = x, r{1};
    std::uint64_t n = p;
    while (n) {
      if (n & 1) r = fp_mulmod(r, base, m, p);
      base = fp_mulmod(base, base, m, p);
      n >>= 1;
    }
    x = r;
  }
  return x;
}

// Rabin's test for a monic polynomial over F_p.
inline bool fp_is_irreducible(const FpPoly& f, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(f.size() - 1);
  if (k == 0) return false;
  if (k == 1) return true;
  auto sub_x = [&](FpPoly a) {
    if (a.size() < 2) a.resize(2, 0);
    a[1] = (a[1] + p - 1) % p;
    fp_trim(a);
    return a;
  };
  if (!sub_x(fp_frobenius_power(f, p, k)).empty()) return false;
  for (std::uint64_t r : prime_divisors(k)) {
    FpPoly g = fp_gcd(f, sub_x(fp_frobenius_power(f, p, k / static_cast<unsigned>(r))), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

// A finite field F_p[z]/(g) with g monic irreducible of degree k. Elements are
// encoded as integers sum c_i p^i where c_i is the coefficient of z^i, so the
// prime subfield is {0, ..., p-1} and codes compare like their digit strings.
class Field {
 public:
  using value_type = std::uint32_t;

  // Field with the numerically smallest defining polynomial of degree k.
  // Instances are cached so fibers of equal size share tables.
  static Field make(std::uint64_t p, unsigned k) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    if (k < 1) throw Error("field degree must be at least 1");
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, unsigned>, Field> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({p, k});
    if (it != cache.end()) return it->second;
    const std::uint64_t count = checked_pow(p, k);
    for (std::uint64_t c = 0; c < count; ++c) {
      detail::FpPoly g(k + 1, 0);
      std::uint64_t t = c;
      for (unsigned i = 0; i < k; ++i) {
        g[i] = t % p;
        t /= p;
      }
      g[k] = 1;
      if (detail::fp_is_irreducible(g, p)) {
        Field f(p, g);
        cache.emplace(std::pair{p, k}, f);
        return f;
      }
    }
    throw InternalError("no irreducible polynomial found");
  }

  // Field with an explicit monic irreducible modulus (low degree first).
  static Field from_modulus(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    if (!is_prime(p)) throw Error("field characteristic " + std::to_string(p) + " is not prime");
    for (auto& c : modulus) c %= p;
    detail::fp_trim(modulus);
    if (modulus.size() < 2 || modulus.back() != 1) throw Error("field modulus must be monic of degree >= 1");
    if (!detail::fp_is_irreducible(modulus, p)) throw Error("field modulus is not irreducible");
    return Field(p, std::move(modulus));
  }

  std::uint64_t characteristic() const noexcept { return impl_->p; }
  unsigned degree() const noexcept { return impl_->k; }
  std::uint64_t size() const noexcept { return impl_->q; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return impl_->modulus; }

  value_type zero() const noexcept { return 0; }
  value_type one() const noexcept { return 1; }
  value_type from_int(long long v) const {
    long long p = static_cast<long long>(impl_->p);
    return static_cast<value_type>(((v % p) + p) % p);
  }
  value_type from_integer(const Integer& v) const { return static_cast<value_type>(mod_u64(v, impl_->p)); }
  bool is_zero(value_type a) const noexcept { return a == 0; }

  value_type add(value_type a, value_type b) const noexcept {
    const Impl& f = *impl_;
    if (f.k == 1) return static_cast<value_type>((std::uint64_t{a} + b) % f.p);
    if (f.p == 2) return a ^ b;
    std::uint64_t r = 0, x = a, y = b;
    for (unsigned i = 0; i < f.k; ++i) {
      r += ((x % f.p + y % f.p) % f.p) * f.pw[i];
      x /= f.p;
      y /= f.p;
    }
    return static_cast<value_type>(r);
  }
  value_type neg(value_type a) const noexcept {
    const Impl& f = *impl_;
    if (f.k == 1) return static_cast<value_type>((f.p - a) % f.p);
    if (f.p == 2) return a;
    std::uint64_t r = 0, x = a;
    for (unsigned i = 0; i < f.k; ++i) {
      r += ((f.p - x % f.p) % f.p) * f.pw[i];
      x /= f.p;
    }
    return static_cast<value_type>(r);
  }
  value_type sub(value_type a, value_type b) const noexcept { return add(a, neg(b)); }

  value_type mul(value_type a, value_type b) const {
    const Impl& f = *impl_;
    if (a == 0 || b == 0) return 0;
    if (f.k == 1) return static_cast<value_type>(std::uint64_t{a} * b % f.p);
    if (!f.log.empty()) return f.exp[(std::uint64_t{f.log[a]} + f.log[b]) % (f.q - 1)];
    return slow_mul(a, b);
  }

  value_type pow(value_type a, std::uint64_t e) const {
    value_type r = one();
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }

  value_type inv(value_type a) const {
    if (a == 0) throw Error("division by zero in finite field");
    const Impl& f = *impl_;
    if (f.k == 1) return static_cast<value_type>(detail::fp_inv(a, f.p));
    if (!f.log.empty()) return f.exp[(f.q - 1 - f.log[a]) % (f.q - 1)];
    return pow(a, f.q - 2);
  }
  value_type div(value_type a, value_type b) const { return mul(a, inv(b)); }

  // Coefficients of a in the basis 1, z, ..., z^(k-1).
  std::vector<std::uint64_t> digits(value_type a) const {
    std::vector<std::uint64_t> d(impl_->k);
    std::uint64_t x = a;
    for (auto& c : d) {
      c = x % impl_->p;
      x /= impl_->p;
    }
    return d;
  }
  value_type from_digits(const std::vector<std::uint64_t>& d) const {
    std::uint64_t r = 0;
    for (std::size_t i = d.size(); i-- > 0;) r = r * impl_->p + d[i] % impl_->p;
    return static_cast<value_type>(r);
  }
  // The class of z.
  value_type generator() const { return impl_->k == 1 ? 0 : static_cast<value_type>(impl_->p); }

  std::string to_string(value_type a) const {
    if (impl_->k == 1) return std::to_string(a);
    if (a == 0) return "0";
    auto d = digits(a);
    std::string s;
    for (std::size_t i = d.size(); i-- > 0;) {
      if (d[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0 || d[i] != 1) s += std::to_string(d[i]);
      if (i >= 1) s += "z";
      if (i >= 2) s += "^" + std::to_string(i);
    }
    return s;
  }

  // GF(p) or GF(p^k).
  std::string name() const {
    if (impl_->k == 1) return "GF(" + std::to_string(impl_->p) + ")";
    return "GF(" + std::to_string(impl_->p) + "^" + std::to_string(impl_->k) + ")";
  }

  friend bool operator==(const Field& a, const Field& b) noexcept {
    return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
  }

 private:
  struct Impl {
    std::uint64_t p = 2;
    unsigned k = 1;
    std::uint64_t q = 2;
    std::vector<std::uint64_t> modulus;
    std::vector<std::uint64_t> pw;
    std::vector<value_type> exp, log;
  };

  static constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 16;

  Field(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    auto impl = std::make_shared<Impl>();
    impl->p = p;
    impl->k = static_cast<unsigned>(modulus.size() - 1);
    impl->q = checked_pow(p, impl->k);
    if (impl->q > UINT32_MAX) throw Error("finite field too large (limit 2^32 elements)");
    impl->modulus = std::move(modulus);
    impl->pw.resize(impl->k);
    std::uint64_t w = 1;
    for (auto& x : impl->pw) {
      x = w;
      w *= p;
    }
    impl_ = impl;
    if (impl->k > 1 && impl->q <= kTableLimit) build_tables(*impl);
  }

  value_type slow_mul(value_type a, value_type b) const {
    const Impl& f = *impl_;
    detail::FpPoly x = digits(a), y = digits(b);
    return from_digits(pad(detail::fp_mulmod(x, y, f.modulus, f.p)));
  }

  std::vector<std::uint64_t> pad(detail::FpPoly v) const {
    v.resize(impl_->k, 0);
    return v;
  }

  void build_tables(Impl& f) {
    const std::uint64_t order = f.q - 1;
    const auto divisors = prime_divisors(order);
    value_type g = 0;
    for (std::uint64_t c = 1; c < f.q; ++c) {
      auto cand = static_cast<value_type>(c);
      bool primitive = true;
      for (auto r : divisors) {
        value_type t = 1, base = cand;
        std::uint64_t e = order / r;
        while (e) {
          if (e & 1) t = slow_mul(t, base);
          base = slow_mul(base, base);
          e >>= 1;
        }
        if (t == 1) {
          primitive = false;
          break;
        }
      }
      if (primitive) {
        g = cand;
        break;
      }
    }
    detail::ensure(g != 0, "no primitive element");
    std::vector<value_type> exp(order), log(f.q, 0);
    value_type x = 1;
    for (std::uint64_t i = 0; i < order; ++i) {
      exp[i] = x;
      log[x] = static_cast<value_type>(i);
      x = slow_mul(x, g);
    }
    f.exp = std::move(exp);
    f.log = std::move(log);
  }

  std::shared_ptr<const Impl> impl_;
};

}  // namespace hasse
