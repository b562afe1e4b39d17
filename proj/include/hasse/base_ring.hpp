#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hasse/error.hpp"
#include "hasse/field.hpp"
#include "hasse/integer.hpp"
#include "hasse/poly.hpp"

namespace hasse {

// Monic irreducible polynomials of degree d over F, ordered by the integer
// sum c_i q^i of their lower coefficients (c_i read as element codes).
inline std::vector<poly::Poly<Field>> irreducibles(const Field& f, unsigned d) {
  using P = poly::Poly<Field>;
  if (d < 1) throw Error("degree must be at least 1");
  const std::uint64_t q = f.size();
  const std::uint64_t count = checked_pow(q, d);
  const P x{f.zero(), f.one()};
  std::vector<P> out;
  const auto divisors = prime_divisors(d);
  // x^(q^e) mod g by repeated q-th powers.
  auto frob = [&](const P& g, unsigned e) {
    P r = poly::mod(f, x, g);
    for (unsigned i = 0; i < e; ++i) r = poly::powmod(f, r, Integer(q), g);
    return r;
  };
  for (std::uint64_t c = 0; c < count; ++c) {
    P g(d + 1, f.zero());
    std::uint64_t t = c;
    for (unsigned i = 0; i < d; ++i) {
      g[i] = static_cast<Field::value_type>(t % q);
      t /= q;
    }
    g[d] = f.one();
    if (d == 1) {
      out.push_back(std::move(g));
      continue;
    }
    if (f.is_zero(g[0])) continue;
    if (!poly::sub(f, frob(g, d), poly::mod(f, x, g)).empty()) continue;
    bool irreducible = true;
    for (auto r : divisors) {
      if (poly::gcd(f, g, poly::sub(f, frob(g, d / static_cast<unsigned>(r)), x)).size() != 1) {
        irreducible = false;
        break;
      }
    }
    if (irreducible) out.push_back(std::move(g));
  }
  return out;
}

// Number of monic irreducibles of degree d over F_q (necklace formula).
inline Integer count_irreducibles(std::uint64_t q, unsigned d) {
  auto mobius = [](unsigned n) {
    int m = 1;
    for (unsigned p = 2; p <= n; ++p) {
      if (n % p) continue;
      n /= p;
      if (n % p == 0) return 0;
      m = -m;
    }
    return m;
  };
  Integer total = 0;
  for (unsigned e = 1; e <= d; ++e)
    if (d % e == 0) total += mobius(e) * ipow(Integer(q), d / e);
  return total / d;
}

// One of the three Jacobson base rings with finite residue fields.
class BaseRing {
 public:
  enum class Kind { integers, finite_field, polynomial_ring };

  static BaseRing integers() { return BaseRing(Kind::integers, std::nullopt); }
  static BaseRing finite_field(Field f) { return BaseRing(Kind::finite_field, std::move(f)); }
  static BaseRing polynomial_ring(Field f) { return BaseRing(Kind::polynomial_ring, std::move(f)); }

  Kind kind() const noexcept { return kind_; }
  const Field& field() const {
    if (!field_) throw Error("base ring Z has no coefficient field");
    return *field_;
  }

  std::string name() const {
    switch (kind_) {
      case Kind::integers: return "Z";
      case Kind::finite_field: return field_->name();
      case Kind::polynomial_ring: return field_->name() + "[T]";
    }
    return {};
  }

  friend bool operator==(const BaseRing& a, const BaseRing& b) {
    if (a.kind_ != b.kind_) return false;
    return a.kind_ == Kind::integers || *a.field_ == *b.field_;
  }

 private:
  BaseRing(Kind k, std::optional<Field> f) : kind_(k), field_(std::move(f)) {}
  Kind kind_;
  std::optional<Field> field_;
};

// A maximal ideal of a base ring: (p) in Z, (f) in F_q[T], or (0) in F_q.
struct BaseMaxIdeal {
  BaseRing::Kind kind = BaseRing::Kind::finite_field;
  std::uint64_t prime = 0;           // integers
  poly::Poly<Field> generator;       // polynomial_ring, monic irreducible
  std::optional<Field> field;        // coefficient field for polynomial_ring / finite_field
  Integer norm;                      // size of the residue field

  unsigned degree() const { return kind == BaseRing::Kind::polynomial_ring ? static_cast<unsigned>(generator.size() - 1) : 1; }

  std::string to_string() const {
    switch (kind) {
      case BaseRing::Kind::integers: return std::to_string(prime);
      case BaseRing::Kind::finite_field: return "0";
      case BaseRing::Kind::polynomial_ring: return poly::to_string(*field, generator, "T");
    }
    return {};
  }

  static BaseMaxIdeal of_prime(std::uint64_t p) {
    if (!is_prime(p)) throw Error(std::to_string(p) + " is not prime");
    BaseMaxIdeal m;
    m.kind = BaseRing::Kind::integers;
    m.prime = p;
    m.norm = p;
    return m;
  }
  static BaseMaxIdeal zero_of(const Field& f) {
    BaseMaxIdeal m;
    m.kind = BaseRing::Kind::finite_field;
    m.field = f;
    m.norm = f.size();
    return m;
  }
  // g must be monic irreducible over f.
  static BaseMaxIdeal of_polynomial(const Field& f, poly::Poly<Field> g) {
    poly::trim(f, g);
    if (g.size() < 2 || g.back() != f.one()) throw Error("base ideal generator must be monic of positive degree");
    const auto d = static_cast<unsigned>(g.size() - 1);
    const auto irr = irreducibles(f, d);
    if (std::find(irr.begin(), irr.end(), g) == irr.end())
      throw Error(poly::to_string(f, g, "T") + " is not irreducible over " + f.name());
    BaseMaxIdeal m;
    m.kind = BaseRing::Kind::polynomial_ring;
    m.field = f;
    m.generator = std::move(g);
    m.norm = ipow(Integer(f.size()), d);
    return m;
  }
};

// Cursor over the maximal ideals of a base ring with bounded residue size, in
// increasing norm; ties in the same numeric order as irreducibles(). The bound
// caps p for Z and deg f for F_q[T]; it is ignored for a field.
class MaxIdealCursor {
 public:
  MaxIdealCursor(BaseRing base, std::uint64_t bound) : base_(std::move(base)), bound_(bound) {
    if (bound < 1) throw Error("bound must be positive");
  }

  std::optional<BaseMaxIdeal> next() {
    while (pos_ >= buffer_.size()) {
      if (!refill()) return std::nullopt;
    }
    return buffer_[pos_++];
  }

 private:
  bool refill() {
    buffer_.clear();
    pos_ = 0;
    switch (base_.kind()) {
      case BaseRing::Kind::finite_field:
        if (stage_++ > 0) return false;
        buffer_.push_back(BaseMaxIdeal::zero_of(base_.field()));
        return true;
      case BaseRing::Kind::integers:
        if (stage_++ > 0) return false;
        for (auto p : primes_up_to(bound_)) buffer_.push_back(BaseMaxIdeal::of_prime(p));
        return true;
      case BaseRing::Kind::polynomial_ring: {
        if (stage_ >= bound_) return false;
        const auto d = static_cast<unsigned>(++stage_);
        const Field& f = base_.field();
        for (auto& g : irreducibles(f, d)) {
          BaseMaxIdeal m;
          m.kind = BaseRing::Kind::polynomial_ring;
          m.field = f;
          m.norm = ipow(Integer(f.size()), d);
          m.generator = std::move(g);
          buffer_.push_back(std::move(m));
        }
        return true;
      }
    }
    return false;
  }

  BaseRing base_;
  std::uint64_t bound_;
  std::uint64_t stage_ = 0;
  std::vector<BaseMaxIdeal> buffer_;
  std::size_t pos_ = 0;
};

inline std::vector<BaseMaxIdeal> base_max_ideals(const BaseRing& base, std::uint64_t bound) {
  MaxIdealCursor cursor(base, bound);
  std::vector<BaseMaxIdeal> out;
  while (auto m = cursor.next()) out.push_back(std::move(*m));
  return out;
}

}  // namespace hasse
