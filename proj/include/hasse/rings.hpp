#pragma once

#include <string>
#include <utility>
#include <vector>

#include "hasse/field.hpp"
#include "hasse/integer.hpp"
#include "hasse/poly.hpp"

namespace hasse {

// The rational numbers.
struct Rationals {
  using value_type = Rational;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_integer(const Integer& v) const { return Rational(v); }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  value_type inv(const value_type& a) const {
    if (a == 0) throw Error("division by zero in Q");
    return 1 / a;
  }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "Q"; }
  friend bool operator==(const Rationals&, const Rationals&) { return true; }
};

// The integers.
struct Integers {
  using value_type = Integer;
  value_type zero() const { return 0; }
  value_type one() const { return 1; }
  value_type from_int(long long v) const { return v; }
  value_type from_integer(const Integer& v) const { return v; }
  value_type add(const value_type& a, const value_type& b) const { return a + b; }
  value_type sub(const value_type& a, const value_type& b) const { return a - b; }
  value_type neg(const value_type& a) const { return -a; }
  value_type mul(const value_type& a, const value_type& b) const { return a * b; }
  bool is_zero(const value_type& a) const { return a == 0; }
  std::string to_string(const value_type& a) const { return a.str(); }
  std::string name() const { return "Z"; }
  friend bool operator==(const Integers&, const Integers&) { return true; }
};

// F_q[T]; values are trimmed coefficient vectors, low degree first.
class PolynomialRing {
 public:
  using value_type = poly::Poly<Field>;

  explicit PolynomialRing(Field f) : field_(std::move(f)) {}

  const Field& field() const noexcept { return field_; }

  value_type zero() const { return {}; }
  value_type one() const { return {field_.one()}; }
  value_type variable() const { return {field_.zero(), field_.one()}; }
  value_type from_int(long long v) const { return poly::constant(field_, field_.from_int(v)); }
  value_type add(const value_type& a, const value_type& b) const { return poly::add(field_, a, b); }
  value_type sub(const value_type& a, const value_type& b) const { return poly::sub(field_, a, b); }
  value_type neg(const value_type& a) const { return poly::sub(field_, value_type{}, a); }
  value_type mul(const value_type& a, const value_type& b) const { return poly::mul(field_, a, b); }
  bool is_zero(const value_type& a) const { return a.empty(); }
  std::string to_string(const value_type& a) const { return poly::to_string(field_, a, "T"); }
  std::string name() const { return field_.name() + "[T]"; }

  friend bool operator==(const PolynomialRing& a, const PolynomialRing& b) { return a.field_ == b.field_; }

 private:
  Field field_;
};

}  // namespace hasse
