#pragma once

#include <cctype>
#include <cstddef>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "hasse/algebra.hpp"
#include "hasse/base_ring.hpp"
#include "hasse/error.hpp"
#include "hasse/integer.hpp"
#include "hasse/rings.hpp"

// Text format for algebras:
//   base <Z | GF(p^k) | GF(p^k)[T]>
//   basis 1 <label> ...
//   mul <label> <label> = <coeff>*<label> + ...
namespace hasse {

// Integer polynomial in T, low degree first, no trailing zeros.
using IntPoly = std::vector<Integer>;

struct Description {
  struct Term {
    IntPoly coeff;
    std::size_t label = 0;
  };
  struct Product {
    std::size_t left = 0, right = 0;
    std::vector<Term> terms;
    std::size_t line = 0;
  };

  BaseRing base = BaseRing::integers();
  std::vector<std::string> labels;
  std::vector<Product> products;  // explicit entries; products with the unit are implied
};

namespace detail {

inline void trim_int(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

inline IntPoly int_mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim_int(r);
  return r;
}

inline IntPoly int_add(IntPoly a, const IntPoly& b, int sign) {
  if (a.size() < b.size()) a.resize(b.size(), 0);
  for (std::size_t i = 0; i < b.size(); ++i) a[i] += sign * b[i];
  trim_int(a);
  return a;
}

inline bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

inline std::optional<BaseRing> parse_base_name(std::string_view s) {
  if (s == "Z") return BaseRing::integers();
  bool poly = false;
  if (s.size() > 3 && s.substr(s.size() - 3) == "[T]") {
    poly = true;
    s.remove_suffix(3);
  }
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') return std::nullopt;
  std::string inner(s.substr(3, s.size() - 4));
  std::uint64_t p = 0, k = 1;
  try {
    std::size_t pos = 0;
    const auto caret = inner.find('^');
    p = std::stoull(inner.substr(0, caret), &pos);
    if (pos != (caret == std::string::npos ? inner.size() : caret)) return std::nullopt;
    if (caret != std::string::npos) {
      k = std::stoull(inner.substr(caret + 1), &pos);
      if (pos != inner.size() - caret - 1) return std::nullopt;
    }
  } catch (const std::exception&) {
    return std::nullopt;
  }
  if (k == 1 && !is_prime(p)) {
    if (auto pk = prime_power(p)) {
      p = pk->first;
      k = pk->second;
    } else {
      return std::nullopt;
    }
  }
  if (!is_prime(p) || k < 1 || k > 64) return std::nullopt;
  Field f = Field::make(p, static_cast<unsigned>(k));
  return poly ? BaseRing::polynomial_ring(f) : BaseRing::finite_field(f);
}

class LineParser {
 public:
  LineParser(std::string_view text, std::size_t line, const Description& d, std::size_t start = 0)
      : s_(text), pos_(start), line_(line), desc_(d) {}

  [[noreturn]] void fail(const std::string& what) const { throw ParseError(line_, pos_ + 1, what); }
  [[noreturn]] void fail_at(std::size_t pos, const std::string& what) const { throw ParseError(line_, pos + 1, what); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool at_end() {
    skip();
    return pos_ >= s_.size();
  }
  char peek() {
    skip();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }
  std::size_t pos() const { return pos_; }

  // Next whitespace-delimited word.
  std::string word() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && !std::isspace(static_cast<unsigned char>(s_[pos_])) && s_[pos_] != '=') ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  std::size_t label() {
    skip();
    const std::size_t start = pos_;
    const std::string w = word();
    if (w.empty()) fail("expected a basis label");
    for (std::size_t i = 0; i < desc_.labels.size(); ++i)
      if (desc_.labels[i] == w) return i;
    fail_at(start, "unknown basis label '" + w + "'");
  }

  void expect(char c) {
    if (peek() != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  // Sum of terms; each term is a product of coefficient factors and at most
  // one basis label (absent means the unit).
  std::vector<Description::Term> sum(bool labels_allowed) {
    std::vector<Description::Term> terms;
    int sign = 1;
    if (peek() == '+' || peek() == '-') {
      sign = s_[pos_] == '-' ? -1 : 1;
      ++pos_;
    }
    while (true) {
      auto t = term(labels_allowed);
      if (sign < 0) t.coeff = int_add({}, t.coeff, -1);
      terms.push_back(std::move(t));
      const char c = peek();
      if (c == '+' || c == '-') {
        sign = c == '-' ? -1 : 1;
        ++pos_;
        continue;
      }
      return terms;
    }
  }

 private:
  Description::Term term(bool labels_allowed) {
    Description::Term t{IntPoly{1}, 0};
    bool have_label = false;
    while (true) {
      const char c = peek();
      const std::size_t start = pos_;
      if (std::isdigit(static_cast<unsigned char>(c))) {
        t.coeff = int_mul(t.coeff, {integer()});
      } else if (c == '(') {
        ++pos_;
        IntPoly inner;
        for (const auto& it : sum(false)) inner = int_add(std::move(inner), it.coeff, 1);
        expect(')');
        t.coeff = int_mul(t.coeff, inner);
      } else if (c == 'T' && (pos_ + 1 >= s_.size() || !ident_char(s_[pos_ + 1]))) {
        if (desc_.base.kind() != BaseRing::Kind::polynomial_ring) fail("polynomial coefficient over a base without T");
        ++pos_;
        std::size_t e = 1;
        if (peek() == '^') {
          ++pos_;
          skip();
          const auto v = integer();
          if (v > 4096) fail_at(start, "exponent too large");
          e = static_cast<std::size_t>(v);
        }
        IntPoly mono(e + 1, 0);
        mono[e] = 1;
        t.coeff = int_mul(t.coeff, mono);
      } else if (ident_start(c)) {
        if (!labels_allowed) fail("basis label inside a coefficient");
        if (have_label) fail("a term may contain only one basis label");
        std::string w;
        while (pos_ < s_.size() && ident_char(s_[pos_])) w += s_[pos_++];
        std::optional<std::size_t> idx;
        for (std::size_t i = 0; i < desc_.labels.size(); ++i)
          if (desc_.labels[i] == w) idx = i;
        if (!idx) fail_at(start, "unknown basis label '" + w + "'");
        t.label = *idx;
        have_label = true;
      } else {
        fail("expected a coefficient or basis label");
      }
      if (peek() != '*') return t;
      ++pos_;
    }
  }

  Integer integer() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer");
    return Integer(std::string(s_.substr(start, pos_ - start)));
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  std::size_t line_;
  const Description& desc_;
};

}  // namespace detail

inline Description parse_description(std::string_view text) {
  Description d;
  std::vector<std::pair<std::size_t, std::string_view>> lines;
  std::size_t lineno = 0, start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    ++lineno;
    const auto first = line.find_first_not_of(" \t");
    if (first != std::string_view::npos && line[first] != '#') lines.emplace_back(lineno, line);
    if (end == text.size()) break;
    start = end + 1;
  }
  if (lines.empty()) throw ParseError(1, 1, "missing 'base' line");

  {
    auto [no, text1] = lines[0];
    detail::LineParser lp(text1, no, d);
    if (lp.word() != "base") lp.fail_at(text1.find_first_not_of(" \t"), "expected 'base'");
    lp.skip();
    const std::size_t at = lp.pos();
    const std::string name = lp.word();
    auto base = detail::parse_base_name(name);
    if (!base) lp.fail_at(at, "unknown base '" + name + "'");
    if (!lp.at_end()) lp.fail("unexpected text after base");
    d.base = *base;
  }
  if (lines.size() < 2) throw ParseError(lines[0].first + 1, 1, "missing 'basis' line");
  {
    auto [no, text2] = lines[1];
    detail::LineParser lp(text2, no, d);
    if (lp.word() != "basis") lp.fail_at(text2.find_first_not_of(" \t"), "expected 'basis'");
    while (!lp.at_end()) {
      const std::size_t at = lp.pos();
      const std::string w = lp.word();
      if (d.labels.empty()) {
        if (w != "1") lp.fail_at(at, "the first basis label must be the unit '1'");
      } else {
        if (!detail::ident_start(w[0]) || !std::all_of(w.begin(), w.end(), detail::ident_char))
          lp.fail_at(at, "invalid basis label '" + w + "'");
        if (w == "T" && d.base.kind() == BaseRing::Kind::polynomial_ring) lp.fail_at(at, "'T' is reserved for the base variable");
        if (std::find(d.labels.begin(), d.labels.end(), w) != d.labels.end()) lp.fail_at(at, "duplicate basis label '" + w + "'");
      }
      d.labels.push_back(w);
    }
    if (d.labels.empty()) lp.fail("the first basis label must be the unit '1'");
  }
  std::map<std::pair<std::size_t, std::size_t>, std::size_t> seen;
  for (std::size_t l = 2; l < lines.size(); ++l) {
    auto [no, body] = lines[l];
    detail::LineParser lp(body, no, d);
    if (lp.word() != "mul") lp.fail_at(body.find_first_not_of(" \t"), "expected 'mul'");
    Description::Product prod;
    prod.line = no;
    const std::size_t at = (lp.skip(), lp.pos());
    prod.left = lp.label();
    prod.right = lp.label();
    lp.expect('=');
    prod.terms = lp.sum(true);
    if (!lp.at_end()) lp.fail("unexpected text after expression");
    if (!seen.emplace(std::make_pair(prod.left, prod.right), no).second)
      lp.fail_at(at, "duplicate product " + d.labels[prod.left] + " " + d.labels[prod.right]);
    d.products.push_back(std::move(prod));
  }
  return d;
}

inline Description load_description(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_description(ss.str());
}

// Integer-literal coefficients into each coefficient ring.
inline Integer coerce(const Integers&, const IntPoly& c) {
  if (c.size() > 1) throw Error("polynomial coefficient over Z");
  return c.empty() ? Integer(0) : c[0];
}
inline Field::value_type coerce(const Field& f, const IntPoly& c) {
  if (c.size() > 1) throw Error("polynomial coefficient over " + f.name());
  return c.empty() ? f.zero() : f.from_integer(c[0]);
}
inline Rational coerce(const Rationals&, const IntPoly& c) {
  if (c.size() > 1) throw Error("polynomial coefficient over Q");
  return c.empty() ? Rational(0) : Rational(c[0]);
}
inline PolynomialRing::value_type coerce(const PolynomialRing& r, const IntPoly& c) {
  poly::Poly<Field> out;
  for (const auto& x : c) out.push_back(r.field().from_integer(x));
  poly::trim(r.field(), out);
  return out;
}

// Structure constants of a description over `ring`; `verify` runs the law checks.
template <CoefficientRing R>
SCAlgebra<R> to_algebra(const Description& d, const R& ring, bool verify = true) {
  const std::size_t n = d.labels.size();
  std::vector<typename R::value_type> t(n * n * n, ring.zero());
  for (std::size_t j = 0; j < n; ++j) {
    t[(0 * n + j) * n + j] = ring.one();
    t[(j * n + 0) * n + j] = ring.one();
  }
  for (const auto& p : d.products) {
    for (std::size_t k = 0; k < n; ++k) t[(p.left * n + p.right) * n + k] = ring.zero();
    for (const auto& term : p.terms) {
      auto& slot = t[(p.left * n + p.right) * n + term.label];
      slot = ring.add(slot, coerce(ring, term.coeff));
    }
  }
  auto unit = vec::unit(ring, n, 0);
  if (verify) return SCAlgebra<R>::build(ring, d.labels, std::move(t), std::move(unit));
  return SCAlgebra<R>::unchecked(ring, d.labels, std::move(t), std::move(unit));
}

namespace detail {

inline IntPoly literal(const Integers&, const Integer& c) { return c == 0 ? IntPoly{} : IntPoly{c}; }

inline Integer prime_part(const Field& f, Field::value_type c) {
  auto digits = f.digits(c);
  for (std::size_t i = 1; i < digits.size(); ++i)
    if (digits[i] != 0) throw Error("coefficient " + f.to_string(c) + " has no integer literal");
  return Integer(digits.empty() ? 0 : digits[0]);
}

inline IntPoly literal(const Field& f, Field::value_type c) {
  return f.is_zero(c) ? IntPoly{} : IntPoly{prime_part(f, c)};
}

inline IntPoly literal(const PolynomialRing& r, const poly::Poly<Field>& c) {
  IntPoly out;
  for (auto x : c) out.push_back(prime_part(r.field(), x));
  trim_int(out);
  return out;
}

inline std::string monomial(const Integer& c, std::size_t e) {
  std::string s;
  if (e == 0) return c.str();
  if (c != 1) s = c.str() + "*";
  s += "T";
  if (e > 1) s += "^" + std::to_string(e);
  return s;
}

// A nonzero literal with its sign split off when it is a single monomial.
inline std::pair<bool, std::string> literal_text(const IntPoly& c) {
  std::size_t nonzero = 0, top = 0;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (c[i] != 0) ++nonzero, top = i;
  if (nonzero == 1) {
    const bool neg = c[top] < 0;
    return {neg, monomial(neg ? Integer(-c[top]) : c[top], top)};
  }
  std::string s;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    const bool neg = c[i] < 0;
    s += s.empty() ? (neg ? "-" : "") : (neg ? "-" : "+");
    s += monomial(neg ? Integer(-c[i]) : c[i], i);
  }
  return {false, "(" + s + ")"};
}

}  // namespace detail

// Canonical text: products in (i, j) order, terms in label order, products
// with the unit omitted when they follow from the unit law.
template <CoefficientRing R>
std::string serialize(const SCAlgebra<R>& a, const BaseRing& base) {
  const std::size_t n = a.dim();
  if (a.one() != vec::unit(a.ring(), n, 0)) throw Error("serialization needs the unit as the first basis vector");
  std::string out = "base " + base.name() + "\nbasis";
  for (std::size_t i = 0; i < n; ++i) out += " " + (i == 0 ? std::string("1") : a.labels()[i]);
  out += "\n";
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      const auto& prod = a.product(i, j);
      if ((i == 0 || j == 0) && prod == a.basis(i == 0 ? j : i)) continue;
      if (vec::is_zero(a.ring(), prod)) continue;
      std::string rhs;
      for (std::size_t k = 0; k < n; ++k) {
        if (a.ring().is_zero(prod[k])) continue;
        auto [neg, text] = detail::literal_text(detail::literal(a.ring(), prod[k]));
        rhs += rhs.empty() ? (neg ? "-" : "") : (neg ? " - " : " + ");
        if (k == 0)
          rhs += text;
        else
          rhs += (text == "1" ? "" : text + "*") + a.labels()[k];
      }
      out += "mul " + (i == 0 ? std::string("1") : a.labels()[i]) + " " + (j == 0 ? std::string("1") : a.labels()[j]) + " = " + rhs + "\n";
    }
  return out;
}

}  // namespace hasse
