#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <thread>

#include "hasse/description.hpp"
#include "hasse/morphism_text.hpp"
#include "hasse/order.hpp"
#include "hasse/presets.hpp"
#include "hasse/procesi.hpp"
#include "hasse/zeta.hpp"
#include "oracle.hpp"
#include "properties.hpp"

using namespace hasse;

namespace {

using Clock = std::chrono::steady_clock;
using Coeffs = std::vector<Integer>;
using TPoly = poly::Poly<Field>;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool ok, const std::string& what) {
    if (!ok && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct Sample {
  std::string name;
  FqAlgebra algebra;
  std::size_t rank;
};

// Everything criteria 1-8 touch, revisited by criterion 9.
struct Corpus {
  std::vector<Sample> fibers;
  std::vector<std::pair<std::string, AlgMorphism<Field>>> morphisms;
};

unsigned workers() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

Coeffs ints(std::initializer_list<long long> xs) {
  Coeffs c;
  for (auto x : xs) c.push_back(x);
  return c;
}

Coeffs times(const Coeffs& a, const Coeffs& b) {
  Coeffs c(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

BaseRing gf(std::uint64_t p) { return BaseRing::finite_field(Field::make(p, 1)); }
BaseRing gft(std::uint64_t p) { return BaseRing::polynomial_ring(Field::make(p, 1)); }

FqAlgebra field_preset(const std::string& name, std::uint64_t p) { return to_algebra(preset(name, gf(p)), Field::make(p, 1)); }

FqVec combination(const Field& f, std::size_t n, std::initializer_list<std::pair<std::size_t, long long>> terms) {
  FqVec v = vec::zero(f, n);
  for (auto [i, c] : terms) v[i] = f.add(v[i], f.from_int(c));
  return v;
}

// A -> M_2(A), a -> diag(a, a).
AlgMorphism<Field> scalar_embedding(const FqAlgebra& a) {
  auto m = matrix_algebra(a, 2);
  std::vector<FqVec> im;
  const std::size_t d = a.dim();
  for (std::size_t b = 0; b < d; ++b) {
    FqVec v = m.zero();
    v[b] = a.ring().one();
    v[3 * d + b] = a.ring().one();
    im.push_back(v);
  }
  return make_morphism(a, m, im);
}

// s3 basis: 1 b b2 a ab ab2
constexpr std::size_t kOne = 0, kB = 1, kB2 = 2, kA = 3;

Outcome criterion1(Corpus& corpus) {
  Outcome r;
  const auto t0 = Clock::now();
  const auto o = make_order(preset("s3", gf(3)));
  const FqAlgebra& a = o.over_field();
  const auto pts = max_two_sided_ideals(a);
  r.require(pts.size() == 2, "Spec has " + std::to_string(pts.size()) + " points");
  const auto z = center(a);
  r.require(z.dim() == 3, "center has dimension " + std::to_string(z.dim()));
  const auto j = radical(a);
  r.require(j.dim() == 4, "radical has dimension " + std::to_string(j.dim()));
  // Z = F3 1 + F3 u + F3 v with u, v the central nilpotents
  const auto zj = z.intersect(j.space());
  r.require(zj.dim() == 2, "Z(A) meets J in dimension " + std::to_string(zj.dim()));
  if (zj.dim() == 2) {
    const auto& u = zj.basis()[0];
    const auto& v = zj.basis()[1];
    for (const auto& prod : {a.mul(u, u), a.mul(v, v), a.mul(u, v), a.mul(v, u)})
      r.require(vec::is_zero(a.ring(), prod), "u^2 = v^2 = uv = 0 fails");
    r.require(Subspace<Field>::span(a.ring(), a.dim(), {a.one(), u, v}) == z, "1, u, v do not span Z(A)");
  }
  const auto s = zeta_series(o, 20);
  r.require(compare_rational(s, ints({1}), ints({1, -2, 1})), "zeta series differs from (1-u)^-2");
  const double secs = seconds_since(t0);
  r.require(secs < 1.0, "took " + std::to_string(secs) + " s");
  if (r.pass) {
    std::ostringstream d;
    d << "2 points, dim Z = 3 with u^2 = v^2 = uv = 0, dim J = 4, zeta to u^20 = (1-u)^-2, " << secs << " s";
    r.detail = d.str();
  }
  corpus.fibers.push_back({"F3[S3]", a, 6});
  return r;
}

Outcome criterion2(Corpus& corpus) {
  Outcome r;
  const auto t0 = Clock::now();
  std::ostringstream d;
  for (std::uint64_t q : {3, 5}) {
    const auto o = make_order(preset("dihedral", gft(q)));
    const auto s = zeta_series(o, 6, workers());
    const auto den = times(ints({1, -2, 1}), ints({1, -static_cast<long long>(q)}));
    r.require(compare_rational(s, ints({1}), den), "q=" + std::to_string(q) + ": series differs from (1-u)^-2 (1-qu)^-1");
    const Field& f = o.base().field();
    const TPoly t_minus_2{f.from_int(-2), f.one()}, t_plus_2{f.from_int(2), f.one()};
    std::size_t over_disc = 0;
    for (const auto& part : s.provenance) {
      const bool divides = part.over.generator == t_minus_2 || part.over.generator == t_plus_2;
      std::size_t count = 0;
      bool degree_ok = true;
      for (const auto& e : part.factors) {
        count += e.multiplicity;
        degree_ok = degree_ok && e.degree == part.over.degree();
      }
      if (divides) {
        over_disc += count;
        r.require(count == 2 && degree_ok, "q=" + std::to_string(q) + ": fiber over " + part.over.to_string() + " is not two degree-1 points");
      } else {
        r.require(count == 1 && degree_ok, "q=" + std::to_string(q) + ": fiber over " + part.over.to_string() + " is not one point");
      }
      corpus.fibers.push_back({"dihedral q=" + std::to_string(q) + " at " + part.over.to_string(), fiber(o, part.over), 4});
    }
    r.require(over_disc == 4, "q=" + std::to_string(q) + ": " + std::to_string(over_disc) + " points over T^2-4");
    d << "q=" << q << ": " << s.provenance.size() << " fibers, series " << s.coeffs[6] << " at u^6; ";
  }
  const double secs = seconds_since(t0);
  r.require(secs < 60.0, "took " + std::to_string(secs) + " s");
  if (r.pass) {
    d << "census 4 + one per irreducible, " << secs << " s";
    r.detail = d.str();
  }
  return r;
}

Outcome criterion3(Corpus& corpus) {
  Outcome r;
  const Field f = Field::make(5, 1);
  const PolynomialRing ring(f);
  const auto dihedral = make_order(preset("dihedral", gft(5)));
  const auto& a = dihedral.over_polynomials();
  const auto m = matrix_algebra(ground_algebra(ring), 2);  // E11 E12 E21 E22
  const TPoly T = ring.variable();
  const TPoly disc = poly::sub(f, poly::mul(f, T, T), TPoly{f.from_int(4)});
  const auto half = f.inv(f.from_int(2));
  auto scale = [&](const TPoly& p) { return poly::scale(f, p, half); };
  const Vec<PolynomialRing> alpha{ring.one(), ring.zero(), ring.zero(), ring.from_int(-1)};
  const Vec<PolynomialRing> beta{scale(T), scale(ring.one()), scale(disc), scale(T)};
  std::optional<AlgMorphism<PolynomialRing>> h;
  try {
    h = make_morphism(a, m, {m.one(), beta, alpha, m.mul(alpha, beta)});
  } catch (const Error& e) {
    r.require(false, std::string("not a ring homomorphism: ") + e.what());
    return r;
  }
  // coordinates of each image in the basis E11, E12, (T^2-4) E21, E22
  std::vector<std::vector<TPoly>> rows;
  for (const auto& v : h->images) {
    auto [quo, rem] = poly::divmod(f, v[2], disc);
    r.require(rem.empty(), "an image has lower-left entry not divisible by T^2-4");
    rows.push_back({v[0], v[1], quo, v[3]});
  }
  // det of the 4x4 coordinate matrix by permutation expansion
  std::vector<std::size_t> perm{0, 1, 2, 3};
  TPoly det;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < 4; ++i)
      for (std::size_t j = i + 1; j < 4; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    TPoly term{f.from_int(sign)};
    for (std::size_t i = 0; i < 4; ++i) term = poly::mul(f, term, rows[i][perm[i]]);
    det = poly::add(f, det, term);
  } while (std::next_permutation(perm.begin(), perm.end()));
  r.require(det.size() == 1, "image and lattice differ: determinant " + poly::to_string(f, det, "T"));

  std::size_t checked = 0;
  for (const auto& mi : base_max_ideals(dihedral.base(), 3)) {
    if (poly::divmod(f, disc, mi.generator).second.empty()) continue;
    const auto fib = fiber(dihedral, mi);
    const auto w = wedderburn(fib);
    const auto pts = max_two_sided_ideals(fib, w);
    const bool one_block = w.radical.dim() == 0 && pts.size() == 1 && pts[0].matrix_size == 2 && pts[0].center_degree == 1 &&
                           pts[0].norm == ipow(Integer(5), mi.degree());
    r.require(one_block, "fiber over " + mi.to_string() + " is not M_2(GF(5^" + std::to_string(mi.degree()) + "))");
    ++checked;
    corpus.fibers.push_back({"dihedral q=5 at " + mi.to_string() + " (inverted)", fib, 4});
  }
  if (r.pass)
    r.detail = "homomorphism verified, image = {lower-left in (T^2-4)} with det " + poly::to_string(f, det, "T") + ", " +
               std::to_string(checked) + " fibers of degree <= 3 are single blocks (2, 5^deg f)";
  return r;
}

Outcome criterion4(Corpus& corpus) {
  Outcome r;
  const auto o = make_order(preset("s3", BaseRing::integers()));
  const auto s = spec_poset(o, Selector::localize(3, true));
  r.require(s.points.size() == 5, std::to_string(s.points.size()) + " points");
  if (!r.pass) return r;
  const auto aq = hasse::detail::rationalize(o.over_integers());
  auto qideal = [&](std::initializer_list<std::initializer_list<std::pair<std::size_t, long long>>> gens) {
    std::vector<Vec<Rationals>> g;
    for (const auto& terms : gens) {
      auto v = aq.zero();
      for (auto [i, c] : terms) v[i] += Rational(c);
      g.push_back(v);
    }
    return ideal_generated(aq, g).space();
  };
  auto span_of = [&](const SpecPoint& p) {
    std::vector<Vec<Rationals>> rows;
    for (const auto& g : p.generators) {
      Vec<Rationals> v;
      for (const auto& c : g) v.push_back(Rational(c));
      rows.push_back(v);
    }
    return Subspace<Rationals>::span(Rationals{}, aq.dim(), rows);
  };
  const auto fib = fiber(o, BaseMaxIdeal::of_prime(3));
  const Field& f3 = fib.ring();
  auto fideal = [&](long long sign) {
    return ideal_generated(fib, {combination(f3, 6, {{kA, 1}, {kOne, -sign}}), combination(f3, 6, {{kB, 1}, {kOne, -1}})}).space();
  };
  const auto want_p = qideal({{{kA, 1}, {kOne, -1}}, {{kB, 1}, {kOne, -1}}});
  const auto want_p2 = qideal({{{kA, 1}, {kOne, 1}}, {{kB, 1}, {kOne, -1}}});
  const auto want_q = qideal({{{kB2, 1}, {kB, 1}, {kOne, 1}}});
  const auto want_m = fideal(1), want_m2 = fideal(-1);
  std::optional<std::size_t> m, m2, p, p2, q;
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto& pt = s.points[i];
    if (pt.kind == SpecPoint::Kind::closed) {
      r.require(pt.over->prime == 3, "closed point not over 3");
      if (pt.point->ideal.space() == want_m) m = i;
      if (pt.point->ideal.space() == want_m2) m2 = i;
    } else {
      const auto sp = span_of(pt);
      if (sp == want_p) p = i;
      if (sp == want_p2) p2 = i;
      if (sp == want_q) q = i;
    }
  }
  r.require(m && m2 && p && p2 && q, "a point does not match its generator set");
  if (!r.pass) return r;
  auto sorted = [](std::vector<std::size_t> v) {
    std::sort(v.begin(), v.end());
    return v;
  };
  r.require(s.closure_of(*m) == std::vector<std::size_t>{*m}, "m is not closed");
  r.require(s.closure_of(*m2) == std::vector<std::size_t>{*m2}, "m' is not closed");
  r.require(s.closure_of(*p) == sorted({*m, *p}), "cl(p) != {m, p}");
  r.require(s.closure_of(*p2) == sorted({*m2, *p2}), "cl(p') != {m', p'}");
  r.require(s.closure_of(*q) == sorted({*m, *m2, *q}), "cl(q) != {m, m', q}");
  if (r.pass)
    r.detail = "m=" + s.points[*m].label + " m'=" + s.points[*m2].label + " p=" + s.points[*p].label + " p'=" + s.points[*p2].label +
               " q=" + s.points[*q].label + "; cl(p)={m,p}, cl(p')={m',p'}, cl(q)={m,m',q}";
  corpus.fibers.push_back({"Z[S3] at 3", fib, 6});
  return r;
}

Outcome criterion5(Corpus& corpus) {
  Outcome r;
  for (std::uint64_t p : {2, 3, 5}) {
    const auto h = to_morphism(parse_morphism(morphism_preset_text("diag", gf(p))));
    const std::string at = "p=" + std::to_string(p);
    r.require(!procesi_check(h), at + ": Procesi check accepts the diagonal embedding");
    const auto pts = max_two_sided_ideals(h.target);
    r.require(pts.size() == 1 && pts[0].ideal.dim() == 0, at + ": M_2 has a maximal ideal other than 0");
    const auto rep = demonstrate_pullback(h, pts[0].ideal);
    r.require(rep.ideal.dim() == 0 && rep.blocks == 2 && !rep.prime(), at + ": h^-1(0) is not certified non-prime");
    bool refused = false;
    try {
      pullback_point(h, pts[0].ideal);
    } catch (const Error&) {
      refused = true;
    }
    r.require(refused, at + ": pullback_point accepted a non-Procesi morphism");
    corpus.fibers.push_back({"M2(F" + std::to_string(p) + ")", h.target, 4});
    corpus.fibers.push_back({"F" + std::to_string(p) + " x F" + std::to_string(p), h.source, 2});
  }
  if (r.pass) r.detail = "rejected for p = 2, 3, 5; h^-1((0)) = 0 with quotient of 2 blocks, not prime";
  return r;
}

Outcome criterion6(Corpus& corpus) {
  Outcome r;
  const auto t0 = Clock::now();
  std::size_t count = 0;
  for (std::uint64_t p : {2, 3}) {
    const Field f = Field::make(p, 1);
    for (const auto& [name, table] : oracle::small_groups()) {
      const auto a = group_algebra(f, table);
      r.require(radical(a).space() == oracle::radical(a), "F" + std::to_string(p) + "[" + name + "]: radical differs from brute force");
      corpus.fibers.push_back({"F" + std::to_string(p) + "[" + name + "]", a, a.dim()});
      ++count;
    }
  }
  const double secs = seconds_since(t0);
  r.require(secs < 30.0, "took " + std::to_string(secs) + " s");
  if (r.pass) {
    std::ostringstream d;
    d << count << " group algebras match subspace enumeration, " << secs << " s";
    r.detail = d.str();
  }
  return r;
}

Outcome criterion7(Corpus& corpus) {
  Outcome r;
  struct Case {
    std::uint64_t q;
    std::string name;
  };
  for (const auto& c : {Case{3, "c2"}, Case{5, "s3"}}) {
    const std::string at = "(2, " + std::to_string(c.q) + ", " + c.name + ")";
    const Field f = Field::make(c.q, 1);
    const auto a = field_preset(c.name, c.q);
    // A (x)_A C = C
    const auto g = scalar_embedding(a);
    const auto over_a = tensor(identity_morphism(a), g);
    r.require(is_isomorphism(over_a.from_right), at + ": A (x)_A C -> C is not an isomorphism");
    // M_n(F) (x)_F A = M_n(A)
    const auto m = matrix_algebra(ground_algebra(f), 2);
    const auto t = tensor(unit_morphism(m), unit_morphism(a));
    const auto ma = matrix_algebra(a, 2);
    std::vector<FqVec> im;
    for (std::size_t ij = 0; ij < 4; ++ij)
      for (std::size_t b = 0; b < a.dim(); ++b) im.push_back(t.rewrite(t.pure(m.basis(ij), a.basis(b))));
    try {
      r.require(is_isomorphism(make_morphism(ma, t.algebra, im)), at + ": M_n(A) -> M_n(F) (x) A is not bijective");
    } catch (const Error& e) {
      r.require(false, at + ": M_n(A) -> M_n(F) (x) A is not a homomorphism: " + e.what());
    }
    // swap is an involution
    const auto ba = tensor(unit_morphism(a), unit_morphism(m));
    const auto sw = swap_iso(t, ba);
    r.require(compose(swap_iso(ba, t), sw).images == identity_morphism(t.algebra).images, at + ": swap is not an involution");
    corpus.fibers.push_back({"M2(F) (x) " + c.name + " q=" + std::to_string(c.q), t.algebra, t.algebra.dim()});
    corpus.morphisms.emplace_back("left factor into M2 (x) " + c.name, t.from_left);
    corpus.morphisms.emplace_back("right factor into M2 (x) " + c.name, t.from_right);
    corpus.morphisms.emplace_back("scalar embedding of " + c.name, g);
  }
  // the naive product on pure tensors fails over A = B = C = M_2(F3)
  const Field f3 = Field::make(3, 1);
  const auto m = field_preset("mat2", 3);
  const auto t = tensor(identity_morphism(m), identity_morphism(m));
  const FqVec e12 = m.basis(1), e21 = m.basis(2);
  const auto actual = t.algebra.mul(t.rewrite(t.pure(m.one(), e12)), t.rewrite(t.pure(e21, m.one())));
  const auto naive = t.rewrite(t.pure(m.mul(m.one(), e21), m.mul(e12, m.one())));
  r.require(actual != naive, "naive product agrees with the actual product");
  if (r.pass)
    r.detail = "A (x)_A C = C and M_2(F_q) (x) A = M_2(A) for (2,3,F3[C2]), (2,5,F5[S3]); swap involutive; (1 (x) E12)(E21 (x) 1) = " +
               t.algebra.format(actual) + " but naive gives " + t.algebra.format(naive);
  return r;
}

Outcome criterion8(Corpus& corpus) {
  Outcome r;
  const auto gauss = make_order(preset("gauss", BaseRing::integers()));
  const auto d = dirichlet_prefix(gauss, 50, workers());
  for (std::uint64_t n = 1; n <= 50; ++n) {
    long long reps = 0;
    for (long long x = -8; x <= 8; ++x)
      for (long long y = -8; y <= 8; ++y)
        if (x * x + y * y == static_cast<long long>(n)) ++reps;
    r.require(d[n] == reps / 4, "gauss a_" + std::to_string(n) + " differs from the ideal count");
  }
  for (const auto& lf : d.local) corpus.fibers.push_back({"Z[i] at " + std::to_string(lf.prime), fiber(gauss, BaseMaxIdeal::of_prime(lf.prime)), 2});

  const auto s3 = make_order(preset("s3", BaseRing::integers()));
  const auto ds = dirichlet_prefix(s3, 23, workers());
  for (const auto& lf : ds.local) {
    const std::string at = "Z[S3] at " + std::to_string(lf.prime);
    if (lf.prime == 3)
      r.require(lf.factors == std::vector<EulerFactor>{{1, 2}}, at + ": factor is not (1-3^-s)^-2");
    else if (lf.prime >= 5)
      r.require(lf.factors == std::vector<EulerFactor>{{1, 3}}, at + ": factor is not (1-p^-s)^-3");
    corpus.fibers.push_back({at, fiber(s3, BaseMaxIdeal::of_prime(lf.prime)), 6});
  }
  std::vector<std::pair<unsigned, Integer>> at2;
  for (const auto& p : closed_points_over(s3, BaseMaxIdeal::of_prime(2))) at2.emplace_back(p.point->matrix_size, p.norm());
  std::sort(at2.begin(), at2.end());
  r.require(at2 == std::vector<std::pair<unsigned, Integer>>{{1, 2}, {2, 2}}, "Z[S3] at 2 does not match blocks [(1,2),(2,2)]");
  if (r.pass) r.detail = "gauss a_1..a_50 = r_2(n)/4; Z[S3]: (1-3^-s)^-2 at 3, (1-p^-s)^-3 for 5 <= p <= 23, points (1,2),(2,2) at 2";
  return r;
}

Outcome criterion9(Corpus& corpus) {
  props::Tally t;
  for (const auto& s : corpus.fibers) props::fiber_properties(s.algebra, s.rank, s.name, t);
  std::size_t morphisms = 0;
  for (std::uint64_t p : {2, 3, 5})
    for (const auto& name : morphism_preset_names()) {
      const auto h = to_morphism(parse_morphism(morphism_preset_text(name, gf(p))));
      if (!procesi_check(h)) continue;
      props::norm_property(h, name + " p=" + std::to_string(p), t);
      ++morphisms;
    }
  for (const auto& [name, h] : corpus.morphisms) {
    props::norm_property(h, name, t);
    ++morphisms;
  }
  Outcome r;
  r.require(t.ok(), t.failures.empty() ? "" : t.failures.front() + " (" + std::to_string(t.failures.size()) + " failures)");
  if (r.pass)
    r.detail = std::to_string(t.checks) + " checks over " + std::to_string(corpus.fibers.size()) + " algebras and " + std::to_string(morphisms) +
               " Procesi morphisms";
  return r;
}

}  // namespace

int main() {
  Corpus corpus;
  const std::vector<std::pair<std::string, std::function<Outcome(Corpus&)>>> criteria{
      {"F3[S3] suite", criterion1},
      {"dihedral zeta", criterion2},
      {"M2 embedding", criterion3},
      {"Spec Z[S3] localized at 3", criterion4},
      {"Procesi counterexample", criterion5},
      {"radical oracle", criterion6},
      {"tensor laws", criterion7},
      {"Dirichlet prefix", criterion8},
      {"property suites", criterion9},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome r;
    try {
      r = criteria[i].second(corpus);
    } catch (const std::exception& e) {
      r.pass = false;
      r.detail = std::string("threw: ") + e.what();
    }
    failed += r.pass ? 0 : 1;
    std::cout << (r.pass ? "PASS" : "FAIL") << " " << i + 1 << " " << criteria[i].first << ": " << r.detail << std::endl;
  }
  return failed == 0 ? 0 : 1;
}
