#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "hasse/description.hpp"
#include "hasse/error.hpp"
#include "hasse/morphism_text.hpp"
#include "hasse/order.hpp"
#include "hasse/presets.hpp"
#include "hasse/procesi.hpp"
#include "hasse/structure.hpp"
#include "hasse/zeta.hpp"

// Command dispatch for the hasse tool. Argument parsing lives in the tool;
// run() takes the parsed command and writes the report.
namespace hasse::cli {

enum class Format { text, machine };

struct Command {
  std::string subcommand;
  std::string preset;  // exactly one of preset, file
  std::string file;
  std::string base;    // with a preset
  std::string with;    // tensor: second factor, a preset over the same base
  unsigned degree = 5;       // -D
  std::uint64_t bound = 20;  // -N
  std::vector<std::string> fibers;
  std::optional<std::uint64_t> localize;
  bool generic = false;
  std::string point;  // neighborhood
  Format format = Format::text;
  unsigned threads = 1;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

inline const std::vector<std::string>& subcommands() {
  static const std::vector<std::string> names{"center", "radical", "wedderburn", "points", "spec",
                                              "zeta", "dirichlet", "tensor", "check-morphism", "neighborhood"};
  return names;
}

namespace detail {

struct Input {
  std::string name;
  Description description;
};

inline BaseRing base_of(const std::string& text) {
  auto b = hasse::detail::parse_base_name(text);
  if (!b) throw Error("unknown base '" + text + "'");
  return *b;
}

inline Input load_input(const Command& c) {
  if (!c.preset.empty()) return {c.preset, preset(c.preset, base_of(c.base))};
  return {c.file, load_description(c.file)};
}

inline BaseMaxIdeal parse_fiber(const BaseRing& base, const std::string& text) {
  switch (base.kind()) {
    case BaseRing::Kind::integers: {
      std::size_t pos = 0;
      std::uint64_t p = 0;
      try {
        p = std::stoull(text, &pos);
      } catch (const std::exception&) {
        pos = 0;
      }
      if (pos == 0 || pos != text.size()) throw Error("fiber over Z must be a prime, got '" + text + "'");
      return BaseMaxIdeal::of_prime(p);
    }
    case BaseRing::Kind::polynomial_ring: {
      Description d;
      d.base = base;
      hasse::detail::LineParser lp(text, 1, d);
      IntPoly g;
      for (const auto& t : lp.sum(false)) g = hasse::detail::int_add(std::move(g), t.coeff, 1);
      if (!lp.at_end()) lp.fail("unexpected text after polynomial");
      return BaseMaxIdeal::of_polynomial(base.field(), coerce(PolynomialRing(base.field()), g));
    }
    case BaseRing::Kind::finite_field:
      break;
  }
  throw Error("base " + base.name() + " has a single fiber; --fiber does not apply");
}

inline std::vector<BaseMaxIdeal> chosen_fibers(const Command& c, const BaseRing& base) {
  std::vector<BaseMaxIdeal> out;
  if (c.localize) {
    if (base.kind() != BaseRing::Kind::integers) throw Error("--localize applies to the base Z");
    out.push_back(BaseMaxIdeal::of_prime(*c.localize));
  }
  for (const auto& f : c.fibers) out.push_back(parse_fiber(base, f));
  return out;
}

// The fibers a command ranges over: the chosen ones, or all up to the bound.
inline std::vector<BaseMaxIdeal> ranged_fibers(const Command& c, const BaseRing& base) {
  auto out = chosen_fibers(c, base);
  if (!out.empty()) return out;
  return base_max_ideals(base, base.kind() == BaseRing::Kind::integers ? c.bound : c.degree);
}

struct FieldAlgebra {
  FqAlgebra algebra;
  std::string where;  // "" or " at the fiber over <m>"
};

inline FieldAlgebra field_algebra(const Command& c, const Order& o) {
  const BaseRing& base = o.base();
  if (base.kind() == BaseRing::Kind::finite_field) {
    if (!c.fibers.empty() || c.localize) throw Error("base " + base.name() + " has a single fiber; --fiber does not apply");
    return {o.over_field(), ""};
  }
  const auto fibers = chosen_fibers(c, base);
  if (fibers.size() != 1)
    throw Error(c.subcommand + " over " + base.name() + " is computed on one fiber; choose it with --fiber");
  return {fiber(o, fibers[0]), " at the fiber over " + fibers[0].to_string()};
}

inline std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? sep : "") + xs[i];
  return s;
}

template <class T>
std::string join_numbers(const std::vector<T>& xs) {
  std::vector<std::string> s;
  for (const auto& x : xs) s.push_back(x.str());
  return join(s, ",");
}

inline std::string coords(const FqAlgebra& a, const FqVec& v) {
  std::vector<std::string> s;
  for (auto x : v) s.push_back(a.ring().to_string(x));
  return join(s, ",");
}

inline void print_basis(std::ostream& out, Format fmt, const FqAlgebra& a, const std::vector<FqVec>& basis, const char* prefix) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (fmt == Format::machine)
      out << "element " << coords(a, basis[i]) << "\n";
    else
      out << "  " << prefix << i << " = " << a.format(basis[i]) << "\n";
  }
}

inline std::string header(const Input& in, const BaseRing& base, const std::string& where) {
  return in.name + " over " + base.name() + where;
}

inline int cmd_center(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto fa = field_algebra(c, o);
  const auto z = center(fa.algebra);
  if (c.format == Format::machine) {
    out << "center dim=" << z.dim() << "\n";
  } else {
    out << "center of " << header(in, o.base(), fa.where) << "\n";
    out << "dimension " << z.dim() << " of " << fa.algebra.dim() << "\n";
  }
  print_basis(out, c.format, fa.algebra, z.basis(), "z");
  return 0;
}

inline int cmd_radical(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto fa = field_algebra(c, o);
  const auto j = radical(fa.algebra);
  const auto index = nilpotency_index(fa.algebra, j);
  if (c.format == Format::machine) {
    out << "radical dim=" << j.dim() << " index=" << index << "\n";
  } else {
    out << "radical of " << header(in, o.base(), fa.where) << "\n";
    out << "dimension " << j.dim() << " of " << fa.algebra.dim() << ", nilpotency index " << index << "\n";
  }
  print_basis(out, c.format, fa.algebra, j.basis(), "j");
  return 0;
}

inline int cmd_wedderburn(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto fa = field_algebra(c, o);
  const auto w = wedderburn(fa.algebra);
  const auto pts = max_two_sided_ideals(fa.algebra, w);
  const Field& f = fa.algebra.ring();
  if (c.format == Format::machine) {
    out << "radical dim=" << w.radical.dim() << "\n";
    for (const auto& p : pts) out << "block r=" << p.matrix_size << " N=" << p.norm << "\n";
    return 0;
  }
  out << "Wedderburn decomposition of " << header(in, o.base(), fa.where) << "\n";
  out << "dimension " << fa.algebra.dim() << " = radical " << w.radical.dim();
  for (const auto& p : pts) out << " + " << p.matrix_size * p.matrix_size * p.center_degree;
  out << "\n";
  for (std::size_t i = 0; i < pts.size(); ++i)
    out << "  block " << i << ": " << pts[i].residue_name(f) << ", dimension " << pts[i].matrix_size * pts[i].matrix_size * pts[i].center_degree << "\n";
  return 0;
}

inline void print_closed(std::ostream& out, Format fmt, const SpecPoint& p) {
  if (fmt == Format::machine) {
    out << "point base=" << p.over->to_string() << " N=" << p.norm() << " r=" << p.point->matrix_size << "\n";
    return;
  }
  out << "  " << p.label << "  over " << p.over->to_string() << "  N=" << p.norm() << "  r=" << p.point->matrix_size
      << "  kappa=" << p.residue_name() << "\n";
}

inline int cmd_points(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto fibers = o.base().kind() == BaseRing::Kind::finite_field ? base_max_ideals(o.base(), 1) : ranged_fibers(c, o.base());
  if (o.base().kind() == BaseRing::Kind::finite_field && (!c.fibers.empty() || c.localize))
    throw Error("base " + o.base().name() + " has a single fiber; --fiber does not apply");
  std::vector<std::vector<SpecPoint>> per(fibers.size());
  hasse::detail::for_each_parallel(fibers.size(), c.threads, [&](std::size_t i) { per[i] = closed_points_over(o, fibers[i]); });
  if (c.format == Format::text) out << "closed points of " << header(in, o.base(), "") << "\n";
  std::size_t label = 0, fiber_count = 0;
  for (auto& pts : per) {
    ++fiber_count;
    for (auto& p : pts) {
      p.label = "P" + std::to_string(label++);
      print_closed(out, c.format, p);
    }
  }
  if (c.format == Format::text) out << label << " points over " << fiber_count << " fibers\n";
  return 0;
}

inline std::vector<std::string> labels_of(const SpecPoset& s, const std::vector<std::size_t>& idx) {
  std::vector<std::string> out;
  for (auto i : idx) out.push_back(s.points[i].label);
  return out;
}

inline Selector selector_of(const Command& c, const BaseRing& base) {
  if (base.kind() == BaseRing::Kind::finite_field) {
    if (!c.fibers.empty() || c.localize) throw Error("base " + base.name() + " has a single fiber; --fiber does not apply");
    return {base_max_ideals(base, 1), c.generic};
  }
  return {ranged_fibers(c, base), c.generic};
}

inline void print_poset(std::ostream& out, Format fmt, const Order& o, const SpecPoset& s) {
  for (const auto& p : s.points) {
    if (p.kind == SpecPoint::Kind::closed) {
      print_closed(out, fmt, p);
      continue;
    }
    if (fmt == Format::machine) {
      std::vector<std::string> rows;
      for (const auto& g : p.generators) rows.push_back(join_numbers(g));
      out << "generic label=" << p.label << " dim=" << p.residue_dim << " center=" << p.center_degree << " generators=" << join(rows, ";")
          << "\n";
      continue;
    }
    std::vector<std::string> gens;
    for (const auto& g : ideal_generators(o, p)) gens.push_back(o.over_integers().format(g));
    out << "  " << p.label << "  generic  kappa=" << p.residue_name() << "\n";
    out << "      ideal (" << (gens.empty() ? "0" : join(gens, ", ")) << ")\n";
  }
  if (fmt == Format::text) out << "closures\n";
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    const auto cl = labels_of(s, s.closure_of(i));
    if (fmt == Format::machine)
      out << "closure of=" << s.points[i].label << " points=" << join(cl, ",") << "\n";
    else
      out << "  cl(" << s.points[i].label << ") = {" << join(cl, ", ") << "}\n";
  }
}

inline int cmd_spec(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto s = spec_poset(o, selector_of(c, o.base()));
  if (c.format == Format::text) out << "Spec of " << header(in, o.base(), "") << ": " << s.points.size() << " points\n";
  print_poset(out, c.format, o, s);
  return 0;
}

inline int cmd_neighborhood(const Command& c, std::ostream& out) {
  if (c.point.empty()) throw UsageError("neighborhood needs --point");
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  Command local = c;
  local.generic = true;
  const auto s = spec_poset(o, selector_of(local, o.base()));
  const auto x = s.find(c.point);
  if (!x) throw Error("point " + c.point + " is not in the poset");
  const auto u = labels_of(s, smallest_neighborhood(s, *x));
  if (c.format == Format::machine)
    out << "neighborhood point=" << c.point << " members=" << join(u, ",") << "\n";
  else
    out << "smallest neighborhood of " << c.point << " in Spec of " << header(in, o.base(), "") << "\n  U(" << c.point << ") = {"
        << join(u, ", ") << "}\n";
  return 0;
}

inline int cmd_zeta(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  if (!c.fibers.empty() || c.localize) throw Error("zeta ranges over all fibers up to -D; --fiber does not apply");
  const auto s = zeta_series(o, c.degree, c.threads);
  if (c.format == Format::text) {
    std::map<unsigned, std::uint64_t> total;
    std::size_t points = 0;
    for (const auto& part : s.provenance)
      for (const auto& f : part.factors) {
        total[f.degree] += f.multiplicity;
        points += f.multiplicity;
      }
    out << "zeta of " << header(in, o.base(), "") << " in u = " << o.base().field().size() << "^-s to degree " << c.degree << "\n";
    out << s.provenance.size() << " fibers, " << points << " closed points\n";
    for (const auto& [d, m] : total) out << "factor (1-u^" << d << ")^-" << m << "\n";
  }
  out << "series D=" << s.degree << " coeffs=" << join_numbers(s.coeffs) << "\n";
  return 0;
}

inline int cmd_dirichlet(const Command& c, std::ostream& out) {
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  const auto d = dirichlet_prefix(o, c.bound, c.threads);
  if (c.format == Format::text) out << "Dirichlet series of " << header(in, o.base(), "") << " to n = " << c.bound << "\n";
  for (const auto& lf : d.local)
    for (const auto& f : lf.factors)
      out << "euler p=" << lf.prime << " factor=(1-" << lf.prime << "^-" << f.degree << "s)^-" << f.multiplicity << "\n";
  std::vector<Integer> a(d.coeffs.begin() + 1, d.coeffs.end());
  out << "dirichlet N=" << d.length << " coeffs=" << join_numbers(a) << "\n";
  return 0;
}

inline int cmd_tensor(const Command& c, std::ostream& out) {
  if (c.with.empty()) throw UsageError("tensor needs --with <preset>");
  const auto in = load_input(c);
  const auto o = make_order(in.description);
  if (o.base().kind() != BaseRing::Kind::finite_field) throw Error("tensor products are computed over a finite field base");
  const auto other = make_order(preset(c.with, o.base()));
  const auto& b = o.over_field();
  const auto& cc = other.over_field();
  const auto bc = tensor(unit_morphism(b), unit_morphism(cc));
  const auto cb = tensor(unit_morphism(cc), unit_morphism(b));
  const auto sw = swap_iso(bc, cb);
  const auto back = swap_iso(cb, bc);
  bool involution = true;
  for (std::size_t i = 0; i < bc.algebra.dim(); ++i) involution = involution && back.apply(sw.images[i]) == bc.algebra.basis(i);
  const auto w = wedderburn(bc.algebra);
  const auto pts = max_two_sided_ideals(bc.algebra, w);
  const auto zdim = center(bc.algebra).dim();
  if (c.format == Format::machine) {
    out << "tensor dim=" << bc.algebra.dim() << " center=" << zdim << " radical=" << w.radical.dim() << " swap="
        << (involution ? "involution" : "broken") << "\n";
    for (const auto& p : pts) out << "block r=" << p.matrix_size << " N=" << p.norm << "\n";
    return 0;
  }
  out << in.name << " (x) " << c.with << " over " << o.base().name() << "\n";
  out << "dimension " << bc.algebra.dim() << " = " << b.dim() << " * " << cc.dim() << "\n";
  out << "center dimension " << zdim << ", radical dimension " << w.radical.dim() << "\n";
  for (std::size_t i = 0; i < pts.size(); ++i) out << "  block " << i << ": " << pts[i].residue_name(bc.algebra.ring()) << "\n";
  out << "swap isomorphism: " << (involution ? "verified, an involution" : "not an involution") << "\n";
  return 0;
}

inline int cmd_check_morphism(const Command& c, std::ostream& out) {
  MorphismDescription md;
  std::string name;
  if (!c.preset.empty()) {
    md = parse_morphism(morphism_preset_text(c.preset, base_of(c.base)));
    name = c.preset;
  } else {
    md = load_morphism(c.file);
    name = c.file;
  }
  const auto h = to_morphism(md);
  const bool procesi = procesi_check(h);
  const bool rc = procesi && rc_check(h);
  const auto tgt = max_two_sided_ideals(h.target);
  const Field& f = h.target.ring();
  const bool machine = c.format == Format::machine;
  if (machine) {
    out << "morphism source=" << h.source.dim() << " target=" << h.target.dim() << " procesi=" << (procesi ? "true" : "false")
        << " rc=" << (rc ? "true" : "false") << "\n";
  } else {
    out << "morphism " << name << " over " << md.source.base.name() << ": dimension " << h.source.dim() << " -> " << h.target.dim() << "\n";
    out << "homomorphism: verified\n";
    out << "procesi: " << (procesi ? "true" : "false") << "\n";
    out << "relatively commutative: " << (rc ? "true" : "false") << "\n";
  }
  if (procesi) {
    for (const auto& row : norm_compatibility(h)) {
      if (machine)
        out << "pullback target=Q" << row.target_point << " source=P" << row.source_point << " prime=true N=" << row.target_norm
            << " base=" << row.source_norm << " exponent=" << row.exponent << "\n";
      else
        out << "  Q" << row.target_point << " (" << tgt[row.target_point].residue_name(f) << ") pulls back to P" << row.source_point
            << ": N = " << row.target_norm << " = " << row.source_norm << "^" << row.exponent << "\n";
    }
    return 0;
  }
  if (!machine) out << "pullback demonstration\n";
  for (std::size_t j = 0; j < tgt.size(); ++j) {
    const auto rep = demonstrate_pullback(h, tgt[j].ideal);
    if (machine) {
      out << "pullback target=Q" << j << " prime=" << (rep.prime() ? "true" : "false") << " blocks=" << rep.blocks
          << " radical=" << rep.radical_dim << "\n";
    } else {
      out << "  Q" << j << " (" << tgt[j].residue_name(f) << "): preimage of dimension " << rep.ideal.dim() << ", quotient has "
          << rep.blocks << " block" << (rep.blocks == 1 ? "" : "s") << " and radical " << rep.radical_dim << ": "
          << (rep.prime() ? "prime" : "not prime") << "\n";
    }
  }
  return 0;
}

inline void validate(const Command& c) {
  bool known = false;
  for (const auto& s : subcommands()) known = known || s == c.subcommand;
  if (!known) throw UsageError("unknown subcommand '" + c.subcommand + "'");
  if (c.preset.empty() == c.file.empty()) throw UsageError("give exactly one of --preset and --file");
  if (!c.preset.empty() && c.base.empty()) throw UsageError("--preset needs --base");
  if (!c.file.empty() && !c.base.empty()) throw UsageError("--base applies to presets; a file names its own base");
  if (c.degree < 1) throw UsageError("-D must be positive");
  if (c.bound < 1) throw UsageError("-N must be positive");
  if (c.threads < 1) throw UsageError("--threads must be positive");
}

}  // namespace detail

// 0 on success, 1 on a domain error, 2 on a usage error.
inline int run(const Command& c, std::ostream& out, std::ostream& err) {
  try {
    detail::validate(c);
    const std::string& s = c.subcommand;
    if (s == "center") return detail::cmd_center(c, out);
    if (s == "radical") return detail::cmd_radical(c, out);
    if (s == "wedderburn") return detail::cmd_wedderburn(c, out);
    if (s == "points") return detail::cmd_points(c, out);
    if (s == "spec") return detail::cmd_spec(c, out);
    if (s == "zeta") return detail::cmd_zeta(c, out);
    if (s == "dirichlet") return detail::cmd_dirichlet(c, out);
    if (s == "tensor") return detail::cmd_tensor(c, out);
    if (s == "check-morphism") return detail::cmd_check_morphism(c, out);
    if (s == "neighborhood") return detail::cmd_neighborhood(c, out);
    return 2;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 1;
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace hasse::cli
