#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "hasse/description.hpp"
#include "hasse/error.hpp"
#include "hasse/presets.hpp"
#include "hasse/procesi.hpp"

// Text format for algebra morphisms over a finite field:
//   source
//   <algebra description>
//   target
//   <algebra description>
//   map <source label> = <expression in target labels>
// The unit maps to 1 unless a map line for it is given.
namespace hasse {

struct MorphismDescription {
  Description source, target;
  struct Image {
    std::size_t label = 0;
    std::vector<Description::Term> terms;
    std::size_t line = 0;
  };
  std::vector<Image> images;
};

inline MorphismDescription parse_morphism(std::string_view text) {
  enum class Section { none, source, target };
  std::vector<std::string_view> lines;
  for (std::size_t start = 0;;) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    lines.push_back(line);
    if (end == text.size()) break;
    start = end + 1;
  }
  std::string src, tgt;
  std::vector<std::size_t> map_lines;
  Section sec = Section::none;
  bool saw_source = false, saw_target = false;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const std::string_view line = lines[i];
    const auto first = line.find_first_not_of(" \t");
    const auto last = line.find_last_not_of(" \t");
    const std::string_view body = first == std::string_view::npos ? std::string_view{} : line.substr(first, last - first + 1);
    bool keep_src = false, keep_tgt = false;
    if (body.empty() || body[0] == '#') {
    } else if (body == "source") {
      if (saw_source) throw ParseError(i + 1, first + 1, "duplicate 'source' section");
      saw_source = true;
      sec = Section::source;
    } else if (body == "target") {
      if (!saw_source) throw ParseError(i + 1, first + 1, "'target' before 'source'");
      if (saw_target) throw ParseError(i + 1, first + 1, "duplicate 'target' section");
      saw_target = true;
      sec = Section::target;
    } else if (body.substr(0, 4) == "map " || body == "map") {
      if (sec != Section::target) throw ParseError(i + 1, first + 1, "'map' lines belong after the target description");
      map_lines.push_back(i);
    } else if (sec == Section::none) {
      throw ParseError(i + 1, first + 1, "expected 'source'");
    } else {
      keep_src = sec == Section::source;
      keep_tgt = sec == Section::target;
    }
    src += keep_src ? std::string(line) : "#";
    tgt += keep_tgt ? std::string(line) : "#";
    src += '\n';
    tgt += '\n';
  }
  if (!saw_target) throw ParseError(lines.size(), 1, "missing 'target' section");

  MorphismDescription m;
  m.source = parse_description(src);
  m.target = parse_description(tgt);
  std::vector<bool> given(m.source.labels.size(), false);
  for (std::size_t i : map_lines) {
    const std::string_view line = lines[i];
    detail::LineParser lp(line, i + 1, m.source);
    lp.word();
    lp.skip();
    const std::size_t at = lp.pos();
    MorphismDescription::Image img;
    img.line = i + 1;
    img.label = lp.label();
    lp.expect('=');
    detail::LineParser rhs(line, i + 1, m.target, lp.pos());
    img.terms = rhs.sum(true);
    if (!rhs.at_end()) rhs.fail("unexpected text after expression");
    if (given[img.label]) throw ParseError(i + 1, at + 1, "duplicate image for '" + m.source.labels[img.label] + "'");
    given[img.label] = true;
    m.images.push_back(std::move(img));
  }
  for (std::size_t k = 1; k < given.size(); ++k)
    if (!given[k]) throw Error("no image given for source basis label '" + m.source.labels[k] + "'");
  return m;
}

inline MorphismDescription load_morphism(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_morphism(ss.str());
}

// Verified morphism; source and target must share one finite-field base.
inline AlgMorphism<Field> to_morphism(const MorphismDescription& m) {
  if (!(m.source.base == m.target.base)) throw Error("source and target have different bases");
  if (m.source.base.kind() != BaseRing::Kind::finite_field) throw Error("morphisms are checked over a finite field base");
  const Field& f = m.source.base.field();
  auto a = to_algebra(m.source, f);
  auto b = to_algebra(m.target, f);
  std::vector<Vec<Field>> images(a.dim(), b.zero());
  images[0] = b.one();
  for (const auto& img : m.images) {
    auto v = b.zero();
    for (const auto& t : img.terms) v[t.label] = f.add(v[t.label], coerce(f, t.coeff));
    images[img.label] = std::move(v);
  }
  return make_morphism(std::move(a), std::move(b), std::move(images));
}

namespace detail {

inline std::string section(const char* name, const std::string& description) { return std::string(name) + "\n" + description; }

}  // namespace detail

inline std::vector<std::string> morphism_preset_names() { return {"diag", "unit-s3", "unit-mat2", "aug-s3", "sign-s3"}; }

// diag: F x F -> M_2(F) on the diagonal; unit-*: F -> A; aug-s3 and sign-s3:
// the two one-dimensional representations F[S3] -> F.
inline std::string morphism_preset_text(std::string_view name, const BaseRing& base) {
  const std::string field = "base " + base.name() + "\nbasis 1\n";
  const std::string split = "base " + base.name() + "\nbasis 1 e\nmul e e = e\n";
  if (name == "diag") return detail::section("source", split) + detail::section("target", preset_text("mat2", base)) + "map e = e22\n";
  if (name == "unit-s3") return detail::section("source", field) + detail::section("target", preset_text("s3", base));
  if (name == "unit-mat2") return detail::section("source", field) + detail::section("target", preset_text("mat2", base));
  if (name == "aug-s3" || name == "sign-s3") {
    const std::string odd = name == "aug-s3" ? "1" : "-1";
    return detail::section("source", preset_text("s3", base)) + detail::section("target", field) + "map b = 1\nmap b2 = 1\nmap a = " + odd +
           "\nmap ab = " + odd + "\nmap ab2 = " + odd + "\n";
  }
  throw Error("unknown morphism preset '" + std::string(name) + "'");
}

}  // namespace hasse
