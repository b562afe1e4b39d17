#pragma once

// Brute-force references used only by the tests.

#include <map>
#include <set>
#include <vector>

#include "hasse/algebra.hpp"

namespace oracle {

using hasse::Field;
using hasse::Subspace;
using V = hasse::Vec<Field>;

inline std::vector<V> all_vectors(const Field& f, std::size_t n) {
  std::vector<V> out{V(n, 0)};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<V> next;
    for (const auto& v : out)
      for (std::uint64_t c = 0; c < f.size(); ++c) {
        V w = v;
        w[i] = static_cast<Field::value_type>(c);
        next.push_back(std::move(w));
      }
    out = std::move(next);
  }
  return out;
}

// Every subspace of F^n, by closing {0} under adding one vector at a time.
inline std::vector<Subspace<Field>> all_subspaces(const Field& f, std::size_t n) {
  const auto vectors = all_vectors(f, n);
  std::map<std::vector<V>, Subspace<Field>> seen;
  std::vector<Subspace<Field>> frontier{Subspace<Field>(f, n)};
  seen.emplace(frontier[0].basis(), frontier[0]);
  while (!frontier.empty()) {
    std::vector<Subspace<Field>> next;
    for (const auto& s : frontier)
      for (const auto& v : vectors) {
        Subspace<Field> t = s;
        if (!t.insert(v)) continue;
        if (seen.emplace(t.basis(), t).second) next.push_back(t);
      }
    frontier = std::move(next);
  }
  std::vector<Subspace<Field>> out;
  for (auto& [k, s] : seen) out.push_back(s);
  return out;
}

inline bool is_ideal(const hasse::SCAlgebra<Field>& a, const Subspace<Field>& s) {
  for (const auto& x : s.basis())
    for (std::size_t i = 0; i < a.dim(); ++i)
      if (!s.contains(a.mul(a.basis(i), x)) || !s.contains(a.mul(x, a.basis(i)))) return false;
  return true;
}

inline bool is_nilpotent(const hasse::SCAlgebra<Field>& a, const Subspace<Field>& s) {
  std::vector<V> power = s.basis();
  for (std::size_t k = 0; k <= a.dim() + 1; ++k) {
    if (power.empty()) return true;
    std::vector<V> prods;
    for (const auto& x : power)
      for (const auto& y : s.basis()) prods.push_back(a.mul(x, y));
    power = Subspace<Field>::span(a.ring(), a.dim(), prods).basis();
  }
  return false;
}

// The largest nilpotent two-sided ideal found by enumerating every subspace.
inline Subspace<Field> radical(const hasse::SCAlgebra<Field>& a) {
  Subspace<Field> best(a.ring(), a.dim());
  for (const auto& s : all_subspaces(a.ring(), a.dim()))
    if (s.dim() > best.dim() && is_ideal(a, s) && is_nilpotent(a, s)) best = s;
  return best;
}

// Maximal two-sided ideals by enumeration.
inline std::vector<Subspace<Field>> maximal_ideals(const hasse::SCAlgebra<Field>& a) {
  std::vector<Subspace<Field>> ideals;
  for (const auto& s : all_subspaces(a.ring(), a.dim()))
    if (s.dim() < a.dim() && is_ideal(a, s)) ideals.push_back(s);
  std::vector<Subspace<Field>> out;
  for (const auto& i : ideals) {
    bool maximal = true;
    for (const auto& j : ideals)
      if (j.dim() > i.dim() && j.contains(i)) maximal = false;
    if (maximal) out.push_back(i);
  }
  return out;
}

inline std::vector<std::vector<std::size_t>> klein_four_table() {
  std::vector<std::vector<std::size_t>> t(4, std::vector<std::size_t>(4));
  for (std::size_t a = 0; a < 4; ++a)
    for (std::size_t b = 0; b < 4; ++b) t[a][b] = a ^ b;
  return t;
}

// All groups of order at most 4.
inline std::vector<std::pair<std::string, std::vector<std::vector<std::size_t>>>> small_groups() {
  return {{"C1", hasse::cyclic_group_table(1)},
          {"C2", hasse::cyclic_group_table(2)},
          {"C3", hasse::cyclic_group_table(3)},
          {"C4", hasse::cyclic_group_table(4)},
          {"V4", klein_four_table()}};
}

}  // namespace oracle
