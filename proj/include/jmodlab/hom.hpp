#pragma once

/// Module homomorphisms between finite modules over a common ring.
/// Enumeration works by assigning images to a generating set and closing the
/// graph subgroup in M1 x M2; an assignment extends to a homomorphism exactly
/// when the closure meets 0 x M2 trivially. Every enumerated map is then
/// re-validated against full additivity and R-linearity.

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "jmodlab/module.hpp"

namespace jmodlab {

struct ModuleHom {
  ModulePtr source, target;
  std::vector<elem> map;  // total element map, source index -> target index

  elem operator()(elem m) const { return map[m]; }

  bool is_injective() const {
    std::size_t ker = 0;
    for (std::size_t m = 0; m < map.size(); ++m)
      if (map[m] == 0) ++ker;
    return ker == 1;
  }

  bool is_surjective() const {
    IndexSet img(target->order());
    for (elem v : map) img.set(v);
    return img.count() == target->order();
  }
};

inline bool is_linear_map(const ModulePtr& M1, const ModulePtr& M2, const std::vector<elem>& map) {
  const auto& R = *M1->ring();
  for (std::size_t a = 0; a < M1->order(); ++a) {
    for (std::size_t b = 0; b < M1->order(); ++b)
      if (map[M1->add(static_cast<elem>(a), static_cast<elem>(b))] !=
          M2->add(map[a], map[b]))
        return false;
    for (std::size_t r = 0; r < R.order(); ++r)
      if (map[M1->act(static_cast<elem>(r), static_cast<elem>(a))] !=
          M2->act(static_cast<elem>(r), map[a]))
        return false;
  }
  return true;
}

/// Greedy generating set: repeatedly adjoin the element whose cyclic span
/// adds the most (smallest index on ties).
inline std::vector<elem> minimal_generators(const ModulePtr& M) {
  std::vector<elem> gens;
  Submodule span = zero_submodule(M);
  while (span.size() < M->order()) {
    std::size_t best = 0, best_gain = 0;
    for (std::size_t g = 0; g < M->order(); ++g) {
      if (span.contains(static_cast<elem>(g))) continue;
      IndexSet s = span.members();
      for (std::size_t r = 0; r < M->ring()->order(); ++r)
        s.set(M->act(static_cast<elem>(r), static_cast<elem>(g)));
      std::size_t gain = module_additive_closure(*M, std::move(s)).count();
      if (gain > best_gain) {
        best_gain = gain;
        best = g;
      }
    }
    gens.push_back(static_cast<elem>(best));
    IndexSet s = span.members();
    for (std::size_t r = 0; r < M->ring()->order(); ++r)
      s.set(M->act(static_cast<elem>(r), static_cast<elem>(best)));
    span = Submodule(M, module_additive_closure(*M, std::move(s)));
  }
  return gens;
}

namespace detail {

// Closes the graph subgroup of M1 x M2 generated by the given pairs.
// Returns false as soon as a pair (0, y) with y != 0 appears.
inline bool close_graph(const FiniteModule& M1, const FiniteModule& M2,
                        std::vector<std::pair<elem, elem>>& list, IndexSet& set) {
  const auto& R = *M1.ring();
  const std::size_t n2 = M2.order();
  auto idx = [n2](elem a, elem b) { return std::size_t(a) * n2 + b; };
  for (std::size_t i = 0; i < list.size(); ++i) {
    // scalar multiples
    for (std::size_t r = 0; r < R.order(); ++r) {
      elem x = M1.act(static_cast<elem>(r), list[i].first);
      elem y = M2.act(static_cast<elem>(r), list[i].second);
      if (!set.test(idx(x, y))) {
        if (x == 0 && y != 0) return false;
        set.set(idx(x, y));
        list.emplace_back(x, y);
      }
    }
    // pairwise sums
    for (std::size_t j = 0; j <= i; ++j) {
      elem x = M1.add(list[i].first, list[j].first);
      elem y = M2.add(list[i].second, list[j].second);
      if (!set.test(idx(x, y))) {
        if (x == 0 && y != 0) return false;
        set.set(idx(x, y));
        list.emplace_back(x, y);
      }
    }
  }
  return true;
}

inline void enumerate_homs_rec(const ModulePtr& M1, const ModulePtr& M2,
                               const std::vector<elem>& gens,
                               const std::vector<IndexSet>& candidates,
                               std::size_t level,
                               std::vector<std::pair<elem, elem>>& assigned,
                               std::vector<ModuleHom>& out) {
  if (level == gens.size()) {
    // Extract the total map from the closed graph.
    std::vector<std::pair<elem, elem>> list = assigned;
    IndexSet set(M1->order() * M2->order());
    set.set(0);
    list.emplace_back(0, 0);
    for (auto& p : assigned) set.set(std::size_t(p.first) * M2->order() + p.second);
    if (!close_graph(*M1, *M2, list, set)) return;
    std::vector<int> map(M1->order(), -1);
    for (auto& p : list) map[p.first] = p.second;
    std::vector<elem> total(M1->order());
    for (std::size_t m = 0; m < M1->order(); ++m) {
      if (map[m] < 0) throw std::logic_error("enumerate_homs: graph does not cover the source");
      total[m] = static_cast<elem>(map[m]);
    }
    if (!is_linear_map(M1, M2, total))
      throw std::logic_error("enumerate_homs: closed graph failed the linearity re-check");
    out.push_back(ModuleHom{M1, M2, std::move(total)});
    return;
  }
  bool found = false;
  candidates[level].for_each([&](std::size_t y) {
    // Early feasibility: the partial graph must stay collision-free.
    std::vector<std::pair<elem, elem>> list = assigned;
    list.emplace_back(gens[level], static_cast<elem>(y));
    IndexSet set(M1->order() * M2->order());
    set.set(0);
    for (auto& p : list) set.set(std::size_t(p.first) * M2->order() + p.second);
    if (close_graph(*M1, *M2, list, set)) {
      assigned.emplace_back(gens[level], static_cast<elem>(y));
      enumerate_homs_rec(M1, M2, gens, candidates, level + 1, assigned, out);
      assigned.pop_back();
      found = true;
    }
  });
  (void)found;
}

}  // namespace detail

/// All R-module homomorphisms M1 -> M2, canonically ordered by map table.
/// Returns an empty list (with ok=false) when the source needs more than
/// max_gens generators.
struct HomEnumeration {
  bool ok = true;
  std::vector<ModuleHom> homs;
};

inline HomEnumeration enumerate_homs(const ModulePtr& M1, const ModulePtr& M2,
                                     std::size_t max_gens = 3) {
  if (M1->ring() != M2->ring())
    throw std::invalid_argument("enumerate_homs: mixed ambient rings");
  HomEnumeration result;
  auto gens = minimal_generators(M1);
  if (gens.size() > max_gens) {
    result.ok = false;
    return result;
  }
  const auto& R = *M1->ring();
  // Per-generator candidate images: y qualifies iff Ann(g) kills y.
  std::vector<IndexSet> candidates;
  candidates.reserve(gens.size());
  for (elem g : gens) {
    IndexSet ys(M2->order());
    for (std::size_t y = 0; y < M2->order(); ++y) {
      bool ok = true;
      for (std::size_t r = 0; r < R.order() && ok; ++r)
        if (M1->act(static_cast<elem>(r), g) == 0 &&
            M2->act(static_cast<elem>(r), static_cast<elem>(y)) != 0)
          ok = false;
      if (ok) ys.set(y);
    }
    candidates.push_back(std::move(ys));
  }
  std::vector<std::pair<elem, elem>> assigned;
  detail::enumerate_homs_rec(M1, M2, gens, candidates, 0, assigned, result.homs);
  std::sort(result.homs.begin(), result.homs.end(),
            [](const ModuleHom& a, const ModuleHom& b) { return a.map < b.map; });
  return result;
}

inline Submodule hom_image(const ModuleHom& phi, const Submodule& N) {
  IndexSet out(phi.target->order());
  N.members().for_each([&](std::size_t m) { out.set(phi.map[m]); });
  return Submodule(phi.target, std::move(out));
}

inline Submodule hom_kernel(const ModuleHom& phi) {
  IndexSet out(phi.source->order());
  for (std::size_t m = 0; m < phi.source->order(); ++m)
    if (phi.map[m] == 0) out.set(m);
  return Submodule(phi.source, std::move(out));
}

inline Submodule hom_preimage(const ModuleHom& phi, const Submodule& K) {
  IndexSet out(phi.source->order());
  for (std::size_t m = 0; m < phi.source->order(); ++m)
    if (K.contains(phi.map[m])) out.set(m);
  return Submodule(phi.source, std::move(out));
}

}  // namespace jmodlab
