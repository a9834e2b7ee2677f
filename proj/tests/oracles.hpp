#pragma once

// Naive quantifier-expansion oracles, written independently of the library
// implementation paths they check. Everything here works on std::set<int>
// with fixpoint sweeps instead of bitsets and worklists, and recomputes
// J(R), colon sets and closures from the raw definitions on every call.

#include <set>
#include <utility>
#include <vector>

#include "jmodlab/module.hpp"

namespace oracle {

using jmodlab::elem;
using jmodlab::FiniteModule;
using jmodlab::FiniteRing;

using Set = std::set<int>;

inline bool oracle_is_unit(const FiniteRing& R, int a) {
  for (std::size_t b = 0; b < R.order(); ++b)
    if (R.mul(static_cast<elem>(a), static_cast<elem>(b)) == R.one()) return true;
  return false;
}

inline Set jacobson_by_units(const FiniteRing& R) {
  Set out;
  for (std::size_t r = 0; r < R.order(); ++r) {
    bool in = true;
    for (std::size_t s = 0; s < R.order() && in; ++s) {
      elem v = R.add(R.one(), R.neg(R.mul(static_cast<elem>(r), static_cast<elem>(s))));
      if (!oracle_is_unit(R, v)) in = false;
    }
    if (in) out.insert(static_cast<int>(r));
  }
  return out;
}

inline Set add_closure(const FiniteModule& M, Set s) {
  s.insert(0);
  bool changed = true;
  while (changed) {
    changed = false;
    Set next = s;
    for (int a : s)
      for (int b : s)
        if (next.insert(M.add(static_cast<elem>(a), static_cast<elem>(b))).second) changed = true;
    s.swap(next);
  }
  return s;
}

inline Set span(const FiniteModule& M, const Set& gens) {
  Set seed = {0};
  for (int g : gens)
    for (std::size_t r = 0; r < M.ring()->order(); ++r)
      seed.insert(M.act(static_cast<elem>(r), static_cast<elem>(g)));
  return add_closure(M, seed);
}

inline Set jm_set(const FiniteModule& M) {
  Set jr = jacobson_by_units(*M.ring());
  Set seed = {0};
  for (int j : jr)
    for (std::size_t m = 0; m < M.order(); ++m)
      seed.insert(M.act(static_cast<elem>(j), static_cast<elem>(m)));
  return add_closure(M, seed);
}

inline Set colon_ring(const FiniteModule& M, const Set& n) {
  Set out;
  for (std::size_t r = 0; r < M.ring()->order(); ++r) {
    bool ok = true;
    for (std::size_t m = 0; m < M.order() && ok; ++m)
      if (!n.count(M.act(static_cast<elem>(r), static_cast<elem>(m)))) ok = false;
    if (ok) out.insert(static_cast<int>(r));
  }
  return out;
}

// (J(R)M : M), the exclusion set of the J-style predicates.
inline Set t_set(const FiniteModule& M) { return colon_ring(M, jm_set(M)); }

inline Set radical_set(const FiniteRing& R, const Set& ideal) {
  Set out;
  for (std::size_t a = 0; a < R.order(); ++a) {
    elem p = R.one();
    for (std::size_t k = 1; k <= R.order(); ++k) {
      p = R.mul(p, static_cast<elem>(a));
      if (ideal.count(p)) {
        out.insert(static_cast<int>(a));
        break;
      }
    }
  }
  return out;
}

inline Set ann_module(const FiniteModule& M) {
  Set zero = {0};
  return colon_ring(M, zero);
}

// Per-definition predicate oracles. Each returns holds plus the first
// violating pair in (r, m) scan order.

struct OracleVerdict {
  bool holds = true;
  std::pair<int, int> witness = {-1, -1};
};

template <class Hyp>
OracleVerdict scan(const FiniteModule& M, const Set& n, Hyp hyp) {
  for (std::size_t r = 0; r < M.ring()->order(); ++r)
    for (std::size_t m = 0; m < M.order(); ++m)
      if (hyp(static_cast<int>(r), static_cast<int>(m)) && !n.count(static_cast<int>(m)))
        return {false, {static_cast<int>(r), static_cast<int>(m)}};
  return {};
}

inline OracleVerdict weakly_j_submodule(const FiniteModule& M, const Set& n) {
  Set t = t_set(M);
  return scan(M, n, [&](int r, int m) {
    int rm = M.act(static_cast<elem>(r), static_cast<elem>(m));
    return rm != 0 && n.count(rm) && !t.count(r);
  });
}

inline OracleVerdict j_submodule(const FiniteModule& M, const Set& n) {
  Set t = t_set(M);
  return scan(M, n, [&](int r, int m) {
    return n.count(M.act(static_cast<elem>(r), static_cast<elem>(m))) > 0 && !t.count(r);
  });
}

inline OracleVerdict prime_submodule(const FiniteModule& M, const Set& n, bool weakly) {
  Set excl = colon_ring(M, n);
  return scan(M, n, [&](int r, int m) {
    int rm = M.act(static_cast<elem>(r), static_cast<elem>(m));
    if (weakly && rm == 0) return false;
    return n.count(rm) > 0 && !excl.count(r);
  });
}

inline OracleVerdict primary_submodule(const FiniteModule& M, const Set& n, bool weakly) {
  Set excl = radical_set(*M.ring(), colon_ring(M, n));
  return scan(M, n, [&](int r, int m) {
    int rm = M.act(static_cast<elem>(r), static_cast<elem>(m));
    if (weakly && rm == 0) return false;
    return n.count(rm) > 0 && !excl.count(r);
  });
}

inline OracleVerdict n_submodule(const FiniteModule& M, const Set& n) {
  Set excl = radical_set(*M.ring(), ann_module(M));
  return scan(M, n, [&](int r, int m) {
    return n.count(M.act(static_cast<elem>(r), static_cast<elem>(m))) > 0 && !excl.count(r);
  });
}

inline OracleVerdict j_ideal(const FiniteRing& R, const Set& ideal, bool weakly) {
  Set jr = jacobson_by_units(R);
  for (std::size_t a = 0; a < R.order(); ++a)
    for (std::size_t b = 0; b < R.order(); ++b) {
      int ab = R.mul(static_cast<elem>(a), static_cast<elem>(b));
      if (weakly && ab == 0) continue;
      if (ideal.count(ab) && !jr.count(static_cast<int>(a)) && !ideal.count(static_cast<int>(b)))
        return {false, {static_cast<int>(a), static_cast<int>(b)}};
    }
  return {};
}

inline bool j_presimplifiable(const FiniteModule& M) {
  Set t = t_set(M);
  for (std::size_t r = 0; r < M.ring()->order(); ++r) {
    bool zd = false;
    for (std::size_t m = 1; m < M.order() && !zd; ++m)
      if (M.act(static_cast<elem>(r), static_cast<elem>(m)) == 0) zd = true;
    if (zd && !t.count(static_cast<int>(r))) return false;
  }
  return true;
}

// Subset-scan structure enumerations, usable up to order 16.

inline bool subset_is_ideal(const FiniteRing& R, std::uint32_t mask) {
  if (!(mask & 1u)) return false;
  for (std::size_t a = 0; a < R.order(); ++a) {
    if (!(mask >> a & 1u)) continue;
    for (std::size_t b = 0; b < R.order(); ++b) {
      if ((mask >> b & 1u) && !(mask >> R.add(static_cast<elem>(a), static_cast<elem>(b)) & 1u))
        return false;
      if (!(mask >> R.mul(static_cast<elem>(b), static_cast<elem>(a)) & 1u)) return false;
    }
  }
  return true;
}

inline std::vector<std::uint32_t> all_ideal_masks(const FiniteRing& R) {
  std::vector<std::uint32_t> out;
  const std::uint32_t top = 1u << R.order();
  for (std::uint32_t mask = 1; mask < top; mask += 2)
    if (subset_is_ideal(R, mask)) out.push_back(mask);
  return out;
}

inline bool subset_is_submodule(const FiniteModule& M, std::uint32_t mask) {
  if (!(mask & 1u)) return false;
  for (std::size_t a = 0; a < M.order(); ++a) {
    if (!(mask >> a & 1u)) continue;
    for (std::size_t b = 0; b < M.order(); ++b)
      if ((mask >> b & 1u) && !(mask >> M.add(static_cast<elem>(a), static_cast<elem>(b)) & 1u))
        return false;
    for (std::size_t r = 0; r < M.ring()->order(); ++r)
      if (!(mask >> M.act(static_cast<elem>(r), static_cast<elem>(a)) & 1u)) return false;
  }
  return true;
}

inline std::vector<std::uint32_t> all_submodule_masks(const FiniteModule& M) {
  std::vector<std::uint32_t> out;
  const std::uint32_t top = 1u << M.order();
  for (std::uint32_t mask = 1; mask < top; mask += 2)
    if (subset_is_submodule(M, mask)) out.push_back(mask);
  return out;
}

inline Set set_from_indexset(const jmodlab::IndexSet& s) {
  Set out;
  s.for_each([&](std::size_t i) { out.insert(static_cast<int>(i)); });
  return out;
}

inline std::uint32_t mask_from_indexset(const jmodlab::IndexSet& s) {
  std::uint32_t m = 0;
  s.for_each([&](std::size_t i) { m |= 1u << i; });
  return m;
}

}  // namespace oracle
