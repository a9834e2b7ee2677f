#pragma once

/// Ring-building devices: the idealization R(+)M and the localization
/// S^{-1}R / S^{-1}M at a multiplicatively closed set, together with their
/// structural identities run as construction-time checks.

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jmodlab/module.hpp"

namespace jmodlab {

/// R(+)M: elements are pairs (r, m) encoded as r * |M| + m, with
/// (r1,m1)(r2,m2) = (r1 r2, r1 m2 + r2 m1). Construction verifies the ring
/// axioms plus J(R(+)M) = J(R)(+)M and sqrt(I(+)N) = sqrt(I)(+)M for every
/// ideal of pair form.
inline RingPtr idealization(const RingPtr& R, const ModulePtr& M);

inline elem idealization_encode(const FiniteRing& A, elem r, elem m) {
  const auto& prov = A.provenance();
  return static_cast<elem>(std::size_t(r) * prov.base_module->order() + m);
}

inline std::pair<elem, elem> idealization_decode(const FiniteRing& A, elem a) {
  const std::size_t nm = A.provenance().base_module->order();
  return {static_cast<elem>(a / nm), static_cast<elem>(a % nm)};
}

/// I(+)N as an ideal of R(+)M. Requires IM contained in N (the exact
/// condition for I(+)N to be an ideal).
inline Ideal idealization_ideal(const RingPtr& A, const Ideal& I, const Submodule& N) {
  const auto& prov = A->provenance();
  if (prov.tag != RingTag::idealization)
    throw std::invalid_argument("idealization_ideal: not an idealization ring");
  if (I.ring() != prov.base_ring || N.module() != prov.base_module)
    throw std::invalid_argument("idealization_ideal: mismatched components");
  if (!N.members().contains(ideal_action(I, prov.base_module).members()))
    throw std::invalid_argument("idealization_ideal: IM is not contained in N");
  IndexSet out(A->order());
  I.members().for_each([&](std::size_t r) {
    N.members().for_each([&](std::size_t m) {
      out.set(idealization_encode(*A, static_cast<elem>(r), static_cast<elem>(m)));
    });
  });
  return Ideal(A, std::move(out));
}

/// Splits an ideal of R(+)M into (I, N) when it is exactly of pair form.
inline std::optional<std::pair<Ideal, Submodule>> split_idealization_ideal(
    const RingPtr& A, const Ideal& X) {
  const auto& prov = A->provenance();
  const RingPtr& R = prov.base_ring;
  const ModulePtr& M = prov.base_module;
  IndexSet ri(R->order()), ni(M->order());
  X.members().for_each([&](std::size_t a) {
    auto [r, m] = idealization_decode(*A, static_cast<elem>(a));
    ri.set(r);
    if (r == 0) ni.set(m);
  });
  if (ri.count() * ni.count() != X.size()) return std::nullopt;
  bool product_form = true;
  ri.for_each([&](std::size_t r) {
    ni.for_each([&](std::size_t m) {
      if (!X.contains(idealization_encode(*A, static_cast<elem>(r), static_cast<elem>(m))))
        product_form = false;
    });
  });
  if (!product_form) return std::nullopt;
  return std::make_pair(Ideal(R, std::move(ri)), Submodule(M, std::move(ni)));
}

inline RingPtr idealization(const RingPtr& R, const ModulePtr& M) {
  if (M->ring() != R) throw std::invalid_argument("idealization: module is not over the given ring");
  const std::size_t nr = R->order(), nm = M->order(), n = nr * nm;
  if (n > kMaxOrder) throw std::invalid_argument("idealization: order exceeds cap");
  auto enc = [nm](std::size_t r, std::size_t m) { return r * nm + m; };
  std::vector<elem> add(n * n), mul(n * n), neg(n);
  for (std::size_t a = 0; a < n; ++a) {
    const elem r1 = static_cast<elem>(a / nm), m1 = static_cast<elem>(a % nm);
    neg[a] = static_cast<elem>(enc(R->neg(r1), M->neg(m1)));
    for (std::size_t b = 0; b < n; ++b) {
      const elem r2 = static_cast<elem>(b / nm), m2 = static_cast<elem>(b % nm);
      add[a * n + b] = static_cast<elem>(enc(R->add(r1, r2), M->add(m1, m2)));
      mul[a * n + b] = static_cast<elem>(
          enc(R->mul(r1, r2), M->add(M->act(r1, m2), M->act(r2, m1))));
    }
  }
  RingProvenance prov;
  prov.tag = RingTag::idealization;
  prov.spec = "idealization(" + R->provenance().spec + "," + M->provenance().spec + ")";
  prov.base_ring = R;
  prov.base_module = M;
  RingPtr A = FiniteRing::from_tables(n, static_cast<elem>(enc(R->one(), 0)),
                                      std::move(add), std::move(mul), std::move(neg),
                                      std::move(prov));

  // J(R(+)M) = J(R)(+)M
  Ideal jA = jacobson_radical(A);
  Ideal expected = idealization_ideal(A, jacobson_radical(R), full_submodule(M));
  if (jA.members() != expected.members())
    throw std::logic_error("idealization: J(R(+)M) != J(R)(+)M");

  // sqrt(I(+)N) = sqrt(I)(+)M for every ideal of pair form
  for (const auto& X : enumerate_ideals(A)) {
    auto parts = split_idealization_ideal(A, X);
    if (!parts) continue;
    Ideal rad = radical_of_ideal(A, X);
    Ideal want = idealization_ideal(A, radical_of_ideal(R, parts->first), full_submodule(M));
    if (rad.members() != want.members())
      throw std::logic_error("idealization: sqrt(I(+)N) != sqrt(I)(+)M");
  }
  return A;
}

/// Smallest multiplicatively closed subset containing seed and 1.
inline IndexSet multiplicative_closure(const RingPtr& R, const IndexSet& seed) {
  IndexSet s(R->order());
  s.set(R->one());
  std::vector<elem> list = {R->one()};
  seed.for_each([&](std::size_t x) {
    if (!s.test(x)) {
      s.set(x);
      list.push_back(static_cast<elem>(x));
    }
  });
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      elem p = R->mul(list[i], list[j]);
      if (!s.test(p)) {
        s.set(p);
        list.push_back(p);
      }
    }
  return s;
}

namespace detail {

// K = {d : ud = 0 for some u in S}, the torsion wiped out by localizing.
inline IndexSet s_torsion(const FiniteRing& R, const IndexSet& S) {
  IndexSet K(R.order());
  for (std::size_t d = 0; d < R.order(); ++d) {
    bool killed = false;
    S.for_each([&](std::size_t u) {
      if (!killed && R.mul(static_cast<elem>(u), static_cast<elem>(d)) == 0) killed = true;
    });
    if (killed) K.set(d);
  }
  return K;
}

struct PairClasses {
  std::vector<std::pair<elem, elem>> reps;  // class -> lex-min (x, s)
  std::vector<int> class_of;                // x * stride + s -> class (-1 if s not in S)
  std::size_t stride = 0;
};

// Partitions {(x, s) : s in S} by (x1,s1) ~ (x2,s2) iff x1 s2 - x2 s1 lies in
// the S-torsion. diff computes that cross difference for the carrier.
template <class Diff>
PairClasses partition_pairs(std::size_t carrier, const IndexSet& S, const IndexSet& K, Diff diff) {
  PairClasses pc;
  pc.stride = S.universe();
  pc.class_of.assign(carrier * pc.stride, -1);
  auto svec = S.members();
  for (std::size_t x = 0; x < carrier; ++x)
    for (elem s : svec) {
      if (pc.class_of[x * pc.stride + s] >= 0) continue;
      // match against previously assigned representatives
      int found = -1;
      for (std::size_t c = 0; c < pc.reps.size() && found < 0; ++c) {
        auto [x2, s2] = pc.reps[c];
        if (K.test(diff(static_cast<elem>(x), s, x2, s2))) found = static_cast<int>(c);
      }
      if (found < 0) {
        found = static_cast<int>(pc.reps.size());
        pc.reps.emplace_back(static_cast<elem>(x), s);
      }
      pc.class_of[x * pc.stride + s] = found;
    }
  return pc;
}

}  // namespace detail

struct LocalizedRing {
  RingPtr ring;   // S^{-1}R
  RingPtr base;   // R
  IndexSet s;     // the multiplicative set
  std::vector<elem> canonical;  // r -> class of (r, 1)
  std::vector<std::pair<elem, elem>> reps;
  bool jacobson_matches = false;  // S^{-1}(J(R)) == J(S^{-1}R)

  elem class_of(elem x, elem den) const {
    return static_cast<elem>(class_table[std::size_t(x) * stride + den]);
  }

  /// S^{-1}I: classes of (i, s) with i in I, s in S.
  Ideal push_ideal(const Ideal& I) const {
    IndexSet out(ring->order());
    I.members().for_each([&](std::size_t i) {
      s.for_each([&](std::size_t den) {
        out.set(class_of(static_cast<elem>(i), static_cast<elem>(den)));
      });
    });
    return Ideal(ring, std::move(out));
  }

  std::vector<int> class_table;
  std::size_t stride = 0;
};

/// Localization at S. Requires 1 in S, 0 not in S, and S multiplicatively
/// closed. Element classes are identified by their lexicographically least
/// (x, s) pair; the canonical map and unit images are verified.
inline LocalizedRing localize_ring(const RingPtr& R, const IndexSet& S) {
  if (!S.test(R->one())) throw std::invalid_argument("localization: 1 must lie in S");
  if (S.test(0)) throw std::invalid_argument("localization: 0 in S collapses the ring");
  bool closed = true;
  S.for_each([&](std::size_t a) {
    S.for_each([&](std::size_t b) {
      if (!S.test(R->mul(static_cast<elem>(a), static_cast<elem>(b)))) closed = false;
    });
  });
  if (!closed) throw std::invalid_argument("localization: S is not multiplicatively closed");

  IndexSet K = detail::s_torsion(*R, S);
  auto pc = detail::partition_pairs(R->order(), S, K, [&](elem x1, elem s1, elem x2, elem s2) {
    return R->sub(R->mul(x1, s2), R->mul(x2, s1));
  });
  const std::size_t q = pc.reps.size();
  auto cls = [&](elem x, elem den) { return pc.class_of[std::size_t(x) * pc.stride + den]; };

  std::vector<elem> add(q * q), mul(q * q), neg(q);
  for (std::size_t a = 0; a < q; ++a) {
    auto [x1, s1] = pc.reps[a];
    neg[a] = static_cast<elem>(cls(R->neg(x1), s1));
    for (std::size_t b = 0; b < q; ++b) {
      auto [x2, s2] = pc.reps[b];
      add[a * q + b] = static_cast<elem>(
          cls(R->add(R->mul(x1, s2), R->mul(x2, s1)), R->mul(s1, s2)));
      mul[a * q + b] = static_cast<elem>(cls(R->mul(x1, x2), R->mul(s1, s2)));
    }
  }
  RingProvenance prov;
  prov.tag = RingTag::localization;
  auto svec = S.members();
  prov.spec = "localization(" + R->provenance().spec + ",[";
  for (std::size_t i = 0; i < svec.size(); ++i) {
    if (i) prov.spec += ",";
    prov.spec += std::to_string(svec[i]);
  }
  prov.spec += "])";
  prov.base_ring = R;

  LocalizedRing L;
  L.ring = FiniteRing::from_tables(q, static_cast<elem>(cls(R->one(), R->one())),
                                   std::move(add), std::move(mul), std::move(neg), std::move(prov));
  L.base = R;
  L.s = S;
  L.reps = std::move(pc.reps);
  L.class_table = std::move(pc.class_of);
  L.stride = pc.stride;
  L.canonical.resize(R->order());
  for (std::size_t r = 0; r < R->order(); ++r)
    L.canonical[r] = L.class_of(static_cast<elem>(r), R->one());

  // canonical map is a ring homomorphism
  for (std::size_t a = 0; a < R->order(); ++a)
    for (std::size_t b = 0; b < R->order(); ++b) {
      if (L.canonical[R->add(static_cast<elem>(a), static_cast<elem>(b))] !=
          L.ring->add(L.canonical[a], L.canonical[b]))
        throw std::logic_error("localization: canonical map does not preserve addition");
      if (L.canonical[R->mul(static_cast<elem>(a), static_cast<elem>(b))] !=
          L.ring->mul(L.canonical[a], L.canonical[b]))
        throw std::logic_error("localization: canonical map does not preserve multiplication");
    }
  // S maps to units
  S.for_each([&](std::size_t u) {
    if (!L.ring->is_unit(L.canonical[u]))
      throw std::logic_error("localization: image of S contains a non-unit");
  });

  L.jacobson_matches =
      L.push_ideal(jacobson_radical(R)).members() == jacobson_radical(L.ring).members();
  return L;
}

struct LocalizedModule {
  ModulePtr module;  // S^{-1}M over S^{-1}R
  ModulePtr base;    // M
  std::vector<elem> canonical;  // m -> class of (m, 1)
  std::vector<std::pair<elem, elem>> reps;

  elem class_of(elem m, elem den) const {
    return static_cast<elem>(class_table[std::size_t(m) * stride + den]);
  }

  Submodule push_submodule(const Submodule& N, const IndexSet& S) const {
    IndexSet out(module->order());
    N.members().for_each([&](std::size_t n) {
      S.for_each([&](std::size_t den) {
        out.set(class_of(static_cast<elem>(n), static_cast<elem>(den)));
      });
    });
    return Submodule(module, std::move(out));
  }

  std::vector<int> class_table;
  std::size_t stride = 0;
};

/// S^{-1}M as a module over S^{-1}R.
inline LocalizedModule localize_module(const LocalizedRing& L, const ModulePtr& M) {
  if (M->ring() != L.base)
    throw std::invalid_argument("localize_module: module is not over the localized base ring");
  const auto& R = *L.base;
  // module torsion killed by S
  IndexSet K(M->order());
  for (std::size_t d = 0; d < M->order(); ++d) {
    bool killed = false;
    L.s.for_each([&](std::size_t u) {
      if (!killed && M->act(static_cast<elem>(u), static_cast<elem>(d)) == 0) killed = true;
    });
    if (killed) K.set(d);
  }
  auto pc = detail::partition_pairs(M->order(), L.s, K, [&](elem m1, elem s1, elem m2, elem s2) {
    return M->sub(M->act(s2, m1), M->act(s1, m2));
  });
  const std::size_t q = pc.reps.size();
  auto cls = [&](elem m, elem den) { return pc.class_of[std::size_t(m) * pc.stride + den]; };

  const std::size_t nr = L.ring->order();
  std::vector<elem> add(q * q), neg(q), act(nr * q);
  for (std::size_t a = 0; a < q; ++a) {
    auto [m1, s1] = pc.reps[a];
    neg[a] = static_cast<elem>(cls(M->neg(m1), s1));
    for (std::size_t b = 0; b < q; ++b) {
      auto [m2, s2] = pc.reps[b];
      add[a * q + b] = static_cast<elem>(
          cls(M->add(M->act(s2, m1), M->act(s1, m2)), R.mul(s1, s2)));
    }
    for (std::size_t rc = 0; rc < nr; ++rc) {
      auto [x, s] = L.reps[rc];
      act[rc * q + a] = static_cast<elem>(cls(M->act(x, m1), R.mul(s, s1)));
    }
  }
  ModuleProvenance prov;
  prov.tag = ModuleTag::tables;
  prov.spec = "localized(" + M->provenance().spec + ")";
  LocalizedModule LM;
  LM.module = FiniteModule::from_tables(L.ring, q, std::move(add), std::move(neg),
                                        std::move(act), std::move(prov));
  LM.base = M;
  LM.reps = std::move(pc.reps);
  LM.class_table = std::move(pc.class_of);
  LM.stride = pc.stride;
  LM.canonical.resize(M->order());
  for (std::size_t m = 0; m < M->order(); ++m)
    LM.canonical[m] = LM.class_of(static_cast<elem>(m), R.one());
  return LM;
}

}  // namespace jmodlab
