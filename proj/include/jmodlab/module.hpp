#pragma once

/// Finite modules over finite rings: validated scalar actions, the submodule
/// lattice, colon/residual/annihilator operators, structural classification
/// (faithful, multiplication, reduced; pure, small), submodule products and
/// zero-divisor sets.

#include <algorithm>
#include <memory>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "jmodlab/ring.hpp"

namespace jmodlab {

enum class ModuleTag { self, cyclic, product, quotient, submodule, tables };

struct ModuleProvenance {
  ModuleTag tag = ModuleTag::tables;
  std::string spec;  // canonical descriptor text, e.g. "cyclic(6)"
  std::vector<std::shared_ptr<const class FiniteModule>> factors;  // product
  std::shared_ptr<const class FiniteModule> parent;  // quotient / submodule
  std::vector<elem> parent_map;  // quotient: parent elem -> coset index;
                                 // submodule: local index -> parent elem
};

class FiniteModule {
public:
  // Builds a module from raw tables and validates the abelian group and all
  // four action axioms exhaustively.
  static std::shared_ptr<const FiniteModule> from_tables(
      RingPtr ring, std::size_t n, std::vector<elem> add, std::vector<elem> neg,
      std::vector<elem> act, ModuleProvenance prov);

  const RingPtr& ring() const { return ring_; }
  std::size_t order() const { return n_; }
  elem zero() const { return 0; }

  elem add(elem a, elem b) const { return add_[std::size_t(a) * n_ + b]; }
  elem neg(elem a) const { return neg_[a]; }
  elem sub(elem a, elem b) const { return add(a, neg(b)); }
  elem act(elem r, elem m) const { return act_[std::size_t(r) * n_ + m]; }

  const ModuleProvenance& provenance() const { return prov_; }

private:
  FiniteModule(RingPtr ring, std::size_t n, std::vector<elem> add,
               std::vector<elem> neg, std::vector<elem> act, ModuleProvenance prov)
      : ring_(std::move(ring)), n_(n), add_(std::move(add)), neg_(std::move(neg)),
        act_(std::move(act)), prov_(std::move(prov)) {}

  void validate() const;

  RingPtr ring_;
  std::size_t n_;
  std::vector<elem> add_, neg_;
  std::vector<elem> act_;  // |R| x n
  ModuleProvenance prov_;
};

using ModulePtr = std::shared_ptr<const FiniteModule>;

inline void FiniteModule::validate() const {
  const std::size_t nr = ring_->order();
  if (n_ < 1) throw std::invalid_argument("module: empty carrier");
  if (add_.size() != n_ * n_ || neg_.size() != n_ || act_.size() != nr * n_)
    throw std::invalid_argument("module: table size mismatch");
  for (elem v : add_) if (v >= n_) throw std::invalid_argument("module: add table out of range");
  for (elem v : neg_) if (v >= n_) throw std::invalid_argument("module: neg table out of range");
  for (elem v : act_) if (v >= n_) throw std::invalid_argument("module: action table out of range");

  for (std::size_t a = 0; a < n_; ++a) {
    const elem ea = static_cast<elem>(a);
    if (add(0, ea) != ea) throw std::invalid_argument("module: 0 is not an additive identity");
    if (add(ea, neg(ea)) != 0) throw std::invalid_argument("module: missing additive inverse");
    if (act(ring_->one(), ea) != ea) throw std::invalid_argument("module: action of 1 is not the identity");
    for (std::size_t b = 0; b < n_; ++b) {
      const elem eb = static_cast<elem>(b);
      if (add(ea, eb) != add(eb, ea)) throw std::invalid_argument("module: addition not commutative");
      for (std::size_t c = 0; c < n_; ++c)
        if (add(add(ea, eb), static_cast<elem>(c)) != add(ea, add(eb, static_cast<elem>(c))))
          throw std::invalid_argument("module: addition not associative");
    }
  }
  for (std::size_t r = 0; r < nr; ++r) {
    const elem er = static_cast<elem>(r);
    for (std::size_t m = 0; m < n_; ++m) {
      const elem em = static_cast<elem>(m);
      for (std::size_t x = 0; x < n_; ++x)
        if (act(er, add(em, static_cast<elem>(x))) != add(act(er, em), act(er, static_cast<elem>(x))))
          throw std::invalid_argument("module: r(m+m') = rm+rm' fails");
      for (std::size_t s = 0; s < nr; ++s) {
        const elem es = static_cast<elem>(s);
        if (act(ring_->add(er, es), em) != add(act(er, em), act(es, em)))
          throw std::invalid_argument("module: (r+s)m = rm+sm fails");
        if (act(ring_->mul(er, es), em) != act(er, act(es, em)))
          throw std::invalid_argument("module: (rs)m = r(sm) fails");
      }
    }
  }
}

inline ModulePtr FiniteModule::from_tables(RingPtr ring, std::size_t n,
                                           std::vector<elem> add, std::vector<elem> neg,
                                           std::vector<elem> act, ModuleProvenance prov) {
  if (n > kMaxOrder) throw std::invalid_argument("module: order exceeds cap " + std::to_string(kMaxOrder));
  auto m = std::shared_ptr<FiniteModule>(new FiniteModule(
      std::move(ring), n, std::move(add), std::move(neg), std::move(act), std::move(prov)));
  m->validate();
  return m;
}

/// R as a module over itself.
inline ModulePtr module_self(const RingPtr& R) {
  const std::size_t n = R->order();
  std::vector<elem> add(n * n), neg(n), act(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = R->neg(static_cast<elem>(a));
    for (std::size_t b = 0; b < n; ++b) {
      add[a * n + b] = R->add(static_cast<elem>(a), static_cast<elem>(b));
      act[a * n + b] = R->mul(static_cast<elem>(a), static_cast<elem>(b));
    }
  }
  ModuleProvenance prov;
  prov.tag = ModuleTag::self;
  prov.spec = "self";
  return FiniteModule::from_tables(R, n, std::move(add), std::move(neg), std::move(act), std::move(prov));
}

/// Z_d with the action r.m = (index of r) * m mod d. The attempted action is
/// validated exhaustively and rejected when ill-defined for the given ring.
inline ModulePtr module_cyclic(const RingPtr& R, std::size_t d) {
  if (d < 1) throw std::invalid_argument("cyclic: d must be at least 1");
  std::vector<elem> add(d * d), neg(d), act(R->order() * d);
  for (std::size_t a = 0; a < d; ++a) {
    neg[a] = static_cast<elem>((d - a) % d);
    for (std::size_t b = 0; b < d; ++b) add[a * d + b] = static_cast<elem>((a + b) % d);
  }
  for (std::size_t r = 0; r < R->order(); ++r)
    for (std::size_t m = 0; m < d; ++m) act[r * d + m] = static_cast<elem>((r * m) % d);
  ModuleProvenance prov;
  prov.tag = ModuleTag::cyclic;
  prov.spec = "cyclic(" + std::to_string(d) + ")";
  return FiniteModule::from_tables(R, d, std::move(add), std::move(neg), std::move(act), std::move(prov));
}

/// Direct product of modules over a common ring; mixed-radix encoding, left
/// factor most significant.
inline ModulePtr module_product(std::vector<ModulePtr> factors) {
  if (factors.size() < 2) throw std::invalid_argument("product module: need at least two factors");
  const RingPtr R = factors[0]->ring();
  for (const auto& f : factors)
    if (f->ring() != R) throw std::invalid_argument("product module: mixed ambient rings");
  std::size_t n = 1;
  for (const auto& f : factors) {
    n *= f->order();
    if (n > kMaxOrder) throw std::invalid_argument("product module: order exceeds cap");
  }
  const std::size_t k = factors.size();
  auto decode = [&](std::size_t x) {
    std::vector<elem> c(k);
    for (std::size_t i = k; i-- > 0;) {
      c[i] = static_cast<elem>(x % factors[i]->order());
      x /= factors[i]->order();
    }
    return c;
  };
  auto encode = [&](const std::vector<elem>& c) {
    std::size_t x = 0;
    for (std::size_t i = 0; i < k; ++i) x = x * factors[i]->order() + c[i];
    return x;
  };
  std::vector<elem> add(n * n), neg(n), act(R->order() * n);
  for (std::size_t a = 0; a < n; ++a) {
    auto ca = decode(a);
    std::vector<elem> cn(k);
    for (std::size_t i = 0; i < k; ++i) cn[i] = factors[i]->neg(ca[i]);
    neg[a] = static_cast<elem>(encode(cn));
    for (std::size_t b = 0; b < n; ++b) {
      auto cb = decode(b);
      std::vector<elem> cs(k);
      for (std::size_t i = 0; i < k; ++i) cs[i] = factors[i]->add(ca[i], cb[i]);
      add[a * n + b] = static_cast<elem>(encode(cs));
    }
    for (std::size_t r = 0; r < R->order(); ++r) {
      std::vector<elem> cr(k);
      for (std::size_t i = 0; i < k; ++i) cr[i] = factors[i]->act(static_cast<elem>(r), ca[i]);
      act[r * n + a] = static_cast<elem>(encode(cr));
    }
  }
  ModuleProvenance prov;
  prov.tag = ModuleTag::product;
  prov.spec = "product(";
  for (std::size_t i = 0; i < k; ++i) {
    if (i) prov.spec += ",";
    prov.spec += factors[i]->provenance().spec;
  }
  prov.spec += ")";
  prov.factors = std::move(factors);
  return FiniteModule::from_tables(R, n, std::move(add), std::move(neg), std::move(act), std::move(prov));
}

class Submodule {
public:
  Submodule() = default;
  Submodule(ModulePtr module, IndexSet members)
      : mod_(std::move(module)), members_(std::move(members)) {}

  const ModulePtr& module() const { return mod_; }
  const IndexSet& members() const { return members_; }
  std::size_t size() const { return members_.count(); }
  bool contains(elem m) const { return members_.test(m); }
  bool is_zero() const { return members_.count() == 1; }
  bool is_proper() const { return members_.count() < mod_->order(); }

  bool operator==(const Submodule& o) const { return members_ == o.members_; }
  bool operator!=(const Submodule& o) const { return !(*this == o); }

private:
  ModulePtr mod_;
  IndexSet members_;
};

inline IndexSet module_additive_closure(const FiniteModule& M, IndexSet seed) {
  seed.set(0);
  std::vector<elem> list;
  seed.for_each([&](std::size_t i) { list.push_back(static_cast<elem>(i)); });
  for (std::size_t i = 0; i < list.size(); ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      elem s = M.add(list[i], list[j]);
      if (!seed.test(s)) {
        seed.set(s);
        list.push_back(s);
      }
    }
  return seed;
}

/// Smallest submodule containing gens.
inline Submodule submodule_generated(const ModulePtr& M, std::span<const elem> gens) {
  IndexSet seed(M->order());
  seed.set(0);
  for (elem g : gens) {
    if (g >= M->order()) throw std::invalid_argument("submodule_generated: generator out of range");
    for (std::size_t r = 0; r < M->ring()->order(); ++r)
      seed.set(M->act(static_cast<elem>(r), g));
  }
  return Submodule(M, module_additive_closure(*M, std::move(seed)));
}

inline Submodule zero_submodule(const ModulePtr& M) {
  IndexSet s(M->order());
  s.set(0);
  return Submodule(M, s);
}

inline Submodule full_submodule(const ModulePtr& M) {
  return Submodule(M, IndexSet::full(M->order()));
}

/// The full submodule lattice via cyclic-submodule sum closure; includes
/// {0} and M, canonically ordered.
inline std::vector<Submodule> enumerate_submodules(const ModulePtr& M) {
  std::set<IndexSet> seen;
  std::vector<IndexSet> work;
  auto push = [&](const IndexSet& s) {
    if (seen.insert(s).second) work.push_back(s);
  };
  {
    IndexSet z(M->order());
    z.set(0);
    push(z);
  }
  for (std::size_t g = 0; g < M->order(); ++g) {
    elem eg = static_cast<elem>(g);
    push(submodule_generated(M, std::span<const elem>(&eg, 1)).members());
  }
  for (std::size_t i = 0; i < work.size(); ++i)
    for (std::size_t j = 0; j < i; ++j)
      push(module_additive_closure(*M, work[i] | work[j]));

  std::sort(work.begin(), work.end(),
            [](const IndexSet& a, const IndexSet& b) { return a.canonical_less(b); });
  std::vector<Submodule> out;
  out.reserve(work.size());
  for (auto& s : work) out.emplace_back(M, std::move(s));
  return out;
}

inline Submodule submodule_sum(const Submodule& a, const Submodule& b) {
  return Submodule(a.module(), module_additive_closure(*a.module(), a.members() | b.members()));
}

inline Submodule submodule_intersect(const Submodule& a, const Submodule& b) {
  return Submodule(a.module(), a.members() & b.members());
}

/// (N : M) = {r : rM contained in N}; (0 : M) is Ann(M).
inline Ideal colon_into_ring(const Submodule& N) {
  const auto& M = *N.module();
  const auto& R = M.ring();
  IndexSet out(R->order());
  for (std::size_t r = 0; r < R->order(); ++r) {
    bool ok = true;
    for (std::size_t m = 0; m < M.order() && ok; ++m)
      if (!N.contains(M.act(static_cast<elem>(r), static_cast<elem>(m)))) ok = false;
    if (ok) out.set(r);
  }
  return Ideal(R, std::move(out));
}

inline Ideal module_annihilator(const ModulePtr& M) {
  return colon_into_ring(zero_submodule(M));
}

/// Residual (N :_M X) = {m : Xm contained in N} for a nonempty X subset of R.
inline Submodule colon_into_module(const Submodule& N, const IndexSet& X) {
  if (X.empty()) throw std::invalid_argument("colon_into_module: empty scalar set");
  const auto& M = *N.module();
  IndexSet out(M.order());
  for (std::size_t m = 0; m < M.order(); ++m) {
    bool ok = true;
    X.for_each([&](std::size_t r) {
      if (ok && !N.contains(M.act(static_cast<elem>(r), static_cast<elem>(m)))) ok = false;
    });
    if (ok) out.set(m);
  }
  return Submodule(N.module(), std::move(out));
}

inline Submodule colon_into_module(const Submodule& N, elem r) {
  IndexSet X(N.module()->ring()->order());
  X.set(r);
  return colon_into_module(N, X);
}

/// IN: the submodule generated by {a.n : a in I, n in N}.
inline Submodule ideal_action(const Ideal& I, const Submodule& N) {
  const auto& M = *N.module();
  IndexSet seed(M.order());
  seed.set(0);
  I.members().for_each([&](std::size_t a) {
    N.members().for_each([&](std::size_t n) {
      seed.set(M.act(static_cast<elem>(a), static_cast<elem>(n)));
    });
  });
  return Submodule(N.module(), module_additive_closure(M, std::move(seed)));
}

inline Submodule ideal_action(const Ideal& I, const ModulePtr& M) {
  return ideal_action(I, full_submodule(M));
}

/// Quotient module M/N: cosets indexed by ascending minimal representative.
/// The provenance keeps the projection table (parent element -> coset index).
inline ModulePtr module_quotient(const ModulePtr& M, const Submodule& N) {
  const std::size_t n = M->order();
  std::vector<int> coset_of(n, -1);
  std::vector<elem> reps;
  for (std::size_t a = 0; a < n; ++a) {
    if (coset_of[a] >= 0) continue;
    int idx = static_cast<int>(reps.size());
    reps.push_back(static_cast<elem>(a));
    N.members().for_each([&](std::size_t x) {
      coset_of[M->add(static_cast<elem>(a), static_cast<elem>(x))] = idx;
    });
  }
  const std::size_t q = reps.size();
  const std::size_t nr = M->ring()->order();
  std::vector<elem> add(q * q), neg(q), act(nr * q);
  for (std::size_t a = 0; a < q; ++a) {
    neg[a] = static_cast<elem>(coset_of[M->neg(reps[a])]);
    for (std::size_t b = 0; b < q; ++b)
      add[a * q + b] = static_cast<elem>(coset_of[M->add(reps[a], reps[b])]);
    for (std::size_t r = 0; r < nr; ++r)
      act[r * q + a] = static_cast<elem>(coset_of[M->act(static_cast<elem>(r), reps[a])]);
  }
  ModuleProvenance prov;
  prov.tag = ModuleTag::quotient;
  auto mem = N.members().members();
  prov.spec = "quotient(" + M->provenance().spec + ",[";
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (i) prov.spec += ",";
    prov.spec += std::to_string(mem[i]);
  }
  prov.spec += "])";
  prov.parent = M;
  prov.parent_map.resize(n);
  for (std::size_t a = 0; a < n; ++a) prov.parent_map[a] = static_cast<elem>(coset_of[a]);
  return FiniteModule::from_tables(M->ring(), q, std::move(add), std::move(neg),
                                   std::move(act), std::move(prov));
}

/// Pushes a submodule of the parent forward along the quotient projection.
inline Submodule project_to_quotient(const ModulePtr& Q, const Submodule& N) {
  const auto& prov = Q->provenance();
  if (prov.tag != ModuleTag::quotient || prov.parent != N.module())
    throw std::invalid_argument("project_to_quotient: not a quotient of this module");
  IndexSet out(Q->order());
  N.members().for_each([&](std::size_t m) { out.set(prov.parent_map[m]); });
  return Submodule(Q, std::move(out));
}

/// A submodule as a module in its own right, elements reindexed ascending.
/// The provenance keeps the inclusion table (local index -> parent element).
inline ModulePtr module_from_submodule(const Submodule& N) {
  const auto& M = *N.module();
  auto mem = N.members().members();
  const std::size_t n = mem.size();
  std::vector<int> local_of(M.order(), -1);
  for (std::size_t i = 0; i < n; ++i) local_of[mem[i]] = static_cast<int>(i);
  const std::size_t nr = M.ring()->order();
  std::vector<elem> add(n * n), neg(n), act(nr * n);
  for (std::size_t a = 0; a < n; ++a) {
    neg[a] = static_cast<elem>(local_of[M.neg(mem[a])]);
    for (std::size_t b = 0; b < n; ++b)
      add[a * n + b] = static_cast<elem>(local_of[M.add(mem[a], mem[b])]);
    for (std::size_t r = 0; r < nr; ++r)
      act[r * n + a] = static_cast<elem>(local_of[M.act(static_cast<elem>(r), mem[a])]);
  }
  ModuleProvenance prov;
  prov.tag = ModuleTag::submodule;
  prov.spec = "submodule(" + M.provenance().spec + ",[";
  for (std::size_t i = 0; i < mem.size(); ++i) {
    if (i) prov.spec += ",";
    prov.spec += std::to_string(mem[i]);
  }
  prov.spec += "])";
  prov.parent = N.module();
  prov.parent_map.assign(mem.begin(), mem.end());
  return FiniteModule::from_tables(M.ring(), n, std::move(add), std::move(neg),
                                   std::move(act), std::move(prov));
}

/// Views a submodule K of M with K contained in N as a submodule of the
/// module built from N by module_from_submodule.
inline Submodule restrict_to_submodule(const ModulePtr& NM, const Submodule& K) {
  const auto& prov = NM->provenance();
  if (prov.tag != ModuleTag::submodule || prov.parent != K.module())
    throw std::invalid_argument("restrict_to_submodule: not built from this module");
  IndexSet out(NM->order());
  for (std::size_t i = 0; i < NM->order(); ++i)
    if (K.contains(prov.parent_map[i])) out.set(i);
  if (out.count() != K.size())
    throw std::invalid_argument("restrict_to_submodule: set not contained in the submodule");
  return Submodule(NM, std::move(out));
}

/// J(M): intersection of all maximal submodules. For the zero module (which
/// has no proper submodules) returns M itself.
inline Submodule module_jacobson(const ModulePtr& M, const std::vector<Submodule>& lattice) {
  IndexSet acc = IndexSet::full(M->order());
  bool any = false;
  for (const auto& N : lattice) {
    if (!N.is_proper()) continue;
    bool maximal = true;
    for (const auto& K : lattice) {
      if (!K.is_proper() || K.members() == N.members()) continue;
      if (K.members().contains(N.members()) && K.size() > N.size()) {
        maximal = false;
        break;
      }
    }
    if (maximal) {
      acc &= N.members();
      any = true;
    }
  }
  if (!any) return full_submodule(M);  // degenerate: M = {0}
  return Submodule(M, std::move(acc));
}

inline Submodule module_jacobson(const ModulePtr& M) {
  return module_jacobson(M, enumerate_submodules(M));
}

struct StructureFlags {
  bool faithful = false;
  bool multiplication = false;
  bool reduced = false;
  bool finitely_generated = true;  // always true at this scale; kept for hypothesis bookkeeping
};

inline StructureFlags structure_flags(const ModulePtr& M, const std::vector<Submodule>& lattice) {
  StructureFlags f;
  f.faithful = module_annihilator(M).is_zero();
  f.multiplication = true;
  for (const auto& N : lattice) {
    Ideal c = colon_into_ring(N);
    if (ideal_action(c, M).members() != N.members()) {
      f.multiplication = false;
      break;
    }
  }
  f.reduced = true;
  const auto& R = *M->ring();
  for (std::size_t a = 0; a < R.order() && f.reduced; ++a) {
    elem a2 = R.mul(static_cast<elem>(a), static_cast<elem>(a));
    for (std::size_t m = 0; m < M->order(); ++m)
      if (M->act(a2, static_cast<elem>(m)) == 0 && M->act(static_cast<elem>(a), static_cast<elem>(m)) != 0) {
        f.reduced = false;
        break;
      }
  }
  return f;
}

inline StructureFlags structure_flags(const ModulePtr& M) {
  return structure_flags(M, enumerate_submodules(M));
}

struct SubmoduleFlags {
  bool pure = false;
  bool small = false;
};

inline SubmoduleFlags submodule_flags(const Submodule& N,
                                      const std::vector<Ideal>& ideals,
                                      const std::vector<Submodule>& lattice) {
  SubmoduleFlags f;
  const ModulePtr& M = N.module();
  f.pure = true;
  for (const auto& I : ideals) {
    Submodule in = ideal_action(I, N);
    Submodule im = ideal_action(I, M);
    if (in.members() != (N.members() & im.members())) {
      f.pure = false;
      break;
    }
  }
  f.small = true;
  for (const auto& K : lattice)
    if (K.is_proper() && submodule_sum(N, K).size() == M->order()) {
      f.small = false;
      break;
    }
  return f;
}

inline SubmoduleFlags submodule_flags(const Submodule& N) {
  return submodule_flags(N, enumerate_ideals(N.module()->ring()), enumerate_submodules(N.module()));
}

/// NK = (N:M)(K:M)M with the colon ideals as canonical presentation ideals.
/// Only defined when the ambient module is a multiplication module.
inline Submodule submodule_product(const Submodule& N, const Submodule& K) {
  const ModulePtr& M = N.module();
  if (!structure_flags(M).multiplication)
    throw std::invalid_argument("submodule_product: ambient module is not a multiplication module");
  return ideal_action(ideal_product(colon_into_ring(N), colon_into_ring(K)), M);
}

// Same, skipping the multiplication-module re-check (for callers that
// already classified the ambient module).
inline Submodule submodule_product_unchecked(const Submodule& N, const Submodule& K) {
  return ideal_action(ideal_product(colon_into_ring(N), colon_into_ring(K)), N.module());
}

/// Z(M) = {r : rm = 0 for some m != 0}. A plain subset of R, not an ideal.
inline IndexSet zero_divisors_on(const ModulePtr& M) {
  const auto& R = *M->ring();
  IndexSet out(R.order());
  for (std::size_t r = 0; r < R.order(); ++r)
    for (std::size_t m = 1; m < M->order(); ++m)
      if (M->act(static_cast<elem>(r), static_cast<elem>(m)) == 0) {
        out.set(r);
        break;
      }
  return out;
}

/// Z_N(M) = {r : rm in N for some m in M \ N}.
inline IndexSet zero_divisors_rel(const Submodule& N) {
  const auto& M = *N.module();
  const auto& R = *M.ring();
  IndexSet out(R.order());
  for (std::size_t r = 0; r < R.order(); ++r)
    for (std::size_t m = 0; m < M.order(); ++m)
      if (!N.contains(static_cast<elem>(m)) &&
          N.contains(M.act(static_cast<elem>(r), static_cast<elem>(m)))) {
        out.set(r);
        break;
      }
  return out;
}

/// Z_I(R) = {r : rs in I for some s in R \ I}.
inline IndexSet ring_zero_divisors_rel(const Ideal& I) {
  const auto& R = *I.ring();
  IndexSet out(R.order());
  for (std::size_t r = 0; r < R.order(); ++r)
    for (std::size_t s = 0; s < R.order(); ++s)
      if (!I.contains(static_cast<elem>(s)) &&
          I.contains(R.mul(static_cast<elem>(r), static_cast<elem>(s)))) {
        out.set(r);
        break;
      }
  return out;
}

}  // namespace jmodlab
