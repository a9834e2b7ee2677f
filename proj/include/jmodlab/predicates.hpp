#pragma once

/// Submodule and ideal predicates, each returning a Verdict with an explicit
/// witness on failure. Witnesses are the lexicographically smallest violating
/// pair in canonical index order, so reports are deterministic.
///
/// Definitions, with T = (J(R)M : M):
///   weakly J-submodule:  0 != rm in N and r not in T       imply m in N
///   J-submodule:         rm in N and r not in T            imply m in N
///   weakly J-ideal:      0 != ab in I and a not in J(R)    imply b in I
///   J-ideal:             ab in I and a not in J(R)         imply b in I
///   prime / weakly prime:        rm in N (resp. 0 != rm in N) and
///                                r not in (N:M)             imply m in N
///   primary / weakly primary:    ... r not in sqrt(N:M)    imply m in N
///   n-submodule:         rm in N and r not in sqrt(0:M)    imply m in N
///   J-presimplifiable module:    Z(M) contained in T
///
/// A predicate whose hypothesis never fires reports holds with the vacuous
/// marker set, so the harness can tell "verified" from "never exercised".

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "jmodlab/module.hpp"

namespace jmodlab {

struct Verdict {
  bool holds = true;
  bool vacuous = false;  // hypothesis never fired
  long checks = 0;       // quantifier instances examined
  std::optional<std::pair<elem, elem>> witness;      // violating (r, m) / (a, b)
  std::optional<IndexSet> witness_set;               // lattice-level witness
};

/// Cached per-module data shared by the predicate checks.
struct ModuleEnv {
  ModulePtr M;
  Ideal jacobson_r;   // J(R)
  Submodule jm;       // J(R)M
  Ideal t;            // (J(R)M : M)

  static ModuleEnv make(const ModulePtr& M) {
    Ideal jr = jacobson_radical(M->ring());
    Submodule jm = ideal_action(jr, M);
    Ideal t = colon_into_ring(jm);
    return ModuleEnv{M, std::move(jr), std::move(jm), std::move(t)};
  }
};

namespace detail {

// Shared quantifier scan over (r, m): hyp selects a pair, bad rejects it.
template <class Hyp, class Bad>
Verdict scan_pairs(std::size_t nr, std::size_t nm, Hyp hyp, Bad bad) {
  Verdict v;
  long fired = 0;
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t m = 0; m < nm; ++m) {
      ++v.checks;
      if (!hyp(static_cast<elem>(r), static_cast<elem>(m))) continue;
      ++fired;
      if (bad(static_cast<elem>(r), static_cast<elem>(m))) {
        v.holds = false;
        v.witness = {static_cast<elem>(r), static_cast<elem>(m)};
        return v;
      }
    }
  v.vacuous = (fired == 0);
  return v;
}

inline void require_proper(const Submodule& N, const char* who) {
  if (!N.is_proper())
    throw std::invalid_argument(std::string(who) + ": submodule must be proper");
}

}  // namespace detail

inline Verdict check_weakly_j_submodule(const Submodule& N, const ModuleEnv& env) {
  detail::require_proper(N, "check_weakly_j_submodule");
  const auto& M = *N.module();
  return detail::scan_pairs(
      M.ring()->order(), M.order(),
      [&](elem r, elem m) {
        elem rm = M.act(r, m);
        return rm != 0 && N.contains(rm) && !env.t.contains(r);
      },
      [&](elem, elem m) { return !N.contains(m); });
}

inline Verdict check_j_submodule(const Submodule& N, const ModuleEnv& env) {
  detail::require_proper(N, "check_j_submodule");
  const auto& M = *N.module();
  return detail::scan_pairs(
      M.ring()->order(), M.order(),
      [&](elem r, elem m) { return N.contains(M.act(r, m)) && !env.t.contains(r); },
      [&](elem, elem m) { return !N.contains(m); });
}

inline Verdict check_weakly_j_submodule(const Submodule& N) {
  return check_weakly_j_submodule(N, ModuleEnv::make(N.module()));
}

inline Verdict check_j_submodule(const Submodule& N) {
  return check_j_submodule(N, ModuleEnv::make(N.module()));
}

struct IdealVerdicts {
  Verdict j_ideal;
  Verdict weakly_j_ideal;
};

/// The ring specializations, scanned over ring pairs (a, b) with the
/// exclusion set J(R).
inline IdealVerdicts check_ideal_variants(const Ideal& I, const Ideal& jacobson_r) {
  if (!I.is_proper())
    throw std::invalid_argument("check_ideal_variants: ideal must be proper");
  const auto& R = *I.ring();
  IdealVerdicts out;
  out.j_ideal = detail::scan_pairs(
      R.order(), R.order(),
      [&](elem a, elem b) { return I.contains(R.mul(a, b)) && !jacobson_r.contains(a); },
      [&](elem, elem b) { return !I.contains(b); });
  out.weakly_j_ideal = detail::scan_pairs(
      R.order(), R.order(),
      [&](elem a, elem b) {
        elem ab = R.mul(a, b);
        return ab != 0 && I.contains(ab) && !jacobson_r.contains(a);
      },
      [&](elem, elem b) { return !I.contains(b); });
  return out;
}

inline IdealVerdicts check_ideal_variants(const Ideal& I) {
  return check_ideal_variants(I, jacobson_radical(I.ring()));
}

enum class ClassicalKind { prime, weakly_prime, primary, weakly_primary, n_submodule };

inline Verdict check_classical(const Submodule& N, ClassicalKind kind) {
  detail::require_proper(N, "check_classical");
  const auto& M = *N.module();
  const auto& R = M.ring();
  Ideal excl = zero_ideal(R);
  bool need_nonzero = false;
  switch (kind) {
    case ClassicalKind::prime:
      excl = colon_into_ring(N);
      break;
    case ClassicalKind::weakly_prime:
      excl = colon_into_ring(N);
      need_nonzero = true;
      break;
    case ClassicalKind::primary:
      excl = radical_of_ideal(R, colon_into_ring(N));
      break;
    case ClassicalKind::weakly_primary:
      excl = radical_of_ideal(R, colon_into_ring(N));
      need_nonzero = true;
      break;
    case ClassicalKind::n_submodule:
      excl = radical_of_ideal(R, module_annihilator(N.module()));
      break;
  }
  return detail::scan_pairs(
      R->order(), M.order(),
      [&](elem r, elem m) {
        elem rm = M.act(r, m);
        if (need_nonzero && rm == 0) return false;
        return N.contains(rm) && !excl.contains(r);
      },
      [&](elem, elem m) { return !N.contains(m); });
}

/// Z(M) contained in (J(R)M : M). Agrees with check_j_submodule on the zero
/// submodule whenever M is nonzero.
inline Verdict check_j_presimplifiable(const ModulePtr& M, const ModuleEnv& env) {
  return detail::scan_pairs(
      M->ring()->order(), M->order(),
      [&](elem r, elem m) { return m != 0 && M->act(r, m) == 0; },
      [&](elem r, elem) { return !env.t.contains(r); });
}

inline Verdict check_j_presimplifiable(const ModulePtr& M) {
  return check_j_presimplifiable(M, ModuleEnv::make(M));
}

/// No weakly J-submodule contains N properly (full lattice scan).
/// Requires N itself to be a weakly J-submodule.
inline Verdict check_maximal_weakly_j(const Submodule& N,
                                      const std::vector<Submodule>& lattice,
                                      const ModuleEnv& env) {
  detail::require_proper(N, "check_maximal_weakly_j");
  if (!check_weakly_j_submodule(N, env).holds)
    throw std::invalid_argument("check_maximal_weakly_j: N is not a weakly J-submodule");
  Verdict v;
  for (const auto& K : lattice) {
    if (!K.is_proper() || K.members() == N.members()) continue;
    if (!K.members().contains(N.members())) continue;
    ++v.checks;
    if (check_weakly_j_submodule(K, env).holds) {
      v.holds = false;
      v.witness_set = K.members();
      return v;
    }
  }
  return v;
}

inline Verdict check_maximal_weakly_j(const Submodule& N) {
  return check_maximal_weakly_j(N, enumerate_submodules(N.module()), ModuleEnv::make(N.module()));
}

enum class PredicateKind {
  weakly_j_submodule,
  j_submodule,
  j_ideal,
  weakly_j_ideal,
  prime,
  weakly_prime,
  primary,
  weakly_primary,
  n_submodule,
  j_presimplifiable,
  maximal_weakly_j
};

inline const char* predicate_name(PredicateKind k) {
  switch (k) {
    case PredicateKind::weakly_j_submodule: return "weakly-j-submodule";
    case PredicateKind::j_submodule: return "j-submodule";
    case PredicateKind::j_ideal: return "j-ideal";
    case PredicateKind::weakly_j_ideal: return "weakly-j-ideal";
    case PredicateKind::prime: return "prime";
    case PredicateKind::weakly_prime: return "weakly-prime";
    case PredicateKind::primary: return "primary";
    case PredicateKind::weakly_primary: return "weakly-primary";
    case PredicateKind::n_submodule: return "n-submodule";
    case PredicateKind::j_presimplifiable: return "j-presimplifiable";
    case PredicateKind::maximal_weakly_j: return "maximal-weakly-j";
  }
  return "?";
}

inline std::optional<PredicateKind> predicate_from_name(const std::string& s) {
  using K = PredicateKind;
  for (K k : {K::weakly_j_submodule, K::j_submodule, K::j_ideal, K::weakly_j_ideal,
              K::prime, K::weakly_prime, K::primary, K::weakly_primary,
              K::n_submodule, K::j_presimplifiable, K::maximal_weakly_j})
    if (s == predicate_name(k)) return k;
  return std::nullopt;
}

/// Substitutes a failure witness back into the defining condition of the
/// predicate and confirms that it exhibits the violation.
inline bool revalidate_witness(PredicateKind kind, const Submodule& N,
                               std::pair<elem, elem> w) {
  const auto& M = *N.module();
  const auto& R = M.ring();
  auto [r, m] = w;
  elem rm = M.act(r, m);
  switch (kind) {
    case PredicateKind::weakly_j_submodule: {
      ModuleEnv env = ModuleEnv::make(N.module());
      return rm != 0 && N.contains(rm) && !env.t.contains(r) && !N.contains(m);
    }
    case PredicateKind::j_submodule: {
      ModuleEnv env = ModuleEnv::make(N.module());
      return N.contains(rm) && !env.t.contains(r) && !N.contains(m);
    }
    case PredicateKind::prime:
      return N.contains(rm) && !colon_into_ring(N).contains(r) && !N.contains(m);
    case PredicateKind::weakly_prime:
      return rm != 0 && N.contains(rm) && !colon_into_ring(N).contains(r) && !N.contains(m);
    case PredicateKind::primary:
      return N.contains(rm) && !radical_of_ideal(R, colon_into_ring(N)).contains(r) &&
             !N.contains(m);
    case PredicateKind::weakly_primary:
      return rm != 0 && N.contains(rm) &&
             !radical_of_ideal(R, colon_into_ring(N)).contains(r) && !N.contains(m);
    case PredicateKind::n_submodule:
      return N.contains(rm) &&
             !radical_of_ideal(R, module_annihilator(N.module())).contains(r) &&
             !N.contains(m);
    case PredicateKind::j_presimplifiable: {
      ModuleEnv env = ModuleEnv::make(N.module());
      return m != 0 && rm == 0 && !env.t.contains(r);
    }
    default:
      return false;
  }
}

inline bool revalidate_ideal_witness(PredicateKind kind, const Ideal& I,
                                     std::pair<elem, elem> w) {
  const auto& R = *I.ring();
  Ideal jr = jacobson_radical(I.ring());
  auto [a, b] = w;
  elem ab = R.mul(a, b);
  if (kind == PredicateKind::j_ideal)
    return I.contains(ab) && !jr.contains(a) && !I.contains(b);
  if (kind == PredicateKind::weakly_j_ideal)
    return ab != 0 && I.contains(ab) && !jr.contains(a) && !I.contains(b);
  return false;
}

}  // namespace jmodlab
