#include <catch2/catch_amalgamated.hpp>

#include "jmodlab/predicates.hpp"
#include "oracles.hpp"

using namespace jmodlab;

namespace {

Submodule sub(const ModulePtr& M, std::initializer_list<elem> gens) {
  std::vector<elem> g(gens);
  return submodule_generated(M, g);
}

std::vector<std::pair<RingPtr, ModulePtr>> sample_instances() {
  std::vector<std::pair<RingPtr, ModulePtr>> out;
  auto add = [&](RingPtr R, ModulePtr M) { out.emplace_back(std::move(R), std::move(M)); };
  auto r12 = ring_zn(12);
  add(r12, module_cyclic(r12, 6));
  add(r12, module_self(r12));
  auto r8 = ring_zn(8);
  add(r8, module_self(r8));
  auto r6 = ring_zn(6);
  add(r6, module_self(r6));
  auto r4 = ring_zn(4);
  add(r4, module_product({module_cyclic(r4, 2), module_cyclic(r4, 2)}));
  auto r9 = ring_zn(9);
  add(r9, module_cyclic(r9, 3));
  auto r2 = ring_zn(2);
  add(r2, module_product({module_cyclic(r2, 2), module_cyclic(r2, 2)}));
  return out;
}

}  // namespace

TEST_CASE("the zero submodule is always weakly J, vacuously") {
  for (const auto& [R, M] : sample_instances()) {
    if (M->order() < 2) continue;
    Verdict v = check_weakly_j_submodule(zero_submodule(M));
    REQUIRE(v.holds);
    REQUIRE(v.vacuous);
  }
}

TEST_CASE("Z_6 over Z_12 separates the weak and strong notions at zero") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  auto N = zero_submodule(M);

  REQUIRE(check_weakly_j_submodule(N).holds);
  Verdict j = check_j_submodule(N);
  REQUIRE_FALSE(j.holds);
  REQUIRE(j.witness == std::make_pair(elem(2), elem(3)));
  REQUIRE(revalidate_witness(PredicateKind::j_submodule, N, *j.witness));
}

TEST_CASE("proper-submodule precondition") {
  auto M = module_cyclic(ring_zn(12), 6);
  REQUIRE_THROWS_AS(check_weakly_j_submodule(full_submodule(M)), std::invalid_argument);
  REQUIRE_THROWS_AS(check_j_submodule(full_submodule(M)), std::invalid_argument);
  REQUIRE_THROWS_AS(check_classical(full_submodule(M), ClassicalKind::prime),
                    std::invalid_argument);
}

TEST_CASE("local rings make every proper ideal a J-submodule") {
  auto R = ring_zn(8);
  auto M = module_self(R);
  REQUIRE(check_j_submodule(sub(M, {4})).holds);
  REQUIRE(check_j_submodule(sub(M, {2})).holds);
  REQUIRE(check_weakly_j_submodule(sub(M, {4})).holds);
}

TEST_CASE("ideal variants on the zero ideal of Z_12") {
  auto R = ring_zn(12);
  IdealVerdicts v = check_ideal_variants(zero_ideal(R));
  REQUIRE(v.weakly_j_ideal.holds);
  REQUIRE(v.weakly_j_ideal.vacuous);
  REQUIRE_FALSE(v.j_ideal.holds);
  // lexicographically smallest violation: 2*6 = 0, 2 outside J, 6 outside the ideal
  REQUIRE(v.j_ideal.witness == std::make_pair(elem(2), elem(6)));
  REQUIRE(revalidate_ideal_witness(PredicateKind::j_ideal, zero_ideal(R), *v.j_ideal.witness));
}

TEST_CASE("ideal variants on <2> in Z_8") {
  auto R = ring_zn(8);
  std::vector<elem> two = {2};
  IdealVerdicts v = check_ideal_variants(ideal_generated(R, two));
  REQUIRE(v.j_ideal.holds);
  REQUIRE(v.weakly_j_ideal.holds);
}

TEST_CASE("weakly J-ideals live inside J(R)") {
  for (const RingPtr& R : {ring_zn(8), ring_zn(12), ring_zn(6), ring_zn(9),
                           ring_product({ring_zn(2), ring_zn(3)})}) {
    Ideal jr = jacobson_radical(R);
    for (const auto& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      if (check_ideal_variants(I, jr).weakly_j_ideal.holds)
        REQUIRE(jr.members().contains(I.members()));
    }
  }
}

TEST_CASE("ideal variants agree with the self-module predicates") {
  for (const RingPtr& R : {ring_zn(8), ring_zn(12), ring_zn(6),
                           ring_product({ring_zn(2), ring_zn(2)})}) {
    auto M = module_self(R);
    ModuleEnv env = ModuleEnv::make(M);
    Ideal jr = jacobson_radical(R);
    for (const auto& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      Submodule N(M, I.members());
      IdealVerdicts iv = check_ideal_variants(I, jr);
      REQUIRE(iv.j_ideal.holds == check_j_submodule(N, env).holds);
      REQUIRE(iv.weakly_j_ideal.holds == check_weakly_j_submodule(N, env).holds);
    }
  }
}

TEST_CASE("classical predicate examples") {
  auto R = ring_zn(8);
  auto M = module_self(R);
  auto N4 = sub(M, {4});

  REQUIRE(check_classical(N4, ClassicalKind::weakly_primary).holds);
  Verdict prime = check_classical(N4, ClassicalKind::prime);
  REQUIRE_FALSE(prime.holds);
  REQUIRE(prime.witness == std::make_pair(elem(2), elem(2)));
  REQUIRE(revalidate_witness(PredicateKind::prime, N4, *prime.witness));

  for (const auto& [R2, M2] : sample_instances()) {
    if (M2->order() < 2) continue;
    REQUIRE(check_classical(zero_submodule(M2), ClassicalKind::weakly_prime).holds);
  }
}

TEST_CASE("J-presimplifiable modules") {
  auto R8 = ring_zn(8);
  REQUIRE(check_j_presimplifiable(module_self(R8)).holds);

  auto R12 = ring_zn(12);
  Verdict v = check_j_presimplifiable(module_cyclic(R12, 6));
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness.has_value());

  // agreement with the zero submodule being a J-submodule
  for (const auto& [R, M] : sample_instances()) {
    if (M->order() < 2) continue;
    REQUIRE(check_j_presimplifiable(M).holds == check_j_submodule(zero_submodule(M)).holds);
  }
}

TEST_CASE("maximal weakly J-submodules") {
  auto R = ring_zn(8);
  auto M = module_self(R);
  auto lattice = enumerate_submodules(M);
  ModuleEnv env = ModuleEnv::make(M);

  REQUIRE(check_maximal_weakly_j(sub(M, {2}), lattice, env).holds);
  Verdict v = check_maximal_weakly_j(zero_submodule(M), lattice, env);
  REQUIRE_FALSE(v.holds);
  REQUIRE(v.witness_set.has_value());

  auto M6 = module_cyclic(ring_zn(12), 6);
  REQUIRE_THROWS_AS(check_maximal_weakly_j(sub(M6, {3})), std::invalid_argument);
}

TEST_CASE("predicates agree with the naive oracles") {
  for (const auto& [R, M] : sample_instances()) {
    ModuleEnv env = ModuleEnv::make(M);
    for (const auto& N : enumerate_submodules(M)) {
      if (!N.is_proper()) continue;
      oracle::Set n = oracle::set_from_indexset(N.members());

      REQUIRE(check_weakly_j_submodule(N, env).holds ==
              oracle::weakly_j_submodule(*M, n).holds);
      REQUIRE(check_j_submodule(N, env).holds == oracle::j_submodule(*M, n).holds);
      REQUIRE(check_classical(N, ClassicalKind::prime).holds ==
              oracle::prime_submodule(*M, n, false).holds);
      REQUIRE(check_classical(N, ClassicalKind::weakly_prime).holds ==
              oracle::prime_submodule(*M, n, true).holds);
      REQUIRE(check_classical(N, ClassicalKind::primary).holds ==
              oracle::primary_submodule(*M, n, false).holds);
      REQUIRE(check_classical(N, ClassicalKind::weakly_primary).holds ==
              oracle::primary_submodule(*M, n, true).holds);
      REQUIRE(check_classical(N, ClassicalKind::n_submodule).holds ==
              oracle::n_submodule(*M, n).holds);
    }
    REQUIRE(check_j_presimplifiable(M, env).holds == oracle::j_presimplifiable(*M));

    Ideal jr = jacobson_radical(R);
    for (const auto& I : enumerate_ideals(R)) {
      if (!I.is_proper()) continue;
      oracle::Set s = oracle::set_from_indexset(I.members());
      IdealVerdicts iv = check_ideal_variants(I, jr);
      REQUIRE(iv.j_ideal.holds == oracle::j_ideal(*R, s, false).holds);
      REQUIRE(iv.weakly_j_ideal.holds == oracle::j_ideal(*R, s, true).holds);
    }
  }
}

TEST_CASE("implication chain across all sampled submodules") {
  for (const auto& [R, M] : sample_instances()) {
    ModuleEnv env = ModuleEnv::make(M);
    Ideal sqrt_ann = radical_of_ideal(R, module_annihilator(M));
    for (const auto& N : enumerate_submodules(M)) {
      if (!N.is_proper()) continue;
      bool prime = check_classical(N, ClassicalKind::prime).holds;
      bool wprime = check_classical(N, ClassicalKind::weakly_prime).holds;
      bool primary = check_classical(N, ClassicalKind::primary).holds;
      bool wprimary = check_classical(N, ClassicalKind::weakly_primary).holds;
      bool jsub = check_j_submodule(N, env).holds;
      bool wjsub = check_weakly_j_submodule(N, env).holds;
      bool nsub = check_classical(N, ClassicalKind::n_submodule).holds;

      if (prime) REQUIRE(primary);
      if (prime) REQUIRE(wprime);
      if (primary) REQUIRE(wprimary);
      if (jsub) REQUIRE(wjsub);
      if (nsub && env.t.members().contains(sqrt_ann.members())) REQUIRE(jsub);
    }
  }
}

TEST_CASE("every failing verdict carries a revalidating witness") {
  for (const auto& [R, M] : sample_instances()) {
    ModuleEnv env = ModuleEnv::make(M);
    for (const auto& N : enumerate_submodules(M)) {
      if (!N.is_proper()) continue;
      auto check = [&](Verdict v, PredicateKind k) {
        if (v.holds) return;
        REQUIRE(v.witness.has_value());
        REQUIRE(revalidate_witness(k, N, *v.witness));
      };
      check(check_weakly_j_submodule(N, env), PredicateKind::weakly_j_submodule);
      check(check_j_submodule(N, env), PredicateKind::j_submodule);
      check(check_classical(N, ClassicalKind::prime), PredicateKind::prime);
      check(check_classical(N, ClassicalKind::weakly_prime), PredicateKind::weakly_prime);
      check(check_classical(N, ClassicalKind::primary), PredicateKind::primary);
      check(check_classical(N, ClassicalKind::weakly_primary), PredicateKind::weakly_primary);
      check(check_classical(N, ClassicalKind::n_submodule), PredicateKind::n_submodule);
    }
  }
}
