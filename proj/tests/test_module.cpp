#include <catch2/catch_amalgamated.hpp>

#include <algorithm>

#include "jmodlab/module.hpp"
#include "oracles.hpp"

using namespace jmodlab;

namespace {

std::vector<elem> members_of(const Submodule& N) { return N.members().members(); }

Submodule sub(const ModulePtr& M, std::initializer_list<elem> gens) {
  std::vector<elem> g(gens);
  return submodule_generated(M, g);
}

Ideal gen(const RingPtr& R, std::initializer_list<elem> gens) {
  std::vector<elem> g(gens);
  return ideal_generated(R, g);
}

}  // namespace

TEST_CASE("module construction and annihilators") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  REQUIRE(M->order() == 6);
  REQUIRE(members_of(zero_submodule(M)) == std::vector<elem>{0});
  REQUIRE(module_annihilator(M).members().members() == std::vector<elem>{0, 6});

  auto Mself = module_self(R);
  REQUIRE(Mself->order() == 12);
  REQUIRE(module_annihilator(Mself).is_zero());

  auto R4 = ring_zn(4);
  auto M22 = module_product({module_cyclic(R4, 2), module_cyclic(R4, 2)});
  REQUIRE(M22->order() == 4);
  REQUIRE(module_annihilator(M22).members().members() == std::vector<elem>{0, 2});
}

TEST_CASE("ill-defined cyclic actions are rejected") {
  REQUIRE_THROWS_AS(module_cyclic(ring_zn(12), 5), std::invalid_argument);
  REQUIRE_THROWS_AS(module_cyclic(ring_zn(9), 2), std::invalid_argument);
  REQUIRE_NOTHROW(module_cyclic(ring_zn(12), 4));
}

TEST_CASE("submodule_generated") {
  auto M6 = module_cyclic(ring_zn(12), 6);
  REQUIRE(members_of(sub(M6, {3})) == std::vector<elem>{0, 3});
  REQUIRE(members_of(sub(M6, {})) == std::vector<elem>{0});

  auto R2 = ring_zn(2);
  auto M22 = module_product({module_cyclic(R2, 2), module_cyclic(R2, 2)});
  // (1,0) has index 2 in the mixed-radix encoding
  REQUIRE(members_of(sub(M22, {2})) == std::vector<elem>{0, 2});
}

TEST_CASE("enumerate_submodules matches a naive subset scan") {
  auto M6 = module_cyclic(ring_zn(12), 6);
  REQUIRE(enumerate_submodules(M6).size() == 4);

  auto r2 = ring_zn(2);
  auto M22 = module_product({module_cyclic(r2, 2), module_cyclic(r2, 2)});
  REQUIRE(enumerate_submodules(M22).size() == 5);

  auto r8 = ring_zn(8);
  auto M24 = module_product({module_cyclic(r8, 2), module_cyclic(r8, 4)});
  for (const ModulePtr& M : {M6, M22, M24, module_self(ring_zn(12))}) {
    auto naive = oracle::all_submodule_masks(*M);
    auto fast = enumerate_submodules(M);
    REQUIRE(fast.size() == naive.size());
    std::vector<std::uint32_t> got;
    for (const auto& N : fast) got.push_back(oracle::mask_from_indexset(N.members()));
    std::sort(got.begin(), got.end());
    std::sort(naive.begin(), naive.end());
    REQUIRE(got == naive);
  }
}

TEST_CASE("colon operators") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  auto N03 = sub(M, {3});

  REQUIRE(colon_into_ring(zero_submodule(M)).members().members() == std::vector<elem>{0, 6});
  REQUIRE(colon_into_ring(full_submodule(M)).size() == 12);
  REQUIRE(colon_into_ring(N03).members().members() == std::vector<elem>{0, 3, 6, 9});

  REQUIRE(members_of(colon_into_module(N03, gen(R, {2}).members())) == std::vector<elem>{0, 3});
  REQUIRE(members_of(colon_into_module(N03, IndexSet::full(12))) == std::vector<elem>{0, 3});
  REQUIRE(members_of(colon_into_module(zero_submodule(M), elem(2))) == std::vector<elem>{0, 3});
  REQUIRE_THROWS_AS(colon_into_module(N03, IndexSet(12)), std::invalid_argument);

  // colon adjunction: I inside (N:M) iff IM inside N
  auto ideals = enumerate_ideals(R);
  for (const auto& N : enumerate_submodules(M)) {
    Ideal c = colon_into_ring(N);
    for (const auto& I : ideals)
      REQUIRE(c.members().contains(I.members()) ==
              N.members().contains(ideal_action(I, M).members()));
  }
}

TEST_CASE("ideal action on submodules") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  REQUIRE(members_of(ideal_action(gen(R, {2}), M)) == std::vector<elem>{0, 2, 4});
  REQUIRE(members_of(ideal_action(zero_ideal(R), M)) == std::vector<elem>{0});
  REQUIRE(members_of(ideal_action(gen(R, {3}), sub(M, {3}))) == std::vector<elem>{0, 3});
}

TEST_CASE("lattice operations and quotients") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  REQUIRE(submodule_sum(sub(M, {3}), sub(M, {2})).size() == 6);
  REQUIRE(submodule_intersect(sub(M, {3}), full_submodule(M)) == sub(M, {3}));

  auto Mself = module_self(R);
  auto Q = module_quotient(Mself, sub(Mself, {6}));
  REQUIRE(Q->order() == 6);
  // the projection of <2> is the image {0,2,4} in the quotient
  REQUIRE(members_of(project_to_quotient(Q, sub(Mself, {2}))) == std::vector<elem>{0, 2, 4});

  auto NM = module_from_submodule(sub(M, {2}));
  REQUIRE(NM->order() == 3);
  REQUIRE(members_of(restrict_to_submodule(NM, sub(M, {4}))) == std::vector<elem>{0, 1, 2});
}

TEST_CASE("module jacobson radical") {
  auto R = ring_zn(12);
  REQUIRE(members_of(module_jacobson(module_self(R))) == std::vector<elem>{0, 6});
  REQUIRE(members_of(module_jacobson(module_cyclic(R, 6))) == std::vector<elem>{0});
  REQUIRE(members_of(module_jacobson(module_cyclic(ring_zn(7), 7))) == std::vector<elem>{0});
  // degenerate zero module reports itself
  auto Z1 = module_cyclic(R, 1);
  REQUIRE(module_jacobson(Z1).size() == 1);
}

TEST_CASE("structure flags") {
  auto f1 = structure_flags(module_self(ring_zn(12)));
  REQUIRE(f1.faithful);
  REQUIRE(f1.multiplication);
  REQUIRE_FALSE(f1.reduced);
  REQUIRE(f1.finitely_generated);

  auto f2 = structure_flags(module_cyclic(ring_zn(6), 6));
  REQUIRE(f2.faithful);
  REQUIRE(f2.multiplication);
  REQUIRE(f2.reduced);

  auto r2 = ring_zn(2);
  auto f3 = structure_flags(module_product({module_cyclic(r2, 2), module_cyclic(r2, 2)}));
  REQUIRE_FALSE(f3.multiplication);
}

TEST_CASE("submodule flags") {
  auto R = ring_zn(12);
  auto Mself = module_self(R);
  auto ideals = enumerate_ideals(R);
  auto lattice = enumerate_submodules(Mself);

  REQUIRE(submodule_flags(zero_submodule(Mself), ideals, lattice).pure);
  REQUIRE(submodule_flags(sub(Mself, {6}), ideals, lattice).small);
  REQUIRE_FALSE(submodule_flags(sub(Mself, {4}), ideals, lattice).small);

  auto M6 = module_self(ring_zn(6));
  REQUIRE(submodule_flags(sub(M6, {3})).pure);
}

TEST_CASE("submodule products in multiplication modules") {
  auto R = ring_zn(12);
  auto M = module_self(R);
  REQUIRE(members_of(submodule_product(sub(M, {4}), sub(M, {6}))) == std::vector<elem>{0});
  for (const auto& N : enumerate_submodules(M))
    REQUIRE(submodule_product(N, full_submodule(M)) == N);
  REQUIRE(members_of(submodule_product(sub(M, {2}), sub(M, {3}))) == std::vector<elem>{0, 6});

  auto r2 = ring_zn(2);
  auto bad = module_product({module_cyclic(r2, 2), module_cyclic(r2, 2)});
  REQUIRE_THROWS_AS(submodule_product(zero_submodule(bad), zero_submodule(bad)),
                    std::invalid_argument);
}

TEST_CASE("zero divisor sets") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  REQUIRE(zero_divisors_on(M).members() ==
          std::vector<elem>{0, 2, 3, 4, 6, 8, 9, 10});
  REQUIRE(zero_divisors_rel(sub(M, {3})).members() == std::vector<elem>{0, 3, 6, 9});
  REQUIRE(ring_zero_divisors_rel(zero_ideal(R)).members() ==
          std::vector<elem>{0, 2, 3, 4, 6, 8, 9, 10});

  auto simple = module_cyclic(ring_zn(7), 7);
  REQUIRE(zero_divisors_on(simple).members() == std::vector<elem>{0});
}
