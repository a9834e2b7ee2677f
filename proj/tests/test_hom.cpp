#include <catch2/catch_amalgamated.hpp>

#include "jmodlab/hom.hpp"

using namespace jmodlab;

TEST_CASE("endomorphisms of a cyclic module") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  auto homs = enumerate_homs(M, M);
  REQUIRE(homs.ok);
  REQUIRE(homs.homs.size() == 6);  // one per image of the generator

  bool has_identity = false;
  for (const auto& h : homs.homs) {
    // independent linearity re-check
    for (std::size_t a = 0; a < M->order(); ++a) {
      for (std::size_t b = 0; b < M->order(); ++b)
        REQUIRE(h.map[M->add(elem(a), elem(b))] == M->add(h.map[a], h.map[b]));
      for (std::size_t r = 0; r < R->order(); ++r)
        REQUIRE(h.map[M->act(elem(r), elem(a))] == M->act(elem(r), h.map[a]));
    }
    bool id = true;
    for (std::size_t a = 0; a < M->order(); ++a)
      if (h.map[a] != a) id = false;
    has_identity |= id;
  }
  REQUIRE(has_identity);
}

TEST_CASE("only the zero map between incompatible cyclics") {
  auto R = ring_zn(6);
  auto homs = enumerate_homs(module_cyclic(R, 2), module_cyclic(R, 3));
  REQUIRE(homs.ok);
  REQUIRE(homs.homs.size() == 1);
  REQUIRE(homs.homs[0].map == std::vector<elem>{0, 0});
}

TEST_CASE("image, kernel, preimage") {
  auto R = ring_zn(12);
  auto M = module_cyclic(R, 6);
  auto homs = enumerate_homs(M, M);
  const ModuleHom* dbl = nullptr;
  for (const auto& h : homs.homs)
    if (h.map[1] == 2) dbl = &h;
  REQUIRE(dbl != nullptr);

  REQUIRE(hom_kernel(*dbl).members().members() == std::vector<elem>{0, 3});
  REQUIRE(hom_image(*dbl, full_submodule(M)).members().members() ==
          std::vector<elem>{0, 2, 4});
  std::vector<elem> g = {2};
  REQUIRE(hom_preimage(*dbl, submodule_generated(M, g)).members().members() ==
          std::vector<elem>{0, 1, 2, 3, 4, 5});
  REQUIRE_FALSE(dbl->is_injective());
  REQUIRE_FALSE(dbl->is_surjective());
}

TEST_CASE("projection from the self module onto a cyclic quotient") {
  auto R = ring_zn(12);
  auto homs = enumerate_homs(module_self(R), module_cyclic(R, 6));
  REQUIRE(homs.ok);
  REQUIRE(homs.homs.size() == 6);
  const ModuleHom* proj = nullptr;
  for (const auto& h : homs.homs)
    if (h.map[1] == 1) proj = &h;
  REQUIRE(proj != nullptr);
  REQUIRE(proj->is_surjective());
  REQUIRE(hom_kernel(*proj).members().members() == std::vector<elem>{0, 6});
}

TEST_CASE("generator counts") {
  auto R = ring_zn(2);
  auto M = module_product({module_cyclic(R, 2), module_cyclic(R, 2)});
  REQUIRE(minimal_generators(M).size() == 2);
  REQUIRE(minimal_generators(module_self(ring_zn(36))).size() == 1);
  auto big = module_product(
      {module_cyclic(R, 2), module_cyclic(R, 2), module_cyclic(R, 2), module_cyclic(R, 2)});
  REQUIRE_FALSE(enumerate_homs(big, big, 3).ok);  // needs four generators
}
