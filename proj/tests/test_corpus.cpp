#include <catch2/catch_amalgamated.hpp>

#include "jmodlab/corpus.hpp"

using namespace jmodlab;

namespace {

const char* kSample = R"(# sample corpus
corpus mini
max-order 36

instance
  ring zn(12)
  module cyclic(6)
  submodule N [3]
  subset S [2]
end

instance
  ring product( zn(2), zn(3) )   # whitespace tolerated
end
)";

}  // namespace

TEST_CASE("corpus parsing and canonicalization") {
  CorpusFile c = parse_corpus(kSample);
  REQUIRE(c.name == "mini");
  REQUIRE(c.max_order == 36);
  REQUIRE(c.instances.size() == 2);

  REQUIRE(c.instances[0].ring_text == "zn(12)");
  REQUIRE(c.instances[0].module_text == "cyclic(6)");
  REQUIRE(c.instances[0].submodules.size() == 1);
  REQUIRE(c.instances[0].submodules[0].name == "N");
  REQUIRE(c.instances[0].submodules[0].elems == std::vector<elem>{3});
  REQUIRE(c.instances[0].subsets.size() == 1);

  // module defaults to self and whitespace is normalized away
  REQUIRE(c.instances[1].ring_text == "product(zn(2),zn(3))");
  REQUIRE(c.instances[1].module_text == "self");

  // ids and hash are deterministic
  CorpusFile again = parse_corpus(kSample);
  REQUIRE(again.hash == c.hash);
  REQUIRE(again.instances[0].id == c.instances[0].id);
  REQUIRE(c.instances[0].id != c.instances[1].id);
}

TEST_CASE("corpus errors carry line numbers") {
  REQUIRE_THROWS_WITH(parse_corpus("instance\nring zn(12)\n"),
                      Catch::Matchers::ContainsSubstring("unterminated"));
  REQUIRE_THROWS_WITH(parse_corpus("instance\nring bogus(3)\nend\n"),
                      Catch::Matchers::ContainsSubstring("line 2"));
  REQUIRE_THROWS_WITH(parse_corpus("instance\nmodule cyclic(2)\nend\n"),
                      Catch::Matchers::ContainsSubstring("missing a ring"));
  REQUIRE_THROWS_WITH(parse_corpus("frobnicate 3\n"),
                      Catch::Matchers::ContainsSubstring("unknown directive"));
  REQUIRE_THROWS_WITH(parse_corpus("instance\nring zn(12)\nsubmodule N 3,4\nend\n"),
                      Catch::Matchers::ContainsSubstring("element list"));
}

TEST_CASE("descriptor round trips") {
  for (const char* spec :
       {"zn(12)", "product(zn(2),zn(3))", "quotient(zn(36),[6])",
        "idealization(zn(4),cyclic(2))", "localization(zn(6),[3])",
        "idealization(zn(2),product(cyclic(2),cyclic(2)))"}) {
    REQUIRE(parse_ring_spec(spec).canonical() == spec);
  }
  for (const char* spec :
       {"self", "cyclic(6)", "product(cyclic(2),cyclic(4))",
        "quotient(self,[4])", "submodule(cyclic(6),[2])"}) {
    REQUIRE(parse_module_spec(spec).canonical() == spec);
  }
  REQUIRE_THROWS_AS(parse_ring_spec("zn(12) junk"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_module_spec("cyclic"), std::invalid_argument);
}

TEST_CASE("descriptor resolution") {
  auto R = resolve_ring("quotient(zn(36),[6])", 36);
  REQUIRE(R->order() == 6);
  REQUIRE(resolve_ring("localization(zn(12),[2])", 36)->order() == 3);
  REQUIRE(resolve_ring("idealization(zn(4),cyclic(2))", 36)->order() == 8);

  auto M = resolve_module(ring_zn(12), "quotient(self,[4])", 36);
  REQUIRE(M->order() == 4);
  REQUIRE(resolve_module(ring_zn(12), "submodule(cyclic(6),[2])", 36)->order() == 3);

  REQUIRE_THROWS_AS(resolve_ring("zn(40)", 36), std::invalid_argument);
  REQUIRE_THROWS_AS(resolve_module(ring_zn(12), "cyclic(5)", 36), std::invalid_argument);
}
