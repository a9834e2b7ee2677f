#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "jmodlab/harness.hpp"

using namespace jmodlab;

namespace {

CorpusContext context_from(const std::string& text) {
  return build_context(parse_corpus(text));
}

const PropertyReport& record_for(const RunResult& run, const std::string& prop,
                                 const std::string& instance_id) {
  for (const auto& r : run.records)
    if (r.prop == prop && r.instance == instance_id) return r;
  throw std::runtime_error("record not found: " + prop);
}

}  // namespace

TEST_CASE("registry shape") {
  std::set<std::string> ids;
  for (const auto& p : registry()) {
    REQUIRE(ids.insert(p.id).second);
    REQUIRE_FALSE(p.statement.empty());
  }
  REQUIRE(registry().size() == 31);
  REQUIRE(variants().size() == 4);
  REQUIRE(find_property("THM_EQ1") != nullptr);
  REQUIRE(find_property("NOPE") == nullptr);
}

TEST_CASE("resolved instance caches are consistent") {
  auto ctx = context_from("corpus t\ninstance\nring zn(12)\nend\n");
  REQUIRE(ctx.errors.empty());
  const ResolvedInstance& in = *ctx.instances[0];
  REQUIRE(in.ideals.size() == 6);
  REQUIRE(in.submods.size() == 6);
  REQUIRE(in.submods[in.zero_sub].is_zero());
  REQUIRE_FALSE(in.submods[in.full_sub].is_proper());
  REQUIRE(in.mflags.faithful);
  REQUIRE(in.mflags.multiplication);

  // <2><3> = <6> through the cached product tables
  int k2 = in.sub_index(ideal_action(ideal_generated(in.R, std::vector<elem>{2}),
                                     full_submodule(in.M))
                            .members());
  int k3 = in.sub_index(ideal_action(ideal_generated(in.R, std::vector<elem>{3}),
                                     full_submodule(in.M))
                            .members());
  int k6 = in.sprod(k2, k3);
  REQUIRE(in.submods[k6].members().members() == std::vector<elem>{0, 6});
}

TEST_CASE("single property reports") {
  auto ctx = context_from(
      "corpus t\n"
      "instance\nring zn(12)\nend\n"
      "instance\nring zn(8)\nend\n"
      "instance\nring zn(12)\nmodule cyclic(6)\nend\n");
  const ResolvedInstance& z12 = *ctx.instances[0];
  const ResolvedInstance& z8 = *ctx.instances[1];
  const ResolvedInstance& z6mod = *ctx.instances[2];

  PropertyReport eq1 = find_property("THM_EQ1")->run(z12, ctx);
  REQUIRE(eq1.status == Status::verified);
  REQUIRE(eq1.hyp == 5);  // one equivalence check per proper submodule

  PropertyReport l2 = find_property("LEM_L2")->run(z8, ctx);
  REQUIRE(l2.status == Status::verified);

  // non-faithful module: the f.g. faithful multiplication filter keeps it vacuous
  PropertyReport im = find_property("PROP_IM")->run(z6mod, ctx);
  REQUIRE(im.status == Status::vacuous);

  PropertyReport maxr = find_property("THM_MAX")->run(z8, ctx);
  REQUIRE(maxr.status == Status::verified);
  REQUIRE(maxr.note.find("singleton-reduction") != std::string::npos);

  PropertyReport ps = find_property("PROP_S")->run(z12, ctx);
  REQUIRE(ps.status == Status::verified);
  REQUIRE(ps.note.find("jacobson-matching-sets=") != std::string::npos);
}

TEST_CASE("run_corpus is deterministic across worker counts") {
  auto ctx = context_from(
      "corpus t\n"
      "instance\nring zn(12)\nend\n"
      "instance\nring zn(12)\nmodule cyclic(6)\nend\n"
      "instance\nring zn(8)\nend\n"
      "instance\nring zn(6)\nend\n");
  RunOptions one, four;
  one.jobs = 1;
  four.jobs = 4;
  RunResult a = run_corpus(ctx, one);
  RunResult b = run_corpus(ctx, four);
  REQUIRE(a.violated == 0);
  std::vector<std::string> ids;
  for (const auto& p : registry()) ids.push_back(p.id);
  REQUIRE(render_report(ctx, a, ids) == render_report(ctx, b, ids));
}

TEST_CASE("property filters") {
  auto ctx = context_from("corpus t\ninstance\nring zn(12)\nend\n");
  RunOptions opt;
  opt.props = {"THM_EQ1", "LEM_L2"};
  RunResult run = run_corpus(ctx, opt);
  REQUIRE(run.records.size() == 2);
  opt.props = {"BOGUS"};
  REQUIRE_THROWS_AS(run_corpus(ctx, opt), std::invalid_argument);
}

TEST_CASE("resolution errors are recorded, not fatal") {
  auto ctx = context_from(
      "corpus t\nmax-order 16\n"
      "instance\nring zn(40)\nend\n"
      "instance\nring zn(8)\nend\n");
  REQUIRE(ctx.errors.size() == 1);
  REQUIRE(ctx.instances.size() == 1);
  RunResult run = run_corpus(ctx);
  REQUIRE(run.errors.size() == 1);
  REQUIRE(run.violated == 0);
}

TEST_CASE("hunt V1 finds the zero submodule of Z_6 over Z_12") {
  auto ctx = context_from(
      "corpus t\n"
      "instance\nring zn(12)\nmodule cyclic(6)\nend\n"
      "instance\nring zn(12)\nend\n");
  auto hits = hunt_counterexamples(ctx, "V1");
  REQUIRE_FALSE(hits.empty());
  bool star = false;
  for (const auto& h : hits) {
    REQUIRE(revalidate_hunt_witness(ctx, "V1", h));
    if (h.ring_spec == "zn(12)" && h.module_spec == "cyclic(6)") {
      const WitnessEntry* n = h.witness.find("N");
      if (n && n->vals == std::vector<int>{0} && h.witness.find("r")->num == 2 &&
          h.witness.find("m")->num == 3)
        star = true;
    }
  }
  REQUIRE(star);
}

TEST_CASE("hunt V1 over fields comes back empty") {
  auto ctx = context_from(
      "corpus t\n"
      "instance\nring zn(5)\nend\n"
      "instance\nring zn(7)\nend\n");
  REQUIRE(hunt_counterexamples(ctx, "V1").empty());
}

TEST_CASE("hunt V2 finds a product whose factors are weakly J") {
  auto ctx = context_from(
      "corpus t\n"
      "instance\nring zn(12)\nmodule product(cyclic(6),cyclic(4))\nend\n");
  auto hits = hunt_counterexamples(ctx, "V2");
  REQUIRE_FALSE(hits.empty());
  for (const auto& h : hits) REQUIRE(revalidate_hunt_witness(ctx, "V2", h));
}

TEST_CASE("hunt V3 finds a weakly primary non weakly-J submodule") {
  auto ctx = context_from("corpus t\ninstance\nring zn(6)\nend\n");
  auto hits = hunt_counterexamples(ctx, "V3");
  REQUIRE_FALSE(hits.empty());
  for (const auto& h : hits) REQUIRE(revalidate_hunt_witness(ctx, "V3", h));
}

TEST_CASE("hunt V4 finds a J-submodule with nonzero (N:M)N") {
  auto ctx = context_from("corpus t\ninstance\nring zn(8)\nend\n");
  auto hits = hunt_counterexamples(ctx, "V4");
  REQUIRE_FALSE(hits.empty());
  const auto& h = hits[0];
  REQUIRE(h.witness.find("N")->vals == std::vector<int>{0, 2, 4, 6});
  REQUIRE(h.witness.find("a")->num == 2);
  REQUIRE(h.witness.find("n")->num == 2);
  REQUIRE(revalidate_hunt_witness(ctx, "V4", h));
  REQUIRE_THROWS_AS(hunt_counterexamples(ctx, "V9"), std::invalid_argument);
}

TEST_CASE("witness rendering is canonical") {
  Witness w;
  w.add_list("N", {0, 3}).add("r", 2).add("m", 3).add_text("tag", "x");
  REQUIRE(w.render() == "N=[0,3];r=2;m=3;tag=x");
}
