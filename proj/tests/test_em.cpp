#include "doctest.h"

#include "ldlab/instances.hpp"
#include "ldlab/star_comonad.hpp"

using namespace ldlab;

namespace {

// For an interior comonad on a chain the coalgebras are the fixed points of g,
// each with its unique coaction.
std::size_t fixed_points(const std::vector<std::uint32_t>& g) {
  std::size_t n = 0;
  for (std::uint32_t a = 0; a < g.size(); ++a) n += g[a] == a;
  return n;
}

}  // namespace

TEST_CASE("coalgebras of an interior comonad are its fixed points") {
  for (const auto& g : {std::vector<std::uint32_t>{0, 0, 2}, std::vector<std::uint32_t>{0, 1, 2},
                        std::vector<std::uint32_t>{0, 1, 1}}) {
    const Model m = load_model(with_interior_comonad(gen_lukasiewicz(3), g));
    CHECK(enumerate_coalgebras(*m.comonad, m.scope).size() == fixed_points(g));
  }
}

TEST_CASE("the coalgebra category of an interior comonad is a lindist category") {
  const Model m = load_model(with_interior_comonad(gen_lukasiewicz(3), {0, 0, 2}));
  const EMCategory em = build_em_category(*m.comonad, *m.lindist, &*m.negation, &*m.lift, m.scope);
  CHECK(em.objects.size() == 2);
  CHECK(em.report.pass());
  REQUIRE(em.negation);
  CHECK(check_lindist_suite(em.lindist, &*em.negation, em.scope()).pass());
}

TEST_CASE("lift output re-validates") {
  const Json inst = gen_group_hopf_instance(2, 2, 2);
  const Model m = load_model(inst);
  const EMCategory em = build_em_category(*m.comonad, *m.lindist, &*m.negation, &*m.lift, m.scope);
  const Json out = export_em(em, "lifted", inst);
  const Model lifted = load_model(out);
  REQUIRE(lifted.table);
  CHECK(lifted.table->object_count() == em.objects.size());
  CHECK(check_lindist_suite(*lifted.lindist, &*lifted.negation, lifted.scope).pass());
}

TEST_CASE("lifted distributions are coalgebra morphisms") {
  const Model m = load_model(gen_group_hopf_instance(2, 2, 2));
  const auto coalgebras = enumerate_coalgebras(*m.comonad, m.scope);
  const CheckReport r = check_lifted_distributions(*m.comonad, *m.lindist, coalgebras);
  CHECK(r.pass());
  CHECK_FALSE(r.find("L1")->vacuous());
  CHECK_FALSE(r.find("L2")->vacuous());
}

TEST_CASE("a failing comonad blocks the coalgebra construction") {
  const Json bad = mutate(gen_group_hopf_instance(2, 2, 2), {{"kind", "drop-swap-in-phi"}});
  const Model m = load_model(bad);
  CHECK_THROWS_AS(build_em_category(*m.comonad, *m.lindist, &*m.negation, &*m.lift, m.scope), PreconditionError);
}

TEST_CASE("zero ν fails the lifting square but not the primed axioms") {
  const Model m = load_model(mutate(gen_group_hopf_instance(2, 2, 2), {{"kind", "zero-nu"}}));
  const auto eq = checker_equivalence_suite(*m.comonad, *m.lindist, *m.negation, *m.lift, m.scope);
  CHECK(eq.agree());
  CHECK_FALSE(eq.axioms.passes("Le"));
  CHECK_FALSE(eq.axioms.passes("Ln"));
  CHECK_FALSE(check_nu(*m.comonad, m.negation->S, m.negation->Sp, *m.lift, m.scope).pass());
}

TEST_CASE("the correspondence table") {
  const Json t = bv_correspondence();
  REQUIRE(t["rows"].size() == 4);
  CHECK(t["rows"][0]["id"] == "BV-23");
  CHECK(t["rows"][3]["id"] == "BV-20");
  CHECK(t["text"] == "(5)↔23, (6)↔22, (7)↔21, (8)↔20");
}

TEST_CASE("compact check refuses a non-compact bundle") {
  const Model m = load_model(with_identity_comonad(gen_lukasiewicz(3)));
  CHECK_THROWS_AS(compact_hopf_check(*m.comonad, *m.lindist, *m.negation, *m.lift, m.scope), NotCompact);
}

TEST_CASE("compact check on group algebras") {
  for (auto [p, mm] : {std::pair{2U, 2U}, std::pair{3U, 3U}}) {
    const Model m = load_model(gen_group_hopf_instance(p, mm, 2));
    const CompactResult r = compact_hopf_check(*m.comonad, *m.lindist, *m.negation, *m.lift, m.scope);
    CHECK(r.pass());
    for (const char* id : {"BV-20", "BV-21", "BV-22", "BV-23"}) CHECK(r.report.find(id) != nullptr);
  }
}

TEST_CASE("the two axiomatizations agree on the identity comonad") {
  const Model m = load_model(with_identity_comonad(gen_matrix_compact(2, 2)));
  CoincidenceInput in{m.lindist, m.negation, m.star, *m.comonad, *m.lift};
  const CoincidenceResult r = notions_coincide(in, m.scope);
  CHECK(r.agree());
  CHECK(r.lindist_side.pass());
  CHECK(r.star_side.pass());
}
