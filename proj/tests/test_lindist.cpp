#include "doctest.h"

#include "ldlab/commands.hpp"
#include "ldlab/instances.hpp"
#include "ldlab/kernel.hpp"

using namespace ldlab;

TEST_CASE("derived par on Ł3 is min(1, a+b)") {
  const Model m = load_model(gen_lukasiewicz(3));
  const auto st = star_from_lindist(*m.lindist, *m.negation, m.scope);
  const auto back = lindist_from_star_unchecked(st.star);
  for (std::uint32_t a = 0; a < 3; ++a) {
    for (std::uint32_t b = 0; b < 3; ++b) {
      // Index arithmetic on the chain {0, 1/2, 1}: min(1, a/2 + b/2) = min(2, a+b)/2.
      CHECK(back.bundle.par(Obj{a}, Obj{b}).id == std::min(2U, a + b));
    }
  }
  CHECK(back.bundle.par.unit.id == 0);
}

TEST_CASE("round trip reproduces the Łukasiewicz tables") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const Model m = load_model(gen_lukasiewicz(n));
    CAPTURE(n);
    CHECK(check_round_trip(*m.lindist, *m.negation, m.scope).pass());
  }
}

TEST_CASE("round trip on compact matrices") {
  const Model m = load_model(gen_matrix_compact(2, 3));
  const CheckReport r = check_round_trip(*m.lindist, *m.negation, m.scope);
  CHECK(r.pass());
  CHECK_FALSE(r.find("star-iso")->vacuous());
}

TEST_CASE("star-autonomous data on matrices passes its suite and translates") {
  const Model m = load_model(gen_matrix_compact(3, 2));
  REQUIRE(m.star);
  CHECK(check_star_suite(*m.star, m.scope).pass());
  const auto t = lindist_from_star(*m.star, m.scope);
  CHECK(check_lindist_suite(t.bundle, &t.negation, m.scope).pass());
}

TEST_CASE("star_from_lindist refuses a broken bundle") {
  const Json bad = mutate(gen_lukasiewicz(3),
                          {{"kind", "table-entry"}, {"target", "lindist.star"}, {"at", {0, 1}}, {"value", 1}});
  const Model m = load_model(bad);
  CHECK_THROWS_AS(star_from_lindist(*m.lindist, *m.negation, m.scope), PreconditionError);
}

TEST_CASE("a broken negation fails a triangle identity") {
  const Json bad =
      mutate(gen_lukasiewicz(3), {{"kind", "table-entry"}, {"target", "negation.S"}, {"at", {1}}, {"value", 2}});
  const Model m = load_model(bad);
  const CheckReport r = check_triangle_identities(*m.lindist, *m.negation, m.scope);
  CHECK_FALSE(r.pass());
}

TEST_CASE("the identity is not a symmetry on compact matrices") {
  const Model m = load_model(gen_matrix_compact(2, 3));
  LindistBundle b = *m.lindist;
  const auto cat = m.matrix;
  b.sym_star = [cat](Obj a, Obj y) { return cat->identity(Obj{a.id * y.id}); };
  const CheckReport r = check_lindist_suite(b, nullptr, m.scope);
  REQUIRE(r.find("sym") != nullptr);
  CHECK_FALSE(r.passes("sym"));
}

TEST_CASE("a zero n breaks the triangle identities on matrices") {
  const Model m = load_model(gen_matrix_compact(2, 2));
  NegationStructure neg = *m.negation;
  const auto cat = m.matrix;
  neg.n = [cat](Obj a) { return cat->morphism(Obj{1}, Obj{a.id * a.id}, Matrix(cat->prime(), a.id * a.id, 1)); };
  REQUIRE(check_triangle_identities(*m.lindist, *m.negation, m.scope).pass());
  const CheckReport r = check_triangle_identities(*m.lindist, neg, m.scope);
  CHECK_FALSE(r.passes("tri-1"));
  CHECK_FALSE(r.passes("tri-2"));
}

TEST_CASE("zeroing one evaluation map breaks the hom bijection") {
  const Model m = load_model(gen_matrix_compact(2, 2));
  StarAutonomousStructure sa = *m.star;
  REQUIRE(check_star_hom_bijection(sa, m.scope).pass());
  const auto cat = m.matrix;
  const Family2 eval = sa.eval;
  sa.eval = [cat, eval](Obj a, Obj b) {
    const Mor e = eval(a, b);
    if (a.id != 2 || b.id != 2) return e;
    return cat->morphism(e.dom, e.cod, Matrix(cat->prime(), e.cod.id, e.dom.id));
  };
  CHECK_FALSE(check_star_hom_bijection(sa, m.scope).pass());
}

TEST_CASE("a removed ∂l witness on Ł3 is reported at its triple") {
  const Json bad = mutate(gen_lukasiewicz(3),
                          {{"kind", "missing-witness"}, {"target", "lindist.dl"}, {"at", {2, 1, 0}}});
  const Model m = load_model(bad);
  const CheckReport r = check_lindist(*m.lindist, m.scope);
  REQUIRE_FALSE(r.passes("lindist-nat"));
  bool named = false;
  for (const auto& c : r.find("lindist-nat")->counterexamples) {
    named = named || (c.kind == "witness-missing" && c.tuple == std::vector<std::string>{"(1 ≤ 1)", "1/2", "0"});
  }
  CHECK(named);
  CHECK_THROWS_AS(mutate(gen_lukasiewicz(3), {{"kind", "missing-witness"}, {"target", "lindist.star"}, {"at", {0, 0, 0}}}),
                  SchemaError);
}

TEST_CASE("a corrupted composition entry fails the category laws") {
  const Model base = load_model(with_interior_comonad(gen_lukasiewicz(3), {0, 0, 2}));
  const CommandResult lifted = cmd_lift(base.source, {});
  REQUIRE(lifted.artifact);
  REQUIRE(check_category_laws(*load_model(*lifted.artifact).cat, load_model(*lifted.artifact).scope).pass());
  const Json bad = mutate(*lifted.artifact,
                          {{"kind", "table-entry"}, {"target", "backend.composition"}, {"at", {3, 2}}, {"value", 1}});
  const Model m = load_model(bad);
  const CheckReport r = check_category_laws(*m.cat, m.scope);
  REQUIRE_FALSE(r.passes("cat"));
  CHECK(r.find("cat")->counterexamples.front().tuple == std::vector<std::string>{"(1 ≤ 1)"});
}
