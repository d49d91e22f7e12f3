#include "doctest.h"

#include "ldlab/em.hpp"
#include "ldlab/instances.hpp"

using namespace ldlab;

namespace {

Json with_bialgebra(Json inst, const Json& section) {
  inst["bialgebra"] = section;
  inst["comonad"] = {{"kind", "bialgebra"}};
  inst.erase("negation_lift");
  return inst;
}

bool comonad_side_fails(const ComonadBundle& cb, const LindistBundle& b, const Scope& scope) {
  try {
    return !check_comonad(cb, scope).pass() || !check_monoidal_comonad(cb, b.star, Side::star, scope).pass() ||
           !check_monoidal_comonad(cb, b.par, Side::par, scope).pass() || !check_L1(cb, b, scope).pass() ||
           !check_L2(cb, b, scope).pass();
  } catch (const LawError&) {
    return true;
  }
}

Mor flipped(const MatrixCategory& cat, const Mor& f, std::size_t i, std::size_t j) {
  Matrix x = f.matrix();
  x.set(i, j, (x(i, j) + 1) % cat.prime());
  return cat.morphism(f.dom, f.cod, std::move(x));
}

}  // namespace

TEST_CASE("the unit bialgebra on Ł3 gives the identity comonad") {
  const Model m = load_model(with_bialgebra(gen_lukasiewicz(3), {{"carrier", 0}}));
  REQUIRE(m.comonad);
  const auto& cb = *m.comonad;
  for (const auto a : m.scope.objects) CHECK(cb.G(a).id == a.id);
  CHECK(check_bialgebra(*m.bialgebra, *m.lindist, m.scope).pass());
  CHECK(check_comonad(cb, m.scope).pass());
  CHECK(check_monoidal_comonad(cb, m.lindist->star, Side::star, m.scope).pass());
  CHECK(check_monoidal_comonad(cb, m.lindist->par, Side::par, m.scope).pass());
  CHECK(check_L1(cb, *m.lindist, m.scope).pass());
  CHECK(check_L2(cb, *m.lindist, m.scope).pass());
}

TEST_CASE("the top of Ł3 is not a bialgebra") {
  const Json inst = with_bialgebra(gen_lukasiewicz(3), {{"carrier", 2}});
  try {
    load_model(inst);
    FAIL("expected a precondition error");
  } catch (const PreconditionError& e) {
    REQUIRE(e.report().failing() == std::vector<std::string>{"comonad"});
    CHECK(e.report().axioms[0].counterexamples[0].kind == "witness-missing");
  }
}

TEST_CASE("the bialgebra comonad of a group algebra matches the Hopf comonad") {
  const Json hopf_inst = gen_group_hopf_instance(2, 2, 2);
  Json section = hopf_inst["hopf"];
  section.erase("s");
  const Model b = load_model(with_bialgebra(hopf_inst, section));
  const Model h = load_model(hopf_inst);
  const Category& C = *b.cat;
  for (const auto x : b.scope.objects) {
    CAPTURE(x.id);
    CHECK(b.comonad->G(x).id == h.comonad->G(x).id);
    CHECK(C.equal(b.comonad->delta(x), h.comonad->delta(x)));
    CHECK(C.equal(b.comonad->eps(x), h.comonad->eps(x)));
    for (const auto y : b.scope.objects) {
      CHECK(C.equal((*b.comonad->phi)(x, y), (*h.comonad->phi)(x, y)));
      CHECK(C.equal((*b.comonad->psi)(x, y), (*h.comonad->psi)(x, y)));
    }
  }
  CHECK(C.equal((*b.comonad->phi0)(), (*h.comonad->phi0)()));
}

TEST_CASE("breaking any bialgebra entry breaks the comonad") {
  const Model m = load_model(gen_group_hopf_instance(2, 2, 2));
  const MatrixCategory& cat = *m.matrix;
  const Bialgebra good = m.hopf->bialgebra();
  REQUIRE(check_bialgebra(good, *m.lindist, m.scope).pass());
  REQUIRE_FALSE(comonad_side_fails(comonad_from_bialgebra(good, *m.lindist, m.scope), *m.lindist, m.scope));

  std::size_t mutants = 0;
  for (Mor Bialgebra::*part : {&Bialgebra::mu, &Bialgebra::eta, &Bialgebra::d, &Bialgebra::cu}) {
    const Mor& f = good.*part;
    for (std::size_t i = 0; i < f.matrix().rows(); ++i) {
      for (std::size_t j = 0; j < f.matrix().cols(); ++j) {
        Bialgebra bad = good;
        bad.*part = flipped(cat, f, i, j);
        CAPTURE(i);
        CAPTURE(j);
        CHECK_FALSE(check_bialgebra(bad, *m.lindist, m.scope).pass());
        CHECK_THROWS_AS(comonad_from_bialgebra(bad, *m.lindist, m.scope), PreconditionError);
        CHECK(comonad_side_fails(comonad_from_bialgebra_unchecked(bad, *m.lindist), *m.lindist, m.scope));
        ++mutants;
      }
    }
  }
  // μ and d are 2×4 and 4×2, η and cu are 2×1 and 1×2.
  CHECK(mutants == 20);
}

TEST_CASE("the trivial group gives the identity comonad with identity lift") {
  for (std::uint32_t p : {2U, 3U}) {
    CAPTURE(p);
    const Model m = load_model(gen_group_hopf_instance(p, 1, 2));
    const Category& C = *m.cat;
    for (const auto a : m.scope.objects) {
      CHECK(m.comonad->G(a).id == a.id);
      CHECK(C.equal(m.comonad->delta(a), C.identity(a)));
      CHECK(C.equal(m.comonad->eps(a), C.identity(a)));
      CHECK(C.equal(m.lift->nu(a), C.identity(a)));
      CHECK(C.equal(m.lift->nup(a), C.identity(a)));
    }
  }
}

TEST_CASE("ν is recovered from its lifted functor") {
  for (const Json& inst : {with_interior_comonad(gen_lukasiewicz(3), {0, 0, 2}), gen_group_hopf_instance(2, 2, 2)}) {
    const Model m = load_model(inst);
    CAPTURE(m.name);
    const auto& cb = *m.comonad;
    const ContraFunctor& S = m.negation->S;
    const Family1 nu = m.lift->nu;
    const auto lifted = [&](const Coalgebra& c) { return lift_negation_functor(cb, S, nu, c); };
    const Family1 back = nu_from_lifted_functor(cb, S, lifted, m.scope);
    for (const auto a : m.scope.objects) CHECK(m.cat->equal(back(a), nu(a)));
  }
}

TEST_CASE("the lifted negation sends the coalgebra 0 to 1 on Ł3") {
  const Model m = load_model(with_interior_comonad(gen_lukasiewicz(3), {0, 0, 2}));
  const Coalgebra zero{Obj{0}, m.cat->identity(Obj{0})};
  const Coalgebra s = lift_negation_functor(*m.comonad, m.negation->S, m.lift->nu, zero);
  CHECK(s.carrier.id == 2);
  CHECK(s.gamma.cod.id == 2);
}
