#include <algorithm>

#include "doctest.h"

#include "ldlab/instances.hpp"
#include "ldlab/kernel.hpp"

using namespace ldlab;

namespace {

// Composable generator triples in an n-element chain: a ≤ b ≤ c ≤ d, that is
// nondecreasing 4-tuples, counted directly.
std::uint64_t chain_triples(std::uint32_t n) {
  std::uint64_t count = 0;
  for (std::uint32_t a = 0; a < n; ++a)
    for (std::uint32_t b = a; b < n; ++b)
      for (std::uint32_t c = b; c < n; ++c)
        for (std::uint32_t d = c; d < n; ++d) ++count;
  return count;
}

}  // namespace

TEST_CASE("category laws on a chain count every tuple") {
  for (std::uint32_t n : {2U, 3U, 4U}) {
    const Model m = load_model(gen_lukasiewicz(n));
    const CheckReport r = check_category_laws(*m.cat, m.scope);
    REQUIRE(r.pass());
    const std::uint64_t arrows = n * (n + 1) / 2;
    CHECK(r.find("cat")->checked == 2 * arrows + chain_triples(n));
  }
}

TEST_CASE("Łukasiewicz tables match the closed formulas") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const Model m = load_model(gen_lukasiewicz(n));
    REQUIRE(m.lindist);
    REQUIRE(m.negation);
    const auto& b = *m.lindist;
    const double top = n - 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      const double x = i / top;
      CHECK(m.negation->S(Obj{i}).id / top == doctest::Approx(1.0 - x));
      for (std::uint32_t j = 0; j < n; ++j) {
        const double y = j / top;
        CHECK(b.star(Obj{i}, Obj{j}).id / top == doctest::Approx(std::max(0.0, x + y - 1.0)));
        CHECK(b.par(Obj{i}, Obj{j}).id / top == doctest::Approx(std::min(1.0, x + y)));
      }
    }
    CHECK(b.star.unit.id == n - 1);
    CHECK(b.par.unit.id == 0);
  }
}

TEST_CASE("Łukasiewicz chains pass the full lindist suite") {
  for (std::uint32_t n = 2; n <= 6; ++n) {
    const Model m = load_model(gen_lukasiewicz(n));
    const CheckReport r = check_lindist_suite(*m.lindist, &*m.negation, m.scope);
    CAPTURE(n);
    CHECK(r.pass());
    for (const char* id : {"cat", "mon-⋆", "mon-⋄", "sym", "lindist-nat", "coh-subset", "tri-1", "tri-2",
                           "tri-3", "tri-4"}) {
      CAPTURE(id);
      REQUIRE(r.find(id) != nullptr);
      CHECK_FALSE(r.find(id)->vacuous());
    }
  }
}

TEST_CASE("a single flipped ⋆ entry breaks monoidal associativity") {
  const Json bad = mutate(gen_lukasiewicz(3),
                          {{"kind", "table-entry"}, {"target", "lindist.star"}, {"at", {0, 1}}, {"value", 1}});
  const Model m = load_model(bad);
  const CheckReport r = check_monoidal_laws(*m.cat, m.lindist->star, m.scope);
  CHECK_FALSE(r.pass());
  CHECK_FALSE(r.find("mon-⋆")->counterexamples.empty());
  // Every object triple is visited by the object-level associativity scan.
  CHECK(r.find("mon-⋆")->checked >= 27);
}

TEST_CASE("thin arrows exist exactly below the order") {
  const ThinCategory c = ThinCategory::chain({"a", "b", "c"});
  CHECK(c.hom_size(Obj{0}, Obj{2}) == 1);
  CHECK(c.hom_size(Obj{2}, Obj{0}) == 0);
  CHECK_THROWS_AS(c.arrow(Obj{2}, Obj{1}), MissingWitness);
  CHECK_THROWS_AS(c.compose(c.arrow(Obj{0}, Obj{1}), c.arrow(Obj{1}, Obj{2})), CompositionError);
}

TEST_CASE("matrix hom-sets above the limit are replaced by a spanning set") {
  const MatrixCategory c(2, {Obj{1}, Obj{2}, Obj{3}});
  CHECK(c.hom_size(Obj{2}, Obj{2}) == 16);
  CHECK(c.hom(Obj{2}, Obj{2}).size() == 16);
  const auto gens = c.hom_generators(Obj{3}, Obj{3}, 64);
  CHECK(c.spans_only(Obj{3}, Obj{3}, 64));
  CHECK(gens.size() == 1 + 9);
}
