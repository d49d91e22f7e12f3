#include <algorithm>

#include "doctest.h"

#include "ldlab/commands.hpp"
#include "ldlab/instances.hpp"

using namespace ldlab;

namespace {

bool reports_failure(const Json& report, const std::string& id) {
  for (const auto& a : report["axioms"]) {
    if (a["id"] == id && a["verdict"] == "fail") return true;
  }
  return false;
}

}  // namespace

TEST_CASE("validate exit codes") {
  const Json l3 = gen_lukasiewicz(3);
  CHECK(cmd_validate(l3, {}).exit_code == kPass);

  const Json bad = mutate(l3, {{"kind", "table-entry"}, {"target", "lindist.star"}, {"at", {0, 1}}, {"value", 1}});
  const CommandResult r = cmd_validate(bad, {});
  CHECK(r.exit_code == kFail);
  CHECK(reports_failure(r.report, "mon-⋆"));

  Json unknown = l3;
  unknown["colour"] = "blue";
  CHECK(cmd_validate(unknown, {}).exit_code == kSchema);

  CommandOptions only_comonad;
  only_comonad.axioms = {"comonad"};
  CHECK(cmd_validate(l3, only_comonad).exit_code == kPrecondition);

  CommandOptions nonsense;
  nonsense.axioms = {"no-such-axiom"};
  CHECK(cmd_validate(l3, nonsense).exit_code == kSchema);
}

TEST_CASE("axiom filter restricts the report") {
  CommandOptions opts;
  opts.axioms = {"mon-star", "tri-1"};
  const CommandResult r = cmd_validate(gen_lukasiewicz(4), opts);
  CHECK(r.exit_code == kPass);
  std::vector<std::string> ids;
  for (const auto& a : r.report["axioms"]) ids.push_back(a["id"]);
  CHECK(ids == std::vector<std::string>{"mon-⋆", "tri-1"});
}

TEST_CASE("axiom families expand next to named groups") {
  CommandOptions opts;
  opts.axioms = {"comonad", "monoidal", "L1", "L2", "nu"};
  const CommandResult r = cmd_validate(gen_group_hopf_instance(2, 2, 2), opts);
  CHECK(r.exit_code == kPass);
  std::vector<std::string> ids;
  for (const auto& a : r.report["axioms"]) ids.push_back(a["id"]);
  CHECK(ids == std::vector<std::string>{"comonad", "moncom-⋆", "moncom-⋄", "L1", "L2", "nu-1", "nu-2"});
}

TEST_CASE("generated bialgebra comonads validate") {
  const CommandResult unit = cmd_generate("lukasiewicz", {{"n", "3"}, {"comonad", "bialgebra"}, {"b", "0"}});
  REQUIRE(unit.exit_code == kPass);
  const CommandResult v = cmd_validate(*unit.artifact, {});
  CHECK(v.exit_code == kPass);
  CHECK(std::find(v.report["groups"].begin(), v.report["groups"].end(), "bialgebra") != v.report["groups"].end());

  CHECK(cmd_generate("lukasiewicz", {{"n", "3"}, {"comonad", "bialgebra"}, {"b", "2"}}).exit_code == kPrecondition);

  const CommandResult group = cmd_generate("group-hopf", {{"p", "2"}, {"m", "2"}, {"comonad", "bialgebra"}});
  REQUIRE(group.exit_code == kPass);
  CHECK(cmd_validate(*group.artifact, {}).exit_code == kPass);

  const Json broken = mutate(*group.artifact,
                             {{"kind", "matrix-entry"}, {"target", "bialgebra.cu"}, {"at", {0, 1}}, {"value", 0}});
  const CommandResult b = cmd_validate(broken, {});
  CHECK(b.exit_code == kFail);
  CHECK(reports_failure(b.report, "comonad"));
}

TEST_CASE("short backend kinds are accepted") {
  for (const auto& [long_name, short_name] : std::vector<std::pair<Json, std::string>>{
           {gen_lukasiewicz(3), "thin"}, {gen_matrix_compact(2, 2), "matrix"}}) {
    Json alias = long_name;
    alias["backend"]["kind"] = short_name;
    const Json a = cmd_validate(long_name, {}).report;
    const Json b = cmd_validate(alias, {}).report;
    CHECK(a["axioms"] == b["axioms"]);
    CHECK(a["overall"] == "pass");
  }
}

TEST_CASE("scope flag narrows the checked objects") {
  CommandOptions opts;
  opts.scope = "0,1";
  const CommandResult r = cmd_validate(gen_lukasiewicz(3), opts);
  CHECK(r.report["scope"]["objects"].size() == 2);
}

TEST_CASE("commands that need a comonad report a precondition error") {
  const Json l3 = gen_lukasiewicz(3);
  CHECK(cmd_coincide(l3, {}).exit_code == kPrecondition);
  CHECK(cmd_lift(l3, {}).exit_code == kPrecondition);
  CHECK(cmd_compact(with_identity_comonad(l3), {}).exit_code == kPrecondition);
  CHECK(cmd_search(gen_matrix_compact(2, 2), {}).exit_code == kPrecondition);
}

TEST_CASE("translate to star reproduces the native par") {
  const CommandResult r = cmd_translate(gen_lukasiewicz(3), "star", {});
  CHECK(r.exit_code == kPass);
  CHECK(r.report["derived_par_matches"] == true);
  CHECK(r.report["derived_par"].size() == 9);
}

TEST_CASE("mutations are recorded and replayed") {
  const Json base = gen_group_hopf_instance(2, 2, 2);
  const CommandResult r = cmd_mutate(base, {{"kind", "zero-nu"}, {"note", "ν := 0"}});
  REQUIRE(r.artifact);
  CHECK((*r.artifact)["mutations"].size() == 1);
  CHECK(cmd_validate(*r.artifact, {}).exit_code == kFail);
  CHECK(cmd_mutate(gen_lukasiewicz(3), {{"kind", "zero-nu"}}).exit_code == kSchema);
  CHECK(cmd_mutate(base, {{"kind", "no-such-kind"}}).exit_code == kSchema);
}

TEST_CASE("generate validates its parameters") {
  CHECK(cmd_generate("lukasiewicz", {{"n", "4"}}).exit_code == kPass);
  CHECK(cmd_generate("lukasiewicz", {{"n", "1"}}).exit_code != kPass);
  CHECK(cmd_generate("matrix-compact", {{"p", "4"}, {"dmax", "2"}}).exit_code != kPass);
  CHECK(cmd_generate("no-such-generator", {}).exit_code == kSchema);
  const CommandResult r = cmd_generate("lukasiewicz", {{"n", "3"}, {"comonad", "interior"}, {"g", "0,0,2"}});
  REQUIRE(r.artifact);
  CHECK(cmd_validate(*r.artifact, {}).exit_code == kPass);
}

TEST_CASE("every corpus entry meets its manifest") {
  for (const auto& e : seed_corpus()) {
    CAPTURE(e.file);
    const CommandResult v = cmd_validate(e.instance, {});
    CHECK((v.exit_code == kPass) == (e.expect["validate"] == "pass"));
    for (const auto& id : e.failing) CHECK(reports_failure(v.report, id));
    if (e.expect.contains("coincide")) {
      const CommandResult c = cmd_coincide(e.instance, {});
      CHECK(c.report["agreement"] == true);
      CHECK((c.exit_code == kPass) == (e.expect["coincide"] == "pass"));
    }
    if (e.expect.contains("equivalence")) CHECK(cmd_equivalence(e.instance, {}).report["agreement"] == true);
  }
}

TEST_CASE("reports are deterministic") {
  const Json inst = with_interior_comonad(gen_lukasiewicz(3), {0, 0, 2});
  CHECK(cmd_validate(inst, {}).report.dump() == cmd_validate(inst, {}).report.dump());
  CHECK(cmd_coincide(inst, {}).report.dump() == cmd_coincide(inst, {}).report.dump());
  CHECK(digest(inst) == digest(Json::parse(inst.dump())));
  CHECK(digest(inst).size() == 16);
}

TEST_CASE("the enumeration bound is enforced") {
  const Model m = load_model(gen_lukasiewicz(9));
  CHECK_THROWS_AS(enumerate_interior_comonads(m), ScopeTooLarge);
}
