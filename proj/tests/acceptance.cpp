#include <chrono>
#include <cstdio>
#include <functional>
#include <string>

#include "ldlab/commands.hpp"
#include "ldlab/instances.hpp"
#include "ldlab/star_comonad.hpp"

using namespace ldlab;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

int failures = 0;

void criterion(int number, const std::string& title, double budget_s, const std::function<Outcome()>& body) {
  const auto start = std::chrono::steady_clock::now();
  Outcome o;
  try {
    o = body();
  } catch (const std::exception& e) {
    o = {false, std::string("exception: ") + e.what()};
  }
  const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  if (budget_s > 0 && elapsed > budget_s) {
    o.pass = false;
    o.detail += " (over the " + std::to_string(budget_s) + " s budget)";
  }
  if (!o.pass) ++failures;
  std::printf("%s criterion %d: %s [%.2f s] %s\n", o.pass ? "PASS" : "FAIL", number, title.c_str(), elapsed,
              o.detail.c_str());
}

const CorpusEntry* entry(const std::vector<CorpusEntry>& corpus, const std::string& file) {
  for (const auto& e : corpus) {
    if (e.file == file) return &e;
  }
  throw std::runtime_error("corpus has no " + file);
}

std::size_t group_like_count(std::uint32_t p, std::uint32_t m) {
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < m; ++i) total *= p;
  std::size_t count = 0;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> v(m);
    std::size_t c = code;
    for (auto& x : v) {
      x = c % p;
      c /= p;
    }
    bool ok = true;
    std::uint32_t sum = 0;
    for (std::uint32_t i = 0; i < m; ++i) {
      sum = (sum + v[i]) % p;
      for (std::uint32_t j = 0; j < m; ++j) ok = ok && (v[i] * v[j]) % p == (i == j ? v[i] : 0U);
    }
    count += ok && sum == 1;
  }
  return count;
}

std::string corpus_run(const std::vector<CorpusEntry>& corpus) {
  std::string out;
  for (const auto& e : corpus) {
    out += cmd_validate(e.instance, {}).report.dump() + "\n";
    if (e.expect.contains("coincide")) out += cmd_coincide(e.instance, {}).report.dump() + "\n";
    if (e.expect.contains("equivalence")) out += cmd_equivalence(e.instance, {}).report.dump() + "\n";
    if (e.expect["validate"] == "pass") {
      const CommandResult lifted = cmd_lift(e.instance, {});
      out += lifted.report.dump() + "\n";
      if (lifted.artifact) out += lifted.artifact->dump() + "\n";
    }
  }
  return out;
}

}  // namespace

int main() {
  const auto corpus = seed_corpus();

  criterion(1, "derived par on Ł3 equals min(1, a+b) on all 9 pairs", 1.0, [] {
    const CommandResult r = cmd_translate(gen_lukasiewicz(3), "star", {});
    std::size_t equal = 0;
    for (const auto& row : r.report["derived_par"]) {
      auto value = [](const std::string& s) {
        const auto slash = s.find('/');
        return slash == std::string::npos ? std::stod(s) : std::stod(s.substr(0, slash)) / std::stod(s.substr(slash + 1));
      };
      const double expect = std::min(1.0, value(row["a"]) + value(row["b"]));
      equal += value(row["derived"]) == expect;
    }
    return Outcome{equal == 9 && r.exit_code == kPass, std::to_string(equal) + "/9 pairs"};
  });

  criterion(2, "lindist -> star -> lindist round trip on Ł2..Ł6 and matrices (2,3)", 10.0, [] {
    std::size_t passed = 0;
    for (std::uint32_t n = 2; n <= 6; ++n) {
      const Model m = load_model(gen_lukasiewicz(n));
      passed += check_round_trip(*m.lindist, *m.negation, m.scope).pass();
    }
    const Model mc = load_model(gen_matrix_compact(2, 3));
    passed += check_round_trip(*mc.lindist, *mc.negation, mc.scope).pass();
    return Outcome{passed == 6, std::to_string(passed) + "/6 instances"};
  });

  criterion(3, "lift of F_2[Z/2] re-validates and lifted distributions are coalgebra morphisms", 60.0, [&] {
    const Json& inst = entry(corpus, "group-hopf-2-2.json")->instance;
    const CommandResult lifted = cmd_lift(inst, {});
    if (!lifted.artifact) return Outcome{false, "lift produced no instance"};
    const CommandResult again = cmd_validate(*lifted.artifact, {});
    const Model m = load_model(inst);
    const auto coalgebras = enumerate_coalgebras(*m.comonad, m.scope);
    const CheckReport d = check_lifted_distributions(*m.comonad, *m.lindist, coalgebras);
    const bool ok = again.exit_code == kPass && d.pass() && !d.find("L1")->vacuous() && !d.find("L2")->vacuous();
    return Outcome{ok, std::to_string(coalgebras.size()) + " coalgebras, " +
                           std::to_string(d.find("L1")->checked + d.find("L2")->checked) + " lifted ∂ instances"};
  });

  criterion(4, "Le, Ln, Le′ and Ln′ agree with direct coalgebra-morphism checks", 0, [&] {
    std::size_t instances = 0;
    std::size_t negatives = 0;
    std::size_t agree = 0;
    for (const auto& e : corpus) {
      if (!e.expect.contains("equivalence")) continue;
      ++instances;
      negatives += e.expect["validate"] == "fail";
      const Model m = load_model(e.instance);
      const auto r = checker_equivalence_suite(*m.comonad, *m.lindist, *m.negation, *m.lift, m.scope);
      agree += r.agree();
    }
    return Outcome{instances >= 6 && negatives >= 2 && agree == instances,
                   std::to_string(agree) + "/" + std::to_string(instances) + " agree, " + std::to_string(negatives) +
                       " negatives"};
  });

  criterion(5, "the two comonad axiomatizations give the same verdict", 0, [&] {
    std::size_t positives = 0;
    std::size_t negatives = 0;
    std::size_t agree = 0;
    for (const auto& e : corpus) {
      if (!e.expect.contains("coincide")) continue;
      const Model m = load_model(e.instance);
      const CoincidenceResult r = notions_coincide({m.lindist, m.negation, m.star, *m.comonad, *m.lift}, m.scope);
      const bool expected = r.lindist_side.pass() == (e.expect["coincide"] == "pass");
      agree += r.agree() && expected;
      (e.expect["coincide"] == "pass" ? positives : negatives) += 1;
    }
    const bool named = entry(corpus, "l3-identity.json") && entry(corpus, "l3-interior.json") &&
                       entry(corpus, "group-hopf-2-2.json");
    return Outcome{named && positives >= 3 && negatives >= 3 && agree == positives + negatives,
                   std::to_string(agree) + "/" + std::to_string(positives + negatives) + " agree (" +
                       std::to_string(positives) + " positive, " + std::to_string(negatives) + " negative)"};
  });

  criterion(6, "compact Hopf check on F_2[Z/2] and F_3[Z/3], identity antipode fails", 0, [&] {
    std::string detail;
    bool ok = true;
    for (const char* file : {"group-hopf-2-2.json", "group-hopf-3-3.json"}) {
      const Model m = load_model(entry(corpus, file)->instance);
      const CompactResult r = compact_hopf_check(*m.comonad, *m.lindist, *m.negation, *m.lift, m.scope);
      ok = ok && r.pass() && r.correspondence["text"] == "(5)↔23, (6)↔22, (7)↔21, (8)↔20";
      detail = r.correspondence["text"];
    }
    const Model bad = load_model(entry(corpus, "group-hopf-3-3-identity-antipode.json")->instance);
    const CompactResult r = compact_hopf_check(*bad.comonad, *bad.lindist, *bad.negation, *bad.lift, bad.scope);
    ok = ok && !r.pass();
    return Outcome{ok, detail + "; identity antipode fails " + std::to_string(r.report.failing().size()) + " of 4"};
  });

  criterion(7, "coalgebras on the unit object equal the group-likes", 0, [] {
    std::string detail;
    bool ok = true;
    for (auto [p, m] : {std::pair{2U, 2U}, std::pair{3U, 3U}}) {
      const Model model = load_model(gen_group_hopf_instance(p, m, 2));
      Scope unit = model.scope;
      unit.objects = {Obj{1}};
      const std::size_t coalgebras = enumerate_coalgebras(*model.comonad, unit).size();
      const std::size_t oracle = group_like_count(p, m);
      ok = ok && coalgebras == oracle && oracle == m;
      detail += "(" + std::to_string(p) + "," + std::to_string(m) + "): " + std::to_string(coalgebras) + "=" +
                std::to_string(oracle) + " ";
    }
    return Outcome{ok, detail};
  });

  criterion(8, "monoidal interior comonads on Ł3 satisfy L1 and L2", 0, [] {
    const Json l3 = gen_lukasiewicz(3);
    std::size_t monoidal = 0;
    std::size_t passed = 0;
    for (const auto& c : enumerate_interior_comonads(load_model(l3))) {
      if (!c.monoidal()) continue;
      ++monoidal;
      const Model m = load_model(with_interior_comonad(l3, c.g));
      passed += check_L1(*m.comonad, *m.lindist, m.scope).pass() && check_L2(*m.comonad, *m.lindist, m.scope).pass();
    }
    return Outcome{monoidal > 0 && passed == monoidal, std::to_string(passed) + "/" + std::to_string(monoidal)};
  });

  criterion(9, "two corpus runs give byte-identical reports", 0, [&] {
    const std::string first = corpus_run(corpus);
    const std::string second = corpus_run(seed_corpus());
    return Outcome{first == second, std::to_string(first.size()) + " bytes"};
  });

  return failures == 0 ? 0 : 1;
}
