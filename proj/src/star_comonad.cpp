#include "ldlab/star_comonad.hpp"

#include <array>

#include "ldlab/kernel.hpp"

namespace ldlab {

CheckReport check_star_comonad(const ComonadBundle& cb, const StarAutonomousStructure& sa,
                               const NegationLift& lift, const Scope& scope) {
  if (!cb.phi) throw MissingStructure("comonad has no φ for ⊗");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  const auto& S = sa.S;
  const auto& Sp = sa.Sp;
  const auto& t = sa.tensor;
  const auto& phi = *cb.phi;

  AxiomCheck sc1(C, "SC-1", "the equivalence lifts: GSν′∘ν = G(SS′ ≅ 1)⁻¹∘(SS′G ≅ G)");
  AxiomCheck sc2(C, "SC-2", "the equivalence lifts: GS′ν∘ν′ = G(1 ≅ S′S)∘(S′SG ≅ G)");
  AxiomCheck sc3(C, "SC-3", "e lifts: ν∘e∘(1⊗ε) = Ge_G∘G(Sφ⊗1)∘φ∘(ν⊗δ)");
  AxiomCheck sc4(C, "SC-4", "e′ lifts: ν′∘e′∘(ε⊗1) = Ge′_G∘G(1⊗S′φ)∘φ∘(δ⊗ν′)");
  sc1.law("square");
  sc2.law("square");
  sc3.law("hexagon");
  sc4.law("hexagon");
  for (auto a : scope.objects) {
    sc1.commutes({a}, [&] { return C.compose(G(S(lift.nup(a))), lift.nu(Sp(G(a)))); },
                 [&] { return C.compose(G(sa.counit_inv(a)), sa.counit(G(a))); });
    sc2.commutes({a}, [&] { return C.compose(G(Sp(lift.nu(a))), lift.nup(S(G(a)))); },
                 [&] { return C.compose(G(sa.unit(a)), sa.unit_inv(G(a))); });
  }
  for (auto a : scope.objects) {
    for (auto b : scope.objects) {
      sc3.commutes({a, b},
                   [&] {
                     return C.chain({t(C.identity(S(t(a, b))), cb.eps(a)), sa.eval(a, b), lift.nu(b)});
                   },
                   [&] {
                     const Obj ab = t(a, b);
                     return C.chain({t(lift.nu(ab), cb.delta(a)), phi(S(G(ab)), G(a)),
                                     G(t(S(phi(a, b)), C.identity(G(a)))), G(sa.eval(G(a), G(b)))});
                   });
      sc4.commutes({a, b},
                   [&] {
                     return C.chain({t(cb.eps(b), C.identity(Sp(t(a, b)))), sa.eval_prime(b, a),
                                     lift.nup(a)});
                   },
                   [&] {
                     const Obj ab = t(a, b);
                     return C.chain({t(cb.delta(b), lift.nup(ab)), phi(G(b), Sp(G(ab))),
                                     G(t(C.identity(G(b)), Sp(phi(a, b)))), G(sa.eval_prime(G(b), G(a)))});
                   });
    }
  }
  CheckReport report;
  report.add(sc1.finish());
  report.add(sc2.finish());
  report.add(sc3.finish());
  report.add(sc4.finish());
  return report;
}

Json CoincidenceResult::to_json() const {
  Json j;
  j["lindist_side"] = {{"origin", lindist_origin},
                       {"verdict", lindist_side.pass() ? "pass" : "fail"},
                       {"report", lindist_side.to_json()}};
  j["star_side"] = {{"origin", star_origin},
                    {"verdict", star_side.pass() ? "pass" : "fail"},
                    {"report", star_side.to_json()}};
  j["agreement"] = agree();
  return j;
}

CoincidenceResult notions_coincide(const CoincidenceInput& input, const Scope& scope) {
  CoincidenceResult out;
  const ComonadBundle& cb = input.comonad;
  const NegationLift& lift = input.lift;

  std::optional<LindistBundle> bundle;
  std::optional<NegationStructure> neg;
  std::optional<StarAutonomousStructure> star;
  if (input.lindist && input.negation) {
    bundle = input.lindist;
    neg = input.negation;
    out.lindist_origin = "native";
    star = star_from_lindist(*bundle, *neg, scope).star;
    out.star_origin = "translated from the lindist structure";
  } else if (input.star) {
    star = input.star;
    out.star_origin = "native";
    auto t = lindist_from_star(*star, scope);
    bundle = t.bundle;
    neg = t.negation;
    out.lindist_origin = "translated from the star-autonomous structure";
  } else {
    throw MissingStructure("coincidence needs a lindist bundle with negations or a star-autonomous structure");
  }

  CheckReport base = check_comonad(cb, scope);
  CheckReport nu = check_nu(cb, neg->S, neg->Sp, lift, scope);

  out.lindist_side = base;
  out.lindist_side.merge(check_monoidal_comonad(cb, bundle->star, Side::star, scope));
  out.lindist_side.merge(check_monoidal_comonad(cb, bundle->par, Side::par, scope));
  out.lindist_side.merge(nu);
  out.lindist_side.merge(check_L1(cb, *bundle, scope));
  out.lindist_side.merge(check_L2(cb, *bundle, scope));
  out.lindist_side.merge(check_negation_axioms(cb, *bundle, *neg, lift, scope));

  out.star_side = base;
  out.star_side.merge(check_monoidal_comonad(cb, star->tensor, Side::star, scope));
  out.star_side.merge(check_nu(cb, star->S, star->Sp, lift, scope));
  out.star_side.merge(check_star_comonad(cb, *star, lift, scope));
  return out;
}

Json bv_correspondence() {
  Json rows = Json::array();
  const std::array<std::array<const char*, 4>, 4> table{{{"Le", "(5)", "23", "BV-23"},
                                                         {"Ln", "(6)", "22", "BV-22"},
                                                         {"Le′", "(7)", "21", "BV-21"},
                                                         {"Ln′", "(8)", "20", "BV-20"}}};
  for (const auto& r : table) {
    rows.push_back({{"axiom", r[0]}, {"label", r[1]}, {"bv", r[2]}, {"id", r[3]}});
  }
  Json j;
  j["rows"] = rows;
  j["text"] = "(5)↔23, (6)↔22, (7)↔21, (8)↔20";
  return j;
}

Json CompactResult::to_json() const {
  Json j;
  j["correspondence"] = correspondence;
  j["verdict"] = pass() ? "Hopf comonad axioms hold" : "Hopf comonad axioms fail";
  j["report"] = report.to_json();
  return j;
}

namespace {

void require_compact(const LindistBundle& b, const Scope& scope) {
  const Category& C = *b.cat;
  std::vector<std::pair<Obj, Obj>> pairs;
  for (auto a : scope.objects) pairs.emplace_back(a, a);
  for (auto a : scope.objects) {
    for (auto c : scope.objects) {
      if (a != c) pairs.emplace_back(a, c);
    }
  }
  for (const auto& [a, c] : pairs) {
    std::optional<Obj> s;
    std::optional<Obj> p;
    try {
      s = b.star(a, c);
      p = b.par(a, c);
    } catch (const OutsideClosure&) {
      continue;
    }
    if (*s != *p) {
      throw NotCompact("not compact: " + C.label(a) + "⋆" + C.label(c) + " = " + C.label(*s) + " ≠ " +
                       C.label(*p) + " = " + C.label(a) + "⋄" + C.label(c));
    }
  }
  if (b.star.unit != b.par.unit) {
    throw NotCompact("not compact: I = " + C.label(b.star.unit) + " differs from J = " + C.label(b.par.unit));
  }
  for (auto a : scope.objects) {
    for (auto c : scope.objects) {
      for (auto x : scope.objects) {
        for (auto y : scope.objects) {
          std::vector<Mor> fs;
          std::vector<Mor> gs;
          try {
            fs = C.hom_generators(a, x, scope.generator_limit);
            gs = C.hom_generators(c, y, scope.generator_limit);
          } catch (const ScopeTooLarge&) {
            continue;
          }
          for (const auto& f : fs) {
            for (const auto& g : gs) {
              Mor s;
              Mor p;
              try {
                s = b.star(f, g);
                p = b.par(f, g);
              } catch (const OutsideClosure&) {
                continue;
              }
              if (!C.parallel(s, p) || !C.equal(s, p)) {
                throw NotCompact("not compact: " + C.describe(f) + "⋆" + C.describe(g) + " ≠ " +
                                 C.describe(f) + "⋄" + C.describe(g));
              }
            }
          }
        }
      }
    }
  }
}

}  // namespace

CompactResult compact_hopf_check(const ComonadBundle& cb, const LindistBundle& bundle,
                                 const NegationStructure& neg, const NegationLift& lift,
                                 const Scope& scope) {
  require_compact(bundle, scope);
  const CheckReport axioms = check_negation_axioms(cb, bundle, neg, lift, scope);
  CompactResult out;
  out.correspondence = bv_correspondence();
  for (const auto& row : out.correspondence["rows"]) {
    const AxiomResult* r = axioms.find(row["axiom"].get<std::string>());
    AxiomResult copy = *r;
    copy.id = row["id"].get<std::string>();
    copy.description = "Hopf-monad axiom " + row["bv"].get<std::string>() + " via " + r->id + ": " + r->description;
    out.report.add(std::move(copy));
  }
  out.report.notes.push_back("checked on the comonad side with ⋆ and ⋄ identified");
  return out;
}

HopfComonad hopf_comonad(std::shared_ptr<const MatrixCategory> cat, const HopfAlgebra& h,
                         const LindistBundle& bundle, const NegationStructure& neg,
                         const StarAutonomousStructure& sa, const Scope& scope) {
  HopfComonad out = hopf_comonad_unchecked(cat, h);
  CheckReport report = check_hopf(h, bundle, scope);
  const auto& cb = out.comonad;
  report.merge(check_comonad(cb, scope));
  report.merge(check_monoidal_comonad(cb, bundle.star, Side::star, scope));
  report.merge(check_monoidal_comonad(cb, bundle.par, Side::par, scope));
  report.merge(check_L1(cb, bundle, scope));
  report.merge(check_L2(cb, bundle, scope));
  report.merge(check_nu(cb, neg.S, neg.Sp, out.lift, scope));
  report.merge(check_star_comonad(cb, sa, out.lift, scope));
  if (!report.pass()) throw PreconditionError("H⊗− is not a star-autonomous comonad on scope", report);
  return out;
}

}  // namespace ldlab
