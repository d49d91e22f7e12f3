#include "ldlab/em.hpp"

#include <algorithm>

namespace ldlab {

namespace {

const Family2& need(const std::optional<Family2>& f, const char* what) {
  if (!f) throw MissingStructure(std::string("comonad has no ") + what);
  return *f;
}

const Family0& need(const std::optional<Family0>& f, const char* what) {
  if (!f) throw MissingStructure(std::string("comonad has no ") + what);
  return *f;
}

std::string coalgebra_text(const Category& cat, const Coalgebra& c) {
  return "(" + cat.label(c.carrier) + ", " + cat.describe(c.gamma) + ")";
}

bool same_morphism(const Category& cat, const Mor& f, const Mor& g) {
  return cat.parallel(f, g) && cat.equal(f, g);
}

}  // namespace

bool is_coalgebra(const ComonadBundle& cb, const Coalgebra& c) {
  const Category& C = *cb.cat;
  try {
    if (c.gamma.dom != c.carrier || c.gamma.cod != cb.G(c.carrier)) return false;
    if (!same_morphism(C, C.compose(cb.eps(c.carrier), c.gamma), C.identity(c.carrier))) return false;
    return same_morphism(C, C.compose(cb.G(c.gamma), c.gamma), C.compose(cb.delta(c.carrier), c.gamma));
  } catch (const LawError&) {
    return false;
  }
}

bool is_coalgebra_morphism(const ComonadBundle& cb, const Coalgebra& from, const Coalgebra& to,
                           const Mor& f) {
  const Category& C = *cb.cat;
  try {
    if (f.dom != from.carrier || f.cod != to.carrier) return false;
    return same_morphism(C, C.compose(cb.G(f), from.gamma), C.compose(to.gamma, f));
  } catch (const LawError&) {
    return false;
  }
}

std::vector<Coalgebra> enumerate_coalgebras(const ComonadBundle& cb, const Scope& scope) {
  std::vector<Coalgebra> out;
  for (auto a : scope.objects) {
    Obj ga;
    try {
      ga = cb.G(a);
    } catch (const LawError&) {
      continue;
    }
    for (auto& gamma : cb.cat->hom(a, ga)) {
      Coalgebra c{a, std::move(gamma)};
      if (is_coalgebra(cb, c)) out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<Coalgebra> cofree_coalgebras(const ComonadBundle& cb, const Scope& scope) {
  std::vector<Coalgebra> out;
  for (auto a : scope.objects) {
    try {
      out.push_back(Coalgebra{cb.G(a), cb.delta(a)});
    } catch (const LawError&) {
    }
  }
  return out;
}

Coalgebra lift_tensor(const ComonadBundle& cb, const Tensor& t, Side side, const Coalgebra& a,
                      const Coalgebra& b) {
  const Family2& phi = side == Side::star ? need(cb.phi, "φ") : need(cb.psi, "ψ");
  return Coalgebra{t(a.carrier, b.carrier),
                   cb.cat->compose(phi(a.carrier, b.carrier), t(a.gamma, b.gamma))};
}

namespace {

Mor raw_lift(const ComonadBundle& cb, const ContraFunctor& S, const Family1& nu, const Coalgebra& c) {
  return cb.cat->compose(cb.G(S(c.gamma)), nu(c.carrier));
}

}  // namespace

Coalgebra lift_negation_functor(const ComonadBundle& cb, const ContraFunctor& S, const Family1& nu,
                                const Coalgebra& c) {
  Coalgebra out{S(c.carrier), raw_lift(cb, S, nu, c)};
  if (!is_coalgebra(cb, out)) {
    throw LiftError("lifted negation of " + coalgebra_text(*cb.cat, c) +
                    " is not a coalgebra; the ν laws fail");
  }
  return out;
}

// ------------------------------------------------ axioms Le, Ln, Le′, Ln′

CheckReport check_Le(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                     const NegationLift& lift, const Scope& scope) {
  const Family2& phi = need(cb.phi, "φ");
  const Family0& psi0 = need(cb.psi0, "ψ0");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  AxiomCheck check(C, "Le", "e lifts: ψ0∘e∘(1⋆ε) = Ge_G∘φ∘(ν⋆δ)");
  check.law("square");
  for (auto a : scope.objects) {
    check.commutes({a},
                   [&] { return C.chain({b.star(C.identity(neg.S(a)), cb.eps(a)), neg.e(a), psi0()}); },
                   [&] {
                     return C.chain({b.star(lift.nu(a), cb.delta(a)), phi(neg.S(G(a)), G(a)),
                                     G(neg.e(G(a)))});
                   });
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_Ln(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                     const NegationLift& lift, const Scope& scope) {
  const Family2& psi = need(cb.psi, "ψ");
  const Family0& phi0 = need(cb.phi0, "φ0");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  const auto& S = neg.S;
  AxiomCheck check(C, "Ln", "n lifts: G(1⋄Sδ)∘ψ∘(1⋄ν)∘n = G(1⋄Sε)∘Gn∘φ0");
  check.law("square");
  for (auto a : scope.objects) {
    check.commutes({a},
                   [&] {
                     const Obj ga = G(a);
                     return C.chain({neg.n(ga), b.par(C.identity(ga), lift.nu(ga)),
                                     psi(a, S(G(ga))), G(b.par(C.identity(a), S(cb.delta(a))))});
                   },
                   [&] {
                     return C.chain({phi0(), G(neg.n(a)), G(b.par(C.identity(a), S(cb.eps(a))))});
                   });
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_LeP(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                      const NegationLift& lift, const Scope& scope) {
  const Family2& phi = need(cb.phi, "φ");
  const Family0& psi0 = need(cb.psi0, "ψ0");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  AxiomCheck check(C, "Le′", "e′ lifts: ψ0∘e′∘(ε⋆1) = Ge′_G∘φ∘(δ⋆ν′)");
  check.law("square");
  for (auto a : scope.objects) {
    check.commutes({a},
                   [&] { return C.chain({b.star(cb.eps(a), C.identity(neg.Sp(a))), neg.ep(a), psi0()}); },
                   [&] {
                     return C.chain({b.star(cb.delta(a), lift.nup(a)), phi(G(a), neg.Sp(G(a))),
                                     G(neg.ep(G(a)))});
                   });
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_LnP(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                      const NegationLift& lift, const Scope& scope) {
  const Family2& psi = need(cb.psi, "ψ");
  const Family0& phi0 = need(cb.phi0, "φ0");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  const auto& Sp = neg.Sp;
  AxiomCheck check(C, "Ln′", "n′ lifts: G(S′δ⋄1)∘ψ∘(ν′⋄1)∘n′ = G(S′ε⋄1)∘Gn′∘φ0");
  check.law("square");
  for (auto a : scope.objects) {
    check.commutes({a},
                   [&] {
                     const Obj ga = G(a);
                     return C.chain({neg.np(ga), b.par(lift.nup(ga), C.identity(ga)),
                                     psi(Sp(G(ga)), a), G(b.par(Sp(cb.delta(a)), C.identity(a)))});
                   },
                   [&] {
                     return C.chain({phi0(), G(neg.np(a)), G(b.par(Sp(cb.eps(a)), C.identity(a)))});
                   });
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_negation_axioms(const ComonadBundle& cb, const LindistBundle& b,
                                  const NegationStructure& neg, const NegationLift& lift,
                                  const Scope& scope) {
  CheckReport report = check_Le(cb, b, neg, lift, scope);
  report.merge(check_Ln(cb, b, neg, lift, scope));
  report.merge(check_LeP(cb, b, neg, lift, scope));
  report.merge(check_LnP(cb, b, neg, lift, scope));
  return report;
}

CheckReport check_negation_maps_direct(const ComonadBundle& cb, const LindistBundle& b,
                                       const NegationStructure& neg, const NegationLift& lift,
                                       const std::vector<Coalgebra>& coalgebras) {
  const Family2& phi = need(cb.phi, "φ");
  const Family2& psi = need(cb.psi, "ψ");
  const Family0& phi0 = need(cb.phi0, "φ0");
  const Family0& psi0 = need(cb.psi0, "ψ0");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  AxiomCheck le(C, "Le", "e is a coalgebra morphism");
  AxiomCheck ln(C, "Ln", "n is a coalgebra morphism");
  AxiomCheck lep(C, "Le′", "e′ is a coalgebra morphism");
  AxiomCheck lnp(C, "Ln′", "n′ is a coalgebra morphism");
  for (auto* check : {&le, &ln, &lep, &lnp}) check->law("coalgebra-morphism");
  for (const auto& c : coalgebras) {
    const Obj a = c.carrier;
    const std::vector<std::string> tuple{coalgebra_text(C, c)};
    le.commutes(tuple,
                [&] {
                  return C.chain({b.star(raw_lift(cb, neg.S, lift.nu, c), c.gamma),
                                  phi(neg.S(a), a), G(neg.e(a))});
                },
                [&] { return C.compose(psi0(), neg.e(a)); });
    ln.commutes(tuple,
                [&] {
                  return C.chain({neg.n(a), b.par(c.gamma, raw_lift(cb, neg.S, lift.nu, c)),
                                  psi(a, neg.S(a))});
                },
                [&] { return C.compose(G(neg.n(a)), phi0()); });
    lep.commutes(tuple,
                 [&] {
                   return C.chain({b.star(c.gamma, raw_lift(cb, neg.Sp, lift.nup, c)),
                                   phi(a, neg.Sp(a)), G(neg.ep(a))});
                 },
                 [&] { return C.compose(psi0(), neg.ep(a)); });
    lnp.commutes(tuple,
                 [&] {
                   return C.chain({neg.np(a), b.par(raw_lift(cb, neg.Sp, lift.nup, c), c.gamma),
                                   psi(neg.Sp(a), a)});
                 },
                 [&] { return C.compose(G(neg.np(a)), phi0()); });
  }
  CheckReport report;
  report.add(le.finish());
  report.add(ln.finish());
  report.add(lep.finish());
  report.add(lnp.finish());
  return report;
}

CheckReport check_lifted_distributions(const ComonadBundle& cb, const LindistBundle& b,
                                       const std::vector<Coalgebra>& coalgebras) {
  const Category& C = *cb.cat;
  AxiomCheck l1(C, "L1", "∂l is a coalgebra morphism");
  AxiomCheck l2(C, "L2", "∂r is a coalgebra morphism");
  l1.law("coalgebra-morphism");
  l2.law("coalgebra-morphism");
  for (const auto& x : coalgebras) {
    for (const auto& y : coalgebras) {
      for (const auto& z : coalgebras) {
        const std::vector<std::string> tuple{coalgebra_text(C, x), coalgebra_text(C, y),
                                             coalgebra_text(C, z)};
        l1.holds(tuple,
                 [&] {
                   const Coalgebra dom =
                       lift_tensor(cb, b.star, Side::star, x, lift_tensor(cb, b.par, Side::par, y, z));
                   const Coalgebra cod =
                       lift_tensor(cb, b.par, Side::par, lift_tensor(cb, b.star, Side::star, x, y), z);
                   return is_coalgebra_morphism(cb, dom, cod, b.dl(x.carrier, y.carrier, z.carrier));
                 },
                 "not-a-coalgebra-morphism", "∂l does not commute with the lifted coactions");
        l2.holds(tuple,
                 [&] {
                   const Coalgebra dom =
                       lift_tensor(cb, b.star, Side::star, lift_tensor(cb, b.par, Side::par, y, z), x);
                   const Coalgebra cod =
                       lift_tensor(cb, b.par, Side::par, y, lift_tensor(cb, b.star, Side::star, z, x));
                   return is_coalgebra_morphism(cb, dom, cod, b.dr(x.carrier, y.carrier, z.carrier));
                 },
                 "not-a-coalgebra-morphism", "∂r does not commute with the lifted coactions");
      }
    }
  }
  CheckReport report;
  report.add(l1.finish());
  report.add(l2.finish());
  return report;
}

bool EquivalenceResult::agree() const {
  return std::all_of(rows.begin(), rows.end(), [](const EquivalenceRow& r) { return r.agree(); });
}

Json EquivalenceResult::to_json() const {
  Json j;
  Json list = Json::array();
  for (const auto& r : rows) {
    Json e;
    e["axiom"] = r.axiom;
    e["map"] = r.map;
    e["axiom_verdict"] = r.axiom_pass ? "pass" : "fail";
    e["coalgebra_morphism_verdict"] = r.direct_pass ? "pass" : "fail";
    e["coalgebras"] = r.coalgebras;
    e["agree"] = r.agree();
    list.push_back(std::move(e));
  }
  j["rows"] = list;
  j["agreement"] = agree();
  j["axiom_report"] = axioms.to_json();
  j["direct_report"] = direct.to_json();
  return j;
}

EquivalenceResult checker_equivalence_suite(const ComonadBundle& cb, const LindistBundle& b,
                                            const NegationStructure& neg, const NegationLift& lift,
                                            const Scope& scope) {
  std::vector<Coalgebra> coalgebras = enumerate_coalgebras(cb, scope);
  const auto cofree = cofree_coalgebras(cb, scope);
  coalgebras.insert(coalgebras.end(), cofree.begin(), cofree.end());

  EquivalenceResult out;
  out.axioms = check_negation_axioms(cb, b, neg, lift, scope);
  out.direct = check_negation_maps_direct(cb, b, neg, lift, coalgebras);
  const std::vector<std::pair<std::string, std::string>> ids{
      {"Le", "e"}, {"Ln", "n"}, {"Le′", "e′"}, {"Ln′", "n′"}};
  for (const auto& [id, map] : ids) {
    EquivalenceRow row;
    row.axiom = id;
    row.map = map;
    row.axiom_pass = out.axioms.passes(id);
    row.direct_pass = out.direct.passes(id);
    row.coalgebras = coalgebras.size();
    out.rows.push_back(row);
  }
  return out;
}

// ------------------------------------------------------ Eilenberg–Moore

Scope EMCategory::scope() const {
  Scope s;
  for (std::uint32_t i = 0; i < objects.size(); ++i) s.objects.push_back(Obj{i});
  s.generator_limit = UINT64_MAX;
  return s;
}

std::string EMCategory::object_label(std::size_t i) const {
  return "C" + std::to_string(i) + coalgebra_text(*base, objects.at(i));
}

EMCategory build_em_category(const ComonadBundle& cb, const LindistBundle& b,
                             const NegationStructure* neg, const NegationLift* lift,
                             const Scope& scope) {
  {
    CheckReport pre = check_comonad(cb, scope);
    pre.merge(check_monoidal_comonad(cb, b.star, Side::star, scope));
    pre.merge(check_monoidal_comonad(cb, b.par, Side::par, scope));
    pre.merge(check_L1(cb, b, scope));
    pre.merge(check_L2(cb, b, scope));
    if (neg != nullptr && lift != nullptr) {
      pre.merge(check_nu(cb, neg->S, neg->Sp, *lift, scope));
      pre.merge(check_negation_axioms(cb, b, *neg, *lift, scope));
    }
    if (!pre.pass()) throw PreconditionError("comonad does not lift the structure", pre);
  }

  const Category& C = *cb.cat;
  EMCategory em;
  em.base = cb.cat;
  em.objects = enumerate_coalgebras(cb, scope);
  const std::size_t n = em.objects.size();

  std::vector<std::vector<std::vector<std::uint32_t>>> homs(n, std::vector<std::vector<std::uint32_t>>(n));
  std::vector<TableMorphism> morphisms;
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (auto& f : C.hom(em.objects[i].carrier, em.objects[j].carrier)) {
        if (!is_coalgebra_morphism(cb, em.objects[i], em.objects[j], f)) continue;
        homs[i][j].push_back(static_cast<std::uint32_t>(em.payloads.size()));
        morphisms.push_back(TableMorphism{Obj{i}, Obj{j}, C.describe(f)});
        em.payloads.push_back(std::move(f));
      }
    }
  }
  auto find_morphism = [&](std::uint32_t i, std::uint32_t j, const Mor& f) -> std::optional<std::uint32_t> {
    for (auto id : homs[i][j]) {
      if (same_morphism(C, em.payloads[id], f)) return id;
    }
    return std::nullopt;
  };
  auto find_object = [&](const Coalgebra& c) -> std::optional<std::uint32_t> {
    for (std::uint32_t i = 0; i < n; ++i) {
      if (em.objects[i].carrier == c.carrier && same_morphism(C, em.objects[i].gamma, c.gamma)) return i;
    }
    return std::nullopt;
  };
  auto in_scope = [&](Obj a) {
    return std::find(scope.objects.begin(), scope.objects.end(), a) != scope.objects.end();
  };

  std::vector<std::uint32_t> identities(n);
  for (std::uint32_t i = 0; i < n; ++i) {
    identities[i] = *find_morphism(i, i, C.identity(em.objects[i].carrier));
  }
  std::vector<std::array<std::uint32_t, 3>> composition;
  AxiomCheck closure(C, "cat", "coalgebra morphisms are closed under composition");
  closure.law("composition-closed");
  for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
    const auto i = morphisms[f].dom.id;
    const auto j = morphisms[f].cod.id;
    for (std::uint32_t k = 0; k < n; ++k) {
      for (auto g : homs[j][k]) {
        const Mor gf = C.compose(em.payloads[g], em.payloads[f]);
        const auto id = find_morphism(i, k, gf);
        closure.holds(std::vector<std::string>{morphisms[g].label, morphisms[f].label},
                      [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                      "composite is not a coalgebra morphism");
        if (id) composition.push_back({g, f, *id});
      }
    }
  }
  em.table = std::make_shared<const TableCategory>(
      [&] {
        std::vector<std::string> labels;
        for (std::size_t i = 0; i < n; ++i) labels.push_back(em.object_label(i));
        return labels;
      }(),
      morphisms, identities, composition);
  em.report.add(closure.finish());

  // Lifted tensors, defined where the lifted carrier lies in scope.
  auto build_tensor = [&](const Tensor& t, Side side, TensorTable& table, const std::string& id) {
    AxiomCheck check(C, id, "lifted tensor on coalgebras");
    check.law("lifted-coalgebra");
    const auto unit = find_object(Coalgebra{t.unit, side == Side::star ? (*cb.phi0)() : (*cb.psi0)()});
    if (!unit) {
      throw PreconditionError("the unit coalgebra for " + t.tag + " is not in scope", CheckReport{});
    }
    table.unit = *unit;
    for (std::uint32_t i = 0; i < n; ++i) {
      for (std::uint32_t j = 0; j < n; ++j) {
        const Coalgebra c = lift_tensor(cb, t, side, em.objects[i], em.objects[j]);
        if (!in_scope(c.carrier)) continue;
        const auto k = find_object(c);
        check.holds(std::vector<std::string>{em.object_label(i), em.object_label(j)},
                    [&] { return k.has_value(); }, "not-a-coalgebra", "lifted tensor is not a coalgebra");
        if (k) table.objects[{i, j}] = *k;
      }
    }
    check.law("lifted-morphism");
    for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
      for (std::uint32_t g = 0; g < morphisms.size(); ++g) {
        auto dom = table.objects.find({morphisms[f].dom.id, morphisms[g].dom.id});
        auto cod = table.objects.find({morphisms[f].cod.id, morphisms[g].cod.id});
        if (dom == table.objects.end() || cod == table.objects.end()) continue;
        const auto id = find_morphism(dom->second, cod->second, t(em.payloads[f], em.payloads[g]));
        check.holds(std::vector<std::string>{morphisms[f].label, morphisms[g].label},
                    [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                    "lifted tensor of coalgebra morphisms is not a coalgebra morphism");
        if (id) table.morphisms[{f, g}] = *id;
      }
    }
    em.report.add(check.finish());
  };
  build_tensor(b.star, Side::star, em.lindist_data.star, "moncom-⋆");
  build_tensor(b.par, Side::par, em.lindist_data.par, "moncom-⋄");

  const auto& st = em.lindist_data.star;
  const auto& pr = em.lindist_data.par;
  auto get = [](const TensorTable& t, std::uint32_t i, std::uint32_t j) -> std::optional<std::uint32_t> {
    auto it = t.objects.find({i, j});
    if (it == t.objects.end()) return std::nullopt;
    return it->second;
  };
  auto label3 = [&](std::uint32_t i, std::uint32_t j, std::uint32_t k) {
    return std::vector<std::string>{em.object_label(i), em.object_label(j), em.object_label(k)};
  };

  AxiomCheck l1(C, "L1", "∂l is a coalgebra morphism");
  AxiomCheck l2(C, "L2", "∂r is a coalgebra morphism");
  l1.law("coalgebra-morphism");
  l2.law("coalgebra-morphism");
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t k = 0; k < n; ++k) {
        const Obj A = em.objects[i].carrier;
        const Obj B = em.objects[j].carrier;
        const Obj Cc = em.objects[k].carrier;
        if (auto jk = get(pr, j, k)) {
          auto dom = get(st, i, *jk);
          auto ij = get(st, i, j);
          auto cod = ij ? get(pr, *ij, k) : std::nullopt;
          if (dom && cod) {
            const auto id = find_morphism(*dom, *cod, b.dl(A, B, Cc));
            l1.holds(label3(i, j, k), [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                     "∂l does not commute with the lifted coactions");
            if (id) em.lindist_data.dl[{i, j, k}] = *id;
          }
        }
        if (auto jk = get(pr, j, k)) {
          auto dom = get(st, *jk, i);
          auto ki = get(st, k, i);
          auto cod = ki ? get(pr, j, *ki) : std::nullopt;
          if (dom && cod) {
            const auto id = find_morphism(*dom, *cod, b.dr(A, B, Cc));
            l2.holds(label3(i, j, k), [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                     "∂r does not commute with the lifted coactions");
            if (id) em.lindist_data.dr[{i, j, k}] = *id;
          }
        }
      }
    }
  }
  em.report.add(l1.finish());
  em.report.add(l2.finish());
  em.lindist = make_table_lindist(em.table, em.lindist_data);
  em.notes.push_back("lifted ∂l, ∂r and negation maps reuse the base payloads");
  em.notes.push_back("lifted tensors are defined where the lifted carrier lies in scope");

  if (neg != nullptr && lift != nullptr) {
    TableNegationData nd;
    AxiomCheck negc(C, "nu-1", "lifted negation functors land in coalgebras");
    AxiomCheck le(C, "Le", "e is a coalgebra morphism");
    AxiomCheck ln(C, "Ln", "n is a coalgebra morphism");
    AxiomCheck lep(C, "Le′", "e′ is a coalgebra morphism");
    AxiomCheck lnp(C, "Ln′", "n′ is a coalgebra morphism");
    auto build_functor = [&](const ContraFunctor& F, const Family1& nu, FunctorTable& table,
                             const std::string& name) {
      negc.law(name + "-object");
      for (std::uint32_t i = 0; i < n; ++i) {
        Coalgebra c;
        try {
          c = lift_negation_functor(cb, F, nu, em.objects[i]);
        } catch (const LiftError& e) {
          negc.count();
          negc.fail({em.object_label(i)}, "not-a-coalgebra", e.what());
          continue;
        }
        if (!in_scope(c.carrier)) continue;
        const auto k = find_object(c);
        negc.holds({em.object_label(i)}, [&] { return k.has_value(); }, "not-a-coalgebra",
                   "lifted negation is not an enumerated coalgebra");
        if (k) table.objects[i] = *k;
      }
      negc.law(name + "-morphism");
      for (std::uint32_t f = 0; f < morphisms.size(); ++f) {
        auto dom = table.objects.find(morphisms[f].cod.id);
        auto cod = table.objects.find(morphisms[f].dom.id);
        if (dom == table.objects.end() || cod == table.objects.end()) continue;
        const auto id = find_morphism(dom->second, cod->second, F(em.payloads[f]));
        negc.holds({morphisms[f].label}, [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                   name + " of a coalgebra morphism is not a coalgebra morphism");
        if (id) table.morphisms[f] = *id;
      }
    };
    build_functor(neg->S, lift->nu, nd.S, "S");
    build_functor(neg->Sp, lift->nup, nd.Sp, "S′");

    auto lookup = [](const std::map<std::uint32_t, std::uint32_t>& m, std::uint32_t i) -> std::optional<std::uint32_t> {
      auto it = m.find(i);
      if (it == m.end()) return std::nullopt;
      return it->second;
    };
    auto place = [&](AxiomCheck& check, const std::string& name, std::uint32_t i, std::optional<std::uint32_t> dom,
                     std::optional<std::uint32_t> cod, const Mor& base, std::map<std::uint32_t, std::uint32_t>& out) {
      if (!dom || !cod) return;
      const auto id = find_morphism(*dom, *cod, base);
      check.holds({em.object_label(i)}, [&] { return id.has_value(); }, "not-a-coalgebra-morphism",
                 name + " is not a coalgebra morphism");
      if (id) out[i] = *id;
    };
    for (auto* check : {&le, &ln, &lep, &lnp}) check->law("coalgebra-morphism");
    for (std::uint32_t i = 0; i < n; ++i) {
      const Obj A = em.objects[i].carrier;
      const auto si = lookup(nd.S.objects, i);
      const auto spi = lookup(nd.Sp.objects, i);
      place(le, "e", i, si ? get(st, *si, i) : std::nullopt, pr.unit, neg->e(A), nd.e);
      place(ln, "n", i, st.unit, si ? get(pr, i, *si) : std::nullopt, neg->n(A), nd.n);
      place(lep, "e′", i, spi ? get(st, i, *spi) : std::nullopt, pr.unit, neg->ep(A), nd.ep);
      place(lnp, "n′", i, st.unit, spi ? get(pr, *spi, i) : std::nullopt, neg->np(A), nd.np);
    }
    em.report.add(negc.finish());
    for (auto* check : {&le, &ln, &lep, &lnp}) em.report.add(check->finish());
    em.negation_data = nd;
    em.negation = make_table_negation(em.table, nd);
  }
  return em;
}

}  // namespace ldlab
