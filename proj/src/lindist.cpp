#include "ldlab/lindist.hpp"

#include <algorithm>
#include <map>
#include <memory>

#include "ldlab/backends.hpp"
#include "ldlab/kernel.hpp"

namespace ldlab {

namespace {

std::vector<std::string> row(const Category& cat, const Mor& f, std::initializer_list<Obj> rest) {
  std::vector<std::string> out{cat.describe(f)};
  for (auto o : rest) out.push_back(cat.label(o));
  return out;
}

std::map<Obj, std::vector<const Mor*>> by_domain(const std::vector<Mor>& gens) {
  std::map<Obj, std::vector<const Mor*>> out;
  for (const auto& f : gens) out[f.dom].push_back(&f);
  return out;
}

}  // namespace

void use_identity_comparisons(StarAutonomousStructure& sa) {
  auto cat = sa.cat;
  auto S = sa.S;
  auto Sp = sa.Sp;
  auto t = sa.tensor;
  auto same = [cat](Obj from, Obj to) {
    if (from != to) {
      throw CompositionError("canonical comparison " + cat->label(from) + " -> " + cat->label(to) +
                             " is not an identity");
    }
    return cat->identity(from);
  };
  sa.par_form = [=](Obj a, Obj b) { return same(Sp(t(S(b), S(a))), S(t(Sp(b), Sp(a)))); };
  sa.par_form_inv = [=](Obj a, Obj b) { return same(S(t(Sp(b), Sp(a))), Sp(t(S(b), S(a)))); };
  sa.unit_cmp = [=] { return same(Sp(t.unit), S(t.unit)); };
}

// ---------------------------------------------------------------- checks

CheckReport check_lindist(const LindistBundle& b, const Scope& scope) {
  const Category& C = *b.cat;
  const auto& objs = scope.objects;
  const auto gens = scope_generators(C, scope);
  const Tensor& st = b.star;
  const Tensor& pr = b.par;
  auto id = [&](Obj x) { return C.identity(x); };

  AxiomCheck nat(C, "lindist-nat", "∂l and ∂r are natural in each variable");
  nat.law("dl-natural-A");
  for (const auto& f : gens) {
    for (auto y : objs) {
      for (auto z : objs) {
        nat.commutes(row(C, f, {y, z}),
                     [&] { return C.compose(b.dl(f.cod, y, z), st(f, pr(id(y), id(z)))); },
                     [&] { return C.compose(pr(st(f, id(y)), id(z)), b.dl(f.dom, y, z)); });
      }
    }
  }
  nat.law("dl-natural-B");
  for (const auto& f : gens) {
    for (auto x : objs) {
      for (auto z : objs) {
        nat.commutes(row(C, f, {x, z}),
                     [&] { return C.compose(b.dl(x, f.cod, z), st(id(x), pr(f, id(z)))); },
                     [&] { return C.compose(pr(st(id(x), f), id(z)), b.dl(x, f.dom, z)); });
      }
    }
  }
  nat.law("dl-natural-C");
  for (const auto& f : gens) {
    for (auto x : objs) {
      for (auto y : objs) {
        nat.commutes(row(C, f, {x, y}),
                     [&] { return C.compose(b.dl(x, y, f.cod), st(id(x), pr(id(y), f))); },
                     [&] { return C.compose(pr(st(id(x), id(y)), f), b.dl(x, y, f.dom)); });
      }
    }
  }
  nat.law("dr-natural-A");
  for (const auto& f : gens) {
    for (auto y : objs) {
      for (auto z : objs) {
        nat.commutes(row(C, f, {y, z}),
                     [&] { return C.compose(b.dr(f.cod, y, z), st(pr(id(y), id(z)), f)); },
                     [&] { return C.compose(pr(id(y), st(id(z), f)), b.dr(f.dom, y, z)); });
      }
    }
  }
  nat.law("dr-natural-B");
  for (const auto& f : gens) {
    for (auto x : objs) {
      for (auto z : objs) {
        nat.commutes(row(C, f, {x, z}),
                     [&] { return C.compose(b.dr(x, f.cod, z), st(pr(f, id(z)), id(x))); },
                     [&] { return C.compose(pr(f, st(id(z), id(x))), b.dr(x, f.dom, z)); });
      }
    }
  }
  nat.law("dr-natural-C");
  for (const auto& f : gens) {
    for (auto x : objs) {
      for (auto y : objs) {
        nat.commutes(row(C, f, {x, y}),
                     [&] { return C.compose(b.dr(x, y, f.cod), st(pr(id(y), f), id(x))); },
                     [&] { return C.compose(pr(id(y), st(f, id(x))), b.dr(x, y, f.dom)); });
      }
    }
  }

  AxiomCheck coh(C, "coh-subset", "unit, associativity and interchange coherence for ∂l, ∂r");
  const Obj I = st.unit;
  const Obj J = pr.unit;
  coh.law("dl-unit-I");
  for (auto y : objs) {
    for (auto z : objs) {
      coh.commutes({y, z}, [&] { return b.dl(I, y, z); }, [&] { return id(pr(y, z)); });
    }
  }
  coh.law("dl-unit-J");
  for (auto x : objs) {
    for (auto y : objs) {
      coh.commutes({x, y}, [&] { return b.dl(x, y, J); }, [&] { return id(st(x, y)); });
    }
  }
  coh.law("dr-unit-I");
  for (auto y : objs) {
    for (auto z : objs) {
      coh.commutes({y, z}, [&] { return b.dr(I, y, z); }, [&] { return id(pr(y, z)); });
    }
  }
  coh.law("dr-unit-J");
  for (auto x : objs) {
    for (auto z : objs) {
      coh.commutes({x, z}, [&] { return b.dr(x, J, z); }, [&] { return id(st(z, x)); });
    }
  }
  for (auto a : objs) {
    for (auto a2 : objs) {
      for (auto y : objs) {
        for (auto z : objs) {
          coh.law("dl-star-assoc");
          coh.commutes({a, a2, y, z}, [&] { return b.dl(st(a, a2), y, z); },
                       [&] {
                         return C.compose(b.dl(a, st(a2, y), z), st(id(a), b.dl(a2, y, z)));
                       });
          coh.law("dr-star-assoc");
          coh.commutes({a, a2, y, z}, [&] { return b.dr(st(a, a2), y, z); },
                       [&] {
                         return C.compose(b.dr(a2, y, st(z, a)), st(b.dr(a, y, z), id(a2)));
                       });
          coh.law("dl-par-assoc");
          coh.commutes({a, a2, y, z}, [&] { return b.dl(a, a2, pr(y, z)); },
                       [&] {
                         return C.compose(pr(b.dl(a, a2, y), id(z)), b.dl(a, pr(a2, y), z));
                       });
          coh.law("dr-par-assoc");
          coh.commutes({a, a2, y, z}, [&] { return b.dr(a, pr(a2, y), z); },
                       [&] {
                         return C.compose(pr(id(a2), b.dr(a, y, z)), b.dr(a, a2, pr(y, z)));
                       });
          // A⋆(B⋄C)⋆D → (A⋆B)⋄(C⋆D), with (a, a2, y, z) = (A, B, C, D).
          coh.law("interchange-star");
          coh.commutes({a, a2, y, z},
                       [&] { return C.compose(b.dr(z, st(a, a2), y), st(b.dl(a, a2, y), id(z))); },
                       [&] { return C.compose(b.dl(a, a2, st(y, z)), st(id(a), b.dr(z, a2, y))); });
          // (A⋄B)⋆(C⋄D) → A⋄(B⋆C)⋄D.
          coh.law("interchange-par");
          coh.commutes({a, a2, y, z},
                       [&] {
                         return C.compose(pr(id(a), b.dl(a2, y, z)), b.dr(pr(y, z), a, a2));
                       },
                       [&] {
                         return C.compose(pr(b.dr(y, a, a2), id(z)), b.dl(pr(a, a2), y, z));
                       });
        }
      }
    }
  }
  coh.note("coherence subset only");

  CheckReport report;
  report.add(nat.finish());
  report.add(coh.finish());
  return report;
}

CheckReport check_triangle_identities(const LindistBundle& b, const NegationStructure& neg,
                                      const Scope& scope) {
  const Category& C = *b.cat;
  const auto& objs = scope.objects;
  const auto gens = scope_generators(C, scope);
  const auto doms = by_domain(gens);
  const Tensor& st = b.star;
  const Tensor& pr = b.par;
  const auto& S = neg.S;
  const auto& Sp = neg.Sp;
  auto id = [&](Obj x) { return C.identity(x); };

  auto functorial = [&](AxiomCheck& check, const ContraFunctor& F, const std::string& name) {
    check.law(name + "-identity");
    for (auto a : objs) check.commutes({a}, [&] { return F(id(a)); }, [&] { return id(F(a)); });
    check.law(name + "-composition");
    for (const auto& f : gens) {
      auto it = doms.find(f.cod);
      if (it == doms.end()) continue;
      for (const Mor* g : it->second) {
        check.commutes({C.describe(*g), C.describe(f)}, [&] { return F(C.compose(*g, f)); },
                       [&] { return C.compose(F(f), F(*g)); });
      }
    }
  };

  AxiomCheck t1(C, "tri-1", "(1⋄e)∘∂r∘(n⋆1) = 1_A");
  t1.law("triangle");
  for (auto a : objs) {
    t1.commutes({a},
                [&] { return C.chain({st(neg.n(a), id(a)), b.dr(a, a, S(a)), pr(id(a), neg.e(a))}); },
                [&] { return id(a); });
  }
  functorial(t1, S, "S");
  t1.law("n-dinatural");
  for (const auto& f : gens) {
    t1.commutes({C.describe(f)}, [&] { return C.compose(pr(f, id(S(f.dom))), neg.n(f.dom)); },
                [&] { return C.compose(pr(id(f.cod), S(f)), neg.n(f.cod)); });
  }

  AxiomCheck t2(C, "tri-2", "(e⋄1)∘∂l∘(1⋆n) = 1_SA");
  t2.law("triangle");
  for (auto a : objs) {
    t2.commutes({a},
                [&] {
                  return C.chain(
                      {st(id(S(a)), neg.n(a)), b.dl(S(a), a, S(a)), pr(neg.e(a), id(S(a)))});
                },
                [&] { return id(S(a)); });
  }
  t2.law("e-dinatural");
  for (const auto& f : gens) {
    t2.commutes({C.describe(f)}, [&] { return C.compose(neg.e(f.dom), st(S(f), id(f.dom))); },
                [&] { return C.compose(neg.e(f.cod), st(id(S(f.cod)), f)); });
  }

  AxiomCheck t3(C, "tri-3", "(e′⋄1)∘∂l∘(1⋆n′) = 1_A");
  t3.law("triangle");
  for (auto a : objs) {
    t3.commutes({a},
                [&] {
                  return C.chain({st(id(a), neg.np(a)), b.dl(a, Sp(a), a), pr(neg.ep(a), id(a))});
                },
                [&] { return id(a); });
  }
  functorial(t3, Sp, "S′");
  t3.law("n′-dinatural");
  for (const auto& f : gens) {
    t3.commutes({C.describe(f)}, [&] { return C.compose(pr(Sp(f), id(f.cod)), neg.np(f.cod)); },
                [&] { return C.compose(pr(id(Sp(f.dom)), f), neg.np(f.dom)); });
  }

  AxiomCheck t4(C, "tri-4", "(1⋄e′)∘∂r∘(n′⋆1) = 1_S′A");
  t4.law("triangle");
  for (auto a : objs) {
    t4.commutes({a},
                [&] {
                  return C.chain(
                      {st(neg.np(a), id(Sp(a))), b.dr(Sp(a), Sp(a), a), pr(id(Sp(a)), neg.ep(a))});
                },
                [&] { return id(Sp(a)); });
  }
  t4.law("e′-dinatural");
  for (const auto& f : gens) {
    t4.commutes({C.describe(f)}, [&] { return C.compose(neg.ep(f.dom), st(id(f.dom), Sp(f))); },
                [&] { return C.compose(neg.ep(f.cod), st(f, id(Sp(f.cod)))); });
  }

  CheckReport report;
  report.add(t1.finish());
  report.add(t2.finish());
  report.add(t3.finish());
  report.add(t4.finish());
  return report;
}

CheckReport check_lindist_suite(const LindistBundle& b, const NegationStructure* neg,
                                const Scope& scope) {
  const Category& C = *b.cat;
  CheckReport report = check_category_laws(C, scope);
  report.merge(check_monoidal_laws(C, b.star, scope));
  report.merge(check_monoidal_laws(C, b.par, scope));
  if (b.sym_star) report.merge(check_symmetry_laws(C, b.star, *b.sym_star, scope));
  if (b.sym_par) report.merge(check_symmetry_laws(C, b.par, *b.sym_par, scope));
  report.merge(check_lindist(b, scope));
  if (neg != nullptr) report.merge(check_triangle_identities(b, *neg, scope));
  return report;
}

namespace {

constexpr std::uint64_t kBijectionEnumLimit = 4096;

/// Distinctness and coverage of images for the exhaustive bijection test.
void exhaustive_bijection(AxiomCheck& check, const Category& C, const std::vector<std::string>& tuple,
                          const std::vector<Mor>& images, const std::vector<Mor>& target) {
  const bool linear = C.kind() == BackendKind::matrix_field;
  if (linear) {
    std::vector<Matrix> img;
    img.reserve(images.size());
    for (const auto& m : images) img.push_back(m.matrix());
    std::sort(img.begin(), img.end());
    const bool injective = std::adjacent_find(img.begin(), img.end()) == img.end();
    check.holds(tuple, [&] { return injective; }, "not-injective",
                "two morphisms have the same transpose");
    check.holds(tuple, [&] { return img.size() == target.size(); }, "not-surjective",
                std::to_string(img.size()) + " images for " + std::to_string(target.size()) +
                    " targets");
    return;
  }
  bool injective = true;
  for (std::size_t i = 0; i < images.size() && injective; ++i) {
    for (std::size_t j = i + 1; j < images.size(); ++j) {
      if (C.equal(images[i], images[j])) {
        injective = false;
        break;
      }
    }
  }
  check.holds(tuple, [&] { return injective; }, "not-injective", "two morphisms have the same transpose");
  std::size_t missing = 0;
  for (const auto& t : target) {
    const bool hit = std::any_of(images.begin(), images.end(),
                                 [&](const Mor& m) { return C.parallel(m, t) && C.equal(m, t); });
    if (!hit) ++missing;
  }
  check.holds(tuple, [&] { return missing == 0; }, "not-surjective",
              std::to_string(missing) + " of " + std::to_string(target.size()) +
                  " morphisms have no preimage");
}

}  // namespace

CheckReport check_star_hom_bijection(const StarAutonomousStructure& sa, const Scope& scope) {
  const Category& C = *sa.cat;
  const auto& objs = scope.objects;
  const Tensor& t = sa.tensor;
  auto id = [&](Obj x) { return C.identity(x); };
  AxiomCheck check(C, "star-iso", "star-autonomous structure");
  check.law("hom-bijection");

  auto transpose = [&](const Mor& f, Obj b, Obj c) {
    return C.compose(sa.eval(b, c), t(f, id(b)));
  };

  for (auto a : objs) {
    for (auto b : objs) {
      for (auto c : objs) {
        const std::vector<std::string> tuple = check.labels({a, b, c});
        Obj src_cod;
        Obj tgt_dom;
        Obj tgt_cod;
        try {
          src_cod = sa.S(t(b, c));
          tgt_dom = t(a, b);
          tgt_cod = sa.S(c);
        } catch (const OutsideClosure&) {
          check.skip();
          continue;
        }
        const std::uint64_t ns = C.hom_size(a, src_cod);
        const std::uint64_t nt = C.hom_size(tgt_dom, tgt_cod);
        if (ns <= kBijectionEnumLimit && nt <= kBijectionEnumLimit) {
          std::vector<Mor> images;
          bool typed = true;
          try {
            for (const auto& f : C.hom(a, src_cod)) {
              Mor g = transpose(f, b, c);
              if (g.dom != tgt_dom || g.cod != tgt_cod) {
                check.count();
                check.fail(tuple, "ill-typed",
                           "transpose lands in " + describe_arrow(C, g) + ", expected " +
                               C.label(tgt_dom) + " -> " + C.label(tgt_cod));
                typed = false;
                break;
              }
              images.push_back(std::move(g));
            }
          } catch (const OutsideClosure&) {
            check.skip();
            continue;
          } catch (const MissingWitness& e) {
            check.count();
            check.fail(tuple, "witness-missing", e.what());
            continue;
          } catch (const CompositionError& e) {
            check.count();
            check.fail(tuple, "ill-typed", e.what());
            continue;
          }
          if (typed) exhaustive_bijection(check, C, tuple, images, C.hom(tgt_dom, tgt_cod));
        } else if (C.kind() == BackendKind::matrix_field) {
          // The transpose map is linear; test it on the elementary matrices.
          const std::size_t n = std::size_t{a.id} * src_cod.id;
          const std::size_t m = std::size_t{tgt_dom.id} * tgt_cod.id;
          const auto& mc = static_cast<const MatrixCategory&>(C);
          Matrix M(mc.prime(), m, n);
          bool ok = true;
          try {
            for (std::size_t k = 0; k < n; ++k) {
              Matrix e(mc.prime(), src_cod.id, a.id);
              e.set(k / a.id, k % a.id, 1);
              const Mor g = transpose(mc.morphism(a, src_cod, e), b, c);
              if (g.dom != tgt_dom || g.cod != tgt_cod) {
                ok = false;
                break;
              }
              const Matrix& gm = g.matrix();
              for (std::size_t r = 0; r < gm.rows(); ++r) {
                for (std::size_t col = 0; col < gm.cols(); ++col) M.set(r * gm.cols() + col, k, gm(r, col));
              }
            }
          } catch (const CompositionError& e) {
            check.count();
            check.fail(tuple, "ill-typed", e.what());
            continue;
          }
          const std::size_t rank = ok ? M.rank() : 0;
          check.holds(tuple, [&] { return ok && n == m && rank == n; }, "not-bijective",
                      "transpose map has rank " + std::to_string(rank) + " between spaces of dimension " +
                          std::to_string(n) + " and " + std::to_string(m));
        } else {
          check.skip();
          check.note("hom-set too large for the bijection test at (" + tuple[0] + ", " + tuple[1] +
                     ", " + tuple[2] + ")");
        }
      }
    }
  }

  check.law("hom-bijection-natural");
  const auto gens = scope_generators(C, scope);
  const auto doms = by_domain(gens);
  for (auto b : objs) {
    for (auto c : objs) {
      Obj target;
      try {
        target = sa.S(t(b, c));
      } catch (const OutsideClosure&) {
        check.skip();
        continue;
      }
      for (const auto& g : gens) {
        std::vector<Mor> fs;
        try {
          fs = C.hom_generators(g.cod, target, scope.generator_limit);
        } catch (const ScopeTooLarge&) {
          continue;
        }
        for (const auto& f : fs) {
          check.commutes({C.describe(f), C.describe(g), C.label(b), C.label(c)},
                         [&] { return transpose(C.compose(f, g), b, c); },
                         [&] { return C.compose(transpose(f, b, c), t(g, id(b))); });
        }
      }
    }
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_star_structure(const StarAutonomousStructure& sa, const Scope& scope) {
  const Category& C = *sa.cat;
  const auto& objs = scope.objects;
  const auto gens = scope_generators(C, scope);
  const auto doms = by_domain(gens);
  const auto& S = sa.S;
  const auto& Sp = sa.Sp;
  auto id = [&](Obj x) { return C.identity(x); };
  AxiomCheck check(C, "star-iso", "star-autonomous structure");

  for (const auto* F : {&S, &Sp}) {
    const std::string name = F == &S ? "S" : "S′";
    check.law(name + "-identity");
    for (auto a : objs) check.commutes({a}, [&] { return (*F)(id(a)); }, [&] { return id((*F)(a)); });
    check.law(name + "-composition");
    for (const auto& f : gens) {
      auto it = doms.find(f.cod);
      if (it == doms.end()) continue;
      for (const Mor* g : it->second) {
        check.commutes({C.describe(*g), C.describe(f)}, [&] { return (*F)(C.compose(*g, f)); },
                       [&] { return C.compose((*F)(f), (*F)(*g)); });
      }
    }
  }
  check.law("unit-iso");
  for (auto a : objs) {
    check.commutes({a}, [&] { return C.compose(sa.unit_inv(a), sa.unit(a)); }, [&] { return id(a); });
    check.commutes({a}, [&] { return C.compose(sa.unit(a), sa.unit_inv(a)); },
                   [&] { return id(Sp(S(a))); });
  }
  check.law("counit-iso");
  for (auto a : objs) {
    check.commutes({a}, [&] { return C.compose(sa.counit(a), sa.counit_inv(a)); }, [&] { return id(a); });
    check.commutes({a}, [&] { return C.compose(sa.counit_inv(a), sa.counit(a)); },
                   [&] { return id(S(Sp(a))); });
  }
  check.law("unit-natural");
  for (const auto& f : gens) {
    check.commutes({C.describe(f)}, [&] { return C.compose(Sp(S(f)), sa.unit(f.dom)); },
                   [&] { return C.compose(sa.unit(f.cod), f); });
  }
  check.law("counit-natural");
  for (const auto& f : gens) {
    check.commutes({C.describe(f)}, [&] { return C.compose(f, sa.counit(f.dom)); },
                   [&] { return C.compose(sa.counit(f.cod), S(Sp(f))); });
  }
  check.law("par-form-iso");
  for (auto a : objs) {
    for (auto b : objs) {
      check.commutes({a, b}, [&] { return C.compose(sa.par_form_inv(a, b), sa.par_form(a, b)); },
                     [&] { return id(Sp(sa.tensor(S(b), S(a)))); });
      check.commutes({a, b}, [&] { return C.compose(sa.par_form(a, b), sa.par_form_inv(a, b)); },
                     [&] { return id(S(sa.tensor(Sp(b), Sp(a)))); });
    }
  }
  check.law("unit-comparison");
  check.holds(std::vector<std::string>{C.label(sa.tensor.unit)},
              [&] {
                const Mor u = sa.unit_cmp();
                return u.dom == Sp(sa.tensor.unit) && u.cod == S(sa.tensor.unit);
              },
              "ill-typed", "unit comparison is not a map S′I → SI");

  CheckReport report;
  report.add(check.finish());
  report.merge(check_star_hom_bijection(sa, scope));
  return report;
}

CheckReport check_star_suite(const StarAutonomousStructure& sa, const Scope& scope) {
  const Category& C = *sa.cat;
  CheckReport report = check_category_laws(C, scope);
  report.merge(check_monoidal_laws(C, sa.tensor, scope));
  if (sa.sym) report.merge(check_symmetry_laws(C, sa.tensor, *sa.sym, scope));
  report.merge(check_star_structure(sa, scope));
  return report;
}

// ----------------------------------------------------------- translations

namespace {

struct LindistContext {
  LindistBundle b;
  NegationStructure neg;

  const Category& cat() const { return *b.cat; }
  Mor id(Obj x) const { return b.cat->identity(x); }

  /// τ_{A,B} : A⋄B → S′(SB⋆SA).
  Mor tau(Obj a, Obj c) const {
    const auto& st = b.star;
    const auto& pr = b.par;
    const Obj x = st(neg.S(c), neg.S(a));
    const Obj ab = pr(a, c);
    const Mor inner = cat().compose(pr(neg.e(a), id(c)), b.dl(neg.S(a), a, c));
    const Mor k = cat().compose(neg.e(c), st(id(neg.S(c)), inner));
    return cat().chain({st(neg.np(x), id(ab)), b.dr(ab, neg.Sp(x), x), pr(id(neg.Sp(x)), k)});
  }

  /// τ⁻¹_{A,B} : S′(SB⋆SA) → A⋄B.
  Mor tau_inv(Obj a, Obj c) const {
    const auto& st = b.star;
    const auto& pr = b.par;
    const Obj x = st(neg.S(c), neg.S(a));
    const Obj spx = neg.Sp(x);
    const Obj y = st(neg.S(a), spx);
    const Mor m = cat().chain({st(neg.n(c), id(y)), b.dr(y, c, neg.S(c)), pr(id(c), neg.ep(x))});
    return cat().chain({st(neg.n(a), id(spx)), b.dr(spx, a, neg.S(a)), pr(id(a), m)});
  }

  /// A⋄B → S(S′B⋆S′A).
  Mor tau_s(Obj a, Obj c) const {
    const auto& st = b.star;
    const auto& pr = b.par;
    const Obj x = st(neg.Sp(c), neg.Sp(a));
    const Obj ab = pr(a, c);
    const Mor inner = cat().compose(pr(id(a), neg.ep(c)), b.dr(neg.Sp(c), a, c));
    const Mor k = cat().compose(neg.ep(a), st(inner, id(neg.Sp(a))));
    return cat().chain({st(id(ab), neg.n(x)), b.dl(ab, x, neg.S(x)), pr(k, id(neg.S(x)))});
  }

  /// S(S′B⋆S′A) → A⋄B.
  Mor tau_s_inv(Obj a, Obj c) const {
    const auto& st = b.star;
    const auto& pr = b.par;
    const Obj x = st(neg.Sp(c), neg.Sp(a));
    const Obj sx = neg.S(x);
    const Obj y = st(sx, neg.Sp(c));
    const Mor m = cat().chain({st(id(y), neg.np(a)), b.dl(y, neg.Sp(a), a), pr(neg.e(x), id(a))});
    return cat().chain({st(id(sx), neg.np(c)), b.dl(sx, neg.Sp(c), c), pr(m, id(c))});
  }
};

}  // namespace

StarTranslation star_from_lindist_unchecked(const LindistBundle& bundle,
                                            const NegationStructure& neg) {
  auto ctx = std::make_shared<const LindistContext>(LindistContext{bundle, neg});
  StarTranslation out;
  StarAutonomousStructure& sa = out.star;
  sa.cat = bundle.cat;
  sa.tensor = bundle.star;
  sa.S = neg.S;
  sa.Sp = neg.Sp;
  sa.sym = bundle.sym_star;

  sa.unit = [ctx](Obj a) {
    const auto& [b, n] = *ctx;
    const Obj sa_ = n.S(a);
    return b.cat->chain({b.star(n.np(sa_), ctx->id(a)), b.dr(a, n.Sp(sa_), sa_),
                         b.par(ctx->id(n.Sp(sa_)), n.e(a))});
  };
  sa.unit_inv = [ctx](Obj a) {
    const auto& [b, n] = *ctx;
    const Obj sa_ = n.S(a);
    const Obj spsa = n.Sp(sa_);
    return b.cat->chain({b.star(n.n(a), ctx->id(spsa)), b.dr(spsa, a, sa_),
                         b.par(ctx->id(a), n.ep(sa_))});
  };
  sa.counit_inv = [ctx](Obj a) {
    const auto& [b, n] = *ctx;
    const Obj spa = n.Sp(a);
    const Obj sspa = n.S(spa);
    return b.cat->chain({b.star(ctx->id(a), n.n(spa)), b.dl(a, spa, sspa),
                         b.par(n.ep(a), ctx->id(sspa))});
  };
  sa.counit = [ctx](Obj a) {
    const auto& [b, n] = *ctx;
    const Obj spa = n.Sp(a);
    const Obj sspa = n.S(spa);
    return b.cat->chain({b.star(ctx->id(sspa), n.np(a)), b.dl(sspa, spa, a),
                         b.par(n.e(spa), ctx->id(a))});
  };
  sa.eval = [ctx](Obj a, Obj c) {
    const auto& [b, n] = *ctx;
    const Obj ac = b.star(a, c);
    const Obj x = b.star(n.S(ac), a);
    return b.cat->chain({b.star(ctx->id(x), n.n(c)), b.dl(x, c, n.S(c)),
                         b.par(n.e(ac), ctx->id(n.S(c)))});
  };
  sa.eval_prime = [ctx](Obj c, Obj a) {
    const auto& [b, n] = *ctx;
    const Obj ac = b.star(a, c);
    const Obj y = b.star(c, n.Sp(ac));
    return b.cat->chain({b.star(n.np(a), ctx->id(y)), b.dr(y, n.Sp(a), a),
                         b.par(ctx->id(n.Sp(a)), n.ep(ac))});
  };
  sa.par_form = [ctx](Obj a, Obj c) { return ctx->cat().compose(ctx->tau_s(a, c), ctx->tau_inv(a, c)); };
  sa.par_form_inv = [ctx](Obj a, Obj c) {
    return ctx->cat().compose(ctx->tau(a, c), ctx->tau_s_inv(a, c));
  };
  sa.unit_cmp = [ctx] {
    const auto& [b, n] = *ctx;
    const Obj I = b.star.unit;
    const Obj J = b.par.unit;
    const Mor to_s = b.cat->compose(b.dl(J, I, n.S(I)), b.star(ctx->id(J), n.n(I)));
    return b.cat->compose(to_s, n.ep(I));
  };

  out.certificate.tau = [ctx](Obj a, Obj c) { return ctx->tau(a, c); };
  out.certificate.tau_inv = [ctx](Obj a, Obj c) { return ctx->tau_inv(a, c); };
  out.certificate.unit_cmp = neg.e(bundle.star.unit);
  out.certificate.conventions = {
      "unit isomorphisms I⋆A ≅ A and A⋄J ≅ A are identities",
      "A⋄B is compared with S′(SB⋆SA) through τ = (1⋄k)∘∂r∘(n′⋆1)",
      "J is compared with SI through e_I",
  };
  return out;
}

LindistTranslation lindist_from_star_unchecked(const StarAutonomousStructure& sa_in) {
  auto ctx = std::make_shared<const StarAutonomousStructure>(sa_in);
  LindistTranslation out;
  LindistBundle& b = out.bundle;
  b.cat = sa_in.cat;
  b.star = sa_in.tensor;
  b.star.tag = "⋆";
  b.sym_star = sa_in.sym;

  b.par.tag = "⋄";
  b.par.unit = sa_in.S(sa_in.tensor.unit);
  b.par.obj = [ctx](Obj a, Obj c) { return ctx->Sp(ctx->tensor(ctx->S(c), ctx->S(a))); };
  b.par.mor = [ctx](const Mor& f, const Mor& g) {
    return ctx->Sp(ctx->tensor(ctx->S(g), ctx->S(f)));
  };

  auto id = [ctx](Obj x) { return ctx->cat->identity(x); };
  b.dl = [ctx, id](Obj a, Obj y, Obj z) {
    const auto& s = *ctx;
    const Obj x = s.tensor(s.S(z), s.S(s.tensor(a, y)));
    return s.cat->compose(s.eval_prime(a, x), s.tensor(id(a), s.Sp(s.tensor(id(s.S(z)), s.eval(a, y)))));
  };
  b.dr = [ctx, id](Obj a, Obj y, Obj z) {
    const auto& s = *ctx;
    const Obj za = s.tensor(z, a);
    const Obj w = s.tensor(s.Sp(za), s.Sp(y));
    return s.cat->chain({s.tensor(s.par_form(y, z), id(a)),
                         s.tensor(s.S(s.tensor(s.eval_prime(a, z), id(s.Sp(y)))), id(a)),
                         s.eval(a, w), s.par_form_inv(y, za)});
  };

  NegationStructure& neg = out.negation;
  neg.S = sa_in.S;
  neg.Sp = sa_in.Sp;
  neg.e = [ctx](Obj a) { return ctx->eval(a, ctx->tensor.unit); };
  neg.ep = [ctx](Obj a) {
    return ctx->cat->compose(ctx->unit_cmp(), ctx->eval_prime(a, ctx->tensor.unit));
  };
  neg.n = [ctx, id](Obj a) {
    const auto& s = *ctx;
    const Obj I = s.tensor.unit;
    return s.cat->chain({s.counit_inv(I), s.S(s.eval_prime(a, I)),
                         s.S(s.tensor(s.unit_inv(a), id(s.Sp(a)))), s.par_form_inv(a, s.S(a))});
  };
  neg.np = [ctx, id](Obj a) {
    const auto& s = *ctx;
    const Obj I = s.tensor.unit;
    return s.cat->chain(
        {s.unit(I), s.Sp(s.eval(a, I)), s.Sp(s.tensor(id(s.S(a)), s.counit(a)))});
  };
  return out;
}

StarTranslation star_from_lindist(const LindistBundle& bundle, const NegationStructure& neg,
                                  const Scope& scope) {
  CheckReport pre = check_lindist_suite(bundle, &neg, scope);
  if (!pre.pass()) throw PreconditionError("linearly distributive structure fails its checks", pre);
  return star_from_lindist_unchecked(bundle, neg);
}

LindistTranslation lindist_from_star(const StarAutonomousStructure& sa, const Scope& scope) {
  CheckReport pre = check_star_suite(sa, scope);
  if (!pre.pass()) throw PreconditionError("star-autonomous structure fails its checks", pre);
  return lindist_from_star_unchecked(sa);
}

CheckReport check_round_trip(const LindistBundle& b, const NegationStructure& neg,
                             const Scope& scope) {
  const Category& C = *b.cat;
  const auto& objs = scope.objects;
  const StarTranslation st = star_from_lindist_unchecked(b, neg);
  const LindistTranslation back = lindist_from_star_unchecked(st.star);
  const auto& cert = st.certificate;
  const LindistBundle& b2 = back.bundle;
  const NegationStructure& n2 = back.negation;
  auto id = [&](Obj x) { return C.identity(x); };
  const Obj I = b.star.unit;

  AxiomCheck check(C, "star-iso", "lindist → star → lindist round trip");
  check.law("par-objects");
  for (auto a : objs) {
    for (auto c : objs) {
      check.holds({a, c}, [&] { return b2.par(a, c) == b.par(a, c); }, "mismatch",
                  "derived par object differs from the native one");
    }
  }
  check.holds(std::vector<std::string>{"J"}, [&] { return b2.par.unit == b.par.unit; }, "mismatch",
              "derived unit SI differs from J");

  const auto gens = scope_generators(C, scope);
  check.law("tau-natural");
  for (const auto& f : gens) {
    for (const auto& g : gens) {
      check.commutes({C.describe(f), C.describe(g)},
                     [&] { return C.compose(cert.tau(f.cod, g.cod), b.par(f, g)); },
                     [&] { return C.compose(b2.par(f, g), cert.tau(f.dom, g.dom)); });
    }
  }
  check.law("tau-iso");
  for (auto a : objs) {
    for (auto c : objs) {
      check.commutes({a, c}, [&] { return C.compose(cert.tau_inv(a, c), cert.tau(a, c)); },
                     [&] { return id(b.par(a, c)); });
      check.commutes({a, c}, [&] { return C.compose(cert.tau(a, c), cert.tau_inv(a, c)); },
                     [&] { return id(b2.par(a, c)); });
    }
  }
  for (auto a : objs) {
    for (auto y : objs) {
      for (auto z : objs) {
        check.law("dl-roundtrip");
        check.commutes({a, y, z}, [&] { return C.compose(b2.dl(a, y, z), b.star(id(a), cert.tau(y, z))); },
                       [&] { return C.compose(cert.tau(b.star(a, y), z), b.dl(a, y, z)); });
        check.law("dr-roundtrip");
        check.commutes({a, y, z}, [&] { return C.compose(b2.dr(a, y, z), b.star(cert.tau(y, z), id(a))); },
                       [&] { return C.compose(cert.tau(y, b.star(z, a)), b.dr(a, y, z)); });
      }
    }
  }
  for (auto a : objs) {
    check.law("e-roundtrip");
    check.commutes({a}, [&] { return C.compose(neg.e(I), n2.e(a)); }, [&] { return neg.e(a); });
    check.law("n-roundtrip");
    check.commutes({a}, [&] { return C.compose(cert.tau(a, neg.S(a)), neg.n(a)); },
                   [&] { return n2.n(a); });
    check.law("e′-roundtrip");
    check.commutes({a}, [&] { return C.compose(neg.e(I), n2.ep(a)); }, [&] { return neg.ep(a); });
    check.law("n′-roundtrip");
    check.commutes({a}, [&] { return C.compose(cert.tau(neg.Sp(a), a), neg.np(a)); },
                   [&] { return n2.np(a); });
  }
  for (const auto& c : cert.conventions) check.note(c);
  CheckReport report;
  report.add(check.finish());
  return report;
}

}  // namespace ldlab
