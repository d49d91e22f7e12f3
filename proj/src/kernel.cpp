#include "ldlab/kernel.hpp"

#include <map>

namespace ldlab {

std::vector<Mor> scope_generators(const Category& cat, const Scope& scope) {
  std::vector<Mor> out;
  for (auto a : scope.objects) {
    for (auto b : scope.objects) {
      auto hom = cat.hom_generators(a, b, scope.generator_limit);
      out.insert(out.end(), hom.begin(), hom.end());
    }
  }
  return out;
}

namespace {

bool any_spanning(const Category& cat, const Scope& scope) {
  for (auto a : scope.objects) {
    for (auto b : scope.objects) {
      if (cat.spans_only(a, b, scope.generator_limit)) return true;
    }
  }
  return false;
}

}  // namespace

CheckReport check_category_laws(const Category& cat, const Scope& scope) {
  AxiomCheck check(cat, "cat", "composition is associative and unital");
  const auto gens = scope_generators(cat, scope);
  std::map<Obj, std::vector<const Mor*>> by_dom;
  for (const auto& f : gens) by_dom[f.dom].push_back(&f);

  check.law("left-identity");
  for (const auto& f : gens) {
    check.commutes({cat.describe(f)}, [&] { return cat.compose(cat.identity(f.cod), f); },
                   [&] { return f; });
  }
  check.law("right-identity");
  for (const auto& f : gens) {
    check.commutes({cat.describe(f)}, [&] { return cat.compose(f, cat.identity(f.dom)); },
                   [&] { return f; });
  }
  check.law("associativity");
  for (const auto& f : gens) {
    for (const Mor* g : by_dom[f.cod]) {
      for (const Mor* h : by_dom[g->cod]) {
        check.commutes({cat.describe(*h), cat.describe(*g), cat.describe(f)},
                       [&] { return cat.compose(*h, cat.compose(*g, f)); },
                       [&] { return cat.compose(cat.compose(*h, *g), f); });
      }
    }
  }
  if (any_spanning(cat, scope)) check.note("large hom-sets checked on a spanning set");
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_monoidal_laws(const Category& cat, const Tensor& t, const Scope& scope) {
  AxiomCheck check(cat, "mon-" + t.tag, "strict monoidal structure " + t.tag);
  const auto& objs = scope.objects;

  check.law("associativity-objects");
  for (auto a : objs) {
    for (auto b : objs) {
      for (auto c : objs) {
        check.holds({a, b, c}, [&] { return t(t(a, b), c) == t(a, t(b, c)); }, "mismatch",
                    "(A" + t.tag + "B)" + t.tag + "C differs from A" + t.tag + "(B" + t.tag + "C)");
      }
    }
  }
  check.law("unit-objects");
  for (auto a : objs) {
    check.holds({a}, [&] { return t(t.unit, a) == a; }, "mismatch",
                "unit " + cat.label(t.unit) + " is not a left unit: got " + [&] {
                  try {
                    return cat.label(t(t.unit, a));
                  } catch (const std::exception& e) {
                    return std::string(e.what());
                  }
                }());
    check.holds({a}, [&] { return t(a, t.unit) == a; }, "mismatch",
                "unit " + cat.label(t.unit) + " is not a right unit");
  }
  check.law("identities");
  for (auto a : objs) {
    for (auto b : objs) {
      check.commutes({a, b}, [&] { return t(cat.identity(a), cat.identity(b)); },
                     [&] { return cat.identity(t(a, b)); });
    }
  }

  const auto gens = scope_generators(cat, scope);
  std::map<Obj, std::vector<const Mor*>> by_dom;
  for (const auto& f : gens) by_dom[f.dom].push_back(&f);

  check.law("functorial-left");
  for (const auto& f1 : gens) {
    for (const Mor* f2 : by_dom[f1.cod]) {
      for (auto b : objs) {
        const auto id = cat.identity(b);
        check.commutes({cat.describe(*f2), cat.describe(f1), cat.label(b)},
                       [&] { return t(cat.compose(*f2, f1), id); },
                       [&] { return cat.compose(t(*f2, id), t(f1, id)); });
      }
    }
  }
  check.law("functorial-right");
  for (const auto& g1 : gens) {
    for (const Mor* g2 : by_dom[g1.cod]) {
      for (auto a : objs) {
        const auto id = cat.identity(a);
        check.commutes({cat.label(a), cat.describe(*g2), cat.describe(g1)},
                       [&] { return t(id, cat.compose(*g2, g1)); },
                       [&] { return cat.compose(t(id, *g2), t(id, g1)); });
      }
    }
  }
  check.law("interchange");
  for (const auto& f : gens) {
    for (const auto& g : gens) {
      const std::vector<std::string> tuple{cat.describe(f), cat.describe(g)};
      check.commutes(tuple, [&] { return t(f, g); },
                     [&] { return cat.compose(t(f, cat.identity(g.cod)), t(cat.identity(f.dom), g)); });
      check.commutes(tuple, [&] { return t(f, g); },
                     [&] { return cat.compose(t(cat.identity(f.cod), g), t(f, cat.identity(g.dom))); });
    }
  }
  if (any_spanning(cat, scope)) check.note("large hom-sets checked on a spanning set");
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_symmetry_laws(const Category& cat, const Tensor& t, const Family2& c,
                                const Scope& scope) {
  AxiomCheck check(cat, "sym", "symmetry for " + t.tag);
  const auto& objs = scope.objects;
  const auto gens = scope_generators(cat, scope);

  check.law("naturality");
  for (const auto& f : gens) {
    for (const auto& g : gens) {
      check.commutes({cat.describe(f), cat.describe(g)},
                     [&] { return cat.compose(c(f.cod, g.cod), t(f, g)); },
                     [&] { return cat.compose(t(g, f), c(f.dom, g.dom)); });
    }
  }
  check.law("involution");
  for (auto a : objs) {
    for (auto b : objs) {
      check.commutes({a, b}, [&] { return cat.compose(c(b, a), c(a, b)); },
                     [&] { return cat.identity(t(a, b)); });
    }
  }
  check.law("hexagon");
  for (auto a : objs) {
    for (auto b : objs) {
      for (auto d : objs) {
        check.commutes({a, b, d}, [&] { return c(a, t(b, d)); },
                       [&] {
                         return cat.compose(t(cat.identity(b), c(a, d)), t(c(a, b), cat.identity(d)));
                       });
        check.commutes({a, b, d}, [&] { return c(t(a, b), d); },
                       [&] {
                         return cat.compose(t(c(a, d), cat.identity(b)), t(cat.identity(a), c(b, d)));
                       });
      }
    }
  }
  if (any_spanning(cat, scope)) check.note("large hom-sets checked on a spanning set");
  CheckReport report;
  report.add(check.finish());
  return report;
}

}  // namespace ldlab
