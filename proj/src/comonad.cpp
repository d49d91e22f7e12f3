#include "ldlab/comonad.hpp"

#include <map>

#include "ldlab/kernel.hpp"

namespace ldlab {

namespace {

std::map<Obj, std::vector<const Mor*>> by_domain(const std::vector<Mor>& gens) {
  std::map<Obj, std::vector<const Mor*>> out;
  for (const auto& f : gens) out[f.dom].push_back(&f);
  return out;
}

const Family2& require(const std::optional<Family2>& f, const char* what) {
  if (!f) throw MissingStructure(std::string("comonad has no ") + what);
  return *f;
}

const Family0& require(const std::optional<Family0>& f, const char* what) {
  if (!f) throw MissingStructure(std::string("comonad has no ") + what);
  return *f;
}

}  // namespace

CheckReport check_comonad(const ComonadBundle& cb, const Scope& scope) {
  const Category& C = *cb.cat;
  const auto& objs = scope.objects;
  const auto gens = scope_generators(C, scope);
  const auto doms = by_domain(gens);
  const auto& G = cb.G;
  auto id = [&](Obj x) { return C.identity(x); };

  AxiomCheck check(C, "comonad", "comonad laws");
  check.law("G-identity");
  for (auto a : objs) check.commutes({a}, [&] { return G(id(a)); }, [&] { return id(G(a)); });
  check.law("G-composition");
  for (const auto& f : gens) {
    auto it = doms.find(f.cod);
    if (it == doms.end()) continue;
    for (const Mor* g : it->second) {
      check.commutes({C.describe(*g), C.describe(f)}, [&] { return G(C.compose(*g, f)); },
                     [&] { return C.compose(G(*g), G(f)); });
    }
  }
  check.law("delta-natural");
  for (const auto& f : gens) {
    check.commutes({C.describe(f)}, [&] { return C.compose(G(G(f)), cb.delta(f.dom)); },
                   [&] { return C.compose(cb.delta(f.cod), G(f)); });
  }
  check.law("eps-natural");
  for (const auto& f : gens) {
    check.commutes({C.describe(f)}, [&] { return C.compose(f, cb.eps(f.dom)); },
                   [&] { return C.compose(cb.eps(f.cod), G(f)); });
  }
  check.law("coassociative");
  for (auto a : objs) {
    check.commutes({a}, [&] { return C.compose(G(cb.delta(a)), cb.delta(a)); },
                   [&] { return C.compose(cb.delta(G(a)), cb.delta(a)); });
  }
  check.law("counit");
  for (auto a : objs) {
    check.commutes({a}, [&] { return C.compose(G(cb.eps(a)), cb.delta(a)); }, [&] { return id(G(a)); });
    check.commutes({a}, [&] { return C.compose(cb.eps(G(a)), cb.delta(a)); }, [&] { return id(G(a)); });
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_monoidal_comonad(const ComonadBundle& cb, const Tensor& t, Side side,
                                   const Scope& scope) {
  const bool star = side == Side::star;
  const Family2& phi = require(star ? cb.phi : cb.psi, star ? "φ" : "ψ");
  const Family0& phi0 = require(star ? cb.phi0 : cb.psi0, star ? "φ0" : "ψ0");
  const Category& C = *cb.cat;
  const auto& objs = scope.objects;
  const auto gens = scope_generators(C, scope);
  const auto& G = cb.G;
  auto id = [&](Obj x) { return C.identity(x); };
  const Obj I = t.unit;

  AxiomCheck check(C, star ? "moncom-⋆" : "moncom-⋄",
                   std::string("monoidal comonad for ") + (star ? "⋆" : "⋄"));
  check.law("natural");
  for (const auto& f : gens) {
    for (const auto& g : gens) {
      check.commutes({C.describe(f), C.describe(g)},
                     [&] { return C.compose(phi(f.cod, g.cod), t(G(f), G(g))); },
                     [&] { return C.compose(G(t(f, g)), phi(f.dom, g.dom)); });
    }
  }
  check.law("associative");
  for (auto a : objs) {
    for (auto b : objs) {
      for (auto c : objs) {
        check.commutes({a, b, c}, [&] { return C.compose(phi(t(a, b), c), t(phi(a, b), id(G(c)))); },
                       [&] { return C.compose(phi(a, t(b, c)), t(id(G(a)), phi(b, c))); });
      }
    }
  }
  check.law("unital");
  for (auto a : objs) {
    check.commutes({a}, [&] { return C.compose(phi(I, a), t(phi0(), id(G(a)))); },
                   [&] { return id(G(a)); });
    check.commutes({a}, [&] { return C.compose(phi(a, I), t(id(G(a)), phi0())); },
                   [&] { return id(G(a)); });
  }
  check.law("delta-monoidal");
  for (auto a : objs) {
    for (auto b : objs) {
      check.commutes({a, b}, [&] { return C.compose(cb.delta(t(a, b)), phi(a, b)); },
                     [&] {
                       return C.chain({t(cb.delta(a), cb.delta(b)), phi(G(a), G(b)), G(phi(a, b))});
                     });
    }
  }
  check.commutes(std::vector<std::string>{C.label(I)},
                 [&] { return C.compose(cb.delta(I), phi0()); },
                 [&] { return C.compose(G(phi0()), phi0()); });
  check.law("eps-monoidal");
  for (auto a : objs) {
    for (auto b : objs) {
      check.commutes({a, b}, [&] { return C.compose(cb.eps(t(a, b)), phi(a, b)); },
                     [&] { return t(cb.eps(a), cb.eps(b)); });
    }
  }
  check.commutes(std::vector<std::string>{C.label(I)}, [&] { return C.compose(cb.eps(I), phi0()); },
                 [&] { return id(I); });
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_L1(const ComonadBundle& cb, const LindistBundle& b, const Scope& scope) {
  const Family2& phi = require(cb.phi, "φ");
  const Family2& psi = require(cb.psi, "ψ");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  auto id = [&](Obj x) { return C.identity(x); };
  AxiomCheck check(C, "L1", "∂l lifts to coalgebras");
  check.law("hexagon");
  for (auto a : scope.objects) {
    for (auto y : scope.objects) {
      for (auto z : scope.objects) {
        check.commutes({a, y, z},
                       [&] {
                         return C.chain({b.star(id(G(a)), psi(y, z)), phi(a, b.par(y, z)),
                                         G(b.dl(a, y, z))});
                       },
                       [&] {
                         return C.chain({b.dl(G(a), G(y), G(z)), b.par(phi(a, y), id(G(z))),
                                         psi(b.star(a, y), z)});
                       });
      }
    }
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_L2(const ComonadBundle& cb, const LindistBundle& b, const Scope& scope) {
  const Family2& phi = require(cb.phi, "φ");
  const Family2& psi = require(cb.psi, "ψ");
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  auto id = [&](Obj x) { return C.identity(x); };
  AxiomCheck check(C, "L2", "∂r lifts to coalgebras");
  check.law("hexagon");
  for (auto a : scope.objects) {
    for (auto y : scope.objects) {
      for (auto z : scope.objects) {
        check.commutes({a, y, z},
                       [&] {
                         return C.chain({b.star(psi(y, z), id(G(a))), phi(b.par(y, z), a),
                                         G(b.dr(a, y, z))});
                       },
                       [&] {
                         return C.chain({b.dr(G(a), G(y), G(z)), b.par(id(G(y)), phi(z, a)),
                                         psi(y, b.star(z, a))});
                       });
      }
    }
  }
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_nu(const ComonadBundle& cb, const ContraFunctor& S, const ContraFunctor& Sp,
                     const NegationLift& lift, const Scope& scope) {
  const Category& C = *cb.cat;
  const auto& G = cb.G;
  const auto gens = scope_generators(C, scope);
  AxiomCheck first(C, "nu-1", "ε_{SG}∘ν = Sε and ν natural");
  AxiomCheck second(C, "nu-2", "δ_{SG}∘ν = G²Sδ∘Gν_G∘ν");

  auto run = [&](const ContraFunctor& F, const Family1& nu, const std::string& suffix) {
    first.law("counit" + suffix);
    for (auto a : scope.objects) {
      first.commutes({a}, [&] { return C.compose(cb.eps(F(G(a))), nu(a)); },
                     [&] { return F(cb.eps(a)); });
    }
    first.law("natural" + suffix);
    for (const auto& f : gens) {
      first.commutes({C.describe(f)}, [&] { return C.compose(nu(f.dom), F(f)); },
                     [&] { return C.compose(G(F(G(f))), nu(f.cod)); });
    }
    second.law("comultiplication" + suffix);
    for (auto a : scope.objects) {
      second.commutes({a}, [&] { return C.compose(cb.delta(F(G(a))), nu(a)); },
                      [&] { return C.chain({nu(a), G(nu(G(a))), G(G(F(cb.delta(a))))}); });
    }
  };
  run(S, lift.nu, "");
  if (lift.nup) run(Sp, lift.nup, "′");
  CheckReport report;
  report.add(first.finish());
  report.add(second.finish());
  return report;
}

CheckReport check_bialgebra(const Bialgebra& bi, const LindistBundle& bundle, const Scope&) {
  if (!bundle.sym_par) throw MissingStructure("bialgebra laws need a symmetry for ⋄");
  const Category& C = *bundle.cat;
  const Tensor& p = bundle.par;
  const Family2& c = *bundle.sym_par;
  const Obj B = bi.carrier;
  const Mor one = C.identity(B);
  const std::vector<std::string> tuple{C.label(B)};
  AxiomCheck check(C, "comonad", "bialgebra laws");
  check.law("bialgebra-associative");
  check.commutes(tuple, [&] { return C.compose(bi.mu, p(bi.mu, one)); },
                 [&] { return C.compose(bi.mu, p(one, bi.mu)); });
  check.law("bialgebra-unit");
  check.commutes(tuple, [&] { return C.compose(bi.mu, p(bi.eta, one)); }, [&] { return one; });
  check.commutes(tuple, [&] { return C.compose(bi.mu, p(one, bi.eta)); }, [&] { return one; });
  check.law("bialgebra-coassociative");
  check.commutes(tuple, [&] { return C.compose(p(bi.d, one), bi.d); },
                 [&] { return C.compose(p(one, bi.d), bi.d); });
  check.law("bialgebra-counit");
  check.commutes(tuple, [&] { return C.compose(p(bi.cu, one), bi.d); }, [&] { return one; });
  check.commutes(tuple, [&] { return C.compose(p(one, bi.cu), bi.d); }, [&] { return one; });
  check.law("bialgebra-compatible");
  check.commutes(tuple, [&] { return C.compose(bi.d, bi.mu); },
                 [&] { return C.chain({p(bi.d, bi.d), p(p(one, c(B, B)), one), p(bi.mu, bi.mu)}); });
  check.commutes(tuple, [&] { return C.compose(bi.cu, bi.mu); }, [&] { return p(bi.cu, bi.cu); });
  check.commutes(tuple, [&] { return C.compose(bi.d, bi.eta); }, [&] { return p(bi.eta, bi.eta); });
  check.commutes(tuple, [&] { return C.compose(bi.cu, bi.eta); },
                 [&] { return C.identity(p.unit); });
  CheckReport report;
  report.add(check.finish());
  return report;
}

CheckReport check_hopf(const HopfAlgebra& h, const LindistBundle& bundle, const Scope& scope) {
  CheckReport report = check_bialgebra(h.bialgebra(), bundle, scope);
  const Category& C = *bundle.cat;
  const Tensor& p = bundle.par;
  const Mor one = C.identity(h.carrier);
  const std::vector<std::string> tuple{C.label(h.carrier)};
  AxiomCheck check(C, "comonad", "antipode laws");
  check.law("antipode");
  check.commutes(tuple, [&] { return C.chain({h.d, p(h.s, one), h.mu}); },
                 [&] { return C.compose(h.eta, h.cu); });
  check.commutes(tuple, [&] { return C.chain({h.d, p(one, h.s), h.mu}); },
                 [&] { return C.compose(h.eta, h.cu); });
  report.add(check.finish());
  return report;
}

// ----------------------------------------------------------- constructions

ComonadBundle identity_comonad(CategoryPtr cat, const std::optional<Tensor>& star,
                               const std::optional<Tensor>& par) {
  ComonadBundle cb;
  cb.cat = cat;
  cb.G.obj = [](Obj a) { return a; };
  cb.G.mor = [](const Mor& f) { return f; };
  cb.delta = [cat](Obj a) { return cat->identity(a); };
  cb.eps = [cat](Obj a) { return cat->identity(a); };
  if (star) {
    auto t = *star;
    cb.phi = [cat, t](Obj a, Obj b) { return cat->identity(t(a, b)); };
    cb.phi0 = [cat, t] { return cat->identity(t.unit); };
  }
  if (par) {
    auto t = *par;
    cb.psi = [cat, t](Obj a, Obj b) { return cat->identity(t(a, b)); };
    cb.psi0 = [cat, t] { return cat->identity(t.unit); };
  }
  return cb;
}

NegationLift identity_lift(CategoryPtr cat, const ContraFunctor& S, const ContraFunctor& Sp) {
  NegationLift lift;
  lift.nu = [cat, S](Obj a) { return cat->identity(S(a)); };
  lift.nup = [cat, Sp](Obj a) { return cat->identity(Sp(a)); };
  return lift;
}

namespace {

void validate_map(const ThinCategory& cat, const std::vector<std::uint32_t>& g) {
  if (g.size() != cat.size()) throw std::invalid_argument("interior map has the wrong length");
  for (auto v : g) {
    if (v >= cat.size()) throw std::invalid_argument("interior map leaves the carrier");
  }
}

}  // namespace

ComonadBundle interior_comonad(std::shared_ptr<const ThinCategory> cat, std::vector<std::uint32_t> g,
                               const std::optional<Tensor>& star, const std::optional<Tensor>& par) {
  validate_map(*cat, g);
  auto gp = std::make_shared<const std::vector<std::uint32_t>>(std::move(g));
  auto go = [gp](Obj a) { return Obj{gp->at(a.id)}; };
  ComonadBundle cb;
  cb.cat = cat;
  cb.G.obj = go;
  cb.G.mor = [cat, go](const Mor& f) { return cat->arrow(go(f.dom), go(f.cod)); };
  cb.delta = [cat, go](Obj a) { return cat->arrow(go(a), go(go(a))); };
  cb.eps = [cat, go](Obj a) { return cat->arrow(go(a), a); };
  if (star) {
    auto t = *star;
    cb.phi = [cat, go, t](Obj a, Obj b) { return cat->arrow(t(go(a), go(b)), go(t(a, b))); };
    cb.phi0 = [cat, go, t] { return cat->arrow(t.unit, go(t.unit)); };
  }
  if (par) {
    auto t = *par;
    cb.psi = [cat, go, t](Obj a, Obj b) { return cat->arrow(t(go(a), go(b)), go(t(a, b))); };
    cb.psi0 = [cat, go, t] { return cat->arrow(t.unit, go(t.unit)); };
  }
  return cb;
}

NegationLift interior_lift(std::shared_ptr<const ThinCategory> cat, std::vector<std::uint32_t> g,
                           const ContraFunctor& S, const ContraFunctor& Sp) {
  validate_map(*cat, g);
  auto gp = std::make_shared<const std::vector<std::uint32_t>>(std::move(g));
  auto go = [gp](Obj a) { return Obj{gp->at(a.id)}; };
  NegationLift lift;
  lift.nu = [cat, go, S](Obj a) { return cat->arrow(S(a), go(S(go(a)))); };
  lift.nup = [cat, go, Sp](Obj a) { return cat->arrow(Sp(a), go(Sp(go(a)))); };
  return lift;
}

ComonadBundle comonad_from_bialgebra_unchecked(const Bialgebra& bi, const LindistBundle& bundle) {
  if (!bundle.sym_par) throw MissingStructure("the bialgebra comonad needs a symmetry for ⋄");
  auto b = std::make_shared<const LindistBundle>(bundle);
  auto B = bi.carrier;
  auto bia = std::make_shared<const Bialgebra>(bi);
  ComonadBundle cb;
  cb.cat = bundle.cat;
  auto one = [b](Obj x) { return b->cat->identity(x); };
  cb.G.obj = [b, B](Obj a) { return b->par(B, a); };
  cb.G.mor = [b, B, one](const Mor& f) { return b->par(one(B), f); };
  cb.delta = [b, bia, one](Obj a) { return b->par(bia->d, one(a)); };
  cb.eps = [b, bia, one](Obj a) { return b->par(bia->cu, one(a)); };
  cb.phi = [b, bia, B, one](Obj u, Obj v) {
    const auto& c = *b->sym_par;
    const Obj uv = b->star(u, v);
    return b->cat->chain({b->dr(b->par(B, v), B, u), b->par(one(B), b->star(one(u), c(B, v))),
                          b->par(one(B), b->dl(u, v, B)), b->par(one(B), c(uv, B)),
                          b->par(bia->mu, one(uv))});
  };
  cb.phi0 = [b, bia, one] { return b->par(bia->eta, one(b->star.unit)); };
  cb.psi = [b, bia, B, one](Obj u, Obj v) {
    const auto& c = *b->sym_par;
    return b->cat->compose(b->par(bia->mu, one(b->par(u, v))),
                           b->par(b->par(one(B), c(u, B)), one(v)));
  };
  cb.psi0 = [bia] { return bia->eta; };
  return cb;
}

ComonadBundle comonad_from_bialgebra(const Bialgebra& b, const LindistBundle& bundle,
                                     const Scope& scope) {
  CheckReport pre = check_bialgebra(b, bundle, scope);
  if (!pre.pass()) throw PreconditionError("bialgebra laws fail", pre);
  return comonad_from_bialgebra_unchecked(b, bundle);
}

HopfComonad hopf_comonad_unchecked(std::shared_ptr<const MatrixCategory> cat, const HopfAlgebra& h) {
  const std::uint32_t p = cat->prime();
  const std::uint32_t hd = h.carrier.id;
  auto H = std::make_shared<const HopfAlgebra>(h);
  const auto s_inv = h.s.matrix().inverse();
  if (!s_inv) throw std::invalid_argument("antipode is not invertible");
  auto sinv = std::make_shared<const Matrix>(*s_inv);

  HopfComonad out;
  ComonadBundle& cb = out.comonad;
  cb.cat = cat;
  cb.G.obj = [hd](Obj a) { return Obj{hd * a.id}; };
  cb.G.mor = [cat, p, hd](const Mor& f) {
    return cat->morphism(Obj{hd * f.dom.id}, Obj{hd * f.cod.id}, kron(Matrix::identity(p, hd), f.matrix()));
  };
  cb.delta = [cat, H, p, hd](Obj a) {
    return cat->morphism(Obj{hd * a.id}, Obj{hd * hd * a.id}, kron(H->d.matrix(), Matrix::identity(p, a.id)));
  };
  cb.eps = [cat, H, p, hd](Obj a) {
    return cat->morphism(Obj{hd * a.id}, a, kron(H->cu.matrix(), Matrix::identity(p, a.id)));
  };
  auto phi = [cat, H, p, hd](Obj a, Obj b) {
    const Matrix shuffle = kron(kron(Matrix::identity(p, hd), swap_matrix(p, a.id, hd)),
                                Matrix::identity(p, b.id));
    const Matrix mult = kron(H->mu.matrix(), Matrix::identity(p, std::size_t{a.id} * b.id));
    return cat->morphism(Obj{hd * a.id * hd * b.id}, Obj{hd * a.id * b.id}, mult * shuffle);
  };
  auto phi0 = [H] { return H->eta; };
  cb.phi = phi;
  cb.phi0 = phi0;
  cb.psi = phi;
  cb.psi0 = phi0;

  auto twisted = [cat, p, hd](const Matrix& s, Obj a) {
    Matrix m(p, std::size_t{hd} * hd * a.id, a.id);
    for (std::uint32_t x = 0; x < hd; ++x) {
      for (std::uint32_t g = 0; g < hd; ++g) {
        const std::uint32_t v = s(x, g);
        if (v == 0) continue;
        for (std::uint32_t i = 0; i < a.id; ++i) m.set((x * hd + g) * a.id + i, i, v);
      }
    }
    return cat->morphism(a, Obj{hd * hd * a.id}, std::move(m));
  };
  out.lift.nu = [H, twisted](Obj a) { return twisted(H->s.matrix(), a); };
  out.lift.nup = [sinv, twisted](Obj a) { return twisted(*sinv, a); };
  return out;
}

Family1 nu_from_lifted_functor(const ComonadBundle& cb, const ContraFunctor& S,
                               const std::function<Coalgebra(const Coalgebra&)>& lifted,
                               const Scope& scope) {
  for (auto a : scope.objects) {
    const Obj ga = cb.G(a);
    const Coalgebra img = lifted(Coalgebra{ga, cb.delta(a)});
    if (img.carrier != S(ga) || img.gamma.dom != S(ga) || img.gamma.cod != cb.G(S(ga))) {
      throw LiftError("lifted negation is not over S at " + cb.cat->label(a));
    }
  }
  auto G = cb.G;
  auto delta = cb.delta;
  auto eps = cb.eps;
  auto cat = cb.cat;
  return [=](Obj a) {
    const Coalgebra img = lifted(Coalgebra{G(a), delta(a)});
    return cat->compose(img.gamma, S(eps(a)));
  };
}

}  // namespace ldlab
