#include "ldlab/instances.hpp"

#include <numeric>

#include "ldlab/em.hpp"
#include "ldlab/star_comonad.hpp"

namespace ldlab {

namespace {

std::string fraction(std::uint32_t k, std::uint32_t d) {
  if (k == 0) return "0";
  if (k == d) return "1";
  const auto g = std::gcd(k, d);
  return std::to_string(k / g) + "/" + std::to_string(d / g);
}

void require(bool ok, const std::string& what) {
  if (!ok) throw std::invalid_argument(what);
}

Json rows_of(const Matrix& m) { return m.to_rows(); }

}  // namespace

Json gen_lukasiewicz(std::uint32_t n) {
  require(n >= 2, "a Łukasiewicz chain needs at least 2 elements");
  const std::uint32_t top = n - 1;
  std::vector<std::string> carrier;
  for (std::uint32_t k = 0; k < n; ++k) carrier.push_back(fraction(k, top));
  Json star = Json::array();
  Json par = Json::array();
  Json neg = Json::array();
  for (std::uint32_t i = 0; i < n; ++i) {
    Json srow = Json::array();
    Json prow = Json::array();
    for (std::uint32_t j = 0; j < n; ++j) {
      srow.push_back(i + j > top ? i + j - top : 0);
      prow.push_back(std::min(top, i + j));
    }
    star.push_back(srow);
    par.push_back(prow);
    neg.push_back(top - i);
  }
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = "lukasiewicz-" + std::to_string(n);
  j["generator"] = {{"name", "lukasiewicz"}, {"n", n}};
  j["backend"] = {{"kind", "thin-quantale"}, {"carrier", carrier}, {"order", "chain"}};
  j["lindist"] = {{"star", {{"table", star}, {"unit", top}}},
                  {"par", {{"table", par}, {"unit", 0}}},
                  {"symmetric", true}};
  j["negation"] = {{"S", neg}, {"Sp", neg}};
  return j;
}

Json gen_matrix_compact(std::uint32_t p, std::uint32_t dmax) {
  require(is_prime(p), "p must be prime");
  require(dmax >= 1, "the dimension bound must be at least 1");
  std::vector<std::uint32_t> dims(dmax);
  std::iota(dims.begin(), dims.end(), 1U);
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["name"] = "matrix-compact-" + std::to_string(p) + "-" + std::to_string(dmax);
  j["generator"] = {{"name", "matrix-compact"}, {"p", p}, {"dmax", dmax}};
  j["backend"] = {{"kind", "matrix-field"}, {"p", p}, {"objects", dims}};
  j["lindist"] = {{"kind", "compact-kronecker"}};
  j["negation"] = {{"kind", "dual"}};
  j["star"] = {{"kind", "dual-pairing"}};
  return j;
}

HopfAlgebra gen_group_hopf(std::shared_ptr<const MatrixCategory> cat, std::uint32_t m) {
  require(m >= 1, "the group order must be at least 1");
  const std::uint32_t p = cat->prime();
  Matrix mu(p, m, std::size_t{m} * m);
  Matrix eta(p, m, 1);
  Matrix d(p, std::size_t{m} * m, m);
  Matrix cu(p, 1, m);
  Matrix s(p, m, m);
  for (std::uint32_t i = 0; i < m; ++i) {
    for (std::uint32_t j = 0; j < m; ++j) mu.set((i + j) % m, i * m + j, 1);
    d.set(i * m + i, i, 1);
    cu.set(0, i, 1);
    s.set((m - i) % m, i, 1);
  }
  eta.set(0, 0, 1);
  const Obj h{m};
  return HopfAlgebra{h,
                     cat->morphism(Obj{m * m}, h, std::move(mu)),
                     cat->morphism(Obj{1}, h, std::move(eta)),
                     cat->morphism(h, Obj{m * m}, std::move(d)),
                     cat->morphism(h, Obj{1}, std::move(cu)),
                     cat->morphism(h, h, std::move(s))};
}

Json gen_group_hopf_instance(std::uint32_t p, std::uint32_t m, std::uint32_t dmax) {
  Json j = gen_matrix_compact(p, dmax);
  const auto cat = std::make_shared<const MatrixCategory>(p, std::vector<Obj>{});
  const HopfAlgebra h = gen_group_hopf(cat, m);
  j["name"] = "group-hopf-" + std::to_string(p) + "-" + std::to_string(m);
  j["generator"] = {{"name", "group-hopf"}, {"p", p}, {"m", m}, {"dmax", dmax}};
  j["hopf"] = {{"dim", m},
               {"mu", rows_of(h.mu.matrix())},
               {"eta", rows_of(h.eta.matrix())},
               {"d", rows_of(h.d.matrix())},
               {"cu", rows_of(h.cu.matrix())},
               {"s", rows_of(h.s.matrix())}};
  j["comonad"] = {{"kind", "hopf-tensor"}};
  j["negation_lift"] = {{"kind", "antipode-dual"}};
  return j;
}

Json with_interior_comonad(Json instance, const std::vector<std::uint32_t>& g) {
  instance["comonad"] = {{"kind", "interior"}, {"g", g}};
  instance["negation_lift"] = {{"kind", "interior"}};
  std::string suffix;
  for (auto v : g) suffix += std::to_string(v);
  instance["name"] = instance.value("name", "") + "-interior-" + suffix;
  return instance;
}

Json with_identity_comonad(Json instance) {
  instance["comonad"] = {{"kind", "identity"}};
  instance["negation_lift"] = {{"kind", "identity"}};
  instance["name"] = instance.value("name", "") + "-identity";
  return instance;
}

std::vector<std::string> InteriorComonad::tags() const {
  std::vector<std::string> out;
  if (!phi) out.push_back("φ missing");
  if (!phi0) out.push_back("φ0 missing");
  if (!psi) out.push_back("ψ missing");
  if (!psi0) out.push_back("ψ0 missing");
  if (!nu) out.push_back("ν missing");
  if (!nup) out.push_back("ν′ missing");
  return out;
}

std::vector<InteriorComonad> enumerate_interior_comonads(const Model& model) {
  if (!model.thin) throw std::invalid_argument("interior comonads need a thin backend");
  const ThinCategory& T = *model.thin;
  const std::uint32_t n = static_cast<std::uint32_t>(T.size());
  double total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= n;
  if (total > static_cast<double>(enumeration_bound())) {
    throw ScopeTooLarge("enumerating " + std::to_string(n) + "^" + std::to_string(n) +
                        " self-maps exceeds the enumeration bound");
  }
  auto le = [&](std::uint32_t a, std::uint32_t b) { return T.leq(Obj{a}, Obj{b}); };
  std::vector<InteriorComonad> out;
  std::vector<std::uint32_t> g(n, 0);
  while (true) {
    bool ok = true;
    for (std::uint32_t a = 0; a < n && ok; ++a) {
      ok = le(g[a], a) && g[g[a]] == g[a];
      for (std::uint32_t b = 0; b < n && ok; ++b) ok = !le(a, b) || le(g[a], g[b]);
    }
    if (ok) {
      InteriorComonad c;
      c.g = g;
      if (model.lindist) {
        const auto& st = model.lindist->star;
        const auto& pr = model.lindist->par;
        auto G = [&](std::uint32_t a) { return Obj{g[a]}; };
        c.phi = c.psi = true;
        for (std::uint32_t a = 0; a < n; ++a) {
          for (std::uint32_t b = 0; b < n; ++b) {
            c.phi = c.phi && le(st(G(a), G(b)).id, g[st(Obj{a}, Obj{b}).id]);
            c.psi = c.psi && le(pr(G(a), G(b)).id, g[pr(Obj{a}, Obj{b}).id]);
          }
        }
        c.phi0 = le(st.unit.id, g[st.unit.id]);
        c.psi0 = le(pr.unit.id, g[pr.unit.id]);
      }
      if (model.negation) {
        c.nu = c.nup = true;
        for (std::uint32_t a = 0; a < n; ++a) {
          const auto sa = model.negation->S(Obj{a}).id;
          const auto spa = model.negation->Sp(Obj{a}).id;
          c.nu = c.nu && le(sa, g[model.negation->S(Obj{g[a]}).id]);
          c.nup = c.nup && le(spa, g[model.negation->Sp(Obj{g[a]}).id]);
        }
      }
      out.push_back(std::move(c));
    }
    std::uint32_t i = 0;
    while (i < n && ++g[i] == n) g[i++] = 0;
    if (i == n) break;
  }
  return out;
}

SearchResult search_interior_comonads(const Model& model) {
  if (!model.thin || !model.lindist || !model.negation) {
    throw std::invalid_argument("search needs a thin instance with lindist and negation data");
  }
  SearchResult result;
  const auto& b = *model.lindist;
  const auto& neg = *model.negation;
  for (const auto& c : enumerate_interior_comonads(model)) {
    const ComonadBundle cb = interior_comonad(model.thin, c.g, b.star, b.par);
    const NegationLift lift = interior_lift(model.thin, c.g, neg.S, neg.Sp);
    SearchRow row;
    row.comonad = c;
    row.tiers[0] = check_comonad(cb, model.scope).pass();
    if (row.tiers[0]) {
      CheckReport r = check_monoidal_comonad(cb, b.star, Side::star, model.scope);
      r.merge(check_monoidal_comonad(cb, b.par, Side::par, model.scope));
      row.tiers[1] = r.pass();
    }
    if (row.tiers[1]) {
      CheckReport r = check_L1(cb, b, model.scope);
      r.merge(check_L2(cb, b, model.scope));
      row.tiers[2] = r.pass();
    }
    if (row.tiers[2]) row.tiers[3] = check_nu(cb, neg.S, neg.Sp, lift, model.scope).pass();
    if (row.tiers[3]) row.tiers[4] = check_negation_axioms(cb, b, neg, lift, model.scope).pass();
    for (std::size_t t = 0; t < row.tiers.size(); ++t) result.counts[t] += row.tiers[t] ? 1 : 0;
    result.rows.push_back(std::move(row));
  }
  return result;
}

Json SearchResult::to_json(const Model& model) const {
  Json rows_json = Json::array();
  for (const auto& row : rows) {
    Json g = Json::array();
    for (auto v : row.comonad.g) g.push_back(model.thin->label(Obj{v}));
    Json tiers = Json::object();
    for (std::size_t t = 0; t < kTiers.size(); ++t) tiers[kTiers[t]] = row.tiers[t];
    rows_json.push_back({{"g", g}, {"tags", row.comonad.tags()}, {"tiers", tiers}});
  }
  Json counts = Json::object();
  for (std::size_t t = 0; t < kTiers.size(); ++t) counts[kTiers[t]] = this->counts[t];
  return Json{{"rows", rows_json}, {"counts", counts}};
}

std::vector<CorpusEntry> seed_corpus() {
  std::vector<CorpusEntry> out;
  const Json l3 = gen_lukasiewicz(3);
  const Json pass_all = {{"validate", "pass"}, {"coincide", "pass"}, {"equivalence", "agree"}};

  out.push_back({"l3-identity.json", with_identity_comonad(l3), pass_all, {}});
  out.push_back({"l3-interior.json", with_interior_comonad(l3, {0, 0, 2}), pass_all, {}});
  out.push_back({"matrix-2-2-identity.json", with_identity_comonad(gen_matrix_compact(2, 2)), pass_all, {}});
  out.push_back({"group-hopf-2-2.json", gen_group_hopf_instance(2, 2, 2), pass_all, {}});
  out.push_back({"group-hopf-3-3.json", gen_group_hopf_instance(3, 3, 2), pass_all, {}});

  const Json fail_all = {{"validate", "fail"}, {"coincide", "fail"}, {"equivalence", "agree"}};
  auto mutated = [&](const std::string& file, const Json& base, const Json& descriptor,
                     std::vector<std::string> failing) {
    Json inst = mutate(base, descriptor);
    inst["name"] = base.value("name", "") + "-" + descriptor["kind"].get<std::string>();
    out.push_back({file, inst, fail_all, std::move(failing)});
  };
  mutated("l3-interior-bad-g.json", with_interior_comonad(l3, {0, 0, 2}),
          {{"kind", "table-entry"}, {"target", "comonad"}, {"at", {2}}, {"value", 1}}, {"comonad"});
  mutated("group-hopf-2-2-zero-nu.json", gen_group_hopf_instance(2, 2, 2), {{"kind", "zero-nu"}}, {"nu-1"});
  mutated("group-hopf-2-2-drop-swap.json", gen_group_hopf_instance(2, 2, 2), {{"kind", "drop-swap-in-phi"}},
          {"moncom-⋆"});
  mutated("group-hopf-3-3-identity-antipode.json", gen_group_hopf_instance(3, 3, 2),
          {{"kind", "identity-antipode"}}, {"comonad"});

  Json l3_star = mutate(l3, {{"kind", "table-entry"}, {"target", "lindist.star"}, {"at", {0, 1}}, {"value", 1}});
  l3_star["name"] = "lukasiewicz-3-table-entry";
  out.push_back({"l3-star-entry.json", l3_star, Json{{"validate", "fail"}}, {"mon-⋆"}});

  Json l3_dl = mutate(l3, {{"kind", "missing-witness"}, {"target", "lindist.dl"}, {"at", {2, 1, 0}}});
  l3_dl["name"] = "lukasiewicz-3-missing-witness";
  out.push_back({"l3-missing-dl.json", l3_dl, Json{{"validate", "fail"}}, {"lindist-nat"}});

  Json l3_unit = l3;
  l3_unit["name"] = "lukasiewicz-3-bialgebra-0";
  l3_unit["bialgebra"] = {{"carrier", 0}};
  l3_unit["comonad"] = {{"kind", "bialgebra"}};
  out.push_back({"l3-bialgebra-unit.json", l3_unit, Json{{"validate", "pass"}}, {}});
  return out;
}

Json corpus_manifest(const std::vector<CorpusEntry>& corpus) {
  Json entries = Json::array();
  for (const auto& e : corpus) {
    entries.push_back({{"file", e.file},
                       {"name", e.instance.value("name", "")},
                       {"expect", e.expect},
                       {"failing", e.failing},
                       {"mutations", e.instance.value("mutations", Json::array())}});
  }
  return Json{{"schema_version", kSchemaVersion}, {"entries", entries}};
}

}  // namespace ldlab
