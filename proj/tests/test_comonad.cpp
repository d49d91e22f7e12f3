#include <algorithm>
#include <cmath>
#include <set>

#include "doctest.h"

#include "ldlab/instances.hpp"

using namespace ldlab;

namespace {

// Every vector v in F_p^m with v_i v_j = [i = j] v_i and Σ v_i = 1, by
// exhaustive search over p^m candidates.
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
      for (std::uint32_t j = 0; j < m; ++j) {
        const std::uint32_t lhs = (v[i] * v[j]) % p;
        ok = ok && lhs == (i == j ? v[i] : 0U);
      }
    }
    if (ok && sum == 1) ++count;
  }
  return count;
}

struct InteriorOracle {
  std::vector<std::uint32_t> g;
  bool phi, phi0, psi, psi0, nu, nup;
};

// Interior operators on a Łukasiewicz chain and their structure maps, from the
// pointwise order conditions. Thin categories make every diagram commute once
// its arrows exist.
std::vector<InteriorOracle> interior_oracle(std::uint32_t n) {
  const std::uint32_t top = n - 1;
  auto star = [&](std::uint32_t a, std::uint32_t b) { return a + b > top ? a + b - top : 0U; };
  auto par = [&](std::uint32_t a, std::uint32_t b) { return std::min(top, a + b); };
  auto neg = [&](std::uint32_t a) { return top - a; };
  std::vector<InteriorOracle> out;
  std::size_t total = 1;
  for (std::uint32_t i = 0; i < n; ++i) total *= n;
  for (std::size_t code = 0; code < total; ++code) {
    std::vector<std::uint32_t> g(n);
    std::size_t c = code;
    for (auto& x : g) {
      x = c % n;
      c /= n;
    }
    bool interior = true;
    for (std::uint32_t a = 0; a < n; ++a) {
      interior = interior && g[a] <= a && g[g[a]] == g[a];
      if (a + 1 < n) interior = interior && g[a] <= g[a + 1];
    }
    if (!interior) continue;
    InteriorOracle o{g, true, g[top] == top, true, g[0] == 0, true, true};
    for (std::uint32_t a = 0; a < n; ++a) {
      o.nu = o.nu && neg(a) <= g[neg(g[a])];
      o.nup = o.nup && neg(a) <= g[neg(g[a])];
      for (std::uint32_t b = 0; b < n; ++b) {
        o.phi = o.phi && star(g[a], g[b]) <= g[star(a, b)];
        o.psi = o.psi && par(g[a], g[b]) <= g[par(a, b)];
      }
    }
    out.push_back(o);
  }
  return out;
}

bool same_g(const std::vector<std::uint32_t>& a, const std::vector<std::uint32_t>& b) { return a == b; }

}  // namespace

TEST_CASE("group algebra structure maps entrywise") {
  for (auto [p, m] : {std::pair{2U, 2U}, std::pair{3U, 3U}, std::pair{5U, 4U}}) {
    auto cat = std::make_shared<MatrixCategory>(p, std::vector<Obj>{Obj{1}, Obj{2}});
    const HopfAlgebra h = gen_group_hopf(cat, m);
    REQUIRE(h.carrier.id == m);
    const Matrix& mu = h.mu.matrix();
    const Matrix& d = h.d.matrix();
    for (std::uint32_t g = 0; g < m; ++g) {
      for (std::uint32_t k = 0; k < m; ++k) {
        for (std::uint32_t r = 0; r < m; ++r) CHECK(mu(r, g * m + k) == (r == (g + k) % m ? 1U : 0U));
      }
      for (std::uint32_t r = 0; r < m * m; ++r) CHECK(d(r, g) == (r == g * m + g ? 1U : 0U));
      CHECK(h.cu.matrix()(0, g) == 1);
      CHECK(h.eta.matrix()(g, 0) == (g == 0 ? 1U : 0U));
      for (std::uint32_t r = 0; r < m; ++r) CHECK(h.s.matrix()(r, g) == (r == (m - g) % m ? 1U : 0U));
    }
    // Antipode law μ(s⊗1)d = η∘cu, evaluated with plain matrix products.
    const Matrix lhs = mu * kron(h.s.matrix(), Matrix::identity(p, m)) * d;
    CHECK(lhs == h.eta.matrix() * h.cu.matrix());
  }
}

TEST_CASE("coalgebras on the unit object are the group-likes") {
  for (auto [p, m] : {std::pair{2U, 2U}, std::pair{3U, 3U}}) {
    CAPTURE(p);
    CAPTURE(m);
    const Model model = load_model(gen_group_hopf_instance(p, m, 2));
    REQUIRE(model.comonad);
    Scope unit_only = model.scope;
    unit_only.objects = {Obj{1}};
    const auto coalgebras = enumerate_coalgebras(*model.comonad, unit_only);
    CHECK(group_like_count(p, m) == m);
    CHECK(coalgebras.size() == group_like_count(p, m));
  }
}

TEST_CASE("the group Hopf comonad passes its checks") {
  const Model m = load_model(gen_group_hopf_instance(2, 2, 2));
  const auto& cb = *m.comonad;
  CHECK(check_hopf(*m.hopf, *m.lindist, m.scope).pass());
  CHECK(check_comonad(cb, m.scope).pass());
  CHECK(check_monoidal_comonad(cb, m.lindist->star, Side::star, m.scope).pass());
  CHECK(check_monoidal_comonad(cb, m.lindist->par, Side::par, m.scope).pass());
  CHECK(check_L1(cb, *m.lindist, m.scope).pass());
  CHECK(check_L2(cb, *m.lindist, m.scope).pass());
  CHECK(check_nu(cb, m.negation->S, m.negation->Sp, *m.lift, m.scope).pass());
  CHECK(check_negation_axioms(cb, *m.lindist, *m.negation, *m.lift, m.scope).pass());
}

TEST_CASE("interior comonads on Ł3 match the brute-force filter") {
  const Model m = load_model(gen_lukasiewicz(3));
  const auto found = enumerate_interior_comonads(m);
  const auto oracle = interior_oracle(3);
  REQUIRE(found.size() == oracle.size());
  CHECK(found.size() == 4);
  for (const auto& o : oracle) {
    const auto it = std::find_if(found.begin(), found.end(), [&](const InteriorComonad& c) { return same_g(c.g, o.g); });
    REQUIRE(it != found.end());
    CHECK(it->phi == o.phi);
    CHECK(it->phi0 == o.phi0);
    CHECK(it->psi == o.psi);
    CHECK(it->psi0 == o.psi0);
    CHECK(it->nu == o.nu);
    CHECK(it->nup == o.nup);
  }
}

TEST_CASE("search counts on Ł3 equal the oracle counts") {
  const Model m = load_model(gen_lukasiewicz(3));
  const SearchResult r = search_interior_comonads(m);
  std::array<std::size_t, 5> expect{};
  for (const auto& o : interior_oracle(3)) {
    const bool monoidal = o.phi && o.phi0 && o.psi && o.psi0;
    const bool liftable = monoidal && o.nu && o.nup;
    expect[0] += 1;
    expect[1] += monoidal;
    expect[2] += monoidal;
    expect[3] += liftable;
    expect[4] += liftable;
  }
  CHECK(r.counts == expect);
  for (std::size_t t = 1; t < 5; ++t) CHECK(r.counts[t] <= r.counts[t - 1]);
}

TEST_CASE("the constant-0 comonad on the 2-chain sits in tier 1 only") {
  const Model m = load_model(gen_lukasiewicz(2));
  const SearchResult r = search_interior_comonads(m);
  REQUIRE(r.rows.size() == 2);
  const auto it = std::find_if(r.rows.begin(), r.rows.end(),
                               [](const SearchRow& row) { return row.comonad.g == std::vector<std::uint32_t>{0, 0}; });
  REQUIRE(it != r.rows.end());
  const auto tags = it->comonad.tags();
  CHECK(std::find(tags.begin(), tags.end(), "φ0 missing") != tags.end());
  CHECK(it->tiers[0]);
  for (std::size_t t = 1; t < 5; ++t) CHECK_FALSE(it->tiers[t]);
}

TEST_CASE("the 1-chain has a single comonad in every tier") {
  const Json one = Json::parse(R"({
    "schema_version": 1,
    "name": "one-point",
    "backend": {"kind": "thin", "carrier": ["*"], "order": "chain"},
    "lindist": {"star": {"table": [[0]], "unit": 0}, "par": {"table": [[0]], "unit": 0}, "symmetric": true},
    "negation": {"S": [0], "Sp": [0]}
  })");
  const SearchResult r = search_interior_comonads(load_model(one));
  REQUIRE(r.rows.size() == 1);
  for (bool t : r.rows[0].tiers) CHECK(t);
}

TEST_CASE("monoidal interior comonads on Ł3 satisfy both distribution laws") {
  const Json l3 = gen_lukasiewicz(3);
  const Model base = load_model(l3);
  for (const auto& c : enumerate_interior_comonads(base)) {
    if (!c.monoidal()) continue;
    const Model m = load_model(with_interior_comonad(l3, c.g));
    CHECK(check_L1(*m.comonad, *m.lindist, m.scope).pass());
    CHECK(check_L2(*m.comonad, *m.lindist, m.scope).pass());
  }
}

TEST_CASE("a non-idempotent interior map fails the comonad laws") {
  const Json bad = with_interior_comonad(gen_lukasiewicz(3), {0, 0, 1});
  const Model m = load_model(bad);
  CHECK_FALSE(check_comonad(*m.comonad, m.scope).pass());
}
