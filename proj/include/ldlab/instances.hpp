#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "ldlab/comonad.hpp"
#include "ldlab/instance_io.hpp"

namespace ldlab {

/// Łukasiewicz chain with n elements k/(n-1): a⋆b = max(0, a+b-1),
/// a⋄b = min(1, a+b), I = 1, J = 0, S = S′ = 1-x. Requires n ≥ 2.
Json gen_lukasiewicz(std::uint32_t n);

/// F_p-matrices on dimensions 1..dmax with ⋆ = ⋄ = ⊗, S = S′ = transpose
/// and the canonical pairings.
Json gen_matrix_compact(std::uint32_t p, std::uint32_t dmax);

/// The group algebra F_p[Z/m]: μ(g⊗h) = gh, η = 1, d(g) = g⊗g, cu(g) = 1,
/// s(g) = g⁻¹.
HopfAlgebra gen_group_hopf(std::shared_ptr<const MatrixCategory> cat, std::uint32_t m);

/// The matrix instance of gen_matrix_compact(p, dmax) carrying F_p[Z/m]⊗−
/// with its antipode lift.
Json gen_group_hopf_instance(std::uint32_t p, std::uint32_t m, std::uint32_t dmax);

/// Adds an interior comonad g with its order-witness lift to a thin instance.
Json with_interior_comonad(Json instance, const std::vector<std::uint32_t>& g);

/// Adds the identity comonad and the identity lift.
Json with_identity_comonad(Json instance);

/// An interior operator on a thin instance and which structure maps exist.
struct InteriorComonad {
  std::vector<std::uint32_t> g;
  bool phi = false;
  bool phi0 = false;
  bool psi = false;
  bool psi0 = false;
  bool nu = false;
  bool nup = false;

  bool monoidal() const { return phi && phi0 && psi && psi0; }
  std::vector<std::string> tags() const;
};

/// Every monotone, deflationary, idempotent self-map of the carrier. Throws
/// ScopeTooLarge when n^n exceeds the enumeration bound.
std::vector<InteriorComonad> enumerate_interior_comonads(const Model& thin);

/// Tiers of the classification, each contained in the previous one.
inline constexpr std::array<const char*, 5> kTiers{"comonad", "monoidal", "distributive",
                                                   "negation-liftable", "star-autonomous"};

struct SearchRow {
  InteriorComonad comonad;
  std::array<bool, 5> tiers{};
};

struct SearchResult {
  std::vector<SearchRow> rows;
  std::array<std::size_t, 5> counts{};
  Json to_json(const Model& model) const;
};

/// Classifies the interior comonads of a thin instance with lindist and
/// negation data by running the checkers.
SearchResult search_interior_comonads(const Model& thin);

/// One corpus entry: an instance and the verdicts it is expected to produce.
struct CorpusEntry {
  std::string file;
  Json instance;
  /// Expected verdict per command, for example {"validate": "fail"}.
  Json expect;
  /// Axiom ids a negative is expected to fail under validate.
  std::vector<std::string> failing;
};

/// Positive instances and their documented mutations.
std::vector<CorpusEntry> seed_corpus();

/// The manifest listing every corpus entry with its expected verdict.
Json corpus_manifest(const std::vector<CorpusEntry>& corpus);

}  // namespace ldlab
