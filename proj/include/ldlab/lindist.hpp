#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ldlab/category.hpp"
#include "ldlab/report.hpp"

namespace ldlab {

/// Two strict monoidal structures with linear distributions
///   ∂l_{A,B,C} : A⋆(B⋄C) → (A⋆B)⋄C
///   ∂r_{A,B,C} : (B⋄C)⋆A → B⋄(C⋆A).
struct LindistBundle {
  CategoryPtr cat;
  Tensor star;
  Tensor par;
  Family3 dl;
  Family3 dr;
  /// Symmetries c_{A,B} for ⋆ and ⋄, when the bundle is symmetric.
  std::optional<Family2> sym_star;
  std::optional<Family2> sym_par;

  const Category& category() const { return *cat; }
};

/// Negations S, S′ with
///   e_A : SA⋆A → J,   n_A : I → A⋄SA,   e′_A : A⋆S′A → J,   n′_A : I → S′A⋄A.
struct NegationStructure {
  ContraFunctor S;
  ContraFunctor Sp;
  Family1 e;
  Family1 n;
  Family1 ep;
  Family1 np;
};

/// Monoidal category (⊗, I) with an equivalence S ⊣ S′ and evaluations
///   e_{A,B}  : S(A⊗B)⊗A → SB
///   e′_{B,A} : B⊗S′(A⊗B) → S′A.
struct StarAutonomousStructure {
  CategoryPtr cat;
  Tensor tensor;
  ContraFunctor S;
  ContraFunctor Sp;
  Family1 unit;        ///< A → S′SA
  Family1 unit_inv;    ///< S′SA → A
  Family1 counit;      ///< SS′A → A
  Family1 counit_inv;  ///< A → SS′A
  Family2 eval;        ///< (A, B) ↦ e_{A,B}
  Family2 eval_prime;  ///< (B, A) ↦ e′_{B,A}
  /// Canonical iso S′(SB⊗SA) → S(S′B⊗S′A) indexed by (A, B), and its inverse.
  Family2 par_form;
  Family2 par_form_inv;
  /// Canonical iso S′I → SI.
  Family0 unit_cmp;
  std::optional<Family2> sym;

  const Category& category() const { return *cat; }
};

/// Fills par_form, par_form_inv and unit_cmp with identities; valid whenever
/// the two sides agree as objects, which the checks confirm.
void use_identity_comparisons(StarAutonomousStructure& sa);

/// Isomorphisms relating the original ⋄ to the derived A⋄′B = S′(SB⋆SA).
struct TranslationCertificate {
  Family2 tau;      ///< A⋄B → A⋄′B
  Family2 tau_inv;  ///< A⋄′B → A⋄B
  Mor unit_cmp;     ///< e_I : SI → J
  std::vector<std::string> conventions;
};

struct StarTranslation {
  StarAutonomousStructure star;
  TranslationCertificate certificate;
};

struct LindistTranslation {
  LindistBundle bundle;
  NegationStructure negation;
};

// ---------------------------------------------------------------- checks

/// Axioms "lindist-nat" (naturality of ∂l, ∂r in each variable) and
/// "coh-subset" (unit laws, ⋆- and ⋄-associativity squares and the two
/// interchange squares).
CheckReport check_lindist(const LindistBundle& bundle, const Scope& scope);

/// Axioms "tri-1".."tri-4". tri-1: (1⋄e)∂r(n⋆1) = 1_A, S functorial, n
/// dinatural. tri-2: (e⋄1)∂l(1⋆n) = 1_SA, e dinatural. tri-3:
/// (e′⋄1)∂l(1⋆n′) = 1_A, S′ functorial, n′ dinatural. tri-4:
/// (1⋄e′)∂r(n′⋆1) = 1_S′A, e′ dinatural.
CheckReport check_triangle_identities(const LindistBundle& bundle, const NegationStructure& neg,
                                      const Scope& scope);

/// cat, mon-⋆, mon-⋄, sym (when present), lindist-nat, coh-subset and, when a
/// negation is given, tri-1..4.
CheckReport check_lindist_suite(const LindistBundle& bundle, const NegationStructure* neg,
                                const Scope& scope);

/// Axiom "star-iso", law "hom-bijection": f ↦ e_{B,C}(f⊗1) is a bijection
/// hom(A, S(B⊗C)) → hom(A⊗B, SC), natural in A.
CheckReport check_star_hom_bijection(const StarAutonomousStructure& sa, const Scope& scope);

/// Axiom "star-iso": the equivalence witnesses and comparison maps are
/// natural isomorphisms, plus the hom bijection.
CheckReport check_star_structure(const StarAutonomousStructure& sa, const Scope& scope);

/// cat, mon-⊗ and star-iso.
CheckReport check_star_suite(const StarAutonomousStructure& sa, const Scope& scope);

// ----------------------------------------------------------- translations

/// ⊗ := ⋆, equivalence witnesses and evaluations from the lindist composites.
/// Throws PreconditionError when the lindist suite fails on scope.
StarTranslation star_from_lindist(const LindistBundle& bundle, const NegationStructure& neg,
                                  const Scope& scope);

/// ⋆ := ⊗, A⋄B := S′(SB⊗SA), J := SI, with ∂l, ∂r, e, n, e′, n′ built from
/// the evaluation maps. Throws PreconditionError when the star suite fails.
LindistTranslation lindist_from_star(const StarAutonomousStructure& sa, const Scope& scope);

/// Same constructions without the precondition checks.
StarTranslation star_from_lindist_unchecked(const LindistBundle& bundle,
                                            const NegationStructure& neg);
LindistTranslation lindist_from_star_unchecked(const StarAutonomousStructure& sa);

/// Compares a bundle with the result of lindist → star → lindist. Axiom
/// "star-iso" with laws: par-objects (A⋄′B = A⋄B and J′ = J), tau-natural,
/// tau-iso, dl-roundtrip, dr-roundtrip, e/n/e′/n′-roundtrip.
CheckReport check_round_trip(const LindistBundle& bundle, const NegationStructure& neg,
                             const Scope& scope);

}  // namespace ldlab
