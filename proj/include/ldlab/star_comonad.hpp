#pragma once

#include <optional>
#include <string>

#include "ldlab/comonad.hpp"
#include "ldlab/em.hpp"
#include "ldlab/lindist.hpp"

namespace ldlab {

/// Axioms "SC-1".."SC-4" for a comonad monoidal with respect to ⊗:
///   SC-1: GSν′_A∘ν_{S′GA} = G(SS′A ≅ A)⁻¹∘(SS′GA ≅ GA)
///   SC-2: GS′ν_A∘ν′_{SGA} = G(A ≅ S′SA)∘(S′SGA ≅ GA)
///   SC-3: ν_B∘e_{A,B}∘(1⊗ε) = Ge_{GA,GB}∘G(Sφ⊗1)∘φ∘(ν⊗δ)
///   SC-4: ν′_A∘e′_{B,A}∘(ε⊗1) = Ge′_{GB,GA}∘G(1⊗S′φ)∘φ∘(δ⊗ν′)
/// The canonical isomorphisms are the unit and counit of `sa`.
CheckReport check_star_comonad(const ComonadBundle& cb, const StarAutonomousStructure& sa,
                               const NegationLift& lift, const Scope& scope);

/// Input for the comparison of the two axiomatizations. Either a lindist
/// bundle with negations or a star-autonomous structure must be present. When
/// only the star-autonomous side is given, the comonad's ψ must be a
/// structure for the derived A⋄B = S′(SB⊗SA).
struct CoincidenceInput {
  std::optional<LindistBundle> lindist;
  std::optional<NegationStructure> negation;
  std::optional<StarAutonomousStructure> star;
  ComonadBundle comonad;
  NegationLift lift;
};

struct CoincidenceResult {
  /// comonad, moncom-⋆, moncom-⋄, nu-1, nu-2, L1, L2, Le, Ln, Le′, Ln′.
  CheckReport lindist_side;
  /// comonad, moncom-⋆, nu-1, nu-2, SC-1..SC-4.
  CheckReport star_side;
  std::string lindist_origin;
  std::string star_origin;

  bool agree() const { return lindist_side.pass() == star_side.pass(); }
  Json to_json() const;
};

/// Translates to whichever side is missing and runs both suites.
CoincidenceResult notions_coincide(const CoincidenceInput& input, const Scope& scope);

/// ⋆ and ⋄ differ on scope, so the bundle is not compact.
class NotCompact : public PreconditionError {
 public:
  NotCompact(const std::string& what) : PreconditionError(what, CheckReport{}) {}
};

struct CompactResult {
  /// BV-23, BV-22, BV-21, BV-20.
  CheckReport report;
  Json correspondence;
  bool pass() const { return report.pass(); }
  Json to_json() const;
};

/// The correspondence between the lifting axioms and their Hopf-monad
/// counterparts: Le ↔ 23, Ln ↔ 22, Le′ ↔ 21, Ln′ ↔ 20.
Json bv_correspondence();

/// Requires ⋆ = ⋄ on objects and morphisms of scope and I = J, then runs the
/// four lifting axioms under their Hopf-monad labels.
CompactResult compact_hopf_check(const ComonadBundle& cb, const LindistBundle& bundle,
                                 const NegationStructure& neg, const NegationLift& lift,
                                 const Scope& scope);

}  // namespace ldlab
