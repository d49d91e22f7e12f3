#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldlab/backends.hpp"
#include "ldlab/category.hpp"
#include "ldlab/lindist.hpp"
#include "ldlab/report.hpp"

namespace ldlab {

/// Comonad (G, δ, ε), optionally monoidal for ⋆ via (φ, φ0) and for ⋄ via
/// (ψ, ψ0):
///   φ_{A,B} : GA⋆GB → G(A⋆B),  φ0 : I → GI,
///   ψ_{A,B} : GA⋄GB → G(A⋄B),  ψ0 : J → GJ.
struct ComonadBundle {
  CategoryPtr cat;
  Functor G;
  Family1 delta;
  Family1 eps;
  std::optional<Family2> phi;
  std::optional<Family0> phi0;
  std::optional<Family2> psi;
  std::optional<Family0> psi0;

  const Category& category() const { return *cat; }
};

/// ν_A : SA → GSGA and ν′_A : S′A → GS′GA.
struct NegationLift {
  Family1 nu;
  Family1 nup;
};

/// Coalgebra (A, γ : A → GA).
struct Coalgebra {
  Obj carrier;
  Mor gamma;
};

/// Bialgebra with respect to ⋄: μ : B⋄B → B, η : J → B, d : B → B⋄B,
/// cu : B → J.
struct Bialgebra {
  Obj carrier;
  Mor mu;
  Mor eta;
  Mor d;
  Mor cu;
};

/// Hopf algebra: a bialgebra with antipode s : H → H.
struct HopfAlgebra {
  Obj carrier;
  Mor mu;
  Mor eta;
  Mor d;
  Mor cu;
  Mor s;

  Bialgebra bialgebra() const { return Bialgebra{carrier, mu, eta, d, cu}; }
};

enum class Side { star, par };

/// A lifted negation functor is not over S.
class LiftError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// ---------------------------------------------------------------- checks

/// Axiom "comonad": functoriality of G, naturality of δ and ε,
/// coassociativity and both counit laws.
CheckReport check_comonad(const ComonadBundle& cb, const Scope& scope);

/// Axiom "moncom-⋆" or "moncom-⋄": naturality, associativity and unit of the
/// structure maps, and δ, ε monoidal. Throws MissingStructure when the
/// requested maps are absent.
CheckReport check_monoidal_comonad(const ComonadBundle& cb, const Tensor& tensor, Side side,
                                   const Scope& scope);

/// Axiom "L1": G∂l ∘ φ ∘ (1⋆ψ) = ψ ∘ (φ⋄1) ∘ ∂l on GA⋆(GB⋄GC).
CheckReport check_L1(const ComonadBundle& cb, const LindistBundle& bundle, const Scope& scope);
/// Axiom "L2": G∂r ∘ φ ∘ (ψ⋆1) = ψ ∘ (1⋄φ) ∘ ∂r on (GB⋄GC)⋆GA.
CheckReport check_L2(const ComonadBundle& cb, const LindistBundle& bundle, const Scope& scope);

/// Axioms "nu-1" (ε_{SG}ν = Sε and naturality) and "nu-2"
/// (δ_{SG}ν = G²Sδ ∘ Gν_G ∘ ν), for ν and, when present, ν′.
CheckReport check_nu(const ComonadBundle& cb, const ContraFunctor& S, const ContraFunctor& Sp,
                     const NegationLift& lift, const Scope& scope);

/// Laws of a bialgebra with respect to the ⋄ of `bundle`, reported under the
/// axiom id "comonad". Needs the ⋄ symmetry.
CheckReport check_bialgebra(const Bialgebra& b, const LindistBundle& bundle, const Scope& scope);

/// Bialgebra laws plus μ(s⋄1)d = η∘cu = μ(1⋄s)d.
CheckReport check_hopf(const HopfAlgebra& h, const LindistBundle& bundle, const Scope& scope);

// ----------------------------------------------------------- constructions

ComonadBundle identity_comonad(CategoryPtr cat, const std::optional<Tensor>& star,
                               const std::optional<Tensor>& par);

/// ν_A = 1_SA, ν′_A = 1_S′A.
NegationLift identity_lift(CategoryPtr cat, const ContraFunctor& S, const ContraFunctor& Sp);

/// Interior operator g on a thin category; every structure map is the order
/// witness and raises MissingWitness where it does not exist.
ComonadBundle interior_comonad(std::shared_ptr<const ThinCategory> cat, std::vector<std::uint32_t> g,
                               const std::optional<Tensor>& star, const std::optional<Tensor>& par);

/// ν_A : SA ≤ gSgA and ν′_A : S′A ≤ gS′gA as order witnesses.
NegationLift interior_lift(std::shared_ptr<const ThinCategory> cat, std::vector<std::uint32_t> g,
                           const ContraFunctor& S, const ContraFunctor& Sp);

/// G = B⋄−, with φ the composite through ∂r, the symmetry, ∂l and μ, and ψ
/// through the symmetry and μ. Throws MissingStructure without a ⋄ symmetry.
ComonadBundle comonad_from_bialgebra_unchecked(const Bialgebra& b, const LindistBundle& bundle);

/// Checks the bialgebra laws first and throws PreconditionError on failure.
ComonadBundle comonad_from_bialgebra(const Bialgebra& b, const LindistBundle& bundle,
                                     const Scope& scope);

struct HopfComonad {
  ComonadBundle comonad;
  NegationLift lift;
};

/// G = H⊗− on F_p-matrices: δ = d⊗1, ε = cu⊗1, φ = (μ⊗1)(1⊗swap⊗1),
/// φ0 = η, ψ = φ, ψ0 = η; ν pairs (SA) against H⊗A through the antipode, ν′
/// through its inverse.
HopfComonad hopf_comonad_unchecked(std::shared_ptr<const MatrixCategory> cat, const HopfAlgebra& h);

/// As above, then validated: Hopf laws, comonad, both monoidal structures,
/// L1, L2, nu-1, nu-2 and the star-comonad axioms must pass on scope.
HopfComonad hopf_comonad(std::shared_ptr<const MatrixCategory> cat, const HopfAlgebra& h,
                         const LindistBundle& bundle, const NegationStructure& neg,
                         const StarAutonomousStructure& sa, const Scope& scope);

/// ν_A := γ̃ ∘ Sε_A where (SGA, γ̃) is the lift of the cofree coalgebra
/// (GA, δ_A). Throws LiftError when the lift is not over S on scope.
Family1 nu_from_lifted_functor(const ComonadBundle& cb, const ContraFunctor& S,
                               const std::function<Coalgebra(const Coalgebra&)>& lifted,
                               const Scope& scope);

}  // namespace ldlab
