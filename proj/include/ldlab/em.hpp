#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "ldlab/comonad.hpp"
#include "ldlab/tables.hpp"

namespace ldlab {

bool is_coalgebra(const ComonadBundle& cb, const Coalgebra& c);
bool is_coalgebra_morphism(const ComonadBundle& cb, const Coalgebra& from, const Coalgebra& to,
                           const Mor& f);

/// Every γ : A → GA satisfying ε∘γ = 1 and Gγ∘γ = δ∘γ, for A in scope, in
/// scope order and then hom order. Throws ScopeTooLarge above the bound.
std::vector<Coalgebra> enumerate_coalgebras(const ComonadBundle& cb, const Scope& scope);

/// The cofree coalgebras (GA, δ_A) for A in scope.
std::vector<Coalgebra> cofree_coalgebras(const ComonadBundle& cb, const Scope& scope);

/// (A⋆B, φ∘(α⋆β)) and (A⋄B, ψ∘(α⋄β)).
Coalgebra lift_tensor(const ComonadBundle& cb, const Tensor& t, Side side, const Coalgebra& a,
                      const Coalgebra& b);

/// S̃(A, γ) = (SA, GSγ∘ν_A). Throws LiftError when the result is not a
/// coalgebra, which contradicts the ν laws.
Coalgebra lift_negation_functor(const ComonadBundle& cb, const ContraFunctor& S, const Family1& nu,
                                const Coalgebra& c);

// ------------------------------------------------ axioms Le, Ln, Le′, Ln′

/// ψ0∘e_A∘(1⋆ε) = Ge_{GA}∘φ∘(ν⋆δ) on SA⋆GA.
CheckReport check_Le(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                     const NegationLift& lift, const Scope& scope);
/// G(1⋄Sδ)∘ψ∘(1⋄ν_{GA})∘n_{GA} = G(1⋄Sε)∘Gn_A∘φ0 on I.
CheckReport check_Ln(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                     const NegationLift& lift, const Scope& scope);
/// ψ0∘e′_A∘(ε⋆1) = Ge′_{GA}∘φ∘(δ⋆ν′) on GA⋆S′A.
CheckReport check_LeP(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                      const NegationLift& lift, const Scope& scope);
/// G(S′δ⋄1)∘ψ∘(ν′_{GA}⋄1)∘n′_{GA} = G(S′ε⋄1)∘Gn′_A∘φ0 on I.
CheckReport check_LnP(const ComonadBundle& cb, const LindistBundle& b, const NegationStructure& neg,
                      const NegationLift& lift, const Scope& scope);

/// Le, Ln, Le′, Ln′ in that order.
CheckReport check_negation_axioms(const ComonadBundle& cb, const LindistBundle& b,
                                  const NegationStructure& neg, const NegationLift& lift,
                                  const Scope& scope);

/// One row of the agreement table between an axiom and the direct statement
/// that the corresponding lifted map is a coalgebra morphism.
struct EquivalenceRow {
  std::string axiom;
  std::string map;
  bool axiom_pass = false;
  bool direct_pass = false;
  std::size_t coalgebras = 0;
  bool agree() const { return axiom_pass == direct_pass; }
};

struct EquivalenceResult {
  std::vector<EquivalenceRow> rows;
  CheckReport axioms;
  CheckReport direct;
  bool agree() const;
  Json to_json() const;
};

/// Direct coalgebra-morphism verdicts for e, n, e′, n′ over the given
/// coalgebras, under axiom ids Le, Ln, Le′, Ln′.
CheckReport check_negation_maps_direct(const ComonadBundle& cb, const LindistBundle& b,
                                       const NegationStructure& neg, const NegationLift& lift,
                                       const std::vector<Coalgebra>& coalgebras);

/// ∂l and ∂r as coalgebra morphisms over every triple of the given
/// coalgebras, under axiom ids L1 and L2 with law "coalgebra-morphism".
CheckReport check_lifted_distributions(const ComonadBundle& cb, const LindistBundle& b,
                                       const std::vector<Coalgebra>& coalgebras);

/// Compares Le, Ln, Le′ and Ln′ with the direct checks over the enumerated and
/// cofree coalgebras of scope.
EquivalenceResult checker_equivalence_suite(const ComonadBundle& cb, const LindistBundle& b,
                                            const NegationStructure& neg, const NegationLift& lift,
                                            const Scope& scope);

// ------------------------------------------------------ Eilenberg–Moore

struct EMCategory {
  std::vector<Coalgebra> objects;
  std::shared_ptr<const TableCategory> table;
  /// Base morphism underlying each table morphism.
  std::vector<Mor> payloads;
  CategoryPtr base;
  TableLindistData lindist_data;
  std::optional<TableNegationData> negation_data;
  LindistBundle lindist;
  std::optional<NegationStructure> negation;
  /// Verdicts gathered while building: lifted tensors are coalgebras, the
  /// lifted ∂ and negation maps are coalgebra morphisms.
  CheckReport report;
  std::vector<std::string> notes;

  Scope scope() const;
  /// The forgetful functor on morphisms.
  const Mor& project(const Mor& m) const { return payloads.at(m.table_id()); }
  std::string object_label(std::size_t i) const;
};

/// Builds C^G over the coalgebras of scope. Requires the comonad, both
/// monoidal structures, L1 and L2 (and nu-1, nu-2 when a lift is given) to
/// pass; throws PreconditionError otherwise. Tensors are defined where the
/// lifted carrier lies in scope.
EMCategory build_em_category(const ComonadBundle& cb, const LindistBundle& b,
                             const NegationStructure* neg, const NegationLift* lift,
                             const Scope& scope);

}  // namespace ldlab
