#pragma once

#include <vector>

#include "ldlab/category.hpp"
#include "ldlab/report.hpp"

namespace ldlab {

/// Generator morphisms between every ordered pair of scope objects, grouped by
/// (dom, cod) in ascending order.
std::vector<Mor> scope_generators(const Category& cat, const Scope& scope);

/// Associativity on every composable generator triple and both identity laws
/// on every generator. Axiom id "cat".
CheckReport check_category_laws(const Category& cat, const Scope& scope);

/// Strict associativity and unit on objects, then functoriality of the
/// product: preservation of identities, functoriality in each argument, and
/// f⊗g = (f⊗1)(1⊗g) = (1⊗g)(f⊗1). Axiom id "mon-" + tensor tag.
CheckReport check_monoidal_laws(const Category& cat, const Tensor& tensor, const Scope& scope);

/// Naturality, c_{B,A} c_{A,B} = 1 and the two strict hexagons. Axiom id "sym".
CheckReport check_symmetry_laws(const Category& cat, const Tensor& tensor, const Family2& braiding,
                                const Scope& scope);

}  // namespace ldlab
