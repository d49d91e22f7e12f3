#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <utility>

#include "ldlab/backends.hpp"
#include "ldlab/lindist.hpp"

namespace ldlab {

using IdPair = std::pair<std::uint32_t, std::uint32_t>;
using IdTriple = std::array<std::uint32_t, 3>;

/// Tensor tables over a finite-table backend. Missing entries mean the
/// structure is undefined there; lookups raise OutsideClosure.
struct TensorTable {
  std::uint32_t unit = 0;
  std::map<IdPair, std::uint32_t> objects;
  std::map<IdPair, std::uint32_t> morphisms;
};

struct TableLindistData {
  TensorTable star;
  TensorTable par;
  std::map<IdTriple, std::uint32_t> dl;
  std::map<IdTriple, std::uint32_t> dr;
};

struct FunctorTable {
  std::map<std::uint32_t, std::uint32_t> objects;
  std::map<std::uint32_t, std::uint32_t> morphisms;
};

struct TableNegationData {
  FunctorTable S;
  FunctorTable Sp;
  std::map<std::uint32_t, std::uint32_t> e;
  std::map<std::uint32_t, std::uint32_t> n;
  std::map<std::uint32_t, std::uint32_t> ep;
  std::map<std::uint32_t, std::uint32_t> np;
};

Tensor make_table_tensor(std::shared_ptr<const TableCategory> cat, std::string tag,
                         std::shared_ptr<const TensorTable> table);

LindistBundle make_table_lindist(std::shared_ptr<const TableCategory> cat, const TableLindistData& data);

NegationStructure make_table_negation(std::shared_ptr<const TableCategory> cat,
                                      const TableNegationData& data);

}  // namespace ldlab
