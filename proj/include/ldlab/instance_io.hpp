#pragma once

#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ldlab/backends.hpp"
#include "ldlab/comonad.hpp"
#include "ldlab/em.hpp"
#include "ldlab/lindist.hpp"
#include "ldlab/report.hpp"

namespace ldlab {

inline constexpr int kSchemaVersion = 1;

/// The instance document does not match the schema.
class SchemaError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// An instance document turned into evaluable structure.
struct Model {
  Json source;
  std::string name;
  Scope scope;
  CategoryPtr cat;
  std::shared_ptr<const ThinCategory> thin;
  std::shared_ptr<const MatrixCategory> matrix;
  std::shared_ptr<const TableCategory> table;

  std::optional<LindistBundle> lindist;
  std::optional<NegationStructure> negation;
  std::optional<StarAutonomousStructure> star;
  std::optional<ComonadBundle> comonad;
  std::optional<NegationLift> lift;
  std::optional<HopfAlgebra> hopf;
  std::optional<Bialgebra> bialgebra;
};

Json read_json_file(const std::string& path);
void write_json_file(const std::string& path, const Json& j);

/// Validates the document, applies its recorded mutations in order and builds
/// the structures. Throws SchemaError on malformed input.
Model load_model(const Json& instance);

/// Returns the instance with `descriptor` appended to its mutation list,
/// after checking that the descriptor applies. Throws SchemaError when it
/// targets a component the instance does not have.
Json mutate(const Json& instance, const Json& descriptor);

/// Parses an object list such as "1,2" or "0,1/2" against the model backend.
std::vector<Obj> parse_scope_objects(const Model& model, const std::string& text);

/// FNV-1a 64-bit digest of the canonical serialization, as 16 hex digits.
std::string digest(const Json& j);

/// Serializes an Eilenberg–Moore category as a finite-table instance.
Json export_em(const EMCategory& em, const std::string& name, const Json& base);

}  // namespace ldlab
