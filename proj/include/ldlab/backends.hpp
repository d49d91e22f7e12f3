#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <unordered_map>
#include <vector>

#include "ldlab/category.hpp"

namespace ldlab {

/// A preorder viewed as a category: exactly one arrow a -> b when a ≤ b.
class ThinCategory final : public Category {
 public:
  ThinCategory(std::vector<std::string> carrier, std::vector<std::vector<bool>> leq);

  /// Chain 0 < 1 < ... < n-1 with the given labels.
  static ThinCategory chain(std::vector<std::string> labels);

  std::size_t size() const { return carrier_.size(); }
  const std::vector<std::string>& carrier() const { return carrier_; }
  const std::vector<std::vector<bool>>& order() const { return leq_; }
  bool leq(Obj a, Obj b) const;

  /// The unique witness a -> b; throws MissingWitness when a ≰ b.
  Mor arrow(Obj a, Obj b) const;

  BackendKind kind() const override { return BackendKind::thin_quantale; }
  bool contains(Obj a) const override { return a.id < carrier_.size(); }
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  std::string label(Obj a) const override;
  std::string describe(const Mor& f) const override;
  std::string difference(const Mor& f, const Mor& g) const override;
  std::uint64_t hom_size(Obj a, Obj b) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::vector<Obj> default_objects() const override;

 private:
  std::vector<std::string> carrier_;
  std::vector<std::vector<bool>> leq_;
};

/// Finite-dimensional vector spaces over F_p: objects are dimensions, a
/// morphism m -> n is an n×m matrix.
class MatrixCategory final : public Category {
 public:
  MatrixCategory(std::uint32_t p, std::vector<Obj> declared);

  std::uint32_t prime() const { return p_; }
  const std::vector<Obj>& declared() const { return declared_; }

  /// Wraps a matrix as a morphism after checking its shape.
  Mor morphism(Obj dom, Obj cod, Matrix m) const;
  Mor morphism(Matrix m) const;

  BackendKind kind() const override { return BackendKind::matrix_field; }
  bool contains(Obj) const override { return true; }
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  std::string label(Obj a) const override;
  std::string describe(const Mor& f) const override;
  std::string difference(const Mor& f, const Mor& g) const override;
  std::uint64_t hom_size(Obj a, Obj b) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  /// Above `limit`, the zero map plus the elementary matrices E_ij. Every
  /// equation a checker tests is linear in the varying morphism, so a
  /// spanning set decides it.
  std::vector<Mor> hom_generators(Obj a, Obj b, std::uint64_t limit) const override;
  bool spans_only(Obj a, Obj b, std::uint64_t limit) const override;
  std::vector<Obj> default_objects() const override { return declared_; }

 private:
  std::uint32_t p_;
  std::vector<Obj> declared_;
};

struct TableMorphism {
  Obj dom;
  Obj cod;
  std::string label;
};

/// Finite category given by explicit morphism and composition tables.
class TableCategory final : public Category {
 public:
  TableCategory(std::vector<std::string> objects, std::vector<TableMorphism> morphisms,
                std::vector<std::uint32_t> identities,
                const std::vector<std::array<std::uint32_t, 3>>& composition);

  std::size_t object_count() const { return objects_.size(); }
  std::size_t morphism_count() const { return morphisms_.size(); }
  const std::vector<std::string>& object_labels() const { return objects_; }
  const std::vector<TableMorphism>& morphisms() const { return morphisms_; }
  const std::vector<std::uint32_t>& identities() const { return identities_; }
  /// Composition entries (g, f, g∘f) sorted by (g, f).
  std::vector<std::array<std::uint32_t, 3>> composition_entries() const;

  Mor morphism(std::uint32_t id) const;

  BackendKind kind() const override { return BackendKind::finite_table; }
  bool contains(Obj a) const override { return a.id < objects_.size(); }
  Mor identity(Obj a) const override;
  Mor compose(const Mor& g, const Mor& f) const override;
  bool equal(const Mor& f, const Mor& g) const override;
  std::string label(Obj a) const override;
  std::string describe(const Mor& f) const override;
  std::uint64_t hom_size(Obj a, Obj b) const override;
  std::vector<Mor> hom(Obj a, Obj b) const override;
  std::vector<Obj> default_objects() const override;

 private:
  static std::uint64_t key(std::uint32_t g, std::uint32_t f) {
    return (std::uint64_t{g} << 32U) | f;
  }

  std::vector<std::string> objects_;
  std::vector<TableMorphism> morphisms_;
  std::vector<std::uint32_t> identities_;
  std::unordered_map<std::uint64_t, std::uint32_t> composition_;
  std::vector<std::vector<std::vector<std::uint32_t>>> homs_;
};

}  // namespace ldlab
