#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <memory>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "ldlab/matrix.hpp"

namespace ldlab {

/// Object of a backend. For table and thin backends this is an index into the
/// object list; for the matrix backend it is the dimension itself.
struct Obj {
  std::uint32_t id = 0;
  friend auto operator<=>(const Obj&, const Obj&) = default;
};

enum class BackendKind { thin_quantale, matrix_field, finite_table };

std::string to_string(BackendKind kind);

/// Payload of a morphism: nothing for a thin witness, a matrix over F_p, or a
/// morphism id in a finite table.
using Payload = std::variant<std::monostate, Matrix, std::uint32_t>;

struct Mor {
  Obj dom;
  Obj cod;
  Payload payload;

  const Matrix& matrix() const { return std::get<Matrix>(payload); }
  std::uint32_t table_id() const { return std::get<std::uint32_t>(payload); }
};

// Failures raised while evaluating a diagram. Checkers turn these into report
// entries rather than letting them escape.

class LawError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// cod(f) != dom(g), or a payload that does not fit its declared type.
class CompositionError : public LawError {
 public:
  using LawError::LawError;
};

/// A thin backend was asked for an arrow a -> b with a not below b, or a
/// family has no component at the requested index.
class MissingWitness : public LawError {
 public:
  using LawError::LawError;
};

/// A partial (table) structure is undefined at the requested tuple. Checks
/// skip such tuples and count them.
class OutsideClosure : public LawError {
 public:
  using LawError::LawError;
};

/// Hom-set or search space larger than the enumeration bound.
class ScopeTooLarge : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Enumeration bound, default 10^6, overridable with LDLAB_MAX_ENUM.
std::uint64_t enumeration_bound();

class Category {
 public:
  virtual ~Category() = default;

  virtual BackendKind kind() const = 0;
  virtual bool contains(Obj a) const = 0;
  virtual Mor identity(Obj a) const = 0;
  /// g ∘ f. Throws CompositionError on a domain/codomain mismatch.
  virtual Mor compose(const Mor& g, const Mor& f) const = 0;
  /// Equality of parallel morphisms.
  virtual bool equal(const Mor& f, const Mor& g) const = 0;

  virtual std::string label(Obj a) const = 0;
  virtual std::string describe(const Mor& f) const = 0;
  /// Human-readable location of the first disagreement between f and g.
  virtual std::string difference(const Mor& f, const Mor& g) const;

  /// Size of hom(a, b), saturating at UINT64_MAX.
  virtual std::uint64_t hom_size(Obj a, Obj b) const = 0;
  /// Every morphism a -> b in deterministic order. Throws ScopeTooLarge above
  /// the enumeration bound.
  virtual std::vector<Mor> hom(Obj a, Obj b) const = 0;
  /// Morphisms used to test naturality-type equations. Equal to hom(a, b)
  /// when that has at most `limit` elements; backends with linear structure
  /// may return a spanning set instead.
  virtual std::vector<Mor> hom_generators(Obj a, Obj b, std::uint64_t limit) const;
  /// True when hom_generators returned a spanning set instead of everything.
  virtual bool spans_only(Obj a, Obj b, std::uint64_t limit) const;

  virtual std::vector<Obj> default_objects() const = 0;

  /// Diagrammatic composite: chain({f, g, h}) = h ∘ g ∘ f.
  Mor chain(std::initializer_list<Mor> arrows) const;
  bool parallel(const Mor& f, const Mor& g) const { return f.dom == g.dom && f.cod == g.cod; }
};

using CategoryPtr = std::shared_ptr<const Category>;

std::string describe_arrow(const Category& cat, const Mor& f);

// ---------------------------------------------------------------------------
// Functor and family data. Everything is given by evaluation rules so the same
// checker code runs on every backend.

struct Functor {
  std::function<Obj(Obj)> obj;
  std::function<Mor(const Mor&)> mor;
  Obj operator()(Obj a) const { return obj(a); }
  Mor operator()(const Mor& f) const { return mor(f); }
};

/// Contravariant functor: f : A -> B maps to Sf : SB -> SA.
struct ContraFunctor {
  std::function<Obj(Obj)> obj;
  std::function<Mor(const Mor&)> mor;
  Obj operator()(Obj a) const { return obj(a); }
  Mor operator()(const Mor& f) const { return mor(f); }
};

/// Strict monoidal product. `tag` is "⋆" or "⋄".
struct Tensor {
  std::string tag;
  Obj unit;
  std::function<Obj(Obj, Obj)> obj;
  std::function<Mor(const Mor&, const Mor&)> mor;

  Obj operator()(Obj a, Obj b) const { return obj(a, b); }
  Obj operator()(Obj a, Obj b, Obj c) const { return obj(obj(a, b), c); }
  Mor operator()(const Mor& f, const Mor& g) const { return mor(f, g); }
  Mor operator()(const Mor& f, const Mor& g, const Mor& h) const { return mor(mor(f, g), h); }
};

using Family0 = std::function<Mor()>;
using Family1 = std::function<Mor(Obj)>;
using Family2 = std::function<Mor(Obj, Obj)>;
using Family3 = std::function<Mor(Obj, Obj, Obj)>;

}  // namespace ldlab
