#pragma once

#include <cstdint>
#include <functional>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

#include "json.hpp"

#include "ldlab/category.hpp"

namespace ldlab {

using Json = nlohmann::ordered_json;

/// Finite region of a backend over which laws are checked.
struct Scope {
  std::vector<Obj> objects;
  /// Hom-sets up to this size are used exhaustively in naturality-type
  /// checks; larger ones are replaced by a spanning set where the backend
  /// has one.
  std::uint64_t generator_limit = 64;

  static Scope of(const Category& cat);
  Json to_json(const Category& cat) const;
};

/// One failing tuple.
struct Counterexample {
  std::string law;
  std::vector<std::string> tuple;
  /// "mismatch", "witness-missing", "ill-typed", "not-a-coalgebra", ...
  std::string kind;
  std::string detail;
};

struct AxiomResult {
  std::string id;
  std::string description;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;
  std::vector<Counterexample> counterexamples;
  std::vector<std::string> notes;

  bool pass() const { return counterexamples.empty(); }
  bool vacuous() const { return checked == 0; }
  Json to_json() const;
};

struct CheckReport {
  std::vector<AxiomResult> axioms;
  std::vector<std::string> notes;

  bool pass() const;
  const AxiomResult* find(const std::string& id) const;
  bool passes(const std::string& id) const;
  /// Appends the other report, merging results that share an axiom id.
  void merge(const CheckReport& other);
  void add(AxiomResult result);
  /// Ids of failing axioms in report order.
  std::vector<std::string> failing() const;

  Json to_json() const;
  std::string summary() const;
};

/// Raised by constructions whose input fails a required check.
class PreconditionError : public std::runtime_error {
 public:
  PreconditionError(const std::string& what, CheckReport report)
      : std::runtime_error(what), report_(std::move(report)) {}
  const CheckReport& report() const { return report_; }

 private:
  CheckReport report_;
};

/// A required structure component (φ, ψ, a negation, ...) is absent.
class MissingStructure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Accumulates the verdict for one axiom id across many tuples.
class AxiomCheck {
 public:
  AxiomCheck(const Category& cat, std::string id, std::string description);

  /// Sets the law name attached to subsequent counterexamples.
  AxiomCheck& law(std::string name) {
    law_ = std::move(name);
    return *this;
  }

  /// Evaluates both sides and records whether they are equal. Missing thin
  /// witnesses and ill-typed composites count as failures; tuples outside a
  /// partial structure are skipped.
  void commutes(const std::vector<Obj>& tuple, const std::function<Mor()>& lhs,
                const std::function<Mor()>& rhs);
  void commutes(const std::vector<std::string>& tuple, const std::function<Mor()>& lhs,
                const std::function<Mor()>& rhs);

  /// Records whether `predicate` holds; exceptions are handled as in commutes.
  void holds(const std::vector<std::string>& tuple, const std::function<bool()>& predicate,
             const std::string& kind, const std::string& detail);
  void holds(const std::vector<Obj>& tuple, const std::function<bool()>& predicate,
             const std::string& kind, const std::string& detail);

  void fail(const std::vector<std::string>& tuple, std::string kind, std::string detail);
  void count(std::uint64_t n = 1) { result_.checked += n; }
  void skip(std::uint64_t n = 1) { result_.skipped += n; }
  void note(std::string text) { result_.notes.push_back(std::move(text)); }

  std::vector<std::string> labels(const std::vector<Obj>& tuple) const;
  const Category& category() const { return cat_; }

  AxiomResult finish();

 private:
  const Category& cat_;
  AxiomResult result_;
  std::string law_;
};

}  // namespace ldlab
