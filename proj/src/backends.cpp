#include "ldlab/backends.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>

namespace ldlab {

namespace {

std::string type_error(const Category& cat, const Mor& g, const Mor& f) {
  return "cannot compose " + describe_arrow(cat, g) + " after " + describe_arrow(cat, f);
}

std::uint64_t saturating_pow(std::uint64_t base, std::uint64_t exp) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (result > std::numeric_limits<std::uint64_t>::max() / base) {
      return std::numeric_limits<std::uint64_t>::max();
    }
    result *= base;
  }
  return result;
}

}  // namespace

// ---------------------------------------------------------------- thin

ThinCategory::ThinCategory(std::vector<std::string> carrier, std::vector<std::vector<bool>> leq)
    : carrier_(std::move(carrier)), leq_(std::move(leq)) {
  if (carrier_.empty()) throw std::invalid_argument("thin backend needs a nonempty carrier");
  if (leq_.size() != carrier_.size()) throw std::invalid_argument("order relation has wrong size");
  for (const auto& row : leq_) {
    if (row.size() != carrier_.size()) throw std::invalid_argument("order relation is not square");
  }
}

ThinCategory ThinCategory::chain(std::vector<std::string> labels) {
  const std::size_t n = labels.size();
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i; j < n; ++j) leq[i][j] = true;
  }
  return ThinCategory(std::move(labels), std::move(leq));
}

bool ThinCategory::leq(Obj a, Obj b) const {
  if (!contains(a) || !contains(b)) throw std::out_of_range("object outside thin carrier");
  return leq_[a.id][b.id];
}

Mor ThinCategory::arrow(Obj a, Obj b) const {
  if (!leq(a, b)) throw MissingWitness("no witness " + label(a) + " ≤ " + label(b));
  return Mor{a, b, std::monostate{}};
}

Mor ThinCategory::identity(Obj a) const { return arrow(a, a); }

Mor ThinCategory::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CompositionError(type_error(*this, g, f));
  return arrow(f.dom, g.cod);
}

bool ThinCategory::equal(const Mor& f, const Mor& g) const { return parallel(f, g); }

std::string ThinCategory::label(Obj a) const {
  return contains(a) ? carrier_[a.id] : "#" + std::to_string(a.id);
}

std::string ThinCategory::describe(const Mor& f) const {
  return "(" + label(f.dom) + " ≤ " + label(f.cod) + ")";
}

std::string ThinCategory::difference(const Mor& f, const Mor& g) const {
  return "parallel witnesses differ: " + describe(f) + " vs " + describe(g);
}

std::uint64_t ThinCategory::hom_size(Obj a, Obj b) const { return leq(a, b) ? 1 : 0; }

std::vector<Mor> ThinCategory::hom(Obj a, Obj b) const {
  if (!leq(a, b)) return {};
  return {arrow(a, b)};
}

std::vector<Obj> ThinCategory::default_objects() const {
  std::vector<Obj> out;
  for (std::uint32_t i = 0; i < carrier_.size(); ++i) out.push_back(Obj{i});
  return out;
}

// ---------------------------------------------------------------- matrix

MatrixCategory::MatrixCategory(std::uint32_t p, std::vector<Obj> declared)
    : p_(p), declared_(std::move(declared)) {
  if (!is_prime(p_)) throw std::invalid_argument("matrix backend needs a prime p");
  std::sort(declared_.begin(), declared_.end());
  declared_.erase(std::unique(declared_.begin(), declared_.end()), declared_.end());
}

Mor MatrixCategory::morphism(Obj dom, Obj cod, Matrix m) const {
  if (m.prime() != p_ || m.rows() != cod.id || m.cols() != dom.id) {
    throw CompositionError("matrix of shape " + std::to_string(m.rows()) + "x" +
                           std::to_string(m.cols()) + " over F_" + std::to_string(m.prime()) +
                           " is not a morphism " + std::to_string(dom.id) + " -> " +
                           std::to_string(cod.id));
  }
  return Mor{dom, cod, std::move(m)};
}

Mor MatrixCategory::morphism(Matrix m) const {
  const Obj dom{static_cast<std::uint32_t>(m.cols())};
  const Obj cod{static_cast<std::uint32_t>(m.rows())};
  return morphism(dom, cod, std::move(m));
}

Mor MatrixCategory::identity(Obj a) const { return Mor{a, a, Matrix::identity(p_, a.id)}; }

Mor MatrixCategory::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CompositionError(type_error(*this, g, f));
  return Mor{f.dom, g.cod, g.matrix() * f.matrix()};
}

bool MatrixCategory::equal(const Mor& f, const Mor& g) const {
  return parallel(f, g) && f.matrix() == g.matrix();
}

std::string MatrixCategory::label(Obj a) const { return std::to_string(a.id); }

std::string MatrixCategory::describe(const Mor& f) const {
  const Matrix& m = f.matrix();
  if (m.rows() * m.cols() <= 16) return m.str();
  return "<" + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix>";
}

std::string MatrixCategory::difference(const Mor& f, const Mor& g) const {
  const auto pos = f.matrix().first_difference(g.matrix());
  if (!pos) return "equal";
  return "entry (" + std::to_string(pos->first) + "," + std::to_string(pos->second) +
         "): " + std::to_string(f.matrix()(pos->first, pos->second)) + " vs " +
         std::to_string(g.matrix()(pos->first, pos->second));
}

std::uint64_t MatrixCategory::hom_size(Obj a, Obj b) const {
  return saturating_pow(p_, std::uint64_t{a.id} * b.id);
}

std::vector<Mor> MatrixCategory::hom(Obj a, Obj b) const {
  const std::uint64_t size = hom_size(a, b);
  if (size > enumeration_bound()) {
    throw ScopeTooLarge("hom(" + label(a) + ", " + label(b) + ") has " +
                        (size == std::numeric_limits<std::uint64_t>::max()
                             ? std::string("more than 2^64")
                             : std::to_string(size)) +
                        " elements, above the enumeration bound " +
                        std::to_string(enumeration_bound()));
  }
  std::vector<Mor> out;
  out.reserve(size);
  const std::size_t cells = std::size_t{a.id} * b.id;
  std::vector<std::uint32_t> digits(cells, 0);
  for (std::uint64_t k = 0; k < size; ++k) {
    Matrix m(p_, b.id, a.id);
    for (std::size_t i = 0; i < cells; ++i) {
      if (digits[i] != 0) m.set(i / a.id, i % a.id, digits[i]);
    }
    out.push_back(Mor{a, b, std::move(m)});
    // Little-endian counter over the last cell first gives lexicographic order.
    for (std::size_t i = cells; i-- > 0;) {
      if (++digits[i] < p_) break;
      digits[i] = 0;
    }
  }
  return out;
}

std::vector<Mor> MatrixCategory::hom_generators(Obj a, Obj b, std::uint64_t limit) const {
  if (!spans_only(a, b, limit)) return hom(a, b);
  std::vector<Mor> out;
  out.push_back(Mor{a, b, Matrix(p_, b.id, a.id)});
  for (std::uint32_t r = 0; r < b.id; ++r) {
    for (std::uint32_t c = 0; c < a.id; ++c) {
      Matrix m(p_, b.id, a.id);
      m.set(r, c, 1);
      out.push_back(Mor{a, b, std::move(m)});
    }
  }
  return out;
}

bool MatrixCategory::spans_only(Obj a, Obj b, std::uint64_t limit) const {
  return hom_size(a, b) > limit;
}

// ---------------------------------------------------------------- table

TableCategory::TableCategory(std::vector<std::string> objects, std::vector<TableMorphism> morphisms,
                             std::vector<std::uint32_t> identities,
                             const std::vector<std::array<std::uint32_t, 3>>& composition)
    : objects_(std::move(objects)),
      morphisms_(std::move(morphisms)),
      identities_(std::move(identities)) {
  if (identities_.size() != objects_.size()) {
    throw std::invalid_argument("table backend needs one identity per object");
  }
  homs_.assign(objects_.size(), std::vector<std::vector<std::uint32_t>>(objects_.size()));
  for (std::uint32_t id = 0; id < morphisms_.size(); ++id) {
    const auto& m = morphisms_[id];
    if (!contains(m.dom) || !contains(m.cod)) {
      throw std::invalid_argument("morphism " + std::to_string(id) + " has an unknown endpoint");
    }
    homs_[m.dom.id][m.cod.id].push_back(id);
  }
  for (std::uint32_t a = 0; a < objects_.size(); ++a) {
    const std::uint32_t id = identities_[a];
    if (id >= morphisms_.size() || morphisms_[id].dom.id != a || morphisms_[id].cod.id != a) {
      throw std::invalid_argument("identity of object " + std::to_string(a) + " is not an endomorphism");
    }
  }
  for (const auto& [g, f, gf] : composition) {
    if (g >= morphisms_.size() || f >= morphisms_.size() || gf >= morphisms_.size()) {
      throw std::invalid_argument("composition entry refers to an unknown morphism");
    }
    composition_[key(g, f)] = gf;
  }
}

std::vector<std::array<std::uint32_t, 3>> TableCategory::composition_entries() const {
  std::vector<std::array<std::uint32_t, 3>> out;
  out.reserve(composition_.size());
  for (const auto& [k, gf] : composition_) {
    out.push_back({static_cast<std::uint32_t>(k >> 32U), static_cast<std::uint32_t>(k & 0xffffffffU), gf});
  }
  std::sort(out.begin(), out.end());
  return out;
}

Mor TableCategory::morphism(std::uint32_t id) const {
  if (id >= morphisms_.size()) throw std::out_of_range("unknown table morphism");
  return Mor{morphisms_[id].dom, morphisms_[id].cod, id};
}

Mor TableCategory::identity(Obj a) const {
  if (!contains(a)) throw std::out_of_range("unknown table object");
  return morphism(identities_[a.id]);
}

Mor TableCategory::compose(const Mor& g, const Mor& f) const {
  if (f.cod != g.dom) throw CompositionError(type_error(*this, g, f));
  const auto it = composition_.find(key(g.table_id(), f.table_id()));
  if (it == composition_.end()) {
    throw CompositionError("composition table has no entry for " + describe(g) + " ∘ " + describe(f));
  }
  Mor out = morphism(it->second);
  if (out.dom != f.dom || out.cod != g.cod) {
    throw CompositionError("composition entry " + describe(g) + " ∘ " + describe(f) +
                           " has the wrong type");
  }
  return out;
}

bool TableCategory::equal(const Mor& f, const Mor& g) const {
  return parallel(f, g) && f.table_id() == g.table_id();
}

std::string TableCategory::label(Obj a) const {
  return contains(a) ? objects_[a.id] : "#" + std::to_string(a.id);
}

std::string TableCategory::describe(const Mor& f) const {
  const auto id = f.table_id();
  if (id < morphisms_.size() && !morphisms_[id].label.empty()) return morphisms_[id].label;
  return "m" + std::to_string(id);
}

std::uint64_t TableCategory::hom_size(Obj a, Obj b) const { return homs_.at(a.id).at(b.id).size(); }

std::vector<Mor> TableCategory::hom(Obj a, Obj b) const {
  std::vector<Mor> out;
  for (auto id : homs_.at(a.id).at(b.id)) out.push_back(morphism(id));
  return out;
}

std::vector<Obj> TableCategory::default_objects() const {
  std::vector<Obj> out;
  for (std::uint32_t i = 0; i < objects_.size(); ++i) out.push_back(Obj{i});
  return out;
}

}  // namespace ldlab
