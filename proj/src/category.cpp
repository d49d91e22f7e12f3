#include "ldlab/category.hpp"

#include <cstdlib>
#include <string>

namespace ldlab {

std::string to_string(BackendKind kind) {
  switch (kind) {
    case BackendKind::thin_quantale:
      return "thin-quantale";
    case BackendKind::matrix_field:
      return "matrix-field";
    case BackendKind::finite_table:
      return "finite-table";
  }
  return "unknown";
}

std::uint64_t enumeration_bound() {
  static const std::uint64_t bound = [] {
    if (const char* env = std::getenv("LDLAB_MAX_ENUM")) {
      try {
        return static_cast<std::uint64_t>(std::stoull(env));
      } catch (const std::exception&) {
      }
    }
    return std::uint64_t{1000000};
  }();
  return bound;
}

std::string Category::difference(const Mor& f, const Mor& g) const {
  return describe(f) + " != " + describe(g);
}

std::vector<Mor> Category::hom_generators(Obj a, Obj b, std::uint64_t) const {
  return hom(a, b);
}

bool Category::spans_only(Obj, Obj, std::uint64_t) const { return false; }

Mor Category::chain(std::initializer_list<Mor> arrows) const {
  if (arrows.size() == 0) throw CompositionError("empty composite");
  auto it = arrows.begin();
  Mor result = *it++;
  for (; it != arrows.end(); ++it) result = compose(*it, result);
  return result;
}

std::string describe_arrow(const Category& cat, const Mor& f) {
  return cat.label(f.dom) + " -> " + cat.label(f.cod) + " " + cat.describe(f);
}

}  // namespace ldlab
