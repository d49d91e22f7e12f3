#include "ldlab/instance_io.hpp"

#include <algorithm>
#include <array>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "ldlab/tables.hpp"

namespace ldlab {

namespace {

void allow_keys(const Json& j, const std::string& where, std::initializer_list<const char*> keys) {
  if (!j.is_object()) throw SchemaError(where + " must be an object");
  const std::set<std::string> allowed(keys.begin(), keys.end());
  for (const auto& [k, v] : j.items()) {
    if (!allowed.count(k)) throw SchemaError("unknown field \"" + k + "\" in " + where);
  }
}

const Json& field(const Json& j, const char* key, const std::string& where) {
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + " needs \"" + key + "\"");
  return *it;
}

std::string kind_of(const Json& j, const std::string& where) {
  return field(j, "kind", where).get<std::string>();
}

// Backend kinds are normalized to thin, matrix and table; the long names are
// the canonical spelling in files.
std::string backend_kind(const Json& doc) {
  if (!doc.contains("backend") || !doc["backend"].is_object()) return "";
  const std::string k = doc["backend"].value("kind", "");
  if (k == "thin-quantale") return "thin";
  if (k == "matrix-field") return "matrix";
  if (k == "finite-table") return "table";
  return k;
}

std::uint32_t index_in(const Json& v, std::size_t size, const std::string& where) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0 || v.get<std::uint64_t>() >= size) {
    throw SchemaError(where + ": index " + v.dump() + " out of range");
  }
  return v.get<std::uint32_t>();
}

std::vector<std::uint32_t> index_list(const Json& j, std::size_t size, const std::string& where) {
  if (!j.is_array()) throw SchemaError(where + " must be a list");
  std::vector<std::uint32_t> out;
  for (const auto& v : j) out.push_back(index_in(v, size, where));
  return out;
}

Matrix matrix_of(const Json& j, std::uint32_t p, const std::string& where) {
  if (!j.is_array() || j.empty()) throw SchemaError(where + " must be a non-empty list of rows");
  const auto rows = j.get<std::vector<std::vector<std::int64_t>>>();
  for (const auto& r : rows) {
    if (r.size() != rows.front().size() || r.empty()) throw SchemaError(where + " has ragged rows");
  }
  return Matrix::from_rows(p, rows);
}

// ------------------------------------------------------------ mutations

Json* locate(Json& doc, const std::string& target) {
  Json* cur = &doc;
  std::stringstream ss(target);
  std::string part;
  while (std::getline(ss, part, '.')) {
    if (!cur->is_object() || !cur->contains(part)) return nullptr;
    cur = &(*cur)[part];
  }
  return cur;
}

void apply_one(Json& doc, const Json& d) {
  allow_keys(d, "mutation", {"kind", "target", "at", "value", "note"});
  const std::string kind = kind_of(d, "mutation");
  auto target_of = [&]() -> Json& {
    const auto target = field(d, "target", "mutation").get<std::string>();
    Json* t = locate(doc, target);
    if (t == nullptr) throw SchemaError("mutation target " + target + " does not exist");
    return *t;
  };
  auto at = [&]() { return field(d, "at", "mutation").get<std::vector<std::size_t>>(); };

  if (kind == "table-entry") {
    Json& t = target_of();
    Json* table = t.is_object() && t.contains("table") ? &t["table"] : &t;
    if (t.is_object() && t.contains("g")) table = &t["g"];
    const auto pos = at();
    Json* cell = table;
    for (auto i : pos) {
      if (!cell->is_array() || i >= cell->size()) throw SchemaError("mutation position is out of range");
      cell = &(*cell)[i];
    }
    if (!cell->is_number_integer()) throw SchemaError("mutation position does not name a table entry");
    *cell = field(d, "value", "mutation");
  } else if (kind == "matrix-entry") {
    Json& t = target_of();
    const auto pos = at();
    if (pos.size() != 2 || !t.is_array() || pos[0] >= t.size() || !t[pos[0]].is_array() ||
        pos[1] >= t[pos[0]].size()) {
      throw SchemaError("mutation position is out of range");
    }
    t[pos[0]][pos[1]] = field(d, "value", "mutation");
  } else if (kind == "unit") {
    Json& t = target_of();
    if (!t.is_object() || !t.contains("unit")) throw SchemaError("mutation target has no unit");
    t["unit"] = field(d, "value", "mutation");
  } else if (kind == "drop-swap-in-phi") {
    if (!doc.contains("comonad") || kind_of(doc["comonad"], "comonad") != "hopf-tensor") {
      throw SchemaError("drop-swap-in-phi needs a hopf-tensor comonad");
    }
    doc["comonad"]["drop_swap"] = true;
  } else if (kind == "zero-nu") {
    if (!doc.contains("negation_lift") || backend_kind(doc) != "matrix") {
      throw SchemaError("zero-nu needs a negation lift on a matrix backend");
    }
    doc["negation_lift"]["zero"] = true;
  } else if (kind == "missing-witness") {
    const auto target = field(d, "target", "mutation").get<std::string>();
    if (target != "lindist.dl" && target != "lindist.dr") {
      throw SchemaError("missing-witness targets lindist.dl or lindist.dr");
    }
    if (backend_kind(doc) != "thin" || !doc.contains("lindist")) {
      throw SchemaError("missing-witness needs a thin backend with a lindist section");
    }
    const auto pos = at();
    if (pos.size() != 3) throw SchemaError("missing-witness needs a triple");
    const auto n = doc["backend"]["carrier"].size();
    for (auto i : pos) {
      if (i >= n) throw SchemaError("mutation position is out of range");
    }
    doc["lindist"]["missing"][target.substr(8)].push_back(pos);
  } else if (kind == "identity-antipode") {
    if (!doc.contains("hopf")) throw SchemaError("identity-antipode needs a Hopf algebra");
    const auto h = field(doc["hopf"], "dim", "hopf").get<std::size_t>();
    Json rows = Json::array();
    for (std::size_t i = 0; i < h; ++i) {
      Json r = Json::array();
      for (std::size_t j = 0; j < h; ++j) r.push_back(i == j ? 1 : 0);
      rows.push_back(r);
    }
    doc["hopf"]["s"] = rows;
  } else {
    throw SchemaError("unknown mutation kind \"" + kind + "\"");
  }
}

// ------------------------------------------------------------- builders

Tensor kron_tensor(std::shared_ptr<const MatrixCategory> cat, std::string tag) {
  Tensor t;
  t.tag = std::move(tag);
  t.unit = Obj{1};
  t.obj = [](Obj a, Obj b) { return Obj{a.id * b.id}; };
  t.mor = [cat](const Mor& f, const Mor& g) {
    return cat->morphism(Obj{f.dom.id * g.dom.id}, Obj{f.cod.id * g.cod.id}, kron(f.matrix(), g.matrix()));
  };
  return t;
}

ContraFunctor transpose_functor(std::shared_ptr<const MatrixCategory> cat) {
  ContraFunctor S;
  S.obj = [](Obj a) { return a; };
  S.mor = [cat](const Mor& f) { return cat->morphism(f.cod, f.dom, f.matrix().transpose()); };
  return S;
}

Mor trace_row(const MatrixCategory& cat, Obj a) {
  Matrix m(cat.prime(), 1, std::size_t{a.id} * a.id);
  for (std::uint32_t i = 0; i < a.id; ++i) m.set(0, i * a.id + i, 1);
  return cat.morphism(Obj{a.id * a.id}, Obj{1}, std::move(m));
}

Mor trace_column(const MatrixCategory& cat, Obj a) {
  return cat.morphism(Obj{1}, Obj{a.id * a.id}, trace_row(cat, a).matrix().transpose());
}

Tensor thin_tensor(std::shared_ptr<const ThinCategory> cat, const Json& j, std::string tag,
                   const std::string& where) {
  allow_keys(j, where, {"table", "unit"});
  const std::size_t n = cat->size();
  const auto& rows = field(j, "table", where);
  if (!rows.is_array() || rows.size() != n) throw SchemaError(where + ".table must have one row per element");
  auto table = std::make_shared<std::vector<std::vector<std::uint32_t>>>();
  for (const auto& r : rows) {
    auto row = index_list(r, n, where + ".table");
    if (row.size() != n) throw SchemaError(where + ".table must be square");
    table->push_back(std::move(row));
  }
  Tensor t;
  t.tag = std::move(tag);
  t.unit = Obj{index_in(field(j, "unit", where), n, where + ".unit")};
  t.obj = [table](Obj a, Obj b) { return Obj{(*table)[a.id][b.id]}; };
  t.mor = [cat, table](const Mor& f, const Mor& g) {
    return cat->arrow(Obj{(*table)[f.dom.id][g.dom.id]}, Obj{(*table)[f.cod.id][g.cod.id]});
  };
  return t;
}

LindistBundle thin_lindist(std::shared_ptr<const ThinCategory> cat, const Json& j) {
  allow_keys(j, "lindist", {"star", "par", "symmetric", "missing"});
  LindistBundle b;
  b.cat = cat;
  b.star = thin_tensor(cat, field(j, "star", "lindist"), "⋆", "lindist.star");
  b.par = thin_tensor(cat, field(j, "par", "lindist"), "⋄", "lindist.par");
  using Triple = std::array<std::uint32_t, 3>;
  auto missing = [&](const char* key) {
    auto out = std::make_shared<std::set<Triple>>();
    if (!j.contains("missing")) return out;
    allow_keys(j["missing"], "lindist.missing", {"dl", "dr"});
    if (!j["missing"].contains(key)) return out;
    for (const auto& t : j["missing"][key]) {
      const auto idx = index_list(t, cat->size(), std::string("lindist.missing.") + key);
      if (idx.size() != 3) throw SchemaError("missing witnesses are triples of elements");
      out->insert(Triple{idx[0], idx[1], idx[2]});
    }
    return out;
  };
  const auto dl_missing = missing("dl");
  const auto dr_missing = missing("dr");
  const Tensor st = b.star;
  const Tensor pr = b.par;
  b.dl = [cat, st, pr, dl_missing](Obj a, Obj y, Obj z) {
    if (dl_missing->count(Triple{a.id, y.id, z.id})) throw MissingWitness("∂l removed at this triple");
    return cat->arrow(st(a, pr(y, z)), pr(st(a, y), z));
  };
  b.dr = [cat, st, pr, dr_missing](Obj a, Obj y, Obj z) {
    if (dr_missing->count(Triple{a.id, y.id, z.id})) throw MissingWitness("∂r removed at this triple");
    return cat->arrow(st(pr(y, z), a), pr(y, st(z, a)));
  };
  if (j.value("symmetric", false)) {
    b.sym_star = [cat, st](Obj a, Obj y) { return cat->arrow(st(a, y), st(y, a)); };
    b.sym_par = [cat, pr](Obj a, Obj y) { return cat->arrow(pr(a, y), pr(y, a)); };
  }
  return b;
}

// The structure maps of a thin bialgebra are order witnesses; a missing one
// means the carrier is not a bialgebra at all.
Bialgebra thin_bialgebra(const ThinCategory& cat, const LindistBundle& b, Obj B) {
  const Tensor& p = b.par;
  AxiomCheck check(cat, "comonad", "bialgebra laws");
  check.law("bialgebra-maps");
  std::optional<Bialgebra> out;
  check.holds(
      std::vector<std::string>{cat.label(B)},
      [&] {
        out = Bialgebra{B, cat.arrow(p(B, B), B), cat.arrow(p.unit, B), cat.arrow(B, p(B, B)),
                        cat.arrow(B, p.unit)};
        return true;
      },
      "witness-missing", "");
  CheckReport report;
  report.add(check.finish());
  if (!out) throw PreconditionError("the bialgebra structure maps do not exist", report);
  return *out;
}

ContraFunctor thin_negation_functor(std::shared_ptr<const ThinCategory> cat, const Json& j,
                                    const std::string& where) {
  auto table = std::make_shared<const std::vector<std::uint32_t>>(index_list(j, cat->size(), where));
  if (table->size() != cat->size()) throw SchemaError(where + " must have one entry per element");
  ContraFunctor S;
  S.obj = [table](Obj a) { return Obj{(*table)[a.id]}; };
  S.mor = [cat, table](const Mor& f) { return cat->arrow(Obj{(*table)[f.cod.id]}, Obj{(*table)[f.dom.id]}); };
  return S;
}

NegationStructure thin_negation(std::shared_ptr<const ThinCategory> cat, const LindistBundle& b,
                                const Json& j) {
  allow_keys(j, "negation", {"S", "Sp"});
  NegationStructure neg;
  neg.S = thin_negation_functor(cat, field(j, "S", "negation"), "negation.S");
  neg.Sp = thin_negation_functor(cat, field(j, "Sp", "negation"), "negation.Sp");
  const auto st = b.star;
  const auto pr = b.par;
  const auto S = neg.S;
  const auto Sp = neg.Sp;
  neg.e = [cat, st, pr, S](Obj a) { return cat->arrow(st(S(a), a), pr.unit); };
  neg.n = [cat, st, pr, S](Obj a) { return cat->arrow(st.unit, pr(a, S(a))); };
  neg.ep = [cat, st, pr, Sp](Obj a) { return cat->arrow(st(a, Sp(a)), pr.unit); };
  neg.np = [cat, st, pr, Sp](Obj a) { return cat->arrow(st.unit, pr(Sp(a), a)); };
  return neg;
}

TensorTable table_tensor(const Json& j, const TableCategory& cat, const std::string& where) {
  allow_keys(j, where, {"unit", "objects", "morphisms"});
  TensorTable t;
  const std::size_t no = cat.object_count();
  const std::size_t nm = cat.morphism_count();
  t.unit = index_in(field(j, "unit", where), no, where + ".unit");
  for (const auto& e : field(j, "objects", where)) {
    const auto v = index_list(e, no, where + ".objects");
    if (v.size() != 3) throw SchemaError(where + ".objects entries are [a, b, a⊗b]");
    t.objects[{v[0], v[1]}] = v[2];
  }
  for (const auto& e : field(j, "morphisms", where)) {
    const auto v = index_list(e, nm, where + ".morphisms");
    if (v.size() != 3) throw SchemaError(where + ".morphisms entries are [f, g, f⊗g]");
    t.morphisms[{v[0], v[1]}] = v[2];
  }
  return t;
}

std::map<IdTriple, std::uint32_t> table_family3(const Json& j, const TableCategory& cat,
                                               const std::string& where) {
  std::map<IdTriple, std::uint32_t> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 4) throw SchemaError(where + " entries are [a, b, c, morphism]");
    out[{index_in(e[0], cat.object_count(), where), index_in(e[1], cat.object_count(), where),
         index_in(e[2], cat.object_count(), where)}] = index_in(e[3], cat.morphism_count(), where);
  }
  return out;
}

std::map<std::uint32_t, std::uint32_t> table_map(const Json& j, std::size_t dom, std::size_t cod,
                                                 const std::string& where) {
  std::map<std::uint32_t, std::uint32_t> out;
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2) throw SchemaError(where + " entries are [key, value]");
    out[index_in(e[0], dom, where)] = index_in(e[1], cod, where);
  }
  return out;
}

std::shared_ptr<const TableCategory> table_backend(const Json& j) {
  allow_keys(j, "backend", {"kind", "objects", "morphisms", "identities", "composition"});
  const auto objects = field(j, "objects", "backend").get<std::vector<std::string>>();
  std::vector<TableMorphism> morphisms;
  for (const auto& m : field(j, "morphisms", "backend")) {
    allow_keys(m, "backend.morphisms", {"dom", "cod", "label"});
    morphisms.push_back(TableMorphism{Obj{index_in(field(m, "dom", "morphism"), objects.size(), "dom")},
                                      Obj{index_in(field(m, "cod", "morphism"), objects.size(), "cod")},
                                      m.value("label", "")});
  }
  const auto identities = index_list(field(j, "identities", "backend"), morphisms.size(), "identities");
  std::vector<std::array<std::uint32_t, 3>> composition;
  for (const auto& e : field(j, "composition", "backend")) {
    const auto v = index_list(e, morphisms.size(), "composition");
    if (v.size() != 3) throw SchemaError("composition entries are [g, f, g∘f]");
    composition.push_back({v[0], v[1], v[2]});
  }
  try {
    return std::make_shared<const TableCategory>(objects, morphisms, identities, composition);
  } catch (const std::invalid_argument& e) {
    throw SchemaError(std::string("table backend: ") + e.what());
  }
}

void build(Model& m) {
  const Json& doc = m.source;
  allow_keys(doc, "instance",
             {"schema_version", "name", "backend", "scope", "lindist", "negation", "star", "comonad",
              "negation_lift", "hopf", "bialgebra", "mutations", "generator", "origin"});
  if (field(doc, "schema_version", "instance").get<int>() != kSchemaVersion) {
    throw SchemaError("unsupported schema_version");
  }
  m.name = doc.value("name", "");
  const Json& backend = field(doc, "backend", "instance");
  kind_of(backend, "backend");
  const std::string kind = backend_kind(doc);

  if (kind == "thin") {
    allow_keys(backend, "backend", {"kind", "carrier", "order", "leq"});
    const auto carrier = field(backend, "carrier", "backend").get<std::vector<std::string>>();
    if (carrier.empty()) throw SchemaError("thin carrier is empty");
    if (backend.contains("leq")) {
      m.thin = std::make_shared<const ThinCategory>(carrier, backend["leq"].get<std::vector<std::vector<bool>>>());
    } else {
      if (backend.value("order", "chain") != "chain") throw SchemaError("thin order must be \"chain\" or a leq matrix");
      m.thin = std::make_shared<const ThinCategory>(ThinCategory::chain(carrier));
    }
    m.cat = m.thin;
    if (doc.contains("lindist")) m.lindist = thin_lindist(m.thin, doc["lindist"]);
    if (doc.contains("negation")) {
      if (!m.lindist) throw SchemaError("thin negation needs a lindist section");
      m.negation = thin_negation(m.thin, *m.lindist, doc["negation"]);
    }
    if (doc.contains("star")) throw SchemaError("thin instances derive their star-autonomous structure");
    if (doc.contains("hopf")) throw SchemaError("hopf needs a matrix backend");
    if (doc.contains("bialgebra")) {
      allow_keys(doc["bialgebra"], "bialgebra", {"carrier"});
      if (!m.lindist) throw SchemaError("bialgebra needs a lindist section");
      const Obj B{index_in(field(doc["bialgebra"], "carrier", "bialgebra"), m.thin->size(), "bialgebra.carrier")};
      m.bialgebra = thin_bialgebra(*m.thin, *m.lindist, B);
    }
  } else if (kind == "matrix") {
    allow_keys(backend, "backend", {"kind", "p", "objects"});
    const auto p = field(backend, "p", "backend").get<std::uint32_t>();
    if (!is_prime(p)) throw SchemaError("matrix backend needs a prime p");
    std::vector<Obj> objects;
    for (auto d : field(backend, "objects", "backend").get<std::vector<std::uint32_t>>()) {
      if (d == 0) throw SchemaError("matrix objects are positive dimensions");
      objects.push_back(Obj{d});
    }
    m.matrix = std::make_shared<const MatrixCategory>(p, objects);
    m.cat = m.matrix;
    const auto cat = m.matrix;
    if (doc.contains("lindist")) {
      allow_keys(doc["lindist"], "lindist", {"kind"});
      if (kind_of(doc["lindist"], "lindist") != "compact-kronecker") throw SchemaError("unknown matrix lindist kind");
      LindistBundle b;
      b.cat = cat;
      b.star = kron_tensor(cat, "⋆");
      b.par = kron_tensor(cat, "⋄");
      const Tensor t = b.star;
      b.dl = [cat, t](Obj a, Obj y, Obj z) { return cat->identity(t(a, y, z)); };
      b.dr = [cat, t](Obj a, Obj y, Obj z) { return cat->identity(t(y, z, a)); };
      auto sym = [cat](Obj a, Obj y) { return cat->morphism(Obj{a.id * y.id}, Obj{a.id * y.id}, swap_matrix(cat->prime(), a.id, y.id)); };
      b.sym_star = sym;
      b.sym_par = sym;
      m.lindist = b;
    }
    if (doc.contains("negation")) {
      allow_keys(doc["negation"], "negation", {"kind"});
      if (kind_of(doc["negation"], "negation") != "dual") throw SchemaError("unknown matrix negation kind");
      if (!m.lindist) throw SchemaError("matrix negation needs a lindist section");
      NegationStructure neg;
      neg.S = transpose_functor(cat);
      neg.Sp = transpose_functor(cat);
      neg.e = [cat](Obj a) { return trace_row(*cat, a); };
      neg.n = [cat](Obj a) { return trace_column(*cat, a); };
      neg.ep = neg.e;
      neg.np = neg.n;
      m.negation = neg;
    }
    if (doc.contains("star")) {
      allow_keys(doc["star"], "star", {"kind"});
      if (kind_of(doc["star"], "star") != "dual-pairing") throw SchemaError("unknown matrix star kind");
      StarAutonomousStructure sa;
      sa.cat = cat;
      sa.tensor = kron_tensor(cat, "⊗");
      sa.S = transpose_functor(cat);
      sa.Sp = transpose_functor(cat);
      auto id = [cat](Obj a) { return cat->identity(a); };
      sa.unit = id;
      sa.unit_inv = id;
      sa.counit = id;
      sa.counit_inv = id;
      sa.eval = [cat](Obj a, Obj b) {
        Matrix e(cat->prime(), b.id, std::size_t{a.id} * b.id * a.id);
        for (std::uint32_t j = 0; j < b.id; ++j) {
          for (std::uint32_t i = 0; i < a.id; ++i) e.set(j, (i * b.id + j) * a.id + i, 1);
        }
        return cat->morphism(Obj{a.id * b.id * a.id}, b, std::move(e));
      };
      sa.eval_prime = [cat](Obj b, Obj a) {
        const std::size_t ab = std::size_t{a.id} * b.id;
        Matrix e(cat->prime(), a.id, b.id * ab);
        for (std::uint32_t i = 0; i < a.id; ++i) {
          for (std::uint32_t j = 0; j < b.id; ++j) e.set(i, j * ab + i * b.id + j, 1);
        }
        return cat->morphism(Obj{static_cast<std::uint32_t>(b.id * ab)}, a, std::move(e));
      };
      sa.sym = [cat](Obj a, Obj y) { return cat->morphism(Obj{a.id * y.id}, Obj{a.id * y.id}, swap_matrix(cat->prime(), a.id, y.id)); };
      use_identity_comparisons(sa);
      m.star = sa;
    }
    if (doc.contains("hopf")) {
      const Json& h = doc["hopf"];
      allow_keys(h, "hopf", {"dim", "mu", "eta", "d", "cu", "s"});
      const auto hd = field(h, "dim", "hopf").get<std::uint32_t>();
      auto mat = [&](const char* key, std::uint32_t dom, std::uint32_t cod) {
        Matrix x = matrix_of(field(h, key, "hopf"), p, std::string("hopf.") + key);
        if (x.rows() != cod || x.cols() != dom) throw SchemaError(std::string("hopf.") + key + " has the wrong shape");
        return cat->morphism(Obj{dom}, Obj{cod}, std::move(x));
      };
      m.hopf = HopfAlgebra{Obj{hd}, mat("mu", hd * hd, hd), mat("eta", 1, hd), mat("d", hd, hd * hd),
                           mat("cu", hd, 1), mat("s", hd, hd)};
    }
    if (doc.contains("bialgebra")) {
      const Json& b = doc["bialgebra"];
      allow_keys(b, "bialgebra", {"dim", "mu", "eta", "d", "cu"});
      const auto bd = field(b, "dim", "bialgebra").get<std::uint32_t>();
      auto mat = [&](const char* key, std::uint32_t dom, std::uint32_t cod) {
        Matrix x = matrix_of(field(b, key, "bialgebra"), p, std::string("bialgebra.") + key);
        if (x.rows() != cod || x.cols() != dom) {
          throw SchemaError(std::string("bialgebra.") + key + " has the wrong shape");
        }
        return cat->morphism(Obj{dom}, Obj{cod}, std::move(x));
      };
      m.bialgebra = Bialgebra{Obj{bd}, mat("mu", bd * bd, bd), mat("eta", 1, bd), mat("d", bd, bd * bd),
                              mat("cu", bd, 1)};
    }
  } else if (kind == "table") {
    m.table = table_backend(backend);
    m.cat = m.table;
    if (doc.contains("lindist")) {
      const Json& l = doc["lindist"];
      allow_keys(l, "lindist", {"star", "par", "dl", "dr"});
      TableLindistData data;
      data.star = table_tensor(field(l, "star", "lindist"), *m.table, "lindist.star");
      data.par = table_tensor(field(l, "par", "lindist"), *m.table, "lindist.par");
      data.dl = table_family3(field(l, "dl", "lindist"), *m.table, "lindist.dl");
      data.dr = table_family3(field(l, "dr", "lindist"), *m.table, "lindist.dr");
      m.lindist = make_table_lindist(m.table, data);
    }
    if (doc.contains("negation")) {
      const Json& n = doc["negation"];
      allow_keys(n, "negation", {"S", "Sp", "e", "n", "ep", "np"});
      const std::size_t no = m.table->object_count();
      const std::size_t nm = m.table->morphism_count();
      auto functor = [&](const char* key) {
        const Json& f = field(n, key, "negation");
        allow_keys(f, std::string("negation.") + key, {"objects", "morphisms"});
        return FunctorTable{table_map(field(f, "objects", key), no, no, key),
                            table_map(field(f, "morphisms", key), nm, nm, key)};
      };
      TableNegationData data;
      data.S = functor("S");
      data.Sp = functor("Sp");
      data.e = table_map(field(n, "e", "negation"), no, nm, "negation.e");
      data.n = table_map(field(n, "n", "negation"), no, nm, "negation.n");
      data.ep = table_map(field(n, "ep", "negation"), no, nm, "negation.ep");
      data.np = table_map(field(n, "np", "negation"), no, nm, "negation.np");
      m.negation = make_table_negation(m.table, data);
    }
    for (const char* key : {"star", "hopf", "bialgebra", "comonad", "negation_lift"}) {
      if (doc.contains(key)) throw SchemaError(std::string(key) + " is not supported on table backends");
    }
  } else {
    throw SchemaError("unknown backend kind \"" + kind + "\"");
  }

  std::optional<Tensor> star_tensor;
  std::optional<Tensor> par_tensor;
  if (m.lindist) {
    star_tensor = m.lindist->star;
    par_tensor = m.lindist->par;
  } else if (m.star) {
    star_tensor = m.star->tensor;
  }
  const ContraFunctor* S = m.negation ? &m.negation->S : m.star ? &m.star->S : nullptr;
  const ContraFunctor* Sp = m.negation ? &m.negation->Sp : m.star ? &m.star->Sp : nullptr;

  if (doc.contains("comonad")) {
    const Json& c = doc["comonad"];
    const std::string ck = kind_of(c, "comonad");
    if (ck == "identity") {
      allow_keys(c, "comonad", {"kind"});
      m.comonad = identity_comonad(m.cat, star_tensor, par_tensor);
    } else if (ck == "interior") {
      allow_keys(c, "comonad", {"kind", "g"});
      if (!m.thin) throw SchemaError("interior comonads need a thin backend");
      const auto g = index_list(field(c, "g", "comonad"), m.thin->size(), "comonad.g");
      if (g.size() != m.thin->size()) throw SchemaError("comonad.g must have one entry per element");
      m.comonad = interior_comonad(m.thin, g, star_tensor, par_tensor);
    } else if (ck == "hopf-tensor") {
      allow_keys(c, "comonad", {"kind", "drop_swap"});
      if (!m.matrix || !m.hopf) throw SchemaError("hopf-tensor comonads need a matrix backend and a hopf section");
      HopfComonad hc;
      try {
        hc = hopf_comonad_unchecked(m.matrix, *m.hopf);
      } catch (const std::invalid_argument& e) {
        throw SchemaError(std::string("hopf: ") + e.what());
      }
      if (c.value("drop_swap", false)) {
        const auto cat = m.matrix;
        const auto H = std::make_shared<const HopfAlgebra>(*m.hopf);
        hc.comonad.phi = [cat, H](Obj a, Obj b) {
          const std::uint32_t hd = H->carrier.id;
          const Matrix mult = kron(H->mu.matrix(), Matrix::identity(cat->prime(), std::size_t{a.id} * b.id));
          return cat->morphism(Obj{hd * a.id * hd * b.id}, Obj{hd * a.id * b.id}, mult);
        };
      }
      m.comonad = hc.comonad;
      if (doc.contains("negation_lift") && kind_of(doc["negation_lift"], "negation_lift") == "antipode-dual") {
        m.lift = hc.lift;
      }
    } else if (ck == "bialgebra") {
      allow_keys(c, "comonad", {"kind"});
      if (!m.bialgebra) throw SchemaError("bialgebra comonads need a bialgebra section");
      m.comonad = comonad_from_bialgebra_unchecked(*m.bialgebra, *m.lindist);
    } else {
      throw SchemaError("unknown comonad kind \"" + ck + "\"");
    }
  }

  if (doc.contains("negation_lift")) {
    const Json& l = doc["negation_lift"];
    allow_keys(l, "negation_lift", {"kind", "zero"});
    const std::string lk = kind_of(l, "negation_lift");
    if (!m.comonad) throw SchemaError("negation_lift needs a comonad");
    if (S == nullptr) throw SchemaError("negation_lift needs a negation or star section");
    if (lk == "identity") {
      m.lift = identity_lift(m.cat, *S, *Sp);
    } else if (lk == "interior") {
      if (!m.thin) throw SchemaError("interior lifts need a thin backend");
      m.lift = interior_lift(m.thin, doc["comonad"]["g"].get<std::vector<std::uint32_t>>(), *S, *Sp);
    } else if (lk == "antipode-dual") {
      if (!m.lift) throw SchemaError("antipode-dual lifts need a hopf-tensor comonad");
    } else {
      throw SchemaError("unknown negation_lift kind \"" + lk + "\"");
    }
    if (l.value("zero", false)) {
      if (!m.matrix) throw SchemaError("zero lifts need a matrix backend");
      const auto cat = m.matrix;
      const auto nu = m.lift->nu;
      m.lift->nu = [cat, nu](Obj a) {
        const Mor f = nu(a);
        return cat->morphism(f.dom, f.cod, Matrix(cat->prime(), f.cod.id, f.dom.id));
      };
    }
  }

  m.scope = Scope::of(*m.cat);
  if (doc.contains("scope")) {
    const Json& s = doc["scope"];
    allow_keys(s, "scope", {"objects", "generator_limit"});
    if (s.contains("objects")) {
      m.scope.objects.clear();
      for (const auto& o : s["objects"]) {
        const auto id = o.get<std::uint32_t>();
        if (!m.cat->contains(Obj{id}) || (m.matrix && id == 0)) throw SchemaError("scope object out of range");
        m.scope.objects.push_back(Obj{id});
      }
    }
    if (s.contains("generator_limit")) m.scope.generator_limit = s["generator_limit"].get<std::uint64_t>();
  }
}

}  // namespace

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read " + path);
  try {
    return Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(path + ": " + e.what());
  }
}

void write_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

Model load_model(const Json& instance) {
  Model m;
  try {
    m.source = instance;
    if (instance.contains("mutations")) {
      if (!instance["mutations"].is_array()) throw SchemaError("mutations must be a list");
      for (const auto& d : instance["mutations"]) apply_one(m.source, d);
    }
    build(m);
  } catch (const nlohmann::json::exception& e) {
    throw SchemaError(std::string("schema: ") + e.what());
  }
  m.source = instance;
  return m;
}

Json mutate(const Json& instance, const Json& descriptor) {
  Json out = instance;
  if (!out.contains("mutations")) out["mutations"] = Json::array();
  out["mutations"].push_back(descriptor);
  load_model(out);
  return out;
}

std::vector<Obj> parse_scope_objects(const Model& model, const std::string& text) {
  std::vector<Obj> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::optional<Obj> found;
    if (model.thin) {
      const auto& c = model.thin->carrier();
      auto it = std::find(c.begin(), c.end(), item);
      if (it != c.end()) found = Obj{static_cast<std::uint32_t>(it - c.begin())};
    }
    if (!found && model.table) {
      const auto& c = model.table->object_labels();
      auto it = std::find(c.begin(), c.end(), item);
      if (it != c.end()) found = Obj{static_cast<std::uint32_t>(it - c.begin())};
    }
    if (!found) {
      try {
        std::size_t used = 0;
        const auto v = std::stoul(item, &used);
        if (used == item.size()) found = Obj{static_cast<std::uint32_t>(v)};
      } catch (const std::exception&) {
      }
    }
    if (!found || !model.cat->contains(*found) || (model.matrix && found->id == 0)) {
      throw SchemaError("unknown scope object \"" + item + "\"");
    }
    out.push_back(*found);
  }
  if (out.empty()) throw SchemaError("empty scope");
  return out;
}

std::string digest(const Json& j) {
  std::uint64_t h = 14695981039346656037ULL;
  for (unsigned char c : j.dump()) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

Json export_em(const EMCategory& em, const std::string& name, const Json& base) {
  const TableCategory& t = *em.table;
  Json doc;
  doc["schema_version"] = kSchemaVersion;
  doc["name"] = name;
  Json backend;
  backend["kind"] = "finite-table";
  backend["objects"] = t.object_labels();
  Json morphisms = Json::array();
  for (const auto& m : t.morphisms()) {
    morphisms.push_back({{"dom", m.dom.id}, {"cod", m.cod.id}, {"label", m.label}});
  }
  backend["morphisms"] = morphisms;
  backend["identities"] = t.identities();
  backend["composition"] = t.composition_entries();
  doc["backend"] = backend;

  auto tensor = [](const TensorTable& tt) {
    Json j;
    j["unit"] = tt.unit;
    Json objects = Json::array();
    for (const auto& [k, v] : tt.objects) objects.push_back({k.first, k.second, v});
    Json morphisms = Json::array();
    for (const auto& [k, v] : tt.morphisms) morphisms.push_back({k.first, k.second, v});
    j["objects"] = objects;
    j["morphisms"] = morphisms;
    return j;
  };
  auto family3 = [](const std::map<IdTriple, std::uint32_t>& f) {
    Json j = Json::array();
    for (const auto& [k, v] : f) j.push_back({k[0], k[1], k[2], v});
    return j;
  };
  auto family1 = [](const std::map<std::uint32_t, std::uint32_t>& f) {
    Json j = Json::array();
    for (const auto& [k, v] : f) j.push_back({k, v});
    return j;
  };
  Json lindist;
  lindist["star"] = tensor(em.lindist_data.star);
  lindist["par"] = tensor(em.lindist_data.par);
  lindist["dl"] = family3(em.lindist_data.dl);
  lindist["dr"] = family3(em.lindist_data.dr);
  doc["lindist"] = lindist;
  if (em.negation_data) {
    const auto& nd = *em.negation_data;
    auto functor = [&](const FunctorTable& f) {
      return Json{{"objects", family1(f.objects)}, {"morphisms", family1(f.morphisms)}};
    };
    doc["negation"] = {{"S", functor(nd.S)}, {"Sp", functor(nd.Sp)}, {"e", family1(nd.e)},
                       {"n", family1(nd.n)}, {"ep", family1(nd.ep)}, {"np", family1(nd.np)}};
  }
  Json origin;
  origin["construction"] = "eilenberg-moore";
  origin["base"] = base.value("name", "");
  origin["base_digest"] = digest(base);
  Json carriers = Json::array();
  for (const auto& c : em.objects) carriers.push_back(em.base->label(c.carrier));
  origin["carriers"] = carriers;
  origin["notes"] = em.notes;
  doc["origin"] = origin;
  return doc;
}

}  // namespace ldlab
