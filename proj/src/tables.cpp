#include "ldlab/tables.hpp"

namespace ldlab {

namespace {

template <class Map, class Key>
std::uint32_t lookup(const Map& map, const Key& key, const std::string& what) {
  auto it = map.find(key);
  if (it == map.end()) throw OutsideClosure(what + " is undefined here");
  return it->second;
}

std::string pair_text(const Category& cat, Obj a, Obj b) {
  return "(" + cat.label(a) + ", " + cat.label(b) + ")";
}

}  // namespace

Tensor make_table_tensor(std::shared_ptr<const TableCategory> cat, std::string tag,
                         std::shared_ptr<const TensorTable> table) {
  Tensor t;
  t.tag = tag;
  t.unit = Obj{table->unit};
  t.obj = [cat, table, tag](Obj a, Obj b) {
    return Obj{lookup(table->objects, IdPair{a.id, b.id}, tag + " at " + pair_text(*cat, a, b))};
  };
  t.mor = [cat, table, tag](const Mor& f, const Mor& g) {
    const auto id = lookup(table->morphisms, IdPair{f.table_id(), g.table_id()},
                           tag + " of " + cat->describe(f) + " and " + cat->describe(g));
    return cat->morphism(id);
  };
  return t;
}

LindistBundle make_table_lindist(std::shared_ptr<const TableCategory> cat, const TableLindistData& data) {
  auto d = std::make_shared<const TableLindistData>(data);
  LindistBundle b;
  b.cat = cat;
  b.star = make_table_tensor(cat, "⋆", std::shared_ptr<const TensorTable>(d, &d->star));
  b.par = make_table_tensor(cat, "⋄", std::shared_ptr<const TensorTable>(d, &d->par));
  b.dl = [cat, d](Obj a, Obj y, Obj z) {
    return cat->morphism(lookup(d->dl, IdTriple{a.id, y.id, z.id}, "∂l"));
  };
  b.dr = [cat, d](Obj a, Obj y, Obj z) {
    return cat->morphism(lookup(d->dr, IdTriple{a.id, y.id, z.id}, "∂r"));
  };
  return b;
}

NegationStructure make_table_negation(std::shared_ptr<const TableCategory> cat,
                                      const TableNegationData& data) {
  auto d = std::make_shared<const TableNegationData>(data);
  auto functor = [cat](std::shared_ptr<const FunctorTable> f, std::string name) {
    ContraFunctor F;
    F.obj = [f, name](Obj a) { return Obj{lookup(f->objects, a.id, name)}; };
    F.mor = [cat, f, name](const Mor& m) { return cat->morphism(lookup(f->morphisms, m.table_id(), name)); };
    return F;
  };
  auto family = [cat](std::shared_ptr<const std::map<std::uint32_t, std::uint32_t>> m, std::string name) {
    return Family1([cat, m, name](Obj a) { return cat->morphism(lookup(*m, a.id, name)); });
  };
  NegationStructure neg;
  neg.S = functor(std::shared_ptr<const FunctorTable>(d, &d->S), "S");
  neg.Sp = functor(std::shared_ptr<const FunctorTable>(d, &d->Sp), "S′");
  neg.e = family({d, &d->e}, "e");
  neg.n = family({d, &d->n}, "n");
  neg.ep = family({d, &d->ep}, "e′");
  neg.np = family({d, &d->np}, "n′");
  return neg;
}

}  // namespace ldlab
