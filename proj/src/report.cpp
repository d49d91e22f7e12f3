#include "ldlab/report.hpp"

#include <sstream>

namespace ldlab {

Scope Scope::of(const Category& cat) {
  Scope s;
  s.objects = cat.default_objects();
  return s;
}

Json Scope::to_json(const Category& cat) const {
  Json j;
  Json objs = Json::array();
  for (auto o : objects) objs.push_back(cat.label(o));
  j["objects"] = objs;
  j["generator_limit"] = generator_limit;
  j["enumeration_bound"] = enumeration_bound();
  return j;
}

Json AxiomResult::to_json() const {
  Json j;
  j["id"] = id;
  j["description"] = description;
  j["verdict"] = pass() ? "pass" : "fail";
  j["checked"] = checked;
  j["skipped"] = skipped;
  if (vacuous()) j["vacuous"] = true;
  Json cex = Json::array();
  for (const auto& c : counterexamples) {
    Json e;
    e["law"] = c.law;
    e["tuple"] = c.tuple;
    e["kind"] = c.kind;
    e["detail"] = c.detail;
    cex.push_back(std::move(e));
  }
  j["counterexamples"] = cex;
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

bool CheckReport::pass() const {
  for (const auto& a : axioms) {
    if (!a.pass()) return false;
  }
  return true;
}

const AxiomResult* CheckReport::find(const std::string& id) const {
  for (const auto& a : axioms) {
    if (a.id == id) return &a;
  }
  return nullptr;
}

bool CheckReport::passes(const std::string& id) const {
  const auto* a = find(id);
  return a != nullptr && a->pass();
}

void CheckReport::add(AxiomResult result) {
  for (auto& a : axioms) {
    if (a.id != result.id) continue;
    a.checked += result.checked;
    a.skipped += result.skipped;
    a.counterexamples.insert(a.counterexamples.end(), result.counterexamples.begin(),
                             result.counterexamples.end());
    a.notes.insert(a.notes.end(), result.notes.begin(), result.notes.end());
    return;
  }
  axioms.push_back(std::move(result));
}

void CheckReport::merge(const CheckReport& other) {
  for (const auto& a : other.axioms) add(a);
  notes.insert(notes.end(), other.notes.begin(), other.notes.end());
}

std::vector<std::string> CheckReport::failing() const {
  std::vector<std::string> out;
  for (const auto& a : axioms) {
    if (!a.pass()) out.push_back(a.id);
  }
  return out;
}

Json CheckReport::to_json() const {
  Json j;
  Json list = Json::array();
  for (const auto& a : axioms) list.push_back(a.to_json());
  j["axioms"] = list;
  j["overall"] = pass() ? "pass" : "fail";
  if (!notes.empty()) j["notes"] = notes;
  return j;
}

std::string CheckReport::summary() const {
  std::ostringstream os;
  for (const auto& a : axioms) {
    os << (a.pass() ? "PASS " : "FAIL ") << a.id << "  checked=" << a.checked;
    if (a.skipped) os << " skipped=" << a.skipped;
    if (!a.pass()) os << " failures=" << a.counterexamples.size();
    os << '\n';
    std::size_t shown = 0;
    for (const auto& c : a.counterexamples) {
      if (shown++ == 3) {
        os << "    ...\n";
        break;
      }
      os << "    [" << c.law << "] (";
      for (std::size_t i = 0; i < c.tuple.size(); ++i) os << (i ? ", " : "") << c.tuple[i];
      os << ") " << c.kind << ": " << c.detail << '\n';
    }
  }
  os << "overall: " << (pass() ? "pass" : "fail") << '\n';
  return os.str();
}

AxiomCheck::AxiomCheck(const Category& cat, std::string id, std::string description)
    : cat_(cat) {
  result_.id = std::move(id);
  result_.description = std::move(description);
}

std::vector<std::string> AxiomCheck::labels(const std::vector<Obj>& tuple) const {
  std::vector<std::string> out;
  out.reserve(tuple.size());
  for (auto o : tuple) out.push_back(cat_.label(o));
  return out;
}

void AxiomCheck::commutes(const std::vector<Obj>& tuple, const std::function<Mor()>& lhs,
                          const std::function<Mor()>& rhs) {
  commutes(labels(tuple), lhs, rhs);
}

void AxiomCheck::commutes(const std::vector<std::string>& tuple, const std::function<Mor()>& lhs,
                          const std::function<Mor()>& rhs) {
  try {
    const Mor l = lhs();
    const Mor r = rhs();
    ++result_.checked;
    if (!cat_.parallel(l, r)) {
      fail(tuple, "ill-typed",
           "sides are not parallel: " + describe_arrow(cat_, l) + " vs " + describe_arrow(cat_, r));
    } else if (!cat_.equal(l, r)) {
      fail(tuple, "mismatch", cat_.difference(l, r));
    }
  } catch (const OutsideClosure&) {
    ++result_.skipped;
  } catch (const MissingWitness& e) {
    ++result_.checked;
    fail(tuple, "witness-missing", e.what());
  } catch (const CompositionError& e) {
    ++result_.checked;
    fail(tuple, "ill-typed", e.what());
  }
}

void AxiomCheck::holds(const std::vector<Obj>& tuple, const std::function<bool()>& predicate,
                       const std::string& kind, const std::string& detail) {
  holds(labels(tuple), predicate, kind, detail);
}

void AxiomCheck::holds(const std::vector<std::string>& tuple,
                       const std::function<bool()>& predicate, const std::string& kind,
                       const std::string& detail) {
  try {
    const bool ok = predicate();
    ++result_.checked;
    if (!ok) fail(tuple, kind, detail);
  } catch (const OutsideClosure&) {
    ++result_.skipped;
  } catch (const MissingWitness& e) {
    ++result_.checked;
    fail(tuple, "witness-missing", e.what());
  } catch (const CompositionError& e) {
    ++result_.checked;
    fail(tuple, "ill-typed", e.what());
  }
}

void AxiomCheck::fail(const std::vector<std::string>& tuple, std::string kind, std::string detail) {
  result_.counterexamples.push_back(Counterexample{law_, tuple, std::move(kind), std::move(detail)});
}

AxiomResult AxiomCheck::finish() { return std::move(result_); }

}  // namespace ldlab
