#include "ldlab/commands.hpp"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>
#include <sstream>

#include "ldlab/em.hpp"
#include "ldlab/instances.hpp"
#include "ldlab/star_comonad.hpp"

namespace ldlab {

namespace {

const std::set<std::string>& axiom_catalogue() {
  static const std::set<std::string> ids{
      "cat",  "mon-⋆", "mon-⋄",  "mon-⊗", "sym",     "lindist-nat", "coh-subset", "tri-1",    "tri-2",
      "tri-3", "tri-4", "comonad", "moncom-⋆", "moncom-⋄", "L1", "L2", "nu-1", "nu-2", "Le", "Ln", "Le′",
      "Ln′", "star-iso", "SC-1", "SC-2", "SC-3", "SC-4", "BV-20", "BV-21", "BV-22", "BV-23"};
  return ids;
}

const std::map<std::string, std::vector<std::string>>& axiom_families() {
  static const std::map<std::string, std::vector<std::string>> families{
      {"monoidal", {"moncom-⋆", "moncom-⋄"}}, {"nu", {"nu-1", "nu-2"}}};
  return families;
}

std::string normalize_id(std::string id) {
  static const std::map<std::string, std::string> aliases{
      {"mon-star", "mon-⋆"},         {"mon-par", "mon-⋄"},          {"mon-tensor", "mon-⊗"},
      {"moncom-star", "moncom-⋆"},   {"moncom-par", "moncom-⋄"},    {"Le'", "Le′"},
      {"Ln'", "Ln′"}};
  auto it = aliases.find(id);
  return it == aliases.end() ? id : it->second;
}

Model load(const Json& instance, const CommandOptions& options) {
  Model m = load_model(instance);
  if (options.scope) m.scope.objects = parse_scope_objects(m, *options.scope);
  return m;
}

Json envelope(const std::string& command, const Model& m) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["command"] = command;
  j["instance"] = m.name;
  j["digest"] = digest(m.source);
  j["scope"] = m.scope.to_json(*m.cat);
  return j;
}

void put_report(Json& j, const CheckReport& r) {
  const Json rj = r.to_json();
  j["axioms"] = rj["axioms"];
  if (rj.contains("notes")) j["notes"] = rj["notes"];
  j["overall"] = rj["overall"];
}

CommandResult finish(Json report, bool pass) {
  report["overall"] = pass ? "pass" : "fail";
  return CommandResult{std::move(report), pass ? kPass : kFail, std::nullopt};
}

Json error_report(const std::string& kind, const std::string& message) {
  Json j;
  j["schema_version"] = kSchemaVersion;
  j["error"] = {{"kind", kind}, {"message", message}};
  j["overall"] = "error";
  return j;
}

CommandResult guarded(const std::function<CommandResult()>& body) {
  try {
    return body();
  } catch (const SchemaError& e) {
    return CommandResult{error_report("schema", e.what()), kSchema, std::nullopt};
  } catch (const nlohmann::json::exception& e) {
    return CommandResult{error_report("schema", e.what()), kSchema, std::nullopt};
  } catch (const PreconditionError& e) {
    Json j = error_report("precondition", e.what());
    if (!e.report().axioms.empty()) {
      j["error"]["report"] = e.report().to_json();
      j["error"]["failing"] = e.report().failing();
    }
    return CommandResult{std::move(j), kPrecondition, std::nullopt};
  } catch (const MissingStructure& e) {
    return CommandResult{error_report("missing-structure", e.what()), kPrecondition, std::nullopt};
  } catch (const LiftError& e) {
    return CommandResult{error_report("lift", e.what()), kPrecondition, std::nullopt};
  } catch (const ScopeTooLarge& e) {
    return CommandResult{error_report("scope-too-large", e.what()), kPrecondition, std::nullopt};
  }
}

const NegationLift& need_lift(const Model& m) {
  if (!m.comonad) throw MissingStructure("the instance has no comonad");
  if (!m.lift) throw MissingStructure("the instance has no negation lift");
  return *m.lift;
}

const LindistBundle& need_lindist(const Model& m) {
  if (!m.lindist) throw MissingStructure("the instance has no lindist structure");
  return *m.lindist;
}

const NegationStructure& need_negation(const Model& m) {
  if (!m.negation) throw MissingStructure("the instance has no negations");
  return *m.negation;
}

StarAutonomousStructure star_of(const Model& m) {
  if (m.star) return *m.star;
  return star_from_lindist(need_lindist(m), need_negation(m), m.scope).star;
}

std::map<std::string, std::function<CheckReport(const Model&)>> group_runners() {
  std::map<std::string, std::function<CheckReport(const Model&)>> g;
  g["lindist"] = [](const Model& m) {
    return check_lindist_suite(need_lindist(m), m.negation ? &*m.negation : nullptr, m.scope);
  };
  g["star"] = [](const Model& m) {
    if (!m.star) throw MissingStructure("the instance has no star-autonomous structure");
    return check_star_suite(*m.star, m.scope);
  };
  g["round-trip"] = [](const Model& m) { return check_round_trip(need_lindist(m), need_negation(m), m.scope); };
  g["hopf"] = [](const Model& m) {
    if (!m.hopf) throw MissingStructure("the instance has no Hopf algebra");
    return check_hopf(*m.hopf, need_lindist(m), m.scope);
  };
  g["bialgebra"] = [](const Model& m) {
    if (!m.bialgebra) throw MissingStructure("the instance has no bialgebra");
    return check_bialgebra(*m.bialgebra, need_lindist(m), m.scope);
  };
  g["comonad"] = [](const Model& m) {
    if (!m.comonad) throw MissingStructure("the instance has no comonad");
    const auto& cb = *m.comonad;
    CheckReport r = check_comonad(cb, m.scope);
    if (m.lindist) {
      r.merge(check_monoidal_comonad(cb, m.lindist->star, Side::star, m.scope));
      r.merge(check_monoidal_comonad(cb, m.lindist->par, Side::par, m.scope));
      r.merge(check_L1(cb, *m.lindist, m.scope));
      r.merge(check_L2(cb, *m.lindist, m.scope));
    } else if (m.star) {
      r.merge(check_monoidal_comonad(cb, m.star->tensor, Side::star, m.scope));
    }
    if (m.lift) {
      const ContraFunctor& S = m.negation ? m.negation->S : m.star->S;
      const ContraFunctor& Sp = m.negation ? m.negation->Sp : m.star->Sp;
      r.merge(check_nu(cb, S, Sp, *m.lift, m.scope));
    }
    return r;
  };
  g["negation-lift"] = [](const Model& m) {
    const auto& lift = need_lift(m);
    return check_negation_axioms(*m.comonad, need_lindist(m), need_negation(m), lift, m.scope);
  };
  g["star-comonad"] = [](const Model& m) {
    const auto& lift = need_lift(m);
    return check_star_comonad(*m.comonad, star_of(m), lift, m.scope);
  };
  return g;
}

bool applicable(const std::string& group, const Model& m) {
  if (group == "lindist") return m.lindist.has_value();
  if (group == "star") return m.star.has_value();
  if (group == "round-trip") return m.lindist && m.negation;
  if (group == "hopf") return m.hopf && m.lindist;
  if (group == "bialgebra") return m.bialgebra && m.lindist;
  if (group == "comonad") return m.comonad.has_value();
  if (group == "negation-lift") return m.comonad && m.lift && m.lindist && m.negation;
  if (group == "star-comonad") return m.comonad && m.lift && (m.star || (m.lindist && m.negation));
  return false;
}

std::uint32_t param_u32(const std::map<std::string, std::string>& params, const std::string& key,
                        std::optional<std::uint32_t> fallback) {
  auto it = params.find(key);
  if (it == params.end()) {
    if (fallback) return *fallback;
    throw SchemaError("generator needs parameter " + key);
  }
  try {
    std::size_t used = 0;
    const auto v = std::stoul(it->second, &used);
    if (used != it->second.size()) throw std::invalid_argument(key);
    return static_cast<std::uint32_t>(v);
  } catch (const std::exception&) {
    throw SchemaError("parameter " + key + " must be a non-negative integer");
  }
}

void summarize_into(std::ostringstream& os, const Json& j, const std::string& prefix) {
  if (j.is_object()) {
    if (j.contains("axioms") && j["axioms"].is_array()) {
      if (!prefix.empty()) os << "[" << prefix << "]\n";
      for (const auto& a : j["axioms"]) {
        os << (a["verdict"] == "pass" ? "PASS " : "FAIL ") << a["id"].get<std::string>()
           << "  checked=" << a["checked"].get<std::uint64_t>();
        if (a["skipped"].get<std::uint64_t>() > 0) os << " skipped=" << a["skipped"].get<std::uint64_t>();
        if (a["verdict"] != "pass") os << " failures=" << a["counterexamples"].size();
        os << "\n";
        std::size_t shown = 0;
        for (const auto& c : a["counterexamples"]) {
          if (shown++ == 3) {
            os << "    ...\n";
            break;
          }
          os << "    [" << c["law"].get<std::string>() << "] (";
          for (std::size_t i = 0; i < c["tuple"].size(); ++i) {
            os << (i ? ", " : "") << c["tuple"][i].get<std::string>();
          }
          os << ") " << c["kind"].get<std::string>() << ": " << c["detail"].get<std::string>() << "\n";
        }
      }
    }
    for (const auto& [k, v] : j.items()) {
      if (k == "axioms") continue;
      if (v.is_object()) summarize_into(os, v, prefix.empty() ? k : prefix + "." + k);
    }
  }
}

}  // namespace

const std::vector<std::string>& validation_groups() {
  static const std::vector<std::string> groups{"lindist", "star",          "round-trip",  "hopf",
                                               "bialgebra", "comonad", "negation-lift", "star-comonad"};
  return groups;
}

CommandResult cmd_validate(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    const auto runners = group_runners();
    const auto& groups = validation_groups();
    std::vector<std::string> selected;
    std::set<std::string> ids;
    for (const auto& raw : options.axioms) {
      const std::string token = normalize_id(raw);
      if (auto it = axiom_families().find(token); it != axiom_families().end()) {
        ids.insert(it->second.begin(), it->second.end());
      } else if (std::find(groups.begin(), groups.end(), token) != groups.end()) {
        selected.push_back(token);
      } else if (axiom_catalogue().count(token)) {
        ids.insert(token);
      } else {
        throw SchemaError("unknown axiom or group \"" + raw + "\"");
      }
    }
    // Named groups report in full; lone axiom ids are picked out of every
    // applicable group.
    const std::set<std::string> named(selected.begin(), selected.end());
    if (named.empty() || !ids.empty()) {
      for (const auto& g : groups) {
        if (applicable(g, m) && !named.count(g)) selected.push_back(g);
      }
    }
    std::sort(selected.begin(), selected.end(), [&](const std::string& a, const std::string& b) {
      return std::find(groups.begin(), groups.end(), a) < std::find(groups.begin(), groups.end(), b);
    });

    CheckReport report;
    for (const auto& g : selected) {
      const CheckReport part = runners.at(g)(m);
      if (ids.empty() || named.count(g)) {
        report.merge(part);
        continue;
      }
      CheckReport picked;
      picked.notes = part.notes;
      for (const auto& a : part.axioms) {
        if (ids.count(a.id)) picked.add(a);
      }
      report.merge(picked);
    }
    for (const auto& id : ids) {
      if (!report.find(id)) throw MissingStructure("axiom " + id + " does not apply to this instance");
    }
    Json j = envelope("validate", m);
    j["groups"] = selected;
    put_report(j, report);
    return finish(std::move(j), report.pass());
  });
}

CommandResult cmd_lift(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    if (!m.comonad) throw MissingStructure("the instance has no comonad");
    const auto& b = need_lindist(m);
    const NegationStructure* neg = m.negation && m.lift ? &*m.negation : nullptr;
    const NegationLift* lift = m.negation && m.lift ? &*m.lift : nullptr;
    const EMCategory em = build_em_category(*m.comonad, b, neg, lift, m.scope);
    CheckReport report = em.report;
    report.merge(check_lifted_distributions(*m.comonad, b, em.objects));
    Json j = envelope("lift", m);
    j["coalgebras"] = em.objects.size();
    j["morphisms"] = em.payloads.size();
    j["with_negation"] = em.negation.has_value();
    put_report(j, report);
    CommandResult r = finish(std::move(j), report.pass());
    r.artifact = export_em(em, m.name + "-coalgebras", m.source);
    return r;
  });
}

CommandResult cmd_translate(const Json& instance, const std::string& to, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    const Category& C = *m.cat;
    Json j = envelope("translate", m);
    j["to"] = to;
    CheckReport report;
    if (to == "star") {
      const auto& b = need_lindist(m);
      const StarTranslation st = star_from_lindist(b, need_negation(m), m.scope);
      report = check_star_suite(st.star, m.scope);
      report.merge(check_round_trip(b, *m.negation, m.scope));
      const LindistTranslation back = lindist_from_star_unchecked(st.star);
      Json table = Json::array();
      bool all_equal = true;
      for (auto a : m.scope.objects) {
        for (auto c : m.scope.objects) {
          const Obj derived = back.bundle.par(a, c);
          const Obj native = b.par(a, c);
          all_equal = all_equal && derived == native;
          table.push_back({{"a", C.label(a)},
                           {"b", C.label(c)},
                           {"derived", C.label(derived)},
                           {"native", C.label(native)},
                           {"equal", derived == native}});
        }
      }
      j["derived_par"] = table;
      j["derived_par_matches"] = all_equal;
      j["derived_par_unit"] = C.label(back.bundle.par.unit);
      j["conventions"] = st.certificate.conventions;
      put_report(j, report);
      return finish(std::move(j), report.pass() && all_equal);
    }
    if (to == "lindist") {
      if (!m.star) throw MissingStructure("the instance has no star-autonomous structure");
      const LindistTranslation t = lindist_from_star(*m.star, m.scope);
      report = check_lindist_suite(t.bundle, &t.negation, m.scope);
      put_report(j, report);
      return finish(std::move(j), report.pass());
    }
    throw SchemaError("translate --to must be star or lindist");
  });
}

CommandResult cmd_coincide(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    const auto& lift = need_lift(m);
    const CoincidenceInput input{m.lindist, m.negation, m.star, *m.comonad, lift};
    const CoincidenceResult r = notions_coincide(input, m.scope);
    Json j = envelope("coincide", m);
    const Json rj = r.to_json();
    j["lindist_side"] = rj["lindist_side"];
    j["star_side"] = rj["star_side"];
    j["agreement"] = r.agree();
    return finish(std::move(j), r.agree() && r.lindist_side.pass() && r.star_side.pass());
  });
}

CommandResult cmd_compact(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    const auto& lift = need_lift(m);
    const CompactResult r = compact_hopf_check(*m.comonad, need_lindist(m), need_negation(m), lift, m.scope);
    Json j = envelope("compact", m);
    j["correspondence"] = r.correspondence;
    j["verdict"] = r.pass() ? "Hopf comonad axioms hold" : "Hopf comonad axioms fail";
    put_report(j, r.report);
    return finish(std::move(j), r.pass());
  });
}

CommandResult cmd_equivalence(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    const auto& lift = need_lift(m);
    const EquivalenceResult r =
        checker_equivalence_suite(*m.comonad, need_lindist(m), need_negation(m), lift, m.scope);
    Json j = envelope("equivalence", m);
    const Json rj = r.to_json();
    j["rows"] = rj["rows"];
    j["agreement"] = r.agree();
    j["axiom_report"] = rj["axiom_report"];
    j["direct_report"] = rj["direct_report"];
    return finish(std::move(j), r.agree());
  });
}

CommandResult cmd_search(const Json& instance, const CommandOptions& options) {
  return guarded([&] {
    const Model m = load(instance, options);
    if (!m.thin) throw MissingStructure("search needs a thin backend");
    need_lindist(m);
    need_negation(m);
    const SearchResult r = search_interior_comonads(m);
    Json j = envelope("search", m);
    const Json rj = r.to_json(m);
    j["tiers"] = kTiers;
    j["rows"] = rj["rows"];
    j["counts"] = rj["counts"];
    bool nested = true;
    for (std::size_t t = 1; t < r.counts.size(); ++t) nested = nested && r.counts[t] <= r.counts[t - 1];
    j["nested"] = nested;
    return finish(std::move(j), nested);
  });
}

CommandResult cmd_generate(const std::string& name, const std::map<std::string, std::string>& params) {
  return guarded([&] {
    Json inst;
    try {
      if (name == "lukasiewicz") {
        inst = gen_lukasiewicz(param_u32(params, "n", std::nullopt));
      } else if (name == "matrix-compact") {
        inst = gen_matrix_compact(param_u32(params, "p", std::nullopt), param_u32(params, "dmax", std::nullopt));
      } else if (name == "group-hopf") {
        inst = gen_group_hopf_instance(param_u32(params, "p", std::nullopt), param_u32(params, "m", std::nullopt),
                                       param_u32(params, "dmax", 2U));
      } else {
        throw SchemaError("unknown generator \"" + name + "\"");
      }
    } catch (const std::invalid_argument& e) {
      throw SchemaError(e.what());
    }
    if (auto it = params.find("comonad"); it != params.end()) {
      if (it->second == "identity") {
        inst = with_identity_comonad(inst);
      } else if (it->second == "interior") {
        auto g_it = params.find("g");
        if (g_it == params.end()) throw SchemaError("interior comonads need g=a,b,...");
        std::vector<std::uint32_t> g;
        std::stringstream ss(g_it->second);
        std::string item;
        while (std::getline(ss, item, ',')) g.push_back(static_cast<std::uint32_t>(std::stoul(item)));
        inst = with_interior_comonad(inst, g);
      } else if (it->second == "bialgebra") {
        if (inst["backend"]["kind"] == "thin-quantale") {
          inst["bialgebra"] = {{"carrier", param_u32(params, "b", std::nullopt)}};
        } else if (inst.contains("hopf")) {
          Json b = inst["hopf"];
          b.erase("s");
          inst["bialgebra"] = b;
          inst.erase("negation_lift");
        } else {
          throw SchemaError("bialgebra comonads need a thin or group-hopf instance");
        }
        inst["comonad"] = {{"kind", "bialgebra"}};
      } else {
        throw SchemaError("comonad must be identity, interior or bialgebra");
      }
    }
    for (const auto& [k, v] : params) {
      static const std::set<std::string> known{"n", "p", "dmax", "m", "comonad", "g", "b"};
      if (!known.count(k)) throw SchemaError("unknown parameter " + k);
    }
    load_model(inst);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "generate";
    j["instance"] = inst["name"];
    j["digest"] = digest(inst);
    j["overall"] = "pass";
    return CommandResult{std::move(j), kPass, inst};
  });
}

CommandResult cmd_mutate(const Json& instance, const Json& descriptor) {
  return guarded([&] {
    Json out = mutate(instance, descriptor);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "mutate";
    j["instance"] = out.value("name", "");
    j["mutations"] = out["mutations"];
    j["digest"] = digest(out);
    j["overall"] = "pass";
    return CommandResult{std::move(j), kPass, out};
  });
}

CommandResult cmd_seed_corpus(const std::string& dir) {
  return guarded([&] {
    namespace fs = std::filesystem;
    fs::create_directories(dir);
    const auto corpus = seed_corpus();
    for (const auto& e : corpus) write_json_file((fs::path(dir) / e.file).string(), e.instance);
    const Json manifest = corpus_manifest(corpus);
    write_json_file((fs::path(dir) / "manifest.json").string(), manifest);
    Json j;
    j["schema_version"] = kSchemaVersion;
    j["command"] = "generate";
    j["corpus"] = dir;
    j["entries"] = corpus.size();
    j["overall"] = "pass";
    return CommandResult{std::move(j), kPass, std::nullopt};
  });
}

std::string summarize(const Json& report) {
  std::ostringstream os;
  if (report.contains("command")) os << report["command"].get<std::string>();
  if (report.contains("instance")) os << " " << report["instance"].get<std::string>();
  os << "\n";
  if (report.contains("error")) {
    os << "error (" << report["error"]["kind"].get<std::string>()
       << "): " << report["error"]["message"].get<std::string>() << "\n";
  }
  summarize_into(os, report, "");
  for (const char* key : {"agreement", "derived_par_matches", "nested"}) {
    if (report.contains(key)) os << key << ": " << (report[key].get<bool>() ? "yes" : "no") << "\n";
  }
  if (report.contains("correspondence")) os << "correspondence: " << report["correspondence"]["text"].get<std::string>() << "\n";
  if (report.contains("counts")) {
    for (const auto& [k, v] : report["counts"].items()) os << k << ": " << v.get<std::size_t>() << "\n";
  }
  if (report.contains("overall")) os << "overall: " << report["overall"].get<std::string>() << "\n";
  return os.str();
}

}  // namespace ldlab
