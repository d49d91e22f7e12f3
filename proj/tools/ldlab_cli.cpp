#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "ldlab/commands.hpp"

namespace {

using ldlab::CommandOptions;
using ldlab::CommandResult;
using ldlab::Json;

struct Output {
  std::string out;
  bool summary = false;
};

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string render(const Json& report, bool summary) {
  return summary ? ldlab::summarize(report) : report.dump(2) + "\n";
}

// Reports go to --out when given, else stdout.
int emit_report(const CommandResult& r, const Output& o) {
  const std::string text = render(r.report, o.summary);
  if (o.out.empty()) {
    std::cout << text;
  } else {
    ldlab::write_json_file(o.out, r.report);
    if (o.summary) std::cout << text;
  }
  return r.exit_code;
}

// Produced instances go to --out when given (with the report on stdout),
// else the instance itself goes to stdout.
int emit_artifact(const CommandResult& r, const Output& o) {
  if (!r.artifact) {
    std::cout << render(r.report, o.summary);
    return r.exit_code;
  }
  if (o.out.empty()) {
    std::cout << r.artifact->dump(2) << "\n";
  } else {
    ldlab::write_json_file(o.out, *r.artifact);
    std::cout << render(r.report, o.summary);
  }
  return r.exit_code;
}

std::optional<Json> read_instance(const std::string& path, const Output& o, int& code) {
  try {
    return ldlab::read_json_file(path);
  } catch (const ldlab::SchemaError& e) {
    Json j;
    j["schema_version"] = ldlab::kSchemaVersion;
    j["error"] = {{"kind", "schema"}, {"message", e.what()}};
    j["overall"] = "error";
    std::cout << render(j, o.summary);
    code = ldlab::kSchema;
    return std::nullopt;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Checks linearly distributive, star-autonomous and comonad structure on finite instances"};
  app.require_subcommand(1);

  std::string file;
  Output output;
  std::string scope;
  std::string axioms;
  auto common = [&](CLI::App* sub, bool takes_file = true) {
    if (takes_file) sub->add_option("instance", file, "Instance file")->required();
    sub->add_option("--out", output.out, "Write the result to this path");
    sub->add_flag("--summary", output.summary, "Print a human-readable table");
  };
  auto scoped = [&](CLI::App* sub) {
    sub->add_option("--scope", scope, "Comma-separated objects to check over");
  };

  auto* validate = app.add_subcommand("validate", "Check axioms on an instance");
  common(validate);
  scoped(validate);
  validate->add_option("--axioms", axioms, "Comma-separated axiom groups or ids");

  auto* lift = app.add_subcommand("lift", "Build the category of coalgebras as a table instance");
  common(lift);
  scoped(lift);

  std::string to;
  auto* translate = app.add_subcommand("translate", "Translate between the two presentations");
  common(translate);
  scoped(translate);
  translate->add_option("--to", to, "star or lindist")->required()->check(CLI::IsMember({"star", "lindist"}));

  auto* coincide = app.add_subcommand("coincide", "Compare the two comonad axiomatizations");
  common(coincide);
  scoped(coincide);

  auto* compact = app.add_subcommand("compact", "Hopf comonad check in the compact case");
  common(compact);
  scoped(compact);

  auto* equivalence = app.add_subcommand("equivalence", "Compare the lifting axioms with direct coalgebra checks");
  common(equivalence);
  scoped(equivalence);

  auto* search = app.add_subcommand("search", "Classify the interior comonads of a thin instance");
  common(search);
  scoped(search);

  std::string generator;
  std::vector<std::string> params;
  std::string corpus_dir;
  auto* generate = app.add_subcommand("generate", "Generate an instance or the seed corpus");
  common(generate, false);
  generate->add_option("name", generator, "lukasiewicz, matrix-compact or group-hopf");
  generate->add_option("--params", params, "key=value parameters");
  generate->add_option("--seed-corpus", corpus_dir, "Write the seed corpus into this directory");

  std::string descriptor;
  std::string kind;
  std::string target;
  std::string at;
  std::optional<long long> value;
  auto* mutate = app.add_subcommand("mutate", "Record a mutation in an instance");
  common(mutate);
  mutate->add_option("--descriptor", descriptor, "Mutation as a JSON object");
  mutate->add_option("--kind", kind, "Mutation kind");
  mutate->add_option("--target", target, "Mutated component, e.g. lindist.star");
  mutate->add_option("--at", at, "Comma-separated position");
  mutate->add_option("--value", value, "New entry");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return ldlab::kSchema;
  }

  CommandOptions options;
  if (!scope.empty()) options.scope = scope;
  options.axioms = split(axioms);

  int code = 0;
  if (*generate) {
    if (!corpus_dir.empty()) return emit_report(ldlab::cmd_seed_corpus(corpus_dir), Output{"", output.summary});
    if (generator.empty()) {
      std::cerr << "generate needs a generator name or --seed-corpus\n";
      return ldlab::kSchema;
    }
    std::map<std::string, std::string> kv;
    for (const auto& p : params) {
      for (const auto& item : split(p)) {
        const auto eq = item.find('=');
        if (eq == std::string::npos) {
          if (!kv.empty() && kv.count("g")) {
            kv["g"] += "," + item;
            continue;
          }
          std::cerr << "parameter " << item << " is not key=value\n";
          return ldlab::kSchema;
        }
        kv[item.substr(0, eq)] = item.substr(eq + 1);
      }
    }
    return emit_artifact(ldlab::cmd_generate(generator, kv), output);
  }

  const auto instance = read_instance(file, output, code);
  if (!instance) return code;

  if (*validate) return emit_report(ldlab::cmd_validate(*instance, options), output);
  if (*lift) return emit_artifact(ldlab::cmd_lift(*instance, options), output);
  if (*translate) return emit_report(ldlab::cmd_translate(*instance, to, options), output);
  if (*coincide) return emit_report(ldlab::cmd_coincide(*instance, options), output);
  if (*compact) return emit_report(ldlab::cmd_compact(*instance, options), output);
  if (*equivalence) return emit_report(ldlab::cmd_equivalence(*instance, options), output);
  if (*search) return emit_report(ldlab::cmd_search(*instance, options), output);
  if (*mutate) {
    Json d;
    if (!descriptor.empty()) {
      try {
        d = Json::parse(descriptor);
      } catch (const Json::exception& e) {
        std::cerr << "descriptor: " << e.what() << "\n";
        return ldlab::kSchema;
      }
    } else {
      if (kind.empty()) {
        std::cerr << "mutate needs --descriptor or --kind\n";
        return ldlab::kSchema;
      }
      d["kind"] = kind;
      if (!target.empty()) d["target"] = target;
      if (!at.empty()) {
        Json pos = Json::array();
        try {
          for (const auto& i : split(at)) pos.push_back(std::stoull(i));
        } catch (const std::exception&) {
          std::cerr << "--at must be a comma-separated list of indices\n";
          return ldlab::kSchema;
        }
        d["at"] = pos;
      }
      if (value) d["value"] = *value;
    }
    return emit_artifact(ldlab::cmd_mutate(*instance, d), output);
  }
  return code;
}
