#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ldlab/instance_io.hpp"

namespace ldlab {

/// Exit codes shared by the command-line tool and the Python bindings.
enum ExitCode : int { kPass = 0, kFail = 1, kSchema = 2, kPrecondition = 3 };

struct CommandOptions {
  /// Comma-separated object list overriding the instance scope.
  std::optional<std::string> scope;
  /// Axiom groups or ids for validate; empty means everything applicable.
  std::vector<std::string> axioms;
};

struct CommandResult {
  Json report;
  int exit_code = kPass;
  /// An instance produced by lift, generate or mutate.
  std::optional<Json> artifact;
};

/// Groups accepted by validate --axioms besides individual axiom ids.
const std::vector<std::string>& validation_groups();

CommandResult cmd_validate(const Json& instance, const CommandOptions& options);
CommandResult cmd_lift(const Json& instance, const CommandOptions& options);
/// `to` is "star" or "lindist".
CommandResult cmd_translate(const Json& instance, const std::string& to, const CommandOptions& options);
CommandResult cmd_coincide(const Json& instance, const CommandOptions& options);
CommandResult cmd_compact(const Json& instance, const CommandOptions& options);
CommandResult cmd_equivalence(const Json& instance, const CommandOptions& options);
CommandResult cmd_search(const Json& instance, const CommandOptions& options);
/// Generators: lukasiewicz (n), matrix-compact (p, dmax), group-hopf (p, m,
/// dmax). The optional parameter comonad=identity|interior with g=a,b,...
/// attaches a comonad.
CommandResult cmd_generate(const std::string& name, const std::map<std::string, std::string>& params);
CommandResult cmd_mutate(const Json& instance, const Json& descriptor);

/// Writes the seed corpus and its manifest into `dir`.
CommandResult cmd_seed_corpus(const std::string& dir);

/// Human-readable table of every axiom list in a report.
std::string summarize(const Json& report);

}  // namespace ldlab
