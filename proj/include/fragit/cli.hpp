//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_CLI_HPP
#define FRAGIT_CLI_HPP

#include <iosfwd>
#include <string>
#include <vector>

#include "fragit/settings.hpp"

namespace fragit {

struct ParsedArgs {
  JobSettings settings;
  bool show_help = false;
  std::string help_text;
};

// Defaults < --use-config file < command-line flags. Throws kUsage for bad
// flags and broken flag dependencies.
ParsedArgs parse_args(const std::vector<std::string> &args);

// Cross-field rules shared by the CLI and library callers; throws kUsage.
void validate_settings(const JobSettings &settings);

// Runs the pipeline and writes outputs. Returns the process exit status and
// prints a one-line diagnostic to `err` on failure.
int run(const JobSettings &settings, std::ostream &out, std::ostream &err);

// parse_args + run; `args` includes the program name.
int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err);

} // namespace fragit

#endif // FRAGIT_CLI_HPP
