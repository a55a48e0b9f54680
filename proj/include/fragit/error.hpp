//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#ifndef FRAGIT_ERROR_HPP
#define FRAGIT_ERROR_HPP

#include <stdexcept>
#include <string>

namespace fragit {

enum class ErrorKind {
  kIndex,
  kFileNotFound,
  kParse,
  kUnsupportedElement,
  kPerception,
  kPattern,
  kUnsupportedFeature,
  kConfig,
  kInvalidPair,
  kUsage,
  kWrite,
  kInternal,
};

const char *error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string &message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

private:
  ErrorKind kind_;
};

// Exit status the command-line tool uses for each error kind.
int exit_code_for(ErrorKind kind);

} // namespace fragit

#endif // FRAGIT_ERROR_HPP
