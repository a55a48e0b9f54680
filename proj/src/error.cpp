//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/error.hpp"

namespace fragit {

const char *error_kind_name(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::kIndex:
    return "index error";
  case ErrorKind::kFileNotFound:
    return "file not found";
  case ErrorKind::kParse:
    return "parse error";
  case ErrorKind::kUnsupportedElement:
    return "unsupported element";
  case ErrorKind::kPerception:
    return "perception failure";
  case ErrorKind::kPattern:
    return "pattern error";
  case ErrorKind::kUnsupportedFeature:
    return "unsupported SMARTS feature";
  case ErrorKind::kConfig:
    return "configuration error";
  case ErrorKind::kInvalidPair:
    return "invalid explicit pair";
  case ErrorKind::kUsage:
    return "usage error";
  case ErrorKind::kWrite:
    return "write error";
  case ErrorKind::kInternal:
    return "internal error";
  }
  return "error";
}

int exit_code_for(ErrorKind kind) {
  switch (kind) {
  case ErrorKind::kUsage:
    return 2;
  case ErrorKind::kFileNotFound:
    return 3;
  case ErrorKind::kParse:
  case ErrorKind::kUnsupportedElement:
    return 4;
  case ErrorKind::kPerception:
    return 5;
  case ErrorKind::kPattern:
  case ErrorKind::kUnsupportedFeature:
    return 6;
  case ErrorKind::kConfig:
  case ErrorKind::kInvalidPair:
    return 7;
  case ErrorKind::kWrite:
    return 8;
  case ErrorKind::kIndex:
  case ErrorKind::kInternal:
    return 70;
  }
  return 70;
}

} // namespace fragit
