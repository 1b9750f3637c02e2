// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#pragma once

#include <stdexcept>
#include <string>

namespace legpi {

enum class ErrorCode {
  kInvalidArgument,
  kParse,
  kRegion,          // argument outside the supported evaluation region
  kSingular,        // argument at a singular point (lambda = 0, 1, ...)
  kIndeterminate,   // 0/0 form, e.g. s2 where E6 vanishes
  kNonTermination,  // iteration or series cap exceeded
};

const char* to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace legpi
