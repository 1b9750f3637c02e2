// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#pragma once

#include <string>
#include <vector>

#include "legpi/numerics.hpp"

namespace legpi {

// One verification: pass <=> abs_error < 10^-(digits_requested - 5).
struct FormulaReport {
  std::string label;
  std::string lhs;
  std::string rhs;
  std::string abs_error;
  long digits_requested = 0;
  bool pass = false;
  std::vector<std::string> branch_flags;

  // JSON object with exactly the fields above, one line.
  std::string to_json() const;
  static FormulaReport from_json(const std::string& text);
};

// Builds a report comparing lhs and rhs at ctx.target_digits().
FormulaReport make_report(std::string label, const BigComplex& lhs, const BigComplex& rhs,
                          const PrecisionCtx& ctx, std::vector<std::string> flags = {});

// Same, for checks whose certified digit count differs from the target
// (residual and finite-difference checks).
FormulaReport make_report(std::string label, const BigComplex& lhs, const BigComplex& rhs,
                          long digits_requested, const PrecisionCtx& ctx,
                          std::vector<std::string> flags = {});

// 10^-(digits - 5)
BigReal pass_threshold(long digits, const PrecisionCtx& ctx);

}  // namespace legpi
