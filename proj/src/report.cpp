// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/report.hpp"

#include "json.hpp"

namespace legpi {

std::string FormulaReport::to_json() const {
  const nlohmann::ordered_json j = {
      {"label", label},
      {"lhs", lhs},
      {"rhs", rhs},
      {"abs_error", abs_error},
      {"digits_requested", digits_requested},
      {"pass", pass},
      {"branch_flags", branch_flags},
  };
  return j.dump();
}

FormulaReport FormulaReport::from_json(const std::string& text) {
  try {
    const auto j = nlohmann::json::parse(text);
    FormulaReport r;
    r.label = j.at("label").get<std::string>();
    r.lhs = j.at("lhs").get<std::string>();
    r.rhs = j.at("rhs").get<std::string>();
    r.abs_error = j.at("abs_error").get<std::string>();
    r.digits_requested = j.at("digits_requested").get<long>();
    r.pass = j.at("pass").get<bool>();
    r.branch_flags = j.at("branch_flags").get<std::vector<std::string>>();
    return r;
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("bad FormulaReport JSON: ") + e.what());
  }
}

BigReal pass_threshold(long digits, const PrecisionCtx& ctx) {
  return ctx.pow10(-(digits - 5));
}

FormulaReport make_report(std::string label, const BigComplex& lhs, const BigComplex& rhs,
                          long digits_requested, const PrecisionCtx& ctx,
                          std::vector<std::string> flags) {
  const BigReal err = abs(lhs - rhs);
  FormulaReport r;
  r.label = std::move(label);
  const int shown = static_cast<int>(ctx.target_digits());
  r.lhs = lhs.to_string(shown);
  r.rhs = rhs.to_string(shown);
  r.abs_error = err.to_string(6);
  r.digits_requested = digits_requested;
  r.pass = err < pass_threshold(digits_requested, ctx);
  r.branch_flags = std::move(flags);
  return r;
}

FormulaReport make_report(std::string label, const BigComplex& lhs, const BigComplex& rhs,
                          const PrecisionCtx& ctx, std::vector<std::string> flags) {
  return make_report(std::move(label), lhs, rhs, ctx.target_digits(), ctx, std::move(flags));
}

}  // namespace legpi
