// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#include "legpi/legpi.h"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <exception>
#include <new>
#include <string>
#include <vector>

#include "legpi/cm.hpp"
#include "legpi/error.hpp"
#include "legpi/hypergeometric.hpp"
#include "legpi/legendre.hpp"
#include "legpi/modular.hpp"
#include "legpi/selftest.hpp"

struct legpi_context {
  legpi::PrecisionCtx ctx;
};

struct legpi_report_list {
  std::vector<legpi::FormulaReport> reports;
  std::vector<std::string> json;  // one per report
};

namespace {

thread_local std::string g_last_error;

legpi_status to_status(legpi::ErrorCode code) {
  switch (code) {
    case legpi::ErrorCode::kInvalidArgument: return LEGPI_ERR_INVALID_ARGUMENT;
    case legpi::ErrorCode::kParse: return LEGPI_ERR_PARSE;
    case legpi::ErrorCode::kRegion: return LEGPI_ERR_REGION;
    case legpi::ErrorCode::kSingular: return LEGPI_ERR_SINGULAR;
    case legpi::ErrorCode::kIndeterminate: return LEGPI_ERR_INDETERMINATE;
    case legpi::ErrorCode::kNonTermination: return LEGPI_ERR_NON_TERMINATION;
  }
  return LEGPI_ERR_INTERNAL;
}

legpi_status fail(legpi_status status, std::string message) {
  g_last_error = std::move(message);
  return status;
}

template <typename Fn>
legpi_status guarded(Fn&& fn) {
  try {
    fn();
    return LEGPI_OK;
  } catch (const legpi::Error& e) {
    return fail(to_status(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(LEGPI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(LEGPI_ERR_INTERNAL, e.what());
  }
}

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (out == nullptr) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool cond, const char* message) {
  if (!cond) throw legpi::Error(legpi::ErrorCode::kInvalidArgument, message);
}

legpi::BigComplex parse_input(const char* text, const char* what, const legpi::PrecisionCtx& ctx) {
  if (text == nullptr || *text == '\0')
    throw legpi::Error(legpi::ErrorCode::kInvalidArgument, std::string(what) + " is required");
  return ctx.complex(text);
}

legpi::BigComplex eval_fn(const std::string& fn, const char* tau_text, const char* lambda_text,
                          const legpi::PrecisionCtx& ctx) {
  using namespace legpi;
  if (fn == "F" || fn == "F2") {
    const BigComplex l = parse_input(lambda_text, "lambda", ctx);
    return fn == "F" ? legendre_F(l, ctx) : legendre_F2(l, ctx);
  }
  if (fn == "j" && lambda_text != nullptr && *lambda_text != '\0')
    return normalized_j(parse_input(lambda_text, "lambda", ctx));

  const TauPoint t = TauPoint::make(parse_input(tau_text, "tau", ctx), ctx);
  if (fn == "lambda") return lambda_tau_reduced(t, ctx);
  if (fn == "j") return normalized_j(snap_to_real(lambda_tau_reduced(t, ctx), ctx));
  if (fn == "eta") return eta(t, ctx);
  if (fn == "e2") return eisenstein(2, t, ctx);
  if (fn == "e4") return eisenstein(4, t, ctx);
  if (fn == "e6") return eisenstein(6, t, ctx);
  if (fn == "delta") return delta_tau(t, ctx);
  if (fn == "s2") return s2(t, ctx);
  throw Error(ErrorCode::kInvalidArgument, "unknown function '" + fn + "'");
}

legpi_status emit(std::vector<legpi::FormulaReport> reports, legpi_report_list** out) {
  auto* list = new legpi_report_list;
  list->reports = std::move(reports);
  for (const auto& r : list->reports) list->json.push_back(r.to_json());
  *out = list;
  return LEGPI_OK;
}

const legpi::FormulaReport* at(const legpi_report_list* list, size_t i) {
  if (list == nullptr || i >= list->reports.size()) return nullptr;
  return &list->reports[i];
}

}  // namespace

extern "C" {

const char* legpi_version(void) { return "0.1.0"; }

const char* legpi_status_string(legpi_status status) {
  switch (status) {
    case LEGPI_OK: return "ok";
    case LEGPI_ERR_INVALID_ARGUMENT: return "invalid argument";
    case LEGPI_ERR_PARSE: return "parse error";
    case LEGPI_ERR_REGION: return "outside evaluation region";
    case LEGPI_ERR_SINGULAR: return "singular point";
    case LEGPI_ERR_INDETERMINATE: return "indeterminate form";
    case LEGPI_ERR_NON_TERMINATION: return "iteration did not terminate";
    case LEGPI_ERR_INTERNAL: return "internal error";
  }
  return "unknown status";
}

const char* legpi_last_error(void) { return g_last_error.c_str(); }

void legpi_string_free(char* s) { std::free(s); }

legpi_status legpi_context_new(long target_digits, legpi_context** out) {
  if (out == nullptr) return fail(LEGPI_ERR_INVALID_ARGUMENT, "null output pointer");
  *out = nullptr;
  return guarded([&] { *out = new legpi_context{legpi::PrecisionCtx::make(target_digits)}; });
}

void legpi_context_free(legpi_context* ctx) { delete ctx; }

long legpi_context_target_digits(const legpi_context* ctx) {
  return ctx ? ctx->ctx.target_digits() : 0;
}

long legpi_context_working_digits(const legpi_context* ctx) {
  return ctx ? ctx->ctx.working_digits() : 0;
}

legpi_status legpi_eval(const legpi_context* ctx, const char* fn, const char* tau,
                        const char* lambda, char** out) {
  return guarded([&] {
    require(ctx != nullptr && fn != nullptr && out != nullptr, "null argument");
    const legpi::BigComplex value =
        legpi::snap_to_real(eval_fn(fn, tau, lambda, ctx->ctx), ctx->ctx);
    *out = dup_string(value.to_string(static_cast<int>(ctx->ctx.target_digits())));
  });
}

legpi_status legpi_pi_reference(long digits, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(legpi::pi_reference_digits(digits));
  });
}

legpi_status legpi_pi_from_identity(int which, long digits, char** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = dup_string(legpi::pi_from_identity(which, digits));
  });
}

legpi_status legpi_lambda_q_coeffs(int n, int64_t* out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    const std::vector<std::int64_t> coeffs = legpi::lambda_q_coeffs(n);
    std::copy(coeffs.begin(), coeffs.end(), out);
  });
}

legpi_status legpi_cm_point(const legpi_context* ctx, long a, long b, long c, char** tau,
                            char** lambda) {
  return guarded([&] {
    require(ctx != nullptr && tau != nullptr && lambda != nullptr, "null argument");
    const auto& pc = ctx->ctx;
    const legpi::TauPoint t = legpi::cm_tau(legpi::CMQuadratic::make(a, b, c), pc);
    const int digits = static_cast<int>(pc.target_digits());
    const legpi::BigComplex l = legpi::snap_to_real(legpi::lambda_tau_reduced(t, pc), pc);
    std::string tau_text = t.tau().to_string(digits);
    *lambda = dup_string(l.to_string(digits));
    *tau = dup_string(tau_text);
  });
}

legpi_status legpi_verify_identity(const legpi_context* ctx, int which, legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    require(which == 1 || which == 2, "identity must be 1 or 2");
    emit({which == 1 ? legpi::identity1_check(ctx->ctx) : legpi::identity2_check(ctx->ctx)}, out);
  });
}

legpi_status legpi_verify_cm(const legpi_context* ctx, long a, long b, long c,
                             legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    const legpi::CMQuadratic q = legpi::CMQuadratic::make(a, b, c);
    emit({legpi::quasiperiod_relation_check(q, ctx->ctx), legpi::theorem_general_check(q, ctx->ctx)},
         out);
  });
}

legpi_status legpi_verify_all(const legpi_context* ctx, legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    emit(legpi::run_verify_all(ctx->ctx), out);
  });
}

legpi_status legpi_check_theorem(const legpi_context* ctx, const char* tau,
                                 legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    const auto& pc = ctx->ctx;
    const legpi::BigComplex z = parse_input(tau, "tau", pc);
    const legpi::TauPoint t = legpi::TauPoint::make(z, pc);
    const legpi::BigReal slack = pc.pow10(-pc.working_digits() / 2);
    if (abs(z.re() - 1) <= slack) {
      emit({legpi::check_theorem_around1(t, pc), legpi::around1_discrepancy(z, pc)}, out);
    } else if (abs(z.re()) <= slack && z.im() < 1L) {
      emit({legpi::check_theorem_transform(t, pc)}, out);
    } else {
      const legpi::LegendreCurve curve = legpi::weierstrass_from_lambda(
          legpi::snap_to_real(legpi::lambda_tau_reduced(t, pc), pc));
      emit({legpi::check_theorem_period(t, curve, pc)}, out);
    }
  });
}

legpi_status legpi_cm_report(const legpi_context* ctx, long a, long b, long c,
                             legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    const legpi::CMQuadratic q = legpi::CMQuadratic::make(a, b, c);
    std::vector<legpi::FormulaReport> reports = {legpi::quasiperiod_relation_check(q, ctx->ctx),
                                                 legpi::theorem_general_check(q, ctx->ctx)};
    if (auto cross = legpi::combined_term_cross_check(q, ctx->ctx)) reports.push_back(*cross);
    emit(std::move(reports), out);
  });
}

legpi_status legpi_selftest(const legpi_context* ctx, uint64_t seed, legpi_report_list** out) {
  return guarded([&] {
    require(ctx != nullptr && out != nullptr, "null argument");
    emit(legpi::run_selftest(ctx->ctx, seed), out);
  });
}

size_t legpi_report_list_size(const legpi_report_list* list) {
  return list ? list->reports.size() : 0;
}

int legpi_report_pass(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r && r->pass ? 1 : 0;
}

const char* legpi_report_label(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->label.c_str() : nullptr;
}

const char* legpi_report_lhs(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->lhs.c_str() : nullptr;
}

const char* legpi_report_rhs(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->rhs.c_str() : nullptr;
}

const char* legpi_report_abs_error(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->abs_error.c_str() : nullptr;
}

long legpi_report_digits(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->digits_requested : 0;
}

size_t legpi_report_flag_count(const legpi_report_list* list, size_t i) {
  const auto* r = at(list, i);
  return r ? r->branch_flags.size() : 0;
}

const char* legpi_report_flag(const legpi_report_list* list, size_t i, size_t j) {
  const auto* r = at(list, i);
  if (r == nullptr || j >= r->branch_flags.size()) return nullptr;
  return r->branch_flags[j].c_str();
}

const char* legpi_report_json(const legpi_report_list* list, size_t i) {
  return at(list, i) ? list->json[i].c_str() : nullptr;
}

void legpi_report_list_free(legpi_report_list* list) { delete list; }

}  // extern "C"
