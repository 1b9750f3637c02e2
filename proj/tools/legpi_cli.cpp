// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

// legpi: evaluate, verify and compute pi from the command line.
//
// Exit codes: 0 all checks pass, 1 a check failed or a computation could not
// finish, 2 usage error.

#include <cstdint>
#include <cstdio>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "legpi/legpi.h"

namespace {

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Options {
  long digits = 50;
  bool json = false;
  std::uint64_t seed = 0;
  std::string fn;
  std::string tau;
  std::string lambda;
  std::optional<int> identity;
  std::string method = "identity1";
  std::string abc;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ContextDeleter {
  void operator()(legpi_context* c) const { legpi_context_free(c); }
};
struct ListDeleter {
  void operator()(legpi_report_list* l) const { legpi_report_list_free(l); }
};
using ContextPtr = std::unique_ptr<legpi_context, ContextDeleter>;
using ListPtr = std::unique_ptr<legpi_report_list, ListDeleter>;

// Owned char* from the C API.
class CString {
 public:
  CString() = default;
  ~CString() { legpi_string_free(p_); }
  CString(const CString&) = delete;
  CString& operator=(const CString&) = delete;
  char** out() { return &p_; }
  std::string str() const { return p_ ? p_ : ""; }

 private:
  char* p_ = nullptr;
};

bool is_usage_status(legpi_status s) {
  return s == LEGPI_ERR_INVALID_ARGUMENT || s == LEGPI_ERR_PARSE || s == LEGPI_ERR_REGION ||
         s == LEGPI_ERR_SINGULAR || s == LEGPI_ERR_INDETERMINATE;
}

// Input-dependent failures are usage errors; the rest are failed runs.
struct ApiError : std::runtime_error {
  ApiError(legpi_status s, const std::string& what) : std::runtime_error(what), status(s) {}
  legpi_status status;
};

void check(legpi_status s) {
  if (s != LEGPI_OK)
    throw ApiError(s, std::string(legpi_status_string(s)) + ": " + legpi_last_error());
}

ContextPtr make_context(long digits) {
  legpi_context* raw = nullptr;
  check(legpi_context_new(digits, &raw));
  return ContextPtr(raw);
}

std::vector<long> parse_abc(const std::string& text) {
  std::vector<long> out;
  std::stringstream ss(text);
  std::string part;
  while (std::getline(ss, part, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(part, &used));
      if (used != part.size()) throw std::invalid_argument(part);
    } catch (const std::exception&) {
      throw UsageError("--abc expects three integers a,b,c, got '" + text + "'");
    }
  }
  if (out.size() != 3) throw UsageError("--abc expects three integers a,b,c, got '" + text + "'");
  return out;
}

int print_reports(const legpi_report_list* list, bool json) {
  bool all_pass = true;
  const std::size_t n = legpi_report_list_size(list);
  for (std::size_t i = 0; i < n; ++i) {
    const bool pass = legpi_report_pass(list, i) != 0;
    all_pass = all_pass && pass;
    if (json) {
      std::cout << legpi_report_json(list, i) << '\n';
      continue;
    }
    std::cout << (pass ? "PASS " : "FAIL ") << legpi_report_label(list, i) << '\n'
              << "  lhs       " << legpi_report_lhs(list, i) << '\n'
              << "  rhs       " << legpi_report_rhs(list, i) << '\n'
              << "  abs_error " << legpi_report_abs_error(list, i) << " (digits "
              << legpi_report_digits(list, i) << ")\n";
    for (std::size_t j = 0; j < legpi_report_flag_count(list, i); ++j)
      std::cout << "  flag      " << legpi_report_flag(list, i, j) << '\n';
  }
  if (!json) {
    std::size_t passed = 0;
    for (std::size_t i = 0; i < n; ++i) passed += legpi_report_pass(list, i) ? 1 : 0;
    std::cout << passed << "/" << n << " checks passed\n";
  }
  return all_pass ? kExitPass : kExitFail;
}

int run_eval(const Options& o) {
  if (o.tau.empty() && o.lambda.empty()) throw UsageError("eval needs --tau or --lambda");
  ContextPtr ctx = make_context(o.digits);
  CString value;
  check(legpi_eval(ctx.get(), o.fn.c_str(), o.tau.empty() ? nullptr : o.tau.c_str(),
                   o.lambda.empty() ? nullptr : o.lambda.c_str(), value.out()));
  if (o.json) {
    nlohmann::ordered_json j;
    j["fn"] = o.fn;
    if (!o.tau.empty()) j["tau"] = o.tau;
    if (!o.lambda.empty()) j["lambda"] = o.lambda;
    j["digits"] = o.digits;
    j["value"] = value.str();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << value.str() << '\n';
  }
  return kExitPass;
}

int run_verify(const Options& o) {
  const int selectors = (o.identity ? 1 : 0) + (o.abc.empty() ? 0 : 1) + (o.tau.empty() ? 0 : 1);
  if (selectors > 1) throw UsageError("verify takes at most one of --identity, --abc, --tau");
  ContextPtr ctx = make_context(o.digits);
  legpi_report_list* raw = nullptr;
  if (o.identity) {
    check(legpi_verify_identity(ctx.get(), *o.identity, &raw));
  } else if (!o.abc.empty()) {
    const std::vector<long> abc = parse_abc(o.abc);
    check(legpi_verify_cm(ctx.get(), abc[0], abc[1], abc[2], &raw));
  } else if (!o.tau.empty()) {
    check(legpi_check_theorem(ctx.get(), o.tau.c_str(), &raw));
  } else {
    check(legpi_verify_all(ctx.get(), &raw));
  }
  ListPtr list(raw);
  return print_reports(list.get(), o.json);
}

int run_pi(const Options& o) {
  const int which = o.method == "identity1" ? 1 : 2;
  CString digits, reference;
  check(legpi_pi_from_identity(which, o.digits, digits.out()));
  check(legpi_pi_reference(o.digits, reference.out()));
  const bool match = digits.str() == reference.str();
  if (o.json) {
    nlohmann::ordered_json j;
    j["label"] = "pi via " + o.method + " vs reference";
    j["lhs"] = digits.str();
    j["rhs"] = reference.str();
    j["abs_error"] = match ? "0" : "digits differ";
    j["digits_requested"] = o.digits;
    j["pass"] = match;
    j["branch_flags"] = nlohmann::json::array();
    std::cout << j.dump() << '\n';
  } else {
    std::cout << digits.str() << '\n';
    if (!match) std::cerr << "legpi: digits differ from the reference " << reference.str() << '\n';
  }
  return match ? kExitPass : kExitFail;
}

int run_cm_report(const Options& o) {
  const std::vector<long> abc = parse_abc(o.abc);
  ContextPtr ctx = make_context(o.digits);
  if (!o.json) {
    CString tau, lambda;
    check(legpi_cm_point(ctx.get(), abc[0], abc[1], abc[2], tau.out(), lambda.out()));
    std::cout << "abc    " << o.abc << '\n'
              << "d      " << 4 * abc[0] * abc[2] - abc[1] * abc[1] << '\n'
              << "tau    " << tau.str() << '\n'
              << "lambda " << lambda.str() << '\n';
  }
  legpi_report_list* raw = nullptr;
  check(legpi_cm_report(ctx.get(), abc[0], abc[1], abc[2], &raw));
  ListPtr list(raw);
  return print_reports(list.get(), o.json);
}

int run_selftest(const Options& o) {
  ContextPtr ctx = make_context(o.digits);
  legpi_report_list* raw = nullptr;
  check(legpi_selftest(ctx.get(), o.seed, &raw));
  ListPtr list(raw);
  return print_reports(list.get(), o.json);
}

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--digits", o.digits, "decimal digits to certify")
      ->check(CLI::Range(1L, 1000000L))
      ->capture_default_str();
  sub->add_flag("--json", o.json, "newline-delimited JSON output");
}

}  // namespace

int main(int argc, char** argv) {
  Options o;
  CLI::App app{"Periods of the Legendre family, modular forms at CM points and 1/pi identities",
               "legpi"};
  app.require_subcommand(1);

  CLI::App* eval = app.add_subcommand("eval", "evaluate one function");
  add_common(eval, o);
  eval->add_option("--fn", o.fn, "function")
      ->required()
      ->check(CLI::IsMember({"lambda", "eta", "e2", "e4", "e6", "delta", "j", "s2", "F", "F2"}));
  eval->add_option("--tau", o.tau, "point of the upper half plane, x+yi");
  eval->add_option("--lambda", o.lambda, "Legendre parameter, x or x+yi");

  CLI::App* verify = app.add_subcommand("verify", "run verification checks");
  add_common(verify, o);
  verify->add_option("--identity", o.identity, "1/pi identity")->check(CLI::IsMember({1, 2}));
  verify->add_option("--abc", o.abc, "CM triple a,b,c");
  verify->add_option("--tau", o.tau, "period-formula check at tau");

  CLI::App* pi = app.add_subcommand("pi", "digits of pi from an identity");
  add_common(pi, o);
  pi->add_option("--method", o.method, "identity")
      ->check(CLI::IsMember({"identity1", "identity2"}))
      ->capture_default_str();

  CLI::App* cm = app.add_subcommand("cm-report", "all checks at one CM point");
  add_common(cm, o);
  cm->add_option("--abc", o.abc, "CM triple a,b,c")->required();

  CLI::App* selftest = app.add_subcommand("selftest", "every fast check, seeded");
  add_common(selftest, o);
  selftest->add_option("--seed", o.seed, "seed for randomized checks")->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "legpi: error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (eval->parsed()) return run_eval(o);
    if (verify->parsed()) return run_verify(o);
    if (pi->parsed()) return run_pi(o);
    if (cm->parsed()) return run_cm_report(o);
    return run_selftest(o);
  } catch (const UsageError& e) {
    std::cerr << "legpi: error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ApiError& e) {
    std::cerr << "legpi: error: " << e.what() << '\n';
    return is_usage_status(e.status) ? kExitUsage : kExitFail;
  }
}
