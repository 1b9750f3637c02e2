// Copyright 2026 The legpi Authors.
//
// Licensed under the Apache License, Version 2.0 (see LICENSE or
// https://www.apache.org/licenses/LICENSE-2.0). This file may not be copied,
// modified, or distributed except according to those terms.

#pragma once

#include <cstdint>
#include <vector>

#include "legpi/numerics.hpp"
#include "legpi/report.hpp"

namespace legpi {

// The headline verifications: both 1/pi identities and, for each CM triple
// (1,0,1), (1,-2,2), (1,0,4), the quasi-period relation and the general
// formula.
std::vector<FormulaReport> run_verify_all(const PrecisionCtx& ctx);

// Every fast check of the library at one precision: the verify set, lambda
// coefficients and CM values, E2(i), seeded functional-equation and AGM
// property checks, Picard-Fuchs and Bruns residuals, the period-formula
// checks and the homothety constant study. Deterministic for a given seed.
std::vector<FormulaReport> run_selftest(const PrecisionCtx& ctx, std::uint64_t seed);

// Reports for the homothety study at tau = 2i and 3i: for each of the three
// expressions, its ratio to pi F(lambda) at 2i against the same ratio at 3i.
std::vector<FormulaReport> homothety_consistency(const PrecisionCtx& ctx);

// The period formula around tau = 1 at tau = 1 + i s, reduced to whether
// lhs/rhs equals (tau+1)/(tau-1); the raw report's error is carried in the flags.
FormulaReport around1_discrepancy(const BigComplex& tau, const PrecisionCtx& ctx);

}  // namespace legpi
