/**
 * @file family.hpp
 * @brief The parameter family (ell, m, r) and the base triples it generates.
 *
 * A parameter triple (ell, m, r) with
 *
 *     ell odd,  3 does not divide ell*m,  ell > r,  3 divides r
 *
 * produces the coprime bases
 *
 *     A = r*ell*m^2 - 1,  B = (ell - r)*ell*m^2 + 1,  C = ell*m,
 *
 * which always satisfy A + B = C^2. The certified claim is that
 * A^x + B^y = C^z has only (x, y, z) = (1, 1, 2) once min{A, B} > 30.
 */
#pragma once

#include <vector>

#include "expdioph/arith.hpp"
#include "expdioph/result.hpp"

namespace expdioph {

struct FamilyParams {
    Int ell;
    Int m;
    Int r;

    bool operator==(const FamilyParams&) const = default;
};

/// Base triple (A, B, C); invariants are asserted by build_instance.
struct Instance {
    Int a;
    Int b;
    Int c;

    bool operator==(const Instance&) const = default;
};

/// Candidate or actual exponent triple for A^x + B^y = C^z.
struct Solution {
    Int x;
    Int y;
    Int z;

    bool operator==(const Solution&) const = default;
};

enum class ParamViolation {
    EllEven,           // 2 | ell
    EllMTimesThree,    // 3 | ell*m
    EllNotAboveR,      // ell <= r
    RNotMultipleOf3,   // 3 does not divide r
};

/// Stable machine-readable token, used in reports.
const char* to_string(ParamViolation v);

using ParamResult = Result<FamilyParams, std::vector<ParamViolation>>;

/// Checks the four side conditions; every violated one is reported.
/// Inputs must be positive (throws std::domain_error otherwise).
ParamResult validate_params(const Int& ell, const Int& m, const Int& r);

/// Evaluates (A, B, C) from valid params and asserts all instance
/// invariants (sum, coprimality, min > 1). A failed assertion throws
/// std::logic_error: the invariants are theorems, so a failure means
/// an implementation bug.
Instance build_instance(const FamilyParams& params);

/// True iff min{A, B} > 30, the bound under which the uniqueness
/// claim is certified.
bool theorem_applicable(const Instance& instance);

enum class CorollaryViolation {
    PNotPrime,
    PBelow11,
    MTimesThree,  // 3 | m
};

const char* to_string(CorollaryViolation v);

using CorollaryResult = Result<FamilyParams, std::vector<CorollaryViolation>>;

/// Maps (p, m) from the A = 3pm^2 - 1 family onto params (p, m, 3).
/// Accepts exactly: p an odd prime, p >= 11, and 3 not dividing m.
CorollaryResult map_corollary(const Int& p, const Int& m);

}  // namespace expdioph
