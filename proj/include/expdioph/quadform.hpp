/**
 * @file quadform.hpp
 * @brief Solution classes of D1*X^2 + D2*Y^2 = k^Z.
 *
 * Solutions (X, Y, Z) with gcd(X, Y) = 1 carry a characteristic number
 * L ≡ -D1*X/Y (mod k), 0 < L < k. Two solutions belong to one class
 * when their characteristic numbers agree up to sign mod k. Every
 * class has a least solution (positive X, Y, minimal Z), and every
 * member arises from it as a lambda-signed odd power
 *
 *     X*sqrt(D1) + Y*sqrt(-D2) = l1*(X1*sqrt(D1) + l2*Y1*sqrt(-D2))^t,
 *
 * with t odd and Z = Z1*t. The odd power is expanded by exact binomial
 * sums so the expansion itself is a testable identity.
 */
#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "expdioph/arith.hpp"
#include "expdioph/result.hpp"

namespace expdioph {

struct QuadFormInstance {
    Int d1;
    Int d2;
    Int k;

    bool operator==(const QuadFormInstance&) const = default;
};

enum class QuadFormViolation {
    MinCoefficientNotAboveOne,  // min(d1, d2) <= 1
    CoefficientsNotCoprime,     // gcd(d1, d2) > 1
    ModulusNotCoprime,          // gcd(k, 2*d1*d2) > 1
};

const char* to_string(QuadFormViolation v);

using QuadFormResult = Result<QuadFormInstance, std::vector<QuadFormViolation>>;

/// Validates the instance preconditions. All inputs must be positive.
QuadFormResult make_quadform_instance(const Int& d1, const Int& d2, const Int& k);

struct QuadFormSolution {
    Int x_val;
    Int y_val;
    Int z_val;

    bool operator==(const QuadFormSolution&) const = default;
};

struct CharacteristicNumber {
    Int value;  // in (0, k)

    bool operator==(const CharacteristicNumber&) const = default;
};

/// Lemma-2.1 data tying a solution to the least solution of its class.
struct Representation {
    Int t;        // odd, Z = Z1 * t
    int lambda1;  // +1 or -1
    int lambda2;  // +1 or -1
    QuadFormSolution least;
};

/// Residue -d1*x/y mod k without requiring a validated instance;
/// throws when y is not invertible mod k.
Int solution_characteristic(const Int& d1, const Int& k, const Int& x, const Int& y);

/// Characteristic number of a solution. Asserts the solution invariants
/// (equation, gcd(X, Y) = 1, Z > 0) and the implied gcd(Y, k) = 1;
/// violations throw std::domain_error.
CharacteristicNumber characteristic_number(const QuadFormInstance& inst,
                                           const QuadFormSolution& sol);

/// True iff the two characteristic numbers agree up to sign mod k.
bool same_class(const QuadFormInstance& inst, const CharacteristicNumber& a,
                const CharacteristicNumber& b);

/// All solutions with X > 0, Y > 0, gcd(X, Y) = 1 and Z <= z_max,
/// ordered by (Z, X). Exhaustive: X sweeps 1..floor(sqrt(k^Z/d1)) and
/// Y is accepted when (k^Z - d1*X^2)/d2 is a positive perfect square.
std::vector<QuadFormSolution> enumerate_solutions(const QuadFormInstance& inst, const Int& z_max);

/// The class member with minimal Z (positive X, Y), searching Z <= z_cap.
/// The cap is a search bound supplied by the caller, not a theory bound.
std::optional<QuadFormSolution> least_solution_in_class(const QuadFormInstance& inst,
                                                        const CharacteristicNumber& l0,
                                                        const Int& z_cap);

/// Expands (X1*sqrt(d1) + lambda2*Y1*sqrt(-d2))^t, t odd, into integer
/// coordinates (U, V) with value U*sqrt(d1) + V*sqrt(-d2), via the
/// binomial sums
///   U = sum C(t,2i)   * (d1*X1^2)^((t-1)/2-i) * (-d2*Y1^2)^i * X1,
///   V = sum C(t,2i+1) * (d1*X1^2)^((t-1)/2-i) * (-d2*Y1^2)^i * lambda2*Y1.
/// Even t throws std::domain_error.
std::pair<Int, Int> expand_odd_power(const Int& d1, const Int& d2, const Int& x1, const Int& y1,
                                     int lambda2, const Int& t);

/// Searches the four sign choices for Lemma-2.1 data reproducing sol
/// from the least solution of its class; nullopt when no signs match.
/// Preconditions (same class, Z1 | Z, odd quotient) throw when violated.
std::optional<Representation> verify_representation(const QuadFormInstance& inst,
                                                    const QuadFormSolution& least,
                                                    const QuadFormSolution& sol);

}  // namespace expdioph
