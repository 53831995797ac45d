/**
 * @file sieve.hpp
 * @brief Congruence sieves on candidate exponent triples.
 *
 * Two eliminations drive the uniqueness argument:
 *  - mod ell:   A^x + B^y reduces to (-1)^x + 1, so x must be odd;
 *               with x odd, the mod-3 residue (-1)^x + 2^y rules out
 *               even y (labelled lemma 3.1 in certificates);
 *  - mod 2:     when m is even, ell*(r*x + (ell-r)*y) is odd for odd
 *               x, y, contradicting the mod-m congruence any
 *               nontrivial solution must satisfy (lemma 3.2).
 *
 * The predicates evaluate the congruences literally (modular
 * exponentiation), not their simplified parity conclusions; the
 * simplification is exactly what the tests verify.
 */
#pragma once

#include "expdioph/family.hpp"

namespace expdioph {

/// True iff (-1)^x + 1 == 0 (mod ell); for ell >= 5 this holds iff x is odd.
bool x_parity_admissible(const FamilyParams& params, const Int& x);

/// Evaluates (-1)^x + 2^y (mod 3), the reduction of A^x + B^y; the
/// candidate survives iff the residue is nonzero (C^z is never 0 mod 3).
/// Apply only after x_parity_admissible: the reduction assumes x odd.
bool y_parity_admissible(const FamilyParams& params, const Int& x, const Int& y);

/// (A^x + B^y) mod m^3, the power-sum side of the mod-m^3 identity.
Int power_sum_mod_m3(const FamilyParams& params, const Int& x, const Int& y);

/// ell*m^2*(r*x + (ell-r)*y) mod m^3, the binomially truncated side.
/// Equal to power_sum_mod_m3 whenever x is odd.
Int truncated_sum_mod_m3(const FamilyParams& params, const Int& x, const Int& y);

/// The reduced congruence ell*(r*x + (ell-r)*y) == 0 (mod m) that any
/// nontrivial solution with odd x, y must satisfy.
bool reduced_congruence_holds(const FamilyParams& params, const Int& x, const Int& y);

/// True iff 2 | m and the reduced congruence fails mod 2 -- i.e. the
/// even-m contradiction fires, certifying that no nontrivial solution
/// with these exponent parities exists. Requires x, y odd.
bool even_m_excludes(const FamilyParams& params, const Int& x, const Int& y);

enum class RejectReason {
    Lemma31XEven,
    Lemma31YEven,
    Lemma32EvenM,
};

const char* to_string(RejectReason r);

struct SieveVerdict {
    bool admissible;
    RejectReason reason;  // meaningful only when !admissible

    static SieveVerdict pass() { return {true, RejectReason::Lemma31XEven}; }
    static SieveVerdict reject(RejectReason r) { return {false, r}; }
};

/// Runs the sieves in proof order and reports the first one that
/// eliminates the candidate. The trivial solution (1, 1, 2) is never
/// rejected: the even-m elimination only concerns nontrivial triples.
SieveVerdict sieve_candidate(const FamilyParams& params, const Solution& sol);

}  // namespace expdioph
