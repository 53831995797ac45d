/**
 * @file lehmer.hpp
 * @brief Lehmer pairs, their integer sequences, and primitive divisors.
 *
 * A pair is stored by E = (alpha+beta)^2 and G = alpha*beta, nonzero
 * coprime integers with alpha/beta not a root of unity, together with
 * F = E - 4G. The sequence
 *
 *     L_n = (alpha^n - beta^n) / (alpha - beta)      n odd
 *     L_n = (alpha^n - beta^n) / (alpha^2 - beta^2)  n even
 *
 * is computed by the integer recurrence
 *
 *     L_0 = 0,  L_1 = 1,
 *     L_n = E*L_{n-1} - G*L_{n-2}   (n odd)
 *     L_n =   L_{n-1} - G*L_{n-2}   (n even),
 *
 * which the test suite validates against exact symbolic expansion of
 * the definition. A prime q is a primitive divisor of L_n when q | L_n
 * but q divides neither F nor any earlier term; the primitive part is
 * extracted by repeated gcd stripping, never by factoring. For n > 30
 * a primitive divisor always exists, which is the contradiction the
 * certifier leans on.
 */
#pragma once

#include <vector>

#include "expdioph/arith.hpp"
#include "expdioph/result.hpp"

namespace expdioph {

struct LehmerPair {
    Int e_val;        // (alpha + beta)^2
    Int g_val;        // alpha * beta
    Int f_val;        // E - 4G
    int lambda_sign;  // square-root branch of alpha; fixed to +1, cosmetic

    bool operator==(const LehmerPair&) const = default;
};

enum class PairError {
    ZeroEntry,          // E == 0 or G == 0
    EntriesNotCoprime,  // gcd(E, G) > 1
    Degenerate,         // alpha/beta is a root of unity
    SumNotSquare,       // pair_from_family: P + Q != K^2
    BasesNotCoprime,    // pair_from_family: gcd(P, Q) != 1
};

const char* to_string(PairError e);

using PairResult = Result<LehmerPair, PairError>;

/// Validates (E, G) and computes F. Degeneracy is detected empirically:
/// F == 0 or a zero among L_1..L_30 (roots of unity reachable from
/// integer pairs have small order, so the window is exhaustive).
PairResult make_pair(const Int& e, const Int& g);

/// L_n by the integer recurrence; n >= 0.
Int lehmer_number(const LehmerPair& pair, const Int& n);

/// L_0..L_n in one pass.
std::vector<Int> lehmer_sequence(const LehmerPair& pair, const Int& n_max);

/// |L_n| with every prime factor shared with F*L_1*...*L_{n-1} removed
/// to full multiplicity, by repeated gcd stripping. Requires n > 1.
Int primitive_part(const LehmerPair& pair, const Int& n);

/// True iff primitive_part(pair, n) > 1. Requires n > 1.
bool has_primitive_divisor(const LehmerPair& pair, const Int& n);

/// The n > 30 criterion as a checkable claim: evaluates
/// has_primitive_divisor and returns the result, which is expected to
/// be true for every non-degenerate pair. Requires n > 30; smaller n
/// throws std::domain_error (criterion out of range).
bool bhv_check(const LehmerPair& pair, const Int& n);

/// Raw values of the family pair construction, prior to validation:
/// E = 4P, G = K^2, F = E - 4G. The identity F = -4Q holds for every
/// triple with P + Q = K^2, whether or not the pair itself is valid.
struct FamilyPairValues {
    Int e;
    Int g;
    Int f;
};

FamilyPairValues family_pair_values(const Int& p, const Int& q, const Int& k);

/// The pair alpha = sqrt(P) + sqrt(-Q), beta = sqrt(P) - sqrt(-Q)
/// attached to a family triple: E = 4P, G = K^2. Requires P + Q = K^2,
/// gcd(P, Q) = 1; the constructed pair must additionally validate
/// (so triples with even K are rejected as non-coprime).
PairResult pair_from_family(const Int& p, const Int& q, const Int& k);

}  // namespace expdioph
