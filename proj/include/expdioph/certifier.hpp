/**
 * @file certifier.hpp
 * @brief Full proof replay for one family, cross-checked by brute force.
 *
 * replay_proof walks the uniqueness argument step by step on concrete
 * values and records each check. The contradiction core concerns
 * solutions that provably do not exist, so it cannot be exercised on
 * family data beyond the trivial solution; the certificate records it
 * as a conditional schema whose numeric premises are verified, while
 * the machinery behind it (representations, Lehmer numbers, primitive
 * parts) is exercised on synthetic instances by the test suites.
 */
#pragma once

#include <string>
#include <vector>

#include "expdioph/family.hpp"

namespace expdioph {

enum class Verdict {
    CertifiedUnique,
    NotApplicable,  // min{A, B} <= 30; no claim is certified
    Falsified,      // reserved for bug or counterexample reporting
};

const char* to_string(Verdict v);

/// One replayed proof step: a stable name, the label of the proof step
/// it checks, the outcome, and the concrete values that were checked.
struct StepRecord {
    std::string name;
    std::string anchor;
    bool pass;
    std::string detail;
};

struct Certificate {
    FamilyParams params;
    Instance instance;
    bool applicable;
    std::vector<StepRecord> steps;  // always the same eight, in order
    std::vector<Solution> oracle_solutions;
    Verdict verdict;
};

/// Exhaustive search for A^x + B^y = C^z with z <= z_max: for each z
/// and each x with A^x < C^z, C^z - A^x is tested for being a positive
/// power of B by repeated exact division. Ordered by (z, x).
std::vector<Solution> brute_force_solutions(const Instance& instance, const Int& z_max);

/// Certifies one family; requires z_max >= 2.
Certificate replay_proof(const FamilyParams& params, const Int& z_max);

/// The divisibility gate of the contradiction schema: true iff A | t
/// or B | t. Requires t odd and t > 1; anything a nontrivial solution
/// could produce satisfies this, forcing t >= min{A, B}.
bool hypothetical_t_bound(const Instance& instance, const Int& t);

}  // namespace expdioph
