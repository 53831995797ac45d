#include "expdioph/sieve.hpp"

namespace expdioph {

const char* to_string(RejectReason r) {
    switch (r) {
        case RejectReason::Lemma31XEven: return "lemma 3.1: x even";
        case RejectReason::Lemma31YEven: return "lemma 3.1: y even";
        case RejectReason::Lemma32EvenM: return "lemma 3.2: even m";
    }
    return "?";
}

bool x_parity_admissible(const FamilyParams& params, const Int& x) {
    // (-1)^x + 1 mod ell, with -1 represented as ell - 1.
    const Int& ell = params.ell;
    return mod(mod_pow(ell - 1, x, ell) + 1, ell) == 0;
}

bool y_parity_admissible(const FamilyParams& /*params*/, const Int& x, const Int& y) {
    // A ≡ -1 and B ≡ 2 (mod 3) from 3 | r and 3 !| ell*m, so the
    // power sum reduces to (-1)^x + 2^y mod 3.
    const Int three = 3;
    const Int residue = mod(mod_pow(2, x, three) + mod_pow(2, y, three), three);
    return residue != 0;
}

Int power_sum_mod_m3(const FamilyParams& params, const Int& x, const Int& y) {
    const Instance inst = build_instance(params);
    const Int m3 = params.m * params.m * params.m;
    return mod(mod_pow(inst.a, x, m3) + mod_pow(inst.b, y, m3), m3);
}

Int truncated_sum_mod_m3(const FamilyParams& params, const Int& x, const Int& y) {
    const Int m3 = params.m * params.m * params.m;
    const Int lhs = params.ell * params.m * params.m * (params.r * x + (params.ell - params.r) * y);
    return mod(lhs, m3);
}

bool reduced_congruence_holds(const FamilyParams& params, const Int& x, const Int& y) {
    const Int lhs = params.ell * (params.r * x + (params.ell - params.r) * y);
    return mod(lhs, params.m) == 0;
}

bool even_m_excludes(const FamilyParams& params, const Int& x, const Int& y) {
    if (!is_even(params.m)) return false;
    // The mod-2 instance of the reduced congruence: with ell odd and
    // x, y odd it evaluates to ell^2*y ≡ 1 (mod 2), which cannot be 0.
    const Int lhs = params.ell * (params.r * x + (params.ell - params.r) * y);
    return mod(lhs, 2) != 0;
}

SieveVerdict sieve_candidate(const FamilyParams& params, const Solution& sol) {
    if (!x_parity_admissible(params, sol.x))
        return SieveVerdict::reject(RejectReason::Lemma31XEven);
    if (!y_parity_admissible(params, sol.x, sol.y))
        return SieveVerdict::reject(RejectReason::Lemma31YEven);

    const bool trivial = sol.x == 1 && sol.y == 1 && sol.z == 2;
    if (!trivial && even_m_excludes(params, sol.x, sol.y))
        return SieveVerdict::reject(RejectReason::Lemma32EvenM);

    return SieveVerdict::pass();
}

}  // namespace expdioph
