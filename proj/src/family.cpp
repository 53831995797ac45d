#include "expdioph/family.hpp"

#include <stdexcept>

namespace expdioph {

const char* to_string(ParamViolation v) {
    switch (v) {
        case ParamViolation::EllEven: return "2 | ell";
        case ParamViolation::EllMTimesThree: return "3 | ell*m";
        case ParamViolation::EllNotAboveR: return "ell <= r";
        case ParamViolation::RNotMultipleOf3: return "3 !| r";
    }
    return "?";
}

const char* to_string(CorollaryViolation v) {
    switch (v) {
        case CorollaryViolation::PNotPrime: return "p not prime";
        case CorollaryViolation::PBelow11: return "p < 11";
        case CorollaryViolation::MTimesThree: return "3 | m";
    }
    return "?";
}

ParamResult validate_params(const Int& ell, const Int& m, const Int& r) {
    if (ell < 1 || m < 1 || r < 1)
        throw std::domain_error("validate_params: inputs must be positive");

    std::vector<ParamViolation> bad;
    if (is_even(ell)) bad.push_back(ParamViolation::EllEven);
    if (divides(3, ell * m)) bad.push_back(ParamViolation::EllMTimesThree);
    if (ell <= r) bad.push_back(ParamViolation::EllNotAboveR);
    if (!divides(3, r)) bad.push_back(ParamViolation::RNotMultipleOf3);

    if (!bad.empty()) return ParamResult(std::move(bad));
    return ParamResult(FamilyParams{ell, m, r});
}

Instance build_instance(const FamilyParams& p) {
    const Int m2 = p.m * p.m;
    Instance inst{p.r * p.ell * m2 - 1, (p.ell - p.r) * p.ell * m2 + 1, p.ell * p.m};

    // The invariants are consequences of the side conditions; check
    // them anyway so a bug cannot silently produce a bogus triple.
    auto require = [](bool cond, const char* what) {
        if (!cond) throw std::logic_error(std::string("build_instance: broken invariant: ") + what);
    };
    require(inst.a + inst.b == inst.c * inst.c, "a + b = c^2");
    require(gcd(inst.a, inst.b) == 1, "gcd(a, b) = 1");
    require(gcd(inst.c, inst.a) == 1, "gcd(c, a) = 1");
    require(gcd(inst.c, inst.b) == 1, "gcd(c, b) = 1");
    require(inst.a > 1 && inst.b > 1, "min(a, b) > 1");
    return inst;
}

bool theorem_applicable(const Instance& inst) {
    const Int& smaller = inst.a < inst.b ? inst.a : inst.b;
    return smaller > 30;
}

CorollaryResult map_corollary(const Int& p, const Int& m) {
    if (p < 1 || m < 1)
        throw std::domain_error("map_corollary: inputs must be positive");

    std::vector<CorollaryViolation> bad;
    if (!is_prime(p) || is_even(p)) bad.push_back(CorollaryViolation::PNotPrime);
    if (p < 11) bad.push_back(CorollaryViolation::PBelow11);
    if (divides(3, m)) bad.push_back(CorollaryViolation::MTimesThree);
    if (!bad.empty()) return CorollaryResult(std::move(bad));

    FamilyParams params{p, m, 3};
    // p >= 11 prime and 3 !| m make the four side conditions automatic;
    // re-validate so the mapping can never hand out unchecked params.
    ParamResult check = validate_params(params.ell, params.m, params.r);
    if (!check.ok())
        throw std::logic_error("map_corollary: mapped params failed validation");
    return CorollaryResult(std::move(params));
}

}  // namespace expdioph
