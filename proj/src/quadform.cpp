#include "expdioph/quadform.hpp"

#include <array>
#include <stdexcept>

namespace expdioph {

const char* to_string(QuadFormViolation v) {
    switch (v) {
        case QuadFormViolation::MinCoefficientNotAboveOne: return "min(d1, d2) <= 1";
        case QuadFormViolation::CoefficientsNotCoprime: return "gcd(d1, d2) != 1";
        case QuadFormViolation::ModulusNotCoprime: return "gcd(k, 2*d1*d2) != 1";
    }
    return "?";
}

QuadFormResult make_quadform_instance(const Int& d1, const Int& d2, const Int& k) {
    if (d1 < 1 || d2 < 1 || k < 1)
        throw std::domain_error("make_quadform_instance: inputs must be positive");

    std::vector<QuadFormViolation> bad;
    if (d1 <= 1 || d2 <= 1) bad.push_back(QuadFormViolation::MinCoefficientNotAboveOne);
    if (gcd(d1, d2) != 1) bad.push_back(QuadFormViolation::CoefficientsNotCoprime);
    if (gcd(k, 2 * d1 * d2) != 1) bad.push_back(QuadFormViolation::ModulusNotCoprime);

    if (!bad.empty()) return QuadFormResult(std::move(bad));
    return QuadFormResult(QuadFormInstance{d1, d2, k});
}

Int solution_characteristic(const Int& d1, const Int& k, const Int& x, const Int& y) {
    const Int inv_y = mod_inverse(y, k);  // throws when gcd(y, k) > 1
    const Int l = mod(-d1 * x * inv_y, k);
    if (l == 0)
        throw std::domain_error("solution_characteristic: residue 0, inputs violate invariants");
    return l;
}

CharacteristicNumber characteristic_number(const QuadFormInstance& inst,
                                           const QuadFormSolution& sol) {
    if (sol.z_val <= 0) throw std::domain_error("characteristic_number: Z must be positive");
    if (gcd(sol.x_val, sol.y_val) != 1)
        throw std::domain_error("characteristic_number: gcd(X, Y) != 1");
    const Int lhs = inst.d1 * sol.x_val * sol.x_val + inst.d2 * sol.y_val * sol.y_val;
    if (lhs != pow(inst.k, sol.z_val))
        throw std::domain_error("characteristic_number: (X, Y, Z) does not solve the form");
    return CharacteristicNumber{solution_characteristic(inst.d1, inst.k, sol.x_val, sol.y_val)};
}

bool same_class(const QuadFormInstance& inst, const CharacteristicNumber& a,
                const CharacteristicNumber& b) {
    return mod(a.value - b.value, inst.k) == 0 || mod(a.value + b.value, inst.k) == 0;
}

namespace {

/// Positive coprime solutions at one fixed exponent, X ascending.
std::vector<QuadFormSolution> solutions_at_z(const QuadFormInstance& inst, const Int& z) {
    std::vector<QuadFormSolution> out;
    const Int kz = pow(inst.k, z);
    Int x = 1;
    Int d1x2 = inst.d1;  // d1 * x^2, updated incrementally
    while (d1x2 < kz) {
        const Int rem = kz - d1x2;
        if (divides(inst.d2, rem)) {
            const Int y2 = rem / inst.d2;
            if (y2 > 0 && is_perfect_square(y2)) {
                Int y = isqrt(y2);
                if (gcd(x, y) == 1) out.push_back({x, std::move(y), z});
            }
        }
        d1x2 += inst.d1 * (2 * x + 1);
        x += 1;
    }
    return out;
}

}  // namespace

std::vector<QuadFormSolution> enumerate_solutions(const QuadFormInstance& inst, const Int& z_max) {
    if (z_max < 1) throw std::domain_error("enumerate_solutions: z_max must be >= 1");
    std::vector<QuadFormSolution> out;
    for (Int z = 1; z <= z_max; ++z) {
        auto at_z = solutions_at_z(inst, z);
        out.insert(out.end(), at_z.begin(), at_z.end());
    }
    return out;
}

std::optional<QuadFormSolution> least_solution_in_class(const QuadFormInstance& inst,
                                                        const CharacteristicNumber& l0,
                                                        const Int& z_cap) {
    if (z_cap < 1) throw std::domain_error("least_solution_in_class: z_cap must be >= 1");
    for (Int z = 1; z <= z_cap; ++z) {
        for (const auto& sol : solutions_at_z(inst, z)) {
            if (same_class(inst, characteristic_number(inst, sol), l0)) return sol;
        }
    }
    return std::nullopt;
}

std::pair<Int, Int> expand_odd_power(const Int& d1, const Int& d2, const Int& x1, const Int& y1,
                                     int lambda2, const Int& t) {
    if (t < 1 || is_even(t)) throw std::domain_error("expand_odd_power: t must be odd and positive");
    if (lambda2 != 1 && lambda2 != -1)
        throw std::domain_error("expand_odd_power: lambda2 must be +1 or -1");

    const unsigned long tu = to_ulong(t, "expand_odd_power: t");
    const unsigned long half = (tu - 1) / 2;
    const Int p = d1 * x1 * x1;    // (X1*sqrt(d1))^2
    const Int q = -d2 * y1 * y1;   // (Y1*sqrt(-d2))^2

    Int u = 0;
    Int v = 0;
    for (unsigned long i = 0; i <= half; ++i) {
        const Int weight = pow(p, half - i) * pow(q, i);
        u += binomial(tu, 2 * i) * weight;
        v += binomial(tu, 2 * i + 1) * weight;
    }
    u *= x1;
    v *= lambda2 * y1;
    return {std::move(u), std::move(v)};
}

std::optional<Representation> verify_representation(const QuadFormInstance& inst,
                                                    const QuadFormSolution& least,
                                                    const QuadFormSolution& sol) {
    const CharacteristicNumber l_least = characteristic_number(inst, least);
    const CharacteristicNumber l_sol = characteristic_number(inst, sol);
    if (!same_class(inst, l_least, l_sol))
        throw std::domain_error("verify_representation: solutions are not in one class");
    if (!divides(least.z_val, sol.z_val))
        throw std::domain_error("verify_representation: Z1 does not divide Z");
    const Int t = sol.z_val / least.z_val;
    if (is_even(t)) throw std::domain_error("verify_representation: quotient Z/Z1 is even");

    constexpr std::array<std::pair<int, int>, 4> signs{{{1, 1}, {1, -1}, {-1, 1}, {-1, -1}}};
    for (auto [lambda1, lambda2] : signs) {
        auto [u, v] = expand_odd_power(inst.d1, inst.d2, least.x_val, least.y_val, lambda2, t);
        if (lambda1 * u == sol.x_val && lambda1 * v == sol.y_val)
            return Representation{t, lambda1, lambda2, least};
    }
    return std::nullopt;
}

}  // namespace expdioph
