#include <doctest.h>

#include "expdioph/sieve.hpp"

using namespace expdioph;

namespace {
const FamilyParams kEll11{11, 1, 3};
const FamilyParams kEll5{5, 1, 3};
}  // namespace

TEST_CASE("x parity: the mod-ell congruence keeps exactly odd exponents") {
    CHECK(x_parity_admissible(kEll11, 1));
    CHECK_FALSE(x_parity_admissible(kEll11, 2));
    CHECK(x_parity_admissible(kEll5, 7));
}

TEST_CASE("x parity equals oddness for every family with ell >= 5") {
    for (long ell = 5; ell <= 99; ell += 2) {
        const auto params = validate_params(ell, 1, 3);
        if (!params.ok()) continue;
        for (long x = 1; x <= 100; ++x) {
            CAPTURE(ell); CAPTURE(x);
            CHECK(x_parity_admissible(params.value(), x) == (x % 2 == 1));
        }
    }
}

TEST_CASE("y parity: the mod-3 residue keeps exactly odd y once x is odd") {
    CHECK(y_parity_admissible(kEll11, 1, 1));
    CHECK_FALSE(y_parity_admissible(kEll11, 1, 2));
    CHECK(y_parity_admissible(kEll11, 3, 5));

    for (long x = 1; x <= 25; x += 2)
        for (long y = 1; y <= 25; ++y) {
            CAPTURE(x); CAPTURE(y);
            CHECK(y_parity_admissible(kEll11, x, y) == (y % 2 == 1));
        }
}

TEST_CASE("y parity residue equals the literal power sum mod 3") {
    // The reduction (-1)^x + 2^y relies on 3 | r and 3 !| ell*m; spot
    // check it against A^x + B^y directly.
    for (const auto& params : {FamilyParams{11, 1, 3}, FamilyParams{7, 2, 6}, FamilyParams{25, 4, 9}}) {
        const Instance inst = build_instance(params);
        for (long x = 1; x <= 7; x += 2)
            for (long y = 1; y <= 7; ++y) {
                CAPTURE(params.ell.get_str()); CAPTURE(x); CAPTURE(y);
                const Int direct = mod(mod_pow(inst.a, x, 3) + mod_pow(inst.b, y, 3), 3);
                CHECK(y_parity_admissible(params, x, y) == (direct != 0));
            }
    }
}

TEST_CASE("even m fires the mod-2 contradiction for odd exponents") {
    CHECK(even_m_excludes(FamilyParams{5, 2, 3}, 1, 1));
    CHECK_FALSE(even_m_excludes(kEll11, 1, 1));  // m odd: lemma not applicable
    CHECK(even_m_excludes(FamilyParams{7, 4, 3}, 3, 1));

    for (long ell : {5L, 7L, 11L, 25L})
        for (long m : {2L, 4L, 8L, 10L})
            for (long x = 1; x <= 25; x += 2)
                for (long y = 1; y <= 25; y += 2) {
                    const auto params = validate_params(ell, m, 3);
                    REQUIRE(params.ok());
                    CAPTURE(ell); CAPTURE(m); CAPTURE(x); CAPTURE(y);
                    CHECK(even_m_excludes(params.value(), x, y));
                }
}

TEST_CASE("the truncated sum equals the power sum mod m^3 for odd x") {
    for (const auto& params :
         {FamilyParams{5, 2, 3}, FamilyParams{7, 4, 6}, FamilyParams{11, 5, 3},
          FamilyParams{13, 10, 9}, FamilyParams{25, 7, 12}}) {
        for (long x = 1; x <= 9; x += 2)
            for (long y = 1; y <= 9; ++y) {
                CAPTURE(params.ell.get_str()); CAPTURE(params.m.get_str()); CAPTURE(x); CAPTURE(y);
                CHECK(power_sum_mod_m3(params, x, y) == truncated_sum_mod_m3(params, x, y));
            }
    }
}

TEST_CASE("the reduced mod-m congruence matches the mod-m^3 statement") {
    // ell*m^2*(rx + (ell-r)y) ≡ 0 mod m^3 iff ell*(rx + (ell-r)y) ≡ 0 mod m.
    for (const auto& params : {FamilyParams{5, 2, 3}, FamilyParams{7, 5, 3}, FamilyParams{13, 8, 6}})
        for (long x = 1; x <= 9; ++x)
            for (long y = 1; y <= 9; ++y) {
                CAPTURE(params.ell.get_str()); CAPTURE(params.m.get_str()); CAPTURE(x); CAPTURE(y);
                CHECK((truncated_sum_mod_m3(params, x, y) == 0) ==
                      reduced_congruence_holds(params, x, y));
            }
}

TEST_CASE("sieve_candidate composes the lemmas in proof order") {
    const SieveVerdict trivial = sieve_candidate(kEll11, {1, 1, 2});
    CHECK(trivial.admissible);

    const SieveVerdict even_x = sieve_candidate(kEll11, {2, 1, 3});
    REQUIRE_FALSE(even_x.admissible);
    CHECK(even_x.reason == RejectReason::Lemma31XEven);

    const SieveVerdict even_y = sieve_candidate(kEll11, {1, 2, 3});
    REQUIRE_FALSE(even_y.admissible);
    CHECK(even_y.reason == RejectReason::Lemma31YEven);
}

TEST_CASE("the trivial solution survives the even-m sieve, nontrivial ones do not") {
    const FamilyParams even_m{5, 2, 3};
    CHECK(sieve_candidate(even_m, {1, 1, 2}).admissible);

    const SieveVerdict nontrivial = sieve_candidate(even_m, {3, 1, 4});
    REQUIRE_FALSE(nontrivial.admissible);
    CHECK(nontrivial.reason == RejectReason::Lemma32EvenM);
}
