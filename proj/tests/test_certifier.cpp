#include <doctest.h>

#include "expdioph/certifier.hpp"
#include "expdioph/quadform.hpp"
#include "expdioph/sieve.hpp"

using namespace expdioph;

TEST_CASE("brute force finds exactly the trivial solution on the worked families") {
    const auto big = brute_force_solutions(Instance{32, 89, 11}, 10);
    REQUIRE(big.size() == 1);
    CHECK(big[0] == Solution{1, 1, 2});

    // Below the applicability bound the search still comes back trivial.
    const auto small = brute_force_solutions(Instance{14, 11, 5}, 10);
    REQUIRE(small.size() == 1);
    CHECK(small[0] == Solution{1, 1, 2});

    CHECK_THROWS_AS(brute_force_solutions(Instance{32, 89, 11}, 1), std::domain_error);
}

TEST_CASE("every family instance contains (1,1,2) at z_max = 2") {
    for (long ell = 5; ell <= 29; ell += 2)
        for (long m = 1; m <= 4; ++m)
            for (long r = 3; r < ell; r += 3) {
                const auto params = validate_params(ell, m, r);
                if (!params.ok()) continue;
                const auto sols = brute_force_solutions(build_instance(params.value()), 2);
                CAPTURE(ell); CAPTURE(m); CAPTURE(r);
                REQUIRE(sols.size() == 1);
                CHECK(sols[0] == Solution{1, 1, 2});
            }
}

TEST_CASE("replay on the flagship family passes every step") {
    const Certificate cert = replay_proof({11, 1, 3}, 8);
    CHECK(cert.verdict == Verdict::CertifiedUnique);
    CHECK(cert.applicable);
    REQUIRE(cert.steps.size() == 8);
    for (const auto& step : cert.steps) {
        CAPTURE(step.name);
        CHECK(step.pass);
    }
    REQUIRE(cert.oracle_solutions.size() == 1);
    CHECK(cert.oracle_solutions[0] == Solution{1, 1, 2});
}

TEST_CASE("families under the bound are reported, not certified") {
    const Certificate cert = replay_proof({5, 1, 3}, 8);
    CHECK(cert.verdict == Verdict::NotApplicable);
    CHECK_FALSE(cert.applicable);
    REQUIRE(cert.oracle_solutions.size() == 1);
    CHECK(cert.oracle_solutions[0] == Solution{1, 1, 2});
    // The applicability step itself is the failing one.
    CHECK_FALSE(cert.steps[1].pass);
}

TEST_CASE("invalid params are rejected up front") {
    CHECK_THROWS_AS(replay_proof({9, 1, 3}, 8), std::domain_error);
    CHECK_THROWS_AS(replay_proof({11, 1, 3}, 1), std::domain_error);
}

TEST_CASE("even-m families certify through the parity branch") {
    const Certificate cert = replay_proof({5, 2, 3}, 8);
    CHECK(cert.verdict == Verdict::CertifiedUnique);
    for (const auto& step : cert.steps) {
        CAPTURE(step.name);
        CHECK(step.pass);
    }
}

TEST_CASE("the divisibility gate of the contradiction schema") {
    const Instance inst{32, 89, 11};
    CHECK(hypothetical_t_bound(inst, 89));
    CHECK(hypothetical_t_bound(inst, 89 * 3));
    CHECK_FALSE(hypothetical_t_bound(inst, 33));
    CHECK_THROWS_AS(hypothetical_t_bound(inst, 96), std::domain_error);
    CHECK_THROWS_AS(hypothetical_t_bound(inst, 1), std::domain_error);
}

TEST_CASE("the least-solution step concurs with an independent quadform run") {
    const Certificate cert = replay_proof({11, 1, 3}, 8);
    const auto least = least_solution_in_class(QuadFormInstance{32, 89, 11},
                                               CharacteristicNumber{1}, 6);
    REQUIRE(least.has_value());
    CHECK(*least == QuadFormSolution{1, 1, 2});
    CHECK(cert.steps[4].name == "least_solution");
    CHECK(cert.steps[4].pass);
}

TEST_CASE("verdict invariants over a small grid") {
    for (long ell = 5; ell <= 25; ell += 2)
        for (long m = 1; m <= 5; ++m)
            for (long r = 3; r < ell; r += 3) {
                const auto params = validate_params(ell, m, r);
                if (!params.ok()) continue;
                const Certificate cert = replay_proof(params.value(), 6);
                CAPTURE(ell); CAPTURE(m); CAPTURE(r);
                CHECK(cert.verdict != Verdict::Falsified);
                if (cert.verdict == Verdict::CertifiedUnique) {
                    CHECK(cert.applicable);
                    for (const auto& step : cert.steps) CHECK(step.pass);
                    REQUIRE(cert.oracle_solutions.size() == 1);
                    CHECK(cert.oracle_solutions[0] == Solution{1, 1, 2});
                }
                // Lemma 3.1 consistency: oracle output survives the sieves.
                for (const auto& sol : cert.oracle_solutions) {
                    CHECK(sieve_candidate(params.value(), sol).admissible);
                    CHECK(is_odd(sol.x));
                    CHECK(is_odd(sol.y));
                }
            }
}

TEST_CASE("certificates are deterministic") {
    const Certificate a = replay_proof({13, 2, 6}, 8);
    const Certificate b = replay_proof({13, 2, 6}, 8);
    REQUIRE(a.steps.size() == b.steps.size());
    for (size_t i = 0; i < a.steps.size(); ++i) {
        CHECK(a.steps[i].name == b.steps[i].name);
        CHECK(a.steps[i].anchor == b.steps[i].anchor);
        CHECK(a.steps[i].pass == b.steps[i].pass);
        CHECK(a.steps[i].detail == b.steps[i].detail);
    }
    CHECK(a.verdict == b.verdict);
    CHECK(a.oracle_solutions == b.oracle_solutions);
}
