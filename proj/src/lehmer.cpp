#include "expdioph/lehmer.hpp"

#include <stdexcept>

namespace expdioph {

const char* to_string(PairError e) {
    switch (e) {
        case PairError::ZeroEntry: return "E or G zero";
        case PairError::EntriesNotCoprime: return "gcd(E,G) != 1";
        case PairError::Degenerate: return "degenerate pair";
        case PairError::SumNotSquare: return "P + Q != K^2";
        case PairError::BasesNotCoprime: return "gcd(P,Q) != 1";
    }
    return "?";
}

namespace {

/// Recurrence on raw (E, G); used before a pair object exists.
std::vector<Int> raw_sequence(const Int& e, const Int& g, unsigned long n_max) {
    std::vector<Int> seq;
    seq.reserve(n_max + 1);
    seq.emplace_back(0);
    if (n_max == 0) return seq;
    seq.emplace_back(1);
    for (unsigned long n = 2; n <= n_max; ++n) {
        if (n % 2 == 1)
            seq.push_back(e * seq[n - 1] - g * seq[n - 2]);
        else
            seq.push_back(seq[n - 1] - g * seq[n - 2]);
    }
    return seq;
}

constexpr unsigned long kDegeneracyWindow = 30;

}  // namespace

PairResult make_pair(const Int& e, const Int& g) {
    if (e == 0 || g == 0) return PairResult(PairError::ZeroEntry);
    if (gcd(e, g) != 1) return PairResult(PairError::EntriesNotCoprime);

    const Int f = e - 4 * g;
    // F == 0 means alpha == beta; otherwise a unit ratio shows up as a
    // zero term within the window.
    if (f == 0) return PairResult(PairError::Degenerate);
    const auto seq = raw_sequence(e, g, kDegeneracyWindow);
    for (unsigned long n = 1; n <= kDegeneracyWindow; ++n)
        if (seq[n] == 0) return PairResult(PairError::Degenerate);

    return PairResult(LehmerPair{e, g, f, +1});
}

Int lehmer_number(const LehmerPair& pair, const Int& n) {
    if (n < 0) throw std::domain_error("lehmer_number: n must be nonnegative");
    const unsigned long nu = to_ulong(n, "lehmer_number: n");
    return raw_sequence(pair.e_val, pair.g_val, nu).back();
}

std::vector<Int> lehmer_sequence(const LehmerPair& pair, const Int& n_max) {
    if (n_max < 0) throw std::domain_error("lehmer_sequence: n_max must be nonnegative");
    return raw_sequence(pair.e_val, pair.g_val, to_ulong(n_max, "lehmer_sequence: n_max"));
}

Int primitive_part(const LehmerPair& pair, const Int& n) {
    if (n <= 1) throw std::domain_error("primitive_part: n must exceed 1");
    const unsigned long nu = to_ulong(n, "primitive_part: n");
    const auto seq = raw_sequence(pair.e_val, pair.g_val, nu);

    Int m = abs(seq[nu]);
    auto strip = [&m](const Int& w) {
        if (w <= 1) return;
        for (Int g = gcd(m, w); g > 1; g = gcd(m, w)) m /= g;
    };
    strip(abs(pair.f_val));
    for (unsigned long i = 1; i < nu; ++i) strip(abs(seq[i]));
    return m;
}

bool has_primitive_divisor(const LehmerPair& pair, const Int& n) {
    return primitive_part(pair, n) > 1;
}

bool bhv_check(const LehmerPair& pair, const Int& n) {
    if (n <= 30) throw std::domain_error("bhv_check: criterion requires n > 30");
    return has_primitive_divisor(pair, n);
}

FamilyPairValues family_pair_values(const Int& p, const Int& q, const Int& k) {
    Int e = 4 * p;
    Int g = k * k;
    Int f = e - 4 * g;
    (void)q;
    return FamilyPairValues{std::move(e), std::move(g), std::move(f)};
}

PairResult pair_from_family(const Int& p, const Int& q, const Int& k) {
    if (p + q != k * k) return PairResult(PairError::SumNotSquare);
    if (gcd(p, q) != 1) return PairResult(PairError::BasesNotCoprime);

    const FamilyPairValues v = family_pair_values(p, q, k);
    PairResult result = make_pair(v.e, v.g);
    if (result.ok() && result.value().f_val != -4 * q)
        throw std::logic_error("pair_from_family: F != -4Q, implementation bug");
    return result;
}

}  // namespace expdioph
