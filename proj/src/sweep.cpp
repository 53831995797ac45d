#include "expdioph/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <stdexcept>
#include <thread>

namespace expdioph {

bool SweepReport::any_falsified() const {
    for (const auto& e : entries)
        if (e.cert && e.cert->verdict == Verdict::Falsified) return true;
    return false;
}

unsigned thread_count_from_env() {
    const char* env = std::getenv("EXPDIOPH_THREADS");
    if (env == nullptr || *env == '\0') {
        unsigned hw = std::thread::hardware_concurrency();
        return hw == 0 ? 1 : hw;
    }
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || v < 1)
        throw std::runtime_error(std::string("EXPDIOPH_THREADS must be a positive integer, got: ") +
                                 env);
    return static_cast<unsigned>(v);
}

namespace {

void parallel_for(size_t n, unsigned threads, const std::function<void(size_t)>& body) {
    if (threads <= 1 || n <= 1) {
        for (size_t i = 0; i < n; ++i) body(i);
        return;
    }
    std::atomic<size_t> next{0};
    auto worker = [&] {
        for (size_t i = next.fetch_add(1); i < n; i = next.fetch_add(1)) body(i);
    };
    std::vector<std::thread> pool;
    const unsigned count = static_cast<unsigned>(std::min<size_t>(threads, n));
    pool.reserve(count);
    for (unsigned t = 0; t < count; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
}

void certify_entry(SweepEntry& entry, const Int& z_max) {
    const auto start = std::chrono::steady_clock::now();
    if (entry.skip_reasons.empty())
        entry.cert = replay_proof(FamilyParams{entry.ell, entry.m, entry.r}, z_max);
    const auto stop = std::chrono::steady_clock::now();
    entry.elapsed_ns = std::chrono::duration_cast<std::chrono::nanoseconds>(stop - start).count();
}

}  // namespace

SweepReport certify_sweep(const GridRange& ell, const GridRange& m, const GridRange& r,
                          const Int& z_max, unsigned threads) {
    SweepReport report{"certify", z_max, {}};
    for (Int le = ell.lo; le <= ell.hi; ++le)
        for (Int mm = m.lo; mm <= m.hi; ++mm)
            for (Int rr = r.lo; rr <= r.hi; ++rr) {
                SweepEntry entry;
                entry.ell = le;
                entry.m = mm;
                entry.r = rr;
                const ParamResult check = validate_params(le, mm, rr);
                if (!check.ok())
                    for (auto v : check.error()) entry.skip_reasons.push_back(to_string(v));
                report.entries.push_back(std::move(entry));
            }

    parallel_for(report.entries.size(), threads,
                 [&](size_t i) { certify_entry(report.entries[i], z_max); });
    return report;
}

SweepReport corollary_sweep(const GridRange& p, const GridRange& m, const Int& z_max,
                            unsigned threads) {
    SweepReport report{"corollary", z_max, {}};
    for (Int pp = p.lo; pp <= p.hi; ++pp)
        for (Int mm = m.lo; mm <= m.hi; ++mm) {
            SweepEntry entry;
            entry.p = pp;
            entry.m = mm;
            const CorollaryResult mapped = map_corollary(pp, mm);
            if (mapped.ok()) {
                entry.ell = mapped.value().ell;
                entry.r = mapped.value().r;
            } else {
                for (auto v : mapped.error()) entry.skip_reasons.push_back(to_string(v));
            }
            report.entries.push_back(std::move(entry));
        }

    parallel_for(report.entries.size(), threads,
                 [&](size_t i) { certify_entry(report.entries[i], z_max); });
    return report;
}

}  // namespace expdioph
