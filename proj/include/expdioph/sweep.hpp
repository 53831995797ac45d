/**
 * @file sweep.hpp
 * @brief Parameter-grid sweeps with deterministic aggregation.
 *
 * Grid entries are generated in lexicographic order, certified by a
 * worker pool, and aggregated by grid index, so reports do not depend
 * on thread count or completion order.
 */
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "expdioph/certifier.hpp"

namespace expdioph {

/// Inclusive integer range, the CLI's `a..b`.
struct GridRange {
    Int lo;
    Int hi;
};

struct SweepEntry {
    Int p = 0;  // corollary input; 0 on certify sweeps
    Int ell = 0;
    Int m = 0;
    Int r = 0;
    std::vector<std::string> skip_reasons;  // nonempty => skipped
    std::optional<Certificate> cert;
    long long elapsed_ns = 0;

    bool skipped() const { return !cert.has_value(); }
};

struct SweepReport {
    std::string command;  // "certify" or "corollary"
    Int z_max;
    std::vector<SweepEntry> entries;

    bool any_falsified() const;
};

/// Worker count: EXPDIOPH_THREADS when set (must be a positive
/// integer, otherwise std::runtime_error), else hardware concurrency.
unsigned thread_count_from_env();

/// Certifies every tuple of the Cartesian grid; tuples violating the
/// side conditions are reported as skipped with the failed predicates.
SweepReport certify_sweep(const GridRange& ell, const GridRange& m, const GridRange& r,
                          const Int& z_max, unsigned threads);

/// Maps each (p, m) through the corollary and certifies the result;
/// entries the mapping rejects are skipped with the mapping error.
SweepReport corollary_sweep(const GridRange& p, const GridRange& m, const Int& z_max,
                            unsigned threads);

}  // namespace expdioph
