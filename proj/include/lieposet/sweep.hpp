#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "lieposet/io.hpp"

namespace lieposet {

struct SweepRow {
    int n = 0;
    int classes = 0;
    int contact = 0;
    int frobenius = 0;
    int neither = 0;
    int discrepancies = 0;
};

struct SweepReport {
    int max_n = 0;
    std::uint64_t seed = 0;
    int trials = 0;
    std::vector<SweepRow> rows;
    std::vector<std::string> findings;  // one line per discrepancy

    int discrepancies() const;
};

/// Every height <= 2 class with 1 <= n <= max_n, cross-checked: rank index
/// against the formula, Frobenius test against index 0, classifier verdicts
/// against verified forms and against sampling, acyclicity of contact posets.
/// Per-poset seeds derive from `seed` and the enumeration position, so the
/// report is the same for any thread count (0 means hardware concurrency).
SweepReport sweep(int max_n, std::uint64_t seed, int trials, unsigned threads = 0);

Json sweep_to_json(const SweepReport& r);
std::string sweep_to_text(const SweepReport& r);

}  // namespace lieposet
