#pragma once

#include "minrep/engine.hpp"
#include "minrep/extremal.hpp"

#include <cstdint>
#include <vector>

namespace minrep {

/// Smallest n of its complexity class.
struct UglyRecord {
    std::uint64_t n = 0;
    unsigned complexity = 0;
    Term witness = Term::one();
    bool is_prime = false;
};

/// Ugly numbers for every complexity realized in the table, ascending
/// in k. With S available, every emitted entry is exact: a realized k has
/// its first occurrence inside the table by construction.
std::vector<UglyRecord> ugly_numbers(const ComplexityTable& table);

struct EfficientNumber {
    unsigned k = 0;
    BigNat n;
};

/// n_e(k) = v(M(k)); truncated records are skipped.
std::vector<EfficientNumber> efficient_numbers(const std::vector<ExtremalRecord>& records);

struct HistogramRow {
    unsigned k = 0;
    std::uint64_t count = 0;
    /// v(M(k)) <= limit, so every n of complexity k is inside the table.
    bool complete = false;
};

std::vector<HistogramRow> histogram(const ComplexityTable& table);

}  // namespace minrep
