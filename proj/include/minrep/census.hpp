#pragma once

#include "minrep/bignum.hpp"
#include "minrep/operator_set.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

namespace minrep {

class BudgetExceeded : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct CensusRow {
    unsigned k = 0;
    BigNat terms;                   ///< l(k): number of length-k terms
    std::uint64_t distinct_values = 0;
    std::uint64_t max_value = 0;
};

/// Exhaustive composition of all terms up to max_len symbols. Independent
/// of the per-n table engine: it builds value sets by length, never asks
/// for the cheapest representation of a given n.
struct TermCensus {
    std::vector<CensusRow> rows;                      ///< k = 1..max_len
    std::map<std::uint64_t, unsigned> minimal_length;  ///< value -> shortest length
};

struct CensusConfig {
    std::size_t max_values_per_length = 20'000'000;
    /// Values above this are treated as budget overflow (1S^ grows fast).
    std::uint64_t max_value = std::uint64_t{1} << 62;
};

TermCensus enumerate_values(const OperatorSet& ops, unsigned max_len, const CensusConfig& config = {});

}  // namespace minrep
