#include "minrep/census.hpp"

#include <algorithm>

namespace minrep {

namespace {

std::uint64_t apply(Semantics op, std::uint64_t a, std::uint64_t b, std::uint64_t cap) {
    // Returns cap + 1 on overflow past cap.
    switch (op) {
    case Semantics::Add: return a > cap - std::min(b, cap) ? cap + 1 : a + b;
    case Semantics::Mul: return b != 0 && a > cap / b ? cap + 1 : a * b;
    default: {
        std::uint64_t r = 1;
        for (std::uint64_t i = 0; i < b; ++i) {
            if (a > 1 && r > cap / a) return cap + 1;
            r *= a;
            if (a == 1) break;
        }
        return r;
    }
    }
}

}  // namespace

TermCensus enumerate_values(const OperatorSet& ops, unsigned max_len, const CensusConfig& config) {
    TermCensus census;
    std::vector<std::vector<std::uint64_t>> values(max_len + 1);
    std::vector<BigNat> counts(max_len + 1);
    const auto binary = ops.binary_ops();
    for (unsigned k = 1; k <= max_len; ++k) {
        std::vector<std::uint64_t> vs;
        if (k == 1) {
            vs.push_back(1);
            counts[1] = 1;
        } else {
            if (ops.has_successor()) {
                counts[k] += counts[k - 1];
                for (auto v : values[k - 1]) vs.push_back(v + 1);
            }
            for (Semantics op : binary) {
                for (unsigned k1 = 1; k1 + 2 <= k; ++k1) {
                    const unsigned k2 = k - 1 - k1;
                    counts[k] += counts[k1] * counts[k2];
                    for (auto a : values[k1])
                        for (auto b : values[k2]) {
                            const auto v = apply(op, a, b, config.max_value);
                            if (v > config.max_value)
                                throw BudgetExceeded("census value exceeds the configured maximum at length " +
                                                     std::to_string(k));
                            vs.push_back(v);
                        }
                    if (vs.size() > config.max_values_per_length) {
                        std::sort(vs.begin(), vs.end());
                        vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
                        if (vs.size() > config.max_values_per_length)
                            throw BudgetExceeded("census value set exceeds the configured cap at length " +
                                                 std::to_string(k));
                    }
                }
            }
            std::sort(vs.begin(), vs.end());
            vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
        }
        CensusRow row;
        row.k = k;
        row.terms = counts[k];
        row.distinct_values = vs.size();
        row.max_value = vs.empty() ? 0 : vs.back();
        census.rows.push_back(row);
        for (auto v : vs) census.minimal_length.emplace(v, k);  // keeps the first (shortest) length
        values[k] = std::move(vs);
    }
    return census;
}

}  // namespace minrep
