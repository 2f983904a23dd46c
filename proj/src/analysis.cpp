#include "minrep/analysis.hpp"

#include "minrep/number_theory.hpp"

namespace minrep {

std::vector<UglyRecord> ugly_numbers(const ComplexityTable& table) {
    const unsigned max_c = table.max_complexity();
    std::vector<std::uint64_t> first(max_c + 1, 0);
    for (std::uint64_t n = 1; n <= table.limit(); ++n) {
        const unsigned c = table[n];
        if (c != 0 && first[c] == 0) first[c] = n;
    }
    std::vector<UglyRecord> out;
    for (unsigned k = 1; k <= max_c; ++k) {
        if (first[k] == 0) continue;
        out.push_back({first[k], k, witness(table, first[k]), is_prime(first[k])});
    }
    return out;
}

std::vector<EfficientNumber> efficient_numbers(const std::vector<ExtremalRecord>& records) {
    std::vector<EfficientNumber> out;
    for (const auto& r : records)
        if (r.value) out.push_back({r.k, *r.value});
    return out;
}

std::vector<HistogramRow> histogram(const ComplexityTable& table) {
    const unsigned max_c = table.max_complexity();
    std::vector<HistogramRow> rows(max_c);
    for (unsigned k = 1; k <= max_c; ++k) rows[k - 1].k = k;
    for (std::uint64_t n = 1; n <= table.limit(); ++n)
        if (table[n] != 0) ++rows[table[n] - 1].count;
    // A small digit cap suffices: anything truncated is far above the limit.
    const auto maxima = max_table(table.ops(), max_c, 64);
    for (unsigned k = 1; k <= max_c; ++k) {
        const auto& m = maxima[k - 1];
        rows[k - 1].complete = m.value && *m.value <= table.limit();
    }
    return rows;
}

}  // namespace minrep
