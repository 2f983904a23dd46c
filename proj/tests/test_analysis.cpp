#include "golden.hpp"
#include "minrep/analysis.hpp"
#include "minrep/census.hpp"
#include "minrep/number_theory.hpp"

#include <doctest.h>

#include <map>

using namespace minrep;

namespace {

OperatorSet ops(const char* id) { return OperatorSet::from_id(id); }

// Enumerates every glyph string of length k and keeps those that parse: an
// oracle for l(k) and the value sets that shares nothing with the census.
std::pair<std::uint64_t, std::map<std::uint64_t, unsigned>> brute_strings(const OperatorSet& o, unsigned k) {
    std::uint64_t count = 0;
    std::map<std::uint64_t, unsigned> values;
    std::vector<std::size_t> digits(k, 0);
    const auto& syms = o.symbols();
    for (;;) {
        std::string s;
        for (auto d : digits) s.push_back(syms[d].glyph);
        try {
            const Term t = parse(s, o);
            ++count;
            values.emplace(*evaluate_small(t), k);
        } catch (const ParseError&) {
        }
        std::size_t i = 0;
        while (i < k && ++digits[i] == syms.size()) digits[i++] = 0;
        if (i == k) break;
    }
    return {count, values};
}

}  // namespace

TEST_CASE("ugly numbers") {
    const auto table = build_table(ops("1S*"), 16'000);
    const auto ugly = ugly_numbers(table);
    REQUIRE(ugly.size() == 40);
    CHECK(ugly[7].n == 10);
    CHECK(ugly[7].complexity == 8);
    CHECK_FALSE(ugly[7].is_prime);
    CHECK(ugly[14].n == 43);
    CHECK(ugly[14].is_prime);
    for (unsigned k = 1; k <= 7; ++k) CHECK(ugly[k - 1].n == k);
    for (const auto& u : ugly) {
        CHECK(evaluate(u.witness) == u.n);
        CHECK(u.witness.length() == u.complexity);
    }
    // Published rows through k = 40.
    for (const auto& row : golden::kUglyRows) {
        if (row.complexity > 40) break;
        const auto& u = ugly[row.complexity - 1];
        CHECK(u.n == row.n);
        CHECK(u.is_prime == row.prime);
    }
}

TEST_CASE("efficient numbers are the maxima") {
    const auto e = efficient_numbers(max_table(ops("1S*"), 49));
    CHECK(e[0].n == 1);
    CHECK(e[7].n == 12);
    CHECK(e[48].n == 1048576);
    const auto table = build_table(ops("1S*"), 1'100'000);
    // No larger number shares the complexity of an efficient number.
    for (const auto& en : e) {
        const auto n = en.n.convert_to<std::uint64_t>();
        for (std::uint64_t m = n + 1; m <= std::min<std::uint64_t>(table.limit(), 4 * n + 8); ++m)
            REQUIRE(table[m] > en.k);
    }
}

TEST_CASE("census against string enumeration") {
    for (const char* id : {"1S", "1S+", "1S*", "1S+*"}) {
        const auto o = ops(id);
        const auto census = enumerate_values(o, 8);
        for (unsigned k = 1; k <= 8; ++k) {
            const auto [count, values] = brute_strings(o, k);
            CHECK(census.rows[k - 1].terms == count);
            CHECK(census.rows[k - 1].distinct_values == values.size());
            CHECK(census.rows[k - 1].max_value == values.rbegin()->first);
        }
    }
}

TEST_CASE("census reference facts") {
    const auto s = enumerate_values(ops("1S"), 14);
    for (const auto& row : s.rows) {
        CHECK(row.terms == 1);
        CHECK(row.distinct_values == 1);
        CHECK(row.max_value == row.k);
    }
    const auto m = enumerate_values(ops("1S*"), 14);
    CHECK(m.rows[7].max_value == 12);
    for (const auto& row : m.rows) CHECK(row.terms < boost::multiprecision::pow(BigNat(3), row.k));
    CHECK(m.minimal_length.at(12) == 8);
    CHECK(m.minimal_length.at(11) == 9);
    CHECK_THROWS_AS(enumerate_values(ops("1S^"), 14), BudgetExceeded);
    CensusConfig tiny;
    tiny.max_values_per_length = 5;
    CHECK_THROWS_AS(enumerate_values(ops("1S+*"), 12, tiny), BudgetExceeded);
}

TEST_CASE("histogram") {
    const auto table = build_table(ops("1S*"), 1000);
    const auto rows = histogram(table);
    CHECK(rows[0].count == 1);
    CHECK(rows[6].count == 3);  // {7, 8, 9}
    CHECK(rows[7].count == 2);  // {10, 12}; c(11) = 9
    CHECK(rows[8].count == 4);  // {11, 13, 15, 16}
    CHECK(rows[7].complete);
    // v(M(k)) <= 1000 exactly for k <= 23 (M(23) = 768, M(24) = 1024).
    for (const auto& r : rows) CHECK(r.complete == (r.k <= 23));
    std::uint64_t total = 0;
    for (const auto& r : rows) total += r.count;
    CHECK(total == 1000);
}
