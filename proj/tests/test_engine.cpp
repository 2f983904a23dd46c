#include "minrep/bounds.hpp"
#include "minrep/engine.hpp"

#include <doctest.h>

using namespace minrep;

namespace {
OperatorSet ops(const char* id) { return OperatorSet::from_id(id); }
}  // namespace

TEST_CASE("successor-only and additive sets give c(n) = n") {
    const auto s = build_table(ops("1S"), 20);
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(s[n] == n);
    const auto sp = build_table(ops("1S+"), 300);
    for (std::uint64_t n = 1; n <= 300; ++n) CHECK(sp[n] == n);
    CHECK(serialize(witness(s, 5)) == "SSSS1");
}

TEST_CASE("reference values") {
    const auto mul = build_table(ops("1S*"), 1000);
    const auto both = build_table(ops("1S+*"), 1000);
    CHECK(both.complexity_of(12) == 8);
    CHECK(mul.complexity_of(12) == 8);
    CHECK(mul.complexity_of(10) == 8);
    CHECK(mul.complexity_of(7) == 7);
    CHECK(mul.complexity_of(1) == 1);
    CHECK(mul.complexity_of(64) == 14);
    CHECK(mul.complexity_of(11) == 9);
    CHECK(serialize(witness(mul, 1)) == "1");
    // Successor wins the tie against *S1SSSS1.
    CHECK(serialize(witness(mul, 10)) == "S*SS1SS1");
    CHECK(serialize(witness(mul, 12)) == "*SS1SSS1");
    CHECK(mul.provenance(1).rule == Rule::Base);
}

TEST_CASE("errors") {
    const auto t = build_table(ops("1S*"), 50);
    CHECK_THROWS_AS(t.complexity_of(0), TableError);
    CHECK_THROWS_AS(t.complexity_of(51), TableError);
    CHECK_THROWS_AS(witness(t, 51), TableError);
    try {
        t.complexity_of(51);
    } catch (const TableError& e) {
        CHECK(e.kind() == TableError::Kind::OutOfRange);
    }
    EngineConfig tight;
    tight.memory_budget_bytes = 1000;
    CHECK_THROWS_AS(build_table(ops("1S*"), 10'000, tight), TableError);
    CHECK_THROWS_AS(build_table(ops("1S*"), 0), std::invalid_argument);
    // c(n) = n overflows 16-bit lengths.
    CHECK_THROWS_AS(build_table(ops("1S"), 70'000), TableError);
}

TEST_CASE("sets without a successor leave values unreachable") {
    const auto m = build_table(ops("1*"), 30);
    CHECK(m.complexity_of(1) == 1);
    for (std::uint64_t n = 2; n <= 30; ++n) {
        CHECK_FALSE(m.reachable(n));
        try {
            m.complexity_of(n);
        } catch (const TableError& e) {
            CHECK(e.kind() == TableError::Kind::Unreachable);
        }
        CHECK(m.provenance(n).rule == Rule::Absent);
    }
    // {1,+}: 2n-1 symbols, every value reachable.
    const auto a = build_table(ops("1+"), 40);
    for (std::uint64_t n = 1; n <= 40; ++n) CHECK(a[n] == 2 * n - 1);
    // {1,+,*}: 4 = *+11+11 (7 symbols) ties with +1+1+11 (7); 6 = *+11+1+11.
    const auto am = build_table(ops("1+*"), 10);
    CHECK(am[2] == 3);
    CHECK(am[6] == 9);
}

TEST_CASE("power splits") {
    const auto p = build_table(ops("1S^"), 100'000);
    CHECK(p.complexity_of(81) == 8);   // ^SS1SSS1
    CHECK(p.complexity_of(27) == 7);   // ^SS1SS1
    CHECK(p.complexity_of(4) == 4);
    CHECK(serialize(witness(p, 27)) == "^SS1SS1");
    CHECK(evaluate(witness(p, 65536)) == 65536);
}

TEST_CASE("witness soundness and the c(n) <= n corollary") {
    for (const char* id : {"1S*", "1S+*", "1S^"}) {
        const auto t = build_table(ops(id), 20'000);
        for (std::uint64_t n = 1; n <= t.limit(); ++n) {
            const Term w = witness(t, n);
            REQUIRE(evaluate_small(w) == n);
            REQUIRE(w.length() == t[n]);
            REQUIRE(t[n] <= n);
        }
    }
}

TEST_CASE("pruning and resumption do not change the table") {
    EngineConfig off;
    off.prune = false;
    PruneStats stats;
    EngineConfig on;
    on.stats = &stats;
    const auto pruned = build_table(ops("1S+*"), 10'000, on);
    const auto full = build_table(ops("1S+*"), 10'000, off);
    CHECK(pruned == full);
    CHECK(stats.max_candidates < 100);

    const auto part = build_table(ops("1S+*"), 3'333);
    CHECK(extend_table(part, 10'000) == pruned);
    const auto mul = build_table(ops("1S*"), 4'000);
    CHECK(extend_table(build_table(ops("1S*"), 1), 4'000) == mul);
    CHECK(extend_table(mul, 4'000) == mul);
    const auto pw = build_table(ops("1S^"), 70'000);
    CHECK(extend_table(build_table(ops("1S^"), 15), 70'000) == pw);
    CHECK_THROWS(extend_table(mul, 10));
}

TEST_CASE("progress callback fires at the configured interval") {
    std::vector<std::uint64_t> seen;
    EngineConfig cfg;
    cfg.progress_interval = 1000;
    cfg.progress = [&](std::uint64_t done, std::uint64_t) { seen.push_back(done); };
    build_table(ops("1S*"), 3500, cfg);
    CHECK(seen == std::vector<std::uint64_t>{1000, 2000, 3000});
}
