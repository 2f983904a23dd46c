#include "golden.hpp"
#include "minrep/extremal.hpp"

#include <doctest.h>

using namespace minrep;

namespace {
const OperatorSet kMul = OperatorSet::from_id("1S*");

// Brute force over every term of length k: the largest value.
std::uint64_t brute_max(const OperatorSet& ops, unsigned k) {
    std::vector<std::vector<std::uint64_t>> by_len(k + 1);
    by_len[1] = {1};
    for (unsigned len = 2; len <= k; ++len) {
        for (auto v : by_len[len - 1]) by_len[len].push_back(v + 1);
        for (unsigned l = 1; l + 2 <= len; ++l)
            for (auto a : by_len[l])
                for (auto b : by_len[len - 1 - l]) {
                    if (ops.contains(Semantics::Add)) by_len[len].push_back(a + b);
                    if (ops.contains(Semantics::Mul)) by_len[len].push_back(a * b);
                }
        std::sort(by_len[len].begin(), by_len[len].end());
        by_len[len].erase(std::unique(by_len[len].begin(), by_len[len].end()), by_len[len].end());
    }
    return by_len[k].back();
}
}  // namespace

TEST_CASE("maxima agree with brute force on short lengths") {
    for (const char* id : {"1S", "1S+", "1S*", "1S+*"}) {
        const auto ops = OperatorSet::from_id(id);
        const auto rec = max_table(ops, 13);
        for (unsigned k = 1; k <= 13; ++k) {
            CHECK(*rec[k - 1].value == brute_max(ops, k));
            CHECK(rec[k - 1].witness->length() == k);
            CHECK(evaluate(*rec[k - 1].witness) == *rec[k - 1].value);
        }
    }
}

TEST_CASE("reference maxima") {
    const auto rec = max_table(kMul, 60);
    CHECK(rec[0].value == BigNat(1));
    CHECK(rec[7].value == BigNat(12));
    CHECK(rec[48].value == BigNat(1048576));
    for (std::size_t i = 1; i < rec.size(); ++i) CHECK(*rec[i].value > *rec[i - 1].value);
}

TEST_CASE("published maxima reproduce including witness shape") {
    const auto rec = max_table(kMul, 54);
    std::size_t exact_strings = 0;
    for (std::size_t i = 0; i < 54; ++i) {
        const auto& row = golden::kMaxRows[i];
        CHECK(*rec[i].value == row.value);
        CHECK(rec[i].witness->length() == i + 1);
        exact_strings += serialize(*rec[i].witness) == row.witness;
    }
    CHECK(exact_strings == 54);
}

TEST_CASE("closed form") {
    CHECK(closed_form_decomposition(11) == std::pair<unsigned, unsigned>{3, 3});
    CHECK(closed_form_decomposition(14) == std::pair<unsigned, unsigned>{3, 0});
    CHECK(closed_form_max(11) == 27);
    CHECK(closed_form_max(14) == 64);
    CHECK(closed_form_max(54) == 4194304);
    CHECK_THROWS_AS(closed_form_max(10), KTooSmall);
    const auto rec = max_table(kMul, 120);
    for (unsigned k = 11; k <= 120; ++k) CHECK(*rec[k - 1].value == closed_form_max(k));
}

TEST_CASE("structure of maximal terms") {
    const auto rec = max_table(kMul, 60);
    CHECK(check_structure(rec[7]).pass());
    CHECK(check_structure(rec[7]).factors == std::vector<BigNat>{3, 4});
    CHECK(check_structure(rec[9]).pass());
    CHECK(check_structure(rec[9]).factors == std::vector<BigNat>{4, 5});
    for (const auto& r : rec) CHECK(check_structure(r).pass());
    for (const auto& r : max_table(OperatorSet::from_id("1S+*"), 60)) CHECK(check_structure(r).pass());

    ExtremalRecord six;
    six.k = 10;
    six.witness = parse("*SSSSS1SS1", kMul);
    six.value = 18;
    const auto bad = check_structure(six);
    CHECK_FALSE(bad.pass());
    CHECK(bad.violations.front() == "factor 6 present");

    ExtremalRecord threes;
    threes.k = 19;
    threes.witness = parse("*SS1*SS1*SS1*SS1SS1", kMul);
    threes.value = 243;
    CHECK_FALSE(check_structure(threes).pass());

    ExtremalRecord twos;
    twos.k = 5;
    twos.witness = parse("*S1S1", kMul);
    twos.value = 4;
    CHECK_FALSE(check_structure(twos).pass());

    ExtremalRecord late_five;
    late_five.k = 15;
    late_five.witness = parse("*SS1*SS1SSSS1", kMul);
    late_five.value = 45;
    CHECK_FALSE(check_structure(late_five).pass());
}

TEST_CASE("factor chain flattening") {
    const auto f = factor_chain(parse("*SS1*SSS1SSS1", kMul));
    REQUIRE(f.size() == 3);
    CHECK(serialize(f[0]) == "SS1");
    CHECK(serialize(f[2]) == "SSS1");
    CHECK(factor_chain(parse("SSSSS1", kMul)).size() == 1);
}

TEST_CASE("exponentiation maxima truncate at the digit cap") {
    const auto pow = OperatorSet::from_id("1S^");
    const auto rec = max_table(pow, 16, 1000);
    CHECK(*rec[5].value == 9);   // ^SS1S1 beats SSSSS1 and ^S1SS1
    CHECK(serialize(*rec[5].witness) == "^SS1S1");
    // Exhaustive enumeration of all terms up to 11 symbols gives these maxima.
    const std::vector<BigNat> brute{1, 2, 3, 4, 5, 9, 27, 81, 512, 134217728,
                                    BigNat("2417851639229258349412352")};
    for (std::size_t i = 0; i < brute.size(); ++i) CHECK(*rec[i].value == brute[i]);
    bool saw_truncated = false;
    for (const auto& r : rec) {
        if (r.truncated()) {
            saw_truncated = true;
            CHECK(r.note == "3^^b-dominated");
            CHECK_FALSE(r.witness.has_value());
        } else {
            CHECK(saw_truncated == false);  // once truncated, always truncated
            CHECK(evaluate(*r.witness, 1000) == *r.value);
        }
    }
    CHECK(saw_truncated);
}
