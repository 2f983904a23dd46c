#include "minrep/bounds.hpp"

#include "minrep/number_theory.hpp"

#include <algorithm>
#include <cmath>

namespace minrep {

double gamma_constant() {
    static const double gamma = [] {
        // Newton on g(w) = ln w - 1 - 1/w, which is increasing for w > 0.
        double w = 3.5;
        for (int i = 0; i < 64; ++i) {
            const double g = std::log(w) - 1.0 - 1.0 / w;
            const double dg = 1.0 / w + 1.0 / (w * w);
            const double next = w - g / dg;
            if (next == w) break;
            w = next;
        }
        return w;
    }();
    return gamma;
}

double gamma_lower_bound(std::uint64_t n) {
    const double g = gamma_constant();
    return (g + 1.0) * std::log(static_cast<double>(n)) / std::log(g) - 1.0;
}

double base4_lower_bound(std::uint64_t n) { return 5.0 * std::log2(static_cast<double>(n)) / 2.0 - 1.0; }

double base4_upper_bound(std::uint64_t n) { return 8.0 * std::log2(static_cast<double>(n)) / 2.0 + 2.0; }

double tower_lower_bound(std::uint64_t n) { return 4.0 * logstar3(n) - 1.0; }

namespace {

bool subset_of(const OperatorSet& ops, std::initializer_list<Semantics> allowed) {
    return std::all_of(ops.symbols().begin(), ops.symbols().end(), [&](const Symbol& s) {
        return std::find(allowed.begin(), allowed.end(), s.semantics) != allowed.end();
    });
}

// Compares 2^lhs_exp against n^power, exactly.
int compare_pow2_with_power(unsigned lhs_exp, std::uint64_t n, unsigned power) {
    const double diff = static_cast<double>(lhs_exp) - power * std::log2(static_cast<double>(n));
    if (diff > 1e-6) return 1;
    if (diff < -1e-6) return -1;
    const BigNat lhs = BigNat(1) << lhs_exp;
    const BigNat rhs = boost::multiprecision::pow(BigNat(n), power);
    return lhs < rhs ? -1 : (lhs == rhs ? 0 : 1);
}

}  // namespace

double lower_bound(const OperatorSet& ops, std::uint64_t n) {
    using enum Semantics;
    if (subset_of(ops, {One, Successor, Add})) return static_cast<double>(n);
    if (subset_of(ops, {One, Successor, Mul})) return base4_lower_bound(n);
    if (subset_of(ops, {One, Successor, Add, Mul})) return gamma_lower_bound(n);
    if (subset_of(ops, {One, Successor, Pow})) return tower_lower_bound(n);
    return 1.0;
}

bool meets_base4_lower(std::uint64_t n, unsigned c) { return compare_pow2_with_power(2 * (c + 1), n, 5) >= 0; }

bool equals_base4_lower(std::uint64_t n, unsigned c) {
    if ((c + 1) % 5 != 0) return false;
    const unsigned j = (c + 1) / 5;
    return j <= 31 && n == (std::uint64_t{1} << (2 * j));
}

bool meets_base4_upper(std::uint64_t n, unsigned c) {
    if (c <= 2) return true;
    return compare_pow2_with_power(c - 2, n, 4) <= 0;
}

Term upper_bound_witness(std::uint64_t n) {
    if (n == 0) throw std::invalid_argument("upper_bound_witness needs n >= 1");
    // Prefix layout: S^d0 * S^d1 * ... S^(t-1) 1 SSS1 ... SSS1, one SSS1 per
    // base-4 digit below the leading digit t.
    std::vector<Semantics> nodes;
    std::size_t fours = 0;
    while (n > 3) {
        nodes.insert(nodes.end(), n % 4, Semantics::Successor);
        nodes.push_back(Semantics::Mul);
        n /= 4;
        ++fours;
    }
    nodes.insert(nodes.end(), n - 1, Semantics::Successor);
    nodes.push_back(Semantics::One);
    for (std::size_t i = 0; i < fours; ++i) {
        nodes.insert(nodes.end(), 3, Semantics::Successor);
        nodes.push_back(Semantics::One);
    }
    return Term::from_nodes(std::move(nodes));
}

LowerBoundTable::LowerBoundTable(const OperatorSet& ops, std::uint64_t limit) : values_(limit + 1, 1) {
    values_[0] = 0;
    using enum Semantics;
    // Only bounds that stay valid when + is present are used here.
    const bool additive = subset_of(ops, {One, Successor, Add});
    const bool arithmetic = subset_of(ops, {One, Successor, Add, Mul});
    informative_ = additive || arithmetic;
    if (!informative_) return;
    for (std::uint64_t n = 1; n <= limit; ++n) {
        const double bound = additive ? static_cast<double>(n) : gamma_lower_bound(n);
        const double ceiled = std::ceil(bound - 1e-9);
        values_[n] = static_cast<std::uint16_t>(std::clamp(ceiled, 1.0, 65535.0));
    }
}

SplitDecision sum_split_prune(std::uint64_t a, std::uint64_t n, unsigned best_so_far, const LowerBoundTable& lb) {
    const std::uint64_t half_up = n - n / 2;
    return lb(a) + lb(half_up) + 1 >= best_so_far ? SplitDecision::Stop : SplitDecision::Keep;
}

}  // namespace minrep
