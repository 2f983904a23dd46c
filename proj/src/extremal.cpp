#include "minrep/extremal.hpp"

#include <algorithm>
#include <cmath>
#include <map>

namespace minrep {

namespace {

double log10_of(const BigNat& v) {
    if (v <= 1) return 0.0;
    const auto msb = boost::multiprecision::msb(v);
    if (msb < 1000) return std::log10(v.convert_to<double>());
    const auto shift = msb - 60;
    return std::log10((v >> shift).convert_to<double>()) + static_cast<double>(shift) * std::log10(2.0);
}

enum class Choice { Base, Successor, Split };

struct Decision {
    Choice choice = Choice::Base;
    Semantics op = Semantics::One;
    unsigned left_len = 0;
};

struct Candidate {
    Decision decision;
    double log10_estimate = 0.0;
    bool oversize = false;  // exceeds the digit cap, or has a truncated operand
};

class Solver {
public:
    Solver(const OperatorSet& ops, unsigned k_max, std::size_t digit_cap)
        : ops_(ops), binary_(ops.binary_ops()), digit_cap_(digit_cap), values_(k_max + 1), decisions_(k_max + 1) {
        // Preference among equal values comes from visiting order: successor,
        // then higher-order ops, then the shortest left operand.
        std::sort(binary_.begin(), binary_.end(),
                  [](Semantics a, Semantics b) { return hyperop_order(a) > hyperop_order(b); });
    }

    std::vector<ExtremalRecord> run(unsigned k_max) {
        std::vector<ExtremalRecord> out;
        for (unsigned k = 1; k <= k_max; ++k) {
            solve(k);
            ExtremalRecord rec;
            rec.k = k;
            if (values_[k]) {
                rec.value = values_[k];
                rec.witness = witness(k);
            } else {
                rec.note = ops_.contains(Semantics::Pow) ? "3^^b-dominated" : "exceeds digit cap";
            }
            out.push_back(std::move(rec));
        }
        return out;
    }

private:
    std::optional<BigNat> combine(Semantics op, unsigned k1, unsigned k2) const {
        const BigNat& a = *values_[k1];
        const BigNat& b = *values_[k2];
        switch (op) {
        case Semantics::Add: return a + b;
        case Semantics::Mul: return a * b;
        default: return boost::multiprecision::pow(a, b.convert_to<unsigned>());
        }
    }

    Candidate estimate(Semantics op, unsigned k1, unsigned k2) const {
        Candidate c{{Choice::Split, op, k1}, 0.0, false};
        if (!values_[k1] || !values_[k2]) {
            c.oversize = true;
            return c;
        }
        const BigNat& a = *values_[k1];
        const BigNat& b = *values_[k2];
        const double la = log10_of(a);
        const double lb = log10_of(b);
        switch (op) {
        case Semantics::Add: c.log10_estimate = std::max(la, lb) + std::log10(1.0 + std::pow(10.0, -std::abs(la - lb))); break;
        case Semantics::Mul: c.log10_estimate = la + lb; break;
        default:
            c.log10_estimate = a <= 1 ? 0.0 : b.convert_to<double>() * la;
            break;
        }
        if (c.log10_estimate + 1.0 > static_cast<double>(digit_cap_) + 1.0) c.oversize = true;
        return c;
    }

    void solve(unsigned k) {
        if (k == 1) {
            values_[1] = BigNat(1);
            decisions_[1] = {Choice::Base, Semantics::One, 0};
            return;
        }
        std::vector<Candidate> cands;
        if (ops_.has_successor()) {
            Candidate c{{Choice::Successor, Semantics::Successor, 0}, 0.0, !values_[k - 1]};
            if (values_[k - 1]) c.log10_estimate = log10_of(*values_[k - 1] + 1);
            cands.push_back(c);
        }
        for (Semantics op : binary_)
            for (unsigned k1 = 1; k1 + 2 <= k; ++k1) cands.push_back(estimate(op, k1, k - 1 - k1));
        if (cands.empty()) return;  // unreachable length: no value

        if (std::any_of(cands.begin(), cands.end(), [](const Candidate& c) { return c.oversize; })) {
            values_[k].reset();
            return;
        }
        const double top = std::max_element(cands.begin(), cands.end(), [](const Candidate& x, const Candidate& y) {
                               return x.log10_estimate < y.log10_estimate;
                           })->log10_estimate;
        std::optional<BigNat> best;
        Decision best_decision;
        for (const Candidate& c : cands) {
            if (c.log10_estimate < top - 1e-6 * std::max(1.0, top)) continue;
            BigNat v = c.decision.choice == Choice::Successor
                           ? *values_[k - 1] + 1
                           : *combine(c.decision.op, c.decision.left_len, k - 1 - c.decision.left_len);
            // Candidates arrive in preference order, so only a strictly larger value replaces.
            if (!best || v > *best) {
                best = std::move(v);
                best_decision = c.decision;
            }
        }
        values_[k] = std::move(best);
        decisions_[k] = best_decision;
    }

    void collect_factors(unsigned k, std::vector<std::pair<BigNat, Term>>& out) const {
        const Decision& d = decisions_[k];
        if (d.choice == Choice::Split && d.op == Semantics::Mul) {
            collect_factors(d.left_len, out);
            collect_factors(k - 1 - d.left_len, out);
        } else {
            out.emplace_back(*values_[k], witness(k));
        }
    }

    Term witness(unsigned k) const {
        const Decision& d = decisions_[k];
        switch (d.choice) {
        case Choice::Base: return Term::one();
        case Choice::Successor: return Term::successor(witness(k - 1));
        case Choice::Split: break;
        }
        if (d.op != Semantics::Mul) return Term::binary(d.op, witness(d.left_len), witness(k - 1 - d.left_len));
        std::vector<std::pair<BigNat, Term>> factors;
        collect_factors(k, factors);
        std::sort(factors.begin(), factors.end(), [](const auto& x, const auto& y) {
            if (x.first != y.first) return x.first < y.first;
            return serialize(x.second) < serialize(y.second);
        });
        Term chain = factors.back().second;
        for (std::size_t i = factors.size() - 1; i-- > 0;) chain = Term::binary(Semantics::Mul, factors[i].second, chain);
        return chain;
    }

    const OperatorSet& ops_;
    std::vector<Semantics> binary_;
    std::size_t digit_cap_;
    std::vector<std::optional<BigNat>> values_;
    std::vector<Decision> decisions_;
};

}  // namespace

std::vector<ExtremalRecord> max_table(const OperatorSet& ops, unsigned k_max, std::size_t digit_cap) {
    if (k_max < 1) throw std::invalid_argument("k_max must be at least 1");
    return Solver(ops, k_max, digit_cap).run(k_max);
}

std::pair<unsigned, unsigned> closed_form_decomposition(unsigned k) {
    const unsigned r = (5 - (k + 1) % 5) % 5;
    return {(k + 1 + r) / 5, r};
}

BigNat closed_form_max(unsigned k) {
    if (k < 11) throw KTooSmall("closed form holds only for k >= 11, got " + std::to_string(k));
    const auto [m, r] = closed_form_decomposition(k);
    return boost::multiprecision::pow(BigNat(3), r) * boost::multiprecision::pow(BigNat(4), m - r);
}

std::vector<Term> factor_chain(const Term& t) {
    std::vector<Term> out;
    std::vector<Term> stack{t};
    // Depth-first, left operand first, so factors come out in reading order.
    while (!stack.empty()) {
        Term cur = std::move(stack.back());
        stack.pop_back();
        if (cur.root() == Semantics::Mul) {
            auto [l, r] = cur.operands();
            stack.push_back(std::move(r));
            stack.push_back(std::move(l));
        } else {
            out.push_back(std::move(cur));
        }
    }
    return out;
}

StructureReport check_structure(const ExtremalRecord& record) {
    StructureReport report;
    report.k = record.k;
    if (!record.witness) {
        report.violations.push_back("record has no witness");
        return report;
    }
    const auto factors = factor_chain(*record.witness);
    std::map<BigNat, unsigned> counts;
    for (const Term& f : factors) {
        report.factors.push_back(evaluate(f));
        ++counts[report.factors.back()];
    }
    const auto count = [&](unsigned v) { return counts.count(BigNat(v)) ? counts[BigNat(v)] : 0u; };
    if (factors.size() > 1) {
        if (count(6)) report.violations.push_back("factor 6 present");
        if (count(7)) report.violations.push_back("factor 7 present");
    }
    if (count(2) > 1) report.violations.push_back("more than one factor 2");
    if (count(5) > 1) report.violations.push_back("more than one factor 5");
    if (count(3) > 4) report.violations.push_back("more than four factors 3");
    if (record.k >= 11)
        for (const auto& [v, n] : counts)
            if (v != 3 && v != 4) report.violations.push_back("factor " + to_string(v) + " outside {3,4} at k >= 11");
    if (record.value) {
        BigNat product = 1;
        for (const auto& f : report.factors) product *= f;
        if (product != *record.value) report.violations.push_back("factors do not multiply to the value");
    }
    return report;
}

}  // namespace minrep
