#include "minrep/engine.hpp"

#include "minrep/bounds.hpp"

#include <algorithm>
#include <optional>

namespace minrep {

Rule split_rule(Semantics op) {
    switch (op) {
    case Semantics::Add: return Rule::Add;
    case Semantics::Mul: return Rule::Mul;
    case Semantics::Pow: return Rule::Pow;
    default: throw std::invalid_argument("not a hyperoperation");
    }
}

Semantics split_semantics(Rule rule) {
    switch (rule) {
    case Rule::Add: return Semantics::Add;
    case Rule::Mul: return Semantics::Mul;
    case Rule::Pow: return Semantics::Pow;
    default: throw std::invalid_argument("not a split rule");
    }
}

ComplexityTable::ComplexityTable(OperatorSet ops, std::vector<std::uint16_t> complexity,
                                 std::vector<Provenance> provenance)
    : ops_(std::move(ops)), complexity_(std::move(complexity)), provenance_(std::move(provenance)) {
    if (complexity_.empty() || complexity_.size() != provenance_.size())
        throw std::invalid_argument("complexity and provenance arrays must both cover 0..limit");
}

unsigned ComplexityTable::complexity_of(std::uint64_t n) const {
    if (!in_range(n))
        throw TableError(TableError::Kind::OutOfRange,
                         std::to_string(n) + " is outside the table range 1.." + std::to_string(limit()));
    if (complexity_[n] == 0)
        throw TableError(TableError::Kind::Unreachable, std::to_string(n) + " has no representation over " + ops_.id());
    return complexity_[n];
}

unsigned ComplexityTable::max_complexity() const noexcept {
    return *std::max_element(complexity_.begin(), complexity_.end());
}

bool ComplexityTable::operator==(const ComplexityTable& other) const {
    return ops_ == other.ops_ && complexity_ == other.complexity_ && provenance_ == other.provenance_;
}

std::uint64_t estimated_memory(std::uint64_t limit) {
    // complexity + tag + operand + lower-bound cache
    return (limit + 1) * (sizeof(std::uint16_t) + sizeof(Provenance) + sizeof(std::uint16_t));
}

namespace {

constexpr std::uint16_t kUnset = 0;
constexpr unsigned kMaxLength = 65535;

// Tie-break rank: Successor first, then the lowest hyperoperation order,
// then the smallest left operand.
constexpr std::uint64_t rank(Rule rule, std::uint32_t operand) {
    switch (rule) {
    case Rule::Add: return (std::uint64_t{1} << 32) | operand;
    case Rule::Mul: return (std::uint64_t{2} << 32) | operand;
    case Rule::Pow: return (std::uint64_t{3} << 32) | operand;
    default: return 0;
    }
}

class Builder {
public:
    Builder(const OperatorSet& ops, std::uint64_t limit, const EngineConfig& config)
        : ops_(ops), limit_(limit), config_(config), complexity_(limit + 1, kUnset), provenance_(limit + 1),
          has_succ_(ops.has_successor()), has_add_(ops.contains(Semantics::Add)),
          has_mul_(ops.contains(Semantics::Mul)), has_pow_(ops.contains(Semantics::Pow)) {}

    void adopt(const ComplexityTable& base) {
        const auto c = base.complexities();
        const auto p = base.provenances();
        std::copy(c.begin(), c.end(), complexity_.begin());
        std::copy(p.begin(), p.end(), provenance_.begin());
        done_ = base.limit();
        for (std::uint64_t b = 2; b <= done_; ++b) push_from(b, done_);
    }

    ComplexityTable run() {
        if (has_add_) lb_.emplace(ops_, limit_);
        for (std::uint64_t n = done_ + 1; n <= limit_; ++n) {
            finalize(n);
            push_from(n, n);
            if (config_.progress && config_.progress_interval && n % config_.progress_interval == 0)
                config_.progress(n, limit_);
        }
        return ComplexityTable(ops_, std::move(complexity_), std::move(provenance_));
    }

private:
    void offer(std::uint64_t n, unsigned length, Rule rule, std::uint32_t operand) {
        if (length > kMaxLength - 1)
            throw TableError(TableError::Kind::LimitTooLarge,
                             "complexity exceeds 16-bit storage at n = " + std::to_string(n));
        auto& cur = complexity_[n];
        auto& prov = provenance_[n];
        if (cur == kUnset || length < cur || (length == cur && rank(rule, operand) < rank(prov.rule, prov.operand))) {
            cur = static_cast<std::uint16_t>(length);
            prov = {rule, operand};
        }
    }

    void finalize(std::uint64_t n) {
        if (n == 1) {
            complexity_[1] = 1;
            provenance_[1] = {Rule::Base, 0};
            return;
        }
        if (has_succ_ && complexity_[n - 1] != kUnset) offer(n, complexity_[n - 1] + 1u, Rule::Successor, 0);
        if (has_add_) sum_splits(n);
    }

    void sum_splits(std::uint64_t n) {
        std::uint64_t evaluated = 0;
        for (std::uint64_t a = 1; a <= n / 2; ++a) {
            if (config_.prune && complexity_[n] != kUnset) {
                // An Add split can still win a tie against Mul/Pow, not against
                // Successor or an earlier (smaller) Add split.
                const Rule r = provenance_[n].rule;
                const bool tie_wins = r == Rule::Mul || r == Rule::Pow;
                const unsigned threshold = complexity_[n] + (tie_wins ? 1u : 0u);
                if (sum_split_prune(a, n, threshold, *lb_) == SplitDecision::Stop) break;
            }
            ++evaluated;
            const auto ca = complexity_[a];
            const auto cb = complexity_[n - a];
            if (ca != kUnset && cb != kUnset) offer(n, ca + cb + 1u, Rule::Add, static_cast<std::uint32_t>(a));
        }
        if (config_.stats) {
            config_.stats->candidates += evaluated;
            if (evaluated > config_.stats->max_candidates) {
                config_.stats->max_candidates = evaluated;
                config_.stats->max_candidates_at = n;
            }
        }
    }

    // Offers every product and power whose larger operand is b and whose
    // value lies in (floor, limit].
    void push_from(std::uint64_t b, std::uint64_t floor) {
        const auto cb = complexity_[b];
        if (cb == kUnset) return;
        if (has_mul_) {
            const std::uint64_t hi = std::min(b, limit_ / b);
            for (std::uint64_t a = std::max<std::uint64_t>(2, floor / b + 1); a <= hi; ++a) {
                const auto ca = complexity_[a];
                if (ca != kUnset) offer(a * b, ca + cb + 1u, Rule::Mul, static_cast<std::uint32_t>(a));
            }
        }
        if (has_pow_ && b >= 2) {
            // base b, exponent e <= b
            std::uint64_t p = b;
            for (std::uint64_t e = 2; e <= b; ++e) {
                if (p > limit_ / b) break;
                p *= b;
                const auto ce = complexity_[e];
                if (p > floor && ce != kUnset) offer(p, cb + ce + 1u, Rule::Pow, static_cast<std::uint32_t>(b));
            }
            // base a < b, exponent b
            for (std::uint64_t a = 2; a < b; ++a) {
                std::uint64_t q = 1;
                bool fits = true;
                for (std::uint64_t i = 0; i < b && fits; ++i) {
                    if (q > limit_ / a) fits = false;
                    else q *= a;
                }
                if (!fits) break;
                const auto ca = complexity_[a];
                if (q > floor && ca != kUnset) offer(q, ca + cb + 1u, Rule::Pow, static_cast<std::uint32_t>(a));
            }
        }
    }

    const OperatorSet& ops_;
    std::uint64_t limit_;
    const EngineConfig& config_;
    std::vector<std::uint16_t> complexity_;
    std::vector<Provenance> provenance_;
    std::optional<LowerBoundTable> lb_;
    std::uint64_t done_ = 0;
    bool has_succ_, has_add_, has_mul_, has_pow_;
};

void check_limit(std::uint64_t limit, const EngineConfig& config) {
    if (limit < 1) throw std::invalid_argument("table limit must be at least 1");
    if (limit > std::numeric_limits<std::uint32_t>::max())
        throw TableError(TableError::Kind::LimitTooLarge, "limit exceeds 32-bit operand storage");
    if (estimated_memory(limit) > config.memory_budget_bytes)
        throw TableError(TableError::Kind::LimitTooLarge,
                         "limit " + std::to_string(limit) + " needs " + std::to_string(estimated_memory(limit)) +
                             " bytes, over the configured budget");
}

}  // namespace

ComplexityTable build_table(const OperatorSet& ops, std::uint64_t limit, const EngineConfig& config) {
    check_limit(limit, config);
    return Builder(ops, limit, config).run();
}

ComplexityTable extend_table(const ComplexityTable& base, std::uint64_t limit, const EngineConfig& config) {
    if (limit < base.limit())
        throw std::invalid_argument("cannot extend a table to a smaller limit");
    check_limit(limit, config);
    Builder builder(base.ops(), limit, config);
    builder.adopt(base);
    return builder.run();
}

Term witness(const ComplexityTable& table, std::uint64_t n) {
    table.complexity_of(n);
    std::vector<Semantics> nodes;
    nodes.reserve(table[n]);
    // Pending values in prefix order (top = next to emit).
    std::vector<std::uint64_t> pending{n};
    while (!pending.empty()) {
        const std::uint64_t v = pending.back();
        pending.pop_back();
        const Provenance& p = table.provenance(v);
        switch (p.rule) {
        case Rule::Base: nodes.push_back(Semantics::One); break;
        case Rule::Successor:
            nodes.push_back(Semantics::Successor);
            pending.push_back(v - 1);
            break;
        case Rule::Add:
        case Rule::Mul:
        case Rule::Pow: {
            const std::uint64_t a = p.operand;
            std::uint64_t b = 0;
            if (p.rule == Rule::Add) b = v - a;
            else if (p.rule == Rule::Mul) b = v / a;
            else
                for (std::uint64_t q = v; q > 1; q /= a) ++b;
            nodes.push_back(split_semantics(p.rule));
            pending.push_back(b);
            pending.push_back(a);
            break;
        }
        case Rule::Absent:
            throw TableError(TableError::Kind::Unreachable, "provenance chain reaches an unreachable value");
        }
    }
    return Term::from_nodes(std::move(nodes));
}

}  // namespace minrep
