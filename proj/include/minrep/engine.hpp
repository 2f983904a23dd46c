#pragma once

#include "minrep/operator_set.hpp"
#include "minrep/term.hpp"

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

namespace minrep {

/// How the minimal representation of n was formed. Binary rules keep the
/// left operand; the right one follows from n (n-a, n/a, or log_a n).
enum class Rule : std::uint8_t { Absent = 0, Base = 1, Successor = 2, Add = 3, Mul = 4, Pow = 5 };

struct Provenance {
    Rule rule = Rule::Absent;
    std::uint32_t operand = 0;
    bool operator==(const Provenance&) const = default;
};

Rule split_rule(Semantics op);
Semantics split_semantics(Rule rule);

class TableError : public std::runtime_error {
public:
    enum class Kind { OutOfRange, Unreachable, LimitTooLarge };
    TableError(Kind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
    Kind kind() const noexcept { return kind_; }

private:
    Kind kind_;
};

/// Counters for the sum-split loop.
struct PruneStats {
    std::uint64_t candidates = 0;      ///< sum splits evaluated in total
    std::uint64_t max_candidates = 0;  ///< most splits evaluated for a single n
    std::uint64_t max_candidates_at = 0;
};

struct EngineConfig {
    bool prune = true;
    std::uint64_t memory_budget_bytes = std::uint64_t{4} << 30;
    std::uint64_t progress_interval = 100'000;
    std::function<void(std::uint64_t done, std::uint64_t limit)> progress;
    PruneStats* stats = nullptr;
};

/// c_O(n) for n = 1..limit, with provenance for witness reconstruction.
/// Complexity 0 marks an unreachable n.
class ComplexityTable {
public:
    ComplexityTable(OperatorSet ops, std::vector<std::uint16_t> complexity, std::vector<Provenance> provenance);

    const OperatorSet& ops() const noexcept { return ops_; }
    std::uint64_t limit() const noexcept { return complexity_.size() - 1; }

    bool in_range(std::uint64_t n) const noexcept { return n >= 1 && n <= limit(); }
    bool reachable(std::uint64_t n) const noexcept { return in_range(n) && complexity_[n] != 0; }

    /// Throws TableError (OutOfRange, Unreachable).
    unsigned complexity_of(std::uint64_t n) const;
    /// Raw entry, 0 when unreachable. n must be in range.
    unsigned operator[](std::uint64_t n) const noexcept { return complexity_[n]; }
    const Provenance& provenance(std::uint64_t n) const { return provenance_.at(n); }

    /// Index 0 is unused.
    std::span<const std::uint16_t> complexities() const noexcept { return complexity_; }
    std::span<const Provenance> provenances() const noexcept { return provenance_; }

    unsigned max_complexity() const noexcept;

    bool operator==(const ComplexityTable& other) const;

private:
    OperatorSet ops_;
    std::vector<std::uint16_t> complexity_;
    std::vector<Provenance> provenance_;
};

ComplexityTable build_table(const OperatorSet& ops, std::uint64_t limit, const EngineConfig& config = {});

/// Extends a finished table to a larger limit. The result equals a fresh
/// build_table(ops, limit) entry for entry.
ComplexityTable extend_table(const ComplexityTable& base, std::uint64_t limit, const EngineConfig& config = {});

/// A minimal representation of n: value n, length complexity_of(n).
Term witness(const ComplexityTable& table, std::uint64_t n);

inline unsigned complexity_of(const ComplexityTable& table, std::uint64_t n) { return table.complexity_of(n); }

/// Bytes build_table needs for a given limit.
std::uint64_t estimated_memory(std::uint64_t limit);

}  // namespace minrep
