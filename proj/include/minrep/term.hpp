#pragma once

#include "minrep/bignum.hpp"
#include "minrep/operator_set.hpp"

#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace minrep {

/// A prefix-notation term. Stored flat in prefix order, so the length is
/// the node count and serialization is a direct glyph mapping.
class Term {
public:
    static Term one();
    static Term successor(const Term& child);
    static Term binary(Semantics op, const Term& left, const Term& right);
    /// S^(value-1) 1.
    static Term unary_chain(std::uint64_t value);

    std::size_t length() const noexcept { return nodes_.size(); }
    std::span<const Semantics> nodes() const noexcept { return nodes_; }
    Semantics root() const noexcept { return nodes_.front(); }

    /// Child of a successor root.
    Term child() const;
    /// Operands of a binary root.
    std::pair<Term, Term> operands() const;

    bool operator==(const Term&) const = default;

    /// Construct from a validated prefix node sequence.
    static Term from_nodes(std::vector<Semantics> nodes);

private:
    explicit Term(std::vector<Semantics> nodes) : nodes_(std::move(nodes)) {}
    std::vector<Semantics> nodes_;
};

class ParseError : public std::runtime_error {
public:
    enum class Kind { Empty, UnknownGlyph, TruncatedTerm, TrailingGlyphs };
    ParseError(Kind kind, std::size_t position, const std::string& what)
        : std::runtime_error(what), kind_(kind), position_(position) {}
    Kind kind() const noexcept { return kind_; }
    /// Offset into the stripped glyph string.
    std::size_t position() const noexcept { return position_; }

private:
    Kind kind_;
    std::size_t position_;
};

class ValueOverflowBudget : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Parses a glyph string. Whitespace and single/double quotes are ignored.
Term parse(std::string_view text, const OperatorSet& ops);

std::string serialize(const Term& t);

/// Exact value. Throws ValueOverflowBudget before any intermediate result
/// would exceed digit_cap decimal digits.
BigNat evaluate(const Term& t, std::size_t digit_cap = kDefaultDigitCap);

/// Fast path for sweeps: the value if it fits in 64 bits, else nullopt.
std::optional<std::uint64_t> evaluate_small(const Term& t);

inline std::size_t length(const Term& t) noexcept { return t.length(); }

/// End (exclusive) of the subterm starting at `begin` in prefix order.
std::size_t subterm_end(std::span<const Semantics> nodes, std::size_t begin);

}  // namespace minrep
