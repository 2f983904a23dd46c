#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace minrep {

/// What a glyph means. Hyperoperation orders: Add = 1, Mul = 2, Pow = 3.
enum class Semantics : std::uint8_t { One, Successor, Add, Mul, Pow };

constexpr int arity(Semantics s) noexcept {
    switch (s) {
    case Semantics::One: return 0;
    case Semantics::Successor: return 1;
    default: return 2;
    }
}

/// Hyperoperation order of a binary symbol, 0 for nullary/unary ones.
constexpr int hyperop_order(Semantics s) noexcept {
    switch (s) {
    case Semantics::Add: return 1;
    case Semantics::Mul: return 2;
    case Semantics::Pow: return 3;
    default: return 0;
    }
}

constexpr Semantics from_order(int order) {
    switch (order) {
    case 1: return Semantics::Add;
    case 2: return Semantics::Mul;
    case 3: return Semantics::Pow;
    default: throw std::invalid_argument("hyperoperation order must be 1, 2 or 3");
    }
}

/// Fixed glyph for each meaning: '1', 'S', '+', '*', '^'.
constexpr char glyph_of(Semantics s) noexcept {
    switch (s) {
    case Semantics::One: return '1';
    case Semantics::Successor: return 'S';
    case Semantics::Add: return '+';
    case Semantics::Mul: return '*';
    case Semantics::Pow: return '^';
    }
    return '?';
}

std::optional<Semantics> semantics_of(char glyph) noexcept;

struct Symbol {
    char glyph;
    Semantics semantics;
    int arity() const noexcept { return minrep::arity(semantics); }
    bool operator==(const Symbol&) const = default;
};

class InvalidOperatorSet : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// The alphabet O: exactly one constant, at most one successor, and any
/// subset of the three binary hyperoperations. The id is the glyph string
/// in declaration order, e.g. "1S+*".
class OperatorSet {
public:
    explicit OperatorSet(std::vector<Symbol> symbols);

    /// One of the presets "1S", "1S+", "1S*", "1S+*", "1S^", or any other
    /// glyph string over {1,S,+,*,^} with a single '1'.
    static OperatorSet from_id(std::string_view id);

    const std::string& id() const noexcept { return id_; }
    const std::vector<Symbol>& symbols() const noexcept { return symbols_; }
    std::size_t size() const noexcept { return symbols_.size(); }

    bool contains(Semantics s) const noexcept;
    bool contains_glyph(char glyph) const noexcept;
    bool has_successor() const noexcept { return contains(Semantics::Successor); }

    /// Binary hyperoperations present, ascending by order.
    std::vector<Semantics> binary_ops() const;

    bool operator==(const OperatorSet& other) const { return id_ == other.id_; }

private:
    std::vector<Symbol> symbols_;
    std::string id_;
};

/// The ids accepted on the command line.
const std::vector<std::string>& preset_ids();

}  // namespace minrep
