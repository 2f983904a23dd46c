#include "minrep/term.hpp"

#include <cmath>
#include <limits>

namespace minrep {

double decimal_digits(const BigNat& x) {
    if (x == 0) return 1.0;
    const auto bits = boost::multiprecision::msb(x) + 1;
    return std::floor(static_cast<double>(bits - 1) * std::log10(2.0)) + 1.0;
}

Term Term::one() { return Term({Semantics::One}); }

Term Term::successor(const Term& child) {
    std::vector<Semantics> nodes;
    nodes.reserve(child.length() + 1);
    nodes.push_back(Semantics::Successor);
    nodes.insert(nodes.end(), child.nodes_.begin(), child.nodes_.end());
    return Term(std::move(nodes));
}

Term Term::binary(Semantics op, const Term& left, const Term& right) {
    if (arity(op) != 2) throw std::invalid_argument("binary term needs a hyperoperation");
    std::vector<Semantics> nodes;
    nodes.reserve(left.length() + right.length() + 1);
    nodes.push_back(op);
    nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
    nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
    return Term(std::move(nodes));
}

Term Term::unary_chain(std::uint64_t value) {
    if (value == 0) throw std::invalid_argument("terms denote positive integers");
    std::vector<Semantics> nodes(value, Semantics::Successor);
    nodes.back() = Semantics::One;
    return Term(std::move(nodes));
}

std::size_t subterm_end(std::span<const Semantics> nodes, std::size_t begin) {
    // Number of subterms still owed before the current one closes.
    std::size_t owed = 1;
    std::size_t i = begin;
    while (owed > 0) {
        if (i >= nodes.size()) throw std::out_of_range("subterm runs past end of term");
        owed += static_cast<std::size_t>(arity(nodes[i]));
        --owed;
        ++i;
    }
    return i;
}

Term Term::from_nodes(std::vector<Semantics> nodes) {
    if (nodes.empty() || subterm_end(nodes, 0) != nodes.size())
        throw std::invalid_argument("node sequence is not a single prefix term");
    return Term(std::move(nodes));
}

Term Term::child() const {
    if (root() != Semantics::Successor) throw std::logic_error("child() on a non-successor term");
    return Term(std::vector<Semantics>(nodes_.begin() + 1, nodes_.end()));
}

std::pair<Term, Term> Term::operands() const {
    if (arity(root()) != 2) throw std::logic_error("operands() on a non-binary term");
    const std::size_t mid = subterm_end(nodes_, 1);
    return {Term(std::vector<Semantics>(nodes_.begin() + 1, nodes_.begin() + static_cast<std::ptrdiff_t>(mid))),
            Term(std::vector<Semantics>(nodes_.begin() + static_cast<std::ptrdiff_t>(mid), nodes_.end()))};
}

Term parse(std::string_view text, const OperatorSet& ops) {
    std::vector<Semantics> nodes;
    nodes.reserve(text.size());
    std::size_t owed = 1;
    std::size_t pos = 0;
    for (char c : text) {
        if (c == ' ' || c == '\t' || c == '\n' || c == '\r' || c == '\'' || c == '"') continue;
        auto sem = semantics_of(c);
        if (!sem || !ops.contains_glyph(c))
            throw ParseError(ParseError::Kind::UnknownGlyph, pos,
                             std::string("unknown glyph '") + c + "' at position " + std::to_string(pos) +
                                 " for operator set " + ops.id());
        if (owed == 0)
            throw ParseError(ParseError::Kind::TrailingGlyphs, pos,
                             "trailing glyphs after a complete term at position " + std::to_string(pos));
        owed = owed - 1 + static_cast<std::size_t>(arity(*sem));
        nodes.push_back(*sem);
        ++pos;
    }
    if (nodes.empty()) throw ParseError(ParseError::Kind::Empty, 0, "empty term");
    if (owed != 0)
        throw ParseError(ParseError::Kind::TruncatedTerm, pos,
                         "term ends with " + std::to_string(owed) + " operand(s) missing");
    return Term::from_nodes(std::move(nodes));
}

std::string serialize(const Term& t) {
    std::string out;
    out.reserve(t.length());
    for (Semantics s : t.nodes()) out.push_back(glyph_of(s));
    return out;
}

namespace {

BigNat checked_pow(const BigNat& base, const BigNat& exponent, std::size_t digit_cap) {
    if (base <= 1 || exponent == 0) return exponent == 0 ? BigNat(1) : base;
    if (exponent > std::numeric_limits<unsigned>::max())
        throw ValueOverflowBudget("exponent too large to materialize");
    const double log10_base = boost::multiprecision::msb(base) < 1000
                                  ? std::log10(base.convert_to<double>())
                                  : static_cast<double>(boost::multiprecision::msb(base)) * std::log10(2.0);
    if (exponent.convert_to<double>() * log10_base + 1.0 > static_cast<double>(digit_cap) + 1.0)
        throw ValueOverflowBudget("power exceeds digit budget of " + std::to_string(digit_cap));
    return boost::multiprecision::pow(base, exponent.convert_to<unsigned>());
}

}  // namespace

BigNat evaluate(const Term& t, std::size_t digit_cap) {
    std::vector<BigNat> stack;
    const auto nodes = t.nodes();
    for (std::size_t i = nodes.size(); i-- > 0;) {
        switch (nodes[i]) {
        case Semantics::One: stack.emplace_back(1); break;
        case Semantics::Successor: stack.back() += 1; break;
        default: {
            BigNat left = std::move(stack.back());
            stack.pop_back();
            BigNat& right = stack.back();
            switch (nodes[i]) {
            case Semantics::Add: right += left; break;
            case Semantics::Mul:
                if (decimal_digits(left) + decimal_digits(right) > static_cast<double>(digit_cap) + 1.0)
                    throw ValueOverflowBudget("product exceeds digit budget of " + std::to_string(digit_cap));
                right *= left;
                break;
            default: right = checked_pow(left, right, digit_cap); break;
            }
        }
        }
    }
    return std::move(stack.back());
}

std::optional<std::uint64_t> evaluate_small(const Term& t) {
    constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
    std::vector<std::uint64_t> stack;
    const auto nodes = t.nodes();
    for (std::size_t i = nodes.size(); i-- > 0;) {
        switch (nodes[i]) {
        case Semantics::One: stack.push_back(1); break;
        case Semantics::Successor:
            if (stack.back() == kMax) return std::nullopt;
            ++stack.back();
            break;
        default: {
            const std::uint64_t left = stack.back();
            stack.pop_back();
            std::uint64_t& right = stack.back();
            if (nodes[i] == Semantics::Add) {
                if (right > kMax - left) return std::nullopt;
                right += left;
            } else if (nodes[i] == Semantics::Mul) {
                if (left != 0 && right > kMax / left) return std::nullopt;
                right *= left;
            } else {
                std::uint64_t result = 1;
                for (std::uint64_t e = 0; e < right && left > 1; ++e) {
                    if (result > kMax / left) return std::nullopt;
                    result *= left;
                }
                right = left == 1 ? 1 : result;
            }
        }
        }
    }
    return stack.back();
}

}  // namespace minrep
