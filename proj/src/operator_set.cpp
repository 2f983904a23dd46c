#include "minrep/operator_set.hpp"

#include <algorithm>

namespace minrep {

std::optional<Semantics> semantics_of(char glyph) noexcept {
    switch (glyph) {
    case '1': return Semantics::One;
    case 'S': return Semantics::Successor;
    case '+': return Semantics::Add;
    case '*': return Semantics::Mul;
    case '^': return Semantics::Pow;
    default: return std::nullopt;
    }
}

OperatorSet::OperatorSet(std::vector<Symbol> symbols) : symbols_(std::move(symbols)) {
    int ones = 0;
    int successors = 0;
    for (std::size_t i = 0; i < symbols_.size(); ++i) {
        const Symbol& s = symbols_[i];
        if (s.glyph != glyph_of(s.semantics))
            throw InvalidOperatorSet(std::string("glyph '") + s.glyph + "' does not match its meaning");
        for (std::size_t j = 0; j < i; ++j)
            if (symbols_[j].glyph == s.glyph)
                throw InvalidOperatorSet(std::string("duplicate glyph '") + s.glyph + "'");
        ones += s.semantics == Semantics::One;
        successors += s.semantics == Semantics::Successor;
        id_ += s.glyph;
    }
    if (ones != 1) throw InvalidOperatorSet("operator set needs exactly one constant '1'");
    if (successors > 1) throw InvalidOperatorSet("operator set has more than one successor");
}

OperatorSet OperatorSet::from_id(std::string_view id) {
    std::vector<Symbol> symbols;
    for (char g : id) {
        auto sem = semantics_of(g);
        if (!sem) throw InvalidOperatorSet(std::string("unknown glyph '") + g + "' in operator set id");
        symbols.push_back({g, *sem});
    }
    return OperatorSet(std::move(symbols));
}

bool OperatorSet::contains(Semantics s) const noexcept {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [s](const Symbol& sym) { return sym.semantics == s; });
}

bool OperatorSet::contains_glyph(char glyph) const noexcept {
    return std::any_of(symbols_.begin(), symbols_.end(),
                       [glyph](const Symbol& sym) { return sym.glyph == glyph; });
}

std::vector<Semantics> OperatorSet::binary_ops() const {
    std::vector<Semantics> out;
    for (Semantics s : {Semantics::Add, Semantics::Mul, Semantics::Pow})
        if (contains(s)) out.push_back(s);
    return out;
}

const std::vector<std::string>& preset_ids() {
    static const std::vector<std::string> ids{"1S", "1S+", "1S*", "1S+*", "1S^"};
    return ids;
}

}  // namespace minrep
