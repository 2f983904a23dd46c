#pragma once

#include "minrep/bignum.hpp"
#include "minrep/operator_set.hpp"
#include "minrep/term.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

/// M_O(k): the largest value of any length-k term, with a witness.
/// value/witness are empty when the maximum would exceed the digit cap.
struct ExtremalRecord {
    unsigned k = 0;
    std::optional<BigNat> value;
    std::optional<Term> witness;
    std::string note;

    bool truncated() const noexcept { return !value.has_value(); }
};

/// Exact maxima for k = 1..k_max (index i holds k = i+1). Product witnesses
/// are canonicalized to an ascending factor chain, e.g. *SS1*SSS1SSS1.
std::vector<ExtremalRecord> max_table(const OperatorSet& ops, unsigned k_max,
                                      std::size_t digit_cap = kDefaultDigitCap);

class KTooSmall : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// v(M(k)) = 3^r 4^(m-r) under {1,S,*} where k = 5m - 1 - r, 0 <= r <= 4.
/// Valid for k >= 11.
BigNat closed_form_max(unsigned k);

/// Splits a closed-form length into (m, r).
std::pair<unsigned, unsigned> closed_form_decomposition(unsigned k);

/// Factor subterms of the top-level multiplication chain, left to right.
/// A term whose root is not '*' is a single factor.
std::vector<Term> factor_chain(const Term& t);

struct StructureReport {
    unsigned k = 0;
    std::vector<BigNat> factors;
    std::vector<std::string> violations;
    bool pass() const noexcept { return violations.empty(); }
};

/// Factor-multiset rules for maximal terms over {1,S,*} / {1,S,+,*}: no
/// factor 6 or 7, at most one 2, at most one 5, at most four 3s, and only
/// 3s and 4s once k >= 11. Terms without a '*' root are a single factor
/// and are exempt from the 6/7 rule (M(6) is SSSSS1 itself).
StructureReport check_structure(const ExtremalRecord& record);

}  // namespace minrep
