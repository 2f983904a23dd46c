#pragma once

#include "minrep/operator_set.hpp"
#include "minrep/term.hpp"

#include <cstdint>
#include <vector>

namespace minrep {

/// Maximizer of log(w)/(w+1), the root of ln w = 1 + 1/w (about 3.5911).
double gamma_constant();

/// (gamma+1) log n / log gamma - 1.
double gamma_lower_bound(std::uint64_t n);
/// 5 log4(n) - 1.
double base4_lower_bound(std::uint64_t n);
/// 8 log4(n) + 2.
double base4_upper_bound(std::uint64_t n);
/// 4 log*_3(n) - 1.
double tower_lower_bound(std::uint64_t n);

/// Tightest lower bound on c_O(n) known to hold for this operator set:
/// the 5 log4 form for subsets of {1,S,*}, the gamma form for subsets of
/// {1,S,+,*}, n for subsets of {1,S,+}, the log*_3 form for subsets of
/// {1,S,^}, and 1 otherwise.
double lower_bound(const OperatorSet& ops, std::uint64_t n);

/// Exact integer forms of the base-4 sandwich (no floating point):
/// c >= 5 log4 n - 1  <=>  4^(c+1) >= n^5
bool meets_base4_lower(std::uint64_t n, unsigned c);
/// c == 5 log4 n - 1  <=>  4^(c+1) == n^5
bool equals_base4_lower(std::uint64_t n, unsigned c);
/// c <= 8 log4 n + 2  <=>  2^(c-2) <= n^4
bool meets_base4_upper(std::uint64_t n, unsigned c);

/// Horner-style base-4 term: rep(n) = S^(n mod 4) * rep(n div 4) SSS1,
/// with rep(n) = S^(n-1) 1 for n <= 3. Length <= 8 log4(n) + 2.
Term upper_bound_witness(std::uint64_t n);

/// Per-n integer lower bound used to cut the sum-split loop. Nondecreasing
/// in n, and valid for the operator set it was built for.
class LowerBoundTable {
public:
    LowerBoundTable(const OperatorSet& ops, std::uint64_t limit);
    unsigned operator()(std::uint64_t n) const { return values_[n]; }
    /// False when no bound better than 1 is known for the set.
    bool informative() const noexcept { return informative_; }

private:
    std::vector<std::uint16_t> values_;
    bool informative_ = false;
};

enum class SplitDecision { Keep, Stop };

/// Stop once lb(a) + lb(ceil(n/2)) + 1 >= best_so_far: for every a' >= a
/// (a' <= n/2) the split a' + (n-a') costs at least that much.
SplitDecision sum_split_prune(std::uint64_t a, std::uint64_t n, unsigned best_so_far, const LowerBoundTable& lb);

}  // namespace minrep
