#pragma once

#include "minrep/analysis.hpp"
#include "minrep/census.hpp"
#include "minrep/engine.hpp"
#include "minrep/extremal.hpp"

#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace minrep {

struct Counterexample {
    std::string n;
    std::string expected;
    std::string actual;
};

struct VerificationReport {
    std::string check;
    std::string opset;
    std::string range;
    bool pass = true;
    std::optional<Counterexample> counterexample;
    /// Informational remarks (boundary hits etc.), never affect the outcome.
    std::string notes;
};

class InsufficientRange : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// Individual checks. Each throws InsufficientRange if its inputs do not
// cover the requested sweep.

/// c(n) = n for 1 <= n <= upto (Theorems 1.1 and 1.2).
VerificationReport check_complexity_is_n(const std::string& name, const ComplexityTable& table, std::uint64_t upto);
/// c(v(M(k))) = k for k <= k_max.
VerificationReport check_efficient_complexity(const ComplexityTable& table, const std::vector<ExtremalRecord>& maxima,
                                              unsigned k_max);
/// l(k) < |O|^k for every census row.
VerificationReport check_term_count_bound(const OperatorSet& ops, const TermCensus& census);
/// n_u strictly increasing with k.
VerificationReport check_ugly_increasing(const OperatorSet& ops, const std::vector<UglyRecord>& ugly);
/// c(n_u - 1) = c(n_u) - 1 and the witness is an S-term.
VerificationReport check_ugly_successor_form(const ComplexityTable& table, const std::vector<UglyRecord>& ugly);
/// c(n) >= (gamma+1) log n / log gamma - 1.
VerificationReport check_gamma_bound(const ComplexityTable& table);
/// c(n) >= 5 log4 n - 1, exact integer comparison.
VerificationReport check_base4_lower(const ComplexityTable& table);
/// c(n) <= 8 log4 n + 2 and the base-4 witness respects the same bound.
VerificationReport check_base4_upper(const ComplexityTable& table);
/// For n >= 2: c(n) = 5 log4 n - 1 exactly iff n = 4^j.
VerificationReport check_base4_equality(const ComplexityTable& table);
/// DP maxima agree with the closed form for k_lo <= k <= k_hi.
VerificationReport check_closed_form(const std::vector<ExtremalRecord>& maxima, unsigned k_lo, unsigned k_hi);
/// check_structure on every record up to k_max.
VerificationReport check_extremal_structure(const OperatorSet& ops, const std::vector<ExtremalRecord>& maxima,
                                            unsigned k_max);
/// c(n) >= 4 log*_3(n) - 1.
VerificationReport check_tower_bound(const ComplexityTable& table);
/// c(n) < (c(n_u) + 1)(a + 1) - 2, a = obs_a(n), n_u the largest ugly number
/// with c(n_u) <= a. Equality is recorded in notes rather than failed.
VerificationReport check_obs_ugly_bound(const ComplexityTable& table, const std::vector<UglyRecord>& ugly);
/// c(n) <= ceil(5 log4 n + a + 1).
VerificationReport check_obs_log_bound(const ComplexityTable& table);
/// Element-wise equality of complexities.
VerificationReport check_tables_agree(const ComplexityTable& lhs, const ComplexityTable& rhs, std::uint64_t upto);
/// Counts nondecreasing over complete k.
VerificationReport check_histogram_monotone(const OperatorSet& ops, const std::vector<HistogramRow>& rows);
/// Engine complexity equals the census minimum for every value within the
/// census depth, and no table entry within the depth is missing from it.
VerificationReport check_oracle_match(const ComplexityTable& table, const TermCensus& census, unsigned depth);
/// evaluate(witness(n)) = n and length = c(n) for every reachable n.
VerificationReport check_witnesses(const ComplexityTable& table);

struct WorkspaceConfig {
    std::uint64_t limit = 100'000;        ///< main sweep limit for 1S*, 1S+*, 1S^
    std::uint64_t small_limit = 1'000;    ///< 1S and 1S+ (quadratic sum splits)
    unsigned efficient_k_max = 40;
    unsigned closed_form_k_max = 100;
    unsigned structure_k_max = 60;
    unsigned oracle_depth = 14;
    EngineConfig engine;
};

/// Builds tables, maxima and censuses on demand and caches them.
class Workspace {
public:
    explicit Workspace(WorkspaceConfig config = {}) : config_(std::move(config)) {}

    const WorkspaceConfig& config() const noexcept { return config_; }

    const ComplexityTable& table(const std::string& opset);
    const std::vector<ExtremalRecord>& maxima(const std::string& opset, unsigned k_max);
    const TermCensus& census(const std::string& opset);
    const std::vector<UglyRecord>& ugly(const std::string& opset);

    /// Supplies an already built table (e.g. loaded from disk).
    void adopt(ComplexityTable table);

private:
    WorkspaceConfig config_;
    std::map<std::string, std::unique_ptr<ComplexityTable>> tables_;
    std::map<std::string, std::vector<ExtremalRecord>> maxima_;
    std::map<std::string, TermCensus> censuses_;
    std::map<std::string, std::vector<UglyRecord>> ugly_;
};

/// Check ids in run order.
const std::vector<std::string>& check_ids();

/// Runs one named check over the opsets it concerns; one report per opset.
/// Throws std::invalid_argument for an unknown id.
std::vector<VerificationReport> verify(const std::string& check_id, Workspace& workspace);

}  // namespace minrep
