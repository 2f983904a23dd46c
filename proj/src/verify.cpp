#include "minrep/verify.hpp"

#include "minrep/bounds.hpp"
#include "minrep/number_theory.hpp"

#include <cmath>
#include <sstream>

namespace minrep {

namespace {

std::string span_text(std::uint64_t lo, std::uint64_t hi, const char* var = "n") {
    return std::string(var) + "=" + std::to_string(lo) + ".." + std::to_string(hi);
}

VerificationReport start(const std::string& check, const std::string& opset, std::string range) {
    VerificationReport r;
    r.check = check;
    r.opset = opset;
    r.range = std::move(range);
    return r;
}

void fail(VerificationReport& r, std::string n, std::string expected, std::string actual) {
    if (!r.pass) return;  // keep the first counterexample
    r.pass = false;
    r.counterexample = Counterexample{std::move(n), std::move(expected), std::move(actual)};
}

void require_limit(const ComplexityTable& table, std::uint64_t upto, const std::string& check) {
    if (table.limit() < upto)
        throw InsufficientRange(check + ": table for " + table.ops().id() + " covers 1.." +
                                std::to_string(table.limit()) + ", need 1.." + std::to_string(upto));
}

}  // namespace

VerificationReport check_complexity_is_n(const std::string& name, const ComplexityTable& table, std::uint64_t upto) {
    require_limit(table, upto, name);
    auto r = start(name, table.ops().id(), span_text(1, upto));
    for (std::uint64_t n = 1; n <= upto && r.pass; ++n)
        if (table[n] != n) fail(r, std::to_string(n), std::to_string(n), std::to_string(table[n]));
    return r;
}

VerificationReport check_efficient_complexity(const ComplexityTable& table, const std::vector<ExtremalRecord>& maxima,
                                              unsigned k_max) {
    auto r = start("thm_1_3", table.ops().id(), span_text(1, k_max, "k"));
    if (maxima.size() < k_max) throw InsufficientRange("thm_1_3: maxima do not reach k=" + std::to_string(k_max));
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto& rec = maxima[k - 1];
        if (!rec.value || *rec.value > table.limit())
            throw InsufficientRange("thm_1_3: v(M(" + std::to_string(k) + ")) lies beyond the table limit " +
                                    std::to_string(table.limit()));
        const auto n = rec.value->convert_to<std::uint64_t>();
        if (table[n] != k) fail(r, std::to_string(n), std::to_string(k), std::to_string(table[n]));
    }
    return r;
}

VerificationReport check_term_count_bound(const OperatorSet& ops, const TermCensus& census) {
    auto r = start("thm_1_4", ops.id(), span_text(1, census.rows.size(), "k"));
    for (const auto& row : census.rows) {
        const BigNat cap = boost::multiprecision::pow(BigNat(ops.size()), row.k);
        if (!(row.terms < cap)) fail(r, "k=" + std::to_string(row.k), "< " + to_string(cap), to_string(row.terms));
    }
    return r;
}

VerificationReport check_ugly_increasing(const OperatorSet& ops, const std::vector<UglyRecord>& ugly) {
    auto r = start("thm_1_5", ops.id(),
                   ugly.empty() ? "k=none" : span_text(ugly.front().complexity, ugly.back().complexity, "k"));
    for (std::size_t i = 1; i < ugly.size(); ++i)
        if (!(ugly[i - 1].n < ugly[i].n))
            fail(r, "k=" + std::to_string(ugly[i].complexity), "> " + std::to_string(ugly[i - 1].n),
                 std::to_string(ugly[i].n));
    return r;
}

VerificationReport check_ugly_successor_form(const ComplexityTable& table, const std::vector<UglyRecord>& ugly) {
    auto r = start("thm_1_6", table.ops().id(),
                   ugly.empty() ? "k=none" : span_text(ugly.front().complexity, ugly.back().complexity, "k"));
    for (const auto& u : ugly) {
        if (u.complexity < 2) continue;
        if (table[u.n - 1] + 1 != u.complexity)
            fail(r, std::to_string(u.n), "c(n-1) = " + std::to_string(u.complexity - 1),
                 "c(n-1) = " + std::to_string(table[u.n - 1]));
        else if (u.witness.root() != Semantics::Successor)
            fail(r, std::to_string(u.n), "S-form witness", serialize(u.witness));
    }
    return r;
}

VerificationReport check_gamma_bound(const ComplexityTable& table) {
    auto r = start("thm_2_1", table.ops().id(), span_text(1, table.limit()));
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        const double lb = gamma_lower_bound(n);
        if (table[n] + 1e-9 < lb) fail(r, std::to_string(n), ">= " + std::to_string(lb), std::to_string(table[n]));
    }
    return r;
}

VerificationReport check_base4_lower(const ComplexityTable& table) {
    auto r = start("thm_2_1_strong", table.ops().id(), span_text(1, table.limit()));
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n)
        if (!meets_base4_lower(n, table[n]))
            fail(r, std::to_string(n), ">= " + std::to_string(base4_lower_bound(n)), std::to_string(table[n]));
    return r;
}

VerificationReport check_base4_upper(const ComplexityTable& table) {
    auto r = start("thm_2_2", table.ops().id(), span_text(1, table.limit()));
    std::size_t longest = 0;
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        const std::string ub = "<= " + std::to_string(base4_upper_bound(n));
        if (!meets_base4_upper(n, table[n])) {
            fail(r, std::to_string(n), ub, std::to_string(table[n]));
            break;
        }
        const Term t = upper_bound_witness(n);
        longest = std::max(longest, t.length());
        if (evaluate_small(t) != n)
            fail(r, std::to_string(n), "base-4 witness of value n", serialize(t));
        else if (!meets_base4_upper(n, static_cast<unsigned>(t.length())))
            fail(r, std::to_string(n), "base-4 witness length " + ub, std::to_string(t.length()));
    }
    r.notes = "longest base-4 witness " + std::to_string(longest);
    return r;
}

VerificationReport check_base4_equality(const ComplexityTable& table) {
    auto r = start("cor_2_1", table.ops().id(), span_text(2, table.limit()));
    std::ostringstream hits;
    for (std::uint64_t n = 2; n <= table.limit() && r.pass; ++n) {
        const bool equal = equals_base4_lower(n, table[n]);
        if (equal) hits << (hits.tellp() > 0 ? " " : "") << n;
        if (equal != is_power_of_four(n))
            fail(r, std::to_string(n), is_power_of_four(n) ? "equality (n = 4^j)" : "strict inequality",
                 "c = " + std::to_string(table[n]));
    }
    r.notes = "equality at " + hits.str();
    return r;
}

VerificationReport check_closed_form(const std::vector<ExtremalRecord>& maxima, unsigned k_lo, unsigned k_hi) {
    auto r = start("thm_2_3", "", span_text(k_lo, k_hi, "k"));
    if (maxima.size() < k_hi) throw InsufficientRange("thm_2_3: maxima do not reach k=" + std::to_string(k_hi));
    for (unsigned k = k_lo; k <= k_hi; ++k) {
        const BigNat expected = closed_form_max(k);
        const auto& rec = maxima[k - 1];
        if (!rec.value || *rec.value != expected)
            fail(r, "k=" + std::to_string(k), to_string(expected), rec.value ? to_string(*rec.value) : "truncated");
    }
    return r;
}

VerificationReport check_extremal_structure(const OperatorSet& ops, const std::vector<ExtremalRecord>& maxima,
                                            unsigned k_max) {
    auto r = start("prop_2_1", ops.id(), span_text(1, k_max, "k"));
    if (maxima.size() < k_max) throw InsufficientRange("prop_2_1: maxima do not reach k=" + std::to_string(k_max));
    for (unsigned k = 1; k <= k_max; ++k) {
        const auto report = check_structure(maxima[k - 1]);
        if (!report.pass())
            fail(r, "k=" + std::to_string(k), "valid factor structure",
                 report.violations.front() + " in " +
                     (maxima[k - 1].witness ? serialize(*maxima[k - 1].witness) : std::string("?")));
    }
    return r;
}

VerificationReport check_tower_bound(const ComplexityTable& table) {
    auto r = start("thm_4_1", table.ops().id(), span_text(1, table.limit()));
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        const long bound = 4L * logstar3(n) - 1;
        if (static_cast<long>(table[n]) < bound)
            fail(r, std::to_string(n), ">= " + std::to_string(bound), std::to_string(table[n]));
    }
    return r;
}

VerificationReport check_obs_ugly_bound(const ComplexityTable& table, const std::vector<UglyRecord>& ugly) {
    auto r = start("obs_3_1", table.ops().id(), span_text(1, table.limit()));
    std::uint64_t boundary = 0;
    std::uint64_t first_boundary = 0;
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        const unsigned a = obs_a(n);
        const UglyRecord* nu = nullptr;
        for (const auto& u : ugly)
            if (u.complexity <= a && (!nu || u.n > nu->n)) nu = &u;
        if (!nu || nu->complexity != a)
            throw InsufficientRange("obs_3_1: no ugly number of complexity " + std::to_string(a) + " in range");
        const std::uint64_t bound = (nu->complexity + 1ULL) * (a + 1ULL) - 2;
        if (table[n] > bound)
            fail(r, std::to_string(n), "< " + std::to_string(bound), std::to_string(table[n]));
        else if (table[n] == bound && boundary++ == 0)
            first_boundary = n;
    }
    r.notes = "boundary hits " + std::to_string(boundary) +
              (boundary ? " (first n=" + std::to_string(first_boundary) + ")" : "");
    return r;
}

VerificationReport check_obs_log_bound(const ComplexityTable& table) {
    auto r = start("obs_3_2", table.ops().id(), span_text(1, table.limit()));
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        const double bound = std::ceil(base4_lower_bound(n) + 1.0 + obs_a(n) + 1.0 - 1e-9);
        if (table[n] > bound)
            fail(r, std::to_string(n), "<= " + std::to_string(static_cast<long>(bound)), std::to_string(table[n]));
    }
    return r;
}

VerificationReport check_tables_agree(const ComplexityTable& lhs, const ComplexityTable& rhs, std::uint64_t upto) {
    require_limit(lhs, upto, "obs_3_3");
    require_limit(rhs, upto, "obs_3_3");
    auto r = start("obs_3_3", lhs.ops().id() + "|" + rhs.ops().id(), span_text(1, upto));
    for (std::uint64_t n = 1; n <= upto && r.pass; ++n)
        if (lhs[n] != rhs[n]) fail(r, std::to_string(n), std::to_string(lhs[n]), std::to_string(rhs[n]));
    return r;
}

VerificationReport check_histogram_monotone(const OperatorSet& ops, const std::vector<HistogramRow>& rows) {
    std::vector<const HistogramRow*> complete;
    for (const auto& row : rows)
        if (row.complete) complete.push_back(&row);
    auto r = start("obs_3_4", ops.id(),
                   complete.empty() ? "k=none" : span_text(complete.front()->k, complete.back()->k, "k"));
    unsigned monotone_from = complete.empty() ? 0 : complete.front()->k;
    for (std::size_t i = 1; i < complete.size(); ++i) {
        if (complete[i]->count < complete[i - 1]->count) {
            fail(r, "k=" + std::to_string(complete[i]->k), ">= " + std::to_string(complete[i - 1]->count),
                 std::to_string(complete[i]->count));
            monotone_from = complete[i]->k;
        }
    }
    if (!complete.empty())
        r.notes = "nondecreasing on complete k=" + std::to_string(monotone_from) + ".." +
                  std::to_string(complete.back()->k) +
                  (r.pass ? "" : ", last decrease at k=" + std::to_string(monotone_from));
    return r;
}

VerificationReport check_oracle_match(const ComplexityTable& table, const TermCensus& census, unsigned depth) {
    auto r = start("oracle_match", table.ops().id(), "len<=" + std::to_string(depth));
    std::uint64_t compared = 0;
    for (const auto& [v, len] : census.minimal_length) {
        if (len > depth) continue;
        if (v > table.limit())
            throw InsufficientRange("oracle_match: value " + std::to_string(v) + " beyond table limit");
        ++compared;
        if (table[v] != len) fail(r, std::to_string(v), std::to_string(len), std::to_string(table[v]));
    }
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        if (table[n] == 0 || table[n] > depth) continue;
        if (!census.minimal_length.count(n))
            fail(r, std::to_string(n), "absent from census", std::to_string(table[n]));
    }
    r.notes = std::to_string(compared) + " values compared";
    return r;
}

VerificationReport check_witnesses(const ComplexityTable& table) {
    auto r = start("witnesses", table.ops().id(), span_text(1, table.limit()));
    for (std::uint64_t n = 1; n <= table.limit() && r.pass; ++n) {
        if (table[n] == 0) continue;
        const Term t = witness(table, n);
        const auto v = evaluate_small(t);
        if (v != n || t.length() != table[n])
            fail(r, std::to_string(n), "value n, length " + std::to_string(table[n]),
                 serialize(t) + " (length " + std::to_string(t.length()) + ")");
    }
    return r;
}

// ---------------------------------------------------------------- workspace

const ComplexityTable& Workspace::table(const std::string& opset) {
    auto it = tables_.find(opset);
    if (it == tables_.end()) {
        const auto ops = OperatorSet::from_id(opset);
        const bool quadratic = !ops.contains(Semantics::Mul) && !ops.contains(Semantics::Pow);
        const auto limit = quadratic ? config_.small_limit : config_.limit;
        it = tables_.emplace(opset, std::make_unique<ComplexityTable>(build_table(ops, limit, config_.engine))).first;
    }
    return *it->second;
}

void Workspace::adopt(ComplexityTable table) {
    const std::string id = table.ops().id();
    ugly_.erase(id);
    tables_[id] = std::make_unique<ComplexityTable>(std::move(table));
}

const std::vector<ExtremalRecord>& Workspace::maxima(const std::string& opset, unsigned k_max) {
    auto& cached = maxima_[opset];
    if (cached.size() < k_max) cached = max_table(OperatorSet::from_id(opset), k_max);
    return cached;
}

const TermCensus& Workspace::census(const std::string& opset) {
    auto it = censuses_.find(opset);
    if (it == censuses_.end())
        it = censuses_.emplace(opset, enumerate_values(OperatorSet::from_id(opset), config_.oracle_depth)).first;
    return it->second;
}

const std::vector<UglyRecord>& Workspace::ugly(const std::string& opset) {
    auto it = ugly_.find(opset);
    if (it == ugly_.end()) it = ugly_.emplace(opset, ugly_numbers(table(opset))).first;
    return it->second;
}

const std::vector<std::string>& check_ids() {
    static const std::vector<std::string> ids{
        "thm_1_1", "thm_1_2", "thm_1_3", "thm_1_4", "thm_1_5", "thm_1_6", "thm_2_1",   "thm_2_1_strong",
        "thm_2_2", "cor_2_1", "thm_2_3", "prop_2_1", "thm_4_1", "obs_3_1", "obs_3_2", "obs_3_3",
        "obs_3_4", "oracle_match", "witnesses"};
    return ids;
}

std::vector<VerificationReport> verify(const std::string& id, Workspace& ws) {
    const auto& cfg = ws.config();
    const std::vector<std::string> arithmetic{"1S*", "1S+*"};
    const std::vector<std::string> oracle_sets{"1S", "1S+", "1S*", "1S+*"};
    std::vector<VerificationReport> out;
    const auto each = [&](const std::vector<std::string>& sets, auto&& fn) {
        for (const auto& s : sets) out.push_back(fn(s));
    };
    if (id == "thm_1_1") {
        out.push_back(check_complexity_is_n(id, ws.table("1S"), std::min(cfg.small_limit, ws.table("1S").limit())));
    } else if (id == "thm_1_2") {
        out.push_back(check_complexity_is_n(id, ws.table("1S+"), std::min(cfg.small_limit, ws.table("1S+").limit())));
    } else if (id == "thm_1_3") {
        each(arithmetic, [&](const std::string& s) {
            return check_efficient_complexity(ws.table(s), ws.maxima(s, cfg.efficient_k_max), cfg.efficient_k_max);
        });
    } else if (id == "thm_1_4") {
        each(oracle_sets,
             [&](const std::string& s) { return check_term_count_bound(OperatorSet::from_id(s), ws.census(s)); });
    } else if (id == "thm_1_5") {
        each(arithmetic, [&](const std::string& s) { return check_ugly_increasing(ws.table(s).ops(), ws.ugly(s)); });
    } else if (id == "thm_1_6") {
        each(arithmetic, [&](const std::string& s) { return check_ugly_successor_form(ws.table(s), ws.ugly(s)); });
    } else if (id == "thm_2_1") {
        each(arithmetic, [&](const std::string& s) { return check_gamma_bound(ws.table(s)); });
    } else if (id == "thm_2_1_strong") {
        out.push_back(check_base4_lower(ws.table("1S*")));
    } else if (id == "thm_2_2") {
        each(arithmetic, [&](const std::string& s) { return check_base4_upper(ws.table(s)); });
    } else if (id == "cor_2_1") {
        out.push_back(check_base4_equality(ws.table("1S*")));
    } else if (id == "thm_2_3") {
        each(arithmetic, [&](const std::string& s) {
            auto r = check_closed_form(ws.maxima(s, cfg.closed_form_k_max), 11, cfg.closed_form_k_max);
            r.opset = s;
            return r;
        });
    } else if (id == "prop_2_1") {
        each(arithmetic, [&](const std::string& s) {
            return check_extremal_structure(OperatorSet::from_id(s), ws.maxima(s, cfg.structure_k_max),
                                            cfg.structure_k_max);
        });
    } else if (id == "thm_4_1") {
        out.push_back(check_tower_bound(ws.table("1S^")));
    } else if (id == "obs_3_1") {
        out.push_back(check_obs_ugly_bound(ws.table("1S+*"), ws.ugly("1S+*")));
    } else if (id == "obs_3_2") {
        out.push_back(check_obs_log_bound(ws.table("1S+*")));
    } else if (id == "obs_3_3") {
        const auto& a = ws.table("1S*");
        const auto& b = ws.table("1S+*");
        out.push_back(check_tables_agree(a, b, std::min(a.limit(), b.limit())));
    } else if (id == "obs_3_4") {
        each({"1S+*", "1S*"}, [&](const std::string& s) {
            return check_histogram_monotone(ws.table(s).ops(), histogram(ws.table(s)));
        });
    } else if (id == "oracle_match") {
        each(oracle_sets,
             [&](const std::string& s) { return check_oracle_match(ws.table(s), ws.census(s), cfg.oracle_depth); });
    } else if (id == "witnesses") {
        each({"1S*", "1S+*", "1S^"}, [&](const std::string& s) { return check_witnesses(ws.table(s)); });
    } else {
        throw std::invalid_argument("unknown check '" + id + "'");
    }
    return out;
}

}  // namespace minrep
