#include "minrep/exports.hpp"

#include <algorithm>
#include <ostream>

namespace minrep {

namespace {

std::string field(std::string s) {
    std::replace(s.begin(), s.end(), ',', ';');
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

void write_table_text(const ComplexityTable& table, std::ostream& out) {
    out << "n,complexity,witness\n";
    for (std::uint64_t n = 1; n <= table.limit(); ++n) {
        if (table[n] == 0) out << n << ",absent,\n";
        else out << n << ',' << table[n] << ',' << serialize(witness(table, n)) << '\n';
    }
}

void write_maxima(const std::vector<ExtremalRecord>& records, std::ostream& out) {
    out << "k,value,witness\n";
    for (const auto& r : records) {
        if (r.value) out << r.k << ',' << to_string(*r.value) << ',' << (r.witness ? serialize(*r.witness) : "") << '\n';
        else out << r.k << ",truncated," << field(r.note) << '\n';
    }
}

void write_ugly(const std::vector<UglyRecord>& ugly, std::ostream& out) {
    out << "n,witness,complexity,primality\n";
    for (const auto& u : ugly)
        out << u.n << ',' << serialize(u.witness) << ',' << u.complexity << ',' << (u.is_prime ? "Prime" : "Not Prime")
            << '\n';
}

void write_histogram(const std::vector<HistogramRow>& rows, std::ostream& out) {
    out << "k,count,complete\n";
    for (const auto& r : rows) out << r.k << ',' << r.count << ',' << (r.complete ? "true" : "false") << '\n';
}

void write_reports(const std::vector<VerificationReport>& reports, std::ostream& out) {
    out << "check,opset,range,outcome,counterexample\n";
    for (const auto& r : reports) {
        out << r.check << ',' << field(r.opset) << ',' << field(r.range) << ',' << (r.pass ? "pass" : "fail") << ',';
        if (r.counterexample)
            out << field("n=" + r.counterexample->n + "; expected " + r.counterexample->expected + "; actual " +
                         r.counterexample->actual);
        out << '\n';
    }
}

void write_census(const TermCensus& census, std::ostream& out) {
    out << "k,terms,distinct_values,max_value\n";
    for (const auto& r : census.rows)
        out << r.k << ',' << to_string(r.terms) << ',' << r.distinct_values << ',' << r.max_value << '\n';
}

void write_census_values(const TermCensus& census, std::ostream& out) {
    out << "value,minimal_length\n";
    for (const auto& [v, len] : census.minimal_length) out << v << ',' << len << '\n';
}

}  // namespace minrep
