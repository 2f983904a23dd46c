#pragma once

#include "minrep/analysis.hpp"
#include "minrep/census.hpp"
#include "minrep/engine.hpp"
#include "minrep/extremal.hpp"
#include "minrep/verify.hpp"

#include <iosfwd>
#include <vector>

namespace minrep {

// Comma-separated text with a single header row; deterministic for fixed input.

/// n,complexity,witness  (unreachable n: n,absent,)
void write_table_text(const ComplexityTable& table, std::ostream& out);
/// k,value,witness  (truncated rows: k,truncated,<note>)
void write_maxima(const std::vector<ExtremalRecord>& records, std::ostream& out);
/// n,witness,complexity,primality
void write_ugly(const std::vector<UglyRecord>& ugly, std::ostream& out);
/// k,count,complete
void write_histogram(const std::vector<HistogramRow>& rows, std::ostream& out);
/// check,opset,range,outcome,counterexample
void write_reports(const std::vector<VerificationReport>& reports, std::ostream& out);
/// k,terms,distinct_values,max_value
void write_census(const TermCensus& census, std::ostream& out);
/// value,minimal_length
void write_census_values(const TermCensus& census, std::ostream& out);

}  // namespace minrep
