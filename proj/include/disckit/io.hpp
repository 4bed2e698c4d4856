#pragma once

//! Interchange formats. Matrices travel as JSON {"m", "n", "entries"} with
//! integer numbers or exact "p/q" / decimal strings (never JSON floats, so
//! values survive round-trips bit-exactly), as CSV rows of the same tokens,
//! or as hypergraph JSON {"vertices", "edges"} with 1-based vertex ids.
//! All certificate output uses 1-based column and row indices.

#include <iosfwd>
#include <string>

#include "json.hpp"

#include "disckit/core.hpp"
#include "disckit/disc.hpp"
#include "disckit/rounding.hpp"

namespace disckit::io {

Matrix matrix_from_json(const nlohmann::json& j);
nlohmann::json matrix_to_json(const Matrix& A);

//! {"vertices": n, "edges": [[1-based ids]...]} -> 0/1 incidence matrix,
//! one row per edge in input order.
Matrix hypergraph_from_json(const nlohmann::json& j);

Matrix matrix_from_csv(std::istream& in);

//! Reads a matrix file: ".csv" as CSV, anything else as JSON (hypergraph
//! JSON is recognized by its "edges" key).
Matrix load_matrix(const std::string& path);

nlohmann::json coloring_to_json(const Coloring& p);
Coloring coloring_from_json(const nlohmann::json& j);

//! 1-based member array.
nlohmann::json subset_to_json(const ColumnSubset& J);
ColumnSubset subset_from_json(const nlohmann::json& j, int parent_n);

//! Array of exact value strings.
nlohmann::json floating_to_json(const FloatingColoring& x);
FloatingColoring floating_from_json(const nlohmann::json& j);

//! Certificate for disc/herdisc results; includes the witness subset only
//! for hereditary quantities.
nlohmann::json disc_result_to_json(const DiscrepancyResult& r, bool hereditary);

//! Certificate for wdisc/wdisc-sup results; `subset` (may be null) is the
//! hereditary witness subset.
nlohmann::json weighted_to_json(const WeightedWitness& w,
                                const ColumnSubset* subset = nullptr);

//! The trace schema: {iterations: [{i, values, state, o, tau, step_error,
//! sharp_bound, relaxed_bound}], final_coloring, total_error, guarantee}.
nlohmann::json trace_to_json(const RoundingTrace& t, const FloatingColoring& final_values);

nlohmann::json read_json_file(const std::string& path);
//! Writes with 2-space indentation and a trailing newline; key order is
//! lexicographic (library default), so equal documents are equal bytes.
void write_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace disckit::io
