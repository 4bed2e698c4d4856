#include "disckit/io.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>

namespace disckit::io {

namespace {

using nlohmann::json;

Rational entry_from_json(const json& e) {
    if (e.is_number_integer()) return Rational(Int(e.get<std::int64_t>()));
    if (e.is_number_unsigned()) return Rational(Int(e.get<std::uint64_t>()));
    if (e.is_string()) return parse_rational(e.get<std::string>());
    if (e.is_number_float())
        throw InputError(
            "floating-point entries are not accepted; write non-integers as \"p/q\" or decimal "
            "strings to keep them exact");
    throw InputError("matrix entry must be an integer or an exact string");
}

json entry_to_json(const Rational& r) {
    if (denom(r) == 1 && numer(r) >= std::numeric_limits<std::int64_t>::min() &&
        numer(r) <= std::numeric_limits<std::int64_t>::max())
        return static_cast<std::int64_t>(numer(r));
    return rat_str(r);
}

int int_field(const json& j, const char* key) {
    if (!j.contains(key) || !j[key].is_number_integer())
        throw InputError(std::string("missing or non-integer field \"") + key + "\"");
    return j[key].get<int>();
}

}  // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_object()) throw InputError("matrix JSON must be an object");
    int m = int_field(j, "m");
    int n = int_field(j, "n");
    if (!j.contains("entries") || !j["entries"].is_array())
        throw InputError("matrix JSON needs an \"entries\" array");
    const json& rows = j["entries"];
    if (static_cast<int>(rows.size()) != m)
        throw InputError("\"entries\" must hold exactly m rows");
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    for (const json& row : rows) {
        if (!row.is_array() || static_cast<int>(row.size()) != n)
            throw InputError("every matrix row must be an array of n entries");
        for (const json& e : row) entries.push_back(entry_from_json(e));
    }
    return Matrix(m, n, std::move(entries));
}

json matrix_to_json(const Matrix& A) {
    json rows = json::array();
    for (int i = 0; i < A.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < A.cols(); ++j) row.push_back(entry_to_json(A.at(i, j)));
        rows.push_back(std::move(row));
    }
    return json{{"m", A.rows()}, {"n", A.cols()}, {"entries", std::move(rows)}};
}

Matrix hypergraph_from_json(const json& j) {
    if (!j.is_object()) throw InputError("hypergraph JSON must be an object");
    int n = int_field(j, "vertices");
    if (n < 0) throw InputError("negative vertex count");
    if (!j.contains("edges") || !j["edges"].is_array())
        throw InputError("hypergraph JSON needs an \"edges\" array");
    const json& edges = j["edges"];
    if (edges.empty()) throw InputError("hypergraph needs at least one edge");
    std::vector<Rational> entries(edges.size() * static_cast<std::size_t>(n), Rational(0));
    int i = 0;
    for (const json& edge : edges) {
        if (!edge.is_array()) throw InputError("every edge must be an array of vertex ids");
        for (const json& v : edge) {
            if (!v.is_number_integer()) throw InputError("vertex ids must be integers");
            int id = v.get<int>();
            if (id < 1 || id > n)
                throw InputError("vertex id " + std::to_string(id) + " outside 1.." +
                                 std::to_string(n));
            Rational& cell = entries[static_cast<std::size_t>(i) * n + (id - 1)];
            if (cell == 1) throw InputError("edge " + std::to_string(i + 1) + " repeats vertex " +
                                            std::to_string(id));
            cell = 1;
        }
        ++i;
    }
    return Matrix(i, n, std::move(entries));
}

Matrix matrix_from_csv(std::istream& in) {
    std::vector<Rational> entries;
    int n = -1, m = 0;
    std::string line;
    while (std::getline(in, line)) {
        if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
        std::vector<Rational> row;
        std::stringstream ss(line);
        std::string cell;
        while (std::getline(ss, cell, ',')) row.push_back(parse_rational(cell));
        if (n < 0)
            n = static_cast<int>(row.size());
        else if (static_cast<int>(row.size()) != n)
            throw InputError("CSV rows have inconsistent widths");
        entries.insert(entries.end(), row.begin(), row.end());
        ++m;
    }
    if (m == 0) throw InputError("CSV contains no rows");
    return Matrix(m, n, std::move(entries));
}

Matrix load_matrix(const std::string& path) {
    if (path.size() >= 4 && path.substr(path.size() - 4) == ".csv") {
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        return matrix_from_csv(in);
    }
    json j = read_json_file(path);
    if (j.is_object() && j.contains("edges")) return hypergraph_from_json(j);
    return matrix_from_json(j);
}

json coloring_to_json(const Coloring& p) {
    return json{{"colors", p.colors}, {"assign", p.assign}};
}

Coloring coloring_from_json(const json& j) {
    if (!j.is_object() || !j.contains("assign") || !j["assign"].is_array())
        throw InputError("coloring JSON must be {colors, assign}");
    Coloring p{int_field(j, "colors"), j["assign"].get<std::vector<int>>()};
    p.validate();
    return p;
}

json subset_to_json(const ColumnSubset& J) {
    json arr = json::array();
    for (int j : J.members) arr.push_back(j + 1);
    return arr;
}

ColumnSubset subset_from_json(const json& j, int parent_n) {
    if (!j.is_array()) throw InputError("subset JSON must be an array of 1-based indices");
    ColumnSubset s{parent_n, {}};
    for (const json& v : j) {
        if (!v.is_number_integer()) throw InputError("subset members must be integers");
        s.members.push_back(v.get<int>() - 1);
    }
    s.validate();
    return s;
}

json floating_to_json(const FloatingColoring& x) {
    json arr = json::array();
    for (const Rational& v : x.values) arr.push_back(rat_str(v));
    return arr;
}

FloatingColoring floating_from_json(const json& j) {
    if (!j.is_array()) throw InputError("fractional coloring JSON must be an array");
    FloatingColoring x;
    for (const json& v : j) {
        if (!v.is_string()) throw InputError("fractional values must be exact strings");
        x.values.push_back(parse_rational(v.get<std::string>()));
    }
    x.validate();
    return x;
}

json disc_result_to_json(const DiscrepancyResult& r, bool hereditary) {
    json witness{{"coloring", coloring_to_json(r.witness)},
                 {"row", r.witness_row + 1},
                 {"color", r.witness_color}};
    if (hereditary) witness["subset"] = subset_to_json(r.witness_subset);
    return json{{"value", rat_str(r.value)}, {"witness", std::move(witness)},
                {"budget_used", r.work}};
}

json weighted_to_json(const WeightedWitness& w, const ColumnSubset* subset) {
    json bits = json::array();
    for (const Rational& v : w.q.values) bits.push_back(v == 1 ? 1 : 0);
    json witness{{"q", std::move(bits)}, {"row", w.witness_row + 1}};
    if (subset) witness["subset"] = subset_to_json(*subset);
    return json{{"value", rat_str(w.value)},
                {"z", rat_str(w.z)},
                {"witness", std::move(witness)},
                {"budget_used", w.work}};
}

json trace_to_json(const RoundingTrace& t, const FloatingColoring& final_values) {
    json iters = json::array();
    for (const TraceEntry& e : t.iterations) {
        json values = json::array();
        for (const CaryValue& v : e.values) values.push_back(v.str());
        iters.push_back(json{{"i", e.iteration},
                             {"values", std::move(values)},
                             {"state", e.state},
                             {"o", e.carry_run},
                             {"tau", e.tau},
                             {"step_error", rat_str(e.step.measured)},
                             {"sharp_bound", rat_str(e.step.sharp_bound)},
                             {"relaxed_bound", rat_str(e.step.relaxed_bound)}});
    }
    json final_bits = json::array();
    for (const Rational& v : final_values.values) final_bits.push_back(v == 1 ? 1 : 0);
    return json{{"iterations", std::move(iters)},
                {"final_coloring", std::move(final_bits)},
                {"total_error", rat_str(t.total_error)},
                {"guarantee", rat_str(t.guarantee)}};
}

json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw InputError("malformed JSON in " + path + ": " + e.what());
    }
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot open " + path + " for writing");
    out << j.dump(2) << '\n';
}

}  // namespace disckit::io
