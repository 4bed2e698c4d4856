#include "disckit/verify.hpp"

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <functional>
#include <string>
#include <thread>
#include <tuple>
#include <utility>
#include <vector>

#include "disckit/cary.hpp"
#include "disckit/oracle.hpp"
#include "disckit/rounding.hpp"

namespace disckit {

namespace {

using nlohmann::json;

json subset_json(const ColumnSubset& s) {
    json a = json::array();
    for (int j : s.members) a.push_back(j + 1);  // external indices are 1-based
    return a;
}

ColumnSubset subset_from_node(const json& a, int parent_n) {
    ColumnSubset s;
    s.parent_n = parent_n;
    for (const auto& v : a) s.members.push_back(v.get<int>() - 1);
    s.validate();
    return s;
}

// Witness nodes are self-describing: "kind" picks the recomputation rule and
// "value" is the claimed result, so revalidation can walk any node tree.

//! A coloring whose deviation on (the named submatrix of) the instance is
//! the claimed value. family/n, when present, regenerate the base matrix.
json coloring_disc_node(const DiscrepancyResult& r, int colors, int family_n = 0) {
    json node;
    node["kind"] = "coloring-disc";
    node["colors"] = colors;
    node["assign"] = r.witness.assign;
    node["row"] = r.witness_row + 1;
    node["class"] = r.witness_color;
    if (family_n > 0) {
        node["family"] = "complete";
        node["n"] = family_n;
    }
    if (r.witness_subset.parent_n > 0) node["subset"] = subset_json(r.witness_subset);
    node["value"] = rat_str(r.value);
    return node;
}

//! A 0/1 rounding of the constant-z coloring achieving the claimed
//! weighted deviation.
json weighted_node(const WeightedWitness& w, const ColumnSubset* sub) {
    json node;
    node["kind"] = "weighted";
    node["z"] = rat_str(w.z);
    json q = json::array();
    for (const auto& v : w.q.values) q.push_back(v == 1 ? 1 : 0);
    node["q"] = std::move(q);
    node["row"] = w.witness_row + 1;
    if (sub != nullptr) node["subset"] = subset_json(*sub);
    node["value"] = rat_str(w.value);
    return node;
}

//! factor · value(of).
json scaled_node(const Rational& factor, json of) {
    json node;
    node["kind"] = "scaled";
    node["factor"] = rat_str(factor);
    Rational value = factor * parse_rational(of.at("value").get<std::string>());
    node["of"] = std::move(of);
    node["value"] = rat_str(value);
    return node;
}

//! Closed-form discrepancy of the balanced coloring of the complete
//! hypergraph; carries its own parameters, so no instance is needed.
json closed_form_node(int n, int colors) {
    std::vector<int> sizes = balanced_class_sizes(n, colors);
    json node;
    node["kind"] = "closed-form";
    node["family"] = "complete";
    node["n"] = n;
    node["colors"] = colors;
    node["sizes"] = sizes;
    node["value"] = rat_str(complete_disc_closed_form(n, colors, sizes));
    return node;
}

//! End-to-end rounding error of one weight on one column subset, with the
//! exact oracle; rerunning the transfer reproduces the value.
json transfer_node(int colors, const CaryValue& z, const ColumnSubset& sub, const Rational& err) {
    json node;
    node["kind"] = "transfer";
    node["colors"] = colors;
    node["z"] = z.str();
    node["subset"] = subset_json(sub);
    node["value"] = rat_str(err);
    return node;
}

Rational node_value(const json& node) {
    return parse_rational(node.at("value").get<std::string>());
}

CheckReport make_row(std::string id, std::string instance, json lhs, json rhs) {
    CheckReport row;
    row.check_id = std::move(id);
    row.instance = std::move(instance);
    row.lhs = node_value(lhs);
    row.rhs = node_value(rhs);
    row.slack = row.rhs - row.lhs;
    row.pass = row.slack >= 0;
    row.witnesses = json{{"lhs", std::move(lhs)}, {"rhs", std::move(rhs)}};
    return row;
}

//! Base matrix a witness node talks about: regenerated from family/n when
//! present, otherwise the attached instance; then restricted by "subset".
Matrix node_matrix(const json& node, const Matrix* base) {
    Matrix M = [&]() -> Matrix {
        if (node.contains("family")) return complete_hypergraph(node.at("n").get<int>());
        if (base == nullptr) throw InputError("witness names no matrix and no instance is attached");
        return *base;
    }();
    if (node.contains("subset")) {
        ColumnSubset J = subset_from_node(node.at("subset"), M.cols());
        return restrict_columns(M, J);
    }
    return M;
}

//! Recomputes a witness node's value from scratch and checks it against the
//! recorded one; throws with a diagnostic on any mismatch.
Rational recompute_node(const json& node, const Matrix* base, const Budget& budget) {
    const std::string kind = node.at("kind").get<std::string>();
    Rational got = [&]() -> Rational {
        if (kind == "scaled") {
            return parse_rational(node.at("factor").get<std::string>()) *
                   recompute_node(node.at("of"), base, budget);
        }
        if (kind == "closed-form") {
            return complete_disc_closed_form(node.at("n").get<int>(), node.at("colors").get<int>(),
                                             node.at("sizes").get<std::vector<int>>());
        }
        Matrix M = node_matrix(node, base);
        if (kind == "coloring-disc") {
            Coloring p{node.at("colors").get<int>(), node.at("assign").get<std::vector<int>>()};
            return coloring_disc(M, p).value;
        }
        if (kind == "weighted") {
            Rational z = parse_rational(node.at("z").get<std::string>());
            FloatingColoring q;
            for (const auto& b : node.at("q")) q.values.emplace_back(b.get<int>());
            return float_distance(M, FloatingColoring::constant(M.cols(), z), q);
        }
        if (kind == "transfer") {
            OracleConfig cfg;
            cfg.kind = OracleKind::exact;
            cfg.budget = budget;
            cfg.cache = make_oracle_cache();
            CaryValue z = CaryValue::parse(node.at("z").get<std::string>());
            return transfer_round(M, z, node.at("colors").get<int>(), cfg).trace.total_error;
        }
        throw InputError("unknown witness kind: " + kind);
    }();
    if (got != node_value(node)) {
        throw InputError("recomputed " + kind + " witness value " + rat_str(got) +
                         " != recorded " + node.at("value").get<std::string>());
    }
    return got;
}

}  // namespace

Rational k_upper() { return Rational(4001, 2000); }

InstanceEval::InstanceEval(std::string label, Matrix A, Budget budget)
    : label_(std::move(label)), A_(std::move(A)), budget_(budget) {}

const DiscrepancyResult& InstanceEval::two_color_disc() {
    if (!disc2_) disc2_ = optimal_disc(A_, 2, budget_);
    return *disc2_;
}

const WeightedWitness& InstanceEval::weighted_half() {
    if (!whalf_) whalf_ = weighted_disc(A_, Rational(1, 2), budget_);
    return *whalf_;
}

const DiscrepancyResult& InstanceEval::hereditary(int c) {
    auto it = herdisc_.find(c);
    if (it == herdisc_.end()) it = herdisc_.emplace(c, hereditary_disc(A_, c, budget_)).first;
    return it->second;
}

const HereditaryWeightedResult& InstanceEval::hereditary_weighted() {
    if (!herw_) herw_ = hereditary_weighted_disc(A_, budget_);
    return *herw_;
}

std::vector<CheckReport> check_disc_equals_weighted_half(InstanceEval& ev) {
    json two = coloring_disc_node(ev.two_color_disc(), 2);
    json half = weighted_node(ev.weighted_half(), nullptr);
    std::vector<CheckReport> rows;
    rows.push_back(make_row("disc2-eq-wdisc-half-le", ev.label(), two, half));
    rows.push_back(make_row("disc2-eq-wdisc-half-ge", ev.label(), half, two));
    return rows;
}

CheckReport check_weighted_vs_two_color(InstanceEval& ev) {
    const HereditaryWeightedResult& hw = ev.hereditary_weighted();
    json lhs = weighted_node(hw.witness, &hw.subset);
    json rhs = scaled_node(Rational(2), coloring_disc_node(ev.hereditary(2), 2));
    return make_row("herwdisc-le-two-herdisc2", ev.label(), std::move(lhs), std::move(rhs));
}

CheckReport check_color_vs_weighted(InstanceEval& ev, int c) {
    const HereditaryWeightedResult& hw = ev.hereditary_weighted();
    json lhs = coloring_disc_node(ev.hereditary(c), c);
    json rhs = scaled_node(k_upper(), weighted_node(hw.witness, &hw.subset));
    return make_row("herdisc-le-k-herwdisc", ev.label() + "|colors=" + std::to_string(c),
                    std::move(lhs), std::move(rhs));
}

CheckReport check_color_count_change(InstanceEval& ev, int a, int b) {
    json lhs = coloring_disc_node(ev.hereditary(b), b);
    json rhs = scaled_node(Rational(a) * a * (b - 1), coloring_disc_node(ev.hereditary(a), a));
    return make_row("herdisc-color-change",
                    ev.label() + "|a=" + std::to_string(a) + ",b=" + std::to_string(b),
                    std::move(lhs), std::move(rhs));
}

CheckReport check_two_color_guarantee(InstanceEval& ev, int a, int b) {
    json lhs = coloring_disc_node(ev.hereditary(b), b);
    json rhs = scaled_node(k_upper() * a, coloring_disc_node(ev.hereditary(a), a));
    return make_row("herdisc-two-color-cost",
                    ev.label() + "|a=" + std::to_string(a) + ",b=" + std::to_string(b),
                    std::move(lhs), std::move(rhs));
}

std::vector<CheckReport> check_rounding_transfer(InstanceEval& ev, int c, int level_max) {
    std::vector<CheckReport> rows;
    const std::string colors_key = "|colors=" + std::to_string(c);
    const HereditaryWeightedResult& hw = ev.hereditary_weighted();
    json bound = scaled_node(Rational(c), coloring_disc_node(ev.hereditary(c), c));
    rows.push_back(make_row("transfer-value", ev.label() + colors_key,
                            weighted_node(hw.witness, &hw.subset), bound));

    const int n = ev.matrix().cols();
    struct Sample {
        const char* name;
        ColumnSubset sub;
    };
    std::vector<Sample> samples;
    samples.push_back({"full", ColumnSubset::full(n)});
    ColumnSubset half{n, {}};
    for (int j = 0; j < (n + 1) / 2; ++j) half.members.push_back(j);
    samples.push_back({"half", std::move(half)});
    ColumnSubset alt{n, {}};
    for (int j = 0; j < n; j += 2) alt.members.push_back(j);
    samples.push_back({"alternating", std::move(alt)});

    const Int den = int_pow(Int(c), static_cast<unsigned>(level_max));
    for (const Sample& s : samples) {
        Matrix M = restrict_columns(ev.matrix(), s.sub);
        OracleConfig cfg;
        cfg.kind = OracleKind::exact;
        cfg.budget = ev.budget();
        cfg.cache = make_oracle_cache();  // shared across weights on this submatrix
        bool first = true;
        Rational worst;
        json worst_node;
        for (Int k = 0; k <= den; ++k) {
            auto z = CaryValue::from_rational(Rational(k, den), c);
            TransferResult res = transfer_round(M, *z, c, cfg);
            if (first || res.trace.total_error > worst) {
                first = false;
                worst = res.trace.total_error;
                worst_node = transfer_node(c, *z, s.sub, worst);
            }
        }
        rows.push_back(make_row("transfer-constructive",
                                ev.label() + colors_key + ",subset=" + s.name,
                                std::move(worst_node), bound));
    }
    return rows;
}

std::vector<CheckReport> check_complete_family_ratio(int c, int k, const Budget& budget) {
    std::vector<CheckReport> rows;
    const int n = 2 * c * k;
    const std::string inst = "complete-" + std::to_string(n) + "|colors=" + std::to_string(c) +
                             ",k=" + std::to_string(k);
    if (n <= 6) {
        // Small enough to take both sides from exhaustive search.
        InstanceEval local("complete-" + std::to_string(n), complete_hypergraph(n), budget);
        json hc = coloring_disc_node(local.hereditary(c), c, n);
        json h2 = coloring_disc_node(local.hereditary(2), 2, n);
        rows.push_back(make_row("complete-family-ratio", inst, scaled_node(Rational(c, 4), hc),
                                std::move(h2)));
        if (k == 1 && c == 3) {
            // At the brute-force point, also certify the closed form itself.
            json cf = closed_form_node(n, c);
            const std::string agree_inst = "complete-" + std::to_string(n) +
                                           "|colors=" + std::to_string(c);
            rows.push_back(make_row("complete-closed-form-agreement-le", agree_inst, cf, hc));
            rows.push_back(make_row("complete-closed-form-agreement-ge", agree_inst,
                                    std::move(hc), std::move(cf)));
        }
    } else {
        rows.push_back(make_row("complete-family-ratio", inst,
                                scaled_node(Rational(c, 4), closed_form_node(n, c)),
                                closed_form_node(n, 2)));
    }
    return rows;
}

void revalidate_report(CheckReport& report, InstanceEval* ev) {
    try {
        const Matrix* base = ev != nullptr ? &ev->matrix() : nullptr;
        const Budget budget = ev != nullptr ? ev->budget() : Budget{};
        Rational scale{1};
        if (report.witnesses.contains("rhs_scale")) {
            scale = parse_rational(report.witnesses.at("rhs_scale").get<std::string>());
        }
        Rational lhs = recompute_node(report.witnesses.at("lhs"), base, budget);
        Rational rhs = recompute_node(report.witnesses.at("rhs"), base, budget) * scale;
        if (lhs != report.lhs || rhs != report.rhs) {
            throw InputError("recomputed sides " + rat_str(lhs) + " / " + rat_str(rhs) +
                             " do not match the recorded row");
        }
    } catch (const std::exception& e) {
        report.pass = false;
        report.note = std::string("witness revalidation failed: ") + e.what();
    }
}

CorpusSpec CorpusSpec::default_corpus() {
    CorpusSpec spec;
    for (int n = 2; n <= 6; ++n) {
        InstanceSpec s;
        s.family = Family::complete;
        s.n = n;
        spec.instances.push_back(std::move(s));
    }
    for (int n = 1; n <= 3; ++n) {
        InstanceSpec s;
        s.family = Family::balanced_pair;
        s.n = n;
        spec.instances.push_back(std::move(s));
    }
    for (int seed = 1; seed <= 20; ++seed) {
        InstanceSpec s;
        s.family = Family::random01;
        s.m = 2 + (seed - 1) % 3;
        s.n = 4 + (seed - 1) % 5;
        s.density = Rational(1, 2);
        s.seed = static_cast<std::uint64_t>(seed);
        spec.instances.push_back(std::move(s));
    }
    return spec;
}

namespace {

//! Applies the rhs self-test scale, then revalidates every row in place.
void finalize_rows(std::vector<CheckReport>& rows, InstanceEval* ev, const Rational& scale) {
    for (CheckReport& row : rows) {
        if (scale != 1) {
            row.rhs *= scale;
            row.slack = row.rhs - row.lhs;
            row.pass = row.slack >= 0;
            row.witnesses["rhs_scale"] = rat_str(scale);
        }
        revalidate_report(row, ev);
    }
}

std::vector<CheckReport> run_instance_task(const InstanceSpec& spec, const CorpusSpec& corpus) {
    InstanceEval ev(instance_label(spec), make_instance(spec), corpus.budget);
    std::vector<CheckReport> rows;
    auto add = [&rows](std::vector<CheckReport> more) {
        for (CheckReport& r : more) rows.push_back(std::move(r));
    };
    add(check_disc_equals_weighted_half(ev));
    rows.push_back(check_weighted_vs_two_color(ev));
    for (int c : corpus.colors) rows.push_back(check_color_vs_weighted(ev, c));
    for (int a : corpus.colors) {
        for (int b : corpus.colors) {
            rows.push_back(check_color_count_change(ev, a, b));
            rows.push_back(check_two_color_guarantee(ev, a, b));
        }
    }
    for (int c : corpus.odd_colors) add(check_rounding_transfer(ev, c, corpus.level_max));
    finalize_rows(rows, &ev, corpus.rhs_scale);
    return rows;
}

std::vector<CheckReport> run_family_task(const CorpusSpec& corpus) {
    std::vector<CheckReport> rows;
    auto add = [&rows](std::vector<CheckReport> more) {
        for (CheckReport& r : more) rows.push_back(std::move(r));
    };
    for (int c : corpus.colors) add(check_complete_family_ratio(c, 2, corpus.budget));
    add(check_complete_family_ratio(3, 1, corpus.budget));
    finalize_rows(rows, nullptr, corpus.rhs_scale);  // rows regenerate their own matrices
    return rows;
}

}  // namespace

SuiteResult run_suite(const CorpusSpec& corpus) {
    std::vector<std::function<std::vector<CheckReport>()>> tasks;
    for (const InstanceSpec& spec : corpus.instances) {
        tasks.emplace_back([spec, &corpus]() { return run_instance_task(spec, corpus); });
    }
    if (!corpus.instances.empty()) {
        tasks.emplace_back([&corpus]() { return run_family_task(corpus); });
    }

    std::vector<std::vector<CheckReport>> results(tasks.size());
    if (corpus.fail_fast) {
        for (std::size_t i = 0; i < tasks.size(); ++i) {
            results[i] = tasks[i]();
            auto bad = std::find_if(results[i].begin(), results[i].end(),
                                    [](const CheckReport& r) { return !r.pass; });
            if (bad != results[i].end()) {
                results[i].erase(bad + 1, results[i].end());
                break;
            }
        }
    } else if (!tasks.empty()) {
        unsigned jobs = corpus.jobs > 0 ? static_cast<unsigned>(corpus.jobs)
                                        : std::max(1u, std::thread::hardware_concurrency());
        jobs = std::min<unsigned>(jobs, static_cast<unsigned>(tasks.size()));
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(jobs);
        std::vector<std::thread> pool;
        pool.reserve(jobs);
        for (unsigned w = 0; w < jobs; ++w) {
            pool.emplace_back([&, w]() {
                try {
                    for (std::size_t i = next.fetch_add(1); i < tasks.size();
                         i = next.fetch_add(1)) {
                        results[i] = tasks[i]();
                    }
                } catch (...) {
                    errors[w] = std::current_exception();
                }
            });
        }
        for (std::thread& t : pool) t.join();
        for (const std::exception_ptr& e : errors) {
            if (e) std::rethrow_exception(e);
        }
    }

    SuiteResult out;
    for (std::vector<CheckReport>& rows : results) {
        for (CheckReport& r : rows) out.reports.push_back(std::move(r));
    }
    std::stable_sort(out.reports.begin(), out.reports.end(),
                     [](const CheckReport& a, const CheckReport& b) {
                         return std::tie(a.check_id, a.instance) < std::tie(b.check_id, b.instance);
                     });
    out.all_pass = std::all_of(out.reports.begin(), out.reports.end(),
                               [](const CheckReport& r) { return r.pass; });
    return out;
}

nlohmann::json report_to_json(const CheckReport& r) {
    json j;
    j["check_id"] = r.check_id;
    j["instance"] = r.instance;
    j["lhs"] = rat_str(r.lhs);
    j["rhs"] = rat_str(r.rhs);
    j["slack"] = rat_str(r.slack);
    j["pass"] = r.pass;
    j["witnesses"] = r.witnesses;
    j["note"] = r.note;
    return j;
}

nlohmann::json suite_to_json(const SuiteResult& s) {
    json arr = json::array();
    for (const CheckReport& r : s.reports) arr.push_back(report_to_json(r));
    return arr;
}

}  // namespace disckit
