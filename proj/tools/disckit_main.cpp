//! disckit command line: exact discrepancy computations, digit-rounding
//! transfers, instance generation, and the inequality certification suite.
//! Every value printed or written is an exact rational.
//!
//! Exit codes: 0 success; 1 verification suite reported a failing check;
//! 2 malformed input or command line; 3 enumeration budget refused;
//! 4 unexpected internal error.

#include <cstdint>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"

#include "disckit/cary.hpp"
#include "disckit/core.hpp"
#include "disckit/disc.hpp"
#include "disckit/gen.hpp"
#include "disckit/io.hpp"
#include "disckit/oracle.hpp"
#include "disckit/rounding.hpp"
#include "disckit/verify.hpp"

namespace {

using disckit::Budget;
using disckit::InputError;
using disckit::Matrix;
using disckit::Rational;
using nlohmann::json;

//! Print to stdout, or write to a file when a path was given.
void emit(const json& doc, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << doc.dump(2) << "\n";
    } else {
        disckit::io::write_json_file(out_path, doc);
    }
}

//! "exact" | "greedy" | "random[:SEED]".
disckit::OracleConfig parse_oracle(const std::string& text, const Budget& budget) {
    disckit::OracleConfig cfg;
    cfg.budget = budget;
    cfg.cache = disckit::make_oracle_cache();
    if (text == "exact") {
        cfg.kind = disckit::OracleKind::exact;
    } else if (text == "greedy") {
        cfg.kind = disckit::OracleKind::greedy;
    } else if (text == "random" || text.rfind("random:", 0) == 0) {
        cfg.kind = disckit::OracleKind::random_restart;
        if (text.size() > 7) cfg.seed = std::stoull(text.substr(7));
    } else {
        throw InputError("unknown oracle '" + text + "' (want exact, greedy, or random[:SEED])");
    }
    return cfg;
}

struct BudgetOpts {
    std::uint64_t coloring_cap = Budget{}.coloring_cap;
    std::uint64_t total_cap = Budget{}.total_cap;

    Budget to_budget() const { return Budget{coloring_cap, total_cap}; }

    void attach(CLI::App* cmd) {
        cmd->add_option("--coloring-cap", coloring_cap,
                        "max colorings a single exact search may enumerate");
        cmd->add_option("--total-cap", total_cap,
                        "max summed work of a hereditary sweep over all column subsets");
    }
};

json round_summary(int colors, const Rational& z, const disckit::FloatingColoring& final_values,
                   const Rational& total_error, const Rational& reference_disc,
                   const Rational& guarantee, bool certified) {
    json doc;
    doc["colors"] = colors;
    doc["z"] = disckit::rat_str(z);
    json fin = json::array();
    for (const Rational& v : final_values.values) fin.push_back(v == 1 ? 1 : 0);
    doc["final"] = std::move(fin);
    doc["total_error"] = disckit::rat_str(total_error);
    doc["reference_disc"] = disckit::rat_str(reference_disc);
    doc["guarantee"] = disckit::rat_str(guarantee);
    doc["certified"] = certified;
    return doc;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"disckit: exact combinatorial discrepancy toolkit"};
    app.require_subcommand(1);
    int exit_code = 0;

    // disc / herdisc ------------------------------------------------------
    std::string disc_file, disc_out;
    int disc_colors = 2;
    BudgetOpts disc_budget;
    CLI::App* disc_cmd =
        app.add_subcommand("disc", "minimum deviation over all c-colorings, with witness");
    disc_cmd->add_option("matrix", disc_file, "matrix file (.json, .csv, or hypergraph JSON)")
        ->required();
    disc_cmd->add_option("--colors", disc_colors, "number of color classes")->required();
    disc_cmd->add_option("-o,--output", disc_out, "write the certificate JSON here");
    disc_budget.attach(disc_cmd);
    disc_cmd->callback([&]() {
        Matrix A = disckit::io::load_matrix(disc_file);
        auto r = disckit::optimal_disc(A, disc_colors, disc_budget.to_budget());
        emit(disckit::io::disc_result_to_json(r, false), disc_out);
    });

    std::string her_file, her_out;
    int her_colors = 2;
    BudgetOpts her_budget;
    CLI::App* her_cmd =
        app.add_subcommand("herdisc", "max of disc over all column subsets, with witness subset");
    her_cmd->add_option("matrix", her_file, "matrix file")->required();
    her_cmd->add_option("--colors", her_colors, "number of color classes")->required();
    her_cmd->add_option("-o,--output", her_out, "write the certificate JSON here");
    her_budget.attach(her_cmd);
    her_cmd->callback([&]() {
        Matrix A = disckit::io::load_matrix(her_file);
        auto r = disckit::hereditary_disc(A, her_colors, her_budget.to_budget());
        emit(disckit::io::disc_result_to_json(r, true), her_out);
    });

    // wdisc / herwdisc -----------------------------------------------------
    std::string wd_file, wd_out, wd_z;
    bool wd_sup = false;
    BudgetOpts wd_budget;
    CLI::App* wd_cmd = app.add_subcommand(
        "wdisc", "best 0/1 rounding error of the constant-z coloring (or its sup over z)");
    wd_cmd->add_option("matrix", wd_file, "matrix file")->required();
    wd_cmd->add_option("--z", wd_z, "weight in [0,1], e.g. 1/2 or 0.25");
    wd_cmd->add_flag("--sup", wd_sup, "maximize over all weights z in [0,1]");
    wd_cmd->add_option("-o,--output", wd_out, "write the certificate JSON here");
    wd_budget.attach(wd_cmd);
    wd_cmd->callback([&]() {
        if (wd_sup == !wd_z.empty()) {
            throw InputError("wdisc needs exactly one of --z and --sup");
        }
        Matrix A = disckit::io::load_matrix(wd_file);
        auto w = wd_sup ? disckit::weighted_disc_sup(A, wd_budget.to_budget())
                        : disckit::weighted_disc(A, disckit::parse_rational(wd_z),
                                                 wd_budget.to_budget());
        emit(disckit::io::weighted_to_json(w), wd_out);
    });

    std::string hw_file, hw_out;
    BudgetOpts hw_budget;
    CLI::App* hw_cmd = app.add_subcommand(
        "herwdisc", "max of the weight-sup rounding error over all column subsets");
    hw_cmd->add_option("matrix", hw_file, "matrix file")->required();
    hw_cmd->add_option("-o,--output", hw_out, "write the certificate JSON here");
    hw_budget.attach(hw_cmd);
    hw_cmd->callback([&]() {
        Matrix A = disckit::io::load_matrix(hw_file);
        auto r = disckit::hereditary_weighted_disc(A, hw_budget.to_budget());
        emit(disckit::io::weighted_to_json(r.witness, &r.subset), hw_out);
    });

    // round ----------------------------------------------------------------
    std::string rd_file, rd_out, rd_z, rd_oracle = "exact", rd_trace;
    int rd_colors = 3;
    BudgetOpts rd_budget;
    CLI::App* rd_cmd = app.add_subcommand(
        "round", "round the constant-z coloring to 0/1 through a c-coloring oracle");
    rd_cmd->add_option("matrix", rd_file, "matrix file")->required();
    rd_cmd->add_option("--z", rd_z, "weight in [0,1] with a finite base-c expansion")->required();
    rd_cmd->add_option("--colors", rd_colors, "oracle color count (odd: digit rounding; even: 1/2 only)")
        ->required();
    rd_cmd->add_option("--oracle", rd_oracle, "exact (default), greedy, or random[:SEED]");
    rd_cmd->add_option("--trace", rd_trace, "write the per-iteration trace JSON here (odd colors)");
    rd_cmd->add_option("-o,--output", rd_out, "write the summary JSON here");
    rd_budget.attach(rd_cmd);
    rd_cmd->callback([&]() {
        Matrix A = disckit::io::load_matrix(rd_file);
        Rational z = disckit::parse_rational(rd_z);
        auto cfg = parse_oracle(rd_oracle, rd_budget.to_budget());
        if (rd_colors % 2 == 0) {
            if (!rd_trace.empty()) {
                throw InputError(
                    "--trace needs an odd color count; the even path folds one oracle "
                    "coloring and has no per-digit iterations");
            }
            auto res = disckit::transfer_even(A, z, rd_colors, cfg);
            emit(round_summary(rd_colors, z, res.final_values, res.measured, res.oracle_disc,
                               res.guarantee, res.certified),
                 rd_out);
        } else {
            auto zc = disckit::CaryValue::from_rational(z, rd_colors);
            if (!zc) {
                throw InputError("z = " + disckit::rat_str(z) + " has no finite base-" +
                                 std::to_string(rd_colors) + " expansion");
            }
            auto res = disckit::transfer_round(A, *zc, rd_colors, cfg);
            if (!rd_trace.empty()) {
                disckit::io::write_json_file(
                    rd_trace, disckit::io::trace_to_json(res.trace, res.final_values));
            }
            emit(round_summary(rd_colors, z, res.final_values, res.trace.total_error,
                               res.trace.reference_disc, res.trace.guarantee,
                               res.trace.certified),
                 rd_out);
        }
    });

    // gen --------------------------------------------------------------
    std::string gen_family, gen_out, gen_density = "1/2";
    int gen_n = 0, gen_m = 0, gen_bound = 3;
    std::uint64_t gen_seed = 0;
    CLI::App* gen_cmd = app.add_subcommand("gen", "generate a named corpus instance");
    gen_cmd
        ->add_option("--family", gen_family,
                     "complete | balanced-pair | random01 | random-rational")
        ->required();
    gen_cmd->add_option("--n", gen_n, "columns (complete/balanced-pair: vertex parameter)")
        ->required();
    gen_cmd->add_option("--m", gen_m, "rows (random families)");
    gen_cmd->add_option("--density", gen_density, "probability of a 1 entry (random01)");
    gen_cmd->add_option("--seed", gen_seed, "generator seed (random families)");
    gen_cmd->add_option("--bound", gen_bound, "numerator/denominator bound (random-rational)");
    gen_cmd->add_option("-o,--output", gen_out, "write the matrix JSON here");
    gen_cmd->callback([&]() {
        disckit::InstanceSpec spec;
        if (gen_family == "complete") {
            spec.family = disckit::Family::complete;
        } else if (gen_family == "balanced-pair") {
            spec.family = disckit::Family::balanced_pair;
        } else if (gen_family == "random01") {
            spec.family = disckit::Family::random01;
        } else if (gen_family == "random-rational") {
            spec.family = disckit::Family::random_rational;
        } else {
            throw InputError("unknown family '" + gen_family + "'");
        }
        spec.n = gen_n;
        spec.m = gen_m;
        spec.density = disckit::parse_rational(gen_density);
        spec.seed = gen_seed;
        spec.bound = gen_bound;
        Matrix A = disckit::make_instance(spec);
        json doc = disckit::io::matrix_to_json(A);
        json meta;
        meta["family"] = gen_family;
        meta["label"] = disckit::instance_label(spec);
        meta["n"] = spec.n;
        if (spec.family == disckit::Family::random01 ||
            spec.family == disckit::Family::random_rational) {
            meta["m"] = spec.m;
            meta["seed"] = spec.seed;
        }
        if (spec.family == disckit::Family::random01) {
            meta["density"] = disckit::rat_str(spec.density);
        }
        if (spec.family == disckit::Family::random_rational) {
            meta["bound"] = spec.bound;
        }
        doc["meta"] = std::move(meta);
        emit(doc, gen_out);
    });

    // verify -----------------------------------------------------------
    std::string vf_corpus = "default", vf_json, vf_scale = "1";
    bool vf_fail_fast = false;
    int vf_jobs = 0, vf_level_max = 3;
    BudgetOpts vf_budget;
    CLI::App* vf_cmd =
        app.add_subcommand("verify", "recheck every certified inequality over a corpus");
    vf_cmd->add_option("--corpus", vf_corpus, "default | empty");
    vf_cmd->add_option("--json", vf_json, "write the full report array here");
    vf_cmd->add_flag("--fail-fast", vf_fail_fast, "sequential run, stop at the first failure");
    vf_cmd->add_option("--jobs", vf_jobs, "worker threads (0 = hardware concurrency)");
    vf_cmd->add_option("--level-max", vf_level_max, "weight expansion length for transfer checks");
    vf_cmd->add_option("--rhs-scale", vf_scale,
                       "self-test: scale every right-hand side (values below 1 must fail)");
    vf_budget.attach(vf_cmd);
    vf_cmd->callback([&]() {
        disckit::CorpusSpec corpus;
        if (vf_corpus == "default") {
            corpus = disckit::CorpusSpec::default_corpus();
        } else if (vf_corpus == "empty") {
            corpus = disckit::CorpusSpec{};
            corpus.instances.clear();
        } else {
            throw InputError("unknown corpus '" + vf_corpus + "' (want default or empty)");
        }
        corpus.budget = vf_budget.to_budget();
        corpus.fail_fast = vf_fail_fast;
        corpus.jobs = vf_jobs;
        corpus.level_max = vf_level_max;
        corpus.rhs_scale = disckit::parse_rational(vf_scale);
        disckit::SuiteResult suite = disckit::run_suite(corpus);
        if (!vf_json.empty()) {
            disckit::io::write_json_file(vf_json, disckit::suite_to_json(suite));
        }
        std::size_t failures = 0;
        for (const disckit::CheckReport& r : suite.reports) {
            if (r.pass) continue;
            ++failures;
            std::cout << "FAIL " << r.check_id << " " << r.instance << ": lhs "
                      << disckit::rat_str(r.lhs) << " vs rhs " << disckit::rat_str(r.rhs)
                      << " (slack " << disckit::rat_str(r.slack) << ")";
            if (!r.note.empty()) std::cout << " — " << r.note;
            std::cout << "\n";
        }
        std::cout << suite.reports.size() << " checks, " << suite.reports.size() - failures
                  << " passed, " << failures << " failed\n";
        if (!suite.all_pass) exit_code = 1;
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    } catch (const InputError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return 2;
    } catch (const disckit::BudgetError& e) {
        std::cerr << "budget refused: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    return exit_code;
}
