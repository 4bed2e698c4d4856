#pragma once

//! Inequality certification harness. Every bound the library relies on is
//! rechecked here as an exact rational comparison over a corpus of
//! instances, with witnesses sufficient to recompute both sides written
//! into a machine-readable report. There is no epsilon anywhere: a failed
//! comparison is a build-breaking bug, not noise.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "disckit/core.hpp"
#include "disckit/disc.hpp"
#include "disckit/gen.hpp"

namespace disckit {

//! Absolute constant 4001/2000 (exactly 2.0005) appearing in the two
//! comparison bounds certified by check_color_vs_weighted and
//! check_two_color_guarantee.
Rational k_upper();

struct CheckReport {
    std::string check_id;
    std::string instance;  // label, with "|param=value" suffixes when needed
    Rational lhs;
    Rational rhs;
    Rational slack;     // rhs - lhs
    bool pass = false;  // slack >= 0 and witness revalidation succeeded
    nlohmann::json witnesses = nlohmann::json::object();
    std::string note;  // diagnostics, e.g. revalidation mismatch
};

//! Caches the expensive per-instance quantities the checks share. Not
//! thread-safe: each worker owns one.
class InstanceEval {
  public:
    InstanceEval(std::string label, Matrix A, Budget budget);

    const std::string& label() const { return label_; }
    const Matrix& matrix() const { return A_; }
    const Budget& budget() const { return budget_; }

    const DiscrepancyResult& two_color_disc();
    const WeightedWitness& weighted_half();
    const DiscrepancyResult& hereditary(int c);
    const HereditaryWeightedResult& hereditary_weighted();

  private:
    std::string label_;
    Matrix A_;
    Budget budget_;
    std::optional<DiscrepancyResult> disc2_;
    std::optional<WeightedWitness> whalf_;
    std::map<int, DiscrepancyResult> herdisc_;
    std::optional<HereditaryWeightedResult> herw_;
};

//! disc(A,2) = wdisc(A,1/2), split into -le and -ge rows so that each row
//! keeps the invariant pass <=> slack >= 0.
std::vector<CheckReport> check_disc_equals_weighted_half(InstanceEval& ev);

//! herwdisc(A) <= 2 · herdisc(A,2).
CheckReport check_weighted_vs_two_color(InstanceEval& ev);

//! herdisc(A,c) <= k_upper · herwdisc(A).
CheckReport check_color_vs_weighted(InstanceEval& ev, int c);

//! herdisc(A,b) <= a²(b-1) · herdisc(A,a).
CheckReport check_color_count_change(InstanceEval& ev, int a, int b);

//! herdisc(A,b) <= k_upper · a · herdisc(A,a).
CheckReport check_two_color_guarantee(InstanceEval& ev, int a, int b);

//! The transfer bound herwdisc(A) <= c · herdisc(A,c) for odd c, two ways:
//! one value-level row, plus one constructive row per sample column subset
//! (full, first half, alternating) whose lhs is the worst measured
//! end-to-end rounding error over every base-c weight of expansion length
//! <= level_max, run with the exact oracle on the restricted matrix.
std::vector<CheckReport> check_rounding_transfer(InstanceEval& ev, int c, int level_max);

//! On the complete hypergraph with n = 2ck vertices:
//! (c/4) · herdisc(H,c) <= herdisc(H,2), from the closed forms for k >= 2
//! and by brute force for n <= 6; at (c,k) = (3,1) also emits -le/-ge rows
//! certifying that the closed form agrees with brute force.
std::vector<CheckReport> check_complete_family_ratio(int c, int k, const Budget& budget);

//! Recomputes the achieved value of every witness in the report and
//! compares with the recorded sides; on mismatch sets pass = false and
//! explains in note. `ev` supplies the instance matrix; rows whose
//! witnesses carry their own generator parameters may pass null.
void revalidate_report(CheckReport& report, InstanceEval* ev);

struct CorpusSpec {
    std::vector<InstanceSpec> instances;
    std::vector<int> colors = {2, 3, 4, 5};    // herdisc color range (a, b, c)
    std::vector<int> odd_colors = {3, 5};      // constructive transfer colors
    int level_max = 3;                         // weight expansion length cap
    Budget budget{};
    Rational rhs_scale{1};   // self-test hook: scale every rhs (1 = off)
    bool fail_fast = false;  // sequential, stop after first failing row
    int jobs = 0;            // worker threads; 0 = hardware concurrency

    //! Named families at desk scale plus 20 seeded random 0/1 matrices;
    //! every check finishes in minutes with exact enumeration.
    static CorpusSpec default_corpus();
};

struct SuiteResult {
    std::vector<CheckReport> reports;  // sorted by (check_id, instance)
    bool all_pass = true;
};

//! All checks over all instances. Instances are processed by a worker pool
//! but reports are merged and sorted deterministically: the output is
//! byte-identical for any worker count.
SuiteResult run_suite(const CorpusSpec& corpus);

nlohmann::json report_to_json(const CheckReport& r);
//! The report file format: a JSON array of report objects.
nlohmann::json suite_to_json(const SuiteResult& s);

}  // namespace disckit
