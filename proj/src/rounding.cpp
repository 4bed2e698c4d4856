#include "disckit/rounding.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <string>

#include "disckit/disc.hpp"

namespace disckit {

Coloring merge_classes(const Coloring& p, int b) {
    p.validate();
    if (b < 2) throw InputError("merged color count must be at least 2, got " + std::to_string(b));
    if (p.colors % b != 0)
        throw InputError("merged color count " + std::to_string(b) + " must divide " +
                         std::to_string(p.colors));
    Coloring q{b, p.assign};
    for (int& v : q.assign) v = (v - 1) % b + 1;
    return q;
}

namespace {

void check_odd(int c) {
    if (c < 3 || c % 2 == 0)
        throw InputError("digit rounding requires an odd color count >= 3, got " +
                         std::to_string(c));
}

//! Rounds the block J, whose columns all hold the constant value t with
//! length L >= 1, writing the new values into `out` at J's positions.
//! Columns the oracle puts into the first t_L classes go up to
//! trunc(t, L-1) + c^(1-L); the rest go down to trunc(t, L-1).
BlockReport round_block(const Matrix& A, const ColumnSubset& J, const CaryValue& t, int c,
                        const OracleConfig& cfg, std::vector<Rational>& out) {
    const int L = t.length();
    const int tl = t.digit(L);
    OracleAnswer ans = oracle_color(A, J, c, cfg);

    const Rational low = t.truncate(L - 1).value();
    // low + c^(1-L): low has length <= L-1, so the sum never exceeds 1
    const Rational high = L == 1 ? Rational(1) : t.truncate(L - 1).add_power(L - 1).result.value();
    for (int pos = 0; pos < J.size(); ++pos)
        out[J.members[pos]] = ans.coloring.assign[pos] <= tl ? high : low;

    const Rational tv = t.value();
    Rational measured(0);
    for (int i = 0; i < A.rows(); ++i) {
        Rational s(0);
        for (int j : J.members) s += A.at(i, j) * (tv - out[j]);
        if (rat_abs(s) > measured) measured = rat_abs(s);
    }
    Rational sharp =
        Rational(std::min(tl, c - tl), int_pow(Int(c), static_cast<unsigned>(L - 1))) * ans.disc;
    return BlockReport{J, t, ans.coloring, ans.disc, ans.certified, measured, sharp};
}

}  // namespace

std::pair<FloatingColoring, StepReport> round_constant_step(const Matrix& A, const CaryValue& t,
                                                            int c, const OracleConfig& cfg) {
    check_odd(c);
    if (t.base() != c)
        throw InputError("value expansion base " + std::to_string(t.base()) +
                         " does not match the color count " + std::to_string(c));
    if (t.length() < 1) throw InputError("cannot round a value of expansion length 0");

    FloatingColoring before = FloatingColoring::constant(A.cols(), t.value());
    std::vector<Rational> out(A.cols());
    BlockReport block = round_block(A, ColumnSubset::full(A.cols()), t, c, cfg, out);

    FloatingColoring after{std::move(out)};
    StepReport report;
    report.measured = float_distance(A, before, after);
    report.sharp_bound = block.sharp;
    report.relaxed_bound = Rational(c - 1, 2) *
                           Rational(1, int_pow(Int(c), static_cast<unsigned>(t.length() - 1))) *
                           block.oracle_disc;
    report.tau = 1;
    report.certified = block.certified;
    report.blocks.push_back(std::move(block));
    return {std::move(after), std::move(report)};
}

std::pair<FloatingColoring, StepReport> round_step(const Matrix& A, const FloatingColoring& p,
                                                   int c, int level, const OracleConfig& cfg) {
    check_odd(c);
    p.validate();
    if (p.cols() != A.cols())
        throw InputError("coloring has " + std::to_string(p.cols()) + " columns, matrix has " +
                         std::to_string(A.cols()));
    if (level < 1) throw InputError("step level must be at least 1");

    // blocks by value, in first-encounter order = by smallest column index
    std::vector<CaryValue> block_values;
    std::vector<std::vector<int>> block_cols;
    std::map<Rational, int> index;
    for (int j = 0; j < A.cols(); ++j) {
        const Rational& v = p.values[j];
        auto it = index.find(v);
        if (it == index.end()) {
            std::optional<CaryValue> cv = CaryValue::from_rational(v, c);
            if (!cv)
                throw InputError("value " + rat_str(v) + " has no finite base-" +
                                 std::to_string(c) + " expansion");
            if (cv->length() > level)
                throw InputError("value " + rat_str(v) + " has expansion length " +
                                 std::to_string(cv->length()) + ", above the step level " +
                                 std::to_string(level));
            it = index.emplace(v, static_cast<int>(block_values.size())).first;
            block_values.push_back(std::move(*cv));
            block_cols.emplace_back();
        }
        block_cols[it->second].push_back(j);
    }

    std::vector<Rational> out = p.values;
    StepReport report;
    report.tau = static_cast<int>(block_values.size());
    Rational worst_oracle(0);
    for (std::size_t k = 0; k < block_values.size(); ++k) {
        if (block_values[k].length() != level) continue;  // already short enough
        ColumnSubset J{A.cols(), block_cols[k]};
        BlockReport block = round_block(A, J, block_values[k], c, cfg, out);
        report.sharp_bound += block.sharp;
        if (block.oracle_disc > worst_oracle) worst_oracle = block.oracle_disc;
        report.certified = report.certified && block.certified;
        report.blocks.push_back(std::move(block));
    }

    FloatingColoring after{std::move(out)};
    report.measured = float_distance(A, p, after);
    report.relaxed_bound = Rational(c - 1, 2) *
                           Rational(1, int_pow(Int(c), static_cast<unsigned>(level - 1))) *
                           report.tau * worst_oracle;
    return {std::move(after), std::move(report)};
}

namespace {

//! Distinct values of q, descending, as base-c expansions.
std::vector<CaryValue> distinct_values(const FloatingColoring& q, int c) {
    std::set<Rational> seen(q.values.begin(), q.values.end());
    std::vector<CaryValue> vals;
    for (auto it = seen.rbegin(); it != seen.rend(); ++it) {
        std::optional<CaryValue> cv = CaryValue::from_rational(*it, c);
        if (!cv) throw std::logic_error("transfer produced a value without finite expansion");
        vals.push_back(std::move(*cv));
    }
    return vals;
}

//! Classifies a <= 2-value snapshot at the given level into the two carry
//! states: state 1 = both values agree above the last digit position;
//! state 2 = the values differ by exactly c^(-level), the smaller one ends
//! in a run of o digits equal to c-1, and they agree above that run.
void classify_state(const std::vector<CaryValue>& vals, int c, int level, int& state,
                    int& carry_run) {
    state = 1;
    carry_run = 0;
    if (vals.size() <= 1) return;
    if (vals.size() > 2)
        throw std::logic_error("constant-start transfer reached more than two distinct values");
    const CaryValue& t1 = vals[0];  // larger
    const CaryValue& t2 = vals[1];
    if (t1.truncate(level - 1) == t2.truncate(level - 1)) return;  // state 1

    if (t1.value() - t2.value() != Rational(1, int_pow(Int(c), static_cast<unsigned>(level))) ||
        t2.length() != level)
        throw std::logic_error("two-value snapshot matches neither carry state");
    int o = 0;
    for (int k = level; k >= 1 && t2.digit(k) == c - 1; --k) ++o;
    bool heads_agree = level - o - 1 < 0 ||  // run covers every fractional digit
                       t1.truncate(level - o - 1) == t2.truncate(level - o - 1);
    if (o < 1 || t1.length() != level - o || !heads_agree)
        throw std::logic_error("two-value snapshot matches neither carry state");
    state = 2;
    carry_run = o;
}

}  // namespace

TransferResult transfer_round(const Matrix& A, const CaryValue& z, int c,
                              const OracleConfig& cfg) {
    check_odd(c);
    if (z.base() != c)
        throw InputError("weight expansion base " + std::to_string(z.base()) +
                         " does not match the color count " + std::to_string(c));
    const int levels = z.length();

    FloatingColoring start = FloatingColoring::constant(A.cols(), z.value());
    FloatingColoring cur = start;

    RoundingTrace trace;
    trace.colors = c;
    trace.levels = levels;
    for (int i = 0; i < levels; ++i) {
        const int level = levels - i;
        std::vector<CaryValue> vals = distinct_values(cur, c);
        int state = 1, carry_run = 0;
        classify_state(vals, c, level, state, carry_run);

        auto [next, report] = round_step(A, cur, c, level, cfg);
        for (const BlockReport& b : report.blocks) {
            if (b.oracle_disc > trace.reference_disc) trace.reference_disc = b.oracle_disc;
            trace.certified = trace.certified && b.certified;
        }
        trace.iterations.push_back(TraceEntry{i, std::move(vals), static_cast<int>(report.tau),
                                              state, carry_run, std::move(report)});
        cur = std::move(next);
    }

    for (const Rational& v : cur.values)
        if (v != 0 && v != 1) throw std::logic_error("transfer did not reach a 0/1 coloring");
    trace.total_error = float_distance(A, start, cur);
    trace.guarantee = Rational(c) * trace.reference_disc;
    return TransferResult{std::move(cur), std::move(trace)};
}

EvenTransferResult transfer_even(const Matrix& A, const Rational& z, int c,
                                 const OracleConfig& cfg) {
    if (c < 2 || c % 2 != 0)
        throw InputError("this path handles even color counts only, got " + std::to_string(c));
    if (z != Rational(1, 2))
        throw InputError(
            "constructive transfer for even color counts supports weight 1/2 only; other "
            "weights are certified by the verification checks (value level), not constructed");

    OracleAnswer ans = oracle_color(A, ColumnSubset::full(A.cols()), c, cfg);
    Coloring merged = merge_classes(ans.coloring, 2);

    EvenTransferResult r;
    std::vector<Rational> bits(A.cols());
    for (int j = 0; j < A.cols(); ++j) bits[j] = merged.assign[j] == 1 ? 1 : 0;
    r.final_values = FloatingColoring{std::move(bits)};
    r.measured = float_distance(A, FloatingColoring::constant(A.cols(), Rational(1, 2)),
                                r.final_values);
    r.guarantee = Rational(c, 2) * ans.disc;
    r.merged = std::move(merged);
    r.oracle_coloring = std::move(ans.coloring);
    r.oracle_disc = std::move(ans.disc);
    r.certified = ans.certified;
    return r;
}

}  // namespace disckit
