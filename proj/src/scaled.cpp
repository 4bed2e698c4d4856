#include "scaled.hpp"

#include <boost/multiprecision/integer.hpp>
#include <set>
#include <utility>

namespace disckit::detail {

ScaledMatrix::ScaledMatrix(const Matrix& A) : m(A.rows()), n(A.cols()) {
    for (const Rational& a : A.entries()) scale = boost::multiprecision::lcm(scale, denom(a));
    b.reserve(A.entries().size());
    for (const Rational& a : A.entries()) {
        Rational s = a * scale;
        b.push_back(numer(s));  // exact: scale is a multiple of every denominator
        if (b.back() < 0) nonneg = false;
        if (b.back() != 0 && b.back() != 1) zero_one = false;
    }
}

std::vector<Int> subset_row_sums(const ScaledMatrix& S, std::span<const int> cols) {
    std::vector<Int> sums(S.m, Int(0));
    for (int i = 0; i < S.m; ++i)
        for (int j : cols) sums[i] += S.at(i, j);
    return sums;
}

namespace {

// c * b, column-major over the subset: out[pos][i] = mult * b[i][cols[pos]]
std::vector<std::vector<Int>> scaled_columns(const ScaledMatrix& S, std::span<const int> cols,
                                             const Int& mult) {
    std::vector<std::vector<Int>> out(cols.size());
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        out[pos].reserve(S.m);
        for (int i = 0; i < S.m; ++i) out[pos].push_back(mult * S.at(i, cols[pos]));
    }
    return out;
}

}  // namespace

ColoringEval eval_coloring(const ScaledMatrix& S, std::span<const int> cols,
                           const std::vector<int>& assign, int c) {
    std::vector<Int> sums = subset_row_sums(S, cols);
    // cls[d-1][i] = c * Σ_{assign[pos]==d} b[i][cols[pos]]
    std::vector<std::vector<Int>> cls(c, std::vector<Int>(S.m, Int(0)));
    for (std::size_t pos = 0; pos < cols.size(); ++pos) {
        std::vector<Int>& target = cls[assign[pos] - 1];
        for (int i = 0; i < S.m; ++i) target[i] += c * S.at(i, cols[pos]);
    }
    ColoringEval ev{Int(-1), 0, 1};
    for (int i = 0; i < S.m; ++i)
        for (int d = 0; d < c; ++d) {
            Int v = int_abs(cls[d][i] - sums[i]);
            if (v > ev.dev) {
                ev.dev = v;
                ev.row = i;
                ev.color = d + 1;
            }
        }
    return ev;
}

ColoringSearch search_optimal_coloring(const ScaledMatrix& S, std::span<const int> cols, int c) {
    const int t = static_cast<int>(cols.size());
    const int m = S.m;
    std::vector<Int> sums = subset_row_sums(S, cols);
    std::vector<std::vector<Int>> col_c = scaled_columns(S, cols, Int(c));

    std::vector<std::vector<Int>> cls(c, std::vector<Int>(m, Int(0)));
    std::vector<int> assign(t, 1);
    // pos_dev[depth]: max positive deviation c*classum - rowsum seen among the
    // first `depth` placements; for nonneg matrices it only grows downward.
    std::vector<Int> pos_dev(t + 1, Int(0));

    ColoringSearch best;
    best.dev = -1;
    bool found = false;

    auto leaf = [&]() {
        ++best.leaves;
        Int worst(-1);
        for (int i = 0; i < m && (!found || worst < best.dev); ++i)
            for (int d = 0; d < c; ++d) {
                Int v = int_abs(cls[d][i] - sums[i]);
                if (v > worst) worst = v;
            }
        if (found && worst >= best.dev) return;
        found = true;
        best.dev = worst;
        best.assign = assign;
        // first attaining (row, class) pair, rows outermost
        for (int i = 0; i < m; ++i)
            for (int d = 0; d < c; ++d)
                if (int_abs(cls[d][i] - sums[i]) == worst) {
                    best.row = i;
                    best.color = d + 1;
                    return;
                }
    };

    auto rec = [&](auto&& self, int depth, int used) -> void {
        if (depth == t) {
            leaf();
            return;
        }
        const int limit = std::min(used + 1, c);  // new color only one past the used range
        const std::vector<Int>& add = col_c[depth];
        for (int d = 1; d <= limit; ++d) {
            std::vector<Int>& target = cls[d - 1];
            for (int i = 0; i < m; ++i) target[i] += add[i];
            Int lb = pos_dev[depth];
            if (S.nonneg) {
                for (int i = 0; i < m; ++i) {
                    Int v = target[i] - sums[i];
                    if (v > lb) lb = v;
                }
            }
            if (!(S.nonneg && found && lb >= best.dev)) {
                pos_dev[depth + 1] = lb;
                assign[depth] = d;
                self(self, depth + 1, std::max(used, d));
            }
            for (int i = 0; i < m; ++i) target[i] -= add[i];
        }
    };
    rec(rec, 0, 0);

    return best;
}

WeightedSearch search_weighted(const ScaledMatrix& S, std::span<const int> cols, const Int& zn,
                               const Int& zd) {
    const int t = static_cast<int>(cols.size());
    const int m = S.m;
    std::vector<Int> sums = subset_row_sums(S, cols);
    std::vector<Int> target(m);  // zn * rowsum = (zd*scale) * z*S_i
    for (int i = 0; i < m; ++i) target[i] = zn * sums[i];
    std::vector<std::vector<Int>> col_z = scaled_columns(S, cols, zd);

    std::vector<Int> acc(m, Int(0));  // (zd*scale) * (Aq)_i
    std::vector<std::uint8_t> q(t, 0);
    std::vector<Int> pos_dev(t + 1, Int(0));  // max of acc - target so far

    WeightedSearch best;
    best.dev = -1;
    bool found = false;

    auto leaf = [&]() {
        ++best.leaves;
        Int worst(-1);
        for (int i = 0; i < m && (!found || worst < best.dev); ++i) {
            Int v = int_abs(target[i] - acc[i]);
            if (v > worst) worst = v;
        }
        if (found && worst >= best.dev) return;
        found = true;
        best.dev = worst;
        best.q = q;
        for (int i = 0; i < m; ++i)
            if (int_abs(target[i] - acc[i]) == worst) {
                best.row = i;
                return;
            }
    };

    auto rec = [&](auto&& self, int depth) -> void {
        if (depth == t) {
            leaf();
            return;
        }
        // q = 1 first (see header): witness order matches coloring witnesses
        const std::vector<Int>& add = col_z[depth];
        for (int i = 0; i < m; ++i) acc[i] += add[i];
        Int lb = pos_dev[depth];
        if (S.nonneg) {
            for (int i = 0; i < m; ++i) {
                Int v = acc[i] - target[i];
                if (v > lb) lb = v;
            }
        }
        if (!(S.nonneg && found && lb >= best.dev)) {
            pos_dev[depth + 1] = lb;
            q[depth] = 1;
            self(self, depth + 1);
        }
        for (int i = 0; i < m; ++i) acc[i] -= add[i];
        q[depth] = 0;
        pos_dev[depth + 1] = pos_dev[depth];
        self(self, depth + 1);
    };
    rec(rec, 0);

    return best;
}

std::vector<Rational> weighted_sup_candidates(const ScaledMatrix& S, std::span<const int> cols) {
    std::vector<Int> sums = subset_row_sums(S, cols);
    // deduplicated (subset row sum, achievable subset sum) pairs
    std::set<std::pair<Int, Int>> pairs;
    for (int i = 0; i < S.m; ++i) {
        if (S.zero_one) {
            for (Int u(0); u <= sums[i]; ++u) pairs.emplace(sums[i], u);
        } else {
            std::set<Int> reach{Int(0)};
            for (int j : cols) {
                const Int& e = S.at(i, j);
                if (e == 0) continue;
                std::set<Int> next = reach;
                for (const Int& u : reach) next.insert(u + e);
                reach = std::move(next);
            }
            for (const Int& u : reach) pairs.emplace(sums[i], u);
        }
    }

    std::set<Rational> zs{Rational(0), Rational(1)};
    auto consider = [&](const Int& num, const Int& den) {
        if (den == 0) return;
        Rational z = make_ratio(num, den);
        if (z >= 0 && z <= 1) zs.insert(z);
    };
    for (const auto& [s1, u1] : pairs)
        for (const auto& [s2, u2] : pairs) {
            consider(u1 - u2, s1 - s2);  // z s1 - u1 = z s2 - u2
            consider(u1 + u2, s1 + s2);  // z s1 - u1 = -(z s2 - u2)
        }
    return {zs.begin(), zs.end()};
}

}  // namespace disckit::detail
