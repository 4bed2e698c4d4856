#include "disckit/oracle.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <string>
#include <utility>

#include "scaled.hpp"

namespace disckit {

class OracleCache {
  public:
    OracleAnswer get_or_compute(const std::vector<int>& members, int c,
                                const std::function<OracleAnswer()>& compute) {
        std::scoped_lock lock(mu_);  // compute under the lock: serialized semantics
        auto key = std::make_pair(members, c);
        auto it = map_.find(key);
        if (it == map_.end()) it = map_.emplace(std::move(key), compute()).first;
        return it->second;
    }

  private:
    std::mutex mu_;
    std::map<std::pair<std::vector<int>, int>, OracleAnswer> map_;
};

std::shared_ptr<OracleCache> make_oracle_cache() { return std::make_shared<OracleCache>(); }

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

//! Deviation of `assign` against the full row sums of S (scaled by c).
detail::ColoringEval eval_full(const detail::ScaledMatrix& S, const std::vector<int>& assign,
                               int c) {
    std::vector<int> cols(S.n);
    std::iota(cols.begin(), cols.end(), 0);
    return detail::eval_coloring(S, cols, assign, c);
}

OracleAnswer exact_answer(const Matrix& sub, int c, const Budget& budget) {
    Int space = int_pow(Int(c), static_cast<unsigned>(sub.cols()));
    if (space > Int(budget.coloring_cap))
        throw BudgetError("exact oracle: " + std::to_string(c) + "^" +
                          std::to_string(sub.cols()) + " = " + space.str() + " exceeds cap " +
                          std::to_string(budget.coloring_cap));
    detail::ScaledMatrix S(sub);
    std::vector<int> cols(S.n);
    std::iota(cols.begin(), cols.end(), 0);
    detail::ColoringSearch cs = detail::search_optimal_coloring(S, cols, c);
    return OracleAnswer{Coloring{c, cs.assign}, Rational(cs.dev, Int(c) * S.scale), true,
                        cs.leaves};
}

OracleAnswer greedy_answer(const Matrix& sub, int c) {
    Coloring p = greedy_color(sub, c);
    detail::ScaledMatrix S(sub);
    detail::ColoringEval ev = eval_full(S, p.assign, c);
    return OracleAnswer{std::move(p), Rational(ev.dev, Int(c) * S.scale), false,
                        static_cast<std::uint64_t>(sub.cols()) * c};
}

OracleAnswer random_restart_answer(const Matrix& sub, int c, std::uint64_t seed,
                                   const std::vector<int>& members) {
    // Deterministic per (seed, subset, c): fingerprint the query into the stream.
    std::uint64_t h = splitmix64(seed ^ 0x6f4a91e3ULL);
    h = splitmix64(h ^ static_cast<std::uint64_t>(c));
    for (int j : members) h = splitmix64(h ^ (static_cast<std::uint64_t>(j) + 1));

    detail::ScaledMatrix S(sub);
    const int n = sub.cols();
    std::uint64_t evals = 0;

    std::vector<int> best;
    Int best_dev(-1);
    constexpr int kRestarts = 32;
    std::uint64_t state = h;
    auto next = [&state]() {
        state = splitmix64(state);
        return state;
    };
    for (int r = 0; r < kRestarts; ++r) {
        std::vector<int> assign(n);
        for (int j = 0; j < n; ++j) assign[j] = 1 + static_cast<int>(next() % c);
        Int dev = eval_full(S, assign, c).dev;
        ++evals;
        // local descent: move one column at a time, strict improvements only
        bool improved = true;
        while (improved) {
            improved = false;
            for (int j = 0; j < n; ++j) {
                int keep = assign[j];
                int arg = keep;
                Int cur = dev;
                for (int d = 1; d <= c; ++d) {
                    if (d == keep) continue;
                    assign[j] = d;
                    Int cand = eval_full(S, assign, c).dev;
                    ++evals;
                    if (cand < cur) {
                        cur = cand;
                        arg = d;
                    }
                }
                assign[j] = arg;
                if (cur < dev) {
                    dev = cur;
                    improved = true;
                }
            }
        }
        if (best_dev < 0 || dev < best_dev) {
            best_dev = dev;
            best = assign;
        }
    }
    return OracleAnswer{Coloring{c, std::move(best)},
                        Rational(best_dev < 0 ? Int(0) : best_dev, Int(c) * S.scale), false,
                        evals};
}

}  // namespace

Coloring greedy_color(const Matrix& A, int c) {
    if (c < 2) throw InputError("color count must be at least 2, got " + std::to_string(c));
    detail::ScaledMatrix S(A);
    const int n = A.cols();
    const int m = A.rows();
    std::vector<Int> sums(m);
    for (int i = 0; i < m; ++i) {
        sums[i] = 0;
        for (int j = 0; j < n; ++j) sums[i] += S.at(i, j);
    }
    std::vector<std::vector<Int>> cls(c, std::vector<Int>(m, Int(0)));
    std::vector<int> assign(n);
    for (int j = 0; j < n; ++j) {
        Int best_dev(-1);
        int best_color = 1;
        for (int d = 0; d < c; ++d) {
            for (int i = 0; i < m; ++i) cls[d][i] += Int(c) * S.at(i, j);
            Int worst(0);
            for (int e = 0; e < c; ++e)
                for (int i = 0; i < m; ++i) {
                    Int v = int_abs(cls[e][i] - sums[i]);
                    if (v > worst) worst = v;
                }
            for (int i = 0; i < m; ++i) cls[d][i] -= Int(c) * S.at(i, j);
            if (best_dev < 0 || worst < best_dev) {  // strict: ties keep the smallest color
                best_dev = worst;
                best_color = d + 1;
            }
        }
        assign[j] = best_color;
        for (int i = 0; i < m; ++i) cls[best_color - 1][i] += Int(c) * S.at(i, j);
    }
    return Coloring{c, std::move(assign)};
}

OracleAnswer oracle_color(const Matrix& A, const ColumnSubset& J, int c, const OracleConfig& cfg) {
    J.validate();
    if (J.parent_n != A.cols())
        throw InputError("column subset belongs to a different matrix width");
    if (c < 2) throw InputError("color count must be at least 2, got " + std::to_string(c));

    auto compute = [&]() -> OracleAnswer {
        Matrix sub = restrict_columns(A, J);
        switch (cfg.kind) {
            case OracleKind::exact:
                return exact_answer(sub, c, cfg.budget);
            case OracleKind::greedy:
                return greedy_answer(sub, c);
            case OracleKind::random_restart:
                return random_restart_answer(sub, c, cfg.seed, J.members);
        }
        throw InputError("unknown oracle kind");
    };
    if (cfg.cache) return cfg.cache->get_or_compute(J.members, c, compute);
    return compute();
}

}  // namespace disckit
