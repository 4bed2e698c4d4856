#include "disckit/gen.hpp"

#include <algorithm>
#include <random>
#include <string>

namespace disckit {

Matrix complete_hypergraph(int n) {
    if (n < 1) throw InputError("vertex count must be at least 1, got " + std::to_string(n));
    if (n > 16)
        throw BudgetError("complete hypergraph on " + std::to_string(n) +
                          " vertices has 2^" + std::to_string(n) + " - 1 rows; cap is n = 16");
    const unsigned long long edges = (1ULL << n) - 1;
    std::vector<Rational> entries;
    entries.reserve(edges * n);
    for (unsigned long long k = 1; k <= edges; ++k)
        for (int j = 0; j < n; ++j) entries.emplace_back(k >> j & 1ULL);
    return Matrix(static_cast<int>(edges), n, std::move(entries));
}

Rational complete_disc_closed_form(int n, int c, const std::vector<int>& class_sizes) {
    if (n < 0) throw InputError("negative vertex count");
    if (c < 2) throw InputError("color count must be at least 2, got " + std::to_string(c));
    if (static_cast<int>(class_sizes.size()) != c)
        throw InputError("class size profile must list one size per color");
    int total = 0;
    for (int s : class_sizes) {
        if (s < 0) throw InputError("negative class size");
        total += s;
    }
    if (total != n) throw InputError("class sizes must sum to the vertex count");

    Rational worst(0);
    for (int s : class_sizes) {
        Rational mono = Rational(s) * Rational(c - 1, c);   // edge = all of class d
        Rational rest = Rational(n - s, c);                 // edge = everything else
        if (mono > worst) worst = mono;
        if (rest > worst) worst = rest;
    }
    return worst;
}

std::vector<int> balanced_class_sizes(int n, int c) {
    if (n < 0) throw InputError("negative vertex count");
    if (c < 2) throw InputError("color count must be at least 2, got " + std::to_string(c));
    std::vector<int> sizes(c, n / c);
    for (int d = 0; d < n % c; ++d) sizes[d] += 1;
    return sizes;
}

Matrix balanced_pair_hypergraph(int n) {
    if (n < 1) throw InputError("half-size must be at least 1, got " + std::to_string(n));
    if (n > 6)
        throw BudgetError("balanced-pair hypergraph with half-size " + std::to_string(n) +
                          " exceeds the row cap (n = 6)");
    const int cols = 2 * n;
    std::vector<Rational> entries;
    int rows = 0;
    for (unsigned long long k = 1; k < (1ULL << cols); ++k) {
        int a = 0, b = 0;
        for (int j = 0; j < n; ++j) a += static_cast<int>(k >> j & 1ULL);
        for (int j = n; j < cols; ++j) b += static_cast<int>(k >> j & 1ULL);
        if (a != b) continue;
        for (int j = 0; j < cols; ++j) entries.emplace_back(k >> j & 1ULL);
        ++rows;
    }
    return Matrix(rows, cols, std::move(entries));
}

Matrix random01_matrix(int m, int n, const Rational& density, std::uint64_t seed) {
    if (density < 0 || density > 1)
        throw InputError("density must lie in [0,1], got " + rat_str(density));
    std::mt19937_64 rng(seed);
    const Int p = numer(density);
    const Int q = denom(density);
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) entries.emplace_back(Int(rng() % q) < p ? 1 : 0);
    return Matrix(m, n, std::move(entries));
}

Matrix random_rational_matrix(int m, int n, int bound, std::uint64_t seed) {
    if (bound < 1) throw InputError("bound must be at least 1, got " + std::to_string(bound));
    std::mt19937_64 rng(seed);
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(m) * n);
    const std::uint64_t span = 2ULL * bound + 1;
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < n; ++j) {
            std::int64_t num = static_cast<std::int64_t>(rng() % span) - bound;
            std::uint64_t den = 1 + rng() % bound;
            entries.emplace_back(Int(num), Int(den));
        }
    return Matrix(m, n, std::move(entries));
}

Matrix make_instance(const InstanceSpec& spec) {
    switch (spec.family) {
        case Family::complete:
            return complete_hypergraph(spec.n);
        case Family::balanced_pair:
            return balanced_pair_hypergraph(spec.n);
        case Family::random01:
            return random01_matrix(spec.m, spec.n, spec.density, spec.seed);
        case Family::random_rational:
            return random_rational_matrix(spec.m, spec.n, spec.bound, spec.seed);
        case Family::file:
            throw InputError("file-backed instances are loaded through the io layer");
    }
    throw InputError("unknown instance family");
}

std::string instance_label(const InstanceSpec& spec) {
    if (!spec.label.empty()) return spec.label;
    switch (spec.family) {
        case Family::complete:
            return "complete-" + std::to_string(spec.n);
        case Family::balanced_pair:
            return "balanced-pair-" + std::to_string(spec.n);
        case Family::random01:
            return "random01-s" + std::to_string(spec.seed) + "-" + std::to_string(spec.m) + "x" +
                   std::to_string(spec.n);
        case Family::random_rational:
            return "randomq-s" + std::to_string(spec.seed) + "-" + std::to_string(spec.m) + "x" +
                   std::to_string(spec.n);
        case Family::file:
            return spec.path;
    }
    return "unknown";
}

}  // namespace disckit
