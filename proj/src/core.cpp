#include "disckit/core.hpp"

namespace disckit {

Matrix::Matrix(int m, int n, std::vector<Rational> entries)
    : m_(m), n_(n), entries_(std::move(entries)) {
    if (m_ < 1) throw InputError("matrix needs at least one row");
    if (n_ < 0) throw InputError("negative column count");
    if (entries_.size() != static_cast<std::size_t>(m_) * static_cast<std::size_t>(n_))
        throw InputError("entry count does not match dimensions");
    row_sums_.resize(m_);
    for (int i = 0; i < m_; ++i) {
        Rational s = 0;
        for (int j = 0; j < n_; ++j) {
            const Rational& a = at(i, j);
            s += a;
            if (a < 0) nonneg_ = false;
            if (a != 0 && a != 1) zero_one_ = false;
        }
        row_sums_[i] = s;
    }
}

ColumnSubset ColumnSubset::full(int n) {
    ColumnSubset J;
    J.parent_n = n;
    J.members.resize(n);
    for (int j = 0; j < n; ++j) J.members[j] = j;
    return J;
}

void ColumnSubset::validate() const {
    if (parent_n < 0) throw InputError("negative parent width");
    int prev = -1;
    for (int j : members) {
        if (j <= prev) throw InputError("subset members must be strictly increasing");
        if (j < 0 || j >= parent_n) throw InputError("subset member out of range");
        prev = j;
    }
}

void Coloring::validate() const {
    if (colors < 2) throw InputError("colorings need at least 2 colors");
    for (int d : assign)
        if (d < 1 || d > colors) throw InputError("color out of range");
}

void FloatingColoring::validate() const {
    for (const Rational& v : values)
        if (v < 0 || v > 1) throw InputError("floating value outside [0,1]");
}

FloatingColoring FloatingColoring::constant(int n, const Rational& v) {
    if (v < 0 || v > 1) throw InputError("floating value outside [0,1]");
    FloatingColoring x;
    x.values.assign(n, v);
    return x;
}

Matrix restrict_columns(const Matrix& A, const ColumnSubset& J) {
    J.validate();
    if (J.parent_n != A.cols()) throw InputError("subset built for a different matrix width");
    std::vector<Rational> entries;
    entries.reserve(static_cast<std::size_t>(A.rows()) * J.members.size());
    for (int i = 0; i < A.rows(); ++i)
        for (int j : J.members) entries.push_back(A.at(i, j));
    return Matrix(A.rows(), J.size(), std::move(entries));
}

Rational evaluate_row(const Matrix& A, const FloatingColoring& x, int i) {
    if (x.cols() != A.cols()) throw InputError("vector length does not match column count");
    if (i < 0 || i >= A.rows()) throw InputError("row index out of range");
    Rational s = 0;
    for (int j = 0; j < A.cols(); ++j) s += A.at(i, j) * x.values[j];
    return s;
}

}  // namespace disckit
