#pragma once

//! Instance generators: named hypergraph families with known closed-form
//! discrepancies, plus seeded random matrices for corpus tests.

#include <cstdint>
#include <string>
#include <vector>

#include "disckit/core.hpp"

namespace disckit {

enum class Family { complete, balanced_pair, random01, random_rational, file };

//! Parameters naming one corpus instance. Meaning by family:
//!   complete:        n = vertex count
//!   balanced_pair:   n = half-size (2n vertices)
//!   random01:        m x n, Bernoulli(density), seeded
//!   random_rational: m x n, numerators in [-bound, bound], denominators
//!                    in [1, bound], seeded
//!   file:            path to a matrix file (loaded by the caller, not here)
struct InstanceSpec {
    Family family = Family::complete;
    std::string label;  // empty: use instance_label(spec)
    int n = 0;
    int m = 0;
    Rational density{1, 2};
    std::uint64_t seed = 0;
    int bound = 3;
    std::string path;
};

//! Incidence matrix of all 2^n - 1 nonempty subsets of [n], rows in
//! binary-counting order (row k has column j set iff bit j of k+1 is set).
//! The empty edge is omitted: it contributes 0 to every deviation max.
//! Refuses n > 16 (row count budget) and requires n >= 1.
Matrix complete_hypergraph(int n);

//! Exact discrepancy of any coloring of complete_hypergraph(n) whose class
//! sizes are the given profile: max_d max{ n_d(1-1/c), (n-n_d)/c }. The
//! worst edge for class d is either all of d or everything outside d.
Rational complete_disc_closed_form(int n, int c, const std::vector<int>& class_sizes);

//! The balanced profile (sizes differing by at most one), which minimizes
//! the closed form above: first n mod c classes get ceil(n/c).
std::vector<int> balanced_class_sizes(int n, int c);

//! Incidence matrix on 2n vertices (first n the A side, then the B side)
//! whose edges are the nonempty sets with equally many A and B vertices,
//! rows in binary-counting order. Refuses n > 6; requires n >= 1.
Matrix balanced_pair_hypergraph(int n);

//! Seeded 0/1 matrix; each entry is 1 with the given probability. Identical
//! seeds give identical matrices on every platform.
Matrix random01_matrix(int m, int n, const Rational& density, std::uint64_t seed);

//! Seeded rational matrix with numerators in [-bound, bound] and
//! denominators in [1, bound].
Matrix random_rational_matrix(int m, int n, int bound, std::uint64_t seed);

//! Dispatch on spec.family. The file family is refused here: callers load
//! files through the io layer.
Matrix make_instance(const InstanceSpec& spec);

//! spec.label when set; otherwise a deterministic name such as
//! "complete-6" or "random01-s7-3x5".
std::string instance_label(const InstanceSpec& spec);

}  // namespace disckit
