#pragma once

#include "hexlap/bignum.hpp"
#include "hexlap/graph.hpp"
#include "hexlap/spectrum.hpp"

#include <cstddef>
#include <vector>

namespace hexlap {

/// Dense symmetric matrix, row-major, both triangles stored.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(std::size_t dim) : dim_(dim), data_(dim * dim, 0.0) {}

    static SymMatrix identity(std::size_t dim);

    std::size_t dim() const noexcept { return dim_; }
    double operator()(std::size_t i, std::size_t j) const { return data_[i * dim_ + j]; }

    const std::vector<double>& values() const noexcept { return data_; }

    // Writes both (i,j) and (j,i).
    void set(std::size_t i, std::size_t j, double v) {
        data_[i * dim_ + j] = v;
        data_[j * dim_ + i] = v;
    }

private:
    std::size_t dim_ = 0;
    std::vector<double> data_;
};

/// I - D^{-1/2} A D^{-1/2}. Throws InputError if a vertex is isolated.
SymMatrix normalized_laplacian(const Graph& g);

inline constexpr int kJacobiMaxSweeps = 100;

/// All eigenvalues, ascending, by cyclic Jacobi rotations. Sweeps until the
/// off-diagonal Frobenius norm drops below 1e-12 of the initial matrix norm;
/// throws NumericalError after kJacobiMaxSweeps.
std::vector<double> eigenvalues_sym(SymMatrix m);

/// Normalized Laplacian spectrum of a connected graph, grouped at
/// kMergeTolerance. Entries carry no family tag.
Spectrum spectrum_oracle(const Graph& g);

/// Number of spanning trees via the Matrix-Tree theorem: the determinant of
/// the combinatorial Laplacian with row and column 0 removed, by
/// fraction-free (Bareiss) elimination over big integers.
BigInt spanning_trees_matrix_tree(const Graph& g);

} // namespace hexlap
