#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "iim/graph.hpp"

namespace iim {

struct SymmetricMatrix {
    std::size_t n = 0;
    std::vector<double> a;  // row-major

    SymmetricMatrix() = default;
    explicit SymmetricMatrix(std::size_t order) : n(order), a(order * order, 0.0) {}

    double& at(std::size_t i, std::size_t j) { return a[i * n + j]; }
    double at(std::size_t i, std::size_t j) const { return a[i * n + j]; }

    /// Max |a_ij - a_ji|.
    double asymmetry() const;
};

struct Spectrum {
    std::vector<double> eigenvalues;  // ascending
    double residual = 0.0;            // achieved off-diagonal norm / matrix norm
};

inline constexpr double kJacobiTol = 1e-10;
inline constexpr int kJacobiMaxSweeps = 100;
inline constexpr std::size_t kDenseEigenLimit = 2048;

/// L = I - D^{-1/2} A D^{-1/2}; throws when g has an isolated vertex.
SymmetricMatrix normalized_laplacian(const Graph& g);

/// All eigenvalues via cyclic Jacobi rotations; throws on non-convergence
/// after max_sweeps sweeps or when the matrix is not symmetric within 1e-12.
Spectrum eigenvalues_symmetric(SymmetricMatrix m, double tol = kJacobiTol,
                               int max_sweeps = kJacobiMaxSweeps);

/// lambda = max{|l_1 - 1|, |l_{n-1} - 1|} of the normalized Laplacian.
double spectral_gap(const Graph& g);
double spectral_gap_of(const Spectrum& s);

double volume(const Graph& g, const VertexSet& x);

/// lambda*vol(X)*vol(X̄)/vol(G) - |2|E(X)| - vol(X)^2/vol(G)|; the
/// Expander-Mixing lemma asserts this is nonnegative.
double mixing_residual(const Graph& g, const VertexSet& x, double lambda);
double check_expander_mixing(const Graph& g, const VertexSet& x);

std::string spectrum_csv_row(const std::string& graph_id, const Spectrum& s);

}  // namespace iim
