#include "hexlap/spectral_oracle.hpp"

#include "hexlap/error.hpp"

#include <algorithm>
#include <cmath>

namespace hexlap {

SymMatrix SymMatrix::identity(std::size_t dim) {
    SymMatrix m(dim);
    for (std::size_t i = 0; i < dim; ++i) m.set(i, i, 1.0);
    return m;
}

SymMatrix normalized_laplacian(const Graph& g) {
    const auto deg = degrees(g);
    for (std::size_t v = 0; v < deg.size(); ++v) {
        if (deg[v] == 0) {
            throw InputError(InputError::Kind::NoEdges, "vertex " + std::to_string(v) + " is isolated");
        }
    }
    SymMatrix m(g.num_vertices());
    for (std::size_t i = 0; i < deg.size(); ++i) m.set(i, i, 1.0);
    for (const auto& [u, v] : g.edges()) {
        m.set(u, v, -1.0 / std::sqrt(static_cast<double>(deg[u]) * static_cast<double>(deg[v])));
    }
    return m;
}

std::vector<double> eigenvalues_sym(SymMatrix m) {
    const std::size_t n = m.dim();
    std::vector<double> a = m.values();
    auto at = [&](std::size_t i, std::size_t j) -> double& { return a[i * n + j]; };

    auto off_norm = [&] {
        double sum = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                if (i != j) sum += at(i, j) * at(i, j);
        return std::sqrt(sum);
    };
    double full = 0.0;
    for (double x : a) full += x * x;
    const double threshold = 1e-12 * std::sqrt(full);

    bool converged = false;
    for (int sweep = 0; sweep <= kJacobiMaxSweeps; ++sweep) {
        if (off_norm() <= threshold) {
            converged = true;
            break;
        }
        if (sweep == kJacobiMaxSweeps) break;
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = at(p, q);
                if (apq == 0.0) continue;
                const double theta = 0.5 * (at(q, q) - at(p, p)) / apq;
                double t = 1.0 / (std::abs(theta) + std::sqrt(1.0 + theta * theta));
                if (theta < 0.0) t = -t;
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = t * c;
                const double tau = s / (1.0 + c);

                at(p, p) -= t * apq;
                at(q, q) += t * apq;
                at(p, q) = at(q, p) = 0.0;
                for (std::size_t j = 0; j < n; ++j) {
                    if (j == p || j == q) continue;
                    const double g = at(j, p);
                    const double h = at(j, q);
                    const double gp = g - s * (h + g * tau);
                    const double hq = h + s * (g - h * tau);
                    at(j, p) = at(p, j) = gp;
                    at(j, q) = at(q, j) = hq;
                }
            }
        }
    }
    if (!converged) {
        throw NumericalError("Jacobi eigensolver did not converge within " + std::to_string(kJacobiMaxSweeps) +
                             " sweeps (n=" + std::to_string(n) + ")");
    }

    std::vector<double> eig(n);
    for (std::size_t i = 0; i < n; ++i) eig[i] = at(i, i);
    std::sort(eig.begin(), eig.end());
    return eig;
}

Spectrum spectrum_oracle(const Graph& g) {
    if (!is_connected(g)) throw InputError(InputError::Kind::Disconnected, "graph is not connected");
    const auto eig = eigenvalues_sym(normalized_laplacian(g));
    std::vector<SpectrumEntry> raw;
    raw.reserve(eig.size());
    for (double v : eig) raw.push_back(SpectrumEntry{v, 1, std::nullopt});
    return assemble_spectrum(std::move(raw), meta_of(g));
}

BigInt spanning_trees_matrix_tree(const Graph& g) {
    if (!is_connected(g)) {
        throw InputError(InputError::Kind::Disconnected, "spanning trees requested for a disconnected graph");
    }
    const std::size_t n = g.num_vertices();
    if (n <= 1) return 1;

    // Reduced Laplacian: drop vertex 0.
    const std::size_t r = n - 1;
    std::vector<BigInt> m(r * r);
    auto at = [&](std::size_t i, std::size_t j) -> BigInt& { return m[i * r + j]; };
    for (const auto& [u, v] : g.edges()) {
        if (u > 0) at(u - 1, u - 1) += 1;
        if (v > 0) at(v - 1, v - 1) += 1;
        if (u > 0 && v > 0) {
            at(u - 1, v - 1) -= 1;
            at(v - 1, u - 1) -= 1;
        }
    }

    BigInt prev_pivot = 1;
    bool negate = false;
    for (std::size_t k = 0; k < r; ++k) {
        if (at(k, k) == 0) {
            std::size_t swap_row = k + 1;
            while (swap_row < r && at(swap_row, k) == 0) ++swap_row;
            if (swap_row == r) return 0;
            for (std::size_t j = 0; j < r; ++j) std::swap(at(k, j), at(swap_row, j));
            negate = !negate;
        }
        const BigInt pivot = at(k, k);
        for (std::size_t i = k + 1; i < r; ++i) {
            const BigInt lead = at(i, k);
            for (std::size_t j = k + 1; j < r; ++j) {
                at(i, j) = (at(i, j) * pivot - lead * at(k, j)) / prev_pivot;
            }
            at(i, k) = 0;
        }
        prev_pivot = pivot;
    }
    BigInt det = at(r - 1, r - 1);
    return negate ? BigInt(-det) : det;
}

} // namespace hexlap
