#include "iim/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace iim {

namespace {

double off_diagonal_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (std::size_t i = 0; i < m.n; ++i)
        for (std::size_t j = i + 1; j < m.n; ++j) s += 2.0 * m.at(i, j) * m.at(i, j);
    return std::sqrt(s);
}

double frobenius_norm(const SymmetricMatrix& m) {
    double s = 0.0;
    for (double x : m.a) s += x * x;
    return std::sqrt(s);
}

}  // namespace

double SymmetricMatrix::asymmetry() const {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            worst = std::max(worst, std::abs(at(i, j) - at(j, i)));
    return worst;
}

SymmetricMatrix normalized_laplacian(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::vector<double> inv_sqrt_deg(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        std::size_t d = g.degree(v);
        if (d == 0)
            throw std::invalid_argument("normalized_laplacian: isolated vertex " + std::to_string(v));
        inv_sqrt_deg[v] = 1.0 / std::sqrt(static_cast<double>(d));
    }
    SymmetricMatrix m(n);
    for (std::uint32_t v = 0; v < n; ++v) {
        m.at(v, v) = 1.0;
        const VertexSet& nb = g.neighbors(v);
        for (std::uint32_t u = nb.first(); u != VertexSet::npos; u = nb.next(u)) {
            double val = -inv_sqrt_deg[v] * inv_sqrt_deg[u];
            m.at(v, u) = val;
        }
    }
    return m;
}

Spectrum eigenvalues_symmetric(SymmetricMatrix m, double tol, int max_sweeps) {
    if (m.n > kDenseEigenLimit)
        throw std::invalid_argument("eigenvalues_symmetric: order exceeds dense limit");
    if (m.asymmetry() > 1e-12)
        throw std::invalid_argument("eigenvalues_symmetric: matrix not symmetric within 1e-12");
    const std::size_t n = m.n;
    Spectrum out;
    if (n == 0) return out;

    const double scale = std::max(frobenius_norm(m), 1e-300);
    const double threshold = tol * scale;
    int sweeps = 0;
    while (off_diagonal_norm(m) > threshold) {
        if (++sweeps > max_sweeps)
            throw std::runtime_error("eigenvalues_symmetric: no convergence after " +
                                     std::to_string(max_sweeps) + " sweeps");
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                double apq = m.at(p, q);
                if (std::abs(apq) <= threshold / (n * n)) continue;
                double theta = (m.at(q, q) - m.at(p, p)) / (2.0 * apq);
                double t = (theta >= 0 ? 1.0 : -1.0) /
                           (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);
                double app = m.at(p, p), aqq = m.at(q, q);
                m.at(p, p) = app - t * apq;
                m.at(q, q) = aqq + t * apq;
                m.at(p, q) = 0.0;
                m.at(q, p) = 0.0;
                for (std::size_t k = 0; k < n; ++k) {
                    if (k == p || k == q) continue;
                    double akp = m.at(k, p), akq = m.at(k, q);
                    m.at(k, p) = akp - s * (akq + tau * akp);
                    m.at(p, k) = m.at(k, p);
                    m.at(k, q) = akq + s * (akp - tau * akq);
                    m.at(q, k) = m.at(k, q);
                }
            }
        }
    }
    out.eigenvalues.resize(n);
    for (std::size_t i = 0; i < n; ++i) out.eigenvalues[i] = m.at(i, i);
    std::sort(out.eigenvalues.begin(), out.eigenvalues.end());
    out.residual = off_diagonal_norm(m) / scale;
    return out;
}

double spectral_gap_of(const Spectrum& s) {
    const auto& ev = s.eigenvalues;
    if (ev.size() < 2) throw std::invalid_argument("spectral gap needs at least 2 eigenvalues");
    return std::max(std::abs(ev[1] - 1.0), std::abs(ev.back() - 1.0));
}

double spectral_gap(const Graph& g) {
    if (g.vertex_count() < 2) throw std::invalid_argument("spectral gap needs at least 2 vertices");
    return spectral_gap_of(eigenvalues_symmetric(normalized_laplacian(g)));
}

double volume(const Graph& g, const VertexSet& x) {
    double s = 0.0;
    for (std::uint32_t v = x.first(); v != VertexSet::npos; v = x.next(v))
        s += static_cast<double>(g.degree(v));
    return s;
}

double mixing_residual(const Graph& g, const VertexSet& x, double lambda) {
    double vol_g = 2.0 * static_cast<double>(g.edge_count());
    if (vol_g == 0.0) throw std::invalid_argument("mixing_residual: graph has no edges");
    double vol_x = volume(g, x);
    double vol_xc = vol_g - vol_x;
    double internal = static_cast<double>(g.edge_count_between(x, x));
    double lhs = std::abs(2.0 * internal - vol_x * vol_x / vol_g);
    double rhs = lambda * vol_x * vol_xc / vol_g;
    return rhs - lhs;
}

double check_expander_mixing(const Graph& g, const VertexSet& x) {
    return mixing_residual(g, x, spectral_gap(g));
}

std::string spectrum_csv_row(const std::string& graph_id, const Spectrum& s) {
    std::ostringstream os;
    os << graph_id;
    os.precision(17);
    for (double ev : s.eigenvalues) os << ',' << ev;
    os << ',' << spectral_gap_of(s);
    return os.str();
}

}  // namespace iim
