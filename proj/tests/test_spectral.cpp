#include "doctest.h"

#include <cmath>
#include <random>

#include "iim/generator.hpp"
#include "iim/spectral.hpp"
#include "oracles.hpp"

using namespace iim;

TEST_CASE("normalized laplacian entries") {
    SymmetricMatrix k2 = normalized_laplacian(Graph::complete(2));
    CHECK(k2.at(0, 0) == doctest::Approx(1.0));
    CHECK(k2.at(0, 1) == doctest::Approx(-1.0));
    CHECK(k2.at(1, 0) == doctest::Approx(-1.0));

    SymmetricMatrix k3 = normalized_laplacian(Graph::complete(3));
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            CHECK(k3.at(i, j) == doctest::Approx(i == j ? 1.0 : -0.5));

    // star K_{1,2}: center 0
    Graph star(3, {{0, 1}, {0, 2}});
    SymmetricMatrix sm = normalized_laplacian(star);
    CHECK(sm.at(0, 1) == doctest::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(sm.at(1, 2) == doctest::Approx(0.0));

    Graph iso(3, {{0, 1}});
    CHECK_THROWS_AS(normalized_laplacian(iso), std::invalid_argument);
}

TEST_CASE("jacobi eigensolver on known spectra") {
    SymmetricMatrix ident(3);
    for (int i = 0; i < 3; ++i) ident.at(i, i) = 1.0;
    Spectrum si = eigenvalues_symmetric(ident);
    for (double ev : si.eigenvalues) CHECK(ev == doctest::Approx(1.0));

    Spectrum k2 = eigenvalues_symmetric(normalized_laplacian(Graph::complete(2)));
    CHECK(k2.eigenvalues[0] == doctest::Approx(0.0).epsilon(1e-9));
    CHECK(k2.eigenvalues[1] == doctest::Approx(2.0));

    // K_n: eigenvalue 0 plus n/(n-1) with multiplicity n-1
    for (std::size_t n : {3, 4}) {
        Spectrum s = eigenvalues_symmetric(normalized_laplacian(Graph::complete(n)));
        CHECK(std::abs(s.eigenvalues[0]) < 1e-9);
        for (std::size_t i = 1; i < n; ++i)
            CHECK(s.eigenvalues[i] ==
                  doctest::Approx(static_cast<double>(n) / (n - 1)).epsilon(1e-9));
    }

    SymmetricMatrix bad(2);
    bad.at(0, 1) = 1.0;
    bad.at(1, 0) = 0.5;
    CHECK_THROWS_AS(eigenvalues_symmetric(bad), std::invalid_argument);
}

TEST_CASE("spectrum bounds and trace identity for normalized laplacians") {
    std::mt19937_64 rng(41);
    int tested = 0;
    while (tested < 25) {
        Graph g = oracles::random_graph(2 + rng() % 10, 0.6, rng);
        if (!g.isolated_vertices().empty()) continue;
        ++tested;
        Spectrum s = eigenvalues_symmetric(normalized_laplacian(g));
        double tol = 1e-8;
        CHECK(s.eigenvalues.front() >= -tol);
        CHECK(s.eigenvalues.front() <= tol);
        CHECK(s.eigenvalues.back() <= 2.0 + tol);
        double sum = 0;
        for (double ev : s.eigenvalues) sum += ev;
        CHECK(sum == doctest::Approx(static_cast<double>(g.vertex_count())).epsilon(1e-8));
    }
}

TEST_CASE("spectral gap values") {
    CHECK(spectral_gap(Graph::complete(2)) == doctest::Approx(1.0));
    CHECK(spectral_gap(Graph::complete(4)) == doctest::Approx(1.0 / 3.0));
    CHECK_THROWS_AS(spectral_gap(Graph::complete(1)), std::invalid_argument);
}

TEST_CASE("volume") {
    CHECK(volume(Graph::complete(3), Graph::complete(3).all_vertices()) == doctest::Approx(6.0));
    Graph p4 = Graph::path(4);
    CHECK(volume(p4, VertexSet::of(4, {0, 3})) == doctest::Approx(2.0));
    CHECK(volume(p4, VertexSet(4)) == doctest::Approx(0.0));
}

TEST_CASE("expander mixing residual closed cases") {
    Graph c4 = Graph::cycle(4);
    CHECK(check_expander_mixing(c4, VertexSet(4)) == doctest::Approx(0.0));
    CHECK(check_expander_mixing(c4, c4.all_vertices()) == doctest::Approx(0.0).epsilon(1e-9));
}

TEST_CASE("mixing on the top level reduces to the independent-set form") {
    std::mt19937_64 pick(5);
    IIMGraph h = sample_iim(Graph::complete(2), 3, 0.7, 905).graph;
    if (!h.graph().isolated_vertices().empty())
        h = sample_iim(Graph::complete(2), 3, 1.0, 1).graph;  // all-clone fallback
    Graph g = h.graph();
    REQUIRE(g.isolated_vertices().empty());
    double lambda = spectral_gap(g);
    VertexSet top = h.level_set(h.top_level());
    // |E(X)| = 0, so the residual equals a positive multiple of
    // lambda - vol(X)/vol(X̄)
    double vol_g = 2.0 * g.edge_count();
    double vx = volume(g, top), vxc = vol_g - vx;
    double residual = mixing_residual(g, top, lambda);
    double simplified = (lambda - vx / vxc) * vx * vxc / vol_g;
    CHECK(residual == doctest::Approx(simplified).epsilon(1e-9));
    CHECK(lambda >= vx / vxc - 1e-9);
}

TEST_CASE("mixing residual nonnegative over random subsets") {
    std::mt19937_64 rng(42);
    int graphs = 0;
    while (graphs < 8) {
        Graph g = oracles::random_graph(4 + rng() % 8, 0.5, rng);
        if (!g.isolated_vertices().empty() || g.edge_count() == 0) continue;
        ++graphs;
        double lambda = spectral_gap(g);
        for (int trial = 0; trial < 100; ++trial) {
            VertexSet x(g.vertex_count());
            for (std::uint32_t v = 0; v < g.vertex_count(); ++v)
                if (rng() & 1) x.set(v);
            CHECK(mixing_residual(g, x, lambda) >= -1e-6);
        }
    }
}

TEST_CASE("spectrum csv row") {
    Spectrum s = eigenvalues_symmetric(normalized_laplacian(Graph::complete(2)));
    std::string row = spectrum_csv_row("K2", s);
    CHECK(row.rfind("K2,", 0) == 0);
    CHECK(row.find(",2") != std::string::npos);
}
