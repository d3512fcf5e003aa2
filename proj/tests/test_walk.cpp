#include <doctest.h>

#include <cmath>
#include <vector>

#include "diffwalk/walk.hpp"

using namespace diffwalk;

TEST_CASE("gaussian transition column normalizes the squared-distance weights") {
    const PointSet pts = PointSet::from_1d({0.0, 1.0, 2.0});
    const TransitionMatrix P = gaussian_transition_matrix(pts, 1.0);
    P.check_column_stochastic();
    const double w = std::exp(-1.0);
    const double z = 1.0 + 2.0 * w;
    CHECK(P(0, 1) == doctest::Approx(w / z).epsilon(1e-12));
    CHECK(P(1, 1) == doctest::Approx(1.0 / z).epsilon(1e-12));
    CHECK(P(2, 1) == doctest::Approx(w / z).epsilon(1e-12));
    CHECK(P(1, 1) == doctest::Approx(0.5761).epsilon(1e-3));
    CHECK(P(0, 1) == doctest::Approx(0.2119).epsilon(1e-3));
}

TEST_CASE("gaussian matrix degenerate cases") {
    SUBCASE("single point is the identity") {
        const TransitionMatrix P = gaussian_transition_matrix(PointSet::from_1d({3.0}), 2.0);
        CHECK(P(0, 0) == 1.0);
    }
    SUBCASE("zero beta is uniform") {
        const TransitionMatrix P =
            gaussian_transition_matrix(PointSet::from_1d({0.0, 5.0, 90.0, -4.0}), 0.0);
        for (std::size_t j = 0; j < 4; ++j) {
            for (std::size_t i = 0; i < 4; ++i) CHECK(P(j, i) == doctest::Approx(0.25));
        }
    }
    SUBCASE("translation invariance") {
        const TransitionMatrix a =
            gaussian_transition_matrix(PointSet::from_1d({0.0, 0.3, 1.1}), 2.0);
        const TransitionMatrix b =
            gaussian_transition_matrix(PointSet::from_1d({10.0, 10.3, 11.1}), 2.0);
        for (std::size_t j = 0; j < 3; ++j) {
            for (std::size_t i = 0; i < 3; ++i) {
                CHECK(a(j, i) == doctest::Approx(b(j, i)).epsilon(1e-12));
            }
        }
    }
    SUBCASE("radius cutoff keeps the column stochastic") {
        const TransitionMatrix P = gaussian_transition_matrix(
            PointSet::from_1d({0.0, 1.0, 5.0}), 0.5, NeighborCutoff{NeighborRadius{2.0}});
        P.check_column_stochastic();
        CHECK(P(2, 0) == 0.0);  // cut: distance 5 > radius 2
        CHECK(P(2, 2) == 1.0);  // isolated except for self
    }
}

TEST_CASE("chain matrix matches the reflecting edge rule") {
    const TransitionMatrix P = chain_transition_matrix(3, 0.2);
    P.check_column_stochastic();
    // interior column
    CHECK(P(0, 1) == doctest::Approx(0.4));
    CHECK(P(1, 1) == doctest::Approx(0.2));
    CHECK(P(2, 1) == doctest::Approx(0.4));
    // edge column: rejected off-grid move folds into self
    CHECK(P(0, 0) == doctest::Approx(0.6));
    CHECK(P(1, 0) == doctest::Approx(0.4));
    CHECK(P(2, 0) == doctest::Approx(0.0));
    CHECK_THROWS(chain_transition_matrix(1, 0.2));
    CHECK_THROWS(chain_transition_matrix(3, 1.0));
}

TEST_CASE("two-point chain with zero self probability") {
    const TransitionMatrix P = chain_transition_matrix(2, 0.0);
    CHECK(P(0, 0) == doctest::Approx(0.5));
    CHECK(P(1, 0) == doctest::Approx(0.5));
    CHECK(P(0, 1) == doctest::Approx(0.5));
    CHECK(P(1, 1) == doctest::Approx(0.5));
}

TEST_CASE("propagation by repeated matrix-vector products") {
    const TransitionMatrix P = chain_transition_matrix(3, 0.2);
    const StateDistribution q0 = delta_distribution(3, 1);
    SUBCASE("zero steps is the identity") {
        CHECK(propagate(P, q0, 0) == q0);
    }
    SUBCASE("two hand-computed steps") {
        const StateDistribution q2 = propagate(P, q0, 2);
        CHECK(q2[0] == doctest::Approx(0.32).epsilon(1e-12));
        CHECK(q2[1] == doctest::Approx(0.36).epsilon(1e-12));
        CHECK(q2[2] == doctest::Approx(0.32).epsilon(1e-12));
    }
    SUBCASE("stochasticity and palindromic symmetry survive many steps") {
        const TransitionMatrix C = chain_transition_matrix(7, 0.2);
        StateDistribution q = propagate(C, delta_distribution(7, 3), 1000);
        double sum = 0.0;
        for (const double v : q) sum += v;
        CHECK(sum == doctest::Approx(1.0).epsilon(1e-10));
        for (std::size_t i = 0; i < 7; ++i) {
            CHECK(q[i] == doctest::Approx(q[6 - i]).epsilon(1e-12));
        }
    }
}

TEST_CASE("conditional probability is an entry of the matrix power") {
    const TransitionMatrix P = chain_transition_matrix(3, 0.2);
    CHECK(conditional_probability(P, 1, 1, 0) == 1.0);
    CHECK(conditional_probability(P, 1, 0, 0) == 0.0);
    CHECK(conditional_probability(P, 1, 0, 2) == doctest::Approx(0.32).epsilon(1e-12));
    double total = 0.0;
    for (std::size_t j = 0; j < 3; ++j) total += conditional_probability(P, 0, j, 4);
    CHECK(total == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("graph laplacian of small graphs") {
    SUBCASE("path graph 1-2-3") {
        const std::vector<double> adj = {0, 1, 0, 1, 0, 1, 0, 1, 0};
        const std::vector<double> L = graph_laplacian(adj, 3);
        const std::vector<double> expected = {1, -1, 0, -1, 2, -1, 0, -1, 1};
        CHECK(L == expected);
    }
    SUBCASE("edgeless graph is the zero matrix") {
        const std::vector<double> L = graph_laplacian(std::vector<double>(4, 0.0), 2);
        CHECK(L == std::vector<double>(4, 0.0));
    }
    SUBCASE("complete graph K3") {
        const std::vector<double> adj = {0, 1, 1, 1, 0, 1, 1, 1, 0};
        const std::vector<double> L = graph_laplacian(adj, 3);
        const std::vector<double> expected = {2, -1, -1, -1, 2, -1, -1, -1, 2};
        CHECK(L == expected);
    }
    SUBCASE("row sums vanish (constant vector in the kernel)") {
        const std::vector<double> adj = {0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0};
        const std::vector<double> L = graph_laplacian(adj, 4);
        for (std::size_t r = 0; r < 4; ++r) {
            double s = 0.0;
            for (std::size_t c = 0; c < 4; ++c) s += L[r * 4 + c];
            CHECK(s == doctest::Approx(0.0));
        }
    }
    SUBCASE("asymmetric adjacency is rejected") {
        CHECK_THROWS(graph_laplacian({0, 1, 0, 0}, 2));
    }
}

TEST_CASE("stationary distribution of the reflecting chain is uniform") {
    const StationaryResult r = stationary_distribution(chain_transition_matrix(3, 0.2), 1e-12);
    for (const double v : r.distribution) CHECK(v == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
}

TEST_CASE("stationary distribution of the symmetric two-cycle") {
    TransitionMatrix P(2);
    P.at(0, 0) = 0.5;
    P.at(1, 0) = 0.5;
    P.at(0, 1) = 0.5;
    P.at(1, 1) = 0.5;
    const StationaryResult r = stationary_distribution(P, 1e-12);
    CHECK(r.distribution[0] == doctest::Approx(0.5));
    CHECK(r.distribution[1] == doctest::Approx(0.5));
}

TEST_CASE("point sets reject duplicates") {
    CHECK_THROWS(PointSet::from_1d({0.0, 1.0, 0.0}));
    CHECK_THROWS(PointSet({}, 1));
}
