#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <Eigen/Eigenvalues>

#include "qwalk/srg.hpp"

using namespace qwalk;

namespace {

// Brute-force oracle: common-neighbor counts by direct enumeration.
std::optional<SrgParams> brute_force_srg(const Graph& g) {
    const int n = g.size();
    int k = -1, lambda = -1, mu = -1;
    for (int i = 0; i < n; ++i) {
        int deg = 0;
        for (int j = 0; j < n; ++j)
            if (j != i && g.edge(i, j)) ++deg;
        if (k < 0) k = deg;
        if (deg != k) return std::nullopt;
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            int common = 0;
            for (int v = 0; v < n; ++v)
                if (v != i && v != j && g.edge(i, v) && g.edge(j, v)) ++common;
            int& slot = g.edge(i, j) ? lambda : mu;
            if (slot < 0) slot = common;
            if (slot != common) return std::nullopt;
        }
    }
    if (lambda < 0 || mu < 0) return std::nullopt;
    return SrgParams{n, k, lambda, mu};
}

// Numerical eigendecomposition with degeneracy grouping, as spectrum oracle.
std::vector<std::pair<double, int>> numeric_spectrum(const Graph& g, double tol = 1e-9) {
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(g.adjacency(), Eigen::EigenvaluesOnly);
    std::vector<std::pair<double, int>> out;
    for (Eigen::Index i = 0; i < es.eigenvalues().size(); ++i) {
        double e = es.eigenvalues()(i);
        if (!out.empty() && std::abs(e - out.back().first) < tol * std::max(1.0, std::abs(e)))
            ++out.back().second;
        else
            out.emplace_back(e, 1);
    }
    return out;
}

Eigen::MatrixXd matrix_from_coeffs(const AlgebraCoeffs& c, const Graph& g) {
    const int n = g.size();
    return c.alpha.real() * Eigen::MatrixXd::Identity(n, n) +
           c.beta.real() * Eigen::MatrixXd::Ones(n, n) + c.gamma.real() * g.adjacency();
}

}  // namespace

TEST_CASE("detect_srg on the built-in constructors") {
    CHECK(detect_srg(rook_4x4()) == SrgParams{16, 6, 2, 2});
    CHECK(detect_srg(shrikhande()) == SrgParams{16, 6, 2, 2});
    CHECK(detect_srg(paley(13)) == SrgParams{13, 6, 2, 3});
    CHECK(detect_srg(paley(17)) == SrgParams{17, 8, 3, 4});
    CHECK_FALSE(detect_srg(path_graph(3)).has_value());
    CHECK_FALSE(detect_srg(cycle_graph(6)).has_value());

    // brute-force oracle agrees
    for (const Graph& g : {rook_4x4(), shrikhande(), paley(13), paley(17)})
        CHECK(detect_srg(g) == brute_force_srg(g));
}

TEST_CASE("cycle(4) adjacency") {
    Eigen::MatrixXd expected(4, 4);
    expected << 0, 1, 0, 1, 1, 0, 1, 0, 0, 1, 0, 1, 1, 0, 1, 0;
    CHECK(cycle_graph(4).adjacency() == expected);
}

TEST_CASE("paley rejects bad moduli") {
    CHECK_THROWS_AS(paley(15), std::invalid_argument);  // composite
    CHECK_THROWS_AS(paley(7), std::invalid_argument);   // 3 mod 4
}

TEST_CASE("detect_srg invariant under relabeling") {
    std::mt19937 rng(99);
    Graph g = paley(13);
    std::vector<int> perm(13);
    for (int i = 0; i < 13; ++i) perm[i] = i;
    for (int trial = 0; trial < 10; ++trial) {
        std::shuffle(perm.begin(), perm.end(), rng);
        CHECK(detect_srg(relabel(g, perm)) == detect_srg(g));
    }
}

TEST_CASE("feasibility identity holds for emitted params") {
    for (const Graph& g : {rook_4x4(), shrikhande(), paley(13), paley(17)}) {
        auto p = detect_srg(g);
        REQUIRE(p.has_value());
        CHECK(p->k * (p->k - p->lambda - 1) == (p->n - p->k - 1) * p->mu);
    }
}

TEST_CASE("srg_spectrum matches numeric eigendecomposition") {
    auto check = [](const Graph& g) {
        auto p = detect_srg(g);
        REQUIRE(p.has_value());
        auto analytic = srg_spectrum(*p);
        auto numeric = numeric_spectrum(g);
        REQUIRE(analytic.size() == numeric.size());
        int total = 0;
        for (size_t i = 0; i < analytic.size(); ++i) {
            CHECK(analytic[i].first == doctest::Approx(numeric[i].first).epsilon(1e-9));
            CHECK(analytic[i].second == numeric[i].second);
            total += analytic[i].second;
        }
        CHECK(total == p->n);
    };
    check(rook_4x4());
    check(shrikhande());
    check(paley(13));
}

TEST_CASE("srg_spectrum of (16,6,2,2) is {-2:9, 2:6, 6:1}") {
    auto s = srg_spectrum(SrgParams{16, 6, 2, 2});
    REQUIRE(s.size() == 3);
    CHECK(s[0] == std::pair{-2.0, 9});
    CHECK(s[1] == std::pair{2.0, 6});
    CHECK(s[2] == std::pair{6.0, 1});
}

TEST_CASE("power_coefficients") {
    SrgParams p{16, 6, 2, 2};
    auto c0 = power_coefficients(p, 0);
    CHECK(c0.alpha == std::complex<double>(1.0));
    CHECK(c0.beta == std::complex<double>(0.0));
    CHECK(c0.gamma == std::complex<double>(0.0));

    auto c2 = power_coefficients(p, 2);
    CHECK(c2.alpha.real() == p.k - p.mu);
    CHECK(c2.beta.real() == p.mu);
    CHECK(c2.gamma.real() == p.lambda - p.mu);

    // A^m == alpha I + beta J + gamma A, elementwise over integers, m <= 6
    for (const Graph& g : {rook_4x4(), shrikhande(), paley(13)}) {
        auto params = detect_srg(g);
        REQUIRE(params.has_value());
        Eigen::MatrixXd am = Eigen::MatrixXd::Identity(g.size(), g.size());
        for (int m = 0; m <= 6; ++m) {
            auto c = power_coefficients(*params, m);
            CHECK((am - matrix_from_coeffs(c, g)).cwiseAbs().maxCoeff() < 1e-10);
            am = am * g.adjacency();
        }
    }
}

TEST_CASE("exp_coefficients") {
    SrgParams p{16, 6, 2, 2};
    auto c0 = exp_coefficients(p, 0.0);
    CHECK(std::abs(c0.alpha - 1.0) < 1e-14);
    CHECK(std::abs(c0.beta) < 1e-14);
    CHECK(std::abs(c0.gamma) < 1e-14);

    // dense exponential oracle: Taylor series with scaling and squaring
    auto dense_exp_ita = [](const Graph& g, double t) {
        const int n = g.size();
        Eigen::MatrixXcd m = std::complex<double>(0, t) * g.adjacency().cast<std::complex<double>>();
        int s = 20;
        m /= std::pow(2.0, s);
        Eigen::MatrixXcd acc = Eigen::MatrixXcd::Identity(n, n);
        Eigen::MatrixXcd pow = Eigen::MatrixXcd::Identity(n, n);
        for (int i = 1; i <= 16; ++i) {
            pow = pow * m / static_cast<double>(i);
            acc += pow;
        }
        for (int i = 0; i < s; ++i) acc = acc * acc;
        return acc;
    };

    for (const Graph& g : {rook_4x4(), shrikhande()}) {
        auto c = exp_coefficients(p, 1.0);
        const int n = g.size();
        Eigen::MatrixXcd rebuilt =
            c.alpha * Eigen::MatrixXcd::Identity(n, n) +
            c.beta * Eigen::MatrixXcd::Ones(n, n) +
            c.gamma * g.adjacency().cast<std::complex<double>>();
        Eigen::MatrixXcd oracle = dense_exp_ita(g, 1.0);
        CHECK((rebuilt - oracle).cwiseAbs().maxCoeff() < 1e-9);
        // every diagonal entry equals alpha + beta
        for (int i = 0; i < n; ++i)
            CHECK(std::abs(oracle(i, i) - (c.alpha + c.beta)) < 1e-9);
    }
}

TEST_CASE("sum rules match direct matrix computation") {
    for (const Graph& g : {rook_4x4(), paley(13)}) {
        auto p = detect_srg(g);
        REQUIRE(p.has_value());
        const SumRules s = sum_rules(*p);
        Eigen::MatrixXi a = g.adjacency_int();
        Eigen::MatrixXi a2 = a * a;
        Eigen::MatrixXi a3 = a2 * a;
        Eigen::MatrixXi a4 = a2 * a2;
        CHECK(s.sum_a == a.sum());
        CHECK(s.sum_a2 == a2.sum());
        CHECK(s.sum_a3 == a3.sum());
        CHECK(s.trace_a3 == a3.trace());
        CHECK(s.trace_a4 == a4.trace());
    }
    CHECK(sum_rules(SrgParams{16, 6, 2, 2}).sum_a == 96);
    CHECK(sum_rules(SrgParams{16, 6, 2, 2}).trace_a3 == 192);
}
