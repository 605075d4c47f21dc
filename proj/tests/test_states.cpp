#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "symcap/states.hpp"

using namespace symcap;

namespace {

Eigen::MatrixXd random_spd(int n, std::mt19937& rng, double shift = 0.3) {
    std::normal_distribution<double> dist(0.0, 1.0);
    Eigen::MatrixXd r(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) r(i, j) = dist(rng);
    return r * r.transpose() + shift * Eigen::MatrixXd::Identity(n, n);
}

}  // namespace

TEST_CASE("state validity") {
    auto vac = CovarianceMatrix::centered(0.5 * Eigen::MatrixXd::Identity(2, 2));
    auto chk = validate_state(vac);
    CHECK(chk.valid);
    CHECK(chk.min_symplectic_eigenvalue == doctest::Approx(0.5));

    auto bad = CovarianceMatrix::centered(0.4 * Eigen::MatrixXd::Identity(2, 2));
    CHECK_FALSE(validate_state(bad).valid);

    // Squeezed vacuum: nu = 1/2 regardless of squeezing.
    auto sq = CovarianceMatrix::centered(Eigen::Vector2d(2.0, 0.125).asDiagonal());
    CHECK(validate_state(sq).valid);
}

TEST_CASE("g function values") {
    CHECK(g_function(0.0) == 0.0);
    CHECK(g_function(1.0) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-12));
    CHECK(g_function(0.5) == doctest::Approx(1.5 * std::log(3.0) - std::log(2.0)).epsilon(1e-12));
    CHECK(g_function(0.5) == doctest::Approx(0.954771252442).epsilon(1e-10));
    CHECK_THROWS_AS(g_function(-0.1), std::invalid_argument);
}

TEST_CASE("g function is increasing and concave") {
    double prev = g_function(0.0);
    double prev_diff = -1.0;
    bool first = true;
    for (double x = 0.05; x <= 10.0; x += 0.05) {
        double cur = g_function(x);
        CHECK(cur > prev);
        double diff = cur - prev;
        if (!first) CHECK(diff < prev_diff + 1e-12);
        prev_diff = diff;
        prev = cur;
        first = false;
    }
}

TEST_CASE("entropy of thermal and squeezed states") {
    auto vac = CovarianceMatrix::centered(0.5 * Eigen::MatrixXd::Identity(2, 2));
    CHECK(entropy(vac) == doctest::Approx(0.0).epsilon(1e-12));

    auto thermal = CovarianceMatrix::centered(1.5 * Eigen::MatrixXd::Identity(2, 2));
    CHECK(entropy(thermal) == doctest::Approx(g_function(1.0)).epsilon(1e-12));

    // Entropy depends only on the symplectic spectrum.
    auto squeezed_thermal = CovarianceMatrix::centered(Eigen::Vector2d(3.0, 0.75).asDiagonal());
    CHECK(entropy(squeezed_thermal) == doctest::Approx(g_function(1.0)).epsilon(1e-12));
}

TEST_CASE("entropy agrees with the matrix-function route") {
    std::mt19937 rng(7);
    for (int t = 0; t < 50; ++t) {
        int s = 1 + t % 3;
        Eigen::MatrixXd alpha =
            random_spd(2 * s, rng) + 0.5 * Eigen::MatrixXd::Identity(2 * s, 2 * s);
        auto cm = CovarianceMatrix::centered(alpha);
        CHECK(entropy(cm) == doctest::Approx(entropy_matrix_form(cm)).epsilon(1e-9));
    }
}

TEST_CASE("entropy matches the truncated thermal oracle") {
    for (double nu : {0.5, 0.75, 1.0, 1.5, 2.5}) {
        auto cm = CovarianceMatrix::centered(nu * Eigen::MatrixXd::Identity(2, 2));
        double oracle = thermal_entropy_oracle(nu, 4000);
        CHECK(std::abs(entropy(cm) - oracle) <= 1e-7);
    }
}

TEST_CASE("vacuum covariance of complex structures") {
    Eigen::MatrixXd cj(2, 2);
    cj << 0, -1, 1, 0;
    auto vac = vacuum_covariance(ComplexStructure{cj});
    CHECK((vac.entries - 0.5 * Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);

    // J of a squeezed quadratic form gives a squeezed pure vacuum.
    Eigen::MatrixXd j(2, 2);
    j << 0, -2, 0.5, 0;
    auto sq = vacuum_covariance(ComplexStructure{j});
    // (1/2) Delta J = diag(1/4, 1): squeezed along q.
    CHECK((sq.entries - Eigen::MatrixXd(Eigen::Vector2d(0.25, 1.0).asDiagonal())).norm() < 1e-12);
    auto chk = validate_state(sq);
    CHECK(chk.valid);
    CHECK(chk.min_symplectic_eigenvalue == doctest::Approx(0.5));
}

TEST_CASE("energy functional is the trace pairing and is linear") {
    EnergyForm form{Eigen::MatrixXd::Identity(2, 2), 0.0};
    auto thermal = CovarianceMatrix::centered(1.5 * Eigen::MatrixXd::Identity(2, 2));
    CHECK(energy(thermal, form) == doctest::Approx(3.0).epsilon(1e-12));

    std::mt19937 rng(19);
    Eigen::MatrixXd eps = random_spd(4, rng);
    EnergyForm f{eps, 0.0};
    Eigen::MatrixXd a = random_spd(4, rng), b = random_spd(4, rng);
    double lhs = energy(CovarianceMatrix::centered(a + 2.0 * b), f);
    double rhs = energy(CovarianceMatrix::centered(a), f) +
                 2.0 * energy(CovarianceMatrix::centered(b), f);
    CHECK(lhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("minimal energy and the energy complex structure") {
    CHECK(minimal_energy(Eigen::MatrixXd::Identity(2, 2)) == doctest::Approx(1.0));
    CHECK(minimal_energy(Eigen::MatrixXd::Identity(4, 4)) == doctest::Approx(2.0));
    // eps = diag(mu1, mu2): single symplectic eigenvalue sqrt(mu1 mu2).
    CHECK(minimal_energy(Eigen::Vector2d(1.0, 4.0).asDiagonal()) == doctest::Approx(2.0));

    auto jh = energy_complex_structure(Eigen::Vector2d(1.0, 4.0).asDiagonal());
    CHECK(is_complex_structure(jh.entries).valid);
    // Its vacuum attains the minimal energy.
    auto vac = vacuum_covariance(jh);
    EnergyForm f{Eigen::Vector2d(1.0, 4.0).asDiagonal(), 0.0};
    CHECK(energy(vac, f) == doctest::Approx(2.0).epsilon(1e-10));

    std::mt19937 rng(23);
    for (int t = 0; t < 30; ++t) {
        int s = 1 + t % 2;
        Eigen::MatrixXd eps = random_spd(2 * s, rng);
        auto j = energy_complex_structure(eps);
        CHECK(is_complex_structure(j.entries).valid);
        EnergyForm form{eps, 0.0};
        double emin = minimal_energy(eps);
        CHECK(energy(vacuum_covariance(j), form) == doctest::Approx(emin).epsilon(1e-9));
        // No valid state does better: spot-check random valid covariances.
        Eigen::MatrixXd alpha =
            random_spd(2 * s, rng) + 0.5 * Eigen::MatrixXd::Identity(2 * s, 2 * s);
        if (validate_state(CovarianceMatrix::centered(alpha)).valid)
            CHECK(energy(CovarianceMatrix::centered(alpha), form) >= emin - 1e-9);
    }
}

TEST_CASE("thermal oracle edge cases") {
    CHECK(thermal_entropy_oracle(0.5, 100) == doctest::Approx(0.0).epsilon(1e-14));
    // Mean 1 photon: converges to g(1).
    CHECK(std::abs(thermal_entropy_oracle(1.5, 4000) - g_function(1.0)) < 1e-10);
    CHECK_THROWS_AS(thermal_entropy_oracle(0.4, 100), std::invalid_argument);
}

TEST_CASE("entropy is invariant under symplectic conjugation") {
    std::mt19937 rng(29);
    Eigen::MatrixXd delta(2, 2);
    delta << 0, 1, -1, 0;
    for (int t = 0; t < 20; ++t) {
        std::uniform_real_distribution<double> u(0.2, 2.0);
        double r = u(rng), phi = u(rng);
        Eigen::MatrixXd rot(2, 2);
        rot << std::cos(phi), -std::sin(phi), std::sin(phi), std::cos(phi);
        Eigen::MatrixXd sq = Eigen::Vector2d(r, 1.0 / r).asDiagonal();
        Eigen::MatrixXd sp = rot * sq;
        Eigen::MatrixXd alpha = random_spd(2, rng) + 0.5 * Eigen::MatrixXd::Identity(2, 2);
        double s0 = entropy(CovarianceMatrix::centered(alpha));
        double s1 = entropy(CovarianceMatrix::centered(sp * alpha * sp.transpose()));
        CHECK(s0 == doctest::Approx(s1).epsilon(1e-9));
    }
}
