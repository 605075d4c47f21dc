#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include <unsupported/Eigen/MatrixFunctions>

#include "symcap/symplectic.hpp"

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

TEST_CASE("symplectic form, interleaved single mode") {
    Eigen::MatrixXd d = symplectic_form({1, Ordering::Interleaved});
    Eigen::MatrixXd expect(2, 2);
    expect << 0, 1, -1, 0;
    CHECK((d - expect).norm() == 0.0);
    CHECK((d * d + Eigen::MatrixXd::Identity(2, 2)).norm() == 0.0);
    CHECK(d.determinant() == doctest::Approx(1.0));
}

TEST_CASE("symplectic form, blocked two modes") {
    Eigen::MatrixXd d = symplectic_form({2, Ordering::Blocked});
    Eigen::MatrixXd expect(4, 4);
    expect << 0, 0, 1, 0,
              0, 0, 0, 1,
             -1, 0, 0, 0,
              0, -1, 0, 0;
    CHECK((d - expect).norm() == 0.0);
    CHECK((d + d.transpose()).norm() == 0.0);
}

TEST_CASE("symplectic form invariants for larger s") {
    for (int s : {1, 2, 3, 5}) {
        for (auto ord : {Ordering::Interleaved, Ordering::Blocked}) {
            Eigen::MatrixXd d = symplectic_form({s, ord});
            CHECK((d + d.transpose()).norm() == 0.0);
            CHECK((d * d + Eigen::MatrixXd::Identity(2 * s, 2 * s)).norm() == 0.0);
            CHECK(d.determinant() == doctest::Approx(1.0));
        }
    }
}

TEST_CASE("reorder fixes the identity and maps the forms onto each other") {
    Eigen::MatrixXd id = Eigen::MatrixXd::Identity(6, 6);
    CHECK((reorder(id, Ordering::Interleaved, Ordering::Blocked) - id).norm() == 0.0);

    Eigen::MatrixXd di = symplectic_form({2, Ordering::Interleaved});
    Eigen::MatrixXd db = symplectic_form({2, Ordering::Blocked});
    CHECK((reorder(di, Ordering::Interleaved, Ordering::Blocked) - db).norm() == 0.0);

    Eigen::VectorXd diag(4);
    diag << 1.0, 2.0, 3.0, 4.0;  // (a1, b1, a2, b2) interleaved
    Eigen::MatrixXd m = reorder(diag.asDiagonal(), Ordering::Interleaved, Ordering::Blocked);
    Eigen::VectorXd expect(4);
    expect << 1.0, 3.0, 2.0, 4.0;  // (a1, a2, b1, b2) blocked
    CHECK((m - Eigen::MatrixXd(expect.asDiagonal())).norm() == 0.0);
}

TEST_CASE("reorder round trip is the identity exactly") {
    std::mt19937 rng(5);
    for (int s : {1, 2, 4}) {
        Eigen::MatrixXd m = random_spd(2 * s, rng);
        Eigen::MatrixXd back = reorder(reorder(m, Ordering::Interleaved, Ordering::Blocked),
                                       Ordering::Blocked, Ordering::Interleaved);
        CHECK((back - m).norm() == 0.0);
    }
    CHECK_THROWS_AS(reorder(Eigen::MatrixXd::Identity(3, 3), Ordering::Interleaved,
                            Ordering::Blocked),
                    std::invalid_argument);
}

TEST_CASE("matrix_abs of a rotation-like generator") {
    Eigen::MatrixXd delta = symplectic_form({1, Ordering::Interleaved});
    Eigen::MatrixXd m = delta.inverse() * (0.5 * Eigen::MatrixXd::Identity(2, 2));
    // eigenvalues +-i/2
    CHECK((matrix_abs(m) - 0.5 * Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-12);
}

TEST_CASE("matrix_abs of a diagonal matrix flips negative entries") {
    Eigen::MatrixXd m = Eigen::Vector2d(-3.0, 2.0).asDiagonal();
    CHECK((matrix_abs(m) - Eigen::MatrixXd(Eigen::Vector2d(3.0, 2.0).asDiagonal())).norm() < 1e-12);
}

TEST_CASE("matrix_abs of a squeezed generator has unit spectrum") {
    Eigen::MatrixXd delta = symplectic_form({1, Ordering::Interleaved});
    Eigen::MatrixXd m = delta.inverse() * Eigen::MatrixXd(Eigen::Vector2d(2.0, 0.5).asDiagonal());
    Eigen::MatrixXd a = matrix_abs(m);
    Eigen::VectorXcd ev = Eigen::EigenSolver<Eigen::MatrixXd>(a).eigenvalues();
    CHECK(std::abs(ev(0)) == doctest::Approx(1.0));
    CHECK(std::abs(ev(1)) == doctest::Approx(1.0));
    CHECK(a.trace() == doctest::Approx(2.0));
}

TEST_CASE("matrix_abs rejects defective input") {
    Eigen::MatrixXd jordan(2, 2);
    jordan << 1, 1, 0, 1;
    CHECK_THROWS_AS(matrix_abs(jordan), std::invalid_argument);
}

TEST_CASE("symplectic eigenvalues of canonical examples") {
    Eigen::MatrixXd vac = 0.5 * Eigen::MatrixXd::Identity(2, 2);
    auto nu = symplectic_eigenvalues(vac);
    REQUIRE(nu.size() == 1);
    CHECK(nu[0] == doctest::Approx(0.5));

    auto nu2 = symplectic_eigenvalues(Eigen::Vector2d(2.0, 0.5).asDiagonal());
    CHECK(nu2[0] == doctest::Approx(1.0));

    Eigen::VectorXd d(4);
    d << 1.5, 1.5, 2.5, 2.5;
    auto nu3 = symplectic_eigenvalues(d.asDiagonal());
    REQUIRE(nu3.size() == 2);
    CHECK(nu3[0] == doctest::Approx(2.5));
    CHECK(nu3[1] == doctest::Approx(1.5));
}

TEST_CASE("symplectic eigenvalues reject bad input") {
    Eigen::MatrixXd ns(2, 2);
    ns << 1, 1, 0, 1;
    CHECK_THROWS_AS(symplectic_eigenvalues(ns), std::invalid_argument);
    CHECK_THROWS_AS(symplectic_eigenvalues(Eigen::Vector2d(1.0, -1.0).asDiagonal()),
                    std::invalid_argument);
}

TEST_CASE("williamson of vacuum and of a squeezed thermal state") {
    auto w = williamson(0.5 * Eigen::MatrixXd::Identity(2, 2));
    CHECK(w.nu[0] == doctest::Approx(0.5));
    CHECK((w.S * w.diagonal() * w.S.transpose() - 0.5 * Eigen::MatrixXd::Identity(2, 2)).norm() <
          1e-12);

    Eigen::MatrixXd alpha = Eigen::Vector2d(4.0, 1.0).asDiagonal();
    auto w2 = williamson(alpha);
    Eigen::MatrixXd delta = symplectic_form({1, Ordering::Interleaved});
    CHECK(w2.nu[0] == doctest::Approx(2.0));
    CHECK((w2.S.transpose() * delta * w2.S - delta).norm() < 1e-12);
    CHECK((w2.S * w2.diagonal() * w2.S.transpose() - alpha).norm() < 1e-12);
}

TEST_CASE("williamson reconstruction property on random matrices") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        int s = 1 + trial % 3;
        Eigen::MatrixXd alpha = random_spd(2 * s, rng);
        Eigen::MatrixXd delta = symplectic_form({s, Ordering::Interleaved});
        auto w = williamson(alpha);
        CHECK((w.S * w.diagonal() * w.S.transpose() - alpha).norm() <= 1e-10 * alpha.norm());
        CHECK((w.S.transpose() * delta * w.S - delta).norm() <= 1e-10);
        auto nu = symplectic_eigenvalues(alpha);
        for (int j = 0; j < s; ++j) CHECK(std::abs(w.nu[j] - nu[j]) <= 1e-10 * (1.0 + nu[j]));
    }
}

TEST_CASE("williamson handles degenerate symplectic spectra") {
    std::mt19937 rng(13);
    // Thermal 2-mode state with equal nu, conjugated by a random symplectic map.
    Eigen::MatrixXd q = random_spd(4, rng) * 0.2;
    Eigen::MatrixXd delta = symplectic_form({2, Ordering::Interleaved});
    Eigen::MatrixXd sp = (delta * q).exp();
    Eigen::MatrixXd alpha = sp * (1.7 * Eigen::MatrixXd::Identity(4, 4)) * sp.transpose();
    auto w = williamson(alpha);
    CHECK(w.nu[0] == doctest::Approx(1.7));
    CHECK(w.nu[1] == doctest::Approx(1.7));
    CHECK((w.S * w.diagonal() * w.S.transpose() - alpha).norm() <= 1e-10 * alpha.norm());
    CHECK((w.S.transpose() * delta * w.S - delta).norm() <= 1e-10);
}

TEST_CASE("complex structure of a diagonal form") {
    double mu1 = 1.0, mu2 = 4.0;
    auto j = complex_structure_from_form(Eigen::Vector2d(mu1, mu2).asDiagonal());
    Eigen::MatrixXd expect(2, 2);
    expect << 0, -std::sqrt(mu2 / mu1), std::sqrt(mu1 / mu2), 0;
    CHECK((j.entries - expect).norm() < 1e-12);

    auto jc = complex_structure_from_form(Eigen::MatrixXd::Identity(2, 2));
    Eigen::MatrixXd canonical(2, 2);
    canonical << 0, -1, 1, 0;
    CHECK((jc.entries - canonical).norm() < 1e-12);
}

TEST_CASE("complex structure properties on random forms") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 100; ++trial) {
        int s = 1 + trial % 2;
        Eigen::MatrixXd mu = random_spd(2 * s, rng);
        Eigen::MatrixXd delta = symplectic_form({s, Ordering::Interleaved});
        auto j = complex_structure_from_form(mu);
        auto chk = is_complex_structure(j.entries);
        CHECK(chk.valid);
        Eigen::MatrixXd a = delta.inverse() * mu;
        CHECK((a * j.entries - j.entries * a).norm() <= 1e-9 * (1.0 + a.norm()));
    }
    CHECK_THROWS_AS(complex_structure_from_form(Eigen::Vector2d(1.0, 0.0).asDiagonal()),
                    std::invalid_argument);
}

TEST_CASE("is_complex_structure verdicts") {
    Eigen::MatrixXd delta = symplectic_form({1, Ordering::Interleaved});
    CHECK(is_complex_structure(delta.inverse()).valid);
    CHECK_FALSE(is_complex_structure(Eigen::MatrixXd::Identity(2, 2)).valid);

    Eigen::MatrixXd j(2, 2);
    j << 0, -2, 0.5, 0;
    auto chk = is_complex_structure(j);
    CHECK(chk.valid);
    CHECK(chk.square_residual < 1e-14);
    CHECK(chk.min_eigenvalue == doctest::Approx(0.5));
}

TEST_CASE("gauge rotation group") {
    Eigen::MatrixXd cj(2, 2);
    cj << 0, -1, 1, 0;
    ComplexStructure j{cj};
    CHECK((gauge_rotation(j, 0.0) - Eigen::MatrixXd::Identity(2, 2)).norm() == 0.0);
    CHECK((gauge_rotation(j, M_PI / 2) - cj).norm() < 1e-15);
    CHECK((gauge_rotation(j, M_PI) + Eigen::MatrixXd::Identity(2, 2)).norm() < 1e-15);

    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ang(-3.0, 3.0);
    ComplexStructure jr = complex_structure_from_form(random_spd(4, rng));
    Eigen::MatrixXd delta = symplectic_form({2, Ordering::Interleaved});
    for (int t = 0; t < 20; ++t) {
        double p1 = ang(rng), p2 = ang(rng);
        Eigen::MatrixXd lhs = gauge_rotation(jr, p1) * gauge_rotation(jr, p2);
        CHECK((lhs - gauge_rotation(jr, p1 + p2)).norm() <= 1e-12);
    }
    Eigen::MatrixXd g = gauge_rotation(jr, 0.7);
    CHECK((g.transpose() * delta * g - delta).norm() <= 1e-12);
    CHECK_THROWS_AS(gauge_rotation(ComplexStructure{Eigen::MatrixXd::Identity(2, 2)}, 1.0),
                    std::invalid_argument);
}
