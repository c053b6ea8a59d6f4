#include <complex>
#include <random>

#include <doctest.h>

#include "wlg/four_vector.hpp"
#include "wlg/generators.hpp"

using namespace wlg;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

double max_abs(const Matrix4c& m) { return m.cwiseAbs().maxCoeff(); }

}  // namespace

TEST_CASE("rotation generator entries follow the J3 pattern") {
    const Matrix4c j3 = generator_matrix(GeneratorLabel::J3);
    CHECK(j3(0, 1) == -kI);
    CHECK(j3(1, 0) == kI);
    Matrix4c rest = j3;
    rest(0, 1) = 0.0;
    rest(1, 0) = 0.0;
    CHECK(max_abs(rest) == 0.0);
}

TEST_CASE("K3 is anchored to the z-boost: entries at (z,t) and (t,z) only") {
    const Matrix4c k3 = generator_matrix(GeneratorLabel::K3);
    CHECK(k3(2, 3) == kI);
    CHECK(k3(3, 2) == kI);
    Matrix4c rest = k3;
    rest(2, 3) = 0.0;
    rest(3, 2) = 0.0;
    CHECK(max_abs(rest) == 0.0);
}

TEST_CASE("standard_generators returns the six labeled J/K generators") {
    const auto& table = standard_generators();
    REQUIRE(table.size() == 6);
    for (GeneratorLabel l :
         {GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3,
          GeneratorLabel::K1, GeneratorLabel::K2, GeneratorLabel::K3}) {
        REQUIRE(table.count(l) == 1);
        CHECK(table.at(l).label == l);
        CHECK(max_abs(table.at(l).matrix - generator_matrix(l)) == 0.0);
    }
}

TEST_CASE("all commutation relations close with zero deviation") {
    const auto& relations = lorentz_algebra_relations();
    REQUIRE(relations.size() == 18);
    for (const auto& rel : relations) {
        CAPTURE(rel.name);
        CHECK(relation_deviation(rel) == 0.0);
    }
}

TEST_CASE("selected commutators") {
    const Matrix4c j1 = generator_matrix(GeneratorLabel::J1);
    const Matrix4c j2 = generator_matrix(GeneratorLabel::J2);
    const Matrix4c j3 = generator_matrix(GeneratorLabel::J3);
    const Matrix4c k1 = generator_matrix(GeneratorLabel::K1);
    const Matrix4c k2 = generator_matrix(GeneratorLabel::K2);
    const Matrix4c n1 = generator_matrix(GeneratorLabel::N1);
    const Matrix4c n2 = generator_matrix(GeneratorLabel::N2);

    CHECK(max_abs(commutator(j1, j2) - kI * j3) == 0.0);
    CHECK(max_abs(commutator(k1, k2) + kI * j3) == 0.0);
    CHECK(max_abs(commutator(j3, j3)) == 0.0);
    CHECK(max_abs(commutator(n1, n2)) == 0.0);
    CHECK(max_abs(commutator(j3, n1) - kI * n2) == 0.0);
    CHECK(max_abs(commutator(j3, n2) + kI * n1) == 0.0);
}

TEST_CASE("n_generators builds N1 = K1 - J2 and N2 = K2 + J1") {
    const auto [n1, n2] = n_generators();
    CHECK(n1.label == GeneratorLabel::N1);
    CHECK(n2.label == GeneratorLabel::N2);
    const auto& table = standard_generators();
    CHECK(max_abs(n1.matrix - (table.at(GeneratorLabel::K1).matrix -
                               table.at(GeneratorLabel::J2).matrix)) == 0.0);
    CHECK(max_abs(n2.matrix - (table.at(GeneratorLabel::K2).matrix +
                               table.at(GeneratorLabel::J1).matrix)) == 0.0);
}

TEST_CASE("N1 annihilates the lightlike momentum (0,0,w,w)") {
    const auto [n1, n2] = n_generators();
    for (double omega : {1.0, 2.0, 0.3}) {
        const Eigen::Vector4cd p{0.0, 0.0, omega, omega};
        CHECK((n1.matrix * p).cwiseAbs().maxCoeff() == 0.0);
        CHECK((n2.matrix * p).cwiseAbs().maxCoeff() == 0.0);
    }
}

TEST_CASE("uN1 + vN2 cubes to zero exactly") {
    const auto [n1, n2] = n_generators();

    auto cube_is_zero = [&](double u, double v) {
        const Matrix4c m = u * n1.matrix + v * n2.matrix;
        return max_abs(m * m * m) == 0.0;
    };

    CHECK(cube_is_zero(1.0, 2.0));

    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> dist(-5.0, 5.0);
    for (int i = 0; i < 50; ++i) {
        const double u = dist(rng);
        const double v = dist(rng);
        CAPTURE(u);
        CAPTURE(v);
        CHECK(cube_is_zero(u, v));
    }
}
