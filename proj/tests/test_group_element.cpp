#include <cmath>
#include <complex>
#include <numbers>
#include <random>

#include <doctest.h>

#include "support/series_exp.hpp"
#include "wlg/four_vector.hpp"
#include "wlg/generators.hpp"
#include "wlg/group_element.hpp"

using namespace wlg;

namespace {

constexpr std::complex<double> kI{0.0, 1.0};

Matrix4c combo(double c1, GeneratorLabel l1, double c2, GeneratorLabel l2,
               double c3, GeneratorLabel l3) {
    return c1 * generator_matrix(l1) + c2 * generator_matrix(l2) +
           c3 * generator_matrix(l3);
}

double metric_deviation(const GroupElement& e) {
    const Eigen::Matrix4d g = minkowski_metric();
    return (e.matrix.transpose() * g * e.matrix - g).cwiseAbs().maxCoeff();
}

struct OracleCheck {
    double exp_error = 0.0;     // closed form vs series oracle
    double metric_error = 0.0;  // metric preservation of the closed form
    double det_error = 0.0;
};

OracleCheck check_sample(const Matrix4c& gen, double theta) {
    const GroupElement closed = exp_generator(gen, theta);
    const Eigen::Matrix4d a = (std::complex<double>(0.0, -theta) * gen).real();
    const Eigen::Matrix4d oracle = wlg::testing::series_exp(a);
    return {(closed.matrix - oracle).cwiseAbs().maxCoeff(),
            metric_deviation(closed),
            std::abs(closed.matrix.determinant() - 1.0)};
}

double uniform(std::mt19937_64& rng, double lo, double hi) {
    return lo + (hi - lo) * ((rng() >> 11) * 0x1.0p-53);
}

Eigen::Vector3d random_unit(std::mt19937_64& rng) {
    while (true) {
        Eigen::Vector3d v{uniform(rng, -1.0, 1.0), uniform(rng, -1.0, 1.0),
                          uniform(rng, -1.0, 1.0)};
        const double n = v.norm();
        if (n > 0.1 && n <= 1.0) return v / n;
    }
}

}  // namespace

TEST_CASE("exp of K3 at theta = 0 is the identity") {
    const GroupElement e =
        exp_generator(generator_matrix(GeneratorLabel::K3), 0.0);
    CHECK((e.matrix - Eigen::Matrix4d::Identity()).cwiseAbs().maxCoeff() ==
          0.0);

    // The labeled-generator overload goes through the same path.
    const GroupElement labeled = exp_generator(
        standard_generators().at(GeneratorLabel::K3), 1.25);
    const GroupElement raw =
        exp_generator(generator_matrix(GeneratorLabel::K3), 1.25);
    CHECK((labeled.matrix - raw.matrix).cwiseAbs().maxCoeff() == 0.0);
}

TEST_CASE("exp of K3 reproduces the cosh/sinh boost matrix") {
    const Matrix4c k3 = generator_matrix(GeneratorLabel::K3);

    const GroupElement e1 = exp_generator(k3, 1.0);
    CHECK(e1.matrix(2, 2) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(e1.matrix(3, 3) == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
    CHECK(e1.matrix(2, 3) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(e1.matrix(3, 2) == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));

    for (int i = 0; i < 100; ++i) {
        const double eta = -5.0 + 10.0 * i / 99.0;
        const Eigen::Matrix4d diff =
            exp_generator(k3, eta).matrix - boost_z(Rapidity{eta}).matrix;
        CAPTURE(eta);
        CHECK(diff.cwiseAbs().maxCoeff() <= 1e-12);
    }
}

TEST_CASE("exp on the nilpotent span matches the quadratic closed form") {
    const double u = 0.3;
    const double v = -0.4;
    const auto [n1, n2] = n_generators();
    const Matrix4c gen = u * n1.matrix + v * n2.matrix;
    const GroupElement e = exp_generator(gen, 1.0);

    // Entry pattern of exp(-i(uN1 + vN2)) with s = u^2 + v^2.
    const double s = u * u + v * v;
    Eigen::Matrix4d expected;
    expected << 1, 0, -u, u,
                0, 1, -v, v,
                u, v, 1 - s / 2, s / 2,
                u, v, -s / 2, 1 + s / 2;
    CHECK((e.matrix - expected).cwiseAbs().maxCoeff() <= 1e-15);

    const auto oracle = check_sample(gen, 1.0);
    CHECK(oracle.exp_error <= 1e-12);
}

TEST_CASE("closed forms agree with the series oracle: 1000 random samples") {
    std::mt19937_64 rng(20010714);
    double worst_exp = 0.0;
    double worst_metric = 0.0;
    double worst_det = 0.0;

    auto record = [&](const OracleCheck& c) {
        worst_exp = std::max(worst_exp, c.exp_error);
        worst_metric = std::max(worst_metric, c.metric_error);
        worst_det = std::max(worst_det, c.det_error);
    };

    for (int i = 0; i < 250; ++i) {  // rotations about random axes
        const Eigen::Vector3d n = random_unit(rng);
        const Matrix4c gen = combo(n(0), GeneratorLabel::J1, n(1),
                                   GeneratorLabel::J2, n(2), GeneratorLabel::J3);
        record(check_sample(gen, uniform(rng, -5.0, 5.0)));
    }
    for (int i = 0; i < 250; ++i) {  // boosts along random axes
        const Eigen::Vector3d n = random_unit(rng);
        const Matrix4c gen = combo(n(0), GeneratorLabel::K1, n(1),
                                   GeneratorLabel::K2, n(2), GeneratorLabel::K3);
        record(check_sample(gen, uniform(rng, -5.0, 5.0)));
    }
    {  // nilpotent span
        const auto [n1, n2] = n_generators();
        for (int i = 0; i < 250; ++i) {
            const Matrix4c gen = uniform(rng, -2.0, 2.0) * n1.matrix +
                                 uniform(rng, -2.0, 2.0) * n2.matrix;
            record(check_sample(gen, uniform(rng, -2.0, 2.0)));
        }
    }
    for (int i = 0; i < 250;) {  // mixed rotation/boost combinations
        const Eigen::Vector3d j{uniform(rng, -1.0, 1.0),
                                uniform(rng, -1.0, 1.0),
                                uniform(rng, -1.0, 1.0)};
        const Eigen::Vector3d k{uniform(rng, -1.0, 1.0),
                                uniform(rng, -1.0, 1.0),
                                uniform(rng, -1.0, 1.0)};
        // Stay clear of the nearly-null region, exercised exactly above.
        const double w = k.squaredNorm() - j.squaredNorm();
        const double tau = j.dot(k);
        if (std::sqrt(w * w + 4.0 * tau * tau) <
            0.05 * std::max(j.squaredNorm(), k.squaredNorm())) {
            continue;
        }
        const Matrix4c gen =
            combo(j(0), GeneratorLabel::J1, j(1), GeneratorLabel::J2, j(2),
                  GeneratorLabel::J3) +
            combo(k(0), GeneratorLabel::K1, k(1), GeneratorLabel::K2, k(2),
                  GeneratorLabel::K3);
        record(check_sample(gen, uniform(rng, -4.0, 4.0)));
        ++i;
    }

    CHECK(worst_exp <= 1e-12);
    // Metric/determinant defects are representation-limited at powers of the
    // entry scale times eps (boost entries reach cosh 5 ~ 74). The plain
    // 1e-12 bounds hold for moderate parameters, tested below.
    CHECK(worst_metric <= 5e-12);
    CHECK(worst_det <= 1e-10);
}

TEST_CASE("group elements with moderate parameters preserve metric and norm") {
    std::mt19937_64 rng(99);

    for (int i = 0; i < 200; ++i) {
        GroupElement e;
        const int factors = 1 + static_cast<int>(rng() % 4);
        for (int f = 0; f < factors; ++f) {
            const Eigen::Vector3d n = random_unit(rng);
            const bool rotate = (rng() & 1) != 0;
            const Matrix4c gen =
                rotate ? combo(n(0), GeneratorLabel::J1, n(1),
                               GeneratorLabel::J2, n(2), GeneratorLabel::J3)
                       : combo(n(0), GeneratorLabel::K1, n(1),
                               GeneratorLabel::K2, n(2), GeneratorLabel::K3);
            e = e * exp_generator(gen, uniform(rng, rotate ? -2.0 : -1.5,
                                               rotate ? 2.0 : 1.5));
        }
        CHECK(metric_deviation(e) <= 1e-12);
        CHECK(std::abs(e.matrix.determinant() - 1.0) <= 1e-12);

        const FourVector x{uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0),
                           uniform(rng, -2.0, 2.0), uniform(rng, -2.0, 2.0)};
        const double before = minkowski_norm(x);
        const double after = minkowski_norm(apply(e, x));
        CHECK(std::abs(after - before) <=
              1e-12 * std::max(1.0, std::abs(before)));
    }
}

TEST_CASE("exp_generator rejects combinations outside the real algebra span") {
    const Matrix4c j1 = generator_matrix(GeneratorLabel::J1);
    CHECK_THROWS_AS(exp_generator(Matrix4c((1.0 + kI) * j1), 1.0),
                    std::invalid_argument);
    CHECK_THROWS_AS(exp_generator(Matrix4c(kI * j1), 1.0),
                    std::invalid_argument);

    Matrix4c not_algebra = Matrix4c::Zero();
    not_algebra(0, 0) = kI;  // -i*theta*g real but symmetric: not so(3,1)
    CHECK_THROWS_AS(exp_generator(not_algebra, 1.0), std::invalid_argument);
}

TEST_CASE("boost_z basics") {
    CHECK((boost_z(Rapidity{0.0}).matrix - Eigen::Matrix4d::Identity())
              .cwiseAbs()
              .maxCoeff() == 0.0);

    for (double eta : {0.5, 1.0, 2.0, 3.0}) {
        const GroupElement round =
            boost_z(Rapidity{eta}) * boost_z(Rapidity{-eta});
        CHECK((round.matrix - Eigen::Matrix4d::Identity())
                  .cwiseAbs()
                  .maxCoeff() <= 1e-12);
    }

    const FourVector rest{0.0, 0.0, 0.0, 1.0};
    const FourVector moved = apply(boost_z(Rapidity{1.0}), rest);
    CHECK(moved.x == 0.0);
    CHECK(moved.y == 0.0);
    CHECK(moved.z == doctest::Approx(std::sinh(1.0)).epsilon(1e-15));
    CHECK(moved.t == doctest::Approx(std::cosh(1.0)).epsilon(1e-15));
}

TEST_CASE("apply: identity, lightlike dilation, quarter rotation") {
    const FourVector x{0.4, -1.0, 2.0, 0.7};
    const FourVector same = apply(GroupElement{}, x);
    CHECK(same.x == x.x);
    CHECK(same.y == x.y);
    CHECK(same.z == x.z);
    CHECK(same.t == x.t);

    const double eta = 1.0;
    const double omega = 2.0;
    const FourVector light = apply(boost_z(Rapidity{eta}),
                                   FourVector{0.0, 0.0, omega, omega});
    const double scale = std::exp(eta) * omega;
    CHECK(light.x == 0.0);
    CHECK(light.y == 0.0);
    CHECK(light.z == doctest::Approx(scale).epsilon(1e-12));
    CHECK(light.t == doctest::Approx(scale).epsilon(1e-12));

    const GroupElement quarter = exp_generator(
        generator_matrix(GeneratorLabel::J3), std::numbers::pi / 2.0);
    const FourVector rotated = apply(quarter, FourVector{1.0, 0.0, 0.0, 0.0});
    CHECK(std::abs(rotated.x - 0.0) <= 1e-15);
    CHECK(std::abs(rotated.y - 1.0) <= 1e-15);
    CHECK(rotated.z == 0.0);
    CHECK(rotated.t == 0.0);
}
