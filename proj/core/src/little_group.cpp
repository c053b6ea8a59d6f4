#include "wlg/little_group.hpp"

#include <cmath>
#include <stdexcept>

namespace wlg {

const char* to_string(ParticleClass c) {
    return c == ParticleClass::Massive ? "massive" : "massless";
}

ParticleClass classify(const FourVector& p, double rel_tol) {
    if (!(p.t > 0.0)) {
        throw std::invalid_argument("classify: nonpositive energy unsupported");
    }
    const double n = minkowski_norm(p);
    const double scale = rel_tol * p.t * p.t;
    if (std::abs(n) <= scale) return ParticleClass::Massless;
    if (n < 0.0) return ParticleClass::Massive;
    throw std::invalid_argument("tachyonic: unsupported");
}

namespace {

void require_along_z(const FourVector& p, double rel_tol) {
    if (std::abs(p.x) > rel_tol * p.t || std::abs(p.y) > rel_tol * p.t) {
        throw std::invalid_argument(
            "little_group_generators: momentum direction unsupported "
            "(expected along z)");
    }
}

Matrix4c conjugate(const GroupElement& b, const GroupElement& b_inv,
                   const Matrix4c& g) {
    return b.matrix.cast<std::complex<double>>() * g *
           b_inv.matrix.cast<std::complex<double>>();
}

}  // namespace

LittleGroupBasis little_group_generators(const FourVector& p, double rel_tol) {
    const ParticleClass cls = classify(p, rel_tol);
    require_along_z(p, rel_tol);

    LittleGroupBasis basis;
    basis.particle_class = cls;

    if (cls == ParticleClass::Massless) {
        if (!(p.z > 0.0)) {
            throw std::invalid_argument(
                "little_group_generators: massless momentum must point along "
                "+z");
        }
        basis.names = {"J3", "N1", "N2"};
        basis.generators = {generator_matrix(GeneratorLabel::J3),
                            generator_matrix(GeneratorLabel::N1),
                            generator_matrix(GeneratorLabel::N2)};
        return basis;
    }

    basis.eta = std::atanh(p.z / p.t);
    const GroupElement b = boost_z(Rapidity{basis.eta});
    const GroupElement b_inv = boost_z(Rapidity{-basis.eta});
    basis.names = {"J1", "J2", "J3"};
    basis.generators = {
        conjugate(b, b_inv, generator_matrix(GeneratorLabel::J1)),
        conjugate(b, b_inv, generator_matrix(GeneratorLabel::J2)),
        generator_matrix(GeneratorLabel::J3)};
    return basis;
}

double verify_invariance(const FourVector& p, std::span<const double> params,
                         double rel_tol) {
    const LittleGroupBasis basis = little_group_generators(p, rel_tol);
    if (params.size() != basis.generators.size()) {
        throw std::invalid_argument(
            "verify_invariance: one parameter per generator required");
    }
    GroupElement elem;
    for (std::size_t i = 0; i < params.size(); ++i) {
        elem = elem * exp_generator(basis.generators[i], params[i]);
    }
    const FourVector q = apply(elem, p);
    const FourVector d = q - p;
    return std::max({std::abs(d.x), std::abs(d.y), std::abs(d.z),
                     std::abs(d.t)});
}

GroupElement gauge_element(double u, double v) {
    // Real matrix of −i(uN1 + vN2); cubes to zero, so the exponential is the
    // exact quadratic polynomial I + M + M²/2.
    Eigen::Matrix4d m = Eigen::Matrix4d::Zero();
    m(0, 2) = -u;
    m(0, 3) = u;
    m(1, 2) = -v;
    m(1, 3) = v;
    m(2, 0) = u;
    m(2, 1) = v;
    m(3, 0) = u;
    m(3, 1) = v;
    return GroupElement{Eigen::Matrix4d::Identity() + m + 0.5 * (m * m)};
}

FourPotential gauge_transform(const FourPotential& a, double u, double v) {
    if (!(a.a3 == a.a0)) {
        throw std::invalid_argument(
            "gauge_transform: Lorentz condition a3 = a0 violated");
    }
    if (!(a.k == a.omega)) {
        throw std::invalid_argument(
            "gauge_transform: massless plane wave requires k = omega");
    }
    const double shift = u * a.a1 + v * a.a2;
    FourPotential out = a;
    out.a3 = a.a3 + shift;
    out.a0 = a.a0 + shift;
    return out;
}

}  // namespace wlg
