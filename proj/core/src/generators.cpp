#include "wlg/generators.hpp"

#include <complex>
#include <stdexcept>

namespace wlg {

namespace {

Matrix4c unit(int row, int col) {
    Matrix4c m = Matrix4c::Zero();
    m(row, col) = 1.0;
    return m;
}

constexpr std::complex<double> kI{0.0, 1.0};

}  // namespace

const char* to_string(GeneratorLabel label) {
    switch (label) {
        case GeneratorLabel::J1: return "J1";
        case GeneratorLabel::J2: return "J2";
        case GeneratorLabel::J3: return "J3";
        case GeneratorLabel::K1: return "K1";
        case GeneratorLabel::K2: return "K2";
        case GeneratorLabel::K3: return "K3";
        case GeneratorLabel::N1: return "N1";
        case GeneratorLabel::N2: return "N2";
    }
    throw std::invalid_argument("unknown generator label");
}

Matrix4c generator_matrix(GeneratorLabel label) {
    // Indices 0..3 are (x, y, z, t). Rotations: (J_a)_{bc} = −i ε_{abc} on the
    // spatial block. Boosts: (K_a)_{at} = (K_a)_{ta} = +i, anchored so that
    // exp(−iηK3) is the cosh/sinh z-boost.
    switch (label) {
        case GeneratorLabel::J1: return -kI * (unit(1, 2) - unit(2, 1));
        case GeneratorLabel::J2: return -kI * (unit(2, 0) - unit(0, 2));
        case GeneratorLabel::J3: return -kI * (unit(0, 1) - unit(1, 0));
        case GeneratorLabel::K1: return kI * (unit(0, 3) + unit(3, 0));
        case GeneratorLabel::K2: return kI * (unit(1, 3) + unit(3, 1));
        case GeneratorLabel::K3: return kI * (unit(2, 3) + unit(3, 2));
        case GeneratorLabel::N1:
            return generator_matrix(GeneratorLabel::K1) -
                   generator_matrix(GeneratorLabel::J2);
        case GeneratorLabel::N2:
            return generator_matrix(GeneratorLabel::K2) +
                   generator_matrix(GeneratorLabel::J1);
    }
    throw std::invalid_argument("unknown generator label");
}

const std::map<GeneratorLabel, Generator>& standard_generators() {
    static const std::map<GeneratorLabel, Generator> table = [] {
        std::map<GeneratorLabel, Generator> m;
        for (GeneratorLabel l :
             {GeneratorLabel::J1, GeneratorLabel::J2, GeneratorLabel::J3,
              GeneratorLabel::K1, GeneratorLabel::K2, GeneratorLabel::K3}) {
            m.emplace(l, Generator{l, generator_matrix(l)});
        }
        return m;
    }();
    return table;
}

std::pair<Generator, Generator> n_generators() {
    const auto& std_gen = standard_generators();
    Generator n1{GeneratorLabel::N1,
                 std_gen.at(GeneratorLabel::K1).matrix -
                     std_gen.at(GeneratorLabel::J2).matrix};
    Generator n2{GeneratorLabel::N2,
                 std_gen.at(GeneratorLabel::K2).matrix +
                     std_gen.at(GeneratorLabel::J1).matrix};
    return {std::move(n1), std::move(n2)};
}

Matrix4c commutator(const Matrix4c& a, const Matrix4c& b) {
    return a * b - b * a;
}

namespace {

std::string relation_name(GeneratorLabel a, GeneratorLabel b,
                          std::complex<double> coeff,
                          std::optional<GeneratorLabel> rhs) {
    std::string out = "[";
    out += to_string(a);
    out += ",";
    out += to_string(b);
    out += "]=";
    if (!rhs) {
        out += "0";
        return out;
    }
    out += coeff.imag() > 0 ? "i" : "-i";
    out += to_string(*rhs);
    return out;
}

CommutationRelation make_relation(GeneratorLabel a, GeneratorLabel b,
                                  std::complex<double> coeff,
                                  std::optional<GeneratorLabel> rhs) {
    return {relation_name(a, b, coeff, rhs), a, b, coeff, rhs};
}

}  // namespace

const std::vector<CommutationRelation>& lorentz_algebra_relations() {
    using L = GeneratorLabel;
    constexpr std::complex<double> i{0.0, 1.0};
    static const std::vector<CommutationRelation> table = {
        // [J_i, J_j] = i ε_{ijk} J_k
        make_relation(L::J1, L::J2, i, L::J3),
        make_relation(L::J2, L::J3, i, L::J1),
        make_relation(L::J3, L::J1, i, L::J2),
        // [K_i, K_j] = −i ε_{ijk} J_k
        make_relation(L::K1, L::K2, -i, L::J3),
        make_relation(L::K2, L::K3, -i, L::J1),
        make_relation(L::K3, L::K1, -i, L::J2),
        // [J_i, K_j] = i ε_{ijk} K_k
        make_relation(L::J1, L::K1, 0.0, std::nullopt),
        make_relation(L::J1, L::K2, i, L::K3),
        make_relation(L::J1, L::K3, -i, L::K2),
        make_relation(L::J2, L::K1, -i, L::K3),
        make_relation(L::J2, L::K2, 0.0, std::nullopt),
        make_relation(L::J2, L::K3, i, L::K1),
        make_relation(L::J3, L::K1, i, L::K2),
        make_relation(L::J3, L::K2, -i, L::K1),
        make_relation(L::J3, L::K3, 0.0, std::nullopt),
        // {J3, N1, N2} closure
        make_relation(L::N1, L::N2, 0.0, std::nullopt),
        make_relation(L::J3, L::N1, i, L::N2),
        make_relation(L::J3, L::N2, -i, L::N1),
    };
    return table;
}

double relation_deviation(const CommutationRelation& rel) {
    const Matrix4c lhs =
        commutator(generator_matrix(rel.lhs_a), generator_matrix(rel.lhs_b));
    const Matrix4c rhs = rel.rhs ? Matrix4c(rel.coeff * generator_matrix(*rel.rhs))
                                 : Matrix4c(Matrix4c::Zero());
    return (lhs - rhs).cwiseAbs().maxCoeff();
}

}  // namespace wlg
