#pragma once

#include <complex>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <Eigen/Dense>

namespace wlg {

using Matrix4c = Eigen::Matrix4cd;

/// Labels for the Lorentz-algebra basis used throughout: three rotation
/// generators J, three boost generators K, and the two nilpotent combinations
/// N1 = K1 − J2, N2 = K2 + J1 that generate gauge transformations on massless
/// states.
enum class GeneratorLabel { J1, J2, J3, K1, K2, K3, N1, N2 };

const char* to_string(GeneratorLabel label);

/// A labeled generator. Generators are stored as 4×4 complex matrices with
/// entries in {0, ±i}; one-parameter group elements are exp(−iθG), which is
/// real for every real combination of these matrices.
struct Generator {
    GeneratorLabel label;
    Matrix4c matrix;
};

/// The matrix of a single labeled generator.
///
/// Conventions: (x, y, z, t) ordering; rotations follow the cyclic pattern of
/// J3 (entry (x,y) = −i, (y,x) = +i), boosts have entries (a,t) = (t,a) = +i.
/// K3 is fixed so that exp(−iηK3) is the standard cosh/sinh z-boost matrix.
Matrix4c generator_matrix(GeneratorLabel label);

/// All six J/K generators, keyed by label.
const std::map<GeneratorLabel, Generator>& standard_generators();

/// The nilpotent pair (N1, N2) = (K1 − J2, K2 + J1). Any real combination
/// uN1 + vN2 cubes to zero.
std::pair<Generator, Generator> n_generators();

/// ab − ba. Both operands must be 4×4 (enforced by the fixed-size type).
Matrix4c commutator(const Matrix4c& a, const Matrix4c& b);

/// One commutation relation [a, b] = coeff·rhs (rhs absent means zero).
struct CommutationRelation {
    std::string name;  // e.g. "[J1,J2]=iJ3"
    GeneratorLabel lhs_a;
    GeneratorLabel lhs_b;
    std::complex<double> coeff;
    std::optional<GeneratorLabel> rhs;
};

/// The closure table of the algebra: all 15 pairwise J/K commutators plus the
/// three relations of the {J3, N1, N2} subalgebra. Entries are exact, so each
/// relation holds with zero deviation in double arithmetic.
const std::vector<CommutationRelation>& lorentz_algebra_relations();

/// Max entrywise deviation of [lhs_a, lhs_b] from coeff·rhs.
double relation_deviation(const CommutationRelation& rel);

}  // namespace wlg
