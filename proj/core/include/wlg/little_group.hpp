#pragma once

#include <array>
#include <span>
#include <string>

#include "wlg/four_vector.hpp"
#include "wlg/generators.hpp"
#include "wlg/group_element.hpp"

namespace wlg {

enum class ParticleClass { Massive, Massless };

const char* to_string(ParticleClass c);

/// Plane-wave four-potential amplitude (a1, a2, a3, a0) with its phase
/// exp(i(kz − ωt)) carried symbolically as (k, omega). The Lorentz condition
/// a3 = a0 (and k = omega for the massless wave) is required exactly before a
/// gauge transformation may act.
struct FourPotential {
    double a1 = 0.0;
    double a2 = 0.0;
    double a3 = 0.0;
    double a0 = 0.0;
    double k = 1.0;
    double omega = 1.0;
};

inline constexpr double kClassifyRelTol = 1e-9;

/// Classify a four-momentum with positive energy. Massless iff |p·p| ≤
/// rel_tol·t², massive iff p·p is below −rel_tol·t² (timelike under
/// diag(1,1,1,−1)). Spacelike momenta and nonpositive energies are rejected.
ParticleClass classify(const FourVector& p, double rel_tol = kClassifyRelTol);

/// The three generators of the little group of p, each annihilating p.
struct LittleGroupBasis {
    ParticleClass particle_class;
    double eta = 0.0;  // boost rapidity of a massive state (0 at rest)
    std::array<std::string, 3> names;
    std::array<Matrix4c, 3> generators;
};

/// Massive at rest → {J1, J2, J3}; massive moving along z with rapidity η →
/// {B J1 B⁻¹, B J2 B⁻¹, J3} with B = boost_z(η); massless along +z →
/// {J3, N1, N2}. Momenta off the z axis are rejected.
LittleGroupBasis little_group_generators(const FourVector& p,
                                         double rel_tol = kClassifyRelTol);

/// Exponentiate each little-group generator of p with its parameter, apply
/// the product to p, and return the max component deviation from p.
double verify_invariance(const FourVector& p, std::span<const double> params,
                         double rel_tol = kClassifyRelTol);

/// exp(−i(uN1 + vN2)). The nilpotent expansion terminates: the element is
/// exactly I + M + M²/2 with M the real matrix of −i(uN1 + vN2).
GroupElement gauge_element(double u, double v);

/// Gauge action on a plane-wave potential satisfying the Lorentz condition:
/// a1, a2 are unchanged (bit-identical) and a3, a0 are both shifted by
/// u·a1 + v·a2, so A′ − A is proportional to the lightlike direction
/// (0, 0, 1, 1).
FourPotential gauge_transform(const FourPotential& a, double u, double v);

}  // namespace wlg
