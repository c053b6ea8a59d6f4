#pragma once

#include <utility>

#include <Eigen/Dense>

#include "wlg/four_vector.hpp"
#include "wlg/grid.hpp"
#include "wlg/group_element.hpp"

namespace wlg {

/// Light-cone coordinates u = (z+t)/√2, v = (z−t)/√2. Boosts rescale them by
/// e^{±η}, so the product u·v = (z²−t²)/2 is invariant.
struct LightCone {
    double u = 0.0;
    double v = 0.0;
};

LightCone lightcone_from_zt(double z, double t);
std::pair<double, double> zt_from_lightcone(const LightCone& lc);
LightCone boost_lightcone(const LightCone& lc, Rapidity eta);

/// Hadron center X = (x_a + x_b)/2 and quark separation x = (x_a − x_b)/(2√2).
/// Reconstruction: x_a = X + √2·x, x_b = X − √2·x.
struct RelativeCoordinates {
    FourVector X;
    FourVector x;
};

RelativeCoordinates hadron_coordinates(const FourVector& x_a,
                                       const FourVector& x_b);
std::pair<FourVector, FourVector> constituent_coordinates(
    const RelativeCoordinates& rc);

/// Total hadronic four-momentum P = p_a + p_b and quark momentum separation
/// q = √2·(p_a − p_b) — the convention conjugate to the coordinate split
/// (the normalizations are asymmetric on purpose).
struct RelativeMomenta {
    FourVector P;
    FourVector q;
};

RelativeMomenta hadron_momenta(const FourVector& p_a, const FourVector& p_b);
std::pair<FourVector, FourVector> constituent_momenta(
    const RelativeMomenta& rm);

/// Boosted ground-state amplitude on the (z, t) plane:
/// ψ_η(z,t) = (1/π)^{1/2} exp{−(e^{−2η}u² + e^{2η}v²)/2}. At η = 0 this is
/// the round Gaussian (1/π)^{1/2} exp(−(z²+t²)/2); a boost squeezes it along
/// the light-cone axes while preserving normalization.
double amplitude(Rapidity eta, double z, double t);

/// Momentum-energy amplitude φ_η(q_z, q_0) with light-cone variables
/// q_u = (q_0 − q_z)/√2, q_v = (q_0 + q_z)/√2. Same functional form as the
/// space-time amplitude; pointwise φ_η(q_z, q_0) = ψ_η(−q_z, q_0).
double momentum_amplitude(Rapidity eta, double q_z, double q_0);

/// A boosted ground state: the rapidity plus both amplitude evaluators.
struct SqueezedState {
    Rapidity eta;

    double amplitude(double z, double t) const {
        return wlg::amplitude(eta, z, t);
    }
    double momentum_amplitude(double q_z, double q_0) const {
        return wlg::momentum_amplitude(eta, q_z, q_0);
    }
};

/// Closed-form second moments of |ψ_η|² in (z, t):
/// Var z = Var t = cosh(2η)/2, Cov(z,t) = sinh(2η)/2. Principal axes sit at
/// ±45° with variances e^{±2η}/2.
Eigen::Matrix2d covariance(Rapidity eta);

/// Window half-width covering six standard deviations of every principal
/// axis of |ψ_η|² (six marginal sigmas per grid axis).
double default_half_width(Rapidity eta);

struct ResidualReport {
    double max_residual = 0.0;
    bool coarse_grid = false;  // set when max spacing exceeds 0.1
    double h1 = 0.0;
    double h2 = 0.0;
};

/// Max residual of (1/2){(z²−t²) − (∂²_z − ∂²_t)}ψ_η against 0·ψ_η with
/// second-order central differences on the interior of the given sampling
/// geometry. ψ_η is an exact eigenfunction with eigenvalue 0 for every η, so
/// the residual is pure O(h²) truncation.
ResidualReport invariant_equation_residual(Rapidity eta,
                                           const GridGeometry& geom);

}  // namespace wlg
