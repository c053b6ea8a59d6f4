#pragma once

#include <span>
#include <vector>

#include "wlg/group_element.hpp"

namespace wlg {

/// η = arccosh(energy/mass). Requires energy ≥ mass > 0.
Rapidity rapidity_from_energy(double energy_gev, double mass_gev);

/// Major light-cone axis dilation factor e^η: the oscillation period of the
/// internal quark motion as seen from the laboratory.
double period_dilation(Rapidity eta);

/// e^{−2η}: ratio of the external-signal interaction time (minor-axis
/// contraction e^{−η}) to the dilated oscillation period e^{η}.
double interaction_ratio(Rapidity eta);

/// Marginal density p(q_z) = ∫|φ_η(q_z, q_0)|² dq_0 by trapezoid quadrature,
/// one value per sample. Integrating the result over a 6-sigma window in q_z
/// returns 1 within 1e-4.
std::vector<double> longitudinal_momentum_distribution(
    Rapidity eta, std::span<const double> q_z_samples);

struct PartonReport {
    double energy = 0.0;             // GeV
    double mass = 0.0;               // GeV
    double eta = 0.0;
    double gamma = 0.0;              // energy/mass
    double period_dilation = 0.0;    // e^η
    double interaction_ratio = 0.0;  // e^{−2η}
    double spatial_width = 0.0;      // √(cosh 2η / 2), z direction
    double momentum_width = 0.0;     // √(cosh 2η / 2), q_z direction
};

/// Kinematic and squeeze factors for a hadron of the given energy and mass.
/// Both widths share the oscillator covariance closed form and grow together
/// with η.
PartonReport parton_report(double energy_gev, double mass_gev);

}  // namespace wlg
