#include "wlg/parton.hpp"

#include <cmath>
#include <stdexcept>

#include "wlg/oscillator.hpp"

namespace wlg {

Rapidity rapidity_from_energy(double energy_gev, double mass_gev) {
    if (!(mass_gev > 0.0)) {
        throw std::invalid_argument("rapidity_from_energy: mass must be positive");
    }
    if (!(energy_gev >= mass_gev)) {
        throw std::invalid_argument(
            "rapidity_from_energy: energy must be at least the mass");
    }
    return Rapidity{std::acosh(energy_gev / mass_gev)};
}

double period_dilation(Rapidity eta) { return std::exp(eta.eta); }

double interaction_ratio(Rapidity eta) { return std::exp(-2.0 * eta.eta); }

std::vector<double> longitudinal_momentum_distribution(
    Rapidity eta, std::span<const double> q_z_samples) {
    // |φ_η|² at fixed q_z is Gaussian in q_0 with conditional mean
    // −tanh(2η)·q_z and conditional variance 1/(2 cosh 2η); integrate each
    // slice over mean ± 8 conditional sigmas.
    const double ch2 = std::cosh(2.0 * eta.eta);
    const double th2 = std::tanh(2.0 * eta.eta);
    const double sigma_c = std::sqrt(0.5 / ch2);
    constexpr int kSlices = 1600;
    const double half = 8.0 * sigma_c;
    const double h = 2.0 * half / kSlices;

    std::vector<double> density;
    density.reserve(q_z_samples.size());
    for (double q_z : q_z_samples) {
        if (!std::isfinite(q_z)) {
            throw std::invalid_argument(
                "longitudinal_momentum_distribution: samples must be finite");
        }
        const double center = -th2 * q_z;
        double sum = 0.0;
        for (int i = 0; i <= kSlices; ++i) {
            const double q_0 = center - half + i * h;
            const double phi = momentum_amplitude(eta, q_z, q_0);
            const double w = (i == 0 || i == kSlices) ? 0.5 : 1.0;
            sum += w * phi * phi;
        }
        density.push_back(sum * h);
    }
    return density;
}

PartonReport parton_report(double energy_gev, double mass_gev) {
    const Rapidity eta = rapidity_from_energy(energy_gev, mass_gev);
    PartonReport report;
    report.energy = energy_gev;
    report.mass = mass_gev;
    report.eta = eta.eta;
    report.gamma = energy_gev / mass_gev;
    report.period_dilation = period_dilation(eta);
    report.interaction_ratio = interaction_ratio(eta);
    // Same closed form as the oscillator covariance; the spatial and
    // momentum widths are equal and grow together with η.
    const double width = std::sqrt(covariance(eta)(0, 0));
    report.spatial_width = width;
    report.momentum_width = width;
    return report;
}

}  // namespace wlg
