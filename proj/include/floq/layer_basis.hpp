// Per-region Floquet basis: channel momenta plus the Fourier coefficients of
// the oscillating phase factor that dresses each plane-wave channel.
//
// The exact solution in a region with vector potential A(t) = s*A_u(t)
// (s the region's field scale, A_u the unit-profile potential) attaches to
// the channel wave exp(i sigma p_N x) the time factor exp(i Phi_q(t)) with
// q = sigma p_N and
//
//   Phi_q(t) = (e/m) q s IntA(t) - (1/(2m)) s^2 IntA2c(t),
//
// where IntA = int_0^t A_u and IntA2c = int_0^t (A_u^2 - <A_u^2>); both have
// zero period mean by construction, so Phi is periodic with Phi(0) = 0. The
// sideband coefficients are the Fourier components
//
//   B_K(q) = (1/T) int_0^T exp(i Phi_q(t)) exp(i K w t) dt,
//
// so mode N radiates at quasienergy E + (N+K) w with weight B_K(sigma p_N).
//
// For closed channels q is imaginary and |exp(i Phi_q)| swings over a range
// exp(kappa * quiver amplitude) that can dwarf double precision. Columns are
// therefore stored max-normalized together with the log of the true scale;
// downstream interface solves work entirely with the normalized columns and
// the scales are unwound only at amplitude extraction. This is exact algebra,
// not an approximation.
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "floq/channels.hpp"
#include "floq/device.hpp"
#include "floq/errors.hpp"
#include "floq/units.hpp"
#include "floq/vector_potential.hpp"

namespace floq {

// Sampled phase integral Phi_q(t_j) for a channel momentum q in a region
// with the given mass and field scale.
inline Eigen::VectorXcd phase_integral(const VectorPotentialTable& tab, double field_scale,
                                       double mass, complexd q) {
    const complexd c1 = (electron_charge / mass) * q * field_scale;
    const double c2 = -field_scale * field_scale / (2.0 * mass);
    Eigen::VectorXcd phi(tab.n_samples);
    for (int j = 0; j < tab.n_samples; ++j) phi(j) = c1 * tab.int_a(j) + c2 * tab.int_a2(j);
    return phi;
}

struct LayerBasis {
    Region region;
    ChannelGrid grid;
    double ponderomotive = 0.0;   // U = s^2 <A_u^2> / (2 m)
    std::vector<Momentum> p;      // channel momenta, size grid.size()
    int k_max = 0;                // stored coefficient band K in [-k_max, k_max]
    // Max-normalized coefficient tables, (2*k_max+1) x grid.size(); the true
    // coefficient is stored * exp(log_scale of that column).
    Eigen::MatrixXcd coeff_plus;  // q = +p_N
    Eigen::MatrixXcd coeff_minus; // q = -p_N
    Eigen::VectorXd log_scale_plus;
    Eigen::VectorXd log_scale_minus;
    Eigen::VectorXcd field_harmonics; // region-scaled b_n of A, n in [-field_band, field_band]
    int field_band = 0;
    double edge_coeff_open = 0.0; // max |B_{+-2 n_max}| over open channels

    bool open(int n) const { return p[grid.row(n)].is_open(); }

    complexd scaled_b(int n) const {
        if (std::abs(n) > field_band) return {0.0, 0.0};
        return field_harmonics(n + field_band);
    }

    // True coefficient B_K(sigma p_N); mostly for tests and diagnostics.
    complexd coeff(int sigma, int k, int n) const {
        if (std::abs(k) > k_max) return {0.0, 0.0};
        const int col = grid.row(n);
        if (sigma > 0) return coeff_plus(k + k_max, col) * std::exp(log_scale_plus(col));
        return coeff_minus(k + k_max, col) * std::exp(log_scale_minus(col));
    }
};

namespace detail {

// DFT of exp(i phi_j) pre-scaled so the largest sample has unit modulus;
// returns coefficients for K in [-k_max, k_max] plus the log of the factor
// taken out.
inline void normalized_sideband_coeffs(const Eigen::VectorXcd& phi, int k_max,
                                       Eigen::FFT<double>& fft, Eigen::VectorXcd& col,
                                       double& log_scale) {
    const int n = static_cast<int>(phi.size());
    double shift = 0.0;
    for (int j = 0; j < n; ++j) shift = std::max(shift, -phi(j).imag());
    Eigen::VectorXcd f(n);
    for (int j = 0; j < n; ++j)
        f(j) = std::exp(complexd(-phi(j).imag() - shift, phi(j).real()));
    Eigen::VectorXcd f_hat(n);
    fft.fwd(f_hat, f);
    col.resize(2 * k_max + 1);
    double peak = 0.0;
    for (int k = -k_max; k <= k_max; ++k) {
        const complexd c = f_hat(harmonic_bin(k, n)) / double(n);
        col(k + k_max) = c;
        peak = std::max(peak, std::abs(c));
    }
    peak = std::max(peak, 1e-300);
    col /= peak;
    log_scale = shift + std::log(peak);
}

} // namespace detail

// Builds the basis for one region on the given grid. k_max must cover the
// widest coefficient shift used downstream (2*n_max plus the field band) and
// the table must resolve it.
inline LayerBasis build_layer_basis(const ChannelGrid& grid, const Region& region,
                                    const VectorPotentialTable& tab, int k_max) {
    grid.validate();
    if (k_max < 2 * grid.n_max)
        throw internal_error("layer basis: coefficient band narrower than the sideband window");
    if (tab.n_samples < 2 * (k_max + 1))
        throw internal_error("layer basis: " + std::to_string(tab.n_samples) +
                             " time samples cannot resolve coefficient band " +
                             std::to_string(k_max));

    LayerBasis b;
    b.region = region;
    b.grid = grid;
    b.k_max = k_max;
    const double s = region.field_scale;
    b.ponderomotive = s * s * tab.mean_sq / (2.0 * region.mass);
    b.p = momenta(grid, region.mass, region.potential + b.ponderomotive);

    b.field_band = tab.band;
    b.field_harmonics = s * tab.harmonics;

    const int g = grid.size();
    b.coeff_plus.resize(2 * k_max + 1, g);
    b.coeff_minus.resize(2 * k_max + 1, g);
    b.log_scale_plus.resize(g);
    b.log_scale_minus.resize(g);

    Eigen::FFT<double> fft;
    Eigen::VectorXcd col;
    for (int col_i = 0; col_i < g; ++col_i) {
        const complexd q = b.p[col_i].p;
        for (int sigma : {+1, -1}) {
            const Eigen::VectorXcd phi = phase_integral(tab, s, region.mass, double(sigma) * q);
            double ls = 0.0;
            detail::normalized_sideband_coeffs(phi, k_max, fft, col, ls);
            if (sigma > 0) {
                b.coeff_plus.col(col_i) = col;
                b.log_scale_plus(col_i) = ls;
            } else {
                b.coeff_minus.col(col_i) = col;
                b.log_scale_minus(col_i) = ls;
            }
        }
    }

    // Truncation indicator: weight still sitting at the edge of the sideband
    // window for flux-carrying channels.
    double edge = 0.0;
    const int ke = 2 * grid.n_max;
    for (int col_i = 0; col_i < g; ++col_i) {
        if (!b.p[col_i].is_open()) continue;
        for (int ks : {+ke, -ke}) {
            edge = std::max(edge, std::abs(b.coeff_plus(ks + k_max, col_i)) *
                                      std::exp(b.log_scale_plus(col_i)));
            edge = std::max(edge, std::abs(b.coeff_minus(ks + k_max, col_i)) *
                                      std::exp(b.log_scale_minus(col_i)));
        }
    }
    b.edge_coeff_open = edge;
    return b;
}

} // namespace floq
