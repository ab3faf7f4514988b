// Sampled vector potential of a periodic driving field, with the exact
// spectral antiderivatives needed by the sideband phase integrals.
//
// Conventions: Fourier series are written f(t) = sum_n c_n exp(-i n w t) over
// one base period T = 2*pi/w, sampled at t_j = j T / n_samples. With the FFT
// convention F_k = sum_j f_j exp(-2*pi*i*j*k/n), the series coefficient c_n
// lives in bin (n_samples - n) mod n_samples divided by n_samples.
//
// The vector potential is A(t) = -int_0^t E dt' + C in the gauge where A has
// zero period average, so A is periodic whenever E has zero period average
// (enforced; a violation means the gauge does not exist and is an error).
#pragma once

#include <Eigen/Dense>
#include <unsupported/Eigen/FFT>

#include <cmath>
#include <complex>
#include <string>

#include "floq/errors.hpp"
#include "floq/waveform.hpp"

namespace floq {

using complexd = std::complex<double>;

namespace detail {

inline bool is_pow2(int n) { return n > 0 && (n & (n - 1)) == 0; }

// Signed harmonic index carried by FFT bin k (Nyquist bin treated as zero;
// callers keep bandwidths well below it).
inline int bin_harmonic(int k, int n) {
    if (k == 0) return 0;
    return (k <= n / 2) ? -k : n - k;
}

inline int harmonic_bin(int h, int n) { return ((n - h) % n + n) % n; }

} // namespace detail

struct VectorPotentialTable {
    int n_samples = 0;
    double base_omega = 0.0;
    Eigen::VectorXd a;       // A(t_j), unit spatial scale
    Eigen::VectorXd int_a;   // int_0^t A dt'
    Eigen::VectorXd int_a2;  // int_0^t (A^2 - <A^2>) dt'
    double mean_sq = 0.0;    // <A^2> over one period
    Eigen::VectorXcd harmonics; // b_n for n in [-band, band], length 2*band+1
    int band = 0;            // largest retained |n|; b_n = 0 outside

    double period() const { return 2.0 * M_PI / base_omega; }
    double t_sample(int j) const { return period() * j / n_samples; }

    // A-series coefficient b_n; zero outside the retained band.
    complexd b(int n) const {
        if (std::abs(n) > band) return {0.0, 0.0};
        return harmonics(n + band);
    }
};

// Builds the table for the given waveform at unit spatial scale. Per-region
// spatial scaling is linear in A and is applied downstream, so one table
// serves every region of a device.
inline VectorPotentialTable vector_potential_samples(const Waveform& wf, int n_samples) {
    if (!detail::is_pow2(n_samples) || n_samples < 256)
        throw config_error("vector_potential_samples: sample count must be a power of two >= 256, got " +
                           std::to_string(n_samples));

    VectorPotentialTable tab;
    tab.n_samples = n_samples;
    tab.base_omega = wf.base_omega();
    tab.a = Eigen::VectorXd::Zero(n_samples);
    tab.int_a = Eigen::VectorXd::Zero(n_samples);
    tab.int_a2 = Eigen::VectorXd::Zero(n_samples);
    tab.harmonics = Eigen::VectorXcd::Zero(1);
    if (wf.kind == WaveformKind::off || wf.amplitude == 0.0) return tab;

    const int n = n_samples;
    const double w = tab.base_omega;
    const double period = tab.period();

    Eigen::VectorXcd e_samp(n);
    double e_peak = 0.0;
    for (int j = 0; j < n; ++j) {
        const double ej = wf.electric_field(period * j / n);
        e_samp(j) = ej;
        e_peak = std::max(e_peak, std::abs(ej));
    }

    Eigen::FFT<double> fft;
    Eigen::VectorXcd e_hat(n);
    fft.fwd(e_hat, e_samp);

    // Gauge requirement: zero period average of E, otherwise A is secular.
    const double e_mean = std::abs(e_hat(0)) / n;
    if (e_mean > 1e-10 * std::max(e_peak, 1e-300))
        throw internal_error("gauge error: driving field has nonzero period average (" +
                             std::to_string(e_mean) + "); vector potential would not be periodic");

    // b_n = e_n / (i n w); zero mean fixes the gauge constant. Bin layout is
    // kept identical to the E spectrum so one inverse FFT reconstructs A.
    Eigen::VectorXcd b_hat = Eigen::VectorXcd::Zero(n);
    Eigen::VectorXcd ia_hat = Eigen::VectorXcd::Zero(n);
    for (int k = 1; k < n; ++k) {
        if (k == n / 2) continue;
        const int h = detail::bin_harmonic(k, n);
        const complexd denom(0.0, h * w);
        b_hat(k) = e_hat(k) / denom;
        ia_hat(k) = b_hat(k) / (-denom);
    }

    Eigen::VectorXcd work(n);
    fft.inv(work, b_hat);
    tab.a = work.real();
    fft.inv(work, ia_hat);
    tab.int_a = (work.real().array() - work(0).real()).matrix();

    // Spectral antiderivative of the centered A^2: dropping the k = 0 bin of
    // the A^2 spectrum subtracts the exact sample mean.
    Eigen::VectorXcd a2 = tab.a.array().square().matrix().cast<complexd>();
    Eigen::VectorXcd a2_hat(n);
    fft.fwd(a2_hat, a2);
    tab.mean_sq = a2_hat(0).real() / n;
    Eigen::VectorXcd ia2_hat = Eigen::VectorXcd::Zero(n);
    for (int k = 1; k < n; ++k) {
        if (k == n / 2) continue;
        const int h = detail::bin_harmonic(k, n);
        ia2_hat(k) = a2_hat(k) / complexd(0.0, -h * w);
    }
    fft.inv(work, ia2_hat);
    tab.int_a2 = (work.real().array() - work(0).real()).matrix();

    // Retained harmonic band of A: everything above a relative floor.
    double b_peak = 0.0;
    for (int k = 1; k < n; ++k) b_peak = std::max(b_peak, std::abs(b_hat(k)));
    int band = 0;
    for (int h = 1; h < n / 2; ++h) {
        const double mag = std::max(std::abs(b_hat(detail::harmonic_bin(h, n))),
                                    std::abs(b_hat(detail::harmonic_bin(-h, n))));
        if (mag > 1e-15 * b_peak) band = h;
    }
    tab.band = band;
    tab.harmonics = Eigen::VectorXcd::Zero(2 * band + 1);
    for (int h = -band; h <= band; ++h)
        tab.harmonics(h + band) = b_hat(detail::harmonic_bin(h, n)) / double(n);

    return tab;
}

// Largest significant harmonic index of A for this waveform shape, used to
// budget coefficient bands and sample counts before building full tables.
inline int waveform_band(const Waveform& wf) {
    switch (wf.kind) {
        case WaveformKind::off: return 0;
        case WaveformKind::monochromatic: return 1;
        case WaveformKind::bichromatic: return 2;
        case WaveformKind::pulse_train: {
            Waveform probe = wf;
            if (probe.amplitude == 0.0) probe.amplitude = 1.0;
            return vector_potential_samples(probe, 8192).band;
        }
    }
    return 0;
}

} // namespace floq
