// Periodic driving-field waveforms.
//
// A waveform describes the laser electric field E(t) with unit spatial
// profile; per-region spatial scaling is applied later when vector-potential
// tables are built. Every kind is strictly periodic in the Floquet base
// period 2*pi/base_omega() and has exactly zero mean over that period (for
// the pulse train a constant compensation offset is subtracted to enforce
// this, which keeps the vector potential bounded and periodic in every
// region).
//
// Shapes:
//   monochromatic: E0 * sin(w t + phi)
//   bichromatic:   E0 * (sin(w t) - sin(2 w t + phi)), base period 2*pi/w
//   pulse_train:   E0 * f(t) * sin(w t + phi) - dc, repeated with period T_p,
//                  f(t) = exp(-((t - T_p/2)/sigma_p)^2) * sin^2(pi t / T_p),
//                  where T_p must hold an integer number of carrier cycles.
//
// The dimensionless strength parameter xi relates to the amplitude through
// E0 = 2 * xi * omega^(3/2) (atomic units, electron rest mass).
#pragma once

#include <cmath>
#include <string>

#include "floq/errors.hpp"

namespace floq {

enum class WaveformKind { off, monochromatic, bichromatic, pulse_train };

inline const char* to_string(WaveformKind k) {
    switch (k) {
        case WaveformKind::off: return "off";
        case WaveformKind::monochromatic: return "monochromatic";
        case WaveformKind::bichromatic: return "bichromatic";
        case WaveformKind::pulse_train: return "pulse_train";
    }
    return "?";
}

inline double amplitude_from_xi(double xi, double omega) {
    return 2.0 * xi * std::pow(omega, 1.5);
}

inline double xi_from_amplitude(double e0, double omega) {
    return e0 / (2.0 * std::pow(omega, 1.5));
}

struct Waveform {
    WaveformKind kind = WaveformKind::off;
    double omega = 1.0;          // carrier angular frequency (a.u.)
    double amplitude = 0.0;      // peak electric field E0 (a.u.)
    double phase = 0.0;          // carrier phase offset (rad)
    double pulse_duration = 0.0; // T_p, pulse train only
    double pulse_width = 0.0;    // sigma_p, pulse train only
    double dc_offset = 0.0;      // compensation offset, pulse train only

    // Frequency whose period the whole field repeats with. The sideband
    // ladder of the solver is spaced by this frequency, not the carrier.
    double base_omega() const {
        if (kind == WaveformKind::pulse_train) return 2.0 * M_PI / pulse_duration;
        return omega;
    }

    double period() const { return 2.0 * M_PI / base_omega(); }

    // Electric field at time t for unit spatial profile.
    double electric_field(double t) const {
        switch (kind) {
            case WaveformKind::off:
                return 0.0;
            case WaveformKind::monochromatic:
                return amplitude * std::sin(omega * t + phase);
            case WaveformKind::bichromatic:
                return amplitude * (std::sin(omega * t) - std::sin(2.0 * omega * t + phase));
            case WaveformKind::pulse_train: {
                double tl = std::fmod(t, pulse_duration);
                if (tl < 0.0) tl += pulse_duration;
                const double g = (tl - 0.5 * pulse_duration) / pulse_width;
                const double s = std::sin(M_PI * tl / pulse_duration);
                const double envelope = std::exp(-g * g) * s * s;
                return amplitude * envelope * std::sin(omega * tl + phase) - dc_offset;
            }
        }
        return 0.0;
    }

    static Waveform off() { return Waveform{}; }

    static Waveform monochromatic(double omega, double e0, double phase = 0.0) {
        require_basics(omega, e0);
        Waveform w;
        w.kind = WaveformKind::monochromatic;
        w.omega = omega;
        w.amplitude = e0;
        w.phase = phase;
        return w;
    }

    static Waveform bichromatic(double omega, double e0, double phase = 0.0) {
        require_basics(omega, e0);
        Waveform w;
        w.kind = WaveformKind::bichromatic;
        w.omega = omega;
        w.amplitude = e0;
        w.phase = phase;
        return w;
    }

    // The pulse train repeats with period t_p; sigma_p controls the Gaussian
    // envelope width. t_p must be an integer number of carrier periods so
    // that the carrier itself is t_p-periodic.
    static Waveform pulse_train(double omega, double e0, double phase, double t_p,
                                double sigma_p) {
        require_basics(omega, e0);
        if (t_p <= 0.0 || sigma_p <= 0.0)
            throw config_error("pulse_train: pulse duration and width must be positive");
        const double cycles = t_p * omega / (2.0 * M_PI);
        if (std::abs(cycles - std::round(cycles)) > 1e-9 * cycles)
            throw config_error(
                "pulse_train: period must hold an integer number of carrier cycles, got " +
                std::to_string(cycles));
        Waveform w;
        w.kind = WaveformKind::pulse_train;
        w.omega = omega;
        w.amplitude = e0;
        w.phase = phase;
        w.pulse_duration = t_p;
        w.pulse_width = sigma_p;
        // Pin the period average of E to zero by a constant offset. The
        // integrand is smooth and periodic, so the uniform-sample mean
        // converges spectrally.
        const int n = 1 << 15;
        double acc = 0.0;
        for (int j = 0; j < n; ++j) {
            const double t = t_p * j / n;
            const double g = (t - 0.5 * t_p) / sigma_p;
            const double s = std::sin(M_PI * t / t_p);
            acc += e0 * std::exp(-g * g) * s * s * std::sin(omega * t + phase);
        }
        w.dc_offset = acc / n;
        return w;
    }

  private:
    static void require_basics(double omega, double e0) {
        if (!(omega > 0.0)) throw config_error("waveform: carrier frequency must be positive");
        if (!(e0 >= 0.0)) throw config_error("waveform: amplitude must be non-negative");
    }
};

} // namespace floq
