// Sideband channel grid and per-channel momenta.
//
// A solve works at fixed quasienergy E on the ladder E + N*w for
// N in [-n_max, n_max], w the Floquet base frequency. In a region with mass
// m, potential V and ponderomotive shift U the channel momentum satisfies
// p_N^2 = 2 m (E + N w - V - U), taken positive real for open channels and
// positive imaginary (decaying) for closed ones. An exactly vanishing
// argument is classified as a threshold channel: momentum zero, treated as
// closed wherever flux is summed.
#pragma once

#include <complex>
#include <string>
#include <vector>

#include "floq/errors.hpp"

namespace floq {

using complexd = std::complex<double>;

struct ChannelGrid {
    double energy = 0.0; // quasienergy (a.u.)
    double omega = 1.0;  // Floquet base frequency (a.u.)
    int n_max = 0;       // sideband cutoff

    int size() const { return 2 * n_max + 1; }
    int row(int n) const { return n + n_max; }
    int channel(int r) const { return r - n_max; }

    void validate() const {
        if (n_max < 0) throw config_error("channel grid: n_max must be non-negative");
        if (!(omega > 0.0)) throw config_error("channel grid: base frequency must be positive");
    }
};

enum class ChannelKind { open, closed, threshold };

struct Momentum {
    complexd p{0.0, 0.0};
    ChannelKind kind = ChannelKind::closed;

    bool is_open() const { return kind == ChannelKind::open; }
};

// Channel momenta for one region; v_total is the full floor V + U.
inline std::vector<Momentum> momenta(const ChannelGrid& grid, double mass, double v_total) {
    std::vector<Momentum> out(grid.size());
    for (int n = -grid.n_max; n <= grid.n_max; ++n) {
        const double arg = 2.0 * mass * (grid.energy + n * grid.omega - v_total);
        Momentum& m = out[grid.row(n)];
        if (arg > 0.0) {
            m.p = complexd(std::sqrt(arg), 0.0);
            m.kind = ChannelKind::open;
        } else if (arg == 0.0) {
            m.p = complexd(0.0, 0.0);
            m.kind = ChannelKind::threshold;
        } else {
            m.p = complexd(0.0, std::sqrt(-arg));
            m.kind = ChannelKind::closed;
        }
    }
    return out;
}

} // namespace floq
