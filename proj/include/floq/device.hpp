// Piecewise-constant 1D heterostructure description.
//
// A device is a sequence of regions separated by sharp interfaces. The first
// and last regions are semi-infinite leads; interior regions have the widths
// implied by consecutive interface positions. Interface positions may
// coincide (a zero-width slab is legal and acts as a neutral factor), but
// must never decrease. All quantities are atomic units.
#pragma once

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "floq/errors.hpp"
#include "floq/waveform.hpp"

namespace floq {

enum class Incidence { left, right };

inline const char* to_string(Incidence i) { return i == Incidence::left ? "left" : "right"; }

struct Region {
    double mass = 1.0;        // effective mass, multiples of m_e
    double potential = 0.0;   // conduction band offset (a.u.)
    double field_scale = 1.0; // spatial multiplier on the driving field
};

struct Device {
    std::vector<Region> regions;     // leads first/last, interior between
    std::vector<double> interfaces;  // positions, size regions.size() - 1
    Waveform waveform;               // shared time profile, scaled per region
    double static_field = 0.0;       // F recorded by discretize_stark
    Incidence incidence = Incidence::left;

    int n_regions() const { return static_cast<int>(regions.size()); }
    int n_interfaces() const { return static_cast<int>(interfaces.size()); }

    const Region& lead(Incidence side) const {
        return side == Incidence::left ? regions.front() : regions.back();
    }

    double interior_width() const { return interfaces.back() - interfaces.front(); }

    void validate() const {
        if (regions.size() < 2)
            throw config_error("device: need at least two regions (the two leads)");
        if (interfaces.size() != regions.size() - 1)
            throw config_error("device: interface count must be region count minus one, got " +
                               std::to_string(interfaces.size()) + " for " +
                               std::to_string(regions.size()) + " regions");
        for (size_t i = 0; i + 1 < interfaces.size(); ++i)
            if (interfaces[i + 1] < interfaces[i])
                throw config_error("device: interface " + std::to_string(i + 1) +
                                   " lies left of interface " + std::to_string(i));
        for (size_t i = 0; i < regions.size(); ++i) {
            if (!(regions[i].mass > 0.0))
                throw config_error("device: region " + std::to_string(i) +
                                   " has non-positive mass");
            if (!(regions[i].field_scale >= 0.0))
                throw config_error("device: region " + std::to_string(i) +
                                   " has negative field scale");
            if (!std::isfinite(regions[i].potential))
                throw config_error("device: region " + std::to_string(i) +
                                   " has non-finite potential");
        }
    }

    // Spatially mirrored device over the same span, with incidence flipped.
    // The static-field record flips sign accordingly.
    Device mirrored() const {
        Device m = *this;
        std::reverse(m.regions.begin(), m.regions.end());
        const double span = interfaces.front() + interfaces.back();
        m.interfaces.assign(interfaces.rbegin(), interfaces.rend());
        for (double& x : m.interfaces) x = span - x;
        m.static_field = -static_field;
        m.incidence = (incidence == Incidence::left) ? Incidence::right : Incidence::left;
        return m;
    }

    Device translated(double dx) const {
        Device t = *this;
        for (double& x : t.interfaces) x += dx;
        return t;
    }
};

// Symmetric triple-barrier stack: lead | b | a | b | a | b | lead, anchored
// with the first interface at x = 0. Wells and leads share one mass, the
// barriers another. Field scales default to 1 everywhere.
inline Device build_triple_barrier(double well_a, double barrier_b, double v0, double m_well,
                                   double m_barrier) {
    if (!(well_a > 0.0) || !(barrier_b > 0.0))
        throw config_error("triple barrier: widths must be positive");
    if (!(m_well > 0.0) || !(m_barrier > 0.0))
        throw config_error("triple barrier: masses must be positive");
    Device d;
    const Region lead{m_well, 0.0, 1.0};
    const Region barrier{m_barrier, v0, 1.0};
    const Region well{m_well, 0.0, 1.0};
    d.regions = {lead, barrier, well, barrier, well, barrier, lead};
    d.interfaces = {0.0,
                    barrier_b,
                    barrier_b + well_a,
                    2.0 * barrier_b + well_a,
                    2.0 * barrier_b + 2.0 * well_a,
                    3.0 * barrier_b + 2.0 * well_a};
    d.validate();
    return d;
}

// Field profile where the laser is confined to the structure: leads dark,
// regions adjacent to a lead at half strength, inner regions at full
// strength.
inline void apply_interior_field_profile(Device& d) {
    const int n = d.n_regions();
    if (n < 3) throw config_error("interior field profile: device has no interior region");
    for (int i = 0; i < n; ++i) {
        if (i == 0 || i == n - 1)
            d.regions[i].field_scale = 0.0;
        else if (i == 1 || i == n - 2)
            d.regions[i].field_scale = 0.5;
        else
            d.regions[i].field_scale = 1.0;
    }
}

// Staircase discretization of V(x) + F x over the interior span. n_points
// equally spaced interface positions produce n_points - 1 slabs, each
// sampling the tilted potential at its midpoint and inheriting mass and
// field scale from the original region containing that midpoint. Lead
// potentials are pinned at the constant boundary values V(x0) + F x0 and
// V(xL) + F xL, so with the builder's x0 = 0 anchor the incident lead stays
// at its own band offset and the full drop F * width accrues across the
// structure.
inline Device discretize_stark(const Device& dev, double f, int n_points) {
    dev.validate();
    if (dev.n_interfaces() < 2)
        throw config_error("discretize_stark: device has no interior to discretize");
    if (n_points < dev.n_interfaces())
        throw config_error("discretize_stark: " + std::to_string(n_points) +
                           " points cannot resolve " + std::to_string(dev.n_interfaces()) +
                           " original interfaces");
    const double x0 = dev.interfaces.front();
    const double xe = dev.interfaces.back();
    const double h = (xe - x0) / (n_points - 1);

    auto region_at = [&](double x) -> const Region& {
        // Index of the region containing x: count interfaces at or left of x.
        const auto it = std::upper_bound(dev.interfaces.begin(), dev.interfaces.end(), x);
        return dev.regions[it - dev.interfaces.begin()];
    };

    Device out;
    out.waveform = dev.waveform;
    out.static_field = f;
    out.incidence = dev.incidence;
    out.interfaces.resize(n_points);
    for (int k = 0; k < n_points; ++k) out.interfaces[k] = x0 + h * k;

    out.regions.reserve(n_points + 1);
    Region left = dev.regions.front();
    left.potential += f * x0;
    out.regions.push_back(left);
    for (int k = 0; k + 1 < n_points; ++k) {
        const double xc = x0 + h * (k + 0.5);
        Region slab = region_at(xc);
        slab.potential += f * xc;
        out.regions.push_back(slab);
    }
    Region right = dev.regions.back();
    right.potential += f * xe;
    out.regions.push_back(right);
    out.validate();
    return out;
}

} // namespace floq
