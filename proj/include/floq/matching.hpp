// Interface matching in the sideband basis.
//
// Continuity of the wavefunction and of the mass-weighted kinetic derivative
// (1/m)(-i d/dx - e A) psi is imposed per retained harmonic at each
// interface. With bases anchored at x = 0 (interface offsets are handled by
// separate propagator factors) the matching matrix of a region is
//
//       [  B+   B-  ]           B(+-)_{M,N}  = B_{M-N}(+-p_N)
//       [  B+'  B-' ]           B(+-)'_{M,N} = (+-p_N/m) B_{M-N}(+-p_N)
//                                  - (e/m) sum_n b_n B_{M-N-n}(+-p_N)
//
// and the transfer step across an interface solves
// B_right * C_right = B_left * C_left. Columns carry the normalization of
// their basis (see layer_basis.hpp); because an interface solve conjugates
// the plain transfer matrix by those diagonal scales, the scaled transfer is
// what propagates through the cascade and the scales cancel everywhere except
// at the leads, where amplitude extraction divides them back out.
#pragma once

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <list>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "floq/layer_basis.hpp"

namespace floq {

// Transfer matrix in +/- block form: (C+_right, C-_right) = T (C+_left, C-_left).
struct TransferMatrix {
    Eigen::MatrixXcd pp, pm, mp, mm;

    int size() const { return static_cast<int>(pp.rows()); }

    Eigen::MatrixXcd full() const {
        const int g = size();
        Eigen::MatrixXcd f(2 * g, 2 * g);
        f.topLeftCorner(g, g) = pp;
        f.topRightCorner(g, g) = pm;
        f.bottomLeftCorner(g, g) = mp;
        f.bottomRightCorner(g, g) = mm;
        return f;
    }

    static TransferMatrix from_full(const Eigen::MatrixXcd& f) {
        const int g = static_cast<int>(f.rows()) / 2;
        return TransferMatrix{f.topLeftCorner(g, g), f.topRightCorner(g, g),
                              f.bottomLeftCorner(g, g), f.bottomRightCorner(g, g)};
    }
};

// Assembled matching matrix of one region (zero-anchored, columns carrying
// the basis normalization).
inline Eigen::MatrixXcd matching_matrix(const LayerBasis& b) {
    const int g = b.grid.size();
    const int km = b.k_max;
    Eigen::MatrixXcd m = Eigen::MatrixXcd::Zero(2 * g, 2 * g);
    for (int col = 0; col < g; ++col) {
        const complexd pn = b.p[col].p;
        for (int sigma : {+1, -1}) {
            const Eigen::MatrixXcd& table = (sigma > 0) ? b.coeff_plus : b.coeff_minus;
            const int col_out = (sigma > 0) ? col : g + col;
            const complexd vel = double(sigma) * pn / b.region.mass;
            for (int row = 0; row < g; ++row) {
                const int k = row - col; // = M - N
                const complexd c = table(k + km, col);
                complexd deriv = vel * c;
                for (int n = -b.field_band; n <= b.field_band; ++n) {
                    if (n == 0) continue; // A has zero mean: b_0 = 0
                    const int ks = k - n;
                    if (std::abs(ks) > km) continue;
                    deriv -= (electron_charge / b.region.mass) * b.scaled_b(n) * table(ks + km, col);
                }
                m(row, col_out) = c;
                m(g + row, col_out) = deriv;
            }
        }
    }
    return m;
}

// One region, ready for cascading: basis plus factored matching matrix.
struct PreparedLayer {
    LayerBasis basis;
    Eigen::MatrixXcd matching;
    Eigen::PartialPivLU<Eigen::MatrixXcd> lu;
    double rcond = 0.0;
};

inline std::shared_ptr<const PreparedLayer> prepare_layer(const ChannelGrid& grid,
                                                          const Region& region,
                                                          const VectorPotentialTable& tab,
                                                          int k_max) {
    auto layer = std::make_shared<PreparedLayer>();
    layer->basis = build_layer_basis(grid, region, tab, k_max);
    layer->matching = matching_matrix(layer->basis);
    layer->lu.compute(layer->matching);
    layer->rcond = layer->lu.rcond();
    return layer;
}

// Transfer step across one interface: solves B_right X = B_left with the
// right matching factorization (computed once per region and reused).
inline TransferMatrix interface_transfer(const PreparedLayer& left, const PreparedLayer& right) {
    return TransferMatrix::from_full(right.lu.solve(left.matching));
}

// Free flight across a slab of width delta: diagonal factors exp(i p_N delta)
// per direction. Only the decaying combination is ever materialized, so
// entries never exceed unit modulus; deep evanescent channels underflow to
// zero gracefully.
struct Propagator {
    Eigen::VectorXcd factors;

    int size() const { return static_cast<int>(factors.size()); }
};

inline Propagator propagator(const LayerBasis& b, double delta) {
    if (delta < 0.0)
        throw config_error("propagator: negative slab width (regions must be ordered)");
    Propagator pr;
    pr.factors.resize(b.grid.size());
    for (int i = 0; i < b.grid.size(); ++i)
        pr.factors(i) = std::exp(complexd(0.0, 1.0) * b.p[i].p * delta);
    return pr;
}

// Bounded cache of prepared layers, keyed by the quantized region parameters.
// One instance serves a single solve point (the key deliberately excludes the
// grid: energy, frequency and cutoff are fixed per factory). Thread-safe and
// idempotent under concurrent insertion of identical keys.
class BasisFactory {
  public:
    struct Options {
        int n_samples = 0;      // 0: choose from grid and waveform band
        int cache_capacity = 64;
    };

    BasisFactory(const ChannelGrid& grid, const Waveform& wf, const Options& opt = {})
        : grid_(grid), capacity_(opt.cache_capacity) {
        grid_.validate();
        const int band = waveform_band(wf);
        k_max_ = 2 * grid_.n_max + band;
        int n = opt.n_samples;
        if (n == 0) {
            int need = std::max(512, 16 * grid_.size());
            need = std::max(need, 4 * (k_max_ + 1));
            n = 256;
            while (n < need) n *= 2;
        }
        if (n < 2 * (k_max_ + 1))
            throw config_error("time sampling too coarse: " + std::to_string(n) +
                               " samples for coefficient band " + std::to_string(k_max_));
        table_ = vector_potential_samples(wf, n);
    }

    const ChannelGrid& grid() const { return grid_; }
    const VectorPotentialTable& table() const { return table_; }
    int k_max() const { return k_max_; }
    int n_samples() const { return table_.n_samples; }

    std::shared_ptr<const PreparedLayer> prepared(const Region& region) {
        const Key key = quantize(region);
        {
            std::lock_guard<std::mutex> lock(mutex_);
            auto it = index_.find(key);
            if (it != index_.end()) {
                order_.splice(order_.begin(), order_, it->second);
                return it->second->second;
            }
        }
        auto layer = prepare_layer(grid_, region, table_, k_max_);
        std::lock_guard<std::mutex> lock(mutex_);
        auto it = index_.find(key);
        if (it != index_.end()) return it->second->second; // lost the race; keep the first
        order_.emplace_front(key, layer);
        index_[key] = order_.begin();
        while (static_cast<int>(order_.size()) > capacity_) {
            index_.erase(order_.back().first);
            order_.pop_back();
        }
        return layer;
    }

  private:
    struct Key {
        long long m, v, s;
        bool operator==(const Key&) const = default;
    };
    struct KeyHash {
        size_t operator()(const Key& k) const {
            size_t h = std::hash<long long>{}(k.m);
            h ^= std::hash<long long>{}(k.v) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            h ^= std::hash<long long>{}(k.s) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
            return h;
        }
    };

    static Key quantize(const Region& r) {
        // 1e-14 absolute grid: regions closer than that share a basis.
        return Key{llround_safe(r.mass), llround_safe(r.potential), llround_safe(r.field_scale)};
    }
    static long long llround_safe(double x) { return static_cast<long long>(std::llround(x * 1e14)); }

    ChannelGrid grid_;
    int k_max_ = 0;
    int capacity_ = 64;
    VectorPotentialTable table_;
    std::mutex mutex_;
    std::list<std::pair<Key, std::shared_ptr<const PreparedLayer>>> order_;
    std::unordered_map<Key, decltype(order_)::iterator, KeyHash> index_;
};

} // namespace floq
