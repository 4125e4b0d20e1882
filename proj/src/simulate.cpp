#include "ptycho/simulate.hpp"

#include <algorithm>
#include <cmath>

#include "ptycho/rng.hpp"

namespace ptycho {

ComplexField make_resolution_target(const GridSpec& grid, const TargetSpec& spec) {
    grid.validate();
    if (spec.phase_map && !(spec.phase_map->grid() == grid)) {
        throw ValidationError("target: phase map grid does not match the object grid");
    }
    for (const LineSet& set : spec.line_sets) {
        if (!(set.lines_per_mm > 0.0)) throw ValidationError("target: lines_per_mm must be > 0");
        if (!(set.bar_length > 0.0)) throw ValidationError("target: bar length must be > 0");
        const double perp_pitch =
            set.orientation == Orientation::vertical ? grid.pitch_x : grid.pitch_y;
        if (set.pitch() < 2.0 * perp_pitch) {
            throw ValidationError("target: " + std::to_string(set.lines_per_mm) +
                                  " lines/mm is below two pixels per period");
        }
    }

    ComplexField field(grid, complexd(spec.background_transmittance, 0.0));
    for (const LineSet& set : spec.line_sets) {
        const double p = set.pitch();
        for (int y = 0; y < grid.ny; ++y) {
            const double cy = grid.coord_y(y);
            for (int x = 0; x < grid.nx; ++x) {
                const double cx = grid.coord_x(x);
                const double perp = set.orientation == Orientation::vertical ? cx : cy;
                const double par = set.orientation == Orientation::vertical ? cy : cx;
                const double perp_center =
                    set.orientation == Orientation::vertical ? set.center_x : set.center_y;
                const double par_center =
                    set.orientation == Orientation::vertical ? set.center_y : set.center_x;
                if (std::abs(par - par_center) > 0.5 * set.bar_length) continue;
                bool in_bar = false;
                for (int k = -1; k <= 1 && !in_bar; ++k) {
                    in_bar = std::abs(perp - perp_center - k * p) <= 0.25 * p;
                }
                if (in_bar) field.at(y, x) = complexd(spec.line_transmittance, 0.0);
            }
        }
    }
    if (spec.phase_map) {
        for (int y = 0; y < grid.ny; ++y) {
            for (int x = 0; x < grid.nx; ++x) {
                field.at(y, x) *= std::polar(1.0, spec.phase_map->at(y, x));
            }
        }
    }
    return field;
}

ComplexField make_probe(const GridSpec& grid, double diameter, double edge_smoothing) {
    grid.validate();
    if (!(diameter > 0.0)) throw ValidationError("probe: diameter must be > 0");
    if (edge_smoothing < 0.0) throw ValidationError("probe: edge smoothing must be >= 0");
    const double radius = 0.5 * diameter;
    if (radius + 0.5 * edge_smoothing > 0.5 * std::min(grid.extent_x(), grid.extent_y())) {
        throw ValidationError("probe: diameter does not fit in the grid");
    }
    ComplexField probe(grid);
    for (int y = 0; y < grid.ny; ++y) {
        const double cy = grid.coord_y(y);
        for (int x = 0; x < grid.nx; ++x) {
            const double cx = grid.coord_x(x);
            const double rho = std::hypot(cx, cy);
            double amplitude = 0.0;
            if (edge_smoothing == 0.0) {
                amplitude = rho <= radius ? 1.0 : 0.0;
            } else if (rho <= radius - 0.5 * edge_smoothing) {
                amplitude = 1.0;
            } else if (rho < radius + 0.5 * edge_smoothing) {
                amplitude =
                    0.5 * (1.0 + std::cos(M_PI * (rho - radius + 0.5 * edge_smoothing) /
                                          edge_smoothing));
            }
            probe.at(y, x) = complexd(amplitude, 0.0);
        }
    }
    return probe;
}

Dataset simulate_dataset(const SceneModel& scene, const NoiseSpec& noise) {
    if (noise.photon_scale < 0.0) throw ValidationError("noise: photon_scale must be >= 0");
    if (noise.quantization_bits < 0 || noise.quantization_bits > 30) {
        throw ValidationError("noise: quantization_bits out of range");
    }
    Dataset ds = predict_dataset(scene);
    if (noise.photon_scale == 0.0) return ds;

    for (std::size_t fi = 0; fi < ds.frames.size(); ++fi) {
        rng::Stream stream(rng::mix(noise.rng_seed, fi));
        for (double& v : ds.frames[fi].values()) {
            v = static_cast<double>(stream.poisson(noise.photon_scale * v));
        }
    }
    if (noise.quantization_bits > 0) {
        double max_count = 0.0;
        for (const RealField& f : ds.frames) {
            for (double v : f.values()) max_count = std::max(max_count, v);
        }
        if (max_count > 0.0) {
            const double levels = static_cast<double>((1u << noise.quantization_bits) - 1u);
            const double step = max_count / levels;
            for (RealField& f : ds.frames) {
                for (double& v : f.values()) v = std::round(v / step) * step;
            }
        }
    }
    for (RealField& f : ds.frames) {
        for (double& v : f.values()) v /= noise.photon_scale;
    }
    return ds;
}

TargetLayout default_target_layout(const std::vector<double>& lines_per_mm) {
    if (lines_per_mm.empty()) return {};
    double coarsest = lines_per_mm.front();
    for (double lpm : lines_per_mm) {
        if (!(lpm > 0.0)) throw ValidationError("target layout: lines_per_mm must be > 0");
        coarsest = std::min(coarsest, lpm);
    }
    const double p_max = 1e-3 / coarsest;
    const double bar_length = 3.2 * p_max;
    const double row_pitch = 4.0 * p_max;
    const double col_offset = 2.5 * p_max;
    const int n = static_cast<int>(lines_per_mm.size());

    TargetLayout layout;
    for (int i = 0; i < n; ++i) {
        const double y = (i - 0.5 * (n - 1)) * row_pitch;
        layout.sets.push_back(
            {lines_per_mm[i], Orientation::vertical, -col_offset, y, bar_length});
        layout.sets.push_back(
            {lines_per_mm[i], Orientation::horizontal, col_offset, y, bar_length});
    }
    layout.clear_region = {-0.15 * p_max, 0.0, 1.6 * p_max,
                           (n - 1) * row_pitch + bar_length};
    return layout;
}

} // namespace ptycho
