#pragma once

#include <optional>
#include <vector>

#include "ptycho/forward.hpp"

namespace ptycho {

enum class Orientation { horizontal, vertical };

// One three-bar line set. Vertical sets have bars running along y (pattern
// varies along x); horizontal sets are the transpose.
struct LineSet {
    double lines_per_mm = 0.0;
    Orientation orientation = Orientation::vertical;
    double center_x = 0.0;   // meters, object plane
    double center_y = 0.0;   // meters
    double bar_length = 0.0; // meters

    double pitch() const { return 1e-3 / lines_per_mm; } // meters
};

// Resolution-target description: bar sets on a uniform background, optional
// smooth phase profile multiplied on top.
struct TargetSpec {
    std::vector<LineSet> line_sets;
    double line_transmittance = 0.0;
    double background_transmittance = 1.0;
    std::optional<RealField> phase_map; // radians, object grid
};

// Renders the target by pixel-center sampling: three bars per set at pitch
// 1/lines_per_mm, bar width half the pitch.
ComplexField make_resolution_target(const GridSpec& grid, const TargetSpec& spec);

// Circular top-hat of the given diameter with a raised-cosine edge of width
// edge_smoothing (centered on the nominal radius), unit peak, zero phase.
ComplexField make_probe(const GridSpec& grid, double diameter, double edge_smoothing);

struct NoiseSpec {
    double photon_scale = 0.0;  // expected photons at unit intensity; 0 = noiseless
    int quantization_bits = 0;  // 0 = no quantization
    std::uint64_t rng_seed = 0;
};

// Predicts every frame, then applies per-pixel Poisson sampling at
// photon_scale * frame value (frames already carry the exposure weight) and
// optional uniform quantization. Frames keep camera scale: the expectation of
// each noisy frame equals the noiseless prediction. Per-frame seeded
// substreams make generation order-independent and deterministic.
Dataset simulate_dataset(const SceneModel& scene, const NoiseSpec& noise);

// Physical rectangle in the object plane (meters, center-origin coordinates).
struct PlaneRect {
    double center_x = 0.0;
    double center_y = 0.0;
    double width = 0.0;
    double height = 0.0;
};

// Standard layout used by the CLI and tests: vertical sets in one column,
// horizontal sets in another, sized from the coarsest pitch, plus a clear
// (background-only) rectangle between the columns for transmittance
// normalization.
struct TargetLayout {
    std::vector<LineSet> sets;
    PlaneRect clear_region;
};

TargetLayout default_target_layout(const std::vector<double>& lines_per_mm);

} // namespace ptycho
