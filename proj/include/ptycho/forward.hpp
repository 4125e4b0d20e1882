#pragma once

#include <string>
#include <vector>

#include "ptycho/grid.hpp"
#include "ptycho/propagation.hpp"
#include "ptycho/scan.hpp"

namespace ptycho {

// One rectangular detector window: pixel size, lateral offset of the window
// center from the optical axis, propagation distance, and relative exposure.
struct SensorSpec {
    std::string name;
    int width = 0;   // pixels
    int height = 0;  // pixels
    double x0 = 0.0; // meters
    double y0 = 0.0; // meters
    double z = 0.0;  // meters
    double exposure_weight = 1.0;

    bool on_axis() const { return x0 == 0.0 && y0 == 0.0; }
    void validate() const;
};

// Object + probe + scan positions + sensors. Scan positions are snapped to
// integer object pixels at construction; every probe-sized crop must stay
// inside the object support. Immutable during prediction.
struct SceneModel {
    ComplexField object; // object support grid (larger than probe grid)
    ComplexField probe;  // probe grid == propagation grid
    ScanPattern scan;
    std::vector<SensorSpec> sensors;
    std::vector<std::array<int, 2>> positions_px; // snapped (dx, dy) per scan position

    int position_count() const { return static_cast<int>(positions_px.size()); }
    int sensor_count() const { return static_cast<int>(sensors.size()); }
};

// Validates geometry and snaps scan positions to integer pixels.
SceneModel make_scene(ComplexField object, ComplexField probe, ScanPattern scan,
                      std::vector<SensorSpec> sensors);

// psi_exit(r, R_i) = O(r - R_i) * P(r): probe-sized crop of the object at the
// snapped offset, multiplied elementwise by the probe.
ComplexField exit_field(const SceneModel& scene, int position_index);

// Propagates the exit field to the sensor plane (plain ASM on axis, shifted
// ASM otherwise), crops to the sensor window, returns |Psi|^2 scaled by
// exposure_weight.
RealField predict_intensity(const SceneModel& scene, int position_index,
                            const SensorSpec& sensor);

// Same, but reusing a precomputed plan for the sensor geometry.
RealField predict_intensity(const SceneModel& scene, int position_index,
                            const SensorSpec& sensor, const PropagationPlan& plan);

// Measured or simulated intensity stack: frames ordered position-major then
// sensor, plus the full geometry needed to rebuild the forward model.
struct Dataset {
    GridSpec probe_grid;
    std::vector<SensorSpec> sensors;
    ScanPattern scan;
    std::vector<RealField> frames; // size = positions * sensors

    int position_count() const { return scan.count(); }
    int sensor_count() const { return static_cast<int>(sensors.size()); }
    std::size_t frame_index(int position, int sensor) const {
        return static_cast<std::size_t>(position) * sensors.size() + sensor;
    }
    RealField& frame(int position, int sensor) { return frames[frame_index(position, sensor)]; }
    const RealField& frame(int position, int sensor) const {
        return frames[frame_index(position, sensor)];
    }
    void validate() const;
};

// Noiseless predictions for every (position, sensor) pair.
Dataset predict_dataset(const SceneModel& scene);

// Centered crop helpers shared by prediction and the gradient adjoint.
GridSpec sensor_window_grid(const GridSpec& probe_grid, const SensorSpec& sensor);
ComplexField crop_centered(const ComplexField& field, int width, int height);

} // namespace ptycho
