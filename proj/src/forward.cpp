#include "ptycho/forward.hpp"

#include <cmath>

namespace ptycho {

void SensorSpec::validate() const {
    if (name.empty()) throw ValidationError("sensor: name must not be empty");
    if (width < 1 || height < 1) throw ValidationError("sensor '" + name + "': size must be >= 1");
    if (!(z > 0.0)) throw ValidationError("sensor '" + name + "': z must be > 0");
    if (!(exposure_weight > 0.0)) {
        throw ValidationError("sensor '" + name + "': exposure weight must be > 0");
    }
}

namespace {

// Crop origin of O(r - R_i) in object pixel indices: align grid centers, then
// shift by the snapped scan offset.
std::array<int, 2> crop_origin(const GridSpec& object, const GridSpec& probe,
                               const std::array<int, 2>& pos_px) {
    return {object.nx / 2 - probe.nx / 2 - pos_px[0], object.ny / 2 - probe.ny / 2 - pos_px[1]};
}

} // namespace

SceneModel make_scene(ComplexField object, ComplexField probe, ScanPattern scan,
                      std::vector<SensorSpec> sensors) {
    const GridSpec& og = object.grid();
    const GridSpec& pg = probe.grid();
    og.validate();
    pg.validate();
    if (og.pitch_x != pg.pitch_x || og.pitch_y != pg.pitch_y ||
        og.wavelength != pg.wavelength) {
        throw ValidationError("scene: object and probe must share pitch and wavelength");
    }
    if (sensors.empty()) throw ValidationError("scene: at least one sensor required");
    for (const SensorSpec& s : sensors) {
        s.validate();
        if (s.width > pg.nx || s.height > pg.ny) {
            throw ValidationError("sensor '" + s.name + "': window exceeds the probe grid");
        }
    }
    if (scan.positions.empty()) throw ValidationError("scene: scan pattern is empty");

    SceneModel scene;
    scene.object = std::move(object);
    scene.probe = std::move(probe);
    scene.scan = std::move(scan);
    scene.sensors = std::move(sensors);
    scene.positions_px.reserve(scene.scan.positions.size());
    for (const auto& pos : scene.scan.positions) {
        const int dx = static_cast<int>(std::llround(pos[0] / pg.pitch_x));
        const int dy = static_cast<int>(std::llround(pos[1] / pg.pitch_y));
        const auto origin = crop_origin(og, pg, {dx, dy});
        if (origin[0] < 0 || origin[1] < 0 || origin[0] + pg.nx > og.nx ||
            origin[1] + pg.ny > og.ny) {
            throw ValidationError("scene: scan position (" + std::to_string(pos[0]) + ", " +
                                  std::to_string(pos[1]) +
                                  ") m puts the probe crop outside the object support");
        }
        scene.positions_px.push_back({dx, dy});
    }
    return scene;
}

ComplexField exit_field(const SceneModel& scene, int position_index) {
    if (position_index < 0 || position_index >= scene.position_count()) {
        throw ValidationError("exit_field: position index out of range");
    }
    const GridSpec& pg = scene.probe.grid();
    const auto origin =
        crop_origin(scene.object.grid(), pg, scene.positions_px[position_index]);
    ComplexField exit(pg);
    for (int y = 0; y < pg.ny; ++y) {
        for (int x = 0; x < pg.nx; ++x) {
            exit.at(y, x) = scene.object.at(y + origin[1], x + origin[0]) * scene.probe.at(y, x);
        }
    }
    return exit;
}

GridSpec sensor_window_grid(const GridSpec& probe_grid, const SensorSpec& sensor) {
    GridSpec g = probe_grid;
    g.nx = sensor.width;
    g.ny = sensor.height;
    return g;
}

ComplexField crop_centered(const ComplexField& field, int width, int height) {
    const GridSpec& g = field.grid();
    if (width > g.nx || height > g.ny) {
        throw ValidationError("crop: window larger than the field");
    }
    GridSpec out_grid = g;
    out_grid.nx = width;
    out_grid.ny = height;
    const int ox = (g.nx - width) / 2;
    const int oy = (g.ny - height) / 2;
    ComplexField out(out_grid);
    for (int y = 0; y < height; ++y) {
        for (int x = 0; x < width; ++x) {
            out.at(y, x) = field.at(y + oy, x + ox);
        }
    }
    return out;
}

RealField predict_intensity(const SceneModel& scene, int position_index,
                            const SensorSpec& sensor, const PropagationPlan& plan) {
    const ComplexField exit = exit_field(scene, position_index);
    const ComplexField det = plan.forward(exit);
    const ComplexField window = crop_centered(det, sensor.width, sensor.height);
    RealField intensity(window.grid());
    for (std::size_t i = 0; i < window.size(); ++i) {
        intensity[i] = sensor.exposure_weight * std::norm(window[i]);
    }
    return intensity;
}

RealField predict_intensity(const SceneModel& scene, int position_index,
                            const SensorSpec& sensor) {
    PropagationPlan plan(scene.probe.grid(), sensor.z, sensor.x0, sensor.y0);
    return predict_intensity(scene, position_index, sensor, plan);
}

void Dataset::validate() const {
    probe_grid.validate();
    if (sensors.empty()) throw ValidationError("dataset: no sensors");
    if (frames.size() != static_cast<std::size_t>(scan.count()) * sensors.size()) {
        throw ValidationError("dataset: frame count does not match positions * sensors");
    }
    for (int p = 0; p < scan.count(); ++p) {
        for (int s = 0; s < sensor_count(); ++s) {
            const RealField& f = frame(p, s);
            if (f.grid().nx != sensors[s].width || f.grid().ny != sensors[s].height) {
                throw ValidationError("dataset: frame shape mismatch at position " +
                                      std::to_string(p) + ", sensor " + sensors[s].name);
            }
        }
    }
}

Dataset predict_dataset(const SceneModel& scene) {
    Dataset ds;
    ds.probe_grid = scene.probe.grid();
    ds.sensors = scene.sensors;
    ds.scan = scene.scan;
    ds.frames.reserve(scene.scan.positions.size() * scene.sensors.size());

    std::vector<PropagationPlan> plans;
    plans.reserve(scene.sensors.size());
    for (const SensorSpec& s : scene.sensors) {
        plans.emplace_back(scene.probe.grid(), s.z, s.x0, s.y0);
    }
    for (int p = 0; p < scene.position_count(); ++p) {
        for (int s = 0; s < scene.sensor_count(); ++s) {
            try {
                ds.frames.push_back(predict_intensity(scene, p, scene.sensors[s], plans[s]));
            } catch (const ValidationError& err) {
                throw ValidationError("position " + std::to_string(p) + ": " + err.what());
            }
        }
    }
    return ds;
}

} // namespace ptycho
