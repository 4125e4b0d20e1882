#include "ptycho/propagation.hpp"

#include <cmath>
#include <string>

namespace ptycho {

namespace {

void check_z(double z) {
    if (!(z > 0.0)) throw ValidationError("propagation: z must be > 0");
}

// One axis of the three-row case table: offset vs. combined half-extent S.
// u_max/u_min are the magnitudes of sin(theta)/lambda at the two boundary
// angles theta_max = atan((offset + S)/z), theta_min = atan((offset - S)/z).
struct AxisBand {
    double center = 0.0;
    double width = 0.0;
    BandCase band_case = BandCase::spanning;
};

AxisBand axis_band(double offset, double s, double z, double wavelength, double nyquist) {
    const double sin_hi = std::sin(std::atan((offset + s) / z)) / wavelength;
    const double sin_lo = std::sin(std::atan((offset - s) / z)) / wavelength;
    const double u_max = std::abs(sin_hi);
    const double u_min = std::abs(sin_lo);

    AxisBand band;
    if (offset > s) {
        band.band_case = BandCase::beyond_positive;
        band.center = 0.5 * (u_max + u_min);
        band.width = u_max - u_min;
    } else if (offset >= -s) {
        band.band_case = BandCase::spanning;
        band.center = 0.5 * (u_max - u_min);
        band.width = u_max + u_min;
    } else {
        band.band_case = BandCase::beyond_negative;
        band.center = -0.5 * (u_max + u_min);
        band.width = u_min - u_max;
    }

    // Clamp to the representable frequency band.
    double lo = std::max(band.center - 0.5 * band.width, -nyquist);
    double hi = std::min(band.center + 0.5 * band.width, nyquist);
    if (hi < lo) {
        lo = hi = 0.0;
        band.width = 0.0;
        band.center = 0.0;
    } else {
        band.center = 0.5 * (lo + hi);
        band.width = hi - lo;
    }
    return band;
}

} // namespace

ComplexField transfer_function(const GridSpec& grid, double z) {
    grid.validate();
    check_z(z);
    const double lambda = grid.wavelength;
    const double k_scale = 2.0 * M_PI / lambda * z;
    ComplexField h(grid);
    for (int y = 0; y < grid.ny; ++y) {
        const double lfy = lambda * grid.freq_y(y);
        for (int x = 0; x < grid.nx; ++x) {
            const double lfx = lambda * grid.freq_x(x);
            const double radicand = 1.0 - lfx * lfx - lfy * lfy;
            if (radicand < 0.0) continue; // evanescent: zeroed
            h.at(y, x) = std::polar(1.0, k_scale * std::sqrt(radicand));
        }
    }
    return h;
}

ComplexField propagate_asm(const ComplexField& field, double z) {
    const ComplexField h = transfer_function(field.grid(), z);
    ComplexField spectrum = fft2(field);
    for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= h[i];
    return ifft2(spectrum);
}

BandLimit band_limit(const GridSpec& grid, double z, double x0, double y0,
                     double src_halfwidth_x, double src_halfwidth_y) {
    grid.validate();
    check_z(z);
    if (!(src_halfwidth_x > 0.0) || !(src_halfwidth_y > 0.0)) {
        throw ValidationError("band_limit: source half-extents must be > 0");
    }
    const double sx = src_halfwidth_x + 0.5 * grid.extent_x();
    const double sy = src_halfwidth_y + 0.5 * grid.extent_y();
    const AxisBand bx = axis_band(x0, sx, z, grid.wavelength, grid.nyquist_x());
    const AxisBand by = axis_band(y0, sy, z, grid.wavelength, grid.nyquist_y());

    BandLimit limit;
    limit.u0 = bx.center;
    limit.u_width = bx.width;
    limit.case_x = bx.band_case;
    limit.v0 = by.center;
    limit.v_width = by.width;
    limit.case_y = by.band_case;
    return limit;
}

ComplexField propagate_shifted_asm(const ComplexField& field, double z, double x0, double y0) {
    PropagationPlan plan(field.grid(), z, x0, y0);
    return plan.forward(field);
}

ComplexField propagate_padded_oracle(const ComplexField& field, double z, double x0, double y0,
                                     int pad_factor) {
    check_z(z);
    if (pad_factor < 1) throw ValidationError("padded oracle: pad_factor must be >= 1");
    const GridSpec& g = field.grid();
    GridSpec padded = g;
    padded.nx = g.nx * pad_factor;
    padded.ny = g.ny * pad_factor;

    const int off_x = padded.nx / 2 - g.nx / 2;
    const int off_y = padded.ny / 2 - g.ny / 2;
    ComplexField embedded(padded);
    for (int y = 0; y < g.ny; ++y) {
        for (int x = 0; x < g.nx; ++x) {
            embedded.at(y + off_y, x + off_x) = field.at(y, x);
        }
    }

    const ComplexField propagated = propagate_asm(embedded, z);

    const int shift_px = static_cast<int>(std::llround(x0 / g.pitch_x));
    const int shift_py = static_cast<int>(std::llround(y0 / g.pitch_y));
    const int origin_x = padded.nx / 2 + shift_px - g.nx / 2;
    const int origin_y = padded.ny / 2 + shift_py - g.ny / 2;
    if (origin_x < 0 || origin_y < 0 || origin_x + g.nx > padded.nx ||
        origin_y + g.ny > padded.ny) {
        throw ValidationError("padded oracle: window extends outside the padded grid");
    }

    ComplexField window(g);
    for (int y = 0; y < g.ny; ++y) {
        for (int x = 0; x < g.nx; ++x) {
            window.at(y, x) = propagated.at(y + origin_y, x + origin_x);
        }
    }
    return window;
}

PropagationPlan::PropagationPlan(const GridSpec& grid, double z, double x0, double y0)
    : grid_(grid), z_(z), x0_(x0), y0_(y0) {
    grid_.validate();
    check_z(z);
    transfer_ = transfer_function(grid_, z_);
    if (!shifted()) return;

    const double half_x = 0.5 * grid_.extent_x();
    const double half_y = 0.5 * grid_.extent_y();
    const BandLimit limit = band_limit(grid_, z_, x0_, y0_, half_x, half_y);
    // Combined source+window half-extents; the rect cut assumes z exceeds them.
    const double s_x = half_x + half_x;
    const double s_y = half_y + half_y;
    if (z_ <= s_x || z_ <= s_y) {
        warn("shifted ASM: z = " + std::to_string(z_) +
             " m is not larger than the plane extents; the band-limit cut may be inaccurate");
    }
    for (int y = 0; y < grid_.ny; ++y) {
        const double fy = grid_.freq_y(y);
        for (int x = 0; x < grid_.nx; ++x) {
            const double fx = grid_.freq_x(x);
            if (!limit.contains(fx, fy)) {
                transfer_.at(y, x) = 0.0;
                continue;
            }
            transfer_.at(y, x) *= std::polar(1.0, 2.0 * M_PI * (x0_ * fx + y0_ * fy));
        }
    }
}

ComplexField PropagationPlan::forward(const ComplexField& field) const {
    if (!(field.grid() == grid_)) throw ValidationError("propagation plan: grid mismatch");
    ComplexField spectrum = fft2(field);
    for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= transfer_[i];
    return ifft2(spectrum);
}

ComplexField PropagationPlan::adjoint(const ComplexField& field) const {
    if (!(field.grid() == grid_)) throw ValidationError("propagation plan: grid mismatch");
    ComplexField spectrum = fft2(field);
    for (std::size_t i = 0; i < spectrum.size(); ++i) spectrum[i] *= std::conj(transfer_[i]);
    return ifft2(spectrum);
}

} // namespace ptycho
