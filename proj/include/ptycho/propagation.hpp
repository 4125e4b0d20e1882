#pragma once

#include "ptycho/grid.hpp"

namespace ptycho {

// Which row of the three-case band-limit table applies along one axis.
enum class BandCase {
    beyond_positive, // offset beyond +S: band entirely at positive frequencies
    spanning,        // offset within [-S, S): band straddles DC
    beyond_negative, // offset at or beyond -S
};

// Rectangular frequency window keeping only the plane-wave components that
// geometrically reach a laterally shifted destination window.
struct BandLimit {
    double u0 = 0.0;      // rectangle center, x axis (cycles/meter)
    double v0 = 0.0;      // rectangle center, y axis
    double u_width = 0.0; // full width, x axis (>= 0)
    double v_width = 0.0; // full width, y axis
    BandCase case_x = BandCase::spanning;
    BandCase case_y = BandCase::spanning;

    // Closed-boundary rect: boundary bins are kept.
    bool contains(double fx, double fy) const {
        return std::abs(fx - u0) <= 0.5 * u_width && std::abs(fy - v0) <= 0.5 * v_width;
    }
};

// Frequency-domain free-space propagator H = exp(i 2pi/lambda z sqrt(1 - (lambda fx)^2
// - (lambda fy)^2)). Evanescent bins ((lambda f)^2 > 1) are zeroed.
ComplexField transfer_function(const GridSpec& grid, double z);

// Angular spectrum propagation between parallel planes sharing the optical
// axis. Output grid identical to the input grid.
ComplexField propagate_asm(const ComplexField& field, double z);

// Band-limit rectangle for a destination window whose center is laterally
// offset by (x0, y0). Half-extents S = src_halfwidth + grid halfwidth set the
// boundary angles theta = atan((offset +- S) / z). Widths are clamped to the
// grid Nyquist band.
BandLimit band_limit(const GridSpec& grid, double z, double x0, double y0,
                     double src_halfwidth_x, double src_halfwidth_y);

// Shifted angular spectrum propagation: the output grid has the same pixel
// dimensions as the source and represents a window centered at (x0, y0) in
// the destination plane. Warns (non-fatally) when z is not larger than the
// combined plane half-extents, where the rectangular frequency cut loses
// validity.
ComplexField propagate_shifted_asm(const ComplexField& field, double z, double x0, double y0);

// Brute-force reference: zero-embed into a pad_factor x larger grid, run plain
// ASM, crop the window centered at (x0, y0) (snapped to whole pixels). No
// band-limiting beyond the evanescent cutoff.
ComplexField propagate_padded_oracle(const ComplexField& field, double z, double x0, double y0,
                                     int pad_factor);

// Precomputed frequency-domain multiplier for one propagation geometry.
// On-axis plans (x0 = y0 = 0) use the plain transfer function; shifted plans
// fold in the shift phase and the band-limit rect. Immutable after
// construction; forward/adjoint calls on distinct fields may run in parallel.
class PropagationPlan {
public:
    PropagationPlan(const GridSpec& grid, double z, double x0, double y0);

    const GridSpec& grid() const { return grid_; }
    double z() const { return z_; }
    double x0() const { return x0_; }
    double y0() const { return y0_; }
    bool shifted() const { return x0_ != 0.0 || y0_ != 0.0; }
    const ComplexField& transfer() const { return transfer_; }

    // IFFT(T . FFT(f))
    ComplexField forward(const ComplexField& field) const;
    // IFFT(conj(T) . FFT(g)); the adjoint of forward under the unitary FFT.
    ComplexField adjoint(const ComplexField& field) const;

private:
    GridSpec grid_;
    double z_;
    double x0_;
    double y0_;
    ComplexField transfer_;
};

} // namespace ptycho
