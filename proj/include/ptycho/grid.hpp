#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "ptycho/errors.hpp"

namespace ptycho {

using complexd = std::complex<double>;

// Physical sampling grid: pixel counts, pitch, and illumination wavelength.
// Frequency axes follow the signed FFT ordering, fx(k) = k / (nx * pitch_x)
// with k in [0, nx/2) mapped to positive and the rest to negative frequencies.
struct GridSpec {
    int nx = 0;
    int ny = 0;
    double pitch_x = 0.0;   // meters
    double pitch_y = 0.0;   // meters
    double wavelength = 0.0; // meters

    void validate() const;

    std::size_t pixel_count() const { return static_cast<std::size_t>(nx) * ny; }
    double extent_x() const { return nx * pitch_x; }
    double extent_y() const { return ny * pitch_y; }
    double nyquist_x() const { return 1.0 / (2.0 * pitch_x); }
    double nyquist_y() const { return 1.0 / (2.0 * pitch_y); }

    // Signed frequency of FFT bin k (DC at k = 0).
    double freq_x(int k) const;
    double freq_y(int k) const;

    // Physical coordinate of pixel index, origin at the center pixel (n/2).
    double coord_x(int j) const { return (j - nx / 2) * pitch_x; }
    double coord_y(int j) const { return (j - ny / 2) * pitch_y; }

    bool same_shape(const GridSpec& other) const { return nx == other.nx && ny == other.ny; }
    bool operator==(const GridSpec& other) const = default;
};

// 2D complex amplitude on a GridSpec. Row-major (y, x) storage.
class ComplexField {
public:
    ComplexField() = default;
    explicit ComplexField(const GridSpec& grid, complexd fill = {0.0, 0.0});
    ComplexField(const GridSpec& grid, std::vector<complexd> values);

    const GridSpec& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    complexd& at(int y, int x) { return values_[static_cast<std::size_t>(y) * grid_.nx + x]; }
    const complexd& at(int y, int x) const {
        return values_[static_cast<std::size_t>(y) * grid_.nx + x];
    }
    complexd& operator[](std::size_t i) { return values_[i]; }
    const complexd& operator[](std::size_t i) const { return values_[i]; }

    std::vector<complexd>& values() { return values_; }
    const std::vector<complexd>& values() const { return values_; }

    bool all_finite() const;

private:
    GridSpec grid_;
    std::vector<complexd> values_;
};

// 2D non-negative real array (intensities) on a GridSpec.
class RealField {
public:
    RealField() = default;
    explicit RealField(const GridSpec& grid, double fill = 0.0);
    RealField(const GridSpec& grid, std::vector<double> values);

    const GridSpec& grid() const { return grid_; }
    std::size_t size() const { return values_.size(); }

    double& at(int y, int x) { return values_[static_cast<std::size_t>(y) * grid_.nx + x]; }
    const double& at(int y, int x) const {
        return values_[static_cast<std::size_t>(y) * grid_.nx + x];
    }
    double& operator[](std::size_t i) { return values_[i]; }
    const double& operator[](std::size_t i) const { return values_[i]; }

    std::vector<double>& values() { return values_; }
    const std::vector<double>& values() const { return values_; }

    bool all_finite() const;

private:
    GridSpec grid_;
    std::vector<double> values_;
};

// Unitary discrete 2D Fourier transform (1/sqrt(N) per direction), DC at bin
// (0, 0). ifft2(fft2(f)) == f to machine precision.
ComplexField fft2(const ComplexField& field);
ComplexField ifft2(const ComplexField& field);

// Sum of |values|^2. Equal in both FFT domains (Parseval).
double total_energy(const ComplexField& field);
double total_energy(const RealField& field);

} // namespace ptycho
