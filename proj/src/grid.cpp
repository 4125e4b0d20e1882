#include "ptycho/grid.hpp"

#include <fftw3.h>

#include <cmath>
#include <map>
#include <mutex>
#include <tuple>

namespace ptycho {

void GridSpec::validate() const {
    if (nx < 1 || ny < 1) throw ValidationError("grid: pixel counts must be >= 1");
    if (!(pitch_x > 0.0) || !(pitch_y > 0.0)) throw ValidationError("grid: pitch must be > 0");
    if (!(wavelength > 0.0)) throw ValidationError("grid: wavelength must be > 0");
}

double GridSpec::freq_x(int k) const {
    const int signed_k = (k < (nx + 1) / 2) ? k : k - nx;
    return signed_k / (nx * pitch_x);
}

double GridSpec::freq_y(int k) const {
    const int signed_k = (k < (ny + 1) / 2) ? k : k - ny;
    return signed_k / (ny * pitch_y);
}

ComplexField::ComplexField(const GridSpec& grid, complexd fill) : grid_(grid) {
    grid_.validate();
    values_.assign(grid_.pixel_count(), fill);
}

ComplexField::ComplexField(const GridSpec& grid, std::vector<complexd> values)
    : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.pixel_count()) {
        throw ValidationError("complex field: value count does not match grid shape");
    }
}

bool ComplexField::all_finite() const {
    for (const complexd& v : values_) {
        if (!std::isfinite(v.real()) || !std::isfinite(v.imag())) return false;
    }
    return true;
}

RealField::RealField(const GridSpec& grid, double fill) : grid_(grid) {
    grid_.validate();
    values_.assign(grid_.pixel_count(), fill);
}

RealField::RealField(const GridSpec& grid, std::vector<double> values)
    : grid_(grid), values_(std::move(values)) {
    grid_.validate();
    if (values_.size() != grid_.pixel_count()) {
        throw ValidationError("real field: value count does not match grid shape");
    }
}

bool RealField::all_finite() const {
    for (double v : values_) {
        if (!std::isfinite(v)) return false;
    }
    return true;
}

namespace {

// FFTW plan cache. Plans are created once per (ny, nx, sign) and reused;
// fftw_execute_dft on distinct arrays is thread-safe, plan creation is not.
class PlanCache {
public:
    static PlanCache& instance() {
        static PlanCache cache;
        return cache;
    }

    fftw_plan get(int ny, int nx, int sign) {
        std::lock_guard<std::mutex> lock(mutex_);
        const auto key = std::make_tuple(ny, nx, sign);
        auto it = plans_.find(key);
        if (it != plans_.end()) return it->second;
        // FFTW_UNALIGNED lets the plan execute on any std::vector storage.
        std::vector<complexd> dummy_in(static_cast<std::size_t>(ny) * nx);
        std::vector<complexd> dummy_out(dummy_in.size());
        fftw_plan plan = fftw_plan_dft_2d(
            ny, nx, reinterpret_cast<fftw_complex*>(dummy_in.data()),
            reinterpret_cast<fftw_complex*>(dummy_out.data()), sign,
            FFTW_ESTIMATE | FFTW_UNALIGNED);
        plans_.emplace(key, plan);
        return plan;
    }

private:
    std::mutex mutex_;
    std::map<std::tuple<int, int, int>, fftw_plan> plans_;
};

ComplexField transform(const ComplexField& field, int sign) {
    const GridSpec& g = field.grid();
    ComplexField out(g);
    std::vector<complexd> in = field.values(); // fftw may not alias in/out
    fftw_plan plan = PlanCache::instance().get(g.ny, g.nx, sign);
    fftw_execute_dft(plan, reinterpret_cast<fftw_complex*>(in.data()),
                     reinterpret_cast<fftw_complex*>(out.values().data()));
    const double scale = 1.0 / std::sqrt(static_cast<double>(g.pixel_count()));
    for (complexd& v : out.values()) v *= scale;
    return out;
}

} // namespace

ComplexField fft2(const ComplexField& field) { return transform(field, FFTW_FORWARD); }

ComplexField ifft2(const ComplexField& field) { return transform(field, FFTW_BACKWARD); }

double total_energy(const ComplexField& field) {
    double sum = 0.0;
    for (const complexd& v : field.values()) sum += std::norm(v);
    return sum;
}

double total_energy(const RealField& field) {
    double sum = 0.0;
    for (double v : field.values()) sum += v * v;
    return sum;
}

} // namespace ptycho
