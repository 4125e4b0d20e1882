#include "ptycho/scan.hpp"

#include <algorithm>
#include <cmath>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <sstream>

#include "ptycho/rng.hpp"

namespace ptycho {

void ScanRegion::validate() const {
    if (!(xmax > xmin) || !(ymax > ymin)) {
        throw ValidationError("scan region: empty or inverted rectangle");
    }
}

namespace {

double sq_dist(const std::array<double, 2>& a, const std::array<double, 2>& b) {
    const double dx = a[0] - b[0];
    const double dy = a[1] - b[1];
    return dx * dx + dy * dy;
}

constexpr int kCandidateAttempts = 30;

} // namespace

ScanPattern poisson_disk(const ScanRegion& region, double r, int target_count,
                         std::uint64_t rng_seed) {
    region.validate();
    if (!(r > 0.0)) throw ValidationError("poisson_disk: min distance must be > 0");
    if (target_count < 1) throw ValidationError("poisson_disk: target_count must be >= 1");
    if (region.area() < target_count * r * r * M_PI / 4.0) {
        throw ValidationError("poisson_disk: region too small for " +
                              std::to_string(target_count) + " points at spacing " +
                              std::to_string(r));
    }

    rng::Stream stream(rng_seed);

    // Background grid with cell size r/sqrt(2): at most one sample per cell.
    const double cell = r / std::sqrt(2.0);
    const int grid_nx = static_cast<int>(std::ceil(region.width() / cell));
    const int grid_ny = static_cast<int>(std::ceil(region.height() / cell));
    std::vector<int> grid(static_cast<std::size_t>(grid_nx) * grid_ny, -1);
    const auto cell_of = [&](double x, double y) {
        int cx = std::min(grid_nx - 1, static_cast<int>((x - region.xmin) / cell));
        int cy = std::min(grid_ny - 1, static_cast<int>((y - region.ymin) / cell));
        return std::pair<int, int>(cx, cy);
    };

    std::vector<std::array<double, 2>> samples;
    std::vector<int> active;

    const auto far_from_all = [&](double x, double y) {
        const auto [cx, cy] = cell_of(x, y);
        for (int gy = std::max(0, cy - 2); gy <= std::min(grid_ny - 1, cy + 2); ++gy) {
            for (int gx = std::max(0, cx - 2); gx <= std::min(grid_nx - 1, cx + 2); ++gx) {
                const int idx = grid[static_cast<std::size_t>(gy) * grid_nx + gx];
                if (idx >= 0 && sq_dist(samples[idx], {x, y}) < r * r) return false;
            }
        }
        return true;
    };
    const auto insert = [&](double x, double y) {
        const auto [cx, cy] = cell_of(x, y);
        samples.push_back({x, y});
        grid[static_cast<std::size_t>(cy) * grid_nx + cx] = static_cast<int>(samples.size()) - 1;
        active.push_back(static_cast<int>(samples.size()) - 1);
    };

    insert(stream.uniform(region.xmin, region.xmax), stream.uniform(region.ymin, region.ymax));

    while (!active.empty()) {
        const std::size_t pick = stream.integer(active.size());
        const std::array<double, 2> base = samples[active[pick]];
        bool emitted = false;
        for (int attempt = 0; attempt < kCandidateAttempts; ++attempt) {
            const double radius = r * (1.0 + stream.uniform());
            const double angle = stream.uniform(0.0, 2.0 * M_PI);
            const double x = base[0] + radius * std::cos(angle);
            const double y = base[1] + radius * std::sin(angle);
            if (!region.contains(x, y) || !far_from_all(x, y)) continue;
            insert(x, y);
            emitted = true;
            break;
        }
        if (!emitted) {
            active[pick] = active.back();
            active.pop_back();
        }
    }

    if (static_cast<int>(samples.size()) < target_count) {
        throw ValidationError("poisson_disk: maximal sampling yielded " +
                              std::to_string(samples.size()) + " points, fewer than " +
                              std::to_string(target_count));
    }

    // Deterministic seeded subset, kept in generation order.
    std::vector<int> order(samples.size());
    std::iota(order.begin(), order.end(), 0);
    for (std::size_t i = order.size() - 1; i > 0; --i) {
        std::swap(order[i], order[stream.integer(i + 1)]);
    }
    order.resize(target_count);
    std::sort(order.begin(), order.end());

    ScanPattern pattern;
    pattern.min_distance = r;
    pattern.region = region;
    pattern.rng_seed = rng_seed;
    pattern.positions.reserve(target_count);
    for (int idx : order) pattern.positions.push_back(samples[idx]);
    return pattern;
}

double disk_overlap_area_fraction(double radius, double distance) {
    if (!(radius > 0.0)) throw ValidationError("overlap: radius must be > 0");
    if (distance < 0.0) throw ValidationError("overlap: distance must be >= 0");
    if (distance >= 2.0 * radius) return 0.0;
    const double g = distance / (2.0 * radius);
    return (2.0 / M_PI) * (std::acos(g) - g * std::sqrt(1.0 - g * g));
}

double overlap_fraction(const ScanPattern& pattern, double probe_diameter) {
    if (!(probe_diameter > 0.0)) throw ValidationError("overlap: probe diameter must be > 0");
    if (pattern.count() < 2) {
        throw ValidationError("overlap: need at least two scan positions");
    }
    double sum = 0.0;
    for (int i = 0; i < pattern.count(); ++i) {
        double nearest_sq = std::numeric_limits<double>::infinity();
        for (int j = 0; j < pattern.count(); ++j) {
            if (i == j) continue;
            nearest_sq = std::min(nearest_sq, sq_dist(pattern.positions[i], pattern.positions[j]));
        }
        sum += disk_overlap_area_fraction(probe_diameter, std::sqrt(nearest_sq));
    }
    return sum / pattern.count();
}

void write_pattern(std::ostream& out, const ScanPattern& pattern) {
    out.precision(17);
    out << "# r=" << pattern.min_distance << " seed=" << pattern.rng_seed << "\n";
    for (const auto& p : pattern.positions) {
        out << p[0] << "\t" << p[1] << "\n";
    }
}

ScanPattern read_pattern(std::istream& in) {
    ScanPattern pattern;
    std::string line;
    if (!std::getline(in, line) || line.rfind("# r=", 0) != 0) {
        throw ValidationError("scan pattern: missing header line");
    }
    {
        std::istringstream header(line.substr(4));
        std::string seed_token;
        if (!(header >> pattern.min_distance >> seed_token) ||
            seed_token.rfind("seed=", 0) != 0) {
            throw ValidationError("scan pattern: malformed header");
        }
        pattern.rng_seed = std::stoull(seed_token.substr(5));
    }
    double xmin = std::numeric_limits<double>::infinity(), xmax = -xmin;
    double ymin = xmin, ymax = -xmin;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream row(line);
        double x = 0.0, y = 0.0;
        if (!(row >> x >> y)) throw ValidationError("scan pattern: malformed position row");
        pattern.positions.push_back({x, y});
        xmin = std::min(xmin, x);
        xmax = std::max(xmax, x);
        ymin = std::min(ymin, y);
        ymax = std::max(ymax, y);
    }
    if (!pattern.positions.empty()) {
        pattern.region = {xmin, xmax, ymin, ymax};
    }
    return pattern;
}

} // namespace ptycho
