#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "ptycho/errors.hpp"

namespace ptycho {

struct ScanRegion {
    double xmin = 0.0;
    double xmax = 0.0;
    double ymin = 0.0;
    double ymax = 0.0;

    double width() const { return xmax - xmin; }
    double height() const { return ymax - ymin; }
    double area() const { return width() * height(); }
    bool contains(double x, double y) const {
        return x >= xmin && x <= xmax && y >= ymin && y <= ymax;
    }
    void validate() const;
};

// Lateral object scan positions with a guaranteed pairwise minimum distance.
struct ScanPattern {
    std::vector<std::array<double, 2>> positions; // (x, y) meters
    double min_distance = 0.0;                    // meters
    ScanRegion region{};
    std::uint64_t rng_seed = 0;

    int count() const { return static_cast<int>(positions.size()); }
};

// Bridson dart-throwing with an active list (k = 30 candidates per point).
// Produces a maximal pattern with pairwise distance >= r, then keeps a
// deterministic seeded subset of target_count points. Throws if the region is
// too small for target_count points at spacing r.
ScanPattern poisson_disk(const ScanRegion& region, double r, int target_count,
                         std::uint64_t rng_seed);

// Area-overlap fraction of two disks of radius `radius` with centers
// `distance` apart (lens formula), in [0, 1].
double disk_overlap_area_fraction(double radius, double distance);

// Mean over per-position nearest-neighbour pairs of the disk-overlap
// fraction. The overlap disk radius is taken equal to `probe_diameter`.
// Requires at least two positions.
double overlap_fraction(const ScanPattern& pattern, double probe_diameter);

// Plain-text pattern format: "# r=<meters> seed=<seed>" header, then one
// "x<TAB>y" row per position.
void write_pattern(std::ostream& out, const ScanPattern& pattern);
ScanPattern read_pattern(std::istream& in);

} // namespace ptycho
