#pragma once

#include <cstdint>
#include <vector>

#include "bulb/errors.hpp"
#include "bulb/problem.hpp"

namespace bulb {

/// Uniform radial grid on [0, R]; node i sits at i*h.
struct Grid {
    enum class Kind : std::uint8_t { UniformRadial = 0, UniformInterval = 1 };

    Kind kind = Kind::UniformRadial;
    int node_count = 0;
    double spacing = 0.0;
    double radius = 0.0;

    double node(int i) const { return spacing * static_cast<double>(i); }

    std::vector<double> nodes() const {
        std::vector<double> r(static_cast<std::size_t>(node_count));
        for (int i = 0; i < node_count; ++i) r[static_cast<std::size_t>(i)] = node(i);
        return r;
    }

    friend bool operator==(const Grid&, const Grid&) = default;
};

inline Grid build_grid(double radius, int node_count, Grid::Kind kind) {
    if (node_count < 3) {
        throw config_error("build_grid: node_count must be at least 3");
    }
    if (!(radius > 0.0)) {
        throw config_error("build_grid: radius must be positive");
    }
    Grid g;
    g.kind = kind;
    g.node_count = node_count;
    g.radius = radius;
    g.spacing = radius / static_cast<double>(node_count - 1);
    return g;
}

inline Grid build_grid(const ProblemSpec& spec, int node_count) {
    const Grid::Kind kind = (spec.dim == 1 && spec.geometry == Geometry::Interval)
                                ? Grid::Kind::UniformInterval
                                : Grid::Kind::UniformRadial;
    return build_grid(spec.radius, node_count, kind);
}

} // namespace bulb
