#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "bulb/errors.hpp"

namespace bulb {

/// Spatial domain shape. All three reduce to a radial representation on
/// [0, R]: an interval is the symmetric interval (-R, R) in one dimension,
/// a ball is the radial ball of radius R, and whole-space is truncated at
/// radius R (truncation quality is reported through the far-field metric,
/// not controlled here).
enum class Geometry : std::uint8_t {
    Interval = 0,
    Ball = 1,
    WholeSpaceTruncated = 2,
};

enum class Boundary : std::uint8_t {
    DirichletZero = 0,
    NeumannZero = 1,
    /// No spatial variation: the solution is a pure ODE in time and the
    /// field extends as a constant beyond the stored grid.
    Homogeneous = 2,
};

/// Named closed-form initial data families.
struct InitialData {
    enum class Family : std::uint8_t {
        Constant = 0,
        Gaussian = 1,
        Bubble = 2,
        Table = 3,
    };
    Family family = Family::Gaussian;
    double constant_value = 1.0; ///< Constant: c
    double amplitude = 1.0;      ///< Gaussian: A
    double width = 1.0;          ///< Gaussian: sigma_g
    double bubble_lambda = 1.0;  ///< Bubble: scale
    std::vector<double> table;   ///< Table: one value per grid node
};

/// One PDE instance: u_t = Laplace(u) + |u|^{p-1} u on the chosen domain.
struct ProblemSpec {
    int dim = 1;
    double p = 2.0;
    Geometry geometry = Geometry::Interval;
    Boundary boundary = Boundary::DirichletZero;
    double radius = 1.0;
    InitialData initial;

    void validate() const {
        if (dim < 1) throw config_error("problem: N must be >= 1");
        if (!(p > 1.0)) throw config_error("problem: p must exceed 1");
        if (!(radius > 0.0)) throw config_error("problem: R must be positive");
        if (boundary == Boundary::Homogeneous &&
            initial.family != InitialData::Family::Constant) {
            throw config_error("problem: homogeneous boundary requires constant initial data");
        }
        if (initial.family == InitialData::Family::Bubble && dim < 3) {
            throw config_error("problem: bubble initial data requires N >= 3");
        }
        if (initial.family == InitialData::Family::Gaussian && !(initial.width > 0.0)) {
            throw config_error("problem: gaussian width must be positive");
        }
    }
};

/// Evaluate the closed-form initial families at radius r. Table data is
/// node-indexed and handled by the snapshot factory instead.
inline double initial_value(const ProblemSpec& spec, double r) {
    switch (spec.initial.family) {
        case InitialData::Family::Constant:
            return spec.initial.constant_value;
        case InitialData::Family::Gaussian: {
            const double s = spec.initial.width;
            return spec.initial.amplitude * std::exp(-r * r / (2.0 * s * s));
        }
        case InitialData::Family::Bubble: {
            const double n = static_cast<double>(spec.dim);
            const double lam = spec.initial.bubble_lambda;
            const double c = std::pow(n * (n - 2.0), (n - 2.0) / 4.0);
            const double t = r / lam;
            return std::pow(lam, -(n - 2.0) / 2.0) * c *
                   std::pow(1.0 + t * t, -(n - 2.0) / 2.0);
        }
        case InitialData::Family::Table:
            throw std::domain_error("initial_value: table data is node-indexed");
    }
    throw std::domain_error("initial_value: unknown family");
}

} // namespace bulb
