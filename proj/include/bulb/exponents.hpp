#pragma once

#include <cmath>
#include <limits>
#include <stdexcept>

namespace bulb {

/// Exponents derived from the dimension N and the nonlinearity power p.
///
/// beta      = 1/(p-1)
/// q_star    = N(p-1)/2            (may be < 1; allowed everywhere)
/// kappa     = beta^beta           (the constant self-similar amplitude)
/// p_sobolev = (N+2)/(N-2)         for N >= 3, +inf otherwise
/// p_jl      = 1 + 4(N-4+2*sqrt(N-1)) / ((N-2)(N-10))   for N >= 11, +inf otherwise
/// p_lepin   = 1 + 6/(N-10)        for N >= 11, +inf otherwise
///
/// Infinite thresholds are represented as +inf explicitly, never produced by
/// overflow.
struct DerivedExponents {
    int dim = 0;
    double p = 0.0;
    double beta = 0.0;
    double q_star = 0.0;
    double kappa = 0.0;
    double p_sobolev = std::numeric_limits<double>::infinity();
    double p_jl = std::numeric_limits<double>::infinity();
    double p_lepin = std::numeric_limits<double>::infinity();
};

inline DerivedExponents derive_exponents(int dim, double p) {
    if (dim < 1) {
        throw std::domain_error("derive_exponents: N must be a positive integer");
    }
    if (!(p > 1.0)) {
        throw std::domain_error("derive_exponents: p must exceed 1");
    }
    DerivedExponents e;
    e.dim = dim;
    e.p = p;
    e.beta = 1.0 / (p - 1.0);
    e.q_star = dim * (p - 1.0) / 2.0;
    e.kappa = std::pow(e.beta, e.beta);
    const double n = static_cast<double>(dim);
    if (dim >= 3) {
        e.p_sobolev = (n + 2.0) / (n - 2.0);
    }
    if (dim >= 11) {
        e.p_jl = 1.0 + 4.0 * (n - 4.0 + 2.0 * std::sqrt(n - 1.0)) / ((n - 2.0) * (n - 10.0));
        e.p_lepin = 1.0 + 6.0 / (n - 10.0);
    }
    return e;
}

/// beta^beta for the given p; amplitude of the spatially homogeneous blow-up.
inline double ode_blowup_amplitude(double p) {
    const double beta = 1.0 / (p - 1.0);
    return std::pow(beta, beta);
}

} // namespace bulb
