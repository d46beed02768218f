#pragma once

// Newton continuation for hyperbolic Dehn filling representations of a
// one-cusped group, starting from the complete structure.

#include "dehnext/presentation.hpp"
#include "dehnext/repvar.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace dehnext {

class NoConvergence : public std::runtime_error {
public:
    NoConvergence(const std::string& what, double last) : std::runtime_error(what), last_residual(last) {}
    double last_residual;
};

class ExceptionalSlope : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct NewtonTrace {
    /// Residual before the first step and after every step.
    std::vector<double> residuals;
    std::vector<double> step_norms;
    bool quadratic_tail = false;
};

struct HolonomyState {
    Representation rep;
    /// Logs of the squared meridian and longitude eigenvalues on their
    /// common eigenvector, continued from (0, 0).
    Complex<double> u{}, v{};
    /// Trivial for the complete structure.
    Slope target;
    /// Sign s with slope word image close to s * I (0 for the complete structure).
    int slope_sign = 0;
    /// Signs of the relator images, fixed by the seed.
    std::vector<int> relator_signs;
    NewtonTrace newton;
    /// Continuation parameters visited on the way to this state.
    std::vector<double> path;
};

struct SolverOptions {
    double stop_tol = 1e-13;
    /// Accept a stagnating iteration below this residual.
    double floor_tol = 1e-10;
    int max_iterations = 40;
    double divergence = 1e6;
    double initial_step = 0.05;
    double min_step = 1e-4;
    double max_step = 0.2;
    /// Largest entrywise change of the unknowns per continuation step.
    double step_bound = 0.5;
    int continuation_iterations = 12;
    double certificate_constant = 100.0;
    double certificate_floor = 1e-13;
    std::vector<Slope> exceptional;
    /// Also refuse slopes with max(|p|, |q|) <= 1.
    bool exclude_small = true;
};

/// r_{i+1} <= max(C r_i^2, floor) over the last two steps.
bool quadratic_tail(const std::vector<double>& residuals, double constant, double floor);

HolonomyState solve_complete(const MarkedPresentation& pres, const Representation& seed, SolverOptions opt = {});

HolonomyState solve_filling(const MarkedPresentation& pres, const HolonomyState& state0, const Slope& target,
                            SolverOptions opt = {});

/// Entrywise distance between generator images, maximised over generators
/// and minimised over the sign of each.
double generator_distance(const Representation& a, const Representation& b);

struct SequenceEntry {
    int k = 0;
    Slope slope;
    bool solved = false;
    std::string notice;
    HolonomyState state;
    double generator_distance = 0.0;
};

/// Fillings along base + k * m * direction for k = 1..count.
std::vector<SequenceEntry> filling_sequence(const MarkedPresentation& pres, const HolonomyState& complete,
                                            const Slope& base, std::int64_t m, std::array<std::int64_t, 2> direction,
                                            int count, SolverOptions opt = {});

struct Axis {
    /// `to` is the fixed point on whose eigenvector the meridian acts by
    /// exp(u / 2).
    BoundaryPointd from, to;
};

Axis core_axis(const MarkedPresentation& pres, const HolonomyState& state);

/// Root of the slope z of order m built from the core axis: the loxodromic
/// of complex length ((z . (u, v)) - 2 pi i) / m. It agrees up to sign with
/// the image of the lattice word (z - target) / m.
Isometryd geometric_root(const MarkedPresentation& pres, const HolonomyState& state, const Slope& z, std::int64_t m);

}  // namespace dehnext
