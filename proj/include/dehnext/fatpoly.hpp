#pragma once

// Piecewise-geodesic polygons lifted from cyclically reduced amalgam words,
// their inscribed midpoint polygons, and the fatness diagnostics built on
// them.

#include "dehnext/h3.hpp"
#include "dehnext/normal_form.hpp"
#include "dehnext/repvar.hpp"

#include <string>
#include <vector>

namespace dehnext {

struct Polygon {
    /// x[i] and y[i] bound the i-th edge-factor side; x.size() == s.
    std::vector<Pointd> x, y;
    /// The recursion's x_{s+1}; equals x[0] when the word is killed.
    Pointd closing_point;
    double closure_gap = 0.0;
    std::string rep_id, word_id;

    std::size_t sides() const { return x.size(); }
};

/// Lifts the reduced word a1 b1 ... as bs through `rep`, a representation of
/// the extension: y_i = x_i . rep(b_i), x_{i+1} = y_i . rep(a_{i+1}), with
/// x_1 the anchor of the first edge factor's cusp.
Polygon lift_polygon(const Representation& rep, const DehnExtension& ext, const NormalFormResult& word,
                     const std::vector<Pointd>& cusp_anchors);

struct InscribedPolygon {
    std::vector<Pointd> z;
    /// side[i] = d(z_i, z_{i+1})
    std::vector<double> sides;
    /// Angle at z_i between z_{i-1} and z_{i+1}.
    std::vector<double> angles;
    /// <z_{i+1}, y_i>_{z_i}
    std::vector<double> gromov_forward;
    /// <z_{i-1}, x_i>_{z_i}
    std::vector<double> gromov_backward;
    /// |d(x_i, z_i) - d(z_i, y_i)|, the midpoint defect.
    std::vector<double> midpoint_defects;
    bool degenerate = false;
};

InscribedPolygon inscribe(const Polygon& poly, double closure_tol = 1e-6);

struct SeparationReport {
    double min_distance = 0.0;
    std::size_t index = 0;
    bool below_five_delta = false;
    bool below_isolation = false;
};

/// Minimum distance between consecutive sides [x_i, y_i], [x_{i+1}, y_{i+1}].
SeparationReport separation_check(const Polygon& poly);

enum class ObstructionVerdict { fat_bounds_hold, bounds_violated };

const char* to_string(ObstructionVerdict v);

struct ObstructionResult {
    ObstructionVerdict verdict = ObstructionVerdict::bounds_violated;
    /// "side" or "angle" when violated.
    std::string violated;
    std::size_t witness = 0;
    /// When the bounds hold: the diameter pair, and whether both sides at
    /// z_j lie in the horoball through the antipodal point.
    std::size_t diameter_j = 0, diameter_k = 0;
    bool both_sides_in_horoball = false;
};

/// Checks sides >= L/2 and angles >= pi - theta, and builds the horoball
/// configuration when both hold.
ObstructionResult horoball_obstruction(const InscribedPolygon& insc, double theta, double L);

struct FatnessReport {
    double min_side = 0.0;
    double min_angle = 0.0;
    double min_gromov = 0.0;
    double max_connector = 0.0;
    double min_separation = 0.0;
    ObstructionResult obstruction;
};

FatnessReport fatness_report(const Polygon& poly, const InscribedPolygon& insc, double theta, double L);

/// Length above which Gromov products >= L/2 force the angle between
/// [z, y] and [z, z'] below theta/2: -2 ln sin(theta/4).
double angle_threshold_length(double theta);

}  // namespace dehnext
