#include "dehnext/fatpoly.hpp"

#include <cmath>
#include <limits>
#include <numbers>

namespace dehnext {

namespace {

struct Syllable {
    Word connector;  // a_i
    EdgeFactor edge;  // b_i
};

std::vector<Syllable> syllables(const AmalgamWord& w) {
    std::vector<Syllable> out;
    Word pending;
    for (const auto& f : w.factors) {
        if (const auto* v = std::get_if<VertexFactor>(&f)) {
            pending = concat(pending, v->word);
        } else {
            out.push_back({pending, std::get<EdgeFactor>(f)});
            pending.clear();
        }
    }
    // A trailing vertex factor is moved to the front by conjugation.
    if (!out.empty() && !pending.empty()) out.front().connector = concat(pending, out.front().connector);
    return out;
}

}  // namespace

Polygon lift_polygon(const Representation& rep, const DehnExtension& ext, const NormalFormResult& word,
                     const std::vector<Pointd>& cusp_anchors) {
    if (word.status == NormalFormStatus::inconclusive) throw ValidationError("cannot lift an inconclusive normal form");
    const auto syl = syllables(word.reduced);
    if (syl.empty()) throw ValidationError("cannot lift a word with no edge factors");
    const std::size_t s = syl.size();
    auto anchor = [&](const EdgeFactor& e) { return cusp_anchors.at(static_cast<std::size_t>(e.cusp)); };
    auto edge_image = [&](const EdgeFactor& e) { return evaluate(rep, to_extension_word(ext, AmalgamWord{{e}})); };
    Polygon poly;
    Isometryd frame;
    for (std::size_t i = 0; i < s; ++i) {
        poly.x.push_back(mobius(frame, anchor(syl[i].edge)));
        frame = frame * edge_image(syl[i].edge);
        poly.y.push_back(mobius(frame, anchor(syl[i].edge)));
        frame = frame * evaluate(rep, syl[(i + 1) % s].connector);
    }
    poly.closing_point = mobius(frame, anchor(syl[0].edge));
    poly.closure_gap = distance(poly.closing_point, poly.x[0]);
    return poly;
}

InscribedPolygon inscribe(const Polygon& poly, double closure_tol) {
    if (poly.closure_gap > closure_tol) throw ValidationError("polygon is not closed");
    const std::size_t s = poly.sides();
    InscribedPolygon out;
    for (std::size_t i = 0; i < s; ++i) {
        const auto mid = midpoint(Segmentd{poly.x[i], poly.y[i]});
        out.z.push_back(mid.point);
        out.midpoint_defects.push_back(std::abs(distance(poly.x[i], mid.point) - distance(mid.point, poly.y[i])));
    }
    if (s < 2) {
        out.degenerate = true;
        return out;
    }
    for (std::size_t i = 0; i < s; ++i) {
        const Pointd& z = out.z[i];
        const Pointd& next = out.z[(i + 1) % s];
        const Pointd& prev = out.z[(i + s - 1) % s];
        out.sides.push_back(distance(z, next));
        const bool coincident = distance(z, next) == 0.0 || distance(z, prev) == 0.0;
        if (coincident) out.degenerate = true;
        out.angles.push_back(coincident ? 0.0 : angle_at(z, prev, next));
        out.gromov_forward.push_back(gromov_product(z, next, poly.y[i]));
        out.gromov_backward.push_back(gromov_product(z, prev, poly.x[i]));
    }
    return out;
}

SeparationReport separation_check(const Polygon& poly) {
    SeparationReport out;
    out.min_distance = std::numeric_limits<double>::infinity();
    const std::size_t s = poly.sides();
    // For s == 2 the cyclic pairs coincide; a side is never compared with itself.
    const std::size_t pairs = s < 2 ? 0 : (s == 2 ? 1 : s);
    for (std::size_t i = 0; i < pairs; ++i) {
        const std::size_t j = (i + 1) % s;
        const double d = segment_distance(Segmentd{poly.x[i], poly.y[i]}, Segmentd{poly.x[j], poly.y[j]}).distance;
        if (d < out.min_distance) out.min_distance = d, out.index = i;
    }
    if (pairs == 0) out.min_distance = 0.0;
    out.below_five_delta = out.min_distance < 5.0 * Constantsd::delta();
    out.below_isolation = out.min_distance < Constantsd::isolation();
    return out;
}

const char* to_string(ObstructionVerdict v) {
    return v == ObstructionVerdict::fat_bounds_hold ? "fat_bounds_hold" : "bounds_violated";
}

ObstructionResult horoball_obstruction(const InscribedPolygon& insc, double theta, double L) {
    if (!(theta > 0.0 && theta < std::numbers::pi) || !(L > 0.0)) throw ValidationError("need 0 < theta < pi and L > 0");
    const std::size_t s = insc.z.size();
    if (s < 2 || insc.sides.size() != s) throw ValidationError("obstruction check needs at least two sides");
    ObstructionResult out;
    for (std::size_t i = 0; i < s; ++i)
        if (insc.sides[i] < L / 2.0) {
            out.violated = "side";
            out.witness = i;
            return out;
        }
    for (std::size_t i = 0; i < s; ++i)
        if (insc.angles[i] < std::numbers::pi - theta) {
            out.violated = "angle";
            out.witness = i;
            return out;
        }
    out.verdict = ObstructionVerdict::fat_bounds_hold;
    double diam = -1.0;
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = i + 1; k < s; ++k)
            if (const double d = distance(insc.z[i], insc.z[k]); d > diam) diam = d, out.diameter_j = i, out.diameter_k = k;
    const Pointd& zj = insc.z[out.diameter_j];
    const Pointd& zk = insc.z[out.diameter_k];
    const BoundaryPointd q = ray_endpoint(zj, zk);
    const Pointd w = geodesic_point(zj, zk, -diam);
    const Horoballd ball = horoball_through(q, w);
    const Pointd& prev = insc.z[(out.diameter_j + s - 1) % s];
    const Pointd& next = insc.z[(out.diameter_j + 1) % s];
    // Horoballs are convex, so a side lies inside iff both endpoints do.
    out.both_sides_in_horoball = horoball_contains(ball, zj, 1e-9) && horoball_contains(ball, prev, 1e-9) &&
                                 horoball_contains(ball, next, 1e-9);
    return out;
}

FatnessReport fatness_report(const Polygon& poly, const InscribedPolygon& insc, double theta, double L) {
    FatnessReport r;
    const double inf = std::numeric_limits<double>::infinity();
    r.min_side = r.min_angle = r.min_gromov = inf;
    for (double v : insc.sides) r.min_side = std::min(r.min_side, v);
    for (double v : insc.angles) r.min_angle = std::min(r.min_angle, v);
    for (double v : insc.gromov_forward) r.min_gromov = std::min(r.min_gromov, v);
    for (double v : insc.gromov_backward) r.min_gromov = std::min(r.min_gromov, v);
    const std::size_t s = poly.sides();
    for (std::size_t i = 0; i < s; ++i) {
        const Pointd& next = i + 1 < s ? poly.x[i + 1] : poly.closing_point;
        r.max_connector = std::max(r.max_connector, distance(poly.y[i], next));
    }
    r.min_separation = separation_check(poly).min_distance;
    if (s >= 2) r.obstruction = horoball_obstruction(insc, theta, L);
    if (insc.sides.empty()) r.min_side = r.min_angle = r.min_gromov = 0.0;
    return r;
}

double angle_threshold_length(double theta) { return -2.0 * std::log(std::sin(theta / 4.0)); }

}  // namespace dehnext
