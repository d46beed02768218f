#include "dehnext/json_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

namespace dehnext::io {

json to_json(Complex<double> z) { return json::array({z.real(), z.imag()}); }

Complex<double> complex_from_json(const json& j) {
    if (j.is_number()) return {j.get<double>(), 0.0};
    if (!j.is_array() || j.size() != 2) throw ValidationError("complex numbers are [re, im] pairs");
    return {j[0].get<double>(), j[1].get<double>()};
}

json to_json(const Isometryd& g) {
    json out = json::array();
    for (int k = 0; k < 4; ++k) out.push_back(to_json(g.m(k / 2, k % 2)));
    return out;
}

Isometryd isometry_from_json(const json& j) {
    if (!j.is_array() || j.size() != 4) throw ValidationError("matrices are row-major arrays of four complex numbers");
    return Isometryd(complex_from_json(j[0]), complex_from_json(j[1]), complex_from_json(j[2]), complex_from_json(j[3]));
}

json to_json(const Pointd& p) { return {{"horizontal", to_json(p.horizontal)}, {"height", p.height}}; }

Pointd point_from_json(const json& j) {
    try {
        return Pointd(complex_from_json(j.at("horizontal")), j.at("height").get<double>());
    } catch (const DomainError& e) {
        throw ValidationError(e.what());
    }
}

json to_json(const BoundaryPointd& b) { return b.infinite ? json("inf") : to_json(b.value); }

BoundaryPointd boundary_from_json(const json& j) {
    if (j.is_string() && j.get<std::string>() == "inf") return BoundaryPointd::at_infinity();
    return BoundaryPointd::finite(complex_from_json(j));
}

json to_json(const Horoballd& h) { return {{"base", to_json(h.base)}, {"parameter", h.parameter}}; }

json to_json(const Slope& s) { return json::array({s.p, s.q}); }

Slope slope_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) throw ValidationError("slopes are integer pairs");
    return Slope(j[0].get<std::int64_t>(), j[1].get<std::int64_t>());
}

json to_json(const SlopeTuple& z) {
    json out = json::array();
    for (const auto& s : z) out.push_back(to_json(s));
    return out;
}

SlopeTuple slope_tuple_from_json(const json& j) {
    SlopeTuple out;
    for (const auto& s : j) out.push_back(slope_from_json(s));
    return out;
}

json to_json(const MarkedPresentation& p) {
    json cusps = json::array();
    for (const auto& c : p.cusps) cusps.push_back({{"meridian", c.meridian}, {"longitude", c.longitude}});
    return {{"generators", p.generators}, {"relators", p.relators}, {"cusps", cusps}};
}

MarkedPresentation presentation_from_json(const json& j) {
    MarkedPresentation p;
    try {
        p.generators = j.at("generators").get<std::vector<std::string>>();
        p.relators = j.at("relators").get<std::vector<Word>>();
        for (const auto& c : j.value("cusps", json::array()))
            p.cusps.push_back({c.at("meridian").get<Word>(), c.at("longitude").get<Word>()});
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed group file: ") + e.what());
    }
    p.validate();
    return p;
}

json to_json(const PresentationMap& m) {
    return {{"kind", to_string(m.kind)}, {"images", m.images}, {"source", to_json(m.source)}, {"target", to_json(m.target)}};
}

json to_json(const DehnExtension& e) {
    json lattices = json::array();
    for (const auto& l : e.lattices) {
        json basis = json::array();
        for (const auto& v : l.basis) basis.push_back({to_string(v[0]), to_string(v[1])});
        lattices.push_back({{"cusp", l.cusp}, {"slope", to_json(l.slope)}, {"denominator", l.denominator},
                            {"basis", basis}, {"index", l.index().str()}});
    }
    return {{"presentation", to_json(e.presentation)}, {"slopes", to_json(e.slopes)},
            {"denominators", e.denominators}, {"root_generators", e.root_generator}, {"lattices", lattices}};
}

json to_json(const Representation& r, const json& presentation_ref) {
    json mats = json::array();
    for (const auto& g : r.images) mats.push_back(to_json(g));
    return {{"presentation", presentation_ref}, {"matrices", mats}, {"tolerance", r.tolerance},
            {"is_representation", r.is_representation}};
}

Representation representation_from_json(const json& j) {
    Representation r;
    try {
        for (const auto& m : j.at("matrices")) r.images.push_back(isometry_from_json(m));
        r.tolerance = j.value("tolerance", 1e-9);
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed representation: ") + e.what());
    }
    return r;
}

json to_json(const ResidualReport& r) {
    return {{"relators", r.relators}, {"determinants", r.determinants}, {"max", r.max()}};
}

namespace {

json rational_json(const Rational& r) {
    return json::array({boost::multiprecision::numerator(r).str(), boost::multiprecision::denominator(r).str()});
}

Rational rational_from_json(const json& j) {
    auto part = [](const json& v) { return v.is_string() ? Integer(v.get<std::string>()) : Integer(v.get<std::int64_t>()); };
    if (j.is_array() && j.size() == 2) return Rational(part(j[0]), part(j[1]));
    return Rational(part(j));
}

}  // namespace

json to_json(const AmalgamWord& w) {
    json out = json::array();
    for (const auto& f : w.factors) {
        if (const auto* v = std::get_if<VertexFactor>(&f)) {
            out.push_back({{"v", v->word}});
        } else {
            const auto& e = std::get<EdgeFactor>(f);
            out.push_back(
                {{"e", {{"cusp", e.cusp}, {"coords", json::array({rational_json(e.coords[0]), rational_json(e.coords[1])})}}}});
        }
    }
    return out;
}

AmalgamWord amalgam_from_json(const json& j) {
    AmalgamWord w;
    try {
        for (const auto& f : j) {
            if (f.contains("v")) {
                w.factors.emplace_back(VertexFactor{f.at("v").get<Word>()});
            } else {
                const auto& e = f.at("e");
                const auto& c = e.at("coords");
                w.factors.emplace_back(
                    EdgeFactor{e.at("cusp").get<int>(), RationalPair{rational_from_json(c.at(0)), rational_from_json(c.at(1))}});
            }
        }
    } catch (const std::exception& e) {
        throw ValidationError(std::string("malformed amalgam word: ") + e.what());
    }
    return w;
}

json to_json(const NormalFormResult& r) {
    return {{"reduced", to_json(r.reduced)}, {"syllable_length", r.syllable_length}, {"status", to_string(r.status)},
            {"steps", r.steps}, {"syllable_trace", r.syllable_trace}};
}

json to_json(const HolonomyState& s) {
    json mats = json::array();
    for (const auto& g : s.rep.images) mats.push_back(to_json(g));
    return {{"matrices", mats},
            {"u", to_json(s.u)},
            {"v", to_json(s.v)},
            {"target", to_json(s.target)},
            {"slope_sign", s.slope_sign},
            {"relator_signs", s.relator_signs},
            {"newton", {{"residuals", s.newton.residuals}, {"step_norms", s.newton.step_norms},
                        {"quadratic_tail", s.newton.quadratic_tail}}},
            {"continuation_path", s.path}};
}

json to_json(const SequenceEntry& e) {
    json out = {{"k", e.k}, {"slope", to_json(e.slope)}, {"solved", e.solved}, {"notice", e.notice}};
    if (e.solved) {
        out["generator_distance"] = e.generator_distance;
        out["state"] = to_json(e.state);
    }
    return out;
}

json to_json(const Axis& a) { return {{"from", to_json(a.from)}, {"to", to_json(a.to)}}; }

json to_json(const StabilityVerdict& v, const std::vector<std::string>& names) {
    json words = json::array();
    for (std::size_t i = 0; i < v.words.size(); ++i) {
        const auto& w = v.words[i];
        words.push_back({{"name", i < names.size() ? names[i] : std::to_string(i)},
                         {"verdict", to_string(w.verdict)},
                         {"margins", w.margins},
                         {"tail_begin", w.tail_begin}});
    }
    return {{"window", {v.window_begin, v.window_end}}, {"margin", v.margin}, {"words", words}};
}

json to_json(const Polygon& p) {
    json x = json::array(), y = json::array();
    for (const auto& q : p.x) x.push_back(to_json(q));
    for (const auto& q : p.y) y.push_back(to_json(q));
    return {{"x", x}, {"y", y}, {"closure_gap", p.closure_gap}, {"rep_id", p.rep_id}, {"word_id", p.word_id}};
}

json to_json(const InscribedPolygon& p) {
    json z = json::array();
    for (const auto& q : p.z) z.push_back(to_json(q));
    return {{"z", z},
            {"sides", p.sides},
            {"angles", p.angles},
            {"gromov_forward", p.gromov_forward},
            {"gromov_backward", p.gromov_backward},
            {"degenerate", p.degenerate}};
}

json to_json(const ObstructionResult& r) {
    json out = {{"verdict", to_string(r.verdict)}};
    if (r.verdict == ObstructionVerdict::bounds_violated) {
        out["violated"] = r.violated;
        out["witness"] = r.witness;
    } else {
        out["diameter_pair"] = {r.diameter_j, r.diameter_k};
        out["both_sides_in_horoball"] = r.both_sides_in_horoball;
    }
    return out;
}

json to_json(const FatnessReport& r) {
    return {{"min_side", r.min_side},         {"min_angle", r.min_angle},
            {"min_gromov", r.min_gromov},     {"max_connector", r.max_connector},
            {"min_separation", r.min_separation}, {"obstruction", to_json(r.obstruction)}};
}

json load_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::exception& e) {
        throw ValidationError("cannot parse " + path + ": " + e.what());
    }
}

void save_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw ValidationError("cannot write " + path);
    out << j.dump(2) << '\n';
}

std::uint64_t fnv1a(const std::string& bytes) {
    std::uint64_t h = 14695981039346656037ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 1099511628211ull;
    }
    return h;
}

std::string config_hash(const json& j) {
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(fnv1a(j.dump())));
    return buf;
}

}  // namespace dehnext::io
