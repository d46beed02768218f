#include "dehnext/pipeline.hpp"

#include <cmath>
#include <filesystem>
#include <limits>

#ifndef DEHNEXT_DATA_DIR
#define DEHNEXT_DATA_DIR "data"
#endif

namespace dehnext {

namespace fs = std::filesystem;
using io::json;

std::string data_dir() {
    if (const char* env = std::getenv("DEHNEXT_DATA_DIR")) return env;
    return DEHNEXT_DATA_DIR;
}

std::string resolve_path(const std::string& name, const std::string& base) {
    if (name.empty() || fs::path(name).is_absolute()) return name;
    return (fs::path(base) / name).string();
}

json ExperimentConfig::to_json() const {
    json exc = json::array();
    for (const auto& s : exceptional) exc.push_back(io::to_json(s));
    return {{"group", group_file},
            {"seed", seed_file},
            {"words", words_file},
            {"extension", {{"slope", io::to_json(slope)}, {"denominator", denominator}}},
            {"sequence", {{"base", io::to_json(base)}, {"direction", direction}, {"count", count}}},
            {"tolerances",
             {{"trivial", tol.trivial}, {"nontrivial_floor", tol.nontrivial_floor}, {"geometry", tol.geometry},
              {"solver", tol.solver}}},
            {"exceptional", exc},
            {"rng_seed", rng_seed},
            {"polygons", {{"theta", theta}, {"target", polygon_target}, {"L_step", L_step}}}};
}

std::string ExperimentConfig::hash() const { return io::config_hash(to_json()); }

ExperimentConfig load_config(const std::string& path) {
    const json j = io::load_file(path);
    const std::string base = fs::path(path).parent_path().string();
    ExperimentConfig c;
    try {
        c.group_file = resolve_path(j.at("group").get<std::string>(), base);
        c.seed_file = resolve_path(j.value("seed", std::string()), base);
        c.words_file = resolve_path(j.value("words", std::string()), base);
        if (j.contains("extension")) {
            c.slope = io::slope_from_json(j["extension"].at("slope"));
            c.denominator = j["extension"].at("denominator").get<std::int64_t>();
        }
        if (j.contains("sequence")) {
            const auto& s = j["sequence"];
            c.base = io::slope_from_json(s.at("base"));
            c.direction = s.at("direction").get<std::array<std::int64_t, 2>>();
            c.count = s.at("count").get<int>();
        }
        if (j.contains("tolerances")) {
            const auto& t = j["tolerances"];
            c.tol.trivial = t.value("trivial", c.tol.trivial);
            c.tol.nontrivial_floor = t.value("nontrivial_floor", c.tol.nontrivial_floor);
            c.tol.geometry = t.value("geometry", c.tol.geometry);
            c.tol.solver = t.value("solver", c.tol.solver);
        }
        for (const auto& s : j.value("exceptional", json::array())) c.exceptional.push_back(io::slope_from_json(s));
        c.rng_seed = j.value("rng_seed", c.rng_seed);
        if (j.contains("polygons")) {
            const auto& p = j["polygons"];
            c.theta = p.value("theta", c.theta);
            c.polygon_target = p.value("target", c.polygon_target);
            c.L_step = p.value("L_step", c.L_step);
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed config: ") + e.what());
    }
    return c;
}

ExperimentConfig default_config() { return load_config((fs::path(data_dir()) / "experiment.json").string()); }

std::vector<NamedWord> load_words(const std::string& path, const MarkedPresentation& extension) {
    const json j = io::load_file(path);
    std::vector<NamedWord> out;
    try {
        const json& list = j.is_array() ? j : j.at("words");
        for (std::size_t i = 0; i < list.size(); ++i) {
            const json& w = list[i];
            NamedWord nw;
            if (w.is_array()) {
                nw.name = "word" + std::to_string(i);
                nw.word = w.get<Word>();
            } else {
                nw.name = w.value("name", "word" + std::to_string(i));
                nw.word = w.at("letters").get<Word>();
            }
            extension.check_word(nw.word);
            out.push_back(std::move(nw));
        }
    } catch (const json::exception& e) {
        throw ValidationError(std::string("malformed word file: ") + e.what());
    }
    return out;
}

SolverOptions solver_options(const ExperimentConfig& c) {
    SolverOptions o;
    o.exceptional = c.exceptional;
    return o;
}

Pipeline prepare(const ExperimentConfig& c, bool with_sequence) {
    Pipeline p;
    p.config = c;
    p.group = io::presentation_from_json(io::load_file(c.group_file));
    if (p.group.cusps.size() != 1) throw ValidationError("the experiment needs a one-cusped group");
    if (c.seed_file.empty()) throw ValidationError("no seed representation given");
    const Representation seed = io::representation_from_json(io::load_file(c.seed_file));
    if (!congruent_mod({c.slope}, {c.base}, {c.denominator}))
        throw ValidationError("sequence base must be congruent to the extension slope");
    p.ext = dehn_extension(p.group, {c.slope}, {c.denominator});
    const SolverOptions opt = solver_options(c);
    p.complete = solve_complete(p.group, seed, opt);
    p.oracle = numeric_membership_oracle(p.group, p.complete.rep);
    p.anchors.assign(p.group.cusps.size(), Pointd::origin());
    if (!with_sequence) return p;
    p.sequence = filling_sequence(p.group, p.complete, c.base, c.denominator, c.direction, c.count, opt);
    for (std::size_t i = 0; i < p.sequence.size(); ++i) {
        if (!p.sequence[i].solved) continue;
        p.extension_maps.push_back(extended_filling(p.ext, {p.sequence[i].slope}));
        p.extension_reps.push_back(extension_image(p.sequence[i].state.rep, p.extension_maps.back(), c.tol.trivial));
        p.solved.push_back(i);
    }
    return p;
}

Word killed_root_word(const Pipeline& p, std::size_t entry) {
    const Slope& z = p.sequence.at(entry).slope;
    const std::int64_t m = p.config.denominator;
    const int t = p.ext.root_generator.at(0);
    if (t == 0) throw ValidationError("the extension has no root generator");
    const Word lat = lattice_word(p.group, 0, (z.p - p.config.slope.p) / m, (z.q - p.config.slope.q) / m);
    return concat(Word{t}, lat);
}

std::vector<PolygonSample> sample_killed_polygons(const Pipeline& p, std::size_t target, std::uint64_t seed) {
    std::vector<PolygonSample> out;
    if (p.solved.empty()) return out;
    std::mt19937_64 rng(seed);
    const int rank = static_cast<int>(p.ext.presentation.rank());
    std::uniform_int_distribution<int> letter(1, rank), len(1, 3), sign(0, 1), factors(2, 3);
    const std::size_t per = (target + p.solved.size() - 1) / p.solved.size();
    for (std::size_t r = 0; r < p.solved.size(); ++r) {
        const Word killed = killed_root_word(p, p.solved[r]);
        std::size_t got = 0;
        for (std::size_t attempt = 0; got < per && attempt < 100 * per; ++attempt) {
            Word w;
            const int n = factors(rng);
            for (int f = 0; f < n; ++f) {
                Word g;
                for (int i = len(rng); i > 0; --i) g.push_back(sign(rng) ? letter(rng) : -letter(rng));
                g = free_reduce(g);
                w = concat(w, conjugate(sign(rng) ? killed : inverse(killed), g));
            }
            PolygonSample s;
            s.entry = p.solved[r];
            s.word = w;
            s.normal_form = reduce(from_extension_word(p.ext, w), p.ext, p.oracle);
            if (s.normal_form.status == NormalFormStatus::inconclusive || s.normal_form.syllable_length < 2) continue;
            s.polygon = lift_polygon(p.extension_reps[r], p.ext, s.normal_form, p.anchors);
            s.polygon.rep_id = "k=" + std::to_string(p.sequence[s.entry].k);
            s.polygon.word_id = to_string(w, p.ext.presentation.generators);
            s.inscribed = inscribe(s.polygon, std::numeric_limits<double>::infinity());
            out.push_back(std::move(s));
            ++got;
        }
    }
    return out;
}

double grid_search_L(const std::vector<InscribedPolygon>& polys, double theta, double step) {
    if (!(step > 0.0)) throw ValidationError("grid step must be positive");
    // Only polygons meeting the angle bound can hold; L must exceed twice
    // their shortest side.
    double worst = 0.0;
    for (const auto& insc : polys) {
        if (insc.sides.empty()) continue;
        bool angles_ok = true;
        for (double a : insc.angles) angles_ok = angles_ok && a >= std::numbers::pi - theta;
        if (!angles_ok) continue;
        double min_side = std::numeric_limits<double>::infinity();
        for (double s : insc.sides) min_side = std::min(min_side, s);
        worst = std::max(worst, 2.0 * min_side);
    }
    long long i = 1;
    while (static_cast<double>(i) * step <= worst) ++i;
    return static_cast<double>(i) * step;
}

}  // namespace dehnext
