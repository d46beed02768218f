// dehnext: command-line front end for Dehn extension experiments.

#include "dehnext/pipeline.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <optional>
#include <sstream>

using namespace dehnext;
using io::json;

namespace {

enum Exit { ok = 0, validation = 2, solver_failure = 3, inconclusive = 4 };

struct InconclusiveAlgebra : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::array<std::int64_t, 2> parse_pair(const std::string& s) {
    std::array<std::int64_t, 2> out{};
    char comma = 0;
    std::istringstream in(s);
    if (!(in >> out[0] >> comma >> out[1]) || comma != ',' || !in.eof())
        throw ValidationError("expected an integer pair p,q but got '" + s + "'");
    return out;
}

struct Options {
    std::string config, group, seed_rep, words, out, slope, base, direction;
    std::vector<std::string> exceptional;
    std::optional<std::int64_t> denominator;
    std::optional<int> count, polygons;
    double tol_trivial = -1, tol_floor = -1, tol_geometry = -1, tol_solver = -1, theta = -1;
    std::int64_t seed = -1;
    bool include_trivial = false;
};

ExperimentConfig build_config(const Options& o) {
    ExperimentConfig c = o.config.empty() ? default_config() : load_config(o.config);
    const std::string cwd = std::filesystem::current_path().string();
    if (!o.group.empty()) c.group_file = resolve_path(o.group, cwd);
    if (!o.seed_rep.empty()) c.seed_file = resolve_path(o.seed_rep, cwd);
    if (!o.words.empty()) c.words_file = resolve_path(o.words, cwd);
    if (!o.slope.empty()) {
        const auto p = parse_pair(o.slope);
        c.slope = Slope(p[0], p[1]);
    }
    if (!o.base.empty()) {
        const auto p = parse_pair(o.base);
        c.base = Slope(p[0], p[1]);
    }
    if (!o.direction.empty()) c.direction = parse_pair(o.direction);
    if (o.denominator) c.denominator = *o.denominator;
    if (c.denominator < 1) throw ValidationError("--denominator must be >= 1");
    if (o.count) c.count = *o.count;
    if (c.count < 1) throw ValidationError("--count must be >= 1");
    if (o.polygons) c.polygon_target = *o.polygons;
    if (c.polygon_target < 0) throw ValidationError("--polygons must be >= 0");
    if (o.tol_trivial > 0) c.tol.trivial = o.tol_trivial;
    if (o.tol_floor > 0) c.tol.nontrivial_floor = o.tol_floor;
    if (o.tol_geometry > 0) c.tol.geometry = o.tol_geometry;
    if (o.tol_solver > 0) c.tol.solver = o.tol_solver;
    if (o.theta > 0) c.theta = o.theta;
    if (o.seed >= 0) c.rng_seed = static_cast<std::uint64_t>(o.seed);
    for (const auto& e : o.exceptional) {
        const auto p = parse_pair(e);
        c.exceptional.emplace_back(p[0], p[1]);
    }
    c.out_dir = o.out;
    return c;
}

json envelope(const std::string& command, const ExperimentConfig& c, json result) {
    return {{"command", command}, {"config_hash", c.hash()}, {"config", c.to_json()}, {"result", std::move(result)}};
}

void emit(const std::string& command, const ExperimentConfig& c, json result) {
    const json doc = envelope(command, c, std::move(result));
    if (c.out_dir.empty()) {
        std::cout << doc.dump(2) << '\n';
        return;
    }
    std::filesystem::create_directories(c.out_dir);
    const std::string path = (std::filesystem::path(c.out_dir) / (command + ".json")).string();
    io::save_file(path, doc);
    std::cout << "wrote " << path << " (config " << c.hash() << ")\n";
}

std::vector<std::string> names_of(const std::vector<NamedWord>& words) {
    std::vector<std::string> out;
    for (const auto& w : words) out.push_back(w.name);
    return out;
}

json cmd_extend(const ExperimentConfig& c, bool include_trivial) {
    const MarkedPresentation group = io::presentation_from_json(io::load_file(c.group_file));
    SlopeTuple z(group.cusps.size(), Slope{});
    DenominatorTuple m(group.cusps.size(), 1);
    if (!group.cusps.empty()) z[0] = c.slope, m[0] = c.denominator;
    const DehnExtension ext = dehn_extension(group, z, m);
    json classes = json::array();
    for (const auto& t : enumerate_congruence_classes(m, include_trivial)) classes.push_back(io::to_json(t));
    const std::size_t len = presentation_length(group);
    const auto A = bound_A(static_cast<unsigned>(len));
    return {{"extension", io::to_json(ext)},
            {"inclusion", {{"kind", to_string(ext.inclusion.kind)}, {"images", ext.inclusion.images}}},
            {"congruence_classes", classes},
            {"class_count", classes.size()},
            {"presentation_length", len},
            {"bounds", {{"A_coefficient_of_pi", A.coefficient.str()}, {"T", bound_T(static_cast<unsigned>(len)).str()}}}};
}

json state_summary(const MarkedPresentation& group, const HolonomyState& s) {
    json out = io::to_json(s);
    out["residuals"] = io::to_json(residuals(s.rep, group));
    if (!s.target.trivial()) {
        const auto kill = kills(s.rep, slope_word(group, 0, s.target));
        const std::complex<double> defect =
            double(s.target.p) * s.u + double(s.target.q) * s.v - std::complex<double>(0.0, 2.0 * std::numbers::pi);
        out["slope_word_margin"] = kill.margin;
        out["holonomy_defect"] = std::abs(defect);
        try {
            out["core_axis"] = io::to_json(core_axis(group, s));
        } catch (const DomainError& e) {
            out["core_axis_error"] = e.what();
        }
    }
    return out;
}

json cmd_fill(const ExperimentConfig& c) {
    // Here --slope is the filling target, not an extension slope.
    ExperimentConfig solve = c;
    solve.slope = c.base;
    solve.denominator = 1;
    Pipeline p = prepare(solve, false);
    const HolonomyState s = solve_filling(p.group, p.complete, c.slope, solver_options(c));
    return {{"complete", state_summary(p.group, p.complete)}, {"filling", state_summary(p.group, s)}};
}

json cmd_sequence(const ExperimentConfig& c) {
    Pipeline p = prepare(c, true);
    json entries = json::array();
    for (const auto& e : p.sequence) {
        json j = {{"k", e.k}, {"slope", io::to_json(e.slope)}, {"solved", e.solved}, {"notice", e.notice}};
        if (e.solved) {
            j["generator_distance"] = e.generator_distance;
            j["state"] = state_summary(p.group, e.state);
        }
        entries.push_back(j);
    }
    return {{"complete", state_summary(p.group, p.complete)}, {"entries", entries}};
}

json cmd_reduce(const ExperimentConfig& c, bool& any_inconclusive) {
    Pipeline p = prepare(c, false);
    const auto words = load_words(c.words_file, p.ext.presentation);
    json out = json::array();
    for (const auto& w : words) {
        const auto nf = reduce(from_extension_word(p.ext, w.word), p.ext, p.oracle);
        any_inconclusive = any_inconclusive || nf.status == NormalFormStatus::inconclusive;
        out.push_back({{"name", w.name}, {"letters", w.word}, {"normal_form", io::to_json(nf)}});
    }
    return {{"words", out}};
}

json cmd_stability(const ExperimentConfig& c, bool& any_inconclusive) {
    if (c.words_file.empty()) throw ValidationError("no words");
    Pipeline p = prepare(c, false);
    const auto words = load_words(c.words_file, p.ext.presentation);
    if (words.empty()) throw ValidationError("no words");
    p = prepare(c, true);
    if (p.extension_reps.empty()) throw NoConvergence("no filling in the sequence was solved", 0.0);
    std::vector<Word> ws;
    for (const auto& w : words) ws.push_back(w.word);
    StabilityOptions opt;
    opt.trivial_tol = c.tol.trivial;
    opt.nontrivial_floor = c.tol.nontrivial_floor;
    const auto verdict = classify_stability(p.extension_reps, ws, 0, p.extension_reps.size(), opt);
    json out = io::to_json(verdict, names_of(words));
    json kernel = json::array();
    for (std::size_t i = 0; i < words.size(); ++i) {
        const auto nf = reduce(from_extension_word(p.ext, ws[i]), p.ext, p.oracle);
        any_inconclusive = any_inconclusive || nf.status == NormalFormStatus::inconclusive;
        out["words"][i]["syllable_length"] = nf.syllable_length;
        out["words"][i]["normal_form_empty"] = nf.reduced.factors.empty();
        if (verdict.words[i].verdict == Stability::eventually_trivial && !nf.reduced.factors.empty())
            kernel.push_back(words[i].name);
    }
    json ks = json::array();
    for (auto i : p.solved) ks.push_back(io::to_json(p.sequence[i].slope));
    out["fillings"] = ks;
    out["stable_kernel_nontrivial_elements"] = kernel;
    return out;
}

json polygon_record(const PolygonSample& s, double theta, double L) {
    return {{"entry_k", s.polygon.rep_id},
            {"word", s.polygon.word_id},
            {"syllable_length", s.normal_form.syllable_length},
            {"closure_gap", s.polygon.closure_gap},
            {"fatness", io::to_json(fatness_report(s.polygon, s.inscribed, theta, L))}};
}

json cmd_polygons(const ExperimentConfig& c) {
    Pipeline p = prepare(c, true);
    std::vector<PolygonSample> samples;
    json skipped = json::array();
    if (!c.words_file.empty() && std::filesystem::exists(c.words_file) && c.polygon_target == 0) {
        // Explicit words: lift wherever the word is killed.
        for (const auto& w : load_words(c.words_file, p.ext.presentation)) {
            const auto nf = reduce(from_extension_word(p.ext, w.word), p.ext, p.oracle);
            for (std::size_t r = 0; r < p.extension_reps.size(); ++r) {
                if (nf.status == NormalFormStatus::inconclusive || nf.syllable_length < 2) {
                    skipped.push_back({{"word", w.name}, {"reason", "needs a reduced form with at least two syllables"}});
                    break;
                }
                PolygonSample s{p.solved[r], w.word, nf, lift_polygon(p.extension_reps[r], p.ext, nf, p.anchors), {}};
                if (s.polygon.closure_gap > c.tol.trivial) {
                    skipped.push_back({{"word", w.name}, {"k", p.sequence[p.solved[r]].k}, {"reason", "open polygon"}});
                    continue;
                }
                s.polygon.rep_id = "k=" + std::to_string(p.sequence[p.solved[r]].k);
                s.polygon.word_id = w.name;
                s.inscribed = inscribe(s.polygon, c.tol.trivial);
                samples.push_back(std::move(s));
            }
        }
    } else {
        samples = sample_killed_polygons(p, static_cast<std::size_t>(c.polygon_target), c.rng_seed);
    }
    std::vector<InscribedPolygon> insc;
    for (const auto& s : samples) insc.push_back(s.inscribed);
    const double L = grid_search_L(insc, c.theta, c.L_step);
    json polys = json::array();
    std::size_t violated = 0;
    for (const auto& s : samples) {
        json rec = polygon_record(s, c.theta, L);
        if (rec["fatness"]["obstruction"]["verdict"] == "bounds_violated") ++violated;
        polys.push_back(std::move(rec));
    }
    return {{"theta", c.theta},
            {"L_star", L},
            {"angle_threshold_length", angle_threshold_length(c.theta)},
            {"polygon_count", samples.size()},
            {"bounds_violated", violated},
            {"skipped", skipped},
            {"polygons", polys}};
}

json cmd_report(const ExperimentConfig& c) {
    bool inconclusive_flag = false;
    json report;
    report["extend"] = cmd_extend(c, false);
    report["sequence"] = cmd_sequence(c);
    if (!c.words_file.empty()) report["stability"] = cmd_stability(c, inconclusive_flag);
    json polys = cmd_polygons(c);
    polys.erase("polygons");
    report["polygons"] = polys;
    if (inconclusive_flag) throw InconclusiveAlgebra("some normal forms were inconclusive");
    return report;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Dehn extension and filling experiments"};
    app.require_subcommand(1);
    Options o;
    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--config", o.config, "Experiment config JSON (defaults to the bundled one)");
        sub->add_option("--group", o.group, "Group presentation JSON");
        sub->add_option("--seed-rep", o.seed_rep, "Seed representation JSON for the complete structure");
        sub->add_option("--slope", o.slope, "Slope p,q (extension slope; filling target for fill)");
        sub->add_option("--denominator", o.denominator, "Denominator m");
        sub->add_option("--base", o.base, "Sequence base slope p,q");
        sub->add_option("--direction", o.direction, "Sequence direction a,b");
        sub->add_option("--count", o.count, "Sequence length");
        sub->add_option("--words", o.words, "Extension word list JSON");
        sub->add_option("--tol-trivial", o.tol_trivial, "Distance to +-I counted as trivial");
        sub->add_option("--tol-floor", o.tol_floor, "Distance to +-I counted as nontrivial");
        sub->add_option("--tol-geometry", o.tol_geometry, "Geometric identity tolerance");
        sub->add_option("--tol-solver", o.tol_solver, "Solver-derived quantity tolerance");
        sub->add_option("--exceptional", o.exceptional, "Exceptional slope p,q (repeatable)");
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_option("--out", o.out, "Output directory");
    };
    auto* extend = app.add_subcommand("extend", "Build a Dehn extension and list congruence classes");
    auto* fill = app.add_subcommand("fill", "Solve the complete structure and one filling");
    auto* sequence = app.add_subcommand("sequence", "Solve a congruent filling sequence");
    auto* stability = app.add_subcommand("stability", "Classify word stability along the sequence");
    auto* reduce_cmd = app.add_subcommand("reduce", "Normal forms of extension words");
    auto* polygons = app.add_subcommand("polygons", "Lift polygons from killed words and test fatness");
    auto* report = app.add_subcommand("report", "Run the full pipeline");
    for (auto* s : {extend, fill, sequence, stability, reduce_cmd, polygons, report}) add_common(s);
    extend->add_flag("--include-trivial", o.include_trivial, "Also list the zero class");
    for (auto* s : {polygons, report}) {
        s->add_option("--theta", o.theta, "Angle parameter theta");
        s->add_option("--polygons", o.polygons, "Number of sampled polygons (0: lift the --words list)");
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : validation;
    }

    try {
        const ExperimentConfig c = build_config(o);
        bool any_inconclusive = false;
        if (extend->parsed()) emit("extend", c, cmd_extend(c, o.include_trivial));
        if (fill->parsed()) emit("fill", c, cmd_fill(c));
        if (sequence->parsed()) emit("sequence", c, cmd_sequence(c));
        if (stability->parsed()) emit("stability", c, cmd_stability(c, any_inconclusive));
        if (reduce_cmd->parsed()) emit("reduce", c, cmd_reduce(c, any_inconclusive));
        if (polygons->parsed()) emit("polygons", c, cmd_polygons(c));
        if (report->parsed()) emit("report", c, cmd_report(c));
        if (any_inconclusive) {
            std::cerr << "error [algebra]: some normal forms were inconclusive\n";
            return inconclusive;
        }
        return ok;
    } catch (const InconclusiveAlgebra& e) {
        std::cerr << "error [algebra]: " << e.what() << '\n';
        return inconclusive;
    } catch (const NoConvergence& e) {
        std::cerr << "error [solver]: " << e.what() << " (last residual " << e.last_residual << ")\n";
        return solver_failure;
    } catch (const ExceptionalSlope& e) {
        std::cerr << "error [solver]: " << e.what() << '\n';
        return solver_failure;
    } catch (const ValidationError& e) {
        std::cerr << "error [validation]: " << e.what() << '\n';
        return validation;
    } catch (const DomainError& e) {
        std::cerr << "error [validation]: " << e.what() << '\n';
        return validation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return validation;
    }
}
