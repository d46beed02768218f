#pragma once

// End-to-end experiment wiring shared by the command-line tool and the
// acceptance suite: load a group, solve the complete structure and a filling
// sequence, pull the fillings back to the Dehn extension, and sample closed
// polygons from killed words.

#include "dehnext/fatpoly.hpp"
#include "dehnext/filling_solver.hpp"
#include "dehnext/json_io.hpp"
#include "dehnext/normal_form.hpp"

#include <array>
#include <cstdint>
#include <numbers>
#include <random>
#include <string>
#include <vector>

namespace dehnext {

/// Directory holding the bundled data files.
std::string data_dir();
/// `name` resolved against `base` unless absolute.
std::string resolve_path(const std::string& name, const std::string& base);

struct Tolerances {
    double trivial = 1e-6;
    double nontrivial_floor = 1e-3;
    double geometry = 1e-9;
    double solver = 1e-6;
};

struct ExperimentConfig {
    std::string group_file;
    std::string seed_file;
    std::string words_file;
    std::string out_dir;
    Slope slope{1, 0};
    std::int64_t denominator = 2;
    Slope base{1, 2};
    std::array<std::int64_t, 2> direction{1, 0};
    int count = 10;
    Tolerances tol;
    std::uint64_t rng_seed = 20261016;
    std::vector<Slope> exceptional;
    double theta = std::numbers::pi / 2.0;
    int polygon_target = 1000;
    double L_step = 0.05;

    io::json to_json() const;
    std::string hash() const;
};

/// Reads a config file; relative paths inside it resolve against its folder.
ExperimentConfig load_config(const std::string& path);
ExperimentConfig default_config();

struct NamedWord {
    std::string name;
    Word word;
};

std::vector<NamedWord> load_words(const std::string& path, const MarkedPresentation& extension);

struct Pipeline {
    ExperimentConfig config;
    MarkedPresentation group;
    DehnExtension ext;
    HolonomyState complete;
    std::vector<SequenceEntry> sequence;
    /// Pulled-back extension representation per solved sequence entry.
    std::vector<Representation> extension_reps;
    std::vector<PresentationMap> extension_maps;
    /// Index into `sequence` for each extension representation.
    std::vector<std::size_t> solved;
    MembershipOracle oracle;
    std::vector<Pointd> anchors;
};

SolverOptions solver_options(const ExperimentConfig& c);

/// Loads and solves the complete structure; the sequence is solved when
/// `with_sequence` is set.
Pipeline prepare(const ExperimentConfig& c, bool with_sequence);

/// Word in the extension killed by the filling at sequence entry `entry`:
/// the root times the lattice word (target - slope) / m.
Word killed_root_word(const Pipeline& p, std::size_t entry);

struct PolygonSample {
    std::size_t entry = 0;
    Word word;
    NormalFormResult normal_form;
    Polygon polygon;
    InscribedPolygon inscribed;
};

/// Closed polygons from products of conjugates of killed root words,
/// spread evenly across the solved entries.
std::vector<PolygonSample> sample_killed_polygons(const Pipeline& p, std::size_t target, std::uint64_t seed);

/// Smallest L on the grid {step, 2 step, ...} for which no polygon satisfies
/// both sides >= L/2 and angles >= pi - theta.
double grid_search_L(const std::vector<InscribedPolygon>& polys, double theta, double step);

}  // namespace dehnext
