#pragma once

// Numeric representations of presentations into SL(2,C): word evaluation,
// relator residuals, kill tests and the window-based stability classifier.

#include "dehnext/h3.hpp"
#include "dehnext/presentation.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace dehnext {

struct Representation {
    std::vector<Isometryd> images;
    double tolerance = 1e-9;
    /// Cleared when some residual exceeds `tolerance`.
    bool is_representation = true;
};

Isometryd evaluate(const Representation& rep, const Word& w);

struct ResidualReport {
    /// Per relator: entrywise distance of its image to the nearer of +-I.
    std::vector<double> relators;
    /// Per generator: |det - 1|.
    std::vector<double> determinants;

    double max() const;
};

ResidualReport residuals(const Representation& rep, const MarkedPresentation& pres);

/// Builds a representation and sets the flag from its residuals.
Representation make_representation(const MarkedPresentation& pres, std::vector<Isometryd> images,
                                   double tolerance = 1e-9);

struct KillResult {
    bool killed = false;
    /// Entrywise distance of the image to +-I.
    double margin = 0.0;
};

KillResult kills(const Representation& rep, const Word& w, double trivial_tol = 1e-6);

enum class Stability { eventually_trivial, eventually_nontrivial, undetermined };

const char* to_string(Stability s);

struct StabilityOptions {
    double trivial_tol = 1e-6;
    double nontrivial_floor = 1e-3;
    /// Share of the window the consistent tail must cover.
    double min_tail_fraction = 0.5;
};

struct WordStability {
    Stability verdict = Stability::undetermined;
    /// Distance to +-I at every index of the window.
    std::vector<double> margins;
    /// First index of the consistent tail.
    std::size_t tail_begin = 0;
};

struct StabilityVerdict {
    std::vector<WordStability> words;
    std::size_t window_begin = 0;
    std::size_t window_end = 0;
    /// Smallest tail margin among eventually nontrivial words.
    double margin = 0.0;
};

/// Classifies each word over reps[window_begin, window_end). A word's verdict
/// is the state of its longest consistent tail when that tail covers at least
/// `min_tail_fraction` of the window.
StabilityVerdict classify_stability(const std::vector<Representation>& reps, const std::vector<Word>& words,
                                    std::size_t window_begin, std::size_t window_end, StabilityOptions opt = {});

/// Pulls a representation of the target back along `map`.
Representation extension_image(const Representation& rep, const PresentationMap& map, double tolerance = 1e-6);

enum class DescendantRelation { first_dominates, second_dominates, incomparable, equivalent_on_sample };

const char* to_string(DescendantRelation r);

/// Sample-level comparison of kernels: first_dominates when every test word
/// killed by rep1 is also killed by rep2 (and not conversely).
DescendantRelation descendant_compare(const Representation& rep1, const Representation& rep2,
                                      const std::vector<Word>& test_words, double trivial_tol = 1e-6);

}  // namespace dehnext
