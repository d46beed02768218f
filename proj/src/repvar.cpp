#include "dehnext/repvar.hpp"

#include <algorithm>
#include <cstdlib>
#include <limits>

namespace dehnext {

Isometryd evaluate(const Representation& rep, const Word& w) {
    Isometryd out;
    for (int l : w) {
        const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
        if (l == 0 || i >= rep.images.size()) throw ValidationError("word uses undeclared generator");
        out = out * (l > 0 ? rep.images[i] : rep.images[i].inverse());
    }
    return out;
}

double ResidualReport::max() const {
    double m = 0.0;
    for (double r : relators) m = std::max(m, r);
    for (double r : determinants) m = std::max(m, r);
    return m;
}

ResidualReport residuals(const Representation& rep, const MarkedPresentation& pres) {
    if (rep.images.size() != pres.rank()) throw ValidationError("generator count differs from presentation rank");
    ResidualReport out;
    for (const auto& r : pres.relators) out.relators.push_back(distance_to_identity(evaluate(rep, r)));
    for (const auto& g : rep.images) out.determinants.push_back(std::abs(g.det() - 1.0));
    return out;
}

Representation make_representation(const MarkedPresentation& pres, std::vector<Isometryd> images, double tolerance) {
    Representation rep{std::move(images), tolerance, true};
    rep.is_representation = residuals(rep, pres).max() <= tolerance;
    return rep;
}

KillResult kills(const Representation& rep, const Word& w, double trivial_tol) {
    const double d = distance_to_identity(evaluate(rep, w));
    return {d <= trivial_tol, d};
}

const char* to_string(Stability s) {
    switch (s) {
        case Stability::eventually_trivial: return "eventually_trivial";
        case Stability::eventually_nontrivial: return "eventually_nontrivial";
        case Stability::undetermined: return "undetermined";
    }
    return "undetermined";
}

StabilityVerdict classify_stability(const std::vector<Representation>& reps, const std::vector<Word>& words,
                                    std::size_t window_begin, std::size_t window_end, StabilityOptions opt) {
    if (window_begin >= window_end || window_end > reps.size()) throw ValidationError("empty or invalid window");
    if (!(opt.trivial_tol < opt.nontrivial_floor)) throw ValidationError("trivial tolerance must lie below the floor");
    StabilityVerdict out;
    out.window_begin = window_begin;
    out.window_end = window_end;
    out.margin = std::numeric_limits<double>::infinity();
    const std::size_t len = window_end - window_begin;
    for (const auto& w : words) {
        WordStability ws;
        std::vector<Stability> state;
        for (std::size_t n = window_begin; n < window_end; ++n) {
            const double d = kills(reps[n], w, opt.trivial_tol).margin;
            ws.margins.push_back(d);
            state.push_back(d <= opt.trivial_tol      ? Stability::eventually_trivial
                            : d >= opt.nontrivial_floor ? Stability::eventually_nontrivial
                                                        : Stability::undetermined);
        }
        std::size_t tail = len;
        while (tail > 0 && state[tail - 1] == state.back()) --tail;
        ws.tail_begin = window_begin + tail;
        const double covered = static_cast<double>(len - tail) / static_cast<double>(len);
        if (state.back() != Stability::undetermined && covered >= opt.min_tail_fraction) ws.verdict = state.back();
        if (ws.verdict == Stability::eventually_nontrivial)
            for (std::size_t i = tail; i < len; ++i) out.margin = std::min(out.margin, ws.margins[i]);
        out.words.push_back(std::move(ws));
    }
    if (!std::isfinite(out.margin)) out.margin = 0.0;
    return out;
}

Representation extension_image(const Representation& rep, const PresentationMap& map, double tolerance) {
    std::vector<Isometryd> images;
    images.reserve(map.images.size());
    for (const auto& w : map.images) images.push_back(evaluate(rep, w));
    return make_representation(map.source, std::move(images), tolerance);
}

const char* to_string(DescendantRelation r) {
    switch (r) {
        case DescendantRelation::first_dominates: return "first_dominates";
        case DescendantRelation::second_dominates: return "second_dominates";
        case DescendantRelation::incomparable: return "incomparable";
        case DescendantRelation::equivalent_on_sample: return "equivalent_on_sample";
    }
    return "incomparable";
}

DescendantRelation descendant_compare(const Representation& rep1, const Representation& rep2,
                                      const std::vector<Word>& test_words, double trivial_tol) {
    bool first_in_second = true, second_in_first = true;
    for (const auto& w : test_words) {
        const bool k1 = kills(rep1, w, trivial_tol).killed;
        const bool k2 = kills(rep2, w, trivial_tol).killed;
        if (k1 && !k2) first_in_second = false;
        if (k2 && !k1) second_in_first = false;
    }
    if (first_in_second && second_in_first) return DescendantRelation::equivalent_on_sample;
    if (first_in_second) return DescendantRelation::first_dominates;
    if (second_in_first) return DescendantRelation::second_dominates;
    return DescendantRelation::incomparable;
}

}  // namespace dehnext
