#include "fixture.hpp"

#include <doctest.h>

#include <random>

using namespace dehnext;
using dehnext::testing::bundled;

namespace {

Word random_word(std::mt19937_64& rng, int rank, int len) {
    std::uniform_int_distribution<int> letter(1, rank), sign(0, 1);
    Word w;
    for (int i = 0; i < len; ++i) w.push_back(sign(rng) ? letter(rng) : -letter(rng));
    return w;
}

std::vector<Representation> diagonal_family(const std::vector<double>& offsets) {
    std::vector<Representation> reps;
    for (double e : offsets) {
        const Complex<double> a = std::exp(Complex<double>(e, 0.0));
        reps.push_back({{Isometryd(a, 0.0, 0.0, 1.0 / a)}, 1e-9, true});
    }
    return reps;
}

}  // namespace

TEST_CASE("evaluation") {
    const Pipeline& p = bundled();
    const Representation& rep = p.complete.rep;
    CHECK(distance_to_identity(evaluate(rep, {})) == 0.0);
    CHECK(projective_distance(evaluate(rep, {1}), rep.images[0]) == 0.0);
    CHECK(distance_to_identity(evaluate(rep, {1, 2, -2, -1})) < 1e-12);
    CHECK_THROWS_AS(evaluate(rep, {3}), ValidationError);
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<int> len(0, 16);
    for (int i = 0; i < 300; ++i) {
        const Word a = random_word(rng, 2, len(rng)), b = random_word(rng, 2, len(rng));
        const Isometryd ab = evaluate(rep, concat(a, b)), prod = evaluate(rep, a) * evaluate(rep, b);
        CHECK(max_abs_entry<double>(ab.m - prod.m) <= 1e-10 * std::max(1.0, max_abs_entry<double>(prod.m)));
        const Isometryd w = evaluate(rep, a);
        CHECK(distance_to_identity(w * evaluate(rep, inverse(a))) <= 1e-12 * std::max(1.0, max_abs_entry<double>(w.m) * max_abs_entry<double>(w.m)));
    }
}

TEST_CASE("residuals") {
    const Pipeline& p = bundled();
    const auto r = residuals(p.complete.rep, p.group);
    CHECK(r.max() < 1e-9);
    CHECK(r.relators.size() == p.group.relators.size());
    CHECK(r.determinants.size() == p.group.rank());

    // Perturbing one entry by 1e-3 shows up in the residuals.
    std::mt19937_64 rng(2026);
    std::uniform_int_distribution<int> gen(0, 1), entry(0, 3);
    for (int i = 0; i < 20; ++i) {
        Representation bad = p.complete.rep;
        const int g = gen(rng), e = entry(rng);
        bad.images[g].m(e / 2, e % 2) += 1e-3;
        CHECK(residuals(bad, p.group).max() >= 1e-4);
        CHECK_FALSE(make_representation(p.group, bad.images).is_representation);
    }
    CHECK(make_representation(p.group, p.complete.rep.images).is_representation);
    CHECK_THROWS_AS(residuals(Representation{{Isometryd()}, 1e-9, true}, p.group), ValidationError);
}

TEST_CASE("kill tests") {
    const Pipeline& p = bundled();
    CHECK(kills(p.complete.rep, {}).killed);
    CHECK_FALSE(kills(p.complete.rep, p.group.cusps[0].meridian).killed);
    for (const auto& e : p.sequence) {
        REQUIRE(e.solved);
        const Word sw = slope_word(p.group, 0, e.slope);
        CHECK(kills(e.state.rep, sw).killed);
        // Negating generators does not change verdicts.
        Representation neg = e.state.rep;
        for (auto& g : neg.images) g = -g;
        CHECK(kills(neg, sw).killed);
        CHECK(kills(neg, p.group.cusps[0].meridian).killed == kills(e.state.rep, p.group.cusps[0].meridian).killed);
    }
}

TEST_CASE("stability on synthetic margins") {
    const Word g{1};
    // Nontrivial early, trivial for the last six of ten.
    auto reps = diagonal_family({1, 1, 1, 1, 0, 0, 0, 0, 0, 0});
    auto v = classify_stability(reps, {g, {}}, 0, reps.size());
    CHECK(v.words[0].verdict == Stability::eventually_trivial);
    CHECK(v.words[0].tail_begin == 4);
    CHECK(v.words[1].verdict == Stability::eventually_trivial);

    // Trivial at a single index only.
    reps = diagonal_family({1, 1, 0, 1, 1, 1, 1, 1, 1, 1});
    v = classify_stability(reps, {g}, 0, reps.size());
    CHECK(v.words[0].verdict == Stability::eventually_nontrivial);
    CHECK(v.margin > 1.0);

    // Alternating: no consistent tail.
    reps = diagonal_family({1, 0, 1, 0, 1, 0, 1, 0, 1, 0});
    CHECK(classify_stability(reps, {g}, 0, reps.size()).words[0].verdict == Stability::undetermined);

    // Margins inside the gap between the tolerances.
    reps = diagonal_family({1e-4, 1e-4, 1e-4, 1e-4});
    CHECK(classify_stability(reps, {g}, 0, reps.size()).words[0].verdict == Stability::undetermined);

    CHECK_THROWS_AS(classify_stability(reps, {g}, 2, 2), ValidationError);
    StabilityOptions bad;
    bad.trivial_tol = 1.0;
    CHECK_THROWS_AS(classify_stability(reps, {g}, 0, 1, bad), ValidationError);
}

TEST_CASE("stability along the filling sequence") {
    const Pipeline& p = bundled();
    std::vector<Representation> reps;
    for (const auto& e : p.sequence) reps.push_back(e.state.rep);
    const Word mu = p.group.cusps[0].meridian;
    const Word killed_once = slope_word(p.group, 0, p.sequence[2].slope);
    const auto v = classify_stability(reps, {{}, mu, killed_once}, 0, reps.size());
    CHECK(v.words[0].verdict == Stability::eventually_trivial);
    CHECK(v.words[1].verdict == Stability::eventually_nontrivial);
    CHECK(v.words[2].verdict == Stability::eventually_nontrivial);
    CHECK(v.words[2].margins[2] < 1e-6);
    for (std::size_t i = 0; i < reps.size(); ++i)
        if (i != 2) CHECK(v.words[2].margins[i] > 1e-3);
}

TEST_CASE("extension images") {
    const Pipeline& p = bundled();
    // The trivial extension returns the same representation.
    const auto triv = dehn_extension(p.group, {Slope(1, 0)}, {1});
    const auto map = extended_filling(triv, {Slope(3, 2)});
    const auto& rep = p.sequence[0].state.rep;
    const auto same = extension_image(rep, map);
    REQUIRE(same.images.size() == rep.images.size());
    for (std::size_t i = 0; i < rep.images.size(); ++i) CHECK(projective_distance(same.images[i], rep.images[i]) == 0.0);

    // Congruent targets (3,2) and (7,2) both satisfy the extension relators.
    for (std::size_t i : {std::size_t(0), std::size_t(2)}) {
        const auto& e = p.sequence[i];
        const auto ext_rep = extension_image(e.state.rep, extended_filling(p.ext, {e.slope}));
        CHECK(ext_rep.is_representation);
        CHECK(residuals(ext_rep, p.ext.presentation).max() < 1e-6);
    }
}

TEST_CASE("extension image residuals scale with input residuals") {
    const Pipeline& p = bundled();
    const auto& e = p.sequence[0];
    const auto map = extended_filling(p.ext, {e.slope});
    std::mt19937_64 rng(17);
    std::normal_distribution<double> gauss;
    Mat2<double> dir0, dir1;
    for (int k = 0; k < 4; ++k) {
        dir0(k / 2, k % 2) = {gauss(rng), gauss(rng)};
        dir1(k / 2, k % 2) = {gauss(rng), gauss(rng)};
    }
    std::vector<double> ratios;
    for (double eps : {1e-4, 1e-5, 1e-6}) {
        Representation pert = e.state.rep;
        pert.images[0].m += eps * dir0;
        pert.images[1].m += eps * dir1;
        Filling filled = dehn_filling(p.group, {e.slope});
        const double in = residuals(pert, filled.presentation).max();
        const double out = residuals(extension_image(pert, map), p.ext.presentation).max();
        ratios.push_back(out / in);
    }
    // Linear response: the ratio is stable across scales.
    CHECK(ratios[1] == doctest::Approx(ratios[0]).epsilon(0.05));
    CHECK(ratios[2] == doctest::Approx(ratios[1]).epsilon(0.05));
}

TEST_CASE("descendant comparison") {
    const Pipeline& p = bundled();
    std::vector<Word> tests{{}, p.group.cusps[0].meridian, p.group.cusps[0].longitude};
    for (const auto& e : p.sequence) tests.push_back(slope_word(p.group, 0, e.slope));
    const auto& a = p.sequence[1].state.rep;
    const auto& b = p.sequence[4].state.rep;
    CHECK(descendant_compare(a, a, tests) == DescendantRelation::equivalent_on_sample);
    CHECK(descendant_compare(p.complete.rep, a, tests) == DescendantRelation::first_dominates);
    CHECK(descendant_compare(a, p.complete.rep, tests) == DescendantRelation::second_dominates);
    CHECK(descendant_compare(a, b, tests) == DescendantRelation::incomparable);
}
