#include "dehnext/h3.hpp"

#include <doctest.h>

#include <random>

using namespace dehnext;
using C = Complex<double>;

namespace {

constexpr double pi = std::numbers::pi;

struct Rng {
    std::mt19937_64 gen{12345};
    std::normal_distribution<double> gauss{0.0, 1.0};
    std::uniform_real_distribution<double> unit{0.0, 1.0};

    Pointd point() { return Pointd({2.0 * unit(gen) - 1.0, 2.0 * unit(gen) - 1.0}, std::exp(2.0 * unit(gen) - 1.0)); }
    C cplx() { return {gauss(gen), gauss(gen)}; }
    Isometryd isometry() {
        for (;;) {
            const C a = cplx(), b = cplx(), c = cplx();
            if (std::abs(a) > 0.3) return Isometryd(a, b, c, (1.0 + b * c) / a);
        }
    }
};

// Arc length of the Euclidean half circle through p and q, integrated with
// Simpson's rule from the metric ds = |dx| / h.
double integrated_length(const Pointd& p, const Pointd& q) {
    const double x1 = p.horizontal.real(), x2 = q.horizontal.real();
    const double c = (x2 * x2 + q.height * q.height - x1 * x1 - p.height * p.height) / (2.0 * (x2 - x1));
    const double r = std::hypot(x1 - c, p.height);
    const double f1 = std::atan2(p.height, x1 - c), f2 = std::atan2(q.height, x2 - c);
    const int n = 20000;
    const double step = (f2 - f1) / n;
    double sum = 0.0;
    for (int i = 0; i <= n; ++i) {
        const double f = f1 + i * step;
        const double w = (i == 0 || i == n) ? 1.0 : (i % 2 ? 4.0 : 2.0);
        // |dx/df| = r, h = r sin f
        sum += w * r / (r * std::sin(f));
    }
    return std::abs(sum * step / 3.0);
}

bool near_point(const Pointd& a, const Pointd& b, double tol) { return distance(a, b) <= tol; }

}  // namespace

TEST_CASE("distance examples") {
    const Pointd o = Pointd::origin();
    CHECK(distance(o, o) == 0.0);
    CHECK(distance(o, Pointd(0.0, std::exp(1.0))) == doctest::Approx(1.0).epsilon(1e-14));
    const Pointd q({1.0, 0.0}, 1.0);
    CHECK(distance(o, q) == doctest::Approx(std::acosh(1.5)).epsilon(1e-14));
    CHECK(distance(o, q) == doctest::Approx(integrated_length(o, q)).epsilon(1e-10));
}

TEST_CASE("distance agrees with integrated arc length on random pairs") {
    Rng rng;
    for (int i = 0; i < 50; ++i) {
        Pointd p = rng.point(), q = rng.point();
        p.horizontal = {p.horizontal.real(), 0.0};
        q.horizontal = {q.horizontal.real() + 0.5, 0.0};
        CHECK(distance(p, q) == doctest::Approx(integrated_length(p, q)).epsilon(1e-9));
    }
}

TEST_CASE("invalid points are rejected") {
    CHECK_THROWS_AS(Pointd(0.0, 0.0), DomainError);
    CHECK_THROWS_AS(Pointd(0.0, -1.0), DomainError);
    CHECK_THROWS_AS(Pointd({std::nan(""), 0.0}, 1.0), DomainError);
}

TEST_CASE("Mobius action examples") {
    const Pointd o = Pointd::origin();
    CHECK(near_point(mobius(Isometryd::identity(), o), o, 1e-15));
    CHECK(near_point(mobius(Isometryd(1.0, 1.0, 0.0, 1.0), o), Pointd(1.0, 1.0), 1e-15));
    CHECK(near_point(mobius(Isometryd(std::sqrt(2.0), 0.0, 0.0, 1.0 / std::sqrt(2.0)), o), Pointd(0.0, 2.0), 1e-14));
}

TEST_CASE("right action composes and inverts the Mobius action") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        const Pointd p = rng.point();
        const Isometryd g = rng.isometry(), h = rng.isometry();
        CHECK(near_point(apply(apply(p, g), h), apply(p, g * h), 1e-9));
        CHECK(near_point(apply(mobius(g, p), g), p, 1e-9));
        CHECK(distance(apply(p, g), apply(rng.point(), g)) >= 0.0);
    }
}

TEST_CASE("isometry invariance of distance") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        const Pointd p = rng.point(), q = rng.point();
        const Isometryd g = rng.isometry();
        const double d = distance(p, q);
        CHECK(std::abs(distance(apply(p, g), apply(q, g)) - d) <= 1e-9 * std::max(1.0, d));
    }
}

TEST_CASE("Gromov product examples and identities") {
    Rng rng;
    const Pointd p = Pointd::origin(), q(0.0, std::exp(3.0));
    CHECK(gromov_product(p, p, q) == doctest::Approx(0.0));
    const Pointd mid = Segmentd{p, q}.at(1.25);
    CHECK(gromov_product(p, q, mid) == doctest::Approx(distance(p, mid)).epsilon(1e-12));
    for (int i = 0; i < 1000; ++i) {
        const Pointd a = rng.point(), b = rng.point(), c = rng.point();
        CHECK(gromov_product(a, b, c) == gromov_product(a, c, b));
        const auto tri = triangle_tangent_data(a, b, c);
        // The tangent point on [a, b] sits at distance <b, c>_a from a.
        CHECK(distance(a, tri.tangent_points[0]) == doctest::Approx(gromov_product(a, b, c)).epsilon(1e-9));
        CHECK(distance(b, tri.tangent_points[0]) == doctest::Approx(gromov_product(b, a, c)).epsilon(1e-9));
    }
}

TEST_CASE("angle examples") {
    const Pointd v = Pointd::origin();
    CHECK(angle_at(v, Pointd(0.0, 0.5), Pointd(0.0, 2.0)) == doctest::Approx(pi).epsilon(1e-12));
    CHECK(angle_at(v, Pointd(0.0, 2.0), Pointd(0.0, 2.0)) == doctest::Approx(0.0));
    // Initial velocities in the upper half-space: towards (0, e) is straight
    // up; towards (1, 1) along the half circle centred at 1/2 the initial
    // direction is (1, 1/2) normalised, giving an angle of atan(2).
    const double a = angle_at(v, Pointd(0.0, std::exp(1.0)), Pointd(1.0, 1.0));
    CHECK(a > 0.0);
    CHECK(a < pi);
    CHECK(a == doctest::Approx(std::atan2(1.0, 0.5)).epsilon(1e-12));
    CHECK_THROWS_AS(angle_at(v, v, Pointd(1.0, 1.0)), DomainError);
}

TEST_CASE("angles obey the hyperbolic law of cosines") {
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        const Pointd p = rng.point(), q = rng.point(), r = rng.point();
        const double a = distance(p, q), b = distance(p, r), c = distance(q, r);
        if (a < 1e-3 || b < 1e-3) continue;
        const double law = (std::cosh(a) * std::cosh(b) - std::cosh(c)) / (std::sinh(a) * std::sinh(b));
        CHECK(std::cos(angle_at(p, q, r)) == doctest::Approx(law).epsilon(1e-9));
    }
}

TEST_CASE("midpoints") {
    const auto m = midpoint(Segmentd{Pointd::origin(), Pointd(0.0, std::exp(2.0))});
    CHECK_FALSE(m.degenerate);
    CHECK(near_point(m.point, Pointd(0.0, std::exp(1.0)), 1e-14));
    const auto z = midpoint(Segmentd{Pointd::origin(), Pointd::origin()});
    CHECK(z.degenerate);
    Rng rng;
    for (int i = 0; i < 1000; ++i) {
        const Pointd p = rng.point(), q = rng.point();
        const auto mid = midpoint(Segmentd{p, q});
        CHECK(std::abs(distance(p, mid.point) - distance(mid.point, q)) <= 1e-10);
    }
}

TEST_CASE("midpoints stay accurate far from the basepoint") {
    // Small heights and large horizontal offsets.
    const Pointd p({1e4, -3e3}, 1e-3), q({1e4 + 0.05, -3e3 + 0.02}, 3e-3);
    const auto mid = midpoint(Segmentd{p, q});
    CHECK(std::abs(distance(p, mid.point) - distance(mid.point, q)) <= 1e-9);
    CHECK(distance(p, mid.point) == doctest::Approx(distance(p, q) / 2.0).epsilon(1e-9));
}

TEST_CASE("tangent data") {
    // Equilateral by construction: three points on a circle about the
    // vertical axis at equal angles.
    std::array<Pointd, 3> v;
    for (int i = 0; i < 3; ++i) {
        const double ang = 2.0 * pi * i / 3.0;
        v[i] = Pointd({0.8 * std::cos(ang), 0.8 * std::sin(ang)}, 0.6);
    }
    const auto tri = triangle_tangent_data(v[0], v[1], v[2]);
    CHECK(tri.tangent_lengths[0] == doctest::Approx(tri.tangent_lengths[1]).epsilon(1e-12));
    CHECK(tri.tangent_lengths[1] == doctest::Approx(tri.tangent_lengths[2]).epsilon(1e-12));

    Rng rng;
    const double delta = Constantsd::delta();
    CHECK(delta == doctest::Approx(std::log(std::sqrt(3.0))).epsilon(1e-15));
    CHECK(2.0 * delta == doctest::Approx(1.0986122886681098).epsilon(1e-14));
    for (int i = 0; i < 10000; ++i) {
        const Pointd a = rng.point(), b = rng.point(), c = rng.point();
        const auto t = triangle_tangent_data(a, b, c);
        for (int k = 0; k < 3; ++k)
            CHECK(t.tangent_lengths[k] ==
                  doctest::Approx(std::max(0.0, gromov_product(k == 0 ? a : k == 1 ? b : c, k == 0 ? b : k == 1 ? c : a,
                                                               k == 0 ? c : k == 1 ? a : b)))
                      .epsilon(1e-12));
        CHECK(t.inradius <= delta);
        CHECK(t.max_gap <= 2.0 * delta);
    }
}

TEST_CASE("inradius approaches delta for large triangles") {
    std::array<Pointd, 3> v;
    for (int i = 0; i < 3; ++i) {
        const double ang = 2.0 * pi * i / 3.0;
        v[i] = Pointd({std::cos(ang), std::sin(ang)}, 1e-7);
    }
    const auto tri = triangle_tangent_data(v[0], v[1], v[2]);
    CHECK(tri.inradius <= Constantsd::delta());
    CHECK(tri.inradius == doctest::Approx(Constantsd::delta()).epsilon(1e-6));
}

TEST_CASE("classification examples") {
    CHECK(classify(Isometryd(1.0, 1.0, 0.0, 1.0)).type == IsometryType::parabolic);
    CHECK(classify(Isometryd::identity()).type == IsometryType::identity);
    CHECK(classify(-Isometryd::identity()).type == IsometryType::identity);
    const auto lox = classify(Isometryd(2.0, 0.0, 0.0, 0.5));
    CHECK(lox.type == IsometryType::loxodromic);
    CHECK(lox.complex_length.real() == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-14));
    const C e = std::exp(C(0.0, pi / 3.0));
    const auto ell = classify(Isometryd(e, 0.0, 0.0, 1.0 / e));
    CHECK(ell.type == IsometryType::elliptic);
    CHECK(ell.complex_length.imag() == doctest::Approx(2.0 * pi / 3.0).epsilon(1e-12));
}

TEST_CASE("classification recovers rotation angles") {
    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const double angle = 0.01 + (pi - 0.02) * rng.unit(rng.gen);
        const auto from = BoundaryPointd::finite(rng.cplx()), to = BoundaryPointd::finite(rng.cplx() + 3.0);
        const auto c = classify(elliptic_about_axis(from, to, angle));
        CHECK(c.type == IsometryType::elliptic);
        CHECK(c.complex_length.imag() == doctest::Approx(angle).epsilon(1e-9));
    }
}

TEST_CASE("fixed points") {
    auto par = fixed_points(Isometryd(1.0, 1.0, 0.0, 1.0));
    REQUIRE(par.size() == 1);
    CHECK(par[0].infinite);
    auto lox = fixed_points(Isometryd(2.0, 0.0, 0.0, 0.5));
    REQUIRE(lox.size() == 2);
    CHECK(lox[0].infinite);
    CHECK(std::abs(lox[1].value) < 1e-15);
    CHECK_THROWS_AS(fixed_points(Isometryd::identity()), DomainError);

    Rng rng;
    for (int i = 0; i < 200; ++i) {
        const Isometryd h = rng.isometry();
        const Isometryd g = h.inverse() * Isometryd(2.0, 0.0, 0.0, 0.5) * h;
        const auto fps = fixed_points(g);
        REQUIRE(fps.size() == 2);
        const auto e0 = mobius(h.inverse(), BoundaryPointd::finite(0.0));
        const auto ei = mobius(h.inverse(), BoundaryPointd::at_infinity());
        const bool direct = approx_equal(fps[0], e0, 1e-8) && approx_equal(fps[1], ei, 1e-8);
        const bool swapped = approx_equal(fps[0], ei, 1e-8) && approx_equal(fps[1], e0, 1e-8);
        CHECK((direct || swapped));
    }
}

TEST_CASE("rotations about axes") {
    const auto zero = BoundaryPointd::finite(0.0), inf = BoundaryPointd::at_infinity();
    CHECK(projective_distance(elliptic_about_axis(zero, inf, pi), Isometryd(C(0, 1), 0.0, 0.0, C(0, -1))) < 1e-15);
    CHECK(distance_to_identity(elliptic_about_axis(zero, inf, 2.0 * pi)) < 1e-15);
    const auto r = elliptic_about_axis(BoundaryPointd::finite(1.0), BoundaryPointd::finite(-1.0), 2.0 * pi / 3.0);
    CHECK(distance_to_identity(r * r * r) < 1e-10);
    // The axis is fixed pointwise.
    const Pointd on_axis(0.0, 1.0);
    CHECK(distance(mobius(r, on_axis), on_axis) < 1e-12);
}

TEST_CASE("loxodromics translate along their axis towards the attracting end") {
    const auto from = BoundaryPointd::finite(C(1, 2)), to = BoundaryPointd::finite(C(-3, 0.5));
    const auto g = loxodromic_about_axis(from, to, C(0.7, 0.3));
    const auto cl = classify(g);
    CHECK(cl.complex_length.real() == doctest::Approx(0.7).epsilon(1e-12));
    const auto frame = frame_for_axis(from, to);
    CHECK(approx_equal(mobius(frame, BoundaryPointd::finite(0.0)), from, 1e-12));
    CHECK(approx_equal(mobius(frame, BoundaryPointd::at_infinity()), to, 1e-12));
    const Pointd on_axis = mobius(frame, Pointd::origin());
    CHECK(distance(on_axis, mobius(g, on_axis)) == doctest::Approx(0.7).epsilon(1e-10));
}

TEST_CASE("ray endpoints") {
    CHECK(ray_endpoint(Pointd::origin(), Pointd(0.0, 2.0)).infinite);
    CHECK(std::abs(ray_endpoint(Pointd::origin(), Pointd(0.0, 0.5)).value) < 1e-15);
    Rng rng;
    for (int i = 0; i < 500; ++i) {
        const Pointd p = rng.point(), q = rng.point();
        const auto end = ray_endpoint(p, q);
        REQUIRE_FALSE(end.infinite);
        // Far along the ray, points converge to the endpoint.
        const Pointd far = geodesic_point(p, q, 30.0);
        CHECK(std::abs(far.horizontal - end.value) < 1e-8);
        CHECK(far.height < 1e-8);
    }
}

TEST_CASE("horoballs") {
    const auto hi = horoball_through(BoundaryPointd::at_infinity(), Pointd::origin());
    CHECK(horoball_contains(hi, Pointd(5.0, 2.0)));
    CHECK_FALSE(horoball_contains(hi, Pointd(0.0, 0.5)));
    // z -> -1/z exchanges the horoballs at infinity and at 0.
    const auto h0 = horoball_through(BoundaryPointd::finite(0.0), Pointd::origin());
    CHECK(h0.parameter == doctest::Approx(1.0));
    const Isometryd inv(0.0, -1.0, 1.0, 0.0);
    Rng rng;
    int inside = 0;
    for (int i = 0; i < 2000; ++i) {
        const Pointd p({4.0 * rng.unit(rng.gen) - 2.0, 4.0 * rng.unit(rng.gen) - 2.0}, 3.0 * rng.unit(rng.gen) + 1e-3);
        if (std::abs(p.height - 1.0) < 1e-9) continue;
        const bool a = horoball_contains(hi, p);
        CHECK(a == horoball_contains(h0, mobius(inv, p)));
        inside += a;
    }
    CHECK(inside > 0);
}

TEST_CASE("a ball of radius D about a point at depth D lies in the horoball") {
    Rng rng;
    for (int i = 0; i < 100; ++i) {
        const Isometryd g = rng.isometry();
        const double D = 0.5 + 3.0 * rng.unit(rng.gen);
        const auto base = mobius(g, BoundaryPointd::at_infinity());
        const auto ball = horoball_through(base, mobius(g, Pointd::origin()));
        const Pointd centre = mobius(g, Pointd(0.0, std::exp(D)));
        for (int k = 0; k < 50; ++k) {
            const Pointd towards = mobius(g, Pointd(rng.cplx(), std::exp(rng.gauss(rng.gen))));
            if (distance(centre, towards) < 1e-6) continue;
            const Pointd sample = geodesic_point(centre, towards, D * rng.unit(rng.gen));
            CHECK(distance(sample, centre) <= D + 1e-9);
            CHECK(horoball_contains(ball, sample, 1e-9));
        }
        // The lowest point of the ball is on the horosphere.
        CHECK(horoball_contains(ball, mobius(g, Pointd(0.0, 1.0 + 1e-12)), 1e-9));
        CHECK_FALSE(horoball_contains(ball, mobius(g, Pointd(0.0, 0.9)), 1e-9));
    }
}

TEST_CASE("segment distance") {
    // Vertical segments at horizontal separation 10, heights in [1, e]:
    // the closest pair is the top pair.
    const Segmentd s1{Pointd(0.0, 1.0), Pointd(0.0, std::exp(1.0))};
    const Segmentd s2{Pointd(10.0, 1.0), Pointd(10.0, std::exp(1.0))};
    double brute = std::numeric_limits<double>::infinity();
    const int n = 400;
    for (int i = 0; i <= n; ++i)
        for (int j = 0; j <= n; ++j)
            brute = std::min(brute, distance(s1.at(s1.length() * i / n), s2.at(s2.length() * j / n)));
    const auto sd = segment_distance(s1, s2);
    CHECK(sd.distance == doctest::Approx(brute).epsilon(1e-9));
    CHECK(sd.distance == doctest::Approx(distance(s1.end, s2.end)).epsilon(1e-12));
    CHECK(segment_distance(s1, s1).distance == doctest::Approx(0.0));

    Rng rng;
    for (int i = 0; i < 100; ++i) {
        const Segmentd a{rng.point(), rng.point()}, b{rng.point(), rng.point()};
        double best = std::numeric_limits<double>::infinity();
        const int m = 200;
        for (int k = 0; k <= m; ++k)
            for (int l = 0; l <= m; ++l)
                best = std::min(best, distance(a.at(a.length() * k / m), b.at(b.length() * l / m)));
        const auto r = segment_distance(a, b);
        CHECK(r.distance <= best + 1e-12);
        CHECK(r.distance >= best - 1e-3);
        CHECK(distance(a.at(r.s), b.at(r.t)) == doctest::Approx(r.distance).epsilon(1e-12));
    }
}
