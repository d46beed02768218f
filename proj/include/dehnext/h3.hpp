#pragma once

// Geometry of hyperbolic 3-space in the upper half-space model and of its
// orientation-preserving isometries, realised as 2x2 complex unimodular
// matrices. Everything here is templated on the real scalar type and is
// header-only; `Pointd`, `Isometryd`, ... are the double-precision aliases.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <vector>

namespace dehnext {

template <typename Scalar>
using Complex = std::complex<Scalar>;

template <typename Scalar>
using Mat2 = Eigen::Matrix<std::complex<Scalar>, 2, 2>;

/// Raised when a geometric operation receives inputs outside its domain
/// (nonpositive heights, coincident points where distinct ones are needed).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

template <typename Scalar>
struct GeometryConstants {
    /// Supremum of the inradius of a hyperbolic triangle, attained by ideal
    /// triangles: arccosh(2/sqrt(3)) = ln sqrt(3).
    static Scalar delta() { return std::acosh(Scalar(2) / std::sqrt(Scalar(3))); }
    /// Minimum separation between distinct thin-part lifts: 1 + 5 delta.
    static Scalar isolation() { return Scalar(1) + Scalar(5) * delta(); }
};

template <typename Scalar>
struct Point {
    Complex<Scalar> horizontal{};
    Scalar height{1};

    Point() = default;
    Point(Complex<Scalar> z, Scalar h) : horizontal(z), height(h) {
        if (!(h > Scalar(0)) || !std::isfinite(h) || !std::isfinite(z.real()) || !std::isfinite(z.imag()))
            throw DomainError("point of H^3 needs a finite positive height");
    }

    /// The conventional basepoint O = (0, 1).
    static Point origin() { return Point(Complex<Scalar>(0), Scalar(1)); }
};

/// A point of the sphere at infinity: a complex number or infinity.
template <typename Scalar>
struct BoundaryPoint {
    Complex<Scalar> value{};
    bool infinite = false;

    static BoundaryPoint at_infinity() { return {Complex<Scalar>(0), true}; }
    static BoundaryPoint finite(Complex<Scalar> z) { return {z, false}; }
};

template <typename Scalar>
bool approx_equal(const BoundaryPoint<Scalar>& a, const BoundaryPoint<Scalar>& b, Scalar tol) {
    if (a.infinite || b.infinite) return a.infinite == b.infinite;
    return std::abs(a.value - b.value) <= tol * std::max(Scalar(1), std::abs(a.value));
}

template <typename Scalar>
struct Isometry {
    Mat2<Scalar> m = Mat2<Scalar>::Identity();

    Isometry() = default;
    explicit Isometry(const Mat2<Scalar>& mat) : m(mat) {}
    Isometry(Complex<Scalar> a, Complex<Scalar> b, Complex<Scalar> c, Complex<Scalar> d) {
        m << a, b, c, d;
    }

    static Isometry identity() { return Isometry(); }

    Complex<Scalar> a() const { return m(0, 0); }
    Complex<Scalar> b() const { return m(0, 1); }
    Complex<Scalar> c() const { return m(1, 0); }
    Complex<Scalar> d() const { return m(1, 1); }

    Complex<Scalar> det() const { return m.determinant(); }
    Complex<Scalar> trace() const { return m.trace(); }

    /// Adjugate; the inverse for unimodular matrices.
    Isometry inverse() const { return Isometry(d(), -b(), -c(), a()); }

    Isometry operator*(const Isometry& o) const { return Isometry(Mat2<Scalar>(m * o.m)); }
    Isometry operator-() const { return Isometry(Mat2<Scalar>(-m)); }

    bool is_unimodular(Scalar tol) const { return std::abs(det() - Complex<Scalar>(1)) <= tol; }
};

template <typename Scalar>
Scalar max_abs_entry(const Mat2<Scalar>& m) {
    return m.cwiseAbs().maxCoeff();
}

/// Entrywise max distance between g and h, minimised over the global sign.
template <typename Scalar>
Scalar projective_distance(const Isometry<Scalar>& g, const Isometry<Scalar>& h) {
    return std::min(max_abs_entry<Scalar>(g.m - h.m), max_abs_entry<Scalar>(g.m + h.m));
}

/// Entrywise max distance from g to the nearer of +I and -I.
template <typename Scalar>
Scalar distance_to_identity(const Isometry<Scalar>& g) {
    return projective_distance(g, Isometry<Scalar>::identity());
}

/// Sign s in {+1,-1} such that g is closest to s*I.
template <typename Scalar>
int nearest_identity_sign(const Isometry<Scalar>& g) {
    const Mat2<Scalar> id = Mat2<Scalar>::Identity();
    return max_abs_entry<Scalar>(g.m - id) <= max_abs_entry<Scalar>(g.m + id) ? 1 : -1;
}

// ---------------------------------------------------------------------------
// Distances and the hyperboloid model (used internally for geodesics).

template <typename Scalar>
Scalar cosh_distance(const Point<Scalar>& p, const Point<Scalar>& q) {
    const Scalar dz2 = std::norm(p.horizontal - q.horizontal);
    const Scalar dh = p.height - q.height;
    return Scalar(1) + (dz2 + dh * dh) / (Scalar(2) * p.height * q.height);
}

/// Hyperbolic distance, cosh d = 1 + (|dz|^2 + dh^2) / (2 h1 h2), evaluated
/// through 2 asinh(...) so that short distances keep full precision.
template <typename Scalar>
Scalar distance(const Point<Scalar>& p, const Point<Scalar>& q) {
    const Scalar dz2 = std::norm(p.horizontal - q.horizontal);
    const Scalar dh = p.height - q.height;
    const Scalar chord = std::sqrt(dz2 + dh * dh) / (Scalar(2) * std::sqrt(p.height * q.height));
    return Scalar(2) * std::asinh(chord);
}

template <typename Scalar>
using Vec4 = Eigen::Matrix<Scalar, 4, 1>;

/// Bilinear form of signature (+,-,-,-).
template <typename Scalar>
Scalar minkowski(const Vec4<Scalar>& x, const Vec4<Scalar>& y) {
    return x(0) * y(0) - x(1) * y(1) - x(2) * y(2) - x(3) * y(3);
}

template <typename Scalar>
Vec4<Scalar> to_hyperboloid(const Point<Scalar>& p) {
    const Scalar h = p.height;
    const Scalar r2 = std::norm(p.horizontal) + h * h;
    Vec4<Scalar> x;
    x << (Scalar(1) + r2) / (Scalar(2) * h), p.horizontal.real() / h, p.horizontal.imag() / h,
        (r2 - Scalar(1)) / (Scalar(2) * h);
    return x;
}

template <typename Scalar>
Point<Scalar> from_hyperboloid(const Vec4<Scalar>& x) {
    const Scalar h = Scalar(1) / (x(0) - x(3));
    return Point<Scalar>(Complex<Scalar>(x(1) * h, x(2) * h), h);
}

/// Unit tangent vector at p pointing towards q (hyperboloid coordinates).
template <typename Scalar>
Vec4<Scalar> unit_tangent(const Point<Scalar>& p, const Point<Scalar>& q) {
    const Vec4<Scalar> x = to_hyperboloid(p);
    const Vec4<Scalar> y = to_hyperboloid(q);
    const Scalar d = distance(p, q);
    if (d == Scalar(0)) throw DomainError("tangent direction between coincident points");
    return (y - std::cosh(d) * x) / std::sinh(d);
}

namespace detail {

// The similarity z -> (z - z0) / h0 sends `base` to the origin. Working in
// those coordinates keeps the hyperboloid model well conditioned for points
// with small heights or large horizontal parts.
template <typename Scalar>
Point<Scalar> to_local(const Point<Scalar>& base, const Point<Scalar>& p) {
    return Point<Scalar>((p.horizontal - base.horizontal) / base.height, p.height / base.height);
}

template <typename Scalar>
Point<Scalar> from_local(const Point<Scalar>& base, const Point<Scalar>& p) {
    return Point<Scalar>(base.horizontal + p.horizontal * base.height, p.height * base.height);
}

}  // namespace detail

/// Point at signed arc length t from p along the geodesic through q.
template <typename Scalar>
Point<Scalar> geodesic_point(const Point<Scalar>& p, const Point<Scalar>& q, Scalar t) {
    const Point<Scalar> o = Point<Scalar>::origin();
    const Vec4<Scalar> x = to_hyperboloid(o);
    const Vec4<Scalar> v = unit_tangent(o, detail::to_local(p, q));
    return detail::from_local(p, from_hyperboloid<Scalar>(std::cosh(t) * x + std::sinh(t) * v));
}

template <typename Scalar>
struct GeodesicSegment {
    Point<Scalar> start;
    Point<Scalar> end;

    Scalar length() const { return distance(start, end); }
    /// Point at arc length t from `start`; t is clamped to [0, length].
    Point<Scalar> at(Scalar t) const {
        const Scalar len = length();
        if (len == Scalar(0)) return start;
        return geodesic_point(start, end, std::clamp(t, Scalar(0), len));
    }
};

template <typename Scalar>
struct MidpointResult {
    Point<Scalar> point;
    bool degenerate = false;
};

template <typename Scalar>
MidpointResult<Scalar> midpoint(const GeodesicSegment<Scalar>& s) {
    const Scalar len = s.length();
    if (len == Scalar(0)) return {s.start, true};
    const Vec4<Scalar> x = to_hyperboloid(Point<Scalar>::origin());
    const Vec4<Scalar> y = to_hyperboloid(detail::to_local(s.start, s.end));
    // The normalised sum of the endpoints is the hyperbolic midpoint.
    const Vec4<Scalar> sum = x + y;
    return {detail::from_local(s.start, from_hyperboloid<Scalar>(sum / std::sqrt(minkowski(sum, sum)))), false};
}

template <typename Scalar>
Scalar gromov_product(const Point<Scalar>& p, const Point<Scalar>& q, const Point<Scalar>& q2) {
    return (distance(p, q) + distance(p, q2) - distance(q, q2)) / Scalar(2);
}

/// Angle at `vertex` between the geodesics towards a and b. Equal to the
/// hyperbolic law of cosines value; computed from unit tangent vectors so
/// that angles near 0 and pi are accurate.
template <typename Scalar>
Scalar angle_at(const Point<Scalar>& vertex, const Point<Scalar>& a, const Point<Scalar>& b) {
    if (distance(vertex, a) == Scalar(0) || distance(vertex, b) == Scalar(0))
        throw DomainError("angle_at needs points distinct from the vertex");
    const Point<Scalar> o = Point<Scalar>::origin();
    const Vec4<Scalar> ta = unit_tangent(o, detail::to_local(vertex, a));
    const Vec4<Scalar> tb = unit_tangent(o, detail::to_local(vertex, b));
    const Vec4<Scalar> diff = ta - tb;
    const Scalar chord = std::sqrt(std::max(Scalar(0), -minkowski(diff, diff)));
    return Scalar(2) * std::asin(std::min(Scalar(1), chord / Scalar(2)));
}

template <typename Scalar>
struct TriangleTangentData {
    /// Distance from vertex i to both of its adjacent tangent points.
    std::array<Scalar, 3> tangent_lengths{};
    /// Tangent points on the sides [p1,p2], [p2,p3], [p3,p1].
    std::array<Point<Scalar>, 3> tangent_points{};
    Scalar inradius{};
    /// Largest distance between two tangent points.
    Scalar max_gap{};
};

template <typename Scalar>
TriangleTangentData<Scalar> triangle_tangent_data(const Point<Scalar>& p1, const Point<Scalar>& p2,
                                                  const Point<Scalar>& p3) {
    const std::array<Point<Scalar>, 3> v{p1, p2, p3};
    TriangleTangentData<Scalar> out;
    for (int i = 0; i < 3; ++i)
        out.tangent_lengths[i] = std::max(Scalar(0), gromov_product(v[i], v[(i + 1) % 3], v[(i + 2) % 3]));
    for (int i = 0; i < 3; ++i) {
        const GeodesicSegment<Scalar> side{v[i], v[(i + 1) % 3]};
        out.tangent_points[i] = side.at(out.tangent_lengths[i]);
    }
    // tanh r = sqrt(sinh(s-a) sinh(s-b) sinh(s-c) / sinh s), s - a etc. being
    // the tangent lengths.
    const Scalar s = out.tangent_lengths[0] + out.tangent_lengths[1] + out.tangent_lengths[2];
    if (s > Scalar(0)) {
        const Scalar num = std::sinh(out.tangent_lengths[0]) * std::sinh(out.tangent_lengths[1]) *
                           std::sinh(out.tangent_lengths[2]);
        out.inradius = std::atanh(std::sqrt(std::max(Scalar(0), num / std::sinh(s))));
    }
    for (int i = 0; i < 3; ++i)
        out.max_gap = std::max(out.max_gap, distance(out.tangent_points[i], out.tangent_points[(i + 1) % 3]));
    return out;
}

// ---------------------------------------------------------------------------
// Actions.

/// Poincare extension of the Mobius map z -> (az+b)/(cz+d) to H^3.
template <typename Scalar>
Point<Scalar> mobius(const Isometry<Scalar>& g, const Point<Scalar>& p) {
    const Complex<Scalar> z = p.horizontal;
    const Scalar h = p.height;
    const Complex<Scalar> czd = g.c() * z + g.d();
    const Scalar denom = std::norm(czd) + std::norm(g.c()) * h * h;
    const Complex<Scalar> num = (g.a() * z + g.b()) * std::conj(czd) + g.a() * std::conj(g.c()) * h * h;
    return Point<Scalar>(num / denom, h / denom);
}

template <typename Scalar>
BoundaryPoint<Scalar> mobius(const Isometry<Scalar>& g, const BoundaryPoint<Scalar>& z) {
    if (z.infinite) {
        if (g.c() == Complex<Scalar>(0)) return BoundaryPoint<Scalar>::at_infinity();
        return BoundaryPoint<Scalar>::finite(g.a() / g.c());
    }
    const Complex<Scalar> den = g.c() * z.value + g.d();
    if (den == Complex<Scalar>(0)) return BoundaryPoint<Scalar>::at_infinity();
    return BoundaryPoint<Scalar>::finite((g.a() * z.value + g.b()) / den);
}

/// Right action p.g, satisfying (p.g).h = p.(g*h). It is the Mobius action of
/// g^{-1}, so g and its action share fixed points, axes and type.
template <typename Scalar>
Point<Scalar> apply(const Point<Scalar>& p, const Isometry<Scalar>& g) {
    return mobius(g.inverse(), p);
}

// ---------------------------------------------------------------------------
// Classification.

enum class IsometryType { identity, parabolic, elliptic, loxodromic };

template <typename Scalar>
struct Classification {
    IsometryType type = IsometryType::identity;
    /// l + i theta with 2 cosh((l + i theta)/2) = +-trace and l >= 0; zero
    /// for identity and parabolic elements.
    Complex<Scalar> complex_length{};
};

template <typename Scalar>
struct ClassifyTolerance {
    /// Entrywise distance to +-I below which g is the identity.
    Scalar identity = Scalar(1e-9);
    /// |trace -+ 2| below which g is parabolic.
    Scalar trace = Scalar(1e-9);
};

template <typename Scalar>
Classification<Scalar> classify(const Isometry<Scalar>& g, ClassifyTolerance<Scalar> tol = {}) {
    Classification<Scalar> out;
    if (distance_to_identity(g) <= tol.identity) return out;
    const Complex<Scalar> tr = g.trace();
    if (std::abs(tr - Scalar(2)) <= tol.trace || std::abs(tr + Scalar(2)) <= tol.trace) {
        out.type = IsometryType::parabolic;
        return out;
    }
    Complex<Scalar> len = Scalar(2) * std::acosh(tr / Scalar(2));
    if (len.real() < Scalar(0)) len = -len;
    const bool real_trace = std::abs(tr.imag()) <= tol.trace;
    out.type = (real_trace && std::abs(tr.real()) < Scalar(2)) ? IsometryType::elliptic : IsometryType::loxodromic;
    if (out.type == IsometryType::elliptic) len = Complex<Scalar>(0, std::abs(len.imag()));
    out.complex_length = len;
    return out;
}

/// Fixed points on the sphere at infinity: roots of c z^2 + (d-a) z - b = 0.
template <typename Scalar>
std::vector<BoundaryPoint<Scalar>> fixed_points(const Isometry<Scalar>& g, Scalar tol = Scalar(1e-12)) {
    if (distance_to_identity(g) <= tol) throw DomainError("the identity fixes every boundary point");
    const Complex<Scalar> a = g.a(), b = g.b(), c = g.c(), d = g.d();
    const Scalar scale = max_abs_entry<Scalar>(g.m);
    std::vector<BoundaryPoint<Scalar>> out;
    if (std::abs(c) <= tol * scale) {
        out.push_back(BoundaryPoint<Scalar>::at_infinity());
        if (std::abs(d - a) > tol * scale) out.push_back(BoundaryPoint<Scalar>::finite(b / (d - a)));
        return out;
    }
    const Complex<Scalar> disc = std::sqrt((d - a) * (d - a) + Scalar(4) * b * c);
    // Avoid cancellation by choosing the larger-magnitude numerator.
    const Complex<Scalar> s = std::norm(a - d + disc) >= std::norm(a - d - disc) ? disc : -disc;
    const Complex<Scalar> z1 = (a - d + s) / (Scalar(2) * c);
    if (std::abs(disc) <= tol * scale) {
        out.push_back(BoundaryPoint<Scalar>::finite(z1));
        return out;
    }
    const Complex<Scalar> z2 = -b / (c * z1);  // product of the roots is -b/c
    out.push_back(BoundaryPoint<Scalar>::finite(z1));
    out.push_back(BoundaryPoint<Scalar>::finite(z2));
    return out;
}

/// Unimodular h with h(0) = from and h(infinity) = to.
template <typename Scalar>
Isometry<Scalar> frame_for_axis(const BoundaryPoint<Scalar>& from, const BoundaryPoint<Scalar>& to) {
    if (from.infinite && to.infinite) throw DomainError("axis endpoints coincide");
    if (to.infinite) return Isometry<Scalar>(Scalar(1), from.value, Scalar(0), Scalar(1));
    if (from.infinite) return Isometry<Scalar>(to.value, Scalar(-1), Scalar(1), Scalar(0));
    const Complex<Scalar> det = to.value - from.value;
    if (std::abs(det) == Scalar(0)) throw DomainError("axis endpoints coincide");
    const Complex<Scalar> s = std::sqrt(det);
    return Isometry<Scalar>(to.value / s, from.value / s, Scalar(1) / s, Scalar(1) / s);
}

/// Loxodromic with complex length `length` along the axis from `from` to
/// `to`; `to` is the fixed point carrying the eigenvalue exp(length/2).
template <typename Scalar>
Isometry<Scalar> loxodromic_about_axis(const BoundaryPoint<Scalar>& from, const BoundaryPoint<Scalar>& to,
                                       Complex<Scalar> length) {
    const Isometry<Scalar> h = frame_for_axis(from, to);
    const Isometry<Scalar> diag(std::exp(length / Scalar(2)), Scalar(0), Scalar(0), std::exp(-length / Scalar(2)));
    return h * diag * h.inverse();
}

/// Rotation by `angle` about the geodesic with the given endpoints.
template <typename Scalar>
Isometry<Scalar> elliptic_about_axis(const BoundaryPoint<Scalar>& from, const BoundaryPoint<Scalar>& to,
                                     Scalar angle) {
    return loxodromic_about_axis(from, to, Complex<Scalar>(0, angle));
}

/// Forward endpoint at infinity of the geodesic ray from p through q.
template <typename Scalar>
BoundaryPoint<Scalar> ray_endpoint(const Point<Scalar>& p, const Point<Scalar>& q) {
    const Complex<Scalar> delta = q.horizontal - p.horizontal;
    const Scalar scale = std::max(p.height, q.height);
    if (std::abs(delta) <= Scalar(1e-14) * scale) {
        if (q.height > p.height) return BoundaryPoint<Scalar>::at_infinity();
        if (q.height < p.height) return BoundaryPoint<Scalar>::finite(p.horizontal);
        throw DomainError("ray through coincident points");
    }
    // The geodesic is a half circle centred on the line through the two
    // horizontal positions, centre x1 + lambda * delta.
    const Scalar n2 = std::norm(delta);
    const Scalar lambda = (n2 + q.height * q.height - p.height * p.height) / (Scalar(2) * n2);
    const Scalar radius = std::sqrt(lambda * lambda * n2 + p.height * p.height);
    const Complex<Scalar> centre = p.horizontal + lambda * delta;
    return BoundaryPoint<Scalar>::finite(centre + radius * delta / std::sqrt(n2));
}

// ---------------------------------------------------------------------------
// Horoballs.

template <typename Scalar>
struct Horoball {
    BoundaryPoint<Scalar> base;
    /// Base at infinity: the bounding height. Finite base: the Euclidean
    /// diameter of the tangent ball.
    Scalar parameter{1};
};

template <typename Scalar>
Horoball<Scalar> horoball_through(const BoundaryPoint<Scalar>& base, const Point<Scalar>& witness) {
    if (base.infinite) return {base, witness.height};
    const Scalar dz2 = std::norm(witness.horizontal - base.value);
    return {base, (dz2 + witness.height * witness.height) / witness.height};
}

/// Closed containment; `rel_tol` widens the boundary slightly so that points
/// constructed on the horosphere test inside.
template <typename Scalar>
bool horoball_contains(const Horoball<Scalar>& h, const Point<Scalar>& p, Scalar rel_tol = Scalar(1e-12)) {
    if (h.base.infinite) return p.height >= h.parameter * (Scalar(1) - rel_tol);
    const Scalar lhs = std::norm(p.horizontal - h.base.value) + p.height * p.height;
    return lhs <= h.parameter * p.height * (Scalar(1) + rel_tol);
}

// ---------------------------------------------------------------------------
// Segment-to-segment distance.

template <typename Scalar>
struct SegmentDistance {
    Scalar distance{};
    Scalar s{};  // arc length parameter on the first segment
    Scalar t{};  // arc length parameter on the second segment
};

namespace detail {

/// Arc length parameter in [0, len] of the point of `seg` closest to p.
template <typename Scalar>
Scalar project_onto_segment(const GeodesicSegment<Scalar>& seg, const Point<Scalar>& p) {
    const Scalar len = seg.length();
    if (len == Scalar(0)) return Scalar(0);
    const Point<Scalar> o = Point<Scalar>::origin();
    const Vec4<Scalar> x = to_hyperboloid(o);
    const Vec4<Scalar> v = unit_tangent(o, to_local(seg.start, seg.end));
    const Vec4<Scalar> y = to_hyperboloid(to_local(seg.start, p));
    // cosh d(p, gamma(t)) = A cosh t - C sinh t, minimised where tanh t = C / A.
    const Scalar A = minkowski(y, x);
    const Scalar C = -minkowski(y, v);
    const Scalar t = std::atanh(std::clamp(C / A, Scalar(-1) + Scalar(1e-16), Scalar(1) - Scalar(1e-16)));
    return std::clamp(t, Scalar(0), len);
}

}  // namespace detail

/// Minimum distance between two geodesic segments by alternating projection.
/// The distance function is jointly convex, so alternating exact
/// minimisation decreases monotonically to the minimum.
template <typename Scalar>
SegmentDistance<Scalar> segment_distance(const GeodesicSegment<Scalar>& first, const GeodesicSegment<Scalar>& second,
                                         int max_iterations = 200) {
    Scalar s = Scalar(0);
    Scalar t = detail::project_onto_segment(second, first.at(s));
    Scalar best = distance(first.at(s), second.at(t));
    for (int i = 0; i < max_iterations; ++i) {
        const Scalar s_new = detail::project_onto_segment(first, second.at(t));
        const Scalar t_new = detail::project_onto_segment(second, first.at(s_new));
        const Scalar d = distance(first.at(s_new), second.at(t_new));
        const bool stalled = std::abs(s_new - s) + std::abs(t_new - t) <= Scalar(1e-14);
        s = s_new;
        t = t_new;
        best = d;
        if (stalled) break;
    }
    // Alternating projection can stall on a corner; endpoint pairs cover it.
    for (const auto& [ps, pt] : {std::pair{Scalar(0), Scalar(-1)}, std::pair{first.length(), Scalar(-1)}}) {
        const Scalar tt = detail::project_onto_segment(second, first.at(ps));
        const Scalar d = distance(first.at(ps), second.at(tt));
        if (d < best) best = d, s = ps, t = tt;
        (void)pt;
    }
    for (const Scalar pt : {Scalar(0), second.length()}) {
        const Scalar ss = detail::project_onto_segment(first, second.at(pt));
        const Scalar d = distance(first.at(ss), second.at(pt));
        if (d < best) best = d, s = ss, t = pt;
    }
    return {best, s, t};
}

using Pointd = Point<double>;
using BoundaryPointd = BoundaryPoint<double>;
using Isometryd = Isometry<double>;
using Horoballd = Horoball<double>;
using Segmentd = GeodesicSegment<double>;
using Constantsd = GeometryConstants<double>;

}  // namespace dehnext
