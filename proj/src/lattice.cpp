#include "dehnext/lattice.hpp"

#include <cstdlib>
#include <numeric>

namespace dehnext {

namespace {

std::int64_t mod(std::int64_t a, std::int64_t m) {
    const std::int64_t r = a % m;
    return r < 0 ? r + m : r;
}

void check_lengths(std::size_t a, std::size_t b, std::size_t c) {
    if (a != b || a != c) throw ValidationError("slope-tuple and denominator-tuple lengths differ");
}

bool congruent_slope(const Slope& a, const Slope& b, std::int64_t m) {
    return mod(a.p - b.p, m) == 0 && mod(a.q - b.q, m) == 0;
}

// Extended Euclid: returns (g, x, y) with a*x + b*y = g >= 0.
std::array<std::int64_t, 3> ext_gcd(std::int64_t a, std::int64_t b) {
    std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
    while (r != 0) {
        const std::int64_t q = old_r / r;
        old_r -= q * r, std::swap(old_r, r);
        old_s -= q * s, std::swap(old_s, s);
        old_t -= q * t, std::swap(old_t, t);
    }
    if (old_r < 0) old_r = -old_r, old_s = -old_s, old_t = -old_t;
    return {old_r, old_s, old_t};
}

bool is_integer(const Rational& r) { return boost::multiprecision::denominator(r) == 1; }

}  // namespace

std::int64_t gcd64(std::int64_t a, std::int64_t b) { return std::gcd(std::llabs(a), std::llabs(b)); }

bool is_primitive(std::int64_t p, std::int64_t q) { return gcd64(p, q) == 1; }

Slope::Slope(std::int64_t p_, std::int64_t q_) : p(p_), q(q_) {
    if (!trivial() && !is_primitive(p, q))
        throw ValidationError("slope (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive");
}

std::string Slope::str() const { return "(" + std::to_string(p) + "," + std::to_string(q) + ")"; }

void validate_denominators(const DenominatorTuple& m) {
    for (auto v : m)
        if (v < 1) throw ValidationError("denominators must be >= 1");
}

bool congruent_mod(const SlopeTuple& z1, const SlopeTuple& z2, const DenominatorTuple& m) {
    check_lengths(z1.size(), z2.size(), m.size());
    validate_denominators(m);
    for (std::size_t j = 0; j < m.size(); ++j)
        if (!congruent_slope(z1[j], z2[j], m[j])) return false;
    return true;
}

bool dominates(const SlopeTuple& z1, const SlopeTuple& z2, const DenominatorTuple& m) {
    check_lengths(z1.size(), z2.size(), m.size());
    validate_denominators(m);
    for (std::size_t j = 0; j < m.size(); ++j)
        if (!z1[j].trivial() && !congruent_slope(z1[j], z2[j], m[j])) return false;
    return true;
}

std::array<std::int64_t, 2> complementary_slope(const Slope& s) {
    if (s.trivial()) throw ValidationError("trivial slope has no complement");
    // p*b - q*a = 1  <=>  p*b + q*(-a) = 1
    const auto [g, x, y] = ext_gcd(s.p, s.q);
    (void)g;
    return {-y, x};
}

Integer ExtendedLattice::index() const {
    const Rational det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
    const Rational inv = 1 / abs(det);
    return boost::multiprecision::numerator(inv) / boost::multiprecision::denominator(inv);
}

ExtendedLattice extend_lattice(const Slope& slope, std::int64_t m, int cusp) {
    if (m < 1) throw ValidationError("denominator must be >= 1");
    ExtendedLattice lat;
    lat.cusp = cusp;
    lat.slope = slope;
    lat.denominator = m;
    if (!lat.nontrivial()) {
        lat.basis = {RationalPair{Rational(1), Rational(0)}, RationalPair{Rational(0), Rational(1)}};
        return lat;
    }
    // {slope, complement} is a unimodular basis of Z^2; dividing the first
    // vector by m gives a basis of the extended lattice.
    const auto c = complementary_slope(slope);
    lat.basis = {RationalPair{Rational(slope.p, m), Rational(slope.q, m)}, RationalPair{Rational(c[0]), Rational(c[1])}};
    return lat;
}

LatticeMembership express_in_extended(const RationalPair& v, const ExtendedLattice& lat) {
    LatticeMembership out;
    out.in_base = is_integer(v[0]) && is_integer(v[1]);
    const auto& b = lat.basis;
    const Rational det = b[0][0] * b[1][1] - b[0][1] * b[1][0];
    // v = x * b0 + y * b1 solved by Cramer's rule.
    const Rational x = (v[0] * b[1][1] - v[1] * b[1][0]) / det;
    const Rational y = (b[0][0] * v[1] - b[0][1] * v[0]) / det;
    out.member = is_integer(x) && is_integer(y);
    if (out.member) out.coords = {boost::multiprecision::numerator(x), boost::multiprecision::numerator(y)};
    return out;
}

std::vector<Slope> congruence_classes(std::int64_t m, bool include_trivial) {
    if (m < 1) throw ValidationError("denominator must be >= 1");
    std::vector<Slope> out;
    if (m == 1) {
        out.emplace_back(1, 0);
        return out;
    }
    for (std::int64_t a = 0; a < m; ++a)
        for (std::int64_t b = 0; b < m; ++b) {
            if (std::gcd(std::gcd(a, b), m) != 1) continue;
            // Lift the residue to a primitive pair; one always exists within
            // a few multiples of m.
            bool found = false;
            for (std::int64_t i = 0; i <= 2 * m && !found; ++i)
                for (std::int64_t j = 0; j <= 2 * m && !found; ++j)
                    if (is_primitive(a + i * m, b + j * m)) {
                        out.emplace_back(a + i * m, b + j * m);
                        found = true;
                    }
        }
    if (include_trivial) out.emplace_back(0, 0);
    return out;
}

std::vector<SlopeTuple> enumerate_congruence_classes(const DenominatorTuple& m, bool include_trivial) {
    validate_denominators(m);
    std::vector<SlopeTuple> out{SlopeTuple{}};
    for (auto mj : m) {
        const auto classes = congruence_classes(mj, include_trivial);
        std::vector<SlopeTuple> next;
        next.reserve(out.size() * classes.size());
        for (const auto& prefix : out)
            for (const auto& c : classes) {
                next.push_back(prefix);
                next.back().push_back(c);
            }
        out = std::move(next);
    }
    return out;
}

BoundA bound_A(unsigned n) {
    Integer p = 1;
    for (unsigned i = 0; i < n; ++i) p *= 27;
    BoundA out;
    out.coefficient = p * (Integer(9) * n * n + Integer(4) * n);
    out.value = out.coefficient.convert_to<double>() * 3.14159265358979323846;
    return out;
}

Integer bound_T(unsigned n) {
    Integer p = 2;
    for (unsigned i = 0; i < n; ++i) p *= 3;
    return p;
}

std::array<std::int64_t, 2> change_basis(const std::array<std::int64_t, 2>& coords,
                                         const std::array<std::array<std::int64_t, 2>, 2>& basis) {
    const std::int64_t det = basis[0][0] * basis[1][1] - basis[0][1] * basis[1][0];
    if (det != 1 && det != -1) throw ValidationError("change of basis must be unimodular");
    // c0 * basis[0] + c1 * basis[1] = coords
    return {(coords[0] * basis[1][1] - coords[1] * basis[1][0]) * det,
            (basis[0][0] * coords[1] - basis[0][1] * coords[0]) * det};
}

std::string to_string(const Rational& r) { return r.str(); }

}  // namespace dehnext
