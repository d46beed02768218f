#pragma once

// Exact arithmetic for rank-2 cusp lattices: slopes, slope-tuples,
// denominator-tuples, congruence, domination, and the lattices obtained by
// adjoining a rational root of a slope.

#include <boost/multiprecision/cpp_int.hpp>

#include <array>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace dehnext {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using RationalPair = std::array<Rational, 2>;

class ValidationError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

std::int64_t gcd64(std::int64_t a, std::int64_t b);

/// gcd(|p|, |q|) == 1, with gcd(x, 0) = |x|.
bool is_primitive(std::int64_t p, std::int64_t q);

/// A slope (p, q) in the cusp basis (meridian, longitude): the zero pair or
/// a primitive pair.
struct Slope {
    std::int64_t p = 0;
    std::int64_t q = 0;

    Slope() = default;
    Slope(std::int64_t p_, std::int64_t q_);

    bool trivial() const { return p == 0 && q == 0; }
    bool operator==(const Slope&) const = default;
    std::string str() const;
};

using SlopeTuple = std::vector<Slope>;
using DenominatorTuple = std::vector<std::int64_t>;

void validate_denominators(const DenominatorTuple& m);

/// Componentwise congruence of slope-tuples modulo m.
bool congruent_mod(const SlopeTuple& z1, const SlopeTuple& z2, const DenominatorTuple& m);

/// z1 dominates z2 modulo m: per cusp, congruent or z1 trivial.
bool dominates(const SlopeTuple& z1, const SlopeTuple& z2, const DenominatorTuple& m);

/// The lattice Z^2 + Z * slope / denominator inside Q^2.
struct ExtendedLattice {
    int cusp = 0;
    Slope slope;
    std::int64_t denominator = 1;
    /// Basis vectors in lowest terms. For a nontrivial extension the first
    /// vector is slope / denominator.
    std::array<RationalPair, 2> basis;

    bool nontrivial() const { return !slope.trivial() && denominator > 1; }
    /// Index of Z^2 in the lattice, computed as 1 / |det(basis)|.
    Integer index() const;
};

ExtendedLattice extend_lattice(const Slope& slope, std::int64_t m, int cusp = 0);

struct LatticeMembership {
    bool member = false;
    bool in_base = false;
    /// Coordinates in the lattice basis (meaningful when member).
    std::array<Integer, 2> coords{};
};

LatticeMembership express_in_extended(const RationalPair& v, const ExtendedLattice& lat);

/// Integer pair (a, b) with p*b - q*a == 1 for primitive (p, q).
std::array<std::int64_t, 2> complementary_slope(const Slope& s);

/// Representatives of congruence classes of slopes modulo m (one cusp):
/// residue pairs with gcd(p, q, m) = 1, plus the zero class when requested
/// and m > 1. Representatives are lifted to primitive slopes.
std::vector<Slope> congruence_classes(std::int64_t m, bool include_trivial);

/// One representative per class of slope-tuples modulo m (product over cusps).
std::vector<SlopeTuple> enumerate_congruence_classes(const DenominatorTuple& m, bool include_trivial);

/// The bound 27^n (9 n^2 + 4 n) pi, as its exact integer coefficient of pi
/// and as a double.
struct BoundA {
    Integer coefficient;
    double value = 0.0;
};

BoundA bound_A(unsigned n);
/// 2 * 3^n.
Integer bound_T(unsigned n);

/// Coordinates of (p, q) after the unimodular change of basis
/// (mu, lambda) -> (mu', lambda') given by the rows of `basis`.
std::array<std::int64_t, 2> change_basis(const std::array<std::int64_t, 2>& coords,
                                         const std::array<std::array<std::int64_t, 2>, 2>& basis);

std::string to_string(const Rational& r);

}  // namespace dehnext
