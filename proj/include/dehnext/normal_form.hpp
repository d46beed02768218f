#pragma once

// Cyclically reduced normal forms a1 b1 ... as bs for elements of a Dehn
// extension, where the a's are words in the base group and the b's are
// elements of the extended cusp lattices.

#include "dehnext/presentation.hpp"
#include "dehnext/repvar.hpp"

#include <functional>
#include <optional>
#include <variant>
#include <vector>

namespace dehnext {

struct VertexFactor {
    Word word;
    bool operator==(const VertexFactor&) const = default;
};

struct EdgeFactor {
    int cusp = 0;
    /// Coordinates in the cusp basis (meridian, longitude).
    RationalPair coords{};
    bool operator==(const EdgeFactor&) const = default;
};

using Factor = std::variant<VertexFactor, EdgeFactor>;

struct AmalgamWord {
    std::vector<Factor> factors;
    bool operator==(const AmalgamWord&) const = default;
};

enum class Membership { member, non_member, unknown };

struct OracleAnswer {
    Membership status = Membership::unknown;
    /// Coordinates in the cusp basis when status is member.
    std::int64_t p = 0;
    std::int64_t q = 0;
};

/// Decides whether a base-group word lies in the given cusp subgroup.
using MembershipOracle = std::function<OracleAnswer(const Word&, int cusp)>;

struct NumericOracleOptions {
    /// |lower-left entry| below which an element fixes the cusp point.
    double fixes_tol = 1e-6;
    /// Distance of the trace from +-2 and of lattice coordinates from
    /// integers accepted as exact.
    double trace_tol = 1e-6;
    double integer_tol = 1e-6;
};

/// Membership oracle backed by a faithful representation of the base group
/// in which every cusp subgroup acts parabolically. Non-membership away from
/// the cusp point is certified by Shimizu's lower bound on |c|.
MembershipOracle numeric_membership_oracle(const MarkedPresentation& base, const Representation& faithful,
                                           NumericOracleOptions opt = {});

enum class NormalFormStatus { reduced, reduced_up_to_conjugacy, inconclusive };

const char* to_string(NormalFormStatus s);

struct NormalFormResult {
    AmalgamWord reduced;
    std::size_t syllable_length = 0;
    NormalFormStatus status = NormalFormStatus::reduced;
    /// Reduction steps applied (zero iff the input was already reduced).
    std::size_t steps = 0;
    /// Syllable length before each applied step, then the final value.
    std::vector<std::size_t> syllable_trace;
};

NormalFormResult reduce(const AmalgamWord& w, const DehnExtension& ext, const MembershipOracle& oracle);

enum class Tristate { yes, no, inconclusive };

Tristate is_cyclically_reduced(const AmalgamWord& w, const DehnExtension& ext, const MembershipOracle& oracle);

/// Number of edge factors after reduction; empty when inconclusive.
std::optional<std::size_t> syllable_length(const AmalgamWord& w, const DehnExtension& ext,
                                           const MembershipOracle& oracle);

std::size_t edge_count(const AmalgamWord& w);

AmalgamWord from_extension_word(const DehnExtension& ext, const Word& w);
Word to_extension_word(const DehnExtension& ext, const AmalgamWord& w);

}  // namespace dehnext
