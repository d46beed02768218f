#pragma once

// Finite presentations with marked cusp subgroups, and the constructions of
// Dehn fillings, Dehn extensions and extended fillings between them.

#include "dehnext/lattice.hpp"

#include <string>
#include <vector>

namespace dehnext {

/// Signed 1-based generator indices; -k is the inverse of generator k.
using Word = std::vector<int>;

Word free_reduce(const Word& w);
Word inverse(const Word& w);
Word concat(const Word& a, const Word& b);
Word power(const Word& w, long long n);
/// a b a^-1 b^-1
Word commutator(const Word& a, const Word& b);
/// g w g^-1
Word conjugate(const Word& w, const Word& g);
std::string to_string(const Word& w, const std::vector<std::string>& names);

struct Cusp {
    Word meridian;
    Word longitude;
    bool operator==(const Cusp&) const = default;
};

struct MarkedPresentation {
    std::vector<std::string> generators;
    std::vector<Word> relators;
    std::vector<Cusp> cusps;

    std::size_t rank() const { return generators.size(); }
    /// Throws ValidationError when a word uses an undeclared generator.
    void validate() const;
    void check_word(const Word& w) const;
    bool operator==(const MarkedPresentation&) const = default;
};

enum class MapKind {
    filling,
    extended_filling,
    congruent_extended_filling,
    dominated_extended_filling,
    inclusion,
    quotient
};

const char* to_string(MapKind k);

struct PresentationMap {
    MarkedPresentation source;
    MarkedPresentation target;
    /// One target word per source generator.
    std::vector<Word> images;
    MapKind kind = MapKind::inclusion;

    Word apply(const Word& w) const;
};

/// mu^p lambda^q for an arbitrary integer pair.
Word lattice_word(const MarkedPresentation& pres, int cusp, long long p, long long q);
Word slope_word(const MarkedPresentation& pres, int cusp, const Slope& s);

struct Filling {
    MarkedPresentation presentation;
    PresentationMap map;
    /// Indices (into the source) of the cusps that remain marked.
    std::vector<int> remaining_cusps;
};

Filling dehn_filling(const MarkedPresentation& pres, const SlopeTuple& z);

struct DehnExtension {
    MarkedPresentation base;
    SlopeTuple slopes;
    DenominatorTuple denominators;
    MarkedPresentation presentation;
    /// The inclusion of the base group.
    PresentationMap inclusion;
    /// Per cusp: 1-based index of the adjoined root generator, 0 if none.
    std::vector<int> root_generator;
    std::vector<ExtendedLattice> lattices;

    bool nontrivial_on(int cusp) const { return root_generator.at(cusp) != 0; }
};

DehnExtension dehn_extension(const MarkedPresentation& pres, const SlopeTuple& z, const DenominatorTuple& m);

/// Extension -> filling along z_prime, sending each root generator to the
/// lattice word (z - z')/m. z must dominate z_prime modulo m.
PresentationMap extended_filling(const DehnExtension& ext, const SlopeTuple& z_prime);

/// Sum of relator lengths.
std::size_t presentation_length(const MarkedPresentation& pres);

}  // namespace dehnext
