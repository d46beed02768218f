#include "dehnext/presentation.hpp"

#include <cstdlib>

namespace dehnext {

Word free_reduce(const Word& w) {
    Word out;
    out.reserve(w.size());
    for (int l : w) {
        if (l == 0) throw ValidationError("letter 0 is not a generator");
        if (!out.empty() && out.back() == -l)
            out.pop_back();
        else
            out.push_back(l);
    }
    return out;
}

Word inverse(const Word& w) {
    Word out(w.rbegin(), w.rend());
    for (int& l : out) l = -l;
    return out;
}

Word concat(const Word& a, const Word& b) {
    Word out = a;
    out.insert(out.end(), b.begin(), b.end());
    return free_reduce(out);
}

Word power(const Word& w, long long n) {
    const Word base = n < 0 ? inverse(w) : w;
    Word out;
    for (long long i = 0; i < std::llabs(n); ++i) out.insert(out.end(), base.begin(), base.end());
    return free_reduce(out);
}

Word commutator(const Word& a, const Word& b) { return concat(concat(a, b), concat(inverse(a), inverse(b))); }

Word conjugate(const Word& w, const Word& g) { return concat(concat(g, w), inverse(g)); }

std::string to_string(const Word& w, const std::vector<std::string>& names) {
    if (w.empty()) return "1";
    std::string out;
    for (int l : w) {
        if (!out.empty()) out += ' ';
        const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
        out += i < names.size() ? names[i] : "g" + std::to_string(i + 1);
        if (l < 0) out += "^-1";
    }
    return out;
}

void MarkedPresentation::check_word(const Word& w) const {
    for (int l : w)
        if (l == 0 || static_cast<std::size_t>(std::abs(l)) > generators.size())
            throw ValidationError("word uses undeclared generator " + std::to_string(l));
}

void MarkedPresentation::validate() const {
    for (const auto& r : relators) check_word(r);
    for (const auto& c : cusps) {
        check_word(c.meridian);
        check_word(c.longitude);
    }
}

const char* to_string(MapKind k) {
    switch (k) {
        case MapKind::filling: return "filling";
        case MapKind::extended_filling: return "extended_filling";
        case MapKind::congruent_extended_filling: return "congruent_extended_filling";
        case MapKind::dominated_extended_filling: return "dominated_extended_filling";
        case MapKind::inclusion: return "inclusion";
        case MapKind::quotient: return "quotient";
    }
    return "unknown";
}

Word PresentationMap::apply(const Word& w) const {
    source.check_word(w);
    Word out;
    for (int l : w) {
        const Word& img = images.at(static_cast<std::size_t>(std::abs(l)) - 1);
        const Word piece = l > 0 ? img : inverse(img);
        out.insert(out.end(), piece.begin(), piece.end());
    }
    return free_reduce(out);
}

Word lattice_word(const MarkedPresentation& pres, int cusp, long long p, long long q) {
    if (cusp < 0 || static_cast<std::size_t>(cusp) >= pres.cusps.size())
        throw ValidationError("invalid cusp index " + std::to_string(cusp));
    const Cusp& c = pres.cusps[static_cast<std::size_t>(cusp)];
    return concat(power(c.meridian, p), power(c.longitude, q));
}

Word slope_word(const MarkedPresentation& pres, int cusp, const Slope& s) { return lattice_word(pres, cusp, s.p, s.q); }

namespace {

std::vector<Word> identity_images(std::size_t n) {
    std::vector<Word> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(Word{static_cast<int>(i + 1)});
    return out;
}

}  // namespace

Filling dehn_filling(const MarkedPresentation& pres, const SlopeTuple& z) {
    pres.validate();
    if (z.size() != pres.cusps.size()) throw ValidationError("slope-tuple length differs from cusp count");
    Filling out;
    out.presentation.generators = pres.generators;
    out.presentation.relators = pres.relators;
    for (std::size_t j = 0; j < z.size(); ++j) {
        if (z[j].trivial()) {
            out.presentation.cusps.push_back(pres.cusps[j]);
            out.remaining_cusps.push_back(static_cast<int>(j));
        } else {
            out.presentation.relators.push_back(slope_word(pres, static_cast<int>(j), z[j]));
        }
    }
    out.map = {pres, out.presentation, identity_images(pres.rank()), MapKind::filling};
    return out;
}

DehnExtension dehn_extension(const MarkedPresentation& pres, const SlopeTuple& z, const DenominatorTuple& m) {
    pres.validate();
    if (z.size() != pres.cusps.size() || m.size() != pres.cusps.size())
        throw ValidationError("slope and denominator tuples must have one entry per cusp");
    validate_denominators(m);
    DehnExtension ext;
    ext.base = pres;
    ext.slopes = z;
    ext.denominators = m;
    ext.presentation = pres;
    std::size_t nontrivial = 0;
    for (std::size_t j = 0; j < z.size(); ++j)
        if (!z[j].trivial() && m[j] > 1) ++nontrivial;
    for (std::size_t j = 0; j < z.size(); ++j) {
        const int cusp = static_cast<int>(j);
        ext.lattices.push_back(extend_lattice(z[j], m[j], cusp));
        if (!ext.lattices.back().nontrivial()) {
            ext.root_generator.push_back(0);
            continue;
        }
        auto& gens = ext.presentation.generators;
        gens.push_back(nontrivial == 1 ? "t" : "t" + std::to_string(j + 1));
        const int t = static_cast<int>(gens.size());
        const Word tw{t};
        ext.root_generator.push_back(t);
        ext.presentation.relators.push_back(concat(power(tw, m[j]), inverse(slope_word(pres, cusp, z[j]))));
        ext.presentation.relators.push_back(commutator(tw, pres.cusps[j].meridian));
        ext.presentation.relators.push_back(commutator(tw, pres.cusps[j].longitude));
    }
    ext.inclusion = {pres, ext.presentation, identity_images(pres.rank()), MapKind::inclusion};
    return ext;
}

PresentationMap extended_filling(const DehnExtension& ext, const SlopeTuple& z_prime) {
    if (!dominates(ext.slopes, z_prime, ext.denominators))
        throw ValidationError("target slope-tuple is neither congruent to nor dominated by the extension slope");
    const Filling filled = dehn_filling(ext.base, z_prime);
    PresentationMap map;
    map.source = ext.presentation;
    map.target = filled.presentation;
    map.images = identity_images(ext.base.rank());
    if (z_prime == ext.slopes)
        map.kind = MapKind::extended_filling;
    else if (congruent_mod(ext.slopes, z_prime, ext.denominators))
        map.kind = MapKind::congruent_extended_filling;
    else
        map.kind = MapKind::dominated_extended_filling;
    for (std::size_t j = 0; j < ext.slopes.size(); ++j) {
        if (!ext.nontrivial_on(static_cast<int>(j))) continue;
        // A nontrivial root exists only where z is nontrivial, and there the
        // two tuples are congruent, so the difference divides exactly.
        const std::int64_t mj = ext.denominators[j];
        const std::int64_t dp = ext.slopes[j].p - z_prime[j].p;
        const std::int64_t dq = ext.slopes[j].q - z_prime[j].q;
        map.images.push_back(lattice_word(ext.base, static_cast<int>(j), dp / mj, dq / mj));
    }
    return map;
}

std::size_t presentation_length(const MarkedPresentation& pres) {
    std::size_t n = 0;
    for (const auto& r : pres.relators) n += r.size();
    return n;
}

}  // namespace dehnext
