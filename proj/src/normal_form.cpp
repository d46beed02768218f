#include "dehnext/normal_form.hpp"

#include <cmath>
#include <cstdlib>
#include <map>

namespace dehnext {

namespace {

struct CuspFrame {
    Isometryd to_infinity;  // conjugator moving the cusp point to infinity
    Complex<double> tau_mu, tau_lambda;
    Eigen::Matrix2d solve;  // real 2x2 inverse for translation coordinates
    double shimizu = 0.0;   // |c| at or above this certifies non-membership
};

CuspFrame make_frame(const MarkedPresentation& base, const Representation& rep, int j) {
    const Cusp& c = base.cusps.at(static_cast<std::size_t>(j));
    const Isometryd mu = evaluate(rep, c.meridian);
    const auto fp = fixed_points(mu, 1e-9);
    Isometryd h;
    if (!fp.front().infinite) h = Isometryd(fp.front().value, -1.0, 1.0, 0.0);
    CuspFrame f;
    f.to_infinity = h.inverse();
    const auto translation = [&](const Word& w) {
        const Isometryd g = f.to_infinity * evaluate(rep, w) * h;
        return g.b() / g.d();
    };
    f.tau_mu = translation(c.meridian);
    f.tau_lambda = translation(c.longitude);
    Eigen::Matrix2d m;
    m << f.tau_mu.real(), f.tau_lambda.real(), f.tau_mu.imag(), f.tau_lambda.imag();
    if (std::abs(m.determinant()) < 1e-12) throw DomainError("cusp translations are not independent");
    f.solve = m.inverse();
    // Shimizu: a discrete group containing the translation by tau has
    // |c| >= 1/|tau| for every element not fixing infinity.
    f.shimizu = 0.5 / std::min(std::abs(f.tau_mu), std::abs(f.tau_lambda));
    return f;
}

}  // namespace

MembershipOracle numeric_membership_oracle(const MarkedPresentation& base, const Representation& faithful,
                                           NumericOracleOptions opt) {
    std::vector<CuspFrame> frames;
    for (std::size_t j = 0; j < base.cusps.size(); ++j) frames.push_back(make_frame(base, faithful, static_cast<int>(j)));
    return [frames, faithful, opt](const Word& w, int cusp) -> OracleAnswer {
        const CuspFrame& f = frames.at(static_cast<std::size_t>(cusp));
        const Isometryd h = f.to_infinity.inverse();
        const Isometryd g = f.to_infinity * evaluate(faithful, w) * h;
        const double c = std::abs(g.c());
        if (c >= f.shimizu) return {Membership::non_member};
        if (c > opt.fixes_tol) return {Membership::unknown};
        const Complex<double> tr = g.trace();
        if (std::abs(tr - 2.0) > opt.trace_tol && std::abs(tr + 2.0) > opt.trace_tol) return {Membership::unknown};
        const Complex<double> tau = g.b() / g.d();
        const Eigen::Vector2d pq = f.solve * Eigen::Vector2d(tau.real(), tau.imag());
        const double p = std::round(pq(0)), q = std::round(pq(1));
        if (std::abs(pq(0) - p) > opt.integer_tol || std::abs(pq(1) - q) > opt.integer_tol) return {Membership::unknown};
        return {Membership::member, static_cast<std::int64_t>(p), static_cast<std::int64_t>(q)};
    };
}

const char* to_string(NormalFormStatus s) {
    switch (s) {
        case NormalFormStatus::reduced: return "reduced";
        case NormalFormStatus::reduced_up_to_conjugacy: return "reduced_up_to_conjugacy";
        case NormalFormStatus::inconclusive: return "inconclusive";
    }
    return "inconclusive";
}

std::size_t edge_count(const AmalgamWord& w) {
    std::size_t n = 0;
    for (const auto& f : w.factors)
        if (std::holds_alternative<EdgeFactor>(f)) ++n;
    return n;
}

namespace {

bool is_integral(const RationalPair& v) {
    return boost::multiprecision::denominator(v[0]) == 1 && boost::multiprecision::denominator(v[1]) == 1;
}

std::int64_t to_int(const Rational& r) { return boost::multiprecision::numerator(r).convert_to<std::int64_t>(); }

class Reducer {
public:
    Reducer(const DehnExtension& ext, const MembershipOracle& oracle) : ext_(ext), oracle_(oracle) {}

    NormalFormResult run(const AmalgamWord& input) {
        for (const auto& f : input.factors)
            if (const auto* e = std::get_if<EdgeFactor>(&f)) {
                if (e->cusp < 0 || static_cast<std::size_t>(e->cusp) >= ext_.lattices.size())
                    throw ValidationError("edge factor names an invalid cusp");
                if (!express_in_extended(e->coords, ext_.lattices[static_cast<std::size_t>(e->cusp)]).member)
                    throw ValidationError("edge factor is not in the extended lattice");
            } else {
                ext_.base.check_word(std::get<VertexFactor>(f).word);
            }
        f_ = input.factors;
        while (step()) {
            ++result_.steps;
            result_.syllable_trace.push_back(edges());
        }
        result_.reduced.factors = f_;
        result_.syllable_length = edges();
        result_.syllable_trace.push_back(result_.syllable_length);
        if (inconclusive_)
            result_.status = NormalFormStatus::inconclusive;
        else if (rotated_)
            result_.status = NormalFormStatus::reduced_up_to_conjugacy;
        return result_;
    }

private:
    std::size_t edges() const { return edge_count(AmalgamWord{f_}); }

    OracleAnswer ask(const Word& w, int cusp) {
        const auto key = std::make_pair(w, cusp);
        if (auto it = cache_.find(key); it != cache_.end()) return it->second;
        OracleAnswer a = w.empty() ? OracleAnswer{Membership::member, 0, 0} : oracle_(w, cusp);
        if (a.status == Membership::unknown) inconclusive_ = true;
        cache_.emplace(key, a);
        return a;
    }

    static bool is_vertex(const Factor& f) { return std::holds_alternative<VertexFactor>(f); }

    // One local simplification: drop trivial factors, merge neighbours of
    // the same kind, and turn integral edge factors into vertex words.
    bool normalize() {
        for (std::size_t i = 0; i < f_.size(); ++i) {
            if (auto* v = std::get_if<VertexFactor>(&f_[i])) {
                if (v->word.empty()) {
                    f_.erase(f_.begin() + static_cast<long>(i));
                    return true;
                }
            } else {
                auto& e = std::get<EdgeFactor>(f_[i]);
                if (e.coords[0] == 0 && e.coords[1] == 0) {
                    f_.erase(f_.begin() + static_cast<long>(i));
                    return true;
                }
                if (is_integral(e.coords)) {
                    f_[i] = VertexFactor{lattice_word(ext_.base, e.cusp, to_int(e.coords[0]), to_int(e.coords[1]))};
                    return true;
                }
            }
            if (i + 1 < f_.size() && merge(i, i + 1)) return true;
        }
        return false;
    }

    // Merges f_[j] into f_[i] (i < j adjacent, or the cyclic pair) when they
    // are of the same kind.
    bool merge(std::size_t i, std::size_t j) {
        if (is_vertex(f_[i]) && is_vertex(f_[j])) {
            auto& a = std::get<VertexFactor>(f_[i]).word;
            a = concat(a, std::get<VertexFactor>(f_[j]).word);
            f_.erase(f_.begin() + static_cast<long>(j));
            return true;
        }
        if (!is_vertex(f_[i]) && !is_vertex(f_[j])) {
            auto& a = std::get<EdgeFactor>(f_[i]);
            const auto& b = std::get<EdgeFactor>(f_[j]);
            if (a.cusp != b.cusp) return false;
            a.coords[0] += b.coords[0];
            a.coords[1] += b.coords[1];
            f_.erase(f_.begin() + static_cast<long>(j));
            return true;
        }
        return false;
    }

    // Replaces the vertex at i by an edge factor of `cusp` if the oracle
    // places it in that cusp subgroup.
    bool absorb(std::size_t i, int cusp) {
        const Word& w = std::get<VertexFactor>(f_[i]).word;
        const OracleAnswer a = ask(w, cusp);
        if (a.status != Membership::member) return false;
        f_[i] = EdgeFactor{cusp, RationalPair{Rational(a.p), Rational(a.q)}};
        return true;
    }

    bool step() {
        if (normalize()) return true;
        for (std::size_t i = 0; i < f_.size(); ++i) {
            if (!is_vertex(f_[i])) continue;
            // Absorb and merge in one step so the syllable count never rises.
            if (i > 0 && absorb(i, std::get<EdgeFactor>(f_[i - 1]).cusp)) return merge(i - 1, i);
            if (i + 1 < f_.size() && absorb(i, std::get<EdgeFactor>(f_[i + 1]).cusp)) return merge(i, i + 1);
        }
        const std::size_t n = f_.size();
        if (n >= 2) {
            const std::size_t last = n - 1;
            if (is_vertex(f_[0]) != is_vertex(f_[last])) {
                const bool front = is_vertex(f_[0]);
                if (!absorb(front ? 0 : last, std::get<EdgeFactor>(f_[front ? last : 0]).cusp)) return false;
                rotated_ = true;
                if (front) {
                    Factor moved = f_.back();
                    f_.pop_back();
                    f_.insert(f_.begin(), std::move(moved));
                }
                return merge(0, 1);
            }
            // Same kind at both ends: conjugate the last factor to the front.
            Factor moved = f_[last];
            f_.pop_back();
            f_.insert(f_.begin(), moved);
            if (merge(0, 1)) {
                rotated_ = true;
                return true;
            }
            f_.erase(f_.begin());
            f_.push_back(moved);
            return false;
        }
        if (n == 1 && is_vertex(f_[0]) && !ext_.base.cusps.empty()) {
            const OracleAnswer a = ask(std::get<VertexFactor>(f_[0]).word, 0);
            if (a.status == Membership::member && a.p == 0 && a.q == 0) {
                f_.clear();
                return true;
            }
        }
        return false;
    }

    const DehnExtension& ext_;
    const MembershipOracle& oracle_;
    std::vector<Factor> f_;
    NormalFormResult result_;
    bool inconclusive_ = false;
    bool rotated_ = false;
    std::map<std::pair<Word, int>, OracleAnswer> cache_;
};

}  // namespace

NormalFormResult reduce(const AmalgamWord& w, const DehnExtension& ext, const MembershipOracle& oracle) {
    return Reducer(ext, oracle).run(w);
}

Tristate is_cyclically_reduced(const AmalgamWord& w, const DehnExtension& ext, const MembershipOracle& oracle) {
    const auto r = reduce(w, ext, oracle);
    if (r.status == NormalFormStatus::inconclusive) return Tristate::inconclusive;
    return r.steps == 0 ? Tristate::yes : Tristate::no;
}

std::optional<std::size_t> syllable_length(const AmalgamWord& w, const DehnExtension& ext,
                                           const MembershipOracle& oracle) {
    const auto r = reduce(w, ext, oracle);
    if (r.status == NormalFormStatus::inconclusive) return std::nullopt;
    return r.syllable_length;
}

AmalgamWord from_extension_word(const DehnExtension& ext, const Word& w) {
    ext.presentation.check_word(w);
    AmalgamWord out;
    const int base_rank = static_cast<int>(ext.base.rank());
    for (int l : w) {
        const int g = std::abs(l);
        if (g <= base_rank) {
            if (out.factors.empty() || !std::holds_alternative<VertexFactor>(out.factors.back()))
                out.factors.emplace_back(VertexFactor{});
            std::get<VertexFactor>(out.factors.back()).word.push_back(l);
            continue;
        }
        int cusp = -1;
        for (std::size_t j = 0; j < ext.root_generator.size(); ++j)
            if (ext.root_generator[j] == g) cusp = static_cast<int>(j);
        const ExtendedLattice& lat = ext.lattices.at(static_cast<std::size_t>(cusp));
        const int sign = l > 0 ? 1 : -1;
        out.factors.emplace_back(EdgeFactor{cusp, RationalPair{lat.basis[0][0] * sign, lat.basis[0][1] * sign}});
    }
    return out;
}

Word to_extension_word(const DehnExtension& ext, const AmalgamWord& w) {
    Word out;
    for (const auto& f : w.factors) {
        if (const auto* v = std::get_if<VertexFactor>(&f)) {
            out = concat(out, v->word);
            continue;
        }
        const auto& e = std::get<EdgeFactor>(f);
        const ExtendedLattice& lat = ext.lattices.at(static_cast<std::size_t>(e.cusp));
        const auto m = express_in_extended(e.coords, lat);
        if (!m.member) throw ValidationError("edge factor is not in the extended lattice");
        const std::int64_t a = m.coords[0].convert_to<std::int64_t>();
        const std::int64_t c = m.coords[1].convert_to<std::int64_t>();
        if (!lat.nontrivial()) {
            out = concat(out, lattice_word(ext.base, e.cusp, a, c));
            continue;
        }
        // coords = a * (slope / m) + c * complement
        const int t = ext.root_generator[static_cast<std::size_t>(e.cusp)];
        const Rational cp = lat.basis[1][0] * c, cq = lat.basis[1][1] * c;
        out = concat(out, power(Word{t}, a));
        out = concat(out, lattice_word(ext.base, e.cusp, to_int(cp), to_int(cq)));
    }
    return out;
}

}  // namespace dehnext
