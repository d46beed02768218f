#include "dehnext/filling_solver.hpp"

#include <Eigen/QR>

#include <cmath>
#include <cstdlib>
#include <numbers>

namespace dehnext {

namespace {

using cd = std::complex<double>;
using Mat = Mat2<double>;
using VecX = Eigen::VectorXcd;
using MatX = Eigen::MatrixXcd;

constexpr double two_pi = 2.0 * std::numbers::pi;

Mat unit(int r, int c) {
    Mat e = Mat::Zero();
    e(r, c) = 1.0;
    return e;
}

// Derivative of the adjugate [[d,-b],[-c,a]] with respect to entry (r, c).
Mat adjugate_unit(int r, int c) {
    if (r == 0 && c == 0) return unit(1, 1);
    if (r == 1 && c == 1) return unit(0, 0);
    return -unit(r, c);
}

struct WordJet {
    Mat value;
    std::vector<Mat> grad;  // one per unknown, 4 per generator in row-major order
};

WordJet word_jet(const std::vector<Mat>& gens, const Word& w) {
    const std::size_t n = gens.size(), len = w.size();
    std::vector<Mat> letters(len);
    for (std::size_t i = 0; i < len; ++i) {
        const Mat& g = gens[static_cast<std::size_t>(std::abs(w[i])) - 1];
        if (w[i] > 0) {
            letters[i] = g;
        } else {
            letters[i] << g(1, 1), -g(0, 1), -g(1, 0), g(0, 0);
        }
    }
    std::vector<Mat> prefix(len + 1, Mat::Identity()), suffix(len + 1, Mat::Identity());
    for (std::size_t i = 0; i < len; ++i) prefix[i + 1] = prefix[i] * letters[i];
    for (std::size_t i = len; i-- > 0;) suffix[i] = letters[i] * suffix[i + 1];
    WordJet jet{prefix[len], std::vector<Mat>(4 * n, Mat::Zero())};
    for (std::size_t i = 0; i < len; ++i) {
        const std::size_t g = static_cast<std::size_t>(std::abs(w[i])) - 1;
        for (int r = 0; r < 2; ++r)
            for (int c = 0; c < 2; ++c) {
                const Mat d = w[i] > 0 ? unit(r, c) : adjugate_unit(r, c);
                jet.grad[4 * g + static_cast<std::size_t>(2 * r + c)] += prefix[i] * d * suffix[i + 1];
            }
    }
    return jet;
}

cd log_near(cd z, cd ref) {
    cd w = std::log(z);
    w += cd(0.0, two_pi * std::round((ref - w).imag() / two_pi));
    return w;
}

struct System {
    const MarkedPresentation& pres;
    std::vector<int> relator_signs;
    std::size_t gauge_generator = 0;
    bool complete = true;
    Slope target;
    double t = 0.0;
    cd u_ref{}, v_ref{};

    std::size_t unknowns() const { return 4 * pres.rank(); }

    static std::vector<Mat> unpack(const VecX& x) {
        std::vector<Mat> g(static_cast<std::size_t>(x.size()) / 4);
        for (std::size_t i = 0; i < g.size(); ++i) {
            const auto k = static_cast<Eigen::Index>(4 * i);
            g[i] << x(k), x(k + 1), x(k + 2), x(k + 3);
        }
        return g;
    }

    // Residual vector and Jacobian at x; also reports the continued logs.
    void eval(const VecX& x, VecX& f, MatX& J, cd& u, cd& v) const {
        const auto gens = unpack(x);
        const Eigen::Index N = static_cast<Eigen::Index>(unknowns());
        std::vector<VecX> rows;
        std::vector<cd> vals;
        auto add = [&](cd val, VecX row) {
            vals.push_back(val);
            rows.push_back(std::move(row));
        };
        for (std::size_t g = 0; g < gens.size(); ++g) {
            const Mat& m = gens[g];
            VecX row = VecX::Zero(N);
            const auto k = static_cast<Eigen::Index>(4 * g);
            row(k) = m(1, 1), row(k + 1) = -m(1, 0), row(k + 2) = -m(0, 1), row(k + 3) = m(0, 0);
            add(m.determinant() - 1.0, row);
        }
        for (std::size_t r = 0; r < pres.relators.size(); ++r) {
            const WordJet jet = word_jet(gens, pres.relators[r]);
            for (int i = 0; i < 2; ++i)
                for (int j = 0; j < 2; ++j) {
                    VecX row(N);
                    for (Eigen::Index k = 0; k < N; ++k) row(k) = jet.grad[static_cast<std::size_t>(k)](i, j);
                    add(jet.value(i, j) - (i == j ? double(relator_signs[r]) : 0.0), row);
                }
        }
        const WordJet mu = word_jet(gens, pres.cusps.at(0).meridian);
        const WordJet lambda = word_jet(gens, pres.cusps.at(0).longitude);
        auto entry_row = [&](const WordJet& jet, int i, int j) {
            VecX row(N);
            for (Eigen::Index k = 0; k < N; ++k) row(k) = jet.grad[static_cast<std::size_t>(k)](i, j);
            return row;
        };
        // Gauge: the meridian fixes infinity with unit upper-right entry, and
        // the gauge generator has equal diagonal entries.
        add(mu.value(1, 0), entry_row(mu, 1, 0));
        add(mu.value(0, 1) - 1.0, entry_row(mu, 0, 1));
        {
            VecX row = VecX::Zero(N);
            const auto k = static_cast<Eigen::Index>(4 * gauge_generator);
            row(k) = 1.0, row(k + 3) = -1.0;
            const Mat& b = gens[gauge_generator];
            add(b(0, 0) - b(1, 1), row);
        }
        const cd m00 = mu.value(0, 0), l00 = lambda.value(0, 0);
        u = log_near(m00 * m00, u_ref);
        v = log_near(l00 * l00, v_ref);
        if (complete) {
            add(m00 * m00 - 1.0, 2.0 * m00 * entry_row(mu, 0, 0));
            add(l00 * l00 - 1.0, 2.0 * l00 * entry_row(lambda, 0, 0));
        } else {
            const VecX row = double(target.p) * 2.0 / m00 * entry_row(mu, 0, 0) +
                             double(target.q) * 2.0 / l00 * entry_row(lambda, 0, 0);
            add(double(target.p) * u + double(target.q) * v - cd(0.0, two_pi * t), row);
        }
        f.resize(static_cast<Eigen::Index>(vals.size()));
        J.resize(f.size(), N);
        for (std::size_t i = 0; i < vals.size(); ++i) {
            f(static_cast<Eigen::Index>(i)) = vals[i];
            J.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
        }
    }
};

struct NewtonOutcome {
    VecX x;
    cd u, v;
    NewtonTrace trace;
    bool converged = false;
};

double max_abs(const VecX& v) { return v.size() == 0 ? 0.0 : v.cwiseAbs().maxCoeff(); }

NewtonOutcome newton(System& sys, VecX x, int max_iter, const SolverOptions& opt) {
    NewtonOutcome out;
    VecX f;
    MatX J;
    cd u, v;
    sys.eval(x, f, J, u, v);
    double r = max_abs(f);
    out.trace.residuals.push_back(r);
    for (int it = 0; it < max_iter && r > opt.stop_tol; ++it) {
        if (!std::isfinite(r) || r > opt.divergence) break;
        const VecX dx = Eigen::CompleteOrthogonalDecomposition<MatX>(J).solve(-f);
        x += dx;
        sys.u_ref = u, sys.v_ref = v;
        sys.eval(x, f, J, u, v);
        const double r_new = max_abs(f);
        out.trace.step_norms.push_back(max_abs(dx));
        out.trace.residuals.push_back(r_new);
        const bool stagnated = r_new <= opt.floor_tol && r_new > 0.5 * r;
        r = r_new;
        if (stagnated) break;
    }
    out.converged = std::isfinite(r) && r <= opt.floor_tol;
    out.x = x, out.u = u, out.v = v;
    out.trace.quadratic_tail =
        out.converged && quadratic_tail(out.trace.residuals, opt.certificate_constant, opt.certificate_floor);
    return out;
}

VecX pack(const Representation& rep) {
    VecX x(static_cast<Eigen::Index>(4 * rep.images.size()));
    for (std::size_t i = 0; i < rep.images.size(); ++i)
        for (int k = 0; k < 4; ++k) x(static_cast<Eigen::Index>(4 * i) + k) = rep.images[i].m(k / 2, k % 2);
    return x;
}

std::vector<Isometryd> to_isometries(const VecX& x) {
    std::vector<Isometryd> out;
    for (const auto& m : System::unpack(x)) out.emplace_back(m);
    return out;
}

std::size_t pick_gauge_generator(const MarkedPresentation& pres) {
    const Word& mu = pres.cusps.at(0).meridian;
    for (std::size_t g = 0; g < pres.rank(); ++g)
        if (!(mu.size() == 1 && static_cast<std::size_t>(std::abs(mu[0])) == g + 1)) return g;
    return 0;
}

void check_one_cusp(const MarkedPresentation& pres) {
    pres.validate();
    if (pres.cusps.size() != 1) throw ValidationError("the filling solver handles one-cusped groups");
}

}  // namespace

bool quadratic_tail(const std::vector<double>& residuals, double constant, double floor) {
    if (residuals.empty()) return false;
    if (residuals.size() == 1) return residuals[0] <= floor;
    const std::size_t n = residuals.size();
    for (std::size_t i = n - 1; i >= 1 && i + 2 >= n; --i)
        if (residuals[i] > std::max(constant * residuals[i - 1] * residuals[i - 1], floor)) return false;
    return true;
}

HolonomyState solve_complete(const MarkedPresentation& pres, const Representation& seed, SolverOptions opt) {
    check_one_cusp(pres);
    if (seed.images.size() != pres.rank()) throw ValidationError("seed has the wrong number of generators");
    System sys{pres, {}, 0, true, Slope{}};
    for (const auto& r : pres.relators) sys.relator_signs.push_back(nearest_identity_sign(evaluate(seed, r)));
    sys.gauge_generator = pick_gauge_generator(pres);
    NewtonOutcome o = newton(sys, pack(seed), opt.max_iterations, opt);
    if (!o.converged) throw NoConvergence("complete structure did not converge", o.trace.residuals.back());
    HolonomyState s;
    s.rep = make_representation(pres, to_isometries(o.x), 1e-9);
    s.u = o.u, s.v = o.v;
    s.relator_signs = sys.relator_signs;
    s.newton = o.trace;
    s.path = {0.0};
    return s;
}

HolonomyState solve_filling(const MarkedPresentation& pres, const HolonomyState& state0, const Slope& target,
                            SolverOptions opt) {
    check_one_cusp(pres);
    if (target.trivial()) throw ValidationError("filling slope must be nontrivial");
    for (const auto& s : opt.exceptional)
        if (s == target || (s.p == -target.p && s.q == -target.q))
            throw ExceptionalSlope("slope " + target.str() + " is in the exceptional list");
    if (opt.exclude_small && std::max(std::llabs(target.p), std::llabs(target.q)) <= 1)
        throw ExceptionalSlope("slope " + target.str() + " lies in the default exclusion disk");
    System sys{pres, state0.relator_signs, pick_gauge_generator(pres), false, target};
    VecX x = pack(state0.rep);
    cd u = state0.u, v = state0.v;
    double t = 0.0, h = opt.initial_step;
    std::vector<double> path{0.0};
    NewtonTrace last;
    while (t < 1.0) {
        const double t_next = std::min(1.0, t + h);
        sys.t = t_next, sys.u_ref = u, sys.v_ref = v;
        NewtonOutcome o = newton(sys, x, opt.continuation_iterations, opt);
        const bool ok = o.converged && max_abs(o.x - x) <= opt.step_bound;
        if (!ok) {
            h /= 2.0;
            if (h < opt.min_step)
                throw ExceptionalSlope("continuation towards " + target.str() + " failed at t = " + std::to_string(t));
            continue;
        }
        x = o.x, u = o.u, v = o.v, t = t_next;
        last = o.trace;
        path.push_back(t);
        h = std::min(opt.max_step, h * 1.5);
    }
    HolonomyState s;
    s.rep = make_representation(pres, to_isometries(x), 1e-8);
    s.u = u, s.v = v;
    s.target = target;
    s.relator_signs = state0.relator_signs;
    s.slope_sign = nearest_identity_sign(evaluate(s.rep, slope_word(pres, 0, target)));
    s.newton = last;
    s.path = path;
    return s;
}

double generator_distance(const Representation& a, const Representation& b) {
    double d = 0.0;
    for (std::size_t i = 0; i < a.images.size(); ++i) d = std::max(d, projective_distance(a.images[i], b.images[i]));
    return d;
}

std::vector<SequenceEntry> filling_sequence(const MarkedPresentation& pres, const HolonomyState& complete,
                                            const Slope& base, std::int64_t m, std::array<std::int64_t, 2> direction,
                                            int count, SolverOptions opt) {
    if (direction[0] == 0 && direction[1] == 0) throw ValidationError("direction must be nonzero");
    if (m < 1) throw ValidationError("denominator must be >= 1");
    std::vector<SequenceEntry> out;
    for (int k = 1; k <= count; ++k) {
        SequenceEntry e;
        e.k = k;
        const std::int64_t p = base.p + k * m * direction[0], q = base.q + k * m * direction[1];
        if (!is_primitive(p, q)) {
            e.notice = "skipped: (" + std::to_string(p) + "," + std::to_string(q) + ") is not primitive";
            out.push_back(std::move(e));
            continue;
        }
        e.slope = Slope(p, q);
        try {
            e.state = solve_filling(pres, complete, e.slope, opt);
            e.solved = true;
            e.generator_distance = generator_distance(e.state.rep, complete.rep);
        } catch (const std::exception& ex) {
            e.notice = ex.what();
        }
        out.push_back(std::move(e));
    }
    return out;
}

Axis core_axis(const MarkedPresentation& pres, const HolonomyState& state) {
    if (state.target.trivial()) throw DomainError("the complete structure has a parabolic cusp and no core axis");
    const auto c = complementary_slope(state.target);
    const Isometryd g = evaluate(state.rep, lattice_word(pres, 0, c[0], c[1]));
    if (classify(g, ClassifyTolerance<double>{1e-9, 1e-6}).type != IsometryType::loxodromic)
        throw DomainError("complementary slope is not loxodromic; filling too close to the exceptional region");
    const auto fp = fixed_points(g, 1e-12);
    if (fp.size() != 2) throw DomainError("core axis needs two fixed points");
    // Orient the axis by the meridian eigenvalue: on the eigenvector of z the
    // meridian acts by c z + d (or a at infinity).
    const Isometryd mu = evaluate(state.rep, pres.cusps.at(0).meridian);
    auto eigen_sq = [&](const BoundaryPointd& z) {
        const cd e = z.infinite ? mu.a() : mu.c() * z.value + mu.d();
        return e * e;
    };
    const cd target = std::exp(state.u);
    if (std::abs(eigen_sq(fp[0]) - target) <= std::abs(eigen_sq(fp[1]) - target)) return {fp[1], fp[0]};
    return {fp[0], fp[1]};
}

Isometryd geometric_root(const MarkedPresentation& pres, const HolonomyState& state, const Slope& z, std::int64_t m) {
    const Axis axis = core_axis(pres, state);
    const cd length = (double(z.p) * state.u + double(z.q) * state.v) / double(m);
    return loxodromic_about_axis(axis.from, axis.to, length) *
           elliptic_about_axis(axis.from, axis.to, -two_pi / double(m));
}

}  // namespace dehnext
