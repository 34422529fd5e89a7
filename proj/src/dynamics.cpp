#include "hypflute/dynamics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

namespace hypflute {

InjProfile inj_profile(const GroupSpec& spec, double t_min, double t_max, int points, int word_len) {
    if (!(t_min > 0.0) || !(t_max > t_min)) throw std::domain_error("need 0 < t_min < t_max");
    if (points < 1) throw std::domain_error("need at least 1 profile point");
    InjProfile prof;
    prof.t_min = t_min;
    prof.t_max = t_max;
    prof.word_len = word_len;

    std::vector<double> hs;
    hs.reserve(static_cast<std::size_t>(points) + 2 * spec.generators.size());
    double lr = std::log(t_max / t_min);
    if (points == 1) {
        // degenerate single-sample profile; no crossing refinement
        hs.push_back(t_min);
    } else {
        for (int j = 0; j < points; ++j)
            hs.push_back(t_min *
                         std::exp(lr * static_cast<double>(j) / static_cast<double>(points - 1)));
    }

    // heights where a generator axis crosses the imaginary axis: the
    // displacement of that generator dips to its translation length there
    if (points > 1) {
        for (const auto& g : spec.generators) {
            IsometryClass cls = classify(g.element.matrix);
            if (!cls.axis || cls.axis->kind != Geodesic::Kind::Semicircle) continue;
            double c = cls.axis->center, rho = cls.axis->radius;
            if (std::abs(c) >= rho) continue;
            double h = std::sqrt((rho - c) * (rho + c));
            if (h >= t_min && h <= t_max) {
                prof.crossing_heights.push_back(h);
                hs.push_back(h);
            }
        }
    }
    std::sort(hs.begin(), hs.end());
    hs.erase(std::unique(hs.begin(), hs.end()), hs.end());
    std::sort(prof.crossing_heights.begin(), prof.crossing_heights.end());

    WordSet ws = enumerate_words(spec, word_len);
    prof.heights = std::move(hs);
    prof.inj.reserve(prof.heights.size());
    prof.words.reserve(prof.heights.size());
    for (double h : prof.heights) {
        auto [d, arg] = min_displacement_over_words(ws, ExtendedPoint::interior(0.0, h));
        prof.inj.push_back(d);
        prof.words.push_back(ws.describe(arg));
    }
    return prof;
}

double iinj_late_threshold(const InjProfile& profile, double window) {
    if (!(window > 1.0)) throw std::domain_error("window factor must be > 1");
    double w_count = std::ceil(std::log(profile.t_max / profile.t_min) / std::log(window));
    if (w_count < 3.0)
        throw std::domain_error("profile spans fewer than 3 windows; widen [t_min, t_max]");
    double late = std::ceil(w_count / 3.0);
    return std::max(profile.t_min, profile.t_max / std::pow(window, late));
}

double iinj_estimate(const InjProfile& profile, double window) {
    double threshold = iinj_late_threshold(profile, window);
    double best = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < profile.heights.size(); ++i)
        if (profile.heights[i] >= threshold) best = std::min(best, profile.inj[i]);
    if (!std::isfinite(best)) throw std::domain_error("no profile heights in the late windows");
    return best;
}

StepTwoRecord step2_search(const Isometry& gamma, double lo, double hi, int k_cap) {
    if (!(lo < hi)) throw std::domain_error("need lo < hi");
    StepTwoRecord rec;
    rec.gamma = gamma;
    rec.lo = lo;
    rec.hi = hi;
    Isometry m = gamma.inverse();
    rec.displacement_bound = dist(ExtendedPoint::interior(0.0, 1.0),
                                  apply(m, ExtendedPoint::interior(0.0, 1.0)));

    // orbit z_k = gamma^-k i tracked as (x, ln y): y may underflow any
    // double but ln y stays representable, and the x-update only needs y
    // through c^2 y^2 which fades harmlessly
    double x = 0.0, ln_y = 0.0, prev_r = 0.0;
    for (int k = 1; k <= k_cap; ++k) {
        double y = std::exp(ln_y);
        double u = m.c * x + m.d, v = m.c * y;
        double den = u * u + v * v;
        x = ((m.a * x + m.b) * u + m.a * m.c * y * y) / den;
        ln_y -= std::log(den);
        double r = -ln_y;
        rec.r.push_back(r);
        rec.max_increment = std::max(rec.max_increment, r - prev_r);
        prev_r = r;
        if (r >= lo && r < hi) {
            rec.k_found = k;
            return rec;
        }
        if (r >= hi) {
            std::ostringstream os;
            os << "Busemann sequence jumped over [" << lo << ", " << hi << "): r_" << (k - 1)
               << " < " << lo << " but r_" << k << " = " << r;
            throw NoHitError(os.str());
        }
    }
    throw NoHitError("Busemann scan cap reached before entering the interval");
}

WitnessReport orbit_closure_witness(const GroupSpec& spec, const Rational& q, int min_terms,
                                    double tol) {
    WitnessReport rep;
    rep.q = q;
    rep.target = std::log(q.to_double());
    rep.tol = tol;
    for (const auto& g : spec.generators) {
        if (!(g.element.q == q)) continue;
        WitnessTerm term;
        term.m = g.m;
        term.n = g.element.n;
        double r = g.element.r;
        term.alpha_inf = r * std::sqrt(q.to_double());
        ExtendedPoint fi = apply(g.element.matrix, ExtendedPoint::interior(0.0, 1.0));
        term.busemann = -std::log(fi.y);
        // B - ln q = ln(1 + 1/(q r^2)); log1p keeps it when the direct
        // difference would cancel to zero
        term.residual = std::log1p(1.0 / (q.to_double() * r * r));
        rep.terms.push_back(term);
    }
    if (static_cast<int>(rep.terms.size()) < min_terms) {
        std::ostringstream os;
        os << "only " << rep.terms.size() << " generators with q=" << q.str() << ", need "
           << min_terms << "; enlarge the group";
        throw InsufficientDataError(os.str());
    }
    rep.increasing = true;
    for (std::size_t i = 1; i < rep.terms.size(); ++i)
        if (!(std::abs(rep.terms[i].alpha_inf) > std::abs(rep.terms[i - 1].alpha_inf)))
            rep.increasing = false;
    rep.pass = rep.increasing && rep.terms.back().residual < tol;
    return rep;
}

DefectReport almost_minimizing_defect(const GroupSpec& spec, double t_max, int word_len,
                                      int samples) {
    if (!(t_max > 0.0) || samples < 2) throw std::domain_error("need t_max > 0 and samples >= 2");
    DefectReport rep;
    rep.t_max = t_max;
    rep.word_len = word_len;
    WordSet ws = enumerate_words(spec, word_len);

    for (int j = 0; j < samples; ++j) {
        double t = t_max * static_cast<double>(j) / static_cast<double>(samples - 1);
        double best = t; // identity word
        std::size_t arg_word = std::numeric_limits<std::size_t>::max();
        if (t <= 300.0) {
            double Y = std::exp(t);
            for (std::size_t i = 0; i < ws.mats.size(); ++i) {
                const WordMat& w = ws.mats[i];
                if (!(w.det > 0.0)) continue;
                double den = w.d * w.d + w.c * w.c * Y * Y;
                double wx = (w.b * w.d + w.a * w.c * Y * Y) / den;
                double wy = w.det * Y / den;
                double s2 = (wx * wx + (wy - 1.0) * (wy - 1.0)) / (4.0 * wy);
                double d = 2.0 * std::asinh(std::sqrt(s2));
                if (d < best) { best = d; arg_word = i; }
            }
        } else {
            // d(i, w * iY) = t + ln((a^2 + c^2)/det) + O(e^-t poly): exact
            // to double precision at this depth
            for (std::size_t i = 0; i < ws.mats.size(); ++i) {
                const WordMat& w = ws.mats[i];
                if (!(w.det > 0.0)) continue;
                double d = t + std::log((w.a * w.a + w.c * w.c) / w.det);
                if (d < best) { best = d; arg_word = i; }
            }
        }
        double defect = t - best;
        if (defect > rep.defect) {
            rep.defect = defect;
            rep.argmax_t = t;
            rep.argmax_word = arg_word == std::numeric_limits<std::size_t>::max()
                                  ? std::string()
                                  : ws.describe(arg_word);
        }
    }
    return rep;
}

} // namespace hypflute
