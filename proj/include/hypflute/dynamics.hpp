#pragma once

#include <optional>
#include <string>
#include <vector>

#include "hypflute/selection.hpp"

namespace hypflute {

// Injectivity-radius profile along the vertical ray t -> i*t: at each
// height, the minimum displacement over nonempty reduced words of length
// <= word_len (an upper bound for the true injectivity radius at i*t,
// tightening as word_len grows). Heights are log-spaced over
// [t_min, t_max] together with every generator axis crossing height of
// the imaginary axis in range, so the profile resolves the dips where a
// generator realizes its translation length.
struct InjProfile {
    double t_min = 1.0, t_max = 1.0;
    int word_len = 1;
    std::vector<double> heights;
    std::vector<double> inj;
    std::vector<std::string> words;      // achieving word per height
    std::vector<double> crossing_heights; // axis crossings in [t_min, t_max]
};

InjProfile inj_profile(const GroupSpec& spec, double t_min, double t_max, int points, int word_len);

// Lower estimate of liminf_{t->inf} Inj(i*t) from the profile: the
// minimum profile value over the late windows (top third of the
// multiplicative window partition of [t_min, t_max], window factor
// `window`, default x2). Requires the profile to span at least 3 windows.
double iinj_estimate(const InjProfile& profile, double window = 2.0);

// Heights in the late-window region (used for verdicts: a crossing there
// certifies the 2*arccosh(2) ceiling is reachable by the profile).
double iinj_late_threshold(const InjProfile& profile, double window = 2.0);

struct NoHitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Backward-orbit Busemann search: r_k = B_inf(gamma^-k i, i) for k >= 1,
// strictly increasing and unbounded when the repelling fixed point of
// gamma is finite. Returns the smallest k with r_k in [lo, hi); throws
// NoHitError if the sequence jumps over the interval or the scan cap is
// reached.
struct StepTwoRecord {
    Isometry gamma;
    double lo = 0.0, hi = 0.0;
    std::vector<double> r;  // r_1 .. r_k_found (prefix scanned)
    int k_found = 0;
    double max_increment = 0.0;
    double displacement_bound = 0.0; // d(i, gamma^-1 i), a cap on increments
};

StepTwoRecord step2_search(const Isometry& gamma, double lo, double hi, int k_cap = 1000000);

// Orbit-closure witness for the horocycle-flow target ln q: the selected
// generators with parameter q provide alpha = f^-1 with alpha(inf) -> inf
// and B_inf(alpha^-1 i, i) -> ln q; residual ln(1 + 1/(q r_n^2)).
struct WitnessTerm {
    int m = 0;
    int n = 0;
    double alpha_inf = 0.0;   // alpha(inf) = r_n sqrt(q)
    double busemann = 0.0;    // B_inf(f i, i)
    double residual = 0.0;    // |busemann - ln q|
};

struct WitnessReport {
    Rational q;
    double target = 0.0;      // ln q
    std::vector<WitnessTerm> terms;
    bool increasing = false;  // |alpha_inf| strictly increasing
    bool pass = false;        // increasing && last residual < tol
    double tol = 1e-8;
};

struct InsufficientDataError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Requires at least min_terms selected generators with parameter q.
WitnessReport orbit_closure_witness(const GroupSpec& spec, const Rational& q, int min_terms,
                                    double tol = 1e-8);

// Almost-minimizing certificate for the vertical ray u(t) = i e^t: the
// defect max_t [ t - d_S(u(0), u(t)) ] where d_S is bounded above through
// words of length <= word_len (identity included). Zero when the ray is
// globally minimizing to the sampled depth.
struct DefectReport {
    double t_max = 0.0;
    int word_len = 0;
    double defect = 0.0;
    double argmax_t = 0.0;
    std::string argmax_word; // word beating the identity, empty if none
};

DefectReport almost_minimizing_defect(const GroupSpec& spec, double t_max, int word_len,
                                      int samples = 512);

} // namespace hypflute
