#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "hypflute/family.hpp"

namespace hypflute {

// Deterministic enumeration m -> (q_m, k_m) of (Q ∩ (1,∞)) × N in which
// every rational appears infinitely often. The rational ordering fronts a
// fixed seed list and continues in breadth-first Stern-Brocot order over
// the rationals > 1 (seeds skipped); the Cantor pairing interleaves
// repetitions. The seed list exists so that small denominators and the
// perfect squares 4 and 9 all recur within the first few dozen indices.
struct Enumeration {
    std::vector<Rational> seeds;

    static Enumeration standard();

    // j-th rational of the ordering (0-based).
    Rational rational_at(std::int64_t j) const;
    // q_m of the pairing: m -> (j, k) by inverse Cantor pairing, q = rational_at(j).
    Rational q_at(std::int64_t m) const;
    std::int64_t repetition_at(std::int64_t m) const;
};

struct SelectedGenerator {
    int m = 0;
    FamilyElement element;
    BisectorData fwd; // bisector of [i, element * i]
    BisectorData inv; // bisector of [i, element^-1 * i]
};

struct GroupSpec {
    double C = 0.0;
    Enumeration enumeration;
    std::vector<SelectedGenerator> generators;
};

struct SelectionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Greedy generator selection: gamma_0 uses the first enumerated q with
// n = 1 unconditionally; for m >= 1, n_m is the smallest p <= n_max with
//  (1) each of the four |extremities| of f_{q_m,p} exceeding every
//      |extremity| of gamma_{m-1} by more than `margin`,
//  (2) d(bisector fwd, bisector inv) >= 2C,
//  (3) distance >= C from all four bisectors of every earlier generator.
GroupSpec select_generators(int count, const Enumeration& en = Enumeration::standard(),
                            int n_max = kMaxFamilyIndex, double margin = 1e-9);

// Ping-pong certificate: all 2(M+1) bisectors pairwise disjoint (positive
// geodesic distance), the excluded half-planes pairwise disjoint (disjoint
// extremity intervals), the basepoint i strictly outside every excluded
// half-plane, and each generator mapping its inverse bisector onto its
// forward bisector on sampled points.
struct PingPongReport {
    bool ok = false;
    double min_geodesic_gap = 0.0; // over all bisector pairs
    double min_interval_gap = 0.0; // Euclidean, over extremity intervals
    std::string offending_pair;    // empty when ok
    std::string detail;
};

PingPongReport verify_pingpong(const GroupSpec& spec);

// z lies in the Dirichlet domain of the group based at i: z belongs to
// every closed half-plane H_i(gamma^{+/-1}).
bool dirichlet_membership(const GroupSpec& spec, const ExtendedPoint& z, double tol = 1e-12);

// All nonempty reduced words over the generators and their inverses up to
// a given length, as matrices. Letter 2j is generator j, letter 2j+1 its
// inverse; reduced means no adjacent cancellation.
//
// Word matrices are stored as raw products without re-normalizing the
// determinant: entries of distinct generators differ by many orders of
// magnitude, so the determinant recomputed from a rounded product drifts
// by ~ |M|^2 * eps and renormalization would be meaningless. The computed
// determinant is kept alongside; displacement formulas divide by it.
// Whenever it strays far from 1 (or below 0) the word provably has
// displacement far above any candidate minimum, so such words can be
// skipped in minimization.
struct WordMat {
    double a = 1.0, b = 0.0, c = 0.0, d = 1.0;
    double det = 1.0;
};

struct WordSet {
    int letters = 0;
    std::vector<WordMat> mats;
    std::vector<std::int32_t> parent; // index of the word this extends, -1 for length 1
    std::vector<std::int8_t> letter;  // last letter

    std::string describe(std::size_t idx) const; // e.g. "g2^-1 g0"
};

WordSet enumerate_words(const GroupSpec& spec, int word_len);

// Minimum hyperbolic displacement of z over all words in the set, with the
// index of the realizing word.
std::pair<double, std::size_t> min_displacement_over_words(const WordSet& ws,
                                                           const ExtendedPoint& z);

// Samples points of the Dirichlet domain and checks that every nonempty
// reduced word of length <= word_len displaces each of them by at least
// C - slack. Reports the minimum displacement found and where.
struct InjectivityCheck {
    bool ok = false;
    double min_displacement = 0.0;
    ExtendedPoint argmin_point;
    std::string argmin_word;
    int samples_used = 0;
};

InjectivityCheck injectivity_lower_bound_check(const GroupSpec& spec, int word_len, int samples,
                                               double slack = 1e-9, std::uint64_t seed = 20240901);

} // namespace hypflute
