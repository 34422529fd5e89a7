#include "hypflute/selection.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <stdexcept>

namespace hypflute {

namespace {

// BFS index -> rational > 1 in the Stern-Brocot subtree rooted at 2/1.
Rational stern_brocot_gt1(std::int64_t i) {
    std::int64_t level = 0;
    while (((std::int64_t{1} << (level + 1)) - 1) <= i) ++level;
    std::int64_t pos = i - ((std::int64_t{1} << level) - 1);
    std::int64_t lo_n = 1, lo_d = 1, hi_n = 1, hi_d = 0;
    std::int64_t cur_n = 2, cur_d = 1;
    for (std::int64_t bit = level - 1; bit >= 0; --bit) {
        if ((pos >> bit) & 1) { lo_n = cur_n; lo_d = cur_d; }
        else { hi_n = cur_n; hi_d = cur_d; }
        cur_n = lo_n + hi_n;
        cur_d = lo_d + hi_d;
    }
    return Rational(cur_n, cur_d);
}

std::pair<std::int64_t, std::int64_t> cantor_unpair(std::int64_t m) {
    std::int64_t w = static_cast<std::int64_t>((std::sqrt(8.0 * static_cast<double>(m) + 1.0) - 1.0) / 2.0);
    while ((w + 1) * (w + 2) / 2 <= m) ++w;
    while (w * (w + 1) / 2 > m) --w;
    std::int64_t k = m - w * (w + 1) / 2;
    return {w - k, k}; // (j, k)
}

} // namespace

Enumeration Enumeration::standard() {
    Enumeration en;
    en.seeds = {Rational(3, 2), Rational(2), Rational(7, 2), Rational(4), Rational(9)};
    return en;
}

Rational Enumeration::rational_at(std::int64_t j) const {
    if (j < 0) throw std::domain_error("enumeration index must be nonnegative");
    if (j < static_cast<std::int64_t>(seeds.size())) return seeds[static_cast<std::size_t>(j)];
    std::int64_t want = j - static_cast<std::int64_t>(seeds.size());
    std::int64_t found = -1;
    for (std::int64_t i = 0;; ++i) {
        Rational r = stern_brocot_gt1(i);
        if (std::find(seeds.begin(), seeds.end(), r) != seeds.end()) continue;
        if (++found == want) return r;
    }
}

Rational Enumeration::q_at(std::int64_t m) const { return rational_at(cantor_unpair(m).first); }

std::int64_t Enumeration::repetition_at(std::int64_t m) const { return cantor_unpair(m).second; }

namespace {

double min_abs_extremity(const SelectedGenerator& g) {
    double v = std::abs(g.fwd.extremities[0]);
    for (double e : {g.fwd.extremities[1], g.inv.extremities[0], g.inv.extremities[1]})
        v = std::min(v, std::abs(e));
    return v;
}

double max_abs_extremity(const SelectedGenerator& g) {
    double v = std::abs(g.fwd.extremities[0]);
    for (double e : {g.fwd.extremities[1], g.inv.extremities[0], g.inv.extremities[1]})
        v = std::max(v, std::abs(e));
    return v;
}

SelectedGenerator build_generator(int m, const Rational& q, int n) {
    SelectedGenerator g;
    g.m = m;
    g.element = make_family_element(q, n);
    g.fwd = bisector_data(g.element, false);
    g.inv = bisector_data(g.element, true);
    return g;
}

} // namespace

GroupSpec select_generators(int count, const Enumeration& en, int n_max, double margin) {
    if (count < 1) throw std::domain_error("select_generators: count must be >= 1");
    if (n_max < 1 || n_max > kMaxFamilyIndex)
        throw std::domain_error("select_generators: n_max out of range");
    GroupSpec spec;
    spec.C = constant_C();
    spec.enumeration = en;
    spec.generators.reserve(static_cast<std::size_t>(count));

    for (int m = 0; m < count; ++m) {
        Rational q = en.q_at(m);
        if (m == 0) {
            // first enumeration entry, accepted unconditionally at n = 1
            spec.generators.push_back(build_generator(0, q, 1));
            continue;
        }
        const SelectedGenerator& prev = spec.generators.back();
        double threshold = max_abs_extremity(prev) + margin;
        bool placed = false;
        for (int p = 1; p <= n_max && !placed; ++p) {
            SelectedGenerator cand = build_generator(m, q, p);
            if (min_abs_extremity(cand) <= threshold) continue; // condition 1
            if (dist_geodesic_geodesic(cand.fwd.bisector, cand.inv.bisector) < 2.0 * spec.C)
                continue; // condition 2
            bool clear = true; // condition 3
            for (const SelectedGenerator& old : spec.generators) {
                for (const BisectorData* nb : {&cand.fwd, &cand.inv}) {
                    for (const BisectorData* ob : {&old.fwd, &old.inv}) {
                        if (dist_geodesic_geodesic(nb->bisector, ob->bisector) < spec.C) {
                            clear = false;
                            break;
                        }
                    }
                    if (!clear) break;
                }
                if (!clear) break;
            }
            if (!clear) continue;
            spec.generators.push_back(std::move(cand));
            placed = true;
        }
        if (!placed) {
            std::ostringstream os;
            os << "selection exhausted n <= " << n_max << " at m=" << m << " (q=" << q.str()
               << "); previous max |extremity| " << max_abs_extremity(prev);
            throw SelectionError(os.str());
        }
    }
    return spec;
}

namespace {

std::string bisector_name(int m, bool inverse) {
    return "g" + std::to_string(m) + (inverse ? "^-1" : "");
}

} // namespace

PingPongReport verify_pingpong(const GroupSpec& spec) {
    PingPongReport rep;
    rep.min_geodesic_gap = std::numeric_limits<double>::infinity();
    rep.min_interval_gap = std::numeric_limits<double>::infinity();

    struct Entry {
        const BisectorData* bd;
        int m;
        bool inverse;
    };
    std::vector<Entry> entries;
    for (const auto& g : spec.generators) {
        entries.push_back({&g.fwd, g.m, false});
        entries.push_back({&g.inv, g.m, true});
    }
    if (entries.empty()) {
        rep.ok = true;
        rep.detail = "empty group: nothing to separate";
        return rep;
    }

    // basepoint i strictly outside every excluded half-plane
    for (const auto& e : entries) {
        double c = e.bd->center, rho = e.bd->radius;
        if (!(c * c + 1.0 > rho * rho)) {
            rep.offending_pair = bisector_name(e.m, e.inverse);
            rep.detail = "basepoint i is not outside the bisector circle " + rep.offending_pair;
            return rep;
        }
    }

    // excluded half-planes pairwise disjoint <=> extremity intervals disjoint
    std::vector<std::size_t> order(entries.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
        return entries[x].bd->extremities[0] < entries[y].bd->extremities[0];
    });
    for (std::size_t i = 0; i + 1 < order.size(); ++i) {
        const Entry& lo = entries[order[i]];
        const Entry& hi = entries[order[i + 1]];
        double gap = hi.bd->extremities[0] - lo.bd->extremities[1];
        rep.min_interval_gap = std::min(rep.min_interval_gap, gap);
        if (!(gap > 0.0)) {
            rep.offending_pair = bisector_name(lo.m, lo.inverse) + " vs " + bisector_name(hi.m, hi.inverse);
            rep.detail = "excluded half-planes overlap: " + rep.offending_pair;
            return rep;
        }
    }

    // all bisectors pairwise at positive geodesic distance
    for (std::size_t i = 0; i < entries.size(); ++i) {
        for (std::size_t j = i + 1; j < entries.size(); ++j) {
            double d = dist_geodesic_geodesic(entries[i].bd->bisector, entries[j].bd->bisector);
            if (d < rep.min_geodesic_gap) rep.min_geodesic_gap = d;
            if (!(d > 0.0)) {
                rep.offending_pair = bisector_name(entries[i].m, entries[i].inverse) + " vs " +
                                     bisector_name(entries[j].m, entries[j].inverse);
                rep.detail = "bisectors touch or cross: " + rep.offending_pair;
                return rep;
            }
        }
    }

    // each generator maps its inverse bisector onto its forward bisector
    for (const auto& g : spec.generators) {
        for (double theta : {0.25 * M_PI, 0.5 * M_PI, 0.75 * M_PI}) {
            ExtendedPoint z = ExtendedPoint::interior(g.inv.center + g.inv.radius * std::cos(theta),
                                                      g.inv.radius * std::sin(theta));
            ExtendedPoint w = apply(g.element.matrix, z);
            double dx = w.x - g.fwd.center;
            double off = std::abs(std::sqrt(dx * dx + w.y * w.y) - g.fwd.radius);
            if (off > 1e-9 * std::max(1.0, g.fwd.radius)) {
                rep.offending_pair = bisector_name(g.m, false);
                rep.detail = "generator does not exchange its bisectors at " + bisector_name(g.m, false);
                return rep;
            }
        }
    }

    rep.ok = true;
    rep.detail = "all half-planes disjoint";
    return rep;
}

bool dirichlet_membership(const GroupSpec& spec, const ExtendedPoint& z, double tol) {
    for (const auto& g : spec.generators) {
        for (const BisectorData* bd : {&g.fwd, &g.inv}) {
            HalfPlane hp{bd->bisector, HalfPlane::Side::ContainsBasepoint,
                         ExtendedPoint::interior(0.0, 1.0)};
            if (!halfplane_contains(hp, z, tol)) return false;
        }
    }
    return true;
}

namespace {

WordMat word_mul(const WordMat& m, const WordMat& n) {
    WordMat out;
    out.a = m.a * n.a + m.b * n.c;
    out.b = m.a * n.b + m.b * n.d;
    out.c = m.c * n.a + m.d * n.c;
    out.d = m.c * n.b + m.d * n.d;
    out.det = out.a * out.d - out.b * out.c;
    return out;
}

} // namespace

WordSet enumerate_words(const GroupSpec& spec, int word_len) {
    if (word_len < 1) throw std::domain_error("word length must be >= 1");
    WordSet ws;
    ws.letters = 2 * static_cast<int>(spec.generators.size());
    std::vector<WordMat> letter_mats;
    letter_mats.reserve(static_cast<std::size_t>(ws.letters));
    for (const auto& g : spec.generators) {
        const Isometry& f = g.element.matrix;
        Isometry fi = f.inverse();
        letter_mats.push_back({f.a, f.b, f.c, f.d, f.a * f.d - f.b * f.c});
        letter_mats.push_back({fi.a, fi.b, fi.c, fi.d, fi.a * fi.d - fi.b * fi.c});
    }
    std::size_t begin = 0, end = 0;
    for (int i = 0; i < ws.letters; ++i) {
        ws.mats.push_back(letter_mats[static_cast<std::size_t>(i)]);
        ws.parent.push_back(-1);
        ws.letter.push_back(static_cast<std::int8_t>(i));
    }
    end = ws.mats.size();
    for (int len = 2; len <= word_len; ++len) {
        for (std::size_t w = begin; w < end; ++w) {
            int last = ws.letter[w];
            for (int l = 0; l < ws.letters; ++l) {
                if (l == (last ^ 1)) continue; // cancellation
                ws.mats.push_back(word_mul(ws.mats[w], letter_mats[static_cast<std::size_t>(l)]));
                ws.parent.push_back(static_cast<std::int32_t>(w));
                ws.letter.push_back(static_cast<std::int8_t>(l));
            }
        }
        begin = end;
        end = ws.mats.size();
    }
    return ws;
}

std::string WordSet::describe(std::size_t idx) const {
    std::vector<int> ls;
    for (std::int32_t i = static_cast<std::int32_t>(idx); i >= 0; i = parent[static_cast<std::size_t>(i)])
        ls.push_back(letter[static_cast<std::size_t>(i)]);
    std::string out;
    for (auto it = ls.rbegin(); it != ls.rend(); ++it) {
        if (!out.empty()) out += ' ';
        out += "g" + std::to_string(*it / 2) + (*it % 2 ? "^-1" : "");
    }
    return out;
}

std::pair<double, std::size_t> min_displacement_over_words(const WordSet& ws, const ExtendedPoint& z) {
    // minimize sinh^2(d/2) = |z - wz|^2 / (4 Im z Im wz); monotone in d.
    // Im wz = det * y / |cz+d|^2. Words whose computed det collapsed to
    // <= 0 have true displacement >= 2 asinh(1e8 / 2) and are skipped.
    double best = std::numeric_limits<double>::infinity();
    std::size_t arg = 0;
    const double x = z.x, y = z.y;
    for (std::size_t i = 0; i < ws.mats.size(); ++i) {
        const WordMat& m = ws.mats[i];
        if (!(m.det > 0.0)) continue;
        double u = m.c * x + m.d, v = m.c * y;
        double den = u * u + v * v;
        double wx = ((m.a * x + m.b) * u + m.a * m.c * y * y) / den;
        double wy = m.det * y / den;
        double dx = wx - x, dy = wy - y;
        double s2 = (dx * dx + dy * dy) / (4.0 * y * wy);
        if (s2 < best) { best = s2; arg = i; }
    }
    return {2.0 * std::asinh(std::sqrt(best)), arg};
}

InjectivityCheck injectivity_lower_bound_check(const GroupSpec& spec, int word_len, int samples,
                                               double slack, std::uint64_t seed) {
    InjectivityCheck chk;
    chk.min_displacement = std::numeric_limits<double>::infinity();
    chk.argmin_point = ExtendedPoint::interior(0.0, 1.0);
    WordSet ws = enumerate_words(spec, word_len);

    std::mt19937_64 rng(seed);
    auto uniform = [&](double lo, double hi) {
        return lo + (hi - lo) * (static_cast<double>(rng() >> 11) * 0x1.0p-53);
    };

    std::vector<ExtendedPoint> pts;
    pts.push_back(ExtendedPoint::interior(0.0, 1.0));
    int guard = 0;
    while (static_cast<int>(pts.size()) < samples && guard < 100000) {
        ++guard;
        double x = uniform(-2.5, 2.5);
        double y = std::exp(uniform(std::log(0.05), std::log(20.0)));
        ExtendedPoint z = ExtendedPoint::interior(x, y);
        if (dirichlet_membership(spec, z)) pts.push_back(z);
    }
    if (static_cast<int>(pts.size()) < samples)
        throw std::runtime_error("could not sample enough Dirichlet-domain points");

    for (const auto& z : pts) {
        auto [d, arg] = min_displacement_over_words(ws, z);
        if (d < chk.min_displacement) {
            chk.min_displacement = d;
            chk.argmin_point = z;
            chk.argmin_word = ws.describe(arg);
        }
    }
    chk.samples_used = static_cast<int>(pts.size());
    chk.ok = chk.min_displacement >= constant_C() - slack;
    return chk;
}

} // namespace hypflute
