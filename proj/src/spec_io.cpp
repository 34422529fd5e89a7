#include "hypflute/spec_io.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

namespace hypflute {

namespace {

ordered_json bisector_json(const BisectorData& bd) {
    ordered_json j;
    j["center"] = bd.center;
    j["radius"] = bd.radius;
    j["extremities"] = {bd.extremities[0], bd.extremities[1]};
    return j;
}

} // namespace

ordered_json spec_to_json(const GroupSpec& spec) {
    ordered_json j;
    j["schema"] = kSpecSchema;
    j["C"] = spec.C;
    ordered_json en;
    en["type"] = "seeded-stern-brocot-cantor";
    ordered_json seeds = ordered_json::array();
    for (const auto& s : spec.enumeration.seeds) seeds.push_back(s.str());
    en["seeds"] = seeds;
    j["enumeration"] = en;
    ordered_json gens = ordered_json::array();
    for (const auto& g : spec.generators) {
        ordered_json gj;
        gj["m"] = g.m;
        gj["q"] = g.element.q.str();
        gj["n"] = g.element.n;
        gj["branch"] = g.element.branch == Branch::G ? "G" : "H";
        gj["r"] = g.element.r;
        gj["matrix"] = {g.element.matrix.a, g.element.matrix.b, g.element.matrix.c,
                        g.element.matrix.d};
        gj["trace"] = g.element.matrix.trace();
        IsometryClass cls = classify(g.element.matrix);
        gj["translation_length"] = cls.translation_length ? *cls.translation_length : 0.0;
        ordered_json bis;
        bis["fwd"] = bisector_json(g.fwd);
        bis["inv"] = bisector_json(g.inv);
        gj["bisectors"] = bis;
        gens.push_back(gj);
    }
    j["generators"] = gens;
    return j;
}

GroupSpec spec_from_json(const ordered_json& j) {
    try {
        if (j.at("schema").get<std::string>() != kSpecSchema)
            throw SpecFormatError("unknown schema: " + j.at("schema").get<std::string>());
        GroupSpec spec;
        spec.C = j.at("C").get<double>();
        const auto& en = j.at("enumeration");
        if (en.at("type").get<std::string>() != "seeded-stern-brocot-cantor")
            throw SpecFormatError("unknown enumeration type");
        for (const auto& s : en.at("seeds"))
            spec.enumeration.seeds.push_back(Rational::parse(s.get<std::string>()));
        for (const auto& gj : j.at("generators")) {
            SelectedGenerator g;
            g.m = gj.at("m").get<int>();
            Rational q = Rational::parse(gj.at("q").get<std::string>());
            int n = gj.at("n").get<int>();
            g.element = make_family_element(q, n);
            g.fwd = bisector_data(g.element, false);
            g.inv = bisector_data(g.element, true);
            // Stored doubles take precedence over the regenerated ones so that
            // validation can detect a file whose entries were altered after the
            // fact; exact fields are always derived from (q, n).
            const auto& mj = gj.at("matrix");
            if (mj.size() != 4) throw SpecFormatError("matrix must have 4 entries");
            // Entries are assigned directly rather than through the
            // normalizing constructor: stored matrices are already
            // normalized, and skipping the renormalization keeps
            // load -> save byte-identical.
            g.element.matrix.a = mj.at(0).get<double>();
            g.element.matrix.b = mj.at(1).get<double>();
            g.element.matrix.c = mj.at(2).get<double>();
            g.element.matrix.d = mj.at(3).get<double>();
            double det = g.element.matrix.a * g.element.matrix.d
                         - g.element.matrix.b * g.element.matrix.c;
            if (!(det > 0.0)) throw SpecFormatError("matrix determinant must be positive");
            g.element.r = gj.at("r").get<double>();
            const auto& bis = gj.at("bisectors");
            for (bool inverse : {false, true}) {
                const auto& bj = bis.at(inverse ? "inv" : "fwd");
                BisectorData& bd = inverse ? g.inv : g.fwd;
                bd.center = bj.at("center").get<double>();
                bd.radius = bj.at("radius").get<double>();
                bd.extremities[0] = bj.at("extremities").at(0).get<double>();
                bd.extremities[1] = bj.at("extremities").at(1).get<double>();
                bd.bisector = Geodesic::semicircle(bd.center, bd.radius);
            }
            spec.generators.push_back(std::move(g));
        }
        return spec;
    } catch (const ordered_json::exception& e) {
        throw SpecFormatError(std::string("malformed spec: ") + e.what());
    }
}

std::string save_spec(const GroupSpec& spec) { return spec_to_json(spec).dump(2) + "\n"; }

void save_spec_file(const GroupSpec& spec, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open for writing: " + path);
    out << save_spec(spec);
}

GroupSpec load_spec_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw SpecFormatError("cannot open spec file: " + path);
    ordered_json j;
    try {
        in >> j;
    } catch (const ordered_json::exception& e) {
        throw SpecFormatError(std::string("spec is not valid JSON: ") + e.what());
    }
    return spec_from_json(j);
}

void validate_spec(const GroupSpec& spec, double tol) {
    if (!(std::abs(spec.C - constant_C()) <= tol))
        throw SpecFormatError("constant C does not match asinh(1)/2");
    int prev_m = -1;
    for (const auto& g : spec.generators) {
        if (g.m <= prev_m) throw SpecFormatError("generator indices m must increase");
        prev_m = g.m;
        FamilyElement fresh = make_family_element(g.element.q, g.element.n);
        const double* have = &g.element.matrix.a;
        const double* want = &fresh.matrix.a;
        for (int k = 0; k < 4; ++k)
            if (!(std::abs(have[k] - want[k]) <=
                  tol * std::max(1.0, std::abs(want[k]))))
                throw SpecFormatError("generator matrix does not regenerate from (q, n) at m=" +
                                      std::to_string(g.m));
        for (bool inverse : {false, true}) {
            const BisectorData& have_b = inverse ? g.inv : g.fwd;
            BisectorData want_b = bisector_data(fresh, inverse);
            double scale = std::max(1.0, std::abs(want_b.center));
            if (!(std::abs(have_b.center - want_b.center) <= tol * scale) ||
                !(std::abs(have_b.radius - want_b.radius) <= tol * scale))
                throw SpecFormatError("bisector does not regenerate from (q, n) at m=" +
                                      std::to_string(g.m));
        }
    }
}

ordered_json report_json(const PingPongReport& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "pingpong";
    j["ok"] = r.ok;
    j["min_geodesic_gap"] = r.min_geodesic_gap;
    j["min_interval_gap"] = r.min_interval_gap;
    j["offending_pair"] = r.offending_pair;
    j["detail"] = r.detail;
    return j;
}

ordered_json report_json(const InjectivityCheck& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "injectivity";
    j["ok"] = r.ok;
    j["min_displacement"] = r.min_displacement;
    j["argmin_point"] = {r.argmin_point.x, r.argmin_point.y};
    j["argmin_word"] = r.argmin_word;
    j["samples_used"] = r.samples_used;
    return j;
}

ordered_json report_json(const WitnessReport& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "witness";
    j["q"] = r.q.str();
    j["target"] = r.target;
    ordered_json terms = ordered_json::array();
    for (const auto& t : r.terms) {
        ordered_json tj;
        tj["m"] = t.m;
        tj["n"] = t.n;
        tj["alpha_inf"] = t.alpha_inf;
        tj["busemann"] = t.busemann;
        tj["residual"] = t.residual;
        terms.push_back(tj);
    }
    j["terms"] = terms;
    j["increasing"] = r.increasing;
    j["pass"] = r.pass;
    j["tol"] = r.tol;
    return j;
}

ordered_json report_json(const InjProfile& p, double estimate, const std::string& verdict) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "inj_profile";
    j["t_min"] = p.t_min;
    j["t_max"] = p.t_max;
    j["word_len"] = p.word_len;
    j["crossing_heights"] = p.crossing_heights;
    j["heights"] = p.heights;
    j["inj"] = p.inj;
    j["words"] = p.words;
    j["estimate"] = estimate;
    j["verdict"] = verdict;
    return j;
}

ordered_json report_json(const StepTwoRecord& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "busemann_hit";
    j["matrix"] = {r.gamma.a, r.gamma.b, r.gamma.c, r.gamma.d};
    j["interval"] = {r.lo, r.hi};
    j["k_found"] = r.k_found;
    j["r"] = r.r;
    j["max_increment"] = r.max_increment;
    j["displacement_bound"] = r.displacement_bound;
    return j;
}

ordered_json report_json(const DefectReport& r) {
    ordered_json j;
    j["schema"] = kReportSchema;
    j["kind"] = "ray_defect";
    j["t_max"] = r.t_max;
    j["word_len"] = r.word_len;
    j["defect"] = r.defect;
    j["argmax_t"] = r.argmax_t;
    j["argmax_word"] = r.argmax_word;
    return j;
}

} // namespace hypflute
