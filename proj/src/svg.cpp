#include "hypflute/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <sstream>

#include "hypflute/geometry.hpp"
#include "hypflute/isometry.hpp"

namespace hypflute {

namespace {

std::string fmt(double v) {
    if (v == 0.0) return "0";
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

struct View {
    double pad = 42.0;
    double sx = 1.0, x_off = 0.0;
    double sy = 1.0, y_ref = 0.0, y_floor = 0.0, y_top = 1.0;
    bool log_y = false;
    double w = 0.0, h = 0.0;

    explicit View(const SceneDescription& sc) {
        w = sc.width;
        h = sc.height;
        log_y = sc.log_y;
        y_top = sc.y_max;
        sx = (w - 2.0 * pad) / (sc.x_max - sc.x_min);
        x_off = pad - sx * sc.x_min;
        y_floor = sc.log_y ? sc.y_min : 0.0;
        double span = sc.log_y ? std::log(sc.y_max / sc.y_min) : sc.y_max;
        sy = (h - 2.0 * pad) / span;
        y_ref = h - pad;
    }

    double X(double x) const { return x_off + sx * x; }
    double Y(double y) const {
        if (log_y) {
            double yy = std::max(y, y_floor);
            return y_ref - sy * std::log(yy / y_floor);
        }
        return y_ref - sy * std::max(y, 0.0);
    }
};

std::string polyline(const View& v, const std::vector<std::pair<double, double>>& pts,
                     const std::string& cls, bool closed) {
    std::ostringstream os;
    os << (closed ? "<polygon" : "<polyline") << " class=\"" << cls << "\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (i) os << ' ';
        os << fmt(v.X(pts[i].first)) << ',' << fmt(v.Y(pts[i].second));
    }
    os << "\"/>";
    return os.str();
}

std::vector<std::pair<double, double>> sample_semicircle(double c, double rho, int n) {
    std::vector<std::pair<double, double>> pts;
    pts.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
        double theta = M_PI * (1.0 - static_cast<double>(i) / n);
        pts.emplace_back(c + rho * std::cos(theta), rho * std::sin(theta));
    }
    return pts;
}

void draw_geodesic(std::ostringstream& body, const View& v, const Geodesic& g,
                   const std::string& cls) {
    if (g.is_vertical()) {
        body << "<line class=\"" << cls << "\" x1=\"" << fmt(v.X(g.x0)) << "\" y1=\""
             << fmt(v.pad) << "\" x2=\"" << fmt(v.X(g.x0)) << "\" y2=\""
             << fmt(v.y_ref) << "\"/>\n";
        return;
    }
    if (!v.log_y) {
        double x1 = v.X(g.center - g.radius), x2 = v.X(g.center + g.radius);
        body << "<path class=\"" << cls << "\" d=\"M " << fmt(x1) << ' ' << fmt(v.Y(0.0))
             << " A " << fmt(g.radius * v.sx) << ' ' << fmt(g.radius * v.sy)
             << " 0 0 1 " << fmt(x2) << ' ' << fmt(v.Y(0.0)) << "\"/>\n";
    } else {
        body << polyline(v, sample_semicircle(g.center, g.radius, 180), cls, false) << '\n';
    }
}

struct CurveDrawer {
    std::ostringstream& body;
    const View& v;
    const std::string& cls;

    void operator()(const Geodesic& g) const { draw_geodesic(body, v, g, cls); }

    void operator()(const Horocycle& h) const {
        if (h.center.is_infinity()) {
            double y = v.Y(h.through.y);
            body << "<line class=\"" << cls << "\" x1=\"" << fmt(v.pad) << "\" y1=\"" << fmt(y)
                 << "\" x2=\"" << fmt(v.w - v.pad) << "\" y2=\"" << fmt(y) << "\"/>\n";
            return;
        }
        double xi = h.center.x;
        double dx = h.through.x - xi, ty = h.through.y;
        double re = (dx * dx + ty * ty) / (2.0 * ty);
        if (!v.log_y) {
            body << "<ellipse class=\"" << cls << "\" cx=\"" << fmt(v.X(xi)) << "\" cy=\""
                 << fmt(v.Y(re)) << "\" rx=\"" << fmt(re * v.sx) << "\" ry=\"" << fmt(re * v.sy)
                 << "\"/>\n";
        } else {
            std::vector<std::pair<double, double>> pts;
            for (int i = 0; i <= 256; ++i) {
                double phi = 2.0 * M_PI * i / 256.0;
                pts.emplace_back(xi + re * std::sin(phi), re * (1.0 + std::cos(phi)));
            }
            body << polyline(v, pts, cls, true) << '\n';
        }
    }

    void operator()(const Hypercycle& hc) const {
        std::vector<std::pair<double, double>> pts;
        if (hc.base.is_vertical()) {
            // Euclidean ray from (x0, 0) through the point: extend to the
            // top of the viewport instead of a fixed sample range
            double x0 = hc.base.x0, dx = hc.through.x - x0, wy = hc.through.y;
            if (!v.log_y) {
                double t = v.y_top / wy;
                pts.emplace_back(x0, 0.0);
                pts.emplace_back(x0 + t * dx, v.y_top);
            } else {
                double t_lo = v.y_floor / wy, t_hi = v.y_top / wy;
                for (int i = 0; i <= 64; ++i) {
                    double t = t_lo * std::pow(t_hi / t_lo, i / 64.0);
                    pts.emplace_back(x0 + t * dx, t * wy);
                }
            }
        } else {
            for (const auto& p : sample_hypercycle(hc, 256)) pts.emplace_back(p.x, p.y);
        }
        body << polyline(v, pts, cls, false) << '\n';
    }

    void operator()(const HalfPlane& hp) const {
        if (hp.bisector.is_vertical()) {
            bool base_left = hp.basepoint.x < hp.bisector.x0;
            bool fill_left = hp.side == HalfPlane::Side::ContainsBasepoint ? base_left : !base_left;
            double xb = v.X(hp.bisector.x0);
            double x0 = fill_left ? v.pad : xb;
            double x1 = fill_left ? xb : v.w - v.pad;
            body << "<rect class=\"" << cls << "\" x=\"" << fmt(x0) << "\" y=\"" << fmt(v.pad)
                 << "\" width=\"" << fmt(x1 - x0) << "\" height=\"" << fmt(v.y_ref - v.pad)
                 << "\"/>\n";
            draw_geodesic(body, v, hp.bisector, cls + " edge");
            return;
        }
        double c = hp.bisector.center, rho = hp.bisector.radius;
        double bx = hp.basepoint.x - c, by = hp.basepoint.y;
        bool base_inside = bx * bx + by * by < rho * rho;
        bool fill_disc =
            hp.side == HalfPlane::Side::ContainsBasepoint ? base_inside : !base_inside;
        if (fill_disc) {
            if (!v.log_y) {
                body << "<path class=\"" << cls << "\" d=\"M " << fmt(v.X(c - rho)) << ' '
                     << fmt(v.Y(0.0)) << " A " << fmt(rho * v.sx) << ' ' << fmt(rho * v.sy)
                     << " 0 0 1 " << fmt(v.X(c + rho)) << ' ' << fmt(v.Y(0.0)) << " Z\"/>\n";
            } else {
                body << polyline(v, sample_semicircle(c, rho, 180), cls, true) << '\n';
            }
        } else {
            draw_geodesic(body, v, hp.bisector, cls + " edge");
        }
    }
};

std::pair<double, double> label_anchor(const Curve& curve) {
    if (const auto* g = std::get_if<Geodesic>(&curve)) {
        if (g->is_vertical()) return {g->x0, 0.0};
        return {g->center, g->radius};
    }
    if (const auto* h = std::get_if<Horocycle>(&curve)) return {h->through.x, h->through.y};
    if (const auto* hc = std::get_if<Hypercycle>(&curve)) return {hc->through.x, hc->through.y};
    const auto& hp = std::get<HalfPlane>(curve);
    if (hp.bisector.is_vertical()) return {hp.bisector.x0, 0.0};
    return {hp.bisector.center, hp.bisector.radius};
}

} // namespace

SceneDescription scene_for_spec(const GroupSpec& spec, const std::string& which, bool log_y) {
    if (which != "bisectors" && which != "axes" && which != "ray" && which != "domain" &&
        which != "all")
        throw std::domain_error("unknown scene selector: " + which);
    SceneDescription sc;
    sc.log_y = log_y;

    double x_lo = -1.0, x_hi = 1.0, r_max = 1.0, r_min = 1.0;
    for (const auto& g : spec.generators) {
        for (const BisectorData* bd : {&g.fwd, &g.inv}) {
            x_lo = std::min(x_lo, bd->extremities[0]);
            x_hi = std::max(x_hi, bd->extremities[1]);
            r_max = std::max(r_max, bd->radius);
            r_min = std::min(r_min, bd->radius);
        }
    }
    double x_span = x_hi - x_lo;
    sc.x_min = x_lo - 0.04 * x_span;
    sc.x_max = x_hi + 0.04 * x_span;
    sc.y_max = 1.3 * r_max;
    sc.y_min = log_y ? std::max(1e-300, 0.05 * std::min(1.0, r_min)) : 0.0;

    bool all = which == "all";
    if (all || which == "bisectors") {
        for (const auto& g : spec.generators) {
            sc.items.push_back({g.fwd.bisector, "fwd", "g" + std::to_string(g.m)});
            sc.items.push_back({g.inv.bisector, "inv", "g" + std::to_string(g.m) + "^-1"});
        }
    }
    if (all || which == "domain") {
        for (const auto& g : spec.generators) {
            for (const BisectorData* bd : {&g.fwd, &g.inv}) {
                HalfPlane hp{bd->bisector, HalfPlane::Side::Opposite,
                             ExtendedPoint::interior(0.0, 1.0)};
                sc.items.push_back({hp, "excluded", ""});
            }
        }
    }
    if (all || which == "axes") {
        for (const auto& g : spec.generators) {
            IsometryClass cls = classify(g.element.matrix);
            if (cls.axis)
                sc.items.push_back({*cls.axis, "axis", "axis g" + std::to_string(g.m)});
        }
    }
    if (all || which == "ray" || which == "domain") {
        sc.items.push_back({Geodesic::vertical(0.0), "ray", "ray"});
        sc.annotations.push_back({ExtendedPoint::interior(0.0, 1.0), "i"});
    }
    // reference hypercycles over the imaginary axis through -1+i and 1+i
    // (the slope +/-1 lines bounding the "below the diagonal" region)
    for (double side : {-1.0, 1.0}) {
        Hypercycle guide(Geodesic::vertical(0.0), ExtendedPoint::interior(side, 1.0));
        sc.items.push_back({guide, "guide", ""});
    }
    return sc;
}

std::string render_svg(const SceneDescription& scene) {
    View v(scene);
    std::ostringstream body;
    body << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << scene.width << "\" height=\""
         << scene.height << "\" viewBox=\"0 0 " << scene.width << ' ' << scene.height << "\">\n";
    body << "<style>\n"
            "text{font-family:monospace;font-size:11px;fill:#111827}\n"
            ".boundary{stroke:#111827;stroke-width:1;fill:none}\n"
            ".fwd{stroke:#2563eb;stroke-width:1.5;fill:none}\n"
            ".inv{stroke:#dc2626;stroke-width:1.5;fill:none}\n"
            ".axis{stroke:#059669;stroke-width:1.2;stroke-dasharray:6 3;fill:none}\n"
            ".ray{stroke:#7c3aed;stroke-width:1.5;fill:none}\n"
            ".guide{stroke:#9ca3af;stroke-width:1;stroke-dasharray:2 3;fill:none}\n"
            ".excluded{stroke:#475569;stroke-width:1;fill:#94a3b8;fill-opacity:0.25}\n"
            ".excluded.edge{fill:none}\n"
            "</style>\n";
    body << "<rect x=\"0\" y=\"0\" width=\"" << scene.width << "\" height=\"" << scene.height
         << "\" fill=\"#ffffff\"/>\n";
    // real axis
    body << "<line class=\"boundary\" x1=\"" << fmt(v.pad) << "\" y1=\"" << fmt(v.y_ref)
         << "\" x2=\"" << fmt(v.w - v.pad) << "\" y2=\"" << fmt(v.y_ref) << "\"/>\n";

    // fills first so strokes stay visible
    for (const auto& item : scene.items)
        if (std::holds_alternative<HalfPlane>(item.curve))
            std::visit(CurveDrawer{body, v, item.cls}, item.curve);
    for (const auto& item : scene.items)
        if (!std::holds_alternative<HalfPlane>(item.curve))
            std::visit(CurveDrawer{body, v, item.cls}, item.curve);

    for (const auto& item : scene.items) {
        if (item.label.empty()) continue;
        auto [ax, ay] = label_anchor(item.curve);
        body << "<text x=\"" << fmt(v.X(ax) + 3.0) << "\" y=\"" << fmt(v.Y(ay) - 4.0) << "\">"
             << item.label << "</text>\n";
    }
    for (const auto& an : scene.annotations) {
        double ax = an.at.is_interior() || an.at.is_boundary() ? an.at.x : 0.0;
        double ay = an.at.is_interior() ? an.at.y : 0.0;
        body << "<circle cx=\"" << fmt(v.X(ax)) << "\" cy=\"" << fmt(v.Y(ay))
             << "\" r=\"2.5\" fill=\"#111827\"/>\n";
        body << "<text x=\"" << fmt(v.X(ax) + 5.0) << "\" y=\"" << fmt(v.Y(ay) - 5.0) << "\">"
             << an.text << "</text>\n";
    }
    body << "</svg>\n";
    return body.str();
}

} // namespace hypflute
