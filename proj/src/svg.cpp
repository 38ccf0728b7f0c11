#include "jpdom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>
#include <vector>

#include "jpdom/io.hpp"
#include "jpdom/spectral_moments.hpp"

namespace jpdom {

namespace {

constexpr double two_pi = 2.0 * std::numbers::pi;

// screen coordinates: y flipped, so the picture is math-oriented
std::string pt(double x, double y) { return format_double(x) + "," + format_double(-y); }

std::string polyline(const std::vector<cplx>& pts, const std::string& style) {
    std::ostringstream s;
    s << "<polyline fill=\"none\" " << style << " points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i)
        s << (i ? " " : "") << pt(pts[i].real(), pts[i].imag());
    s << "\"/>\n";
    return s.str();
}

std::vector<cplx> circle_arc(double a, double b, std::size_t n = 48) {
    std::vector<cplx> pts;
    for (std::size_t i = 0; i <= n; ++i)
        pts.push_back(std::polar(1.0, a + (b - a) * static_cast<double>(i) /
                                              static_cast<double>(n)));
    return pts;
}

std::vector<cplx> geodesic_points(const GeodesicArc& g, std::size_t n = 48) {
    std::vector<cplx> pts;
    for (std::size_t i = 0; i <= n; ++i)
        pts.push_back(g.point(static_cast<double>(i) / static_cast<double>(n)));
    return pts;
}

std::string svg_open(double w, double h, double x0, double y0, double x1, double y1) {
    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
      << "\" viewBox=\"" << format_double(x0) << " " << format_double(-y1) << " "
      << format_double(x1 - x0) << " " << format_double(y1 - y0) << "\">\n";
    return s.str();
}

} // namespace

std::string render_domain_svg(const PrivalovDomain& D) {
    std::ostringstream s;
    s << svg_open(640, 640, -1.25, -1.25, 1.25, 1.25);
    s << polyline(circle_arc(0.0, two_pi, 256),
                  "stroke=\"#cccccc\" stroke-width=\"0.004\"");

    const auto& gaps = D.set().gaps();
    // shaded caps: along the unit circle over the gap, back along the geodesic
    for (std::size_t i = 0; i < gaps.size(); ++i) {
        const auto rim = circle_arc(gaps[i].start, gaps[i].end);
        auto arc = geodesic_points(D.geodesics()[i]);
        std::reverse(arc.begin(), arc.end());
        s << "<path fill=\"#f5c78e\" fill-opacity=\"0.7\" stroke=\"none\" d=\"M ";
        for (const cplx& p : rim) s << pt(p.real(), p.imag()) << " L ";
        for (std::size_t k = 0; k < arc.size(); ++k)
            s << pt(arc[k].real(), arc[k].imag()) << (k + 1 < arc.size() ? " L " : " Z\"/>\n");
    }
    // the set: arcs between consecutive gaps
    if (gaps.empty()) {
        s << polyline(circle_arc(0.0, two_pi, 256),
                      "stroke=\"#1f4e9c\" stroke-width=\"0.015\"");
    } else {
        for (std::size_t i = 0; i < gaps.size(); ++i) {
            const double a = gaps[i].end;
            const double b = i + 1 < gaps.size() ? gaps[i + 1].start : gaps[0].start + two_pi;
            if (b > a)
                s << polyline(circle_arc(a, b, std::max<std::size_t>(8, static_cast<std::size_t>(
                                                  64.0 * (b - a)))),
                              "stroke=\"#1f4e9c\" stroke-width=\"0.015\"");
        }
    }
    for (const GeodesicArc& g : D.geodesics())
        s << polyline(geodesic_points(g), "stroke=\"#c0392b\" stroke-width=\"0.008\"");
    s << "<circle cx=\"0\" cy=\"0\" r=\"0.012\" fill=\"#000000\"/>\n";
    s << "</svg>\n";
    return s.str();
}

std::string render_mapping_svg(double L, double t) {
    const PrivalovDomain D = omega_disk_realization(L);
    const GeodesicArc& g = D.geodesics()[0];
    std::ostringstream s;
    s << svg_open(960, 520, -1.3, -1.4, 3.9, 1.4);

    // left: the disk realization with the marked boundary piece
    s << polyline(circle_arc(0.0, two_pi, 256), "stroke=\"#888888\" stroke-width=\"0.006\"");
    s << polyline(geodesic_points(g, 96), "stroke=\"#c0392b\" stroke-width=\"0.01\"");
    std::vector<cplx> marked;
    for (std::size_t i = 0; i <= 48; ++i) {
        const cplx p = g.point(static_cast<double>(i) / 48.0);
        if (std::arg(cayley(p)) <= t) marked.push_back(p);
    }
    if (marked.size() > 1)
        s << polyline(marked, "stroke=\"#1f8c3b\" stroke-width=\"0.022\"");
    s << "<circle cx=\"0\" cy=\"0\" r=\"0.015\" fill=\"#000000\"/>\n";

    // right: the slit half-plane, axis at x offset 2.6
    const double ox = 2.6;
    s << polyline({cplx(ox - 1.2, 0.0), cplx(ox + 1.2, 0.0)},
                  "stroke=\"#888888\" stroke-width=\"0.006\"");
    std::vector<cplx> slit, sub;
    for (std::size_t i = 0; i <= 96; ++i) {
        const double a = std::numbers::pi * static_cast<double>(i) / 96.0;
        const cplx w = cplx(ox, 0.0) + std::polar(L, a);
        slit.push_back(w);
        if (a <= t) sub.push_back(w);
    }
    s << polyline(slit, "stroke=\"#c0392b\" stroke-width=\"0.01\"");
    if (sub.size() > 1) s << polyline(sub, "stroke=\"#1f8c3b\" stroke-width=\"0.022\"");
    // image of the marked arc on the real axis under the slit-removing map
    const double lo = 2.0 * L * std::cos(t) / (1.0 - L * L);
    const double hi = 2.0 * L / (1.0 - L * L);
    s << polyline({cplx(ox + lo, -0.03), cplx(ox + hi, -0.03)},
                  "stroke=\"#1f8c3b\" stroke-width=\"0.022\"");
    s << "<circle cx=\"" << format_double(ox) << "\" cy=\"-1\" r=\"0.015\" fill=\"#000000\"/>\n";
    s << "</svg>\n";
    return s.str();
}

std::string render_moment_plot_svg(const MomentTable& table) {
    std::ostringstream s;
    const double W = 480, H = 320, ml = 50, mr = 15, mt = 15, mb = 35;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
      << "\" viewBox=\"0 0 " << W << " " << H << "\">\n";
    if (table.rows.empty()) {
        s << "</svg>\n";
        return s.str();
    }
    double ymax = 0.0, xmax = 0.0;
    std::vector<double> xs, decay, ref;
    for (const MomentRow& r : table.rows) {
        const double sn = std::sqrt(static_cast<double>(r.n));
        xs.push_back(std::log10(static_cast<double>(r.n)));
        decay.push_back(r.moment > 0.0 ? -std::log(r.moment) / sn : 0.0);
        ref.push_back(-std::log(r.reference) / sn);
        ymax = std::max({ymax, decay.back(), ref.back()});
        xmax = std::max(xmax, xs.back());
    }
    if (ymax <= 0.0) ymax = 1.0;
    if (xmax <= 0.0) xmax = 1.0;
    const auto px = [&](double x) { return ml + (W - ml - mr) * x / xmax; };
    const auto py = [&](double y) { return H - mb - (H - mt - mb) * y / ymax; };
    s << "<line x1=\"" << ml << "\" y1=\"" << H - mb << "\" x2=\"" << W - mr << "\" y2=\""
      << H - mb << "\" stroke=\"#333\"/>\n";
    s << "<line x1=\"" << ml << "\" y1=\"" << mt << "\" x2=\"" << ml << "\" y2=\"" << H - mb
      << "\" stroke=\"#333\"/>\n";
    const auto series = [&](const std::vector<double>& ys, const char* color) {
        std::ostringstream p;
        p << "<polyline fill=\"none\" stroke=\"" << color << "\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < xs.size(); ++i)
            p << (i ? " " : "") << format_double(px(xs[i])) << "," << format_double(py(ys[i]));
        p << "\"/>\n";
        return p.str();
    };
    s << series(decay, "#1f4e9c") << series(ref, "#c0392b");
    s << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
      << "\" font-size=\"12\" text-anchor=\"middle\">log10 n</text>\n";
    s << "<text x=\"12\" y=\"" << H / 2
      << "\" font-size=\"12\" transform=\"rotate(-90 12 " << H / 2
      << ")\" text-anchor=\"middle\">-log(moment)/sqrt(n)</text>\n";
    s << "</svg>\n";
    return s.str();
}

} // namespace jpdom
