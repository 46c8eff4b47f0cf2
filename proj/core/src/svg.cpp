#include "psr/svg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>

#include "psr/io.hpp"

namespace psr {

namespace {

constexpr double kWidth = 640.0;
constexpr double kHeight = 400.0;
constexpr double kMargin = 48.0;

const char* kPalette[] = {"#1b6ca8", "#c94f3d", "#3a8f5a", "#8256a8", "#b07d2b", "#4a4a4a"};

std::string num(double x, int precision) { return format_number(x, precision); }

struct Range {
    double lo = 0, hi = 1;
    void include(double v) {
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void pad() {
        if (hi <= lo) hi = lo + 1;
        const double p = 0.05 * (hi - lo);
        lo -= p;
        hi += p;
    }
    double to_px(double v, double px_lo, double px_hi) const {
        return px_lo + (v - lo) / (hi - lo) * (px_hi - px_lo);
    }
};

std::string escape_xml(const std::string& s) {
    std::string out;
    for (char c : s) switch (c) {
            case '<': out += "&lt;"; break;
            case '>': out += "&gt;"; break;
            case '&': out += "&amp;"; break;
            case '"': out += "&quot;"; break;
            default: out += c;
        }
    return out;
}

void open_svg(std::ostringstream& os) {
    os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kWidth << "\" height=\"" << kHeight
       << "\" viewBox=\"0 0 " << kWidth << ' ' << kHeight << "\">\n"
       << "<rect width=\"" << kWidth << "\" height=\"" << kHeight << "\" fill=\"white\"/>\n";
}

void axis_labels(std::ostringstream& os, const Range& r, int precision, bool vertical) {
    for (int k = 0; k <= 4; ++k) {
        const double v = r.lo + k * (r.hi - r.lo) / 4.0;
        if (vertical) {
            const double y = r.to_px(v, kHeight - kMargin, kMargin);
            os << "<text x=\"" << kMargin - 8 << "\" y=\"" << num(y + 4, 2)
               << "\" font-size=\"11\" text-anchor=\"end\" font-family=\"sans-serif\">" << num(v, precision)
               << "</text>\n";
        } else {
            const double x = r.to_px(v, kMargin, kWidth - kMargin);
            os << "<text x=\"" << num(x, 2) << "\" y=\"" << kHeight - kMargin + 18
               << "\" font-size=\"11\" text-anchor=\"middle\" font-family=\"sans-serif\">"
               << num(v, precision) << "</text>\n";
        }
    }
}

struct Bar {
    int dim;
    double birth;
    double death;
    std::string label;
};

std::string bars_svg(std::vector<Bar> bars, int precision) {
    std::stable_sort(bars.begin(), bars.end(), [](const Bar& a, const Bar& b) {
        if (a.dim != b.dim) return a.dim < b.dim;
        if (a.birth != b.birth) return a.birth < b.birth;
        return a.death < b.death;
    });
    Range xr;
    bool any_finite = false;
    for (const Bar& b : bars) {
        xr.include(b.birth);
        if (b.death != kInfinity) {
            xr.include(b.death);
            any_finite = true;
        }
    }
    if (!any_finite && !bars.empty()) xr.include(xr.hi + 1);
    xr.pad();

    std::ostringstream os;
    open_svg(os);
    const double lane_h = bars.empty() ? 0 : (kHeight - 2 * kMargin) / static_cast<double>(bars.size());
    const double arrow_x = kWidth - kMargin + 10;
    for (std::size_t i = 0; i < bars.size(); ++i) {
        const Bar& b = bars[i];
        const double y = kMargin + (static_cast<double>(i) + 0.5) * lane_h;
        const double x0 = xr.to_px(b.birth, kMargin, kWidth - kMargin);
        const char* color = kPalette[b.dim % 6];
        if (b.death == kInfinity) {
            os << "<line x1=\"" << num(x0, 2) << "\" y1=\"" << num(y, 2) << "\" x2=\"" << num(arrow_x, 2)
               << "\" y2=\"" << num(y, 2) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n"
               << "<path d=\"M " << num(arrow_x, 2) << ' ' << num(y - 4, 2) << " L " << num(arrow_x + 7, 2)
               << ' ' << num(y, 2) << " L " << num(arrow_x, 2) << ' ' << num(y + 4, 2) << " Z\" fill=\""
               << color << "\"/>\n";
        } else {
            const double x1 = xr.to_px(b.death, kMargin, kWidth - kMargin);
            os << "<line x1=\"" << num(x0, 2) << "\" y1=\"" << num(y, 2) << "\" x2=\"" << num(x1, 2)
               << "\" y2=\"" << num(y, 2) << "\" stroke=\"" << color << "\" stroke-width=\"3\"/>\n";
        }
        if (!b.label.empty())
            os << "<text x=\"" << kMargin - 8 << "\" y=\"" << num(y + 3, 2)
               << "\" font-size=\"9\" text-anchor=\"end\" font-family=\"sans-serif\">" << escape_xml(b.label)
               << "</text>\n";
    }
    os << "<line x1=\"" << kMargin << "\" y1=\"" << kHeight - kMargin << "\" x2=\"" << kWidth - kMargin
       << "\" y2=\"" << kHeight - kMargin << "\" stroke=\"black\"/>\n";
    axis_labels(os, xr, precision, false);
    os << "</svg>\n";
    return os.str();
}

}  // namespace

std::string barcode_svg(const Barcode& barcode, int precision) {
    std::vector<Bar> bars;
    for (const Interval& iv : barcode.intervals)
        bars.push_back({iv.dim, iv.birth, iv.death, "H" + std::to_string(iv.dim)});
    return bars_svg(std::move(bars), precision);
}

std::string facet_barcode_svg(const FacetBarcode& barcode, int precision) {
    std::vector<Bar> bars;
    for (const FacetBar& b : barcode.bars) bars.push_back({b.dim(), b.birth, b.death, b.face.to_string()});
    return bars_svg(std::move(bars), precision);
}

std::string diagram_svg(const FacetDiagram& dgm, int precision) {
    Range r;
    bool any_inf = false;
    for (const DiagramPoint& p : dgm.points) {
        r.include(p.birth);
        if (p.death == kInfinity)
            any_inf = true;
        else
            r.include(p.death);
    }
    r.pad();

    std::ostringstream os;
    open_svg(os);
    const double x0 = kMargin, x1 = kWidth - kMargin;
    const double y0 = kHeight - kMargin, y1 = kMargin;
    os << "<line x1=\"" << num(r.to_px(r.lo, x0, x1), 2) << "\" y1=\"" << num(r.to_px(r.lo, y0, y1), 2)
       << "\" x2=\"" << num(r.to_px(r.hi, x0, x1), 2) << "\" y2=\"" << num(r.to_px(r.hi, y0, y1), 2)
       << "\" stroke=\"#999999\" stroke-dasharray=\"4 3\"/>\n";
    const double inf_rail = y1 - 14;
    if (any_inf)
        os << "<line x1=\"" << x0 << "\" y1=\"" << num(inf_rail, 2) << "\" x2=\"" << x1 << "\" y2=\""
           << num(inf_rail, 2) << "\" stroke=\"#bbbbbb\"/>\n"
           << "<text x=\"" << x1 + 4 << "\" y=\"" << num(inf_rail + 4, 2)
           << "\" font-size=\"12\" font-family=\"sans-serif\">&#8734;</text>\n";
    for (const DiagramPoint& p : dgm.points) {
        const double cx = r.to_px(p.birth, x0, x1);
        const double cy = p.death == kInfinity ? inf_rail : r.to_px(p.death, y0, y1);
        const double radius = 3.5 * std::sqrt(static_cast<double>(p.multiplicity));
        os << "<circle cx=\"" << num(cx, 2) << "\" cy=\"" << num(cy, 2) << "\" r=\"" << num(radius, 2)
           << "\" fill=\"#1b6ca8\" fill-opacity=\"0.8\"/>\n";
        if (p.multiplicity > 1)
            os << "<text x=\"" << num(cx + radius + 3, 2) << "\" y=\"" << num(cy + 4, 2)
               << "\" font-size=\"10\" font-family=\"sans-serif\">" << p.multiplicity << "</text>\n";
    }
    os << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x1 << "\" y2=\"" << y0
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << x0 << "\" y1=\"" << y0 << "\" x2=\"" << x0 << "\" y2=\"" << y1
       << "\" stroke=\"black\"/>\n";
    axis_labels(os, r, precision, false);
    axis_labels(os, r, precision, true);
    os << "</svg>\n";
    return os.str();
}

std::string step_curve_svg(const std::vector<double>& xs,
                           const std::vector<std::vector<long long>>& series,
                           const std::vector<std::string>& names, int precision) {
    if (xs.empty()) throw std::invalid_argument("step_curve_svg requires a non-empty grid");
    if (names.size() != series.size())
        throw std::invalid_argument("step_curve_svg: one name per series required");
    for (const auto& s : series)
        if (s.size() != xs.size()) throw std::invalid_argument("step_curve_svg: series length mismatch");

    Range xr, yr;
    for (double x : xs) xr.include(x);
    for (const auto& s : series)
        for (long long v : s) yr.include(static_cast<double>(v));
    xr.pad();
    yr.pad();

    std::ostringstream os;
    open_svg(os);
    const double px0 = kMargin, px1 = kWidth - kMargin;
    const double py0 = kHeight - kMargin, py1 = kMargin;
    for (std::size_t si = 0; si < series.size(); ++si) {
        const char* color = kPalette[si % 6];
        std::ostringstream path;
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const double x = xr.to_px(xs[i], px0, px1);
            const double y = yr.to_px(static_cast<double>(series[si][i]), py0, py1);
            if (i == 0)
                path << "M " << num(x, 2) << ' ' << num(y, 2);
            else {
                const double yp = yr.to_px(static_cast<double>(series[si][i - 1]), py0, py1);
                path << " L " << num(x, 2) << ' ' << num(yp, 2) << " L " << num(x, 2) << ' ' << num(y, 2);
            }
        }
        path << " L " << num(px1, 2) << ' '
             << num(yr.to_px(static_cast<double>(series[si].back()), py0, py1), 2);
        os << "<path d=\"" << path.str() << "\" fill=\"none\" stroke=\"" << color
           << "\" stroke-width=\"2\"/>\n";
        os << "<text x=\"" << px1 - 120 << "\" y=\"" << py1 + 16 * static_cast<double>(si)
           << "\" font-size=\"11\" fill=\"" << color << "\" font-family=\"sans-serif\">"
           << escape_xml(names[si]) << "</text>\n";
    }
    os << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px1 << "\" y2=\"" << py0
       << "\" stroke=\"black\"/>\n"
       << "<line x1=\"" << px0 << "\" y1=\"" << py0 << "\" x2=\"" << px0 << "\" y2=\"" << py1
       << "\" stroke=\"black\"/>\n";
    axis_labels(os, xr, precision, false);
    axis_labels(os, yr, precision, true);
    os << "</svg>\n";
    return os.str();
}

}  // namespace psr
