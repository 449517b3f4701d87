#include "sigrec/svg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "sigrec/io.hpp"

namespace sigrec::svg {

namespace {

constexpr double kWidth = 900.0, kHeight = 480.0;
constexpr double kLeft = 70.0, kRight = 20.0, kTop = 40.0, kBottom = 45.0;

const char* kPalette[6] = {"#1f6fb4", "#d1495b", "#2e8b57", "#9467bd", "#c78a28", "#4c4c4c"};

struct Range {
    double lo = std::numeric_limits<double>::infinity();
    double hi = -std::numeric_limits<double>::infinity();
    void add(double v) {
        if (!std::isfinite(v)) return;
        lo = std::min(lo, v);
        hi = std::max(hi, v);
    }
    void finish() {
        if (lo > hi) {
            lo = 0.0;
            hi = 1.0;
        }
        if (lo == hi) {
            lo -= 1.0;
            hi += 1.0;
        }
        const double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
};

std::vector<double> nice_ticks(double lo, double hi) {
    const double span = hi - lo;
    const double raw = span / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    for (const double mult : {1.0, 2.0, 5.0, 10.0}) {
        if (mult * mag >= raw) {
            step = mult * mag;
            break;
        }
    }
    std::vector<double> ticks;
    double v = std::ceil(lo / step) * step;
    for (; v <= hi + 1e-12 * span; v += step) {
        if (std::abs(v) < 1e-12 * span) v = 0.0; // avoid "-0" labels
        ticks.push_back(v);
    }
    return ticks;
}

std::string esc(const std::string& s) {
    std::string out;
    for (const char c : s) {
        if (c == '<')
            out += "&lt;";
        else if (c == '>')
            out += "&gt;";
        else if (c == '&')
            out += "&amp;";
        else
            out += c;
    }
    return out;
}

std::string num(double v) { return io::format_double(v); }

} // namespace

std::string line_chart(const std::string& title, const std::vector<Series>& series) {
    Range rx, ry;
    for (const auto& s : series) {
        for (const double v : s.x) rx.add(v);
        for (const double v : s.y) ry.add(v);
    }
    rx.finish();
    ry.finish();
    const double plot_w = kWidth - kLeft - kRight;
    const double plot_h = kHeight - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - rx.lo) / (rx.hi - rx.lo) * plot_w; };
    auto py = [&](double y) { return kTop + plot_h - (y - ry.lo) / (ry.hi - ry.lo) * plot_h; };

    std::string out;
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(kWidth) + "\" height=\"" +
           num(kHeight) + "\" viewBox=\"0 0 " + num(kWidth) + " " + num(kHeight) + "\">\n";
    out += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    out += "<text x=\"" + num(kWidth / 2) +
           "\" y=\"24\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"15\">" +
           esc(title) + "</text>\n";

    for (const double t : nice_ticks(rx.lo, rx.hi)) {
        const double x = px(t);
        out += "<line x1=\"" + num(x) + "\" y1=\"" + num(kTop) + "\" x2=\"" + num(x) + "\" y2=\"" +
               num(kTop + plot_h) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + num(x) + "\" y=\"" + num(kTop + plot_h + 18) +
               "\" text-anchor=\"middle\" font-family=\"monospace\" font-size=\"11\">" + num(t) +
               "</text>\n";
    }
    for (const double t : nice_ticks(ry.lo, ry.hi)) {
        const double y = py(t);
        out += "<line x1=\"" + num(kLeft) + "\" y1=\"" + num(y) + "\" x2=\"" +
               num(kLeft + plot_w) + "\" y2=\"" + num(y) + "\" stroke=\"#dddddd\"/>\n";
        out += "<text x=\"" + num(kLeft - 8) + "\" y=\"" + num(y + 4) +
               "\" text-anchor=\"end\" font-family=\"monospace\" font-size=\"11\">" + num(t) +
               "</text>\n";
    }
    out += "<rect x=\"" + num(kLeft) + "\" y=\"" + num(kTop) + "\" width=\"" + num(plot_w) +
           "\" height=\"" + num(plot_h) + "\" fill=\"none\" stroke=\"#333333\"/>\n";

    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        const std::string color = s.color.empty() ? kPalette[si % 6] : s.color;
        std::string pts;
        for (std::size_t i = 0; i < std::min(s.x.size(), s.y.size()); ++i) {
            if (!std::isfinite(s.x[i]) || !std::isfinite(s.y[i])) continue;
            if (!pts.empty()) pts += ' ';
            pts += num(px(s.x[i])) + "," + num(py(s.y[i]));
        }
        out += "<polyline fill=\"none\" stroke=\"" + color + "\" stroke-width=\"1.5\" points=\"" +
               pts + "\"/>\n";
        if (!s.label.empty()) {
            const double ly = kTop + 16.0 + 16.0 * double(si);
            out += "<line x1=\"" + num(kLeft + plot_w - 150) + "\" y1=\"" + num(ly - 4) +
                   "\" x2=\"" + num(kLeft + plot_w - 126) + "\" y2=\"" + num(ly - 4) +
                   "\" stroke=\"" + color + "\" stroke-width=\"2\"/>\n";
            out += "<text x=\"" + num(kLeft + plot_w - 120) + "\" y=\"" + num(ly) +
                   "\" font-family=\"monospace\" font-size=\"11\">" + esc(s.label) + "</text>\n";
        }
    }
    out += "</svg>\n";
    return out;
}

void write_chart(const std::string& path, const std::string& title,
                 const std::vector<Series>& series) {
    io::write_text_atomic(path, line_chart(title, series));
}

} // namespace sigrec::svg
