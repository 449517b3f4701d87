#ifndef SIGREC_SVG_HPP
#define SIGREC_SVG_HPP

#include <string>
#include <vector>

namespace sigrec::svg {

struct Series {
    std::string label;
    std::string color; // empty picks from the default palette
    std::vector<double> x;
    std::vector<double> y;
};

// Fixed-size line chart with axes, ticks, and an optional legend. The output
// text is a pure function of the inputs, so reruns are byte-identical.
std::string line_chart(const std::string& title, const std::vector<Series>& series);

void write_chart(const std::string& path, const std::string& title,
                 const std::vector<Series>& series);

} // namespace sigrec::svg

#endif
