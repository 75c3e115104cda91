#ifndef BRAIDHOM_SVG_HPP
#define BRAIDHOM_SVG_HPP

#include <string>
#include <vector>

#include "braidhom/morse.hpp"

namespace braidhom {

// Heatmap of h over [-(U+x_max), U+x_max] × [0, 2π] with the positive
// critical points and the rigid trajectories overlaid in red. Deterministic
// output bytes for fixed inputs.
std::string render_morse_svg(const MorseProblem& mp, const std::vector<CriticalPoint>& cps,
                             const std::vector<Trajectory>& trajectories, int nx = 240,
                             int ny = 120);

void write_file(const std::string& path, const std::string& content);

}  // namespace braidhom

#endif
