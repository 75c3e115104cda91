#include "braidhom/svg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "braidhom/errors.hpp"

namespace braidhom {

namespace {

constexpr double kTwoPi = 6.283185307179586476925286766559;

std::string fmt(double v, int prec = 2) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", prec, v);
  return buf;
}

// Small viridis-like ramp, linearly interpolated.
struct Rgb {
  double r, g, b;
};

Rgb colormap(double t) {
  static const Rgb anchors[] = {
      {0.267, 0.005, 0.329}, {0.283, 0.141, 0.458}, {0.254, 0.265, 0.530},
      {0.207, 0.372, 0.553}, {0.164, 0.471, 0.558}, {0.128, 0.567, 0.551},
      {0.135, 0.659, 0.518}, {0.267, 0.749, 0.441}, {0.478, 0.821, 0.318},
      {0.741, 0.873, 0.150}, {0.993, 0.906, 0.144}};
  t = std::clamp(t, 0.0, 1.0);
  double x = t * 10.0;
  int i = std::min(9, static_cast<int>(x));
  double f = x - i;
  const Rgb &lo = anchors[i], &hi = anchors[i + 1];
  return {lo.r + f * (hi.r - lo.r), lo.g + f * (hi.g - lo.g), lo.b + f * (hi.b - lo.b)};
}

std::string hex(const Rgb& c) {
  char buf[8];
  auto ch = [](double v) { return std::clamp(static_cast<int>(std::lround(v * 255.0)), 0, 255); };
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", ch(c.r), ch(c.g), ch(c.b));
  return buf;
}

}  // namespace

std::string render_morse_svg(const MorseProblem& mp, const std::vector<CriticalPoint>& cps,
                             const std::vector<Trajectory>& trajectories, int nx, int ny) {
  const MorseParams& p = mp.params();
  const double A = p.U + p.x_max();
  const int cell = 4;
  const int margin = 34;
  const int W = nx * cell + 2 * margin, H = ny * cell + 2 * margin;

  auto xpix = [&](double a) { return margin + (a + A) / (2 * A) * (nx * cell); };
  auto ypix = [&](double th) { return margin + (1.0 - th / kTwoPi) * (ny * cell); };

  std::vector<double> field(static_cast<std::size_t>(nx) * ny);
  double lo = 1e300, hi = -1e300;
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double a = -A + 2 * A * (i + 0.5) / nx;
      double th = kTwoPi * (j + 0.5) / ny;
      double v = mp.eval_h(a, th);
      field[static_cast<std::size_t>(i) * ny + j] = v;
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
  if (hi <= lo) hi = lo + 1;

  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << H
     << "\" viewBox=\"0 0 " << W << ' ' << H << "\">\n";
  os << "<rect width=\"" << W << "\" height=\"" << H << "\" fill=\"white\"/>\n";
  for (int i = 0; i < nx; ++i)
    for (int j = 0; j < ny; ++j) {
      double v = field[static_cast<std::size_t>(i) * ny + j];
      os << "<rect x=\"" << margin + i * cell << "\" y=\"" << margin + (ny - 1 - j) * cell
         << "\" width=\"" << cell << "\" height=\"" << cell << "\" fill=\""
         << hex(colormap((v - lo) / (hi - lo))) << "\"/>\n";
    }

  // Frame and axis labels.
  os << "<rect x=\"" << margin << "\" y=\"" << margin << "\" width=\"" << nx * cell
     << "\" height=\"" << ny * cell << "\" fill=\"none\" stroke=\"black\"/>\n";
  os << "<text x=\"" << W / 2 << "\" y=\"" << H - 8
     << "\" font-size=\"12\" text-anchor=\"middle\">a</text>\n";
  os << "<text x=\"10\" y=\"" << H / 2 << "\" font-size=\"12\">&#952;</text>\n";
  for (double a : {-A, -p.U, 0.0, p.U, A})
    os << "<text x=\"" << fmt(xpix(a)) << "\" y=\"" << H - margin + 14
       << "\" font-size=\"9\" text-anchor=\"middle\">" << fmt(a, 1) << "</text>\n";
  for (double th : {0.0, kTwoPi / 2, kTwoPi})
    os << "<text x=\"" << margin - 4 << "\" y=\"" << fmt(ypix(th) + 3)
       << "\" font-size=\"9\" text-anchor=\"end\">" << fmt(th, 2) << "</text>\n";

  // Trajectories, broken where θ wraps around the circle.
  for (const Trajectory& tr : trajectories) {
    std::vector<std::pair<double, double>> run;
    auto flush = [&] {
      if (run.size() > 1) {
        os << "<polyline fill=\"none\" stroke=\"red\" stroke-width=\"1.5\" points=\"";
        for (std::size_t i = 0; i < run.size(); ++i) {
          if (i) os << ' ';
          os << fmt(run[i].first) << ',' << fmt(run[i].second);
        }
        os << "\"/>\n";
      }
      run.clear();
    };
    double prev_wrapped = 0.0;
    for (std::size_t i = 0; i < tr.samples.size(); ++i) {
      double a = tr.samples[i][0];
      double th = std::fmod(tr.samples[i][1], kTwoPi);
      if (th < 0) th += kTwoPi;
      if (!run.empty() && std::abs(th - prev_wrapped) > kTwoPi / 2) flush();
      run.emplace_back(xpix(a), ypix(th));
      prev_wrapped = th;
    }
    flush();
  }

  for (const CriticalPoint& cp : cps)
    os << "<circle cx=\"" << fmt(xpix(cp.a)) << "\" cy=\"" << fmt(ypix(cp.theta))
       << "\" r=\"3.5\" fill=\"red\" stroke=\"white\"/>\n";

  os << "</svg>\n";
  return os.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open output file: " + path);
  out << content;
  if (!out) throw Error("failed writing output file: " + path);
}

}  // namespace braidhom
