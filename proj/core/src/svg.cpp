#include "banachlab/svg.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>

#include "banachlab/errors.hpp"
#include "banachlab/io.hpp"

namespace banachlab {

namespace {

struct Frame {
  double cx, cy, scale, size;
  double X(double re) const { return size / 2 + scale * (re - cx); }
  double Y(double im) const { return size / 2 - scale * (im - cy); }
};

std::string poly_points(const std::vector<cplx>& pts, const Frame& f) {
  std::string s;
  for (const cplx& p : pts) {
    s += format_double(f.X(p.real()));
    s += ",";
    s += format_double(f.Y(p.imag()));
    s += " ";
  }
  return s;
}

}  // namespace

void emit_plot(const NumericalRangeEstimate& est, const std::string& path,
               const std::string& title) {
  std::vector<cplx> outline = support_vertices(est.outer);
  double lo_x = -1.0, hi_x = 1.0, lo_y = -1.0, hi_y = 1.0;
  auto grow = [&](const cplx& p) {
    lo_x = std::min(lo_x, p.real());
    hi_x = std::max(hi_x, p.real());
    lo_y = std::min(lo_y, p.imag());
    hi_y = std::max(hi_y, p.imag());
  };
  for (const cplx& p : outline) grow(p);
  for (const cplx& p : est.inner) grow(p);

  const double size = 640.0;
  const double pad = 40.0;
  Frame f;
  f.cx = (lo_x + hi_x) / 2;
  f.cy = (lo_y + hi_y) / 2;
  f.scale = (size - 2 * pad) /
            std::max({hi_x - lo_x, hi_y - lo_y, 1e-6});
  f.size = size;

  std::ofstream out(path);
  if (!out) throw IoError("cannot write " + path);
  out << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size
      << "\" height=\"" << size << "\" viewBox=\"0 0 " << size << " " << size
      << "\">\n";
  out << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";

  // axes
  out << "<line x1=\"0\" y1=\"" << f.Y(0) << "\" x2=\"" << size << "\" y2=\""
      << f.Y(0) << "\" stroke=\"#bbbbbb\"/>\n";
  out << "<line x1=\"" << f.X(0) << "\" y1=\"0\" x2=\"" << f.X(0)
      << "\" y2=\"" << size << "\" stroke=\"#bbbbbb\"/>\n";

  // unit circle for scale
  out << "<circle cx=\"" << f.X(0) << "\" cy=\"" << f.Y(0) << "\" r=\""
      << f.scale << "\" fill=\"none\" stroke=\"#cccccc\" "
      << "stroke-dasharray=\"4 4\"/>\n";

  out << "<polygon points=\"" << poly_points(outline, f)
      << "\" fill=\"#4080c040\" stroke=\"#2050a0\" stroke-width=\"1.5\"/>\n";

  for (const cplx& p : est.inner)
    out << "<circle cx=\"" << f.X(p.real()) << "\" cy=\"" << f.Y(p.imag())
        << "\" r=\"2\" fill=\"#c03030\"/>\n";

  if (!title.empty())
    out << "<text x=\"" << pad << "\" y=\"" << pad / 2 + 8
        << "\" font-family=\"monospace\" font-size=\"14\">" << title
        << "</text>\n";
  out << "</svg>\n";
}

}  // namespace banachlab
