// Static SVG figures for planar polygons and planar weighted fans.
#pragma once

#include <algorithm>
#include <cmath>
#include <sstream>
#include <string>
#include <vector>

#include "tropelim/exact.hpp"
#include "tropelim/fan.hpp"
#include "tropelim/polytope.hpp"

namespace tropelim::svg {

namespace detail {

constexpr double kSize = 400.0;
constexpr double kMargin = 40.0;

inline std::string header() {
  std::ostringstream s;
  s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << kSize << "\" height=\"" << kSize << "\" viewBox=\"0 0 "
    << kSize << ' ' << kSize << "\">\n";
  s << "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
  return s.str();
}

inline std::string fmt(double x) {
  std::ostringstream s;
  s.setf(std::ios::fixed);
  s.precision(2);
  s << x;
  return s.str();
}

}  // namespace detail

/// Filled polygon (or segment, or point) with coordinate labels at the vertices.
inline std::string polygon(const RationalPolytope& p) {
  if (p.ambient_rank() != 2) fail(ErrorKind::DimensionMismatch, "only planar polytopes can be drawn");
  std::vector<std::pair<double, double>> pts;
  std::vector<std::string> labels;
  for (const auto& v : p.vertices()) {
    pts.emplace_back(static_cast<double>(v[0]), static_cast<double>(v[1]));
    labels.push_back("(" + to_string(v[0]) + "," + to_string(v[1]) + ")");
  }
  double cx = 0, cy = 0;
  for (auto [x, y] : pts) cx += x, cy += y;
  cx /= pts.size();
  cy /= pts.size();
  std::vector<std::size_t> order(pts.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::atan2(pts[a].second - cy, pts[a].first - cx) < std::atan2(pts[b].second - cy, pts[b].first - cx);
  });
  double lo_x = pts[0].first, hi_x = lo_x, lo_y = pts[0].second, hi_y = lo_y;
  for (auto [x, y] : pts) {
    lo_x = std::min(lo_x, x), hi_x = std::max(hi_x, x);
    lo_y = std::min(lo_y, y), hi_y = std::max(hi_y, y);
  }
  double span = std::max({hi_x - lo_x, hi_y - lo_y, 1.0});
  double k = (detail::kSize - 2 * detail::kMargin) / span;
  auto sx = [&](double x) { return detail::kMargin + (x - lo_x) * k; };
  auto sy = [&](double y) { return detail::kSize - detail::kMargin - (y - lo_y) * k; };

  std::string out = detail::header();
  out += "<polygon points=\"";
  for (std::size_t i : order) out += detail::fmt(sx(pts[i].first)) + "," + detail::fmt(sy(pts[i].second)) + " ";
  out += "\" fill=\"#9ecae1\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
  for (std::size_t i : order) {
    out += "<circle cx=\"" + detail::fmt(sx(pts[i].first)) + "\" cy=\"" + detail::fmt(sy(pts[i].second)) +
           "\" r=\"3\" fill=\"#08519c\"/>\n";
    out += "<text x=\"" + detail::fmt(sx(pts[i].first) + 5) + "\" y=\"" + detail::fmt(sy(pts[i].second) - 5) +
           "\" font-size=\"12\" font-family=\"sans-serif\">" + labels[i] + "</text>\n";
  }
  out += "</svg>\n";
  return out;
}

inline std::string polygon(const LatticePolytope& p) { return polygon(RationalPolytope::from(p)); }

/// Rays of a planar one-dimensional cycle, each labeled with its multiplicity.
inline std::string planar_fan(const TropicalCycle& t) {
  if (t.ambient_rank() != 2) fail(ErrorKind::DimensionMismatch, "only planar cycles can be drawn");
  const double c = detail::kSize / 2, len = detail::kSize / 2 - detail::kMargin;
  std::string out = detail::header();
  auto draw = [&](double dx, double dy, const std::string& label) {
    double norm = std::hypot(dx, dy);
    double ex = c + dx / norm * len, ey = c - dy / norm * len;
    out += "<line x1=\"" + detail::fmt(c) + "\" y1=\"" + detail::fmt(c) + "\" x2=\"" + detail::fmt(ex) + "\" y2=\"" +
           detail::fmt(ey) + "\" stroke=\"#08519c\" stroke-width=\"2\"/>\n";
    out += "<text x=\"" + detail::fmt(c + dx / norm * (len + 14)) + "\" y=\"" + detail::fmt(c - dy / norm * (len + 14)) +
           "\" font-size=\"12\" font-family=\"sans-serif\" text-anchor=\"middle\">" + label + "</text>\n";
  };
  for (const auto& cell : t.cells()) {
    std::string label = to_string(cell.mult);
    std::vector<IntVector> dirs = cell.cone.rays();
    for (const auto& l : cell.cone.lineality().basis()) {
      dirs.push_back(l);
      dirs.push_back(negate(l));
    }
    if (t.dim() == 2) {
      // A full-dimensional cell: draw its boundary rays.
      for (const auto& d : dirs) draw(static_cast<double>(d[0]), static_cast<double>(d[1]), label);
    } else {
      for (const auto& d : dirs)
        draw(static_cast<double>(d[0]), static_cast<double>(d[1]),
             "(" + to_string(d[0]) + "," + to_string(d[1]) + "):" + label);
    }
  }
  out += "<circle cx=\"" + detail::fmt(c) + "\" cy=\"" + detail::fmt(c) + "\" r=\"3\" fill=\"black\"/>\n";
  out += "</svg>\n";
  return out;
}

}  // namespace tropelim::svg
