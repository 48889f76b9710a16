#pragma once

#include <iosfwd>
#include <string>

#include "mgeo/mesh.hpp"
#include "mgeo/metric_space.hpp"

namespace mgeo {

/// Shortest decimal representation that parses back to the same double.
std::string format_real(double value);

/// Metric-space text format (one token sequence, whitespace separated):
///
///   fms 1
///   label <quoted-or-dash>
///   points <n>
///   <n point names, one per line>
///   dist
///   <lower triangle, row i holding i reals, rows 2..n>
///
/// `label -` means the empty label; names and labels are URL-style
/// percent-escaped so they stay single tokens. Real values round-trip
/// bit-exactly.
void write_metric_space(std::ostream& out, const FiniteMetricSpace& space);
FiniteMetricSpace read_metric_space(std::istream& in);

void save_metric_space(const FiniteMetricSpace& space, const std::string& path);
FiniteMetricSpace load_metric_space(const std::string& path);

/// Mesh text format:
///
///   mesh 1
///   kind <circle|torus|sphere>
///   dim <n>
///   vertices <n>
///   <x y z per line>
///   edges <m>
///   <i j weight per line>
void write_mesh(std::ostream& out, const MeshManifold& mesh);
MeshManifold read_mesh(std::istream& in);

void save_mesh(const MeshManifold& mesh, const std::string& path);
MeshManifold load_mesh(const std::string& path);

std::string percent_escape(const std::string& s);
std::string percent_unescape(const std::string& s);

} // namespace mgeo
