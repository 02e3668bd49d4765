// Licensed under the Apache License 2.0 (see LICENSE file).

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "bdisc/models.hpp"

namespace bdisc {

struct Viewport {
  Rational x_min = -2, x_max = 2;
  Rational y_min = -2, y_max = 2;
  int width = 400, height = 400;
  /// Grid samples per axis for shading and contouring.
  int samples = 200;

  /// Throws EmptyViewport for an empty range, nonpositive size or fewer than 16 samples.
  void validate() const;
};

/// Box around the boundary crossings, turning points and ovals of the zero set.
Viewport fit_viewport(const SingularityClass& cls, const Parameter& lambda);

using PlotPoint = std::pair<long double, long double>;

struct ZeroSetFigure {
  std::string svg;
  /// Curve pieces in model coordinates, each a run of points on f = 0.
  std::vector<std::vector<PlotPoint>> polylines;
  /// Sign changes of x along the polylines.
  int boundary_crossings = 0;
};

/// Curve f = 0 from the explicit branch formulas, the dashed boundary x = 0 and
/// the shaded set {f <= 0}. Byte-identical output for identical input.
ZeroSetFigure render_zero_set(const SingularityClass& cls, const Parameter& lambda, const Viewport& vp);

using PlotSegment = std::pair<PlotPoint, PlotPoint>;

struct SliceFigure {
  std::string svg;
  std::vector<PlotSegment> sigma0;
  std::vector<PlotSegment> sigma1;
};

/// Zero sets of the two discriminant equations on a 2-D slice of the parameter
/// space. Parameters not named in `fixed` or `axes` are 0. Throws BadAxes.
SliceFigure render_parameter_slice(const SingularityClass& cls, const std::vector<std::pair<std::string, Rational>>& fixed,
                                   const std::pair<std::string, std::string>& axes, const Viewport& vp);

/// "<class>_<16 hex digits>.svg", the digits a hash of the exact parameter text.
std::string figure_file_name(const SingularityClass& cls, const Parameter& lambda);

}  // namespace bdisc
