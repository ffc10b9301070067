#pragma once

#include <string>
#include <vector>

#include "wrightmi/params.hpp"
#include "wrightmi/series.hpp"

namespace wrightmi {

// Nine nu values shared by the four figure panels: 0, 0.25, ..., 2.
const std::vector<double>& figure_nu_values();

// One figure panel as CSV text with header "x,nu=0,nu=0.25,...,nu=2", LF
// line endings and 17-significant-digit numbers. Panel map:
//   a -> (0, 1, nu) at x          b -> (1, 1, nu) at x
//   c -> (1/2, 1/2, nu) at sqrt(x)  d -> (1/2, 1, nu) at x
// Panel c takes the argument sqrt(x), which coincides with the x^beta
// convention at beta = 1/2 on x >= 0.
std::string figure_panel_csv(char panel, double x_min, double x_max, int points);

// Plain tabulation "x,value,terms_used,converged" for one parameter set.
std::string table_csv(const MultiIndexParams& params, double x_min, double x_max,
                      int points, double tolerance = default_tolerance,
                      int max_terms = default_max_terms);

} // namespace wrightmi
