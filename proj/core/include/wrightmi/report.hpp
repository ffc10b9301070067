#pragma once

#include <string>
#include <vector>

namespace wrightmi {

// One identity checked on a grid. pass is the absolute criterion
// max_abs_residual <= tolerance; the relative figure is diagnostic only.
struct ResidualReport {
    std::string identity_id;
    std::vector<double> grid;
    double max_abs_residual = 0.0;
    double max_rel_residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
};

// Transform value pair at one s.
struct LaplaceComparison {
    double s = 0.0;
    double series_value = 0.0;
    double quadrature_value = 0.0;
    double abs_diff = 0.0;
};

} // namespace wrightmi
