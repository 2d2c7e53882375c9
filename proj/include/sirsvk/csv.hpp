#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "sirsvk/integrator.hpp"
#include "sirsvk/sweep.hpp"

namespace sirsvk::csv {

/// 17 significant digits, '.' separator, independent of the global locale.
/// Infinity is written as "inf".
std::string format_real(double x);

void write_trajectory(std::ostream& os, const Trajectory& traj);
void write_comparison(std::ostream& os, const std::vector<LabeledTrajectory>& runs);
void write_sweep(std::ostream& os, const SweepTable& table);

}  // namespace sirsvk::csv
