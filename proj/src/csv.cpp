#include "sirsvk/csv.hpp"

#include <charconv>
#include <cmath>
#include <ostream>

namespace sirsvk::csv {

std::string format_real(double x) {
  if (std::isinf(x)) {
    return x > 0 ? "inf" : "-inf";
  }
  if (std::isnan(x)) {
    return "nan";
  }
  if (x == 0.0) {
    return "0";  // folds -0
  }
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 17);
  return std::string(buf, res.ptr);
}

namespace {

void write_state(std::ostream& os, const State& x) {
  os << format_real(x.s) << ',' << format_real(x.i) << ',' << format_real(x.r) << ','
     << format_real(x.v);
}

}  // namespace

void write_trajectory(std::ostream& os, const Trajectory& traj) {
  os << "t,S,I,R,V\n";
  for (std::size_t k = 0; k < traj.size(); ++k) {
    os << format_real(traj.times[k]) << ',';
    write_state(os, traj.states[k]);
    os << '\n';
  }
}

void write_comparison(std::ostream& os, const std::vector<LabeledTrajectory>& runs) {
  os << "t,model,S,I,R,V\n";
  for (const auto& run : runs) {
    const Trajectory& traj = run.trajectory;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      os << format_real(traj.times[k]) << ',' << label(run.model) << ',';
      write_state(os, traj.states[k]);
      os << '\n';
    }
  }
}

void write_sweep(std::ostream& os, const SweepTable& table) {
  os << "swept";
  for (const auto& col : table.columns) {
    os << ',' << col;
  }
  os << '\n';
  for (const auto& rec : table.records) {
    os << format_real(rec.swept);
    for (double value : rec.observables) {
      os << ',' << format_real(value);
    }
    os << '\n';
  }
}

}  // namespace sirsvk::csv
