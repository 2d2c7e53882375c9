#include "sirsvk/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <thread>

#include "sirsvk/analysis.hpp"

namespace sirsvk {

namespace {

// Evaluates fn(k) for k in [0, n) on a small worker pool. Results are written
// by index, so the outcome does not depend on scheduling.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& fn) {
  unsigned workers = threads != 0 ? threads : std::max(1u, std::thread::hardware_concurrency());
  workers = static_cast<unsigned>(std::min<std::size_t>(workers, n));
  if (workers <= 1) {
    for (std::size_t k = 0; k < n; ++k) {
      fn(k);
    }
    return;
  }
  std::atomic<std::size_t> next{0};
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t k = next++; k < n; k = next++) {
        fn(k);
      }
    });
  }
  for (auto& t : pool) {
    t.join();
  }
}

// Runs fn over the grid; the first failure in grid order is rethrown.
template <typename Result>
std::vector<Result> map_grid(const ExperimentSpec& spec,
                             const std::function<Result(Confidence)>& fn) {
  const std::size_t n = spec.grid.size();
  std::vector<std::optional<Result>> slots(n);
  std::vector<std::exception_ptr> errors(n);
  parallel_for(n, spec.threads, [&](std::size_t k) {
    try {
      slots[k] = fn(spec.grid[k]);
    } catch (...) {
      errors[k] = std::current_exception();
    }
  });
  std::vector<Result> out;
  out.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    if (errors[k]) {
      std::rethrow_exception(errors[k]);
    }
    out.push_back(std::move(*slots[k]));
  }
  return out;
}

Params with_kappa(const Params& base, Confidence kappa) {
  Params p = base;
  p.kappa = kappa;
  return p;
}

void require_spec(const ExperimentSpec& spec, std::initializer_list<ExperimentId> allowed) {
  if (std::find(allowed.begin(), allowed.end(), spec.id) == allowed.end()) {
    throw std::invalid_argument("experiment " + std::string(to_string(spec.id)) +
                                " is not handled by this runner");
  }
  if (auto v = validate_spec(spec); !v.empty()) {
    throw std::invalid_argument("invalid experiment: " + describe(v));
  }
}

// k / denom for k = first..last; exact at the "round" values such as 0.2.
std::vector<Confidence> ratio_grid(int first, int last, double denom) {
  std::vector<Confidence> grid;
  for (int k = first; k <= last; ++k) {
    grid.emplace_back(k / denom);
  }
  return grid;
}

}  // namespace

std::string_view to_string(ExperimentId id) {
  switch (id) {
    case ExperimentId::KappaV: return "KAPPA_V";
    case ExperimentId::KappaI: return "KAPPA_I";
    case ExperimentId::ModelCompare: return "MODEL_COMPARE";
    case ExperimentId::PeakVsKappa: return "PEAK_VS_KAPPA";
    case ExperimentId::Threshold: return "THRESHOLD";
  }
  return "?";
}

std::optional<ExperimentId> parse_experiment(std::string_view name) {
  for (auto id : {ExperimentId::KappaV, ExperimentId::KappaI, ExperimentId::ModelCompare,
                  ExperimentId::PeakVsKappa, ExperimentId::Threshold}) {
    if (to_string(id) == name) {
      return id;
    }
  }
  return std::nullopt;
}

std::optional<ExperimentId> experiment_for_figure(int figure) {
  switch (figure) {
    case 2: return ExperimentId::KappaV;
    case 3: return ExperimentId::KappaI;
    case 4: return ExperimentId::ModelCompare;
    case 5: return ExperimentId::PeakVsKappa;
    case 6: return ExperimentId::Threshold;
    default: return std::nullopt;
  }
}

ExperimentSpec default_experiment(ExperimentId id) {
  ExperimentSpec spec;
  spec.id = id;
  spec.base = Params{1.6, 0.8, 0.12, 0.2, Confidence(0.8)};
  spec.integration = IntegrationConfig{0.0, 100.0, 0.01, 1};
  switch (id) {
    case ExperimentId::KappaV:
    case ExperimentId::KappaI:
      spec.base.omega = 3.0;
      spec.initial = State{0.54, 0.41, 0.05, 0.0};
      spec.grid = {Confidence(0.1), Confidence(0.3), Confidence(0.5), Confidence(0.6),
                   Confidence(0.8), Confidence(1.2), Confidence::infinite()};
      spec.integration.record_stride = 10;
      break;
    case ExperimentId::ModelCompare:
      spec.initial = State{0.99, 0.01, 0.0, 0.0};
      break;
    case ExperimentId::PeakVsKappa:
      spec.initial = State{0.99, 0.01, 0.0, 0.0};
      spec.grid = ratio_grid(2, 80, 40.0);  // 0.05, 0.075, ..., 2
      spec.grid.push_back(Confidence::infinite());
      break;
    case ExperimentId::Threshold:
      spec.initial = State{0.7, 0.3, 0.0, 0.0};
      spec.grid = ratio_grid(1, 60, 50.0);  // 0.02, 0.04, ..., 1.2
      break;
  }
  return spec;
}

Violations validate_spec(const ExperimentSpec& spec) {
  Violations out;
  for (const auto& v : validate_params(spec.base)) {
    out.push_back({"params." + v.field, v.message});
  }
  for (const auto& v : validate_config(spec.integration)) {
    out.push_back({"integration." + v.field, v.message});
  }
  if (!(spec.eradication_threshold > 0.0 && spec.eradication_threshold < 1.0)) {
    out.push_back({"sweep.eradication_threshold", "eradication threshold must lie in (0, 1)"});
  }
  if (spec.id == ExperimentId::ModelCompare) {
    for (const auto& v : validate_state(spec.base, spec.initial)) {
      out.push_back({"initial", v.message});
    }
    return out;
  }
  if (spec.grid.empty()) {
    out.push_back({"sweep.grid", "grid must not be empty"});
    return out;
  }
  for (std::size_t k = 0; k < spec.grid.size(); ++k) {
    if (!(spec.grid[k].value() > 0.0)) {
      out.push_back({"sweep.grid", "grid values must be > 0 or inf"});
      return out;
    }
    if (k > 0 && !(spec.grid[k].value() > spec.grid[k - 1].value())) {
      out.push_back({"sweep.grid", "grid must be strictly increasing"});
      return out;
    }
  }
  // The smallest kappa gives the tightest bound on V.
  for (const auto& v : validate_state(with_kappa(spec.base, spec.grid.front()), spec.initial)) {
    out.push_back({"initial", v.message});
  }
  return out;
}

std::vector<KappaRun> run_kappa_trajectories(const ExperimentSpec& spec) {
  require_spec(spec, {ExperimentId::KappaV, ExperimentId::KappaI});
  std::vector<KappaRun> runs(spec.grid.size());
  parallel_for(spec.grid.size(), spec.threads, [&](std::size_t k) {
    KappaRun& run = runs[k];
    run.kappa = spec.grid[k];
    try {
      run.trajectory = integrate(with_kappa(spec.base, run.kappa), spec.initial, spec.integration);
    } catch (const std::exception& e) {
      run.error = e.what();
    }
  });
  return runs;
}

const char* label(CompareModel m) {
  switch (m) {
    case CompareModel::Sirs: return "SIRS";
    case CompareModel::Sirsv: return "SIRSV";
    case CompareModel::SirsVk: return "SIRSVK";
  }
  return "?";
}

std::vector<LabeledTrajectory> run_model_compare(const ExperimentSpec& spec) {
  require_spec(spec, {ExperimentId::ModelCompare});
  Params sirs = spec.base;
  sirs.rho = 0.0;
  sirs.variant = Variant::Sirs;
  const Params sirsv = with_kappa(spec.base, Confidence::infinite());

  std::vector<LabeledTrajectory> out;
  out.push_back({CompareModel::Sirs, integrate(sirs, spec.initial, spec.integration)});
  out.push_back({CompareModel::Sirsv, integrate(sirsv, spec.initial, spec.integration)});
  out.push_back({CompareModel::SirsVk, integrate(spec.base, spec.initial, spec.integration)});
  return out;
}

std::vector<PeakPoint> run_peak_vs_kappa(const ExperimentSpec& spec) {
  require_spec(spec, {ExperimentId::PeakVsKappa});
  return map_grid<PeakPoint>(spec, [&](Confidence kappa) {
    const Trajectory traj = integrate(with_kappa(spec.base, kappa), spec.initial, spec.integration);
    return PeakPoint{kappa, peak(traj, Compartment::I)};
  });
}

std::vector<ThresholdPoint> run_threshold_sweep(const ExperimentSpec& spec) {
  require_spec(spec, {ExperimentId::Threshold});
  auto points = map_grid<ThresholdPoint>(spec, [&](Confidence kappa) {
    const Params p = with_kappa(spec.base, kappa);
    const Trajectory traj = integrate(p, spec.initial, spec.integration);
    return ThresholdPoint{kappa, gas_threshold(p),
                          first_time_below(traj, Compartment::I, spec.eradication_threshold)};
  });
  std::stable_sort(points.begin(), points.end(), [](const auto& a, const auto& b) {
    return a.threshold_value < b.threshold_value;
  });
  return points;
}

SweepTable to_table(const std::vector<KappaRun>& runs, Compartment c) {
  SweepTable table;
  table.columns = {"t", to_string(c)};
  for (const auto& run : runs) {
    if (!run.trajectory) {
      continue;
    }
    const Trajectory& traj = *run.trajectory;
    for (std::size_t k = 0; k < traj.size(); ++k) {
      table.records.push_back({run.kappa.value(), {traj.times[k], traj.states[k][c]}});
    }
  }
  return table;
}

SweepTable to_table(const std::vector<PeakPoint>& points) {
  SweepTable table;
  table.columns = {"peak_I", "peak_t"};
  for (const auto& pt : points) {
    table.records.push_back({pt.kappa.value(), {pt.infection.value, pt.infection.time}});
  }
  return table;
}

SweepTable to_table(const std::vector<ThresholdPoint>& points) {
  SweepTable table;
  table.columns = {"kappa", "eradication_time"};
  for (const auto& pt : points) {
    table.records.push_back(
        {pt.threshold_value, {pt.kappa.value(), pt.eradication_time.value_or(kNotReachedSentinel)}});
  }
  return table;
}

}  // namespace sirsvk
