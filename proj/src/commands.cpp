#include "sirsvk/commands.hpp"

#include <ostream>

#include "sirsvk/analysis.hpp"
#include "sirsvk/csv.hpp"

namespace sirsvk {

using csv::format_real;

int cmd_simulate(const RunConfig& cfg, std::ostream& out) {
  const Params p = resolve_params(cfg);
  const State x0 = resolve_initial(cfg);
  require_admissible(p, x0);
  if (auto v = validate_config(cfg.integration); !v.empty()) {
    throw ConfigError("invalid integration settings: " + describe(v));
  }
  csv::write_trajectory(out, integrate(p, x0, cfg.integration));
  return kExitOk;
}

int cmd_analyze(const RunConfig& cfg, std::ostream& out) {
  const Params p = resolve_params(cfg);
  const StabilityVerdict verdict = classify(p);
  const Equilibrium disease_free = dfe(p);
  const auto endemic = eep(p);
  const Hesitance hesitance = vaccine_hesitance(p);

  out << "quantity,value\n";
  out << "r0," << format_real(r0(p)) << '\n';
  out << "threshold_value," << format_real(verdict.threshold_value) << '\n';
  out << "dfe_gas," << (verdict.dfe_gas ? "true" : "false") << '\n';
  out << "eep_exists," << (verdict.eep_exists ? "true" : "false") << '\n';
  for (auto c : {Compartment::S, Compartment::I, Compartment::R, Compartment::V}) {
    out << "dfe_" << to_string(c) << ',' << format_real(disease_free.state[c]) << '\n';
  }
  for (auto c : {Compartment::S, Compartment::I, Compartment::R, Compartment::V}) {
    out << "eep_" << to_string(c) << ','
        << (endemic ? format_real(endemic->state[c]) : std::string("NONE")) << '\n';
  }
  out << "hesitance," << format_real(hesitance.value) << '\n';
  out << "hesitance_limit," << (hesitance.limit ? "true" : "false") << '\n';
  return kExitOk;
}

int cmd_sweep(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  const ExperimentSpec spec = resolve_experiment(cfg);
  switch (spec.id) {
    case ExperimentId::KappaV:
    case ExperimentId::KappaI: {
      const auto runs = run_kappa_trajectories(spec);
      const Compartment c = spec.id == ExperimentId::KappaV ? Compartment::V : Compartment::I;
      csv::write_sweep(out, to_table(runs, c));
      int code = kExitOk;
      for (const auto& run : runs) {
        if (!run.trajectory) {
          err << "kappa = " << format_real(run.kappa.value()) << ": " << run.error << '\n';
          code = kExitDivergence;
        }
      }
      return code;
    }
    case ExperimentId::PeakVsKappa:
      csv::write_sweep(out, to_table(run_peak_vs_kappa(spec)));
      return kExitOk;
    case ExperimentId::Threshold:
      csv::write_sweep(out, to_table(run_threshold_sweep(spec)));
      return kExitOk;
    case ExperimentId::ModelCompare:
      break;
  }
  throw ConfigError("experiment MODEL_COMPARE is produced by the compare command");
}

int cmd_compare(const RunConfig& cfg, std::ostream& out) {
  const ExperimentSpec spec = resolve_experiment(cfg);
  if (spec.id != ExperimentId::ModelCompare) {
    throw ConfigError("compare requires experiment MODEL_COMPARE, got " +
                      std::string(to_string(spec.id)));
  }
  csv::write_comparison(out, run_model_compare(spec));
  return kExitOk;
}

}  // namespace sirsvk
