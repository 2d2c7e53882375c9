#include "sirsvk/config.hpp"

#include <functional>
#include <map>

#include <json.hpp>

namespace sirsvk {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& key, const std::string& what) {
  throw ConfigError("config field '" + key + "': " + what);
}

double as_real(const std::string& key, const json& value) {
  if (!value.is_number()) {
    fail(key, "expected a number");
  }
  return value.get<double>();
}

std::uint64_t as_count(const std::string& key, const json& value) {
  if (value.is_number_unsigned()) {
    return value.get<std::uint64_t>();
  }
  if (value.is_number_integer() && value.get<std::int64_t>() >= 0) {
    return static_cast<std::uint64_t>(value.get<std::int64_t>());
  }
  fail(key, "expected a non-negative integer");
}

Confidence as_confidence(const std::string& key, const json& value) {
  if (value.is_string()) {
    if (value.get<std::string>() == "inf") {
      return Confidence::infinite();
    }
    fail(key, "the only accepted string is \"inf\"");
  }
  if (!value.is_number()) {
    fail(key, "expected a number or \"inf\"");
  }
  return Confidence(value.get<double>());
}

json confidence_to_json(Confidence c) {
  if (c.is_infinite()) {
    return "inf";
  }
  return c.value();
}

using Setter = std::function<void(RunConfig&, const std::string&, const json&)>;

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table = {
      {"format",
       [](RunConfig& c, const std::string& k, const json& v) {
         if (!v.is_string() || v.get<std::string>() != kConfigFormat) {
           fail(k, "expected \"" + std::string(kConfigFormat) + "\"");
         }
         c.format = v.get<std::string>();
       }},
      {"experiment",
       [](RunConfig& c, const std::string& k, const json& v) {
         if (!v.is_string()) {
           fail(k, "expected a string");
         }
         auto id = parse_experiment(v.get<std::string>());
         if (!id) {
           fail(k, "unknown experiment '" + v.get<std::string>() +
                       "' (KAPPA_V, KAPPA_I, MODEL_COMPARE, PEAK_VS_KAPPA, THRESHOLD)");
         }
         c.experiment = id;
       }},
      {"model",
       [](RunConfig& c, const std::string& k, const json& v) {
         const std::string name = v.is_string() ? v.get<std::string>() : "";
         if (name == "sirsvk") {
           c.variant = Variant::SirsVk;
         } else if (name == "sirs") {
           c.variant = Variant::Sirs;
         } else {
           fail(k, "expected \"sirsvk\" or \"sirs\"");
         }
       }},
      {"params.beta", [](RunConfig& c, const std::string& k, const json& v) { c.beta = as_real(k, v); }},
      {"params.gamma", [](RunConfig& c, const std::string& k, const json& v) { c.gamma = as_real(k, v); }},
      {"params.rho", [](RunConfig& c, const std::string& k, const json& v) { c.rho = as_real(k, v); }},
      {"params.omega", [](RunConfig& c, const std::string& k, const json& v) { c.omega = as_real(k, v); }},
      {"params.kappa",
       [](RunConfig& c, const std::string& k, const json& v) { c.kappa = as_confidence(k, v); }},
      {"initial",
       [](RunConfig& c, const std::string& k, const json& v) {
         if (!v.is_array() || v.size() != 4) {
           fail(k, "expected an array [S, I, R, V]");
         }
         c.initial = State{as_real(k, v[0]), as_real(k, v[1]), as_real(k, v[2]), as_real(k, v[3])};
       }},
      {"integration.t0",
       [](RunConfig& c, const std::string& k, const json& v) { c.integration.t0 = as_real(k, v); }},
      {"integration.t_end",
       [](RunConfig& c, const std::string& k, const json& v) { c.integration.t_end = as_real(k, v); }},
      {"integration.dt",
       [](RunConfig& c, const std::string& k, const json& v) { c.integration.dt = as_real(k, v); }},
      {"integration.record_stride",
       [](RunConfig& c, const std::string& k, const json& v) {
         c.integration.record_stride = as_count(k, v);
       }},
      {"sweep.grid",
       [](RunConfig& c, const std::string& k, const json& v) {
         if (!v.is_array()) {
           fail(k, "expected an array of kappa values");
         }
         c.grid.clear();
         for (const auto& item : v) {
           c.grid.push_back(as_confidence(k, item));
         }
       }},
      {"sweep.eradication_threshold",
       [](RunConfig& c, const std::string& k, const json& v) {
         c.eradication_threshold = as_real(k, v);
       }},
      {"sweep.threads",
       [](RunConfig& c, const std::string& k, const json& v) {
         c.threads = static_cast<unsigned>(as_count(k, v));
       }},
      {"output.path",
       [](RunConfig& c, const std::string& k, const json& v) {
         if (!v.is_string()) {
           fail(k, "expected a string");
         }
         c.output = v.get<std::string>();
       }},
  };
  return table;
}

json parse_document(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config syntax error: ") + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config must be a JSON object with flat dotted keys");
  }
  return doc;
}

RunConfig apply_document(const json& doc, RunConfig cfg) {
  const auto& table = setters();
  for (const auto& [key, value] : doc.items()) {
    auto it = table.find(key);
    if (it == table.end()) {
      throw ConfigError("unknown config key '" + key + "'");
    }
    it->second(cfg, key, value);
  }
  return cfg;
}

}  // namespace

RunConfig config_from_experiment(const ExperimentSpec& spec) {
  RunConfig cfg;
  cfg.experiment = spec.id;
  cfg.variant = spec.base.variant;
  cfg.beta = spec.base.beta;
  cfg.gamma = spec.base.gamma;
  cfg.rho = spec.base.rho;
  cfg.omega = spec.base.omega;
  cfg.kappa = spec.base.kappa;
  cfg.initial = spec.initial;
  cfg.integration = spec.integration;
  cfg.grid = spec.grid;
  cfg.eradication_threshold = spec.eradication_threshold;
  cfg.threads = spec.threads;
  return cfg;
}

RunConfig parse_config(std::string_view text, RunConfig base) {
  return apply_document(parse_document(text), std::move(base));
}

RunConfig load_run_config(std::string_view text, std::optional<int> paper_figure) {
  const json doc = text.empty() ? json::object() : parse_document(text);
  RunConfig base;
  if (paper_figure) {
    auto id = experiment_for_figure(*paper_figure);
    if (!id) {
      throw ConfigError("--paper-figure must be one of 2, 3, 4, 5, 6");
    }
    base = config_from_experiment(default_experiment(*id));
  } else if (auto it = doc.find("experiment"); it != doc.end()) {
    base = apply_document(json{{"experiment", *it}}, base);
    base = config_from_experiment(default_experiment(*base.experiment));
  }
  return apply_document(doc, std::move(base));
}

std::string dump_config(const RunConfig& cfg) {
  json doc = json::object();
  doc["format"] = cfg.format;
  if (cfg.experiment) {
    doc["experiment"] = std::string(to_string(*cfg.experiment));
  }
  doc["model"] = cfg.variant == Variant::Sirs ? "sirs" : "sirsvk";
  if (cfg.beta) doc["params.beta"] = *cfg.beta;
  if (cfg.gamma) doc["params.gamma"] = *cfg.gamma;
  if (cfg.rho) doc["params.rho"] = *cfg.rho;
  if (cfg.omega) doc["params.omega"] = *cfg.omega;
  if (cfg.kappa) doc["params.kappa"] = confidence_to_json(*cfg.kappa);
  if (cfg.initial) {
    const State& x = *cfg.initial;
    doc["initial"] = json::array({x.s, x.i, x.r, x.v});
  }
  doc["integration.t0"] = cfg.integration.t0;
  doc["integration.t_end"] = cfg.integration.t_end;
  doc["integration.dt"] = cfg.integration.dt;
  doc["integration.record_stride"] = cfg.integration.record_stride;
  json grid = json::array();
  for (Confidence c : cfg.grid) {
    grid.push_back(confidence_to_json(c));
  }
  doc["sweep.grid"] = grid;
  doc["sweep.eradication_threshold"] = cfg.eradication_threshold;
  doc["sweep.threads"] = cfg.threads;
  if (!cfg.output.empty()) {
    doc["output.path"] = cfg.output;
  }
  return doc.dump(2) + "\n";
}

Params resolve_params(const RunConfig& cfg) {
  std::string missing;
  auto need = [&](const auto& field, const char* key) {
    if (!field) {
      missing += missing.empty() ? "" : ", ";
      missing += key;
    }
  };
  need(cfg.beta, "params.beta");
  need(cfg.gamma, "params.gamma");
  need(cfg.rho, "params.rho");
  need(cfg.omega, "params.omega");
  need(cfg.kappa, "params.kappa");
  if (!missing.empty()) {
    throw ConfigError("missing required config field(s): " + missing);
  }
  Params p{*cfg.beta, *cfg.gamma, *cfg.rho, *cfg.omega, *cfg.kappa, cfg.variant};
  require_valid(p);
  return p;
}

State resolve_initial(const RunConfig& cfg) {
  if (!cfg.initial) {
    throw ConfigError("missing required config field(s): initial");
  }
  return *cfg.initial;
}

ExperimentSpec resolve_experiment(const RunConfig& cfg) {
  if (!cfg.experiment) {
    throw ConfigError("missing required config field(s): experiment");
  }
  ExperimentSpec spec;
  spec.id = *cfg.experiment;
  spec.base = resolve_params(cfg);
  spec.initial = resolve_initial(cfg);
  spec.integration = cfg.integration;
  spec.grid = cfg.grid;
  spec.eradication_threshold = cfg.eradication_threshold;
  spec.threads = cfg.threads;
  if (auto v = validate_spec(spec); !v.empty()) {
    std::string fields;
    for (const auto& item : v) {
      fields += fields.empty() ? "" : ", ";
      fields += item.field;
    }
    throw ConfigError("invalid experiment config (" + fields + "): " + describe(v));
  }
  return spec;
}

}  // namespace sirsvk
