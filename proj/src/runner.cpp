// runner.cpp — config execution and deterministic artifact emission.
#include "qfridge/runner.hpp"

#include <array>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include <json.hpp>

#include "qfridge/analysis.hpp"

namespace qfridge {

namespace {

using nlohmann::json;

constexpr const char* kTimeseriesHeader =
    "t,D,T_c,T_r,T_h,W_R_CH,W_genuine,p1,p2,p3,p4,p5,p6,p7,p8,im_rho36";
constexpr const char* kSweepHeader =
    "parameter,value,series,ok,steady_T_c,min_T_c,t_star,decay_rate,"
    "damping_rate,W_max_R_CH,W_max_genuine,error";
constexpr const char* kSpectrumHeader = "k,re_lambda,im_lambda";

std::string csv_quote(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string timeseries_csv(const TimeSeries& series) {
  std::string out = kTimeseriesHeader;
  out += '\n';
  for (const ObservableRecord& r : series.records) {
    out += format_double(r.t);
    for (double x : {r.D, r.T_c, r.T_r, r.T_h, r.W_R_CH, r.W_genuine}) {
      out += ',';
      out += format_double(x);
    }
    for (double p : r.populations) {
      out += ',';
      out += format_double(p);
    }
    out += ',';
    out += format_double(r.im_rho36);
    out += '\n';
  }
  return out;
}

void append_sweep_rows(std::string& out, const SweepResult& result,
                       int series_index) {
  for (const SweepRow& r : result.rows) {
    out += result.parameter;
    out += ',';
    out += format_double(r.value);
    out += ',';
    out += std::to_string(series_index);
    out += ',';
    out += r.ok ? '1' : '0';
    for (double x : {r.steady_T_c, r.min_T_c, r.t_star, r.decay_rate,
                     r.damping_rate, r.W_max_R_CH, r.W_max_genuine}) {
      out += ',';
      out += format_double(x);
    }
    out += ',';
    out += csv_quote(r.error);
    out += '\n';
  }
}

std::string spectrum_csv(const Spectrum& sp) {
  std::string out = kSpectrumHeader;
  out += '\n';
  for (int j = 0; j < 9; ++j) {
    out += std::to_string(j + 1);
    out += ',';
    out += format_double(sp.eigenvalues[j].real());
    out += ',';
    out += format_double(sp.eigenvalues[j].imag());
    out += '\n';
  }
  return out;
}

json config_json(const RunConfig& c) {
  return json{{"E_C", c.E_C},
              {"E_H", c.E_H},
              {"T_C", c.T_C},
              {"T_R", c.T_R},
              {"T_H", c.T_H},
              {"p_C", c.p_C},
              {"p_R", c.p_R},
              {"p_H", c.p_H},
              {"g", c.g},
              {"kind", c.kind},
              {"t_final", c.t_final},
              {"n_samples", c.n_samples},
              {"t_max", c.t_max},
              {"sweep_parameter", c.sweep_parameter},
              {"sweep_values", c.sweep_values},
              {"alt_p_C", c.alt_p_C},
              {"alt_p_H", c.alt_p_H},
              {"out_dir", c.out_dir},
              {"out_prefix", c.out_prefix},
              {"solver", c.solver}};
}

json spectrum_json(const Spectrum& sp, const SpectrumClassification& cl) {
  json eigenvalues = json::array();
  for (int j = 0; j < 9; ++j)
    eigenvalues.push_back({sp.eigenvalues[j].real(), sp.eigenvalues[j].imag()});
  return json{
      {"eigenvalues", eigenvalues},
      {"lambda_max", {cl.lambda_max.real(), cl.lambda_max.imag()}},
      {"decay_rate", cl.decay_rate},
      {"has_complex_pair", cl.has_complex_pair},
      {"lambda_cp", {cl.lambda_cp.real(), cl.lambda_cp.imag()}},
      {"damping_rate", cl.damping_rate},
      {"oscillation_angular_frequency", cl.oscillation_angular_frequency},
      {"condition_number", sp.condition_number}};
}

json steady_json(const MachineSpec& spec, const Vec9d& v_inf) {
  const ObservableRecord rec =
      evaluate_observables(spec, 0.0, v_inf, embed(v_inf));
  json populations = json::array();
  for (double p : rec.populations) populations.push_back(p);
  return json{{"T_c", rec.T_c},
              {"T_r", rec.T_r},
              {"T_h", rec.T_h},
              {"populations", populations},
              {"re_rho36", v_inf[7]},
              {"im_rho36", v_inf[8]},
              {"W_R_CH", rec.W_R_CH},
              {"W_genuine", rec.W_genuine}};
}

// Spectrum, steady-state observables, virtual temperature, witness maxima.
void add_machine_summary(json& summary, const MachineSpec& spec,
                         std::string& stage) {
  stage = "steady-state solve";
  const ReducedSystem sys = build_reduced_system(spec);
  const Vec9d v_inf = steady_state(sys);
  stage = "eigendecomposition";
  const Spectrum sp = eigendecompose(sys);
  const SpectrumClassification cl = classify(sp);
  stage = "summary observables";
  summary["spectrum"] = spectrum_json(sp, cl);
  summary["steady"] = steady_json(spec, v_inf);
  const VirtualTemperature tv = virtual_temperature(spec);
  summary["virtual_temperature"] = tv.T_V.value;
  summary["cooling"] = tv.cooling;
  summary["W_max_R_CH"] = max_entanglement(spec, Partition::R_CH);
  summary["W_max_genuine"] = max_entanglement(spec, Partition::genuine);
}

struct Artifacts {
  // (filename, content), written only after every computation succeeded.
  std::vector<std::pair<std::string, std::string>> files;
};

Artifacts compute(const RunConfig& config, std::string& stage) {
  stage = "machine setup";
  const MachineSpec spec = config.machine();

  json summary;
  summary["config"] = config_json(config);
  summary["solver"] = config.solver;

  Artifacts art;
  if (config.kind == "timeseries") {
    stage = "time series";
    const TimeSeries series = run_timeseries(
        spec, config.t_final, config.n_samples, config.solver_choice());
    add_machine_summary(summary, spec, stage);
    summary["solver"] = series.solver_used;
    art.files.emplace_back(config.out_prefix + ".csv", timeseries_csv(series));
  } else if (config.kind == "sweep") {
    add_machine_summary(summary, spec, stage);
    stage = "sweep";
    std::string csv = kSweepHeader;
    csv += '\n';
    const SweepResult rows =
        sweep(spec, config.sweep_parameter, config.sweep_values, config.t_max);
    append_sweep_rows(csv, rows, 0);
    if (config.has_alt()) {
      const SweepResult alt =
          sweep(config.machine_alt(), config.sweep_parameter,
                config.sweep_values, config.t_max);
      append_sweep_rows(csv, alt, 1);
    }
    art.files.emplace_back(config.out_prefix + ".csv", std::move(csv));
  } else if (config.kind == "spectrum") {
    add_machine_summary(summary, spec, stage);
    stage = "eigendecomposition";
    const Spectrum sp = eigendecompose(build_reduced_system(spec));
    art.files.emplace_back(config.out_prefix + ".csv", spectrum_csv(sp));
  } else {  // summary
    add_machine_summary(summary, spec, stage);
  }

  stage = "summary serialization";
  art.files.emplace_back(config.out_prefix + ".json", summary.dump(2) + "\n");
  return art;
}

void write_files(const RunConfig& config, const Artifacts& art) {
  namespace fs = std::filesystem;
  std::error_code ec;
  fs::create_directories(config.out_dir, ec);
  if (ec)
    throw std::runtime_error("cannot create output directory '" +
                             config.out_dir + "': " + ec.message());
  for (const auto& [name, content] : art.files) {
    const fs::path path = fs::path(config.out_dir) / name;
    std::ofstream out(path, std::ios::binary);
    if (!out)
      throw std::runtime_error("cannot open '" + path.string() +
                               "' for writing");
    out << content;
    if (!out) throw std::runtime_error("write failed for '" + path.string() + "'");
  }
}

}  // namespace

std::string format_double(double x) {
  std::array<char, 64> buf;
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x,
                                 std::chars_format::general, 17);
  return std::string(buf.data(), res.ptr);
}

std::string summary_json(const RunConfig& config) {
  std::string stage;
  json summary;
  summary["config"] = config_json(config);
  summary["solver"] = config.solver;
  add_machine_summary(summary, config.machine(), stage);
  return summary.dump(2) + "\n";
}

int run(const RunConfig& config, std::ostream& err) {
  try {
    config.validate();
  } catch (const std::exception& e) {
    err << "config error: " << e.what() << '\n';
    return 2;
  }

  std::string stage = "machine setup";
  Artifacts art;
  try {
    art = compute(config, stage);
  } catch (const std::exception& e) {
    err << "solver failure in " << stage << ": " << e.what() << '\n';
    return 3;
  }

  try {
    write_files(config, art);
  } catch (const std::exception& e) {
    err << "io error: " << e.what() << '\n';
    return 4;
  }
  return 0;
}

int run(const RunConfig& config) { return run(config, std::cerr); }

}  // namespace qfridge
