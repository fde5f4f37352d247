#include "xtalk/analysis.hpp"
#include "xtalk/config.hpp"
#include "xtalk/defense.hpp"
#include "xtalk/io.hpp"
#include "xtalk/rng.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

namespace fs = std::filesystem;
using namespace xtalk;

namespace {

std::string json_header(const std::string& config_json) {
  return std::string("{\"format\":\"") + kFormatVersion + "\",\"config\":" +
         config_json;
}

std::vector<double> parse_value_grid(const std::string& grid) {
  return parse_degree_grid(grid);  // same start:stop:step syntax, no unit
}

fs::path out_path(const RunConfig& cfg, const std::string& name) {
  fs::create_directories(cfg.out_dir);
  return fs::path(cfg.out_dir) / name;
}

void cmd_scan(const RunConfig& cfg, const std::string& couplings_arg) {
  std::vector<std::string> couplings;
  if (couplings_arg.empty()) {
    couplings = default_scan_couplings();
  } else {
    std::istringstream in(couplings_arg);
    std::string tok;
    while (std::getline(in, tok, ',')) couplings.push_back(tok);
  }
  const auto records =
      coupling_scan(couplings, default_scan_shapes(), cfg.attack);
  const std::string config_json = resolved_config_json(cfg);
  write_text_file(out_path(cfg, "scan.csv").string(),
                  scan_csv(records, config_json));
  if (cfg.emit_svg) {
    std::vector<SweepRecord> by_rank = records;
    write_text_file(out_path(cfg, "scan.svg").string(),
                    render_svg(by_rank, SvgKind::Line,
                               "influence by rank", config_json));
  }
  std::cout << "wrote " << out_path(cfg, "scan.csv").string() << "\n";
}

void cmd_qpt(const RunConfig& cfg) {
  const QuantumChannel ch = victim_channel(cfg.attack);
  const ChiMatrix chi = chi_from_choi(ch);
  const KrausSet kraus = kraus_from_chi(chi);

  const CMat u = total_propagator(cfg.attack);
  const CMat aux = aux_density(cfg.attack.aux_state);
  const CMat diag = chi_linear_inversion_diagnostic([&](const CMat& rho) {
    return partial_trace_keep_last(u * kron(aux, rho) * u.adjoint());
  });

  std::string s = json_header(resolved_config_json(cfg));
  s += ",\"choi\":" + matrix_json(ch.choi);
  s += ",\"chi\":" + matrix_json(chi.chi);
  s += ",\"kraus\":[";
  for (int j = 0; j < 4; ++j) {
    if (j) s += ",";
    s += matrix_json(kraus.ops[j]);
  }
  s += "],\"chi_linear_inversion_diagnostic\":" + matrix_json(diag);
  s += "}\n";
  write_text_file(out_path(cfg, "qpt.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "qpt.json").string() << "\n";
}

void cmd_fit(const RunConfig& cfg) {
  const FitResult fit = fit_attack(cfg.attack);
  std::string s = json_header(resolved_config_json(cfg));
  s += ",\"theta\":" + format_real(fit.theta);
  s += ",\"loss\":" + format_real(fit.loss);
  s += ",\"iso\":" + matrix_json(fit.iso);
  s += ",\"iterations\":" + std::to_string(fit.iterations);
  s += std::string(",\"converged\":") + (fit.converged ? "true" : "false");
  s += "}\n";
  write_text_file(out_path(cfg, "fit.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "fit.json").string() << "\n";
}

void cmd_coin(const RunConfig& cfg, const std::string& timing_s) {
  const ScenarioTiming timing = parse_timing(timing_s);
  const QuantumChannel ch = victim_channel(cfg.attack);
  const std::vector<double> grid_deg = parse_degree_grid(cfg.lambda_grid);

  std::vector<double> ideal, attacked;
  std::vector<SweepRecord> dev_records;
  for (double deg : grid_deg) {
    const double lam = deg * kPi / 180.0;
    ideal.push_back(coin_flip_p1(lam, ScenarioTiming::NoAttack, nullptr));
    attacked.push_back(coin_flip_p1(lam, timing, &ch));
    SweepRecord r;
    r.config_id = "coin";
    r.swept_name = "lambda_deg";
    r.swept_value = deg;
    r.theta = std::abs(attacked.back() - ideal.back());
    dev_records.push_back(r);
  }
  const std::string config_json = resolved_config_json(cfg);
  write_text_file(out_path(cfg, "coin.csv").string(),
                  coin_csv(grid_deg, ideal, attacked, config_json));
  if (cfg.emit_svg)
    write_text_file(out_path(cfg, "coin.svg").string(),
                    render_svg(dev_records, SvgKind::Line,
                               "coin deviation vs lambda", config_json));
  std::cout << "wrote " << out_path(cfg, "coin.csv").string() << "\n";
}

void cmd_xor(const RunConfig& cfg, const std::string& timing_s) {
  const ScenarioTiming timing = parse_timing(timing_s);
  const QuantumChannel ch = victim_channel(cfg.attack);
  std::string s = json_header(resolved_config_json(cfg));
  s += ",\"timing\":\"" + timing_name(timing) + "\",\"rows\":[";
  for (int x1 = 0; x1 < 2; ++x1)
    for (int x2 = 0; x2 < 2; ++x2) {
      const auto [p0, p1] = xor_probs(x1, x2, timing, &ch);
      if (x1 || x2) s += ",";
      s += "{\"x1\":" + std::to_string(x1) + ",\"x2\":" + std::to_string(x2) +
           ",\"p0\":" + format_real(p0) + ",\"p1\":" + format_real(p1) + "}";
    }
  s += "],\"delta_max\":" + format_real(xor_delta_max(timing, ch)) + "}\n";
  write_text_file(out_path(cfg, "xor.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "xor.json").string() << "\n";
}

void cmd_sqqnn(const RunConfig& cfg, const std::string& dataset_path) {
  const Dataset data = load_dataset(dataset_path);
  const auto [train_idx, test_idx] =
      train_test_split(static_cast<int>(data.features.rows()),
                       cfg.sqqnn_test_fraction, cfg.sqqnn_seed);
  const SqqnnModel model = sqqnn_train(take_rows(data.features, train_idx),
                                       take_rows(data.labels, train_idx),
                                       cfg.sqqnn_degree, cfg.sqqnn_epsilon);
  const Eigen::MatrixXd xt = take_rows(data.features, test_idx);
  const Eigen::VectorXd yt = take_rows(data.labels, test_idx);
  const QuantumChannel ch = victim_channel(cfg.attack);

  const double base =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::NoAttack, nullptr);
  const double af =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::AttackerFirst, &ch);
  const double vf =
      sqqnn_accuracy(model, xt, yt, ScenarioTiming::VictimFirst, &ch);

  std::string s = json_header(resolved_config_json(cfg));
  s += ",\"dataset\":\"" + dataset_path + "\"";
  s += ",\"train_size\":" + std::to_string(train_idx.size());
  s += ",\"test_size\":" + std::to_string(test_idx.size());
  s += ",\"baseline_accuracy\":" + format_real(base);
  s += ",\"attacker_first_accuracy\":" + format_real(af);
  s += ",\"victim_first_accuracy\":" + format_real(vf);
  s += "}\n";
  write_text_file(out_path(cfg, "sqqnn.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "sqqnn.json").string() << "\n";
}

void cmd_sweep(const RunConfig& cfg, const std::string& target_s,
               const std::string& values_s) {
  const SweepTarget target = parse_sweep_target(target_s);
  const std::vector<double> values =
      values_s.empty() ? default_amplitude_values()
                       : parse_value_grid(values_s);
  const auto records = amplitude_sweep(target, values, cfg.attack);
  const std::string config_json = resolved_config_json(cfg);
  const std::string name = "sweep_" + sweep_target_name(target) + ".csv";
  write_text_file(out_path(cfg, name).string(),
                  sweep_csv(records, config_json));
  if (cfg.emit_svg) {
    std::vector<SweepRecord> theta_series = records;
    for (SweepRecord& r : theta_series) r.influence_norm.reset();
    write_text_file(
        out_path(cfg, "sweep_" + sweep_target_name(target) + ".svg").string(),
        render_svg(theta_series, SvgKind::Line,
                   "theta vs " + sweep_target_name(target) + " amplitude",
                   config_json));
  }
  std::cout << "wrote " << out_path(cfg, name).string() << "\n";
}

void cmd_detuning(const RunConfig& cfg, const std::string& shape_s) {
  std::vector<PulseShape> shapes;
  if (shape_s == "all")
    shapes = default_scan_shapes();
  else
    shapes.push_back(parse_pulse_shape(shape_s));

  const std::string config_json = resolved_config_json(cfg);
  std::string summary = json_header(config_json) + ",\"shapes\":{";
  bool first = true;
  for (PulseShape shape : shapes) {
    const auto records =
        detuning_sweep(shape, default_detuning_grid(), cfg.attack);
    const auto [var_theta, var_loss] =
        detuning_variance(shape, default_detuning_grid(), cfg.attack);
    const std::string name =
        "detuning_" + pulse_shape_name(shape) + ".csv";
    write_text_file(out_path(cfg, name).string(),
                    sweep_csv(records, config_json));
    if (!first) summary += ",";
    first = false;
    summary += "\"" + pulse_shape_name(shape) + "\":{\"var_theta\":" +
               format_real(var_theta) + ",\"var_loss\":" +
               format_real(var_loss) + "}";
  }
  summary += "}}\n";
  write_text_file(out_path(cfg, "detuning.json").string(), summary);
  std::cout << "wrote " << out_path(cfg, "detuning.json").string() << "\n";
}

void cmd_detect(const RunConfig& cfg, const std::string& timing_s) {
  const ScenarioTiming timing = parse_timing(timing_s);
  const QuantumChannel ch = victim_channel(cfg.attack);
  const DetectionReport rep =
      canary_check(cfg.defense_shots, cfg.defense_seed, cfg.defense_threshold,
                   &ch, timing);
  std::string s = json_header(resolved_config_json(cfg));
  s += std::string(",\"generator\":\"") + kRngName + "\"";
  s += ",\"timing\":\"" + timing_name(timing) + "\"";
  s += ",\"p_hat\":" + format_real(rep.p_hat);
  s += ",\"baseline\":" + format_real(rep.baseline);
  s += ",\"n_shots\":" + std::to_string(rep.n_shots);
  s += ",\"z_score\":" + format_real(rep.z_score);
  s += ",\"threshold\":" + format_real(rep.threshold);
  s += std::string(",\"flagged\":") + (rep.flagged ? "true" : "false");
  s += ",\"seed\":" + std::to_string(rep.seed);
  s += "}\n";
  write_text_file(out_path(cfg, "detect.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "detect.json").string() << "\n";
}

void cmd_contain(const RunConfig& cfg, const std::string& protocol_s,
                 const std::string& dataset_path) {
  const Protocol protocol = parse_protocol(protocol_s);
  const QuantumChannel ch = victim_channel(cfg.attack);
  ContainmentReport rep;
  if (protocol == Protocol::Coin) {
    rep = containment_compare(ch, protocol);
  } else {
    const Dataset data = load_dataset(dataset_path);
    rep = containment_compare(ch, protocol, &data.features, &data.labels,
                              cfg.sqqnn_degree, cfg.sqqnn_epsilon,
                              cfg.sqqnn_test_fraction, cfg.sqqnn_seed);
  }
  std::string s = json_header(resolved_config_json(cfg));
  s += ",\"protocol\":\"" + protocol_name(protocol) + "\"";
  s += ",\"attacker_first_impact\":" + format_real(rep.attacker_first_impact);
  s += ",\"post_reset_impact\":" + format_real(rep.post_reset_impact);
  s += "}\n";
  write_text_file(out_path(cfg, "contain.json").string(), s);
  std::cout << "wrote " << out_path(cfg, "contain.json").string() << "\n";
}

int run_cli(int argc, char** argv) {
  CLI::App app{"pulse-level crosstalk attack simulator and analysis toolkit"};
  app.require_subcommand(1);

  std::string config_path, out_override, dataset_path;
  std::string timing_s = "attacker-first";
  std::string couplings_s, target_s, values_s;
  std::string shape_s = "all", protocol_s = "coin";
  std::string lambda_grid_s;
  bool svg = false;

#ifdef XTALK_DATA_DIR
  dataset_path = std::string(XTALK_DATA_DIR) + "/iris_binary.csv";
#endif

  const auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_path, "JSON config file");
    sub->add_option("--out", out_override, "output directory");
    sub->add_flag("--svg", svg, "emit SVG plots alongside CSV");
  };

  CLI::App* s_scan = app.add_subcommand("scan", "coupling/pulse influence scan");
  add_common(s_scan);
  s_scan->add_option("--couplings", couplings_s,
                     "comma-separated coupling labels (default YX,ZX)");

  CLI::App* s_qpt = app.add_subcommand("qpt", "reconstruct the victim channel");
  add_common(s_qpt);

  CLI::App* s_fit = app.add_subcommand("fit", "fit the logical rotation model");
  add_common(s_fit);

  CLI::App* s_coin = app.add_subcommand("coin", "biased-coin protocol sweep");
  add_common(s_coin);
  s_coin->add_option("--lambda-grid", lambda_grid_s,
                     "degrees start:stop:step (default 0:90:5)");
  s_coin->add_option("--timing", timing_s,
                     "attacker-first | victim-first | no-attack");

  CLI::App* s_xor = app.add_subcommand("xor", "XOR protocol truth table");
  add_common(s_xor);
  s_xor->add_option("--timing", timing_s,
                    "attacker-first | victim-first | no-attack");

  CLI::App* s_sqqnn = app.add_subcommand("sqqnn", "classifier robustness");
  add_common(s_sqqnn);
  s_sqqnn->add_option("--dataset", dataset_path, "dataset CSV path");

  CLI::App* s_sweep = app.add_subcommand("sweep", "amplitude sweep with fits");
  add_common(s_sweep);
  s_sweep->add_option("--target", target_s, "catalyst | driver")->required();
  s_sweep->add_option("--values", values_s,
                      "amplitudes start:stop:step (default 0.1:1.0:0.1)");

  CLI::App* s_det = app.add_subcommand("detuning", "detuning robustness");
  add_common(s_det);
  s_det->add_option("--shape", shape_s, "pulse shape or 'all'");

  CLI::App* s_detect = app.add_subcommand("detect", "canary detection");
  add_common(s_detect);
  s_detect->add_option("--timing", timing_s,
                       "attacker-first | victim-first | no-attack");

  CLI::App* s_contain = app.add_subcommand("contain", "reset containment");
  add_common(s_contain);
  s_contain->add_option("--protocol", protocol_s, "coin | sqqnn");
  s_contain->add_option("--dataset", dataset_path, "dataset CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  RunConfig cfg =
      config_path.empty() ? default_run_config() : load_run_config(config_path);
  if (!out_override.empty()) cfg.out_dir = out_override;
  if (svg) cfg.emit_svg = true;
  if (!lambda_grid_s.empty()) cfg.lambda_grid = lambda_grid_s;
  validate_run_config(cfg);

  if (s_scan->parsed()) cmd_scan(cfg, couplings_s);
  if (s_qpt->parsed()) cmd_qpt(cfg);
  if (s_fit->parsed()) cmd_fit(cfg);
  if (s_coin->parsed()) cmd_coin(cfg, timing_s);
  if (s_xor->parsed()) cmd_xor(cfg, timing_s);
  if (s_sqqnn->parsed()) cmd_sqqnn(cfg, dataset_path);
  if (s_sweep->parsed()) cmd_sweep(cfg, target_s, values_s);
  if (s_det->parsed()) cmd_detuning(cfg, shape_s);
  if (s_detect->parsed()) cmd_detect(cfg, timing_s);
  if (s_contain->parsed()) cmd_contain(cfg, protocol_s, dataset_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run_cli(argc, argv);
  } catch (const ValidationError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const NumericalError& e) {
    std::cerr << "numerical error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
