// phasekit CLI: reproduces the operator identities, moments, coherent-state
// limits, angle distributions, and legacy shift-operator demos as
// machine-readable reports, and dumps operator matrices.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>

#include "phasekit/phasekit.hpp"

namespace {

using nlohmann::json;
using namespace phasekit;

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitConfigError = 2;

struct CliOptions {
  int n_max = 256;
  int quad = 2048;
  int interior_margin = 4;
  std::string format = "csv";
  std::string out_path;
  std::map<std::string, double> tolerances;
};

// Streams the report to --out or stdout only after the command succeeded,
// so a failed run leaves no partial output file.
void emit(const CliOptions& opts, const std::string& payload) {
  if (opts.out_path.empty()) {
    std::cout << payload;
    return;
  }
  std::ofstream out(opts.out_path);
  if (!out) throw ParseError("cannot open output file: " + opts.out_path);
  out << payload;
}

void apply_config_file(CliOptions& opts, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file: " + path);
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(std::string("config file: ") + e.what());
  }
  if (!doc.is_object()) throw ParseError("config file: top-level object required");
  for (const auto& [key, value] : doc.items()) {
    if (key == "n_max")
      opts.n_max = value.get<int>();
    else if (key == "quad")
      opts.quad = value.get<int>();
    else if (key == "interior_margin")
      opts.interior_margin = value.get<int>();
    else if (key == "format")
      opts.format = value.get<std::string>();
    else if (key == "out")
      opts.out_path = value.get<std::string>();
    else if (key == "tolerances") {
      if (!value.is_object()) throw ParseError("config file: tolerances must be an object");
      for (const auto& [check, tol] : value.items()) opts.tolerances[check] = tol.get<double>();
    } else {
      throw ParseError("config file: unknown key '" + key + "'");
    }
  }
}

TruncationConfig truncation_of(const CliOptions& opts) {
  return TruncationConfig(opts.n_max, opts.interior_margin);
}

RunConfig run_config_of(const CliOptions& opts) {
  RunConfig rc;
  rc.truncation = truncation_of(opts);
  rc.quad = opts.quad;
  rc.tolerance_overrides = opts.tolerances;
  return rc;
}

void parse_tolerance_flags(CliOptions& opts, const std::vector<std::string>& flags) {
  for (const std::string& spec : flags) {
    auto eq = spec.find('=');
    if (eq == std::string::npos || eq == 0)
      throw ParseError("--tol expects CHECK_ID=VALUE, got '" + spec + "'");
    opts.tolerances[spec.substr(0, eq)] = std::stod(spec.substr(eq + 1));
  }
}

// --- verify ---

int cmd_verify(const CliOptions& opts) {
  std::vector<CheckResult> results = run_verify_suite(run_config_of(opts));
  std::ostringstream report;
  if (opts.format == "json")
    write_checks_json(report, results);
  else
    write_checks_csv(report, results);
  emit(opts, report.str());
  return all_pass(results) ? kExitOk : kExitCheckFailed;
}

// --- moments ---

int cmd_moments(const CliOptions& opts, const std::vector<int>& n_list,
                const std::vector<int>& k_list, bool exact) {
  TruncationConfig cfg = truncation_of(opts);
  struct Row {
    int n, k;
    std::string value;
    std::string uniform;
    std::string side;
    bool ok;
  };
  std::vector<Row> rows;
  bool any_error = false;
  for (int n : n_list)
    for (int k : k_list) {
      Row row{n, k, "", "", "", true};
      try {
        if (exact) {
          Rational value = moment_even_exact(n, k);
          Rational uniform = uniform_moment_exact(k);
          row.value = value.to_string();
          row.uniform = uniform.to_string();
          double diff = value.to_double() - uniform.to_double();
          row.side = value == uniform ? "equal" : (diff < 0 ? "below" : "above");
        } else {
          MomentReport rep = make_moment_report(n, k, cfg);
          row.value = format_g17(rep.value);
          row.uniform = format_g17(rep.uniform_value);
          row.side = rep.side == MomentSide::Equal
                         ? "equal"
                         : (rep.side == MomentSide::BelowUniform ? "below" : "above");
        }
      } catch (const TruncationInsufficient&) {
        row.value = "error:truncation_insufficient";
        row.uniform = "";
        row.side = "";
        row.ok = false;
        any_error = true;
      }
      rows.push_back(row);
    }

  std::ostringstream out;
  if (opts.format == "json") {
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const Row& r = rows[i];
      out << "  {\"n\": " << r.n << ", \"k\": " << r.k << ", \"value\": \"" << r.value
          << "\", \"uniform\": \"" << r.uniform << "\", \"side\": \"" << r.side << "\"}"
          << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  } else {
    out << "n,k,value,uniform,side\n";
    for (const Row& r : rows)
      out << r.n << "," << r.k << "," << r.value << "," << r.uniform << "," << r.side << "\n";
  }
  emit(opts, out.str());
  return any_error ? kExitCheckFailed : kExitOk;
}

// --- coherent ---

int cmd_coherent(const CliOptions& opts, std::vector<double> abs_alphas, double phase_angle) {
  if (abs_alphas.empty()) abs_alphas = {2.0, 4.0, 8.0};
  TruncationConfig cfg = truncation_of(opts);
  std::vector<ClassicalLimitRow> rows = classical_limit_report(abs_alphas, phase_angle, cfg);
  std::ostringstream out;
  if (opts.format == "json") {
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      const auto& r = rows[i];
      out << "  {\"abs_alpha\": " << format_g17(r.abs_alpha) << ", \"quantity\": \""
          << r.quantity << "\", \"quantum\": " << format_g17(r.quantum)
          << ", \"series\": " << format_g17(r.series)
          << ", \"classical\": " << format_g17(r.classical)
          << ", \"abs_dev\": " << format_g17(r.abs_dev)
          << ", \"rel_dev\": " << format_g17(r.rel_dev) << "}"
          << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  } else {
    out << "abs_alpha,quantity,quantum,series,classical,abs_dev,rel_dev\n";
    for (const auto& r : rows)
      out << format_g17(r.abs_alpha) << "," << r.quantity << "," << format_g17(r.quantum)
          << "," << format_g17(r.series) << "," << format_g17(r.classical) << ","
          << format_g17(r.abs_dev) << "," << format_g17(r.rel_dev) << "\n";
  }
  emit(opts, out.str());
  return kExitOk;
}

// --- phase-dist ---

FockVector parse_state_spec(const std::string& spec, const TruncationConfig& cfg) {
  if (spec.rfind("fock:", 0) == 0) {
    size_t pos = 0;
    int n;
    try {
      n = std::stoi(spec.substr(5), &pos);
    } catch (const std::exception&) {
      throw ParseError("state spec: expected fock:<n>, got '" + spec + "'");
    }
    if (pos != spec.size() - 5) throw ParseError("state spec: trailing junk in '" + spec + "'");
    return fock_state(cfg, n);
  }
  if (spec.rfind("coherent:", 0) == 0) {
    std::string rest = spec.substr(9);
    auto comma = rest.find(',');
    if (comma == std::string::npos)
      throw ParseError("state spec: expected coherent:<|alpha|>,<phi>, got '" + spec + "'");
    try {
      double abs_alpha = std::stod(rest.substr(0, comma));
      double phase = std::stod(rest.substr(comma + 1));
      return coherent_state(cfg, abs_alpha, phase);
    } catch (const TruncationInsufficient&) {
      throw;
    } catch (const std::exception&) {
      throw ParseError("state spec: malformed numbers in '" + spec + "'");
    }
  }
  throw ParseError("state spec: expected fock:<n> or coherent:<|alpha|>,<phi>");
}

int cmd_phase_dist(const CliOptions& opts, const std::string& state_spec) {
  TruncationConfig cfg = truncation_of(opts);
  FockVector state = parse_state_spec(state_spec, cfg);
  PhaseStateTable table = build_phase_table(cfg, build_quadrature(opts.quad));
  std::vector<PhaseDensityRow> rows = phase_distribution(state, table);
  std::ostringstream out;
  if (opts.format == "json") {
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i) {
      out << "  {\"phi\": " << format_g17(rows[i].phi) << ", \"branch\": \""
          << (rows[i].branch == SignBranch::Plus ? "plus" : "minus")
          << "\", \"density\": " << format_g17(rows[i].density) << "}"
          << (i + 1 < rows.size() ? "," : "") << "\n";
    }
    out << "]\n";
  } else {
    out << "phi,branch,density\n";
    for (const auto& r : rows)
      out << format_g17(r.phi) << "," << (r.branch == SignBranch::Plus ? "plus" : "minus")
          << "," << format_g17(r.density) << "\n";
  }
  emit(opts, out.str());
  return kExitOk;
}

// --- dump ---

int cmd_dump(const CliOptions& opts, const std::string& name, double t,
             const std::string& matrix_format) {
  TruncationConfig cfg = truncation_of(opts);
  BandedHermitianOperator op;
  if (name == "cos2phi") {
    op = build_cos2phi(cfg);
  } else if (name == "sin2phi") {
    op = build_sin2phi(cfg);
  } else if (name == "cos_sq") {
    op = build_cos_sq(cfg);
  } else if (name == "sin_sq") {
    op = build_sin_sq(cfg);
  } else if (name == "sg_c") {
    op = build_sg(cfg).cosine;
  } else if (name == "sg_s") {
    op = build_sg(cfg).sine;
  } else if (name == "phi" || name == "cos_phi" || name == "sin_phi" || name == "tan_phi") {
    PhaseStateTable table = build_phase_table(cfg, build_quadrature(opts.quad));
    if (name == "phi")
      op = build_phi(table);
    else if (name == "cos_phi")
      op = build_cos_phi(table);
    else if (name == "sin_phi")
      op = build_sin_phi(table);
    else {
      SpectralBuildInfo info;
      op = build_tan_phi(table, 1e8, &info);
      if (info.dropped_nodes > 0)
        std::cerr << "note: tan_phi dropped " << info.dropped_nodes
                  << " node(s) beyond the symbol cap\n";
    }
  } else {
    throw UnknownOperator("dump: unknown operator '" + name + "'");
  }
  BandedHermitianOperator evolved = heisenberg(op, EvolutionTime{t});
  if (opts.out_path.empty()) throw ParseError("dump requires --out PATH");
  save_matrix(opts.out_path, evolved.mat, matrix_format == "bin");
  return kExitOk;
}

// --- legacy ---

int cmd_legacy(const CliOptions& opts, int s) {
  TruncationConfig cfg = truncation_of(opts);
  const int d = cfg.dim();
  const int top = d - 1;
  SusskindGlogowerPair sg = build_sg(cfg);
  QuadratureOperators quads = build_quadratures(cfg);

  Matrix comm_cn = commutator(sg.cosine.mat, quads.number.mat);
  Matrix i_s = sg.sine.mat * cx(0.0, 1.0);
  Matrix comm_sn = commutator(sg.sine.mat, quads.number.mat);
  Matrix neg_i_c = sg.cosine.mat * cx(0.0, -1.0);
  Matrix sq = sg.cosine.mat * sg.cosine.mat + sg.sine.mat * sg.sine.mat;
  Matrix sq_expect = Matrix::identity(d);
  sq_expect(0, 0) = 0.5;
  sq_expect(top, top) = 0.5;
  Matrix comm_cs = commutator(sg.cosine.mat, sg.sine.mat);
  Matrix cs_expect(d, d);
  cs_expect(0, 0) = cx(0.0, 0.5);
  cs_expect(top, top) = cx(0.0, -0.5);

  struct Row {
    std::string name;
    double value;
  };
  std::vector<Row> rows = {
      {"sg_comm_cos_number_dev", comm_cn.max_abs_diff(i_s)},
      {"sg_comm_sin_number_dev", comm_sn.max_abs_diff(neg_i_c)},
      {"sg_trig_defect_dev", sq.max_abs_diff(sq_expect)},
      {"sg_commutator_defect_dev", comm_cs.max_abs_diff(cs_expect)},
      {"pb_divergence", pb_divergence(PBDimension(s))},
  };

  std::ostringstream out;
  if (opts.format == "json") {
    out << "[\n";
    for (size_t i = 0; i < rows.size(); ++i)
      out << "  {\"name\": \"" << rows[i].name << "\", \"value\": " << format_g17(rows[i].value)
          << "}" << (i + 1 < rows.size() ? "," : "") << "\n";
    out << "]\n";
  } else {
    out << "name,value\n";
    for (const auto& r : rows) out << r.name << "," << format_g17(r.value) << "\n";
  }
  emit(opts, out.str());
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"harmonic-oscillator phase operator toolkit"};
  app.require_subcommand(1);

  CliOptions opts;
  std::string config_path;
  std::vector<std::string> tol_flags;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--n-max", opts.n_max, "highest retained number state (even, >= 8)");
    cmd->add_option("--quad", opts.quad, "quadrature nodes (>= 64)");
    cmd->add_option("--interior-margin", opts.interior_margin,
                    "rows treated as truncation-contaminated (>= 2)");
    cmd->add_option("--format", opts.format, "report format: csv or json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--out", opts.out_path, "write the report to this path");
    cmd->add_option("--config", config_path, "JSON config file (flags still override)");
  };

  CLI::App* verify = app.add_subcommand("verify", "run the full identity suite");
  add_common(verify);
  verify->add_option("--tol", tol_flags, "override a check tolerance, CHECK_ID=VALUE");

  CLI::App* moments = app.add_subcommand("moments", "trig moments of number states");
  add_common(moments);
  std::vector<int> n_list{0, 1, 2};
  std::vector<int> k_list{1, 2, 3};
  bool exact = false;
  moments->add_option("--n", n_list, "number-state indices");
  moments->add_option("--k", k_list, "moment half-orders (m_2k)");
  moments->add_flag("--exact", exact, "print exact reduced fractions");

  CLI::App* coherent = app.add_subcommand("coherent", "coherent-state classical-limit table");
  add_common(coherent);
  std::vector<double> abs_alphas;
  double phase_angle = M_PI / 6.0;
  coherent->add_option("--abs-alpha", abs_alphas, "coherent amplitudes (default 2 4 8)");
  coherent->add_option("--phase", phase_angle, "coherent phase angle");

  CLI::App* phase_dist = app.add_subcommand("phase-dist", "angle distribution of a state");
  add_common(phase_dist);
  std::string state_spec = "fock:0";
  phase_dist->add_option("--state", state_spec, "fock:<n> or coherent:<|alpha|>,<phi>");

  CLI::App* dump = app.add_subcommand("dump", "write an operator matrix to a file");
  add_common(dump);
  std::string op_name;
  double dump_t = 0.0;
  std::string matrix_format = "bin";
  dump->add_option("--operator", op_name,
                   "phi cos2phi sin2phi cos_sq sin_sq cos_phi sin_phi tan_phi sg_c sg_s")
      ->required();
  dump->add_option("--t", dump_t, "transport time before dumping");
  dump->add_option("--matrix-format", matrix_format, "bin (PHOPMAT1) or csv")
      ->check(CLI::IsMember({"bin", "csv"}));

  CLI::App* legacy = app.add_subcommand("legacy", "shift-operator defect demos");
  add_common(legacy);
  int pb_s = 100;
  legacy->add_option("--s", pb_s, "cycling-space size parameter");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitConfigError;
  }

  try {
    if (!config_path.empty()) {
      CliOptions file_opts;
      apply_config_file(file_opts, config_path);
      // flags given explicitly win over config-file values
      CLI::App* active = app.get_subcommands().front();
      if (active->count("--n-max") == 0) opts.n_max = file_opts.n_max;
      if (active->count("--quad") == 0) opts.quad = file_opts.quad;
      if (active->count("--interior-margin") == 0)
        opts.interior_margin = file_opts.interior_margin;
      if (active->count("--format") == 0) opts.format = file_opts.format;
      if (active->count("--out") == 0 && !file_opts.out_path.empty())
        opts.out_path = file_opts.out_path;
      opts.tolerances = file_opts.tolerances;
    }
    parse_tolerance_flags(opts, tol_flags);

    if (verify->parsed()) return cmd_verify(opts);
    if (moments->parsed()) return cmd_moments(opts, n_list, k_list, exact);
    if (coherent->parsed()) return cmd_coherent(opts, abs_alphas, phase_angle);
    if (phase_dist->parsed()) return cmd_phase_dist(opts, state_spec);
    if (dump->parsed()) return cmd_dump(opts, op_name, dump_t, matrix_format);
    if (legacy->parsed()) return cmd_legacy(opts, pb_s);
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const UnknownOperator& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  } catch (const TruncationInsufficient& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailed;
  }
  return kExitConfigError;
}
