#include "gqg/cli.hpp"

#include <charconv>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "gqg/phase.hpp"
#include "gqg/robustness.hpp"
#include "gqg/sequence_io.hpp"
#include "gqg/synthesis.hpp"

namespace gqg::cli {

namespace {

class InputError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

std::string read_source(const std::string &path, std::istream &in) {
  if (path == "-")
    return {std::istreambuf_iterator<char>(in),
            std::istreambuf_iterator<char>()};
  std::ifstream file(path, std::ios::binary);
  if (!file)
    throw InputError("cannot open '" + path + "'");
  return {std::istreambuf_iterator<char>(file),
          std::istreambuf_iterator<char>()};
}

BlochVector parse_vector(const std::string &text) {
  std::vector<double> parts;
  std::stringstream ss(text);
  ss.imbue(std::locale::classic());
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::istringstream is(item);
    is.imbue(std::locale::classic());
    double v = 0.0;
    if (!(is >> v) || !(is >> std::ws).eof())
      throw ParseError("--n0: '" + item + "' is not a number", 0);
    parts.push_back(v);
  }
  if (parts.size() != 3)
    throw ParseError("--n0 expects three comma-separated components", 0);
  BlochVector n(parts[0], parts[1], parts[2]);
  if (std::abs(n.norm() - 1.0) > 1e-6)
    throw DomainError("--n0 must be a unit vector");
  return n.normalized();
}

// Human-facing values carry 12 significant digits.
std::string show(double value) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, value,
                                 std::chars_format::general, 12);
  std::string s(buf, res.ptr);
  return s == "-0" ? "0" : s;
}

std::string angle_text(double rad) {
  return show(rad) + " rad (" + show(rad_to_deg(rad)) + " deg)";
}

std::string vector_text(const BlochVector &v) {
  return "(" + show(v.x()) + ", " + show(v.y()) + ", " +
         show(v.z()) + ")";
}

std::string complex_text(const Complex &c) {
  return show(c.real()) + (c.imag() < 0 ? " - " : " + ") +
         show(std::abs(c.imag())) + "i";
}

void print_report(std::ostream &out, const RobustnessReport &r) {
  const Matrix2 &h = r.generator.matrix;
  out << "error_generator:\n"
      << "  matrix: [[" << complex_text(h(0, 0)) << ", "
      << complex_text(h(0, 1)) << "], [" << complex_text(h(1, 0)) << ", "
      << complex_text(h(1, 1)) << "]]\n"
      << "  pauli_components: " << vector_text(r.generator.pauli_components())
      << "\n"
      << "  trace_part: " << show(r.trace_part) << "\n"
      << "  traceless_norm: " << show(r.traceless_norm) << "\n"
      << "  diag_part: " << show(r.diag_part) << "\n"
      << "  offdiag_part: " << show(r.offdiag_part) << "\n";
  out << "fitted_order: "
      << (r.fitted_order ? show(*r.fitted_order) : std::string("n/a"))
      << "\n";
  out << "fully_compensating: " << (r.is_fully_compensating ? "yes" : "no")
      << "\n";
  out << "classification: " << to_string(r.classification) << "\n";
}

int cmd_synth(const std::string &family, std::optional<double> theta_deg,
              const std::string &branch_name, double phase_deg,
              const std::string &format, std::ostream &out) {
  const SynthesisBranch branch = branch_name == "mirrored"
                                     ? SynthesisBranch::mirrored
                                     : SynthesisBranch::principal;
  const double shift = deg_to_rad(phase_deg);
  if (family != "ohta" && !theta_deg)
    throw DomainError("synth " + family + " requires --theta");
  const double theta = theta_deg ? deg_to_rad(*theta_deg) : 0.0;

  PulseSequence seq;
  if (family == "scrofulous")
    seq = scrofulous(theta, branch, shift).sequence;
  else if (family == "w1")
    seq = w1(theta, branch, shift);
  else if (family == "w1-sandwich")
    seq = w1_sandwich(theta, branch, shift);
  else if (family == "trotter-suzuki")
    seq = trotter_suzuki(theta, shift);
  else if (family == "naive")
    seq = naive(xy_axis(shift), theta);
  else
    seq = ohta();

  out << serialize(seq, format == "json" ? Format::json : Format::dsl) << "\n";
  return kOk;
}

int cmd_analyze(const PulseSequence &seq, const std::optional<BlochVector> &n0,
                std::ostream &out) {
  if (seq.empty())
    throw DomainError("sequence has no segments");
  const Unitary2 u = compose(seq);
  const PhaseDecomposition pd =
      n0 ? phase_decomposition(seq, *n0) : phase_decomposition(seq);
  const RobustnessReport report = first_order_report(seq, pd.n0);

  if (!seq.label.empty())
    out << "label: " << seq.label << "\n";
  out << "segments: " << seq.size() << "\n";
  out << "cyclic_n0: " << vector_text(pd.n0)
      << (n0 ? " (supplied)" : " (from composite)") << "\n";
  if (!n0) {
    const CyclicStates cs = cyclic_states(u);
    out << "gamma_plus: " << angle_text(cs.gamma_plus) << "\n";
    out << "gamma_minus: " << angle_text(cs.gamma_minus) << "\n";
  }
  out << "dynamic_phases:\n";
  for (std::size_t j = 0; j < pd.per_segment.size(); ++j)
    out << "  segment " << j + 1 << ": " << angle_text(pd.per_segment[j])
        << "\n";
  out << "dynamic_phase_sum: " << angle_text(pd.gamma_dynamic) << "\n";
  out << "total_phase: " << angle_text(pd.gamma_total) << "\n";
  out << "geometric_phase: " << angle_text(pd.gamma_geometric) << "\n";
  print_report(out, report);
  return kOk;
}

int cmd_sweep(const PulseSequence &seq, const std::string &target_spec,
              double eps_min, double eps_max, std::size_t points,
              const std::string &csv_path, std::ostream &out) {
  const Unitary2 target = target_spec == "auto"
                              ? reference_target(seq)
                              : compose(parse_dsl(target_spec));
  const auto grid = log_spaced(eps_min, eps_max, points);
  const auto rows = sweep(seq, target, grid);
  if (csv_path.empty()) {
    write_sweep_csv(out, rows);
    return kOk;
  }
  std::ofstream file(csv_path, std::ios::binary);
  if (!file)
    throw InputError("cannot write '" + csv_path + "'");
  write_sweep_csv(file, rows);
  return kOk;
}

int cmd_verify(const PulseSequence &seq, const std::optional<BlochVector> &n0,
               std::ostream &out) {
  const TheoremVerdict v = verify_theorem(seq, reference_target(seq), n0);
  out << "target_distance: " << show(v.target_distance) << "\n";
  out << "dynamic_phase_sum: " << angle_text(v.report.dyn_sum) << "\n";
  out << "traceless_norm: " << show(v.report.traceless_norm) << "\n";
  out << "fully_compensating: "
      << (v.report.is_fully_compensating ? "yes" : "no") << "\n";
  out << "zero_dynamic_phase: " << (v.zero_dynamic_phase ? "yes" : "no")
      << "\n";
  out << "implication_holds: " << (v.implication_holds ? "yes" : "no") << "\n";
  out << "converse_violated: " << (v.converse_violated ? "yes" : "no") << "\n";
  out << "classification: " << to_string(v.report.classification) << "\n";
  out << "verdict: " << v.summary << "\n";
  return kOk;
}

} // namespace

int run(const std::vector<std::string> &args, std::istream &in,
        std::ostream &out, std::ostream &err) {
  CLI::App app{"Composite pulse synthesis and geometric/dynamic phase "
               "analysis for single-qubit gates",
               "gqg"};
  app.require_subcommand(1);

  std::string family, branch = "principal", out_format = "dsl";
  std::optional<double> theta_deg;
  double phase_deg = 0.0;
  auto *synth = app.add_subcommand("synth", "Synthesize a composite sequence");
  synth->add_option("family", family, "Sequence family")
      ->required()
      ->check(CLI::IsMember({"scrofulous", "w1", "w1-sandwich",
                             "trotter-suzuki", "naive", "ohta"}));
  synth->add_option("--theta", theta_deg, "Target rotation angle (degrees)");
  synth->add_option("--branch", branch, "Phase sign branch")
      ->check(CLI::IsMember({"principal", "mirrored"}));
  synth->add_option("--phase", phase_deg,
                    "Phase of the xy-plane target axis (degrees)");
  synth->add_option("--out", out_format, "Output format")
      ->check(CLI::IsMember({"dsl", "json"}));

  std::string source = "-";
  std::string n0_text;
  auto *analyze =
      app.add_subcommand("analyze", "Phase decomposition and error generator");
  analyze->add_option("input", source, "Sequence file (DSL or JSON), - for stdin")
      ->required();
  analyze->add_option("--n0", n0_text, "Cyclic Bloch vector x,y,z");

  std::string target_spec, csv_path;
  double eps_min = 0.0, eps_max = 0.0;
  std::size_t points = 0;
  auto *sweep_cmd = app.add_subcommand("sweep", "Amplitude-error sweep as CSV");
  sweep_cmd->add_option("input", source, "Sequence file, - for stdin")
      ->required();
  sweep_cmd->add_option("--target", target_spec, "Target as DSL, or auto")
      ->required();
  sweep_cmd->add_option("--eps-min", eps_min, "Smallest epsilon")->required();
  sweep_cmd->add_option("--eps-max", eps_max, "Largest epsilon")->required();
  sweep_cmd->add_option("--points", points, "Number of log-spaced points")
      ->required();
  sweep_cmd->add_option("--csv", csv_path, "Write CSV to this path");

  auto *verify = app.add_subcommand("verify", "Check the dynamic-phase theorem");
  verify->add_option("input", source, "Sequence file, - for stdin")->required();
  verify->add_option("--n0", n0_text, "Cyclic Bloch vector x,y,z");

  std::vector<std::string> argv_store{"gqg"};
  argv_store.insert(argv_store.end(), args.begin(), args.end());
  std::vector<const char *> argv;
  for (const auto &a : argv_store)
    argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (synth->parsed())
      return cmd_synth(family, theta_deg, branch, phase_deg, out_format, out);

    const PulseSequence seq = parse_document(read_source(source, in));
    std::optional<BlochVector> n0;
    if (!n0_text.empty())
      n0 = parse_vector(n0_text);

    if (analyze->parsed())
      return cmd_analyze(seq, n0, out);
    if (sweep_cmd->parsed())
      return cmd_sweep(seq, target_spec, eps_min, eps_max, points, csv_path,
                       out);
    return cmd_verify(seq, n0, out);
  } catch (const ParseError &e) {
    err << "parse error: " << e.what() << "\n";
    return kParse;
  } catch (const DomainError &e) {
    err << "error: " << e.what() << "\n";
    return kDomain;
  } catch (const SynthesisError &e) {
    err << "synthesis failed: " << e.what() << "\n";
    return kDomain;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kUsage;
  }
}

} // namespace gqg::cli
