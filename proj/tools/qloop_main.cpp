#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "qloop/charpoly.hpp"
#include "qloop/domainscan.hpp"
#include "qloop/errors.hpp"
#include "qloop/hamiltonian.hpp"
#include "qloop/json_io.hpp"
#include "qloop/lattice.hpp"
#include "qloop/refdata.hpp"
#include "qloop/secular.hpp"
#include "qloop/spectra.hpp"

namespace {

using namespace qloop;

struct CouplingFlags {
  std::string gamma = "0", delta = "0", g = "0", h = "0", z = "0";
  CLI::Option *o_gamma = nullptr, *o_delta = nullptr, *o_g = nullptr,
              *o_h = nullptr, *o_z = nullptr;

  void attach(CLI::App* cmd) {
    o_gamma = cmd->add_option("--gamma", gamma,
                              "amended coupling gamma (rational or decimal)");
    o_delta = cmd->add_option("--delta", delta, "amended coupling delta");
    o_g = cmd->add_option("--g", g, "physical coupling g");
    o_h = cmd->add_option("--h", h, "physical coupling h");
    o_z = cmd->add_option("--z", z, "coupling z");
  }
  bool physical_set() const { return o_g->count() || o_h->count(); }
  bool amended_set() const { return o_gamma->count() || o_delta->count(); }
  bool any_set() const { return physical_set() || amended_set() || o_z->count(); }
  AmendedCouplingSet values() const {
    if (physical_set() && amended_set())
      throw std::domain_error(
          "mixing the (g, h) and (gamma, delta) flag families is not allowed");
    if (physical_set())
      return to_amended(
          {parse_rational(g), parse_rational(h), parse_rational(z)});
    return {parse_rational(gamma), parse_rational(delta), parse_rational(z)};
  }
};

void emit(const std::string& out_path, const std::string& content) {
  if (out_path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw std::domain_error("cannot open output file " + out_path);
  f << content;
  if (!f) throw std::domain_error("cannot write output file " + out_path);
}

std::string read_file(const std::string& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw std::domain_error("cannot open input file " + path);
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

int default_jobs() {
  if (const char* env = std::getenv("QLOOP_JOBS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 1 && v <= 1024) return int(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? int(hw) : 1;
}

ScanAxes parse_axes(const std::string& text) {
  ScanAxes axes;
  std::stringstream ss(text);
  std::string segment;
  while (std::getline(ss, segment, ';')) {
    if (segment.empty()) continue;
    const auto eq = segment.find('=');
    if (eq == std::string::npos)
      throw std::domain_error("bad --axes segment \"" + segment +
                              "\" (want name=lo:hi:count)");
    const std::string name = segment.substr(0, eq);
    const std::string rest = segment.substr(eq + 1);
    const auto c1 = rest.find(':');
    const auto c2 = rest.find(':', c1 == std::string::npos ? 0 : c1 + 1);
    if (c1 == std::string::npos || c2 == std::string::npos)
      throw std::domain_error("bad --axes segment \"" + segment +
                              "\" (want name=lo:hi:count)");
    AxisRange r;
    try {
      r.lo = std::stod(rest.substr(0, c1));
      r.hi = std::stod(rest.substr(c1 + 1, c2 - c1 - 1));
      r.count = std::stoi(rest.substr(c2 + 1));
    } catch (const std::exception&) {
      throw std::domain_error("bad numbers in --axes segment \"" + segment +
                              "\"");
    }
    if (r.count < 1)
      throw std::domain_error("--axes count must be >= 1 in \"" + segment +
                              "\"");
    std::optional<AxisRange>* slot = nullptr;
    if (name == "gamma") slot = &axes.gamma;
    else if (name == "delta") slot = &axes.delta;
    else if (name == "z") slot = &axes.z;
    else
      throw std::domain_error("unknown axis \"" + name +
                              "\" (want gamma, delta or z)");
    if (*slot) throw std::domain_error("axis \"" + name + "\" given twice");
    *slot = r;
  }
  if (!axes.gamma && !axes.delta && !axes.z)
    throw std::domain_error("--axes names no axis to sweep");
  return axes;
}

void parse_bracket(const std::string& text, double& lo, double& hi) {
  const auto comma = text.find(',');
  if (comma == std::string::npos)
    throw std::domain_error("--bracket wants lo,hi");
  try {
    lo = std::stod(text.substr(0, comma));
    hi = std::stod(text.substr(comma + 1));
  } catch (const std::exception&) {
    throw std::domain_error("bad numbers in --bracket \"" + text + "\"");
  }
}

Var axis_from_name(const std::string& name) {
  if (name == "gamma") return Var::Gamma;
  if (name == "delta") return Var::Delta;
  if (name == "z") return Var::Z;
  throw std::domain_error("unknown axis \"" + name +
                          "\" (want gamma, delta or z)");
}

void require_format(const std::string& format,
                    std::initializer_list<const char*> allowed) {
  for (const char* a : allowed)
    if (format == a) return;
  throw std::domain_error("--format " + format +
                          " is not supported by this command");
}

template <class Matrix, class EntryToString>
std::string pretty_matrix(const Matrix& m, EntryToString entry) {
  std::vector<std::string> cells;
  std::size_t width = 0;
  for (int i = 0; i < m.size(); ++i)
    for (int j = 0; j < m.size(); ++j) {
      cells.push_back(entry(m.at(i, j)));
      width = std::max(width, cells.back().size());
    }
  std::string out;
  for (int i = 0; i < m.size(); ++i) {
    for (int j = 0; j < m.size(); ++j) {
      const std::string& c = cells[std::size_t(i) * std::size_t(m.size()) +
                                   std::size_t(j)];
      out += std::string(width - c.size(), ' ') + c;
      out += j + 1 < m.size() ? "  " : "";
    }
    out += '\n';
  }
  return out;
}

std::string format_double(const char* fmt, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, x);
  return buf;
}

int run(int argc, char** argv) {
  CLI::App app{
      "qloop: exact and numeric spectral toolkit for the loop-graph "
      "Hamiltonian family"};
  app.require_subcommand(1);
  // --h is a coupling flag, so help must not claim the short name.
  app.set_help_flag("--help", "print help and exit");

  // ---- build ----------------------------------------------------------
  auto* build = app.add_subcommand(
      "build", "assemble the Hamiltonian (or emit the graph) as JSON");
  int build_K = 0, build_L = 1;
  bool build_graph_only = false;
  std::string build_format = "json", build_out;
  CouplingFlags build_c;
  build->add_option("--K", build_K, "arm length")->required();
  build->add_option("--L", build_L, "loop branch length (default 1)");
  build_c.attach(build);
  build->add_flag("--graph", build_graph_only,
                  "emit the graph document instead of the matrix");
  build->add_option("--format", build_format, "json or pretty");
  build->add_option("--out", build_out, "output file (default stdout)");

  // ---- charpoly -------------------------------------------------------
  auto* cp = app.add_subcommand(
      "charpoly", "exact characteristic polynomial det(E*I - H)");
  int cp_K = 0, cp_L = 1;
  std::string cp_format = "pretty", cp_out, cp_from;
  CouplingFlags cp_c;
  auto* cp_k_opt = cp->add_option("--K", cp_K, "arm length");
  cp->add_option("--L", cp_L, "loop branch length (default 1)");
  cp_c.attach(cp);
  cp->add_option("--from-file", cp_from,
                 "read the matrix from a JSON document instead of --K/--L");
  cp->add_option("--format", cp_format, "pretty or json");
  cp->add_option("--out", cp_out, "output file (default stdout)");

  // ---- split ----------------------------------------------------------
  auto* split_cmd = app.add_subcommand(
      "split", "parity factorization charpoly = f_plus * f_minus");
  int split_K = 0, split_L = 1;
  std::string split_format = "pretty", split_out;
  split_cmd->add_option("--K", split_K, "arm length")->required();
  split_cmd->add_option("--L", split_L, "loop branch length (default 1)");
  split_cmd->add_option("--format", split_format, "pretty or json");
  split_cmd->add_option("--out", split_out, "output file (default stdout)");

  // ---- verify ---------------------------------------------------------
  auto* verify = app.add_subcommand(
      "verify", "check the toolkit against the stored reference results");
  int verify_K = 0;
  std::string verify_format = "pretty", verify_out;
  verify->add_option("--K", verify_K, "arm length (1..5)")->required();
  verify->add_option("--format", verify_format, "pretty or json");
  verify->add_option("--out", verify_out, "output file (default stdout)");

  // ---- spectrum -------------------------------------------------------
  auto* spectrum = app.add_subcommand(
      "spectrum", "residual-certified numeric eigenvalues");
  int sp_K = 0, sp_L = 1;
  double sp_tol = 1e-10;
  std::string sp_format = "pretty", sp_out, sp_from;
  CouplingFlags sp_c;
  auto* sp_k_opt = spectrum->add_option("--K", sp_K, "arm length");
  spectrum->add_option("--L", sp_L, "loop branch length (default 1)");
  sp_c.attach(spectrum);
  spectrum->add_option("--from-file", sp_from,
                       "read the matrix from a JSON document");
  spectrum->add_option("--tol", sp_tol, "residual tolerance (default 1e-10)");
  spectrum->add_option("--format", sp_format, "pretty, json or csv");
  spectrum->add_option("--out", sp_out, "output file (default stdout)");

  // ---- scan -----------------------------------------------------------
  auto* scan_cmd = app.add_subcommand(
      "scan", "classify spectral reality over a coupling grid");
  int scan_K = 0, scan_L = 1, scan_jobs = default_jobs();
  double scan_tol = 1e-10;
  std::string scan_axes_s, scan_format = "csv", scan_out;
  CouplingFlags scan_c;
  scan_cmd->add_option("--K", scan_K, "arm length")->required();
  scan_cmd->add_option("--L", scan_L, "loop branch length (default 1)");
  scan_c.attach(scan_cmd);
  scan_cmd
      ->add_option("--axes", scan_axes_s,
                   "swept axes, e.g. \"gamma=-1.5:1.5:101;delta=-0.5:0.5:101\"")
      ->required();
  scan_cmd->add_option("--tol", scan_tol, "residual tolerance (default 1e-10)");
  scan_cmd->add_option("--jobs", scan_jobs,
                       "worker threads (default QLOOP_JOBS or hardware)");
  scan_cmd->add_option("--format", scan_format, "csv or json");
  scan_cmd->add_option("--out", scan_out, "output file (default stdout)");

  // ---- boundary -------------------------------------------------------
  auto* boundary = app.add_subcommand(
      "boundary", "bisect the reality-domain boundary along one axis");
  int b_K = 0, b_L = 1;
  double b_tol = 1e-8;
  std::string b_axis, b_bracket, b_format = "pretty", b_out;
  CouplingFlags b_c;
  boundary->add_option("--K", b_K, "arm length")->required();
  boundary->add_option("--L", b_L, "loop branch length (default 1)");
  boundary->add_option("--axis", b_axis, "gamma, delta or z")->required();
  b_c.attach(boundary);
  boundary->add_option("--bracket", b_bracket, "lo,hi with all-real lo")
      ->required();
  boundary->add_option("--tol", b_tol, "bracket tolerance (default 1e-8)");
  boundary->add_option("--format", b_format, "pretty or json");
  boundary->add_option("--out", b_out, "output file (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  if (build->parsed()) {
    require_format(build_format, {"json", "pretty"});
    const GraphFamilySpec spec = qloop::build_graph(build_K, build_L);
    if (build_graph_only) {
      emit(build_out, graph_json(spec));
    } else if (build_c.any_set()) {
      const RationalMatrix m = assemble(spec, build_c.values());
      emit(build_out, build_format == "json"
                          ? matrix_json(m)
                          : pretty_matrix(m, [](const Rational& q) {
                              return to_string(q);
                            }));
    } else {
      const PolyMatrix m = assemble_symbolic(spec);
      emit(build_out, build_format == "json"
                          ? matrix_json(m)
                          : pretty_matrix(m, [](const MultiPoly& p) {
                              return p.str();
                            }));
    }
    return 0;
  }

  if (cp->parsed()) {
    require_format(cp_format, {"json", "pretty"});
    MultiPoly p;
    int n = 0;
    if (!cp_from.empty()) {
      if (cp_k_opt->count() || cp_c.any_set())
        throw std::domain_error("--from-file excludes --K and coupling flags");
      const LoadedMatrix loaded = load_matrix_json(read_file(cp_from));
      if (loaded.kind == MatrixKind::Poly) {
        n = loaded.poly.size();
        p = charpoly(loaded.poly);
      } else {
        n = loaded.rational.size();
        p = charpoly(loaded.rational);
      }
    } else {
      if (!cp_k_opt->count())
        throw std::domain_error("charpoly needs --K or --from-file");
      const GraphFamilySpec spec = qloop::build_graph(cp_K, cp_L);
      n = spec.N;
      p = cp_c.any_set() ? charpoly(assemble(spec, cp_c.values()))
                         : charpoly(assemble_symbolic(spec));
    }
    emit(cp_out, cp_format == "json" ? charpoly_json(n, p) : p.str() + "\n");
    return 0;
  }

  if (split_cmd->parsed()) {
    require_format(split_format, {"json", "pretty"});
    const GraphFamilySpec spec = qloop::build_graph(split_K, split_L);
    const SecularSplit s = split_secular(spec);
    std::optional<bool> matches;
    if (split_L == 1 && split_K >= 3 && split_K <= 5)
      matches =
          s.f_plus ==
              factor_polynomial(reference_factor(split_K, Branch::Plus)) &&
          s.f_minus ==
              factor_polynomial(reference_factor(split_K, Branch::Minus));
    if (split_format == "json") {
      emit(split_out, split_json(split_K, split_L, s, matches));
    } else {
      std::string out = "f_plus  = " + s.f_plus.str() + "\n";
      out += "f_minus = " + s.f_minus.str() + "\n";
      out += std::string("separated: ") +
             (s.verified_separation ? "yes" : "no") + "\n";
      out += std::string("matches_reference: ") +
             (!matches ? "n/a" : *matches ? "yes" : "no") + "\n";
      emit(split_out, out);
    }
    return 0;
  }

  if (verify->parsed()) {
    require_format(verify_format, {"json", "pretty"});
    const VerifyReport r = verify_reference(verify_K);
    if (verify_format == "json") {
      emit(verify_out, verify_json(r));
    } else {
      std::string out;
      if (r.symbolic) {
        out = std::to_string(r.coeffs_matched) + "/" +
              std::to_string(r.coeffs_total) + " coefficients match\n";
        for (const auto& c : r.checks)
          if (!c.matched)
            out += std::string("  mismatch ") +
                   (c.branch == Branch::Plus ? "plus " : "minus ") + c.name +
                   ": diff = " + c.diff.str() + "\n";
      } else {
        out = std::to_string(r.points) + " points, max eigenvalue deviation " +
              format_double("%.3g", r.max_deviation) + ": " +
              (r.pass ? "match" : "mismatch") + "\n";
      }
      emit(verify_out, out);
    }
    return r.pass ? 0 : 1;
  }

  if (spectrum->parsed()) {
    require_format(sp_format, {"json", "csv", "pretty"});
    RationalMatrix m;
    if (!sp_from.empty()) {
      if (sp_k_opt->count() || sp_c.any_set())
        throw std::domain_error("--from-file excludes --K and coupling flags");
      const LoadedMatrix loaded = load_matrix_json(read_file(sp_from));
      if (loaded.kind == MatrixKind::Poly)
        throw std::domain_error(
            "spectrum needs a numeric matrix (kind rational or float)");
      m = loaded.rational;
    } else {
      if (!sp_k_opt->count())
        throw std::domain_error("spectrum needs --K or --from-file");
      m = assemble(qloop::build_graph(sp_K, sp_L), sp_c.values());
    }
    const Spectrum s = eigenvalues_of(m, sp_tol);
    if (sp_format == "json") {
      emit(sp_out, spectrum_json(s));
    } else if (sp_format == "csv") {
      std::string out = "re,im,residual\n";
      for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
        out += format_double("%.12g", s.eigenvalues[i].real()) + "," +
               format_double("%.12g", s.eigenvalues[i].imag()) + "," +
               format_double("%.3g", s.residuals[i]) + "\n";
      emit(sp_out, out);
    } else {
      std::string out;
      for (std::size_t i = 0; i < s.eigenvalues.size(); ++i)
        out += format_double("%+.12f", s.eigenvalues[i].real()) +
               format_double("%+.12f", s.eigenvalues[i].imag()) + "i" +
               "   residual " + format_double("%.3g", s.residuals[i]) + "\n";
      out += std::string("all_real: ") + (s.all_real ? "yes" : "no") +
             ", marginal: " + (s.marginal ? "yes" : "no") + "\n";
      emit(sp_out, out);
    }
    return 0;
  }

  if (scan_cmd->parsed()) {
    require_format(scan_format, {"csv", "json"});
    const GraphFamilySpec spec = qloop::build_graph(scan_K, scan_L);
    const ScanAxes axes = parse_axes(scan_axes_s);
    const ScanGrid grid =
        scan(spec, axes, scan_c.values(), scan_tol, scan_jobs);
    emit(scan_out, scan_format == "json" ? scan_json(grid) : scan_csv(grid));
    return 0;
  }

  if (boundary->parsed()) {
    require_format(b_format, {"json", "pretty"});
    const GraphFamilySpec spec = qloop::build_graph(b_K, b_L);
    double lo = 0, hi = 0;
    parse_bracket(b_bracket, lo, hi);
    const BoundaryResult r = reality_boundary(
        spec, axis_from_name(b_axis), b_c.values(), lo, hi, b_tol);
    emit(b_out, b_format == "json" ? boundary_json(r)
                                   : format_double("%.9f", r.critical) + "\n");
    return 0;
  }

  return 2;  // unreachable with require_subcommand(1)
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const qloop::NumericalError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const qloop::BracketError& e) {
    std::cerr << "numerical failure: " << e.what() << "\n";
    return 3;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 3;
  }
}
