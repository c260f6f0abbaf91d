#include "qloop/json_io.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "json.hpp"

namespace qloop {
namespace {

using ordered_json = nlohmann::ordered_json;

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

const char* var_name(Var v) {
  switch (v) {
    case Var::E: return "E";
    case Var::Gamma: return "gamma";
    case Var::Delta: return "delta";
    default: return "z";
  }
}

ordered_json poly_value(const MultiPoly& p) {
  ordered_json arr = ordered_json::array();
  for (const auto& t : p.terms()) {
    ordered_json term;
    term["exp"] = {mono_exp(t.key, Var::E), mono_exp(t.key, Var::Gamma),
                   mono_exp(t.key, Var::Delta), mono_exp(t.key, Var::Z)};
    term["coeff"] = to_string(t.coeff);
    arr.push_back(std::move(term));
  }
  return arr;
}

std::string sig9(double x) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.9g", x);
  return buf;
}

ordered_json record_value(const ScanRecord& r) {
  ordered_json j;
  j["gamma"] = r.gamma;
  j["delta"] = r.delta;
  j["z"] = r.z;
  j["all_real"] = r.all_real;
  j["max_imag"] = r.max_imag;
  j["marginal"] = r.marginal;
  return j;
}

ordered_json axis_value(const AxisRange& a) {
  ordered_json j;
  j["lo"] = a.lo;
  j["hi"] = a.hi;
  j["count"] = a.count;
  return j;
}

[[noreturn]] void malformed(const std::string& what) {
  throw std::domain_error("matrix document: " + what);
}

Rational entry_to_rational(const ordered_json& e) {
  if (e.is_string()) return parse_rational(e.get<std::string>());
  if (e.is_number_integer()) return Rational(e.get<long>());
  if (e.is_number_float()) return rational_from_double(e.get<double>());
  malformed("entry is neither a rational string nor a number");
}

}  // namespace

std::string graph_json(const GraphFamilySpec& spec) {
  ordered_json j;
  j["K"] = spec.K;
  j["L"] = spec.L;
  j["N"] = spec.N;
  ordered_json nodes = ordered_json::array();
  for (int i = 0; i < spec.N; ++i) nodes.push_back(spec.label(i));
  j["nodes"] = std::move(nodes);
  ordered_json edges = ordered_json::array();
  for (const auto& e : spec.edges) {
    ordered_json ej;
    ej["a"] = spec.index_of(e.a);
    ej["b"] = spec.index_of(e.b);
    ej["coupling"] = coupling_name(e.coupling);
    ej["sign"] = e.sign;
    edges.push_back(std::move(ej));
  }
  j["edges"] = std::move(edges);
  j["weights"] = spec.weights;
  return dump(j);
}

std::string matrix_json(const RationalMatrix& m) {
  ordered_json j;
  j["n"] = m.size();
  j["kind"] = "rational";
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(to_string(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return dump(j);
}

std::string matrix_json(const PolyMatrix& m) {
  ordered_json j;
  j["n"] = m.size();
  j["kind"] = "poly";
  ordered_json rows = ordered_json::array();
  for (int i = 0; i < m.size(); ++i) {
    ordered_json row = ordered_json::array();
    for (int c = 0; c < m.size(); ++c) row.push_back(poly_value(m.at(i, c)));
    rows.push_back(std::move(row));
  }
  j["entries"] = std::move(rows);
  return dump(j);
}

std::string charpoly_json(int n, const MultiPoly& p) {
  ordered_json j;
  j["n"] = n;
  j["charpoly"] = poly_value(p);
  return dump(j);
}

std::string split_json(int K, int L, const SecularSplit& split,
                       const std::optional<bool>& matches_reference) {
  ordered_json j;
  j["K"] = K;
  j["L"] = L;
  j["f_plus"] = poly_value(split.f_plus);
  j["f_minus"] = poly_value(split.f_minus);
  j["separated"] = split.verified_separation;
  if (matches_reference)
    j["matches_reference"] = *matches_reference;
  else
    j["matches_reference"] = nullptr;
  return dump(j);
}

std::string spectrum_json(const Spectrum& s) {
  ordered_json j;
  ordered_json eigs = ordered_json::array();
  for (const auto& x : s.eigenvalues) {
    ordered_json e;
    e["re"] = x.real();
    e["im"] = x.imag();
    eigs.push_back(std::move(e));
  }
  j["eigenvalues"] = std::move(eigs);
  j["residuals"] = s.residuals;
  j["all_real"] = s.all_real;
  j["marginal"] = s.marginal;
  return dump(j);
}

std::string boundary_json(const BoundaryResult& r) {
  ordered_json j;
  j["axis"] = var_name(r.axis);
  ordered_json fixed;
  if (r.axis != Var::Gamma) fixed["gamma"] = to_double(r.fixed.gamma);
  if (r.axis != Var::Delta) fixed["delta"] = to_double(r.fixed.delta);
  if (r.axis != Var::Z) fixed["z"] = to_double(r.fixed.z);
  j["fixed"] = std::move(fixed);
  j["critical"] = r.critical;
  j["bracket_width"] = r.bracket_width;
  j["iterations"] = r.iterations;
  return dump(j);
}

std::string verify_json(const VerifyReport& r) {
  ordered_json j;
  j["K"] = r.K;
  j["mode"] = r.symbolic ? "symbolic" : "numeric";
  j["pass"] = r.pass;
  if (r.symbolic) {
    j["coefficients_total"] = r.coeffs_total;
    j["coefficients_matched"] = r.coeffs_matched;
    ordered_json checks = ordered_json::array();
    for (const auto& c : r.checks) {
      ordered_json cj;
      cj["branch"] = c.branch == Branch::Plus ? "plus" : "minus";
      cj["name"] = c.name;
      cj["power"] = c.power;
      cj["matched"] = c.matched;
      cj["diff"] = poly_value(c.diff);
      checks.push_back(std::move(cj));
    }
    j["checks"] = std::move(checks);
  } else {
    j["points"] = r.points;
    j["max_deviation"] = r.max_deviation;
  }
  return dump(j);
}

std::string scan_json(const ScanGrid& g) {
  ordered_json j;
  ordered_json fixed;
  fixed["gamma"] = to_double(g.fixed.gamma);
  fixed["delta"] = to_double(g.fixed.delta);
  fixed["z"] = to_double(g.fixed.z);
  j["fixed"] = std::move(fixed);
  ordered_json axes;
  if (g.axes.gamma) axes["gamma"] = axis_value(*g.axes.gamma);
  if (g.axes.delta) axes["delta"] = axis_value(*g.axes.delta);
  if (g.axes.z) axes["z"] = axis_value(*g.axes.z);
  j["axes"] = std::move(axes);
  ordered_json records = ordered_json::array();
  for (const auto& r : g.records) records.push_back(record_value(r));
  j["records"] = std::move(records);
  return dump(j);
}

std::string scan_csv(const ScanGrid& g) {
  std::string out = "gamma,delta,z,all_real,max_imag,marginal\n";
  for (const auto& r : g.records) {
    out += sig9(r.gamma);
    out += ',';
    out += sig9(r.delta);
    out += ',';
    out += sig9(r.z);
    out += ',';
    out += r.all_real ? '1' : '0';
    out += ',';
    out += sig9(r.max_imag);
    out += ',';
    out += r.marginal ? '1' : '0';
    out += '\n';
  }
  return out;
}

LoadedMatrix load_matrix_json(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const std::exception& e) {
    malformed(std::string("parse error: ") + e.what());
  }
  if (!j.is_object()) malformed("top level is not an object");
  if (!j.contains("n") || !j["n"].is_number_integer())
    malformed("missing integer field n");
  const int n = j["n"].get<int>();
  if (n < 1) malformed("n must be >= 1");
  if (!j.contains("kind") || !j["kind"].is_string())
    malformed("missing string field kind");
  const std::string kind = j["kind"].get<std::string>();
  if (!j.contains("entries") || !j["entries"].is_array() ||
      int(j["entries"].size()) != n)
    malformed("entries must be an array of n rows");

  LoadedMatrix loaded;
  if (kind == "rational" || kind == "float") {
    loaded.kind = MatrixKind::Rational;
    loaded.rational = RationalMatrix(n);
  } else if (kind == "poly") {
    loaded.kind = MatrixKind::Poly;
    loaded.poly = PolyMatrix(n);
  } else {
    malformed("unknown kind \"" + kind + "\"");
  }

  for (int i = 0; i < n; ++i) {
    const auto& row = j["entries"][std::size_t(i)];
    if (!row.is_array() || int(row.size()) != n)
      malformed("row " + std::to_string(i) + " must hold n entries");
    for (int c = 0; c < n; ++c) {
      const auto& e = row[std::size_t(c)];
      if (loaded.kind == MatrixKind::Rational) {
        try {
          loaded.rational.at(i, c) = entry_to_rational(e);
        } catch (const std::domain_error& err) {
          malformed("entry (" + std::to_string(i) + "," + std::to_string(c) +
                    "): " + err.what());
        }
      } else {
        if (!e.is_array())
          malformed("poly entry (" + std::to_string(i) + "," +
                    std::to_string(c) + ") must be a term list");
        std::vector<MultiPoly::Term> terms;
        for (const auto& t : e) {
          if (!t.is_object() || !t.contains("exp") || !t.contains("coeff") ||
              !t["exp"].is_array() || t["exp"].size() != 4)
            malformed("bad term in entry (" + std::to_string(i) + "," +
                      std::to_string(c) + ")");
          unsigned exps[4];
          for (int v = 0; v < 4; ++v) {
            const auto& ev = t["exp"][std::size_t(v)];
            if (!ev.is_number_integer() || ev.get<long>() < 0 ||
                ev.get<long>() > 0xffff)
              malformed("bad exponent in entry (" + std::to_string(i) + "," +
                        std::to_string(c) + ")");
            exps[v] = unsigned(ev.get<long>());
          }
          Rational coeff;
          try {
            coeff = entry_to_rational(t["coeff"]);
          } catch (const std::domain_error& err) {
            malformed("bad coefficient in entry (" + std::to_string(i) + "," +
                      std::to_string(c) + "): " + err.what());
          }
          terms.push_back(
              {mono_key(exps[0], exps[1], exps[2], exps[3]), std::move(coeff)});
        }
        loaded.poly.at(i, c) = MultiPoly::from_terms(std::move(terms));
      }
    }
  }
  return loaded;
}

}  // namespace qloop
