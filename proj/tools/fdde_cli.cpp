// fdde: verify, classify and search Fermat-type delay-differential equations
// with two-exponential forcing, over the exponential-polynomial class.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include "fdde/ansatz.hpp"
#include "fdde/classifier.hpp"
#include "fdde/growth.hpp"
#include "fdde/parser.hpp"

using json = nlohmann::ordered_json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitHypothesis = 2;
constexpr int kExitParse = 3;

json complex_json(fdde::Complex z) { return json{{"re", z.real()}, {"im", z.imag()}}; }

json certificate_json(const fdde::Certificate& cert) {
  return json{{"candidate", fdde::to_expression(cert.candidate)},
              {"residual_max_coeff", cert.residual_max_coeff},
              {"verified", cert.verified}};
}

// Report skeleton: six fixed fields in fixed order, then the command-specific
// data payload.
json report_skeleton(const std::string& command) {
  json report;
  report["command"] = command;
  report["input_echo"] = json::object();
  report["status"] = "ok";
  report["solutions"] = json::array();
  report["certificates"] = json::array();
  report["notes"] = json::array();
  report["data"] = json::object();
  return report;
}

int emit(const json& report, int code) {
  std::cout << report.dump(2) << "\n";
  return code;
}

struct EquationFlags {
  int n = 0;
  int m = 0;
  int l = 0;
  int k = 1;
  std::string a = "1";
  std::string c = "0";
  std::string p1;
  std::string p2;
  std::string a1;
  std::string a2;

  void attach(CLI::App* cmd) {
    cmd->add_option("--eq-n", n, "power n of f")->required();
    cmd->add_option("--eq-m", m, "power m of the delayed derivative")->required();
    cmd->add_option("--eq-l", l, "derivative order l (default 0)");
    cmd->add_option("--a", a, "coefficient a (complex expression, default 1)");
    cmd->add_option("--c", c, "delay c (complex expression, default 0)");
    cmd->add_option("--p1", p1, "coefficient p1 (expression)")->required();
    cmd->add_option("--a1", a1, "frequency a1 (complex expression)")->required();
    cmd->add_option("--p2", p2, "coefficient p2 (expression)")->required();
    cmd->add_option("--a2", a2, "frequency a2 (complex expression)")->required();
    cmd->add_option("--k", k, "exponent degree k (default 1)");
  }

  fdde::FermatDDE build(json& echo) const {
    const fdde::Complex av = fdde::parse_complex(a);
    const fdde::Complex cv = fdde::parse_complex(c);
    const fdde::Complex a1v = fdde::parse_complex(a1);
    const fdde::Complex a2v = fdde::parse_complex(a2);
    const fdde::ExpPoly p1v = fdde::parse_exp_poly(p1);
    const fdde::ExpPoly p2v = fdde::parse_exp_poly(p2);
    echo["eq-n"] = n;
    echo["eq-m"] = m;
    echo["eq-l"] = l;
    echo["a"] = complex_json(av);
    echo["c"] = complex_json(cv);
    echo["p1"] = p1;
    echo["a1"] = complex_json(a1v);
    echo["p2"] = p2;
    echo["a2"] = complex_json(a2v);
    echo["k"] = k;
    return fdde::FermatDDE(n, m, l, av, cv, p1v, p2v, a1v, a2v, k);
  }
};

std::vector<double> parse_double_list(const std::string& text) {
  std::vector<double> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    std::size_t consumed = 0;
    double value = 0.0;
    try {
      value = std::stod(item, &consumed);
    } catch (const std::exception&) {
      throw std::invalid_argument("not a number in list: '" + item + "'");
    }
    while (consumed < item.size() && std::isspace(static_cast<unsigned char>(item[consumed])))
      ++consumed;
    if (consumed != item.size())
      throw std::invalid_argument("not a number in list: '" + item + "'");
    out.push_back(value);
  }
  return out;
}

std::vector<fdde::Complex> parse_complex_list(const std::string& text) {
  std::vector<fdde::Complex> out;
  std::stringstream stream(text);
  std::string item;
  while (std::getline(stream, item, ',')) {
    if (item.empty()) continue;
    out.push_back(fdde::parse_complex(item));
  }
  return out;
}

std::string resolve_function_text(const std::string& f, const std::string& file) {
  if (!f.empty()) return f;
  if (file.empty()) throw CLI::ValidationError("--f or --file is required");
  std::ifstream in(file);
  if (!in) throw CLI::ValidationError("cannot open " + file);
  std::stringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void note_hypothesis_warnings(const fdde::FermatDDE& eq, json& report) {
  for (const std::string& violation : eq.hypothesis_violations())
    report["notes"].push_back("warning: " + violation);
}

int run_verify(const EquationFlags& flags, const std::string& f_text, json& report,
               bool emit_residual) {
  const fdde::FermatDDE eq = flags.build(report["input_echo"]);
  report["input_echo"]["f"] = f_text;
  const fdde::ExpPoly f = fdde::parse_exp_poly(f_text);

  if (emit_residual) {
    const fdde::ExpPoly residual = eq.residual(f);
    double max_coeff = 0.0;
    for (const fdde::ExpTerm& t : residual.terms())
      max_coeff = std::max(max_coeff, t.coeff.max_coeff_magnitude());
    report["data"]["residual"] = fdde::to_expression(residual);
    report["data"]["residual_max_coeff"] = max_coeff;
    report["data"]["identically_zero"] = residual.is_zero();
  } else {
    const fdde::Certificate cert = fdde::verify(eq, f);
    report["certificates"].push_back(certificate_json(cert));
    if (cert.verified) report["solutions"].push_back(fdde::to_expression(f));
    report["data"]["verification_tolerance"] = 1e-9 * eq.rhs().max_coeff_magnitude();
  }
  note_hypothesis_warnings(eq, report);
  return kExitOk;
}

bool k1_symmetric_shape(const fdde::FermatDDE& eq) {
  fdde::Complex p1, p2;
  return eq.n == eq.m && eq.n >= 2 && eq.n <= 4 && eq.l == 1 && eq.k == 1 &&
         fdde::approx_zero(eq.c) && fdde::approx_equal(eq.a2, -eq.a1) &&
         eq.p1.constant_value(&p1) && eq.p2.constant_value(&p2);
}

int run_solve(const EquationFlags& flags, const std::string& solver, json& report) {
  const fdde::FermatDDE eq = flags.build(report["input_echo"]);
  report["input_echo"]["solver"] = solver;

  std::string used = solver;
  if (used == "auto") {
    if (k1_symmetric_shape(eq)) {
      used = "k1";
    } else if (eq.l == 0) {
      used = "difference";
    } else {
      used = "general";
    }
  }

  fdde::SolutionReport result;
  if (used == "k1") {
    result = fdde::classify_k1_symmetric(eq);
  } else if (used == "difference") {
    result = fdde::classify_difference(eq);
  } else {
    result = fdde::classify_general(eq);
  }

  for (const fdde::Certificate& cert : result.solutions) {
    report["solutions"].push_back(fdde::to_expression(cert.candidate));
    report["certificates"].push_back(certificate_json(cert));
  }
  for (const std::string& note : result.notes) report["notes"].push_back(note);
  report["data"]["theorem_branch"] = std::string(fdde::to_string(result.theorem_branch));
  report["data"]["classifier"] = used;
  return kExitOk;
}

int run_search(const EquationFlags& flags, const std::string& frequencies, bool propose,
               int starts, std::uint64_t seed, int max_poly_degree, json& report) {
  const fdde::FermatDDE eq = flags.build(report["input_echo"]);

  fdde::AnsatzSpec spec;
  spec.starts = starts;
  spec.seed = seed;
  spec.max_poly_degree = max_poly_degree;
  spec.frequencies = propose ? fdde::propose_frequencies(eq) : parse_complex_list(frequencies);

  report["input_echo"]["frequencies"] = json::array();
  for (const fdde::Complex& w : spec.frequencies)
    report["input_echo"]["frequencies"].push_back(complex_json(w));
  report["input_echo"]["starts"] = starts;
  report["input_echo"]["seed"] = seed;
  report["input_echo"]["max-poly-degree"] = max_poly_degree;

  const fdde::SearchResult result = fdde::search(eq, spec);
  for (const fdde::Certificate& cert : result.found) {
    report["solutions"].push_back(fdde::to_expression(cert.candidate));
    report["certificates"].push_back(certificate_json(cert));
  }
  for (const std::string& note : result.notes) report["notes"].push_back(note);

  json traces = json::array();
  int converged = 0;
  for (const fdde::StartTrace& trace : result.residual_norm_history) {
    if (trace.converged) ++converged;
    traces.push_back(json{{"iterations", trace.residual_norms.size() - 1},
                          {"final_norm", trace.residual_norms.back()},
                          {"converged", trace.converged},
                          {"singular", trace.singular}});
  }
  report["data"]["exhausted"] = result.exhausted;
  report["data"]["converged_starts"] = converged;
  report["data"]["traces"] = std::move(traces);
  return kExitOk;
}

int run_growth(const std::string& f_text, const std::string& radii_text, int samples,
               json& report) {
  report["input_echo"]["f"] = f_text;
  report["input_echo"]["radii"] = radii_text;
  report["input_echo"]["samples"] = samples;

  const fdde::ExpPoly f = fdde::parse_exp_poly(f_text);
  const std::vector<double> radii = parse_double_list(radii_text);
  const fdde::GrowthReport growth = fdde::growth_report(f, radii, samples);

  report["data"]["order"] = growth.order;
  report["data"]["lower_order"] = growth.lower_order;
  report["data"]["hyper_order"] = growth.hyper_order;
  json sample_array = json::array();
  for (const fdde::GrowthSample& s : growth.samples) {
    json item{{"radius", s.radius}, {"proximity", s.proximity}};
    if (s.zero_count) {
      item["zero_count"] = *s.zero_count;
    } else {
      item["zero_count"] = nullptr;
      report["notes"].push_back("zero count unavailable at radius " +
                                std::to_string(s.radius));
    }
    sample_array.push_back(std::move(item));
  }
  report["data"]["samples"] = std::move(sample_array);

  if (growth.order >= 1.0 && radii.size() >= 2) {
    const fdde::GrowthBoundsReport bounds = fdde::check_growth_bounds(f, radii, samples);
    report["data"]["bounds"] = json{{"ok", bounds.ok},
                                    {"d1", bounds.d1},
                                    {"d2", bounds.d2},
                                    {"fitted_order", bounds.fitted_order},
                                    {"reciprocal_checked", bounds.reciprocal_checked}};
    if (!bounds.note.empty()) report["notes"].push_back(bounds.note);
  }
  return kExitOk;
}

void apply_tolerance_override() {
  const char* raw = std::getenv("FERMAT_DDE_TOL");
  if (!raw) return;
  char* end = nullptr;
  const double value = std::strtod(raw, &end);
  if (end != raw && value > 0.0 && value < 1.0) {
    fdde::Tolerance::global().rel_eps = value;
  } else {
    std::cerr << "fdde: ignoring invalid FERMAT_DDE_TOL value '" << raw << "'\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  apply_tolerance_override();

  CLI::App app{"Solvers and verifiers for f^n(z) + a (f^(l)(z+c))^m = "
               "p1 e^{a1 z^k} + p2 e^{a2 z^k} over exponential polynomials"};
  app.require_subcommand(1);

  EquationFlags verify_flags, residual_flags, solve_flags, search_flags;
  std::string verify_f, verify_file, residual_f, residual_file;
  std::string solve_solver = "auto";
  std::string search_frequencies;
  bool search_propose = false;
  int search_starts = 64;
  std::uint64_t search_seed = 0;
  int search_degree = 0;
  std::string growth_f, growth_file, growth_radii;
  int growth_samples = 4096;

  CLI::App* verify_cmd = app.add_subcommand("verify", "substitute f and certify the residual");
  verify_flags.attach(verify_cmd);
  verify_cmd->add_option("--f", verify_f, "candidate expression");
  verify_cmd->add_option("--file", verify_file, "file containing the candidate expression");

  CLI::App* residual_cmd = app.add_subcommand("residual", "print the residual of f");
  residual_flags.attach(residual_cmd);
  residual_cmd->add_option("--f", residual_f, "candidate expression");
  residual_cmd->add_option("--file", residual_file, "file containing the candidate expression");

  CLI::App* solve_cmd = app.add_subcommand("solve", "enumerate classified solutions");
  solve_flags.attach(solve_cmd);
  solve_cmd->add_option("--solver", solve_solver, "auto|general|difference|k1")
      ->check(CLI::IsMember({"auto", "general", "difference", "k1"}));

  CLI::App* search_cmd = app.add_subcommand("search", "multistart ansatz search");
  search_flags.attach(search_cmd);
  search_cmd->add_option("--frequencies", search_frequencies,
                         "comma-separated complex frequencies, e.g. \"i,-i\"");
  search_cmd->add_flag("--propose", search_propose, "derive frequencies from the equation");
  search_cmd->add_option("--starts", search_starts, "number of Newton starts (default 64)");
  search_cmd->add_option("--seed", search_seed, "random seed (default 0)");
  search_cmd->add_option("--max-poly-degree", search_degree,
                         "polynomial degree of trial coefficients (default 0)");

  CLI::App* growth_cmd = app.add_subcommand("growth", "growth functionals of f");
  growth_cmd->add_option("--f", growth_f, "expression");
  growth_cmd->add_option("--file", growth_file, "file containing the expression");
  growth_cmd->add_option("--radii", growth_radii, "comma-separated radii")->required();
  growth_cmd->add_option("--samples", growth_samples, "quadrature grid size (default 4096)");

  CLI11_PARSE(app, argc, argv);

  const std::string command = app.get_subcommands().front()->get_name();
  json report = report_skeleton(command);
  try {
    if (verify_cmd->parsed()) {
      return emit(report, run_verify(verify_flags,
                                     resolve_function_text(verify_f, verify_file), report,
                                     /*emit_residual=*/false));
    }
    if (residual_cmd->parsed()) {
      return emit(report, run_verify(residual_flags,
                                     resolve_function_text(residual_f, residual_file), report,
                                     /*emit_residual=*/true));
    }
    if (solve_cmd->parsed()) return emit(report, run_solve(solve_flags, solve_solver, report));
    if (search_cmd->parsed()) {
      if (!search_propose && search_frequencies.empty())
        throw CLI::ValidationError("search needs --frequencies or --propose");
      return emit(report, run_search(search_flags, search_frequencies, search_propose,
                                     search_starts, search_seed, search_degree, report));
    }
    if (growth_cmd->parsed()) {
      return emit(report, run_growth(resolve_function_text(growth_f, growth_file),
                                     growth_radii, growth_samples, report));
    }
  } catch (const fdde::ParseError& e) {
    report["status"] = "parse-error";
    report["notes"].push_back(e.what());
    std::cerr << "fdde: " << e.what() << "\n";
    return emit(report, kExitParse);
  } catch (const fdde::LoweringError& e) {
    report["status"] = "lowering-error";
    report["notes"].push_back(e.what());
    std::cerr << "fdde: " << e.what() << "\n";
    return emit(report, kExitParse);
  } catch (const fdde::HypothesisError& e) {
    report["status"] = "hypothesis-violation";
    report["notes"].push_back(e.what());
    std::cerr << "fdde: " << e.what() << "\n";
    return emit(report, kExitHypothesis);
  } catch (const CLI::Error& e) {
    std::cerr << "fdde: " << e.what() << "\n";
    return e.get_exit_code();
  } catch (const std::invalid_argument& e) {
    report["status"] = "hypothesis-violation";
    report["notes"].push_back(e.what());
    std::cerr << "fdde: " << e.what() << "\n";
    return emit(report, kExitHypothesis);
  } catch (const std::exception& e) {
    report["status"] = "error";
    report["notes"].push_back(e.what());
    std::cerr << "fdde: " << e.what() << "\n";
    return emit(report, 1);
  }
  return 1;
}
