#pragma once

// Command dispatch for the niep tool. `run` takes argv without the program
// name and writes the report to `out`; the return value is the exit code.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include <CLI11.hpp>

#include "niep/core.hpp"
#include "niep/harness.hpp"
#include "niep/io.hpp"
#include "niep/moments.hpp"
#include "niep/polynomial.hpp"
#include "niep/realizers.hpp"
#include "niep/spectrum.hpp"

namespace niep::cli {

enum ExitCode : int { kOk = 0, kConditionFailed = 1, kInputError = 2, kNumericError = 3 };

struct Options {
  std::string command;
  std::string spectrum;
  std::string input_file;
  std::string hadamard_file;
  double tol = 1e-9;
  double certificate_tol = 1e-7;
  std::size_t kmax = 0;
  std::size_t jll = 8;
  std::uint64_t seed = 42;
  std::size_t samples = 1000;
  std::string ensemble = "dense-uniform";
  std::string route = "companion";
  std::size_t pivot = 0;
  std::string format = "human";
  std::string constants;
  std::string n = "3";
  std::size_t workers = 1;
};

namespace detail {

inline std::pair<std::size_t, std::size_t> parse_n_range(const std::string& text) {
  auto parse_one = [&](const std::string& s) -> std::size_t {
    if (!niep::detail::all_digits(s)) throw ParseError("malformed --n value '" + text + "'", text);
    return static_cast<std::size_t>(std::stoull(s));
  };
  const auto dots = text.find("..");
  if (dots == std::string::npos) {
    const auto n = parse_one(text);
    return {n, n};
  }
  return {parse_one(text.substr(0, dots)), parse_one(text.substr(dots + 2))};
}

// JSON document with a matrix, or one comma-separated row per line.
inline DenseMatrix read_matrix_file(const std::string& path) {
  const std::string text = read_text_file(path);
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    auto doc = parse_input_document(text);
    if (!doc.matrix) throw ParseError("matrix file holds no matrix", path);
    return *doc.matrix;
  }
  std::vector<Complex> data;
  std::size_t rows = 0;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (niep::detail::normalize_minus(line).empty()) continue;
    for (const auto& z : parse_spectrum(line)) data.push_back(z);
    ++rows;
  }
  if (rows == 0 || data.size() != rows * rows) throw ParseError("matrix file is not square", path);
  return DenseMatrix(rows, std::move(data));
}

class Runner {
 public:
  Runner(Options opts, const std::vector<std::string>& given, std::ostream& out)
      : o_(std::move(opts)), given_(given), out_(out) {}

  int dispatch() {
    load_input();
    if (o_.format != "human" && o_.format != "machine") throw ParseError("unknown format '" + o_.format + "'", o_.format);
    if (o_.command == "check") return check();
    if (o_.command == "critical") return critical();
    if (o_.command == "realize") return realize();
    if (o_.command == "verify") return verify();
    if (o_.command == "hunt") return hunt_cmd();
    if (o_.command == "chain") return chain();
    throw ParseError("unknown command '" + o_.command + "'", o_.command);
  }

 private:
  bool flag_given(const std::string& name) const {
    return std::any_of(given_.begin(), given_.end(),
                       [&](const std::string& a) { return a == name || a.rfind(name + "=", 0) == 0; });
  }

  void load_input() {
    if (!o_.spectrum.empty()) list_ = parse_spectrum(o_.spectrum);
    if (o_.input_file.empty()) return;
    const auto doc = parse_input_document(read_text_file(o_.input_file));
    if (!list_) {
      if (doc.spectrum) {
        list_ = doc.spectrum;
      } else if (doc.matrix) {
        list_ = spectrum(*doc.matrix);
      }
    }
    const Json& c = doc.config;
    try {
      if (c.contains("tol") && !flag_given("--tol")) o_.tol = c.at("tol").get<double>();
      if (c.contains("K") && !flag_given("--kmax")) o_.kmax = c.at("K").get<std::size_t>();
      if (c.contains("J") && !flag_given("--jll")) o_.jll = c.at("J").get<std::size_t>();
      if (c.contains("seed") && !flag_given("--seed")) o_.seed = c.at("seed").get<std::uint64_t>();
      if (c.contains("samples") && !flag_given("--samples")) o_.samples = c.at("samples").get<std::size_t>();
      if (c.contains("ensemble") && !flag_given("--ensemble")) o_.ensemble = c.at("ensemble").get<std::string>();
    } catch (const Json::exception& e) {
      throw ParseError(std::string("bad config value: ") + e.what(), c.dump());
    }
  }

  const SpectrumList& list() const {
    if (!list_) throw ParseError("no spectrum given", "");
    return *list_;
  }

  ConditionOptions condition_options() const {
    ConditionOptions c;
    c.moment_depth = o_.kmax;
    c.jll_depth = o_.jll;
    c.tol = o_.tol;
    return c;
  }

  Json config_json() const {
    Json j;
    j["tol"] = o_.tol;
    j["kmax"] = o_.kmax;
    j["jll"] = o_.jll;
    return j;
  }

  int emit(const Json& input, Json config, const Json& report, int code,
           const std::function<void(std::ostream&)>& human) {
    if (o_.format == "machine") {
      Json doc;
      doc["command"] = o_.command;
      doc["input"] = input;
      doc["config"] = std::move(config);
      doc["report"] = report;
      doc["exit_code"] = code;
      out_ << emit_machine(doc);
    } else {
      human(out_);
    }
    return code;
  }

  Json spectrum_input() const {
    Json j;
    j["spectrum"] = to_json(list());
    return j;
  }

  int check() {
    const auto rep = check_necessary_conditions(list(), condition_options());
    return emit(spectrum_input(), config_json(), to_json(rep), rep.overall ? kOk : kConditionFailed,
                [&](std::ostream& os) {
                  os << "list " << format_list(list()) << "\n";
                  print_human(os, rep);
                });
  }

  int critical() {
    const SpectrumList crit = critical_points(list()).canonical();
    const MonicPolynomial q = derivative_monic(from_roots(list()));
    const std::size_t depth = o_.kmax ? o_.kmax : 4 * crit.size();
    const auto direct = power_sums(crit, depth);
    Json moments = Json::array();
    std::vector<std::vector<std::string>> rows{{"k", "moment formula", "power sum of critical points"}};
    for (std::size_t k = 1; k <= depth; ++k) {
      const Complex formula = critical_moment(list(), k);
      Json e;
      e["k"] = k;
      e["formula"] = to_json(formula);
      e["direct"] = to_json(direct[k - 1]);
      moments.push_back(std::move(e));
      rows.push_back({std::to_string(k), format_complex(formula), format_complex(direct[k - 1])});
    }
    Json report;
    report["critical"] = to_json(crit);
    report["derivative_over_n"] = to_json(q);
    report["moments"] = std::move(moments);
    Json config;
    config["kmax"] = depth;
    return emit(spectrum_input(), config, report, kOk, [&](std::ostream& os) {
      os << "list      " << format_list(list()) << "\n";
      os << "critical  " << format_list(crit) << "\n";
      os << "p'/n      " << format_polynomial(q) << "\n";
      os << "moments of the critical points:\n";
      print_table(os, rows);
    });
  }

  int realize() {
    const SpectrumList& l = list();
    const SpectrumList crit = critical_points(l).canonical();
    std::optional<DenseMatrix> full;
    DenseMatrix cert;
    std::string detail;
    const std::size_t del = o_.pivot ? o_.pivot : 1;
    if (o_.route == "companion") {
      cert = companion(derivative_monic(from_roots(l)));
      detail = "C(p'/n)";
    } else if (o_.route == "dcomp") {
      const std::size_t pivot = o_.pivot ? o_.pivot : default_pivot(l);
      cert = d_companion(l, pivot);
      detail = "d-companion, pivot " + std::to_string(pivot);
    } else if (o_.route == "real-dcomp") {
      cert = real_d_companion(l, o_.tol);
      detail = "real d-companion";
    } else if (o_.route == "dft" || o_.route == "hadamard") {
      DenseMatrix h = o_.route == "dft" ? dft_matrix(l.size()) : hadamard_from_flag(l.size());
      const SpectrumList arranged = o_.route == "dft" ? conjugate_symmetric_arrangement(l, o_.tol) : l;
      full = hadamard_similarity(arranged, h);
      cert = principal_submatrix(*full, del);
      detail = "similarity with diagonal " + format_list(arranged) + ", deleted index " + std::to_string(del);
    } else if (o_.route == "circulant") {
      const SpectrumList arranged = conjugate_symmetric_arrangement(l, o_.tol);
      const auto row = circulant_first_row(arranged);
      full = circulant(row);
      cert = principal_submatrix(*full, del);
      detail = "circulant with eigenvalues " + format_list(arranged) + ", deleted index " + std::to_string(del);
    } else {
      throw ParseError("unknown route '" + o_.route + "'", o_.route);
    }

    const double scale = 1.0 + cert.max_abs();
    const bool real = cert.max_abs_imag() <= o_.tol * scale;
    const std::string sign = real ? std::string(to_string(matrix_sign_class(cert.real_part(), o_.tol * scale))) : "complex";
    const SpectrumList spec = spectrum(cert);
    const double residual = matching_distance(spec, crit);
    const bool realizes = sign == "nonnegative" && residual <= o_.certificate_tol * (1.0 + crit.max_modulus());

    Json report;
    report["route"] = o_.route;
    report["detail"] = detail;
    report["realizes"] = realizes;
    report["real"] = real;
    report["sign_class"] = sign;
    report["residual"] = residual;
    report["critical"] = to_json(crit);
    report["spectrum"] = to_json(spec);
    report["certificate"] = to_json(cert);
    report["similarity"] = full ? to_json(*full) : Json(nullptr);
    Json config = config_json();
    config["route"] = o_.route;
    config["pivot"] = o_.pivot;
    config["certificate_tol"] = o_.certificate_tol;
    return emit(spectrum_input(), config, report, realizes ? kOk : kConditionFailed, [&](std::ostream& os) {
      os << "list      " << format_list(l) << "\n";
      os << "critical  " << format_list(crit) << "\n";
      os << "route     " << o_.route << " (" << detail << ")\n";
      if (full) {
        os << "full matrix:\n";
        print_matrix(os, *full);
      }
      os << "certificate:\n";
      print_matrix(os, cert);
      os << "spectrum  " << format_list(spec) << "\n";
      os << "residual  " << format_shortest(residual) << "\n";
      os << "class     " << sign << "\n";
      os << (realizes ? "realizes the critical points\n" : "does not certify the critical points\n");
    });
  }

  DenseMatrix hadamard_from_flag(std::size_t n) const {
    if (o_.hadamard_file.empty()) throw ParseError("route hadamard needs --hadamard <file>", "");
    DenseMatrix h = read_matrix_file(o_.hadamard_file);
    if (h.order() != n) throw DomainError("Hadamard order does not match list size");
    if (auto bad = hadamard_violation(h)) throw DomainError("not a complex Hadamard matrix: " + *bad);
    return h;
  }

  int verify() {
    VerifyConfig cfg;
    cfg.conditions = condition_options();
    cfg.tol = o_.tol;
    cfg.certificate_tol = o_.certificate_tol;
    if (!o_.hadamard_file.empty()) cfg.hadamard = read_matrix_file(o_.hadamard_file);
    const auto rep = verify_critical_realizability(list(), cfg);
    Json config = config_json();
    config["certificate_tol"] = o_.certificate_tol;
    return emit(spectrum_input(), config, to_json(rep), rep.verdict == Verdict::certified ? kOk : kConditionFailed,
                [&](std::ostream& os) { print_human(os, rep); });
  }

  int hunt_cmd() {
    HuntConfig cfg;
    std::tie(cfg.n_min, cfg.n_max) = parse_n_range(o_.n);
    cfg.samples = o_.samples;
    cfg.seed = o_.seed;
    cfg.ensemble = parse_ensemble(o_.ensemble);
    cfg.conditions = condition_options();
    cfg.tol = o_.tol;
    cfg.workers = o_.workers;
    const auto rep = hunt(cfg);
    Json input;
    input["n_min"] = cfg.n_min;
    input["n_max"] = cfg.n_max;
    Json config = config_json();
    config["samples"] = cfg.samples;
    config["seed"] = cfg.seed;
    config["ensemble"] = o_.ensemble;
    return emit(input, config, to_json(rep), rep.alarms.empty() ? kOk : kConditionFailed,
                [&](std::ostream& os) { print_human(os, rep); });
  }

  int chain() {
    if (o_.constants.empty()) throw ParseError("chain needs --constants", "");
    const auto constants = parse_reals(o_.constants);
    const auto rep = antiderivative_chain(from_roots(list()), constants, o_.tol);
    Json config = config_json();
    Json cs = Json::array();
    for (double c : constants) cs.push_back(c);
    config["constants"] = std::move(cs);
    return emit(spectrum_input(), config, to_json(rep), rep.all_nonnegative ? kOk : kConditionFailed,
                [&](std::ostream& os) { print_human(os, rep); });
  }

  Options o_;
  std::vector<std::string> given_;
  std::ostream& out_;
  std::optional<SpectrumList> list_;
};

}  // namespace detail

/// Exit codes: 0 success, 1 a condition failed or nothing certified,
/// 2 bad input or precondition, 3 numerical non-convergence.
inline int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Critical points, necessary conditions and realizing matrices for spectra", "niep"};
  Options o;
  app.add_option("command", o.command, "check | critical | realize | verify | hunt | chain")
      ->required()
      ->check(CLI::IsMember({"check", "critical", "realize", "verify", "hunt", "chain"}));
  app.add_option("spectrum", o.spectrum, "comma-separated complex literals, e.g. \"3,-1,-1\" or \"2,i,-i\"");
  app.add_option("--input", o.input_file, "file with one literal per line, or a JSON input document");
  app.add_option("--tol", o.tol, "condition tolerance")->capture_default_str();
  app.add_option("--certificate-tol", o.certificate_tol, "spectrum residual tolerance for certificates")
      ->capture_default_str();
  app.add_option("--kmax", o.kmax, "moment depth K (0: four times the list size)")->capture_default_str();
  app.add_option("--jll", o.jll, "J-LL depth J")->capture_default_str();
  app.add_option("--seed", o.seed, "hunt seed")->capture_default_str();
  app.add_option("--samples", o.samples, "hunt sample count")->capture_default_str();
  app.add_option("--ensemble", o.ensemble,
                 "dense-uniform | sparse-bernoulli | row-stochastic | circulant-nonnegative | suleimanova")
      ->capture_default_str();
  app.add_option("--route", o.route, "companion | dcomp | real-dcomp | dft | circulant | hadamard")
      ->capture_default_str();
  app.add_option("--pivot", o.pivot, "d-companion pivot, or deleted index for similarity routes (1-based)");
  app.add_option("--format", o.format, "human | machine")->capture_default_str();
  app.add_option("--constants", o.constants, "antiderivative constants, comma-separated");
  app.add_option("--n", o.n, "hunt order, N or N..M")->capture_default_str();
  app.add_option("--hadamard", o.hadamard_file, "complex Hadamard matrix file");
  app.add_option("--workers", o.workers, "hunt worker threads")->capture_default_str();

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  }

  try {
    detail::Runner runner(o, args, out);
    return runner.dispatch();
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const NumericError& e) {
    err << "error: " << e.what() << " (best residual " << format_shortest(e.best_residual()) << ")\n";
    return kNumericError;
  }
}

}  // namespace niep::cli
