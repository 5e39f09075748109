#pragma once

// Text in and out: complex literals, input documents, the canonical
// machine format, and aligned human tables.

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <string_view>
#include <system_error>
#include <vector>

#include <json.hpp>

#include "niep/core.hpp"
#include "niep/harness.hpp"
#include "niep/matrix.hpp"
#include "niep/moments.hpp"
#include "niep/polynomial.hpp"
#include "niep/spectrum.hpp"

namespace niep {

using Json = nlohmann::ordered_json;

namespace detail {

inline std::string normalize_minus(std::string_view text) {
  // U+2212 MINUS SIGN -> '-'
  std::string out;
  out.reserve(text.size());
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (i + 2 < text.size() && static_cast<unsigned char>(text[i]) == 0xE2 &&
        static_cast<unsigned char>(text[i + 1]) == 0x88 && static_cast<unsigned char>(text[i + 2]) == 0x92) {
      out.push_back('-');
      i += 2;
    } else if (!std::isspace(static_cast<unsigned char>(text[i]))) {
      out.push_back(text[i]);
    }
  }
  return out;
}

inline bool all_digits(std::string_view s) {
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return c >= '0' && c <= '9'; });
}

inline double parse_unsigned_decimal(std::string_view body, const std::string& token) {
  if (body.empty() || !(std::isdigit(static_cast<unsigned char>(body[0])) || body[0] == '.')) {
    throw ParseError("malformed number in literal '" + token + "'", token);
  }
  double v = 0.0;
  const auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), v);
  if (ec != std::errc{} || ptr != body.data() + body.size() || !std::isfinite(v)) {
    throw ParseError("malformed number in literal '" + token + "'", token);
  }
  return v;
}

// p/q with integer p, q: one correctly rounded division when both are
// exactly representable, which covers every literal up to 2^53.
inline double parse_rational(std::string_view num, std::string_view den, const std::string& token) {
  if (!all_digits(num) || !all_digits(den)) throw ParseError("malformed rational '" + token + "'", token);
  const double p = parse_unsigned_decimal(num, token);
  const double q = parse_unsigned_decimal(den, token);
  if (q == 0.0) throw ParseError("zero denominator in '" + token + "'", token);
  constexpr double exact = 9007199254740992.0;
  if (p > exact || q > exact) throw ParseError("rational component exceeds 2^53 in '" + token + "'", token);
  return p / q;
}

struct Term {
  double value = 0.0;
  bool imaginary = false;
};

inline Term parse_term(std::string_view s, const std::string& token) {
  Term t;
  double sign = 1.0;
  if (!s.empty() && (s[0] == '+' || s[0] == '-')) {
    sign = s[0] == '-' ? -1.0 : 1.0;
    s.remove_prefix(1);
  }
  if (!s.empty() && (s.back() == 'i' || s.back() == 'j')) {
    t.imaginary = true;
    s.remove_suffix(1);
    if (!s.empty() && s.back() == '*') s.remove_suffix(1);
  }
  if (s.empty()) {
    if (!t.imaginary) throw ParseError("empty literal component in '" + token + "'", token);
    t.value = sign;
    return t;
  }
  const auto slash = s.find('/');
  t.value = sign * (slash == std::string_view::npos
                        ? parse_unsigned_decimal(s, token)
                        : parse_rational(s.substr(0, slash), s.substr(slash + 1), token));
  return t;
}

}  // namespace detail

/// Decimal or p/q real part, optional +-b i imaginary part, or a bare
/// imaginary term ("i", "-2i", "1/3i"). Accepts U+2212 as minus.
inline Complex parse_complex(std::string_view text) {
  // Blanks may sit around signs but not inside a number ("1 2").
  auto word = [](char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '.' || c == '/'; };
  char last = 0;
  bool gap = false;
  for (char c : text) {
    if (std::isspace(static_cast<unsigned char>(c))) {
      gap = last != 0;
      continue;
    }
    if (gap && word(last) && word(c)) throw ParseError("blank inside literal '" + std::string(text) + "'", std::string(text));
    last = c;
    gap = false;
  }
  const std::string s = detail::normalize_minus(text);
  if (s.empty()) throw ParseError("empty complex literal", std::string(text));
  std::size_t split = std::string::npos;
  for (std::size_t i = 1; i < s.size(); ++i) {
    if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
      if (split != std::string::npos) throw ParseError("malformed complex literal '" + s + "'", s);
      split = i;
    }
  }
  if (split == std::string::npos) {
    const auto t = detail::parse_term(s, s);
    return t.imaginary ? Complex{0.0, t.value} : Complex{t.value, 0.0};
  }
  const auto re = detail::parse_term(std::string_view(s).substr(0, split), s);
  const auto im = detail::parse_term(std::string_view(s).substr(split), s);
  if (re.imaginary || !im.imaginary) throw ParseError("malformed complex literal '" + s + "'", s);
  return {re.value, im.value};
}

/// Comma-separated literals, optionally wrapped in braces or brackets.
inline SpectrumList parse_spectrum(std::string_view text) {
  std::string s(text);
  for (char& c : s) {
    if (c == '{' || c == '}' || c == '[' || c == ']' || c == '\n' || c == ';') c = c == '\n' || c == ';' ? ',' : ' ';
  }
  std::vector<Complex> entries;
  std::stringstream in(s);
  std::string item;
  while (std::getline(in, item, ',')) {
    if (detail::normalize_minus(item).empty()) {
      throw ParseError("empty entry in spectrum list '" + std::string(text) + "'", std::string(text));
    }
    entries.push_back(parse_complex(item));
  }
  if (entries.empty()) throw ParseError("empty spectrum list", std::string(text));
  return SpectrumList(std::move(entries));
}

/// Real scalars, same syntax as parse_spectrum.
inline std::vector<double> parse_reals(std::string_view text) {
  std::vector<double> out;
  for (const auto& z : parse_spectrum(text)) {
    if (z.imag() != 0.0) throw ParseError("expected a real value", std::string(text));
    out.push_back(z.real());
  }
  return out;
}

struct InputDocument {
  std::optional<SpectrumList> spectrum;
  std::optional<DenseMatrix> matrix;
  Json config = Json::object();  // tol, K, J, seed, samples, ensemble
};

namespace detail {

inline Complex complex_from_json(const Json& j) {
  if (j.is_string()) return parse_complex(j.get<std::string>());
  if (j.is_number()) return Complex{j.get<double>()};
  if (j.is_object() && j.contains("re")) return {j.at("re").get<double>(), j.value("im", 0.0)};
  throw ParseError("unrecognized complex value", j.dump());
}

}  // namespace detail

/// JSON object {spectrum?, matrix?, config?} when the text starts with '{'
/// and parses as such; otherwise one literal per line, '#' comments allowed.
inline InputDocument parse_input_document(const std::string& text) {
  InputDocument doc;
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    Json j = Json::parse(text, nullptr, false);
    if (!j.is_discarded() && j.is_object()) {
      try {
        if (j.contains("spectrum")) {
          std::vector<Complex> entries;
          for (const auto& e : j.at("spectrum")) entries.push_back(detail::complex_from_json(e));
          doc.spectrum = SpectrumList(std::move(entries));
        }
        if (j.contains("matrix")) {
          const auto& m = j.at("matrix");
          const auto& rows = m.at("rows");
          const std::size_t order = m.contains("order") ? m.at("order").get<std::size_t>() : rows.size();
          std::vector<Complex> data;
          if (rows.size() != order) throw ParseError("matrix row count does not match order", m.dump());
          for (const auto& row : rows) {
            if (row.size() != order) throw ParseError("matrix row length does not match order", row.dump());
            for (const auto& e : row) data.push_back(detail::complex_from_json(e));
          }
          doc.matrix = DenseMatrix(order, std::move(data));
        }
        if (j.contains("config")) doc.config = j.at("config");
      } catch (const Json::exception& e) {
        throw ParseError(std::string("malformed input document: ") + e.what(), text.substr(first, 40));
      }
      if (doc.spectrum && doc.matrix) throw ParseError("input document has both spectrum and matrix", "");
      return doc;
    }
  }
  std::vector<Complex> entries;
  std::stringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    if (detail::normalize_minus(line).empty()) continue;
    for (const auto& z : parse_spectrum(line)) entries.push_back(z);
  }
  if (entries.empty()) throw ParseError("input file holds no spectrum entries", "");
  doc.spectrum = SpectrumList(std::move(entries));
  return doc;
}

inline std::string read_text_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open input file '" + path + "'", path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// ---- machine format -------------------------------------------------------

inline std::string format_fixed17(double x) {
  if (x == 0.0) return "0";
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return buf;
}

namespace detail {

inline void emit(const Json& j, std::string& out, int depth) {
  const std::string pad(static_cast<std::size_t>(2 * (depth + 1)), ' ');
  const std::string close(static_cast<std::size_t>(2 * depth), ' ');
  switch (j.type()) {
    case Json::value_t::object: {
      if (j.empty()) {
        out += "{}";
        return;
      }
      out += "{\n";
      bool first = true;
      for (auto it = j.begin(); it != j.end(); ++it) {
        if (!first) out += ",\n";
        first = false;
        out += pad + Json(it.key()).dump() + ": ";
        emit(it.value(), out, depth + 1);
      }
      out += "\n" + close + "}";
      return;
    }
    case Json::value_t::array: {
      if (j.empty()) {
        out += "[]";
        return;
      }
      // Short scalar arrays and complex records stay on one line.
      const bool inline_ok = std::all_of(j.begin(), j.end(), [](const Json& e) { return e.is_primitive(); });
      if (inline_ok) {
        out += "[";
        for (std::size_t i = 0; i < j.size(); ++i) {
          if (i) out += ", ";
          emit(j[i], out, depth + 1);
        }
        out += "]";
        return;
      }
      out += "[\n";
      for (std::size_t i = 0; i < j.size(); ++i) {
        if (i) out += ",\n";
        out += pad;
        emit(j[i], out, depth + 1);
      }
      out += "\n" + close + "]";
      return;
    }
    case Json::value_t::number_float: {
      const double x = j.get<double>();
      out += std::isfinite(x) ? format_fixed17(x) : "null";
      return;
    }
    default:
      out += j.dump();
  }
}

}  // namespace detail

/// Canonical text: insertion-ordered keys, two-space indent, floats with
/// 17 significant digits, -0 printed as 0, non-finite values as null.
/// Parsing the output and emitting again reproduces it byte for byte.
inline std::string emit_machine(const Json& j) {
  std::string out;
  detail::emit(j, out, 0);
  out += "\n";
  return out;
}

inline Json to_json(Complex z) {
  Json j;
  j["re"] = z.real();
  j["im"] = z.imag();
  return j;
}

inline Json to_json(const SpectrumList& list) {
  Json j = Json::array();
  for (const auto& z : list) j.push_back(to_json(z));
  return j;
}

inline Json to_json(const DenseMatrix& m) {
  Json rows = Json::array();
  for (std::size_t r = 0; r < m.order(); ++r) {
    Json row = Json::array();
    for (std::size_t c = 0; c < m.order(); ++c) row.push_back(to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  Json j;
  j["order"] = m.order();
  j["rows"] = std::move(rows);
  return j;
}

/// Coefficients from the leading 1 down to the constant term.
inline Json to_json(const MonicPolynomial& p) {
  Json c = Json::array();
  for (std::size_t k = p.degree() + 1; k-- > 0;) c.push_back(to_json(p.coeff(k)));
  Json j;
  j["degree"] = p.degree();
  j["coefficients"] = std::move(c);
  return j;
}

inline Json to_json(const Classification& c) {
  Json j;
  j["suleimanova"] = c.suleimanova;
  j["generalized_suleimanova"] = c.generalized_suleimanova;
  j["ciarlet"] = c.ciarlet;
  j["dcomp_inequality"] = c.dcomp_inequality;
  j["trace"] = c.trace;
  return j;
}

inline Json to_json(const ConditionReport& r) {
  Json moments = Json::array();
  for (const auto& m : r.moment_checks) {
    Json e;
    e["k"] = m.k;
    e["value"] = to_json(m.value);
    e["pass"] = m.pass;
    moments.push_back(std::move(e));
  }
  Json jll = Json::array();
  for (const auto& c : r.jll_checks) {
    Json e;
    e["k"] = c.k;
    e["m"] = c.m;
    e["lhs"] = c.lhs;
    e["rhs"] = c.rhs;
    e["pass"] = c.pass;
    jll.push_back(std::move(e));
  }
  Json j;
  j["overall"] = r.overall;
  j["tol"] = r.tol;
  j["self_conjugate"] = r.self_conjugate;
  j["pairing_residual"] = r.pairing_residual;
  j["spectral_radius_in_list"] = r.spectral_radius_in_list;
  j["spectral_radius"] = r.spectral_radius;
  j["radius_margin"] = r.radius_margin;
  j["moment_depth"] = r.moment_depth;
  j["jll_depth"] = r.jll_depth;
  j["moments"] = std::move(moments);
  j["jll"] = std::move(jll);
  return j;
}

inline Json to_json(const RouteRecord& r) {
  Json j;
  j["route"] = r.name;
  j["attempted"] = r.attempted;
  j["succeeded"] = r.succeeded;
  j["detail"] = r.detail;
  j["residual"] = r.residual;
  j["coefficient_residual"] = r.coefficient_residual;
  j["certificate"] = r.certificate ? to_json(*r.certificate) : Json(nullptr);
  return j;
}

inline Json to_json(const RealizabilityReport& r) {
  Json routes = Json::array();
  for (const auto& route : r.routes) routes.push_back(to_json(route));
  Json j;
  j["verdict"] = std::string(to_string(r.verdict));
  j["input"] = to_json(r.input);
  j["critical"] = to_json(r.critical);
  j["input_classification"] = to_json(r.input_class);
  j["critical_classification"] = r.critical_class ? to_json(*r.critical_class) : Json(nullptr);
  j["conditions"] = to_json(r.conditions);
  j["routes"] = std::move(routes);
  return j;
}

/// Wall-clock time is left out so that reports of equal runs are equal.
inline Json to_json(const HuntReport& r) {
  Json hist;
  for (const auto& [name, count] : r.route_successes) hist[name] = count;
  Json alarms = Json::array();
  for (const auto& a : r.alarms) alarms.push_back(to_json(a));
  Json j;
  j["seed"] = r.seed;
  j["ensemble"] = std::string(to_string(r.ensemble));
  j["n_min"] = r.n_min;
  j["n_max"] = r.n_max;
  j["samples"] = r.samples;
  j["certified"] = r.certified;
  j["uncertified"] = r.uncertified;
  j["alarm_count"] = r.alarms.size();
  j["unconfirmed_alarms"] = r.unconfirmed_alarms;
  j["numeric_failures"] = r.numeric_failures;
  j["route_successes"] = std::move(hist);
  j["monov_max_relative_error"] = r.monov_max_error;
  j["monov_failures"] = r.monov_failures;
  j["alarms"] = std::move(alarms);
  return j;
}

inline Json to_json(const ChainReport& r) {
  Json steps = Json::array();
  for (const auto& s : r.steps) {
    Json e;
    e["constant"] = s.constant;
    e["polynomial"] = to_json(s.polynomial);
    e["companion_nonnegative"] = s.companion_nonnegative;
    e["roots"] = to_json(s.roots);
    steps.push_back(std::move(e));
  }
  Json j;
  j["start"] = to_json(r.start);
  j["all_nonnegative"] = r.all_nonnegative;
  j["steps"] = std::move(steps);
  return j;
}

// ---- human format ---------------------------------------------------------

/// Shortest text that reads back to the same double.
inline std::string format_shortest(double x) {
  if (x == 0.0) return "0";
  if (!std::isfinite(x)) return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
  char buf[40];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

inline std::string format_complex(Complex z) {
  if (z.imag() == 0.0) return format_shortest(z.real());
  if (z.real() == 0.0) return format_shortest(z.imag()) + "i";
  const std::string im = format_shortest(std::abs(z.imag()));
  return format_shortest(z.real()) + (z.imag() < 0 ? "-" : "+") + im + "i";
}

inline std::string format_list(const SpectrumList& list) {
  std::string s = "{";
  for (std::size_t i = 0; i < list.size(); ++i) s += (i ? ", " : "") + format_complex(list[i]);
  return s + "}";
}

/// Rows of cells printed with each column padded to its widest cell.
inline void print_table(std::ostream& out, const std::vector<std::vector<std::string>>& rows,
                        const std::string& indent = "  ") {
  std::vector<std::size_t> width;
  for (const auto& row : rows) {
    width.resize(std::max(width.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) width[c] = std::max(width[c], row[c].size());
  }
  for (const auto& row : rows) {
    std::string line = indent;
    for (std::size_t c = 0; c < row.size(); ++c) {
      line += row[c];
      if (c + 1 < row.size()) line += std::string(width[c] - row[c].size() + 2, ' ');
    }
    out << line << "\n";
  }
}

inline void print_matrix(std::ostream& out, const DenseMatrix& m, const std::string& indent = "  ") {
  std::vector<std::vector<std::string>> rows;
  const bool real = m.max_abs_imag() == 0.0;
  for (std::size_t r = 0; r < m.order(); ++r) {
    std::vector<std::string> row;
    for (std::size_t c = 0; c < m.order(); ++c) {
      row.push_back(real ? format_shortest(m(r, c).real()) : format_complex(m(r, c)));
    }
    rows.push_back(std::move(row));
  }
  print_table(out, rows, indent);
}

inline std::string yes_no(bool b) { return b ? "yes" : "no"; }

inline void print_human(std::ostream& out, const ConditionReport& r) {
  out << "necessary conditions: " << (r.overall ? "hold" : "FAIL") << " (tol " << format_shortest(r.tol) << ")\n";
  print_table(out, {
                       {"self-conjugate", yes_no(r.self_conjugate), "pairing residual " + format_shortest(r.pairing_residual)},
                       {"spectral radius in list", yes_no(r.spectral_radius_in_list),
                        "rho " + format_shortest(r.spectral_radius) + ", margin " + format_shortest(r.radius_margin)},
                   });
  std::size_t moment_fail = 0;
  for (const auto& m : r.moment_checks) moment_fail += m.pass ? 0 : 1;
  std::size_t jll_fail = 0;
  for (const auto& c : r.jll_checks) jll_fail += c.pass ? 0 : 1;
  out << "  moments s_1..s_" << r.moment_depth << ": " << (moment_fail ? std::to_string(moment_fail) + " failed" : "all nonnegative")
      << "\n";
  out << "  J-LL k,m <= " << r.jll_depth << ": " << (jll_fail ? std::to_string(jll_fail) + " failed" : "all hold") << "\n";
  if (moment_fail) {
    std::vector<std::vector<std::string>> rows{{"k", "s_k", "pass"}};
    for (const auto& m : r.moment_checks) {
      if (!m.pass) rows.push_back({std::to_string(m.k), format_complex(m.value), "no"});
    }
    print_table(out, rows, "    ");
  }
  if (jll_fail) {
    std::vector<std::vector<std::string>> rows{{"k", "m", "s_k^m", "n^(m-1) s_km"}};
    for (const auto& c : r.jll_checks) {
      if (!c.pass) rows.push_back({std::to_string(c.k), std::to_string(c.m), format_shortest(c.lhs), format_shortest(c.rhs)});
    }
    print_table(out, rows, "    ");
  }
}

inline void print_human(std::ostream& out, const Classification& c, const std::string& label) {
  std::vector<std::string> tags;
  if (c.suleimanova) tags.emplace_back("Suleimanova");
  if (c.generalized_suleimanova) tags.emplace_back("generalized Suleimanova");
  if (c.ciarlet) tags.emplace_back("Ciarlet");
  if (c.dcomp_inequality) tags.emplace_back("d-companion inequality");
  std::string joined;
  for (std::size_t i = 0; i < tags.size(); ++i) joined += (i ? ", " : "") + tags[i];
  out << label << ": " << (joined.empty() ? "none" : joined) << " (trace " << format_shortest(c.trace) << ")\n";
}

inline void print_human(std::ostream& out, const RealizabilityReport& r) {
  out << "input     " << format_list(r.input) << "\n";
  out << "critical  " << format_list(r.critical) << "\n";
  print_human(out, r.input_class, "input class");
  if (r.critical_class) print_human(out, *r.critical_class, "critical class");
  print_human(out, r.conditions);
  out << "routes:\n";
  std::vector<std::vector<std::string>> rows{{"route", "attempted", "succeeded", "residual", "detail"}};
  for (const auto& route : r.routes) {
    rows.push_back({route.name, yes_no(route.attempted), yes_no(route.succeeded),
                    std::isnan(route.residual) ? "-" : format_shortest(route.residual), route.detail});
  }
  print_table(out, rows);
  for (const auto& route : r.routes) {
    if (route.succeeded && route.certificate) {
      out << "certificate (" << route.name << "):\n";
      print_matrix(out, *route.certificate, "    ");
    }
  }
  out << "verdict: " << to_string(r.verdict) << "\n";
}

inline void print_human(std::ostream& out, const HuntReport& r) {
  out << "hunt: ensemble " << to_string(r.ensemble) << ", n " << r.n_min;
  if (r.n_max != r.n_min) out << ".." << r.n_max;
  out << ", seed " << r.seed << ", " << r.samples << " samples\n";
  print_table(out, {
                       {"certified", std::to_string(r.certified)},
                       {"uncertified", std::to_string(r.uncertified)},
                       {"alarms", std::to_string(r.alarms.size())},
                       {"unconfirmed alarms", std::to_string(r.unconfirmed_alarms)},
                       {"numeric failures", std::to_string(r.numeric_failures)},
                       {"monov max rel. error", format_shortest(r.monov_max_error)},
                       {"monov failures", std::to_string(r.monov_failures)},
                       {"wall clock (s)", format_shortest(std::round(r.wall_clock_seconds * 1000.0) / 1000.0)},
                   });
  out << "route successes:\n";
  std::vector<std::vector<std::string>> rows;
  for (const auto& [name, count] : r.route_successes) rows.push_back({name, std::to_string(count)});
  print_table(out, rows);
  for (std::size_t i = 0; i < r.alarms.size(); ++i) {
    out << "\nALARM " << (i + 1) << ":\n";
    print_human(out, r.alarms[i]);
  }
}

inline std::string format_polynomial(const MonicPolynomial& p) {
  std::string s;
  for (std::size_t k = p.degree() + 1; k-- > 0;) {
    const Complex c = p.coeff(k);
    if (k != p.degree() && c == Complex{}) continue;
    std::string coef = c.imag() == 0.0 ? format_shortest(std::abs(c.real())) : "(" + format_complex(c) + ")";
    const bool negative = c.imag() == 0.0 && c.real() < 0;
    if (!s.empty()) s += negative ? " - " : " + ";
    else if (negative) s += "-";
    const std::string var = k == 0 ? "" : (k == 1 ? "t" : "t^" + std::to_string(k));
    if (k != 0 && coef == "1") coef.clear();
    s += coef + var;
  }
  return s;
}

inline void print_human(std::ostream& out, const ChainReport& r) {
  out << "start: " << format_polynomial(r.start) << "\n";
  std::vector<std::vector<std::string>> rows{{"step", "c", "companion >= 0", "polynomial", "roots"}};
  for (std::size_t i = 0; i < r.steps.size(); ++i) {
    const auto& s = r.steps[i];
    rows.push_back({std::to_string(i + 1), format_shortest(s.constant), yes_no(s.companion_nonnegative),
                    format_polynomial(s.polynomial), format_list(s.roots)});
  }
  print_table(out, rows);
  out << "all steps nonnegative: " << yes_no(r.all_nonnegative) << "\n";
}

}  // namespace niep
