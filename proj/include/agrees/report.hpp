#pragma once

// Single-ideal analysis documents: JSON (schema agrees/1, keys sorted) and a
// plain-text rendering. Also the {expr} parameter substitution used by the
// command line.

#include <cctype>
#include <chrono>
#include <cstdint>
#include <map>
#include <optional>
#include <sstream>
#include <string>

#include "agrees/engine.hpp"
#include "agrees/parse.hpp"
#include "agrees/rees.hpp"
#include "json.hpp"

#ifndef AGREES_VERSION
#define AGREES_VERSION "1.0.0"
#endif

namespace agrees {

inline constexpr const char* kSchema = "agrees/1";
inline constexpr const char* kVersion = AGREES_VERSION;

namespace detail {

/// Integer arithmetic over named parameters: + - * / ( ), unary minus.
class ExprEval {
 public:
  ExprEval(std::string_view text, const std::map<std::string, long>& vars) : text_(text), vars_(vars) {}

  long run() {
    long v = sum();
    skip();
    if (pos_ != text_.size()) fail("operator or end of expression");
    return v;
  }

 private:
  long sum() {
    long v = product();
    for (;;) {
      skip();
      if (eat('+')) v += product();
      else if (eat('-')) v -= product();
      else return v;
    }
  }
  long product() {
    long v = unary();
    for (;;) {
      skip();
      if (eat('*')) {
        v *= unary();
      } else if (eat('/')) {
        long d = unary();
        if (d == 0) throw BadParameters("division by zero in parameter expression '" + std::string(text_) + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }
  long unary() {
    skip();
    if (eat('-')) return -unary();
    if (eat('(')) {
      long v = sum();
      skip();
      if (!eat(')')) fail("')'");
      return v;
    }
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      long v = 0;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
        v = v * 10 + (text_[pos_++] - '0');
      }
      return v;
    }
    std::size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) ++pos_;
    if (start == pos_) fail("number, name or '('");
    std::string name(text_.substr(start, pos_ - start));
    auto it = vars_.find(name);
    if (it == vars_.end()) throw BadParameters("unbound parameter '" + name + "'");
    return it->second;
  }
  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool eat(char c) {
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  [[noreturn]] void fail(const std::string& what) const { throw SyntaxError(pos_, what); }

  std::string_view text_;
  const std::map<std::string, long>& vars_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline long eval_param_expr(std::string_view expr, const std::map<std::string, long>& vars) {
  return detail::ExprEval(expr, vars).run();
}

/// Replaces every {expr} by its integer value, e.g. "x^2 - y^{n-alpha}".
inline std::string substitute_params(std::string_view text, const std::map<std::string, long>& vars) {
  std::string out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (text[i] == '}') throw SyntaxError(i, "'{' before '}'");
    if (text[i] != '{') {
      out += text[i++];
      continue;
    }
    std::size_t close = text.find('}', i);
    if (close == std::string_view::npos) throw SyntaxError(text.size(), "'}'");
    out += std::to_string(eval_param_expr(text.substr(i + 1, close - i - 1), vars));
    i = close + 1;
  }
  return out;
}

/// "k=v" with an integer value.
inline std::pair<std::string, long> parse_param_binding(const std::string& kv) {
  auto eq = kv.find('=');
  if (eq == std::string::npos || eq == 0) throw BadParameters("parameter binding '" + kv + "' is not k=v");
  std::string key = kv.substr(0, eq);
  std::string value = kv.substr(eq + 1);
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(value, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used == 0 || used != value.size()) throw BadParameters("parameter '" + key + "' needs an integer value");
  return {key, v};
}

struct AnalyzeOptions {
  std::string ideal;
  std::map<std::string, long> params;
  std::string field = "q";
  std::uint64_t seed = 0;
  bool rees = false;
  bool timing = false;
};

struct AnalysisResult {
  std::string input;
  AGReport report;
  std::optional<nlohmann::json> rees;
  std::optional<Staircase> staircase;
  std::optional<double> timing_ms;
};

namespace detail {

template <Field F>
nlohmann::json rees_json(const IdealHandle<Rational>& input, const FieldConfig& cfg) {
  std::vector<Polynomial<F>> gens;
  for (const auto& g : input.generators()) gens.push_back(convert_field<F>(g, cfg));
  ReesPresentation<F> p = rees_defining_ideal(IdealHandle<F>(Ring::base(), std::move(gens), cfg));
  nlohmann::json j;
  j["generators"] = print_all(p.defining_gens);
  nlohmann::json bideg = nlohmann::json::array();
  for (auto [d, e] : p.bidegrees) bideg.push_back({d, e});
  j["bidegrees"] = bideg;
  j["t_degrees"] = p.t_degrees();
  return j;
}

}  // namespace detail

inline AnalysisResult run_analysis(const AnalyzeOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  AnalysisResult out;
  out.input = substitute_params(opts.ideal, opts.params);
  const FieldConfig cfg = FieldConfig::parse(opts.field);
  IdealHandle<Rational> ideal(Ring::base(), parse_ideal_spec<Rational>(out.input));
  ClassifyConfig config;
  config.field = cfg;
  config.seed = opts.seed;
  out.report = classify(ideal, config);
  out.staircase = staircase_of(ideal);
  if (opts.rees) {
    out.rees = cfg.is_rational() ? detail::rees_json<Rational>(ideal, cfg) : detail::rees_json<ModP>(ideal, cfg);
  }
  if (opts.timing) {
    out.timing_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  }
  return out;
}

inline nlohmann::json refutation_json(const RefutationData& r) {
  return {{"mu_IJ", r.mu_ij},   {"mu_mJ", r.mu_mj},   {"mu_J", r.mu_j},
          {"threshold", r.threshold}, {"min_sum", r.min_sum}, {"rank_I", r.rank_i},
          {"rank_m", r.rank_m}, {"trials", r.trials}, {"seed", r.seed},
          {"primes", r.primes}, {"failure_bound", r.failure_bound}};
}

/// Fixed key set; absent parts are null.
inline nlohmann::json report_json(const AnalysisResult& a) {
  const AGReport& r = a.report;
  nlohmann::json j;
  j["schema"] = kSchema;
  j["version"] = kVersion;
  j["input"] = a.input;
  j["ideal"] = r.ideal;
  j["field"] = r.field;
  j["seed"] = r.seed;
  j["verdict"] = to_string(r.verdict);
  j["order"] = r.order;
  j["mu"] = r.mu;
  j["colength"] = r.colength;
  j["contracted"] = r.contracted;
  j["integrally_closed"] = r.integrally_closed ? nlohmann::json(*r.integrally_closed) : nlohmann::json(nullptr);
  j["closure_gap"] = r.closure_gap ? nlohmann::json(*r.closure_gap) : nlohmann::json(nullptr);
  j["reduction"] = nullptr;
  if (r.reduction) {
    j["reduction"] = {{"q", r.reduction->q},
                      {"reduction_number", r.reduction->reduction_number},
                      {"stable", r.reduction->stable},
                      {"strategy", r.reduction->strategy}};
  }
  j["colon"] = nullptr;
  if (r.colon) j["colon"] = {{"generators", r.colon->gens}, {"order", r.colon->order}, {"mu", r.colon->mu}};
  j["witness"] = nullptr;
  if (r.witness) j["witness"] = {{"f", r.witness->f}, {"g", r.witness->g}, {"h", r.witness->h}};
  j["refutation"] = r.refutation ? refutation_json(*r.refutation) : nlohmann::json(nullptr);
  j["notes"] = r.notes;
  j["rees"] = a.rees ? *a.rees : nlohmann::json(nullptr);
  j["timing_ms"] = a.timing_ms ? nlohmann::json(*a.timing_ms) : nlohmann::json(nullptr);
  return j;
}

inline std::string join_ideal(const std::vector<std::string>& gens) {
  std::string out = "(";
  for (std::size_t i = 0; i < gens.size(); ++i) out += (i != 0 ? ", " : "") + gens[i];
  return out + ")";
}

inline std::string report_pretty(const AnalysisResult& a) {
  const AGReport& r = a.report;
  std::ostringstream os;
  os << "ideal       " << join_ideal(r.ideal) << "\n";
  os << "field       " << r.field << "  seed " << r.seed << "\n";
  os << "verdict     " << to_string(r.verdict) << "\n";
  os << "invariants  o=" << r.order << " mu=" << r.mu << " colength=" << r.colength
     << " contracted=" << (r.contracted ? "yes" : "no");
  if (r.integrally_closed) os << " integrally_closed=" << (*r.integrally_closed ? "yes" : "no") << " gap=" << *r.closure_gap;
  os << "\n";
  if (r.reduction) {
    os << "reduction   Q=" << join_ideal(r.reduction->q) << " r=" << r.reduction->reduction_number
       << (r.reduction->stable ? " stable" : " not stable") << " (" << r.reduction->strategy << ")\n";
  }
  if (r.colon) os << "colon       J=Q:I=" << join_ideal(r.colon->gens) << " o=" << r.colon->order << " mu=" << r.colon->mu << "\n";
  if (r.witness) os << "witness     f=" << r.witness->f << "  g=" << r.witness->g << "  h=" << r.witness->h << "\n";
  if (r.refutation) {
    const auto& f = *r.refutation;
    os << "refutation  mu(IJ)=" << f.mu_ij << " mu(mJ)=" << f.mu_mj << " ranks=" << f.rank_i << "," << f.rank_m
       << " min_sum=" << f.min_sum << " threshold=" << f.threshold << " failure_bound=" << f.failure_bound << "\n";
  }
  for (const auto& n : r.notes) os << "note        " << n << "\n";
  if (a.rees) {
    os << "rees        ";
    for (const auto& g : (*a.rees)["generators"]) os << g.get<std::string>() << "; ";
    os << "T-degrees " << (*a.rees)["t_degrees"].dump() << "\n";
  }
  if (a.timing_ms) os << "timing_ms   " << *a.timing_ms << "\n";
  if (a.staircase && a.staircase->is_m_primary()) os << "staircase\n" << render_staircase(*a.staircase);
  return os.str();
}

}  // namespace agrees
