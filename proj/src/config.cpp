// Copyright 2026 The catport Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "catport/config.hpp"

#include <cmath>
#include <fstream>
#include <limits>
#include <optional>
#include <set>
#include <sstream>

#include "catport/json_io.hpp"

namespace catport {

namespace {

using nlohmann::json;

const std::set<std::string> kKeys{
    "alpha", "beta",  "gamma",    "c_a",     "c_b",  "freq_ab", "freq_ta", "path",
    "mode",  "collapse", "displacement_phase", "dims", "label", "operator", "n",
    "m",     "sweep", "grid",     "trials",  "seed", "out",     "format"};

// Line of the first occurrence of "key" in the source text, 0 if absent.
std::size_t line_of(std::string_view text, const std::string& key) {
  const std::string quoted = "\"" + key + "\"";
  const auto pos = text.find(quoted);
  if (pos == std::string_view::npos) return 0;
  std::size_t line = 1;
  for (std::size_t i = 0; i < pos; ++i) line += text[i] == '\n';
  return line;
}

class Reader {
 public:
  Reader(const json& doc, std::string_view text) : doc_(doc), text_(text) {}

  [[noreturn]] void fail(const std::string& key, const std::string& what) const {
    std::ostringstream msg;
    msg << "config error";
    if (const auto line = line_of(text_, key)) msg << " (line " << line << ")";
    msg << ": key '" << key << "': " << what;
    throw ConfigError(msg.str());
  }

  const json* find(const std::string& key) const {
    auto it = doc_.find(key);
    return it == doc_.end() ? nullptr : &*it;
  }

  void number(const std::string& key, double& out) const {
    if (auto v = find(key)) {
      if (!v->is_number()) fail(key, "expected a number");
      out = v->get<double>();
      if (!std::isfinite(out)) fail(key, "must be finite");
    }
  }

  template <typename U>
  void unsigned_int(const std::string& key, U& out) const {
    if (auto v = find(key)) {
      if (!v->is_number_unsigned()) fail(key, "expected a nonnegative integer");
      const auto raw = v->get<std::uint64_t>();
      if (raw > std::numeric_limits<U>::max()) fail(key, "out of range");
      out = static_cast<U>(raw);
    }
  }

  void string(const std::string& key, std::string& out) const {
    if (auto v = find(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      out = v->get<std::string>();
    }
  }

  void complex(const std::string& key, Complex& out) const {
    if (auto v = find(key)) {
      if (v->is_number()) {
        out = Complex(v->get<double>(), 0.0);
      } else if (v->is_array() && v->size() == 2 && (*v)[0].is_number() &&
                 (*v)[1].is_number()) {
        out = Complex((*v)[0].get<double>(), (*v)[1].get<double>());
      } else {
        fail(key, "expected a number or [re, im]");
      }
    }
  }

  void row(const std::string& key, FrequencyRow& out) const {
    if (auto v = find(key)) {
      if (!v->is_array() || v->size() != 2 || !(*v)[0].is_number() || !(*v)[1].is_number()) {
        fail(key, "expected [omega_a/chi, omega_b/chi]");
      }
      out = {(*v)[0].get<double>(), (*v)[1].get<double>()};
      for (double r : {out.omega_a_over_chi, out.omega_b_over_chi}) {
        if (r != 1.0 && r != 2.0) fail(key, "ratios must be 1 or 2");
      }
    }
  }

  template <typename T, typename Parse>
  void choice(const std::string& key, T& out, Parse parse, const char* allowed) const {
    if (auto v = find(key)) {
      if (!v->is_string()) fail(key, "expected a string");
      auto parsed = parse(v->get<std::string>());
      if (!parsed) fail(key, std::string("expected one of ") + allowed);
      out = *parsed;
    }
  }

 private:
  const json& doc_;
  std::string_view text_;
};

std::optional<RunMode> parse_mode(std::string_view s) {
  if (s == "enumerate") return RunMode::kEnumerate;
  if (s == "sample") return RunMode::kSample;
  return std::nullopt;
}

std::optional<BellOperator> parse_operator(std::string_view s) {
  if (s == "PbDa") return BellOperator::kParityBDisplaceA;
  if (s == "PaDb") return BellOperator::kParityADisplaceB;
  return std::nullopt;
}

std::optional<SweepKind> parse_sweep(std::string_view s) {
  if (s == "fidelity") return SweepKind::kFidelity;
  if (s == "residual") return SweepKind::kResidual;
  return std::nullopt;
}

std::optional<std::string> parse_path(std::string_view s) {
  if (s == "ideal" || s == "homodyne") return std::string(s);
  return std::nullopt;
}

std::optional<std::string> parse_format(std::string_view s) {
  if (s == "csv" || s == "json") return std::string(s);
  return std::nullopt;
}

}  // namespace

std::string_view operator_name(BellOperator op) {
  return op == BellOperator::kParityBDisplaceA ? "PbDa" : "PaDb";
}

std::string_view sweep_name(SweepKind k) {
  return k == SweepKind::kFidelity ? "fidelity" : "residual";
}

void validate(const ExperimentConfig& cfg) {
  auto fail = [](const std::string& key, const std::string& what) {
    throw ConfigError("config error: key '" + key + "': " + what);
  };
  if (!(cfg.alpha > 0)) fail("alpha", "must be positive");
  if (!(cfg.beta > 0)) fail("beta", "must be positive");
  if (!(cfg.gamma > 0)) fail("gamma", "must be positive");
  const double n2 = std::norm(cfg.c_a) + std::norm(cfg.c_b);
  if (!std::isfinite(n2) || std::abs(n2 - 1.0) > 1e-9) {
    fail("c_a", "|c_a|^2 + |c_b|^2 must equal 1");
  }
  if (cfg.grid.empty()) fail("grid", "must not be empty");
  for (double g : cfg.grid) {
    if (!(g > 0) || !std::isfinite(g)) fail("grid", "amplitudes must be positive");
  }
  if (cfg.trials == 0) fail("trials", "must be at least 1");
  if (cfg.dims == 1) fail("dims", "must be 0 (automatic) or at least 2");
  if (cfg.format != "csv" && cfg.format != "json") fail("format", "expected csv or json");
  if (cfg.path != "ideal" && cfg.path != "homodyne") fail("path", "expected ideal or homodyne");
}

ExperimentConfig parse_config(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ConfigError(std::string("config error: malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw ConfigError("config error: top level must be an object");

  Reader r(doc, text);
  for (const auto& [key, value] : doc.items()) {
    if (!kKeys.count(key)) r.fail(key, "unknown key");
  }

  ExperimentConfig cfg;
  r.number("alpha", cfg.alpha);
  r.number("beta", cfg.beta);
  r.number("gamma", cfg.gamma);
  r.complex("c_a", cfg.c_a);
  r.complex("c_b", cfg.c_b);
  r.row("freq_ab", cfg.freq_ab);
  r.row("freq_ta", cfg.freq_ta);
  r.choice("path", cfg.path, parse_path, "ideal, homodyne");
  r.choice("mode", cfg.mode, parse_mode, "enumerate, sample");
  r.choice("collapse", cfg.collapse, parse_collapse, "auto, analytic, fock, branch");
  r.choice("displacement_phase", cfg.displacement_phase, parse_phase, "quarter_pi, half_pi");
  r.unsigned_int("dims", cfg.dims);
  r.choice("label", cfg.label, parse_label, "PhiPlus, PhiMinus, PsiPlus, PsiMinus");
  r.choice("operator", cfg.op, parse_operator, "PbDa, PaDb");
  r.unsigned_int("n", cfg.n);
  r.unsigned_int("m", cfg.m);
  r.choice("sweep", cfg.sweep, parse_sweep, "fidelity, residual");
  if (auto v = r.find("grid")) {
    if (!v->is_array()) r.fail("grid", "expected an array of amplitudes");
    cfg.grid.clear();
    for (const auto& g : *v) {
      if (!g.is_number()) r.fail("grid", "expected an array of amplitudes");
      cfg.grid.push_back(g.get<double>());
    }
  }
  r.unsigned_int("trials", cfg.trials);
  r.unsigned_int("seed", cfg.seed);
  r.string("out", cfg.out);
  r.choice("format", cfg.format, parse_format, "csv, json");

  try {
    validate(cfg);
  } catch (const ConfigError& e) {
    // Re-raise with the line of the offending key.
    const std::string msg = e.what();
    const auto q1 = msg.find('\'');
    const auto q2 = msg.find('\'', q1 + 1);
    const std::string key = msg.substr(q1 + 1, q2 - q1 - 1);
    r.fail(key, msg.substr(msg.find(':', q2) + 2));
  }
  return cfg;
}

ExperimentConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ConfigError("config error: cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_config(buf.str());
}

nlohmann::json to_json(const ExperimentConfig& cfg) {
  auto row = [](const FrequencyRow& r) {
    return json::array({r.omega_a_over_chi, r.omega_b_over_chi});
  };
  return {{"alpha", cfg.alpha},
          {"beta", cfg.beta},
          {"gamma", cfg.gamma},
          {"c_a", complex_to_json(cfg.c_a)},
          {"c_b", complex_to_json(cfg.c_b)},
          {"freq_ab", row(cfg.freq_ab)},
          {"freq_ta", row(cfg.freq_ta)},
          {"path", cfg.path},
          {"mode", cfg.mode == RunMode::kEnumerate ? "enumerate" : "sample"},
          {"collapse", collapse_name(cfg.collapse)},
          {"displacement_phase", phase_name(cfg.displacement_phase)},
          {"dims", cfg.dims},
          {"label", label_name(cfg.label)},
          {"operator", operator_name(cfg.op)},
          {"n", cfg.n},
          {"m", cfg.m},
          {"sweep", sweep_name(cfg.sweep)},
          {"grid", cfg.grid},
          {"trials", cfg.trials},
          {"seed", cfg.seed},
          {"out", cfg.out},
          {"format", cfg.format}};
}

std::string serialize(const ExperimentConfig& cfg) { return to_json(cfg).dump(2) + "\n"; }

}  // namespace catport
