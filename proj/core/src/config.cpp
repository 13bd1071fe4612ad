// Copyright 2026 The Scramble Authors
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

#include "scramble/config.hpp"

#include <cctype>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <set>

#include "scramble/errors.hpp"

namespace scramble {

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

std::vector<std::string> split_list(const std::string& value) {
  std::vector<std::string> out;
  std::size_t start = 0;
  while (start <= value.size()) {
    const std::size_t comma = value.find(',', start);
    const std::string item = trim(std::string_view(value).substr(start, comma - start));
    if (!item.empty()) out.push_back(item);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

int to_int(const std::string& key, const std::string& text) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ArgumentError("config key '" + key + "': expected an integer, got '" + text + "'");
  return v;
}

double to_double(const std::string& key, const std::string& text) {
  double v = 0.0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    throw ArgumentError("config key '" + key + "': expected a number, got '" + text + "'");
  return v;
}

// "a..b" or a single integer; lists may mix both.
std::vector<int> parse_int_list(const std::string& key, const std::string& value) {
  std::vector<int> out;
  for (const auto& item : split_list(value)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(to_int(key, item));
      continue;
    }
    const int lo = to_int(key, trim(item.substr(0, dots)));
    const int hi = to_int(key, trim(item.substr(dots + 2)));
    if (hi < lo) throw ArgumentError("config key '" + key + "': empty range " + item);
    for (int v = lo; v <= hi; ++v) out.push_back(v);
  }
  return out;
}

// "a..b*<period>" expands to k*<period> for k = a..b.
std::vector<Period> parse_period_list(const std::string& value) {
  std::vector<Period> out;
  for (const auto& item : split_list(value)) {
    const auto dots = item.find("..");
    if (dots == std::string::npos) {
      out.push_back(Period::parse(item));
      continue;
    }
    const auto star = item.find('*', dots);
    if (star == std::string::npos) throw ArgumentError("tau range needs the form a..b*unit, got " + item);
    const int lo = to_int("tau", trim(item.substr(0, dots)));
    const int hi = to_int("tau", trim(item.substr(dots + 2, star - dots - 2)));
    const Period unit = Period::parse(item.substr(star + 1));
    const auto frac = unit.fraction();
    if (!frac) throw ArgumentError("tau range unit must be an exact multiple of pi");
    for (int k = lo; k <= hi; ++k) out.push_back(Period::pi_fraction(k * frac->first, frac->second));
  }
  return out;
}

bool parse_bool(const std::string& key, const std::string& v) {
  if (v == "on" || v == "true" || v == "yes" || v == "1") return true;
  if (v == "off" || v == "false" || v == "no" || v == "0") return false;
  throw ArgumentError("config key '" + key + "': expected on/off, got '" + v + "'");
}

std::string format(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

template <typename T, typename F>
std::string join(const std::vector<T>& items, F&& render) {
  std::string out;
  for (std::size_t i = 0; i < items.size(); ++i) {
    if (i) out += ", ";
    out += render(items[i]);
  }
  return out;
}

}  // namespace

ExperimentSpec parse_experiment_config(std::istream& in) {
  ExperimentSpec spec;
  spec.inits.clear();
  std::set<std::string> seen;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    const std::string body = trim(line);
    if (body.empty()) continue;
    const auto eq = body.find('=');
    if (eq == std::string::npos)
      throw ArgumentError("config line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(body.substr(0, eq));
    const std::string value = trim(body.substr(eq + 1));
    if (!seen.insert(key).second)
      throw ArgumentError("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");

    if (key == "model") {
      spec.model = parse_model_kind(value);
    } else if (key == "n") {
      spec.sizes = parse_int_list(key, value);
    } else if (key == "ell") {
      spec.ells = value == "all" ? std::vector<int>{} : parse_int_list(key, value);
    } else if (key == "tau") {
      spec.taus = parse_period_list(value);
    } else if (key == "init") {
      for (const auto& item : split_list(value)) spec.inits.push_back(parse_initial_state(item));
    } else if (key == "hx") {
      spec.h_x_values.clear();
      for (const auto& item : split_list(value)) spec.h_x_values.push_back(to_double(key, item));
    } else if (key == "J") {
      spec.J = to_double(key, value);
    } else if (key == "hz") {
      spec.h_z = to_double(key, value);
    } else if (key == "t1") {
      spec.t1 = to_int(key, value);
    } else if (key == "t2") {
      spec.t2 = to_int(key, value);
    } else if (key == "steps") {
      spec.steps = to_int(key, value);
    } else if (key == "dt") {
      spec.dt = to_double(key, value);
    } else if (key == "t_end") {
      spec.t_end = to_double(key, value);
    } else if (key == "fit") {
      spec.fit = parse_bool(key, value);
    } else if (key == "fit_delta") {
      spec.fit_options.delta = to_double(key, value);
    } else if (key == "fit_smoothing") {
      spec.fit_options.smoothing = to_int(key, value);
    } else if (key == "method") {
      if (value == "schmidt") spec.method = EntropyMethod::Schmidt;
      else if (value == "oracle") spec.method = EntropyMethod::PartialTrace;
      else throw ArgumentError("config key 'method': expected schmidt or oracle");
    } else {
      throw ArgumentError("config line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  if (seen.empty()) throw ArgumentError("empty experiment config");
  if (spec.inits.empty()) spec.inits = {InitialStateKind::AllUp};
  spec.validate();
  return spec;
}

ExperimentSpec load_experiment_config(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ArgumentError("cannot open config file " + path.string());
  return parse_experiment_config(in);
}

std::vector<std::pair<std::string, std::string>> describe_experiment(const ExperimentSpec& spec) {
  std::vector<std::pair<std::string, std::string>> out;
  out.emplace_back("model", std::string(to_string(spec.model)));
  out.emplace_back("n", join(spec.sizes, [](int v) { return std::to_string(v); }));
  out.emplace_back("ell", spec.ells.empty() ? "all" : join(spec.ells, [](int v) { return std::to_string(v); }));
  if (spec.model == ModelKind::Floquet)
    out.emplace_back("tau", join(spec.taus, [](const Period& p) { return p.to_string(); }));
  out.emplace_back("init", join(spec.inits, [](InitialStateKind k) { return std::string(to_string(k)); }));
  out.emplace_back("hx", join(spec.h_x_values, format));
  out.emplace_back("J", format(spec.J));
  out.emplace_back("hz", format(spec.h_z));
  out.emplace_back("t1", std::to_string(spec.t1));
  out.emplace_back("t2", std::to_string(spec.t2));
  if (spec.model == ModelKind::Floquet) {
    out.emplace_back("steps", std::to_string(spec.steps));
  } else {
    out.emplace_back("dt", format(spec.dt));
    out.emplace_back("t_end", format(spec.t_end));
  }
  out.emplace_back("fit", spec.fit ? "on" : "off");
  out.emplace_back("fit_delta", format(spec.fit_options.delta));
  out.emplace_back("fit_smoothing", std::to_string(spec.fit_options.smoothing));
  out.emplace_back("method", spec.method == EntropyMethod::Schmidt ? "schmidt" : "oracle");
  return out;
}

}  // namespace scramble
