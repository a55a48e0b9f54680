//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/config.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <vector>

#include "fragit/error.hpp"
#include "fragit/patterns.hpp"

namespace fragit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

std::string lower(std::string_view s) {
  std::string out(s);
  std::transform(out.begin(), out.end(), out.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  return out;
}

[[noreturn]] void config_fail(int line, const std::string &what) {
  throw Error(ErrorKind::kConfig,
              line > 0 ? "line " + std::to_string(line) + ": " + what : what);
}

bool to_bool(std::string_view value, const std::string &key, int line) {
  const auto v = lower(value);
  if (v == "true" || v == "yes" || v == "on" || v == "1")
    return true;
  if (v == "false" || v == "no" || v == "off" || v == "0")
    return false;
  config_fail(line, "key '" + key + "': expected true or false, got '" +
                        std::string(value) + "'");
}

int to_int(std::string_view value, const std::string &key, int line) {
  value = trim(value);
  int out = 0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() || ptr != value.data() + value.size())
    config_fail(line, "key '" + key + "': expected an integer, got '" +
                          std::string(value) + "'");
  return out;
}

double to_positive(std::string_view value, const std::string &key, int line) {
  value = trim(value);
  double out = 0.0;
  auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), out);
  if (value.empty() || ec != std::errc() ||
      ptr != value.data() + value.size() || !std::isfinite(out) || out <= 0.0)
    config_fail(line, "key '" + key + "': expected a positive number, got '" +
                          std::string(value) + "'");
  return out;
}

struct PatternKeys {
  std::vector<NamedPattern> fragmentation;
  std::vector<NamedPattern> protection;
  std::optional<std::string> glycine;
  std::optional<bool> builtin;
  bool any = false;
};

} // namespace

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof buf, value);
  if (ec != std::errc())
    throw Error(ErrorKind::kInternal, "cannot format number");
  return std::string(buf, ptr);
}

ExplicitPairs parse_pairs(std::string_view text, int line) {
  ExplicitPairs pairs;
  std::size_t start = 0;
  text = trim(text);
  while (start < text.size()) {
    auto end = text.find(';', start);
    if (end == std::string_view::npos)
      end = text.size();
    const auto entry = trim(text.substr(start, end - start));
    start = end + 1;
    if (entry.empty()) {
      if (end == text.size() || start >= text.size())
        break;
      config_fail(line, "key 'pairs': empty entry");
    }
    const auto comma = entry.find(',');
    if (comma == std::string_view::npos)
      config_fail(line, "key 'pairs': entry '" + std::string(entry) +
                            "' is not of the form A,B");
    const auto lhs = trim(entry.substr(0, comma));
    const auto rhs = trim(entry.substr(comma + 1));
    auto parse = [&](std::string_view v) {
      int out = 0;
      auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), out);
      if (v.empty() || ec != std::errc() || ptr != v.data() + v.size() ||
          out < 1)
        config_fail(line, "key 'pairs': '" + std::string(v) +
                              "' is not a positive atom index");
      return out;
    };
    pairs.emplace_back(parse(lhs), parse(rhs));
  }
  return pairs;
}

std::string format_pairs(const ExplicitPairs &pairs) {
  std::string out;
  for (auto [a, b] : pairs)
    out += std::to_string(a) + "," + std::to_string(b) + ";";
  return out;
}

std::string write_config(const JobSettings &s) {
  std::string out;
  out += "[fragmentation]\n";
  out += std::string("protection = ") + (s.use_protection ? "true" : "false") + "\n";
  out += "groupsize = " + std::to_string(s.group_size) + "\n";
  out += std::string("mergeglycine = ") + (s.merge_glycine ? "true" : "false") + "\n";
  out += std::string("builtinpatterns = ") +
         (s.pattern_overrides ? "false" : "true") + "\n";
  if (s.pattern_overrides) {
    for (const auto &p : s.pattern_overrides->fragmentation)
      out += "pattern." + p.name + " = " + p.smarts + "\n";
    out += "glycinepattern = " + s.pattern_overrides->glycine + "\n";
  }
  out += "\n[protection]\n";
  if (s.pattern_overrides) {
    for (const auto &p : s.pattern_overrides->protection)
      out += "pattern." + p.name + " = " + p.smarts + "\n";
  }
  out += "\n[output]\n";
  if (s.central_fragment)
    out += "centralfragment = " + std::to_string(*s.central_fragment) + "\n";
  if (s.boundary_distance)
    out += "boundaries = " + format_double(*s.boundary_distance) + "\n";
  if (s.active_distance)
    out += "activedistance = " + format_double(*s.active_distance) + "\n";
  if (s.buffer_distance)
    out += "bufferdistance = " + format_double(*s.buffer_distance) + "\n";
  out += std::string("pymol = ") + (s.emit_pymol ? "true" : "false") + "\n";
  out += std::string("jmol = ") + (s.emit_jmol ? "true" : "false") + "\n";
  out += "scf = " + s.gamess.scf_type + "\n";
  out += "basis = " + s.gamess.basis + "\n";
  out += "memory = " + std::to_string(s.gamess.memory_per_core) + "\n";
  out += "runtype = " + s.gamess.run_type + "\n";
  out += "\n[explicitfragmentpairs]\n";
  out += "pairs = " + format_pairs(s.explicit_pairs) + "\n";
  return out;
}

JobSettings read_config(std::string_view text, JobSettings s) {
  static const std::map<std::string, std::set<std::string>> kKeys = {
      {"fragmentation",
       {"protection", "groupsize", "mergeglycine", "builtinpatterns",
        "glycinepattern"}},
      {"protection", {}},
      {"output",
       {"centralfragment", "boundaries", "activedistance", "bufferdistance",
        "pymol", "jmol", "scf", "basis", "memory", "runtype"}},
      {"explicitfragmentpairs", {"pairs"}},
  };

  PatternKeys patterns;
  std::set<std::pair<std::string, std::string>> seen;
  std::string section;
  int line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto nl = text.find('\n', pos);
    if (nl == std::string_view::npos)
      nl = text.size();
    const auto raw = text.substr(pos, nl - pos);
    pos = nl + 1;
    ++line_no;
    const auto line = trim(raw);
    if (line.empty() || line.front() == '#' || line.front() == ';')
      continue;
    if (line.front() == '[') {
      if (line.back() != ']')
        config_fail(line_no, "malformed section header");
      section = lower(trim(line.substr(1, line.size() - 2)));
      if (kKeys.count(section) == 0)
        config_fail(line_no, "unknown section [" + section + "]");
      continue;
    }
    const auto eq = line.find('=');
    if (eq == std::string_view::npos)
      config_fail(line_no, "expected 'key = value'");
    if (section.empty())
      config_fail(line_no, "key outside of any section");
    const auto raw_key = trim(line.substr(0, eq));
    const std::string key = lower(raw_key);
    const auto value = trim(line.substr(eq + 1));
    if (!seen.insert({section, key}).second)
      config_fail(line_no, "duplicate key '" + key + "' in [" + section + "]");

    const bool is_pattern = key.rfind("pattern.", 0) == 0 &&
                            (section == "fragmentation" || section == "protection");
    if (is_pattern) {
      const std::string name(raw_key.substr(8));
      if (name.empty())
        config_fail(line_no, "pattern key needs a name");
      if (value.empty())
        config_fail(line_no, "pattern '" + name + "' is empty");
      auto &list = section == "fragmentation" ? patterns.fragmentation
                                              : patterns.protection;
      list.push_back({name, std::string(value)});
      patterns.any = true;
      continue;
    }
    if (kKeys.at(section).count(key) == 0)
      config_fail(line_no, "unknown key '" + key + "' in [" + section + "]");

    if (key == "protection") {
      s.use_protection = to_bool(value, key, line_no);
    } else if (key == "groupsize") {
      s.group_size = to_int(value, key, line_no);
      if (s.group_size < 1)
        config_fail(line_no, "key 'groupsize' must be at least 1");
    } else if (key == "mergeglycine") {
      s.merge_glycine = to_bool(value, key, line_no);
    } else if (key == "builtinpatterns") {
      patterns.builtin = to_bool(value, key, line_no);
    } else if (key == "glycinepattern") {
      patterns.glycine = std::string(value);
      patterns.any = true;
    } else if (key == "centralfragment") {
      s.central_fragment = to_int(value, key, line_no);
      if (*s.central_fragment < 1)
        config_fail(line_no, "key 'centralfragment' must be at least 1");
    } else if (key == "boundaries") {
      s.boundary_distance = to_positive(value, key, line_no);
    } else if (key == "activedistance") {
      s.active_distance = to_positive(value, key, line_no);
    } else if (key == "bufferdistance") {
      s.buffer_distance = to_positive(value, key, line_no);
    } else if (key == "pymol") {
      s.emit_pymol = to_bool(value, key, line_no);
    } else if (key == "jmol") {
      s.emit_jmol = to_bool(value, key, line_no);
    } else if (key == "scf") {
      s.gamess.scf_type = std::string(value);
    } else if (key == "basis") {
      s.gamess.basis = std::string(value);
    } else if (key == "memory") {
      s.gamess.memory_per_core = to_int(value, key, line_no);
      if (s.gamess.memory_per_core < 8)
        config_fail(line_no, "key 'memory' must be at least 8 (MB)");
    } else if (key == "runtype") {
      s.gamess.run_type = std::string(value);
    } else if (key == "pairs") {
      s.explicit_pairs = parse_pairs(value, line_no);
    }
  }

  if (patterns.builtin.value_or(!patterns.any)) {
    if (patterns.any)
      config_fail(0, "patterns are listed but builtinpatterns = true");
    if (patterns.builtin)
      s.pattern_overrides.reset();
  } else {
    PatternSet set;
    set.fragmentation = std::move(patterns.fragmentation);
    set.protection = std::move(patterns.protection);
    set.glycine = patterns.glycine.value_or(kGlycinePattern);
    s.pattern_overrides = std::move(set);
  }
  return s;
}

} // namespace fragit
