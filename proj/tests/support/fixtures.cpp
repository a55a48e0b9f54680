//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fixtures.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <map>
#include <memory>
#include <sstream>

#include "fragit/config.hpp"
#include "fragit/io.hpp"

namespace fixtures {

namespace fs = std::filesystem;

std::string data_path(const std::string &relative) {
  return (fs::path(FRAGIT_DATA_DIR) / relative).string();
}

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const fragit::Molecule &load(const std::string &file) {
  static std::map<std::string, std::unique_ptr<fragit::Molecule>> cache;
  auto &slot = cache[file];
  if (!slot) {
    fragit::InputDocument doc;
    doc.source_path = data_path("fixtures/" + file);
    slot = std::make_unique<fragit::Molecule>(fragit::read_structure(doc));
  }
  return *slot;
}

const std::vector<std::pair<std::string, fragit::Molecule>> &corpus() {
  static const auto molecules = [] {
    std::vector<std::pair<std::string, fragit::Molecule>> out;
    for (const auto &e : fs::directory_iterator(data_path("corpus")))
      if (e.path().extension() == ".sdf")
        out.emplace_back(e.path().stem().string(),
                         fragit::parse_sdf(read_text(e.path().string()),
                                           e.path().stem().string()));
    std::sort(out.begin(), out.end(),
              [](const auto &a, const auto &b) { return a.first < b.first; });
    return out;
  }();
  return molecules;
}

Row row(const fragit::Fragmentation &f) {
  int q = 0;
  for (int c : f.charges)
    q += c;
  return {f.size(), f.min_size(), f.max_size(), q};
}

std::string to_string(const Row &r) {
  return "(" + std::to_string(r.n_frag) + "," + std::to_string(r.min_size) +
         "," + std::to_string(r.max_size) + ") Q=" + std::to_string(r.charge);
}

fragit::JobSettings settings_for(const std::string &file) {
  const fs::path conf =
      fs::path(data_path("fixtures/" + file)).replace_extension(".conf");
  if (fs::exists(conf))
    return fragit::read_config(read_text(conf.string()));
  return {};
}

} // namespace fixtures
