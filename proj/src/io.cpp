//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <sstream>
#include <vector>

#include "fragit/elements.hpp"
#include "fragit/error.hpp"
#include "fragit/perception.hpp"

namespace fragit {
namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front())))
    s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back())))
    s.remove_suffix(1);
  return s;
}

// 1-based inclusive column range, clipped to the line.
std::string_view columns(std::string_view line, std::size_t first,
                         std::size_t last) {
  if (line.size() < first)
    return {};
  return line.substr(first - 1, std::min(last, line.size()) - first + 1);
}

[[noreturn]] void parse_fail(const std::string &what, std::size_t line_no) {
  throw Error(ErrorKind::kParse,
              "line " + std::to_string(line_no) + ": " + what);
}

double to_double(std::string_view field, const char *what,
                 std::size_t line_no) {
  field = trim(field);
  double value = 0.0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    parse_fail(std::string("bad ") + what + " '" + std::string(field) + "'",
               line_no);
  return value;
}

int to_int(std::string_view field, const char *what, std::size_t line_no) {
  field = trim(field);
  if (!field.empty() && field.front() == '+')
    field.remove_prefix(1);
  int value = 0;
  auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), value);
  if (field.empty() || ec != std::errc() || ptr != field.data() + field.size())
    parse_fail(std::string("bad ") + what + " '" + std::string(field) + "'",
               line_no);
  return value;
}

std::vector<std::string_view> split_lines(std::string_view text) {
  std::vector<std::string_view> lines;
  while (!text.empty()) {
    auto nl = text.find('\n');
    auto line = text.substr(0, nl);
    if (!line.empty() && line.back() == '\r')
      line.remove_suffix(1);
    lines.push_back(line);
    if (nl == std::string_view::npos)
      break;
    text.remove_prefix(nl + 1);
  }
  return lines;
}

int element_or_throw(std::string_view symbol, std::size_t line_no) {
  auto z = element_from_symbol(trim(symbol));
  if (!z)
    throw Error(ErrorKind::kUnsupportedElement,
                "line " + std::to_string(line_no) + ": unknown element '" +
                    std::string(trim(symbol)) + "'");
  return *z;
}

// Element from the atom-name field when columns 77-78 are blank.
int element_from_atom_name(std::string_view name_field, std::size_t line_no) {
  std::string field(name_field);
  field.resize(4, ' ');
  const char c0 = field[0];
  const char c1 = field[1];
  if (c0 == ' ' || std::isdigit(static_cast<unsigned char>(c0)))
    return element_or_throw(std::string(1, c1), line_no);
  // Four-character hydrogen names such as HG21 start in column 13.
  if (c0 == 'H' && field[3] != ' ')
    return 1;
  if (std::isalpha(static_cast<unsigned char>(c1))) {
    auto two = element_from_symbol(field.substr(0, 2));
    if (two && covalent_radius(*two))
      return *two;
  }
  return element_or_throw(std::string(1, c0), line_no);
}

std::string read_file(const std::string &path) {
  std::error_code ec;
  if (!std::filesystem::is_regular_file(path, ec))
    throw Error(ErrorKind::kFileNotFound, "cannot open '" + path + "'");
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::kFileNotFound, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

} // namespace

std::optional<FileFormat> format_from_name(std::string_view name) {
  std::string lower(name);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](char c) {
    return static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  });
  if (lower == "pdb" || lower == "ent")
    return FileFormat::kPdb;
  if (lower == "xyz")
    return FileFormat::kXyz;
  if (lower == "sdf" || lower == "mol" || lower == "sd")
    return FileFormat::kSdf;
  return std::nullopt;
}

std::optional<FileFormat> format_from_extension(std::string_view path) {
  auto ext = std::filesystem::path(path).extension().string();
  if (ext.empty())
    return std::nullopt;
  return format_from_name(std::string_view(ext).substr(1));
}

Molecule parse_pdb(std::string_view text, int model_index, std::string name) {
  if (model_index < 1)
    throw Error(ErrorKind::kParse, "model index must be >= 1");
  const auto lines = split_lines(text);

  std::vector<Atom> atoms;
  std::map<int, int> serial_to_index;
  std::vector<std::pair<int, int>> conect;
  int model = 0;
  bool saw_model = false;
  bool in_wanted = true;

  for (std::size_t k = 0; k < lines.size(); ++k) {
    const auto line = lines[k];
    const std::size_t line_no = k + 1;
    const auto record = trim(columns(line, 1, 6));
    if (record == "MODEL") {
      saw_model = true;
      ++model;
      in_wanted = model == model_index;
      continue;
    }
    if (record == "ENDMDL") {
      in_wanted = false;
      continue;
    }
    if (record == "CONECT") {
      const int from = to_int(columns(line, 7, 11), "CONECT serial", line_no);
      for (std::size_t col = 12; col + 4 <= line.size() && col <= 27;
           col += 5) {
        auto field = trim(columns(line, col, col + 4));
        if (field.empty())
          continue;
        conect.emplace_back(from, to_int(field, "CONECT serial", line_no));
      }
      continue;
    }
    if (record != "ATOM" && record != "HETATM")
      continue;
    if (saw_model && !in_wanted)
      continue;
    if (line.size() < 54)
      parse_fail("coordinate record shorter than 54 columns", line_no);

    Atom atom;
    atom.position = {to_double(columns(line, 31, 38), "x coordinate", line_no),
                     to_double(columns(line, 39, 46), "y coordinate", line_no),
                     to_double(columns(line, 47, 54), "z coordinate", line_no)};
    const auto element_field = trim(columns(line, 77, 78));
    atom.element = element_field.empty()
                       ? element_from_atom_name(columns(line, 13, 16), line_no)
                       : element_or_throw(element_field, line_no);
    const auto charge_field = trim(columns(line, 79, 80));
    if (charge_field.size() == 2 &&
        std::isdigit(static_cast<unsigned char>(charge_field[0])) &&
        (charge_field[1] == '+' || charge_field[1] == '-')) {
      const int magnitude = charge_field[0] - '0';
      atom.formal_charge = charge_field[1] == '+' ? magnitude : -magnitude;
    }
    atom.name = std::string(trim(columns(line, 13, 16)));
    std::string residue(trim(columns(line, 18, 20)));
    residue += ' ';
    residue += trim(columns(line, 23, 26));
    residue += trim(columns(line, 27, 27));
    atom.residue_label = residue;
    atom.chain_label = std::string(trim(columns(line, 22, 22)));

    const auto serial_field = trim(columns(line, 7, 11));
    if (!serial_field.empty()) {
      int serial = 0;
      auto [ptr, ec] = std::from_chars(
          serial_field.data(), serial_field.data() + serial_field.size(),
          serial);
      if (ec == std::errc() &&
          ptr == serial_field.data() + serial_field.size())
        serial_to_index.emplace(serial, static_cast<int>(atoms.size()) + 1);
    }
    atoms.push_back(std::move(atom));
  }

  if (model < model_index && (saw_model || model_index > 1))
    throw Error(ErrorKind::kParse, "model " + std::to_string(model_index) +
                                       " requested but file has " +
                                       std::to_string(model));
  if (atoms.empty())
    throw Error(ErrorKind::kParse, "no ATOM/HETATM records");

  // Charges for N and O come from perception; other elements keep the
  // value from columns 79-80.
  for (auto &atom : atoms) {
    if (atom.element == 7 || atom.element == 8)
      atom.formal_charge = 0;
  }

  auto bonds = perceive_bonds(atoms);
  std::set<std::pair<int, int>> have;
  for (const auto &b : bonds)
    have.insert({b.a, b.b});
  for (auto [s, t] : conect) {
    auto i = serial_to_index.find(s);
    auto j = serial_to_index.find(t);
    if (i == serial_to_index.end() || j == serial_to_index.end() ||
        i->second == j->second)
      continue;
    auto key = bond_key(i->second, j->second);
    if (have.insert(key).second)
      bonds.push_back({key.first, key.second, 1});
  }
  return perceive_orders_and_charges(
      Molecule(std::move(atoms), std::move(bonds), std::move(name)));
}

Molecule parse_xyz(std::string_view text, std::string name) {
  const auto lines = split_lines(text);
  if (lines.empty() || trim(lines[0]).empty())
    throw Error(ErrorKind::kParse, "empty XYZ file");
  const int count = to_int(lines[0], "atom count", 1);
  if (count < 1)
    parse_fail("atom count must be positive", 1);
  if (lines.size() < static_cast<std::size_t>(count) + 2)
    throw Error(ErrorKind::kParse, "XYZ file declares " +
                                       std::to_string(count) +
                                       " atoms but has fewer lines");
  std::vector<Atom> atoms;
  for (int k = 0; k < count; ++k) {
    const std::size_t line_no = static_cast<std::size_t>(k) + 3;
    std::istringstream in{std::string(lines[line_no - 1])};
    std::string symbol, x, y, z;
    if (!(in >> symbol >> x >> y >> z))
      parse_fail("expected 'element x y z'", line_no);
    Atom atom;
    atom.element = element_or_throw(symbol, line_no);
    atom.position = {to_double(x, "x coordinate", line_no),
                     to_double(y, "y coordinate", line_no),
                     to_double(z, "z coordinate", line_no)};
    atoms.push_back(std::move(atom));
  }
  return perceive(std::move(atoms), std::move(name));
}

Molecule parse_sdf(std::string_view text, std::string name) {
  const auto lines = split_lines(text);
  if (lines.size() < 4)
    throw Error(ErrorKind::kParse, "SDF/MOL file shorter than its header");
  const auto counts = lines[3];
  if (counts.find("V3000") != std::string_view::npos)
    parse_fail("V3000 connection tables are not supported", 4);
  const int natoms = to_int(columns(counts, 1, 3), "atom count", 4);
  const int nbonds = to_int(columns(counts, 4, 6), "bond count", 4);
  if (natoms < 1)
    parse_fail("atom count must be positive", 4);
  if (lines.size() < 4 + static_cast<std::size_t>(natoms + nbonds))
    throw Error(ErrorKind::kParse, "SDF/MOL file truncated");
  if (name.empty())
    name = std::string(trim(lines[0]));

  std::vector<Atom> atoms;
  for (int k = 0; k < natoms; ++k) {
    const std::size_t line_no = 5 + static_cast<std::size_t>(k);
    const auto line = lines[line_no - 1];
    if (line.size() < 34)
      parse_fail("atom line shorter than 34 columns", line_no);
    Atom atom;
    atom.position = {to_double(columns(line, 1, 10), "x coordinate", line_no),
                     to_double(columns(line, 11, 20), "y coordinate", line_no),
                     to_double(columns(line, 21, 30), "z coordinate", line_no)};
    atom.element = element_or_throw(columns(line, 32, 34), line_no);
    const auto code_field = trim(columns(line, 37, 39));
    if (!code_field.empty()) {
      const int code = to_int(code_field, "charge code", line_no);
      if (code >= 1 && code <= 7 && code != 4)
        atom.formal_charge = 4 - code;
    }
    atoms.push_back(std::move(atom));
  }

  std::vector<Bond> bonds;
  for (int k = 0; k < nbonds; ++k) {
    const std::size_t line_no = 5 + static_cast<std::size_t>(natoms + k);
    const auto line = lines[line_no - 1];
    Bond bond;
    bond.a = to_int(columns(line, 1, 3), "bond atom", line_no);
    bond.b = to_int(columns(line, 4, 6), "bond atom", line_no);
    bond.order = to_int(columns(line, 7, 9), "bond order", line_no);
    if (bond.order < 1 || bond.order > 3)
      parse_fail("bond order " + std::to_string(bond.order) +
                     " unsupported (Kekule form required)",
                 line_no);
    if (bond.a < 1 || bond.a > natoms || bond.b < 1 || bond.b > natoms ||
        bond.a == bond.b)
      parse_fail("bond references a missing atom", line_no);
    bonds.push_back(bond);
  }

  // M  CHG lines reset all charge-code charges.
  bool reset = false;
  for (std::size_t k = 4 + static_cast<std::size_t>(natoms + nbonds);
       k < lines.size(); ++k) {
    const auto line = lines[k];
    const std::size_t line_no = k + 1;
    if (line.rfind("M  END", 0) == 0)
      break;
    if (line.rfind("M  CHG", 0) != 0)
      continue;
    if (!reset) {
      for (auto &atom : atoms)
        atom.formal_charge = 0;
      reset = true;
    }
    std::istringstream in{std::string(line.substr(6))};
    int entries = 0;
    if (!(in >> entries))
      parse_fail("bad M  CHG entry count", line_no);
    for (int e = 0; e < entries; ++e) {
      int idx = 0, q = 0;
      if (!(in >> idx >> q) || idx < 1 || idx > natoms)
        parse_fail("bad M  CHG entry", line_no);
      atoms[static_cast<std::size_t>(idx - 1)].formal_charge = q;
    }
  }
  try {
    return Molecule(std::move(atoms), std::move(bonds), std::move(name));
  } catch (const Error &e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Molecule read_structure(const InputDocument &doc) {
  auto format = doc.format ? doc.format : format_from_extension(doc.source_path);
  if (!format)
    throw Error(ErrorKind::kUsage, "cannot infer the format of '" +
                                       doc.source_path +
                                       "'; use .pdb, .xyz, .sdf or .mol");
  const std::string text = read_file(doc.source_path);
  if (trim(text).empty())
    throw Error(ErrorKind::kParse, "'" + doc.source_path + "' is empty");
  auto name = std::filesystem::path(doc.source_path).stem().string();
  switch (*format) {
  case FileFormat::kPdb:
    return parse_pdb(text, doc.model_index, name);
  case FileFormat::kXyz:
    return parse_xyz(text, name);
  case FileFormat::kSdf:
    return parse_sdf(text, name);
  }
  throw Error(ErrorKind::kInternal, "unhandled format");
}

} // namespace fragit
