//
// fragit - Copyright 2026 The fragit Authors.
// SPDX-License-Identifier: Apache-2.0
//

#include "fragit/cli.hpp"

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <fmt/format.h>

#include "fragit/config.hpp"
#include "fragit/error.hpp"
#include "fragit/fragmenter.hpp"
#include "fragit/io.hpp"
#include "fragit/patterns.hpp"
#include "fragit/regions.hpp"
#include "fragit/writers.hpp"

namespace fragit {
namespace {

constexpr const char *kExitCodes =
    "Exit codes:\n"
    "  0  success\n"
    "  2  usage error\n"
    "  3  input or config file not found\n"
    "  4  structure parse error or unsupported element\n"
    "  5  bond/charge perception failure\n"
    "  6  SMARTS pattern error\n"
    "  7  configuration error or invalid explicit pair\n"
    "  8  output could not be written\n"
    " 70  internal error\n";

std::string read_text(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw Error(ErrorKind::kFileNotFound, "cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_text(const std::string &path, const std::string &text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (out)
    out << text;
  if (!out)
    throw Error(ErrorKind::kWrite, "cannot write '" + path + "'");
}

std::string sibling(const std::string &input, const char *ext) {
  return std::filesystem::path(input).stem().string() + ext;
}

} // namespace

ParsedArgs parse_args(const std::vector<std::string> &args) {
  CLI::App app{"Fragment a molecular structure with SMARTS patterns and write "
               "a GAMESS FMO input file.",
               "fragit"};
  app.footer(kExitCodes);

  std::string input, output, format, make_config, use_config;
  std::string pymol_file, jmol_file, scf, basis;
  int model = 1, group = 1, central = 0, memory = 0;
  double boundary = 0, active = 0, buffer = 0;
  bool disable = false, merge = false, pymol = false, jmol = false;

  app.add_option("input", input, "Structure file (.pdb, .xyz, .sdf, .mol)");
  auto *o_output = app.add_option("-o,--output", output,
                                  "GAMESS input to write (default: <stem>.inp)");
  auto *o_format = app.add_option("--format", format, "Override input format")
                       ->check(CLI::IsMember({"pdb", "xyz", "sdf", "mol"}));
  auto *o_model = app.add_option("--model", model, "PDB model to read")
                      ->check(CLI::PositiveNumber);
  auto *o_disable = app.add_flag("--disable-protection", disable,
                                 "Do not apply protection patterns");
  auto *o_merge = app.add_flag("--merge-glycine", merge,
                               "Merge glycine into the preceding fragment");
  auto *o_group = app.add_option("-g,--g", group,
                                 "Group N consecutive fragments");
  auto *o_central = app.add_option("--output-central-fragment", central,
                                   "Central fragment for layers/regions");
  auto *o_boundary = app.add_option("--output-boundaries", boundary,
                                    "Layer-2 distance from the central "
                                    "fragment (angstrom)");
  auto *o_active = app.add_option("--output-active-distance", active,
                                  "Active-region distance (angstrom)");
  auto *o_buffer = app.add_option("--output-buffer-distance", buffer,
                                  "Buffer-region distance (angstrom)");
  auto *o_make = app.add_option("--make-config", make_config,
                                "Write the effective settings and exit");
  auto *o_use = app.add_option("--use-config", use_config,
                               "Read settings from a config file");
  auto *o_pymol = app.add_flag("--pymol", pymol, "Also write a PyMOL script");
  auto *o_jmol = app.add_flag("--jmol", jmol, "Also write a Jmol script");
  auto *o_pymol_file = app.add_option("--pymol-file", pymol_file,
                                      "PyMOL script path (implies --pymol)");
  auto *o_jmol_file = app.add_option("--jmol-file", jmol_file,
                                     "Jmol script path (implies --jmol)");
  auto *o_scf = app.add_option("--scf", scf, "SCF type (default RHF)");
  auto *o_basis = app.add_option("--basis", basis, "Basis set (default 3-21G)");
  auto *o_memory = app.add_option("--memory", memory,
                                  "Memory per core in MB (default 1000)");

  ParsedArgs parsed;
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  if (!reversed.empty())
    reversed.pop_back();
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp &) {
    parsed.show_help = true;
    parsed.help_text = app.help();
    return parsed;
  } catch (const CLI::ParseError &e) {
    throw Error(ErrorKind::kUsage, e.what());
  }

  JobSettings &s = parsed.settings;
  if (o_use->count() > 0) {
    s = read_config(read_text(use_config));
    s.config_in = use_config;
  }
  s.input_path = input;
  if (o_output->count() > 0)
    s.output_path = output;
  if (o_format->count() > 0)
    s.input_format = format;
  if (o_model->count() > 0)
    s.model_index = model;
  if (o_disable->count() > 0)
    s.use_protection = false;
  if (o_merge->count() > 0)
    s.merge_glycine = true;
  if (o_group->count() > 0)
    s.group_size = group;
  if (o_central->count() > 0)
    s.central_fragment = central;
  if (o_boundary->count() > 0)
    s.boundary_distance = boundary;
  if (o_active->count() > 0)
    s.active_distance = active;
  if (o_buffer->count() > 0)
    s.buffer_distance = buffer;
  if (o_pymol->count() > 0)
    s.emit_pymol = true;
  if (o_jmol->count() > 0)
    s.emit_jmol = true;
  if (o_pymol_file->count() > 0) {
    s.emit_pymol = true;
    s.pymol_path = pymol_file;
  }
  if (o_jmol_file->count() > 0) {
    s.emit_jmol = true;
    s.jmol_path = jmol_file;
  }
  if (o_scf->count() > 0)
    s.gamess.scf_type = scf;
  if (o_basis->count() > 0)
    s.gamess.basis = basis;
  if (o_memory->count() > 0)
    s.gamess.memory_per_core = memory;
  if (o_make->count() > 0)
    s.config_out = make_config;

  validate_settings(s);
  return parsed;
}

void validate_settings(const JobSettings &s) {
  auto fail = [](const std::string &what) {
    throw Error(ErrorKind::kUsage, what);
  };
  if (s.group_size < 1)
    fail("--g needs a positive integer");
  if (s.gamess.memory_per_core < 8)
    fail("--memory must be at least 8 MB");
  if (s.central_fragment && *s.central_fragment < 1)
    fail("--output-central-fragment must be at least 1");
  for (auto [value, flag] :
       {std::pair{s.boundary_distance, "--output-boundaries"},
        std::pair{s.active_distance, "--output-active-distance"},
        std::pair{s.buffer_distance, "--output-buffer-distance"}}) {
    if (value && !(*value > 0.0))
      fail(std::string(flag) + " must be a positive distance");
  }
  if ((s.active_distance || s.buffer_distance) &&
      (!s.central_fragment || !s.boundary_distance))
    fail("--output-active-distance and --output-buffer-distance require "
         "--output-central-fragment and --output-boundaries");
  if (s.active_distance.has_value() != s.buffer_distance.has_value())
    fail("--output-active-distance and --output-buffer-distance must be "
         "given together");
  if (s.central_fragment.has_value() != s.boundary_distance.has_value())
    fail("--output-central-fragment and --output-boundaries must be given "
         "together");
  if (!s.config_out && s.input_path.empty())
    fail("no input structure given (see --help)");
}

int run(const JobSettings &s, std::ostream &out, std::ostream &err) {
  try {
    validate_settings(s);
    if (s.config_out) {
      JobSettings snapshot = s;
      if (!snapshot.pattern_overrides)
        snapshot.pattern_overrides = builtin_patterns();
      write_text(*s.config_out, write_config(snapshot));
      out << "wrote " << *s.config_out << "\n";
      return 0;
    }

    InputDocument doc;
    doc.source_path = s.input_path;
    doc.model_index = s.model_index;
    if (s.input_format)
      doc.format = format_from_name(*s.input_format);
    const Molecule mol = read_structure(doc);
    const Fragmentation f = fragment(mol, s);

    std::optional<RegionAssignment> regions;
    if (s.central_fragment) {
      regions = assign_layers(mol, f, *s.central_fragment, *s.boundary_distance);
      if (s.active_distance)
        regions = assign_fd_regions(mol, f, *s.central_fragment,
                                    *s.active_distance, *s.buffer_distance,
                                    *regions);
    }

    const std::string deck = write_gamess_fmo(mol, f, regions, s.gamess);
    std::vector<std::pair<std::string, std::string>> files;
    files.emplace_back(s.output_path.empty() ? sibling(s.input_path, ".inp")
                                             : s.output_path,
                       deck);
    if (s.emit_pymol)
      files.emplace_back(s.pymol_path.empty() ? sibling(s.input_path, ".pml")
                                              : s.pymol_path,
                         write_pymol_script(mol, f, regions, s.input_path));
    if (s.emit_jmol)
      files.emplace_back(s.jmol_path.empty() ? sibling(s.input_path, ".jmol")
                                             : s.jmol_path,
                         write_jmol_script(mol, f, regions, s.input_path));
    for (const auto &[path, text] : files)
      write_text(path, text);

    out << fmt::format("structure  {}\n", s.input_path);
    out << fmt::format("atoms      {}\n", mol.size());
    out << fmt::format("N_frag     {}\n", f.size());
    out << fmt::format("N_A^min    {}\n", f.min_size());
    out << fmt::format("N_A^max    {}\n", f.max_size());
    out << fmt::format("Q          {}\n", mol.total_formal_charge());
    out << fmt::format("cuts       {}\n", f.cut_bonds.size());
    out << (regions ? "fragment  atoms  charge  layer  region\n"
                    : "fragment  atoms  charge\n");
    for (std::size_t k = 0; k < f.size(); ++k) {
      out << fmt::format("{:>8}  {:>5}  {:>6}", k + 1, f.fragments[k].size(),
                         f.charges[k]);
      if (regions)
        out << fmt::format("  {:>5}  {}", regions->layer[k],
                           fd_region_name(regions->fd[k]));
      out << "\n";
    }
    for (const auto &w : f.warnings)
      out << "warning: " << w << "\n";
    for (const auto &[path, text] : files)
      out << "wrote " << path << "\n";
    return 0;
  } catch (const Error &e) {
    err << "fragit: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  } catch (const std::exception &e) {
    err << "fragit: internal error: " << e.what() << "\n";
    return exit_code_for(ErrorKind::kInternal);
  }
}

int run_cli(const std::vector<std::string> &args, std::ostream &out,
            std::ostream &err) {
  ParsedArgs parsed;
  try {
    parsed = parse_args(args);
  } catch (const Error &e) {
    err << "fragit: " << error_kind_name(e.kind()) << ": " << e.what() << "\n";
    return exit_code_for(e.kind());
  }
  if (parsed.show_help) {
    out << parsed.help_text;
    return 0;
  }
  return run(parsed.settings, out, err);
}

} // namespace fragit
