// Copyright 2026 The FacetForge Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.h"

#include <algorithm>
#include <csignal>
#include <cstdlib>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "facetforge/error.h"
#include "facetforge/index.h"
#include "facetforge/ontology_io.h"
#include "facetforge/service.h"
#include "facetforge/validator.h"

namespace facetforge::cli {
namespace {

// Last input opened; prefixes diagnostics.
std::string g_current_input;

// Reads a whole file; "-" means standard input.
std::string read_input(const std::string& path) {
  g_current_input = path;
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
    return ss.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorCode::kIo, "cannot open '" + path + "'");
  ss << in.rdbuf();
  if (in.bad()) throw Error(ErrorCode::kIo, "cannot read '" + path + "'");
  return ss.str();
}

Ontology load(const std::string& path, std::ostream& err) {
  ParseOutcome outcome = parse_ontology(read_input(path));
  for (const ParseWarning& w : outcome.warnings) {
    err << path << ":" << w.location.line << ":" << w.location.column
        << ": warning: " << w.code << ": " << w.message << "\n";
  }
  return std::move(outcome.ontology);
}

HttpServer* g_server = nullptr;

void on_signal(int) {
  if (g_server != nullptr) g_server->stop();
}

struct Options {
  std::string file;
  std::string to;
  std::string ontology;
  std::string text_file;
  bool json = false;
  bool plain = false;
  bool fold_plurals = false;
  bool case_sensitive = false;
  std::optional<int> port;
  std::string ontologies_dir;
  std::string host = "127.0.0.1";
  std::string cors_origin = "*";
};

NormalizationConfig normalization(const Options& o) {
  NormalizationConfig config;
  config.fold_case = !o.case_sensitive;
  config.fold_plurals = o.fold_plurals;
  return config;
}

int do_validate(const Options& o, std::ostream& out, std::ostream& err) {
  const ValidationReport report = validate(load(o.file, err));
  out << report_to_json(report);
  return report.pass ? kExitOk : kExitValidationErrors;
}

int do_convert(const Options& o, std::ostream& out, std::ostream& err) {
  const Ontology ontology = load(o.file, err);
  out << serialize_ontology(
      ontology, o.to == "ttl" ? OntologyFormat::kTurtle : OntologyFormat::kJson);
  return kExitOk;
}

int do_stats(const Options& o, std::ostream& out, std::ostream& err) {
  out << facet_counts_to_json(stats(load(o.file, err)));
  return kExitOk;
}

int do_index(const Options& o, std::ostream& out, std::ostream& err) {
  const Ontology ontology = load(o.ontology, err);
  const MatchAutomaton automaton = build_automaton(ontology, normalization(o));
  const DocumentIndexResult result =
      index_document(automaton, read_input(o.text_file));
  out << (o.plain ? index_result_to_text(result)
                  : index_result_to_json(result));
  return kExitOk;
}

int do_serve(Options o, std::ostream& err) {
  if (!o.port) {
    const char* env = std::getenv("FACETFORGE_PORT");
    if (env != nullptr && *env != '\0') {
      char* end = nullptr;
      const long value = std::strtol(env, &end, 10);
      if (*end != '\0' || value < 0 || value > 65535) {
        err << "error: FACETFORGE_PORT is not a port number: " << env << "\n";
        return kExitUsage;
      }
      o.port = static_cast<int>(value);
    } else {
      o.port = 8080;
    }
  }

  OntologyRegistry::LoadReport report;
  auto registry = std::make_shared<const OntologyRegistry>(
      OntologyRegistry::load_directory(o.ontologies_dir, normalization(o),
                                       &report));
  for (const std::string& line : report.loaded) err << "loaded " << line << "\n";
  for (const std::string& line : report.skipped) {
    err << "skipped " << line << "\n";
  }

  HttpServer server(std::make_shared<const Service>(registry), o.cors_origin);
  const int port = server.bind(o.host, *o.port);
  if (port < 0) {
    err << "error: cannot bind " << o.host << ":" << *o.port << "\n";
    return kExitInputError;
  }
  err << "listening on http://" << o.host << ":" << port << "\n" << std::flush;

  g_server = &server;
  auto old_int = std::signal(SIGINT, on_signal);
  auto old_term = std::signal(SIGTERM, on_signal);
  const bool ok = server.listen();
  std::signal(SIGINT, old_int);
  std::signal(SIGTERM, old_term);
  g_server = nullptr;
  return ok ? kExitOk : kExitInputError;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  CLI::App app{"Faceted materials ontology toolkit", "facetforge"};
  app.require_subcommand(1);
  Options o;

  auto* validate_cmd =
      app.add_subcommand("validate", "Check facet rules; exit 1 on errors");
  validate_cmd->add_option("file", o.file, "Ontology (.json or .ttl)")
      ->required();

  auto* convert_cmd = app.add_subcommand("convert", "Convert between formats");
  convert_cmd->add_option("file", o.file, "Ontology (.json or .ttl)")
      ->required();
  convert_cmd->add_option("--to", o.to, "Output format")
      ->required()
      ->check(CLI::IsMember({"json", "ttl"}));

  auto* stats_cmd = app.add_subcommand("stats", "Concept and label counts");
  stats_cmd->add_option("file", o.file, "Ontology (.json or .ttl)")
      ->required();

  auto* index_cmd = app.add_subcommand("index", "Extract concepts from text");
  index_cmd->add_option("--ontology", o.ontology, "Ontology file")->required();
  index_cmd->add_option("textfile", o.text_file, "UTF-8 text, or - for stdin")
      ->required();
  auto* json_flag = index_cmd->add_flag("--json", o.json, "JSON (default)");
  index_cmd->add_flag("--plain", o.plain, "One line per hit")
      ->excludes(json_flag);
  index_cmd->add_flag("--fold-plurals", o.fold_plurals,
                      "Drop a trailing s from longer tokens");
  index_cmd->add_flag("--case-sensitive", o.case_sensitive,
                      "Match without case folding");

  auto* serve_cmd = app.add_subcommand("serve", "Run the HTTP service");
  serve_cmd->add_option("--port", o.port, "Port (default $FACETFORGE_PORT or 8080)")
      ->check(CLI::Range(0, 65535));
  serve_cmd->add_option("--ontologies", o.ontologies_dir,
                        "Directory of .json/.ttl ontologies")
      ->required();
  serve_cmd->add_option("--host", o.host, "Bind address");
  serve_cmd->add_option("--cors-origin", o.cors_origin,
                        "Access-Control-Allow-Origin value");
  serve_cmd->add_flag("--fold-plurals", o.fold_plurals,
                      "Drop a trailing s from longer tokens");
  serve_cmd->add_flag("--case-sensitive", o.case_sensitive,
                      "Match without case folding");

  auto active = [&app]() -> const CLI::App* {
    return app.get_subcommands().empty() ? &app : app.get_subcommands().front();
  };
  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << active()->help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    err << "usage: " << active()->help();
    return kExitUsage;
  }

  g_current_input.clear();
  try {
    if (validate_cmd->parsed()) return do_validate(o, out, err);
    if (convert_cmd->parsed()) return do_convert(o, out, err);
    if (stats_cmd->parsed()) return do_stats(o, out, err);
    if (index_cmd->parsed()) return do_index(o, out, err);
    if (serve_cmd->parsed()) return do_serve(o, err);
  } catch (const std::exception& e) {
    err << "error: ";
    if (!g_current_input.empty()) err << g_current_input << ": ";
    err << e.what() << "\n";
    return kExitInputError;
  }
  return kExitUsage;
}

}  // namespace facetforge::cli
