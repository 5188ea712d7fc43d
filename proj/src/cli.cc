// Copyright 2026 The chainc authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "chainc/cli.h"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "chainc/catalog.h"
#include "chainc/component_model.h"
#include "chainc/expansion.h"
#include "chainc/grammar.h"
#include "chainc/graph_emit.h"
#include "chainc/yang_io.h"

namespace chainc {
namespace {

namespace fs = std::filesystem;

enum class Format { kDsl, kJson, kXml };

struct Options {
  std::string input;
  std::string format;
  std::string to;
  std::string output;
  bool ast = false;
  std::string mode = "first";
  std::string cost;
  std::vector<std::string> prefs;
  std::uint64_t cap = kDefaultEnumerationCap;
  std::string out_dir;
  bool count_only = false;
  std::string store;
  std::string name;
};

// Signals a bad invocation detected after flag parsing.
Error Usage(const std::string& message) { return Error(Code::kUsage, message); }

// Files are produced only after every computation succeeded.
struct PendingFile {
  fs::path path;
  std::string content;
};

class Command {
 public:
  Command(const Options& options, std::istream& in, std::ostream& out,
          std::ostream& err)
      : options_(options), in_(in), out_(out), err_(err) {}

  int RunParse() {
    ServiceSpec spec = Parse(ReadInput(options_.input));
    Emit(options_.ast ? DumpAst(spec) : Render(spec) + "\n");
    return Finish();
  }

  int RunValidate() {
    std::vector<Diagnostic> diagnostics;
    Format format = InputFormat();
    std::string text = ReadInput(options_.input);
    ComponentModel model;
    if (format == Format::kDsl) {
      ServiceSpec spec = Parse(text);
      diagnostics = ValidateSpec(spec);
      if (HasErrors(diagnostics)) return Report(diagnostics);
      model = Normalize(spec);
    } else {
      DecodedModel decoded = Decode(text);
      diagnostics = decoded.warnings;
      model = std::move(decoded.model);
    }
    if (std::optional<CatalogStore> store = Store(false)) {
      model = ResolveLinks(model, *store);
    }
    for (Diagnostic& d : ValidateModel(model)) diagnostics.push_back(d);
    if (HasErrors(diagnostics)) return Report(diagnostics);
    Report(diagnostics);
    out_ << "ok\n";
    return kExitOk;
  }

  int RunConvert() {
    ComponentModel model = LoadModel(/*resolve=*/false);
    Emit(Serialize(model, ToFormat()));
    return Finish();
  }

  int RunExpand() {
    ComponentModel model = LoadModel(/*resolve=*/true);
    if (options_.count_only) {
      out_ << CountExpansions(model).str() << "\n";
      return kExitOk;
    }
    ExpansionPolicy policy = Policy();
    Expansion expansion = Expand(model, policy);
    Report(expansion.warnings);

    std::string stats;
    std::string dots;
    for (size_t i = 0; i < expansion.graphs.size(); ++i) {
      const ForwardingGraph& graph = expansion.graphs[i];
      stats += FormatStats(ComputeGraphStats(graph));
      if (expansion.cost) {
        std::ostringstream cost;
        cost << *expansion.cost;
        stats += " cost=" + cost.str();
      }
      stats += "\n";
      if (!options_.out_dir.empty()) {
        char name[32];
        std::snprintf(name, sizeof(name), "g%04zu.dot", i);
        pending_.push_back({fs::path(options_.out_dir) / name, ToDot(graph)});
      } else {
        dots += ToDot(graph);
      }
    }
    if (options_.out_dir.empty()) Emit(dots);
    int code = Finish();
    if (code == kExitOk) out_ << stats;
    return code;
  }

  int RunDot() {
    ComponentModel model = LoadModel(/*resolve=*/true);
    Expansion expansion = Expand(model, {});
    Report(expansion.warnings);
    Emit(ToDot(expansion.graphs.front()));
    return Finish();
  }

  int RunCatalogAdd() {
    ComponentModel model = LoadModel(/*resolve=*/false);
    Store(true)->Add(options_.name, model);
    out_ << "added " << options_.name << "\n";
    return kExitOk;
  }

  int RunCatalogGet() {
    ComponentModel model = Store(true)->Get(options_.name);
    Emit(Serialize(model, ToFormat()));
    return Finish();
  }

  int RunCatalogList() {
    for (const CatalogRow& row : ListCatalog(*Store(true))) {
      out_ << row.name << "\t";
      if (row.stats) {
        out_ << FormatStats(*row.stats);
      } else {
        out_ << "error " << FormatDiagnostic(*row.error);
      }
      out_ << "\n";
    }
    return kExitOk;
  }

  int RunCatalogResolve() {
    ComponentModel model = LoadModel(/*resolve=*/false);
    model = ResolveLinks(model, *Store(true));
    Emit(Serialize(model, ToFormat()));
    return Finish();
  }

 private:
  static std::optional<Format> FormatByName(const std::string& name) {
    static const std::map<std::string, Format> kNames = {
        {"dsl", Format::kDsl}, {"json", Format::kJson}, {"xml", Format::kXml}};
    auto it = kNames.find(name);
    if (it == kNames.end()) return std::nullopt;
    return it->second;
  }

  Format InputFormat() const {
    if (!options_.format.empty()) return *FormatByName(options_.format);
    if (options_.input == "-") {
      throw Usage("reading standard input requires --format");
    }
    std::string ext = fs::path(options_.input).extension().string();
    if (ext == ".sfc") return Format::kDsl;
    if (ext == ".json") return Format::kJson;
    if (ext == ".xml") return Format::kXml;
    throw Usage("cannot infer the format of '" + options_.input +
                "'; use --format");
  }

  Format ToFormat() const {
    return options_.to.empty() ? Format::kJson : *FormatByName(options_.to);
  }

  std::string ReadInput(const std::string& path) {
    if (path == "-") {
      std::ostringstream buffer;
      buffer << in_.rdbuf();
      return buffer.str();
    }
    std::ifstream file(path, std::ios::binary);
    if (!file) throw Error(Code::kIo, "cannot open '" + path + "'");
    std::ostringstream buffer;
    buffer << file.rdbuf();
    return buffer.str();
  }

  DecodedModel Decode(const std::string& text) {
    DocumentFormat format = InputFormat() == Format::kXml ? DocumentFormat::kXml
                                                          : DocumentFormat::kJson;
    return FromInstance({format, text});
  }

  ComponentModel LoadModel(bool resolve) {
    Format format = InputFormat();
    std::string text = ReadInput(options_.input);
    ComponentModel model;
    if (format == Format::kDsl) {
      ServiceSpec spec = Parse(text);
      std::vector<Diagnostic> diagnostics = ValidateSpec(spec);
      if (HasErrors(diagnostics)) {
        throw Error(Code::kInvalidSpec, "invalid service specification", "",
                    std::move(diagnostics));
      }
      model = Normalize(spec);
    } else {
      DecodedModel decoded = Decode(text);
      Report(decoded.warnings);
      model = std::move(decoded.model);
    }
    if (resolve && !ExternalReferences(model).empty()) {
      if (std::optional<CatalogStore> store = Store(false)) {
        model = ResolveLinks(model, *store);
      }
    }
    return model;
  }

  std::optional<CatalogStore> Store(bool required) const {
    if (!options_.store.empty()) return CatalogStore(options_.store);
    if (const char* env = std::getenv("CHAINC_CATALOG"); env && *env) {
      return CatalogStore(env);
    }
    if (required) throw Usage("no catalog store: pass --store or set "
                              "CHAINC_CATALOG");
    return std::nullopt;
  }

  ExpansionPolicy Policy() const {
    static const std::map<std::string, ExpansionMode> kModes = {
        {"first", ExpansionMode::kFirst},
        {"enumerate", ExpansionMode::kEnumerate},
        {"select", ExpansionMode::kSelect},
        {"annotate", ExpansionMode::kAnnotate}};
    ExpansionPolicy policy;
    policy.mode = kModes.at(options_.mode);
    policy.cap = options_.cap;
    if (!options_.prefs.empty() && options_.cost != "adjacency-pref") {
      throw Usage("--pref requires --cost adjacency-pref");
    }
    if (options_.cost == "edge-count") {
      policy.cost = CostModel::EdgeCount();
    } else if (options_.cost == "adjacency-pref") {
      std::vector<OrderPreference> prefs;
      for (const std::string& pref : options_.prefs) {
        size_t colon = pref.find(':');
        std::string before = pref.substr(0, colon);
        std::string after =
            colon == std::string::npos ? "" : pref.substr(colon + 1);
        if (!IsValidFunctionName(before) || !IsValidFunctionName(after)) {
          throw Usage("--pref expects BEFORE:AFTER, got '" + pref + "'");
        }
        prefs.push_back({FunctionName(before), FunctionName(after)});
      }
      policy.cost = CostModel::AdjacencyPreference(std::move(prefs));
    }
    if (policy.mode == ExpansionMode::kSelect && !policy.cost) {
      throw Usage("--mode select requires --cost");
    }
    return policy;
  }

  static std::string Serialize(const ComponentModel& model, Format format) {
    switch (format) {
      case Format::kDsl:
        return Render(Inline(model)) + "\n";
      case Format::kJson:
        return ToInstance(model, DocumentFormat::kJson).body;
      case Format::kXml:
        return ToInstance(model, DocumentFormat::kXml).body;
    }
    return {};
  }

  // Queues `text` for `-o` or standard output.
  void Emit(std::string text) {
    if (options_.output.empty() || options_.output == "-") {
      stdout_text_ += text;
    } else {
      pending_.push_back({options_.output, std::move(text)});
    }
  }

  int Finish() {
    for (const PendingFile& file : pending_) {
      std::error_code ec;
      if (file.path.has_parent_path()) {
        fs::create_directories(file.path.parent_path(), ec);
      }
      std::ofstream stream(file.path, std::ios::binary | std::ios::trunc);
      stream << file.content;
      if (!stream) throw Error(Code::kIo, "cannot write " + file.path.string());
    }
    out_ << stdout_text_;
    return kExitOk;
  }

  int Report(const std::vector<Diagnostic>& diagnostics) {
    for (const Diagnostic& d : diagnostics) err_ << FormatDiagnostic(d) << "\n";
    return HasErrors(diagnostics) ? kExitDiagnostics : kExitOk;
  }

  const Options& options_;
  std::istream& in_;
  std::ostream& out_;
  std::ostream& err_;
  std::string stdout_text_;
  std::vector<PendingFile> pending_;
};

int ExitCodeFor(Code code) {
  switch (code) {
    case Code::kIo:
      return kExitIo;
    case Code::kCapExceeded:
      return kExitCapExceeded;
    case Code::kUsage:
      return kExitUsage;
    default:
      return kExitDiagnostics;
  }
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Compiles flexible service chain specifications."};
  app.name("chainc");
  app.require_subcommand(1);
  const std::vector<std::string> kFormats = {"dsl", "json", "xml"};

  auto add_input = [&](CLI::App* sub) {
    sub->add_option("input", o.input, "Input file, or - for standard input")
        ->required();
    sub->add_option("--format", o.format, "Input format")
        ->check(CLI::IsMember(kFormats));
  };
  auto add_output = [&](CLI::App* sub) {
    sub->add_option("-o,--output", o.output, "Output file (default stdout)");
  };
  auto add_to = [&](CLI::App* sub, bool required) {
    auto* opt = sub->add_option("--to", o.to, "Output format")
                    ->check(CLI::IsMember(kFormats));
    if (required) opt->required();
  };
  auto add_store = [&](CLI::App* sub) {
    sub->add_option("--store", o.store,
                    "Catalog directory (default $CHAINC_CATALOG)");
  };

  CLI::App* parse = app.add_subcommand("parse", "Print the canonical DSL");
  add_input(parse);
  add_output(parse);
  parse->add_flag("--ast", o.ast, "Print the syntax tree instead");

  CLI::App* validate = app.add_subcommand("validate", "Check a specification");
  add_input(validate);
  add_store(validate);

  CLI::App* convert = app.add_subcommand("convert", "Translate formats");
  add_input(convert);
  add_to(convert, true);
  add_output(convert);

  CLI::App* expand = app.add_subcommand("expand", "Build forwarding graphs");
  add_input(expand);
  add_output(expand);
  add_store(expand);
  expand->add_option("--mode", o.mode, "Expansion mode")
      ->check(CLI::IsMember({"first", "enumerate", "select", "annotate"}));
  expand->add_option("--cost", o.cost, "Cost model for select mode")
      ->check(CLI::IsMember({"edge-count", "adjacency-pref"}));
  expand->add_option("--pref", o.prefs, "BEFORE:AFTER ordering preference");
  expand->add_option("--cap", o.cap, "Enumeration cap")
      ->check(CLI::PositiveNumber);
  expand->add_option("--out-dir", o.out_dir, "Write g0000.dot, ... here")
      ->excludes("--output");
  expand->add_flag("--count-only", o.count_only,
                   "Print the number of candidate graphs");

  CLI::App* dot = app.add_subcommand("dot", "DOT of the first expansion");
  add_input(dot);
  add_output(dot);
  add_store(dot);

  CLI::App* catalog = app.add_subcommand("catalog", "Manage a catalog");
  catalog->require_subcommand(1);
  CLI::App* cat_add = catalog->add_subcommand("add", "Store a model");
  cat_add->add_option("name", o.name, "Entry name")->required();
  add_input(cat_add);
  add_store(cat_add);
  CLI::App* cat_get = catalog->add_subcommand("get", "Print an entry");
  cat_get->add_option("name", o.name, "Entry name")->required();
  add_to(cat_get, false);
  add_output(cat_get);
  add_store(cat_get);
  CLI::App* cat_list = catalog->add_subcommand("list", "List entries");
  add_store(cat_list);
  CLI::App* cat_resolve =
      catalog->add_subcommand("resolve", "Import linked entries");
  add_input(cat_resolve);
  add_to(cat_resolve, false);
  add_output(cat_resolve);
  add_store(cat_resolve);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << CodeName(Code::kUsage) << ": " << e.what() << "\n";
    return kExitUsage;
  }

  Command command(o, in, out, err);
  try {
    if (parse->parsed()) return command.RunParse();
    if (validate->parsed()) return command.RunValidate();
    if (convert->parsed()) return command.RunConvert();
    if (expand->parsed()) return command.RunExpand();
    if (dot->parsed()) return command.RunDot();
    if (cat_add->parsed()) return command.RunCatalogAdd();
    if (cat_get->parsed()) return command.RunCatalogGet();
    if (cat_list->parsed()) return command.RunCatalogList();
    if (cat_resolve->parsed()) return command.RunCatalogResolve();
  } catch (const Error& error) {
    for (const Diagnostic& d : error.diagnostics()) {
      err << FormatDiagnostic(d) << "\n";
    }
    return ExitCodeFor(error.code());
  }
  return kExitUsage;
}

}  // namespace chainc
