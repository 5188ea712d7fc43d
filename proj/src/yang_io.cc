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

#include "chainc/yang_io.h"

#include <algorithm>
#include <array>
#include <set>
#include <sstream>
#include <utility>

#include <boost/property_tree/ptree.hpp>
#include <boost/property_tree/xml_parser.hpp>

#include "json.hpp"
#include "overloaded.h"

namespace chainc {
namespace {

using internal::Overloaded;
using Json = nlohmann::json;
using OrderedJson = nlohmann::ordered_json;

constexpr std::string_view kSpecification = "specification";
constexpr std::string_view kStartingComponent = "starting-component";
constexpr std::string_view kServiceComponent = "service-component";
constexpr std::string_view kComponentIdentifier = "component-identifier";
constexpr std::string_view kCompositions = "compositions";
constexpr std::string_view kCompositionIdentifier = "composition-identifier";
constexpr std::string_view kSequenceFunctions = "sequence-functions";
constexpr std::string_view kBestBindingFunctions = "best-binding-functions";
constexpr std::string_view kAllBindingsFunctions = "all-bindings-functions";
constexpr std::string_view kSplitterFunction = "splitter-function";
constexpr std::string_view kOptionalBestBinding = "optional-best-binding";
constexpr std::string_view kOutgoingBranches = "outgoing-branches";
constexpr std::string_view kBranchId = "branch-id";
constexpr std::string_view kComposition = "composition";
constexpr std::string_view kReplications = "replications";
constexpr std::string_view kPassLeaf = "string";
constexpr std::string_view kPassValue = "pass";
constexpr std::string_view kSingleFunction = "single-function";

std::string RootKey() {
  return std::string(kYangModule) + ":" + std::string(kSpecification);
}

// ---------------------------------------------------------------------------
// Encoding

OrderedJson FunctionArray(const std::vector<FunctionName>& functions) {
  OrderedJson out = OrderedJson::array();
  for (const FunctionName& f : functions) out.push_back(f.str());
  return out;
}

OrderedJson EncodeComposition(const flat::Composition& composition) {
  OrderedJson out = OrderedJson::object();
  out[kCompositionIdentifier] = composition.id.str();
  std::visit(
      Overloaded{
          [&](const flat::Sequence& s) {
            out[kSequenceFunctions] = FunctionArray(s.functions);
          },
          [&](const flat::BestBinding& b) {
            out[kBestBindingFunctions] = FunctionArray(b.functions);
          },
          [&](const flat::AllBindings& a) {
            out[kAllBindingsFunctions] = FunctionArray(a.functions);
          },
          [&](const flat::Split& s) {
            out[kSplitterFunction] = s.splitter.str();
            if (!s.pre.empty()) out[kOptionalBestBinding] = FunctionArray(s.pre);
            OrderedJson branches = OrderedJson::array();
            for (const flat::Branch& branch : s.branches) {
              OrderedJson b = OrderedJson::object();
              b[kBranchId] = branch.id;
              if (const auto* normal =
                      std::get_if<flat::NormalBranch>(&branch.kind)) {
                b[kComposition] = normal->component.str();
                if (normal->replications != 1) {
                  b[kReplications] = normal->replications;
                }
              } else {
                b[kPassLeaf] = kPassValue;
              }
              branches.push_back(std::move(b));
            }
            out[kOutgoingBranches] = std::move(branches);
          },
          [&](const flat::Single& s) { out[kSingleFunction] = s.function.str(); },
          [&](const flat::LinkRef& l) { out[kComposition] = l.target.str(); },
      },
      composition.body);
  return out;
}

std::string EncodeJson(const ComponentModel& model) {
  OrderedJson spec = OrderedJson::object();
  spec[kStartingComponent] = model.starting_component.str();
  OrderedJson components = OrderedJson::array();
  for (const flat::Component& component : model.components) {
    OrderedJson c = OrderedJson::object();
    c[kComponentIdentifier] = component.id.str();
    OrderedJson compositions = OrderedJson::array();
    for (const flat::Composition& composition : component.compositions) {
      compositions.push_back(EncodeComposition(composition));
    }
    c[kCompositions] = std::move(compositions);
    components.push_back(std::move(c));
  }
  spec[kServiceComponent] = std::move(components);
  OrderedJson root = OrderedJson::object();
  root[RootKey()] = std::move(spec);
  return root.dump(2) + "\n";
}

std::string XmlEscape(std::string_view text) {
  std::string out;
  out.reserve(text.size());
  for (char c : text) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

class XmlWriter {
 public:
  explicit XmlWriter(int depth) : depth_(depth) {}

  void Open(std::string_view name) {
    Indent();
    out_ << '<' << name << ">\n";
    ++depth_;
  }
  void Close(std::string_view name) {
    --depth_;
    Indent();
    out_ << "</" << name << ">\n";
  }
  void Leaf(std::string_view name, std::string_view value) {
    Indent();
    out_ << '<' << name << '>' << XmlEscape(value) << "</" << name << ">\n";
  }
  void Leaves(std::string_view name, const std::vector<FunctionName>& values) {
    for (const FunctionName& v : values) Leaf(name, v.str());
  }
  std::string str() const { return out_.str(); }

 private:
  void Indent() {
    for (int i = 0; i < depth_; ++i) out_ << "  ";
  }

  std::ostringstream out_;
  int depth_;
};

std::string EncodeXml(const ComponentModel& model) {
  XmlWriter w(1);
  w.Leaf(kStartingComponent, model.starting_component.str());
  for (const flat::Component& component : model.components) {
    w.Open(kServiceComponent);
    w.Leaf(kComponentIdentifier, component.id.str());
    for (const flat::Composition& composition : component.compositions) {
      w.Open(kCompositions);
      w.Leaf(kCompositionIdentifier, composition.id.str());
      std::visit(
          Overloaded{
              [&](const flat::Sequence& s) {
                w.Leaves(kSequenceFunctions, s.functions);
              },
              [&](const flat::BestBinding& b) {
                w.Leaves(kBestBindingFunctions, b.functions);
              },
              [&](const flat::AllBindings& a) {
                w.Leaves(kAllBindingsFunctions, a.functions);
              },
              [&](const flat::Split& s) {
                w.Leaf(kSplitterFunction, s.splitter.str());
                w.Leaves(kOptionalBestBinding, s.pre);
                for (const flat::Branch& branch : s.branches) {
                  w.Open(kOutgoingBranches);
                  w.Leaf(kBranchId, std::to_string(branch.id));
                  if (const auto* normal =
                          std::get_if<flat::NormalBranch>(&branch.kind)) {
                    w.Leaf(kComposition, normal->component.str());
                    if (normal->replications != 1) {
                      w.Leaf(kReplications,
                             std::to_string(normal->replications));
                    }
                  } else {
                    w.Leaf(kPassLeaf, kPassValue);
                  }
                  w.Close(kOutgoingBranches);
                }
              },
              [&](const flat::Single& s) {
                w.Leaf(kSingleFunction, s.function.str());
              },
              [&](const flat::LinkRef& l) {
                w.Leaf(kComposition, l.target.str());
              },
          },
          composition.body);
      w.Close(kCompositions);
    }
    w.Close(kServiceComponent);
  }

  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n<";
  out += kSpecification;
  out += " xmlns=\"";
  out += kYangNamespace;
  out += "\">\n";
  out += w.str();
  out += "</";
  out += kSpecification;
  out += ">\n";
  return out;
}

// ---------------------------------------------------------------------------
// Decoding

[[noreturn]] void Fail(Code code, const std::string& message,
                       const std::string& path) {
  throw Error(code, message, path);
}

// Rejects duplicate member names, which the DOM parser would silently merge.
class DuplicateKeyCheck : public nlohmann::json_sax<Json> {
 public:
  bool null() override { return true; }
  bool boolean(bool) override { return true; }
  bool number_integer(number_integer_t) override { return true; }
  bool number_unsigned(number_unsigned_t) override { return true; }
  bool number_float(number_float_t, const string_t&) override { return true; }
  bool string(string_t&) override { return true; }
  bool binary(binary_t&) override { return true; }
  bool start_object(std::size_t) override {
    keys_.emplace_back();
    return true;
  }
  bool key(string_t& key) override {
    if (!keys_.back().insert(key).second) {
      duplicate_ = key;
      return false;
    }
    return true;
  }
  bool end_object() override {
    keys_.pop_back();
    return true;
  }
  bool start_array(std::size_t) override { return true; }
  bool end_array() override { return true; }
  bool parse_error(std::size_t, const std::string&,
                   const nlohmann::detail::exception&) override {
    return false;
  }

  const std::string& duplicate() const { return duplicate_; }

 private:
  std::vector<std::set<std::string>> keys_;
  std::string duplicate_;
};

class Decoder {
 public:
  explicit Decoder(const ReadOptions& options) : options_(options) {}

  DecodedModel Run(const Json& root) {
    const Json& spec = Member(root, RootKey(), "");
    ExpectObject(spec, "/" + RootKey());
    std::string base = "/" + RootKey();
    Allow(spec, base, {kStartingComponent, kServiceComponent});

    DecodedModel out;
    out.model.starting_component = ComponentId(
        String(Member(spec, kStartingComponent, base), base + "/" +
                                                           std::string(kStartingComponent)));
    std::string list_path = base + "/" + std::string(kServiceComponent);
    const Json& components = Member(spec, kServiceComponent, base);
    ExpectArray(components, list_path);
    for (size_t i = 0; i < components.size(); ++i) {
      out.model.components.push_back(
          DecodeComponent(components[i], list_path + "/" + std::to_string(i)));
    }
    out.warnings = std::move(warnings_);
    return out;
  }

 private:
  const Json& Member(const Json& object, std::string_view key,
                     const std::string& path) {
    auto it = object.find(key);
    if (it == object.end()) {
      Fail(Code::kSchema, "missing '" + std::string(key) + "'",
           path.empty() ? "/" : path);
    }
    return *it;
  }

  void ExpectObject(const Json& value, const std::string& path) {
    if (!value.is_object()) Fail(Code::kSchema, "expected an object", path);
  }

  void ExpectArray(const Json& value, const std::string& path) {
    if (!value.is_array()) Fail(Code::kSchema, "expected a list", path);
  }

  std::string String(const Json& value, const std::string& path) {
    if (!value.is_string()) Fail(Code::kSchema, "expected a string", path);
    return value.get<std::string>();
  }

  // uint8 leaf constrained to [lo, 255].
  int Uint8(const Json& value, const std::string& path, int lo) {
    if (!value.is_number_integer()) {
      Fail(Code::kSchema, "expected an integer", path);
    }
    bool in_range = value.is_number_unsigned()
                        ? value.get<std::uint64_t>() <= 255 &&
                              value.get<std::uint64_t>() >= static_cast<std::uint64_t>(lo)
                        : value.get<std::int64_t>() >= lo &&
                              value.get<std::int64_t>() <= 255;
    if (!in_range) {
      Fail(Code::kRange,
           "value " + value.dump() + " outside " + std::to_string(lo) +
               "..255",
           path);
    }
    return value.get<int>();
  }

  std::vector<FunctionName> Functions(const Json& value,
                                      const std::string& path) {
    ExpectArray(value, path);
    std::vector<FunctionName> out;
    for (size_t i = 0; i < value.size(); ++i) {
      out.emplace_back(String(value[i], path + "/" + std::to_string(i)));
    }
    return out;
  }

  void Allow(const Json& object, const std::string& path,
             std::initializer_list<std::string_view> keys) {
    for (auto it = object.begin(); it != object.end(); ++it) {
      bool known = std::any_of(keys.begin(), keys.end(),
                               [&](std::string_view k) { return k == it.key(); });
      if (known) continue;
      std::string where = path + "/" + it.key();
      if (!options_.lax) {
        Fail(Code::kSchema, "unknown node '" + it.key() + "'", where);
      }
      warnings_.push_back(MakeWarning(
          Code::kUnknownKey, "ignored unknown node '" + it.key() + "'", where));
    }
  }

  flat::Component DecodeComponent(const Json& value, const std::string& path) {
    ExpectObject(value, path);
    Allow(value, path, {kComponentIdentifier, kCompositions});
    flat::Component component;
    component.id = ComponentId(String(Member(value, kComponentIdentifier, path),
                                      path + "/" + std::string(kComponentIdentifier)));
    std::string list_path = path + "/" + std::string(kCompositions);
    const Json& compositions = Member(value, kCompositions, path);
    ExpectArray(compositions, list_path);
    for (size_t i = 0; i < compositions.size(); ++i) {
      component.compositions.push_back(DecodeComposition(
          compositions[i], list_path + "/" + std::to_string(i)));
    }
    return component;
  }

  flat::Composition DecodeComposition(const Json& value,
                                      const std::string& path) {
    ExpectObject(value, path);
    Allow(value, path,
          {kCompositionIdentifier, kSequenceFunctions, kBestBindingFunctions,
           kAllBindingsFunctions, kSplitterFunction, kOptionalBestBinding,
           kOutgoingBranches, kSingleFunction, kComposition});
    flat::Composition composition;
    composition.id =
        CompositionId(String(Member(value, kCompositionIdentifier, path),
                             path + "/" + std::string(kCompositionIdentifier)));

    auto has = [&](std::string_view key) { return value.contains(key); };
    auto at = [&](std::string_view key) { return path + "/" + std::string(key); };
    bool split = has(kSplitterFunction) || has(kOptionalBestBinding) ||
                 has(kOutgoingBranches);
    int payloads = has(kSequenceFunctions) + has(kBestBindingFunctions) +
                   has(kAllBindingsFunctions) + split + has(kSingleFunction) +
                   has(kComposition);
    if (payloads == 0) {
      Fail(Code::kSchema, "composition has no composition-type payload", path);
    }
    if (payloads > 1) {
      Fail(Code::kSchema, "composition has more than one composition-type payload",
           path);
    }

    if (has(kSequenceFunctions)) {
      std::vector<FunctionName> functions =
          Functions(value[kSequenceFunctions], at(kSequenceFunctions));
      if (functions.empty()) {
        Fail(Code::kSchema, "empty sequence-functions", at(kSequenceFunctions));
      }
      if (functions.size() == 1) {
        composition.body = flat::Single{functions.front()};
      } else {
        composition.body = flat::Sequence{std::move(functions)};
      }
    } else if (has(kBestBindingFunctions)) {
      composition.body = flat::BestBinding{
          Functions(value[kBestBindingFunctions], at(kBestBindingFunctions))};
    } else if (has(kAllBindingsFunctions)) {
      composition.body = flat::AllBindings{
          Functions(value[kAllBindingsFunctions], at(kAllBindingsFunctions))};
    } else if (has(kSingleFunction)) {
      composition.body = flat::Single{
          FunctionName(String(value[kSingleFunction], at(kSingleFunction)))};
    } else if (has(kComposition)) {
      composition.body = flat::LinkRef{
          ComponentId(String(value[kComposition], at(kComposition)))};
    } else {
      composition.body = DecodeSplit(value, path);
    }
    return composition;
  }

  flat::Split DecodeSplit(const Json& value, const std::string& path) {
    flat::Split split;
    split.splitter = FunctionName(
        String(Member(value, kSplitterFunction, path),
               path + "/" + std::string(kSplitterFunction)));
    if (value.contains(kOptionalBestBinding)) {
      split.pre = Functions(value[kOptionalBestBinding],
                            path + "/" + std::string(kOptionalBestBinding));
    }
    std::string list_path = path + "/" + std::string(kOutgoingBranches);
    const Json& branches = Member(value, kOutgoingBranches, path);
    ExpectArray(branches, list_path);
    std::set<int> ids;
    for (size_t i = 0; i < branches.size(); ++i) {
      std::string branch_path = list_path + "/" + std::to_string(i);
      flat::Branch branch = DecodeBranch(branches[i], branch_path);
      if (!ids.insert(branch.id).second) {
        Fail(Code::kSchema, "duplicate branch-id " + std::to_string(branch.id),
             branch_path);
      }
      split.branches.push_back(std::move(branch));
    }
    return split;
  }

  flat::Branch DecodeBranch(const Json& value, const std::string& path) {
    ExpectObject(value, path);
    Allow(value, path, {kBranchId, kComposition, kReplications, kPassLeaf});
    auto at = [&](std::string_view key) { return path + "/" + std::string(key); };
    flat::Branch branch;
    branch.id = Uint8(Member(value, kBranchId, path), at(kBranchId), 0);
    bool normal = value.contains(kComposition);
    bool pass = value.contains(kPassLeaf);
    if (normal == pass) {
      Fail(Code::kSchema,
           normal ? "branch is both normal-branch and pass"
                  : "branch has no branch-type payload",
           path);
    }
    if (pass) {
      if (value.contains(kReplications)) {
        Fail(Code::kSchema, "pass branch cannot have replications",
             at(kReplications));
      }
      if (String(value[kPassLeaf], at(kPassLeaf)) != kPassValue) {
        Fail(Code::kSchema, "pass branch leaf must be \"pass\"", at(kPassLeaf));
      }
      branch.kind = flat::PassBranch{};
      return branch;
    }
    flat::NormalBranch n;
    n.component = ComponentId(String(value[kComposition], at(kComposition)));
    if (value.contains(kReplications)) {
      n.replications = Uint8(value[kReplications], at(kReplications), 1);
    }
    branch.kind = n;
    return branch;
  }

  const ReadOptions& options_;
  std::vector<Diagnostic> warnings_;
};

bool IsListNode(std::string_view name) {
  static constexpr std::array<std::string_view, 7> kLists = {
      kServiceComponent,     kCompositions,         kOutgoingBranches,
      kSequenceFunctions,    kBestBindingFunctions, kAllBindingsFunctions,
      kOptionalBestBinding};
  return std::find(kLists.begin(), kLists.end(), name) != kLists.end();
}

bool IsIntegerLeaf(std::string_view name) {
  return name == kBranchId || name == kReplications;
}

using PTree = boost::property_tree::ptree;

// Maps an XML element tree to the JSON shape so that both encodings share
// one decoder. List nodes become arrays; repeated non-list elements are
// rejected.
Json XmlToJson(const PTree& node, const std::string& path) {
  Json out = Json::object();
  for (const auto& [name, child] : node) {
    if (name == "<xmlcomment>") continue;
    std::string where = path + "/" + name;
    if (name == "<xmlattr>") {
      Fail(Code::kSchema, "unexpected XML attributes", path);
    }
    Json value;
    bool has_elements = std::any_of(child.begin(), child.end(), [](const auto& c) {
      return c.first != "<xmlcomment>";
    });
    if (has_elements) {
      value = XmlToJson(child, where);
    } else {
      std::string text = child.data();
      value = text;
      if (IsIntegerLeaf(name)) {
        std::string_view digits = text;
        bool negative = !digits.empty() && digits.front() == '-';
        if (negative) digits.remove_prefix(1);
        bool numeric = !digits.empty() && digits.size() <= 18 &&
                       std::all_of(digits.begin(), digits.end(),
                                   [](char c) { return c >= '0' && c <= '9'; });
        if (numeric) {
          std::int64_t v = std::stoll(std::string(digits));
          value = negative ? -v : v;
        }
      }
    }
    if (IsListNode(name)) {
      if (!out.contains(name)) out[name] = Json::array();
      out[name].push_back(std::move(value));
    } else {
      if (out.contains(name)) {
        Fail(Code::kSchema, "element '" + name + "' appears more than once",
             where);
      }
      out[name] = std::move(value);
    }
  }
  return out;
}

Json ParseXml(const std::string& body, const ReadOptions& options,
              std::vector<Diagnostic>& warnings) {
  PTree tree;
  try {
    std::istringstream in(body);
    boost::property_tree::read_xml(
        in, tree, boost::property_tree::xml_parser::trim_whitespace);
  } catch (const boost::property_tree::xml_parser_error& e) {
    throw Error(Code::kMalformed,
                std::string("malformed XML: ") + e.message() + " at line " +
                    std::to_string(e.line()));
  }
  const PTree* root = nullptr;
  for (const auto& [name, child] : tree) {
    if (name == "<xmlcomment>") continue;
    if (name != kSpecification || root != nullptr) {
      Fail(Code::kSchema, "root element must be a single <specification>",
           "/" + name);
    }
    root = &child;
  }
  if (root == nullptr) Fail(Code::kSchema, "missing <specification>", "/");

  PTree children = *root;
  std::string xmlns;
  if (auto attrs = children.get_child_optional("<xmlattr>")) {
    for (const auto& [attr, value] : *attrs) {
      if (attr == "xmlns") {
        xmlns = value.data();
      } else if (!options.lax) {
        Fail(Code::kSchema, "unknown attribute '" + attr + "'",
             "/" + std::string(kSpecification));
      } else {
        warnings.push_back(MakeWarning(Code::kUnknownKey,
                                       "ignored attribute '" + attr + "'",
                                       "/" + std::string(kSpecification)));
      }
    }
    children.erase("<xmlattr>");
  }
  if (xmlns != kYangNamespace) {
    Fail(Code::kSchema,
         "root namespace must be '" + std::string(kYangNamespace) + "'",
         "/" + std::string(kSpecification));
  }
  Json root_json = Json::object();
  root_json[RootKey()] = XmlToJson(children, "/" + RootKey());
  return root_json;
}

}  // namespace

InstanceDocument ToInstance(const ComponentModel& model,
                            DocumentFormat format) {
  std::vector<Diagnostic> diagnostics = ValidateModel(model, true);
  if (HasErrors(diagnostics)) {
    throw Error(Code::kInvalidModel, "model is invalid", {},
                std::move(diagnostics));
  }
  return {format, format == DocumentFormat::kJson ? EncodeJson(model)
                                                  : EncodeXml(model)};
}

DecodedModel FromInstance(const InstanceDocument& document,
                          const ReadOptions& options) {
  std::vector<Diagnostic> warnings;
  Json root;
  if (document.format == DocumentFormat::kJson) {
    DuplicateKeyCheck check;
    bool ok = Json::sax_parse(document.body, &check);
    if (!check.duplicate().empty()) {
      Fail(Code::kSchema, "duplicate key '" + check.duplicate() + "'", "/");
    }
    if (!ok) Fail(Code::kMalformed, "malformed JSON", "/");
    root = Json::parse(document.body);
    if (!root.is_object()) Fail(Code::kSchema, "expected an object", "/");
    // The root may hold only the module-qualified container.
    for (auto it = root.begin(); it != root.end(); ++it) {
      if (it.key() == RootKey()) continue;
      if (!options.lax) {
        Fail(Code::kSchema, "unknown node '" + it.key() + "'", "/" + it.key());
      }
      warnings.push_back(MakeWarning(Code::kUnknownKey,
                                     "ignored unknown node '" + it.key() + "'",
                                     "/" + it.key()));
    }
  } else {
    root = ParseXml(document.body, options, warnings);
  }

  DecodedModel decoded = Decoder(options).Run(root);
  decoded.warnings.insert(decoded.warnings.begin(), warnings.begin(),
                          warnings.end());
  std::vector<Diagnostic> diagnostics = ValidateModel(decoded.model, true);
  if (HasErrors(diagnostics)) {
    auto first = std::find_if(diagnostics.begin(), diagnostics.end(),
                              [](const Diagnostic& d) { return d.is_error(); });
    Code code = first->code;
    std::string message = first->message;
    std::string path = first->path;
    throw Error(code, message, path, std::move(diagnostics));
  }
  for (Diagnostic& d : diagnostics) decoded.warnings.push_back(std::move(d));
  return decoded;
}

}  // namespace chainc
