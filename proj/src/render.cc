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

#include <string>

#include "chainc/grammar.h"
#include "overloaded.h"

namespace chainc {
namespace {

using internal::Overloaded;

void AppendFunctions(const std::vector<FunctionName>& functions,
                     std::string& out) {
  for (size_t i = 0; i < functions.size(); ++i) {
    if (i > 0) out += " , ";
    out += functions[i].str();
  }
}

void AppendList(const std::vector<ast::Composition>& list, std::string& out);

void AppendComposition(const ast::Composition& composition,
                       std::string& out) {
  std::visit(
      Overloaded{
          [&](const ast::Sequence& s) { AppendList(s.items, out); },
          [&](const ast::BestBinding& b) {
            out += "best-binding { ";
            AppendFunctions(b.functions, out);
            out += " }";
          },
          [&](const ast::AllBindings& a) {
            out += "all-bindings { ";
            AppendFunctions(a.functions, out);
            out += " }";
          },
          [&](const ast::Single& s) { out += s.function.str(); },
          [&](const ast::LinkRef& l) {
            out += "link(";
            out += l.target.str();
            out += ")";
          },
          [&](const ast::Split& s) {
            out += "split { ";
            out += s.splitter.str();
            if (!s.pre.empty()) {
              out += " , best-binding { ";
              AppendFunctions(s.pre, out);
              out += " }";
            }
            for (const ast::Branch& branch : s.branches) {
              out += " ; ";
              if (const auto* normal = std::get_if<ast::NormalBranch>(&branch)) {
                AppendList(normal->body, out);
                if (normal->replications > 1) {
                  out += '.';
                  out += std::to_string(normal->replications);
                }
              } else {
                out += "pass";
              }
            }
            out += " }";
          },
      },
      composition.node);
}

void AppendList(const std::vector<ast::Composition>& list, std::string& out) {
  for (size_t i = 0; i < list.size(); ++i) {
    if (i > 0) out += " , ";
    AppendComposition(list[i], out);
  }
}

void DumpFunctions(const std::vector<FunctionName>& functions,
                   std::string& out) {
  for (const FunctionName& f : functions) {
    out += ' ';
    out += f.str();
  }
}

void DumpList(const std::vector<ast::Composition>& list, int depth,
              std::string& out);

void DumpComposition(const ast::Composition& composition, int depth,
                     std::string& out) {
  std::string indent(2 * depth, ' ');
  std::visit(
      Overloaded{
          [&](const ast::Sequence& s) {
            out += indent + "sequence\n";
            DumpList(s.items, depth + 1, out);
          },
          [&](const ast::BestBinding& b) {
            out += indent + "best-binding";
            DumpFunctions(b.functions, out);
            out += '\n';
          },
          [&](const ast::AllBindings& a) {
            out += indent + "all-bindings";
            DumpFunctions(a.functions, out);
            out += '\n';
          },
          [&](const ast::Single& s) {
            out += indent + "single " + s.function.str() + "\n";
          },
          [&](const ast::LinkRef& l) {
            out += indent + "link " + l.target.str() + "\n";
          },
          [&](const ast::Split& s) {
            out += indent + "split " + s.splitter.str() + "\n";
            if (!s.pre.empty()) {
              out += indent + "  pre";
              DumpFunctions(s.pre, out);
              out += '\n';
            }
            for (size_t i = 0; i < s.branches.size(); ++i) {
              out += indent + "  branch " + std::to_string(i + 1);
              if (const auto* normal =
                      std::get_if<ast::NormalBranch>(&s.branches[i])) {
                out += " x" + std::to_string(normal->replications) + "\n";
                DumpList(normal->body, depth + 2, out);
              } else {
                out += " pass\n";
              }
            }
          },
      },
      composition.node);
}

void DumpList(const std::vector<ast::Composition>& list, int depth,
              std::string& out) {
  for (const ast::Composition& c : list) DumpComposition(c, depth, out);
}

}  // namespace

std::string Render(const ServiceSpec& spec) {
  std::string out = "service { ";
  AppendList(spec.compositions, out);
  out += " }";
  for (const ast::Definition& def : spec.definitions) {
    out += "\ncomponent ";
    out += def.id.str();
    out += " { ";
    AppendList(def.compositions, out);
    out += " }";
  }
  return out;
}

std::string DumpAst(const ServiceSpec& spec) {
  std::string out = "service\n";
  DumpList(spec.compositions, 1, out);
  for (const ast::Definition& def : spec.definitions) {
    out += "component " + def.id.str() + "\n";
    DumpList(def.compositions, 1, out);
  }
  return out;
}

}  // namespace chainc
