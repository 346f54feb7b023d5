// Copyright 2026 The Planes Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "planes/cli.h"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "planes/error.h"
#include "planes/free_completion.h"
#include "planes/gadgets.h"
#include "planes/incidence.h"
#include "planes/isomorphism.h"
#include "planes/json_io.h"
#include "planes/openness.h"

namespace planes {
namespace {

class Io {
 public:
  Io(std::istream& in, std::ostream& out) : in_(in), out_(out) {}

  std::string Read(const std::string& path) const {
    std::ostringstream text;
    if (path == "-") {
      text << in_.rdbuf();
    } else {
      std::ifstream file(path, std::ios::binary);
      if (!file) throw Error(ErrorKind::kParse, "cannot read " + path);
      text << file.rdbuf();
    }
    return text.str();
  }

  Json ReadJson(const std::string& path) const {
    return ParseJson(Read(path));
  }

  void Write(const std::string& path, const std::string& text) const {
    if (path.empty() || path == "-") {
      out_ << text;
      return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorKind::kParse, "cannot write " + path);
    file << text;
  }

 private:
  std::istream& in_;
  std::ostream& out_;
};

std::vector<std::string> SplitLabels(const std::string& text) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream stream(text);
  while (std::getline(stream, item, ',')) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

ElementSet ResolveLabels(const PartialPlane& plane, const std::string& text) {
  ElementSet out;
  for (const std::string& label : SplitLabels(text)) {
    out.insert(plane.At(label));
  }
  return out;
}

std::size_t BudgetFromEnv() {
  const char* value = std::getenv("PLANES_BUDGET");
  if (value == nullptr || *value == '\0') return kDefaultElementBudget;
  char* end = nullptr;
  const unsigned long long parsed = std::strtoull(value, &end, 10);
  if (*end != '\0' || parsed == 0) {
    throw Error(ErrorKind::kParse,
                std::string("PLANES_BUDGET must be a positive integer, got ") +
                    value);
  }
  return static_cast<std::size_t>(parsed);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Finite partial planes, free completions and HF-orderings",
               "planes"};
  app.require_subcommand(1);

  std::string input;
  std::string second;
  std::string output;
  std::string labels;
  std::string pin_file;
  std::string gadget_kind;
  std::string eta;
  std::string from_label;
  std::string to_label;
  std::size_t stages = 0;
  int depth = 0;
  int n = 0;
  bool emit_table = false;

  auto* validate = app.add_subcommand("validate", "Check a plane file");
  validate->add_option("plane", input)->required();

  auto* dual = app.add_subcommand("dual", "Swap points and lines");
  dual->add_option("in", input)->required();
  dual->add_option("out", output);

  auto* complete = app.add_subcommand("complete", "Staged free completion");
  complete->add_option("in", input)->required();
  complete->add_option("-k", stages, "Number of stages")->required();
  complete->add_option("out", output);

  auto* check_open = app.add_subcommand("check-open", "Openness by peeling");
  check_open->add_option("in", input)->required();

  auto* hf_order = app.add_subcommand("hf-order", "Extract an HF-ordering");
  hf_order->add_option("in", input)->required();
  hf_order->add_option("--base", labels, "Comma-separated base labels");

  auto* rank = app.add_subcommand("rank", "Rank of a finite open plane");
  rank->add_option("in", input)->required();

  auto* digraph = app.add_subcommand("digraph", "HF-digraph of an ordering");
  digraph->add_option("in", input)->required();
  digraph->add_option("ordering", second)->required();

  auto* compat = app.add_subcommand("compat", "Compatible ordering of a digraph");
  compat->add_option("digraph", input)->required();

  auto* closure = app.add_subcommand("closure", "Predecessor closure");
  closure->add_option("digraph", input)->required();
  closure->add_option("--set", labels, "Comma-separated labels")->required();

  auto* distance = app.add_subcommand("distance", "Directed path distance");
  distance->add_option("digraph", input)->required();
  distance->add_option("--from", from_label)->required();
  distance->add_option("--to", to_label)->required();

  auto* quadrangle = app.add_subcommand("quadrangle", "Find a quadrangle");
  quadrangle->add_option("in", input)->required();

  auto* table = app.add_subcommand("table", "Incidence table of a plane");
  table->add_option("in", input)->required();

  auto* amalgam = app.add_subcommand("amalgam", "Free or canonical amalgam");
  amalgam->add_option("left", input)->required();
  amalgam->add_option("right", second)->required();
  amalgam->add_option("--shared", labels, "Comma-separated shared labels");
  auto* amalgam_k = amalgam->add_option("-k", stages, "Completion stages");

  auto* gadget = app.add_subcommand("gadget", "Named constructions");
  gadget->add_option("kind", gadget_kind)
      ->required()
      ->check(CLI::IsMember({"superstab", "chain", "ctree", "tree"}));
  gadget->add_option("--eta", eta, "Binary code for chain");
  gadget->add_option("-n", n, "Depth for ctree");
  gadget->add_option("-d", depth, "Depth for tree");
  gadget->add_flag("--emit-table", emit_table);
  gadget->add_option("--out", output, "Write the output here");

  auto* iso = app.add_subcommand("iso", "Isomorphism search");
  iso->add_option("left", input)->required();
  iso->add_option("right", second)->required();
  iso->add_option("--pin", pin_file, "JSON object of label -> label");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "planes: " << e.what() << '\n';
    return kExitUsage;
  }

  const Io io(in, out);
  try {
    if (validate->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      out << "valid: " << plane.num_points() << " points, "
          << plane.num_lines() << " lines, " << plane.num_incidences()
          << " incidences\n";
      return kExitOk;
    }
    if (dual->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      io.Write(output, Dump(PlaneToJson(Dual(plane))));
      return kExitOk;
    }
    if (complete->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      StagedPlane staged = FreeComplete(plane, stages, BudgetFromEnv());
      io.Write(output, Dump(StagedToJson(staged)));
      return kExitOk;
    }
    if (check_open->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      PeelReport report = ConfinedCore(plane);
      if (report.empty_core()) {
        out << "open\n";
        return kExitOk;
      }
      out << Dump(LabelsToJson(plane, report.residual_core));
      return kExitFalse;
    }
    if (hf_order->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      ElementSet base = ResolveLabels(plane, labels);
      auto ordering = ExtractHfOrdering(plane, base);
      if (!ordering) {
        out << Dump(LabelsToJson(plane, ConfinedCore(plane, base).residual_core));
        return kExitFalse;
      }
      out << Dump(OrderingToJson(plane, *ordering));
      return kExitOk;
    }
    if (rank->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      out << Rank(plane) << '\n';
      return kExitOk;
    }
    if (digraph->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      HfOrdering ordering = OrderingFromJson(plane, io.ReadJson(second));
      out << Dump(DigraphToJson(DigraphFromOrdering(plane, ordering)));
      return kExitOk;
    }
    if (compat->parsed()) {
      HfDigraph graph = DigraphFromJson(io.ReadJson(input));
      CompatibleResult result = CompatibleOrdering(graph);
      if (!result.ordering) {
        Json cycle = Json::array();
        for (ElementId e : result.cycle) cycle.push_back(graph.plane.Label(e));
        out << Dump(Json{{"cycle", cycle}});
        return kExitFalse;
      }
      out << Dump(OrderingToJson(graph.plane, *result.ordering));
      return kExitOk;
    }
    if (closure->parsed()) {
      HfDigraph graph = DigraphFromJson(io.ReadJson(input));
      ElementSet closed = ClClosure(graph, ResolveLabels(graph.plane, labels));
      out << Dump(LabelsToJson(graph.plane, closed));
      return kExitOk;
    }
    if (distance->parsed()) {
      HfDigraph graph = DigraphFromJson(io.ReadJson(input));
      auto d = RDistance(graph, graph.plane.At(from_label),
                         graph.plane.At(to_label));
      if (!d) {
        out << "inf\n";
        return kExitFalse;
      }
      out << *d << '\n';
      return kExitOk;
    }
    if (quadrangle->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      auto quad = FindQuadrangle(plane);
      if (!quad) {
        out << "none\n";
        return kExitFalse;
      }
      Json labels_json = Json::array();
      for (ElementId e : *quad) labels_json.push_back(plane.Label(e));
      out << Dump(labels_json);
      return kExitOk;
    }
    if (table->parsed()) {
      PartialPlane plane = PlaneFromJson(io.ReadJson(input));
      out << RenderIncidenceTable(plane);
      return kExitOk;
    }
    if (amalgam->parsed()) {
      AmalgamSpec spec = AmalgamSpec::ByLabels(
          PlaneFromJson(io.ReadJson(input)), PlaneFromJson(io.ReadJson(second)),
          SplitLabels(labels));
      if (amalgam_k->count() == 0) {
        out << Dump(PlaneToJson(FreeAmalgam(spec).plane));
        return kExitOk;
      }
      CanonicalAmalgam result =
          CanonicalAmalgamate(spec, stages, BudgetFromEnv());
      for (const std::string& warning : result.warnings) {
        err << "planes: warning: " << warning << '\n';
      }
      out << Dump(StagedToJson(result.staged));
      return kExitOk;
    }
    if (gadget->parsed()) {
      if (gadget_kind == "tree") {
        HfDigraph tree = BuildTreeDigraph(depth, BudgetFromEnv());
        io.Write(output, emit_table ? RenderIncidenceTable(tree.plane)
                                    : Dump(DigraphToJson(tree)));
        return kExitOk;
      }
      GadgetResult result;
      if (gadget_kind == "superstab") {
        result = BuildSuperstabilityGadget();
      } else if (gadget_kind == "chain") {
        result = BuildCodedChain({eta});
      } else {
        result = BuildCGadget(n, BudgetFromEnv());
      }
      io.Write(output, emit_table ? result.table : Dump(GadgetToJson(result)));
      return result.AllCertified() ? kExitOk : kExitFalse;
    }
    if (iso->parsed()) {
      PartialPlane left = PlaneFromJson(io.ReadJson(input));
      PartialPlane right = PlaneFromJson(io.ReadJson(second));
      PinMap pins;
      if (!pin_file.empty()) {
        Json pin_json = io.ReadJson(pin_file);
        if (!pin_json.is_object()) {
          throw Error(ErrorKind::kParse, "pin map must be a JSON object");
        }
        std::map<std::string, std::string> by_label;
        for (const auto& [from, to] : pin_json.items()) {
          if (!to.is_string()) {
            throw Error(ErrorKind::kParse, "pin targets must be labels");
          }
          by_label[from] = to.get<std::string>();
        }
        pins = PinsFromLabels(left, right, by_label);
      }
      auto found = IsomorphismSearch(left, right, pins);
      if (!found) {
        out << "not isomorphic\n";
        return kExitFalse;
      }
      Json map = Json::object();
      for (const auto& [from, to] : found->forward) {
        map[left.Label(from)] = right.Label(to);
      }
      out << Dump(map);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "planes: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace planes
