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

#include "planes/json_io.h"

#include "planes/error.h"

namespace planes {
namespace {

const Json& Field(const Json& json, const char* key) {
  if (!json.is_object() || !json.contains(key)) {
    throw Error(ErrorKind::kParse, std::string("missing field \"") + key + "\"");
  }
  return json.at(key);
}

std::vector<std::string> StringList(const Json& json, const char* what) {
  if (!json.is_array()) {
    throw Error(ErrorKind::kParse, std::string(what) + " must be an array");
  }
  std::vector<std::string> out;
  for (const Json& item : json) {
    if (!item.is_string()) {
      throw Error(ErrorKind::kParse,
                  std::string(what) + " entries must be strings");
    }
    out.push_back(item.get<std::string>());
  }
  return out;
}

std::vector<std::pair<std::string, std::string>> PairList(const Json& json,
                                                          const char* what) {
  if (!json.is_array()) {
    throw Error(ErrorKind::kParse, std::string(what) + " must be an array");
  }
  std::vector<std::pair<std::string, std::string>> out;
  for (const Json& item : json) {
    auto pair = StringList(item, what);
    if (pair.size() != 2) {
      throw Error(ErrorKind::kParse,
                  std::string(what) + " entries must be pairs");
    }
    out.emplace_back(pair[0], pair[1]);
  }
  return out;
}

Json Sequence(const PartialPlane& plane, const std::vector<ElementId>& seq) {
  Json out = Json::array();
  for (ElementId e : seq) out.push_back(plane.Label(e));
  return out;
}

Term ParseTerm(const PartialPlane& plane, const std::string& text) {
  if (text == "base") return Term::Base();
  Term::Kind kind;
  if (text.rfind("join(", 0) == 0) {
    kind = Term::Kind::kJoin;
  } else if (text.rfind("meet(", 0) == 0) {
    kind = Term::Kind::kMeet;
  } else {
    throw Error(ErrorKind::kParse, "bad term \"" + text + "\"");
  }
  if (text.back() != ')') {
    throw Error(ErrorKind::kParse, "bad term \"" + text + "\"");
  }
  const std::string args = text.substr(5, text.size() - 6);
  // Labels may contain commas; take the split whose halves both resolve.
  for (std::size_t comma = args.find(','); comma != std::string::npos;
       comma = args.find(',', comma + 1)) {
    auto a = plane.Find(args.substr(0, comma));
    auto b = plane.Find(args.substr(comma + 1));
    if (a && b) {
      return kind == Term::Kind::kJoin ? Term::Join(*a, *b)
                                       : Term::Meet(*a, *b);
    }
  }
  throw Error(ErrorKind::kParse, "unresolved term \"" + text + "\"");
}

}  // namespace

std::string Dump(const Json& json) { return json.dump(2) + "\n"; }

Json ParseJson(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Json PlaneToJson(const PartialPlane& plane) {
  Json out;
  out["points"] = Sequence(plane, plane.Points());
  out["lines"] = Sequence(plane, plane.Lines());
  Json incidences = Json::array();
  for (const auto& [p, l] : plane.Incidences()) {
    incidences.push_back(Json::array({plane.Label(p), plane.Label(l)}));
  }
  out["incidences"] = std::move(incidences);
  return out;
}

PartialPlane PlaneFromJson(const Json& json) {
  return BuildPlane(StringList(Field(json, "points"), "points"),
                    StringList(Field(json, "lines"), "lines"),
                    PairList(Field(json, "incidences"), "incidences"));
}

Json StagedToJson(const StagedPlane& staged) {
  const PartialPlane& plane = staged.plane();
  Json out = PlaneToJson(plane);
  Json provenance = Json::object();
  for (ElementId e : plane.Elements()) {
    provenance[plane.Label(e)] = staged.Provenance(e).ToString(plane);
  }
  out["provenance"] = std::move(provenance);
  Json layers = Json::array();
  for (const auto& layer : staged.layers()) {
    layers.push_back(Sequence(plane, layer));
  }
  out["layers"] = std::move(layers);
  return out;
}

StagedPlane StagedFromJson(const Json& json) {
  PartialPlane plane = PlaneFromJson(json);
  std::map<ElementId, Term> provenance;
  const Json& terms = Field(json, "provenance");
  if (!terms.is_object()) {
    throw Error(ErrorKind::kParse, "provenance must be an object");
  }
  for (const auto& [label, term] : terms.items()) {
    if (!term.is_string()) {
      throw Error(ErrorKind::kParse, "provenance entries must be strings");
    }
    auto e = plane.Find(label);
    if (!e) throw Error(ErrorKind::kParse, "provenance of unknown " + label);
    provenance[*e] = ParseTerm(plane, term.get<std::string>());
  }
  std::vector<std::vector<ElementId>> layers;
  const Json& layer_json = Field(json, "layers");
  if (!layer_json.is_array()) {
    throw Error(ErrorKind::kParse, "layers must be an array");
  }
  for (const Json& layer : layer_json) {
    std::vector<ElementId> ids;
    for (const std::string& label : StringList(layer, "layers")) {
      auto e = plane.Find(label);
      if (!e) throw Error(ErrorKind::kParse, "layer holds unknown " + label);
      ids.push_back(*e);
    }
    layers.push_back(std::move(ids));
  }
  return StagedPlane::FromParts(std::move(plane), std::move(provenance),
                                std::move(layers));
}

Json LabelsToJson(const PartialPlane& plane, const ElementSet& set) {
  return Sequence(plane, std::vector<ElementId>(set.begin(), set.end()));
}

ElementSet LabelsFromJson(const PartialPlane& plane, const Json& json) {
  ElementSet out;
  for (const std::string& label : StringList(json, "labels")) {
    out.insert(plane.At(label));
  }
  return out;
}

Json OrderingToJson(const PartialPlane& plane, const HfOrdering& ordering) {
  Json out;
  out["base"] = LabelsToJson(plane, ordering.base);
  out["sequence"] = Sequence(plane, ordering.sequence);
  out["t_types"] = ordering.t_types;
  return out;
}

HfOrdering OrderingFromJson(const PartialPlane& plane, const Json& json) {
  ElementSet base = LabelsFromJson(plane, Field(json, "base"));
  std::vector<ElementId> sequence;
  for (const std::string& label :
       StringList(Field(json, "sequence"), "sequence")) {
    sequence.push_back(plane.At(label));
  }
  return ValidateHfOrdering(plane, base, sequence);
}

Json DigraphToJson(const HfDigraph& digraph) {
  Json out;
  out["plane"] = PlaneToJson(digraph.plane);
  out["base"] = LabelsToJson(digraph.plane, digraph.base);
  Json edges = Json::array();
  for (const auto& [from, to] : digraph.edges) {
    edges.push_back(
        Json::array({digraph.plane.Label(from), digraph.plane.Label(to)}));
  }
  out["edges"] = std::move(edges);
  return out;
}

HfDigraph DigraphFromJson(const Json& json) {
  PartialPlane plane = PlaneFromJson(Field(json, "plane"));
  ElementSet base = LabelsFromJson(plane, Field(json, "base"));
  std::set<Edge> edges;
  for (const auto& [from, to] : PairList(Field(json, "edges"), "edges")) {
    edges.emplace(plane.At(from), plane.At(to));
  }
  return ValidateHfDigraph(plane, base, edges);
}

Json GadgetToJson(const GadgetResult& result) {
  Json out;
  out["plane"] = PlaneToJson(result.plane);
  out["ordering"] = OrderingToJson(result.plane, result.ordering);
  out["last"] = result.plane.Label(result.last);
  out["constants"] = LabelsToJson(result.plane, result.constants);
  out["table"] = result.table;
  Json certificates = Json::object();
  for (const Certificate& c : result.certificates) {
    certificates[c.name] = c.passed ? "pass" : "fail";
  }
  out["certificates"] = std::move(certificates);
  return out;
}

}  // namespace planes
