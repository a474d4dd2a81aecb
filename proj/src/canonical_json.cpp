// Copyright 2026 The cumlift Authors
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

#include <string>
#include <string_view>

#include "cumlift/errors.hpp"
#include "cumlift/instance.hpp"
#include "json.hpp"

namespace cumlift {

namespace {

using Json = nlohmann::ordered_json;

const Json& Require(const Json& object, const char* key, const std::string& where) {
  auto it = object.find(key);
  if (it == object.end()) throw MalformedInput(where + ": missing key \"" + key + "\"");
  return *it;
}

Value Integer(const Json& value, const std::string& where) {
  if (!value.is_number_integer()) throw MalformedInput(where + ": expected an integer");
  return value.get<Value>();
}

Value NonNegative(const Json& value, const std::string& where) {
  const Value v = Integer(value, where);
  if (v < 0) throw NegativeValue(where + " must be nonnegative, found " + std::to_string(v));
  return v;
}

const Json& Array(const Json& value, const std::string& where) {
  if (!value.is_array()) throw MalformedInput(where + ": expected an array");
  return value;
}

}  // namespace

SchedulingInstance ParseCanonicalJson(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw MalformedInput("instance document must be a JSON object");

  SchedulingInstance instance;
  if (auto it = doc.find("name"); it != doc.end()) {
    if (!it->is_string()) throw MalformedInput("\"name\": expected a string");
    instance.name = it->get<std::string>();
  }
  const Json& kind = Require(doc, "kind", "instance");
  if (!kind.is_string()) throw MalformedInput("\"kind\": expected a string");
  instance.kind = InstanceKindFromString(kind.get<std::string>());
  if (auto it = doc.find("horizon"); it != doc.end() && !it->is_null()) {
    instance.horizon = NonNegative(*it, "\"horizon\"");
  }

  const Json& resources = Array(Require(doc, "resources", "instance"), "\"resources\"");
  for (std::size_t r = 0; r < resources.size(); ++r) {
    const std::string where = "resources[" + std::to_string(r) + "]";
    instance.resources.push_back(Resource{NonNegative(Require(resources[r], "capacity", where), where + ".capacity")});
  }
  const Json& tasks = Array(Require(doc, "tasks", "instance"), "\"tasks\"");
  for (std::size_t i = 0; i < tasks.size(); ++i) {
    const std::string where = "tasks[" + std::to_string(i) + "]";
    Task task;
    task.duration = NonNegative(Require(tasks[i], "duration", where), where + ".duration");
    const Json& demands = Array(Require(tasks[i], "demands", where), where + ".demands");
    for (const Json& a : demands) task.demands.push_back(NonNegative(a, where + ".demands"));
    if (task.demands.size() != resources.size()) {
      throw InconsistentCounts(where + " lists " + std::to_string(task.demands.size()) + " demands for " +
                               std::to_string(resources.size()) + " resources");
    }
    instance.tasks.push_back(std::move(task));
  }
  const Json& precedences = Array(Require(doc, "precedences", "instance"), "\"precedences\"");
  for (std::size_t p = 0; p < precedences.size(); ++p) {
    const std::string where = "precedences[" + std::to_string(p) + "]";
    PrecedenceArc arc;
    arc.from = static_cast<TaskId>(Integer(Require(precedences[p], "from", where), where + ".from"));
    arc.to = static_cast<TaskId>(Integer(Require(precedences[p], "to", where), where + ".to"));
    arc.offset = Integer(Require(precedences[p], "offset", where), where + ".offset");
    instance.precedences.push_back(arc);
  }
  Validate(instance);
  return instance;
}

std::string EncodeCanonical(const SchedulingInstance& instance) {
  Json doc;
  doc["name"] = instance.name;
  doc["kind"] = std::string(ToString(instance.kind));
  doc["horizon"] = instance.horizon ? Json(*instance.horizon) : Json(nullptr);
  Json tasks = Json::array();
  for (const Task& task : instance.tasks) {
    tasks.push_back(Json{{"duration", task.duration}, {"demands", task.demands}});
  }
  doc["tasks"] = std::move(tasks);
  Json resources = Json::array();
  for (const Resource& resource : instance.resources) resources.push_back(Json{{"capacity", resource.capacity}});
  doc["resources"] = std::move(resources);
  Json precedences = Json::array();
  for (const PrecedenceArc& arc : instance.precedences) {
    precedences.push_back(Json{{"from", arc.from}, {"to", arc.to}, {"offset", arc.offset}});
  }
  doc["precedences"] = std::move(precedences);
  return doc.dump();
}

}  // namespace cumlift
