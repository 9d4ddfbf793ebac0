#include "msdecomp/decomposition.hpp"

#include <fstream>
#include <stdexcept>

#include <json.hpp>

namespace msd {

using json = nlohmann::ordered_json;

std::size_t Decomposition::total_classes() const {
  std::size_t n = 0;
  for (const auto& ms : microservices) n += ms.classes.size();
  return n;
}

bool Decomposition::contains(const std::string& class_id) const {
  for (const auto& ms : microservices)
    if (ms.classes.count(class_id)) return true;
  return false;
}

void Decomposition::validate(const MonolithGraph& graph) const {
  std::set<std::string> seen;
  for (const auto& ms : microservices) {
    if (ms.classes.empty())
      throw std::invalid_argument("microservice '" + ms.name + "' is empty");
    for (const auto& id : ms.classes) {
      if (!graph.index_of(id))
        throw std::invalid_argument("microservice '" + ms.name +
                                    "' references unknown class: " + id);
      if (!seen.insert(id).second)
        throw std::invalid_argument("class assigned to several microservices: " + id);
    }
  }
}

bool Decomposition::is_partition_of(const MonolithGraph& graph) const {
  try {
    validate(graph);
  } catch (const std::invalid_argument&) {
    return false;
  }
  return uncovered_classes(graph).empty();
}

std::vector<std::string> Decomposition::uncovered_classes(
    const MonolithGraph& graph) const {
  std::set<std::string> covered;
  for (const auto& ms : microservices)
    covered.insert(ms.classes.begin(), ms.classes.end());
  std::vector<std::string> missing;
  for (const auto& node : graph.classes())
    if (!covered.count(node.id)) missing.push_back(node.id);
  return missing;
}

Decomposition load_decomposition(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed decomposition file " + path + ": " + e.what());
  }
  if (!j.is_object() || !j.contains("microservices"))
    throw std::runtime_error("decomposition file missing 'microservices': " + path);

  Decomposition decomp;
  for (const auto& entry : j.at("microservices")) {
    Decomposition::Microservice ms;
    ms.name = entry.contains("name")
                  ? entry.at("name").get<std::string>()
                  : "ms_" + std::to_string(decomp.microservices.size());
    for (const auto& id : entry.at("classes"))
      ms.classes.insert(id.get<std::string>());
    decomp.microservices.push_back(std::move(ms));
  }
  return decomp;
}

void save_decomposition(const Decomposition& decomp, const std::string& path) {
  json j;
  j["microservices"] = json::array();
  for (const auto& ms : decomp.microservices) {
    json entry;
    entry["name"] = ms.name;
    entry["classes"] = json::array();
    for (const auto& id : ms.classes) entry["classes"].push_back(id);
    j["microservices"].push_back(std::move(entry));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

} // namespace msd
