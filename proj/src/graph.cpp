#include "msdecomp/graph.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace msd {

using json = nlohmann::ordered_json;

MonolithGraph::MonolithGraph(std::vector<ClassNode> classes, std::vector<CallEdge> edges)
    : classes_(std::move(classes)), edges_(std::move(edges)) {
  if (classes_.empty())
    throw std::invalid_argument("MonolithGraph: empty class list");
  std::sort(classes_.begin(), classes_.end(),
            [](const ClassNode& a, const ClassNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < classes_.size(); ++i) {
    if (classes_[i].name.empty())
      throw std::invalid_argument("MonolithGraph: class with empty name: " +
                                  classes_[i].id);
    if (!index_.emplace(classes_[i].id, i).second)
      throw std::invalid_argument("MonolithGraph: duplicate class id: " +
                                  classes_[i].id);
  }
  for (auto& e : edges_) {
    if (e.caller >= classes_.size() || e.callee >= classes_.size())
      throw std::invalid_argument("MonolithGraph: edge endpoint out of range");
    if (e.caller == e.callee)
      throw std::invalid_argument("MonolithGraph: self-edge not allowed");
    if (e.frequency < 1)
      throw std::invalid_argument("MonolithGraph: edge frequency must be >= 1");
  }
  std::sort(edges_.begin(), edges_.end(), [](const CallEdge& a, const CallEdge& b) {
    return std::tie(a.caller, a.callee) < std::tie(b.caller, b.callee);
  });
  for (const auto& e : edges_) {
    if (!edge_lookup_.emplace(std::make_pair(e.caller, e.callee), e.frequency).second)
      throw std::invalid_argument("MonolithGraph: duplicate edge");
  }
}

std::optional<std::size_t> MonolithGraph::index_of(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t MonolithGraph::require_index(const std::string& id) const {
  auto it = index_.find(id);
  if (it == index_.end())
    throw std::invalid_argument("unknown class id: " + id);
  return it->second;
}

std::int64_t MonolithGraph::total_call_frequency() const {
  std::int64_t sum = 0;
  for (const auto& e : edges_) sum += e.frequency;
  return sum;
}

std::int64_t MonolithGraph::incoming_frequency(std::size_t i) const {
  std::int64_t sum = 0;
  for (const auto& e : edges_)
    if (e.callee == i) sum += e.frequency;
  return sum;
}

std::int64_t MonolithGraph::outgoing_frequency(std::size_t i) const {
  std::int64_t sum = 0;
  for (const auto& e : edges_)
    if (e.caller == i) sum += e.frequency;
  return sum;
}

std::int64_t MonolithGraph::call(std::size_t caller, std::size_t callee) const {
  auto it = edge_lookup_.find(std::make_pair(caller, callee));
  return it == edge_lookup_.end() ? 0 : it->second;
}

MonolithGraph build_graph(const GraphRecords& records, LoadSummary* summary) {
  if (records.classes.empty())
    throw std::invalid_argument("graph has no classes");

  std::map<std::string, std::size_t> ids;
  std::vector<ClassNode> classes = records.classes;
  std::sort(classes.begin(), classes.end(),
            [](const ClassNode& a, const ClassNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < classes.size(); ++i) {
    if (!ids.emplace(classes[i].id, i).second)
      throw std::invalid_argument("duplicate class id: " + classes[i].id);
  }

  LoadSummary local;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> merged;
  for (const auto& rec : records.edges) {
    auto caller = ids.find(rec.caller);
    auto callee = ids.find(rec.callee);
    if (caller == ids.end())
      throw std::invalid_argument("edge references unknown class id: " + rec.caller);
    if (callee == ids.end())
      throw std::invalid_argument("edge references unknown class id: " + rec.callee);
    if (rec.frequency < 1)
      throw std::invalid_argument("edge frequency must be >= 1 (" + rec.caller +
                                  " -> " + rec.callee + ")");
    if (caller->second == callee->second) {
      ++local.self_edges_dropped;
      continue;
    }
    auto [it, inserted] =
        merged.emplace(std::make_pair(caller->second, callee->second), rec.frequency);
    if (!inserted) {
      it->second += rec.frequency;
      ++local.duplicate_edges_merged;
    }
  }

  std::vector<CallEdge> edges;
  edges.reserve(merged.size());
  for (const auto& [key, freq] : merged)
    edges.push_back(CallEdge{key.first, key.second, freq});

  MonolithGraph graph(std::move(classes), std::move(edges));
  local.classes = graph.size();
  local.edges = graph.edges().size();
  local.total_frequency = graph.total_call_frequency();
  if (summary) *summary = local;
  return graph;
}

namespace {

TermBag terms_from_json(const json& j, const std::string& context) {
  TermBag bag;
  if (!j.is_object())
    throw std::runtime_error("malformed terms for " + context + ": expected object");
  for (const auto& [token, count] : j.items()) {
    if (!count.is_number_integer() || count.get<std::int64_t>() < 1)
      throw std::runtime_error("malformed term count for " + context + ": " + token);
    bag.add(token, count.get<std::int64_t>());
  }
  return bag;
}

json terms_to_json(const TermBag& bag) {
  json j = json::object();
  for (const auto& [token, count] : bag.counts) j[token] = count;
  return j;
}

json parse_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw std::runtime_error("malformed graph file " + path + ": " + e.what());
  }
  return j;
}

} // namespace

MonolithGraph load_graph(const std::string& path, LoadSummary* summary) {
  const json j = parse_file(path);
  if (!j.is_object() || !j.contains("classes"))
    throw std::runtime_error("malformed graph file " + path + ": missing 'classes'");

  GraphRecords records;
  for (const auto& c : j.at("classes")) {
    if (!c.is_object() || !c.contains("id"))
      throw std::runtime_error("malformed class record in " + path);
    ClassNode node;
    node.id = c.at("id").get<std::string>();
    node.name = c.contains("name") ? c.at("name").get<std::string>() : node.id;
    if (c.contains("terms")) node.terms = terms_from_json(c.at("terms"), node.id);
    records.classes.push_back(std::move(node));
  }
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      if (!e.is_object() || !e.contains("caller") || !e.contains("callee") ||
          !e.contains("frequency") || !e.at("frequency").is_number_integer())
        throw std::runtime_error("malformed edge record in " + path);
      records.edges.push_back({e.at("caller").get<std::string>(),
                               e.at("callee").get<std::string>(),
                               e.at("frequency").get<std::int64_t>()});
    }
  }
  return build_graph(records, summary);
}

void save_graph(const MonolithGraph& graph, const std::string& path) {
  json j;
  j["classes"] = json::array();
  for (const auto& c : graph.classes()) {
    json node;
    node["id"] = c.id;
    node["name"] = c.name;
    node["terms"] = terms_to_json(c.terms);
    j["classes"].push_back(std::move(node));
  }
  j["edges"] = json::array();
  for (const auto& e : graph.edges()) {
    json edge;
    edge["caller"] = graph.class_at(e.caller).id;
    edge["callee"] = graph.class_at(e.callee).id;
    edge["frequency"] = e.frequency;
    j["edges"].push_back(std::move(edge));
  }
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << j.dump(2) << '\n';
}

namespace {

std::string trim(const std::string& s) {
  std::size_t begin = 0;
  std::size_t end = s.size();
  while (begin < end && std::isspace(static_cast<unsigned char>(s[begin]))) ++begin;
  while (end > begin && std::isspace(static_cast<unsigned char>(s[end - 1]))) --end;
  return s.substr(begin, end - begin);
}

} // namespace

MonolithGraph import_dependency_csv(const std::string& csv_path,
                                    const std::string& class_list_path,
                                    const std::string& terms_path,
                                    LoadSummary* summary) {
  std::ifstream in(csv_path);
  if (!in) throw std::runtime_error("cannot open file: " + csv_path);

  GraphRecords records;
  std::set<std::string> known;

  if (!class_list_path.empty()) {
    std::ifstream list(class_list_path);
    if (!list) throw std::runtime_error("cannot open file: " + class_list_path);
    std::string line;
    while (std::getline(list, line)) {
      const auto hash = line.find('#');
      if (hash != std::string::npos) line.erase(hash);
      const std::string id = trim(line);
      if (!id.empty() && known.insert(id).second)
        records.classes.push_back(ClassNode{id, id, {}});
    }
  }

  std::string line;
  if (!std::getline(in, line))
    throw std::runtime_error("empty CSV: " + csv_path);
  if (trim(line) != "caller,callee,count")
    throw std::runtime_error("CSV header must be 'caller,callee,count': " + csv_path);

  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) continue;
    std::stringstream row(line);
    std::string caller, callee, count_text;
    if (!std::getline(row, caller, ',') || !std::getline(row, callee, ',') ||
        !std::getline(row, count_text))
      throw std::runtime_error("malformed CSV row at line " + std::to_string(line_no));
    caller = trim(caller);
    callee = trim(callee);
    std::int64_t count = 0;
    try {
      std::size_t consumed = 0;
      count = std::stoll(trim(count_text), &consumed);
      if (consumed != trim(count_text).size()) throw std::invalid_argument("trailing");
    } catch (const std::exception&) {
      throw std::runtime_error("malformed count at line " + std::to_string(line_no));
    }
    if (count < 1)
      throw std::runtime_error("count must be >= 1 at line " + std::to_string(line_no));
    if (caller.empty() || callee.empty())
      throw std::runtime_error("empty class id at line " + std::to_string(line_no));
    if (class_list_path.empty()) {
      for (const auto& id : {caller, callee}) {
        if (known.insert(id).second) records.classes.push_back(ClassNode{id, id, {}});
      }
    }
    records.edges.push_back({caller, callee, count});
  }

  if (!terms_path.empty()) {
    const json j = parse_file(terms_path);
    if (!j.is_object())
      throw std::runtime_error("terms file must be a JSON object: " + terms_path);
    for (auto& node : records.classes) {
      if (j.contains(node.id)) node.terms = terms_from_json(j.at(node.id), node.id);
    }
  }

  return build_graph(records, summary);
}

} // namespace msd
