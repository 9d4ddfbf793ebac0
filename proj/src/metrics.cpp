#include "msdecomp/metrics.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace msd {

namespace {

// partition index per class, -1 for classes outside the decomposition
std::vector<int> partition_of(const Decomposition& decomp, const MonolithGraph& graph) {
  decomp.validate(graph);
  std::vector<int> part(graph.size(), -1);
  for (std::size_t p = 0; p < decomp.microservices.size(); ++p) {
    for (const auto& id : decomp.microservices[p].classes)
      part[graph.require_index(id)] = static_cast<int>(p);
  }
  return part;
}

} // namespace

double structural_modularity(const Decomposition& decomp, const MonolithGraph& graph) {
  const std::size_t m = decomp.microservices.size();
  if (m == 0) throw std::invalid_argument("structural_modularity: empty decomposition");
  const std::vector<int> part = partition_of(decomp, graph);

  std::vector<double> intra(m, 0.0);
  std::vector<std::vector<double>> inter(m, std::vector<double>(m, 0.0));
  for (const auto& e : graph.edges()) {
    const int a = part[e.caller];
    const int b = part[e.callee];
    if (a < 0 || b < 0) continue;
    if (a == b) {
      intra[a] += static_cast<double>(e.frequency);
    } else {
      inter[a][b] += static_cast<double>(e.frequency);
    }
  }

  double cohesion = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    const double size = static_cast<double>(decomp.microservices[i].classes.size());
    cohesion += intra[i] / (size * size);
  }
  cohesion /= static_cast<double>(m);

  if (m == 1) return cohesion;

  double coupling = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double gamma = inter[i][j] + inter[j][i];
      const double mi = static_cast<double>(decomp.microservices[i].classes.size());
      const double mj = static_cast<double>(decomp.microservices[j].classes.size());
      coupling += gamma / (2.0 * mi * mj);
    }
  }
  const double pairs = static_cast<double>(m * (m - 1)) / 2.0;
  return cohesion - coupling / pairs;
}

double inter_call_percentage(const Decomposition& decomp, const MonolithGraph& graph) {
  const std::vector<int> part = partition_of(decomp, graph);
  double inter = 0.0;
  double total = 0.0;
  for (const auto& e : graph.edges()) {
    const int a = part[e.caller];
    const int b = part[e.callee];
    if (a < 0 || b < 0) continue;
    total += static_cast<double>(e.frequency);
    if (a != b) inter += static_cast<double>(e.frequency);
  }
  return total == 0.0 ? 0.0 : inter / total;
}

namespace {

std::vector<std::size_t> interface_counts(const Decomposition& decomp,
                                          const MonolithGraph& graph) {
  const std::vector<int> part = partition_of(decomp, graph);
  std::vector<std::set<std::size_t>> interfaces(decomp.microservices.size());
  for (const auto& e : graph.edges()) {
    const int a = part[e.caller];
    const int b = part[e.callee];
    if (a < 0 || b < 0 || a == b) continue;  // caller must sit in another microservice
    interfaces[b].insert(e.callee);
  }
  std::vector<std::size_t> counts(decomp.microservices.size(), 0);
  for (std::size_t i = 0; i < interfaces.size(); ++i) counts[i] = interfaces[i].size();
  return counts;
}

} // namespace

double interface_number(const Decomposition& decomp, const MonolithGraph& graph) {
  if (decomp.microservices.empty())
    throw std::invalid_argument("interface_number: empty decomposition");
  const std::vector<std::size_t> counts = interface_counts(decomp, graph);
  double sum = 0.0;
  for (std::size_t c : counts) sum += static_cast<double>(c);
  return sum / static_cast<double>(counts.size());
}

double non_extreme_distribution(const Decomposition& decomp) {
  const std::size_t m = decomp.microservices.size();
  if (m == 0) throw std::invalid_argument("non_extreme_distribution: empty decomposition");
  std::size_t non_extreme = 0;
  for (const auto& ms : decomp.microservices) {
    const std::size_t size = ms.classes.size();
    if (size >= 5 && size <= 20) ++non_extreme;
  }
  return 1.0 - static_cast<double>(non_extreme) / static_cast<double>(m);
}

MetricsReport summarize(const Decomposition& decomp, const MonolithGraph& graph) {
  MetricsReport report;
  report.sm = structural_modularity(decomp, graph);
  report.icp = inter_call_percentage(decomp, graph);
  report.ifn = interface_number(decomp, graph);
  report.ned = non_extreme_distribution(decomp);
  report.microservice_count = decomp.microservices.size();
  for (const auto& ms : decomp.microservices)
    report.largest_size = std::max(report.largest_size, ms.classes.size());

  const std::vector<int> part = partition_of(decomp, graph);
  std::vector<double> intra(decomp.microservices.size(), 0.0);
  for (const auto& e : graph.edges()) {
    if (part[e.caller] >= 0 && part[e.caller] == part[e.callee])
      intra[part[e.caller]] += static_cast<double>(e.frequency);
  }
  for (std::size_t i = 0; i < decomp.microservices.size(); ++i) {
    const double size = static_cast<double>(decomp.microservices[i].classes.size());
    report.per_partition_scoh.push_back(intra[i] / (size * size));
  }
  report.per_partition_ifn = interface_counts(decomp, graph);
  report.uncovered_classes = decomp.uncovered_classes(graph);
  return report;
}

std::string metrics_to_json(const MetricsReport& report) {
  nlohmann::ordered_json j;
  j["sm"] = report.sm;
  j["icp"] = report.icp;
  j["ifn"] = report.ifn;
  j["ned"] = report.ned;
  j["microservices"] = report.microservice_count;
  j["largest_size"] = report.largest_size;
  j["per_partition"] = nlohmann::ordered_json::array();
  for (std::size_t i = 0; i < report.per_partition_scoh.size(); ++i) {
    nlohmann::ordered_json entry;
    entry["scoh"] = report.per_partition_scoh[i];
    entry["ifn"] = report.per_partition_ifn[i];
    j["per_partition"].push_back(std::move(entry));
  }
  j["uncovered_classes"] = report.uncovered_classes;
  return j.dump(2) + "\n";
}

std::string metrics_to_csv_row(const MetricsReport& report) {
  nlohmann::ordered_json row;  // reuse the shortest-round-trip double format
  std::string out;
  for (double v : {report.sm, report.icp, report.ifn, report.ned}) {
    row = v;
    out += row.dump();
    out += ',';
  }
  out += std::to_string(report.microservice_count);
  out += ',';
  out += std::to_string(report.largest_size);
  return out;
}

} // namespace msd
