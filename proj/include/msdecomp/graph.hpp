#ifndef MSDECOMP_GRAPH_HPP
#define MSDECOMP_GRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "msdecomp/lexicon.hpp"

namespace msd {

struct ClassNode {
  std::string id;    // opaque stable identifier, unique within a graph
  std::string name;  // fully-qualified class name
  TermBag terms;     // raw, pre-normalization token counts

  bool operator==(const ClassNode&) const = default;
};

struct CallEdge {
  std::size_t caller = 0;  // index into MonolithGraph::classes
  std::size_t callee = 0;
  std::int64_t frequency = 0;

  bool operator==(const CallEdge&) const = default;
};

// The monolithic application: classes, weighted directed call edges and
// per-class term bags. Classes are kept sorted by id and edges by
// (caller, callee) so that equal inputs compare equal regardless of the
// order records appeared in.
class MonolithGraph {
public:
  MonolithGraph() = default;
  MonolithGraph(std::vector<ClassNode> classes, std::vector<CallEdge> edges);

  std::size_t size() const { return classes_.size(); }
  const std::vector<ClassNode>& classes() const { return classes_; }
  const std::vector<CallEdge>& edges() const { return edges_; }

  const ClassNode& class_at(std::size_t i) const { return classes_[i]; }
  std::optional<std::size_t> index_of(const std::string& id) const;
  // Throws if the id is unknown.
  std::size_t require_index(const std::string& id) const;

  std::int64_t total_call_frequency() const;
  // Sum of frequencies of edges into class i.
  std::int64_t incoming_frequency(std::size_t i) const;
  std::int64_t outgoing_frequency(std::size_t i) const;
  // Frequency of the edge caller->callee, 0 if absent.
  std::int64_t call(std::size_t caller, std::size_t callee) const;

  bool operator==(const MonolithGraph&) const = default;

private:
  std::vector<ClassNode> classes_;
  std::vector<CallEdge> edges_;
  std::map<std::string, std::size_t> index_;
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> edge_lookup_;
};

struct LoadSummary {
  std::size_t classes = 0;
  std::size_t edges = 0;
  std::int64_t total_frequency = 0;
  std::size_t self_edges_dropped = 0;
  std::size_t duplicate_edges_merged = 0;
};

// Raw records as read from a file, before normalization.
struct GraphRecords {
  std::vector<ClassNode> classes;
  struct EdgeRecord {
    std::string caller;
    std::string callee;
    std::int64_t frequency;
  };
  std::vector<EdgeRecord> edges;
};

// Builds a validated graph from records: self-edges dropped (counted),
// duplicate (caller, callee) records merged by summing frequencies.
MonolithGraph build_graph(const GraphRecords& records, LoadSummary* summary = nullptr);

// Canonical graph format: a JSON document with top-level keys `classes`
// (array of {id, name, terms}) and `edges` (array of {caller, callee,
// frequency}).
MonolithGraph load_graph(const std::string& path, LoadSummary* summary = nullptr);
void save_graph(const MonolithGraph& graph, const std::string& path);

// CSV rows `caller,callee,count` with a header line. An optional class list
// file (one id per line, '#' comments) pins the class set; otherwise classes
// are inferred from edge endpoints. An optional terms file (JSON object
// id -> {token: count}) populates term bags.
MonolithGraph import_dependency_csv(const std::string& csv_path,
                                    const std::string& class_list_path = "",
                                    const std::string& terms_path = "",
                                    LoadSummary* summary = nullptr);

} // namespace msd

#endif
