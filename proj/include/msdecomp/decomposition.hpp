#ifndef MSDECOMP_DECOMPOSITION_HPP
#define MSDECOMP_DECOMPOSITION_HPP

#include <set>
#include <string>
#include <vector>

#include "msdecomp/graph.hpp"

namespace msd {

// A partition of class ids into named microservices. Ground-truth
// decompositions use the same shape and file format.
struct Decomposition {
  struct Microservice {
    std::string name;
    std::set<std::string> classes;

    bool operator==(const Microservice&) const = default;
  };
  std::vector<Microservice> microservices;

  std::size_t total_classes() const;
  bool contains(const std::string& class_id) const;

  // Throws unless microservices are non-empty, pairwise disjoint and refer
  // only to classes of the graph.
  void validate(const MonolithGraph& graph) const;
  // True when validate() passes and every graph class is covered.
  bool is_partition_of(const MonolithGraph& graph) const;
  std::vector<std::string> uncovered_classes(const MonolithGraph& graph) const;

  bool operator==(const Decomposition&) const = default;
};

Decomposition load_decomposition(const std::string& path);
void save_decomposition(const Decomposition& decomp, const std::string& path);

} // namespace msd

#endif
