#ifndef MSDECOMP_METRICS_HPP
#define MSDECOMP_METRICS_HPP

#include <string>
#include <vector>

#include "msdecomp/decomposition.hpp"
#include "msdecomp/graph.hpp"

namespace msd {

struct MetricsReport {
  double sm = 0.0;   // structural modularity, higher is better
  double icp = 0.0;  // inter-call percentage in [0,1], lower is better
  double ifn = 0.0;  // mean interface classes per microservice, lower is better
  double ned = 0.0;  // share of extreme-sized microservices in [0,1]
  std::size_t microservice_count = 0;
  std::size_t largest_size = 0;
  std::vector<double> per_partition_scoh;
  std::vector<std::size_t> per_partition_ifn;
  std::vector<std::string> uncovered_classes;
};

// Mean intra-partition cohesion minus mean inter-partition coupling:
// scoh_i = mu_i / m_i^2, scop_ij = gamma_ij / (2 m_i m_j) over unordered
// pairs. A single partition has no coupling term.
double structural_modularity(const Decomposition& decomp, const MonolithGraph& graph);

// Inter-partition call volume over total covered call volume; 0 when the
// graph has no calls between covered classes.
double inter_call_percentage(const Decomposition& decomp, const MonolithGraph& graph);

// Mean over microservices of the number of classes invoked from another
// microservice.
double interface_number(const Decomposition& decomp, const MonolithGraph& graph);

// Fraction of microservices with size outside [5, 20].
double non_extreme_distribution(const Decomposition& decomp);

MetricsReport summarize(const Decomposition& decomp, const MonolithGraph& graph);

// Structured report mirroring the evaluation-table fields.
std::string metrics_to_json(const MetricsReport& report);
// CSV row `sm,icp,ifn,ned,count,largest` (no header).
std::string metrics_to_csv_row(const MetricsReport& report);

} // namespace msd

#endif
