#ifndef MSDECOMP_GTEVAL_HPP
#define MSDECOMP_GTEVAL_HPP

#include <map>
#include <string>

#include "msdecomp/decomposition.hpp"

namespace msd {

// The reference decomposition shares the Decomposition shape and file format.
using GroundTruth = Decomposition;

struct CorrMatch {
  std::size_t truth_index = 0;
  double overlap = 0.0;  // |m_i intersect truth| / |m_i|
};

struct GroundTruthReport {
  double precision = 0.0;
  std::map<int, double> sr;  // threshold k/10 for k = 1..10
  struct Match {
    std::string extracted_name;
    std::string truth_name;
    double overlap = 0.0;
  };
  std::vector<Match> matches;
};

// Best-overlapping ground-truth microservice for one extracted class set;
// ties break toward the smaller truth index.
CorrMatch corr(const std::set<std::string>& extracted_classes, const GroundTruth& truth);

// Mean over extracted microservices of the overlap with their corr target.
double precision(const Decomposition& extracted, const GroundTruth& truth);

// Fraction of extracted microservices whose overlap ratio meets the
// threshold.
double success_rate(const Decomposition& extracted, const GroundTruth& truth,
                    double threshold);

// Precision, SR@k for k = 1..10 and the per-microservice matching table.
GroundTruthReport evaluate_ground_truth(const Decomposition& extracted,
                                        const GroundTruth& truth);

std::string ground_truth_report_to_json(const GroundTruthReport& report);

} // namespace msd

#endif
