#include "msdecomp/gteval.hpp"

#include <algorithm>
#include <stdexcept>

#include <json.hpp>

namespace msd {

CorrMatch corr(const std::set<std::string>& extracted_classes,
               const GroundTruth& truth) {
  if (extracted_classes.empty())
    throw std::invalid_argument("corr: empty extracted microservice");
  if (truth.microservices.empty())
    throw std::invalid_argument("corr: empty ground truth");

  CorrMatch best;
  std::size_t best_common = 0;
  for (std::size_t j = 0; j < truth.microservices.size(); ++j) {
    const auto& candidate = truth.microservices[j].classes;
    std::size_t common = 0;
    for (const auto& id : extracted_classes) common += candidate.count(id);
    if (j == 0 || common > best_common) {  // strict: smaller index wins ties
      best_common = common;
      best.truth_index = j;
    }
  }
  best.overlap =
      static_cast<double>(best_common) / static_cast<double>(extracted_classes.size());
  return best;
}

double precision(const Decomposition& extracted, const GroundTruth& truth) {
  if (extracted.microservices.empty())
    throw std::invalid_argument("precision: empty decomposition");
  double sum = 0.0;
  for (const auto& ms : extracted.microservices) sum += corr(ms.classes, truth).overlap;
  return sum / static_cast<double>(extracted.microservices.size());
}

double success_rate(const Decomposition& extracted, const GroundTruth& truth,
                    double threshold) {
  if (threshold < 0.0 || threshold > 1.0)
    throw std::invalid_argument("success_rate: threshold must be in [0,1]");
  if (extracted.microservices.empty())
    throw std::invalid_argument("success_rate: empty decomposition");
  std::size_t matched = 0;
  for (const auto& ms : extracted.microservices) {
    if (corr(ms.classes, truth).overlap >= threshold) ++matched;
  }
  return static_cast<double>(matched) /
         static_cast<double>(extracted.microservices.size());
}

GroundTruthReport evaluate_ground_truth(const Decomposition& extracted,
                                        const GroundTruth& truth) {
  GroundTruthReport report;
  report.precision = precision(extracted, truth);
  for (int k = 1; k <= 10; ++k)
    report.sr[k] = success_rate(extracted, truth, static_cast<double>(k) / 10.0);
  for (const auto& ms : extracted.microservices) {
    const CorrMatch match = corr(ms.classes, truth);
    report.matches.push_back(
        {ms.name, truth.microservices[match.truth_index].name, match.overlap});
  }
  return report;
}

std::string ground_truth_report_to_json(const GroundTruthReport& report) {
  nlohmann::ordered_json j;
  j["precision"] = report.precision;
  j["sr"] = nlohmann::ordered_json::object();
  for (const auto& [k, value] : report.sr) j["sr"]["sr@" + std::to_string(k)] = value;
  j["matches"] = nlohmann::ordered_json::array();
  for (const auto& match : report.matches) {
    nlohmann::ordered_json entry;
    entry["extracted"] = match.extracted_name;
    entry["corr"] = match.truth_name;
    entry["overlap"] = match.overlap;
    j["matches"].push_back(std::move(entry));
  }
  return j.dump(2) + "\n";
}

} // namespace msd
