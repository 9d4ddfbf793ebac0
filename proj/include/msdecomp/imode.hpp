#ifndef MSDECOMP_IMODE_HPP
#define MSDECOMP_IMODE_HPP

#include <vector>

#include "msdecomp/lexicon.hpp"

namespace msd {

// Intermediate mode: a per-cell Mean Shift cluster with its member classes
// and their aggregated structural and semantic content.
struct IMode {
  std::vector<std::size_t> members;  // class indices, ascending, non-empty
  std::vector<double> structural;    // sum of member structural feature rows
  TermBag term_freq;                 // sum of member normalized term counts

  bool operator==(const IMode&) const = default;
};

} // namespace msd

#endif
