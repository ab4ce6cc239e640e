#pragma once

#include <vector>

namespace pfd {

/// Partition of the edge indices into k pseudoforest classes plus the
/// distinguished red class.
struct Decomposition {
  int k = 0;
  std::vector<std::vector<int>> classes;  // k blue classes
  std::vector<int> red;
};

}  // namespace pfd
