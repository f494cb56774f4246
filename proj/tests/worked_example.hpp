#pragma once

// The short worked V_10 instance used across the traceback tests.

#include "dcsp/instance.hpp"

namespace dcsp::testing {

struct WorkedExample {
  GroupSpec spec{10};
  Word a{2, 2, 3, 4, 5, -4, 7, -6, 9, 10};
  Word b{2, 2, 4, 5, -4, 3, 7, -6, 10, 9};
  Word chi{3, -2, -3, 5, 7};
  Word zeta{5, 2, 3, -7, 10};

  DcspInstance instance() const {
    // V(Y) = V_7, V(Z) = V_10
    return DcspInstance::make(
        spec, GeneratorSubset::of({1, 2, 3, 4, 5, 6, 7}, spec),
        GeneratorSubset::of({1, 2, 3, 4, 5, 6, 7, 8, 9, 10}, spec), a, b);
  }
};

}  // namespace dcsp::testing
