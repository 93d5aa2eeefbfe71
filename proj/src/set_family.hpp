#pragma once

// Chain complexes whose cells are a family of finite sets encoded as
// bitmasks, with the alternating deletion differential restricted to the
// family. Every builder in the library reduces to this.

#include <cstddef>
#include <vector>

#include "srtor/chain_complex.hpp"

namespace srtor::detail {

/// levels[s] holds the cells of cardinality s in ascending mask order. A cell
/// of cardinality s gets degree s + degree_shift. Deleting the bit at
/// ascending position p carries the sign (-1)^p; faces outside the family
/// are dropped.
FreeChainComplex family_chain_complex(const std::vector<std::vector<Generator>>& levels,
                                      int degree_shift, bool inject_sign_fault = false);

}  // namespace srtor::detail
