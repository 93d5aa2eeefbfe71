#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "srtor/integer.hpp"

namespace srtor {

/// Finitely generated abelian group Z^free_rank ⊕ ⊕_i Z/t_i in invariant
/// factor form: every t_i > 1 and t_i | t_{i+1}. Over a field the torsion
/// list is empty and free_rank is the dimension.
struct HomologyGroup {
    std::size_t free_rank = 0;
    std::vector<BigInt> torsion;

    bool is_zero() const { return free_rank == 0 && torsion.empty(); }

    friend bool operator==(const HomologyGroup&, const HomologyGroup&) = default;
};

/// "rank 2, torsion [2,4]"; the zero group renders as "0".
std::string to_string(const HomologyGroup& g);

}  // namespace srtor
