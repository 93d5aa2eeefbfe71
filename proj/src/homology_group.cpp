#include "srtor/homology_group.hpp"

namespace srtor {

std::string to_string(const HomologyGroup& g) {
    if (g.is_zero()) return "0";
    std::string out = "rank " + std::to_string(g.free_rank) + ", torsion [";
    for (std::size_t i = 0; i < g.torsion.size(); ++i) {
        if (i) out += ',';
        out += g.torsion[i].str();
    }
    return out + "]";
}

}  // namespace srtor
