#include "srtor/corpus.hpp"

#include <algorithm>
#include <vector>

namespace srtor {

namespace {

using Facets = std::vector<std::vector<int>>;

CorpusEntry entry(std::string name, std::string description, int m, Facets facets) {
    ComplexDocument doc;
    doc.name = name;
    doc.m = m;
    doc.facets = std::move(facets);
    return {std::move(name), std::move(description), std::move(doc)};
}

Facets simplex_facet(int m) {
    std::vector<int> all;
    for (int v = 1; v <= m; ++v) all.push_back(v);
    return {all};
}

Facets simplex_boundary(int m) {
    Facets out;
    for (int skip = 1; skip <= m; ++skip) {
        std::vector<int> f;
        for (int v = 1; v <= m; ++v) {
            if (v != skip) f.push_back(v);
        }
        out.push_back(std::move(f));
    }
    return out;
}

Facets cycle(int m) {
    Facets out;
    for (int v = 1; v < m; ++v) out.push_back({v, v + 1});
    out.push_back({1, m});
    return out;
}

std::vector<CorpusEntry> build() {
    std::vector<CorpusEntry> out;
    for (int m : {1, 3, 4})
        out.push_back(entry("simplex-" + std::to_string(m), "full simplex on [" + std::to_string(m) + "]", m,
                            simplex_facet(m)));
    for (int k : {2, 3, 4})
        out.push_back(entry("simplex-boundary-" + std::to_string(k),
                            "boundary of the " + std::to_string(k) + "-simplex", k + 1, simplex_boundary(k + 1)));
    for (int m = 4; m <= 8; ++m)
        out.push_back(entry("cycle-" + std::to_string(m), std::to_string(m) + "-gon", m, cycle(m)));
    out.push_back(entry("two-points", "two disjoint vertices", 2, {{1}, {2}}));
    out.push_back(entry("point-and-edge", "a vertex and a disjoint edge", 3, {{1}, {2, 3}}));
    out.push_back(entry("two-edges", "two disjoint edges", 4, {{1, 2}, {3, 4}}));
    out.push_back(entry("triangle-and-point", "a filled triangle and a disjoint vertex", 4, {{1, 2, 3}, {4}}));
    out.push_back(entry("edge-with-ghost", "an edge on [3]; vertex 3 is a ghost", 3, {{1, 2}}));
    out.push_back(entry("rp2-6", "6-vertex triangulation of the real projective plane", 6,
                        {{1, 2, 3}, {1, 3, 4}, {1, 4, 5}, {1, 5, 6}, {1, 2, 6},
                         {2, 3, 5}, {2, 4, 5}, {2, 4, 6}, {3, 4, 6}, {3, 5, 6}}));
    out.push_back(entry("octahedron", "boundary of the octahedron, join of three copies of two points", 6,
                        {{1, 3, 5}, {1, 3, 6}, {1, 4, 5}, {1, 4, 6}, {2, 3, 5}, {2, 3, 6}, {2, 4, 5}, {2, 4, 6}}));
    return out;
}

}  // namespace

std::span<const CorpusEntry> corpus() {
    static const std::vector<CorpusEntry> entries = build();
    return entries;
}

const CorpusEntry* find_corpus_entry(std::string_view name) {
    const auto all = corpus();
    const auto it = std::find_if(all.begin(), all.end(), [&](const CorpusEntry& e) { return e.name == name; });
    return it == all.end() ? nullptr : &*it;
}

}  // namespace srtor
