#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "srtor/simplicial_complex.hpp"

namespace srtor {

/// JSON input document:
///
///   {"name": "cycle-4", "m": 4, "facets": [[1,2],[2,3],[3,4],[1,4]],
///    "complement": [[1,2,3]]}
///
/// Labels are 1-based. "name" and "complement" are optional; complement
/// entries are extra non-faces appended after MF(K).
struct ComplexDocument {
    int m = 0;
    std::vector<std::vector<int>> facets;
    std::optional<std::vector<std::vector<int>>> complement;
    std::optional<std::string> name;

    SimplicialComplex complex() const;
    /// make_complement(complex(), complement) when a complement is present.
    std::optional<Complement> given_complement() const;
    /// Facets replaced by the sorted maximal faces, labels ascending.
    ComplexDocument canonical() const;

    friend bool operator==(const ComplexDocument&, const ComplexDocument&) = default;
};

/// Throws InputError on malformed JSON, unknown keys, labels outside [1, m],
/// or a complement entry that is a face.
ComplexDocument parse_complex(std::string_view text);

/// Compact single-line JSON with keys in a fixed order.
std::string serialize(const ComplexDocument& doc);

/// Builds a document from a complex (facets in canonical order).
ComplexDocument make_document(const SimplicialComplex& K, std::optional<std::string> name = std::nullopt);

}  // namespace srtor
