#pragma once

#include <span>
#include <string>
#include <string_view>

#include "srtor/document.hpp"

namespace srtor {

struct CorpusEntry {
    std::string name;
    std::string description;
    ComplexDocument document;
};

/// Named test complexes, all on at most 8 vertices.
std::span<const CorpusEntry> corpus();

/// nullptr when no entry has this name.
const CorpusEntry* find_corpus_entry(std::string_view name);

}  // namespace srtor
