#include "srtor/document.hpp"

#include <algorithm>

#include <json.hpp>

#include "srtor/errors.hpp"

namespace srtor {

namespace {

using nlohmann::json;

VertexSet to_vertex_set(const std::vector<int>& labels, int m) {
    for (int v : labels) {
        if (v < 1 || v > m)
            throw InputError("vertex " + std::to_string(v) + " outside [1, " + std::to_string(m) + "]");
    }
    return VertexSet::from_labels(labels);
}

std::vector<std::vector<int>> read_sets(const json& j, const char* key) {
    if (!j.is_array()) throw InputError(std::string("'") + key + "' must be an array of arrays");
    std::vector<std::vector<int>> out;
    for (const json& item : j) {
        if (!item.is_array()) throw InputError(std::string("'") + key + "' entries must be arrays");
        std::vector<int> labels;
        for (const json& v : item) {
            if (!v.is_number_integer()) throw InputError(std::string("'") + key + "' labels must be integers");
            labels.push_back(v.get<int>());
        }
        out.push_back(std::move(labels));
    }
    return out;
}

}  // namespace

SimplicialComplex ComplexDocument::complex() const {
    std::vector<VertexSet> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) faces.push_back(to_vertex_set(f, m));
    return SimplicialComplex(m, std::move(faces));
}

std::optional<Complement> ComplexDocument::given_complement() const {
    if (!complement) return std::nullopt;
    std::vector<VertexSet> extra;
    for (const auto& t : *complement) extra.push_back(to_vertex_set(t, m));
    return make_complement(complex(), extra);
}

ComplexDocument ComplexDocument::canonical() const {
    ComplexDocument out = *this;
    out.facets.clear();
    const SimplicialComplex K = complex();
    for (VertexSet f : K.facets()) {
        if (!f.empty()) out.facets.push_back(f.labels());
    }
    return out;
}

ComplexDocument parse_complex(std::string_view text) {
    json j;
    try {
        j = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed document: ") + e.what());
    }
    if (!j.is_object()) throw InputError("document must be a JSON object");
    for (const auto& [key, _] : j.items()) {
        if (key != "m" && key != "facets" && key != "complement" && key != "name")
            throw InputError("unknown key '" + key + "'");
    }
    if (!j.contains("m") || !j["m"].is_number_integer()) throw InputError("'m' must be an integer");
    if (!j.contains("facets")) throw InputError("'facets' is required");

    ComplexDocument doc;
    doc.m = j["m"].get<int>();
    if (doc.m < 1 || doc.m > VertexSet::kMaxVertices)
        throw InputError("'m' must lie in [1, " + std::to_string(VertexSet::kMaxVertices) + "]");
    doc.facets = read_sets(j["facets"], "facets");
    if (j.contains("complement")) doc.complement = read_sets(j["complement"], "complement");
    if (j.contains("name")) {
        if (!j["name"].is_string()) throw InputError("'name' must be a string");
        doc.name = j["name"].get<std::string>();
    }

    // Validates labels and the complement.
    try {
        (void)doc.given_complement();
        (void)doc.complex();
    } catch (const InvalidComplement& e) {
        throw InputError(std::string("invalid complement: ") + e.what());
    }
    return doc;
}

std::string serialize(const ComplexDocument& doc) {
    json j = json::object();
    if (doc.name) j["name"] = *doc.name;
    j["m"] = doc.m;
    j["facets"] = doc.facets;
    if (doc.complement) j["complement"] = *doc.complement;
    return j.dump();
}

ComplexDocument make_document(const SimplicialComplex& K, std::optional<std::string> name) {
    ComplexDocument doc;
    doc.m = K.vertex_count();
    doc.name = std::move(name);
    for (VertexSet f : K.facets()) {
        if (!f.empty()) doc.facets.push_back(f.labels());
    }
    return doc;
}

}  // namespace srtor
