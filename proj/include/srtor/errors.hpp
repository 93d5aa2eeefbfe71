#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "srtor/vertex_set.hpp"

namespace srtor {

class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A proposed complement generator is a face of K (or otherwise breaks the
/// complement invariants).
class InvalidComplement : public Error {
public:
    InvalidComplement(const std::string& what, VertexSet offending)
        : Error(what), offending_(offending) {}

    VertexSet offending() const { return offending_; }

private:
    VertexSet offending_;
};

/// A builder refused to enumerate 2^n subsets for n above the configured cap.
class SizeLimitExceeded : public Error {
public:
    SizeLimitExceeded(VertexSet multidegree, std::size_t generators, std::size_t limit)
        : Error("generator count " + std::to_string(generators) + " in multidegree J=" +
                to_string(multidegree) + " exceeds the cap of " + std::to_string(limit)),
          multidegree_(multidegree), generators_(generators), limit_(limit) {}

    VertexSet multidegree() const { return multidegree_; }
    std::size_t generator_count() const { return generators_; }
    std::size_t limit() const { return limit_; }

private:
    VertexSet multidegree_;
    std::size_t generators_;
    std::size_t limit_;
};

/// d_out * d_in != 0, or the shapes do not line up.
class NonComposable : public Error {
public:
    using Error::Error;
};

/// Malformed or out-of-range input document.
class InputError : public Error {
public:
    using Error::Error;
};

}  // namespace srtor
