#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "srtor/errors.hpp"
#include "srtor/simplicial_complex.hpp"

using namespace srtor;

namespace {

VertexSet vs(std::initializer_list<int> l) { return VertexSet::from_labels(l); }

SimplicialComplex cycle4() { return SimplicialComplex(4, {vs({1, 2}), vs({2, 3}), vs({3, 4}), vs({1, 4})}); }
SimplicialComplex two_points() { return SimplicialComplex(2, {vs({1}), vs({2})}); }

}  // namespace

TEST_CASE("vertex sets") {
    const VertexSet a = vs({1, 3});
    CHECK(a.size() == 2);
    CHECK(a.contains(3));
    CHECK_FALSE(a.contains(2));
    CHECK(a.labels() == std::vector<int>{1, 3});
    CHECK(to_string(a) == "[1,3]");
    CHECK(to_string(VertexSet{}) == "[]");
    CHECK((a | vs({2})) == vs({1, 2, 3}));
    CHECK((a - vs({1})) == vs({3}));
    CHECK(a.complement_in(4) == vs({2, 4}));
    CHECK(vs({4}) < vs({1, 2}));
    CHECK(vs({1, 2}) < vs({1, 3}));
    CHECK_THROWS_AS(vs({0}), std::out_of_range);
    CHECK_THROWS_AS(vs({64}), std::out_of_range);
}

TEST_CASE("simplicial complex basics") {
    const auto K = cycle4();
    CHECK(K.dimension() == 1);
    CHECK(K.contains(VertexSet{}));
    CHECK(K.contains(vs({4})));
    CHECK_FALSE(K.contains(vs({1, 3})));
    CHECK(K.faces().size() == 9);
    CHECK(SimplicialComplex::empty(3).dimension() == -1);
    CHECK(SimplicialComplex::full_simplex(3).is_full_simplex());
    CHECK_FALSE(K.is_full_simplex());
    CHECK(SimplicialComplex(4, {vs({1, 2}), vs({1})}).facets().size() == 1);
    CHECK_THROWS_AS(SimplicialComplex(3, {vs({4})}), std::invalid_argument);
}

TEST_CASE("missing faces") {
    CHECK(missing_faces(SimplicialComplex::full_simplex(3)).empty());
    CHECK(missing_faces(two_points()) == std::vector{vs({1, 2})});
    CHECK(missing_faces(cycle4()) == std::vector{vs({1, 3}), vs({2, 4})});
    // ghost vertex 3 is itself a missing face
    CHECK(missing_faces(SimplicialComplex(3, {vs({1, 2})})) == std::vector{vs({3})});
}

TEST_CASE("all non-faces") {
    CHECK(all_nonfaces(two_points()) == std::vector{vs({1, 2})});
    CHECK(all_nonfaces(cycle4()) == std::vector{vs({1, 3}), vs({2, 4}), vs({1, 2, 3}), vs({1, 2, 4}),
                                                vs({1, 3, 4}), vs({2, 3, 4}), vs({1, 2, 3, 4})});
    CHECK(all_nonfaces(SimplicialComplex::full_simplex(5)).empty());
}

TEST_CASE("make_complement") {
    const auto K = cycle4();
    const VertexSet none[] = {VertexSet{}};
    const auto P0 = make_complement(K, std::span<const VertexSet>(none, 0));
    CHECK(std::vector(P0.generators().begin(), P0.generators().end()) == std::vector{vs({1, 3}), vs({2, 4})});

    const VertexSet extra[] = {vs({1, 2, 3}), vs({1, 2, 3}), vs({1, 3})};
    const auto P1 = make_complement(K, extra);
    CHECK(std::vector(P1.generators().begin(), P1.generators().end()) ==
          std::vector{vs({1, 3}), vs({2, 4}), vs({1, 2, 3})});

    const VertexSet bad[] = {vs({1, 2})};
    CHECK_THROWS_AS(make_complement(K, bad), InvalidComplement);
    CHECK_THROWS_WITH_AS(make_complement(K, bad), doctest::Contains("[1,2]"), InvalidComplement);
}

TEST_CASE("complement validation") {
    const auto K = cycle4();
    CHECK_THROWS_AS(Complement(K, {vs({1, 3})}), InvalidComplement);
    CHECK_THROWS_AS(Complement(K, {vs({1, 3}), vs({2, 4}), vs({2, 4})}), InvalidComplement);
    CHECK_THROWS_AS(Complement(K, {vs({1, 3}), vs({2, 4}), vs({3})}), InvalidComplement);
    CHECK(Complement::maximal(K).size() == 7);
    CHECK(Complement::minimal(SimplicialComplex::full_simplex(2)).size() == 0);
    const auto P = Complement::maximal(K);
    CHECK(P.generators_within(vs({1, 2, 3})) == std::vector<std::size_t>{0, 2});
}

TEST_CASE("full subcomplex") {
    const auto K = cycle4();
    CHECK(full_subcomplex(K, VertexSet{}) == SimplicialComplex::empty(4));
    const auto two = full_subcomplex(K, vs({1, 3}));
    CHECK(std::vector(two.facets().begin(), two.facets().end()) == std::vector{vs({1}), vs({3})});
    CHECK(full_subcomplex(K, VertexSet::full(4)) == K);
}

TEST_CASE("reduced euler characteristic") {
    CHECK(reduced_euler_characteristic(cycle4()) == -1);
    CHECK(reduced_euler_characteristic(two_points()) == 1);
    CHECK(reduced_euler_characteristic(SimplicialComplex::empty(2)) == -1);
    CHECK(reduced_euler_characteristic(SimplicialComplex::full_simplex(4)) == 0);
}

TEST_CASE("missing faces agree with a full scan on random complexes") {
    std::mt19937_64 rng(11);
    for (int trial = 0; trial < 200; ++trial) {
        const int m = 1 + trial % 8;
        const auto K = oracle::random_complex(rng, m);
        const auto mf = missing_faces(K);
        CHECK(mf == oracle::missing_faces(K));

        // antichain
        for (VertexSet a : mf)
            for (VertexSet b : mf)
                if (a != b) CHECK_FALSE(a.is_subset_of(b));

        // K is exactly the sets containing no missing face
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << m); ++s) {
            const VertexSet sigma(s);
            const bool free = std::none_of(mf.begin(), mf.end(), [&](VertexSet t) { return t.is_subset_of(sigma); });
            CHECK(free == K.contains(sigma));
        }

        // every non-face contains a missing face
        for (VertexSet nf : all_nonfaces(K))
            CHECK(std::any_of(mf.begin(), mf.end(), [&](VertexSet t) { return t.is_subset_of(nf); }));
    }
}

TEST_CASE("full subcomplex restriction is idempotent") {
    std::mt19937_64 rng(12);
    for (int trial = 0; trial < 100; ++trial) {
        const int m = 2 + trial % 7;
        const auto K = oracle::random_complex(rng, m);
        const VertexSet J(rng() & VertexSet::full(m).bits());
        const VertexSet J2(rng() & J.bits());
        CHECK(full_subcomplex(full_subcomplex(K, J), J2) == full_subcomplex(K, J2));
        for (VertexSet f : full_subcomplex(K, J).faces()) CHECK(f.is_subset_of(J));
    }
}
