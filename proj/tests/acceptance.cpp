// Acceptance suite: one PASS/FAIL line per criterion.
//   acceptance               run all criteria
//   acceptance --criterion N run one

#include <chrono>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "srtor/complement_chain.hpp"
#include "srtor/corpus.hpp"
#include "srtor/errors.hpp"
#include "srtor/simplicial_homology.hpp"
#include "srtor/tor_engine.hpp"

using namespace srtor;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

const std::vector<Coefficients>& four_systems() {
    static const std::vector<Coefficients> ks = {Coefficients::integers(), Coefficients::rationals(),
                                                 Coefficients::prime_field(2), Coefficients::prime_field(3)};
    return ks;
}

HomologyGroup at(const std::vector<HomologyGroup>& strand, std::size_t i) {
    return i < strand.size() ? strand[i] : HomologyGroup{};
}

bool same_strand(const std::vector<HomologyGroup>& a, const std::vector<HomologyGroup>& b) {
    for (std::size_t i = 0; i < std::max(a.size(), b.size()); ++i)
        if (at(a, i) != at(b, i)) return false;
    return true;
}

std::string where(const std::string& name, const Coefficients& k, VertexSet J) {
    return name + " over " + to_string(k) + " at J=" + to_string(J);
}

// complement route vs Hochster at every (i, J)
Outcome hochster_equality(const BuildOptions& opts) {
    std::size_t groups = 0;
    for (const auto& e : corpus()) {
        const auto K = e.document.complex();
        const auto P = Complement::minimal(K);
        for (const auto& k : four_systems()) {
            for (VertexSet J : candidate_multidegrees(K)) {
                std::vector<HomologyGroup> a;
                try {
                    a = complement_strand(P, J, k, opts);
                } catch (const NonComposable& err) {
                    return {false, where(e.name, k, J) + ": " + err.what()};
                }
                const auto b = hochster_strand(K, J, k);
                if (!same_strand(a, b)) return {false, "mismatch in " + where(e.name, k, J)};
                groups += std::max(a.size(), b.size());
            }
        }
    }
    return {true, std::to_string(corpus().size()) + " complexes x 4 coefficient systems, " + std::to_string(groups) +
                      " groups identical"};
}

Outcome complement_independence() {
    constexpr std::size_t kCap = 24;
    constexpr std::size_t kEvidenceCap = 20;
    Outcome out;
    std::vector<std::string> over_cap;
    std::size_t full_tables = 0, evidence = 0;
    for (const auto& e : corpus()) {
        const auto K = e.document.complex();
        const auto Pmin = Complement::minimal(K);
        const auto Pmax = Complement::maximal(K);
        const auto Js = candidate_multidegrees(K);
        try {
            check_generator_cap(Pmax, Js, {.max_generators = kCap});
        } catch (const SizeLimitExceeded& err) {
            out.pass = false;
            over_cap.push_back(e.name + " (|P_J|=" + std::to_string(err.generator_count()) + " at J=" +
                               to_string(err.multidegree()) + ")");
            // partial agreement where the maximal complex is small enough to build
            for (VertexSet J : Js) {
                if (Pmax.generators_within(J).size() > kEvidenceCap) continue;
                const auto k = Coefficients::rationals();
                if (!same_strand(complement_strand(Pmin, J, k), complement_strand(Pmax, J, k)))
                    return {false, "mismatch in " + where(e.name, k, J)};
                ++evidence;
            }
            continue;
        }
        for (const auto& k : four_systems()) {
            if (!(betti_table(K, Pmin, k) == betti_table(K, Pmax, k)))
                return {false, "tables differ for " + e.name + " over " + to_string(k)};
            ++full_tables;
        }
    }
    std::ostringstream s;
    s << full_tables << " table pairs identical";
    if (!over_cap.empty()) {
        s << "; maximal complement exceeds the " << kCap << "-generator cap for";
        for (const auto& x : over_cap) s << ' ' << x;
        s << "; partial agreement at " << evidence << " multidegrees with |P_J| <= " << kEvidenceCap;
    }
    out.detail = s.str();
    return out;
}

Outcome nerve_shift() {
    std::size_t checked = 0;
    for (const auto& e : corpus()) {
        const auto K = e.document.complex();
        const auto P = Complement::minimal(K);
        if (P.size() == 0) continue;
        const VertexSet all = VertexSet::full(K.vertex_count());
        for (const auto& k : four_systems()) {
            if (!same_strand(nerve_strand(P, k), complement_strand(P, all, k)))
                return {false, "shift fails for " + where(e.name, k, all)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " (complex, coefficients) pairs; full simplices have an empty cover"};
}

Outcome acyclicity() {
    std::size_t checked = 0, skipped = 0;
    for (const auto& e : corpus()) {
        const auto K = e.document.complex();
        for (const auto& P : {Complement::minimal(K), Complement::maximal(K)}) {
            if (P.size() == 0) continue;
            if (P.size() > 20) {
                ++skipped;
                continue;
            }
            for (const auto& g : homology(build_full_exterior_complex(P), Coefficients::integers()))
                if (!g.is_zero()) return {false, e.name + " with r=" + std::to_string(P.size())};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " complements acyclic over Z; " + std::to_string(skipped) +
                      " with r > 20 out of scope"};
}

Outcome differential_soundness(const BuildOptions& opts) {
    constexpr std::size_t kMaximalBudget = 16;
    std::mt19937_64 rng(20240617);
    std::uniform_int_distribution<int> vertices(1, 8);
    std::uniform_int_distribution<std::uint64_t> bits;
    std::size_t complexes_built = 0;
    for (int trial = 0; trial < 100; ++trial) {
        const int m = vertices(rng);
        std::vector<VertexSet> facets;
        const int count = 1 + static_cast<int>(bits(rng) % static_cast<std::uint64_t>(2 * m));
        for (int f = 0; f < count; ++f) facets.emplace_back(bits(rng) & bits(rng) & VertexSet::full(m).bits());
        const SimplicialComplex K(m, facets);
        const auto fail = [&](const std::string& what) {
            return Outcome{false, "complex #" + std::to_string(trial) + " (m=" + std::to_string(m) + "): " + what};
        };
        if (!reduced_chain_complex(K).squares_to_zero()) return fail("simplicial boundary");
        ++complexes_built;
        for (const auto& P : {Complement::minimal(K), Complement::maximal(K)}) {
            if (P.size() == 0) continue;
            for (VertexSet J : candidate_multidegrees(K)) {
                if (P.generators_within(J).size() > kMaximalBudget) continue;
                if (!build_complement_complex(P, J, opts).squares_to_zero()) return fail("d at J=" + to_string(J));
                ++complexes_built;
            }
            if (P.size() <= kMaximalBudget) {
                if (!build_full_exterior_complex(P, opts).squares_to_zero()) return fail("full exterior differential");
                if (!build_nerve_complex(P, opts).squares_to_zero()) return fail("nerve boundary");
                complexes_built += 2;
            }
        }
    }
    return {true, "100 random complexes, " + std::to_string(complexes_built) + " chain complexes square to zero"};
}

Outcome named_values() {
    const auto Q = Coefficients::rationals();
    const auto Z = Coefficients::integers();
    const auto F2 = Coefficients::prime_field(2);
    const HomologyGroup one{1, {}};
    const auto complex_of = [](const char* n) { return find_corpus_entry(n)->document.complex(); };

    const auto c4 = complex_of("cycle-4");
    for (Route route : {Route::Complement, Route::Hochster}) {
        BettiTable expected(4, Q);
        expected.set(0, VertexSet{}, one);
        expected.set(1, VertexSet::from_labels({1, 3}), one);
        expected.set(1, VertexSet::from_labels({2, 4}), one);
        expected.set(2, VertexSet::full(4), one);
        const auto t = betti_table(c4, Q, route);
        if (!(t == expected)) return {false, "4-cycle Betti table"};
        if (to_string(poincare_polynomial(t)) != "1 + 2t^3 + t^6") return {false, "4-cycle polynomial"};
    }
    for (Route route : {Route::Complement, Route::Hochster})
        if (to_string(poincare_polynomial(betti_table(complex_of("cycle-5"), Q, route))) != "1 + 5t^3 + 5t^4 + t^7")
            return {false, "pentagon polynomial"};

    const auto rp = complex_of("rp2-6");
    const auto P = Complement::minimal(rp);
    const VertexSet all = VertexSet::full(6);
    const HomologyGroup z2{0, {BigInt(2)}};
    if (tor_via_complement(rp, P, 3, all, Z) != z2) return {false, "RP2 torsion, complement route"};
    if (tor_via_hochster(rp, 3, all, Z) != z2) return {false, "RP2 torsion, Hochster route"};
    for (int i : {3, 4}) {
        for (bool complement : {true, false}) {
            const auto rank = [&](const Coefficients& k) {
                return (complement ? tor_via_complement(rp, P, i, all, k) : tor_via_hochster(rp, i, all, k)).free_rank;
            };
            if (rank(F2) != rank(Q) + 1)
                return {false, "RP2 F2 rank at (" + std::to_string(i) + ",[6]) is " + std::to_string(rank(F2)) +
                                   ", Q rank " + std::to_string(rank(Q))};
        }
    }
    return {true, "4-cycle table and polynomial, pentagon polynomial, RP2 torsion and F2 classes"};
}

Outcome euler_consistency() {
    const auto Q = Coefficients::rationals();
    std::size_t checked = 0;
    for (const auto& e : corpus()) {
        const auto K = e.document.complex();
        const auto table = betti_table(K, Q, Route::Complement);
        for (std::uint64_t s = 0; s < (std::uint64_t{1} << K.vertex_count()); ++s) {
            const VertexSet J(s);
            long long sum = 0;
            for (int i = 0; i <= J.size(); ++i)
                sum += (i % 2 == 0 ? 1 : -1) * static_cast<long long>(table.at(i, J).free_rank);
            const long long sign = (J.size() + 1) % 2 == 0 ? 1 : -1;
            if (sum != sign * reduced_euler_characteristic(full_subcomplex(K, J)))
                return {false, e.name + " at J=" + to_string(J)};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " multidegrees over Q"};
}

Outcome fault_detection() {
    const BuildOptions faulty{.inject_sign_fault = true};
    const Outcome c1 = hochster_equality(faulty);
    const Outcome c5 = differential_soundness(faulty);
    if (c1.pass && c5.pass) return {false, "a flipped sign went unnoticed"};
    std::string detail = "with one sign flipped:";
    if (!c1.pass) detail += " criterion 1 fails (" + c1.detail + ");";
    if (!c5.pass) detail += " criterion 5 fails (" + c5.detail + ")";
    return {true, detail};
}

struct Criterion {
    int id;
    const char* title;
    std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Acceptance criteria"};
    int only = 0;
    app.add_option("--criterion", only, "Run a single criterion (1-8)")->check(CLI::Range(1, 8));
    CLI11_PARSE(app, argc, argv);

    const std::vector<Criterion> criteria = {
        {1, "Hochster cross-route equality", [] { return hochster_equality({}); }},
        {2, "complement independence", complement_independence},
        {3, "nerve shift", nerve_shift},
        {4, "acyclicity of the full exterior complex", acyclicity},
        {5, "differential soundness", [] { return differential_soundness({}); }},
        {6, "named values", named_values},
        {7, "Euler consistency", euler_consistency},
        {8, "fault detection", fault_detection},
    };

    bool all = true;
    for (const auto& c : criteria) {
        if (only != 0 && c.id != only) continue;
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("criterion %d: %s  %s: %s (%.2f s)\n", c.id, o.pass ? "PASS" : "FAIL", c.title, o.detail.c_str(),
                    secs);
        std::fflush(stdout);
        all = all && o.pass;
    }
    return all ? 0 : 1;
}
