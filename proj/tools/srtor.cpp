// srtor: bigraded Tor of Stanley-Reisner rings from the command line.

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "srtor/corpus.hpp"
#include "srtor/document.hpp"
#include "srtor/errors.hpp"
#include "srtor/tor_engine.hpp"

namespace {

using namespace srtor;

enum ExitCode { kOk = 0, kMismatch = 1, kInputError = 2, kResourceCap = 3 };

struct CommonOptions {
    std::string input;
    std::string complement = "minimal";
    std::size_t max_gens = 24;
    bool inject_fault = false;

    BuildOptions build() const { return {max_gens, inject_fault}; }
};

ComplexDocument load(const std::string& input) {
    if (input.starts_with("corpus:")) {
        const auto* e = find_corpus_entry(input.substr(7));
        if (!e) throw InputError("no corpus entry named '" + input.substr(7) + "'");
        return e->document;
    }
    std::string text;
    if (input == "-") {
        text.assign(std::istreambuf_iterator<char>(std::cin), {});
    } else {
        std::ifstream in(input);
        if (!in) throw InputError("cannot open '" + input + "'");
        text.assign(std::istreambuf_iterator<char>(in), {});
    }
    return parse_complex(text);
}

Complement choose_complement(const ComplexDocument& doc, const SimplicialComplex& K, const std::string& which) {
    if (which == "maximal") return Complement::maximal(K);
    if (which == "given") {
        if (!doc.complement) throw InputError("--complement given, but the document has no complement");
        return *doc.given_complement();
    }
    return Complement::minimal(K);
}

std::string label(const ComplexDocument& doc) { return doc.name.value_or("<unnamed>"); }

nlohmann::json torsion_json(const HomologyGroup& g) {
    auto out = nlohmann::json::array();
    for (const BigInt& t : g.torsion) {
        if (t <= std::numeric_limits<std::uint64_t>::max()) {
            out.push_back(t.convert_to<std::uint64_t>());
        } else {
            out.push_back(t.str());
        }
    }
    return out;
}

std::string torsion_text(const HomologyGroup& g) { return torsion_json(g).dump(); }

int run_betti(const CommonOptions& opt, const std::string& coeffs, const std::string& route, const std::string& format) {
    const ComplexDocument doc = load(opt.input);
    const SimplicialComplex K = doc.complex();
    const Coefficients k = Coefficients::parse(coeffs);
    const BettiTable table = route == "hochster"
                                 ? betti_table(K, k, Route::Hochster)
                                 : betti_table(K, choose_complement(doc, K, opt.complement), k, opt.build());
    std::optional<Polynomial> poincare;
    if (k.is_field()) poincare = poincare_polynomial(table);

    if (format == "machine") {
        for (const auto& [key, g] : table.entries()) {
            nlohmann::json rec = {{"i", key.degree}, {"J", key.multidegree.labels()}, {"rank", g.free_rank},
                                  {"torsion", torsion_json(g)}};
            std::cout << rec.dump() << '\n';
        }
        if (poincare) std::cout << nlohmann::json{{"poincare", poincare->coefficients}}.dump() << '\n';
        return kOk;
    }
    std::cout << "# " << label(doc) << " (m=" << K.vertex_count() << ") coeffs=" << to_string(k) << " route=" << route;
    if (route != "hochster") std::cout << " complement=" << opt.complement;
    std::cout << "\ni | J | rank | torsion\n";
    for (const auto& [key, g] : table.entries()) {
        std::cout << key.degree << " | " << to_string(key.multidegree) << " | " << g.free_rank << " | "
                  << torsion_text(g) << '\n';
    }
    if (poincare) std::cout << "poincare: " << to_string(*poincare) << '\n';
    return kOk;
}

std::string group_or_dash(const std::optional<HomologyGroup>& g) { return g ? to_string(*g) : "-"; }

int run_verify(const CommonOptions& opt, std::vector<std::string> coeffs) {
    const ComplexDocument doc = load(opt.input);
    const SimplicialComplex K = doc.complex();
    const Complement P = choose_complement(doc, K, opt.complement);
    if (coeffs.empty()) coeffs = {"Z", "Q", "Fp:2"};
    std::vector<Coefficients> ks;
    for (const auto& c : coeffs) ks.push_back(Coefficients::parse(c));

    const VerificationReport report = verify(K, P, ks, opt.build());
    const auto bad = report.mismatches();
    std::cout << "verify " << label(doc) << ": coeffs";
    for (const auto& k : ks) std::cout << ' ' << to_string(k);
    std::cout << "; complement " << opt.complement << " (r=" << P.size() << ")\n";
    std::cout << "comparisons: " << report.comparisons.size() << ", mismatches: " << bad.size()
              << ", skipped: " << report.skipped.size() << '\n';
    for (const auto& s : report.skipped) std::cout << "skipped: " << s << '\n';
    for (const auto& row : bad) {
        std::cout << "MISMATCH coeffs=" << to_string(row.coefficients) << " i=" << row.degree
                  << " J=" << to_string(row.multidegree) << ": complement=" << to_string(row.complement)
                  << " hochster=" << to_string(row.hochster) << " maximal=" << group_or_dash(row.maximal)
                  << " nerve=" << group_or_dash(row.nerve);
        if (row.defect) std::cout << " defect=\"" << *row.defect << '"';
        std::cout << '\n';
    }
    std::cout << (report.passed() ? "PASS" : "FAIL") << '\n';
    return report.passed() ? kOk : kMismatch;
}

int run_nerve(const CommonOptions& opt, const std::string& coeffs) {
    const ComplexDocument doc = load(opt.input);
    const SimplicialComplex K = doc.complex();
    const Complement P = choose_complement(doc, K, opt.complement);
    const Coefficients k = Coefficients::parse(coeffs);
    if (P.size() == 0) {
        std::cout << "# " << label(doc) << ": K is a full simplex; the nerve of an empty cover is not compared\n";
        return kOk;
    }
    const auto nerve = nerve_strand(P, k, opt.build());
    const auto direct = complement_strand(P, VertexSet::full(K.vertex_count()), k, opt.build());
    std::cout << "# " << label(doc) << " coeffs=" << to_string(k) << " complement=" << opt.complement
              << " (r=" << P.size() << ")\nn | H_n(complement, J=[m]) | H~_{n-2}(nerve) | match\n";
    bool all = true;
    const std::size_t top = std::max(nerve.size(), direct.size());
    for (std::size_t n = 0; n < top; ++n) {
        const HomologyGroup a = n < direct.size() ? direct[n] : HomologyGroup{};
        const HomologyGroup b = n < nerve.size() ? nerve[n] : HomologyGroup{};
        all = all && a == b;
        if (a.is_zero() && b.is_zero()) continue;
        std::cout << n << " | " << to_string(a) << " | " << to_string(b) << " | " << (a == b ? "yes" : "NO") << '\n';
    }
    return all ? kOk : kMismatch;
}

void add_common(CLI::App* cmd, CommonOptions& opt) {
    cmd->add_option("input", opt.input, "JSON document path, '-' for stdin, or corpus:<name>")->required();
    cmd->add_option("--complement", opt.complement, "Simplicial complement")
        ->check(CLI::IsMember({"minimal", "maximal", "given"}));
    cmd->add_option("--max-gens", opt.max_gens, "Largest generator count a builder will enumerate");
    cmd->add_flag("--inject-sign-fault", opt.inject_fault, "Testing: negate one boundary coefficient")
        ->group("");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Bigraded Tor groups of Stanley-Reisner face rings"};
    app.require_subcommand(1);

    CommonOptions betti_opt;
    std::string betti_coeffs = "Q";
    std::string route = "complement";
    std::string format = "text";
    auto* betti = app.add_subcommand("betti", "Print the sparse Betti table");
    add_common(betti, betti_opt);
    betti->add_option("--coeffs", betti_coeffs, "Z | Q | Fp:<p>");
    betti->add_option("--route", route, "Engine")->check(CLI::IsMember({"complement", "hochster"}));
    betti->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "machine"}));

    CommonOptions verify_opt;
    std::vector<std::string> verify_coeffs;
    auto* verify_cmd = app.add_subcommand("verify", "Cross-check every route");
    add_common(verify_cmd, verify_opt);
    verify_cmd->add_option("--coeffs", verify_coeffs, "Z | Q | Fp:<p>; repeatable (default Z, Q, Fp:2)");

    CommonOptions nerve_opt;
    std::string nerve_coeffs = "Z";
    auto* nerve = app.add_subcommand("nerve", "Compare the nerve with the complement complex at J=[m]");
    add_common(nerve, nerve_opt);
    nerve->add_option("--coeffs", nerve_coeffs, "Z | Q | Fp:<p>");

    auto* corpus_cmd = app.add_subcommand("corpus", "Named complexes shipped with the tool");
    corpus_cmd->require_subcommand(1);
    auto* list = corpus_cmd->add_subcommand("list", "List corpus entries");
    std::string show_name;
    auto* show = corpus_cmd->add_subcommand("show", "Print one entry as a JSON document");
    show->add_option("name", show_name)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? kOk : kInputError;
    }

    try {
        if (*betti) return run_betti(betti_opt, betti_coeffs, route, format);
        if (*verify_cmd) return run_verify(verify_opt, verify_coeffs);
        if (*nerve) return run_nerve(nerve_opt, nerve_coeffs);
        if (*list) {
            for (const auto& e : srtor::corpus())
                std::cout << e.name << "  m=" << e.document.m << "  " << e.description << '\n';
            return kOk;
        }
        if (*show) {
            const auto* e = srtor::find_corpus_entry(show_name);
            if (!e) throw srtor::InputError("no corpus entry named '" + show_name + "'");
            std::cout << srtor::serialize(e->document) << '\n';
            return kOk;
        }
    } catch (const srtor::SizeLimitExceeded& e) {
        std::cerr << "error: " << e.what() << " (raise --max-gens to allow it)\n";
        return kResourceCap;
    } catch (const srtor::InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const srtor::InvalidComplement& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kInputError;
    }
    return kOk;
}
