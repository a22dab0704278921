// Command-line front end: oracles, certifying operations, constructions and
// certificate checking over the text digraph format.
#include <CLI11.hpp>

#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>

#include "cyclewright/antidirected.hpp"
#include "cyclewright/certs.hpp"
#include "cyclewright/constructions.hpp"
#include "cyclewright/handles.hpp"
#include "cyclewright/hamiltonian.hpp"
#include "cyclewright/leveling.hpp"
#include "cyclewright/oracles.hpp"

using namespace cw;

namespace {

enum Exit { kOk = 0, kOther = 1, kPrecondition = 2, kBudget = 3, kVerification = 4 };

struct VerificationFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Options {
    std::string input, output;
    std::uint64_t seed = 0;
    std::int64_t node_budget = -1;
    double time_budget = -1;
    int k = 3, l = 2, b = 2, c = 3, n = 8, m = -1, g = 2, uniformity = 4, max_chord = 2;
    double density = 0.3;
    std::string spec;
};

SearchBudget budget_of(const Options& o) {
    SearchBudget b = SearchBudget::from_env();
    if (o.node_budget >= 0) b.node_limit = o.node_budget;
    if (o.time_budget >= 0)
        b.time_limit = std::chrono::milliseconds(static_cast<std::int64_t>(o.time_budget * 1000));
    b.seed = o.seed;
    return b;
}

Digraph load(const Options& o) {
    if (o.input.empty() || o.input == "-") return parse_digraph(std::cin);
    return read_digraph_file(o.input);
}

void emit(const Options& o, const std::string& text) {
    if (o.output.empty() || o.output == "-") {
        std::cout << text;
        return;
    }
    std::ofstream f(o.output);
    if (!f) throw ParseError("cannot write " + o.output);
    f << text;
}

/// "C(k,l)", "dicycle(k)", "antidirected(h)" or a block list like "2F,1B,1F,3B".
OrientedCycleSpec parse_spec(const std::string& s) {
    int a = 0, b = 0;
    char tail = 0;
    if (std::sscanf(s.c_str(), "C(%d,%d%c", &a, &b, &tail) == 3 && tail == ')') return OrientedCycleSpec::two_blocks(a, b);
    if (std::sscanf(s.c_str(), "dicycle(%d%c", &a, &tail) == 2 && tail == ')') return OrientedCycleSpec::directed(a);
    if (std::sscanf(s.c_str(), "antidirected(%d%c", &a, &tail) == 2 && tail == ')')
        return OrientedCycleSpec::antidirected(a);
    OrientedCycleSpec spec;
    std::stringstream in(s);
    std::string tok;
    while (std::getline(in, tok, ',')) {
        if (tok.size() < 2 || (tok.back() != 'F' && tok.back() != 'B')) throw ParseError("bad block '" + tok + "'");
        try {
            spec.blocks.push_back({std::stoi(tok.substr(0, tok.size() - 1)), tok.back() == 'F' ? Dir::Forward : Dir::Backward});
        } catch (const std::logic_error&) {
            throw ParseError("bad block '" + tok + "'");
        }
    }
    spec.validate();
    return spec;
}

OrientedCycleSpec spec_of(const Options& o) {
    if (!o.spec.empty()) return parse_spec(o.spec);
    return o.l == 0 ? OrientedCycleSpec::directed(o.k) : OrientedCycleSpec::two_blocks(o.k, o.l);
}

std::string witness_json(const SubdivisionWitness& w, const std::string& theorem, const Options& o, int bound) {
    return certificate_to_json(Certificate::make_witness(theorem, {{"k", o.k}}, bound, w)) + "\n";
}

ChordedCycle hamiltonian_input(const Digraph& d, const SearchBudget& budget) {
    auto cyc = longest_directed_cycle(d, budget);
    if (!cyc || static_cast<int>(cyc->size()) != d.order())
        throw PreconditionError("input has no Hamiltonian dicycle");
    return ChordedCycle(d, *cyc);
}

int run_certify(const std::string& id, const Options& o) {
    const Digraph d = load(o);
    const SearchBudget budget = budget_of(o);
    const std::map<std::string, std::function<Certificate()>> table = {
        {"two-blocks-strong", [&] { return certify_two_blocks_strong(d, o.k, o.l); }},
        {"hatC4", [&] { return certify_hatC4(d); }},
        {"two-strong", [&] { return certify_two_strong(d, o.k, o.l); }},
        {"C12", [&] { return certify_C12(d); }},
        {"C22", [&] { return certify_C22(d); }},
        {"C13", [&] { return certify_C13(d); }},
        {"C23", [&] { return certify_C23(d); }},
        {"hamiltonian-ckk", [&] { return certify_hamiltonian_ckk(hamiltonian_input(d, budget), o.k); }},
        {"hamiltonian-ck1", [&] { return certify_hamiltonian_ck1(hamiltonian_input(d, budget), o.k); }},
        {"strong-ck1", [&] { return certify_strong_ck1(d, o.k); }},
    };
    auto it = table.find(id);
    if (it == table.end()) {
        std::string known;
        for (const auto& [name, f] : table) known += " " + name;
        throw PreconditionError("unknown theorem '" + id + "'; known:" + known);
    }
    Certificate cert = it->second();
    if (cert.kind == CertKind::Diagnostic) {
        std::cerr << "diagnostic: " << cert.diagnostic->lemma << ": " << cert.diagnostic->message << '\n'
                  << format_digraph(cert.diagnostic->instance);
        return kVerification;
    }
    if (!verify_certificate(d, cert)) throw VerificationFailure("certificate failed self-verification; not written");
    emit(o, certificate_to_json(cert) + "\n");
    std::cerr << cert.theorem << ": " << (cert.is_coloring() ? "coloring" : "witness") << " via " << cert.route
              << '\n';
    return kOk;
}

int run_oracle(const std::string& what, const Options& o) {
    const Digraph d = load(o);
    const SearchBudget budget = budget_of(o);
    std::ostringstream out;
    if (what == "chi") {
        out << chromatic_number_exact(d, 64, budget) << '\n';
    } else if (what == "subdiv") {
        auto r = find_subdivision(d, spec_of(o), budget);
        if (r.status == SearchStatus::Indeterminate) throw BudgetExceeded("subdivision search ran out of budget");
        if (r.absent()) {
            out << "absent\n";
        } else {
            if (!verify_subdivision(d, *r.witness)) throw VerificationFailure("oracle witness does not verify");
            out << witness_json(*r.witness, "subdivision", o, 0);
        }
    } else if (what == "blocks") {
        auto b = min_blocks_over_cycles(d, budget);
        out << (b ? std::to_string(*b) : "infinite") << '\n';
    } else if (what == "longest-cycle") {
        auto c = longest_directed_cycle(d, budget);
        if (!c) {
            out << "0\n";
        } else {
            out << c->size();
            for (int v : *c) out << ' ' << v;
            out << '\n';
        }
    } else {
        throw PreconditionError("unknown oracle '" + what + "'; known: chi subdiv blocks longest-cycle");
    }
    emit(o, out.str());
    return kOk;
}

int run_find(const std::string& family, const Options& o) {
    if (family != "antidirected") throw PreconditionError("unknown family '" + family + "'; known: antidirected");
    const Digraph d = load(o);
    auto w = find_antidirected(d, o.k);
    if (!verify_subdivision(d, w)) throw VerificationFailure("antidirected cycle does not verify");
    emit(o, witness_json(w, "antidirected", o, 8 * o.k - 8));
    std::cerr << "antidirected cycle of length " << w.branch.size() << '\n';
    return kOk;
}

int run_generate(const std::string& family, const Options& o) {
    const SearchBudget budget = budget_of(o);
    if (family == "hypergraph") {
        Hypergraph h = search_hypergraph(o.uniformity, o.g, o.c, budget);
        Hypergraph back = parse_hypergraph(format_hypergraph(h));
        if (weak_coloring(back, o.c, budget) || hypergraph_girth(back).value_or(o.g + 1) <= o.g)
            throw VerificationFailure("hypergraph does not verify after reload");
        emit(o, format_hypergraph(h));
        return kOk;
    }
    Digraph d;
    if (family == "transitive-tournament") {
        d = transitive_tournament(o.n);
    } else if (family == "directed-cycle") {
        d = directed_cycle(o.n);
    } else if (family == "complete") {
        d = complete_digraph(o.n);
    } else if (family == "tournament") {
        d = random_tournament(o.n, o.seed);
    } else if (family == "strong") {
        d = random_strong_digraph(o.n, o.m < 0 ? 2 * o.n : o.m, o.seed);
    } else if (family == "hamiltonian-span") {
        d = hamiltonian_with_bounded_span(o.n, o.max_chord, o.density, o.seed);
    } else if (family == "hamiltonian-forward") {
        d = hamiltonian_with_bounded_forward(o.n, o.max_chord, o.density, o.seed);
    } else if (family == "blocks") {
        d = build_blocks_digraph(o.b, o.c, budget);
        // Re-run the oracles on the serialized form.
        Digraph back = parse_digraph(format_digraph(d));
        if (static_cast<int>(strong_components(back).size()) != back.order() ||
            color_with_at_most(back, o.c - 1, budget) || cycle_with_at_most_blocks(back, o.b, budget))
            throw VerificationFailure("blocks construction does not verify after reload");
    } else {
        throw PreconditionError(
            "unknown family '" + family +
            "'; known: transitive-tournament directed-cycle complete tournament strong hamiltonian-span "
            "hamiltonian-forward blocks hypergraph");
    }
    emit(o, format_digraph(d));
    return kOk;
}

int run_verify(const std::string& cert_path, const Options& o) {
    std::ifstream f(cert_path);
    if (!f) throw ParseError("cannot open " + cert_path);
    std::stringstream text;
    text << f.rdbuf();
    Certificate cert = certificate_from_json(text.str());
    const Digraph d = load(o);
    const bool ok = o.spec.empty() ? verify_certificate(d, cert) : verify_certificate(d, cert, parse_spec(o.spec));
    emit(o, ok ? "valid\n" : "invalid\n");
    return ok ? kOk : kVerification;
}

int run_embed(const Options& o) {
    const Digraph d = load(o);
    const OrientedCycleSpec spec = spec_of(o);
    auto w = embed_cycle_in_k_strong(d, spec);
    if (!verify_subdivision(d, w)) throw VerificationFailure("embedding does not verify");
    emit(o, witness_json(w, "embed", o, 0));
    return kOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Certifying colourings and oriented-cycle subdivisions in digraphs"};
    app.require_subcommand(1);
    Options o;
    app.add_option("-i,--input", o.input, "input digraph file ('-' for stdin)");
    app.add_option("-o,--output", o.output, "output file (default stdout)");
    app.add_option("--seed", o.seed, "random seed");
    app.add_option("--node-budget", o.node_budget, "search node limit (default from CYCLEWRIGHT_BUDGET)");
    app.add_option("--time-budget", o.time_budget, "search time limit in seconds");
    app.add_option("-k", o.k, "first block length / cycle parameter");
    app.add_option("-l", o.l, "second block length (0: directed cycle of length k)");
    app.add_option("-b", o.b, "block floor for the blocks construction");
    app.add_option("-c", o.c, "colour count");
    app.add_option("-n", o.n, "vertex count for generators");
    app.add_option("-m", o.m, "arc count for the strong generator (default 2n)");
    app.add_option("-g", o.g, "hypergraph girth floor (girth > g)");
    app.add_option("--uniformity", o.uniformity, "hypergraph edge size");
    app.add_option("--max-chord", o.max_chord, "span or forward-distance cap for Hamiltonian generators");
    app.add_option("--density", o.density, "chord probability for Hamiltonian generators");
    app.add_option("--spec", o.spec, "cycle spec: C(k,l), dicycle(k), antidirected(h) or e.g. 2F,1B,1F,3B");

    std::string what, id, family, cert_path;
    auto* oracle = app.add_subcommand("oracle", "exact oracles: chi, subdiv, blocks, longest-cycle");
    oracle->add_option("what", what)->required();
    auto* certify = app.add_subcommand("certify", "run a certifying operation");
    certify->add_option("theorem", id)->required();
    auto* find = app.add_subcommand("find", "constructive search: antidirected");
    find->add_option("family", family)->required();
    auto* generate = app.add_subcommand("generate", "write a generated digraph or hypergraph");
    generate->add_option("family", family)->required();
    auto* verify = app.add_subcommand("verify", "check a certificate against -i");
    verify->add_option("certificate", cert_path)->required();
    auto* embed = app.add_subcommand("embed", "subdivision of --spec (or C(k,l)) in a k-strong digraph");
    for (auto* sub : {oracle, certify, find, generate, verify, embed}) sub->fallthrough();

    CLI11_PARSE(app, argc, argv);
    try {
        if (*oracle) return run_oracle(what, o);
        if (*certify) return run_certify(id, o);
        if (*find) return run_find(family, o);
        if (*generate) return run_generate(family, o);
        if (*verify) return run_verify(cert_path, o);
        if (*embed) return run_embed(o);
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kBudget;
    } catch (const PreconditionError& e) {
        std::cerr << "precondition: " << e.what() << '\n';
        return kPrecondition;
    } catch (const ParseError& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kPrecondition;
    } catch (const ImproperInput& e) {
        std::cerr << "input: " << e.what() << '\n';
        return kPrecondition;
    } catch (const VerificationFailure& e) {
        std::cerr << "verification failed: " << e.what() << '\n';
        return kVerification;
    } catch (const LemmaViolation& e) {
        std::cerr << "lemma violation (" << e.lemma() << "): " << e.what() << '\n' << e.instance();
        return kVerification;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kOther;
    }
    return kOther;
}
