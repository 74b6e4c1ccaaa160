#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "magmoid/axioms.hpp"
#include "magmoid/classifier.hpp"
#include "magmoid/constructions.hpp"
#include "magmoid/core.hpp"
#include "magmoid/heapoid.hpp"
#include "magmoid/involution.hpp"
#include "magmoid/search.hpp"

namespace {

using namespace magmoid;

constexpr int kExitTrue = 0;
constexpr int kExitFalse = 1;
constexpr int kExitError = 2;

Magmoid load(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open '" + path + "'");
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_magmoid(buf.str());
}

std::string set_str(const Magmoid& m, ElemSet s) {
    std::string out = "{";
    bool first = true;
    for (int e : set_elements(s, m.order())) {
        if (!first) out += ",";
        out += m.elements[static_cast<size_t>(e)];
        first = false;
    }
    return out + "}";
}

int cmd_check(const std::string& file, const std::string& axiom) {
    Magmoid m = load(file);
    bool known = false;
    bool holds = axiom_by_name(associativity_flags(m), axiom, &known);
    if (!known) {
        std::cerr << "unknown axiom '" << axiom << "'\n";
        return kExitError;
    }
    std::cout << "#R axiom=" << axiom << " holds=" << (holds ? "true" : "false") << "\n";
    return holds ? kExitTrue : kExitFalse;
}

int cmd_classify(const std::string& file) {
    Magmoid m = load(file);
    ClassificationReport c = classify(m);
    for (const auto& [flag, value] : classification_flags(c)) {
        if (flag.rfind("unique_", 0) == 0)
            std::cout << "#R " << flag << "=" << (value ? "true" : "false") << "\n";
        else
            std::cout << "#R class=" << flag << " value=" << (value ? "true" : "false") << "\n";
    }
    if (c.identity != undef)
        std::cout << "#R identity=" << m.elements[static_cast<size_t>(c.identity)] << "\n";
    return kExitTrue;
}

int cmd_units(const std::string& file) {
    Magmoid m = load(file);
    UnitReport u = units(m);
    std::cout << "#R global_left=" << set_str(m, u.globalLeft) << "\n";
    std::cout << "#R global_right=" << set_str(m, u.globalRight) << "\n";
    std::cout << "#R global_two_sided=" << set_str(m, u.globalTwoSided) << "\n";
    for (int x = 0; x < m.order(); ++x) {
        const std::string& e = m.elements[static_cast<size_t>(x)];
        std::cout << "#R element=" << e << " local_left=" << set_str(m, u.localLeft[x])
                  << " local_right=" << set_str(m, u.localRight[x])
                  << " twisted_left=" << set_str(m, u.twistedLeft[x])
                  << " twisted_right=" << set_str(m, u.twistedRight[x])
                  << " effective_left=" << set_str(m, u.effectiveLeft[x])
                  << " effective_right=" << set_str(m, u.effectiveRight[x]) << "\n";
    }
    return kExitTrue;
}

int cmd_inverses(const std::string& file, const std::string& kindName) {
    Magmoid m = load(file);
    InverseReport inv = inverse_report(m);
    if (!kindName.empty()) {
        auto kind = inverse_kind_from_name(kindName);
        if (!kind) {
            std::cerr << "unknown inverse kind '" << kindName << "'\n";
            return kExitError;
        }
        for (int x = 0; x < m.order(); ++x)
            std::cout << "#R element=" << m.elements[static_cast<size_t>(x)]
                      << " kind=" << kindName << " inverses=" << set_str(m, inv.plain(*kind)[x])
                      << " strong=" << set_str(m, inv.strong(*kind)[x]) << "\n";
        return kExitTrue;
    }
    for (int x = 0; x < m.order(); ++x)
        std::cout << "#R element=" << m.elements[static_cast<size_t>(x)]
                  << " J=" << set_str(m, inv.J[x]) << " Iplus=" << set_str(m, inv.Iplus[x])
                  << " Istar=" << set_str(m, inv.Istar[x]) << " I=" << set_str(m, inv.I[x])
                  << " strongJ=" << set_str(m, inv.strongJ[x])
                  << " strongIplus=" << set_str(m, inv.strongIplus[x])
                  << " strongIstar=" << set_str(m, inv.strongIstar[x])
                  << " strongI=" << set_str(m, inv.strongI[x]) << "\n";
    return kExitTrue;
}

int cmd_involutions(const std::string& file, bool partial) {
    Magmoid m = load(file);
    auto found = find_involutions(m, !partial);
    std::cout << "#R involutions=" << found.size() << "\n";
    for (const auto& inv : found) {
        std::cout << "#R map=";
        bool first = true;
        for (int x = 0; x < m.order(); ++x) {
            if (inv.star(x) == undef) continue;
            if (!first) std::cout << ",";
            std::cout << m.elements[static_cast<size_t>(x)] << "->"
                      << m.elements[static_cast<size_t>(inv.star(x))];
            first = false;
        }
        std::cout << "\n";
    }
    return kExitTrue;
}

int cmd_restrict(const std::string& file, const std::string& modeName) {
    Magmoid m = load(file);
    auto mode = restriction_mode_from_name(modeName);
    if (!mode) {
        std::cerr << "unknown restriction mode '" << modeName << "'\n";
        return kExitError;
    }
    Magmoid r = restrict(m, *mode);
    std::cout << serialize_magmoid(r);
    return kExitTrue;
}

int cmd_heapify(const std::string& file) {
    Magmoid m = load(file);
    Involution inv = m.has_involution() ? involution_from_magmoid(m, false)
                                        : identity_involution(m);
    TernaryTable t = ternary_from_involution(m, inv);
    std::cout << serialize_ternary(t);
    HeapLawFlags f = check_heap_laws(t);
    std::cout << "#R semiheapoid=" << (f.semiheapoid ? "true" : "false")
              << " heapoid=" << (f.heapoid ? "true" : "false")
              << " preheapoid=" << (f.preheapoid ? "true" : "false")
              << " semiheap=" << (f.semiheap ? "true" : "false")
              << " heap=" << (f.heap ? "true" : "false")
              << " preheap=" << (f.preheap ? "true" : "false") << "\n";
    return kExitTrue;
}

int cmd_iso(const std::string& fileA, const std::string& fileB) {
    Magmoid a = load(fileA), b = load(fileB);
    auto witness = isomorphism_witness(a, b);
    std::cout << "#R isomorphic=" << (witness ? "true" : "false") << "\n";
    if (witness) {
        std::cout << "#R witness=";
        for (int x = 0; x < a.order(); ++x) {
            if (x) std::cout << ",";
            std::cout << a.elements[static_cast<size_t>(x)] << "->"
                      << b.elements[static_cast<size_t>((*witness)[x])];
        }
        std::cout << "\n";
    }
    return witness ? kExitTrue : kExitFalse;
}

int cmd_enumerate(int order, const std::string& filter, bool uptoIso, bool countOnly,
                  int workers) {
    EnumSpec spec;
    spec.order = order;
    spec.filter = filter;
    spec.uptoIso = uptoIso;
    spec.countOnly = countOnly;
    std::uint64_t count = enumerate(
        spec,
        countOnly ? std::function<void(const Magmoid&)>()
                  : [](const Magmoid& m) { std::cout << serialize_magmoid(m) << "\n"; },
        workers);
    std::cout << "#R " << count_line(order, uptoIso ? "uptoIso" : "labeled", filter, count)
              << "\n";
    return kExitTrue;
}

int cmd_verify(int order, const std::string& propsArg, const std::string& witnessDir,
               int workers) {
    std::vector<std::string> names;
    if (propsArg != "all") {
        std::stringstream ss(propsArg);
        std::string tok;
        while (std::getline(ss, tok, ','))
            if (!tok.empty()) names.push_back(tok);
    }
    auto results = verify_propositions(order, names, workers);
    std::uint64_t failures = 0;
    for (const auto& r : results) {
        std::cout << "#R prop=" << r.name << " hypothesis=" << r.hypothesisCount
                  << " pass=" << r.passCount << " failures=" << r.failureCount << "\n";
        failures += r.failureCount;
        if (!witnessDir.empty() && !r.witnesses.empty()) {
            std::filesystem::create_directories(witnessDir);
            int idx = 0;
            for (const auto& w : r.witnesses) {
                std::string path = witnessDir + "/" + r.name + "_" + std::to_string(idx++) +
                                   ".mgd";
                std::ofstream out(path);
                out << "# counterexample to " << r.name << ": " << w.detail << "\n"
                    << w.magmoidText;
                std::cout << "#R witness_file=" << path << " detail=\"" << w.detail << "\"\n";
            }
        }
    }
    std::cout << "#R failures=" << failures << "\n";
    return failures == 0 ? kExitTrue : kExitFalse;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite magmoid laboratory"};
    app.require_subcommand(1);

    std::string file, fileB, axiom = "S3", mode = "prepoloid", kind, filter, props = "all";
    std::string witnessDir;
    int order = 2, workers = 1;
    bool uptoIso = false, countOnly = false, partial = false;

    auto* check = app.add_subcommand("check", "decide an associativity axiom");
    check->add_option("file", file)->required();
    check->add_option("--axiom", axiom, "TA|A1|A2|A3|S1|S2|S3");

    auto* classifyCmd = app.add_subcommand("classify", "report the full taxonomy");
    classifyCmd->add_option("file", file)->required();

    auto* unitsCmd = app.add_subcommand("units", "report all unit sets");
    unitsCmd->add_option("file", file)->required();

    auto* inverses = app.add_subcommand("inverses", "report all inverse relations");
    inverses->add_option("file", file)->required();
    inverses->add_option("--kind", kind, "I+|I*|I");

    auto* involutions = app.add_subcommand("involutions", "search for involutions");
    involutions->add_option("file", file)->required();
    involutions->add_flag("--partial", partial, "search partial self-maps");

    auto* restrictCmd = app.add_subcommand("restrict", "apply a restricted binary operation");
    restrictCmd->add_option("file", file)->required();
    restrictCmd->add_option("--mode", mode,
                            "prepoloid|pregroupoid|skew-pre(poloid|groupoid)-(left|right)");

    auto* heapify = app.add_subcommand("heapify", "derive the ternary table and check heap laws");
    heapify->add_option("file", file)->required();

    auto* iso = app.add_subcommand("iso", "decide isomorphism of two magmoids");
    iso->add_option("a", file)->required();
    iso->add_option("b", fileB)->required();

    auto* enumerateCmd = app.add_subcommand("enumerate", "enumerate all magmoids of an order");
    enumerateCmd->add_option("--order", order)->required();
    enumerateCmd->add_option("--filter", filter, "axiom or classification flag name");
    enumerateCmd->add_flag("--upto-iso", uptoIso);
    enumerateCmd->add_flag("--count-only", countOnly);
    enumerateCmd->add_option("--workers", workers);

    auto* verify = app.add_subcommand("verify", "run the proposition catalog exhaustively");
    verify->add_option("--order", order)->required();
    verify->add_option("--props", props, "all or a comma-separated name list");
    verify->add_option("--witness-dir", witnessDir);
    verify->add_option("--workers", workers);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? kExitTrue : kExitError;
    }

    try {
        if (check->parsed()) return cmd_check(file, axiom);
        if (classifyCmd->parsed()) return cmd_classify(file);
        if (unitsCmd->parsed()) return cmd_units(file);
        if (inverses->parsed()) return cmd_inverses(file, kind);
        if (involutions->parsed()) return cmd_involutions(file, partial);
        if (restrictCmd->parsed()) return cmd_restrict(file, mode);
        if (heapify->parsed()) return cmd_heapify(file);
        if (iso->parsed()) return cmd_iso(file, fileB);
        if (enumerateCmd->parsed()) return cmd_enumerate(order, filter, uptoIso, countOnly, workers);
        if (verify->parsed()) return cmd_verify(order, props, witnessDir, workers);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
    return kExitError;
}
