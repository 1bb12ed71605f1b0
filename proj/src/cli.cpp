#include "algforge/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include <CLI11.hpp>

#include "algforge/builtins.hpp"
#include "algforge/commands.hpp"
#include "algforge/dsl.hpp"
#include "algforge/verify.hpp"

namespace algforge {

Document load_document(const std::string& source, std::string& digest_out) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        Document d;
        try {
            d = builtin(source.substr(prefix.size()));
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        digest_out = digest(serialize(d));
        return d;
    }
    std::ifstream in(source, std::ios::binary);
    if (!in) throw UsageError("cannot read '" + source + "'");
    std::ostringstream text;
    text << in.rdbuf();
    digest_out = digest(text.str());
    return parse_document(text.str());
}

namespace {

unsigned default_max_degree() {
    const char* env = std::getenv("ALGFORGE_MAX_DEGREE");
    if (!env || !*env) return 4;
    const std::string s(env);
    if (s.find_first_not_of("0123456789") != std::string::npos || s.size() > 3)
        throw UsageError("ALGFORGE_MAX_DEGREE must be a small non-negative integer, got '" + s + "'");
    return static_cast<unsigned>(std::stoul(s));
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    unsigned maxdeg = 4;
    try {
        maxdeg = default_max_degree();
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }

    CLI::App app{"Exact verification of almost Lie algebroid structures over polynomial bases.", "algforge"};
    app.set_version_flag("--version", kVersion);
    app.require_subcommand(1);
    app.fallthrough();
    std::uint64_t seed = 0;
    bool json = false;
    app.add_option("--seed", seed, "seed for randomized checks")->capture_default_str();
    app.add_option("--max-degree", maxdeg, "degree bound for witness searches (env ALGFORGE_MAX_DEGREE)")
        ->capture_default_str();
    app.add_flag("--json", json, "print the report as JSON");

    std::string file, triples = "all", connection, output, form, endo, c1, c2, triple;
    unsigned max_k = 2, k = 1;
    auto with_file = [&](const char* name, const char* help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("FILE", file, "DSL file or builtin:NAME")->required();
        return sub;
    };
    CLI::App* check = with_file("check", "anchor compatibility on every generator pair");
    CLI::App* jac = with_file("jacobiator", "Jacobiator on generator triples");
    jac->add_option("--triples", triples, "'all' or i,j,k (names or 1-based indices)")->capture_default_str();
    CLI::App* lie = with_file("lie", "anchor axiom and Jacobi identity");
    CLI::App* conn = with_file("connection-report", "torsion, curvature and Bianchi identity");
    conn->add_option("--connection", connection, "connection name")->required();
    CLI::App* derive = with_file("derive", "derived bundle of a torsion-free connection");
    derive->add_option("--connection", connection, "connection name")->required();
    derive->add_option("-o,--output", output, "where to write the derived document")->required();
    CLI::App* coh = with_file("cohomology", "closed and exact decisions for a form");
    coh->add_option("--form", form, "form name")->required();
    CLI::App* cc = with_file("charclass", "characteristic forms of a connection");
    cc->add_option("--connection", connection, "connection name")->required();
    cc->add_option("--max-k", max_k, "largest power of the curvature")->capture_default_str();
    CLI::App* tr = with_file("transgression", "difference of characteristic forms of two connections");
    tr->add_option("--c1", c1, "first connection")->required();
    tr->add_option("--c2", c2, "second connection")->required();
    tr->add_option("--k", k, "power of the curvature")->capture_default_str();
    CLI::App* cour = with_file("courant", "Courant condition for declared and bounded-degree cometrics");
    CLI::App* nij = with_file("nijenhuis", "Nijenhuis tensor of an endomorphism");
    nij->add_option("--endo", endo, "endomorphism name")->required();
    CLI::App* obs = with_file("obstruction", "bounded certificate that no kernel-valued modification is Lie");
    obs->add_option("--triple", triple, "i,j,k (names or 1-based indices)")->required();
    CLI::App* verify = app.add_subcommand("verify-paper", "run the built-in acceptance suite");

    if (!args.empty() && !args[0].empty() && args[0][0] != '-') {
        bool known = false;
        for (const CLI::App* sub : app.get_subcommands({})) known = known || sub->get_name() == args[0];
        if (!known) {
            err << "error: unknown command '" << args[0] << "'\n\n" << app.help();
            return 2;
        }
    }
    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            app.exit(e, out, err);
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }

    try {
        Report report;
        std::string digest_text;
        if (verify->parsed()) {
            report = acceptance_report(seed);
        } else {
            const Document doc = load_document(file, digest_text);
            if (check->parsed()) {
                report = cmd_check(doc);
            } else if (jac->parsed()) {
                std::vector<Triple> list;
                if (triples != "all") list.push_back(parse_triple(doc, triples));
                report = cmd_jacobiator(doc, list);
            } else if (lie->parsed()) {
                report = cmd_lie(doc);
            } else if (conn->parsed()) {
                report = cmd_connection_report(doc, connection);
            } else if (derive->parsed()) {
                Document derived;
                report = cmd_derive(doc, connection, derived);
                if (!derived.bundle_name.empty()) {
                    std::ofstream o(output, std::ios::binary);
                    if (!o) throw UsageError("cannot write '" + output + "'");
                    o << serialize(derived);
                }
            } else if (coh->parsed()) {
                report = cmd_cohomology(doc, form, maxdeg);
            } else if (cc->parsed()) {
                report = cmd_charclass(doc, connection, max_k, maxdeg);
            } else if (tr->parsed()) {
                report = cmd_transgression(doc, c1, c2, k, maxdeg);
            } else if (cour->parsed()) {
                report = cmd_courant(doc, maxdeg);
            } else if (nij->parsed()) {
                report = cmd_nijenhuis(doc, endo);
            } else if (obs->parsed()) {
                report = cmd_obstruction(doc, parse_triple(doc, triple), maxdeg);
            }
            report.input_digest = digest_text;
        }
        report.seed = seed;
        out << (json ? to_json(report) : to_text(report));
        return report.exit_code();
    } catch (const ParseError& e) {
        err << file << ": syntax error at " << e.what() << "\n";
    } catch (const SemanticError& e) {
        err << file << ": " << e.what() << "\n";
    } catch (const UsageError& e) {
        err << "error: " << e.what() << "\n";
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
    }
    return 2;
}

}  // namespace algforge
