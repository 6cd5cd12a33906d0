#include "mutalg/commands.hpp"
#include "mutalg/errors.hpp"
#include "mutalg/service.hpp"

#include "CLI11.hpp"
#include "httplib.h"

#include <fstream>
#include <iostream>
#include <sstream>

using namespace mutalg;

namespace {

// "@path" reads a file, "-" reads stdin.
std::string read_source(const std::string& s) {
    if (s == "-") {
        std::ostringstream os;
        os << std::cin.rdbuf();
        return os.str();
    }
    if (!s.empty() && s[0] == '@') {
        std::ifstream in(s.substr(1));
        if (!in) throw ParseError("cannot read " + s.substr(1));
        std::ostringstream os;
        os << in.rdbuf();
        return os.str();
    }
    return s;
}

int emit(const CommandResult& r, bool as_json) {
    if (as_json)
        std::cout << r.payload.dump(2) << "\n";
    else
        (r.exit == 0 || r.exit == 1 ? std::cout : std::cerr) << r.text;
    return r.exit;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Signed valued quiver mutation, root systems and Lie presentations"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    std::uint64_t seed = 1;
    app.add_flag("--json", as_json, "Print the JSON payload");
    app.add_option("--seed", seed, "Seed for randomized runs");

    std::string input, seq_text;
    auto* mutate = app.add_subcommand("mutate", "Mutate a quiver or gss matrix");
    mutate->add_option("input", input, "JSON, arrow DSL, matrix text, @file or -")->required();
    mutate->add_option("-s,--seq", seq_text, "Vertices, 1-based, e.g. 2,1,3");

    std::string source;
    bool canonical = false;
    auto* cls = app.add_subcommand("class", "Labeled mutation class");
    cls->add_option("source", source, "Dynkin type (A3) or input")->required();
    cls->add_flag("--canonical", canonical, "Identify members up to relabeling");

    auto* roots = app.add_subcommand("roots", "Root system of the Cartan counterpart");
    roots->add_option("source", source, "Dynkin type (A3) or input")->required();

    VerifyOptions vopt;
    bool no_rootspaces = false;
    auto* verify = app.add_subcommand("verify", "Check the Lie presentation of a mutated Dynkin quiver");
    verify->add_option("source", source, "Dynkin type (A3) or a quiver in its class")->required();
    verify->add_option("-s,--seq", seq_text, "Vertices, 1-based");
    verify->add_option("--random", vopt.random, "Number of random sequences instead of --seq");
    verify->add_option("--max-length", vopt.max_length, "Longest random sequence");
    verify->add_flag("--no-rootspaces", no_rootspaces, "Skip the root-space check");

    std::string host = "127.0.0.1";
    int port = 8080;
    auto* serve = app.add_subcommand("serve", "HTTP session API");
    serve->add_option("--host", host);
    serve->add_option("--port", port);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 2;
    }

    try {
        const std::size_t budget = default_budget();
        if (*mutate) return emit(cmd_mutate(read_source(input), parse_sequence(seq_text)), as_json);
        if (*cls) return emit(cmd_class(read_source(source), canonical, budget), as_json);
        if (*roots) return emit(cmd_roots(read_source(source)), as_json);
        if (*verify) {
            vopt.sequence = parse_sequence(seq_text);
            vopt.seed = seed;
            vopt.rootspaces = !no_rootspaces;
            return emit(cmd_verify(read_source(source), vopt, budget), as_json);
        }
        if (*serve) {
            SessionStore store;
            httplib::Server server;
            install_routes(server, store);
            std::cerr << "listening on http://" << host << ":" << port << "\n";
            if (!server.listen(host, port)) {
                std::cerr << "cannot bind " << host << ":" << port << "\n";
                return 3;
            }
            return 0;
        }
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
