#include "doctest.h"
#include "support.hpp"

#include "mutalg/commands.hpp"
#include "mutalg/errors.hpp"
#include "mutalg/io.hpp"
#include "mutalg/mutation_class.hpp"
#include "mutalg/service.hpp"

#include "httplib.h"

#include <atomic>
#include <thread>

using namespace mutalg;
using namespace testsupport;

namespace {

const char* kTriangle = "1 -(-1,-1)-> 2; 2 -(-1,-1)-> 3; 3 -(-1,-1)-> 1";

// Server on an ephemeral port for the lifetime of the fixture.
struct Served {
    SessionStore store;
    httplib::Server server;
    std::thread thread;
    int port = 0;

    Served() {
        install_routes(server, store);
        port = server.bind_to_any_port("127.0.0.1");
        thread = std::thread([this] { server.listen_after_bind(); });
        server.wait_until_ready();
    }
    ~Served() {
        server.stop();
        thread.join();
    }
    httplib::Client client() const { return httplib::Client("127.0.0.1", port); }
};

json body(const httplib::Result& r) { return json::parse(r->body); }

json post(httplib::Client& c, const std::string& path, const json& b) {
    auto r = c.Post(path, b.dump(), "application/json");
    REQUIRE(r);
    json j = json::parse(r->body);
    j["_status"] = r->status;
    return j;
}

}  // namespace

TEST_CASE("JSON round trips") {
    std::mt19937_64 rng(seed());
    for (int rep = 0; rep < 200; ++rep) {
        GssMatrix B = random_gss(rng, 1 + rep % 5, 3);
        CHECK(gss_from_json(to_json(B)) == B);
        CHECK(gss_from_json(json::parse(to_json(B).dump())).symmetrizer() == B.symmetrizer());
        GssMatrix P = random_gss(rng, 1 + rep % 5, 3, true);
        SignedValuedQuiver Q = quiver_from_matrix(P);
        CHECK(quiver_from_json(json::parse(to_json(Q).dump())) == Q);
        CHECK(std::get<SignedValuedQuiver>(parse_input(to_json(Q).dump())) == Q);
        CHECK(std::get<GssMatrix>(parse_input(to_json(P).dump())) == P);
        CHECK(parse_quiver_dsl(to_dsl(Q)) == Q);
    }
    RootSystem rs = generate_root_system(classical_counterpart(DynkinType::make('B', 3)));
    RootSystem back = root_system_from_json(json::parse(to_json(rs).dump()));
    CHECK(back.roots == rs.roots);
    CHECK(back.cartan.c == rs.cartan.c);
    CHECK(back.cartan.d == rs.cartan.d);

    VerifyReport rep;
    rep.relations_checked = 3;
    LieElement res(3);
    res[0] = Rat(1, 2);
    res[2] = -3;
    rep.failures.push_back({"[e1,f1] = h1", res});
    rep.dimension = 8;
    rep.isomorphism = false;
    json j = to_json(rep);
    CHECK(j["failures"][0]["residual"] == json({"1/2", "0/1", "-3/1"}));
    VerifyReport rb = verify_report_from_json(json::parse(j.dump()));
    CHECK(rb.relations_checked == 3);
    CHECK(rb.failures[0].relation == "[e1,f1] = h1");
    CHECK(rb.failures[0].residual == res);
    CHECK(rb.dimension == 8u);
    CHECK(rb.isomorphism == false);
}

TEST_CASE("input errors") {
    CHECK_THROWS_AS(parse_input(""), ParseError);
    CHECK_THROWS_AS(parse_input("{\"n\": 2"), ParseError);
    CHECK_THROWS_AS(parse_input("{\"x\": 1}"), ParseError);
    CHECK_THROWS_AS(gss_from_json(json{{"n", 2}, {"entries", {{0, 1}, {1, 0}}}}), ParseError);
    CHECK_THROWS_AS(quiver_from_json(json{{"n", 2}, {"arrows", {{{"src", 1}, {"tgt", 3}, {"v", {1, 1}}}}}}), ParseError);
    CHECK_THROWS_AS(quiver_from_json(json{{"n", "two"}, {"arrows", json::array()}}), ParseError);
    // not skew-symmetrizable
    CHECK_THROWS_AS(parse_input("0,1; 1,0"), SemanticError);
    // value signs disagree
    CHECK_THROWS_AS(parse_input("1 -(1,-1)-> 2"), SemanticError);
    CHECK_THROWS_AS(parse_rat("1/0"), ParseError);
    CHECK(parse_rat("-4/6") == Rat(-2, 3));
    CHECK(rat_to_string(Rat(5)) == "5/1");
    CHECK(parse_sequence("2,1, 3") == MutationSequence{1, 0, 2});
    CHECK(parse_sequence("(2 1)") == MutationSequence{1, 0});
    CHECK(parse_sequence("").empty());
    CHECK_THROWS_AS(parse_sequence("0"), ParseError);
    CHECK_THROWS_AS(parse_sequence("2,x"), ParseError);
}

TEST_CASE("DOT export") {
    std::string dot = to_dot(parse_quiver_dsl("1 -(-1,-1)-> 2; 2 -(1,2)-> 3"));
    CHECK(dot.find("legend: solid edge = negative arrow, dashed edge = positive arrow") != std::string::npos);
    CHECK(dot.find("1 -> 2 [label=\"(-1,-1)\", style=solid]") != std::string::npos);
    CHECK(dot.find("2 -> 3 [label=\"(1,2)\", style=dashed]") != std::string::npos);
    CHECK(dot.find("legend") < dot.find("digraph"));
    CHECK(dot.find("digraph Q {") != std::string::npos);
}

TEST_CASE("mutate command") {
    auto r = cmd_mutate("0,-t,0; t,0,-2t; 0,t,0", seq1({2}));
    CHECK(r.exit == 0);
    CHECK(gss_from_json(r.payload["matrix"]) == gss("0,t,-2t; -t,0,2; t,-1,0"));
    CHECK(r.payload["matrix"]["d"] == json({1, 1, 2}));
    CHECK(r.payload["pure"] == true);
    CHECK(r.payload["warnings"].empty());

    auto e = cmd_mutate("0,-t,0; t,0,-2t; 0,t,0", {});
    CHECK(gss_from_json(e.payload["matrix"]) == gss("0,-t,0; t,0,-2t; 0,t,0"));

    auto w = cmd_mutate(kTriangle, seq1({2}));
    CHECK(w.exit == 0);
    CHECK(w.payload["pure"] == false);
    CHECK(w.payload["quiver"].is_null());
    REQUIRE(w.payload["warnings"].size() == 1);
    CHECK(w.payload["warnings"][0]["triple"] == json({1, 3, 2}));
    CHECK(w.text.find("warning") != std::string::npos);
    CHECK_FALSE(is_pure(gss_from_json(w.payload["matrix"])));

    CHECK(cmd_mutate("0,t;", {}).exit == 2);
    CHECK(cmd_mutate("0,1;1,0", {}).exit == 3);
    CHECK(cmd_mutate(kTriangle, seq1({4})).exit == 3);
}

TEST_CASE("class, roots and verify commands") {
    auto c = cmd_class("A1", false, 100);
    CHECK(c.exit == 0);
    CHECK(c.payload["count"] == 1);
    auto a3 = cmd_class("A3", false, default_budget());
    CHECK(a3.payload["count"] == mutation_class(dynkin_quiver(DynkinType::make('A', 3))).size());
    CHECK(cmd_class("A3", false, 5).exit == 4);
    CHECK(cmd_class("B1", false, 5).exit == 3);
    CHECK(cmd_class(kTriangle, false, 100).exit == 3);

    auto r = cmd_roots("1 -(-1,-1)-> 2; 2 -(1,1)-> 3; 3 -(-1,-1)-> 1");
    CHECK(r.exit == 0);
    CHECK(r.payload["count"] == 12);
    CHECK(r.text.find("-α2+α3") != std::string::npos);
    CHECK(cmd_roots("G2").payload["count"] == 12);
    CHECK(cmd_roots("0,-2; 2,0").exit == 4);  // affine

    VerifyOptions opt;
    opt.sequence = seq1({2});
    auto v = cmd_verify("A3", opt, default_budget());
    CHECK(v.exit == 0);
    CHECK(v.text.find("dimension 15, isomorphism: true") != std::string::npos);
    CHECK(v.payload["runs"][0]["report"]["dimension"] == 15);
    CHECK(v.payload["runs"][0]["report"]["failures"].empty());
    // a quiver of the class is found from the Dynkin quiver
    auto vq = cmd_verify("1 -(-1,-1)-> 2; 2 -(1,1)-> 3; 3 -(-1,-1)-> 1", VerifyOptions{}, default_budget());
    CHECK(vq.exit == 0);
    CHECK(vq.payload["type"] == "A3");
    CHECK(cmd_verify(kTriangle, VerifyOptions{}, default_budget()).exit == 3);

    VerifyOptions rnd;
    rnd.random = 3;
    rnd.seed = 9;
    auto x = cmd_verify("G2", rnd, default_budget());
    auto y = cmd_verify("G2", rnd, default_budget());
    CHECK(x.exit == 0);
    CHECK(x.payload["runs"].size() == 3);
    CHECK(x.payload.dump() == y.payload.dump());
}

TEST_CASE("describe_quiver") {
    json d = describe_quiver(mutate_quiver(dynkin_quiver(DynkinType::make('A', 3)), 1));
    CHECK(d["cartan"] == json({{2, -1, -1}, {-1, 2, 1}, {-1, 1, 2}}));
    CHECK(d["dynkin"] == "A3");
    CHECK(d["root_count"] == 12);
    CHECK(d["relations"]["R5"] == 12);
    CHECK(d["relations"]["cycles"][0]["shape"] == "simple");
    CHECK(d["dangerous_cycles"].empty());
    json t = describe_quiver(parse_quiver_dsl(kTriangle));
    CHECK(t["dangerous_cycles"].size() == 1);
    CHECK(t["dynkin"].is_null());
    // companion coordinates agree with the Dynkin-start composite
    std::mt19937_64 rng(seed());
    for (int rep = 0; rep < 20; ++rep) {
        auto t4 = DynkinType::make('B', 4);
        MutationSequence s;
        for (int q = 0; q < 6; ++q) s.push_back(static_cast<int>(rng() % 4));
        CHECK(companion_coordinates(dynkin_quiver(t4), s) == composite_rho(t4, s));
    }
}

TEST_CASE("HTTP session API") {
    Served srv;
    auto c = srv.client();

    json s = post(c, "/sessions", {{"type", "A3"}});
    REQUIRE(s["_status"] == 201);
    const std::string id = s["id"];
    json initial = s["state"];
    CHECK(initial["dynkin"] == "A3");
    CHECK(initial["companion_basis"] == json({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}));

    auto g = c.Get("/sessions/" + id);
    REQUIRE(g);
    CHECK(g->status == 200);
    CHECK(body(g)["state"] == initial);

    json m = post(c, "/sessions/" + id + "/mutate", {{"vertex", 2}});
    CHECK(m["_status"] == 200);
    CHECK(m["history"] == json({2}));
    CHECK(m["state"]["cartan"] == json({{2, -1, -1}, {-1, 2, 1}, {-1, 1, 2}}));
    CHECK(m["state"]["relations"]["R5"] == 12);
    CHECK(m["state"]["companion_basis"] == json({{1, 0, 0}, {0, 1, 0}, {0, 1, 1}}));

    auto dot = c.Get("/sessions/" + id + "/export?format=dot");
    REQUIRE(dot);
    CHECK(dot->status == 200);
    CHECK(dot->body.find("2 -> 3 [label=\"(1,1)\", style=dashed]") != std::string::npos);
    auto ex = c.Get("/sessions/" + id + "/export?format=json");
    REQUIRE(ex);
    CHECK(body(ex)["history"] == json({2}));
    CHECK(quiver_from_json(body(ex)["quiver"]) == srv.store.replay(id));
    auto bad = c.Get("/sessions/" + id + "/export?format=svg");
    REQUIRE(bad);
    CHECK(bad->status == 422);

    json u = post(c, "/sessions/" + id + "/undo", json::object());
    CHECK(u["_status"] == 200);
    CHECK(u["state"] == initial);
    CHECK(post(c, "/sessions/" + id + "/undo", json::object())["_status"] == 409);

    // errors
    CHECK(c.Get("/sessions/0123456789abcdef")->status == 404);
    CHECK(post(c, "/sessions/0123456789abcdef/mutate", {{"vertex", 1}})["_status"] == 404);
    CHECK(post(c, "/sessions", {{"type", "Z9"}})["_status"] == 422);
    CHECK(post(c, "/sessions", {{"nothing", 1}})["_status"] == 422);
    CHECK(post(c, "/sessions", {{"quiver", "1 -(1,-1)-> 2"}})["_status"] == 422);
    CHECK(post(c, "/sessions/" + id + "/mutate", {{"vertex", 7}})["_status"] == 422);
    CHECK(post(c, "/sessions/" + id + "/mutate", {{"vertex", "2"}})["_status"] == 422);
    auto raw = c.Post("/sessions", "{not json", "application/json");
    REQUIRE(raw);
    CHECK(raw->status == 422);
}

TEST_CASE("HTTP blocked mutation carries the triple and a preview") {
    Served srv;
    auto c = srv.client();
    json s = post(c, "/sessions", {{"quiver", kTriangle}});
    REQUIRE(s["_status"] == 201);
    const std::string id = s["id"];
    CHECK(s["state"]["dangerous_cycles"].size() == 1);
    json b = post(c, "/sessions/" + id + "/mutate", {{"vertex", 2}});
    CHECK(b["_status"] == 409);
    CHECK(b["triple"] == json({1, 3, 2}));
    CHECK(b["preview_pure"] == false);
    GssMatrix P = gss_from_json(b["preview"]);
    CHECK(P == mutate_matrix(matrix_from_quiver(parse_quiver_dsl(kTriangle)), 1));
    // the session is unchanged
    auto g = c.Get("/sessions/" + id);
    CHECK(body(g)["history"].empty());
    // JSON quiver input works too
    json q = post(c, "/sessions", {{"quiver", to_json(dynkin_quiver(DynkinType::make('G', 2)))}});
    CHECK(q["_status"] == 201);
    CHECK(q["state"]["dynkin"] == "G2");
}

TEST_CASE("session replay holds under random mutate/undo interleavings") {
    SessionStore store;
    std::mt19937_64 rng(seed());
    for (auto t : {DynkinType::make('A', 4), DynkinType::make('B', 3), DynkinType::make('D', 4)}) {
        std::string id = store.create(dynkin_quiver(t), t);
        for (int step = 0; step < 60; ++step) {
            if (rng() % 3 == 0) {
                try {
                    store.undo(id);
                } catch (const NothingToUndo&) {
                }
            } else {
                store.mutate(id, static_cast<int>(rng() % static_cast<unsigned>(t.rank)));
            }
            json st = store.state(id);
            SignedValuedQuiver cur = quiver_from_json(st["state"]["quiver"]);
            REQUIRE(store.replay(id) == cur);
            MutationSequence hist;
            for (int v : st["history"]) hist.push_back(v - 1);
            CHECK(st["state"]["companion_basis"] == json(composite_rho(t, hist)));
        }
    }
    CHECK_THROWS_AS(store.state("nope"), SessionNotFound);
}

TEST_CASE("concurrent sessions are isolated") {
    Served srv;
    std::atomic<int> bad{0};
    std::vector<std::thread> ts;
    for (int w = 0; w < 6; ++w)
        ts.emplace_back([&, w] {
            auto c = srv.client();
            auto r = c.Post("/sessions", json{{"type", "A3"}}.dump(), "application/json");
            if (!r || r->status != 201) {
                ++bad;
                return;
            }
            std::string id = json::parse(r->body)["id"];
            MutationSequence mine;
            for (int s = 0; s < 8; ++s) {
                int v = 1 + (w + s) % 3;
                auto m = c.Post("/sessions/" + id + "/mutate", json{{"vertex", v}}.dump(), "application/json");
                if (!m || m->status != 200) ++bad;
                mine.push_back(v - 1);
            }
            auto g = c.Get("/sessions/" + id);
            if (!g || json::parse(g->body)["history"] != sequence_to_json(mine)) ++bad;
        });
    for (auto& t : ts) t.join();
    CHECK(bad == 0);
    CHECK(srv.store.size() == 6);
}
