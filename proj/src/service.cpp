#include "mutalg/service.hpp"

#include "mutalg/errors.hpp"

#include "httplib.h"

#include <iomanip>
#include <random>
#include <sstream>

namespace mutalg {

std::string SessionStore::create(const SignedValuedQuiver& Q0, std::optional<DynkinType> type) {
    auto s = std::make_shared<Session>();
    s->type = type;
    s->quivers.push_back(Q0);
    static thread_local std::mt19937_64 rng(std::random_device{}());
    std::lock_guard lock(mu_);
    std::ostringstream id;
    id << std::hex << std::setfill('0') << std::setw(16) << (rng() ^ ++counter_);
    s->id = id.str();
    sessions_[s->id] = s;
    return s->id;
}

std::shared_ptr<SessionStore::Session> SessionStore::find(const std::string& id) const {
    std::lock_guard lock(mu_);
    auto it = sessions_.find(id);
    if (it == sessions_.end()) throw SessionNotFound("unknown session " + id);
    return it->second;
}

std::size_t SessionStore::size() const {
    std::lock_guard lock(mu_);
    return sessions_.size();
}

json SessionStore::render(const Session& s) {
    std::vector<Root> comp = companion_coordinates(s.quivers.front(), s.history);
    json j = {{"id", s.id}, {"history", sequence_to_json(s.history)}, {"state", describe_quiver(s.quivers.back(), &comp)}};
    j["type"] = s.type ? json(to_string(*s.type)) : json(nullptr);
    return j;
}

json SessionStore::state(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    return render(*s);
}

json SessionStore::mutate(const std::string& id, int k) {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    const SignedValuedQuiver& cur = s->quivers.back();
    if (k < 0 || k >= cur.n()) throw SemanticError("vertex " + std::to_string(k + 1) + " out of range");
    s->quivers.push_back(mutate_quiver(cur, k));
    s->history.push_back(k);
    return render(*s);
}

json SessionStore::undo(const std::string& id) {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    if (s->history.empty()) throw NothingToUndo("nothing to undo");
    s->history.pop_back();
    s->quivers.pop_back();
    return render(*s);
}

json SessionStore::export_json(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    return {{"initial", to_json(s->quivers.front())},
            {"history", sequence_to_json(s->history)},
            {"quiver", to_json(s->quivers.back())}};
}

std::string SessionStore::export_dot(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    return to_dot(s->quivers.back());
}

SignedValuedQuiver SessionStore::replay(const std::string& id) const {
    auto s = find(id);
    std::lock_guard lock(s->mu);
    return mutate_quiver_sequence(s->quivers.front(), s->history);
}

namespace {

void reply(httplib::Response& res, int status, const json& body) {
    res.status = status;
    res.set_content(body.dump(), "application/json");
}

json parse_body(const httplib::Request& req) {
    json j = json::parse(req.body, nullptr, false);
    if (j.is_discarded() || !j.is_object()) throw ParseError("request body must be a JSON object");
    return j;
}

// Maps domain exceptions to status codes.
template <class F>
void handle(httplib::Response& res, F&& f) {
    try {
        f();
    } catch (const SessionNotFound& e) {
        reply(res, 404, {{"error", e.what()}});
    } catch (const PositiveThreeCycleViolation& e) {
        reply(res, 409, {{"error", e.what()}});
    } catch (const NothingToUndo& e) {
        reply(res, 409, {{"error", e.what()}});
    } catch (const ParseError& e) {
        reply(res, 422, {{"error", e.what()}});
    } catch (const SemanticError& e) {
        reply(res, 422, {{"error", e.what()}});
    } catch (const BudgetExceeded& e) {
        reply(res, 422, {{"error", e.what()}});
    } catch (const json::exception& e) {
        reply(res, 422, {{"error", e.what()}});
    }
}

}  // namespace

void install_routes(httplib::Server& server, SessionStore& store) {
    server.Post("/sessions", [&store](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            json body = parse_body(req);
            std::string id;
            if (body.contains("type")) {
                if (!body["type"].is_string()) throw ParseError("\"type\" must be a string");
                DynkinType t;
                try {
                    t = parse_dynkin_type(body["type"].get<std::string>());
                } catch (const std::invalid_argument& e) {
                    throw ParseError(e.what());
                }
                id = store.create(dynkin_quiver(t), t);
            } else if (body.contains("quiver")) {
                const json& q = body["quiver"];
                if (q.is_string())
                    id = store.create(parse_quiver_dsl(q.get<std::string>()));
                else
                    id = store.create(quiver_from_json(q));
            } else {
                throw ParseError("body needs \"type\" or \"quiver\"");
            }
            reply(res, 201, store.state(id));
        });
    });
    server.Get(R"(/sessions/([0-9a-f]+))", [&store](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] { reply(res, 200, store.state(req.matches[1])); });
    });
    server.Post(R"(/sessions/([0-9a-f]+)/mutate)", [&store](const httplib::Request& req, httplib::Response& res) {
        const std::string id = req.matches[1];
        handle(res, [&] {
            json body = parse_body(req);
            if (!body.contains("vertex") || !body["vertex"].is_number_integer())
                throw ParseError("body needs an integer \"vertex\"");
            const long long v = body["vertex"].get<long long>();
            if (v < 1 || v > 64) throw SemanticError("vertex out of range");
            try {
                reply(res, 200, store.mutate(id, static_cast<int>(v - 1)));
            } catch (const PositiveThreeCycleViolation& e) {
                json cur = store.export_json(id);
                GssMatrix B = matrix_from_quiver(quiver_from_json(cur["quiver"]));
                GssMatrix P = mutate_matrix(B, e.k);
                reply(res, 409,
                      {{"error", e.what()},
                       {"triple", {e.i + 1, e.j + 1, e.k + 1}},
                       {"preview", to_json(P)},
                       {"preview_pure", is_pure(P)}});
            }
        });
    });
    server.Post(R"(/sessions/([0-9a-f]+)/undo)", [&store](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] { reply(res, 200, store.undo(req.matches[1])); });
    });
    server.Get(R"(/sessions/([0-9a-f]+)/export)", [&store](const httplib::Request& req, httplib::Response& res) {
        handle(res, [&] {
            std::string fmt = req.has_param("format") ? req.get_param_value("format") : "json";
            if (fmt == "json")
                reply(res, 200, store.export_json(req.matches[1]));
            else if (fmt == "dot") {
                res.status = 200;
                res.set_content(store.export_dot(req.matches[1]), "text/vnd.graphviz");
            } else
                throw ParseError("format must be json or dot");
        });
    });
    server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
        if (res.body.empty()) res.set_content(json{{"error", "not found"}}.dump(), "application/json");
    });
}

}  // namespace mutalg
