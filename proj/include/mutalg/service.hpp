#pragma once

// In-memory mutation sessions and their HTTP front end.
//
//   POST /sessions                {"type": "A3"} | {"quiver": {...} | "1 -(-1,-1)-> 2"}  -> 201 {id, history, state}
//   GET  /sessions/{id}                                                                   -> 200 {id, history, state}
//   POST /sessions/{id}/mutate    {"vertex": k}        -> 200, or 409 {error, triple, preview}
//   POST /sessions/{id}/undo                            -> 200, or 409 when the history is empty
//   GET  /sessions/{id}/export?format=json|dot
// Unknown sessions give 404, malformed bodies 422.

#include "mutalg/commands.hpp"

#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace httplib {
class Server;
}

namespace mutalg {

struct SessionNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NothingToUndo : std::runtime_error {
    using std::runtime_error::runtime_error;
};

class SessionStore {
public:
    // Returns the new session id.
    std::string create(const SignedValuedQuiver& Q0, std::optional<DynkinType> type = std::nullopt);
    json state(const std::string& id) const;
    // Throws PositiveThreeCycleViolation (session unchanged) or SemanticError.
    json mutate(const std::string& id, int k);
    json undo(const std::string& id);
    json export_json(const std::string& id) const;
    std::string export_dot(const std::string& id) const;
    // Quiver the current history replays to from the initial quiver.
    SignedValuedQuiver replay(const std::string& id) const;
    std::size_t size() const;

private:
    struct Session {
        mutable std::mutex mu;
        std::string id;
        std::optional<DynkinType> type;
        std::vector<SignedValuedQuiver> quivers;  // quivers[0] initial, back() current
        MutationSequence history;
    };
    std::shared_ptr<Session> find(const std::string& id) const;
    static json render(const Session& s);

    mutable std::mutex mu_;
    std::unordered_map<std::string, std::shared_ptr<Session>> sessions_;
    std::uint64_t counter_ = 0;
};

void install_routes(httplib::Server& server, SessionStore& store);

}  // namespace mutalg
