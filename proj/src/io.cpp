#include "cupsq/io.hpp"

#include <algorithm>
#include <fstream>
#include <json.hpp>
#include <sstream>

namespace cupsq {

namespace {

using nlohmann::json;

json arrows_to_json(const Span& s) {
    json out = json::array();
    for (auto& [x, y] : s.arrows) out.push_back(json::array({x, y}));
    return out;
}

[[noreturn]] void fail(const std::string& where, const std::string& what) {
    throw domain_error("asso-json: " + where + ": " + what);
}

int parse_int(const std::string& s, const std::string& where) {
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size()) fail(where, "trailing characters in integer '" + s + "'");
        return v;
    } catch (const domain_error&) {
        throw;
    } catch (const std::exception&) {
        fail(where, "not an integer: '" + s + "'");
    }
}

std::vector<int> parse_perm(const json& j, size_t size, const std::string& where) {
    if (!j.is_array()) fail(where, "permutation must be an array");
    std::vector<int> perm;
    std::vector<char> seen(size, 0);
    for (auto& v : j) {
        if (!v.is_number_integer()) fail(where, "permutation entries must be integers");
        int p = v.get<int>();
        if (p < 0 || p >= static_cast<int>(size) || seen[p])
            fail(where, "not a permutation of 0.." + std::to_string(size ? size - 1 : 0));
        seen[p] = 1;
        perm.push_back(p);
    }
    if (perm.size() != size)
        fail(where, "permutation length " + std::to_string(perm.size()) + ", expected " +
                        std::to_string(size));
    return perm;
}

}  // namespace

std::string asso_to_json(const AssoObject& obj) {
    json j;
    j["levels"] = json::object();
    for (auto& [n, level] : obj.levels)
        j["levels"][std::to_string(n)] = level->elements();
    j["faces"] = json::object();
    for (auto& [key, span] : obj.elem_faces)
        j["faces"][std::to_string(key.first) + ":" + std::to_string(key.second)] =
            arrows_to_json(span);
    j["commutators"] = json::object();
    for (auto& [key, fib] : obj.commutators) {
        auto [n, i, k] = key;
        j["commutators"][std::to_string(n) + ":" + std::to_string(i) + "," + std::to_string(k)] =
            fib.matching;
    }
    j["order_overrides"] = json::object();
    for (auto& [key, perm] : obj.order_overrides) {
        std::string u;
        for (int v : key.second) {
            if (!u.empty()) u += ",";
            u += std::to_string(v);
        }
        j["order_overrides"][std::to_string(key.first) + ":" + u] = perm;
    }
    return j.dump(2) + "\n";
}

AssoObject asso_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw domain_error(std::string("asso-json: ") + e.what());
    }
    if (!j.is_object()) fail("top level", "expected an object");
    for (auto& [key, value] : j.items())
        if (key != "levels" && key != "faces" && key != "commutators" && key != "order_overrides")
            fail("top level", "unknown key '" + key + "'");

    AssoObject obj;
    if (!j.contains("levels") || !j["levels"].is_object())
        fail("levels", "missing or not an object");
    for (auto& [key, value] : j["levels"].items()) {
        int n = parse_int(key, "levels");
        if (n < -1) fail("levels", "degree below -1: " + key);
        if (!value.is_array()) fail("levels '" + key + "'", "expected an array of identifiers");
        std::vector<std::string> ids;
        for (auto& e : value) {
            if (!e.is_string()) fail("levels '" + key + "'", "identifiers must be strings");
            ids.push_back(e.get<std::string>());
        }
        try {
            obj.levels[n] = make_set("X" + key, std::move(ids));
        } catch (const std::exception& e) {
            fail("levels '" + key + "'", e.what());
        }
    }

    json faces = j.value("faces", json::object());
    for (auto& [key, value] : faces.items()) {
        auto colon = key.find(':');
        if (colon == std::string::npos) fail("faces", "key '" + key + "' is not 'n:i'");
        int n = parse_int(key.substr(0, colon), "faces");
        int i = parse_int(key.substr(colon + 1), "faces");
        if (n < 0 || i < 0 || i > n) fail("faces", "face index out of range in '" + key + "'");
        if (!value.is_array()) fail("faces '" + key + "'", "expected an array of arrows");
        Span span;
        span.src = obj.level(n);
        span.tgt = obj.level(n - 1);
        for (auto& arrow : value) {
            if (!arrow.is_array() || arrow.size() != 2 || !arrow[0].is_number_integer() ||
                !arrow[1].is_number_integer())
                fail("faces '" + key + "'", "arrows must be [source, target] index pairs");
            int x = arrow[0].get<int>(), y = arrow[1].get<int>();
            if (x < 0 || x >= span.src->size() || y < 0 || y >= span.tgt->size())
                fail("faces '" + key + "'", "arrow index out of range");
            span.arrows.push_back({x, y});
        }
        obj.elem_faces[{n, i}] = std::move(span);
    }

    json commutators = j.value("commutators", json::object());
    for (auto& [key, value] : commutators.items()) {
        auto colon = key.find(':');
        auto comma = key.find(',', colon == std::string::npos ? 0 : colon);
        if (colon == std::string::npos || comma == std::string::npos || comma < colon)
            fail("commutators", "key '" + key + "' is not 'n:i,j'");
        int n = parse_int(key.substr(0, colon), "commutators");
        int i = parse_int(key.substr(colon + 1, comma - colon - 1), "commutators");
        int k = parse_int(key.substr(comma + 1), "commutators");
        if (n < 0 || i < 0 || i >= k || k > n)
            fail("commutators", "indices out of range in '" + key + "'");
        size_t size = compose(obj.elem_face(n - 1, k - 1), obj.elem_face(n, i)).arrows.size();
        obj.commutators[{n, i, k}] = FibBijection{parse_perm(value, size, "commutators '" + key + "'")};
    }

    json overrides = j.value("order_overrides", json::object());
    for (auto& [key, value] : overrides.items()) {
        auto colon = key.find(':');
        if (colon == std::string::npos) fail("order_overrides", "key '" + key + "' is not 'n:u,…'");
        int n = parse_int(key.substr(0, colon), "order_overrides");
        Seq U;
        std::stringstream rest(key.substr(colon + 1));
        std::string part;
        while (std::getline(rest, part, ','))
            U.push_back(parse_int(part, "order_overrides"));
        if (U.empty() || !std::is_sorted(U.begin(), U.end()) || U.front() < 0 || U.back() > n)
            fail("order_overrides", "face set invalid in '" + key + "'");
        size_t size = obj.face(n, U).span.arrows.size();
        obj.order_overrides[{n, U}] =
            parse_perm(value, size, "order_overrides '" + key + "'");
    }
    // Data-only copy: drops the face caches warmed while sizing the
    // permutations above, which predate the installed overrides.
    return AssoObject(obj);
}

std::string pd_to_json(const PDCode& pd) {
    json j;
    j["crossings"] = json::array();
    for (auto& t : pd.crossings) j["crossings"].push_back(json::array({t[0], t[1], t[2], t[3]}));
    j["signs"] = pd.signs;
    return j.dump(2) + "\n";
}

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw domain_error("cannot open file: " + path);
    std::ostringstream out;
    out << in.rdbuf();
    return out.str();
}

}  // namespace cupsq
