#include "mcp/json_io.hpp"

#include <stdexcept>
#include <string>

namespace mcp {

namespace {

Json colour_json(std::optional<Colour> c) {
    if (!c)
        return nullptr;
    return *c == Colour::Red ? "red" : "blue";
}

Json vertices_json(std::span<const Vertex> vs) {
    Json out = Json::array();
    for (Vertex v : vs)
        out.push_back(to_string(v));
    return out;
}

Json indices_json(const std::vector<int>& v) {
    Json out = Json::array();
    for (int i : v)
        out.push_back(i);
    return out;
}

std::vector<Vertex> parse_vertices(const Json& arr) {
    if (!arr.is_array())
        throw std::invalid_argument("\"vertices\" must be an array");
    std::vector<Vertex> out;
    for (const Json& item : arr) {
        if (!item.is_string())
            throw std::invalid_argument("vertex entries must be strings");
        auto v = parse_vertex(item.get<std::string>());
        if (!v)
            throw std::invalid_argument("bad vertex \"" + item.get<std::string>() + "\"");
        out.push_back(*v);
    }
    return out;
}

} // namespace

Json cycle_json(const Cycle& c) {
    Json out;
    out["kind"] = kind_name(c.kind);
    out["colour"] = colour_json(c.colour);
    out["vertices"] = vertices_json(c.vertices);
    return out;
}

Json partition_json(const Partition& p) {
    Json out = Json::array();
    for (const Cycle& c : p.cycles)
        out.push_back(cycle_json(c));
    return out;
}

Json certificate_json(const SplitCertificate& cert) {
    Json out;
    out["x1"] = indices_json(cert.x1);
    out["x2"] = indices_json(cert.x2);
    out["y1"] = indices_json(cert.y1);
    out["y2"] = indices_json(cert.y2);
    return out;
}

Json trace_json(const SolveTrace& t) {
    Json out = Json::object();
    if (t.certificate)
        out["split_certificate"] = certificate_json(*t.certificate);
    if (t.simple_path) {
        Json sp;
        sp["vertices"] = vertices_json(t.simple_path->vertices);
        sp["turning"] = t.simple_path->turning;
        out["simple_path"] = std::move(sp);
        Json eng;
        eng["extensions"] = t.engine.extensions;
        eng["rewrites"] = t.engine.rewrites;
        eng["loop_steps"] = t.engine.loop_steps;
        eng["scans"] = t.engine.scans;
        eng["repairs"] = t.engine.repairs;
        out["engine"] = std::move(eng);
    }
    if (t.decomposition) {
        Json d;
        d["cycle"] = cycle_json(t.decomposition->cycle);
        d["path"] = {{"colour", colour_json(t.decomposition->path.colour)},
                     {"vertices", vertices_json(t.decomposition->path.vertices)}};
        out["decomposition"] = std::move(d);
    }
    if (t.zigzag) {
        Json z;
        z["outcome"] = t.zigzag->outcome;
        z["plait_level"] = t.zigzag->plait_level;
        Json probes = Json::array();
        for (const ProbeRecord& p : t.zigzag->probes)
            probes.push_back({{"edge", to_string(p.x) + to_string(p.y)},
                              {"colour", colour_json(p.colour)},
                              {"step", p.step}});
        z["probes"] = std::move(probes);
        out["zigzag"] = std::move(z);
    }
    return out;
}

Json solution_json(int n, const Solution& s, bool verified, bool with_trace) {
    Json out;
    out["n"] = n;
    out["route"] = route_name(s.route);
    out["cycles"] = partition_json(s.partition);
    out["verified"] = verified;
    if (with_trace)
        out["trace"] = trace_json(s.trace);
    return out;
}

Json oracle_json(int n, const OracleResult& r, bool verified) {
    Json out;
    out["n"] = n;
    out["minimum"] = r.minimum;
    out["cycles"] = partition_json(r.witness);
    out["verified"] = verified;
    return out;
}

Partition parse_partition_json(const Json& doc) {
    const Json* arr = &doc;
    if (doc.is_object()) {
        if (!doc.contains("cycles"))
            throw std::invalid_argument("missing \"cycles\"");
        arr = &doc["cycles"];
    }
    if (!arr->is_array())
        throw std::invalid_argument("\"cycles\" must be an array");
    Partition p;
    for (const Json& item : *arr) {
        if (!item.is_object() || !item.contains("vertices"))
            throw std::invalid_argument("cycle entries need \"vertices\"");
        std::optional<Colour> colour;
        if (item.contains("colour") && !item["colour"].is_null()) {
            const std::string name = item["colour"].is_string() ? item["colour"].get<std::string>() : "";
            if (name == "red")
                colour = Colour::Red;
            else if (name == "blue")
                colour = Colour::Blue;
            else
                throw std::invalid_argument("colour must be \"red\", \"blue\" or null");
        }
        // Keep the declared kind so the verifier can reject a mismatch.
        Cycle c{parse_vertices(item["vertices"]), CycleKind::Singleton, colour};
        const std::size_t len = c.vertices.size();
        c.kind = len <= 1 ? CycleKind::Singleton : len == 2 ? CycleKind::Edge : CycleKind::Proper;
        if (item.contains("kind")) {
            const std::string k = item["kind"].is_string() ? item["kind"].get<std::string>() : "";
            if (k == "singleton")
                c.kind = CycleKind::Singleton;
            else if (k == "edge")
                c.kind = CycleKind::Edge;
            else if (k == "proper")
                c.kind = CycleKind::Proper;
            else
                throw std::invalid_argument("unknown cycle kind \"" + k + "\"");
        }
        p.cycles.push_back(std::move(c));
    }
    return p;
}

} // namespace mcp
