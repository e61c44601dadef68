#include "geokiss/instance.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

#include "geokiss/graph.hpp"

namespace geokiss::harness {

using nlohmann::json;

namespace {

json point_to_json(const geom::Point& p) { return json(p); }

geom::Point point_from_json(const json& j, const char* what) {
    if (!j.is_array() || j.empty())
        throw HarnessError(std::string(what) + ": expected a coordinate array");
    geom::Point p;
    for (const auto& v : j) {
        if (!v.is_number()) throw HarnessError(std::string(what) + ": non-numeric coordinate");
        p.push_back(v.get<double>());
    }
    return p;
}

json shape_to_json(const geom::Shape& s) {
    json j;
    j["kind"] = s.kind_name();
    if (s.is<geom::Ball>()) {
        j["center"] = point_to_json(s.as<geom::Ball>().center);
        j["radius"] = s.as<geom::Ball>().radius;
    } else if (s.is<geom::AxisHypercube>()) {
        j["center"] = point_to_json(s.as<geom::AxisHypercube>().center);
        j["side"] = s.as<geom::AxisHypercube>().side;
    } else if (s.is<geom::RegularKGon>()) {
        const auto& g = s.as<geom::RegularKGon>();
        j["center"] = point_to_json(g.center);
        j["k"] = g.k;
        j["circumradius"] = g.circumradius;
        j["rotation"] = g.rotation;
    } else if (s.is<geom::ConvexPolygon>()) {
        json vs = json::array();
        for (const auto& v : s.as<geom::ConvexPolygon>().vertices) vs.push_back(point_to_json(v));
        j["vertices"] = vs;
    } else {
        const auto& p = s.as<geom::Prism>();
        json vs = json::array();
        for (const auto& v : p.base) vs.push_back(point_to_json(v));
        j["base"] = vs;
        json iv = json::array();
        for (const auto& i : p.intervals) iv.push_back(json{i[0], i[1]});
        j["intervals"] = iv;
    }
    return j;
}

geom::Shape shape_from_json(const json& j) {
    if (!j.is_object() || !j.contains("kind"))
        throw HarnessError("shape record needs a 'kind' field");
    const std::string kind = j.at("kind").get<std::string>();
    try {
        if (kind == "ball")
            return geom::Ball{point_from_json(j.at("center"), "ball"),
                              j.at("radius").get<double>()};
        if (kind == "axis_hypercube")
            return geom::AxisHypercube{point_from_json(j.at("center"), "axis_hypercube"),
                                       j.at("side").get<double>()};
        if (kind == "regular_kgon")
            return geom::RegularKGon{point_from_json(j.at("center"), "regular_kgon"),
                                     j.at("k").get<int>(), j.at("circumradius").get<double>(),
                                     j.at("rotation").get<double>()};
        if (kind == "convex_polygon") {
            geom::ConvexPolygon p;
            for (const auto& v : j.at("vertices")) p.vertices.push_back(point_from_json(v, kind.c_str()));
            return p;
        }
        if (kind == "prism") {
            geom::Prism p;
            for (const auto& v : j.at("base")) p.base.push_back(point_from_json(v, "prism"));
            for (const auto& iv : j.at("intervals")) {
                if (!iv.is_array() || iv.size() != 2)
                    throw HarnessError("prism interval must be [lo, hi]");
                p.intervals.push_back({iv[0].get<double>(), iv[1].get<double>()});
            }
            return p;
        }
    } catch (const json::exception& e) {
        throw HarnessError("bad shape record (" + kind + "): " + e.what());
    }
    throw HarnessError("unknown shape kind '" + kind + "'");
}

}  // namespace

void validate_instance(const Instance& inst) {
    const int n = static_cast<int>(inst.shapes.size());
    if (static_cast<int>(inst.arrival_order.size()) != n)
        throw HarnessError("arrival order length " + std::to_string(inst.arrival_order.size()) +
                           " does not match shape count " + std::to_string(n));
    std::set<int> seen;
    for (int v : inst.arrival_order) {
        if (v < 0 || v >= n)
            throw HarnessError("arrival order entry " + std::to_string(v) + " out of range");
        if (!seen.insert(v).second)
            throw HarnessError("arrival order repeats vertex " + std::to_string(v));
    }
    for (const auto& s : inst.shapes) {
        if (s.dimension() != inst.dimension)
            throw HarnessError("shape dimension " + std::to_string(s.dimension()) +
                               " does not match instance dimension " +
                               std::to_string(inst.dimension));
        if (inst.family_meta.m >= 1.0) {
            try {
                const double w = geom::fat_meta(s).width;
                if (w < 1.0 - 1e-9 || w > inst.family_meta.m + 1e-9)
                    throw HarnessError("shape width " + std::to_string(w) + " outside [1, " +
                                       std::to_string(inst.family_meta.m) + "]");
            } catch (const geom::UnsupportedPair&) {
                // no closed-form width for this kind; nothing to check
            }
        }
    }
    if (inst.model == online::Model::relaxed_connected && n > 1) {
        const graph::Graph g = graph::build_intersection_graph(inst.shapes);
        std::set<int> arrived;
        for (int v : inst.arrival_order) {
            if (!arrived.empty()) {
                bool linked = false;
                for (int u : g.neighbors(v))
                    if (arrived.count(u)) {
                        linked = true;
                        break;
                    }
                if (!linked)
                    throw HarnessError("relaxed_connected order breaks connectivity at vertex " +
                                       std::to_string(v));
            }
            arrived.insert(v);
        }
    }
}

std::string instance_to_json(const Instance& inst) {
    json j;
    j["dimension"] = inst.dimension;
    j["model"] = online::model_name(inst.model);
    j["family"] = inst.family_meta.family;
    j["m"] = inst.family_meta.m;
    j["alpha"] = inst.family_meta.alpha;
    json shapes = json::array();
    for (const auto& s : inst.shapes) shapes.push_back(shape_to_json(s));
    j["shapes"] = shapes;
    j["arrival_order"] = inst.arrival_order;
    return j.dump(2) + "\n";
}

Instance instance_from_json(const std::string& text) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::exception& e) {
        throw HarnessError(std::string("instance parse error: ") + e.what());
    }
    try {
        Instance inst;
        inst.dimension = j.at("dimension").get<int>();
        inst.model = online::parse_model(j.at("model").get<std::string>());
        inst.family_meta.family = j.at("family").get<std::string>();
        inst.family_meta.m = j.at("m").get<double>();
        inst.family_meta.alpha = j.at("alpha").get<double>();
        for (const auto& s : j.at("shapes")) inst.shapes.push_back(shape_from_json(s));
        inst.arrival_order = j.at("arrival_order").get<std::vector<int>>();
        validate_instance(inst);
        return inst;
    } catch (const json::exception& e) {
        throw HarnessError(std::string("instance field error: ") + e.what());
    }
}

void save_instance(const Instance& inst, const std::string& path) {
    validate_instance(inst);
    std::ofstream out(path);
    if (!out) throw HarnessError("cannot open " + path + " for writing");
    out << instance_to_json(inst);
    if (!out) throw HarnessError("write to " + path + " failed");
}

Instance load_instance(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw HarnessError("cannot open " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return instance_from_json(buf.str());
}

}  // namespace geokiss::harness
