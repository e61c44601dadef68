#include "geokiss/online.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace geokiss::online {

std::string model_name(Model m) {
    return m == Model::classical ? "classical" : "relaxed_connected";
}

Model parse_model(const std::string& name) {
    if (name == "classical") return Model::classical;
    if (name == "relaxed_connected") return Model::relaxed_connected;
    throw OnlineError("unknown arrival model '" + name + "'");
}

void ArrivalLog::admit(const Arrival& a) {
    if (seen(a.vertex))
        throw OnlineError("vertex " + std::to_string(a.vertex) + " arrived twice");
    std::set<int> distinct;
    for (int u : a.neighbors_among_previous) {
        if (!seen(u))
            throw OnlineError("arrival " + std::to_string(a.vertex) + " lists neighbor " +
                              std::to_string(u) + " that has not arrived");
        if (!distinct.insert(u).second)
            throw OnlineError("arrival " + std::to_string(a.vertex) + " lists neighbor " +
                              std::to_string(u) + " twice");
    }
    index_[a.vertex] = count();
    order_.push_back(a.vertex);
}

int ArrivalLog::arrival_index(int v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

DsDecision GreedyDs::step(const Arrival& a) {
    log_.admit(a);
    for (int u : a.neighbors_among_previous)
        if (member_.count(u)) return DsDecision::rejected;
    member_[a.vertex] = 1;
    accepted_.push_back(a.vertex);
    return DsDecision::accepted;
}

bool GreedyDs::in_solution(int v) const { return member_.count(v) != 0; }

CdsDecision GreedyCds::step(const Arrival& a) {
    if (log_.count() > 0 && a.neighbors_among_previous.empty())
        throw OnlineError("arrival " + std::to_string(a.vertex) +
                          " disconnects the revealed graph");
    log_.admit(a);
    for (int u : a.neighbors_among_previous)
        if (member_.count(u)) return {CdsAction::no_change, -1};
    member_[a.vertex] = 1;
    a1_.push_back(a.vertex);
    if (a.neighbors_among_previous.empty()) return {CdsAction::added_self, -1};
    int pick = -1;
    for (int u : a.neighbors_among_previous)
        if (pick < 0 || log_.arrival_index(u) < log_.arrival_index(pick)) pick = u;
    member_[pick] = 2;
    a2_.push_back(pick);
    return {CdsAction::added_self_and_neighbor, pick};
}

std::vector<int> GreedyCds::solution() const {
    std::vector<int> out;
    out.reserve(a1_.size() + a2_.size());
    out.insert(out.end(), a1_.begin(), a1_.end());
    out.insert(out.end(), a2_.begin(), a2_.end());
    std::sort(out.begin(), out.end());
    return out;
}

bool GreedyCds::in_solution(int v) const { return member_.count(v) != 0; }

namespace {

int distinct_color_count(const std::map<int, int>& colors) {
    std::set<int> used;
    for (const auto& [v, c] : colors) used.insert(c);
    return static_cast<int>(used.size());
}

int require_color(const std::map<int, int>& colors, int v, const char* who) {
    auto it = colors.find(v);
    if (it == colors.end())
        throw OnlineError(std::string(who) + ": vertex " + std::to_string(v) + " has no color");
    return it->second;
}

}  // namespace

int FirstFit::step(const Arrival& a) {
    log_.admit(a);
    std::set<int> forbidden;
    for (int u : a.neighbors_among_previous) forbidden.insert(color_.at(u));
    int c = 1;
    while (forbidden.count(c)) ++c;
    color_[a.vertex] = c;
    return c;
}

int FirstFit::color(int v) const { return require_color(color_, v, "FirstFit"); }

int FirstFit::colors_used() const { return distinct_color_count(color_); }

int LayerColoring::step(const Arrival& a) {
    if (!a.width)
        throw OnlineError("arrival " + std::to_string(a.vertex) + " carries no width");
    const double w = *a.width;
    if (!(w >= 1.0) || !std::isfinite(w))
        throw OnlineError("arrival " + std::to_string(a.vertex) + " has width " +
                          std::to_string(w) + ", expected at least 1");
    log_.admit(a);
    const int j = std::ilogb(w);

    auto& mine = used_[j];
    // forbidden: colors of intersecting same-layer objects, plus every color
    // any other layer has used
    std::set<int> forbidden;
    for (int u : a.neighbors_among_previous)
        if (layer_.at(u) == j) forbidden.insert(color_.at(u));
    int c = 1;
    auto other_used = [&](int col) {
        if (col >= static_cast<int>(global_used_.size())) return false;
        if (!global_used_[col]) return false;
        return col >= static_cast<int>(mine.size()) || !mine[col];
    };
    while (forbidden.count(c) || other_used(c)) ++c;

    if (c >= static_cast<int>(global_used_.size())) global_used_.resize(c + 1, 0);
    global_used_[c] = 1;
    if (c >= static_cast<int>(mine.size())) mine.resize(c + 1, 0);
    mine[c] = 1;
    color_[a.vertex] = c;
    layer_[a.vertex] = j;
    return c;
}

int LayerColoring::color(int v) const { return require_color(color_, v, "LayerColoring"); }

int LayerColoring::layer_of(int v) const {
    auto it = layer_.find(v);
    if (it == layer_.end())
        throw OnlineError("LayerColoring: vertex " + std::to_string(v) + " has no layer");
    return it->second;
}

int LayerColoring::colors_used() const { return distinct_color_count(color_); }

std::map<int, std::vector<int>> LayerColoring::layer_pools() const {
    std::map<int, std::vector<int>> pools;
    for (const auto& [j, bitmap] : used_) {
        auto& pool = pools[j];
        for (int c = 0; c < static_cast<int>(bitmap.size()); ++c)
            if (bitmap[c]) pool.push_back(c);
    }
    return pools;
}

RelaxedFirstFit::RelaxedFirstFit(int t) : t_(t) {
    if (t < 0) throw OnlineError("relaxation must be nonnegative");
}

int RelaxedFirstFit::step(const Arrival& a) {
    log_.admit(a);
    for (int c = 1;; ++c) {
        int same = 0;
        bool ok = true;
        for (int u : a.neighbors_among_previous) {
            if (color_.at(u) != c) continue;
            ++same;
            if (class_degree_.at(u) + 1 > t_ || same > t_) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        color_[a.vertex] = c;
        class_degree_[a.vertex] = same;
        for (int u : a.neighbors_among_previous)
            if (color_.at(u) == c) ++class_degree_[u];
        return c;
    }
}

int RelaxedFirstFit::color(int v) const { return require_color(color_, v, "RelaxedFirstFit"); }

int RelaxedFirstFit::class_degree(int v) const {
    auto it = class_degree_.find(v);
    if (it == class_degree_.end())
        throw OnlineError("RelaxedFirstFit: vertex " + std::to_string(v) + " has no color");
    return it->second;
}

int RelaxedFirstFit::colors_used() const { return distinct_color_count(color_); }

}  // namespace geokiss::online
