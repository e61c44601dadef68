#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace geokiss::online {

struct OnlineError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class Model { classical, relaxed_connected };

std::string model_name(Model m);
Model parse_model(const std::string& name);

struct Arrival {
    int vertex = 0;
    std::vector<int> neighbors_among_previous;
    std::optional<double> width;  // required by LayerColoring
};

using ArrivalSequence = std::vector<Arrival>;

// validates arrivals and remembers the order they came in
class ArrivalLog {
public:
    void admit(const Arrival& a);
    bool seen(int v) const { return index_.count(v) != 0; }
    int arrival_index(int v) const;  // -1 if unseen
    int count() const { return static_cast<int>(order_.size()); }
    const std::vector<int>& order() const { return order_; }

private:
    std::map<int, int> index_;
    std::vector<int> order_;
};

enum class DsDecision { accepted, rejected };

// keeps an independent dominating set of the revealed graph
class GreedyDs {
public:
    DsDecision step(const Arrival& a);
    bool in_solution(int v) const;
    const std::vector<int>& solution() const { return accepted_; }  // arrival order
    int size() const { return static_cast<int>(accepted_.size()); }

private:
    ArrivalLog log_;
    std::map<int, char> member_;
    std::vector<int> accepted_;
};

enum class CdsAction { no_change, added_self, added_self_and_neighbor };

struct CdsDecision {
    CdsAction action = CdsAction::no_change;
    int neighbor = -1;  // set for added_self_and_neighbor
};

// connected dominating set via two sets: undominated arrivals go to a1_,
// one already-arrived neighbor (smallest arrival index) goes to a2_
class GreedyCds {
public:
    CdsDecision step(const Arrival& a);
    const std::vector<int>& a1() const { return a1_; }  // arrival order
    const std::vector<int>& a2() const { return a2_; }
    std::vector<int> solution() const;  // union, ascending
    bool in_solution(int v) const;
    int size() const { return static_cast<int>(a1_.size() + a2_.size()); }

private:
    ArrivalLog log_;
    std::map<int, char> member_;  // 1 = a1, 2 = a2
    std::vector<int> a1_;
    std::vector<int> a2_;
};

class FirstFit {
public:
    int step(const Arrival& a);
    int color(int v) const;
    const std::map<int, int>& colors() const { return color_; }
    int colors_used() const;

private:
    ArrivalLog log_;
    std::map<int, int> color_;
};

// first-fit inside width layer floor(log2 w); a color used by any other
// layer is forbidden, which keeps per-layer color pools disjoint
class LayerColoring {
public:
    int step(const Arrival& a);
    int color(int v) const;
    int layer_of(int v) const;
    const std::map<int, int>& colors() const { return color_; }
    int colors_used() const;
    std::map<int, std::vector<int>> layer_pools() const;  // layer -> ascending colors

private:
    ArrivalLog log_;
    std::map<int, int> color_;
    std::map<int, int> layer_;                 // vertex -> layer
    std::map<int, std::vector<char>> used_;    // layer -> color bitmap (index = color)
    std::vector<char> global_used_{0};         // color bitmap across layers
};

// smallest color keeping every within-class degree at most t
class RelaxedFirstFit {
public:
    explicit RelaxedFirstFit(int t);
    int step(const Arrival& a);
    int color(int v) const;
    int class_degree(int v) const;
    const std::map<int, int>& colors() const { return color_; }
    int colors_used() const;
    int relaxation() const { return t_; }

private:
    ArrivalLog log_;
    int t_;
    std::map<int, int> color_;
    std::map<int, int> class_degree_;
};

}  // namespace geokiss::online
