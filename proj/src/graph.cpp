#include "geokiss/graph.hpp"

#include <algorithm>
#include <queue>
#include <sstream>

namespace geokiss::graph {

Graph::Graph(int n) : n_(n) {
    if (n < 0) throw GraphError("vertex count must be nonnegative");
    adj_.assign(static_cast<size_t>(n) * n, 0);
    nbrs_.assign(n, {});
}

void Graph::check(int v) const {
    if (v < 0 || v >= n_) throw GraphError("vertex " + std::to_string(v) + " out of range");
}

void Graph::add_edge(int u, int v) {
    check(u);
    check(v);
    if (u == v) throw GraphError("self-loop at vertex " + std::to_string(u));
    if (adj_[static_cast<size_t>(u) * n_ + v]) return;
    adj_[static_cast<size_t>(u) * n_ + v] = 1;
    adj_[static_cast<size_t>(v) * n_ + u] = 1;
    nbrs_[u].insert(std::lower_bound(nbrs_[u].begin(), nbrs_[u].end(), v), v);
    nbrs_[v].insert(std::lower_bound(nbrs_[v].begin(), nbrs_[v].end(), u), u);
    ++edges_;
}

bool Graph::adjacent(int u, int v) const {
    check(u);
    check(v);
    return adj_[static_cast<size_t>(u) * n_ + v] != 0;
}

const std::vector<int>& Graph::neighbors(int v) const {
    check(v);
    return nbrs_[v];
}

int Graph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

Graph build_intersection_graph(const std::vector<geom::Shape>& shapes) {
    return build_intersection_graph(shapes, geom::default_tolerance());
}

Graph build_intersection_graph(const std::vector<geom::Shape>& shapes, double tol) {
    Graph g(static_cast<int>(shapes.size()));
    for (size_t i = 0; i < shapes.size(); ++i)
        for (size_t j = i + 1; j < shapes.size(); ++j)
            if (geom::intersects(shapes[i], shapes[j], tol))
                g.add_edge(static_cast<int>(i), static_cast<int>(j));
    return g;
}

namespace {

struct MisSolver {
    const Graph& g;
    std::vector<int> best;
    std::vector<int> cur;

    explicit MisSolver(const Graph& graph) : g(graph) {}

    int clique_cover_bound(const std::vector<int>& cand) const {
        std::vector<std::vector<int>> cliques;
        for (int v : cand) {
            bool placed = false;
            for (auto& c : cliques) {
                bool all = true;
                for (int u : c)
                    if (!g.adjacent(u, v)) {
                        all = false;
                        break;
                    }
                if (all) {
                    c.push_back(v);
                    placed = true;
                    break;
                }
            }
            if (!placed) cliques.push_back({v});
        }
        return static_cast<int>(cliques.size());
    }

    // include-first over ascending candidates, so the first set of each size
    // found is lexicographically smallest; strict improvement keeps it
    void dfs(std::vector<int> cand) {
        if (cur.size() > best.size()) best = cur;
        if (cand.empty()) return;
        if (cur.size() + clique_cover_bound(cand) <= best.size()) return;
        const int v = cand.front();
        std::vector<int> rest;
        rest.reserve(cand.size());
        for (size_t i = 1; i < cand.size(); ++i)
            if (!g.adjacent(v, cand[i])) rest.push_back(cand[i]);
        cur.push_back(v);
        dfs(std::move(rest));
        cur.pop_back();
        cand.erase(cand.begin());
        dfs(std::move(cand));
    }
};

}  // namespace

std::vector<int> max_independent_set(const Graph& g, int cap) {
    if (g.size() > cap)
        throw GraphError("independent-set solver cap " + std::to_string(cap) +
                         " exceeded by graph of size " + std::to_string(g.size()));
    MisSolver s(g);
    std::vector<int> all(g.size());
    for (int i = 0; i < g.size(); ++i) all[i] = i;
    s.dfs(std::move(all));
    return s.best;
}

KissingReport independent_kissing_number(const Graph& g, int cap) {
    KissingReport rep;
    for (int v = 0; v < g.size(); ++v) {
        const auto& ns = g.neighbors(v);
        if (static_cast<int>(ns.size()) > cap)
            throw GraphError("neighborhood of vertex " + std::to_string(v) + " has size " +
                             std::to_string(ns.size()) + ", above solver cap " +
                             std::to_string(cap));
        const Graph sub = induced_subgraph(g, ns);
        std::vector<int> mis = max_independent_set(sub, cap);
        if (static_cast<int>(mis.size()) > rep.zeta || rep.witness_vertex < 0) {
            rep.zeta = static_cast<int>(mis.size());
            rep.witness_vertex = v;
            rep.witness_independent_set.clear();
            for (int idx : mis) rep.witness_independent_set.push_back(ns[idx]);
        }
    }
    return rep;
}

Graph induced_subgraph(const Graph& g, const std::vector<int>& vs) {
    std::vector<int> seen;
    for (int v : vs) {
        if (v < 0 || v >= g.size())
            throw GraphError("induced_subgraph: vertex " + std::to_string(v) + " out of range");
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw GraphError("induced_subgraph: duplicate vertex");
    Graph sub(static_cast<int>(vs.size()));
    for (size_t i = 0; i < vs.size(); ++i)
        for (size_t j = i + 1; j < vs.size(); ++j)
            if (g.adjacent(vs[i], vs[j])) sub.add_edge(static_cast<int>(i), static_cast<int>(j));
    return sub;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<std::vector<int>> comps;
    std::vector<char> vis(g.size(), 0);
    for (int s = 0; s < g.size(); ++s) {
        if (vis[s]) continue;
        std::vector<int> comp;
        std::queue<int> q;
        q.push(s);
        vis[s] = 1;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            comp.push_back(v);
            for (int u : g.neighbors(v))
                if (!vis[u]) {
                    vis[u] = 1;
                    q.push(u);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

Graph parse_adjacency(const std::string& text) {
    struct Line {
        int id;
        std::vector<int> nbrs;
    };
    std::vector<Line> lines;
    int max_id = -1;
    std::istringstream in(text);
    std::string raw;
    int lineno = 0;
    while (std::getline(in, raw)) {
        ++lineno;
        const auto hash = raw.find('#');
        if (hash != std::string::npos) raw.erase(hash);
        if (raw.find_first_not_of(" \t\r") == std::string::npos) continue;
        const auto colon = raw.find(':');
        if (colon == std::string::npos)
            throw GraphError("adjacency line " + std::to_string(lineno) + ": missing ':'");
        Line ln;
        try {
            size_t used = 0;
            ln.id = std::stoi(raw.substr(0, colon), &used);
            if (raw.substr(0, colon).find_first_not_of(" \t", used) != std::string::npos)
                throw std::invalid_argument("trailing");
        } catch (const std::exception&) {
            throw GraphError("adjacency line " + std::to_string(lineno) + ": bad vertex id");
        }
        if (ln.id < 0)
            throw GraphError("adjacency line " + std::to_string(lineno) + ": negative vertex id");
        std::istringstream rest(raw.substr(colon + 1));
        std::string tok;
        while (rest >> tok) {
            int u;
            try {
                size_t used = 0;
                u = std::stoi(tok, &used);
                if (used != tok.size()) throw std::invalid_argument("trailing");
            } catch (const std::exception&) {
                throw GraphError("adjacency line " + std::to_string(lineno) + ": bad neighbor '" +
                                 tok + "'");
            }
            if (u < 0)
                throw GraphError("adjacency line " + std::to_string(lineno) +
                                 ": negative neighbor id");
            if (u == ln.id)
                throw GraphError("adjacency line " + std::to_string(lineno) + ": self-loop at " +
                                 std::to_string(u));
            ln.nbrs.push_back(u);
            max_id = std::max(max_id, u);
        }
        max_id = std::max(max_id, ln.id);
        lines.push_back(std::move(ln));
    }
    Graph g(max_id + 1);
    for (const auto& ln : lines)
        for (int u : ln.nbrs) g.add_edge(ln.id, u);
    return g;
}

std::string format_adjacency(const Graph& g) {
    std::ostringstream out;
    for (int v = 0; v < g.size(); ++v) {
        out << v << ':';
        for (int u : g.neighbors(v)) out << ' ' << u;
        out << '\n';
    }
    return out.str();
}

}  // namespace geokiss::graph
