#include "graph.hpp"

#include <algorithm>
#include <sstream>

namespace gcx {

int mixed_degree(const Graph& g, int k) {
    int e1 = 0, e2 = 0;
    for (int i = 0; i < g.e(); ++i) {
        EdgeKind kd = g.kind(i);
        if (kd == EdgeKind::SDot || kd == EdgeKind::TDot) ++e1;
        if (kd == EdgeKind::Wavy) ++e2;
    }
    return (g.v - 1) * k + (1 - k) * g.e() + e1 + 2 * e2;
}

int out_valence(const Graph& g, int x) {
    int n = 0;
    for (auto& [t, h] : g.edges) n += (t == x);
    return n;
}

int in_valence(const Graph& g, int x) {
    int n = 0;
    for (auto& [t, h] : g.edges) n += (h == x);
    return n;
}

VertexClass classify_vertex(const Graph& g, int x) {
    if (x < 0 || x >= g.v) throw std::out_of_range("vertex index");
    int out = out_valence(g, x), in = in_valence(g, x);
    if (out + in == 1) return out ? VertexClass::UnivalentOut : VertexClass::UnivalentIn;
    if (in == 0 && out >= 1) return VertexClass::Source;
    if (out == 0 && in >= 1) return VertexClass::Target;
    if (in == 1 && out == 1) return VertexClass::Passing;
    return VertexClass::Generic;
}

bool is_connected(const Graph& g) {
    if (g.v == 0) return false;
    std::vector<int> seen(g.v, 0), stack{0};
    seen[0] = 1;
    int cnt = 1;
    while (!stack.empty()) {
        int x = stack.back();
        stack.pop_back();
        for (auto& [t, h] : g.edges) {
            int y = -1;
            if (t == x && !seen[h]) y = h;
            else if (h == x && !seen[t]) y = t;
            if (y >= 0) {
                seen[y] = 1;
                ++cnt;
                stack.push_back(y);
            }
        }
    }
    return cnt == g.v;
}

bool has_directed_cycle(const Graph& g) {
    // Kahn's algorithm on the directed edge set.
    std::vector<int> indeg(g.v, 0);
    for (auto& [t, h] : g.edges) ++indeg[h];
    std::vector<int> q;
    for (int x = 0; x < g.v; ++x)
        if (indeg[x] == 0) q.push_back(x);
    int done = 0;
    while (!q.empty()) {
        int x = q.back();
        q.pop_back();
        ++done;
        for (auto& [t, h] : g.edges)
            if (t == x && --indeg[h] == 0) q.push_back(h);
    }
    return done < g.v;
}

bool subcomplex_membership(const Graph& g, Membership which) {
    switch (which) {
    case Membership::Sourced: return has_source(g);
    case Membership::Targeted: return has_target(g);
    case Membership::ST: return has_source(g) && has_target(g);
    case Membership::SPlusT: return has_source(g) || has_target(g);
    case Membership::Oriented: return !has_directed_cycle(g);
    case Membership::WheeledOnly: return !has_source(g) && !has_target(g);
    }
    return false;
}

static const char* kind_tag(EdgeKind k) {
    switch (k) {
    case EdgeKind::Solid: return "-";
    case EdgeKind::SDot: return "s";
    case EdgeKind::TDot: return "t";
    case EdgeKind::Wavy: return "w";
    }
    return "?";
}

static const char* dec_tag(Dec d) {
    switch (d) {
    case Dec::InfInf: return "oo";
    case Dec::InfZero: return "o0";
    case Dec::ZeroInf: return "0o";
    case Dec::ZeroZero: return "00";
    }
    return "??";
}

std::string format_graph(const Graph& g) {
    std::ostringstream os;
    os << "v=" << g.v << ";e=";
    for (int i = 0; i < g.e(); ++i) {
        if (i) os << ",";
        os << g.edges[i].first + 1 << "-" << g.edges[i].second + 1;
    }
    if (!g.weights.empty()) {
        os << ";w=";
        for (int x = 0; x < g.v; ++x) {
            if (x) os << ",";
            os << g.weights[x][0] << "/" << g.weights[x][1];
        }
    }
    if (!g.decs.empty()) {
        os << ";dec=";
        for (int x = 0; x < g.v; ++x) {
            if (x) os << ",";
            os << dec_tag(g.decs[x]);
        }
    }
    if (!g.kinds.empty()) {
        os << ";kind=";
        for (int i = 0; i < g.e(); ++i) {
            if (i) os << ",";
            os << kind_tag(g.kinds[i]);
        }
    }
    return os.str();
}

static std::vector<std::string> split_list(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else cur += c;
    }
    if (!cur.empty() || !s.empty()) out.push_back(cur);
    return out;
}

Graph parse_graph(const std::string& text) {
    Graph g;
    for (auto& field : split_list(text, ';')) {
        auto eq = field.find('=');
        if (eq == std::string::npos) throw std::invalid_argument("bad graph text: " + text);
        std::string name = field.substr(0, eq), val = field.substr(eq + 1);
        if (name == "v") {
            g.v = std::stoi(val);
        } else if (name == "e") {
            if (val.empty()) continue;
            for (auto& tok : split_list(val, ',')) {
                auto dash = tok.find('-');
                if (dash == std::string::npos) throw std::invalid_argument("bad edge: " + tok);
                int t = std::stoi(tok.substr(0, dash)) - 1;
                int h = std::stoi(tok.substr(dash + 1)) - 1;
                g.edges.emplace_back(t, h);
            }
        } else if (name == "w") {
            for (auto& tok : split_list(val, ',')) {
                auto sl = tok.find('/');
                if (sl == std::string::npos) throw std::invalid_argument("bad weight: " + tok);
                g.weights.push_back({std::stoi(tok.substr(0, sl)), std::stoi(tok.substr(sl + 1))});
            }
        } else if (name == "dec") {
            for (auto& tok : split_list(val, ',')) {
                if (tok == "oo") g.decs.push_back(Dec::InfInf);
                else if (tok == "o0") g.decs.push_back(Dec::InfZero);
                else if (tok == "0o") g.decs.push_back(Dec::ZeroInf);
                else if (tok == "00") g.decs.push_back(Dec::ZeroZero);
                else throw std::invalid_argument("bad decoration: " + tok);
            }
        } else if (name == "kind") {
            for (auto& tok : split_list(val, ',')) {
                if (tok == "-") g.kinds.push_back(EdgeKind::Solid);
                else if (tok == "s") g.kinds.push_back(EdgeKind::SDot);
                else if (tok == "t") g.kinds.push_back(EdgeKind::TDot);
                else if (tok == "w") g.kinds.push_back(EdgeKind::Wavy);
                else throw std::invalid_argument("bad edge kind: " + tok);
            }
        } else {
            throw std::invalid_argument("unknown field: " + name);
        }
    }
    for (auto& [t, h] : g.edges)
        if (t < 0 || t >= g.v || h < 0 || h >= g.v)
            throw std::invalid_argument("edge index out of range: " + text);
    if (!g.weights.empty() && (int)g.weights.size() != g.v)
        throw std::invalid_argument("weight count mismatch");
    if (!g.decs.empty() && (int)g.decs.size() != g.v)
        throw std::invalid_argument("decoration count mismatch");
    if (!g.kinds.empty() && (int)g.kinds.size() != (int)g.edges.size())
        throw std::invalid_argument("edge kind count mismatch");
    return g;
}

} // namespace gcx
