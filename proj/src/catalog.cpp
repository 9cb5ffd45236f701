#include "domgame/catalog.hpp"

#include <algorithm>
#include <cctype>

#include "domgame/enumeration.hpp"

namespace domgame {

Graph path_graph(int k) {
    std::vector<Edge> e;
    for (int v = 0; v + 1 < k; ++v) e.emplace_back(v, v + 1);
    return Graph(k, e);
}

Graph cycle_graph(int k) {
    if (k < 3) throw PreconditionError("cycle needs at least 3 vertices");
    std::vector<Edge> e;
    for (int v = 0; v < k; ++v) e.emplace_back(v, (v + 1) % k);
    return Graph(k, e);
}

Graph complete_graph(int k) {
    std::vector<Edge> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return Graph(k, e);
}

Graph complete_bipartite(int a, int b) {
    std::vector<Edge> e;
    for (int u = 0; u < a; ++u)
        for (int v = 0; v < b; ++v) e.emplace_back(u, a + v);
    return Graph(a + b, e);
}

Graph star_graph(int leaves) { return complete_bipartite(1, leaves); }

Graph antihole(int k) {
    if (k < 5) throw PreconditionError("antihole needs at least 5 vertices");
    return complement(cycle_graph(k));
}

Graph family_f(int index) {
    switch (index) {
        case 1:  // two disjoint paths on three vertices
            return disjoint_union(path_graph(3), path_graph(3));
        case 2:  // two adjacent centers, two leaves each
            return Graph(6, {{0, 2}, {1, 2}, {2, 3}, {3, 4}, {3, 5}});
        case 3:
            return Graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}, {2, 5}});
        case 4:
            return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {1, 4}, {0, 3}});
        case 5:
            return Graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 5}, {4, 5}, {1, 5}, {0, 3}, {2, 4}});
        case 6:
            return complete_bipartite(3, 3);
        default:
            throw PreconditionError("family index must be 1..6");
    }
}

Graph co_domino() {
    // Two triangles {0,1,2}, {3,4,5} joined by the edges 1-3 and 2-4.
    return Graph(6, {{0, 1}, {0, 2}, {1, 2}, {3, 4}, {3, 5}, {4, 5}, {1, 3}, {2, 4}});
}

namespace {

std::string normalize(const std::string& name) {
    std::string out;
    for (char c : name) {
        if (c == '_' || c == '{' || c == '}' || c == ' ') continue;
        out += static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    }
    return out;
}

std::optional<int> suffix_number(const std::string& s, std::size_t from) {
    if (from >= s.size()) return std::nullopt;
    for (std::size_t i = from; i < s.size(); ++i)
        if (!std::isdigit(static_cast<unsigned char>(s[i]))) return std::nullopt;
    return std::stoi(s.substr(from));
}

}  // namespace

Graph named_graph(const std::string& name) {
    const std::string s = normalize(name);
    if (s == "2p3") return family_f(1);
    if (s == "co-2p3" || s == "co2p3") return complement(family_f(1));
    if (s == "co-domino" || s == "codomino") return co_domino();
    if (s.size() == 2 && s[0] == 'f' && s[1] >= '1' && s[1] <= '6') return family_f(s[1] - '0');
    if (s.rfind("antihole", 0) == 0) {
        std::string rest = s.substr(8);
        if (!rest.empty() && rest.front() == '(' && rest.back() == ')') rest = rest.substr(1, rest.size() - 2);
        if (auto k = suffix_number(rest, 0)) return antihole(*k);
    }
    if (!s.empty() && (s[0] == 'p' || s[0] == 'c' || s[0] == 'k')) {
        auto comma = s.find(',');
        if (s[0] == 'k' && comma != std::string::npos) {
            auto a = suffix_number(s.substr(0, comma), 1);
            auto b = suffix_number(s, comma + 1);
            if (a && b) return complete_bipartite(*a, *b);
        } else if (auto k = suffix_number(s, 1)) {
            if (s[0] == 'p') return path_graph(*k);
            if (s[0] == 'c') return cycle_graph(*k);
            return complete_graph(*k);
        }
    }
    throw PreconditionError("unknown graph name \"" + name + "\"");
}

Graph kc_graph(int m, int n) {
    if (m < 0 || n < 0) throw PreconditionError("kc_graph parameters must be nonnegative");
    if (m == 0) return star_graph(n);
    std::vector<Edge> e;
    for (int j = 0; j < m; ++j) {
        e.emplace_back(0, 2 + j);  // c ~ u_j
        e.emplace_back(1, 2 + j);  // u_j ~ d
    }
    for (int i = 0; i < n; ++i) e.emplace_back(0, 2 + m + i);  // c ~ v_i
    return Graph(2 + m + n, e);
}

std::optional<std::pair<int, int>> recognize_kc(const Graph& g) {
    const int order = g.order();
    if (order >= 1 && are_isomorphic(g, kc_graph(0, order - 1))) return std::make_pair(0, order - 1);
    for (int m = 1; m <= order - 2; ++m)
        if (are_isomorphic(g, kc_graph(m, order - 2 - m))) return std::make_pair(m, order - 2 - m);
    return std::nullopt;
}

}  // namespace domgame
