#include "nullity/graph.hpp"

#include <algorithm>
#include <numeric>

namespace nullity {

int Graph::edge_index(int u, int v) const {
    if (u == v) return -1;
    if (u > v) std::swap(u, v);
    const auto& nb = adj[std::size_t(u)];
    const auto it = std::lower_bound(nb.begin(), nb.end(), v);
    if (it == nb.end() || *it != v) return -1;
    return adj_edge[std::size_t(u)][std::size_t(it - nb.begin())];
}

Graph make_graph(int n, std::vector<std::pair<int, int>> edge_list) {
    if (n < 0) throw std::invalid_argument("negative vertex count");
    for (auto& [u, v] : edge_list) {
        if (u == v) throw std::invalid_argument("self-loop rejected");
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range");
        if (u > v) std::swap(u, v);
    }
    std::sort(edge_list.begin(), edge_list.end());
    if (std::adjacent_find(edge_list.begin(), edge_list.end()) != edge_list.end())
        throw std::invalid_argument("parallel edge rejected");

    Graph g;
    g.n = n;
    g.edges = std::move(edge_list);
    g.adj.assign(std::size_t(n), {});
    g.adj_edge.assign(std::size_t(n), {});
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto [u, v] = g.edges[i];
        g.adj[std::size_t(u)].push_back(v);
        g.adj_edge[std::size_t(u)].push_back(int(i));
        g.adj[std::size_t(v)].push_back(u);
        g.adj_edge[std::size_t(v)].push_back(int(i));
    }
    for (int v = 0; v < n; ++v) {
        auto& nb = g.adj[std::size_t(v)];
        auto& ids = g.adj_edge[std::size_t(v)];
        std::vector<std::size_t> order(nb.size());
        std::iota(order.begin(), order.end(), std::size_t(0));
        std::sort(order.begin(), order.end(),
                  [&](std::size_t a, std::size_t b) { return nb[a] < nb[b]; });
        std::vector<int> nb2(nb.size()), ids2(ids.size());
        for (std::size_t k = 0; k < order.size(); ++k) {
            nb2[k] = nb[order[k]];
            ids2[k] = ids[order[k]];
        }
        nb = std::move(nb2);
        ids = std::move(ids2);
    }
    return g;
}

GraphStats compute_stats(const Graph& g) {
    GraphStats s;
    s.v = g.n;
    s.e = g.edge_count();
    s.degree_parities = BitVec(std::size_t(g.n));

    std::vector<int> comp(std::size_t(g.n), -1);
    int nc = 0;
    for (int root = 0; root < g.n; ++root) {
        if (comp[std::size_t(root)] >= 0) continue;
        std::vector<int> stack{root};
        comp[std::size_t(root)] = nc;
        while (!stack.empty()) {
            const int u = stack.back();
            stack.pop_back();
            for (int w : g.adj[std::size_t(u)])
                if (comp[std::size_t(w)] < 0) {
                    comp[std::size_t(w)] = nc;
                    stack.push_back(w);
                }
        }
        ++nc;
    }
    s.c = nc;

    std::vector<char> comp_even(std::size_t(nc), 1);
    for (int v = 0; v < g.n; ++v) {
        if (g.degree(v) % 2 == 0) {
            ++s.v_e;
        } else {
            ++s.v_o;
            s.degree_parities.set(std::size_t(v));
            comp_even[std::size_t(comp[std::size_t(v)])] = 0;
        }
    }
    for (char ce : comp_even) s.c_e += ce;
    s.theta = s.e - s.v + s.c;
    s.parity_indicator = (s.v_o == 0) ? 0 : 1;
    return s;
}

Graph make_even(const Graph& g) {
    std::vector<int> odd;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2 != 0) odd.push_back(v);
    if (odd.empty()) return g;
    auto edges = g.edges;
    for (int v : odd) edges.emplace_back(v, g.n);
    return make_graph(g.n + 1, std::move(edges));
}

Graph make_odd(const Graph& g) {
    auto edges = g.edges;
    int next = g.n;
    for (int v = 0; v < g.n; ++v)
        if (g.degree(v) % 2 == 0) edges.emplace_back(v, next++);
    return make_graph(next, std::move(edges));
}

Graph cycle_graph(int k) {
    if (k < 3) throw std::invalid_argument("cycle needs at least 3 vertices");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < k; ++i) e.emplace_back(i, (i + 1) % k);
    return make_graph(k, std::move(e));
}

Graph path_graph(int k) {
    if (k < 1) throw std::invalid_argument("path needs at least 1 vertex");
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i + 1 < k; ++i) e.emplace_back(i, i + 1);
    return make_graph(k, std::move(e));
}

Graph complete_graph(int k) {
    if (k < 0) throw std::invalid_argument("negative vertex count");
    std::vector<std::pair<int, int>> e;
    for (int u = 0; u < k; ++u)
        for (int v = u + 1; v < k; ++v) e.emplace_back(u, v);
    return make_graph(k, std::move(e));
}

Graph star_graph(int k) {
    if (k < 1) throw std::invalid_argument("star needs at least 1 leaf");
    std::vector<std::pair<int, int>> e;
    for (int i = 1; i <= k; ++i) e.emplace_back(0, i);
    return make_graph(k + 1, std::move(e));
}

Graph h_tree() {
    return make_graph(6, {{0, 1}, {1, 2}, {3, 4}, {4, 5}, {1, 4}});
}

Graph bowtie() { return cactus_chain({3, 3}); }

Graph cactus_chain(const std::vector<int>& lengths) {
    if (lengths.empty()) throw std::invalid_argument("cactus_chain needs at least one cycle");
    std::vector<std::pair<int, int>> e;
    int next = 0, attach = 0;
    for (int len : lengths) {
        if (len < 3) throw std::invalid_argument("cycle length below 3");
        if (next == 0) attach = next++;  // first cycle starts fresh
        int prev = attach;
        for (int i = 0; i < len - 1; ++i) {
            e.emplace_back(prev, next);
            prev = next++;
        }
        e.emplace_back(prev, attach);
        attach = prev;  // next cycle shares the vertex adjacent to this one's start
    }
    return make_graph(next, std::move(e));
}

Graph generate(const std::string& family, const std::vector<int>& params) {
    const auto one = [&]() -> int {
        if (params.size() != 1)
            throw std::invalid_argument("family '" + family + "' takes one size parameter");
        return params[0];
    };
    if (family == "cycle") return cycle_graph(one());
    if (family == "path") return path_graph(one());
    if (family == "complete") return complete_graph(one());
    if (family == "star") return star_graph(one());
    if (family == "h_tree") return h_tree();
    if (family == "bowtie") return bowtie();
    if (family == "cactus_chain") return cactus_chain(params);
    throw std::invalid_argument("unknown family '" + family + "'");
}

Graph disjoint_union(const Graph& a, const Graph& b) {
    auto edges = a.edges;
    for (const auto& [u, v] : b.edges) edges.emplace_back(u + a.n, v + a.n);
    return make_graph(a.n + b.n, std::move(edges));
}

Graph from_edge_mask(int n, std::uint64_t mask) {
    const long pairs = long(n) * (n - 1) / 2;
    if (pairs > 64) throw std::invalid_argument("too many vertex pairs for a 64-bit mask");
    std::vector<std::pair<int, int>> e;
    int bit = 0;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v, ++bit)
            if ((mask >> bit) & 1u) e.emplace_back(u, v);
    return make_graph(n, std::move(e));
}

namespace {
constexpr std::string_view kGraph6Header = ">>graph6<<";
}

Graph parse_graph6(std::string_view line) {
    std::size_t base = 0;
    if (line.substr(0, kGraph6Header.size()) == kGraph6Header) base = kGraph6Header.size();
    const std::string_view body = line.substr(base);

    if (body.empty()) throw Graph6Error("empty graph6 code", base);
    const unsigned char c0 = (unsigned char)body[0];
    if (c0 < 63 || c0 > 126)
        throw Graph6Error("byte out of graph6 range", base);
    if (c0 == 126)
        throw Graph6Error("extended size form not supported (n > 62)", base);
    const int n = int(c0) - 63;

    const long nbits = long(n) * (n - 1) / 2;
    const std::size_t nbytes = std::size_t((nbits + 5) / 6);
    if (body.size() < 1 + nbytes)
        throw Graph6Error("graph6 code truncated", base + body.size());
    if (body.size() > 1 + nbytes)
        throw Graph6Error("trailing bytes after graph6 code", base + 1 + nbytes);

    std::vector<std::pair<int, int>> edges;
    long bit = 0;
    for (std::size_t k = 0; k < nbytes; ++k) {
        const unsigned char c = (unsigned char)body[1 + k];
        if (c < 63 || c > 126)
            throw Graph6Error("byte out of graph6 range", base + 1 + k);
        const unsigned val = unsigned(c) - 63;
        for (int b = 5; b >= 0; --b, ++bit) {
            const bool on = (val >> b) & 1u;
            if (bit >= nbits) {
                if (on) throw Graph6Error("nonzero padding bits", base + 1 + k);
                continue;
            }
            if (on) {
                // bit index -> column-major upper-triangle pair
                long t = bit;
                int j = 1;
                while (t >= j) t -= j++;
                edges.emplace_back(int(t), j);
            }
        }
    }
    return make_graph(n, std::move(edges));
}

std::string emit_graph6(const Graph& g) {
    if (g.n > 62) throw std::invalid_argument("graph6 single-byte form needs n <= 62");
    std::string out;
    out.push_back(char(g.n + 63));
    unsigned val = 0;
    int filled = 0;
    for (int j = 1; j < g.n; ++j)
        for (int i = 0; i < j; ++i) {
            val = (val << 1) | unsigned(g.edge_index(i, j) >= 0);
            if (++filled == 6) {
                out.push_back(char(val + 63));
                val = 0;
                filled = 0;
            }
        }
    if (filled > 0) out.push_back(char((val << (6 - filled)) + 63));
    return out;
}

}  // namespace nullity
