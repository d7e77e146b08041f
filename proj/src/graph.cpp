#include "cotough/graph.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "cotough/util.hpp"

namespace cotough {

VertexSet::VertexSet(std::vector<int> ids) : ids_(std::move(ids)) {
    std::sort(ids_.begin(), ids_.end());
    ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool VertexSet::contains(int v) const {
    return std::binary_search(ids_.begin(), ids_.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return VertexSet(std::move(out));
}

bool is_subset(const VertexSet& a, const VertexSet& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

VertexSet full_vertex_set(int n) {
    std::vector<int> v(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) v[static_cast<std::size_t>(i)] = i;
    return VertexSet(std::move(v));
}

Graph::Graph(int n) : n_(n), adj_(static_cast<std::size_t>(n)), labels_(static_cast<std::size_t>(n)) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    for (int i = 0; i < n; ++i) {
        adj_[static_cast<std::size_t>(i)].assign(static_cast<std::size_t>(n), false);
        labels_[static_cast<std::size_t>(i)] = std::to_string(i);
    }
}

int Graph::edge_count() const {
    int m = 0;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) ++m;
    return m;
}

void Graph::add_edge(int u, int v) {
    if (u < 0 || v < 0 || u >= n_ || v >= n_)
        throw std::invalid_argument("add_edge: vertex out of range");
    if (u == v) throw std::invalid_argument("add_edge: self-loop");
    adj_[static_cast<std::size_t>(u)][static_cast<std::size_t>(v)] = true;
    adj_[static_cast<std::size_t>(v)][static_cast<std::size_t>(u)] = true;
}

std::vector<int> Graph::neighbors(int v) const {
    std::vector<int> out;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) out.push_back(u);
    return out;
}

int Graph::degree(int v) const {
    int d = 0;
    for (int u = 0; u < n_; ++u)
        if (adjacent(v, u)) ++d;
    return d;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (adjacent(u, v)) out.emplace_back(u, v);
    return out;
}

bool Graph::same_adjacency(const Graph& o) const {
    return n_ == o.n_ && adj_ == o.adj_;
}

std::vector<std::uint64_t> Graph::adjacency_bitmasks() const {
    if (n_ > 64) throw std::invalid_argument("adjacency_bitmasks: more than 64 vertices");
    std::vector<std::uint64_t> m(static_cast<std::size_t>(n_), 0);
    for (int u = 0; u < n_; ++u)
        for (int v = 0; v < n_; ++v)
            if (adjacent(u, v)) m[static_cast<std::size_t>(u)] |= (1ull << v);
    return m;
}

// ---------------------------------------------------------------------------
// Parsing / emitting

namespace {

std::string first_nonempty_line(const std::string& text) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!isspace(static_cast<unsigned char>(c))) blank = false;
        if (!blank) return line;
    }
    return std::string();
}

Graph parse_graph6(const std::string& text) {
    std::string line = first_nonempty_line(text);
    const std::string header = ">>graph6<<";
    if (line.rfind(header, 0) == 0) line = line.substr(header.size());
    if (line.empty()) throw ParseError("graph6: empty input");
    for (char c : line)
        if (c < 63 || c > 126) throw ParseError("graph6: character out of range");
    if (line[0] == 126) throw ParseError("graph6: graphs on more than 62 vertices are not supported");
    const int n = line[0] - 63;
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    const std::size_t want = 1 + (nbits + 5) / 6;
    if (line.size() != want) throw ParseError("graph6: length does not match vertex count");
    Graph g(n);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j) {
        for (int i = 0; i < j; ++i) {
            const int ch = line[1 + bit / 6] - 63;
            if ((ch >> (5 - bit % 6)) & 1) g.add_edge(i, j);
            ++bit;
        }
    }
    // padding bits must be zero
    for (; bit < 6 * (want - 1); ++bit) {
        const int ch = line[1 + bit / 6] - 63;
        if ((ch >> (5 - bit % 6)) & 1) throw ParseError("graph6: nonzero padding bits");
    }
    return g;
}

std::string emit_graph6(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 62) throw std::invalid_argument("graph6: graphs on more than 62 vertices are not supported");
    std::string out;
    out.push_back(static_cast<char>(n + 63));
    const std::size_t nbits = static_cast<std::size_t>(n) * (n - 1) / 2;
    std::vector<int> bits(((nbits + 5) / 6) * 6, 0);
    std::size_t bit = 0;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i) bits[bit++] = g.adjacent(i, j) ? 1 : 0;
    for (std::size_t k = 0; k < bits.size(); k += 6) {
        int v = 0;
        for (std::size_t i = 0; i < 6; ++i) v |= bits[k + i] << (5 - i);
        out.push_back(static_cast<char>(v + 63));
    }
    return out;
}

Graph parse_edge_list(const std::string& text, std::vector<std::string>* warnings) {
    std::istringstream in(text);
    std::string line;
    bool have_header = false;
    int n = 0;
    Graph g;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        std::istringstream ls(line);
        std::string tok;
        std::vector<std::string> toks;
        while (ls >> tok) toks.push_back(tok);
        if (toks.empty()) continue;
        if (!have_header) {
            if (toks.size() != 1) throw ParseError("edge_list: malformed header line");
            try {
                std::size_t pos = 0;
                n = std::stoi(toks[0], &pos);
                if (pos != toks[0].size()) throw std::invalid_argument("");
            } catch (const std::exception&) {
                throw ParseError("edge_list: malformed header line");
            }
            if (n < 0) throw ParseError("edge_list: negative vertex count");
            g = Graph(n);
            have_header = true;
            continue;
        }
        if (toks.size() != 2) throw ParseError("edge_list: malformed edge line '" + line + "'");
        int u, v;
        try {
            std::size_t p0 = 0, p1 = 0;
            u = std::stoi(toks[0], &p0);
            v = std::stoi(toks[1], &p1);
            if (p0 != toks[0].size() || p1 != toks[1].size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            throw ParseError("edge_list: malformed edge line '" + line + "'");
        }
        if (u < 0 || v < 0 || u >= n || v >= n) throw ParseError("edge_list: vertex out of range");
        if (u == v) throw ParseError("edge_list: self-loop");
        if (g.adjacent(u, v)) {
            if (warnings)
                warnings->push_back("duplicate edge " + std::to_string(u) + " " + std::to_string(v));
            continue;
        }
        g.add_edge(u, v);
    }
    if (!have_header) throw ParseError("edge_list: missing header line");
    return g;
}

std::string emit_edge_list(const Graph& g) {
    std::string out = std::to_string(g.vertex_count());
    for (auto [u, v] : g.edges()) out += "\n" + std::to_string(u) + " " + std::to_string(v);
    return out;
}

std::string emit_dot(const Graph& g) {
    std::string out = "graph G {\n";
    for (int v = 0; v < g.vertex_count(); ++v)
        out += "  " + std::to_string(v) + " [label=\"" + g.label(v) + "\"];\n";
    for (auto [u, v] : g.edges())
        out += "  " + std::to_string(u) + " -- " + std::to_string(v) + ";\n";
    out += "}\n";
    return out;
}

}  // namespace

Graph parse_graph(const std::string& text, GraphFormat format, std::vector<std::string>* warnings) {
    switch (format) {
        case GraphFormat::graph6:
            return parse_graph6(text);
        case GraphFormat::edge_list:
            return parse_edge_list(text, warnings);
        case GraphFormat::dot:
            throw std::invalid_argument("parse_graph: dot is emit-only");
    }
    throw std::invalid_argument("parse_graph: unknown format");
}

std::string emit_graph(const Graph& g, GraphFormat format) {
    switch (format) {
        case GraphFormat::graph6:
            return emit_graph6(g);
        case GraphFormat::edge_list:
            return emit_edge_list(g);
        case GraphFormat::dot:
            return emit_dot(g);
    }
    throw std::invalid_argument("emit_graph: unknown format");
}

// ---------------------------------------------------------------------------
// Structure

std::vector<VertexSet> components_after_removal(const Graph& g, const VertexSet& removed) {
    const int n = g.vertex_count();
    std::vector<bool> gone(static_cast<std::size_t>(n), false);
    for (int v : removed) {
        if (v < 0 || v >= n) throw std::invalid_argument("components_after_removal: vertex out of range");
        gone[static_cast<std::size_t>(v)] = true;
    }
    std::vector<bool> seen(static_cast<std::size_t>(n), false);
    std::vector<VertexSet> out;
    for (int s = 0; s < n; ++s) {
        if (gone[static_cast<std::size_t>(s)] || seen[static_cast<std::size_t>(s)]) continue;
        std::vector<int> comp, stack{s};
        seen[static_cast<std::size_t>(s)] = true;
        while (!stack.empty()) {
            int u = stack.back();
            stack.pop_back();
            comp.push_back(u);
            for (int v = 0; v < n; ++v) {
                if (!g.adjacent(u, v) || gone[static_cast<std::size_t>(v)] || seen[static_cast<std::size_t>(v)]) continue;
                seen[static_cast<std::size_t>(v)] = true;
                stack.push_back(v);
            }
        }
        out.emplace_back(std::move(comp));
    }
    // BFS from ascending roots already yields min-vertex order
    return out;
}

std::vector<VertexSet> components(const Graph& g) {
    return components_after_removal(g, VertexSet{});
}

bool is_connected(const Graph& g) {
    return components(g).size() == 1;
}

bool is_complete(const Graph& g) {
    const int n = g.vertex_count();
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) return false;
    return true;
}

bool is_cutset(const Graph& g, const VertexSet& s) {
    return components_after_removal(g, s).size() >= 2;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
    const int n = g.vertex_count();
    for (int v : keep)
        if (v < 0 || v >= n) throw std::invalid_argument("induced_subgraph: vertex out of range");
    Graph h(keep.size());
    for (int i = 0; i < keep.size(); ++i) {
        h.set_label(i, g.label(keep[i]));
        for (int j = i + 1; j < keep.size(); ++j)
            if (g.adjacent(keep[i], keep[j])) h.add_edge(i, j);
    }
    return h;
}

ContractionResult contract(const Graph& g, const VertexSet& r) {
    if (r.empty()) throw std::invalid_argument("contract: r is empty");
    const int n = g.vertex_count();
    for (int v : r)
        if (v < 0 || v >= n) throw std::invalid_argument("contract: vertex out of range");
    if (components(induced_subgraph(g, r)).size() != 1)
        throw std::invalid_argument("contract: g[r] is not connected");

    const VertexSet others = set_difference(full_vertex_set(n), r);
    const int np = others.size() + 1;
    ContractionResult res;
    res.graph = Graph(np);
    res.contracted_vertex = np - 1;
    for (int i = 0; i < others.size(); ++i) {
        res.graph.set_label(i, g.label(others[i]));
        res.origin.push_back(VertexSet{others[i]});
        for (int j = i + 1; j < others.size(); ++j)
            if (g.adjacent(others[i], others[j])) res.graph.add_edge(i, j);
        for (int w : r)
            if (g.adjacent(others[i], w)) res.graph.add_edge(i, res.contracted_vertex);
    }
    std::string lab = "{";
    for (int i = 0; i < r.size(); ++i) lab += (i ? "," : "") + g.label(r[i]);
    lab += "}";
    res.graph.set_label(res.contracted_vertex, lab);
    res.origin.push_back(r);
    return res;
}

BlockDecomposition blocks(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("blocks: empty graph");
    if (!is_connected(g)) throw std::invalid_argument("blocks: graph must be connected");

    std::vector<int> disc(static_cast<std::size_t>(n), -1), low(static_cast<std::size_t>(n), 0);
    std::vector<bool> iscut(static_cast<std::size_t>(n), false);
    std::vector<std::pair<int, int>> estack;
    std::vector<std::vector<int>> raw_blocks;
    int timer = 0;

    std::function<void(int, int)> dfs = [&](int u, int parent) {
        disc[static_cast<std::size_t>(u)] = low[static_cast<std::size_t>(u)] = timer++;
        int children = 0;
        for (int v = 0; v < n; ++v) {
            if (!g.adjacent(u, v) || v == parent) continue;
            if (disc[static_cast<std::size_t>(v)] == -1) {
                estack.emplace_back(u, v);
                ++children;
                dfs(v, u);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], low[static_cast<std::size_t>(v)]);
                if (low[static_cast<std::size_t>(v)] >= disc[static_cast<std::size_t>(u)]) {
                    if (parent != -1 || children > 1) iscut[static_cast<std::size_t>(u)] = true;
                    std::vector<int> blk;
                    for (;;) {
                        auto [a, b] = estack.back();
                        estack.pop_back();
                        blk.push_back(a);
                        blk.push_back(b);
                        if (a == u && b == v) break;
                    }
                    raw_blocks.push_back(std::move(blk));
                }
            } else if (disc[static_cast<std::size_t>(v)] < disc[static_cast<std::size_t>(u)]) {
                estack.emplace_back(u, v);
                low[static_cast<std::size_t>(u)] =
                    std::min(low[static_cast<std::size_t>(u)], disc[static_cast<std::size_t>(v)]);
            }
        }
    };
    dfs(0, -1);
    internal_check(estack.empty(), "blocks: leftover edges on stack");

    BlockDecomposition out;
    for (auto& blk : raw_blocks) out.blocks.emplace_back(std::move(blk));
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](const VertexSet& a, const VertexSet& b) { return a.ids() < b.ids(); });
    std::vector<int> cuts;
    for (int v = 0; v < n; ++v)
        if (iscut[static_cast<std::size_t>(v)]) cuts.push_back(v);
    out.cutvertices = VertexSet(std::move(cuts));
    return out;
}

Graph prism(const Graph& g) {
    const int n = g.vertex_count();
    Graph h(2 * n);
    for (int v = 0; v < n; ++v) {
        h.set_label(v, g.label(v) + "|0");
        h.set_label(n + v, g.label(v) + "|1");
        h.add_edge(v, n + v);
    }
    for (auto [u, v] : g.edges()) {
        h.add_edge(u, v);
        h.add_edge(n + u, n + v);
    }
    return h;
}

Graph lex_product_k(const Graph& g, int k) {
    if (k < 1) throw std::invalid_argument("lex_product_k: k must be positive");
    const int n = g.vertex_count();
    Graph h(n * k);
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < k; ++i)
            h.set_label(u * k + i, g.label(u) + "|" + std::to_string(i));
    for (int u = 0; u < n; ++u)
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j) h.add_edge(u * k + i, u * k + j);
    for (auto [u, v] : g.edges())
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) h.add_edge(u * k + i, v * k + j);
    return h;
}

}  // namespace cotough
