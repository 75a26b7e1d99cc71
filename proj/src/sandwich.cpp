#include "pdef/sandwich.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdef {

int DualGraph::add_vertex(int w) {
    weight.push_back(w);
    return size() - 1;
}

void DualGraph::add_edge(int u, int v) {
    if (u == v) throw std::invalid_argument("DualGraph: loop edge");
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it != edges.end() && *it == e) throw std::invalid_argument("DualGraph: repeated edge");
    edges.insert(it, e);
}

void DualGraph::remove_edge(int u, int v) {
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    auto it = std::lower_bound(edges.begin(), edges.end(), e);
    if (it == edges.end() || *it != e) throw std::invalid_argument("DualGraph: no such edge");
    edges.erase(it);
}

bool DualGraph::adjacent(int u, int v) const {
    std::pair<int, int> e{std::min(u, v), std::max(u, v)};
    return std::binary_search(edges.begin(), edges.end(), e);
}

std::vector<int> DualGraph::neighbors(int v) const {
    std::vector<int> out;
    for (auto [a, b] : edges) {
        if (a == v) out.push_back(b);
        else if (b == v) out.push_back(a);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool DualGraph::connected() const {
    if (weight.empty()) return true;
    std::vector<char> seen(size(), 0);
    std::vector<int> st{0};
    seen[0] = 1;
    int cnt = 1;
    while (!st.empty()) {
        int v = st.back();
        st.pop_back();
        for (int u : neighbors(v))
            if (!seen[u]) { seen[u] = 1; ++cnt; st.push_back(u); }
    }
    return cnt == size();
}

DualGraph chain_graph(const Chain& cf) {
    DualGraph g;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        g.add_vertex(-cf[i]);
        if (i) g.add_edge(static_cast<int>(i) - 1, static_cast<int>(i));
    }
    g.shape = DualGraph::Shape::Chain;
    return g;
}

std::vector<int> path_order(const DualGraph& g) {
    const int n = g.size();
    if (n == 0) return {};
    if (static_cast<int>(g.edges.size()) != n - 1 || !g.connected()) return {};
    std::vector<int> deg(n, 0);
    for (auto [a, b] : g.edges) { ++deg[a]; ++deg[b]; }
    int start = -1;
    for (int v = 0; v < n; ++v) {
        if (deg[v] > 2) return {};
        if (deg[v] <= 1 && start < 0) start = v;
    }
    std::vector<int> out{start};
    int prev = -1, cur = start;
    while (static_cast<int>(out.size()) < n) {
        int nxt = -1;
        for (int u : g.neighbors(cur))
            if (u != prev) { nxt = u; break; }
        prev = cur;
        cur = nxt;
        out.push_back(cur);
    }
    return out;
}

std::vector<int> PResolution::mark_of() const {
    std::vector<int> m(graph.size(), -1);
    for (std::size_t i = 0; i < marks.size(); ++i)
        for (int v : marks[i]) m[v] = static_cast<int>(i);
    return m;
}

PResolution minimal_presolution(const DualGraph& g) {
    PResolution r;
    r.graph = g;
    r.origin.resize(g.size());
    for (int v = 0; v < g.size(); ++v) r.origin[v] = v;
    return r;
}

DualGraph SandwichedStructure::full_graph() const {
    DualGraph g = base;
    g.shape = DualGraph::Shape::General;
    for (int a : attach) {
        int c = g.add_vertex(-1);
        g.add_edge(a, c);
    }
    return g;
}

SandwichedStructure chain_structure(const Chain& cf, const std::vector<int>& counts) {
    if (cf.empty()) throw std::invalid_argument("chain_structure: empty chain");
    if (counts.size() != cf.size()) throw std::invalid_argument("chain_structure: counts length");
    SandwichedStructure s;
    s.base = chain_graph(cf);
    int k = 1;
    for (std::size_t i = 0; i < cf.size(); ++i)
        for (int c = 0; c < counts[i]; ++c) {
            s.attach.push_back(static_cast<int>(i));
            s.labels.push_back("C" + std::to_string(k++));
        }
    return s;
}

SandwichedStructure usual_sandwich_cqss(const Chain& cf) {
    if (cf.empty()) throw std::invalid_argument("usual_sandwich_cqss: empty chain");
    std::vector<int> counts;
    for (std::size_t i = 0; i < cf.size(); ++i)
        counts.push_back(i + 1 < cf.size() ? cf[i] - 2 : cf[i] - 1);
    return chain_structure(cf, counts);
}

std::vector<std::vector<int>> star_branch_counts(const std::vector<Chain>& branches) {
    std::vector<std::vector<int>> cs;
    for (const auto& br : branches) {
        std::vector<int> c;
        for (std::size_t p = 0; p < br.size(); ++p) c.push_back(p + 1 == br.size() ? br[p] - 1 : br[p] - 2);
        cs.push_back(c);
    }
    return cs;
}

SandwichedStructure sandwich_whs(int d, const std::vector<Chain>& branches) {
    const int t = static_cast<int>(branches.size());
    if (d < t + 1) throw std::invalid_argument("sandwich_whs: need d >= t+1");
    SandwichedStructure s;
    DualGraph& g = s.base;
    g.shape = DualGraph::Shape::Star;
    g.central = g.add_vertex(-d);
    for (const auto& br : branches) {
        if (br.empty()) throw std::invalid_argument("sandwich_whs: empty branch");
        std::vector<int> ids;
        int prev = g.central;
        for (int a : br) {
            if (a < 2) throw std::invalid_argument("sandwich_whs: branch entries must be >= 2");
            int v = g.add_vertex(-a);
            g.add_edge(prev, v);
            ids.push_back(v);
            prev = v;
        }
        g.branches.push_back(ids);
    }
    auto cs = star_branch_counts(branches);
    for (int i = 0; i < t; ++i) {
        int j = 1;
        for (std::size_t p = 0; p < cs[i].size(); ++p)
            for (int c = 0; c < cs[i][p]; ++c) {
                s.attach.push_back(g.branches[i][p]);
                s.labels.push_back("C" + std::to_string(i + 1) + "," + std::to_string(j++));
            }
    }
    for (int k = 0; k < d - t - 1; ++k) {
        s.attach.push_back(g.central);
        s.labels.push_back("D" + std::to_string(k + 1));
    }
    return s;
}

namespace {

// Dense intersection bookkeeping for repeated blow-downs.
struct Blowdowns {
    std::vector<int> w;
    std::vector<std::vector<int>> I;
    std::vector<char> alive;

    explicit Blowdowns(const DualGraph& g)
        : w(g.weight), I(g.size(), std::vector<int>(g.size(), 0)), alive(g.size(), 1) {
        for (auto [a, b] : g.edges) I[a][b] = I[b][a] = 1;
    }
    int n() const { return static_cast<int>(w.size()); }
    bool empty() const { return std::none_of(alive.begin(), alive.end(), [](char c) { return c; }); }
    std::vector<int> minus_ones() const {
        std::vector<int> out;
        for (int v = 0; v < n(); ++v)
            if (alive[v] && w[v] == -1) out.push_back(v);
        return out;
    }
    void down(int t) {
        std::vector<int> nb;
        for (int x = 0; x < n(); ++x)
            if (alive[x] && x != t && I[x][t]) nb.push_back(x);
        for (int x : nb) w[x] += I[x][t] * I[x][t];
        for (std::size_t a = 0; a < nb.size(); ++a)
            for (std::size_t b = a + 1; b < nb.size(); ++b) {
                I[nb[a]][nb[b]] += I[nb[a]][t] * I[nb[b]][t];
                I[nb[b]][nb[a]] = I[nb[a]][nb[b]];
            }
        for (int x = 0; x < n(); ++x) I[x][t] = I[t][x] = 0;
        alive[t] = 0;
    }
};

}  // namespace

bool contracts_to_point(const DualGraph& g) {
    Blowdowns b(g);
    while (!b.empty()) {
        auto m = b.minus_ones();
        if (m.empty()) return false;
        b.down(m.front());
    }
    return true;
}

bool contracts_to_point(const SandwichedStructure& s) { return contracts_to_point(s.full_graph()); }

Matrix contraction_replay(const SandwichedStructure& s, std::mt19937* rng) {
    DualGraph g = s.full_graph();
    Blowdowns b(g);
    const int L = s.leaves();
    const int base = s.base.size();
    // strict transform of each decorated curve as intersections with current curves
    std::vector<std::vector<int>> S(L, std::vector<int>(g.size(), 0));
    for (int i = 0; i < L; ++i) S[i][base + i] = 1;
    std::vector<std::vector<int>> cols;
    while (!b.empty()) {
        auto m = b.minus_ones();
        if (m.empty()) throw std::invalid_argument("contraction_replay: structure does not contract to a point");
        int t = m.front();
        if (rng) t = m[std::uniform_int_distribution<std::size_t>(0, m.size() - 1)(*rng)];
        std::vector<int> col(L, 0);
        for (int i = 0; i < L; ++i) {
            int mu = S[i][t];
            if (!mu) continue;
            col[i] = mu;
            for (int x = 0; x < b.n(); ++x)
                if (b.alive[x] && x != t && b.I[x][t]) S[i][x] += mu * b.I[x][t];
            S[i][t] = 0;
        }
        b.down(t);
        if (std::any_of(col.begin(), col.end(), [](int v) { return v != 0; })) cols.push_back(col);
    }
    Matrix M(L, std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j)
        for (int i = 0; i < L; ++i) M[i][j] = cols[j][i];
    return M;
}

CombinatorialData data_from_matrix(const Matrix& m, const std::vector<std::string>& labels,
                                   const std::vector<int>& groups) {
    CombinatorialData d;
    d.labels = labels;
    d.groups = groups;
    const std::size_t s = m.size();
    d.l.assign(s, 0);
    d.delta.assign(s, 0);
    d.pair.assign(s, std::vector<int>(s, 0));
    for (std::size_t i = 0; i < s; ++i) {
        for (int v : m[i]) {
            d.l[i] += v;
            d.delta[i] += v * (v - 1) / 2;
        }
        for (std::size_t k = 0; k < s; ++k) {
            int acc = 0;
            for (std::size_t j = 0; j < m[i].size(); ++j) acc += m[i][j] * m[k][j];
            d.pair[i][k] = acc;
        }
    }
    return d;
}

CombinatorialData combinatorial_data(const SandwichedStructure& s, std::mt19937* rng) {
    return data_from_matrix(contraction_replay(s, rng), s.labels, s.attach);
}

int blow_up_edge(DualGraph& g, int u, int v) {
    g.remove_edge(u, v);
    g.weight[u] -= 1;
    g.weight[v] -= 1;
    int e = g.add_vertex(-1);
    g.add_edge(u, e);
    g.add_edge(v, e);
    g.shape = DualGraph::Shape::General;
    return e;
}

int blow_up_point(DualGraph& g, int v) {
    g.weight[v] -= 1;
    int e = g.add_vertex(-1);
    g.add_edge(v, e);
    g.shape = DualGraph::Shape::General;
    return e;
}

void blow_down(DualGraph& g, int v) {
    if (v < 0 || v >= g.size()) throw std::out_of_range("blow_down: no such vertex");
    if (g.weight[v] != -1) throw std::invalid_argument("blow_down: vertex weight is not -1");
    auto nb = g.neighbors(v);
    if (nb.size() > 2) throw std::invalid_argument("blow_down: more than two neighbours");
    if (nb.size() == 2 && g.adjacent(nb[0], nb[1]))
        throw std::invalid_argument("blow_down: neighbours already meet");
    for (int u : nb) g.weight[u] += 1;
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges)
        if (a != v && b != v) es.push_back({a > v ? a - 1 : a, b > v ? b - 1 : b});
    if (nb.size() == 2) {
        int a = nb[0] > v ? nb[0] - 1 : nb[0], b = nb[1] > v ? nb[1] - 1 : nb[1];
        es.push_back({std::min(a, b), std::max(a, b)});
    }
    std::sort(es.begin(), es.end());
    g.edges = es;
    g.weight.erase(g.weight.begin() + v);
    g.shape = DualGraph::Shape::General;
}

}  // namespace pdef
