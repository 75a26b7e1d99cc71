#include "pdef/mmp.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "pdef/classt.hpp"

namespace pdef {

namespace {

// Exact Gauss-Jordan; A is square and nonsingular.
std::vector<Rational> solve(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
    const std::size_t n = A.size();
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t p = i;
        while (p < n && A[p][i] == 0) ++p;
        if (p == n) throw std::logic_error("solve: singular system");
        std::swap(A[i], A[p]);
        std::swap(b[i], b[p]);
        for (std::size_t r = 0; r < n; ++r) {
            if (r == i || A[r][i] == 0) continue;
            Rational f = A[r][i] / A[i][i];
            for (std::size_t c = i; c < n; ++c) A[r][c] -= f * A[i][c];
            b[r] -= f * b[i];
        }
    }
    std::vector<Rational> x(n);
    for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
    return x;
}

}  // namespace

MMPState::MMPState(const PResolution& res, const std::vector<int>& attach) {
    const DualGraph& g = res.graph;
    n_ = g.size() + static_cast<int>(attach.size());
    w_.assign(n_, 0);
    I_.assign(n_, std::vector<int>(n_, 0));
    alive_.assign(n_, 1);
    for (int v = 0; v < g.size(); ++v) w_[v] = g.weight[v];
    for (auto [a, b] : g.edges) I_[a][b] = I_[b][a] = 1;
    marks_ = res.marks;
    for (const auto& m : marks_) {
        Chain ch;
        for (int v : m) ch.push_back(-g.weight[v]);
        if (!is_wahl(ch)) throw MMPError("run_mmp: mark is not a Wahl chain (use an M-resolution)");
    }
    const int L = static_cast<int>(attach.size());
    S_.assign(L, std::vector<int>(n_, 0));
    KS_.assign(L, 0);
    c_.assign(L, std::vector<Rational>(n_));
    for (int i = 0; i < L; ++i) {
        if (attach[i] < 0 || attach[i] >= g.size()) throw std::invalid_argument("run_mmp: bad attachment");
        int x = g.size() + i;
        w_[x] = -1;
        I_[x][attach[i]] = I_[attach[i]][x] = 1;
        S_[i][x] = 1;
    }
    pull_all();
}

bool MMPState::done() const { return std::none_of(alive_.begin(), alive_.end(), [](char c) { return c; }); }

std::vector<int> MMPState::marked_flags() const {
    std::vector<int> f(n_, -1);
    for (std::size_t i = 0; i < marks_.size(); ++i)
        for (int v : marks_[i]) f[v] = static_cast<int>(i);
    return f;
}

Rational MMPState::dot(int leaf, int x) const {
    Rational r = S_[leaf][x];
    for (int y = 0; y < n_; ++y)
        if (alive_[y] && c_[leaf][y] != 0) r += c_[leaf][y] * inter(y, x);
    return r;
}

Rational MMPState::k_dot(int leaf) const {
    Rational r = KS_[leaf];
    for (int y = 0; y < n_; ++y)
        if (alive_[y] && c_[leaf][y] != 0) r += c_[leaf][y] * (-2 - w_[y]);
    return r;
}

long long MMPState::measure() const {
    long long m = std::count(alive_.begin(), alive_.end(), 1);
    for (const auto& mk : marks_) m += static_cast<long long>(mk.size()) + 1;
    return m;
}

void MMPState::pull(int leaf) {
    for (const auto& m : marks_)
        for (int v : m) c_[leaf][v] = 0;
    for (const auto& m : marks_) {
        const std::size_t r = m.size();
        std::vector<std::vector<Rational>> A(r, std::vector<Rational>(r));
        std::vector<Rational> b(r);
        for (std::size_t i = 0; i < r; ++i) {
            for (std::size_t j = 0; j < r; ++j) A[i][j] = inter(m[i], m[j]);
            b[i] = -dot(leaf, m[i]);
        }
        auto x = solve(A, b);
        for (std::size_t i = 0; i < r; ++i) c_[leaf][m[i]] = x[i];
    }
}

void MMPState::pull_all() {
    for (int L = 0; L < leaves(); ++L) pull(L);
}

void MMPState::blow_down(int t) {
    std::vector<int> nb;
    for (int x = 0; x < n_; ++x)
        if (alive_[x] && x != t && I_[x][t]) nb.push_back(x);
    for (int x : nb) w_[x] += I_[x][t] * I_[x][t];
    for (std::size_t a = 0; a < nb.size(); ++a)
        for (std::size_t b = a + 1; b < nb.size(); ++b) {
            I_[nb[a]][nb[b]] += I_[nb[a]][t] * I_[nb[b]][t];
            I_[nb[b]][nb[a]] = I_[nb[a]][nb[b]];
        }
    for (int L = 0; L < leaves(); ++L) {
        int mu = S_[L][t];
        if (mu) {
            for (int x : nb) S_[L][x] += mu * I_[x][t];
            S_[L][t] = 0;
            KS_[L] -= mu;
        }
        c_[L][t] = 0;
    }
    for (int x = 0; x < n_; ++x) I_[x][t] = I_[t][x] = 0;
    alive_[t] = 0;
}

void MMPState::record(MMPStep st) {
    st.measure = measure();
    if (!trace_.empty() && st.measure >= trace_.back().measure)
        throw std::logic_error("MMP: termination measure did not decrease");
    trace_.push_back(std::move(st));
}

std::vector<int> MMPState::contract(int t) {
    if (t < 0 || t >= n_ || !alive_[t]) throw MMPError("contract: no such curve");
    if (w_[t] != -1) throw MMPError("contract: curve weight is not -1");
    auto mk = marked_flags();
    if (mk[t] >= 0) throw MMPError("contract: curve is marked");
    for (int x = 0; x < n_; ++x)
        if (alive_[x] && mk[x] >= 0 && I_[x][t]) throw MMPError("contract: curve meets a mark, use flip");
    if (trace_.empty()) trace_.reserve(n_ * 2);
    std::vector<int> col(leaves());
    for (int L = 0; L < leaves(); ++L) {
        Rational v = dot(L, t);
        if (!is_integer(v)) throw std::logic_error("contract: non-integral multiplicity");
        col[L] = numerator(v).convert_to<int>();
    }
    blow_down(t);
    pull_all();
    cols_.push_back(col);
    MMPStep st;
    st.kind = MMPStep::Kind::Contract;
    st.curve = t;
    st.column = col;
    record(st);
    return col;
}

void MMPState::flip(int c, int mi) {
    if (mi < 0 || mi >= static_cast<int>(marks_.size())) throw MMPError("flip: no such mark");
    if (c < 0 || c >= n_ || !alive_[c] || w_[c] != -1) throw MMPError("flip: curve is not an alive (-1)-curve");
    auto mk = marked_flags();
    if (mk[c] >= 0) throw MMPError("flip: curve is marked");
    std::vector<int> m = marks_[mi];
    for (int x = 0; x < n_; ++x)
        if (alive_[x] && I_[x][c] && mk[x] >= 0 && mk[x] != mi)
            throw MMPError("flip: curve meets two marked chains (mk2A)");
    if (I_[c][m.back()] == 0) std::reverse(m.begin(), m.end());
    if (I_[c][m.back()] != 1) throw MMPError("flip: curve does not meet the end of the chain transversally");
    for (std::size_t j = 0; j + 1 < m.size(); ++j)
        if (I_[c][m[j]]) throw MMPError("flip: curve meets the chain away from its end");
    const int r = static_cast<int>(m.size());
    int i = -1;
    for (int j = 0; j < r; ++j)
        if (-w_[m[j]] >= 3) i = j;
    if (i < 0) throw std::logic_error("flip: chain has no entry >= 3");

    std::vector<Rational> before(leaves());
    for (int L = 0; L < leaves(); ++L) before[L] = k_dot(L);
    blow_down(c);
    for (int j = r - 1; j > i; --j) {
        if (w_[m[j]] != -1) throw std::logic_error("flip: expected a (-1)-curve in the chain tail");
        blow_down(m[j]);
    }
    marks_.erase(marks_.begin() + mi);
    if (i >= 1) {
        std::vector<int> nm(m.begin() + 1, m.begin() + i + 1);
        Chain ch;
        for (int v : nm) ch.push_back(-w_[v]);
        if (!is_wahl(ch)) throw std::logic_error("flip: new chain is not Wahl");
        marks_.push_back(nm);
    }
    const int a1 = m[0];
    for (int L = 0; L < leaves(); ++L) {
        // K.D is preserved; the marked coefficients depend affinely on the one on A_1
        c_[L][a1] = 0;
        pull(L);
        Rational v0 = k_dot(L);
        c_[L][a1] = 1;
        pull(L);
        Rational v1 = k_dot(L);
        if (v1 == v0) throw std::logic_error("flip: degenerate conservation equation");
        Rational k = (before[L] - v0) / (v1 - v0);
        if (!is_integer(k) || k < 0) throw std::logic_error("flip: degeneration coefficient is not a natural number");
        c_[L][a1] = k;
        pull(L);
    }
    MMPStep st;
    st.kind = MMPStep::Kind::Flip;
    st.curve = c;
    st.mark = m;
    st.pivot = i;
    record(st);
}

void MMPState::step(std::mt19937* rng) {
    auto mk = marked_flags();
    std::vector<std::pair<int, int>> keyed;
    for (int t = 0; t < n_; ++t) {
        if (!alive_[t] || w_[t] != -1 || mk[t] >= 0) continue;
        int first = leaves();
        for (int L = 0; L < leaves(); ++L)
            if (S_[L][t]) { first = L; break; }
        keyed.push_back({first, t});
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> cands;
    for (auto [k, t] : keyed) cands.push_back(t);
    if (rng) std::shuffle(cands.begin(), cands.end(), *rng);
    for (int t : cands) {
        bool meets = false;
        for (int x = 0; x < n_ && !meets; ++x) meets = alive_[x] && mk[x] >= 0 && I_[x][t];
        if (!meets) { contract(t); return; }
    }
    for (int t : cands) {
        std::set<int> hit;
        std::vector<int> touched;
        for (int x = 0; x < n_; ++x)
            if (alive_[x] && mk[x] >= 0 && I_[x][t]) { hit.insert(mk[x]); touched.push_back(x); }
        if (hit.size() != 1 || touched.size() != 1) continue;
        const auto& m = marks_[*hit.begin()];
        int x = touched[0];
        if ((x != m.front() && x != m.back()) || I_[x][t] != 1) continue;
        flip(t, *hit.begin());
        return;
    }
    throw MMPError("run_mmp: no legal move (state is stuck)");
}

Matrix MMPState::matrix() const {
    Matrix M(leaves(), std::vector<int>(cols_.size(), 0));
    for (std::size_t j = 0; j < cols_.size(); ++j)
        for (int L = 0; L < leaves(); ++L) M[L][j] = cols_[j][L];
    return M;
}

MMPSnapshot MMPState::snapshot() const {
    MMPSnapshot s;
    s.weight = w_;
    for (int v = 0; v < n_; ++v)
        if (alive_[v]) s.vertices.push_back(v);
    for (int a : s.vertices)
        for (int b : s.vertices)
            if (a < b && I_[a][b]) s.edges.emplace_back(a, b, I_[a][b]);
    s.marks = marks_;
    for (int L = 0; L < leaves(); ++L) {
        std::vector<std::pair<int, int>> st;
        std::vector<std::pair<int, Rational>> lg;
        for (int v : s.vertices) {
            if (S_[L][v]) st.push_back({v, S_[L][v]});
            if (c_[L][v] != 0) lg.push_back({v, c_[L][v]});
        }
        s.strict.push_back(st);
        s.ledger.push_back(lg);
    }
    return s;
}

MMPResult run_mmp(const PResolution& res, const std::vector<int>& attach, const MMPOptions& opt) {
    MMPState st(res, attach);
    MMPResult out;
    std::optional<std::mt19937> rng;
    if (opt.seed) rng.emplace(*opt.seed);
    if (opt.snapshots) out.snapshots.push_back(st.snapshot());
    int budget = opt.budget;
    while (!st.done()) {
        if (budget-- <= 0) throw MMPError("run_mmp: step budget exhausted");
        st.step(rng ? &*rng : nullptr);
        if (opt.snapshots) out.snapshots.push_back(st.snapshot());
    }
    out.matrix = st.matrix();
    out.trace = st.trace();
    return out;
}

PredicateReport structural_predicates(const PResolution& res, const SandwichedStructure& s, const Matrix& m) {
    PredicateReport rep;
    const int last = s.base.size() - 1;
    int ar = -1;
    for (int v = 0; v < res.graph.size(); ++v)
        if (res.origin[v] == last) ar = v;
    auto mk = res.mark_of();
    rep.last_marked = ar >= 0 && mk[ar] >= 0;
    const std::size_t ncol = m.empty() ? 0 : m[0].size();
    for (std::size_t c = 0; c < ncol; ++c) {
        bool all = true;
        for (const auto& row : m) all = all && row[c] == 1;
        rep.has_all_ones = rep.has_all_ones || all;
    }
    for (int L = 0; L < s.leaves(); ++L) {
        bool free = false;
        for (std::size_t c = 0; c < ncol && !free; ++c) {
            if (!m[L][c]) continue;
            int sum = 0;
            for (const auto& row : m) sum += row[c];
            free = sum == 1;
        }
        if (free) continue;
        rep.leaves_without_free_point.push_back(L);
        int on = -1;
        for (int v = 0; v < res.graph.size(); ++v)
            if (res.origin[v] == s.attach[L]) on = v;
        if (on < 0 || mk[on] < 0) rep.no_free_point_lemma = false;
    }
    rep.all_ones_lemma = !(rep.has_all_ones && rep.last_marked);
    return rep;
}

CanonicalModel canonical_model(const PResolution& res) {
    const DualGraph& g = res.graph;
    const int n = g.size();
    std::vector<int> w = g.weight;
    std::vector<std::set<int>> adj(n);
    for (auto [a, b] : g.edges) { adj[a].insert(b); adj[b].insert(a); }
    std::vector<char> alive(n, 1);
    std::vector<std::vector<int>> marks = res.marks;
    while (true) {
        std::vector<int> mk(n, -1);
        std::vector<Rational> dv(n);
        for (std::size_t i = 0; i < marks.size(); ++i) {
            Chain ch;
            for (int v : marks[i]) { mk[v] = static_cast<int>(i); ch.push_back(-w[v]); }
            auto ds = discrepancies_adjunction(ch);
            for (std::size_t j = 0; j < ch.size(); ++j) dv[marks[i][j]] = ds[j];
        }
        int hit = -1;
        for (int e = 0; e < n && hit < 0; ++e) {
            if (!alive[e] || w[e] != -1) continue;
            if (mk[e] >= 0) { hit = e; break; }
            Rational ke = -1;
            bool near = false;
            for (int y : adj[e])
                if (mk[y] >= 0) { ke -= dv[y]; near = true; }
            if (near && ke == 0) hit = e;
        }
        if (hit < 0) break;
        std::vector<int> nb(adj[hit].begin(), adj[hit].end());
        for (int y : nb) { w[y] += 1; adj[y].erase(hit); }
        for (int a : nb)
            for (int b : nb)
                if (a < b) { adj[a].insert(b); adj[b].insert(a); }
        alive[hit] = 0;
        adj[hit].clear();
        if (mk[hit] >= 0) {
            auto& m = marks[mk[hit]];
            m.erase(std::find(m.begin(), m.end(), hit));
            continue;
        }
        std::vector<int> touched;
        for (int y : nb)
            if (mk[y] >= 0 && std::find(touched.begin(), touched.end(), mk[y]) == touched.end()) touched.push_back(mk[y]);
        std::sort(touched.begin(), touched.end());
        std::vector<int> path;
        if (touched.size() == 2) {
            auto a = marks[touched[0]], b = marks[touched[1]];
            auto in_nb = [&](int v) { return std::find(nb.begin(), nb.end(), v) != nb.end(); };
            if (!in_nb(a.back())) std::reverse(a.begin(), a.end());
            if (!in_nb(b.front())) std::reverse(b.begin(), b.end());
            path = a;
            path.insert(path.end(), b.begin(), b.end());
        } else if (touched.size() == 1) {
            path = marks[touched[0]];
        } else if (touched.size() > 2) {
            throw std::logic_error("canonical_model: (-1)-curve meets three marks");
        }
        std::vector<std::vector<int>> nm;
        for (std::size_t i = 0; i < marks.size(); ++i)
            if (std::find(touched.begin(), touched.end(), static_cast<int>(i)) == touched.end()) nm.push_back(marks[i]);
        if (!path.empty()) nm.push_back(path);
        marks = nm;
    }
    CanonicalModel cm;
    cm.rename.assign(n, -1);
    int k = 0;
    for (int v = 0; v < n; ++v)
        if (alive[v]) cm.rename[v] = k++;
    for (int v = 0; v < n; ++v)
        if (alive[v]) {
            cm.res.graph.add_vertex(w[v]);
            cm.res.origin.push_back(v < static_cast<int>(res.origin.size()) ? res.origin[v] : -1);
        }
    for (int v = 0; v < n; ++v)
        if (alive[v])
            for (int u : adj[v])
                if (v < u) cm.res.graph.add_edge(cm.rename[v], cm.rename[u]);
    for (const auto& m : marks) {
        std::vector<int> r;
        for (int v : m) r.push_back(cm.rename[v]);
        cm.res.marks.push_back(r);
    }
    return cm;
}

namespace {

bool nef_chain(const Chain& c, const std::vector<std::pair<int, int>>& marks) {
    const int r = static_cast<int>(c.size());
    std::vector<std::optional<Rational>> m(r);
    for (auto [a, e] : marks) {
        auto ds = discrepancies_adjunction(Chain(c.begin() + a, c.begin() + e));
        for (int i = a; i < e; ++i) m[i] = ds[i - a];
    }
    for (auto [a, e] : marks)
        if (e < r && m[e]) return false;
    for (int i = 0; i < r; ++i) {
        if (m[i]) continue;
        Rational k = c[i] - 2;
        for (int j : {i - 1, i + 1})
            if (j >= 0 && j < r && m[j]) k -= *m[j];
        if (k < 0) return false;
    }
    return true;
}

}  // namespace

std::optional<LocalMResolution> local_m_resolution(const Chain& seg, int max_blowups) {
    struct Item {
        Chain c;
        std::vector<int> origin;
    };
    std::vector<Item> frontier;
    Item start{seg, {}};
    for (std::size_t i = 0; i < seg.size(); ++i) start.origin.push_back(static_cast<int>(i));
    frontier.push_back(start);
    std::set<Chain> seen{seg};
    for (int b = 1; b <= max_blowups; ++b) {
        std::vector<Item> next;
        for (const auto& it : frontier)
            for (std::size_t p = 0; p + 1 < it.c.size(); ++p) {
                Item x = it;
                x.c[p] += 1;
                x.c[p + 1] += 1;
                x.c.insert(x.c.begin() + p + 1, 1);
                x.origin.insert(x.origin.begin() + p + 1, -1);
                if (seen.insert(x.c).second) next.push_back(std::move(x));
            }
        frontier = std::move(next);
        for (const auto& it : frontier) {
            const Chain& c = it.c;
            if (c.front() == 1 || c.back() == 1) continue;
            // every non-(-1) curve is marked, and single (-1)s separate Wahl chains
            std::vector<std::pair<int, int>> parts;
            bool ok = true;
            int start_i = -1;
            for (int i = 0; i < static_cast<int>(c.size()) && ok; ++i) {
                if (c[i] == 1) {
                    if (start_i < 0) ok = false;
                    else { parts.push_back({start_i, i}); start_i = -1; }
                } else if (start_i < 0) {
                    start_i = i;
                }
            }
            if (!ok) continue;
            if (start_i >= 0) parts.push_back({start_i, static_cast<int>(c.size())});
            bool wahl = true;
            for (auto [a, e] : parts) wahl = wahl && is_wahl(Chain(c.begin() + a, c.begin() + e));
            if (!wahl || !nef_chain(c, parts)) continue;
            PResolution pr;
            pr.graph = chain_graph(c);
            pr.origin = it.origin;
            for (auto [a, e] : parts) {
                std::vector<int> m;
                for (int i = a; i < e; ++i) m.push_back(i);
                pr.marks.push_back(m);
            }
            auto cm = canonical_model(pr);
            if (cm.res.graph.size() != static_cast<int>(seg.size())) continue;
            if (cm.res.marks.size() != 1 || cm.res.marks[0].size() != seg.size()) continue;
            Chain got;
            for (int v = 0; v < cm.res.graph.size(); ++v) got.push_back(-cm.res.graph.weight[v]);
            if (got != seg) continue;
            LocalMResolution out{c, parts, it.origin};
            return out;
        }
    }
    return std::nullopt;
}

}  // namespace pdef
