#include "pdef/stevens.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <set>
#include <sstream>
#include <stdexcept>

#include "pdef/classt.hpp"
#include "pdef/incidence.hpp"
#include "pdef/mmp.hpp"

namespace pdef {

void order_triangles(Triangulation& t) {
    const int N = t.s + 1;
    std::vector<std::array<int, 3>> inner, outer;
    for (auto tri : t.triangles) {
        std::sort(tri.begin(), tri.end());
        (tri[2] == N ? outer : inner).push_back(tri);
    }
    std::sort(inner.begin(), inner.end());
    std::sort(outer.begin(), outer.end(), [](const auto& a, const auto& b) {
        return std::pair(a[1] - a[0], a[0]) < std::pair(b[1] - b[0], b[0]);
    });
    t.triangles = std::move(inner);
    t.triangles.insert(t.triangles.end(), outer.begin(), outer.end());
}

namespace {

using Tris = std::vector<std::array<int, 3>>;

// All triangulations of the convex polygon with vertices poly (in cyclic order).
std::vector<Tris> triangulate(const std::vector<int>& poly) {
    if (poly.size() < 3) return {Tris{}};
    std::vector<Tris> out;
    const int first = poly.front(), last = poly.back();
    for (std::size_t k = 1; k + 1 < poly.size(); ++k) {
        auto left = triangulate(std::vector<int>(poly.begin(), poly.begin() + k + 1));
        auto right = triangulate(std::vector<int>(poly.begin() + k, poly.end()));
        for (const auto& l : left)
            for (const auto& r : right) {
                Tris t = l;
                t.insert(t.end(), r.begin(), r.end());
                t.push_back({first, poly[k], last});
                out.push_back(std::move(t));
            }
    }
    return out;
}

}  // namespace

std::vector<Triangulation> triangulations(int s) {
    if (s < 1) throw std::invalid_argument("triangulations: s must be positive");
    std::vector<int> poly;
    for (int i = 1; i <= s + 1; ++i) poly.push_back(i);
    std::vector<Triangulation> out;
    for (auto& tris : triangulate(poly)) {
        Triangulation t{s, std::move(tris)};
        order_triangles(t);
        out.push_back(std::move(t));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return tri_to_k(a) < tri_to_k(b); });
    return out;
}

std::vector<int> tri_to_k(const Triangulation& t) {
    std::vector<int> k(t.s, 0);
    for (const auto& tri : t.triangles)
        for (int v : tri)
            if (v <= t.s) ++k[v - 1];
    return k;
}

Triangulation k_to_tri(const std::vector<int>& k) {
    const int s = static_cast<int>(k.size());
    if (s < 2 || !is_admissible(k) || !hj_eval(k).is_zero())
        throw std::invalid_argument("k_to_tri: sequence is not in K_s");
    const int N = s + 1;
    std::vector<int> verts;
    for (int i = 1; i <= s; ++i) verts.push_back(i);
    std::map<int, int> kk;
    for (int i = 1; i <= s; ++i) kk[i] = k[i - 1];
    Triangulation t{s, {}};
    while (verts.size() > 2) {
        auto it = std::find_if(verts.begin(), verts.end(), [&](int v) { return kk[v] == 1; });
        if (it == verts.end()) throw std::invalid_argument("k_to_tri: no ear");
        std::size_t i = it - verts.begin();
        int p = i > 0 ? verts[i - 1] : N;
        int nx = i + 1 < verts.size() ? verts[i + 1] : N;
        std::array<int, 3> tri{p, verts[i], nx};
        std::sort(tri.begin(), tri.end());
        t.triangles.push_back(tri);
        for (int u : {p, nx})
            if (u != N) --kk[u];
        verts.erase(it);
    }
    t.triangles.push_back({verts[0], verts[1], N});
    if (tri_to_k(t) != k) throw std::invalid_argument("k_to_tri: sequence is not in K_s");
    order_triangles(t);
    return t;
}

int alpha(int i, const std::array<int, 3>& tri, int s) {
    std::vector<int> named;
    for (int v : tri)
        if (v <= s) named.push_back(v);
    std::sort(named.begin(), named.end());
    for (std::size_t j = 0; j < named.size(); ++j)
        if (named[j] == i) return j == 1 ? -1 : 1;
    return 0;
}

Matrix npp_incidence(const Chain& b, const std::vector<int>& k, const Triangulation& theta) {
    const int s = static_cast<int>(b.size());
    if (s == 1) return Matrix{std::vector<int>(b[0], 1)};
    if (static_cast<int>(k.size()) != s || theta.s != s) throw std::invalid_argument("npp_incidence: size mismatch");
    std::vector<std::vector<int>> cols;
    for (const auto& tri : theta.triangles) {
        std::vector<int> c(s, 0);
        for (int i = 1; i <= s; ++i) c[i - 1] = alpha(i, tri, s);
        cols.push_back(c);
    }
    for (int i = 0; i < s; ++i) {
        if (k[i] > b[i]) throw std::invalid_argument("npp_incidence: k exceeds b");
        for (int j = 0; j < b[i] - k[i]; ++j) {
            std::vector<int> c(s, 0);
            c[i] = 1;
            cols.push_back(c);
        }
    }
    Matrix m(s, std::vector<int>(cols.size(), 0));
    for (std::size_t j = 0; j < cols.size(); ++j) {
        int acc = 0;
        for (int i = 0; i < s; ++i) {
            acc += cols[j][i];
            m[i][j] = acc;
        }
    }
    return m;
}

PResolution ChainPResolution::to_presolution() const {
    PResolution p;
    Chain c;
    for (int w : weight) c.push_back(-w);
    p.graph = chain_graph(c);
    p.origin = origin;
    for (auto [a, e] : marks) {
        std::vector<int> m;
        for (int i = a; i < e; ++i) m.push_back(i);
        p.marks.push_back(std::move(m));
    }
    return p;
}

Chain ChainPResolution::mark_chain(std::size_t i) const {
    Chain c;
    for (int j = marks[i].first; j < marks[i].second; ++j) c.push_back(-weight[j]);
    return c;
}

bool ChainPResolution::all_wahl() const {
    for (std::size_t i = 0; i < marks.size(); ++i)
        if (!is_wahl(mark_chain(i))) return false;
    return true;
}

std::string to_string(const ChainPResolution& p) {
    std::ostringstream os;
    std::vector<char> open(p.weight.size() + 1, 0), close(p.weight.size() + 1, 0);
    for (auto [a, e] : p.marks) {
        open[a] = 1;
        close[e - 1] = 1;
    }
    for (std::size_t i = 0; i < p.weight.size(); ++i) {
        if (i) os << ' ';
        if (open[i]) os << '[';
        os << p.weight[i];
        if (close[i]) os << ']';
    }
    return os.str();
}

namespace {

struct Item {
    std::vector<int> weight;
    std::vector<int> origin;
    bool operator<(const Item& o) const { return std::tie(weight, origin) < std::tie(o.weight, o.origin); }
};

void markings(const std::vector<int>& w, std::size_t pos, std::vector<std::pair<int, int>>& cur,
              std::vector<std::vector<std::pair<int, int>>>& out) {
    const std::size_t r = w.size();
    if (pos >= r) {
        out.push_back(cur);
        return;
    }
    markings(w, pos + 1, cur, out);
    if (w[pos] == -1) return;
    Chain seg;
    for (std::size_t e = pos + 1; e <= r; ++e) {
        if (w[e - 1] == -1) break;
        seg.push_back(-w[e - 1]);
        if (!is_class_t_chain(seg)) continue;
        cur.push_back({static_cast<int>(pos), static_cast<int>(e)});
        // the next curve stays unmarked: adjacent marks are never ample
        markings(w, e + 1, cur, out);
        cur.pop_back();
    }
}

std::optional<LocalMResolution> cached_local(const Chain& seg) {
    static std::mutex mu;
    static std::map<Chain, std::optional<LocalMResolution>> cache;
    {
        std::lock_guard lock(mu);
        auto it = cache.find(seg);
        if (it != cache.end()) return it->second;
    }
    auto r = local_m_resolution(seg);
    std::lock_guard lock(mu);
    cache.emplace(seg, r);
    return r;
}

}  // namespace

std::vector<ChainPResolution> chain_presolutions(const Chain& cf, int depth) {
    Item start;
    for (std::size_t i = 0; i < cf.size(); ++i) {
        start.weight.push_back(-cf[i]);
        start.origin.push_back(static_cast<int>(i));
    }
    std::set<Item> seen{start};
    std::vector<Item> all{start}, frontier{start};
    for (int b = 0; b < depth; ++b) {
        std::vector<Item> next;
        for (const auto& it : frontier)
            for (std::size_t p = 0; p + 1 < it.weight.size(); ++p) {
                Item x = it;
                --x.weight[p];
                --x.weight[p + 1];
                x.weight.insert(x.weight.begin() + p + 1, -1);
                x.origin.insert(x.origin.begin() + p + 1, -1);
                if (seen.insert(x).second) {
                    next.push_back(x);
                    all.push_back(std::move(x));
                }
            }
        frontier = std::move(next);
    }
    std::vector<ChainPResolution> out;
    for (const auto& it : all) {
        std::vector<std::vector<std::pair<int, int>>> ms;
        std::vector<std::pair<int, int>> cur;
        markings(it.weight, 0, cur, ms);
        for (auto& m : ms) {
            ChainPResolution p{it.weight, it.origin, std::move(m)};
            if (ample_check(p.to_presolution()).ample) out.push_back(std::move(p));
        }
    }
    return out;
}

std::optional<ChainPResolution> to_m_resolution(const ChainPResolution& p) {
    ChainPResolution out;
    auto marks = p.marks;
    std::sort(marks.begin(), marks.end());
    int prev = 0;
    auto copy = [&](int a, int e) {
        for (int i = a; i < e; ++i) {
            out.weight.push_back(p.weight[i]);
            out.origin.push_back(p.origin[i]);
        }
    };
    for (auto [a, e] : marks) {
        copy(prev, a);
        Chain seg;
        for (int i = a; i < e; ++i) seg.push_back(-p.weight[i]);
        const int base = static_cast<int>(out.weight.size());
        if (is_wahl(seg)) {
            out.marks.push_back({base, base + static_cast<int>(seg.size())});
            copy(a, e);
        } else {
            auto lm = cached_local(seg);
            if (!lm) return std::nullopt;
            for (auto [x, y] : lm->marks) out.marks.push_back({base + x, base + y});
            for (std::size_t i = 0; i < lm->chain.size(); ++i) {
                out.weight.push_back(-lm->chain[i]);
                out.origin.push_back(lm->origin[i] >= 0 ? p.origin[a + lm->origin[i]] : -1);
            }
        }
        prev = e;
    }
    copy(prev, static_cast<int>(p.weight.size()));
    return out;
}

std::vector<int> chain_attachments(const ChainPResolution& p, const std::vector<int>& counts) {
    std::map<int, int> pos;
    for (std::size_t i = 0; i < p.origin.size(); ++i)
        if (p.origin[i] >= 0) pos[p.origin[i]] = static_cast<int>(i);
    std::vector<int> att;
    for (std::size_t j = 0; j < counts.size(); ++j) {
        auto it = pos.find(static_cast<int>(j));
        if (counts[j] > 0 && it == pos.end()) throw std::invalid_argument("chain_attachments: curve missing");
        for (int c = 0; c < counts[j]; ++c) att.push_back(it->second);
    }
    return att;
}

std::shared_ptr<const std::vector<Realization>> realizations(const Chain& cf, const std::vector<int>& counts,
                                                             int depth) {
    using Key = std::tuple<Chain, std::vector<int>, int>;
    static std::mutex mu;
    static std::map<Key, std::shared_ptr<const std::vector<Realization>>> cache;
    Key key{cf, counts, depth};
    {
        std::lock_guard lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    auto out = std::make_shared<std::vector<Realization>>();
    for (auto& p : chain_presolutions(cf, depth)) {
        auto m = to_m_resolution(p);
        if (!m) continue;
        Realization r;
        r.via_m_resolution = !p.all_wahl();
        r.presolution = std::move(p);
        r.mresolution = std::move(*m);
        r.matrix = run_mmp(r.mresolution.to_presolution(), chain_attachments(r.mresolution, counts)).matrix;
        out->push_back(std::move(r));
    }
    std::lock_guard lock(mu);
    return cache.emplace(key, std::move(out)).first->second;
}

std::vector<Realization> lookup_chain(const Chain& cf, const std::vector<int>& counts, const Matrix& target,
                                      int depth) {
    std::vector<int> groups;
    for (std::size_t j = 0; j < counts.size(); ++j)
        for (int c = 0; c < counts[j]; ++c) groups.push_back(static_cast<int>(j));
    if (target.size() != groups.size()) throw std::invalid_argument("lookup_chain: row count mismatch");
    std::vector<Realization> hits;
    for (const auto& r : *realizations(cf, counts, depth)) {
        if (r.matrix.empty() || target.empty() || r.matrix[0].size() != target[0].size()) continue;
        if (equivalent(r.matrix, target, groups)) hits.push_back(r);
    }
    return hits;
}

std::vector<PResolutionCQSS> p_resolutions_cqss(long long n, long long q) {
    if (n < 2 || q < 1 || q >= n || boost::multiprecision::gcd(BigInt(n), BigInt(q)) != 1)
        throw std::invalid_argument("p_resolutions_cqss: need 0 < q < n, gcd(n, q) = 1");
    Chain cf = hj_expand(n, q);
    Chain b = hj_dual(cf);
    std::vector<PResolutionCQSS> out;
    if (b.size() == 1) {
        PResolutionCQSS d{n, q, cf, b, {}, Triangulation{1, {}}, npp_incidence(b, {}, Triangulation{1, {}}), true};
        out.push_back(std::move(d));
        return out;
    }
    for (auto& k : enumerate_K_bounded(b)) {
        Triangulation t = k_to_tri(k);
        Matrix m = npp_incidence(b, k, t);
        out.push_back({n, q, cf, b, k, t, std::move(m), false});
    }
    return out;
}

std::optional<Realization> realize_presolution(const PResolutionCQSS& desc, int depth) {
    std::vector<int> counts;
    for (std::size_t j = 0; j < desc.chain.size(); ++j)
        counts.push_back(j + 1 < desc.chain.size() ? desc.chain[j] - 2 : desc.chain[j] - 1);
    auto hits = lookup_chain(desc.chain, counts, desc.matrix, depth);
    if (hits.empty()) return std::nullopt;
    return hits.front();
}

}  // namespace pdef
