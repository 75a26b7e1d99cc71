#include "pdef/whs.hpp"

#include <algorithm>
#include <atomic>
#include <set>
#include <sstream>
#include <thread>

#include "pdef/mmp.hpp"
#include "pdef/stevens.hpp"

namespace pdef {

std::vector<std::vector<int>> StarSingularity::branch_rows() const {
    auto cs = star_branch_counts(branches);
    std::vector<std::vector<int>> out;
    int r = 0;
    for (const auto& c : cs) {
        std::vector<int> rows;
        for (int k : c)
            for (int j = 0; j < k; ++j) rows.push_back(r++);
        out.push_back(rows);
    }
    return out;
}

std::vector<int> StarSingularity::drow_indices() const {
    int r = 0;
    for (const auto& c : star_branch_counts(branches))
        for (int k : c) r += k;
    std::vector<int> out;
    for (int k = 0; k < d_rows(); ++k) out.push_back(r + k);
    return out;
}

std::vector<int> StarSingularity::row_position() const {
    std::vector<int> out;
    for (const auto& c : star_branch_counts(branches))
        for (std::size_t p = 0; p < c.size(); ++p)
            for (int j = 0; j < c[p]; ++j) out.push_back(static_cast<int>(p));
    for (int k = 0; k < d_rows(); ++k) out.push_back(-1);
    return out;
}

static std::string chain_str(const Chain& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

std::string to_string(const StarSingularity& x) {
    std::string s = "(" + std::to_string(x.d) + ";";
    for (std::size_t i = 0; i < x.branches.size(); ++i) s += (i ? "," : " ") + chain_str(x.branches[i]);
    return s + ")";
}

std::string to_string(CaseKind k) {
    switch (k) {
        case CaseKind::A: return "A";
        case CaseKind::B1: return "B1";
        case CaseKind::B2: return "B2";
        case CaseKind::Violation: return "violation";
        case CaseKind::OutOfScope: return "out-of-scope";
        case CaseKind::DBlockFail: return "dblock-fail";
        case CaseKind::Unclassified: return "unclassified";
    }
    return "?";
}

bool d_block_shape(const Matrix& d) {
    if (d.size() < 2) {
        if (d.empty()) return true;
        int s = 0;
        for (int v : d[0]) s += v;
        return s == 2;
    }
    const std::size_t nc = d[0].size();
    std::vector<int> common;
    for (std::size_t c = 0; c < nc; ++c) {
        bool all = true;
        for (const auto& row : d) all = all && row[c];
        if (all) common.push_back(static_cast<int>(c));
    }
    if (common.size() != 1) return false;
    std::set<int> priv;
    for (const auto& row : d) {
        int s = 0, other = -1;
        for (std::size_t c = 0; c < nc; ++c)
            if (row[c]) {
                ++s;
                if (static_cast<int>(c) != common[0]) other = static_cast<int>(c);
            }
        if (s != 2 || !priv.insert(other).second) return false;
    }
    return true;
}

bool d_block_check(const Matrix& m, const StarSingularity& x) {
    Matrix d;
    for (int r : x.drow_indices()) d.push_back(m.at(r));
    return d_block_shape(d);
}

namespace {

std::vector<int> zero_branches(const Matrix& m, const std::vector<std::vector<int>>& br, int p0) {
    std::vector<int> out;
    for (std::size_t i = 0; i < br.size(); ++i)
        for (int r : br[i])
            if (!m[r][p0]) {
                out.push_back(static_cast<int>(i));
                break;
            }
    return out;
}

std::string list_str(const std::vector<int>& v, int offset = 0) {
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i] + offset);
    return s;
}

// Rows of m restricted to columns where some listed row is 1, then one extra row per column set.
Matrix submatrix(const Matrix& m, const std::vector<int>& rows, const std::vector<std::set<int>>& extra = {},
                 int exclude = -1) {
    std::vector<int> cols;
    for (std::size_t c = 0; c < m[0].size(); ++c) {
        if (static_cast<int>(c) == exclude) continue;
        bool any = false;
        for (int r : rows) any = any || m[r][c];
        if (any) cols.push_back(static_cast<int>(c));
    }
    Matrix out;
    for (int r : rows) {
        std::vector<int> row;
        for (int c : cols) row.push_back(m[r][c]);
        out.push_back(row);
    }
    for (const auto& e : extra) {
        std::vector<int> row;
        for (int c : cols) row.push_back(e.count(c) ? 1 : 0);
        out.push_back(row);
    }
    return out;
}

}  // namespace

CaseTag classify_case(const Matrix& m, const StarSingularity& x) {
    CaseTag tag;
    const int t = x.t();
    const auto br = x.branch_rows();
    const auto dr = x.drow_indices();
    if (m.empty() || m[0].empty()) throw std::invalid_argument("classify_case: empty matrix");
    const int nc = static_cast<int>(m[0].size());
    for (int i = 0; i < t; ++i) tag.permutation.push_back(i);

    if (dr.size() < 2) {
        // p0 is not forced; the matrix is unconstructible only if every candidate fails
        for (int c = 0; c < nc; ++c) {
            bool all = true;
            for (int r : dr) all = all && m[r][c];
            if (all) tag.candidates.push_back({c, zero_branches(m, br, c)});
        }
        bool every_fails = std::all_of(tag.candidates.begin(), tag.candidates.end(),
                                       [](const auto& c) { return c.second.size() > 1; });
        if (every_fails) {
            tag.kind = CaseKind::Violation;
            tag.message = "one-branch condition fails: for every choice of p0 the rows with 0 at p0 come from more than one branch";
        } else {
            tag.kind = CaseKind::OutOfScope;
            tag.message = "d = t+2: some choice of p0 meets the one-branch condition, synthesis not attempted";
        }
        return tag;
    }
    if (!d_block_check(m, x)) {
        tag.kind = CaseKind::DBlockFail;
        tag.message = "D rows are not [all-ones column | identity]";
        return tag;
    }
    for (int c = 0; c < nc && tag.p0 < 0; ++c) {
        bool all = true;
        for (int r : dr) all = all && m[r][c];
        if (all) tag.p0 = c;
    }
    const int p0 = tag.p0;
    for (int i = 0; i < t; ++i)
        for (int r : br[i])
            if (!m[r][p0]) tag.R.push_back(r);
    if (tag.R.empty()) {
        tag.kind = CaseKind::A;
        for (int i = 0; i < t; ++i) tag.blocks.push_back(submatrix(m, br[i], {}, p0));
        return tag;
    }
    auto bs = zero_branches(m, br, p0);
    if (bs.size() > 1) {
        tag.kind = CaseKind::Violation;
        tag.candidates.push_back({p0, bs});
        tag.message = "one-branch condition fails: rows with 0 at p0 come from branches " + list_str(bs, 1);
        return tag;
    }
    const int b1 = bs[0];
    tag.branch = b1;
    tag.e = static_cast<int>(std::find(br[b1].begin(), br[b1].end(), tag.R.front()) - br[b1].begin()) + 1;
    tag.types.assign(t, TypeTag::Unclassified);
    tag.q.assign(t, {});
    tag.g.assign(t, -1);
    std::vector<int> partners, rest;
    for (int i = 0; i < t; ++i) {
        if (i == b1) continue;
        PairShape ps = pair_shape(m, tag.R, br[i]);
        tag.types[i] = ps.tag;
        tag.q[i] = ps.q;
        if (ps.tag == TypeTag::Unclassified) {
            tag.kind = CaseKind::Unclassified;
            tag.message = "branch " + std::to_string(i + 1) + " is neither type 2-1 nor type 2-2";
            return tag;
        }
        if (ps.tag == TypeTag::Type2_1) {
            partners.push_back(i);
            tag.stair = ps.stair;
            tag.g_partner = static_cast<int>(ps.q.size());
        } else {
            rest.push_back(i);
            tag.g[i] = static_cast<int>(ps.q.size());
        }
    }
    if (partners.size() > 1) {
        tag.kind = CaseKind::Violation;
        tag.message = "more than one type 2-1 partner: branches " + list_str(partners, 1);
        return tag;
    }
    for (int i : rest)
        if (tag.g[i] >= 2) tag.s += tag.g[i] - 1;
    tag.permutation = {b1};
    if (!partners.empty()) {
        tag.partner = partners[0];
        tag.permutation.push_back(partners[0]);
    }
    tag.permutation.insert(tag.permutation.end(), rest.begin(), rest.end());
    tag.kind = partners.empty() ? CaseKind::B1 : CaseKind::B2;
    return tag;
}

namespace {

struct Piece {
    std::vector<int> weight;
    std::vector<int> star;                    // star vertex or -1
    std::vector<std::pair<int, int>> marks;
    std::string name;
    bool hangs = false;                       // first vertex meets the central curve
};

Realization unique_hit(const std::vector<Realization>& hits, const std::string& what) {
    if (hits.empty()) throw ConstructError("lookup-miss", "no P-resolution realizes the " + what);
    if (hits.size() > 1)
        throw ConstructError("lookup-ambiguous", std::to_string(hits.size()) + " P-resolutions realize the " + what);
    return hits.front();
}

Piece make_piece(const ChainPResolution& r, const std::vector<int>& star_of_origin, std::string name, bool hangs,
                 int pre = 0) {
    Piece p;
    p.name = std::move(name);
    p.hangs = hangs;
    for (int k = 0; k < pre; ++k) {
        p.weight.push_back(-1);
        p.star.push_back(-1);
    }
    for (std::size_t i = 0; i < r.weight.size(); ++i) {
        p.weight.push_back(r.weight[i]);
        p.star.push_back(r.origin[i] >= 0 ? star_of_origin[r.origin[i]] : -1);
    }
    for (auto [a, e] : r.marks) p.marks.push_back({a + pre, e + pre});
    return p;
}

}  // namespace

StarPResolution construct_presolution(const Matrix& m, const StarSingularity& x, int depth) {
    StarPResolution out;
    out.tag = classify_case(m, x);
    const CaseTag& tag = out.tag;
    if (!tag.constructible())
        throw ConstructError("unconstructible", "matrix is " + to_string(tag.kind) + ": " + tag.message);
    const int t = x.t();
    const auto br = x.branch_rows();
    const auto dr = x.drow_indices();
    const auto cs = star_branch_counts(x.branches);
    const SandwichedStructure st = x.structure();
    const DualGraph& base = st.base;
    const int p0 = tag.p0;
    std::vector<Piece> pieces;

    if (tag.kind == CaseKind::A) {
        for (int i = 0; i < t; ++i) {
            const auto r = unique_hit(lookup_chain(x.branches[i], cs[i], tag.blocks[i], depth),
                                       "block of branch " + std::to_string(i + 1));
            pieces.push_back(make_piece(r.mresolution, base.branches[i], "A: branch " + std::to_string(i + 1), true));
        }
    } else {
        const int b1 = tag.branch;
        std::vector<int> rest;
        for (int i = 0; i < t; ++i)
            if (i != b1 && i != tag.partner) rest.push_back(i);
        const int s = tag.s;
        int nE = 0;
        for (int i : rest) nE += tag.g[i];
        const int want = t - 1 - (tag.partner >= 0 ? 1 : 0) + s;
        if (nE != want)
            throw ConstructError("identity", "sum of g_i is " + std::to_string(nE) + ", expected " + std::to_string(want));
        std::vector<std::set<int>> erows;
        for (int i : rest)
            for (int c : tag.q[i]) erows.push_back({p0, c});
        const int d = x.d;

        if (tag.partner < 0) {
            std::vector<int> rows = dr;
            rows.insert(rows.end(), br[b1].begin(), br[b1].end());
            Matrix sub = submatrix(m, rows, erows);
            const std::size_t nD = dr.size(), nC = br[b1].size();
            Matrix ord(sub.begin(), sub.begin() + nD);
            ord.insert(ord.end(), sub.begin() + nD + nC, sub.end());
            ord.insert(ord.end(), sub.begin() + nD, sub.begin() + nD + nC);
            Chain chain{d + s};
            chain.insert(chain.end(), x.branches[b1].begin(), x.branches[b1].end());
            std::vector<int> counts{d + s - 2};
            counts.insert(counts.end(), cs[b1].begin(), cs[b1].end());
            std::vector<int> star{base.central};
            star.insert(star.end(), base.branches[b1].begin(), base.branches[b1].end());
            const auto r = unique_hit(lookup_chain(chain, counts, ord, depth), "[M1, D, E] matrix");
            pieces.push_back(make_piece(r.mresolution, star, "B1: [M1, D, E] on branch " + std::to_string(b1 + 1) + " and the central curve", false));
        } else {
            const int b2 = tag.partner;
            std::vector<int> rows1(br[b1].rbegin(), br[b1].rend());
            std::vector<int> rows = rows1;
            rows.insert(rows.end(), dr.begin(), dr.end());
            rows.insert(rows.end(), br[b2].begin(), br[b2].end());
            Matrix sub = submatrix(m, rows, erows);
            const std::size_t head = rows1.size() + dr.size();
            Matrix ord(sub.begin(), sub.begin() + head);
            ord.insert(ord.end(), sub.begin() + rows.size(), sub.end());
            ord.insert(ord.end(), sub.begin() + head, sub.begin() + rows.size());
            Chain chain(x.branches[b1].rbegin(), x.branches[b1].rend());
            chain.push_back(d + s);
            chain.insert(chain.end(), x.branches[b2].begin(), x.branches[b2].end());
            std::vector<int> counts(cs[b1].rbegin(), cs[b1].rend());
            counts.push_back(d + s - 3);
            counts.insert(counts.end(), cs[b2].begin(), cs[b2].end());
            std::vector<int> star(base.branches[b1].rbegin(), base.branches[b1].rend());
            star.push_back(base.central);
            star.insert(star.end(), base.branches[b2].begin(), base.branches[b2].end());
            const auto r = unique_hit(lookup_chain(chain, counts, ord, depth), "[M1, M2, D, E] matrix");
            pieces.push_back(make_piece(r.mresolution, star,
                                        "B2: [M1, M2, D, E] on branches " + std::to_string(b1 + 1) + ", " +
                                            std::to_string(b2 + 1) + " and the central curve",
                                        false));
        }

        for (int i : rest) {
            const int g = tag.g[i];
            const Chain& b = x.branches[i];
            std::vector<std::set<int>> frow;
            if (g >= 2) frow.push_back(std::set<int>(tag.q[i].begin(), tag.q[i].end()));
            Matrix sub = submatrix(m, br[i], frow, p0);
            Chain chain;
            std::vector<int> counts;
            int pre = 0;
            if (g == 1) {
                chain = b;
                counts = cs[i];
            } else {
                if (g >= 3) chain.assign(g - 2, 2);
                chain.push_back(b[0] + 1);
                chain.insert(chain.end(), b.begin() + 1, b.end());
                if (g == 2) {
                    counts = cs[i];
                    counts[0] += 1;
                } else {
                    counts = {1};
                    counts.insert(counts.end(), g - 3, 0);
                    counts.insert(counts.end(), cs[i].begin(), cs[i].end());
                }
                pre = 1;
                Matrix ord{sub.back()};
                ord.insert(ord.end(), sub.begin(), sub.end() - 1);
                sub = std::move(ord);
            }
            const int off = static_cast<int>(chain.size() - b.size());
            std::vector<int> star(off, -1);
            star.insert(star.end(), base.branches[i].begin(), base.branches[i].end());
            const auto r = unique_hit(lookup_chain(chain, counts, sub, depth),
                                       "F-augmented block of branch " + std::to_string(i + 1));
            pieces.push_back(make_piece(r.mresolution, star,
                                        "F: branch " + std::to_string(i + 1) + " (g=" + std::to_string(g) + ")", true, pre));
        }
    }

    // assemble the M-resolution on the blown-up star
    PResolution& mres = out.mresolution;
    std::vector<std::string> vname;
    int central = -1;
    std::vector<int> firsts;
    for (const auto& p : pieces) {
        std::vector<int> ids;
        for (std::size_t k = 0; k < p.weight.size(); ++k) {
            int v = mres.graph.add_vertex(p.weight[k]);
            mres.origin.push_back(p.star[k]);
            vname.push_back(p.name);
            if (p.star[k] == base.central) central = v;
            if (k) mres.graph.add_edge(ids.back(), v);
            ids.push_back(v);
        }
        for (auto [a, e] : p.marks) {
            mres.marks.push_back(std::vector<int>(ids.begin() + a, ids.begin() + e));
            out.m_provenance.push_back(p.name);
        }
        if (p.hangs) firsts.push_back(ids.front());
    }
    if (central < 0) {
        central = mres.graph.add_vertex(-x.d);
        mres.origin.push_back(base.central);
        vname.push_back("central");
    }
    for (int f : firsts) mres.graph.add_edge(central, f);
    std::vector<int> at(base.size(), -1);
    for (int v = 0; v < mres.graph.size(); ++v)
        if (mres.origin[v] >= 0) at[mres.origin[v]] = v;
    for (int b : st.attach) out.attach.push_back(at[b]);

    auto cm = canonical_model(mres);
    out.presolution = cm.res;
    std::vector<int> back(cm.res.graph.size(), -1);
    for (std::size_t v = 0; v < cm.rename.size(); ++v)
        if (cm.rename[v] >= 0) back[cm.rename[v]] = static_cast<int>(v);
    for (const auto& mk : out.presolution.marks) {
        std::set<std::string> names;
        for (int v : mk) names.insert(vname[back[v]]);
        std::string s;
        for (const auto& n : names) s += (s.empty() ? "" : " + ") + n;
        out.provenance.push_back(s);
    }
    out.ample = ample_check(out.presolution);
    if (!out.ample.error.empty()) throw ConstructError("not-class-t", out.ample.error);
    if (!out.ample.ample) {
        std::string bad;
        for (const auto& c : out.ample.curves)
            if (!c.ok) bad += (bad.empty() ? "" : ", ") + std::to_string(c.vertex) + " (K.E = " + to_string(c.k_dot) + ")";
        throw ConstructError("not-ample", "K is not ample on curves " + bad);
    }
    return out;
}

bool blows_down_to_star(const PResolution& res, const StarSingularity& x) {
    DualGraph g = res.graph;
    std::vector<int> origin = res.origin;
    for (bool again = true; again;) {
        again = false;
        for (int v = 0; v < g.size(); ++v)
            if (origin[v] < 0 && g.weight[v] == -1 && g.neighbors(v).size() <= 2) {
                blow_down(g, v);
                origin.erase(origin.begin() + v);
                again = true;
                break;
            }
    }
    const DualGraph base = x.structure().base;
    if (g.size() != base.size()) return false;
    std::vector<int> inv(base.size(), -1);
    for (int v = 0; v < g.size(); ++v) {
        if (origin[v] < 0 || inv[origin[v]] >= 0) return false;
        inv[origin[v]] = v;
        if (g.weight[v] != base.weight[origin[v]]) return false;
    }
    std::vector<std::pair<int, int>> es;
    for (auto [a, b] : g.edges) es.push_back({std::min(origin[a], origin[b]), std::max(origin[a], origin[b])});
    std::sort(es.begin(), es.end());
    return es == base.edges;
}

PhiResult verify_phi_pi(const Matrix& m, const StarSingularity& x, const StarPResolution& res) {
    PhiResult r;
    auto run = run_mmp(res.mresolution, res.attach);
    r.got = run.matrix;
    r.steps = run.trace.size();
    if (r.got.size() != m.size() || r.got.empty() || r.got[0].size() != m[0].size()) return r;
    r.row_permutation = matching_row_permutation(r.got, m, x.structure().attach);
    r.ok = !r.row_permutation.empty();
    return r;
}

SurjectivityReport surjectivity_report(const StarSingularity& x, int depth, unsigned threads) {
    SurjectivityReport rep;
    rep.x = x;
    const auto st = x.structure();
    const auto data = combinatorial_data(st);
    const auto all = enumerate_all(data);
    const std::size_t rows = st.attach.size();
    rep.total = all.size();
    rep.entries.resize(all.size());
    std::atomic<std::size_t> next{0};
    auto work = [&] {
        for (std::size_t i; (i = next++) < all.size();) {
            SurjectivityEntry& e = rep.entries[i];
            e.matrix = all[i];
            Matrix m = to_matrix(all[i], rows);
            e.tag = classify_case(m, x);
            if (!e.tag.constructible()) {
                e.status = e.tag.kind == CaseKind::Violation ? "unconstructible" : to_string(e.tag.kind);
                e.detail = e.tag.message;
                continue;
            }
            try {
                auto res = construct_presolution(m, x, depth);
                auto v = verify_phi_pi(m, x, res);
                e.status = v.ok ? "verified" : "verify-failed";
                if (!v.ok) e.detail = "MMP matrix differs from the input";
            } catch (const ConstructError& err) {
                e.status = "construct-failed";
                e.detail = err.kind + ": " + err.what();
            } catch (const MMPError& err) {
                e.status = "verify-failed";
                e.detail = std::string("mmp: ") + err.what();
            }
        }
    };
    if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
    threads = std::min<unsigned>(threads, std::max<std::size_t>(1, all.size()));
    std::vector<std::thread> pool;
    for (unsigned k = 1; k < threads; ++k) pool.emplace_back(work);
    work();
    for (auto& th : pool) th.join();
    for (const auto& e : rep.entries) {
        ++rep.tally[e.status];
        if (e.status == "verified") ++rep.verified;
    }
    return rep;
}

}  // namespace pdef
