#include "pdef/incidence.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace pdef {

CanonicalForm canonical(const Matrix& m) {
    CanonicalForm cols;
    if (m.empty()) return cols;
    const std::size_t nc = m[0].size();
    for (std::size_t j = 0; j < nc; ++j) {
        Column c;
        for (const auto& row : m) c.push_back(row[j]);
        cols.push_back(c);
    }
    std::sort(cols.begin(), cols.end(), std::greater<>());
    return cols;
}

Matrix to_matrix(const CanonicalForm& c, std::size_t rows) {
    Matrix m(rows, std::vector<int>(c.size(), 0));
    for (std::size_t j = 0; j < c.size(); ++j)
        for (std::size_t i = 0; i < rows; ++i) m[i][j] = c[j][i];
    return m;
}

VerifyReport verify(const Matrix& m, const CombinatorialData& data) {
    VerifyReport rep;
    const std::size_t s = data.l.size();
    if (m.size() != s) {
        rep.ok = false;
        rep.violations.push_back("row count " + std::to_string(m.size()) + " differs from " + std::to_string(s) + " decorated curves");
        return rep;
    }
    auto bad = [&](const std::string& what) {
        rep.ok = false;
        rep.violations.push_back(what);
    };
    for (std::size_t i = 0; i < s; ++i) {
        if (m[i].size() != m[0].size()) { bad("ragged matrix"); return rep; }
        int sum = 0, delta = 0;
        for (int v : m[i]) {
            if (v < 0) bad("negative entry in row " + data.labels[i]);
            sum += v;
            delta += v * (v - 1) / 2;
        }
        if (delta != data.delta[i])
            bad("delta(" + data.labels[i] + "): sum m(m-1)/2 = " + std::to_string(delta) + ", expected " + std::to_string(data.delta[i]));
        if (sum != data.l[i])
            bad("l(" + data.labels[i] + "): row sum " + std::to_string(sum) + ", expected " + std::to_string(data.l[i]));
    }
    for (std::size_t i = 0; i < s; ++i)
        for (std::size_t k = i + 1; k < s; ++k) {
            int acc = 0;
            for (std::size_t j = 0; j < m[i].size(); ++j) acc += m[i][j] * m[k][j];
            if (acc != data.pair[i][k])
                bad(data.labels[i] + "." + data.labels[k] + ": " + std::to_string(acc) + ", expected " + std::to_string(data.pair[i][k]));
        }
    for (std::size_t j = 0; !m.empty() && j < m[0].size(); ++j) {
        bool any = false;
        for (std::size_t i = 0; i < s; ++i) any = any || m[i][j] != 0;
        if (!any) bad("column " + std::to_string(j) + " is zero");
    }
    return rep;
}

namespace {

class RepSearch {
public:
    RepSearch(const CombinatorialData& d) : s_(static_cast<int>(d.l.size())), rem_l_(d.l), rem_p_(d.pair) {
        eq_.assign(s_, 0);
        for (int i = 0; i + 1 < s_; ++i) eq_[i] = d.groups[i] == d.groups[i + 1];
        vec_.assign(s_, 0);
    }

    std::vector<CanonicalForm> run() {
        rec(nullptr);
        return out_;
    }

private:
    int s_;
    std::vector<int> rem_l_;
    std::vector<std::vector<int>> rem_p_;
    std::vector<char> eq_;           // rows i, i+1 share a group and agree so far
    std::vector<Column> cols_;
    std::vector<CanonicalForm> out_;
    std::vector<int> vec_;
    std::vector<int> col_;

    void apply(int sign) {
        for (int x : col_) rem_l_[x] -= sign;
        for (int a : col_)
            for (int b : col_)
                if (a != b) rem_p_[a][b] -= sign;
    }

    void rec(const Column* last) {
        int i = 0;
        while (i < s_ && rem_l_[i] == 0) ++i;
        if (i == s_) {
            for (int a = 0; a < s_; ++a)
                for (int b = 0; b < s_; ++b)
                    if (a != b && rem_p_[a][b]) return;
            out_.push_back(cols_);
            return;
        }
        for (int a = 0; a < i; ++a)
            for (int b = 0; b < s_; ++b)
                if (b != a && rem_p_[a][b]) return;
        for (int j = 0; j < s_; ++j)
            if (j != i && (rem_p_[i][j] > rem_l_[i] || rem_p_[i][j] > rem_l_[j])) return;
        std::fill(vec_.begin(), vec_.end(), 0);
        vec_[i] = 1;
        col_.assign(1, i);
        bool tight = false;
        if (last) {
            bool before = false;
            for (int x = 0; x < i; ++x) before = before || (*last)[x];
            tight = !before && (*last)[i] == 1;
        }
        build(i, i + 1, tight, last);
    }

    void build(int i, int j, bool tight, const Column* last) {
        if (j == s_) {
            std::vector<int> changed;
            for (int a = 0; a + 1 < s_; ++a)
                if (eq_[a] && vec_[a] > vec_[a + 1]) { eq_[a] = 0; changed.push_back(a); }
            Column c(vec_.begin(), vec_.end());
            std::vector<int> saved_col = col_;
            apply(1);
            cols_.push_back(c);
            rec(&c);
            cols_.pop_back();
            col_ = saved_col;
            apply(-1);
            vec_.assign(s_, 0);
            for (int x : col_) vec_[x] = 1;
            for (int a : changed) eq_[a] = 1;
            return;
        }
        bool can = rem_l_[j] > 0;
        for (int x : col_) can = can && rem_p_[j][x] > 0;
        const bool must = rem_p_[i][j] >= rem_l_[i];
        const bool prev_eq = j > 0 && eq_[j - 1];
        if (can && !(prev_eq && vec_[j - 1] == 0) && !(tight && (*last)[j] == 0)) {
            vec_[j] = 1;
            col_.push_back(j);
            build(i, j + 1, tight && (*last)[j] == 1, last);
            col_.pop_back();
            vec_[j] = 0;
        }
        if (!must) build(i, j + 1, tight && (*last)[j] == 0, last);
    }
};

}  // namespace

std::vector<CanonicalForm> enumerate_representatives(const CombinatorialData& data) {
    for (int d : data.delta)
        if (d != 0) throw std::invalid_argument("enumerate_all: only delta = 0 (0/1 entries) is supported");
    if (data.groups.size() != data.l.size()) throw std::invalid_argument("enumerate_all: groups missing");
    RepSearch rs(data);
    auto reps = rs.run();
    for (auto& r : reps) std::sort(r.begin(), r.end(), std::greater<>());
    std::sort(reps.begin(), reps.end());
    reps.erase(std::unique(reps.begin(), reps.end()), reps.end());
    return reps;
}

std::set<CanonicalForm> orbit(const CanonicalForm& c, const std::vector<int>& groups) {
    const int s = static_cast<int>(groups.size());
    std::vector<std::pair<int, int>> swaps;
    for (int a = 0; a < s; ++a) {
        for (int b = a + 1; b < s; ++b)
            if (groups[b] == groups[a]) { swaps.push_back({a, b}); break; }
    }
    CanonicalForm start = c;
    std::sort(start.begin(), start.end(), std::greater<>());
    std::set<CanonicalForm> seen{start};
    std::vector<CanonicalForm> st{start};
    while (!st.empty()) {
        CanonicalForm cur = st.back();
        st.pop_back();
        for (auto [a, b] : swaps) {
            CanonicalForm nx = cur;
            for (auto& col : nx) std::swap(col[a], col[b]);
            std::sort(nx.begin(), nx.end(), std::greater<>());
            if (seen.insert(nx).second) st.push_back(nx);
        }
    }
    return seen;
}

std::vector<CanonicalForm> enumerate_all(const CombinatorialData& data) {
    std::set<CanonicalForm> all;
    for (const auto& r : enumerate_representatives(data)) {
        auto o = orbit(r, data.groups);
        all.insert(o.begin(), o.end());
    }
    return {all.begin(), all.end()};
}

bool equivalent(const Matrix& a, const Matrix& b, const std::vector<int>& groups) {
    return !matching_row_permutation(a, b, groups).empty() || (a.empty() && b.empty());
}

std::vector<int> matching_row_permutation(const Matrix& a, const Matrix& b, const std::vector<int>& groups) {
    if (a.size() != b.size() || a.empty()) return {};
    if (a[0].size() != b[0].size()) return {};
    const int s = static_cast<int>(a.size());
    CanonicalForm target = canonical(b);
    // search over permutations inside groups, pruning on row sums
    std::vector<int> perm(s, -1);
    std::vector<char> used(s, 0);
    std::function<bool(int)> rec = [&](int i) -> bool {
        if (i == s) {
            Matrix pa(s);
            for (int k = 0; k < s; ++k) pa[perm[k]] = a[k];
            return canonical(pa) == target;
        }
        for (int k = 0; k < s; ++k) {
            if (used[k] || groups[k] != groups[i]) continue;
            int sa = 0, sb = 0;
            for (int v : a[i]) sa += v;
            for (int v : b[k]) sb += v;
            if (sa != sb) continue;
            used[k] = 1;
            perm[i] = k;
            if (rec(i + 1)) return true;
            used[k] = 0;
        }
        return false;
    };
    if (!rec(0)) return {};
    return perm;
}

std::vector<int> free_points(const Matrix& m, int row) {
    std::vector<int> out;
    if (m.empty()) return out;
    for (std::size_t j = 0; j < m[0].size(); ++j) {
        if (!m[row][j]) continue;
        int sum = 0;
        for (const auto& r : m) sum += r[j];
        if (sum == m[row][j]) out.push_back(static_cast<int>(j));
    }
    return out;
}

bool has_all_ones_column(const Matrix& m) {
    if (m.empty()) return false;
    for (std::size_t j = 0; j < m[0].size(); ++j) {
        bool all = true;
        for (const auto& r : m) all = all && r[j] == 1;
        if (all) return true;
    }
    return false;
}

std::string to_string(TypeTag t) {
    switch (t) {
    case TypeTag::Type1: return "Type1";
    case TypeTag::Type2_1: return "Type2_1";
    case TypeTag::Type2_2: return "Type2_2";
    default: return "Unclassified";
    }
}

PairShape pair_shape(const Matrix& m, const std::vector<int>& R, const std::vector<int>& other) {
    PairShape ps;
    if (m.empty()) return ps;
    const std::size_t nc = m[0].size();
    for (std::size_t c = 0; c < nc; ++c) {
        bool r = false, o = false;
        for (int x : R) r = r || m[x][c];
        for (int x : other) o = o || m[x][c];
        if (r && o) ps.q.push_back(static_cast<int>(c));
    }
    bool all_r = !ps.q.empty();
    for (int c : ps.q)
        for (int x : R) all_r = all_r && m[x][c];
    if (all_r) {
        ps.tag = TypeTag::Type2_2;
        return ps;
    }
    bool part = ps.q.size() >= 2;
    for (int x : R) {
        int k = 0;
        for (int c : ps.q) k += m[x][c];
        part = part && k == 1;
    }
    if (!part) return ps;
    ps.tag = TypeTag::Type2_1;
    std::vector<std::pair<int, int>> order;   // (first R row, column)
    for (int c : ps.q) {
        int first = -1;
        for (int x : R)
            if (m[x][c]) { first = x; break; }
        order.push_back({first, c});
    }
    std::sort(order.begin(), order.end());
    ps.q.clear();
    for (auto [f, c] : order) {
        ps.q.push_back(c);
        std::vector<int> rows;
        for (int x : R)
            if (m[x][c]) rows.push_back(x);
        ps.stair.push_back(rows);
    }
    return ps;
}

TypeInfo classify_cqss_type(const Matrix& m, const SandwichedStructure& s) {
    const DualGraph& g = s.base;
    if (g.shape != DualGraph::Shape::Star || g.branches.size() != 2)
        throw std::invalid_argument("classify_cqss_type: needs a two-branch star structure");
    std::vector<std::vector<int>> rows(2);
    std::vector<int> drows;
    for (int L = 0; L < s.leaves(); ++L) {
        int v = s.attach[L];
        if (v == g.central) { drows.push_back(L); continue; }
        for (int b = 0; b < 2; ++b)
            if (std::find(g.branches[b].begin(), g.branches[b].end(), v) != g.branches[b].end()) rows[b].push_back(L);
    }
    TypeInfo info;
    if (m.empty()) return info;
    const int nc = static_cast<int>(m[0].size());
    for (int c = 0; c < nc; ++c) {
        bool all = true;
        for (const auto& r : m) all = all && r[c] == 1;
        if (all) {
            info.tag = TypeTag::Type1;
            info.p0 = c;
            return info;
        }
    }
    std::vector<TypeInfo> found;
    for (int c = 0; c < nc; ++c) {
        bool cand = true;
        for (int x : drows) cand = cand && m[x][c] == 1;
        if (!cand) continue;
        std::vector<int> zb;
        for (int b = 0; b < 2; ++b)
            for (int x : rows[b])
                if (!m[x][c]) { zb.push_back(b); break; }
        if (zb.size() != 1) continue;
        TypeInfo t;
        t.p0 = c;
        t.branch = zb[0];
        for (std::size_t j = 0; j < rows[t.branch].size(); ++j)
            if (!m[rows[t.branch][j]][c]) {
                if (t.e < 0) t.e = static_cast<int>(j) + 1;
                t.R.push_back(rows[t.branch][j]);
            }
        t.shape = pair_shape(m, t.R, rows[1 - t.branch]);
        t.tag = t.shape.tag;
        found.push_back(t);
    }
    for (TypeTag want : {TypeTag::Type2_2, TypeTag::Type2_1})
        for (const auto& t : found)
            if (t.tag == want) return t;
    if (!found.empty()) return found.front();
    return info;
}

}  // namespace pdef
