#include "pdef/io.hpp"

#include <set>
#include <sstream>

namespace pdef {

json to_json(const Matrix& m) {
    json j = json::array();
    for (const auto& row : m) j.push_back(row);
    return j;
}

json to_json(const PResolution& p) {
    json e = json::array();
    for (auto [a, b] : p.graph.edges) e.push_back({a, b});
    return {{"weights", p.graph.weight}, {"edges", e}, {"marks", p.marks}, {"origin", p.origin}};
}

json to_json(const ChainPResolution& p) {
    json m = json::array();
    for (auto [a, e] : p.marks) m.push_back({a, e});
    return {{"chain", to_string(p)}, {"weights", p.weight}, {"origin", p.origin}, {"marks", m}};
}

json to_json(const Triangulation& t) {
    json j = json::array();
    for (const auto& tri : t.triangles) {
        json v = json::array();
        for (int x : tri) v.push_back(x == t.s + 1 ? json("N") : json(x));
        j.push_back(v);
    }
    return j;
}

json to_json(const PResolutionCQSS& p) {
    json j{{"n", p.n}, {"q", p.q}, {"chain", p.chain}, {"b", p.b}, {"k", p.k},
           {"triangles", to_json(p.theta)}, {"matrix", to_json(p.matrix)}};
    if (p.minimal_only) j["minimal_only"] = true;
    return j;
}

json to_json(const MMPStep& s) {
    json j{{"kind", s.kind == MMPStep::Kind::Contract ? "contract" : "flip"}, {"curve", s.curve}};
    if (s.kind == MMPStep::Kind::Flip) {
        j["mark"] = s.mark;
        j["pivot"] = s.pivot;
    } else {
        j["column"] = s.column;
    }
    j["measure"] = s.measure;
    return j;
}

json to_json(const CaseTag& t) {
    json j{{"case", to_string(t.kind)}};
    if (t.p0 >= 0) j["p0"] = t.p0;
    if (t.kind == CaseKind::A) {
        json b = json::array();
        for (const auto& m : t.blocks) b.push_back(to_json(m));
        j["blocks"] = b;
    }
    if (t.kind == CaseKind::B1 || t.kind == CaseKind::B2) {
        j["branch"] = t.branch + 1;
        j["e"] = t.e;
        j["R"] = t.R;
        json types = json::object(), g = json::object();
        for (std::size_t i = 0; i < t.types.size(); ++i) {
            if (static_cast<int>(i) == t.branch) continue;
            types[std::to_string(i + 1)] = to_string(t.types[i]);
            if (t.g[i] >= 0) g[std::to_string(i + 1)] = t.g[i];
        }
        j["types"] = types;
        j["g"] = g;
        if (t.partner >= 0) {
            j["partner"] = t.partner + 1;
            j["g_partner"] = t.g_partner;
            j["stair"] = t.stair;
        }
        j["s"] = t.s;
        std::vector<int> perm;
        for (int p : t.permutation) perm.push_back(p + 1);
        j["branch_order"] = perm;
    }
    if (!t.candidates.empty()) {
        json c = json::array();
        for (const auto& [p0, bs] : t.candidates) {
            std::vector<int> one;
            for (int b : bs) one.push_back(b + 1);
            c.push_back({{"p0", p0}, {"zero_branches", one}});
        }
        j["candidates"] = c;
    }
    if (!t.message.empty()) j["message"] = t.message;
    return j;
}

json to_json(const AmpleReport& a) {
    json c = json::array();
    for (const auto& x : a.curves)
        c.push_back({{"vertex", x.vertex}, {"K.E", to_string(x.k_dot)}, {"exempt", x.exempt}, {"ok", x.ok}});
    json j{{"ample", a.ample}, {"curves", c}};
    if (!a.error.empty()) j["error"] = a.error;
    return j;
}

json to_json(const StarPResolution& r) {
    return {{"classification", to_json(r.tag)},
            {"presolution", to_json(r.presolution)},
            {"provenance", r.provenance},
            {"mresolution", to_json(r.mresolution)},
            {"attach", r.attach},
            {"ample", to_json(r.ample)}};
}

json to_json(const SurjectivityReport& r) {
    json entries = json::array();
    for (const auto& e : r.entries) {
        json m = json::array();
        for (const auto& c : e.matrix) m.push_back(c);
        json x{{"columns", m}, {"case", to_string(e.tag.kind)}, {"status", e.status}};
        if (!e.detail.empty()) x["detail"] = e.detail;
        entries.push_back(x);
    }
    json tally = json::object();
    for (const auto& [k, v] : r.tally) tally[k] = v;
    return {{"star", to_string(r.x)}, {"total", r.total}, {"verified", r.verified},
            {"full_coverage", r.full_coverage()}, {"tally", tally}, {"entries", entries}};
}

std::string matrix_csv(const Matrix& m) {
    std::ostringstream os;
    for (const auto& row : m) {
        for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
        os << '\n';
    }
    return os.str();
}

std::string matrix_table(const Matrix& m, const std::vector<std::string>& labels) {
    std::size_t w = 0;
    for (const auto& l : labels) w = std::max(w, l.size());
    std::ostringstream os;
    for (std::size_t r = 0; r < m.size(); ++r) {
        if (!labels.empty()) os << labels[r] << std::string(w - labels[r].size() + 1, ' ') << "| ";
        for (std::size_t c = 0; c < m[r].size(); ++c) os << (c ? " " : "") << m[r][c];
        os << '\n';
    }
    return os.str();
}

std::string to_dot(const PResolution& p, const std::vector<int>& attach, const std::string& name) {
    auto mk = p.mark_of();
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v = 0; v < p.graph.size(); ++v) {
        os << "  v" << v << " [label=\"" << p.graph.weight[v] << "\", shape=" << (mk[v] >= 0 ? "box" : "circle");
        if (mk[v] >= 0) os << ", group=m" << mk[v];
        os << "];\n";
    }
    for (auto [a, b] : p.graph.edges) os << "  v" << a << " -- v" << b << ";\n";
    for (std::size_t i = 0; i < attach.size(); ++i)
        os << "  l" << i << " [label=\"\", shape=point];\n  l" << i << " -- v" << attach[i] << " [style=dashed];\n";
    os << "}\n";
    return os.str();
}

std::string to_dot(const MMPSnapshot& s, const std::string& name) {
    std::set<int> marked;
    for (const auto& m : s.marks) marked.insert(m.begin(), m.end());
    std::set<int> alive(s.vertices.begin(), s.vertices.end());
    std::ostringstream os;
    os << "graph " << name << " {\n";
    for (int v : s.vertices)
        os << "  v" << v << " [label=\"" << s.weight[v] << "\", shape=" << (marked.count(v) ? "box" : "circle") << "];\n";
    for (auto [a, b, k] : s.edges) {
        os << "  v" << a << " -- v" << b;
        if (k > 1) os << " [label=\"" << k << "\"]";
        os << ";\n";
    }
    // a decorated curve whose connector is gone hangs on the curves it degenerated onto
    for (std::size_t i = 0; i < s.ledger.size(); ++i) {
        bool has = false;
        for (const auto& [v, c] : s.ledger[i])
            if (c != 0 && alive.count(v)) {
                if (!has) os << "  l" << i << " [label=\"" << i + 1 << "\", shape=point];\n";
                has = true;
                os << "  l" << i << " -- v" << v << " [style=bold, label=\"" << to_string(c) << "\"];\n";
            }
    }
    os << "}\n";
    return os.str();
}

namespace {

std::vector<int> int_list(const json& j, const char* what) {
    if (!j.is_array()) throw InputError(std::string(what) + ": expected an array of integers");
    std::vector<int> out;
    for (const auto& x : j) {
        if (!x.is_number_integer()) throw InputError(std::string(what) + ": expected an array of integers");
        out.push_back(x.get<int>());
    }
    return out;
}

}  // namespace

Matrix matrix_from_json(const json& j) {
    if (!j.is_array() || j.empty()) throw InputError("matrix: expected a non-empty array of rows");
    Matrix m;
    for (const auto& row : j) {
        auto r = int_list(row, "matrix row");
        for (int v : r)
            if (v != 0 && v != 1) throw InputError("matrix: entries must be 0 or 1");
        if (!m.empty() && r.size() != m[0].size()) throw InputError("matrix: ragged rows");
        m.push_back(r);
    }
    return m;
}

StarSingularity star_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("branches")) throw InputError("star: need d and branches");
    StarSingularity x;
    x.d = j["d"].get<int>();
    for (const auto& b : j["branches"]) {
        auto c = int_list(b, "branch");
        if (c.empty()) throw InputError("branch: empty");
        for (int a : c)
            if (a < 2) throw InputError("branch: entries must be >= 2");
        x.branches.push_back(c);
    }
    if (x.branches.empty()) throw InputError("star: no branches");
    if (x.d < x.t() + 1) throw InputError("star: need d >= t+1");
    return x;
}

ResolutionInput resolution_from_json(const json& j) {
    ResolutionInput in;
    if (!j.is_object()) throw InputError("resolution: expected an object");
    if (j.contains("chain")) {
        auto c = int_list(j["chain"], "chain");
        for (int a : c)
            if (a < 1) throw InputError("chain: entries must be positive");
        in.res.graph = chain_graph(c);
        auto counts = j.contains("counts") ? int_list(j["counts"], "counts") : std::vector<int>{};
        if (!counts.empty() && counts.size() != c.size()) throw InputError("counts: one entry per chain curve");
        for (std::size_t v = 0; v < counts.size(); ++v)
            for (int k = 0; k < counts[v]; ++k) in.attach.push_back(static_cast<int>(v));
    } else if (j.contains("weights")) {
        for (int w : int_list(j["weights"], "weights")) in.res.graph.add_vertex(w);
        if (j.contains("edges"))
            for (const auto& e : j["edges"]) {
                auto uv = int_list(e, "edge");
                if (uv.size() != 2 || uv[0] == uv[1] || uv[0] < 0 || uv[1] < 0 || uv[0] >= in.res.graph.size() ||
                    uv[1] >= in.res.graph.size())
                    throw InputError("edge: bad endpoints");
                in.res.graph.add_edge(uv[0], uv[1]);
            }
        if (j.contains("attach")) in.attach = int_list(j["attach"], "attach");
    } else {
        throw InputError("resolution: need chain or weights");
    }
    const int n = in.res.graph.size();
    for (int a : in.attach)
        if (a < 0 || a >= n) throw InputError("attach: vertex out of range");
    if (j.contains("marks"))
        for (const auto& m : j["marks"]) {
            auto path = int_list(m, "mark");
            for (int v : path)
                if (v < 0 || v >= n) throw InputError("mark: vertex out of range");
            in.res.marks.push_back(path);
        }
    in.res.origin.resize(n);
    for (int v = 0; v < n; ++v) in.res.origin[v] = v;
    return in;
}

}  // namespace pdef
