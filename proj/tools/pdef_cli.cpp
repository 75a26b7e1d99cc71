#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "pdef/io.hpp"

using namespace pdef;

namespace {

enum Exit { Ok = 0, Invalid = 2, Violation = 3, Miss = 4 };

struct Options {
    std::string format = "table";
    int depth = 3;
    int budget = 100000;
    std::optional<unsigned> seed;
};

json read_json(const std::string& path) {
    try {
        if (path == "-") return json::parse(std::cin);
        std::ifstream in(path);
        if (!in) throw InputError("cannot open " + path);
        return json::parse(in);
    } catch (const json::exception& e) {
        throw InputError(std::string("bad JSON: ") + e.what());
    }
}

std::string chain_text(const std::vector<int>& c) {
    std::string s = "[";
    for (std::size_t i = 0; i < c.size(); ++i) s += (i ? "," : "") + std::to_string(c[i]);
    return s + "]";
}

void print_matrix(const Matrix& m, const Options& o, const std::vector<std::string>& labels = {}) {
    if (o.format == "csv") std::cout << matrix_csv(m);
    else if (o.format == "json") std::cout << to_json(m).dump() << '\n';
    else std::cout << matrix_table(m, labels);
}

int cmd_cf(const std::string& op, const std::vector<std::string>& args, const Options& o) {
    std::vector<long long> v;
    for (const auto& a : args) {
        try {
            std::size_t used = 0;
            v.push_back(std::stoll(a, &used));
            if (used != a.size()) throw std::invalid_argument(a);
        } catch (const std::exception&) {
            throw InputError("not an integer: " + a);
        }
    }
    json out;
    std::string text;
    if (op == "expand") {
        if (v.size() != 2) throw InputError("cf expand takes n q");
        auto c = hj_expand(v[0], v[1]);
        out = {{"cf", c}};
        text = chain_text(c);
    } else {
        Chain c(v.begin(), v.end());
        if (op == "eval") {
            auto r = hj_eval(c);
            text = to_string(r);
            out = {{"value", text}};
        } else {
            auto d = hj_dual(c);
            out = {{"dual", d}};
            text = chain_text(d);
        }
    }
    std::cout << (o.format == "json" ? out.dump() : text) << '\n';
    return Ok;
}

int cmd_presolutions(long long n, long long q, const Options& o) {
    auto ps = p_resolutions_cqss(n, q);
    json arr = json::array();
    bool missing = false;
    for (const auto& p : ps) {
        auto r = realize_presolution(p, o.depth);
        json j = to_json(p);
        if (r) {
            j["presolution"] = to_json(r->presolution);
            if (r->via_m_resolution) j["mresolution"] = to_json(r->mresolution);
        } else {
            j["presolution"] = nullptr;
            missing = true;
        }
        arr.push_back(j);
        if (o.format == "table") {
            std::cout << "k = " << (p.minimal_only ? std::string("(minimal only)") : chain_text(p.k))
                      << "  triangles = " << to_json(p.theta).dump()
                      << "  P-resolution = " << (r ? to_string(r->presolution) : std::string("not found")) << '\n';
            std::cout << matrix_table(p.matrix);
        } else if (o.format == "dot" && r) {
            std::cout << to_dot(r->presolution.to_presolution(), {}, "P");
        } else if (o.format == "csv") {
            std::cout << matrix_csv(p.matrix) << '\n';
        }
    }
    if (o.format == "json")
        std::cout << json{{"n", n}, {"q", q}, {"cf", hj_expand(n, q)}, {"count", ps.size()}, {"presolutions", arr}}.dump(1)
                  << '\n';
    return missing ? Miss : Ok;
}

int cmd_mmp(const std::string& file, bool trace, const std::string& dot_dir, const Options& o) {
    auto in = resolution_from_json(read_json(file));
    MMPOptions mo;
    mo.budget = o.budget;
    mo.seed = o.seed;
    mo.snapshots = !dot_dir.empty();
    auto r = run_mmp(in.res, in.attach, mo);
    if (!dot_dir.empty()) {
        std::filesystem::create_directories(dot_dir);
        for (std::size_t i = 0; i < r.snapshots.size(); ++i) {
            std::ofstream f(std::filesystem::path(dot_dir) / ("step" + std::to_string(i) + ".dot"));
            f << to_dot(r.snapshots[i], "step" + std::to_string(i));
        }
    }
    if (o.format == "json") {
        json steps = json::array();
        for (const auto& s : r.trace) steps.push_back(to_json(s));
        json j{{"matrix", to_json(r.matrix)}, {"canonical", to_json(to_matrix(canonical(r.matrix), r.matrix.size()))}};
        if (trace) j["trace"] = steps;
        std::cout << j.dump(1) << '\n';
        return Ok;
    }
    if (o.format == "dot") {
        std::cout << to_dot(in.res, in.attach);
        return Ok;
    }
    print_matrix(r.matrix, o);
    if (trace)
        for (const auto& s : r.trace) std::cout << to_json(s).dump() << '\n';
    return Ok;
}

struct WhsInput {
    StarSingularity x;
    std::optional<Matrix> m;
};

WhsInput whs_input(const std::string& file) {
    json j = read_json(file);
    WhsInput in{star_from_json(j), std::nullopt};
    if (j.contains("matrix")) {
        in.m = matrix_from_json(j["matrix"]);
        if (in.m->size() != in.x.structure().attach.size()) throw InputError("matrix: one row per decorated curve");
        auto rep = verify(*in.m, combinatorial_data(in.x.structure()));
        if (!rep.ok) {
            std::string v;
            for (const auto& s : rep.violations) v += "\n  " + s;
            throw InputError("matrix is not a combinatorial incidence matrix:" + v);
        }
    }
    return in;
}

int exit_for(const CaseTag& t) {
    switch (t.kind) {
        case CaseKind::A:
        case CaseKind::B1:
        case CaseKind::B2:
        case CaseKind::OutOfScope: return Ok;
        default: return Violation;
    }
}

void print_tag(const CaseTag& t, const StarSingularity& x) {
    std::cout << "star " << to_string(x) << "\ncase " << to_string(t.kind) << '\n';
    if (t.p0 >= 0) std::cout << "p0 column " << t.p0 << '\n';
    if (t.kind == CaseKind::A)
        for (std::size_t i = 0; i < t.blocks.size(); ++i) std::cout << "block " << i + 1 << '\n' << matrix_table(t.blocks[i]);
    if (t.kind == CaseKind::B1 || t.kind == CaseKind::B2) {
        std::cout << "degenerating branch " << t.branch + 1 << ", e = " << t.e << ", s = " << t.s << '\n';
        if (t.partner >= 0) std::cout << "partner branch " << t.partner + 1 << " (Type2_1), g' = " << t.g_partner << '\n';
        for (std::size_t i = 0; i < t.g.size(); ++i)
            if (t.g[i] >= 0) std::cout << "branch " << i + 1 << " type " << to_string(t.types[i]) << ", g = " << t.g[i] << '\n';
    }
    for (const auto& [p0, bs] : t.candidates) {
        std::cout << "p0 = " << p0 << ": zeros in branches";
        for (int b : bs) std::cout << ' ' << b + 1;
        std::cout << '\n';
    }
    if (!t.message.empty()) std::cout << t.message << '\n';
}

int cmd_whs(const std::string& op, const std::string& file, const Options& o) {
    auto in = whs_input(file);
    const auto& x = in.x;
    if (op == "surjectivity") {
        auto rep = surjectivity_report(x, o.depth);
        if (o.format == "json") {
            std::cout << to_json(rep).dump(1) << '\n';
        } else {
            std::cout << "star " << to_string(x) << "\nmatrices " << rep.total << "\nverified " << rep.verified << '\n';
            for (const auto& [k, v] : rep.tally) std::cout << "  " << k << ' ' << v << '\n';
            for (const auto& e : rep.entries)
                if (e.status != "verified") {
                    std::cout << e.status << ": " << e.detail << '\n';
                    std::cout << matrix_table(to_matrix(e.matrix, x.structure().attach.size()), x.structure().labels);
                }
        }
        bool broken = false, violation = false;
        for (const auto& e : rep.entries) {
            broken = broken || e.status == "construct-failed" || e.status == "verify-failed";
            violation = violation || e.status == "unconstructible";
        }
        return broken ? Miss : violation ? Violation : Ok;
    }
    if (!in.m) throw InputError("whs " + op + " needs a matrix");
    const Matrix& m = *in.m;
    auto tag = classify_case(m, x);
    if (op == "classify") {
        if (o.format == "json") std::cout << to_json(tag).dump(1) << '\n';
        else print_tag(tag, x);
        return exit_for(tag);
    }
    if (!tag.constructible()) {
        if (o.format == "json") std::cout << to_json(tag).dump(1) << '\n';
        else print_tag(tag, x);
        return tag.kind == CaseKind::OutOfScope ? Miss : Violation;
    }
    StarPResolution res;
    try {
        res = construct_presolution(m, x, o.depth);
    } catch (const ConstructError& e) {
        std::cerr << e.kind << ": " << e.what() << '\n';
        return Miss;
    }
    std::optional<PhiResult> phi;
    if (op == "verify") phi = verify_phi_pi(m, x, res);
    if (o.format == "json") {
        json j = to_json(res);
        if (phi) j["verify"] = {{"ok", phi->ok}, {"matrix", to_json(phi->got)}, {"row_permutation", phi->row_permutation}};
        std::cout << j.dump(1) << '\n';
    } else if (o.format == "dot") {
        std::cout << to_dot(res.presolution, {}, "P");
    } else {
        print_tag(res.tag, x);
        for (std::size_t i = 0; i < res.presolution.marks.size(); ++i) {
            std::vector<int> w;
            for (int v : res.presolution.marks[i]) w.push_back(-res.presolution.graph.weight[v]);
            std::cout << "mark " << chain_text(w) << "  from " << res.provenance[i] << '\n';
        }
        std::cout << "ample " << (res.ample.ample ? "yes" : "no") << '\n';
        if (phi) std::cout << "verify " << (phi->ok ? "ok" : "MISMATCH") << '\n';
    }
    return phi && !phi->ok ? Miss : Ok;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"P-resolutions and picture deformations of sandwiched surface singularities"};
    app.require_subcommand(1);
    app.fallthrough();
    Options o;
    long long seed = -1;
    app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"json", "dot", "csv", "table"}));
    app.add_option("--depth", o.depth, "Blow-up depth of the P-resolution search")->check(CLI::Range(0, 12));
    app.add_option("--budget", o.budget, "MMP step cap")->check(CLI::PositiveNumber);
    app.add_option("--seed", seed, "Randomize the MMP move order");

    auto* cf = app.add_subcommand("cf", "Hirzebruch-Jung continued fractions");
    cf->require_subcommand(1);
    std::vector<std::string> cf_args;
    std::string cf_op;
    for (const char* name : {"expand", "eval", "dual"}) {
        auto* s = cf->add_subcommand(name);
        s->add_option("values", cf_args)->required();
        s->callback([&cf_op, name] { cf_op = name; });
    }

    auto* pres = app.add_subcommand("presolutions", "P-resolutions of 1/n(1,q)");
    long long n = 0, q = 0;
    pres->add_option("n", n)->required();
    pres->add_option("q", q)->required();

    auto* mmp = app.add_subcommand("mmp", "Run the MMP on a resolution file");
    std::string file;
    bool trace = false;
    std::string dot_dir;
    mmp->add_option("file", file, "JSON file, - for stdin")->required();
    mmp->add_flag("--trace", trace, "Print the step trace");
    mmp->add_option("--dot-dir", dot_dir, "Write one DOT file per step");

    auto* whs = app.add_subcommand("whs", "Star-shaped singularities");
    whs->require_subcommand(1);
    std::string whs_op;
    for (const char* name : {"classify", "construct", "verify", "surjectivity"}) {
        auto* s = whs->add_subcommand(name);
        s->add_option("file", file, "JSON file, - for stdin")->required();
        s->callback([&whs_op, name] { whs_op = name; });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? Ok : Invalid;
    }
    if (seed >= 0) o.seed = static_cast<unsigned>(seed);

    try {
        if (cf->parsed()) return cmd_cf(cf_op, cf_args, o);
        if (pres->parsed()) return cmd_presolutions(n, q, o);
        if (mmp->parsed()) return cmd_mmp(file, trace, dot_dir, o);
        if (whs->parsed()) return cmd_whs(whs_op, file, o);
    } catch (const InputError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << '\n';
        return Invalid;
    } catch (const MMPError& e) {
        std::cerr << "mmp: " << e.what() << '\n';
        return Miss;
    }
    return Invalid;
}
