#include "pdef/classt.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace pdef {

namespace {

enum class Move { Left, Right };   // Left: [2, a_1, ..., a_r + 1]; Right: [a_1 + 1, ..., a_r, 2]

bool is_base_t(const Chain& c) {
    if (c == Chain{4}) return true;
    if (c.size() < 2 || c.front() != 3 || c.back() != 3) return false;
    return std::all_of(c.begin() + 1, c.end() - 1, [](int x) { return x == 2; });
}

// Undo extension moves; returns the base and the moves applied to it, in order.
std::optional<std::pair<Chain, std::vector<Move>>> reduce(Chain c) {
    std::vector<Move> moves;
    while (!is_base_t(c)) {
        if (c.size() < 2) return std::nullopt;
        if (c.front() == 2 && c.back() >= 3) {
            c.erase(c.begin());
            c.back() -= 1;
            moves.push_back(Move::Left);
        } else if (c.back() == 2 && c.front() >= 3) {
            c.pop_back();
            c.front() -= 1;
            moves.push_back(Move::Right);
        } else {
            return std::nullopt;
        }
    }
    std::reverse(moves.begin(), moves.end());
    return std::make_pair(c, moves);
}

Chain extend(const Chain& c, Move m) {
    Chain out;
    if (m == Move::Left) {
        out.push_back(2);
        out.insert(out.end(), c.begin(), c.end());
        out.back() += 1;
    } else {
        out = c;
        out.front() += 1;
        out.push_back(2);
    }
    return out;
}

}  // namespace

std::optional<TCertificate> is_class_t(const Chain& chain) {
    for (int a : chain)
        if (a < 2) return std::nullopt;
    auto red = reduce(chain);
    if (!red) return std::nullopt;
    TCertificate cert;
    cert.chain = chain;
    const Chain& base = red->first;
    cert.d = base == Chain{4} ? 1 : static_cast<long long>(base.size());
    cert.derivation.push_back(base);
    for (Move m : red->second) cert.derivation.push_back(extend(cert.derivation.back(), m));
    ExtRational v = hj_eval(chain);
    BigInt N = numerator(v.value), Q = denominator(v.value);
    if (N % cert.d != 0) throw std::logic_error("is_class_t: value is not d n^2");
    BigInt n2 = N / cert.d;
    BigInt n = sqrt(n2);
    if (n * n != n2 || (Q + 1) % (cert.d * n) != 0) throw std::logic_error("is_class_t: value is not d n^2 / (dna-1)");
    cert.n = n.convert_to<long long>();
    cert.a = ((Q + 1) / (cert.d * n)).convert_to<long long>();
    return cert;
}

bool is_class_t_chain(const Chain& chain) { return reduce(chain).has_value(); }

bool is_wahl(const Chain& chain) {
    auto red = reduce(chain);
    return red && red->first == Chain{4};
}

std::vector<Chain> enumerate_wahl(int max_len) {
    std::vector<Chain> out;
    if (max_len < 1) return out;
    std::vector<Chain> layer{{4}};
    for (int len = 1; len <= max_len; ++len) {
        out.insert(out.end(), layer.begin(), layer.end());
        std::set<Chain> next;
        for (const auto& c : layer) {
            next.insert(extend(c, Move::Left));
            next.insert(extend(c, Move::Right));
        }
        layer.assign(next.begin(), next.end());
    }
    return out;
}

std::vector<long long> delta_sequence(const Chain& wahl) {
    auto red = reduce(wahl);
    if (!red || red->first != Chain{4}) throw std::invalid_argument("delta_sequence: not a Wahl chain");
    std::vector<long long> d{1};
    for (Move m : red->second) {
        long long s = d.front() + d.back();
        if (m == Move::Left) d.insert(d.begin(), s);
        else d.push_back(s);
    }
    return d;
}

std::vector<Rational> discrepancies(const Chain& wahl) {
    auto d = delta_sequence(wahl);
    Rational den = d.front() + d.back();
    std::vector<Rational> m;
    for (long long x : d) m.push_back(Rational(-1) + Rational(x) / den);
    return m;
}

std::vector<Rational> discrepancies_adjunction(const Chain& chain) {
    const std::size_t r = chain.size();
    if (r == 0) return {};
    // tridiagonal: sub/super diagonal 1, diagonal -a_i, rhs a_i - 2
    std::vector<Rational> diag(r), rhs(r);
    for (std::size_t i = 0; i < r; ++i) {
        diag[i] = -chain[i];
        rhs[i] = chain[i] - 2;
    }
    for (std::size_t i = 1; i < r; ++i) {
        if (diag[i - 1] == 0) throw std::logic_error("discrepancies_adjunction: singular form");
        Rational f = Rational(1) / diag[i - 1];
        diag[i] -= f;
        rhs[i] -= f * rhs[i - 1];
    }
    if (diag[r - 1] == 0) throw std::logic_error("discrepancies_adjunction: singular form");
    std::vector<Rational> m(r);
    m[r - 1] = rhs[r - 1] / diag[r - 1];
    for (std::size_t i = r - 1; i-- > 0;) m[i] = (rhs[i] - m[i + 1]) / diag[i];
    return m;
}

AmpleReport ample_check(const PResolution& res) {
    AmpleReport rep;
    const DualGraph& g = res.graph;
    std::vector<int> mk(g.size(), -1);
    std::vector<Rational> m(g.size());
    for (std::size_t i = 0; i < res.marks.size(); ++i) {
        const auto& path = res.marks[i];
        Chain w;
        for (std::size_t j = 0; j < path.size(); ++j) {
            int v = path[j];
            if (mk[v] >= 0) { rep.error = "overlapping marks at vertex " + std::to_string(v); return rep; }
            mk[v] = static_cast<int>(i);
            if (j && !g.adjacent(path[j - 1], v)) { rep.error = "mark is not a path"; return rep; }
            w.push_back(-g.weight[v]);
        }
        if (!is_class_t_chain(w)) { rep.error = "mark " + std::to_string(i) + " is not of class T"; return rep; }
        auto ds = discrepancies_adjunction(w);
        for (std::size_t j = 0; j < path.size(); ++j) m[path[j]] = ds[j];
    }
    for (auto [a, b] : g.edges)
        if (mk[a] >= 0 && mk[b] >= 0 && mk[a] != mk[b]) {
            rep.error = "marks " + std::to_string(mk[a]) + " and " + std::to_string(mk[b]) + " meet";
            return rep;
        }
    rep.ample = true;
    for (int v = 0; v < g.size(); ++v) {
        if (mk[v] >= 0) continue;
        CurveAmpleness c;
        c.vertex = v;
        c.k_dot = Rational(-g.weight[v] - 2);
        bool near_mark = false;
        for (int u : g.neighbors(v))
            if (mk[u] >= 0) { c.k_dot -= m[u]; near_mark = true; }
        c.exempt = g.weight[v] == -2 && !near_mark;
        c.ok = c.exempt || c.k_dot > 0;
        rep.ample = rep.ample && c.ok;
        rep.curves.push_back(c);
    }
    return rep;
}

std::vector<BoundResult> bound_checks(const Chain& wahl) {
    auto m = discrepancies(wahl);
    const int r = static_cast<int>(wahl.size());
    std::vector<BoundResult> out;

    BoundResult head;
    head.lemma = "head";
    head.index = 0;
    head.value = m[0];
    head.bound = Rational(2 - wahl[0], wahl[0] - 1 == 0 ? 1 : wahl[0] - 1);
    head.applicable = wahl[0] >= 3 && r >= 2;
    head.holds = head.value < head.bound;
    out.push_back(head);

    BoundResult tail;
    tail.lemma = "head-tail";
    tail.index = r - 1;
    tail.value = m[r - 1];
    tail.bound = -(m[0] + 1);
    tail.strict = false;
    tail.applicable = head.applicable;
    tail.holds = tail.value == tail.bound;
    out.push_back(tail);

    int n = 0;
    while (n < r && wahl[n] == 2) ++n;
    BoundResult lead;
    lead.lemma = "leading-twos";
    lead.index = 0;
    lead.value = m[0];
    lead.bound = Rational(-1, n + 2);
    lead.applicable = n >= 1 && n + 1 < r && wahl[n] >= 3;
    lead.holds = lead.value < lead.bound;
    out.push_back(lead);

    for (int t = 1; t + 1 < r; ++t) {
        if (wahl[t] < 5) continue;
        BoundResult mid;
        mid.lemma = "middle";
        mid.index = t;
        mid.value = m[t];
        mid.bound = Rational(1 - wahl[t], wahl[t]);
        mid.strict = false;
        mid.applicable = true;
        mid.holds = mid.value <= mid.bound;
        out.push_back(mid);
    }
    return out;
}

}  // namespace pdef
