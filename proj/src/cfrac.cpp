#include "pdef/cfrac.hpp"

#include <algorithm>
#include <functional>
#include <limits>
#include <stdexcept>

namespace pdef {

std::string to_string(const ExtRational& v) {
    switch (v.kind) {
    case ExtRational::Kind::Infinity: return "inf";
    case ExtRational::Kind::Undefined: return "undefined";
    default: return to_string(v.value);
    }
}

Chain hj_expand(const BigInt& n0, const BigInt& q0) {
    if (q0 <= 0) throw std::invalid_argument("hj_expand: q must be positive");
    if (q0 >= n0) throw std::invalid_argument("hj_expand: q must be smaller than n");
    if (gcd(n0, q0) != 1) throw std::invalid_argument("hj_expand: n and q must be coprime");
    Chain out;
    BigInt n = n0, q = q0;
    while (q != 0) {
        BigInt a = (n + q - 1) / q;
        if (a > std::numeric_limits<int>::max())
            throw std::overflow_error("hj_expand: entry does not fit in int");
        out.push_back(a.convert_to<int>());
        BigInt r = a * q - n;
        n = q;
        q = r;
    }
    return out;
}

ExtRational hj_eval(const std::vector<int>& cf) {
    ExtRational v;
    v.kind = ExtRational::Kind::Infinity;  // empty tail
    for (auto it = cf.rbegin(); it != cf.rend(); ++it) {
        if (v.kind == ExtRational::Kind::Infinity) {
            v.kind = ExtRational::Kind::Finite;
            v.value = *it;
        } else if (v.value == 0) {
            v.kind = ExtRational::Kind::Infinity;
        } else {
            v.value = Rational(*it) - 1 / v.value;
        }
    }
    return v;
}

Chain hj_dual(const Chain& cf) {
    if (cf.empty()) return {};
    for (int a : cf)
        if (a < 2) throw std::invalid_argument("hj_dual: entries must be >= 2");
    ExtRational v = hj_eval(cf);
    BigInt n = numerator(v.value), q = denominator(v.value);
    if (n - q <= 0) return {};
    return hj_expand(n, n - q);
}

bool is_admissible(const std::vector<int>& k) {
    if (k.empty()) return false;
    long long pm2 = 1, pm1 = k[0];
    const std::size_t s = k.size();
    if (pm1 < 0) return false;
    if (pm1 == 0 && s > 1) return false;
    for (std::size_t j = 1; j < s; ++j) {
        long long p = k[j] * pm1 - pm2;
        if (p < 0) return false;
        if (p == 0 && j + 1 < s) return false;
        pm2 = pm1;
        pm1 = p;
    }
    return true;
}

std::set<std::vector<int>> enumerate_K(int s) {
    std::set<std::vector<int>> cur;
    if (s < 2) return cur;
    cur.insert({1, 1});
    for (int len = 3; len <= s; ++len) {
        std::set<std::vector<int>> nxt;
        for (const auto& k : cur) {
            // blow up the edge at either end of the polygon side N
            auto a = k;
            a.back() += 1;
            a.push_back(1);
            nxt.insert(a);
            std::vector<int> b{1};
            b.insert(b.end(), k.begin(), k.end());
            b[1] += 1;
            nxt.insert(b);
            for (std::size_t i = 0; i + 1 < k.size(); ++i) {
                std::vector<int> c(k.begin(), k.begin() + i + 1);
                c.back() += 1;
                c.push_back(1);
                c.push_back(k[i + 1] + 1);
                c.insert(c.end(), k.begin() + i + 2, k.end());
                nxt.insert(c);
            }
        }
        cur = std::move(nxt);
    }
    return cur;
}

std::vector<std::vector<int>> enumerate_K_bounded(const Chain& b) {
    std::vector<std::vector<int>> out;
    const int s = static_cast<int>(b.size());
    if (s < 2) return out;
    std::vector<int> k(s, 0);
    // at least one triangle of the polygon contains N, so the sum is at most 3s-4
    const int total = 3 * s - 4;
    std::function<void(int, long long, long long, int)> dfs = [&](int j, long long pm2, long long pm1, int tot) {
        if (j == s - 1) {
            if (pm2 % pm1 != 0) return;
            long long ks = pm2 / pm1;
            if (ks >= 1 && ks <= b[j] && tot + ks <= total) {
                k[j] = static_cast<int>(ks);
                out.push_back(k);
            }
            return;
        }
        for (int v = 1; v <= std::min(b[j], s - 1); ++v) {
            long long p = v * pm1 - pm2;
            if (p <= 0) continue;
            if (tot + v + (s - 1 - j) > total) break;
            k[j] = v;
            dfs(j + 1, pm1, p, tot + v);
        }
    };
    dfs(0, 0, 1, 0);
    std::sort(out.begin(), out.end());
    return out;
}

std::uint64_t catalan(int n) {
    std::uint64_t c = 1;
    for (int i = 0; i < n; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
    return c;
}

}  // namespace pdef
