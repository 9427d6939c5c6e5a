#pragma once

#include <numeric>
#include <string>
#include <vector>

#include "qlab/braid.hpp"

namespace qlab {

/// T(n,k) as the closure of (s_{n-1} s_{n-2} ... s_1)^k on n strands.
inline BraidWord torus_braid(int n, int k) {
    if (n < 2) throw std::invalid_argument("torus braid needs n >= 2");
    if (k < 0) throw std::invalid_argument("torus braid needs k >= 0");
    std::vector<int> letters;
    letters.reserve(static_cast<size_t>(k) * (n - 1));
    for (int rep = 0; rep < k; ++rep)
        for (int i = n - 1; i >= 1; --i) letters.push_back(i);
    return BraidWord(n, std::move(letters));
}

/// One block of the torus braid: [a1,...,an] -> [an, a1*an, ..., a_{n-1}*an].
inline ColorVector color_block_map(const Quandle& q, const ColorVector& v) {
    int n = static_cast<int>(v.size());
    ColorVector r(n);
    r[0] = v[n - 1];
    for (int i = 1; i < n; ++i) r[i] = q.op(v[i - 1], v[n - 1]);
    return r;
}

struct PeriodReport {
    std::string quandle;
    int strands = 0;
    long long cap = 0;
    long long period = 0;  // 0 when the cap was exceeded
    bool exceeded() const { return period == 0; }
};

/// Least p with the block map p-fold iterated equal to the identity on all
/// color vectors, computed as the lcm of the cycle lengths of the block
/// permutation. Reported as exceeding the cap when larger.
inline PeriodReport color_period(const Quandle& q, int n, long long cap = 0) {
    if (n < 2) throw std::invalid_argument("color period needs n >= 2");
    if (cap <= 0) cap = 4LL * n * q.order() * q.order();
    size_t states = 1;
    for (int i = 0; i < n; ++i) states *= static_cast<size_t>(q.order());

    auto decode = [&](size_t idx) {
        ColorVector v(n);
        for (int i = n - 1; i >= 0; --i) {
            v[i] = static_cast<Element>(idx % q.order());
            idx /= q.order();
        }
        return v;
    };
    auto encode = [&](const ColorVector& v) {
        size_t idx = 0;
        for (int i = 0; i < n; ++i) idx = idx * q.order() + static_cast<size_t>(v[i]);
        return idx;
    };

    std::vector<size_t> perm(states);
    for (size_t i = 0; i < states; ++i) perm[i] = encode(color_block_map(q, decode(i)));

    long long period = 1;
    std::vector<bool> seen(states, false);
    for (size_t i = 0; i < states; ++i) {
        if (seen[i]) continue;
        long long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = perm[j];
            ++len;
        }
        period = std::lcm(period, len);
        if (period > cap) return {q.label(), n, cap, 0};
    }
    return {q.label(), n, cap, period};
}

/// State sum of T(n,k). For large k the exponent is reduced modulo
/// period * coefficient order first; both routes agree.
inline GroupRing torus_invariant(const Quandle& q, const Cochain& phi, int n, int k, bool reduce = true) {
    if (reduce && phi.modulus > 0) {
        PeriodReport p = color_period(q, n);
        if (!p.exceeded()) {
            long long full = p.period * phi.modulus;
            if (k > full) k = static_cast<int>(k % full + full);  // keep one extra period for safety
        }
    }
    return state_sum(q, phi, torus_braid(n, k));
}

struct PeriodCase {
    std::string quandle_spec;
    int n;
    long long expected;
    long long computed;
    bool ok;
};

/// Closed-form color periods for the quandle families with known formulas,
/// checked against the computed permutation order.
inline std::vector<PeriodCase> period_table(int n_min, int n_max, long long cap = 0) {
    std::vector<PeriodCase> out;
    auto add = [&](const std::string& spec, int n, long long expected) {
        Quandle q = parse_quandle_spec(spec);
        PeriodReport r = color_period(q, n, cap);
        out.push_back({spec, n, expected, r.period, !r.exceeded() && r.period == expected});
    };
    for (int n = n_min; n <= n_max; ++n) {
        add("L:8:3", n, n % 2 == 1 ? 2LL * n : 4LL * n);
        if (n % 4 == 2)
            add("A:3:1,0,1", n, 2LL * n);
        else if (n % 4 == 0)
            add("A:3:1,0,1", n, 3LL * n);
        else
            add("A:3:1,0,1", n, 4LL * n);
        add("A:3:-1,0,1", n, n % 2 == 1 ? 2LL * n : 3LL * n);
        add("A:2:1,0,0,1", n, n % 3 == 0 ? 2LL * n : 3LL * n);
        if (n == 2)
            add("A:2:1,1,1", n, 3);
        else
            add("A:2:1,1,1", n, n % 3 == 0 ? 2LL * n : 3LL * n);
        for (int j = 4; j <= 8; j += 2) add("R:" + std::to_string(j), n, n % 2 == 1 ? 2LL * n : (j / 2) * 1LL * n);
        add("L:8:5", n, 2LL * n);
        add("A:2:1,0,1", n, 2LL * n);
        add("L:9:4", n, 3LL * n);
        add("L:9:7", n, 3LL * n);
        add("A:3:1,1,1", n, 3LL * n);
    }
    return out;
}

}  // namespace qlab
