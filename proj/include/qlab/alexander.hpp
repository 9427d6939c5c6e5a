#pragma once

#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/quandle.hpp"

namespace qlab {

/// Z_n[T,T^-1]/(h(T)) before normalization. The polynomial is given by its
/// coefficient list c0 + c1*T + ... + ck*T^k; Laurent inputs are accepted
/// because low-order zero coefficients are divided out.
struct AlexanderSpec {
    int modulus = 0;
    std::vector<long long> poly;
};

namespace detail {

inline long long mod_inverse(long long a, long long n) {
    long long t = 0, nt = 1, r = n, nr = ((a % n) + n) % n;
    while (nr != 0) {
        long long q = r / nr;
        std::swap(t, nt);
        nt -= q * t;
        std::swap(r, nr);
        nr -= q * r;
    }
    if (r != 1) return -1;  // not a unit
    return ((t % n) + n) % n;
}

}  // namespace detail

/// Normalize: reduce mod n, strip high zeros, divide by T^v, make monic.
/// Requires the normalized polynomial to have unit leading and constant
/// coefficients, so that the quotient is finite and T is invertible.
inline AlexanderStructure normalize_alexander(const AlexanderSpec& spec) {
    int n = spec.modulus;
    if (n <= 0) throw std::invalid_argument("Alexander modulus must be positive");
    std::vector<long long> c;
    for (long long x : spec.poly) c.push_back(((x % n) + n) % n);
    while (!c.empty() && c.back() == 0) c.pop_back();
    size_t low = 0;
    while (low < c.size() && c[low] == 0) ++low;  // divide by a unit power of T
    c.erase(c.begin(), c.begin() + low);
    if (c.size() < 2) throw std::invalid_argument("polynomial must have degree >= 1 after normalization");

    long long lead_inv = detail::mod_inverse(c.back(), n);
    if (lead_inv < 0) throw std::invalid_argument("leading coefficient of h(T) is not a unit mod n");
    for (auto& x : c) x = (x * lead_inv) % n;
    if (detail::mod_inverse(c.front(), n) < 0)
        throw std::invalid_argument("constant coefficient of h(T) is not a unit mod n (T not invertible)");

    AlexanderStructure s;
    s.modulus = n;
    s.degree = static_cast<int>(c.size()) - 1;
    s.h.assign(c.begin(), c.end());

    int order = s.order();
    s.mul_t.resize(order);
    for (Element x = 0; x < order; ++x) {
        auto d = s.digits(x);
        long long top = d[s.degree - 1];
        std::vector<int> r(s.degree, 0);
        for (int i = s.degree - 1; i >= 1; --i) r[i] = d[i - 1];
        for (int i = 0; i < s.degree; ++i) r[i] = static_cast<int>((((r[i] - top * s.h[i]) % n) + n) % n);
        s.mul_t[x] = s.encode(r);
    }
    s.mul_t_inv.resize(order);
    for (Element x = 0; x < order; ++x) s.mul_t_inv[s.mul_t[x]] = x;
    return s;
}

/// a * b = T a + (1 - T) b on residue polynomial indices.
inline Quandle make_alexander(const AlexanderSpec& spec, std::string label = "") {
    AlexanderStructure s = normalize_alexander(spec);
    int order = s.order();
    if (label.empty()) {
        std::ostringstream os;
        os << "A:" << spec.modulus << ":";
        for (size_t i = 0; i <= static_cast<size_t>(s.degree); ++i) os << (i ? "," : "") << s.h[i];
        label = os.str();
    }
    std::vector<Element> t(static_cast<size_t>(order) * order);
    for (Element a = 0; a < order; ++a)
        for (Element b = 0; b < order; ++b)
            t[static_cast<size_t>(a) * order + b] = s.add(s.mul_t[a], s.sub(b, s.mul_t[b]));
    Quandle q(order, std::move(t), std::move(label));
    q.set_alexander(std::move(s));
    return q;
}

/// Linear case Lambda_{p,a} = Z_p[T,T^-1]/(T - a).
inline Quandle make_linear(int p, int a) {
    AlexanderSpec spec{p, {-static_cast<long long>(a), 1}};
    return make_alexander(spec, "L:" + std::to_string(p) + ":" + std::to_string(a));
}

/// Quandle spec grammar: T:<n> | R:<n> | S4 | A:<n>:<c0,c1,...,ck> | L:<p>:<a>
inline Quandle parse_quandle_spec(const std::string& spec) {
    auto bad = [&]() { return std::invalid_argument("bad quandle spec: " + spec); };
    if (spec == "S4" || spec == "s4") return make_s4();
    auto colon = spec.find(':');
    if (colon == std::string::npos || colon == 0) throw bad();
    std::string kind = spec.substr(0, colon);
    std::string rest = spec.substr(colon + 1);
    try {
        if (kind == "T" || kind == "t") return make_trivial(std::stoi(rest));
        if (kind == "R" || kind == "r") return make_dihedral(std::stoi(rest));
        if (kind == "L" || kind == "l") {
            auto c2 = rest.find(':');
            if (c2 == std::string::npos) throw bad();
            return make_linear(std::stoi(rest.substr(0, c2)), std::stoi(rest.substr(c2 + 1)));
        }
        if (kind == "A" || kind == "a") {
            auto c2 = rest.find(':');
            if (c2 == std::string::npos) throw bad();
            int n = std::stoi(rest.substr(0, c2));
            std::vector<long long> coeffs;
            std::stringstream ss(rest.substr(c2 + 1));
            std::string tok;
            while (std::getline(ss, tok, ',')) coeffs.push_back(std::stoll(tok));
            if (coeffs.empty()) throw bad();
            return make_alexander(AlexanderSpec{n, coeffs});
        }
    } catch (const std::invalid_argument&) {
        throw;
    } catch (const std::exception&) {
        throw bad();
    }
    throw bad();
}

}  // namespace qlab
