#pragma once

#include <numeric>
#include <vector>

#include "qlab/braid.hpp"
#include "qlab/cohomology.hpp"
#include "qlab/group_ring.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

namespace detail {

inline void require_alexander(const Quandle& q, const char* what) {
    if (!q.alexander()) throw std::invalid_argument(std::string(what) + " needs an Alexander or dihedral quandle");
}

inline void require_3cocycle(const Quandle& q, const Cochain& theta) {
    if (theta.basis.degree() != 3) throw std::invalid_argument("expected a 3-cocycle");
    if (theta.basis.order() != q.order()) throw std::invalid_argument("cocycle/quandle mismatch");
}

}  // namespace detail

/// G(x,y,s) for s >= -2: G(-2) = y inv* x, G(-1) = x, G(0) = y, and
/// G(s+1) = G(s-1) * G(s). On an Alexander quandle this is the T-linear
/// recursion T G(s-1) + (1-T) G(s).
inline Element g_value(const Quandle& q, Element x, Element y, int s) {
    detail::require_alexander(q, "G recursion");
    if (s < -2) throw std::invalid_argument("G is defined for s >= -2");
    if (s == -2) return q.inv_op(y, x);
    Element prev = x, cur = y;  // G(-1), G(0)
    if (s == -1) return prev;
    for (int i = 0; i < s; ++i) {
        Element next = q.op(prev, cur);
        prev = cur;
        cur = next;
    }
    return cur;
}

/// h(x,y,0) = y and h(x,y,n) = T^-n y + (1 - T^-n) x = h(x,y,n-1) inv* x.
inline Element h_value(const Quandle& q, Element x, Element y, int n) {
    detail::require_alexander(q, "h recursion");
    if (n < 0) throw std::invalid_argument("h is defined for n >= 0");
    Element h = y;
    for (int i = 0; i < n; ++i) h = q.inv_op(h, x);
    return h;
}

/// Exponent of Theta_0^m(x,y) Theta_1^m(x,y) in the coefficient group:
///   Theta_0 = prod_{j=0}^{m-1} theta(G(-2), G(j-1), G(j))^-1
///   Theta_1 = prod_{j=0}^{m-1} theta(G(j-2), G(j-1), G(-2))^+1
inline long long theta_product_exponent(const Quandle& q, const Cochain& theta, int m, Element x, Element y) {
    std::vector<Element> g(static_cast<size_t>(m) + 2);  // g[i] = G(i - 2)
    g[0] = q.inv_op(y, x);
    g[1] = x;
    g[2] = y;
    for (int s = 1; s <= m - 1; ++s) g[static_cast<size_t>(s) + 2] = q.op(g[s], g[s + 1]);
    long long e = 0;
    for (int j = 0; j < m; ++j) {
        e -= theta.evaluate({g[0], g[static_cast<size_t>(j) + 1], g[static_cast<size_t>(j) + 2]});
        e += theta.evaluate({g[static_cast<size_t>(j)], g[static_cast<size_t>(j) + 1], g[0]});
    }
    return e;
}

inline GroupRing theta_products(const Quandle& q, const Cochain& theta, int m, Element x, Element y) {
    detail::require_3cocycle(q, theta);
    return GroupRing::monomial(theta.modulus, 1, theta_product_exponent(q, theta, m, x, y));
}

/// A pair (x,y) colors the k-twist spun T(2,m): the torus tangle must close
/// up (G(m-1) = x, G(m) = y) and the k twists must return the seam color
/// (h(x,y,k) = y).
inline bool twist_spin_admissible(const Quandle& q, Element x, Element y, int m, int k) {
    if (g_value(q, x, y, m - 1) != x || g_value(q, x, y, m) != y) return false;
    return h_value(q, x, y, k) == y;
}

/// Movie-method state sum of the k-twist spun T(2,m):
///   sum_{x,y} prod_{n=0}^{k-1} Theta_0^m(x, h(x,y,n)) Theta_1^m(x, h(x,y,n)).
inline GroupRing twist_spin_movie(const Quandle& q, const Cochain& theta, int m, int k) {
    if (m < 3) throw std::invalid_argument("twist spin needs m >= 3");
    if (k < 0) throw std::invalid_argument("twist spin needs k >= 0");
    detail::require_alexander(q, "twist-spin movie");
    detail::require_3cocycle(q, theta);
    if (!is_cocycle(q, theta)) throw std::invalid_argument("cochain is not a 3-cocycle");
    GroupRing total(theta.modulus);
    for (Element x = 0; x < q.order(); ++x)
        for (Element y = 0; y < q.order(); ++y) {
            if (!twist_spin_admissible(q, x, y, m, k)) continue;
            long long e = 0;
            Element h = y;
            for (int n = 0; n < k; ++n) {
                e += theta_product_exponent(q, theta, m, x, h);
                h = q.inv_op(h, x);
            }
            total.add_term(e, 1);
        }
    return total;
}

/// Surface-braid (chart) state sum of the 2-twist spun T(2,m), by the
/// eight-product formula over pairs (y1,y2) constrained by
/// y2 * (y1 y2)^n = y1 (m = 2n+1) or y1 * (y2 y1)^n = y1 (m = 2n),
/// together with y1 * y2^2 = y1. Word exponents may be negative.
inline GroupRing twist_spin_chart(const Quandle& q, const Cochain& theta, int m) {
    if (m < 3) throw std::invalid_argument("chart method needs m >= 3");
    detail::require_3cocycle(q, theta);
    if (!is_cocycle(q, theta)) throw std::invalid_argument("cochain is not a 3-cocycle");
    bool odd = m % 2 == 1;
    int n = odd ? (m - 1) / 2 : m / 2;
    int lim_a = odd ? n : n - 1;

    GroupRing total(theta.modulus);
    for (Element y1 = 0; y1 < q.order(); ++y1)
        for (Element y2 = 0; y2 < q.order(); ++y2) {
            Element closure = odd ? q.act_word(y2, word_pow({y1, y2}, n)) : q.act_word(y1, word_pow({y2, y1}, n));
            if (closure != y1) continue;
            if (q.op(q.op(y1, y2), y2) != y1) continue;

            auto a12 = [&](int pow, int extra_inv_y1) {
                GroupWord w = word_pow({y1, y2}, pow);
                for (int i = 0; i < extra_inv_y1; ++i) w.push_back({y1, -1});
                return q.act_word(y2, w);
            };
            auto a21 = [&](int pow, int extra_inv_y1, bool then_y2) {
                GroupWord w = word_pow({y2, y1}, pow);
                for (int i = 0; i < extra_inv_y1; ++i) w.push_back({y1, -1});
                if (then_y2) w.push_back({y2, 1});
                return q.act_word(y1, w);
            };
            Element y1y2inv = q.inv_op(q.op(y1, y2), y1);  // y1 * y2 y1^-1

            long long e = 0;
            for (int k = 1; k <= lim_a; ++k) e -= theta.evaluate({a12(k - 1, 1), a21(k, 2, false), y1});
            for (int k = 1; k <= n - 1; ++k) e -= theta.evaluate({a21(k, 2, false), a12(k, 1), y1});
            for (int k = 1; k <= n; ++k) e -= theta.evaluate({a21(k - 3, 0, true), a12(k - 2, 0), y1y2inv});
            for (int k = 1; k <= lim_a; ++k) e -= theta.evaluate({a12(k - 2, 0), a21(k - 2, 0, true), y1y2inv});
            for (int k = 1; k <= n; ++k) e += theta.evaluate({y1y2inv, a12(k - 2, 0), a21(k - 2, 0, true)});
            for (int k = 1; k <= lim_a; ++k) e += theta.evaluate({y1y2inv, a21(k - 2, 0, true), a12(k - 1, 0)});
            for (int k = 1; k <= lim_a; ++k) e += theta.evaluate({y1, a12(k - 1, 0), a21(k - 1, 0, true)});
            for (int k = 1; k <= n - 1; ++k) e += theta.evaluate({y1, a21(k - 1, 0, true), a12(k, 0)});
            total.add_term(e, 1);
        }
    return total;
}

/// Deform-spun figure-8 state sum over the 16 colorings (a, b) of S4,
/// with d the unique element satisfying a = d*b, and c = b*d:
///   theta(b,c,a) theta(c,b,c) theta(b,a,b) theta(a,b,c)
///   theta(c,d,a)^-1 theta(d,c,d)^-1 theta(b,c,b)^-1 theta(c,b,d)^-1.
inline GroupRing deform_spun_fig8(const Cochain& theta) {
    Quandle s4 = make_s4();
    detail::require_3cocycle(s4, theta);
    if (!is_cocycle(s4, theta)) throw std::invalid_argument("cochain is not a 3-cocycle over S4");
    GroupRing total(theta.modulus);
    for (Element a = 0; a < 4; ++a)
        for (Element b = 0; b < 4; ++b) {
            Element d = s4.inv_op(a, b);
            Element c = s4.op(b, d);
            long long e = 0;
            e += theta.evaluate({b, c, a});
            e += theta.evaluate({c, b, c});
            e += theta.evaluate({b, a, b});
            e += theta.evaluate({a, b, c});
            e -= theta.evaluate({c, d, a});
            e -= theta.evaluate({d, c, d});
            e -= theta.evaluate({b, c, b});
            e -= theta.evaluate({c, b, d});
            total.add_term(e, 1);
        }
    return total;
}

/// The invariant of the orientation-reversed mirror image.
inline GroupRing conjugate_symmetry(const GroupRing& value) { return conjugate(value); }

/// Multiplicative order of T on an Alexander quandle.
inline long long t_order(const Quandle& q) {
    detail::require_alexander(q, "T order");
    const auto& mul = q.alexander()->mul_t;
    long long ord = 1;
    std::vector<bool> seen(mul.size(), false);
    for (size_t i = 0; i < mul.size(); ++i) {
        if (seen[i]) continue;
        long long len = 0;
        size_t j = i;
        while (!seen[j]) {
            seen[j] = true;
            j = static_cast<size_t>(mul[j]);
            ++len;
        }
        ord = std::lcm(ord, len);
    }
    return ord;
}

struct TwistSpinPeriodReport {
    long long period = 0;
    bool periodicity_ok = false;
    bool colorability_ok = true;
    std::vector<std::string> values;  // invariants for k_base .. k_base + period
};

/// Checks the k-periodicity of the twist-spin invariant (period = order(T)
/// times the coefficient order) and, over odd dihedral quandles, that odd
/// twist counts admit only constant colorings.
inline TwistSpinPeriodReport twist_spin_period_check(const Quandle& q, const Cochain& theta, int m, int k_base) {
    detail::require_alexander(q, "twist-spin period check");
    TwistSpinPeriodReport r;
    long long n = t_order(q);
    r.period = theta.modulus > 0 ? n * theta.modulus : n;
    GroupRing base = twist_spin_movie(q, theta, m, k_base);
    GroupRing shifted = twist_spin_movie(q, theta, m, k_base + static_cast<int>(r.period));
    r.periodicity_ok = base == shifted;
    r.values.push_back(base.to_string());
    r.values.push_back(shifted.to_string());

    if (q.order() % 2 == 1 && n == 2) {  // odd dihedral case
        for (int k = k_base; k < k_base + 2; ++k) {
            size_t admissible = 0;
            for (Element x = 0; x < q.order(); ++x)
                for (Element y = 0; y < q.order(); ++y)
                    if (twist_spin_admissible(q, x, y, m, k)) ++admissible;
            bool nontrivial = admissible > static_cast<size_t>(q.order());
            bool expect = (m % q.order() == 0) && (k % 2 == 0);
            if (nontrivial != expect) r.colorability_ok = false;
        }
    }
    return r;
}

}  // namespace qlab
