#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qlab {

/// Elements of a finite quandle are dense indices 0..order-1.
using Element = int;

/// A single letter of a group word acting on quandle elements:
/// exponent +1 acts by the quandle operation, -1 by its inverse.
struct WordLetter {
    Element elem;
    int exp;  // +1 or -1
};

using GroupWord = std::vector<WordLetter>;

/// Linear structure of a Z_n[T,T^-1]/(h(T)) quandle. Elements are residue
/// polynomials c0 + c1*T + ... encoded as indices sum(c_i * n^i); the tables
/// below realize the module operations on those indices.
struct AlexanderStructure {
    int modulus = 0;             // n
    int degree = 0;              // deg h
    std::vector<int> h;          // monic, coefficients in [0, n), h.size() == degree + 1
    std::vector<Element> mul_t;  // index -> index, multiplication by T
    std::vector<Element> mul_t_inv;

    int order() const {
        int o = 1;
        for (int i = 0; i < degree; ++i) o *= modulus;
        return o;
    }

    std::vector<int> digits(Element x) const {
        std::vector<int> d(degree);
        for (int i = 0; i < degree; ++i) {
            d[i] = x % modulus;
            x /= modulus;
        }
        return d;
    }

    Element encode(const std::vector<int>& d) const {
        Element x = 0;
        for (int i = degree - 1; i >= 0; --i) x = x * modulus + (((d[i] % modulus) + modulus) % modulus);
        return x;
    }

    Element add(Element a, Element b) const {
        Element r = 0, p = 1;
        for (int i = 0; i < degree; ++i) {
            r += ((a % modulus + b % modulus) % modulus) * p;
            a /= modulus;
            b /= modulus;
            p *= modulus;
        }
        return r;
    }

    Element sub(Element a, Element b) const {
        Element r = 0, p = 1;
        for (int i = 0; i < degree; ++i) {
            r += (((a % modulus - b % modulus) % modulus + modulus) % modulus) * p;
            a /= modulus;
            b /= modulus;
            p *= modulus;
        }
        return r;
    }

    Element scalar(long long c, Element a) const {
        c %= modulus;
        if (c < 0) c += modulus;
        Element r = 0, p = 1;
        for (int i = 0; i < degree; ++i) {
            r += static_cast<int>((c * (a % modulus)) % modulus) * p;
            a /= modulus;
            p *= modulus;
        }
        return r;
    }

    Element from_int(long long c) const {
        c %= modulus;
        if (c < 0) c += modulus;
        return static_cast<Element>(c);
    }
};

/// Finite quandle given by its full operation table. Immutable after
/// construction; all three axioms are checked eagerly.
class Quandle {
   public:
    Quandle(int order, std::vector<Element> table, std::string label)
        : order_(order), table_(std::move(table)), label_(std::move(label)) {
        if (order_ <= 0) throw std::invalid_argument("quandle order must be positive");
        if (table_.size() != static_cast<size_t>(order_) * order_)
            throw std::invalid_argument("operation table has wrong size");
        check_axioms();
        build_inverse();
    }

    int order() const { return order_; }
    const std::string& label() const { return label_; }

    /// a * b
    Element op(Element a, Element b) const { return table_[static_cast<size_t>(a) * order_ + b]; }

    /// The unique c with c * b == a.
    Element inv_op(Element a, Element b) const { return inv_table_[static_cast<size_t>(a) * order_ + b]; }

    Element act(Element x, const WordLetter& l) const { return l.exp > 0 ? op(x, l.elem) : inv_op(x, l.elem); }

    Element act_word(Element x, const GroupWord& w) const {
        for (const auto& l : w) x = act(x, l);
        return x;
    }

    const std::optional<AlexanderStructure>& alexander() const { return alex_; }
    void set_alexander(AlexanderStructure a) { alex_ = std::move(a); }

    bool operator==(const Quandle& other) const { return order_ == other.order_ && table_ == other.table_; }

   private:
    void check_axioms() const {
        for (Element a = 0; a < order_; ++a)
            if (op(a, a) != a) throw std::invalid_argument(label_ + ": idempotence fails at " + std::to_string(a));
        // columns must be permutations
        for (Element b = 0; b < order_; ++b) {
            std::vector<bool> seen(order_, false);
            for (Element a = 0; a < order_; ++a) {
                Element c = op(a, b);
                if (c < 0 || c >= order_ || seen[c])
                    throw std::invalid_argument(label_ + ": right translation by " + std::to_string(b) +
                                                " is not a bijection");
                seen[c] = true;
            }
        }
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b)
                for (Element c = 0; c < order_; ++c)
                    if (op(op(a, b), c) != op(op(a, c), op(b, c)))
                        throw std::invalid_argument(label_ + ": self-distributivity fails");
    }

    void build_inverse() {
        inv_table_.assign(table_.size(), 0);
        for (Element a = 0; a < order_; ++a)
            for (Element b = 0; b < order_; ++b) inv_table_[static_cast<size_t>(op(a, b)) * order_ + b] = a;
    }

    int order_;
    std::vector<Element> table_;
    std::vector<Element> inv_table_;
    std::string label_;
    std::optional<AlexanderStructure> alex_;
};

inline Quandle make_trivial(int n) {
    if (n <= 0) throw std::invalid_argument("trivial quandle needs order >= 1");
    std::vector<Element> t(static_cast<size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = a;
    Quandle q(n, std::move(t), "T:" + std::to_string(n));
    AlexanderStructure s;  // T = 1
    s.modulus = n;
    s.degree = 1;
    s.h = {(n - 1) % n, 1};
    s.mul_t.resize(n);
    std::iota(s.mul_t.begin(), s.mul_t.end(), 0);
    s.mul_t_inv = s.mul_t;
    q.set_alexander(std::move(s));
    return q;
}

/// Dihedral quandle R_n: i * j = 2j - i mod n.
inline Quandle make_dihedral(int n) {
    if (n <= 0) throw std::invalid_argument("dihedral quandle needs order >= 1");
    std::vector<Element> t(static_cast<size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = ((2 * b - a) % n + n) % n;
    Quandle q(n, std::move(t), "R:" + std::to_string(n));
    AlexanderStructure s;  // T = -1
    s.modulus = n;
    s.degree = 1;
    s.h = {1 % n, 1};
    s.mul_t.resize(n);
    for (Element x = 0; x < n; ++x) s.mul_t[x] = (n - x) % n;
    s.mul_t_inv = s.mul_t;
    q.set_alexander(std::move(s));
    return q;
}

/// The four-element quandle of 3-cycles in the symmetric group on
/// four letters, by its relation table.
inline Quandle make_s4() {
    std::vector<Element> t = {
        0, 2, 3, 1,  //
        3, 1, 0, 2,  //
        1, 3, 2, 0,  //
        2, 0, 1, 3,
    };
    return Quandle(4, std::move(t), "S4");
}

inline Quandle dual(const Quandle& q) {
    int n = q.order();
    std::vector<Element> t(static_cast<size_t>(n) * n);
    for (Element a = 0; a < n; ++a)
        for (Element b = 0; b < n; ++b) t[static_cast<size_t>(a) * n + b] = q.inv_op(a, b);
    Quandle d(n, std::move(t), "dual(" + q.label() + ")");
    if (q.alexander()) {
        AlexanderStructure s = *q.alexander();
        std::swap(s.mul_t, s.mul_t_inv);
        d.set_alexander(std::move(s));
    }
    return d;
}

/// Lexicographically least isomorphism q1 -> q2, if any.
/// Backtracking over partial bijections; meant for small orders.
inline std::optional<std::vector<Element>> is_isomorphic(const Quandle& q1, const Quandle& q2) {
    if (q1.order() != q2.order()) return std::nullopt;
    int n = q1.order();
    std::vector<Element> f(n, -1);
    std::vector<bool> used(n, false);

    auto consistent = [&](int k) {
        // all products among 0..k must map correctly where defined
        for (Element a = 0; a <= k; ++a) {
            for (Element b = 0; b <= k; ++b) {
                Element ab = q1.op(a, b);
                if (ab <= k && q2.op(f[a], f[b]) != f[ab]) return false;
                if (ab > k) {
                    // image is pinned anyway: f(a*b) must equal f[a]*f[b] later
                    Element im = q2.op(f[a], f[b]);
                    if (f[ab] >= 0 && f[ab] != im) return false;
                }
            }
        }
        return true;
    };

    std::function<bool(int)> go = [&](int k) -> bool {
        if (k == n) return true;
        for (Element img = 0; img < n; ++img) {
            if (used[img]) continue;
            f[k] = img;
            used[img] = true;
            if (consistent(k) && go(k + 1)) return true;
            used[img] = false;
            f[k] = -1;
        }
        return false;
    };
    if (go(0)) return f;
    return std::nullopt;
}

inline GroupWord inverse_word(const GroupWord& w) {
    GroupWord r(w.rbegin(), w.rend());
    for (auto& l : r) l.exp = -l.exp;
    return r;
}

/// (e1 e2 ... ej)^k as a word, with negative k meaning the inverse word.
inline GroupWord word_pow(const std::vector<Element>& elems, int k) {
    GroupWord base;
    for (Element e : elems) base.push_back({e, 1});
    if (k < 0) {
        base = inverse_word(base);
        k = -k;
    }
    GroupWord r;
    for (int i = 0; i < k; ++i) r.insert(r.end(), base.begin(), base.end());
    return r;
}

}  // namespace qlab
