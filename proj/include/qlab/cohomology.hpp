#pragma once

#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/linalg.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

using Tuple = std::vector<Element>;

inline bool is_degenerate(const Tuple& t) {
    for (size_t i = 0; i + 1 < t.size(); ++i)
        if (t[i] == t[i + 1]) return true;
    return false;
}

/// Ordered basis of the degree-n quandle cochain space: all n-tuples with no
/// two equal consecutive entries, in lexicographic order. Rank and unrank are
/// closed-form, so the basis is never materialized.
class TupleBasis {
   public:
    TupleBasis(int order, int degree) : order_(order), degree_(degree) {
        if (degree < 1) throw std::invalid_argument("tuple basis needs degree >= 1");
        size_ = order_;
        for (int i = 1; i < degree_; ++i) size_ *= static_cast<size_t>(order_ - 1);
        if (order_ == 1 && degree_ > 1) size_ = 0;
    }

    int order() const { return order_; }
    int degree() const { return degree_; }
    size_t size() const { return size_; }

    size_t rank(const Tuple& t) const {
        size_t r = static_cast<size_t>(t[0]);
        for (int i = 1; i < degree_; ++i) {
            int adj = t[i] - (t[i] > t[i - 1] ? 1 : 0);
            r = r * static_cast<size_t>(order_ - 1) + static_cast<size_t>(adj);
        }
        return r;
    }

    Tuple unrank(size_t r) const {
        Tuple t(degree_);
        for (int i = degree_ - 1; i >= 1; --i) {
            int adj = static_cast<int>(r % static_cast<size_t>(order_ - 1));
            r /= static_cast<size_t>(order_ - 1);
            t[i] = adj;  // fixed up once the previous entry is known
        }
        t[0] = static_cast<int>(r);
        for (int i = 1; i < degree_; ++i)
            if (t[i] >= t[i - 1]) ++t[i];
        return t;
    }

   private:
    int order_;
    int degree_;
    size_t size_;
};

/// Cochain in the characteristic-function basis. modulus 0 means integer
/// coefficients, otherwise coefficients live in Z_modulus.
struct Cochain {
    TupleBasis basis;
    long long modulus = 0;
    std::vector<long long> coeffs;

    Cochain(TupleBasis b, long long m) : basis(b), modulus(m), coeffs(b.size(), 0) {
        if (m < 0) throw std::invalid_argument("cochain modulus must be >= 0");
    }

    long long canon(long long v) const {
        if (modulus == 0) return v;
        long long r = v % modulus;
        return r < 0 ? r + modulus : r;
    }

    void set(const Tuple& t, long long v) {
        if (is_degenerate(t)) throw std::invalid_argument("cannot assign a degenerate tuple");
        coeffs[basis.rank(t)] = canon(v);
    }

    long long evaluate(const Tuple& t) const {
        if (static_cast<int>(t.size()) != basis.degree()) throw std::invalid_argument("tuple degree mismatch");
        if (is_degenerate(t)) return 0;
        return coeffs[basis.rank(t)];
    }

    Cochain negated() const {
        Cochain r = *this;
        for (auto& c : r.coeffs) c = canon(-c);
        return r;
    }

    Cochain scaled(long long k) const {
        Cochain r = *this;
        for (auto& c : r.coeffs) c = canon(c * k);
        return r;
    }

    bool operator==(const Cochain& o) const {
        return basis.order() == o.basis.order() && basis.degree() == o.basis.degree() && modulus == o.modulus &&
               coeffs == o.coeffs;
    }
};

namespace detail {

/// Enumerate the terms of (delta f)(y) as pairs (source tuple, sign) for a
/// target (n+1)-tuple y; f has degree n = y.size() - 1.
template <typename F>
inline void coboundary_terms(const Quandle& q, const Tuple& y, F&& emit) {
    int n = static_cast<int>(y.size()) - 1;
    Tuple t(n);
    for (int i = 1; i <= n; ++i) {
        for (int k = 0, j = 0; k <= n; ++k)
            if (k != i) t[j++] = y[k];
        emit(t, (i - 1) % 2 == 0 ? 1 : -1);
    }
    for (int j = 1; j <= n; ++j) {
        for (int k = 0; k < j; ++k) t[k] = q.op(y[k], y[j]);
        for (int k = j + 1; k <= n; ++k) t[k - 1] = y[k];
        emit(t, j % 2 == 0 ? 1 : -1);
    }
}

}  // namespace detail

/// Matrix of delta: P^n -> P^{n+1} in the characteristic-function bases
/// (rows indexed by target tuples, columns by source tuples).
/// Degree 0 is the zero map into P^1.
inline IntMatrix coboundary_matrix(const Quandle& q, int degree) {
    TupleBasis target(q.order(), degree + 1);
    if (degree == 0) return IntMatrix(target.size(), 1);
    TupleBasis source(q.order(), degree);
    IntMatrix m(target.size(), source.size());
    for (size_t row = 0; row < target.size(); ++row) {
        Tuple y = target.unrank(row);
        detail::coboundary_terms(q, y, [&](const Tuple& t, int sign) {
            if (!is_degenerate(t)) m.at(row, source.rank(t)) += sign;
        });
    }
    return m;
}

/// delta f as a cochain of degree n+1 (works over Z and Z_m alike).
inline Cochain coboundary(const Quandle& q, const Cochain& f) {
    TupleBasis target(q.order(), f.basis.degree() + 1);
    Cochain df(target, f.modulus);
    for (size_t row = 0; row < target.size(); ++row) {
        Tuple y = target.unrank(row);
        long long v = 0;
        detail::coboundary_terms(q, y, [&](const Tuple& t, int sign) { v += sign * f.evaluate(t); });
        df.coeffs[row] = df.canon(v);
    }
    return df;
}

inline bool is_cocycle(const Quandle& q, const Cochain& f) {
    Cochain df = coboundary(q, f);
    for (long long c : df.coeffs)
        if (c != 0) return false;
    return true;
}

/// Basis of the degree-n cocycle space over Z_p, from the reduced row
/// echelon kernel of the coboundary matrix. Deterministic.
inline std::vector<Cochain> cocycle_basis(const Quandle& q, int degree, long long p) {
    IntMatrix d = coboundary_matrix(q, degree);
    auto ker = kernel_mod_p(std::move(d), p);
    TupleBasis basis(q.order(), degree);
    std::vector<Cochain> out;
    out.reserve(ker.size());
    for (auto& v : ker) {
        Cochain c(basis, p);
        c.coeffs = std::move(v);
        out.push_back(std::move(c));
    }
    return out;
}

/// dim H^n_Q(X, Z_p) = dim ker(delta^n) - rank(delta^{n-1}).
inline size_t cohomology_dim(const Quandle& q, int degree, long long p) {
    TupleBasis basis(q.order(), degree);
    size_t ker = basis.size() - rank_mod_p(coboundary_matrix(q, degree), p);
    size_t im = degree >= 2 ? rank_mod_p(coboundary_matrix(q, degree - 1), p) : 0;
    return ker - im;
}

/// free_rank + elementary divisors > 1 (integral case), or a plain dimension
/// over a field.
struct CohomologyGroup {
    size_t free_rank = 0;
    std::vector<Int> torsion;  // divisors > 1, each dividing the next

    bool trivial() const { return free_rank == 0 && torsion.empty(); }

    std::string to_string() const {
        if (trivial()) return "0";
        std::ostringstream os;
        bool first = true;
        auto sep = [&]() {
            if (!first) os << " x ";
            first = false;
        };
        if (free_rank == 1) {
            sep();
            os << "Z";
        } else if (free_rank > 1) {
            sep();
            os << "Z^" << free_rank;
        }
        for (const auto& d : torsion) {
            sep();
            os << "Z_" << d.str();
        }
        return os.str();
    }

    bool operator==(const CohomologyGroup& o) const { return free_rank == o.free_rank && torsion == o.torsion; }
};

namespace detail {

struct SnfPair {
    std::vector<Int> prev;  // elementary divisors of delta^{n-1}
    std::vector<Int> cur;   // elementary divisors of delta^n
    size_t dim = 0;         // dim P^n
};

inline SnfPair snf_data(const Quandle& q, int degree) {
    SnfPair s;
    s.dim = TupleBasis(q.order(), degree).size();
    s.cur = smith_normal_form(BigMatrix(coboundary_matrix(q, degree)));
    if (degree >= 2) s.prev = smith_normal_form(BigMatrix(coboundary_matrix(q, degree - 1)));
    return s;
}

}  // namespace detail

/// Integral cohomology from Smith normal forms of the two adjacent
/// coboundary matrices.
inline CohomologyGroup cohomology_group_integral(const Quandle& q, int degree) {
    auto s = detail::snf_data(q, degree);
    size_t rank_cur = 0;
    for (const auto& d : s.cur)
        if (d != 0) ++rank_cur;
    CohomologyGroup g;
    g.free_rank = s.dim - rank_cur - s.prev.size();
    for (const auto& d : s.prev)
        if (d > 1) g.torsion.push_back(d);
    return g;
}

/// Cohomology with Z_m coefficients (m a prime power) via universal
/// coefficients: H^n(Z_m) = H^n(Z) (x) Z_m  +  Tor(H^{n+1}(Z), Z_m),
/// both read off the same two Smith normal forms. When m is prime the
/// result is cross-checked against the direct mod-p dimension.
inline CohomologyGroup cohomology_group_mod(const Quandle& q, int degree, long long m) {
    if (m < 2) throw std::invalid_argument("modulus must be >= 2");
    long long rest = m;
    for (long long f = 2; f <= rest; ++f)
        if (rest % f == 0) {
            while (rest % f == 0) rest /= f;
            break;
        }
    if (rest != 1) throw std::invalid_argument("modulus must be a prime power");
    auto s = detail::snf_data(q, degree);
    size_t rank_cur = 0;
    for (const auto& d : s.cur)
        if (d != 0) ++rank_cur;
    size_t free_rank = s.dim - rank_cur - s.prev.size();

    std::vector<Int> parts;
    for (size_t i = 0; i < free_rank; ++i) parts.push_back(m);
    for (const auto& d : s.prev) {
        Int g = gcd(d, Int(m));
        if (g > 1) parts.push_back(g);  // H^n(Z) torsion (x) Z_m
    }
    for (const auto& d : s.cur) {
        if (d == 0) continue;
        Int g = gcd(d, Int(m));
        if (g > 1) parts.push_back(g);  // Tor(H^{n+1}(Z), Z_m)
    }
    std::sort(parts.begin(), parts.end());
    CohomologyGroup g;
    g.torsion = std::move(parts);

    // prime moduli admit an independent dimension count
    bool prime = true;
    for (long long f = 2; f * f <= m; ++f)
        if (m % f == 0) prime = false;
    if (prime && g.torsion.size() != cohomology_dim(q, degree, m))
        throw std::logic_error("universal-coefficient result disagrees with mod-p elimination");
    return g;
}

/// Is f - g a coboundary? Over Z_p by a linear solve, over Z via Smith
/// reduction of the augmented system.
inline bool cohomologous(const Quandle& q, const Cochain& f, const Cochain& g) {
    if (f.modulus != g.modulus || f.basis.degree() != g.basis.degree())
        throw std::invalid_argument("cochain basis/ring mismatch");
    int degree = f.basis.degree();
    if (degree < 2) throw std::invalid_argument("cohomologous needs degree >= 2");
    std::vector<long long> b(f.coeffs.size());
    for (size_t i = 0; i < b.size(); ++i) b[i] = f.coeffs[i] - g.coeffs[i];
    IntMatrix d = coboundary_matrix(q, degree - 1);
    if (f.modulus != 0) return solve_mod_p(std::move(d), std::move(b), f.modulus).has_value();
    // integral: solvable iff rank is unchanged and elementary divisors match
    BigMatrix aug(d.rows, d.cols + 1);
    for (size_t i = 0; i < d.rows; ++i) {
        for (size_t j = 0; j < d.cols; ++j) aug.at(i, j) = d.at(i, j);
        aug.at(i, d.cols) = b[i];
    }
    auto before = smith_normal_form(BigMatrix(d));
    auto after = smith_normal_form(std::move(aug));
    return before == after;
}

/// Cocycle file: lines `x1,x2[,...]<space><coeff>`, `#` comments.
inline Cochain parse_cocycle_text(const std::string& text, const Quandle& q, long long modulus) {
    std::istringstream in(text);
    std::string line;
    std::optional<Cochain> out;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        auto hash = line.find('#');
        if (hash != std::string::npos) line = line.substr(0, hash);
        std::istringstream ls(line);
        std::string tuple_part;
        long long coeff;
        if (!(ls >> tuple_part)) continue;
        if (!(ls >> coeff)) throw std::invalid_argument("line " + std::to_string(lineno) + ": missing coefficient");
        std::string extra;
        if (ls >> extra) throw std::invalid_argument("line " + std::to_string(lineno) + ": trailing tokens");
        Tuple t;
        std::stringstream ts(tuple_part);
        std::string tok;
        while (std::getline(ts, tok, ',')) {
            size_t pos = 0;
            int v = std::stoi(tok, &pos);
            if (pos != tok.size()) throw std::invalid_argument("line " + std::to_string(lineno) + ": bad element");
            t.push_back(v);
        }
        if (t.size() < 1) throw std::invalid_argument("line " + std::to_string(lineno) + ": empty tuple");
        for (Element e : t)
            if (e < 0 || e >= q.order())
                throw std::invalid_argument("line " + std::to_string(lineno) + ": element out of range");
        if (!out) out.emplace(TupleBasis(q.order(), static_cast<int>(t.size())), modulus);
        if (static_cast<int>(t.size()) != out->basis.degree())
            throw std::invalid_argument("line " + std::to_string(lineno) + ": inconsistent tuple length");
        if (is_degenerate(t)) {
            if (out->canon(coeff) != 0)
                throw std::invalid_argument("line " + std::to_string(lineno) + ": degenerate tuple");
            continue;
        }
        out->coeffs[out->basis.rank(t)] = out->canon(out->coeffs[out->basis.rank(t)] + coeff);
    }
    if (!out) throw std::invalid_argument("cocycle text contains no terms");
    return *out;
}

inline Cochain parse_cocycle_file(const std::string& path, const Quandle& q, long long modulus) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open cocycle file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_cocycle_text(ss.str(), q, modulus);
}

inline std::string serialize_cochain(const Cochain& f) {
    std::ostringstream os;
    for (size_t i = 0; i < f.coeffs.size(); ++i) {
        if (f.coeffs[i] == 0) continue;
        Tuple t = f.basis.unrank(i);
        for (size_t j = 0; j < t.size(); ++j) os << (j ? "," : "") << t[j];
        os << " " << f.coeffs[i] << "\n";
    }
    return os.str();
}

}  // namespace qlab
