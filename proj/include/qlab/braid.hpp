#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/cohomology.hpp"
#include "qlab/group_ring.hpp"
#include "qlab/linalg.hpp"
#include "qlab/quandle.hpp"

namespace qlab {

/// Braid word on `strands` strands. Letters are nonzero integers i with
/// |i| <= strands - 1; the sign is the crossing sign.
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int s, std::vector<int> l) : strands(s), letters(std::move(l)) {
        if (strands < 1) throw std::invalid_argument("braid needs at least one strand");
        for (int x : letters)
            if (x == 0 || x >= strands || x <= -strands)
                throw std::invalid_argument("braid letter out of range: " + std::to_string(x));
    }

    int writhe() const {
        int w = 0;
        for (int x : letters) w += x > 0 ? 1 : -1;
        return w;
    }

    std::string to_string() const {
        std::ostringstream os;
        for (size_t i = 0; i < letters.size(); ++i) os << (i ? "," : "") << letters[i];
        return os.str();
    }

    static BraidWord parse(int strands, const std::string& csv) {
        std::vector<int> l;
        std::stringstream ss(csv);
        std::string tok;
        while (std::getline(ss, tok, ',')) {
            if (tok.empty()) continue;
            l.push_back(std::stoi(tok));
        }
        return BraidWord(strands, std::move(l));
    }
};

/// Colors on the strands at one horizontal level.
using ColorVector = std::vector<Element>;

/// One crossing's cocycle argument and exponent.
struct Weight {
    Element a, b;
    int exp;
};

/// Push a color vector through one letter. A positive letter i sends the
/// adjacent pair (a, b) to (b, a*b) with weight argument (a, b); the inverse
/// letter undoes it, with weight argument (inv_op(b, a), a) and exponent -1.
inline Weight apply_letter(const Quandle& q, ColorVector& v, int letter) {
    int i = letter > 0 ? letter : -letter;
    Element a = v[i - 1], b = v[i];
    if (letter > 0) {
        v[i - 1] = b;
        v[i] = q.op(a, b);
        return {a, b, 1};
    }
    Element c = q.inv_op(b, a);
    v[i - 1] = c;
    v[i] = a;
    return {c, a, -1};
}

inline ColorVector apply_word(const Quandle& q, ColorVector v, const BraidWord& w) {
    for (int letter : w.letters) apply_letter(q, v, letter);
    return v;
}

/// All top color vectors fixed by the braid word, in lexicographic order.
inline std::vector<ColorVector> colorings(const Quandle& q, const BraidWord& w) {
    std::vector<ColorVector> out;
    ColorVector v(w.strands, 0);
    while (true) {
        if (apply_word(q, v, w) == v) out.push_back(v);
        int i = w.strands - 1;
        while (i >= 0 && v[i] == q.order() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return out;
}

/// Same set via the linear fixed-point equations of the Burau-style action,
/// available when the quandle carries an Alexander structure. The word action
/// on color vectors is affine-linear over Z_n^(strands * degree); solutions
/// come from a Smith reduction of the lifted integer system.
inline std::vector<ColorVector> colorings_linear(const Quandle& q, const BraidWord& w) {
    if (!q.alexander()) throw std::invalid_argument("linear coloring path needs an Alexander quandle");
    const auto& s = *q.alexander();
    int n = s.modulus, d = s.degree, m = w.strands;
    size_t vars = static_cast<size_t>(m) * d;

    // columns of the action on basis vectors e_j * T^k
    BigMatrix act(vars, vars);
    for (int j = 0; j < m; ++j)
        for (int k = 0; k < d; ++k) {
            ColorVector v(m, 0);
            Element unit = 1;
            for (int t = 0; t < k; ++t) unit = s.mul_t[unit];
            v[j] = unit;
            ColorVector img = apply_word(q, v, w);
            for (int jj = 0; jj < m; ++jj) {
                auto dig = s.digits(img[jj]);
                for (int kk = 0; kk < d; ++kk) act.at(static_cast<size_t>(jj) * d + kk, static_cast<size_t>(j) * d + k) = dig[kk];
            }
        }
    for (size_t i = 0; i < vars; ++i) act.at(i, i) -= 1;

    // solve act x = 0 mod n by Smith reduction with column transforms
    BigMatrix v_tr(vars, vars);
    for (size_t i = 0; i < vars; ++i) v_tr.at(i, i) = 1;
    BigMatrix mm = act;
    size_t top = 0;
    while (top < vars) {
        size_t pi = top, pj = top;
        Int best = 0;
        for (size_t i = top; i < vars; ++i)
            for (size_t j = top; j < vars; ++j) {
                if (mm.at(i, j) == 0) continue;
                Int mag = abs(mm.at(i, j));
                if (best == 0 || mag < best) {
                    best = mag;
                    pi = i;
                    pj = j;
                }
            }
        if (best == 0) break;
        for (size_t j = 0; j < vars; ++j) std::swap(mm.at(top, j), mm.at(pi, j));
        for (size_t i = 0; i < vars; ++i) {
            std::swap(mm.at(i, top), mm.at(i, pj));
            std::swap(v_tr.at(i, top), v_tr.at(i, pj));
        }
        bool clean = false;
        while (!clean) {
            clean = true;
            for (size_t i = top + 1; i < vars; ++i) {
                if (mm.at(i, top) == 0) continue;
                Int qq = mm.at(i, top) / mm.at(top, top);
                for (size_t j = top; j < vars; ++j) mm.at(i, j) -= qq * mm.at(top, j);
                if (mm.at(i, top) != 0) {
                    for (size_t j = top; j < vars; ++j) std::swap(mm.at(top, j), mm.at(i, j));
                    clean = false;
                }
            }
            for (size_t j = top + 1; j < vars; ++j) {
                if (mm.at(top, j) == 0) continue;
                Int qq = mm.at(top, j) / mm.at(top, top);
                for (size_t i = top; i < vars; ++i) {
                    mm.at(i, j) -= qq * mm.at(i, top);
                    v_tr.at(i, j) -= qq * v_tr.at(i, top);
                }
                if (mm.at(top, j) != 0) {
                    for (size_t i = top; i < vars; ++i) {
                        std::swap(mm.at(i, top), mm.at(i, j));
                        std::swap(v_tr.at(i, top), v_tr.at(i, j));
                    }
                    clean = false;
                }
            }
        }
        ++top;
    }

    // D y = 0 mod n: y_i ranges over multiples of n / gcd(d_i, n)
    std::vector<long long> step(vars, 1);
    for (size_t i = 0; i < vars; ++i) {
        if (i < top) {
            Int di = abs(mm.at(i, i));
            Int g = gcd(di, Int(n));
            step[i] = (Int(n) / g).convert_to<long long>();
        } else {
            step[i] = 1;  // free variable
        }
    }
    std::vector<ColorVector> out;
    std::vector<long long> y(vars, 0);
    while (true) {
        ColorVector v(m);
        for (int j = 0; j < m; ++j) {
            std::vector<int> dig(d);
            for (int k = 0; k < d; ++k) {
                Int x = 0;
                for (size_t col = 0; col < vars; ++col) x += v_tr.at(static_cast<size_t>(j) * d + k, col) * y[col];
                dig[k] = static_cast<int>(((x % n) + n).convert_to<long long>() % n);
            }
            v[j] = s.encode(dig);
        }
        out.push_back(std::move(v));
        size_t i = 0;
        while (i < vars) {
            y[i] += step[i];
            if (y[i] < n) break;
            y[i] = 0;
            ++i;
        }
        if (i == vars) break;
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

/// State sum over all colorings of the closed braid; phi must be a quandle
/// 2-cocycle (checked) so the value is an invariant of the closure.
inline GroupRing state_sum(const Quandle& q, const Cochain& phi, const BraidWord& w) {
    if (phi.basis.degree() != 2) throw std::invalid_argument("state sum needs a 2-cocycle");
    if (phi.basis.order() != q.order()) throw std::invalid_argument("cocycle/quandle mismatch");
    if (!is_cocycle(q, phi)) throw std::invalid_argument("cochain is not a 2-cocycle; state sum would not be invariant");
    long long modulus = phi.modulus;
    GroupRing total(modulus);
    ColorVector v(w.strands, 0);
    ColorVector work(w.strands);
    while (true) {
        work = v;
        long long e = 0;
        for (int letter : w.letters) {
            Weight wt = apply_letter(q, work, letter);
            e += wt.exp * phi.evaluate({wt.a, wt.b});
        }
        if (work == v) total.add_term(e, 1);
        int i = w.strands - 1;
        while (i >= 0 && v[i] == q.order() - 1) v[i--] = 0;
        if (i < 0) break;
        ++v[i];
    }
    return total;
}

struct KnotRecord {
    std::string name;
    BraidWord braid;
};

/// TSV rows: name<TAB>strands<TAB>comma-separated letters (may be empty).
inline std::vector<KnotRecord> load_knot_table(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open knot table: " + path);
    std::vector<KnotRecord> out;
    std::string line;
    int lineno = 0;
    while (std::getline(in, line)) {
        ++lineno;
        if (line.empty() || line[0] == '#') continue;
        std::stringstream ss(line);
        std::string name, strands, letters;
        if (!std::getline(ss, name, '\t') || !std::getline(ss, strands, '\t'))
            throw std::runtime_error(path + ":" + std::to_string(lineno) + ": malformed row");
        std::getline(ss, letters, '\t');
        out.push_back({name, BraidWord::parse(std::stoi(strands), letters)});
    }
    return out;
}

}  // namespace qlab
