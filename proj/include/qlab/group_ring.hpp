#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cctype>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>

namespace qlab {

using Int = boost::multiprecision::cpp_int;

/// Element of the group ring Z[A] for cyclic A, written in the generator t.
/// modulus q >= 1 means A = Z_q (exponents reduced into [0, q)); modulus 0
/// means infinite cyclic A. Zero coefficients are never stored.
class GroupRing {
   public:
    explicit GroupRing(long long modulus = 0) : modulus_(modulus) {
        if (modulus < 0) throw std::invalid_argument("modulus must be >= 0");
    }

    static GroupRing monomial(long long modulus, Int coeff, long long exp) {
        GroupRing r(modulus);
        r.add_term(exp, std::move(coeff));
        return r;
    }

    static GroupRing one(long long modulus) { return monomial(modulus, 1, 0); }
    static GroupRing zero(long long modulus) { return GroupRing(modulus); }

    long long modulus() const { return modulus_; }
    const std::map<long long, Int>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    long long reduce_exp(long long e) const {
        if (modulus_ == 0) return e;
        long long r = e % modulus_;
        return r < 0 ? r + modulus_ : r;
    }

    void add_term(long long exp, Int coeff) {
        if (coeff == 0) return;
        long long e = reduce_exp(exp);
        auto it = coeffs_.find(e);
        if (it == coeffs_.end()) {
            coeffs_.emplace(e, std::move(coeff));
        } else {
            it->second += coeff;
            if (it->second == 0) coeffs_.erase(it);
        }
    }

    GroupRing operator+(const GroupRing& o) const {
        require_same_modulus(o);
        GroupRing r = *this;
        for (const auto& [e, c] : o.coeffs_) r.add_term(e, c);
        return r;
    }

    GroupRing& operator+=(const GroupRing& o) {
        require_same_modulus(o);
        for (const auto& [e, c] : o.coeffs_) add_term(e, c);
        return *this;
    }

    GroupRing operator*(const GroupRing& o) const {
        require_same_modulus(o);
        GroupRing r(modulus_);
        for (const auto& [e1, c1] : coeffs_)
            for (const auto& [e2, c2] : o.coeffs_) r.add_term(e1 + e2, c1 * c2);
        return r;
    }

    bool operator==(const GroupRing& o) const { return modulus_ == o.modulus_ && coeffs_ == o.coeffs_; }
    bool operator!=(const GroupRing& o) const { return !(*this == o); }

    /// Sum of coefficients (image under A -> 1).
    Int augmentation() const {
        Int s = 0;
        for (const auto& [e, c] : coeffs_) s += c;
        return s;
    }

    std::string to_string() const {
        if (coeffs_.empty()) return "0";
        std::ostringstream os;
        bool first = true;
        for (const auto& [e, c] : coeffs_) {
            Int a = c;
            if (!first && a > 0) os << "+";
            if (e == 0) {
                os << a.str();
            } else {
                if (a == -1)
                    os << "-";
                else if (a != 1)
                    os << a.str();
                os << "t";
                if (e != 1) os << "^" << e;
            }
            first = false;
        }
        return os.str();
    }

    static GroupRing parse(const std::string& text, long long modulus) {
        GroupRing r(modulus);
        size_t i = 0;
        auto skip_ws = [&]() {
            while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
        };
        skip_ws();
        if (i == text.size()) throw std::invalid_argument("empty group-ring literal");
        bool any = false;
        while (true) {
            skip_ws();
            if (i == text.size()) break;
            int sign = 1;
            if (text[i] == '+' || text[i] == '-') {
                if (text[i] == '-') sign = -1;
                ++i;
                skip_ws();
            } else if (any) {
                throw std::invalid_argument("expected + or - in group-ring literal: " + text);
            }
            std::string digits;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
            skip_ws();
            if (i < text.size() && text[i] == '*') {
                ++i;
                skip_ws();
            }
            Int coeff = digits.empty() ? Int(1) : Int(digits);
            long long exp = 0;
            if (i < text.size() && (text[i] == 't' || text[i] == 'T')) {
                ++i;
                exp = 1;
                if (i < text.size() && text[i] == '^') {
                    ++i;
                    bool neg = false;
                    if (i < text.size() && (text[i] == '-' || text[i] == '+')) neg = (text[i++] == '-');
                    std::string ed;
                    while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ed += text[i++];
                    if (ed.empty()) throw std::invalid_argument("missing exponent: " + text);
                    exp = std::stoll(ed);
                    if (neg) exp = -exp;
                }
            } else if (digits.empty()) {
                throw std::invalid_argument("malformed term in group-ring literal: " + text);
            }
            r.add_term(exp, sign * coeff);
            any = true;
        }
        if (!any) throw std::invalid_argument("empty group-ring literal");
        return r;
    }

   private:
    void require_same_modulus(const GroupRing& o) const {
        if (modulus_ != o.modulus_) throw std::invalid_argument("group-ring modulus mismatch");
    }

    long long modulus_;
    std::map<long long, Int> coeffs_;
};

/// t^e -> t^-e on every term.
inline GroupRing conjugate(const GroupRing& x) {
    GroupRing r(x.modulus());
    for (const auto& [e, c] : x.coeffs()) r.add_term(-e, c);
    return r;
}

}  // namespace qlab
