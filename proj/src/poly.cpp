#include "qcount/poly.hpp"

#include <cctype>
#include <sstream>

namespace qcount {

void IntPoly::normalize() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

IntPoly IntPoly::constant(long v) {
    if (v == 0) return IntPoly();
    return IntPoly(std::vector<BigInt>{BigInt(v)});
}

IntPoly IntPoly::monomial(const BigInt& coeff, int power) {
    if (coeff == 0) return IntPoly();
    std::vector<BigInt> c(power + 1, BigInt(0));
    c[power] = coeff;
    return IntPoly(std::move(c));
}

IntPoly IntPoly::linear(long c) {
    return IntPoly(std::vector<BigInt>{BigInt(c), BigInt(1)});
}

BigInt IntPoly::eval(const BigInt& x) const {
    BigInt r = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

IntPoly IntPoly::operator+(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] += o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-(const IntPoly& o) const {
    std::vector<BigInt> r(std::max(c_.size(), o.c_.size()), BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i] += c_[i];
    for (size_t i = 0; i < o.c_.size(); ++i) r[i] -= o.c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator*(const IntPoly& o) const {
    if (c_.empty() || o.c_.empty()) return IntPoly();
    std::vector<BigInt> r(c_.size() + o.c_.size() - 1, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
    }
    return IntPoly(std::move(r));
}

IntPoly IntPoly::operator-() const {
    std::vector<BigInt> r(c_);
    for (auto& v : r) v = -v;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::scale(const BigInt& s) const {
    if (s == 0) return IntPoly();
    std::vector<BigInt> r(c_);
    for (auto& v : r) v *= s;
    return IntPoly(std::move(r));
}

IntPoly IntPoly::mul_power(int e) const {
    if (e < 0) throw std::invalid_argument("mul_power: negative exponent");
    if (c_.empty() || e == 0) return *this;
    std::vector<BigInt> r(c_.size() + e, BigInt(0));
    for (size_t i = 0; i < c_.size(); ++i) r[i + e] = c_[i];
    return IntPoly(std::move(r));
}

IntPoly IntPoly::compose_shift(long k) const {
    if (c_.empty() || k == 0) return *this;
    std::vector<BigInt> a(c_);
    int d = static_cast<int>(a.size()) - 1;
    for (int i = 0; i < d; ++i)
        for (int j = d - 1; j >= i; --j) a[j] += k * a[j + 1];
    return IntPoly(std::move(a));
}

std::optional<IntPoly> IntPoly::divide_by_power(int e) const {
    if (e == 0) return *this;
    if (static_cast<int>(c_.size()) < e) {
        // only the zero polynomial has fewer coefficients than e
        if (c_.empty()) return IntPoly();
        return std::nullopt;
    }
    for (int i = 0; i < e; ++i)
        if (c_[i] != 0) return std::nullopt;
    return IntPoly(std::vector<BigInt>(c_.begin() + e, c_.end()));
}

bool IntPoly::all_coeffs_nonneg() const {
    for (const auto& v : c_)
        if (v < 0) return false;
    return true;
}

std::string IntPoly::to_string(const std::string& var) const {
    if (c_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigInt& a = c_[i];
        if (a == 0) continue;
        BigInt mag = abs(a);
        if (first) {
            if (a < 0) out << "-";
            first = false;
        } else {
            out << (a < 0 ? " - " : " + ");
        }
        if (i == 0 || mag != 1) out << mag.get_str();
        if (i > 0) {
            out << var;
            if (i > 1) out << "^" << i;
        }
    }
    return out.str();
}

std::optional<IntPoly> IntPoly::parse(const std::string& text) {
    std::vector<BigInt> coeffs;
    size_t i = 0;
    const size_t n = text.size();
    auto skip_ws = [&] { while (i < n && std::isspace(static_cast<unsigned char>(text[i]))) ++i; };
    char var = 0;
    bool any = false;
    skip_ws();
    while (i < n) {
        int sign = 1;
        skip_ws();
        if (text[i] == '+' || text[i] == '-') {
            sign = (text[i] == '-') ? -1 : 1;
            ++i;
            skip_ws();
        } else if (any) {
            return std::nullopt;  // terms must be joined by + or -
        }
        if (i >= n) return std::nullopt;
        BigInt coeff = 1;
        bool saw_digits = false;
        if (std::isdigit(static_cast<unsigned char>(text[i]))) {
            std::string digits;
            while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
            coeff = BigInt(digits);
            saw_digits = true;
            skip_ws();
            if (i < n && text[i] == '*') { ++i; skip_ws(); }
        }
        int power = 0;
        if (i < n && std::isalpha(static_cast<unsigned char>(text[i]))) {
            char v = text[i];
            if (var == 0) var = v;
            if (v != var) return std::nullopt;
            ++i;
            power = 1;
            skip_ws();
            if (i < n && text[i] == '^') {
                ++i;
                skip_ws();
                if (i >= n || !std::isdigit(static_cast<unsigned char>(text[i]))) return std::nullopt;
                std::string digits;
                while (i < n && std::isdigit(static_cast<unsigned char>(text[i]))) digits += text[i++];
                power = std::stoi(digits);
            }
        } else if (!saw_digits) {
            return std::nullopt;
        }
        if (static_cast<int>(coeffs.size()) <= power) coeffs.resize(power + 1, BigInt(0));
        coeffs[power] += sign * coeff;
        any = true;
        skip_ws();
    }
    if (!any) return std::nullopt;
    return IntPoly(std::move(coeffs));
}

bool ll_leq(const IntPoly& p2, const IntPoly& p1, long k) {
    return (p1 - p2).compose_shift(k).all_coeffs_nonneg();
}

IntPoly bound_poly(int k, int n) {
    if (k < 2 || n < k) throw std::invalid_argument("bound_poly: requires n >= k >= 2");
    IntPoly p = IntPoly::linear(1).mul_power(n - k + 1);  // (y+1) y^{n-k+1}
    for (int i = 1; i <= k - 2; ++i) p = p * IntPoly::linear(-i);
    return p;
}

SignCertificate classify_sign(const IntPoly& p, long k, int extra_checks, int max_shift) {
    SignCertificate cert;
    if (p.is_zero()) {
        cert.verdict = Sign::positive;
        cert.is_zero = true;
        cert.shift = static_cast<int>(k);
        return cert;
    }
    for (int dir = 0; dir < 2; ++dir) {
        IntPoly q = dir == 0 ? p : -p;
        for (long m = k; m <= k + max_shift; ++m) {
            if (!q.compose_shift(m).all_coeffs_nonneg()) continue;
            bool pts_ok = true;
            int pts = 0;
            for (long t = k; t <= m + extra_checks; ++t, ++pts) {
                if (q.eval(BigInt(t)) < 0) { pts_ok = false; break; }
            }
            if (pts_ok) {
                cert.verdict = dir == 0 ? Sign::positive : Sign::negative;
                cert.shift = static_cast<int>(m);
                cert.point_checks = pts;
                return cert;
            }
        }
    }
    return cert;
}

}  // namespace qcount
