#ifndef QCOUNT_POLY_HPP
#define QCOUNT_POLY_HPP

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qcount {

using BigInt = mpz_class;

// Dense univariate polynomial with exact integer coefficients.
// coeff(i) is the coefficient of y^i; trailing zeros are stripped, so the
// zero polynomial has no stored coefficients and degree() == -1.
class IntPoly {
public:
    IntPoly() = default;
    explicit IntPoly(std::vector<BigInt> coeffs) : c_(std::move(coeffs)) { normalize(); }

    static IntPoly constant(long v);
    static IntPoly monomial(const BigInt& coeff, int power);
    // p(y) = y + c
    static IntPoly linear(long c);

    bool is_zero() const { return c_.empty(); }
    int degree() const { return static_cast<int>(c_.size()) - 1; }
    BigInt coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : BigInt(0); }
    const std::vector<BigInt>& coeffs() const { return c_; }

    BigInt eval(const BigInt& x) const;

    IntPoly operator+(const IntPoly& o) const;
    IntPoly operator-(const IntPoly& o) const;
    IntPoly operator*(const IntPoly& o) const;
    IntPoly operator-() const;
    bool operator==(const IntPoly& o) const { return c_ == o.c_; }
    bool operator!=(const IntPoly& o) const { return c_ != o.c_; }

    IntPoly scale(const BigInt& s) const;
    // multiply by y^e
    IntPoly mul_power(int e) const;
    // q(z) = p(z + k), exact Taylor shift by Ruffini-Horner
    IntPoly compose_shift(long k) const;
    // exact division by y^e; nullopt if any of the e lowest coefficients is nonzero
    std::optional<IntPoly> divide_by_power(int e) const;

    bool all_coeffs_nonneg() const;

    // Rendering in descending powers, e.g. "y^8 - 5y^7 + 10y^6 - 5y + 1".
    std::string to_string(const std::string& var = "y") const;
    // Parses the same notation (also accepts '*' between coefficient and variable).
    static std::optional<IntPoly> parse(const std::string& text);

private:
    void normalize();
    std::vector<BigInt> c_;
};

// p2 <<_k p1 : every coefficient of (p1 - p2)(z + k) is non-negative.
// Implies p2(y) <= p1(y) for all real y >= k.
bool ll_leq(const IntPoly& p2, const IntPoly& p1, long k);

// (y+1) * y^(n-k+1) * prod_{i=1}^{k-2} (y - i); the shifted count of colourings
// of the extremal family (K_k with a tree grown from each clique vertex).
// Requires n >= k >= 2.
IntPoly bound_poly(int k, int n);

enum class Sign { positive, negative, inconclusive };

struct SignCertificate {
    Sign verdict = Sign::inconclusive;
    int shift = -1;        // m with 0 <<_m (+/-)p when certified
    int point_checks = 0;  // integer evaluations verified in [k, m + extra]
    bool is_zero = false;  // zero polynomial reported positive by convention
};

// Decides whether p is non-negative for every integer y >= k ("positive"),
// non-positive for every integer y >= k ("negative"), or neither was certified.
// Certificate: a shift m in [k, k + max_shift] with all coefficients of
// (+/-)p(z + m) non-negative, plus point checks on the integers in [k, m].
// Signs are non-strict: a polynomial vanishing at some integers >= k while
// never crossing zero still classifies.
SignCertificate classify_sign(const IntPoly& p, long k, int extra_checks = 0, int max_shift = 8);

}  // namespace qcount

#endif
