#ifndef FFCHAIN_POLY_HPP
#define FFCHAIN_POLY_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ffchain {

/// A validated prime characteristic. Construction rejects non-primes.
class Prime {
public:
    explicit Prime(std::uint32_t value);
    std::uint32_t value() const noexcept { return value_; }
    friend bool operator==(Prime a, Prime b) noexcept = default;

private:
    std::uint32_t value_;
};

/// Polynomial degree. The zero polynomial has degree negative infinity, kept
/// as a distinct state so it can never leak into index arithmetic as -1.
class Degree {
public:
    static Degree neg_infinity() noexcept { return Degree(true, 0); }
    static Degree of(int d) noexcept { return Degree(false, d); }

    bool is_neg_infinity() const noexcept { return neg_inf_; }
    int value() const; // throws std::logic_error for negative infinity

    friend bool operator==(Degree a, Degree b) noexcept = default;
    friend std::strong_ordering operator<=>(Degree a, Degree b) noexcept {
        if (a.neg_inf_ && b.neg_inf_) return std::strong_ordering::equal;
        if (a.neg_inf_) return std::strong_ordering::less;
        if (b.neg_inf_) return std::strong_ordering::greater;
        return a.value_ <=> b.value_;
    }

private:
    Degree(bool neg_inf, int value) noexcept : neg_inf_(neg_inf), value_(value) {}
    bool neg_inf_;
    int value_; // 0 when neg_inf_, so defaulted == stays consistent
};

/// Element of F_p[X], little-endian coefficients (coeffs()[i] multiplies X^i).
/// Always canonical: every coefficient in [0, p), no trailing zeros, the zero
/// polynomial is the empty sequence.
class Poly {
public:
    Poly(Prime p, std::vector<std::uint32_t> coeffs);

    static Poly zero(Prime p) { return Poly(p, {}); }
    static Poly one(Prime p) { return Poly(p, {1}); }
    static Poly x(Prime p) { return Poly(p, {0, 1}); }
    static Poly constant(Prime p, std::uint32_t c) { return Poly(p, {c}); }
    /// Inverse of index(): base-p digits of `index` become the coefficients.
    static Poly from_index(Prime p, std::uint64_t index);

    std::uint32_t characteristic() const noexcept { return p_; }
    Prime prime() const noexcept { return Prime(p_); }
    const std::vector<std::uint32_t>& coeffs() const noexcept { return coeffs_; }
    /// Coefficient of X^i; zero beyond the degree.
    std::uint32_t coeff(std::size_t i) const noexcept { return i < coeffs_.size() ? coeffs_[i] : 0; }

    Degree degree() const noexcept;
    bool is_zero() const noexcept { return coeffs_.empty(); }
    bool is_constant() const noexcept { return coeffs_.size() <= 1; }
    bool is_one() const noexcept { return coeffs_.size() == 1 && coeffs_[0] == 1; }
    bool is_monic() const noexcept { return !coeffs_.empty() && coeffs_.back() == 1; }

    /// Canonical encoding sum coeffs[i] * p^i; total order and file format key.
    std::uint64_t index() const;

    friend bool operator==(const Poly& a, const Poly& b) noexcept = default;

private:
    std::uint32_t p_;
    std::vector<std::uint32_t> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
/// Long division: returns (quotient, remainder) with a = q*b + r, deg r < deg b.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }

/// c^(-1) in F_p for c != 0.
std::uint32_t scalar_inverse(std::uint32_t c, Prime p);
std::uint64_t pow_u64(std::uint64_t base, unsigned exp); // overflow-checked

// Text formats (both accepted everywhere):
//   symbolic  "x^3+x+1", terms in any order, "c*x^k" coefficients for p > 2
//   indexed   "#11" (decimal canonical index)
Poly parse_poly(std::string_view text, Prime p);
std::string to_symbolic(const Poly& a);
std::string to_indexed(const Poly& a);
/// Fixed-width digit string b_{n-1}...b_0, the vertex-label style of the graphs.
std::string digit_label(const Poly& a, unsigned n);

} // namespace ffchain

#endif // FFCHAIN_POLY_HPP
