#ifndef FFCHAIN_FIELD_HPP
#define FFCHAIN_FIELD_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include "ffchain/poly.hpp"
#include "ffchain/rng.hpp"

namespace ffchain {

/// Default cap for operations that sweep all p^n field elements.
inline constexpr std::uint64_t kDefaultGuard = std::uint64_t{1} << 20;
/// Default cap for the exhaustive-search inverse, which is quadratic work.
inline constexpr std::uint64_t kOracleGuard = std::uint64_t{1} << 16;

/// p^n, overflow-checked.
std::uint64_t field_order(std::uint32_t p, unsigned n);

/// A monic irreducible polynomial, validated on construction. Serves as the
/// modulus defining one polynomial-basis representation of F_{p^n}.
class IrreduciblePoly {
public:
    explicit IrreduciblePoly(Poly poly);

    const Poly& poly() const noexcept { return poly_; }
    unsigned degree() const noexcept { return degree_; }
    std::uint32_t characteristic() const noexcept { return poly_.characteristic(); }
    std::uint64_t index() const { return poly_.index(); }

    friend bool operator==(const IrreduciblePoly& a, const IrreduciblePoly& b) noexcept = default;

private:
    Poly poly_;
    unsigned degree_;
};

/// (a * b) mod f for representatives of degree < deg f.
Poly mul_mod(const Poly& a, const Poly& b, const IrreduciblePoly& f);

/// Multiplicative inverse of a modulo f, by the extended Euclidean algorithm.
/// a must be nonzero with deg a < deg f.
Poly inv(const Poly& a, const IrreduciblePoly& f);

/// Brute-force inverse: scans every nonzero candidate of degree < deg f in
/// ascending index order and returns the one whose product with a is 1.
/// Exists to check inv() against an independent route; refuses fields larger
/// than max_order.
Poly inv_oracle(const Poly& a, const IrreduciblePoly& f, std::uint64_t max_order = kOracleGuard);

/// Rabin irreducibility test. f must be monic of degree >= 1.
bool is_irreducible(const Poly& f);

/// Smallest monic nontrivial factor by trial division, or nullopt if f is
/// irreducible (or constant/zero). Refuses to scan more than `guard` divisors.
std::optional<Poly> find_nontrivial_factor(const Poly& f, std::uint64_t guard = kDefaultGuard);

/// All monic irreducibles of degree n over F_p, ascending by index.
std::vector<IrreduciblePoly> enumerate_irreducibles(Prime p, unsigned n,
                                                    std::uint64_t guard = kDefaultGuard);

/// Necklace count: (1/n) * sum over d | n of mu(d) * p^(n/d).
std::uint64_t count_irreducibles(Prime p, unsigned n);

/// Uniform monic irreducible of degree n, by rejection sampling from rng.
IrreduciblePoly random_irreducible(Prime p, unsigned n, SeededRng& rng);

/// Dense inverse table: entry i holds index(inv(element_i, f)) for i >= 1,
/// entry 0 is 0. Backs the chain walkers; one extended Euclid per element.
std::vector<std::uint64_t> inverse_table(const IrreduciblePoly& f,
                                         std::uint64_t guard = kDefaultGuard);

} // namespace ffchain

#endif // FFCHAIN_FIELD_HPP
