#include "ffchain/field.hpp"

#include <stdexcept>
#include <string>

namespace ffchain {

std::uint64_t field_order(std::uint32_t p, unsigned n) {
    return pow_u64(p, n);
}

namespace {

void require_element_of(const Poly& a, const IrreduciblePoly& f, const char* who) {
    if (a.characteristic() != f.characteristic())
        throw std::invalid_argument(std::string(who) + ": element and basis have different characteristics");
    if (!(a.degree() < Degree::of(static_cast<int>(f.degree()))))
        throw std::invalid_argument(std::string(who) + ": element degree must be below deg f = " +
                                    std::to_string(f.degree()));
}

void require_guard(std::uint64_t order, std::uint64_t guard, const char* who) {
    if (order > guard)
        throw std::length_error(std::string(who) + ": field order " + std::to_string(order) +
                                " exceeds enumeration guard " + std::to_string(guard));
}

} // namespace

IrreduciblePoly::IrreduciblePoly(Poly poly) : poly_(std::move(poly)), degree_(0) {
    if (poly_.is_zero() || poly_.is_constant())
        throw std::invalid_argument("IrreduciblePoly: degree must be at least 1");
    if (!poly_.is_monic())
        throw std::invalid_argument("IrreduciblePoly: basis polynomial must be monic, got " +
                                    to_symbolic(poly_));
    if (!is_irreducible(poly_)) {
        std::string msg = "IrreduciblePoly: " + to_symbolic(poly_) + " is not irreducible";
        try {
            if (auto factor = find_nontrivial_factor(poly_))
                msg += " (factor: " + to_symbolic(*factor) + ")";
        } catch (const std::length_error&) {
            // degree too large for trial division; report without a factor
        }
        throw std::domain_error(msg);
    }
    degree_ = static_cast<unsigned>(poly_.degree().value());
}

Poly mul_mod(const Poly& a, const Poly& b, const IrreduciblePoly& f) {
    require_element_of(a, f, "mul_mod");
    require_element_of(b, f, "mul_mod");
    return divmod(mul(a, b), f.poly()).second;
}

Poly inv(const Poly& a, const IrreduciblePoly& f) {
    if (a.is_zero()) throw std::domain_error("inv: the zero polynomial has no inverse");
    require_element_of(a, f, "inv");
    const Prime p = a.prime();

    // Extended Euclid on (f, a), tracking only the coefficient of a.
    Poly r0 = f.poly(), r1 = a;
    Poly s0 = Poly::zero(p), s1 = Poly::one(p);
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        Poly s = sub(s0, mul(q, s1));
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s);
    }
    // r0 = gcd(f, a) is a nonzero constant since f is irreducible and deg a < deg f.
    const std::uint32_t c = scalar_inverse(r0.coeff(0), p);
    return mul(s0, Poly::constant(p, c));
}

Poly inv_oracle(const Poly& a, const IrreduciblePoly& f, std::uint64_t max_order) {
    if (a.is_zero()) throw std::domain_error("inv_oracle: the zero polynomial has no inverse");
    require_element_of(a, f, "inv_oracle");
    const std::uint64_t q = field_order(f.characteristic(), f.degree());
    require_guard(q, max_order, "inv_oracle");

    const Poly one = Poly::one(a.prime());
    for (std::uint64_t i = 1; i < q; ++i) {
        Poly b = Poly::from_index(a.prime(), i);
        if (mul_mod(a, b, f) == one) return b;
    }
    throw std::logic_error("inv_oracle: no inverse found; basis is not irreducible?");
}

bool is_irreducible(const Poly& f) {
    if (f.is_zero() || f.is_constant())
        throw std::invalid_argument("is_irreducible: input must have degree >= 1");
    if (!f.is_monic())
        throw std::invalid_argument("is_irreducible: input must be monic");

    const Prime p = f.prime();
    const unsigned n = static_cast<unsigned>(f.degree().value());

    // Rabin: f irreducible over F_p iff X^(p^n) = X (mod f) and
    // gcd(X^(p^(n/l)) - X, f) = 1 for every prime divisor l of n.
    // X^(p^m) is built by iterating the Frobenius map m times.
    std::vector<unsigned> checkpoints; // n/l for each prime l | n
    {
        unsigned m = n;
        for (unsigned d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                checkpoints.push_back(n / d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) checkpoints.push_back(n / m);
    }

    const Poly x = Poly::x(p);
    Poly t = divmod(x, f).second; // X mod f (handles n == 1)
    for (unsigned m = 1; m <= n; ++m) {
        // t <- t^p mod f
        Poly acc = Poly::one(p);
        Poly base = t;
        for (std::uint32_t e = p.value(); e > 0; e >>= 1) {
            if (e & 1) acc = divmod(mul(acc, base), f).second;
            if (e > 1) base = divmod(mul(base, base), f).second;
        }
        t = std::move(acc);

        for (unsigned cp : checkpoints) {
            if (m != cp) continue;
            // gcd(t - X, f) must be a nonzero constant
            Poly g0 = f, g1 = sub(t, divmod(x, f).second);
            while (!g1.is_zero()) {
                Poly r = divmod(g0, g1).second;
                g0 = std::move(g1);
                g1 = std::move(r);
            }
            if (!g0.is_constant()) return false;
        }
    }
    return t == divmod(x, f).second;
}

std::optional<Poly> find_nontrivial_factor(const Poly& f, std::uint64_t guard) {
    if (f.is_zero() || f.is_constant()) return std::nullopt;
    const Prime p = f.prime();
    const unsigned n = static_cast<unsigned>(f.degree().value());
    // Monic divisor candidates of degree 1..n/2 suffice.
    for (unsigned d = 1; 2 * d <= n; ++d) {
        const std::uint64_t lead = field_order(p.value(), d);
        require_guard(lead * 2, guard, "find_nontrivial_factor");
        for (std::uint64_t low = 0; low < lead; ++low) {
            Poly candidate = Poly::from_index(p, lead + low);
            if (divmod(f, candidate).second.is_zero()) return candidate;
        }
    }
    return std::nullopt;
}

std::vector<IrreduciblePoly> enumerate_irreducibles(Prime p, unsigned n, std::uint64_t guard) {
    if (n == 0) throw std::invalid_argument("enumerate_irreducibles: degree must be >= 1");
    const std::uint64_t lead = field_order(p.value(), n);
    require_guard(lead, guard, "enumerate_irreducibles");

    std::vector<IrreduciblePoly> out;
    for (std::uint64_t low = 0; low < lead; ++low) {
        Poly candidate = Poly::from_index(p, lead + low); // monic: leading digit is 1
        if (is_irreducible(candidate)) out.emplace_back(std::move(candidate));
    }
    return out;
}

std::uint64_t count_irreducibles(Prime p, unsigned n) {
    if (n == 0) throw std::invalid_argument("count_irreducibles: degree must be >= 1");
    // Distinct prime factors of n give the squarefree divisors; mu alternates
    // with the subset size.
    std::vector<unsigned> primes;
    {
        unsigned m = n;
        for (unsigned d = 2; d * d <= m; ++d) {
            if (m % d == 0) {
                primes.push_back(d);
                while (m % d == 0) m /= d;
            }
        }
        if (m > 1) primes.push_back(m);
    }
    std::uint64_t plus = 0, minus = 0;
    for (std::uint32_t mask = 0; mask < (1u << primes.size()); ++mask) {
        unsigned d = 1;
        for (std::size_t i = 0; i < primes.size(); ++i) {
            if (mask & (1u << i)) d *= primes[i];
        }
        const std::uint64_t term = field_order(p.value(), n / d);
        if (__builtin_popcount(mask) % 2 == 0) plus += term;
        else minus += term;
    }
    return (plus - minus) / n;
}

IrreduciblePoly random_irreducible(Prime p, unsigned n, SeededRng& rng) {
    if (n == 0) throw std::invalid_argument("random_irreducible: degree must be >= 1");
    const std::uint64_t lead = field_order(p.value(), n);
    while (true) {
        Poly candidate = Poly::from_index(p, lead + rng.uniform_below(lead));
        if (is_irreducible(candidate)) return IrreduciblePoly(std::move(candidate));
    }
}

std::vector<std::uint64_t> inverse_table(const IrreduciblePoly& f, std::uint64_t guard) {
    const std::uint64_t q = field_order(f.characteristic(), f.degree());
    require_guard(q, guard, "inverse_table");
    std::vector<std::uint64_t> table(q, 0);
    const Prime p = Prime(f.characteristic());
    for (std::uint64_t i = 1; i < q; ++i) {
        if (table[i] != 0) continue; // inverse pairs fill two slots at once
        const std::uint64_t j = inv(Poly::from_index(p, i), f).index();
        table[i] = j;
        table[j] = i;
    }
    return table;
}

} // namespace ffchain
