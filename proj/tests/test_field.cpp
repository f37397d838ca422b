#include <doctest.h>

#include <set>
#include <stdexcept>

#include "ffchain/field.hpp"
#include "ffchain/poly.hpp"
#include "support/oracle_table.hpp"

using namespace ffchain;

namespace {

const Prime kTwo(2);

IrreduciblePoly F(std::uint64_t index, std::uint32_t p = 2) {
    return IrreduciblePoly(Poly::from_index(Prime(p), index));
}

Poly P2(const char* text) { return parse_poly(text, kTwo); }

// Trial-division irreducibility, the slow oracle for Rabin.
bool irreducible_by_trial_division(const Poly& f) {
    return !find_nontrivial_factor(f).has_value();
}

} // namespace

TEST_CASE("IrreduciblePoly validation") {
    CHECK(F(11).degree() == 3); // x^3+x+1
    CHECK(F(11).poly() == P2("x^3+x+1"));
    CHECK_THROWS_AS(IrreduciblePoly(P2("x^2")), std::domain_error);      // reducible
    CHECK_THROWS_AS(IrreduciblePoly(P2("1")), std::invalid_argument);    // constant
    CHECK_THROWS_AS(IrreduciblePoly(Poly::zero(kTwo)), std::invalid_argument);
    // non-monic inputs are rejected, not normalized
    CHECK_THROWS_AS(IrreduciblePoly(parse_poly("2*x^2+x+1", Prime(3))), std::invalid_argument);

    // reducible error names a factor
    try {
        IrreduciblePoly bad(P2("x^4"));
        FAIL("expected a throw");
    } catch (const std::domain_error& e) {
        CHECK(std::string(e.what()).find("not irreducible") != std::string::npos);
        CHECK(std::string(e.what()).find("factor") != std::string::npos);
    }
}

TEST_CASE("mul_mod reproduces the worked products") {
    // (x^2+x+1) * x^2 = 1 mod x^3+x+1
    CHECK(mul_mod(P2("x^2+x+1"), P2("x^2"), F(11)).is_one());
    // (x^2+x+1) * (x^2+1) = 1 mod x^3+x^2+1
    CHECK(mul_mod(P2("x^2+x+1"), P2("x^2+1"), F(13)).is_one());
    // multiplicative identity
    for (std::uint64_t i = 1; i < 8; ++i) {
        const Poly a = Poly::from_index(kTwo, i);
        CHECK(mul_mod(a, Poly::one(kTwo), F(11)) == a);
    }
    // degree violations
    CHECK_THROWS_AS(mul_mod(P2("x^3"), P2("x"), F(11)), std::invalid_argument);
    CHECK_THROWS_AS(mul_mod(P2("x"), P2("x^3+x"), F(11)), std::invalid_argument);
}

TEST_CASE("inv reproduces the worked inverses") {
    CHECK(inv(P2("x^2+x+1"), F(11)) == P2("x^2"));   // (111)---(100)
    CHECK(inv(P2("x^2+x+1"), F(13)) == P2("x^2+1")); // (111)- -(101)
    CHECK(inv(Poly::one(kTwo), F(11)).is_one());
    CHECK_THROWS_AS(inv(Poly::zero(kTwo), F(11)), std::domain_error);
    CHECK_THROWS_AS(inv(P2("x^3"), F(11)), std::invalid_argument);
}

TEST_CASE("constants invert to their scalar inverse under every basis") {
    for (std::uint32_t pv : {3u, 5u}) {
        const Prime p(pv);
        for (unsigned n = 2; n <= 3; ++n) {
            for (const auto& f : enumerate_irreducibles(p, n)) {
                for (std::uint32_t c = 1; c < pv; ++c) {
                    CHECK(inv(Poly::constant(p, c), f) ==
                          Poly::constant(p, scalar_inverse(c, p)));
                }
            }
        }
    }
}

TEST_CASE("involution and correctness, exhaustive for p=2 up to n=8") {
    for (unsigned n = 1; n <= 8; ++n) {
        for (const auto& f : enumerate_irreducibles(kTwo, n)) {
            const std::uint64_t q = field_order(2, n);
            for (std::uint64_t i = 1; i < q; ++i) {
                const Poly a = Poly::from_index(kTwo, i);
                const Poly b = inv(a, f);
                CHECK(mul_mod(a, b, f).is_one());
                CHECK(inv(b, f) == a);
            }
        }
    }
}

TEST_CASE("Claim 1: distinct bases give distinct inverses of non-constants") {
    // p = 2, n <= 6
    for (unsigned n = 2; n <= 6; ++n) {
        const auto irr = enumerate_irreducibles(kTwo, n);
        const std::uint64_t q = field_order(2, n);
        for (const auto& f1 : irr) {
            for (const auto& f2 : irr) {
                if (f1 == f2) continue;
                for (std::uint64_t i = 2; i < q; ++i) {
                    const Poly a = Poly::from_index(kTwo, i);
                    CHECK(inv(a, f1) != inv(a, f2));
                }
            }
        }
    }
    // p = 3, n <= 3
    const Prime three(3);
    for (unsigned n = 2; n <= 3; ++n) {
        const auto irr = enumerate_irreducibles(three, n);
        const std::uint64_t q = field_order(3, n);
        for (const auto& f1 : irr) {
            for (const auto& f2 : irr) {
                if (f1 == f2) continue;
                for (std::uint64_t i = 3; i < q; ++i) {
                    const Poly a = Poly::from_index(three, i);
                    CHECK(inv(a, f1) != inv(a, f2));
                }
            }
        }
    }
}

TEST_CASE("inv_oracle matches inv and the worked values") {
    CHECK(inv_oracle(P2("x^2+x+1"), F(11)) == P2("x^2"));
    CHECK(inv_oracle(Poly::one(kTwo), F(13)).is_one());
    for (std::uint64_t i = 1; i < 8; ++i) {
        const Poly a = Poly::from_index(kTwo, i);
        CHECK(inv_oracle(a, F(11)) == inv(a, F(11)));
        CHECK(inv_oracle(a, F(13)) == inv(a, F(13)));
    }
    CHECK_THROWS_AS(inv_oracle(Poly::zero(kTwo), F(11)), std::domain_error);
    CHECK_THROWS_AS(inv_oracle(P2("x"), F(11), 4), std::length_error); // guard
}

TEST_CASE("is_irreducible on the paper's bases") {
    CHECK(is_irreducible(P2("x^3+x+1")));
    CHECK(is_irreducible(P2("x^3+x^2+1")));
    CHECK(is_irreducible(P2("x^4+x^3+x^2+x+1")));
    CHECK_FALSE(is_irreducible(P2("x^2")));
    CHECK_FALSE(is_irreducible(P2("x^4"))); // x * x^3
    CHECK(is_irreducible(P2("x+1")));
    CHECK_THROWS_AS(is_irreducible(Poly::one(kTwo)), std::invalid_argument);
    CHECK_THROWS_AS(is_irreducible(parse_poly("2*x^2+1", Prime(3))), std::invalid_argument);
}

TEST_CASE("Rabin agrees with trial division for p=2 up to n=10") {
    for (unsigned n = 1; n <= 10; ++n) {
        const std::uint64_t lead = field_order(2, n);
        for (std::uint64_t low = 0; low < lead; ++low) {
            const Poly candidate = Poly::from_index(kTwo, lead + low);
            CHECK(is_irreducible(candidate) == irreducible_by_trial_division(candidate));
        }
    }
}

TEST_CASE("find_nontrivial_factor") {
    CHECK(find_nontrivial_factor(P2("x^4")) == P2("x"));
    CHECK_FALSE(find_nontrivial_factor(P2("x^3+x+1")).has_value());
    // (x^2+x+1)^2 = x^4+x^2+1 over F_2; smallest monic factor has degree 2
    CHECK(find_nontrivial_factor(P2("x^4+x^2+1")) == P2("x^2+x+1"));
}

TEST_CASE("enumerate_irreducibles known lists") {
    const auto deg3 = enumerate_irreducibles(kTwo, 3);
    REQUIRE(deg3.size() == 2);
    CHECK(deg3[0].poly() == P2("x^3+x+1"));
    CHECK(deg3[1].poly() == P2("x^3+x^2+1"));

    const auto deg1 = enumerate_irreducibles(kTwo, 1);
    REQUIRE(deg1.size() == 2);
    CHECK(deg1[0].poly() == P2("x"));
    CHECK(deg1[1].poly() == P2("x+1"));

    const auto deg4 = enumerate_irreducibles(kTwo, 4);
    REQUIRE(deg4.size() == 3);
    CHECK(deg4[0].poly() == P2("x^4+x+1"));
    CHECK(deg4[1].poly() == P2("x^4+x^3+1"));
    CHECK(deg4[2].poly() == P2("x^4+x^3+x^2+x+1"));

    // ascending by index
    for (std::size_t i = 1; i < deg4.size(); ++i) CHECK(deg4[i - 1].index() < deg4[i].index());

    CHECK_THROWS_AS(enumerate_irreducibles(kTwo, 12, 1024), std::length_error);
}

TEST_CASE("count_irreducibles matches enumeration") {
    CHECK(count_irreducibles(kTwo, 1) == 2);
    CHECK(count_irreducibles(kTwo, 3) == 2);
    CHECK(count_irreducibles(kTwo, 6) == 9);
    const std::uint64_t expected_2[] = {2, 1, 2, 3, 6, 9, 18, 30}; // n = 1..8
    for (unsigned n = 1; n <= 8; ++n) CHECK(count_irreducibles(kTwo, n) == expected_2[n - 1]);

    for (unsigned n = 1; n <= 10; ++n)
        CHECK(enumerate_irreducibles(kTwo, n).size() == count_irreducibles(kTwo, n));
    for (std::uint32_t pv : {3u, 5u}) {
        for (unsigned n = 1; n <= 6; ++n)
            CHECK(enumerate_irreducibles(Prime(pv), n).size() == count_irreducibles(Prime(pv), n));
    }
}

TEST_CASE("random_irreducible") {
    SeededRng rng(99);
    const auto valid = enumerate_irreducibles(kTwo, 3);
    for (int i = 0; i < 20; ++i) {
        const IrreduciblePoly f = random_irreducible(kTwo, 3, rng);
        CHECK((f == valid[0] || f == valid[1]));
    }

    SeededRng r1(5), r2(5);
    CHECK(random_irreducible(kTwo, 8, r1) == random_irreducible(kTwo, 8, r2));

    // frequency over (2,3): each of the two outcomes within 0.5 +/- 0.05
    SeededRng freq_rng(1234);
    int count_11 = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        if (random_irreducible(kTwo, 3, freq_rng).index() == 11) ++count_11;
    }
    const double fraction = static_cast<double>(count_11) / draws;
    CHECK(fraction > 0.45);
    CHECK(fraction < 0.55);
}

TEST_CASE("inverse_table matches per-element inv") {
    const auto table = inverse_table(F(11));
    CHECK(table[0] == 0);
    CHECK(table[1] == 1);
    CHECK(table[2] == 5);
    CHECK(table[3] == 6);
    CHECK(table[4] == 7);
    CHECK(table[5] == 2);
    CHECK(table[6] == 3);
    CHECK(table[7] == 4);
    CHECK_THROWS_AS(inverse_table(F(11), 4), std::length_error);
}

TEST_CASE("batch oracle table equals literal inv_oracle on small fields") {
    struct Range { std::uint32_t p; unsigned n_max; };
    for (const Range r : {Range{2, 8}, Range{3, 4}, Range{5, 3}}) {
        const Prime p(r.p);
        for (unsigned n = 1; n <= r.n_max; ++n) {
            for (const auto& f : enumerate_irreducibles(p, n)) {
                const auto batch = ffchain::testing::oracle_inverse_table(f);
                const std::uint64_t q = field_order(r.p, n);
                for (std::uint64_t i = 1; i < q; ++i) {
                    CHECK(batch[i] == inv_oracle(Poly::from_index(p, i), f).index());
                }
            }
        }
    }
}
