#include "ffchain/poly.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <stdexcept>

namespace ffchain {

Prime::Prime(std::uint32_t value) : value_(value) {
    if (value < 2) throw std::invalid_argument("Prime: value must be >= 2");
    for (std::uint64_t d = 2; d * d <= value; ++d) {
        if (value % d == 0) throw std::invalid_argument("Prime: " + std::to_string(value) + " is composite");
    }
}

int Degree::value() const {
    if (neg_inf_) throw std::logic_error("Degree: negative infinity has no integer value");
    return value_;
}

Poly::Poly(Prime p, std::vector<std::uint32_t> coeffs) : p_(p.value()), coeffs_(std::move(coeffs)) {
    for (auto& c : coeffs_) c %= p_;
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Poly Poly::from_index(Prime p, std::uint64_t index) {
    std::vector<std::uint32_t> c;
    while (index > 0) {
        c.push_back(static_cast<std::uint32_t>(index % p.value()));
        index /= p.value();
    }
    return Poly(p, std::move(c));
}

Degree Poly::degree() const noexcept {
    if (coeffs_.empty()) return Degree::neg_infinity();
    return Degree::of(static_cast<int>(coeffs_.size()) - 1);
}

std::uint64_t Poly::index() const {
    unsigned __int128 acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * p_ + *it;
        if (acc > ~std::uint64_t{0}) throw std::overflow_error("Poly::index: does not fit in 64 bits");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

void require_same_characteristic(const Poly& a, const Poly& b) {
    if (a.characteristic() != b.characteristic())
        throw std::invalid_argument("polynomials have mismatched characteristics " +
                                    std::to_string(a.characteristic()) + " and " +
                                    std::to_string(b.characteristic()));
}

} // namespace

Poly add(const Poly& a, const Poly& b) {
    require_same_characteristic(a, b);
    const std::uint32_t p = a.characteristic();
    std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + b.coeff(i)) % p;
    return Poly(Prime(p), std::move(c));
}

Poly sub(const Poly& a, const Poly& b) {
    require_same_characteristic(a, b);
    const std::uint32_t p = a.characteristic();
    std::vector<std::uint32_t> c(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < c.size(); ++i) c[i] = (a.coeff(i) + p - b.coeff(i)) % p;
    return Poly(Prime(p), std::move(c));
}

Poly mul(const Poly& a, const Poly& b) {
    require_same_characteristic(a, b);
    const std::uint32_t p = a.characteristic();
    if (a.is_zero() || b.is_zero()) return Poly::zero(Prime(p));
    std::vector<std::uint64_t> acc(a.coeffs().size() + b.coeffs().size() - 1, 0);
    for (std::size_t i = 0; i < a.coeffs().size(); ++i) {
        if (a.coeffs()[i] == 0) continue;
        for (std::size_t j = 0; j < b.coeffs().size(); ++j) {
            acc[i + j] += static_cast<std::uint64_t>(a.coeffs()[i]) * b.coeffs()[j] % p;
        }
    }
    std::vector<std::uint32_t> c(acc.size());
    for (std::size_t i = 0; i < acc.size(); ++i) c[i] = static_cast<std::uint32_t>(acc[i] % p);
    return Poly(Prime(p), std::move(c));
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    require_same_characteristic(a, b);
    const std::uint32_t p = a.characteristic();
    if (b.is_zero()) throw std::domain_error("divmod: division by the zero polynomial");
    if (a.degree() < b.degree()) return {Poly::zero(Prime(p)), a};

    const std::size_t db = b.coeffs().size() - 1;
    const std::uint32_t lead_inv = scalar_inverse(b.coeffs().back(), Prime(p));
    std::vector<std::uint32_t> r(a.coeffs());
    std::vector<std::uint32_t> q(a.coeffs().size() - db, 0);

    for (std::size_t i = r.size(); i-- > db;) {
        if (r[i] == 0) continue;
        const std::uint32_t factor =
            static_cast<std::uint32_t>(static_cast<std::uint64_t>(r[i]) * lead_inv % p);
        q[i - db] = factor;
        for (std::size_t j = 0; j <= db; ++j) {
            const std::uint64_t prod = static_cast<std::uint64_t>(factor) * b.coeffs()[j] % p;
            r[i - db + j] = static_cast<std::uint32_t>((r[i - db + j] + p - prod) % p);
        }
    }
    return {Poly(Prime(p), std::move(q)), Poly(Prime(p), std::move(r))};
}

std::uint32_t scalar_inverse(std::uint32_t c, Prime p) {
    c %= p.value();
    if (c == 0) throw std::domain_error("scalar_inverse: zero has no inverse");
    // Fermat: c^(p-2)
    std::uint64_t result = 1, base = c;
    for (std::uint32_t e = p.value() - 2; e > 0; e >>= 1) {
        if (e & 1) result = result * base % p.value();
        base = base * base % p.value();
    }
    return static_cast<std::uint32_t>(result);
}

std::uint64_t pow_u64(std::uint64_t base, unsigned exp) {
    unsigned __int128 acc = 1;
    for (unsigned i = 0; i < exp; ++i) {
        acc *= base;
        if (acc > ~std::uint64_t{0}) throw std::overflow_error("pow_u64: overflow");
    }
    return static_cast<std::uint64_t>(acc);
}

namespace {

[[noreturn]] void parse_fail(std::string_view text, const std::string& why) {
    throw std::invalid_argument("cannot parse polynomial \"" + std::string(text) + "\": " + why);
}

std::uint64_t parse_number(std::string_view text, std::string_view digits) {
    std::uint64_t value = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), value);
    if (ec != std::errc() || ptr != digits.data() + digits.size()) parse_fail(text, "bad number");
    return value;
}

} // namespace

Poly parse_poly(std::string_view text, Prime p) {
    std::string s;
    s.reserve(text.size());
    for (char ch : text) {
        if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
    }
    if (s.empty()) parse_fail(text, "empty input");

    if (s[0] == '#') {
        const std::uint64_t idx = parse_number(text, std::string_view(s).substr(1));
        return Poly::from_index(p, idx);
    }

    std::vector<std::uint32_t> coeffs;
    std::size_t pos = 0;
    while (pos < s.size()) {
        std::size_t end = s.find('+', pos);
        if (end == std::string::npos) end = s.size();
        std::string_view term = std::string_view(s).substr(pos, end - pos);
        if (term.empty()) parse_fail(text, "empty term");

        std::uint64_t c = 1;
        unsigned k = 0;
        std::size_t i = 0;
        if (std::isdigit(static_cast<unsigned char>(term[0]))) {
            std::size_t d = 0;
            while (d < term.size() && std::isdigit(static_cast<unsigned char>(term[d]))) ++d;
            c = parse_number(text, term.substr(0, d));
            i = d;
            if (i < term.size() && term[i] == '*') ++i;
            if (i == term.size()) k = 0; // pure constant
        }
        if (i < term.size()) {
            if (term[i] != 'x' && term[i] != 'X') parse_fail(text, "expected 'x'");
            ++i;
            k = 1;
            if (i < term.size()) {
                if (term[i] != '^') parse_fail(text, "expected '^'");
                ++i;
                const std::uint64_t e = parse_number(text, term.substr(i));
                if (e > 10000) parse_fail(text, "exponent too large");
                k = static_cast<unsigned>(e);
                i = term.size();
            }
        }
        if (i != term.size()) parse_fail(text, "trailing characters in term");

        if (coeffs.size() < k + 1) coeffs.resize(k + 1, 0);
        coeffs[k] = static_cast<std::uint32_t>((coeffs[k] + c % p.value()) % p.value());
        pos = end + (end < s.size() ? 1 : 0);
        if (end == s.size() - 1 && s.back() == '+') parse_fail(text, "dangling '+'");
    }
    return Poly(p, std::move(coeffs));
}

std::string to_symbolic(const Poly& a) {
    if (a.is_zero()) return "0";
    std::string out;
    for (std::size_t i = a.coeffs().size(); i-- > 0;) {
        const std::uint32_t c = a.coeffs()[i];
        if (c == 0) continue;
        if (!out.empty()) out += '+';
        if (i == 0) {
            out += std::to_string(c);
        } else {
            if (c != 1) {
                out += std::to_string(c);
                out += '*';
            }
            out += 'x';
            if (i > 1) {
                out += '^';
                out += std::to_string(i);
            }
        }
    }
    return out;
}

std::string to_indexed(const Poly& a) {
    return "#" + std::to_string(a.index());
}

std::string digit_label(const Poly& a, unsigned n) {
    const bool wide = a.characteristic() > 10;
    std::string out;
    for (unsigned i = n; i-- > 0;) {
        out += std::to_string(a.coeff(i));
        if (wide && i > 0) out += '.';
    }
    return out;
}

} // namespace ffchain
