#include "vbf/gf2m.hpp"

#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>

namespace vbf {

namespace {

// Lexicographically smallest primitive polynomial per degree, with the
// pinned choices for m in {5, 7, 9}.
constexpr std::uint32_t kDefaultModuli[kMaxDegree + 1] = {
    0,        0,        0x7,      0xb,      0x13,     0x25,     0x43,
    0x83,     0x11d,    0x211,    0x409,    0x805,    0x1053,   0x201b,
    0x402b,   0x8003,   0x1002d,  0x20009,  0x40027,  0x80027,  0x100009,
};

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
    std::vector<std::uint64_t> fs;
    for (std::uint64_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            fs.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) fs.push_back(n);
    return fs;
}

Elt raw_mul(Elt a, Elt b, int m, std::uint32_t mod) {
    std::uint32_t acc = 0;
    while (b) {
        if (b & 1) acc ^= a;
        b >>= 1;
        a <<= 1;
        if (a >> m & 1) a ^= mod;
    }
    return acc;
}

Elt raw_pow(Elt a, std::uint64_t e, int m, std::uint32_t mod) {
    Elt r = 1;
    while (e) {
        if (e & 1) r = raw_mul(r, a, m, mod);
        a = raw_mul(a, a, m, mod);
        e >>= 1;
    }
    return r;
}

}  // namespace

FieldSpec::FieldSpec(int degree, std::uint32_t modulus) : m_(degree), mod_(modulus) {
    if (degree < kMinDegree || degree > kMaxDegree)
        throw std::invalid_argument("field degree must be in [2, 20]");
    if (!(modulus >> degree & 1) || modulus >> (degree + 1) != 0)
        throw std::invalid_argument("modulus must have degree exactly m");
    // x must have order 2^m - 1; this also certifies irreducibility.
    std::uint64_t ord = (std::uint64_t(1) << degree) - 1;
    if (raw_pow(2, ord, degree, modulus) != 1)
        throw std::invalid_argument("modulus is not primitive: x^(2^m-1) != 1");
    for (std::uint64_t p : prime_factors(ord)) {
        if (raw_pow(2, ord / p, degree, modulus) == 1)
            throw std::invalid_argument("modulus is not primitive: x has small order");
    }
}

FieldSpec FieldSpec::standard(int degree) {
    return FieldSpec(degree, default_modulus(degree));
}

std::uint32_t default_modulus(int m) {
    if (m < kMinDegree || m > kMaxDegree)
        throw std::invalid_argument("default_modulus: degree must be in [2, 20]");
    return kDefaultModuli[m];
}

Elt mul(Elt a, Elt b, const FieldSpec& k) {
    assert(a < k.size() && b < k.size());
    return raw_mul(a, b, k.degree(), k.modulus());
}

Elt sqr(Elt a, const FieldSpec& k) { return mul(a, a, k); }

Elt pow(Elt a, std::uint64_t e, const FieldSpec& k) {
    assert(a < k.size());
    return raw_pow(a, e, k.degree(), k.modulus());
}

Elt inverse(Elt a, const FieldSpec& k) {
    if (a == 0) throw std::domain_error("inverse of 0");
    return pow(a, k.order() - 1, k);
}

Elt inverse0(Elt a, const FieldSpec& k) {
    return a == 0 ? 0 : pow(a, k.order() - 1, k);
}

Elt trace(Elt a, int t, const FieldSpec& k) {
    if (t <= 0 || k.degree() % t != 0)
        throw std::domain_error("trace: t must divide m");
    Elt acc = 0, x = a;
    for (int i = 0; i < k.degree() / t; ++i) {
        acc ^= x;
        for (int j = 0; j < t; ++j) x = sqr(x, k);
    }
    return acc;
}

int trace1(Elt a, const FieldSpec& k) {
    Elt acc = 0, x = a;
    for (int i = 0; i < k.degree(); ++i) {
        acc ^= x;
        x = sqr(x, k);
    }
    assert(acc <= 1);
    return int(acc);
}

std::vector<std::uint8_t> trace1_table(const FieldSpec& k) {
    // Tr(a) is linear: build from traces of the basis elements x^i.
    std::vector<std::uint8_t> t(k.size());
    std::vector<std::uint8_t> basis(k.degree());
    for (int i = 0; i < k.degree(); ++i) basis[i] = std::uint8_t(trace1(Elt(1) << i, k));
    for (std::uint32_t a = 0; a < k.size(); ++a) {
        std::uint8_t acc = 0;
        std::uint32_t v = a;
        while (v) {
            int i = std::countr_zero(v);
            acc ^= basis[i];
            v &= v - 1;
        }
        t[a] = acc;
    }
    return t;
}

std::vector<std::uint32_t> trace_mask_table(const FieldSpec& k) {
    const int m = k.degree();
    // tau(x^j) first, then extend by linearity in a.
    std::vector<std::uint32_t> tau_basis(m);
    for (int j = 0; j < m; ++j) {
        std::uint32_t mask = 0;
        for (int i = 0; i < m; ++i)
            mask |= std::uint32_t(trace1(mul(Elt(1) << j, Elt(1) << i, k), k)) << i;
        tau_basis[j] = mask;
    }
    std::vector<std::uint32_t> tau(k.size());
    for (std::uint32_t a = 0; a < k.size(); ++a) {
        std::uint32_t mask = 0, v = a;
        while (v) {
            int j = std::countr_zero(v);
            mask ^= tau_basis[j];
            v &= v - 1;
        }
        tau[a] = mask;
    }
    return tau;
}

std::string modulus_to_string(std::uint32_t modulus) {
    std::ostringstream out;
    bool first = true;
    for (int i = 31; i >= 0; --i) {
        if (!(modulus >> i & 1)) continue;
        if (!first) out << "+";
        if (i == 0)
            out << "1";
        else if (i == 1)
            out << "x";
        else
            out << "x^" << i;
        first = false;
    }
    return first ? "0" : out.str();
}

std::uint32_t parse_modulus(const std::string& text) {
    if (text.empty()) throw std::invalid_argument("empty modulus");
    if (text.find('x') != std::string::npos && text.rfind("0x", 0) != 0) {
        std::uint32_t mask = 0;
        size_t pos = 0;
        while (pos < text.size()) {
            size_t next = text.find('+', pos);
            std::string term = text.substr(pos, next == std::string::npos ? next : next - pos);
            if (term == "1")
                mask ^= 1;
            else if (term == "x")
                mask ^= 2;
            else if (term.rfind("x^", 0) == 0)
                mask ^= std::uint32_t(1) << std::stoi(term.substr(2));
            else
                throw std::invalid_argument("bad polynomial term: " + term);
            if (next == std::string::npos) break;
            pos = next + 1;
        }
        return mask;
    }
    return std::uint32_t(std::stoul(text, nullptr, 0));
}

}  // namespace vbf
