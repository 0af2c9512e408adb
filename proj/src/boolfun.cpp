#include "vbf/boolfun.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

namespace vbf {

namespace {

// In-place fast Walsh-Hadamard transform, dot-product indexing.
void fwht(std::vector<std::int64_t>& v) {
    const std::size_t n = v.size();
    for (std::size_t len = 1; len < n; len <<= 1) {
        for (std::size_t i = 0; i < n; i += len << 1) {
            for (std::size_t j = i; j < i + len; ++j) {
                std::int64_t a = v[j], b = v[j + len];
                v[j] = a + b;
                v[j + len] = a - b;
            }
        }
    }
}

// XOR-downward butterfly on packed bits: t[x] ^= t[x ^ 2^step] for every
// x with bit `step` set. Used for both ANF directions (it is an
// involution over GF(2)).
void moebius(std::vector<std::uint64_t>& bits, int m) {
    static constexpr std::uint64_t kLow[6] = {
        0x5555555555555555ull, 0x3333333333333333ull, 0x0f0f0f0f0f0f0f0full,
        0x00ff00ff00ff00ffull, 0x0000ffff0000ffffull, 0x00000000ffffffffull,
    };
    for (int step = 0; step < m; ++step) {
        if (step < 6) {
            const int sh = 1 << step;
            for (auto& w : bits) w ^= (w & kLow[step]) << sh;
        } else {
            const std::size_t half = std::size_t(1) << (step - 6);
            for (std::size_t base = 0; base < bits.size(); base += half << 1)
                for (std::size_t j = 0; j < half; ++j) bits[base + half + j] ^= bits[base + j];
        }
    }
}

}  // namespace

std::int64_t WalshSpectrum::max_abs() const {
    std::int64_t best = 0;
    for (std::int64_t v : values) best = std::max(best, v < 0 ? -v : v);
    return best;
}

BooleanFunction::BooleanFunction(FieldSpec field, std::vector<std::uint64_t> packed)
    : field_(field), packed_(std::move(packed)) {
    const std::size_t words = (std::uint64_t(field_.size()) + 63) / 64;
    if (packed_.size() != words)
        throw std::invalid_argument("truth table length must be 2^m bits");
    if (field_.size() < 64) {
        // keep bits above the domain clear so weight() can popcount words
        packed_[0] &= (std::uint64_t(1) << field_.size()) - 1;
    }
}

BooleanFunction BooleanFunction::zero(const FieldSpec& field) {
    return BooleanFunction(field, std::vector<std::uint64_t>((std::uint64_t(field.size()) + 63) / 64, 0));
}

std::uint64_t BooleanFunction::weight() const {
    std::uint64_t w = 0;
    for (std::uint64_t word : packed_) w += std::popcount(word);
    return w;
}

std::vector<Elt> BooleanFunction::support() const {
    std::vector<Elt> d;
    d.reserve(weight());
    for (std::uint32_t x = 0; x < domain_size(); ++x)
        if ((*this)(x)) d.push_back(x);
    return d;
}

bool BooleanFunction::is_balanced() const { return weight() == domain_size() / 2; }

WalshSpectrum BooleanFunction::walsh_full() const {
    const std::uint32_t n = domain_size();
    std::vector<std::int64_t> buf(n);
    for (std::uint32_t x = 0; x < n; ++x) buf[x] = (*this)(x) ? -1 : 1;
    fwht(buf);
    // buf is indexed by dot-product masks; reindex through the trace form.
    const auto tau = trace_mask_table(field_);
    WalshSpectrum spec;
    spec.values.resize(n);
    for (std::uint32_t a = 0; a < n; ++a) spec.values[a] = buf[tau[a]];
    return spec;
}

std::int64_t BooleanFunction::walsh_at(Elt a) const {
    const auto tr1 = trace1_table(field_);
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < domain_size(); ++x)
        acc += ((*this)(x) ^ tr1[mul(a, x, field_)]) ? -1 : 1;
    return acc;
}

std::int64_t BooleanFunction::nonlinearity() const {
    return std::int64_t(domain_size() / 2) - walsh_full().max_abs() / 2;
}

bool BooleanFunction::is_bent() const {
    const int m = field_.degree();
    if (m % 2 != 0) throw std::domain_error("bent functions require even m");
    const std::int64_t target = std::int64_t(1) << (m / 2);
    for (std::int64_t v : walsh_full().values)
        if (v != target && v != -target) return false;
    return true;
}

bool BooleanFunction::is_semibent() const {
    const int m = field_.degree();
    if (m % 2 != 1) throw std::domain_error("semi-bent functions require odd m");
    const std::int64_t target = std::int64_t(1) << ((m + 1) / 2);
    bool seen_zero = false, seen_peak = false;
    for (std::int64_t v : walsh_full().values) {
        if (v == 0)
            seen_zero = true;
        else if (v == target || v == -target)
            seen_peak = true;
        else
            return false;
    }
    return seen_zero && seen_peak;
}

std::vector<std::uint64_t> BooleanFunction::anf() const {
    std::vector<std::uint64_t> bits = packed_;
    moebius(bits, field_.degree());
    return bits;
}

int BooleanFunction::algebraic_degree() const {
    const auto coeffs = anf();
    int deg = 0;
    for (std::uint32_t u = 0; u < domain_size(); ++u)
        if (coeffs[u >> 6] >> (u & 63) & 1) deg = std::max(deg, std::popcount(u));
    return deg;
}

std::int64_t BooleanFunction::autocorrelation(Elt b) const {
    std::int64_t acc = 0;
    for (std::uint32_t x = 0; x < domain_size(); ++x)
        acc += ((*this)(x) ^ (*this)(x ^ b)) ? -1 : 1;
    return acc;
}

ZeroWalshSet BooleanFunction::zero_walsh_set() const {
    ZeroWalshSet out;
    const auto spec = walsh_full();
    for (std::uint32_t a = 0; a < domain_size(); ++a)
        if (spec.values[a] == 0) out.elements.push_back(a);

    // T is a subspace iff |T| = 2^rank(T); pivots are kept by leading bit.
    std::uint32_t piv[32] = {};
    std::vector<std::uint32_t> basis;
    for (std::uint32_t t : out.elements) {
        std::uint32_t cur = t;
        while (cur) {
            const int b = std::bit_width(cur) - 1;
            if (!piv[b]) {
                piv[b] = cur;
                basis.push_back(cur);
                break;
            }
            cur ^= piv[b];
        }
    }
    out.is_subspace = !out.elements.empty() && out.elements.front() == 0 &&
                      out.elements.size() == (std::size_t(1) << basis.size());
    out.dimension = int(basis.size());

    if (out.is_subspace && out.dimension == field_.degree() - 1) {
        const auto tr1 = trace1_table(field_);
        for (std::uint32_t u = 1; u < domain_size(); ++u) {
            bool ok = true;
            for (std::uint32_t b : basis)
                if (tr1[mul(u, b, field_)]) { ok = false; break; }
            if (ok) { out.normal = u; break; }
        }
    }
    return out;
}

BooleanFunction BooleanFunction::operator+(const BooleanFunction& other) const {
    if (!(field_ == other.field_))
        throw std::invalid_argument("mismatched fields in function sum");
    std::vector<std::uint64_t> bits = packed_;
    for (std::size_t i = 0; i < bits.size(); ++i) bits[i] ^= other.packed_[i];
    return BooleanFunction(field_, std::move(bits));
}

std::string BooleanFunction::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const std::size_t nbytes = (std::uint64_t(domain_size()) + 7) / 8;
    std::string out;
    out.reserve(nbytes * 2);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const std::uint8_t byte = std::uint8_t(packed_[b >> 3] >> ((b & 7) * 8));
        out.push_back(digits[byte >> 4]);
        out.push_back(digits[byte & 0xf]);
    }
    return out;
}

BooleanFunction BooleanFunction::from_hex(const FieldSpec& field, const std::string& hex) {
    const std::size_t nbytes = (std::uint64_t(field.size()) + 7) / 8;
    if (hex.size() != nbytes * 2)
        throw std::invalid_argument("hex truth table has wrong length");
    auto nibble = [](char c) -> std::uint64_t {
        if (c >= '0' && c <= '9') return std::uint64_t(c - '0');
        if (c >= 'a' && c <= 'f') return std::uint64_t(c - 'a' + 10);
        if (c >= 'A' && c <= 'F') return std::uint64_t(c - 'A' + 10);
        throw std::invalid_argument("bad hex digit");
    };
    std::vector<std::uint64_t> packed((std::uint64_t(field.size()) + 63) / 64, 0);
    for (std::size_t b = 0; b < nbytes; ++b) {
        const std::uint64_t byte = nibble(hex[2 * b]) << 4 | nibble(hex[2 * b + 1]);
        packed[b >> 3] |= byte << ((b & 7) * 8);
    }
    return BooleanFunction(field, std::move(packed));
}

}  // namespace vbf
