#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vbf/gf2m.hpp"

namespace vbf {

// Walsh transform values under the trace inner product:
// values[a] = sum over x of (-1)^(f(x) + Tr(a*x)).
struct WalshSpectrum {
    std::vector<std::int64_t> values;

    std::int64_t at(Elt a) const { return values[a]; }
    std::int64_t max_abs() const;
};

// T = { a : W_f(a) = 0 } together with its subspace structure. When T is
// a hyperplane, `normal` is the nonzero element of T-perp under the trace
// pairing.
struct ZeroWalshSet {
    std::vector<Elt> elements;  // ascending by encoding
    bool is_subspace = false;
    int dimension = 0;  // meaningful only when is_subspace
    std::optional<Elt> normal;
};

// A Boolean function on F_{2^m}, stored as a packed truth table indexed
// by element encoding. Immutable after construction.
class BooleanFunction {
public:
    BooleanFunction(FieldSpec field, std::vector<std::uint64_t> packed);

    static BooleanFunction zero(const FieldSpec& field);

    template <typename Fn>
    static BooleanFunction from_predicate(const FieldSpec& field, Fn&& fn) {
        std::vector<std::uint64_t> packed((std::uint64_t(field.size()) + 63) / 64, 0);
        for (std::uint32_t x = 0; x < field.size(); ++x)
            if (fn(x) & 1) packed[x >> 6] |= std::uint64_t(1) << (x & 63);
        return BooleanFunction(field, std::move(packed));
    }

    const FieldSpec& field() const { return field_; }
    std::uint32_t domain_size() const { return field_.size(); }

    int operator()(std::uint32_t x) const {
        return int(packed_[x >> 6] >> (x & 63) & 1);
    }

    std::uint64_t weight() const;
    std::vector<Elt> support() const;
    bool is_balanced() const;

    WalshSpectrum walsh_full() const;
    std::int64_t walsh_at(Elt a) const;
    std::int64_t nonlinearity() const;

    bool is_bent() const;      // requires m even
    bool is_semibent() const;  // requires m odd

    // Moebius transform of the truth table; bit u is the coefficient of
    // the monomial prod x_i^{u_i} over the polynomial-basis coordinates.
    std::vector<std::uint64_t> anf() const;
    int algebraic_degree() const;  // 0 for the all-zero function

    // sum over x of (-1)^(f(x) + f(x+b))
    std::int64_t autocorrelation(Elt b) const;

    ZeroWalshSet zero_walsh_set() const;

    // Pointwise sum (XOR) of truth tables; fields must match.
    BooleanFunction operator+(const BooleanFunction& other) const;

    // Hex serialization, little-endian bit order: index 0 is the LSB of
    // the first byte.
    std::string to_hex() const;
    static BooleanFunction from_hex(const FieldSpec& field, const std::string& hex);

    const std::vector<std::uint64_t>& packed() const { return packed_; }

private:
    FieldSpec field_;
    std::vector<std::uint64_t> packed_;
};

}  // namespace vbf
