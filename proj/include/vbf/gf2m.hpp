#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace vbf {

// Element of F_{2^m} in polynomial basis: bit i of the value is the
// coefficient of x^i, so elements are integers in [0, 2^m).
using Elt = std::uint32_t;

// A binary field F_{2^m}, 2 <= m <= 20, fixed by a primitive polynomial.
// The modulus is a bitmask with bit i = coefficient of x^i; bit m is set
// and no bit above it. Construction verifies that x (the element 2) has
// multiplicative order 2^m - 1, which certifies both irreducibility and
// primitivity of the modulus.
class FieldSpec {
public:
    FieldSpec(int degree, std::uint32_t modulus);

    // Field with the fixed default modulus for this degree.
    static FieldSpec standard(int degree);

    int degree() const { return m_; }
    std::uint32_t modulus() const { return mod_; }
    std::uint32_t size() const { return 1u << m_; }
    std::uint64_t order() const { return (std::uint64_t(1) << m_) - 1; }

    // x is primitive by construction.
    Elt generator() const { return 2; }

    bool operator==(const FieldSpec&) const = default;

private:
    int m_;
    std::uint32_t mod_;
};

constexpr int kMinDegree = 2;
constexpr int kMaxDegree = 20;

// Fixed primitive polynomial per degree: the lexicographically smallest
// primitive polynomial, except for m in {5, 7, 9} where the table pins
// x^5+x^2+1, x^7+x+1 and x^9+x^4+1.
std::uint32_t default_modulus(int m);

Elt mul(Elt a, Elt b, const FieldSpec& k);
Elt sqr(Elt a, const FieldSpec& k);

// a^e with the convention 0^0 = 1.
Elt pow(Elt a, std::uint64_t e, const FieldSpec& k);

// Multiplicative inverse; throws std::domain_error on a = 0.
Elt inverse(Elt a, const FieldSpec& k);

// x -> x^{2^m-2} extended by 0 -> 0 (the inversion convention used by
// Kloosterman-type sums; note 2^m-2 = 0 would otherwise hit 0^0 = 1).
Elt inverse0(Elt a, const FieldSpec& k);

// Tr_t^m(a) = sum of a^{2^{t*i}}, i = 0..m/t-1; requires t | m.
// The result lies in the subfield F_{2^t} (r^{2^t} = r).
Elt trace(Elt a, int t, const FieldSpec& k);

// Absolute trace Tr_1^m as a bit.
int trace1(Elt a, const FieldSpec& k);

// Table of absolute traces, indexed by element encoding.
std::vector<std::uint8_t> trace1_table(const FieldSpec& k);

// For each a, a mask t such that Tr_1^m(a*y) = parity(t & y) for all y.
// This turns the trace pairing into a plain dot product; bit i of t is
// Tr_1^m(a * x^i).
std::vector<std::uint32_t> trace_mask_table(const FieldSpec& k);

// "x^5+x^2+1" style rendering of a modulus bitmask.
std::string modulus_to_string(std::uint32_t modulus);

// Accepts hex ("0x25"), decimal ("37") or polynomial ("x^5+x^2+1") form.
std::uint32_t parse_modulus(const std::string& text);

}  // namespace vbf
