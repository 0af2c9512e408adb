#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "vbf/boolfun.hpp"
#include "vbf/gf2m.hpp"

namespace vbf {

// An (m,s)-function F_{2^m} -> F_{2^s} as a value table indexed by the
// input encoding. Immutable after construction.
class VectorialFunction {
public:
    VectorialFunction(FieldSpec input_field, FieldSpec output_field,
                      std::vector<std::uint32_t> table);

    int m() const { return in_.degree(); }
    int s() const { return out_.degree(); }
    const FieldSpec& input_field() const { return in_; }
    const FieldSpec& output_field() const { return out_; }
    const std::vector<std::uint32_t>& table() const { return table_; }
    std::uint32_t operator()(std::uint32_t x) const { return table_[x]; }

    static VectorialFunction identity(int m);
    static VectorialFunction power_function(int m, std::uint64_t d);

    // x^(2^i+1); requires m odd and gcd(i, m) = 1.
    static VectorialFunction gold(int m, int i);
    // x^(2^(2i)-2^i+1); requires m odd, 2 <= i <= (m-1)/2, gcd(i, m) = 1.
    static VectorialFunction kasami(int m, int i);
    // x^(2^((m-1)/2)+3); requires m odd.
    static VectorialFunction welch(int m);
    // Exponent picked from m mod 4: 2^((m-1)/2)+2^((m-1)/4)-1 for
    // m = 1 mod 4, 2^((m-1)/2)+2^((3m-1)/4)-1 for m = 3 mod 4.
    static VectorialFunction niho(int m);

    // (x,y) -> x*y in F_{2^half}; the input index encodes the pair as
    // x*2^half + y (low bits = y). m = 2*half, s = half.
    static VectorialFunction mm_product(int half);

    // (x,y) -> L(x*pi(y)) + H(y) with caller-supplied value tables over
    // F_{2^half}; L linear or affine, pi a permutation, H arbitrary.
    static VectorialFunction maiorana_mcfarland(int half,
                                                const std::vector<std::uint32_t>& L,
                                                const std::vector<std::uint32_t>& pi,
                                                const std::vector<std::uint32_t>& H);

    // "gold:5:1" | "kasami:7:2" | "welch:7" | "niho:9" | "mm:4" |
    // "power:9:19" | "identity:6" | path to a JSON table file.
    static VectorialFunction from_descriptor(const std::string& descriptor);

    std::string to_json() const;
    static VectorialFunction from_json(const std::string& text);

    // Table entries as fixed-width hex, ceil(s/4) digits each.
    std::string to_hex() const;

private:
    FieldSpec in_, out_;
    std::vector<std::uint32_t> table_;
};

// Component function f_lambda(x) = Tr_1^s(lambda * F(x)); lambda != 0.
BooleanFunction component(const VectorialFunction& F, Elt lambda);

// Selector f_lambda(x) + Tr_1^m(a*x) + c. Shifting a component by an
// affine function preserves the nonlinearity profile, so codes built on
// this support realize every length 2^(m-1) +- w/2 with w in the
// extended Walsh spectrum.
BooleanFunction with_affine_offset(const VectorialFunction& F, Elt lambda, Elt a, int c);

// Walsh transforms of all components, indexed [lambda][x]; lambda = 0
// follows the convention W(0, x) = 2^m * [x = 0].
class ComponentSpectra {
public:
    explicit ComponentSpectra(const VectorialFunction& F);

    std::int64_t walsh(Elt lambda, Elt x) const {
        if (lambda == 0) return x == 0 ? domain_size_ : 0;
        return spectra_[lambda - 1][x];
    }
    const std::vector<std::int64_t>& spectrum(Elt lambda) const {
        return spectra_[lambda - 1];
    }

private:
    std::int64_t domain_size_;
    std::vector<std::vector<std::int64_t>> spectra_;
};

// Multiset of |W_F(lambda, x)| over lambda != 0, all x, as value -> count.
struct ExtendedWalshSpectrum {
    std::map<std::int64_t, std::uint64_t> counts;

    std::uint64_t total() const;
    std::int64_t max_value() const;
};

ExtendedWalshSpectrum extended_walsh_spectrum(const VectorialFunction& F);

std::int64_t nonlinearity(const VectorialFunction& F);

// All components semi-bent; requires m = s odd.
bool is_almost_bent(const VectorialFunction& F);

// Every derivative x -> F(x) + F(x+a), a != 0, takes each output value
// exactly 2^(m-s) times. Cross-checked against all components bent.
bool is_perfect_nonlinear(const VectorialFunction& F);

}  // namespace vbf
