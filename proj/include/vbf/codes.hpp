#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vbf/vecfun.hpp"

namespace vbf {

// Everything needed to build one code: the function, the component index,
// the affine selector offsets, and (for subcodes) a hyperplane of the
// output field given by its trace normal u, H = { y : Tr_1^s(u*y) = 0 }.
// When the normal is present it must satisfy Tr_1^s(u*lambda) = 1, i.e.
// lambda lies outside H.
struct CodeSpec {
    VectorialFunction F;
    Elt lambda = 1;
    Elt offset_a = 0;
    int offset_c = 0;
    std::optional<Elt> hyperplane_normal;

    bool is_subcode() const { return hyperplane_normal.has_value(); }
};

// Construction parameters recorded on the built code, for reproducible
// artifact headers.
struct CodeProvenance {
    int m = 0, s = 0;
    std::uint32_t input_modulus = 0, output_modulus = 0;
    Elt lambda = 0, offset_a = 0;
    int offset_c = 0;
    std::optional<Elt> hyperplane_normal;
};

// A binary linear code: length n, dimension k, and k independent
// generator rows in reduced row echelon form, packed 64 bits per word
// (bit j of a row = coordinate at support element d_j).
class LinearCode {
public:
    LinearCode(std::uint32_t length, std::vector<std::vector<std::uint64_t>> rref_rows,
               std::vector<Elt> support, CodeProvenance provenance);

    std::uint32_t length() const { return n_; }
    int dimension() const { return int(rows_.size()); }
    std::size_t words_per_row() const { return (std::uint64_t(n_) + 63) / 64; }
    const std::vector<std::vector<std::uint64_t>>& generators() const { return rows_; }
    const std::vector<Elt>& support() const { return support_; }
    const CodeProvenance& provenance() const { return prov_; }

    int row_bit(int row, std::uint32_t col) const {
        return int(rows_[row][col >> 6] >> (col & 63) & 1);
    }

private:
    std::uint32_t n_;
    std::vector<std::vector<std::uint64_t>> rows_;
    std::vector<Elt> support_;
    CodeProvenance prov_;
};

// Multiset {(weight, multiplicity)}, ascending by weight.
struct WeightDistribution {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> entries;

    std::uint64_t total() const;
    std::uint64_t multiplicity(std::uint64_t w) const;
    bool operator==(const WeightDistribution&) const = default;

    static WeightDistribution from_histogram(const std::vector<std::uint64_t>& hist);
};

// Support = support of f_lambda + Tr(a*x) + c, ascending by encoding.
// Generator candidates: the m rows Tr_1^m(x^i * d_j); then, for the full
// code, the s rows Tr_1^s(x^k * F(d_j)) plus the all-one row when c = 1
// (the complemented component contributes the constant); for a subcode,
// s-1 rows Tr_1^s(h * F(d_j)) over a basis h of the hyperplane.
// Dimension is the GF(2) rank of those candidates.
LinearCode build_code(const CodeSpec& spec);

// Exact histogram over all 2^k codewords, enumerated with Gray-code
// single-row toggles. Guarded at k <= 26.
WeightDistribution weight_distribution_enum(const LinearCode& code);

constexpr int kEnumDimensionGuard = 26;

// Weight histogram computed from Walsh transforms instead of spanning
// the code: wt(c_{x,y}) = (n - S)/2 with
// S = (W_F(y, x) - (-1)^c * W_F(y+lambda, x+a)) / 2.
// Valid only when the (x,y) sweep enumerates the code exactly, i.e. the
// dimension is m+s (full code) or m+s-1 (subcode); for c = 1 full codes
// the sweep covers half the code twice and is folded with its complement.
// On rank drop the distribution is absent and `diagnostic` says why.
struct WalshDistributionResult {
    std::optional<WeightDistribution> distribution;
    std::string diagnostic;
};

WalshDistributionResult weight_distribution_walsh(const CodeSpec& spec,
                                                  const ComponentSpectra& spectra,
                                                  const LinearCode& code);
WalshDistributionResult weight_distribution_walsh(const CodeSpec& spec);

// Smallest nonzero weight; 0 for the degenerate distribution {(0,1)}.
std::uint64_t minimum_distance(const WeightDistribution& wd);

// "1+84z^{10}+63z^{12}+...+z^{28}": ascending weights, coefficient 1
// omitted on nonconstant terms.
std::string weight_enumerator_string(const WeightDistribution& wd);

// True iff the generator matrix has no zero column and no repeated
// column, i.e. the dual code has minimum weight >= 3.
bool dual_distance_at_least_3(const LinearCode& code);

bool contains_all_one(const LinearCode& code);

}  // namespace vbf
