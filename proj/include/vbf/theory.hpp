#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "vbf/codes.hpp"

namespace vbf {

// A closed-form weight distribution together with the parameters it was
// evaluated from. The table formulas contain fractional terms; they are
// evaluated in exact rational arithmetic and asserted integral.
struct PredictedDistribution {
    std::string source;  // "table1" | "table2" | "table3" | "table5"
    int m = 0;
    std::uint64_t n_f = 0;
    WeightDistribution distribution;
};

// Full-code distribution for a perfect nonlinear (m, m/2)-function;
// n_f in {2^(m-1) - 2^(m/2-1), 2^(m-1) + 2^(m/2-1)}, m even >= 4.
PredictedDistribution table1_prediction(int m, std::uint64_t n_f);

// Full-code distribution for a bijective power almost bent function on
// odd m >= 5 with a balanced selector (length 2^(m-1)).
PredictedDistribution table2_prediction(int m);

// Subcode distribution for a perfect nonlinear function with F(0) = 0.
PredictedDistribution table3_prediction(int m, std::uint64_t n_f);

// Subcode distribution for a Gold function on odd m >= 5 with the
// hyperplane of normal nu^-1; uses the closed-form Kloosterman value.
PredictedDistribution table5_prediction(int m);

// K(1) = 1 - sum_{t=0}^{floor(m/2)} (-1)^(m-t) * m/(m-t) * C(m-t,t) * 2^t.
std::int64_t kloosterman_closed(int m);

// K(1) = sum over x of (-1)^Tr(x^(2^m-2) + x), with 0 mapped to 0 by the
// inversion (the x = 0 term contributes +1).
std::int64_t kloosterman_brute(int m);
std::int64_t kloosterman_brute(const FieldSpec& k);

// Spectrum point counts for a function whose Walsh values lie in
// {0, +-2^s_exp}: how many points carry each value, predicted from m,
// s_exp and f(0) against the actual spectrum.
struct SpectrumCounts {
    std::int64_t zero = 0, plus = 0, minus = 0;
};
struct SpectrumCountsCheck {
    SpectrumCounts predicted, empirical;
    bool match = false;
};
SpectrumCountsCheck anne_counts(const BooleanFunction& f, int s_exp);

// Counts of W_{f_{lambda+y}}(x) - W_{f_y}(x) over x in F_{2^m} and
// y outside {0, lambda}, for a bijective power almost bent function.
struct WalshDiffCountsCheck {
    std::map<std::int64_t, std::uint64_t> predicted, empirical;
    bool match = false;
};
WalshDiffCountsCheck walsh_diff_counts(const VectorialFunction& F, Elt lambda);

// Walsh value counts of a balanced quadratic semi-bent function over the
// hyperplane E = { a : Tr(u*a) = 0 }, E distinct from the zero-Walsh
// hyperplane T; counts predicted from f(0) and f(u).
struct HyperplaneCountsCheck {
    SpectrumCounts predicted, empirical;
    bool match = false;
};
HyperplaneCountsCheck hyperplane_walsh_counts(const BooleanFunction& f, Elt normal);

// sum (W_lambda - W_mu)^2 = 2^(m+2) * n_nu  and
// sum (W_lambda + W_mu)^2 = 2^(2m+2) - 2^(m+2) * n_nu,
// where n_nu is the weight of f_lambda + f_mu.
bool squaresum_identity_check(const BooleanFunction& f_lambda, const BooleanFunction& f_mu);

// Weights of the codeword set { (Tr(x*d + lambda*F(d)))_{d in D} : x }
// with D the support of the component at nu = lambda + mu, for a Gold
// function; compared against the closed form driven by Tr(lambda/mu) and
// Tr(mu/lambda).
struct SLambdaCheck {
    WeightDistribution predicted, empirical;
    bool match = false;
};
SLambdaCheck s_lambda_distribution(const VectorialFunction& F, Elt lambda, Elt mu);

// Counts of the pair (Tr(x/(x+mu)), Tr((x+mu)/x)) over the hyperplane
// { x : Tr(x/mu) = 0 }, with ratios evaluated through the 0 -> 0
// inversion so x = 0 contributes the pair (0,0). Setting include_zero
// to false drops the x = 0 term instead (the alternative convention;
// brute force shows the default is the one that matches).
struct KlooPairsCheck {
    std::array<std::int64_t, 4> predicted{}, empirical{};  // (0,0),(0,1),(1,0),(1,1)
    bool match = false;
};
KlooPairsCheck kloo_pairs_counts(int m, Elt mu, bool include_zero = true);
KlooPairsCheck kloo_pairs_counts(const FieldSpec& k, Elt mu, bool include_zero = true);

// Verification harness: builds the relevant objects, computes empirical
// results, evaluates predictions, reports per-row diffs.
struct VerifyRow {
    std::string label;
    std::string predicted;
    std::string empirical;
    bool match = false;
};
struct VerifyReport {
    std::string target;
    nlohmann::json params;
    std::vector<VerifyRow> rows;
    bool pass = false;

    nlohmann::json to_json() const;
};

VerifyReport verify(const std::string& target, const nlohmann::json& params = {});
std::vector<std::string> verify_targets();

}  // namespace vbf
