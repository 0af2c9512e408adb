#include "vbf/codes.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace vbf {

namespace {

// Reduced row echelon form over GF(2); returns independent rows sorted by
// pivot column. Rows are packed bit vectors of `words` words.
std::vector<std::vector<std::uint64_t>> rref(std::vector<std::vector<std::uint64_t>> rows,
                                             std::size_t words) {
    struct Pivot {
        std::uint32_t col;
        std::vector<std::uint64_t> row;
    };
    std::vector<Pivot> pivots;
    auto lowest_bit = [&](const std::vector<std::uint64_t>& r) -> std::int64_t {
        for (std::size_t w = 0; w < words; ++w)
            if (r[w]) return std::int64_t(w * 64 + std::countr_zero(r[w]));
        return -1;
    };
    for (auto& row : rows) {
        for (const auto& p : pivots)
            if (row[p.col >> 6] >> (p.col & 63) & 1)
                for (std::size_t w = 0; w < words; ++w) row[w] ^= p.row[w];
        const std::int64_t col = lowest_bit(row);
        if (col < 0) continue;
        // clear the new pivot column from earlier rows
        for (auto& p : pivots)
            if (p.row[col >> 6] >> (col & 63) & 1)
                for (std::size_t w = 0; w < words; ++w) p.row[w] ^= row[w];
        pivots.push_back({std::uint32_t(col), std::move(row)});
    }
    std::sort(pivots.begin(), pivots.end(),
              [](const Pivot& a, const Pivot& b) { return a.col < b.col; });
    std::vector<std::vector<std::uint64_t>> out;
    out.reserve(pivots.size());
    for (auto& p : pivots) out.push_back(std::move(p.row));
    return out;
}

// s-1 independent elements of { y : Tr_1^s(u*y) = 0 }.
std::vector<Elt> hyperplane_basis(const FieldSpec& out, Elt u) {
    const auto tr1 = trace1_table(out);
    std::vector<Elt> basis;
    std::uint32_t piv[32] = {};
    for (std::uint32_t y = 1; y < out.size(); ++y) {
        if (tr1[mul(u, y, out)]) continue;
        std::uint32_t cur = y;
        while (cur) {
            const int b = std::bit_width(cur) - 1;
            if (!piv[b]) {
                piv[b] = cur;
                basis.push_back(y);
                break;
            }
            cur ^= piv[b];
        }
        if (int(basis.size()) == out.degree() - 1) break;
    }
    return basis;
}

}  // namespace

LinearCode::LinearCode(std::uint32_t length, std::vector<std::vector<std::uint64_t>> rref_rows,
                       std::vector<Elt> support, CodeProvenance provenance)
    : n_(length), rows_(std::move(rref_rows)), support_(std::move(support)), prov_(provenance) {}

std::uint64_t WeightDistribution::total() const {
    std::uint64_t t = 0;
    for (const auto& [w, a] : entries) t += a;
    return t;
}

std::uint64_t WeightDistribution::multiplicity(std::uint64_t w) const {
    for (const auto& [wi, a] : entries)
        if (wi == w) return a;
    return 0;
}

WeightDistribution WeightDistribution::from_histogram(const std::vector<std::uint64_t>& hist) {
    WeightDistribution wd;
    for (std::uint64_t w = 0; w < hist.size(); ++w)
        if (hist[w]) wd.entries.emplace_back(w, hist[w]);
    return wd;
}

LinearCode build_code(const CodeSpec& spec) {
    const FieldSpec& in = spec.F.input_field();
    const FieldSpec& out = spec.F.output_field();
    const int m = in.degree(), s = out.degree();
    if (spec.lambda == 0 || spec.lambda >= out.size())
        throw std::invalid_argument("build_code: lambda must be a nonzero output element");
    if (spec.offset_a >= in.size())
        throw std::invalid_argument("build_code: offset outside input field");
    if (spec.hyperplane_normal) {
        const Elt u = *spec.hyperplane_normal;
        if (u == 0 || u >= out.size() || trace1(mul(u, spec.lambda, out), out) != 1)
            throw std::invalid_argument(
                "build_code: hyperplane normal must satisfy Tr(u*lambda) = 1");
    }

    const BooleanFunction selector =
        with_affine_offset(spec.F, spec.lambda, spec.offset_a, spec.offset_c);
    const std::vector<Elt> support = selector.support();
    if (support.empty()) throw std::domain_error("build_code: empty support");

    const std::uint32_t n = std::uint32_t(support.size());
    const std::size_t words = (std::uint64_t(n) + 63) / 64;
    const auto tau_in = trace_mask_table(in);
    const auto tau_out = trace_mask_table(out);

    std::vector<std::vector<std::uint64_t>> rows;
    auto add_row = [&](auto&& bit_at) {
        std::vector<std::uint64_t> row(words, 0);
        for (std::uint32_t j = 0; j < n; ++j)
            if (bit_at(j)) row[j >> 6] |= std::uint64_t(1) << (j & 63);
        rows.push_back(std::move(row));
    };

    for (int i = 0; i < m; ++i)
        add_row([&](std::uint32_t j) { return tau_in[support[j]] >> i & 1; });

    if (!spec.is_subcode()) {
        for (int k = 0; k < s; ++k)
            add_row([&](std::uint32_t j) { return tau_out[spec.F(support[j])] >> k & 1; });
        if (spec.offset_c & 1)
            add_row([&](std::uint32_t) { return 1; });
    } else {
        for (Elt h : hyperplane_basis(out, *spec.hyperplane_normal))
            add_row([&](std::uint32_t j) {
                return std::popcount(tau_out[spec.F(support[j])] & h) & 1;
            });
    }

    CodeProvenance prov;
    prov.m = m;
    prov.s = s;
    prov.input_modulus = in.modulus();
    prov.output_modulus = out.modulus();
    prov.lambda = spec.lambda;
    prov.offset_a = spec.offset_a;
    prov.offset_c = spec.offset_c & 1;
    prov.hyperplane_normal = spec.hyperplane_normal;
    return LinearCode(n, rref(std::move(rows), words), support, prov);
}

WeightDistribution weight_distribution_enum(const LinearCode& code) {
    const int k = code.dimension();
    if (k > kEnumDimensionGuard)
        throw std::length_error("weight_distribution_enum: dimension exceeds guard");
    const std::size_t words = code.words_per_row();
    const auto& rows = code.generators();

    std::vector<std::uint64_t> hist(code.length() + 1, 0);
    std::vector<std::uint64_t> acc(words, 0);
    hist[0] = 1;
    for (std::uint64_t t = 1; t < (std::uint64_t(1) << k); ++t) {
        // Gray order: step t toggles generator ctz(t).
        const auto& row = rows[std::countr_zero(t)];
        std::uint64_t w = 0;
        for (std::size_t i = 0; i < words; ++i) {
            acc[i] ^= row[i];
            w += std::popcount(acc[i]);
        }
        ++hist[w];
    }
    return WeightDistribution::from_histogram(hist);
}

WalshDistributionResult weight_distribution_walsh(const CodeSpec& spec,
                                                  const ComponentSpectra& spectra,
                                                  const LinearCode& code) {
    const int m = spec.F.m(), s = spec.F.s();
    const int expected = spec.is_subcode() ? m + s - 1 : m + s;
    if (code.dimension() != expected) {
        std::ostringstream msg;
        msg << "codeword map (x,y) -> c_{x,y} is not injective: dimension "
            << code.dimension() << " < " << expected << "; use the enumeration path";
        return {std::nullopt, msg.str()};
    }

    const std::uint32_t nx = spec.F.input_field().size();
    const std::uint32_t ny = spec.F.output_field().size();
    const std::int64_t n = code.length();
    const std::int64_t sign = (spec.offset_c & 1) ? -1 : 1;

    std::vector<Elt> ys;
    if (spec.is_subcode()) {
        const auto tr1 = trace1_table(spec.F.output_field());
        const Elt u = *spec.hyperplane_normal;
        for (std::uint32_t y = 0; y < ny; ++y)
            if (!tr1[mul(u, y, spec.F.output_field())]) ys.push_back(y);
    } else {
        ys.resize(ny);
        for (std::uint32_t y = 0; y < ny; ++y) ys[y] = y;
    }

    std::vector<std::uint64_t> hist(n + 1, 0);
    for (Elt y : ys) {
        const Elt yl = y ^ spec.lambda;
        for (std::uint32_t x = 0; x < nx; ++x) {
            const std::int64_t inner =
                (spectra.walsh(y, x) - sign * spectra.walsh(yl, x ^ spec.offset_a)) / 2;
            const std::int64_t w = (n - inner) / 2;
            assert(w >= 0 && w <= n);
            ++hist[w];
        }
    }

    if (!spec.is_subcode() && (spec.offset_c & 1)) {
        // The sweep hits each codeword of an index-2 subcode twice; the
        // actual code is that subcode together with its complement.
        std::vector<std::uint64_t> folded(n + 1, 0);
        for (std::int64_t w = 0; w <= n; ++w) {
            const std::uint64_t sum = hist[w] + hist[n - w];
            assert(sum % 2 == 0);
            folded[w] = sum / 2;
        }
        hist.swap(folded);
    }
    return {WeightDistribution::from_histogram(hist), ""};
}

WalshDistributionResult weight_distribution_walsh(const CodeSpec& spec) {
    return weight_distribution_walsh(spec, ComponentSpectra(spec.F), build_code(spec));
}

std::uint64_t minimum_distance(const WeightDistribution& wd) {
    for (const auto& [w, a] : wd.entries)
        if (w > 0) return w;
    return 0;
}

std::string weight_enumerator_string(const WeightDistribution& wd) {
    std::ostringstream out;
    bool first = true;
    for (const auto& [w, a] : wd.entries) {
        if (!first) out << "+";
        if (w == 0)
            out << a;
        else {
            if (a != 1) out << a;
            out << "z^{" << w << "}";
        }
        first = false;
    }
    return out.str();
}

bool dual_distance_at_least_3(const LinearCode& code) {
    const int k = code.dimension();
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(code.length() * 2);
    for (std::uint32_t j = 0; j < code.length(); ++j) {
        std::uint64_t col = 0;
        for (int i = 0; i < k; ++i) col |= std::uint64_t(code.row_bit(i, j)) << i;
        if (col == 0 || !seen.insert(col).second) return false;
    }
    return true;
}

bool contains_all_one(const LinearCode& code) {
    const std::size_t words = code.words_per_row();
    std::vector<std::uint64_t> v(words, ~std::uint64_t(0));
    if (code.length() % 64)
        v[words - 1] = (std::uint64_t(1) << (code.length() % 64)) - 1;
    for (const auto& row : code.generators()) {
        // rows are in RREF: pivot = lowest set bit
        std::uint32_t pivot = 0;
        for (std::size_t w = 0; w < words; ++w)
            if (row[w]) { pivot = std::uint32_t(w * 64 + std::countr_zero(row[w])); break; }
        if (v[pivot >> 6] >> (pivot & 63) & 1)
            for (std::size_t w = 0; w < words; ++w) v[w] ^= row[w];
    }
    return std::all_of(v.begin(), v.end(), [](std::uint64_t w) { return w == 0; });
}

}  // namespace vbf
