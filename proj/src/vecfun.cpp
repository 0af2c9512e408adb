#include "vbf/vecfun.hpp"

#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace vbf {

namespace {

int parse_int(const std::string& s) {
    std::size_t pos = 0;
    const int v = std::stoi(s, &pos);
    if (pos != s.size()) throw std::invalid_argument("bad integer: " + s);
    return v;
}

}  // namespace

VectorialFunction::VectorialFunction(FieldSpec input_field, FieldSpec output_field,
                                     std::vector<std::uint32_t> table)
    : in_(input_field), out_(output_field), table_(std::move(table)) {
    if (table_.size() != in_.size())
        throw std::invalid_argument("value table must have 2^m entries");
    for (std::uint32_t v : table_)
        if (v >= out_.size()) throw std::invalid_argument("table entry outside output field");
}

VectorialFunction VectorialFunction::identity(int m) {
    return power_function(m, 1);
}

VectorialFunction VectorialFunction::power_function(int m, std::uint64_t d) {
    FieldSpec k = FieldSpec::standard(m);
    if (d == 0 || d >= k.order())
        throw std::invalid_argument("power exponent must be in (0, 2^m-1)");
    std::vector<std::uint32_t> t(k.size());
    for (std::uint32_t x = 0; x < k.size(); ++x) t[x] = pow(x, d, k);
    return VectorialFunction(k, k, std::move(t));
}

VectorialFunction VectorialFunction::gold(int m, int i) {
    if (m % 2 == 0) throw std::invalid_argument("gold: m must be odd");
    if (i <= 0 || std::gcd(i, m) != 1) throw std::invalid_argument("gold: gcd(i, m) must be 1");
    return power_function(m, (std::uint64_t(1) << i) + 1);
}

VectorialFunction VectorialFunction::kasami(int m, int i) {
    if (m % 2 == 0) throw std::invalid_argument("kasami: m must be odd");
    if (i < 2 || i > (m - 1) / 2 || std::gcd(i, m) != 1)
        throw std::invalid_argument("kasami: need 2 <= i <= (m-1)/2 with gcd(i, m) = 1");
    return power_function(m, (std::uint64_t(1) << (2 * i)) - (std::uint64_t(1) << i) + 1);
}

VectorialFunction VectorialFunction::welch(int m) {
    if (m % 2 == 0) throw std::invalid_argument("welch: m must be odd");
    return power_function(m, (std::uint64_t(1) << ((m - 1) / 2)) + 3);
}

VectorialFunction VectorialFunction::niho(int m) {
    if (m % 2 == 0) throw std::invalid_argument("niho: m must be odd");
    std::uint64_t d;
    if (m % 4 == 1)
        d = (std::uint64_t(1) << ((m - 1) / 2)) + (std::uint64_t(1) << ((m - 1) / 4)) - 1;
    else
        d = (std::uint64_t(1) << ((m - 1) / 2)) + (std::uint64_t(1) << ((3 * m - 1) / 4)) - 1;
    return power_function(m, d);
}

VectorialFunction VectorialFunction::mm_product(int half) {
    if (half < 2) throw std::invalid_argument("mm_product: half must be >= 2");
    FieldSpec in = FieldSpec::standard(2 * half);
    FieldSpec out = FieldSpec::standard(half);
    const std::uint32_t mask = out.size() - 1;
    std::vector<std::uint32_t> t(in.size());
    for (std::uint32_t z = 0; z < in.size(); ++z)
        t[z] = mul(z >> half, z & mask, out);
    return VectorialFunction(in, out, std::move(t));
}

VectorialFunction VectorialFunction::maiorana_mcfarland(int half,
                                                        const std::vector<std::uint32_t>& L,
                                                        const std::vector<std::uint32_t>& pi,
                                                        const std::vector<std::uint32_t>& H) {
    if (half < 2) throw std::invalid_argument("maiorana_mcfarland: half must be >= 2");
    FieldSpec in = FieldSpec::standard(2 * half);
    FieldSpec out = FieldSpec::standard(half);
    const std::uint32_t q = out.size();
    if (L.size() != q || pi.size() != q || H.size() != q)
        throw std::invalid_argument("maiorana_mcfarland: tables must have 2^half entries");
    std::vector<std::uint8_t> seen(q, 0);
    for (std::uint32_t v : pi) {
        if (v >= q || seen[v]) throw std::invalid_argument("maiorana_mcfarland: pi is not a permutation");
        seen[v] = 1;
    }
    const std::uint32_t mask = q - 1;
    std::vector<std::uint32_t> t(in.size());
    for (std::uint32_t z = 0; z < in.size(); ++z) {
        const std::uint32_t x = z >> half, y = z & mask;
        t[z] = L[mul(x, pi[y], out)] ^ H[y];
    }
    return VectorialFunction(in, out, std::move(t));
}

VectorialFunction VectorialFunction::from_descriptor(const std::string& descriptor) {
    std::vector<std::string> parts;
    std::stringstream ss(descriptor);
    std::string item;
    while (std::getline(ss, item, ':')) parts.push_back(item);
    if (parts.empty()) throw std::invalid_argument("empty function descriptor");

    const std::string& kind = parts[0];
    auto want = [&](std::size_t n) {
        if (parts.size() != n)
            throw std::invalid_argument("descriptor " + kind + " takes " +
                                        std::to_string(n - 1) + " parameter(s)");
    };
    if (kind == "gold") { want(3); return gold(parse_int(parts[1]), parse_int(parts[2])); }
    if (kind == "kasami") { want(3); return kasami(parse_int(parts[1]), parse_int(parts[2])); }
    if (kind == "welch") { want(2); return welch(parse_int(parts[1])); }
    if (kind == "niho") { want(2); return niho(parse_int(parts[1])); }
    if (kind == "mm") { want(2); return mm_product(parse_int(parts[1])); }
    if (kind == "power") { want(3); return power_function(parse_int(parts[1]), std::stoull(parts[2])); }
    if (kind == "identity") { want(2); return identity(parse_int(parts[1])); }

    std::ifstream file(descriptor);
    if (!file) throw std::invalid_argument("unknown descriptor or unreadable file: " + descriptor);
    std::stringstream buf;
    buf << file.rdbuf();
    return from_json(buf.str());
}

std::string VectorialFunction::to_json() const {
    nlohmann::json j;
    j["m"] = m();
    j["s"] = s();
    j["modulus"] = modulus_to_string(in_.modulus());
    j["out_modulus"] = modulus_to_string(out_.modulus());
    j["table"] = table_;
    return j.dump();
}

VectorialFunction VectorialFunction::from_json(const std::string& text) {
    const auto j = nlohmann::json::parse(text);
    const int m = j.at("m").get<int>();
    const int s = j.at("s").get<int>();
    FieldSpec in = j.contains("modulus")
                       ? FieldSpec(m, parse_modulus(j["modulus"].get<std::string>()))
                       : FieldSpec::standard(m);
    FieldSpec out = j.contains("out_modulus")
                        ? FieldSpec(s, parse_modulus(j["out_modulus"].get<std::string>()))
                        : FieldSpec::standard(s);
    return VectorialFunction(in, out, j.at("table").get<std::vector<std::uint32_t>>());
}

std::string VectorialFunction::to_hex() const {
    static const char* digits = "0123456789abcdef";
    const int width = (s() + 3) / 4;
    std::string out;
    out.reserve(table_.size() * width);
    for (std::uint32_t v : table_)
        for (int d = width - 1; d >= 0; --d) out.push_back(digits[v >> (4 * d) & 0xf]);
    return out;
}

BooleanFunction component(const VectorialFunction& F, Elt lambda) {
    if (lambda == 0) throw std::domain_error("component: lambda must be nonzero");
    const auto tr1 = trace1_table(F.output_field());
    return BooleanFunction::from_predicate(F.input_field(), [&](std::uint32_t x) {
        return tr1[mul(lambda, F(x), F.output_field())];
    });
}

BooleanFunction with_affine_offset(const VectorialFunction& F, Elt lambda, Elt a, int c) {
    if (lambda == 0) throw std::domain_error("with_affine_offset: lambda must be nonzero");
    const auto tr1_out = trace1_table(F.output_field());
    const auto tr1_in = trace1_table(F.input_field());
    return BooleanFunction::from_predicate(F.input_field(), [&](std::uint32_t x) {
        return tr1_out[mul(lambda, F(x), F.output_field())] ^
               tr1_in[mul(a, x, F.input_field())] ^ (c & 1);
    });
}

ComponentSpectra::ComponentSpectra(const VectorialFunction& F)
    : domain_size_(std::int64_t(F.input_field().size())) {
    const std::uint32_t ncomp = F.output_field().size() - 1;
    spectra_.reserve(ncomp);
    for (Elt lambda = 1; lambda <= ncomp; ++lambda)
        spectra_.push_back(component(F, lambda).walsh_full().values);
}

std::uint64_t ExtendedWalshSpectrum::total() const {
    std::uint64_t t = 0;
    for (const auto& [v, c] : counts) t += c;
    return t;
}

std::int64_t ExtendedWalshSpectrum::max_value() const {
    return counts.empty() ? 0 : counts.rbegin()->first;
}

ExtendedWalshSpectrum extended_walsh_spectrum(const VectorialFunction& F) {
    ExtendedWalshSpectrum ew;
    for (Elt lambda = 1; lambda < F.output_field().size(); ++lambda) {
        for (std::int64_t v : component(F, lambda).walsh_full().values)
            ++ew.counts[v < 0 ? -v : v];
    }
    return ew;
}

std::int64_t nonlinearity(const VectorialFunction& F) {
    return std::int64_t(F.input_field().size() / 2) - extended_walsh_spectrum(F).max_value() / 2;
}

bool is_almost_bent(const VectorialFunction& F) {
    if (F.m() != F.s() || F.m() % 2 == 0)
        throw std::domain_error("is_almost_bent: requires m = s odd");
    for (Elt lambda = 1; lambda < F.output_field().size(); ++lambda)
        if (!component(F, lambda).is_semibent()) return false;
    return true;
}

bool is_perfect_nonlinear(const VectorialFunction& F) {
    const std::uint32_t n = F.input_field().size();
    const std::uint32_t q = F.output_field().size();
    if (n < q) return false;  // PN requires s <= m (in fact s <= m/2)
    const std::uint32_t target = n / q;
    std::vector<std::uint32_t> hits(q);
    bool balanced_derivatives = true;
    for (std::uint32_t a = 1; a < n && balanced_derivatives; ++a) {
        std::fill(hits.begin(), hits.end(), 0);
        for (std::uint32_t x = 0; x < n; ++x) ++hits[F(x) ^ F(x ^ a)];
        for (std::uint32_t v : hits)
            if (v != target) { balanced_derivatives = false; break; }
    }

    // The spectral characterization must agree: all components bent.
    bool all_bent = F.m() % 2 == 0;
    if (all_bent) {
        for (Elt lambda = 1; lambda < q; ++lambda)
            if (!component(F, lambda).is_bent()) { all_bent = false; break; }
    }
    if (balanced_derivatives != all_bent)
        throw std::logic_error("PN characterizations disagree");
    return balanced_derivatives;
}

}  // namespace vbf
