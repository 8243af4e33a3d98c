#include "valsemi/arrangement.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace valsemi {

uint64_t binomial(uint64_t n, uint64_t k) {
    if (k > n) return 0;
    k = std::min(k, n - k);
    uint64_t acc = 1;
    for (uint64_t i = 1; i <= k; ++i) {
        acc = acc * (n - k + i) / i;
    }
    return acc;
}

ToricArrangement::ToricArrangement(std::size_t n, std::size_t r, Field field,
                                   std::vector<std::vector<Scalar>> coeffs,
                                   std::vector<std::vector<uint32_t>> weights,
                                   uint64_t degree_cap)
    : n_(n),
      r_(r),
      field_(field),
      coeffs_(std::move(coeffs)),
      weights_(std::move(weights)),
      degree_cap_(degree_cap) {
    validate();
}

ToricArrangement ToricArrangement::lines(std::vector<std::vector<Scalar>> coeffs,
                                         uint64_t degree_cap) {
    if (coeffs.empty() || coeffs.front().empty())
        fail_validation("empty coefficient grid");
    const std::size_t r = coeffs.size();
    const std::size_t n = coeffs.front().size();
    const Field f = coeffs.front().front().field();
    std::vector<std::vector<uint32_t>> weights(r, std::vector<uint32_t>(n, 0));
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < n; ++j)
            weights[i][j] = coeffs[i][j].is_zero() ? 0 : 1;
    return ToricArrangement(n, r, f, std::move(coeffs), std::move(weights),
                            degree_cap);
}

void ToricArrangement::validate() const {
    if (n_ < 2) fail_validation("embedding dimension must be at least 2");
    if (r_ < 1) fail_validation("branch count must be at least 1");
    if (coeffs_.size() != r_) fail_validation("coeffs must have r rows");
    if (weights_.size() != r_) fail_validation("weights must have r rows");
    for (std::size_t i = 0; i < r_; ++i) {
        if (coeffs_[i].size() != n_)
            fail_validation("coeffs[" + std::to_string(i) + "] must have n entries");
        if (weights_[i].size() != n_)
            fail_validation("weights[" + std::to_string(i) + "] must have n entries");
        for (std::size_t j = 0; j < n_; ++j) {
            if (coeffs_[i][j].field() != field_)
                fail_validation("coeffs[" + std::to_string(i) + "][" +
                                std::to_string(j) + "]: field mismatch");
            const bool zero_coeff = coeffs_[i][j].is_zero();
            const bool zero_weight = weights_[i][j] == 0;
            if (zero_coeff != zero_weight)
                fail_validation("weights[" + std::to_string(i) + "][" +
                                std::to_string(j) +
                                "] must be zero exactly where the coefficient is zero");
        }
    }
    if (!field_.is_rational()) {
        const uint64_t p = field_.characteristic();
        if (p <= r_)
            fail_validation("prime field must satisfy p > r (p=" +
                            std::to_string(p) + ", r=" + std::to_string(r_) + ")");
        if (p <= degree_cap_)
            fail_validation("prime field must exceed the degree cap (p=" +
                            std::to_string(p) +
                            ", cap=" + std::to_string(degree_cap_) + ")");
    }
}

ExactMatrix ToricArrangement::coefficient_grid() const {
    return ExactMatrix::from_rows(coeffs_);
}

bool ToricArrangement::is_essential() const {
    if (rank(coefficient_grid()) != n_) return false;
    for (std::size_t i = 0; i < r_; ++i) {
        bool zero = true;
        for (const auto& c : coeffs_[i])
            if (!c.is_zero()) zero = false;
        if (zero) return false;
        for (std::size_t j = i + 1; j < r_; ++j)
            if (coeffs_[i] == coeffs_[j]) return false;
    }
    return true;
}

std::optional<std::vector<uint32_t>> ToricArrangement::distinguished_weights() const {
    std::vector<uint32_t> m(n_, 0);
    for (std::size_t j = 0; j < n_; ++j) {
        for (std::size_t i = 0; i < r_; ++i) {
            if (coeffs_[i][j].is_zero()) continue;
            if (m[j] == 0)
                m[j] = weights_[i][j];
            else if (m[j] != weights_[i][j])
                return std::nullopt;
        }
        // a column with no nonzero coefficient carries no constraint
        if (m[j] == 0) m[j] = 1;
    }
    return m;
}

bool ToricArrangement::is_line_arrangement() const {
    auto m = distinguished_weights();
    if (!m) return false;
    return std::all_of(m->begin(), m->end(), [](uint32_t w) { return w == 1; });
}

std::map<uint64_t, Polynomial> ToricArrangement::graded_components(
    const Polynomial& f, std::size_t branch) const {
    if (branch >= r_) fail_validation("branch index out of range");
    if (f.var_count() != n_) fail_validation("polynomial variable count mismatch");
    std::map<uint64_t, Polynomial> pieces;
    for (const auto& [e, c] : f.terms()) {
        const uint64_t s = Polynomial::weighted_degree(e, weights_[branch]);
        auto it = pieces.find(s);
        if (it == pieces.end())
            it = pieces.emplace(s, Polynomial(n_, field_)).first;
        it->second.add_term(e, c);
    }
    return pieces;
}

TruncatedSeriesTuple ToricArrangement::branch_series(const Polynomial& f,
                                                     uint64_t t) const {
    TruncatedSeriesTuple out;
    out.truncation = t;
    for (std::size_t i = 0; i < r_; ++i) {
        TruncatedSeries s;
        s.truncation = t;
        for (const auto& [deg, piece] : graded_components(f, i)) {
            if (deg > t) break;
            const Scalar v = piece.evaluate(coeffs_[i]);
            if (!v.is_zero()) s.terms.emplace_back(deg, v);
        }
        out.branches.push_back(std::move(s));
    }
    return out;
}

ValVector ToricArrangement::valuation(const Polynomial& f) const {
    std::vector<ExtNat> coords(r_, ExtNat::infinity());
    for (std::size_t i = 0; i < r_; ++i) {
        for (const auto& [deg, piece] : graded_components(f, i)) {
            if (!piece.evaluate(coeffs_[i]).is_zero()) {
                coords[i] = ExtNat(deg);
                break;
            }
        }
    }
    return ValVector(std::move(coords));
}

namespace {

constexpr std::size_t kBasisSizeCap = 100000;

// All exponent vectors with <I, m> = d, emitted with descending powers of the
// highest-index variable first. This is the single monomial order shared by
// monomial_basis and coefficient_matrix.
void enumerate_weighted(const std::vector<uint32_t>& m, uint64_t d,
                        std::size_t j, Exponent& cur,
                        std::vector<Exponent>& out) {
    if (out.size() > kBasisSizeCap)
        fail_budget("monomial basis exceeds size budget");
    if (j == 0) {
        if (d == 0) out.push_back(cur);
        return;
    }
    const std::size_t var = j - 1;
    const uint64_t w = m[var];
    if (w == 0) fail_internal("weight row with zero entry in enumeration");
    for (uint64_t e = d / w + 1; e-- > 0;) {
        if (e * w > d) continue;
        cur[var] = static_cast<uint32_t>(e);
        enumerate_weighted(m, d - e * w, var, cur, out);
    }
    cur[var] = 0;
}

std::vector<Exponent> weighted_basis(const std::vector<uint32_t>& m, uint64_t d) {
    std::vector<Exponent> out;
    Exponent cur(m.size(), 0);
    enumerate_weighted(m, d, m.size(), cur, out);
    return out;
}

}  // namespace

std::vector<Exponent> ToricArrangement::monomial_basis(uint64_t d) const {
    auto m = distinguished_weights();
    if (!m) fail_validation("semiring pipeline requires distinguished type");
    return weighted_basis(*m, d);
}

ExactMatrix ToricArrangement::evaluation_matrix(uint64_t d) const {
    const std::vector<Exponent> basis = monomial_basis(d);
    ExactMatrix e(r_, basis.size(), field_);
    for (std::size_t i = 0; i < r_; ++i) {
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Scalar val = Scalar::one(field_);
            for (std::size_t j = 0; j < n_; ++j) {
                if (basis[k][j] == 0) continue;
                val *= coeffs_[i][j].pow(basis[k][j]);
            }
            e.set(i, k, val);
        }
    }
    return e;
}

ExactMatrix coefficient_matrix(const std::vector<std::vector<Scalar>>& grid,
                               uint64_t d) {
    if (d < 1) fail_validation("coefficient matrix requires degree >= 1");
    if (grid.empty() || grid.front().empty())
        fail_validation("empty coefficient grid");
    const std::size_t r = grid.size();
    const std::size_t n = grid.front().size();
    const Field f = grid.front().front().field();
    const std::vector<Exponent> basis =
        weighted_basis(std::vector<uint32_t>(n, 1), d);
    ExactMatrix c(r, basis.size(), f);
    for (std::size_t i = 0; i < r; ++i) {
        if (grid[i].size() != n) fail_validation("ragged coefficient grid");
        for (std::size_t k = 0; k < basis.size(); ++k) {
            Scalar val = Scalar::one(f);
            for (std::size_t j = 0; j < n; ++j) {
                if (basis[k][j] == 0) continue;
                val *= grid[i][j].pow(basis[k][j]);
            }
            c.set(i, k, val);
        }
    }
    return c;
}

VeryUniformCheck is_very_uniform(const ToricArrangement& arr) {
    if (!arr.is_line_arrangement())
        fail_validation("very-uniform test requires a line arrangement");
    if (!arr.is_essential())
        fail_validation("very-uniform test requires an essential arrangement");
    const std::size_t n = arr.ambient_dim();
    const std::size_t r = arr.branch_count();

    VeryUniformCheck out;
    uint64_t d = 1;
    while (binomial(d + n - 1, n - 1) < r) ++d;
    out.threshold_degree = d;

    std::vector<std::vector<Scalar>> grid;
    for (std::size_t i = 0; i < r; ++i) grid.push_back(arr.branch_vector(i));

    out.very_uniform = true;
    for (uint64_t e = 1; e <= d; ++e) {
        const std::size_t expected = static_cast<std::size_t>(
            std::min<uint64_t>(r, binomial(e + n - 1, n - 1)));
        const std::size_t got = rank(coefficient_matrix(grid, e));
        out.checked.push_back({e, got, expected});
        if (got != expected) {
            out.very_uniform = false;
            out.failing_degree = e;
            break;
        }
    }
    return out;
}

namespace {

Scalar scalar_from_json(const nlohmann::json& v, const Field& f,
                        const std::string& where) {
    if (v.is_number_integer()) {
        return Scalar::integer(v.get<long long>(), f);
    }
    if (v.is_string()) {
        if (f.is_rational()) return Scalar::parse_rational(v.get<std::string>());
        fail_validation(where + ": string scalars require the rational field");
    }
    fail_validation(where + ": scalar must be an integer or a \"p/q\" string");
}

}  // namespace

ToricArrangement ToricArrangement::from_json_text(const std::string& text,
                                                  uint64_t degree_cap) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const std::exception& e) {
        fail_validation(std::string("input is not valid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail_validation("input document must be a JSON object");
    for (const char* key : {"n", "r", "coeffs"})
        if (!doc.contains(key))
            fail_validation(std::string("missing required key \"") + key + "\"");

    const std::size_t n = doc["n"].get<std::size_t>();
    const std::size_t r = doc["r"].get<std::size_t>();

    Field field = Field::rationals();
    if (doc.contains("field")) {
        const auto& fj = doc["field"];
        if (!fj.is_object() || !fj.contains("type"))
            fail_validation("\"field\" must be an object with a \"type\"");
        const std::string type = fj["type"].get<std::string>();
        if (type == "rational") {
            field = Field::rationals();
        } else if (type == "prime") {
            if (!fj.contains("p")) fail_validation("prime field requires \"p\"");
            field = Field::prime(fj["p"].get<uint64_t>());
        } else {
            fail_validation("field type must be \"rational\" or \"prime\"");
        }
    }

    const auto& cj = doc["coeffs"];
    if (!cj.is_array() || cj.size() != r)
        fail_validation("\"coeffs\" must be an array of r rows");
    std::vector<std::vector<Scalar>> coeffs;
    for (std::size_t i = 0; i < r; ++i) {
        if (!cj[i].is_array() || cj[i].size() != n)
            fail_validation("coeffs[" + std::to_string(i) +
                            "] must be an array of n entries");
        std::vector<Scalar> row;
        for (std::size_t j = 0; j < n; ++j)
            row.push_back(scalar_from_json(cj[i][j], field,
                                           "coeffs[" + std::to_string(i) + "][" +
                                               std::to_string(j) + "]"));
        coeffs.push_back(std::move(row));
    }

    std::vector<std::vector<uint32_t>> weights(r, std::vector<uint32_t>(n, 0));
    if (doc.contains("weights")) {
        const auto& wj = doc["weights"];
        if (!wj.is_array() || wj.size() != r)
            fail_validation("\"weights\" must be an array of r rows");
        for (std::size_t i = 0; i < r; ++i) {
            if (!wj[i].is_array() || wj[i].size() != n)
                fail_validation("weights[" + std::to_string(i) +
                                "] must be an array of n entries");
            for (std::size_t j = 0; j < n; ++j) {
                if (!wj[i][j].is_number_unsigned())
                    fail_validation("weights[" + std::to_string(i) + "][" +
                                    std::to_string(j) + "] must be a natural number");
                weights[i][j] = wj[i][j].get<uint32_t>();
            }
        }
    } else {
        // default: line arrangement
        for (std::size_t i = 0; i < r; ++i)
            for (std::size_t j = 0; j < n; ++j)
                weights[i][j] = coeffs[i][j].is_zero() ? 0 : 1;
    }

    return ToricArrangement(n, r, field, std::move(coeffs), std::move(weights),
                            degree_cap);
}

ToricArrangement ToricArrangement::from_json_file(const std::string& path,
                                                  uint64_t degree_cap) {
    std::ifstream in(path, std::ios::binary);
    if (!in) fail_validation("cannot open input file: " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return from_json_text(ss.str(), degree_cap);
}

}  // namespace valsemi
