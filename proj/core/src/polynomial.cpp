#include "valsemi/polynomial.hpp"

#include <algorithm>

namespace valsemi {

Polynomial Polynomial::constant(std::size_t n, const Scalar& c) {
    Polynomial p(n, c.field());
    p.add_term(Exponent(n, 0), c);
    return p;
}

Polynomial Polynomial::variable(std::size_t n, std::size_t j, const Field& f) {
    if (j >= n) fail_validation("variable index out of range");
    Polynomial p(n, f);
    Exponent e(n, 0);
    e[j] = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

Polynomial Polynomial::monomial(const Exponent& e, const Scalar& c) {
    Polynomial p(e.size(), c.field());
    p.add_term(e, c);
    return p;
}

void Polynomial::add_term(const Exponent& e, const Scalar& c) {
    if (e.size() != n_) fail_validation("exponent length mismatch");
    if (c.field() != field_) fail_validation("field mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(e);
    if (it == terms_.end()) {
        terms_.emplace(e, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
    if (n_ != o.n_) fail_validation("variable count mismatch");
    Polynomial p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, c);
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
    if (n_ != o.n_) fail_validation("variable count mismatch");
    Polynomial p = *this;
    for (const auto& [e, c] : o.terms_) p.add_term(e, -c);
    return p;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
    if (n_ != o.n_) fail_validation("variable count mismatch");
    Polynomial p(n_, field_);
    for (const auto& [e1, c1] : terms_) {
        for (const auto& [e2, c2] : o.terms_) {
            Exponent e(n_);
            for (std::size_t i = 0; i < n_; ++i) e[i] = e1[i] + e2[i];
            p.add_term(e, c1 * c2);
        }
    }
    return p;
}

Polynomial Polynomial::scaled(const Scalar& c) const {
    Polynomial p(n_, field_);
    for (const auto& [e, coeff] : terms_) p.add_term(e, coeff * c);
    return p;
}

bool Polynomial::operator==(const Polynomial& o) const {
    return n_ == o.n_ && terms_ == o.terms_;
}

Scalar Polynomial::evaluate(const std::vector<Scalar>& point) const {
    if (point.size() != n_) fail_validation("evaluation point length mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t j = 0; j < n_; ++j) {
            if (e[j] == 0) continue;  // 0^0 = 1
            term *= point[j].pow(e[j]);
        }
        acc += term;
    }
    return acc;
}

uint64_t Polynomial::weighted_degree(const Exponent& e,
                                     const std::vector<uint32_t>& w) {
    if (e.size() != w.size()) fail_validation("weight row length mismatch");
    uint64_t d = 0;
    for (std::size_t j = 0; j < e.size(); ++j)
        d += static_cast<uint64_t>(e[j]) * w[j];
    return d;
}

std::string Polynomial::to_string() const {
    if (terms_.empty()) return "0";
    // render in descending exponent order so leading monomials come first
    std::vector<std::pair<Exponent, Scalar>> items(terms_.begin(), terms_.end());
    std::reverse(items.begin(), items.end());
    std::string out;
    for (const auto& [e, c] : items) {
        std::string mono;
        for (std::size_t j = 0; j < n_; ++j) {
            if (e[j] == 0) continue;
            if (!mono.empty()) mono += "*";
            mono += "x" + std::to_string(j + 1);
            if (e[j] > 1) mono += "^" + std::to_string(e[j]);
        }
        std::string coeff = c.to_string();
        std::string piece;
        if (mono.empty())
            piece = coeff;
        else if (coeff == "1")
            piece = mono;
        else if (coeff == "-1")
            piece = "-" + mono;
        else
            piece = coeff + "*" + mono;
        if (out.empty()) {
            out = piece;
        } else if (!piece.empty() && piece[0] == '-') {
            out += " - " + piece.substr(1);
        } else {
            out += " + " + piece;
        }
    }
    return out;
}

TruncatedSeries series_product(const TruncatedSeries& a, const TruncatedSeries& b,
                               const Field& f) {
    TruncatedSeries out;
    out.truncation = std::min(a.truncation, b.truncation);
    std::map<uint64_t, Scalar> acc;
    for (const auto& [oa, ca] : a.terms) {
        for (const auto& [ob, cb] : b.terms) {
            const uint64_t o = oa + ob;
            if (o > out.truncation) continue;
            auto it = acc.find(o);
            if (it == acc.end())
                acc.emplace(o, ca * cb);
            else
                it->second += ca * cb;
        }
    }
    for (const auto& [o, c] : acc)
        if (!c.is_zero()) out.terms.emplace_back(o, c);
    (void)f;
    return out;
}

TruncatedSeriesTuple series_product(const TruncatedSeriesTuple& a,
                                    const TruncatedSeriesTuple& b, const Field& f) {
    if (a.branches.size() != b.branches.size())
        fail_validation("branch count mismatch in series product");
    TruncatedSeriesTuple out;
    out.truncation = std::min(a.truncation, b.truncation);
    for (std::size_t i = 0; i < a.branches.size(); ++i)
        out.branches.push_back(series_product(a.branches[i], b.branches[i], f));
    return out;
}

}  // namespace valsemi
