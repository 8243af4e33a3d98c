#include "valsemi/scalar.hpp"

namespace valsemi {

namespace {

bool is_prime_u64(uint64_t p) {
    if (p < 2) return false;
    for (uint64_t d = 2; d * d <= p; ++d) {
        if (p % d == 0) return false;
    }
    return true;
}

uint64_t mod_add(uint64_t a, uint64_t b, uint64_t p) { return (a + b) % p; }
uint64_t mod_sub(uint64_t a, uint64_t b, uint64_t p) { return (a + p - b) % p; }
uint64_t mod_mul(uint64_t a, uint64_t b, uint64_t p) { return (a * b) % p; }

uint64_t mod_inv(uint64_t a, uint64_t p) {
    if (a == 0) fail_internal("division by zero in F_p");
    // extended Euclid on (a, p)
    int64_t t = 0, new_t = 1;
    int64_t r = static_cast<int64_t>(p), new_r = static_cast<int64_t>(a);
    while (new_r != 0) {
        int64_t q = r / new_r;
        int64_t tmp = t - q * new_t;
        t = new_t;
        new_t = tmp;
        tmp = r - q * new_r;
        r = new_r;
        new_r = tmp;
    }
    if (r != 1) fail_internal("non-invertible residue");
    if (t < 0) t += static_cast<int64_t>(p);
    return static_cast<uint64_t>(t);
}

}  // namespace

Field Field::prime(uint64_t p) {
    if (p >= (1ull << 31))
        fail_validation("prime modulus too large (must be < 2^31)");
    if (!is_prime_u64(p))
        fail_validation("field modulus " + std::to_string(p) + " is not prime");
    Field f;
    f.p_ = p;
    return f;
}

std::string Field::describe() const {
    return is_rational() ? std::string("Q") : "F_" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) {
    Scalar s;
    s.field_ = f;
    s.rat_ = 0;
    s.res_ = 0;
    return s;
}

Scalar Scalar::one(const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational())
        s.rat_ = 1;
    else
        s.res_ = 1 % f.characteristic();
    return s;
}

Scalar Scalar::integer(long long v, const Field& f) {
    Scalar s;
    s.field_ = f;
    if (f.is_rational()) {
        s.rat_ = v;
    } else {
        const uint64_t p = f.characteristic();
        int64_t m = static_cast<int64_t>(v % static_cast<long long>(p));
        if (m < 0) m += static_cast<int64_t>(p);
        s.res_ = static_cast<uint64_t>(m);
    }
    return s;
}

Scalar Scalar::rational(const BigRational& v) {
    Scalar s;
    s.field_ = Field::rationals();
    s.rat_ = v;
    return s;
}

Scalar Scalar::parse_rational(const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return rational(BigRational(BigInt(text)));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den == 0) fail_validation("rational with zero denominator: " + text);
        return rational(BigRational(num, den));
    } catch (const Error&) {
        throw;
    } catch (const std::exception&) {
        fail_validation("malformed rational scalar: \"" + text + "\"");
    }
}

Scalar Scalar::residue(uint64_t v, const Field& f) {
    if (f.is_rational()) fail_validation("residue scalar requires a prime field");
    Scalar s;
    s.field_ = f;
    s.res_ = v % f.characteristic();
    return s;
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_ == 0 : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1 % field_.characteristic();
}

void Scalar::check_same(const Scalar& o) const {
    if (field_ != o.field_) fail_validation("field mismatch");
}

Scalar Scalar::operator+(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ += o.rat_;
    else
        s.res_ = mod_add(res_, o.res_, field_.characteristic());
    return s;
}

Scalar Scalar::operator-(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ -= o.rat_;
    else
        s.res_ = mod_sub(res_, o.res_, field_.characteristic());
    return s;
}

Scalar Scalar::operator*(const Scalar& o) const {
    check_same(o);
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ *= o.rat_;
    else
        s.res_ = mod_mul(res_, o.res_, field_.characteristic());
    return s;
}

Scalar Scalar::operator/(const Scalar& o) const {
    check_same(o);
    if (o.is_zero()) fail_internal("scalar division by zero");
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ /= o.rat_;
    else
        s.res_ = mod_mul(res_, mod_inv(o.res_, field_.characteristic()),
                         field_.characteristic());
    return s;
}

Scalar Scalar::operator-() const {
    Scalar s = *this;
    if (field_.is_rational())
        s.rat_ = -rat_;
    else
        s.res_ = res_ == 0 ? 0 : field_.characteristic() - res_;
    return s;
}

bool Scalar::operator==(const Scalar& o) const {
    check_same(o);
    return field_.is_rational() ? rat_ == o.rat_ : res_ == o.res_;
}

Scalar Scalar::pow(uint64_t e) const {
    Scalar acc = one(field_);
    Scalar base = *this;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

Scalar Scalar::inverse() const {
    return one(field_) / *this;
}

std::string Scalar::to_string() const {
    if (!field_.is_rational()) return std::to_string(res_);
    const BigInt num = boost::multiprecision::numerator(rat_);
    const BigInt den = boost::multiprecision::denominator(rat_);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

}  // namespace valsemi
