#include "knead/angle.hpp"

namespace knead {

Angle::Angle(BigInt numerator, BigInt denominator) : num_(std::move(numerator)), den_(std::move(denominator)) {
    if (den_ <= 0) throw std::invalid_argument("Angle: denominator must be positive");
    num_ %= den_;
    if (num_ < 0) num_ += den_;
    reduce();
}

void Angle::reduce() {
    BigInt g = boost::multiprecision::gcd(num_, den_);
    if (g > 1) {
        num_ /= g;
        den_ /= g;
    }
    if (num_ == 0) den_ = 1;
}

Angle Angle::parse(std::string_view text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string_view::npos) return Angle(BigInt(std::string(text)), 1);
        return Angle(BigInt(std::string(text.substr(0, slash))), BigInt(std::string(text.substr(slash + 1))));
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("Angle::parse: expected p/q, got '" + std::string(text) + "'");
    }
}

std::string Angle::str() const { return num_.str() + "/" + den_.str(); }

Angle Angle::doubled() const { return Angle(2 * num_, den_); }

Angle Angle::plus(const Angle& o) const { return Angle(num_ * o.den_ + o.num_ * den_, den_ * o.den_); }

Angle Angle::minus(const Angle& o) const { return Angle(num_ * o.den_ - o.num_ * den_, den_ * o.den_); }

Angle Angle::halved() const { return Angle(num_, 2 * den_); }

Angle Angle::scaled_pow2(long long m, const BigInt& j) const {
    if (m < 0 || m > 4096) throw std::invalid_argument("Angle::scaled_pow2: scale out of range");
    BigInt p2 = BigInt(1) << static_cast<unsigned>(m);
    return Angle(num_ * p2 + j * den_, den_ * p2);
}

Angle Angle::circle_distance(const Angle& o) const {
    Angle d = minus(o);  // in [0,1)
    Angle e = o.minus(*this);
    return d < e ? d : e;
}

double Angle::to_double() const { return num_.convert_to<double>() / den_.convert_to<double>(); }

OrbitShape orbit_shape(const Angle& theta) {
    BigInt q = theta.den();
    long long v = 0;
    while (q % 2 == 0) {
        q /= 2;
        ++v;
    }
    // Multiplicative order of 2 modulo the odd part (1 when q == 1).
    long long period = 1;
    if (q > 1) {
        BigInt x = 2 % q;
        period = 1;
        while (x != 1) {
            x = (2 * x) % q;
            ++period;
            if (period > 1'000'000) throw std::length_error("orbit_shape: period too large");
        }
    }
    return OrbitShape{v, period};
}

Seq kneading_of_angle(const Angle& theta) {
    if (theta.is_zero()) throw std::invalid_argument("kneading_of_angle: theta = 0 has no kneading sequence");
    // Partition endpoints theta/2 and (theta+1)/2 = theta/2 + 1/2 both lie in
    // [0,1) with lo < hi, so A_1 is the plain open interval (lo, hi); no
    // wraparound is needed, and theta itself lies inside it.
    const Angle lo = theta.halved();
    const Angle hi = lo.plus(Angle(1, 2));
    if (!(lo < theta && theta < hi)) throw std::logic_error("kneading_of_angle: theta must lie in A_1");

    const OrbitShape shape = orbit_shape(theta);
    const long long total = shape.preperiod + shape.period;
    Word symbols;
    symbols.reserve(static_cast<std::size_t>(total));
    Angle x = theta;
    for (long long k = 1; k <= total; ++k) {
        if (x == lo || x == hi) {
            // Boundary hit: nu is star-periodic with period k.
            Word per(symbols.begin(), symbols.end());
            per.push_back(Symbol::Star);
            return Seq({}, std::move(per));
        }
        symbols.push_back(lo < x && x < hi ? Symbol::One : Symbol::Zero);
        x = x.doubled();
    }
    Word pre(symbols.begin(), symbols.begin() + static_cast<std::ptrdiff_t>(shape.preperiod));
    Word per(symbols.begin() + static_cast<std::ptrdiff_t>(shape.preperiod), symbols.end());
    return Seq(std::move(pre), std::move(per));
}

bool is_recurrent_angle(const Angle& theta) { return orbit_shape(theta).preperiod == 0; }

}  // namespace knead
