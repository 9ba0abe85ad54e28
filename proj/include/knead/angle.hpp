#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include "knead/sequence.hpp"

namespace knead {

using BigInt = boost::multiprecision::cpp_int;

// Exact rational angle on the circle R/Z, stored as a reduced fraction in
// [0, 1).  All comparisons are exact; no floating point enters the angle
// combinatorics anywhere.
class Angle {
  public:
    Angle() : num_(0), den_(1) {}
    Angle(BigInt numerator, BigInt denominator);

    static Angle parse(std::string_view text);  // "p/q" or "p"
    std::string str() const;

    const BigInt& num() const { return num_; }
    const BigInt& den() const { return den_; }
    bool is_zero() const { return num_ == 0; }

    Angle doubled() const;               // 2*theta mod 1
    Angle plus(const Angle& o) const;    // mod 1
    Angle minus(const Angle& o) const;   // mod 1
    Angle halved() const;                // theta/2 (in [0, 1/2))
    Angle scaled_pow2(long long m, const BigInt& j) const;  // theta + j/2^m mod 1

    // Circle metric min(|a-b|, 1-|a-b|) as an exact fraction <= 1/2.
    Angle circle_distance(const Angle& o) const;

    double to_double() const;

    bool operator==(const Angle& o) const { return num_ == o.num_ && den_ == o.den_; }
    bool operator!=(const Angle& o) const { return !(*this == o); }
    bool operator<(const Angle& o) const { return num_ * o.den_ < o.num_ * den_; }

  private:
    BigInt num_, den_;
    void reduce();
};

struct OrbitShape {
    long long preperiod = 0;  // 0 iff the angle is periodic under doubling
    long long period = 1;
    bool operator==(const OrbitShape& o) const = default;
};

// Orbit classification under doubling: preperiod = 2-adic valuation of the
// denominator, period = multiplicative order of 2 modulo the odd part.
OrbitShape orbit_shape(const Angle& theta);

// The partition kneading map: A_1 is the open arc (theta/2, (theta+1)/2),
// which contains theta; iterates landing on a boundary point emit a star and
// close the sequence as star-periodic of that period.  theta = 0 is rejected.
Seq kneading_of_angle(const Angle& theta);

// Raw orbit fact: does a strict forward iterate return exactly to theta
// (i.e. is theta periodic under doubling)?  The Hoelder harness treats all
// rational angles as non-recurrent per the periodic-sequences convention.
bool is_recurrent_angle(const Angle& theta);

}  // namespace knead
