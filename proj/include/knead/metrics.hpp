#pragma once

#include <optional>

#include "knead/sequence.hpp"

namespace knead {

// Result of a first-difference query.  For a pair of eventually periodic
// sequences the answer is always exact (Finite or Infinity); for bounded
// streams the comparison may run out of symbols, which is reported honestly
// as BeyondHorizon instead of guessing.
struct DepthResult {
    enum class Kind { Finite, Infinity, BeyondHorizon } kind;
    long long value = 0;  // the position for Finite, the horizon reached for BeyondHorizon

    static DepthResult finite(long long k) { return {Kind::Finite, k}; }
    static DepthResult infinity() { return {Kind::Infinity, 0}; }
    static DepthResult beyond(long long horizon) { return {Kind::BeyondHorizon, horizon}; }

    bool is_finite() const { return kind == Kind::Finite; }
    bool is_infinity() const { return kind == Kind::Infinity; }
    bool at_least(long long k) const { return !is_finite() || value >= k; }

    bool operator==(const DepthResult& o) const = default;
};

std::string to_string(const DepthResult& d);

// diff: position of the first difference, star counted as wildcard.
// Exact for eventually periodic inputs: decided over
// max(preperiods) + lcm(periods) positions.
DepthResult diff(const Seq& a, const Seq& b);
DepthResult diff(const Seq& a, const BoundedStream& b, long long horizon);
DepthResult diff(const BoundedStream& a, const BoundedStream& b, long long horizon);

// Diff: max over e in {0,1} of diff of the two e-projections; infinite exactly
// for bifurcation-related pairs.
DepthResult Diff(const Seq& a, const Seq& b);
DepthResult Diff(const Seq& a, const BoundedStream& b, long long horizon);

// rho_nu(n) = least k > n with nu_k != nu_{k-n}, for star-free nu; exact for
// eventually periodic input, horizon-bounded for streams.
DepthResult rho(const Seq& nu, long long n);
DepthResult rho(const BoundedStream& nu, long long n, long long horizon);

// Position of the second literal 1, if any (the first symbol need not be 1).
std::optional<long long> second_one_position(const Seq& nu);

}  // namespace knead
