#pragma once

#include <utility>

#include "knead/metrics.hpp"
#include "knead/sequence.hpp"

namespace knead {

// Strictly increasing positive integers starting with 1; `truncated` marks an
// infinite address cut at a horizon.  Serializes as "1-3-5" / "1-3-5-...".
struct InternalAddress {
    std::vector<long long> entries;
    bool truncated = false;

    std::string str() const;
    bool operator==(const InternalAddress& o) const = default;
    // Strict prefix: a proper initial segment of the other address (an exact
    // match of a truncated address still certifies, since the real address
    // continues past the cut).
    bool strict_prefix_of(const InternalAddress& o) const;
    bool prefix_of(const InternalAddress& o) const;
};

inline constexpr int kDefaultMaxAddressTerms = 64;

// Internal address of a kneading sequence.  Star-free sequences use the
// rho-orbit of 1; star-periodic sequences report the finite address of their
// upper projection, which ends at the period.  The trivial sequence gets the
// one-term address 1 by convention.
InternalAddress internal_address(const Seq& nu, int max_terms = kDefaultMaxAddressTerms);

// The two star resolutions of a star-periodic sequence: the upper sequence is
// the projection whose internal address is finite with last entry equal to
// the period.  Exactly one projection qualifies; anything else signals a
// representation bug and throws.
struct UpperLower {
    Seq upper;
    Seq lower;
};
UpperLower upper_lower(const Seq& nu);

// If some concrete resolution of the star collapses the period p to a proper
// divisor q, returns q (the bifurcation base period); the trivial base q=1 is
// a valid answer for period-2 inputs.
std::optional<long long> is_bifurcation(const Seq& nu);

// Base sequence of a bifurcation: the star-periodic word of period q made of
// the first q-1 symbols of nu.
Seq bifurcation_base(const Seq& nu, long long q);

// Inverse of the internal-address recursion; the result is star-periodic with
// period equal to the last address entry (trivial for the address "1").
Seq address_to_kneading(const InternalAddress& addr);

// Sufficient order certificate: yes when the internal address of mu is a
// strict prefix of the internal address of nu, or of nu's lower sequence when
// nu is star-periodic.  No full order test exists at word level, hence the
// honest no-evidence alternative.
enum class OrderEvidence { Yes, NoEvidence };
OrderEvidence precedes_by_address(const Seq& mu, const Seq& nu, int max_terms = kDefaultMaxAddressTerms);

// Weak branch construction: for Diff(nu, nu') = k finite, produce a
// star-periodic mu with Diff(mu, nu) >= k and Diff(mu, nu') >= k, built from
// the longest common prefix of the internal addresses of the projections
// realizing k.  Both postconditions are verified before returning.
struct WeakBranch {
    Seq mu;
    long long k;
    DepthResult diff_mu_nu;
    DepthResult diff_mu_nu2;
};
WeakBranch weak_branch(const Seq& nu, const Seq& nu2);

}  // namespace knead
