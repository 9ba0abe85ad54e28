#pragma once

#include "knead/address.hpp"
#include "knead/entropy.hpp"

namespace knead {

// Witness that nu is p-renormalizable at word level: entries off multiples of
// p follow the base pattern (checked exactly over one lcm window) and
// shift^p(nu) != nu.  `certified` records whether the order certificate
// precedes_by_address(base, nu) holds; the pattern can hold without it, since
// the word-level order test is only sufficient.
struct RenormalizationCertificate {
    long long p = 0;
    Seq base;                  // star-periodic of period p
    Seq dynamical;             // the projection of base matched by nu's leading block
    bool dynamical_is_upper = false;
    Seq derenormalized;        // raw subsequence at positions p, 2p, ... (may start with 0)
    bool certified = false;
};

// Raw de-renormalization: the subsequence at positions p, 2p, 3p, ...,
// re-canonicalized.  Defined for any sequence; validity as a renormalization
// is certified separately.
Seq derenormalize(const Seq& nu, long long p);

// Scan p = 2..p_max for word-level renormalizations.  Default p_max: the
// period for star-periodic input, preperiod + period otherwise (larger p
// cannot satisfy the pattern test for sequences of that size).
std::vector<RenormalizationCertificate> detect_renormalizable(const Seq& nu, long long p_max = 0);

// Interleaving tuning, the inverse of derenormalize: positions not divisible
// by p carry mu's concrete entries, position kp carries eta's k-th symbol
// verbatim.  Round trip: derenormalize(tune(mu, eta), p) == eta.
Seq tune(const Seq& mu, const Seq& eta);

// Checks h(nu) = max(h(mu), h(eta)/p) for a certificate of nu.
struct EntropyIdentityReport {
    double h_nu = 0;
    double h_base = 0;
    double h_eta = 0;
    double expected = 0;  // max(h_base, h_eta / p)
    double residual = 0;
    bool ok = false;
};
EntropyIdentityReport entropy_identity_check(const Seq& nu, const RenormalizationCertificate& cert,
                                             double tol = 1e-9);

// Repeatedly de-renormalize by the smallest certified period until no
// certified period remains; returns the chain nu = c_0, c_1, ..., terminal.
// De-renormalized sequences starting with 0 are flipped to restore the
// leading-1 convention (entropy and renormalization structure are invariant
// under the relabeling).
std::vector<Seq> maximal_base_chain(const Seq& nu);

}  // namespace knead
