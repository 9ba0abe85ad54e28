#pragma once

#include "knead/address.hpp"
#include "knead/entropy.hpp"
#include "knead/renorm.hpp"

namespace knead {

struct ScanRecord {
    Angle phi;
    Angle distance;        // exact circle distance |theta - phi|
    DepthResult k;         // Diff(nu(theta), nu(phi))
    EntropyResult h_phi;
    double delta_h = 0;    // |h(theta) - h(phi)|
    int scale = 0;         // the m of phi = theta +- j*2^-m
    long long offset = 0;  // signed j
};

struct HolderFit {
    double exponent = 0;  // least-squares slope of log delta_h vs log distance
    double target = 0;    // h(theta) / log 2
    int sample_size = 0;
    double residual = 0;  // rms residual of the fit
    int zero_records = 0; // records with delta_h = 0, reported but never fitted
};

// Samples phi = theta +- j*2^-m over the given scales and offsets, exactly.
// Records where Diff is infinite (angles sharing the kneading sequence) are
// skipped, as is phi = 0.  Record computations are pure and run across
// `threads` workers; assembly is order-independent (sorted by scale, offset).
std::vector<ScanRecord> holder_scan(const Angle& theta, int m_min, int m_max,
                                    const std::vector<long long>& offsets = {1, 3}, int threads = 1);

// Least-squares slope over records with finite k and delta_h > 0; requires at
// least 8 usable records spanning at least 4 scales.
HolderFit fit_exponent(const Angle& theta, const std::vector<ScanRecord>& records);

// The Feigenbaum non-Hoelder counterexample: nu_n has internal address
// 1-2-...-2^n-(2^n+1); the proxy for the Feigenbaum point is the cascade
// member 1-2-...-2^(n_max+1), which agrees with the limit beyond every
// compared position.
struct FeigenbaumRow {
    int n = 0;
    Seq nu;
    EntropyResult h;
    DepthResult diff_to_proxy;
    double lower_bound = 0;  // log 2 / 2^n
    double ratio = 0;        // h * Diff / log 2
    bool entropy_above_bound = false;
    bool ratio_above_one = false;
};
std::vector<FeigenbaumRow> feigenbaum_counterexample(int n_max);

// Depth-wise census domination and entropy monotonicity over certified pairs.
struct MonotonicityViolation {
    Seq mu, nu;
    int depth = 0;  // 0 marks an entropy violation
    std::string detail;
};
struct MonotonicityReport {
    int pairs_checked = 0;
    std::vector<MonotonicityViolation> violations;
    bool ok() const { return violations.empty(); }
};
MonotonicityReport monotonicity_sweep(const std::vector<std::pair<Seq, Seq>>& pairs, int n_max);

}  // namespace knead
