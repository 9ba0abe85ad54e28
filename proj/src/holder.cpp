#include "knead/holder.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>

namespace knead {

namespace {
constexpr double kLog2 = 0.6931471805599453;
}

std::vector<ScanRecord> holder_scan(const Angle& theta, int m_min, int m_max,
                                    const std::vector<long long>& offsets, int threads) {
    if (theta.is_zero()) throw std::invalid_argument("holder_scan: theta = 0 rejected");
    if (m_min < 1 || m_max < m_min) throw std::invalid_argument("holder_scan: bad scale range");
    const Seq nu_theta = kneading_of_angle(theta);
    const double h_theta = entropy_exact(nu_theta).value;

    std::vector<std::pair<int, long long>> tasks;
    for (int m = m_min; m <= m_max; ++m)
        for (long long j : offsets)
            for (int sign : {+1, -1}) tasks.emplace_back(m, sign * j);

    auto compute = [&](const std::pair<int, long long>& task) -> std::optional<ScanRecord> {
        const auto [m, sj] = task;
        const Angle phi = theta.scaled_pow2(m, sj);
        if (phi.is_zero() || phi == theta) return std::nullopt;
        const Seq nu_phi = kneading_of_angle(phi);
        const DepthResult k = Diff(nu_theta, nu_phi);
        if (k.is_infinity()) return std::nullopt;  // same kneading class, no comparison
        ScanRecord rec;
        rec.phi = phi;
        rec.distance = theta.circle_distance(phi);
        rec.k = k;
        rec.h_phi = entropy_exact(nu_phi);
        rec.delta_h = std::abs(h_theta - rec.h_phi.value);
        rec.scale = m;
        rec.offset = sj;
        return rec;
    };

    std::vector<std::optional<ScanRecord>> slots(tasks.size());
    if (threads <= 1) {
        for (std::size_t i = 0; i < tasks.size(); ++i) slots[i] = compute(tasks[i]);
    } else {
        std::atomic<std::size_t> cursor{0};
        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int t = 0; t < threads; ++t)
            pool.emplace_back([&] {
                for (std::size_t i = cursor.fetch_add(1); i < tasks.size(); i = cursor.fetch_add(1))
                    slots[i] = compute(tasks[i]);
            });
        for (auto& th : pool) th.join();
    }

    std::vector<ScanRecord> records;
    for (auto& s : slots)
        if (s) records.push_back(std::move(*s));
    std::sort(records.begin(), records.end(), [](const ScanRecord& x, const ScanRecord& y) {
        if (x.scale != y.scale) return x.scale < y.scale;
        return x.offset < y.offset;
    });
    if (records.empty()) throw std::invalid_argument("holder_scan: degenerate scan, no usable samples");
    return records;
}

HolderFit fit_exponent(const Angle& theta, const std::vector<ScanRecord>& records) {
    HolderFit fit;
    fit.target = entropy_of_angle(theta).value / kLog2;

    // delta_h below the spectral certificate resolution counts as zero
    // (locally constant entropy, reported separately).
    constexpr double kZeroDelta = 1e-11;
    std::vector<double> xs, ys;
    std::vector<int> scales;
    for (const auto& r : records) {
        if (!r.k.is_finite()) continue;
        if (r.delta_h <= kZeroDelta) {
            ++fit.zero_records;
            continue;
        }
        xs.push_back(std::log(r.distance.to_double()));
        ys.push_back(std::log(r.delta_h));
        scales.push_back(r.scale);
    }
    std::sort(scales.begin(), scales.end());
    const int distinct_scales =
        static_cast<int>(std::unique(scales.begin(), scales.end()) - scales.begin());
    fit.sample_size = static_cast<int>(xs.size());
    if (fit.sample_size < 8 || distinct_scales < 4)
        throw std::invalid_argument("fit_exponent: insufficient data (need >= 8 records over >= 4 scales, got " +
                                    std::to_string(fit.sample_size) + " over " +
                                    std::to_string(distinct_scales) + ")");

    double mx = 0, my = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= static_cast<double>(xs.size());
    my /= static_cast<double>(xs.size());
    double sxx = 0, sxy = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
    }
    fit.exponent = sxy / sxx;
    double ss = 0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double pred = my + fit.exponent * (xs[i] - mx);
        ss += (ys[i] - pred) * (ys[i] - pred);
    }
    fit.residual = std::sqrt(ss / static_cast<double>(xs.size()));
    return fit;
}

std::vector<FeigenbaumRow> feigenbaum_counterexample(int n_max) {
    if (n_max < 1 || n_max > 12)
        throw std::invalid_argument("feigenbaum_counterexample: n_max in 1..12 required");
    InternalAddress proxy_addr;
    for (long long e = 1; e <= (1LL << (n_max + 1)); e *= 2) proxy_addr.entries.push_back(e);
    const Seq proxy = address_to_kneading(proxy_addr);

    std::vector<FeigenbaumRow> rows;
    for (int n = 1; n <= n_max; ++n) {
        InternalAddress addr;
        for (long long e = 1; e <= (1LL << n); e *= 2) addr.entries.push_back(e);
        addr.entries.push_back((1LL << n) + 1);
        FeigenbaumRow row;
        row.n = n;
        row.nu = address_to_kneading(addr);
        row.h = entropy_exact(row.nu);
        row.diff_to_proxy = Diff(row.nu, proxy);
        row.lower_bound = kLog2 / std::pow(2.0, n);
        const double diff_val =
            row.diff_to_proxy.is_finite() ? static_cast<double>(row.diff_to_proxy.value) : 0.0;
        row.ratio = row.h.value * diff_val / kLog2;
        // Certified comparisons: the entropy lower bound must already clear
        // the threshold.
        row.entropy_above_bound = row.h.lower_bound > row.lower_bound;
        row.ratio_above_one = row.h.lower_bound * diff_val / kLog2 > 1.0;
        rows.push_back(std::move(row));
    }
    return rows;
}

MonotonicityReport monotonicity_sweep(const std::vector<std::pair<Seq, Seq>>& pairs, int n_max) {
    MonotonicityReport report;
    for (const auto& [mu, nu] : pairs) {
        if (precedes_by_address(mu, nu) != OrderEvidence::Yes)
            throw std::invalid_argument("monotonicity_sweep: pair lacks the address certificate: " + mu.str() +
                                        " vs " + nu.str());
        ++report.pairs_checked;
        const PrecriticalCensus cm = census(mu, n_max);
        const PrecriticalCensus cn = census(nu, n_max);
        for (int n = 1; n <= n_max; ++n) {
            if (cm.at(n) > cn.at(n)) {
                report.violations.push_back({mu, nu, n,
                                             "N_mu(" + std::to_string(n) + ") = " + std::to_string(cm.at(n)) +
                                                 " > N_nu = " + std::to_string(cn.at(n))});
                break;
            }
        }
        const double hm = entropy_exact(mu).value;
        const double hn = entropy_exact(nu).value;
        if (hm > hn + 1e-10)
            report.violations.push_back({mu, nu, 0, "h(mu) = " + std::to_string(hm) + " > h(nu) = " + std::to_string(hn)});
    }
    return report;
}

}  // namespace knead
