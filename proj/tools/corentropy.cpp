// corentropy: exact core-entropy toolkit for quadratic kneading combinatorics.
//
// Subcommands map onto the library modules: kneading / address (symbolic
// layer), entropy / census (spectral engine), renorm (tuning layer), scan /
// feigenbaum / monotonicity (continuity experiments).  All output is
// deterministic for a fixed command line; no timestamps are emitted.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "knead/holder.hpp"

using json = nlohmann::ordered_json;
using namespace knead;

namespace {

std::string config_line(const std::string& sub, const std::vector<std::pair<std::string, std::string>>& kv) {
    std::string line = "corentropy " + sub;
    for (const auto& [k, v] : kv) line += " --" + k + " " + v;
    return line;
}

json entropy_json(const EntropyResult& e) {
    return json{{"value", e.value},
                {"lower", e.lower_bound},
                {"upper", e.upper_bound},
                {"kind", e.kind == EntropyResult::Kind::ExactSpectral ? "exact-spectral" : "growth-estimate"},
                {"evidence", e.evidence}};
}

void emit(const std::string& text, const std::string& out_path) {
    if (out_path.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream f(out_path);
    if (!f) throw std::runtime_error("cannot open output file " + out_path);
    f << text;
}

// Star placement is enforced by the parser; the CLI additionally requires the
// leading 1 of non-trivial kneading sequences.  Star-free purely periodic
// words (lower sequences and other projections) are accepted.
Seq parse_seq_arg(const std::string& s) {
    Seq nu = Seq::parse(s);
    if (!nu.is_trivial() && !nu.starts_with_one())
        throw CLI::ValidationError("--seq", "'" + s + "' violates the kneading invariant: every non-trivial "
                                            "kneading sequence starts with the symbol 1");
    return nu;
}

int threads_from_env() {
    const char* t = std::getenv("CORENTROPY_THREADS");
    if (!t) return 1;
    const int n = std::atoi(t);
    return n >= 1 ? n : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact symbolic dynamics of kneading sequences: core entropy, renormalization, Hoelder scans"};
    app.require_subcommand(1);

    std::string angle_str, seq_str, out_path, format;

    auto* cmd_kneading = app.add_subcommand("kneading", "kneading sequence of an external angle");
    cmd_kneading->add_option("--angle", angle_str, "exact angle p/q")->required();
    cmd_kneading->add_option("--out", out_path);

    std::string addr_seq;
    int max_terms = kDefaultMaxAddressTerms;
    auto* cmd_address = app.add_subcommand("address", "internal address of a kneading sequence");
    cmd_address->add_option("--seq", addr_seq, "sequence PRE(PER) over {0,1,*}")->required();
    cmd_address->add_option("--max-terms", max_terms);
    cmd_address->add_option("--out", out_path);

    auto* cmd_entropy = app.add_subcommand("entropy", "core entropy (exact spectral)");
    cmd_entropy->add_option("--angle", angle_str);
    cmd_entropy->add_option("--seq", seq_str);
    cmd_entropy->add_option("--out", out_path);

    int n_max = 40;
    auto* cmd_census = app.add_subcommand("census", "precritical census depth,count");
    cmd_census->add_option("--seq", seq_str);
    cmd_census->add_option("--angle", angle_str);
    cmd_census->add_option("--n-max", n_max);
    cmd_census->add_option("--out", out_path);

    long long p_max = 0;
    auto* cmd_renorm = app.add_subcommand("renorm", "renormalization certificates");
    cmd_renorm->add_option("--seq", seq_str)->required();
    cmd_renorm->add_option("--p-max", p_max);
    cmd_renorm->add_option("--out", out_path);

    int m_min = 4, m_max = 18;
    std::vector<long long> offsets{1, 3};
    auto* cmd_scan = app.add_subcommand("scan", "Hoelder scan around an angle");
    cmd_scan->add_option("--angle", angle_str)->required();
    cmd_scan->add_option("--m-min", m_min);
    cmd_scan->add_option("--m-max", m_max);
    cmd_scan->add_option("--offsets", offsets, "offset multipliers j for phi = theta +- j*2^-m");
    cmd_scan->add_option("--format", format, "csv (default) or json");
    cmd_scan->add_option("--out", out_path);

    int feig_n = 8;
    auto* cmd_feig = app.add_subcommand("feigenbaum", "the non-Hoelder counterexample table");
    cmd_feig->add_option("--n-max", feig_n);
    cmd_feig->add_option("--out", out_path);

    int pairs = 100;
    unsigned long long seed = 1;
    auto* cmd_mono = app.add_subcommand("monotonicity", "census/entropy monotonicity sweep over certified pairs");
    cmd_mono->add_option("--pairs", pairs);
    cmd_mono->add_option("--seed", seed);
    cmd_mono->add_option("--n-max", n_max);
    cmd_mono->add_option("--out", out_path);

    CLI11_PARSE(app, argc, argv);

    try {
        if (cmd_kneading->parsed()) {
            const Angle th = Angle::parse(angle_str);
            emit(kneading_of_angle(th).str() + "\n", out_path);
        } else if (cmd_address->parsed()) {
            emit(internal_address(parse_seq_arg(addr_seq), max_terms).str() + "\n", out_path);
        } else if (cmd_entropy->parsed()) {
            if (angle_str.empty() == seq_str.empty())
                throw CLI::ValidationError("entropy", "exactly one of --angle, --seq required");
            EntropyResult e;
            std::string cfg;
            if (!angle_str.empty()) {
                e = entropy_of_angle(Angle::parse(angle_str));
                cfg = config_line("entropy", {{"angle", angle_str}});
            } else {
                e = entropy_exact(parse_seq_arg(seq_str));
                cfg = config_line("entropy", {{"seq", seq_str}});
            }
            json j{{"config", cfg}, {"result", entropy_json(e)}};
            emit(j.dump(2) + "\n", out_path);
        } else if (cmd_census->parsed()) {
            if (angle_str.empty() == seq_str.empty())
                throw CLI::ValidationError("census", "exactly one of --angle, --seq required");
            const Seq nu = !seq_str.empty() ? parse_seq_arg(seq_str) : kneading_of_angle(Angle::parse(angle_str));
            const PrecriticalCensus c = census(nu, n_max);
            std::ostringstream os;
            os << "# " << config_line("census", {{"seq", nu.str()}, {"n-max", std::to_string(n_max)}}) << "\n";
            os << "depth,count\n";
            for (int n = 1; n <= c.n_max; ++n) os << n << "," << c.at(n) << "\n";
            emit(os.str(), out_path);
        } else if (cmd_renorm->parsed()) {
            const Seq nu = parse_seq_arg(seq_str);
            const auto certs = detect_renormalizable(nu, p_max);
            json arr = json::array();
            for (const auto& c : certs)
                arr.push_back(json{{"p", c.p},
                                   {"base", c.base.str()},
                                   {"dynamical_projection", c.dynamical_is_upper ? "upper" : "lower"},
                                   {"eta", c.derenormalized.str()},
                                   {"certified", c.certified}});
            json j{{"config", config_line("renorm", {{"seq", seq_str}})}, {"certificates", arr}};
            emit(j.dump(2) + "\n", out_path);
        } else if (cmd_scan->parsed()) {
            const Angle th = Angle::parse(angle_str);
            const auto records = holder_scan(th, m_min, m_max, offsets, threads_from_env());
            const HolderFit fit = fit_exponent(th, records);
            json fj{{"exponent", fit.exponent},
                    {"target", fit.target},
                    {"residual", fit.residual},
                    {"n_records", fit.sample_size},
                    {"zero_records", fit.zero_records}};
            if (format == "json") {
                json arr = json::array();
                for (const auto& r : records)
                    arr.push_back(json{{"phi", r.phi.str()},
                                       {"distance", r.distance.to_double()},
                                       {"k", to_string(r.k)},
                                       {"h_phi", r.h_phi.value},
                                       {"delta_h", r.delta_h}});
                json j{{"config", config_line("scan", {{"angle", angle_str}})}, {"records", arr}, {"fit", fj}};
                emit(j.dump(2) + "\n", out_path);
            } else {
                std::ostringstream os;
                os << "# " << config_line("scan", {{"angle", angle_str},
                                                   {"m-min", std::to_string(m_min)},
                                                   {"m-max", std::to_string(m_max)}})
                   << "\n";
                os << "phi,distance,k,h_phi,delta_h\n";
                os.precision(17);
                for (const auto& r : records)
                    os << r.phi.str() << "," << r.distance.to_double() << "," << to_string(r.k) << ","
                       << r.h_phi.value << "," << r.delta_h << "\n";
                os << "# fit " << fj.dump() << "\n";
                emit(os.str(), out_path);
            }
        } else if (cmd_feig->parsed()) {
            const auto rows = feigenbaum_counterexample(feig_n);
            std::ostringstream os;
            os << "# " << config_line("feigenbaum", {{"n-max", std::to_string(feig_n)}}) << "\n";
            os << "n,nu,h,diff_to_proxy,bound_log2_2n,ratio,entropy_above_bound,ratio_above_one\n";
            os.precision(17);
            bool ok = true;
            for (const auto& r : rows) {
                os << r.n << "," << r.nu.str() << "," << r.h.value << "," << to_string(r.diff_to_proxy) << ","
                   << r.lower_bound << "," << r.ratio << "," << r.entropy_above_bound << "," << r.ratio_above_one
                   << "\n";
                ok = ok && r.entropy_above_bound && r.ratio_above_one;
            }
            emit(os.str(), out_path);
            return ok ? 0 : 1;
        } else if (cmd_mono->parsed()) {
            // Deterministic corpus of address-certified pairs mu < nu.
            std::mt19937_64 rng(seed);
            std::vector<std::pair<Seq, Seq>> corpus;
            while (static_cast<int>(corpus.size()) < pairs) {
                InternalAddress a{{1}, false};
                const int len = 2 + static_cast<int>(rng() % 4);
                while (static_cast<int>(a.entries.size()) < len)
                    a.entries.push_back(a.entries.back() + 1 + static_cast<long long>(rng() % 4));
                InternalAddress b = a;
                const int ext = 1 + static_cast<int>(rng() % 3);
                for (int i = 0; i < ext; ++i)
                    b.entries.push_back(b.entries.back() + 1 + static_cast<long long>(rng() % 4));
                const Seq mu = address_to_kneading(a), nu = address_to_kneading(b);
                if (precedes_by_address(mu, nu) == OrderEvidence::Yes) corpus.emplace_back(mu, nu);
            }
            const MonotonicityReport rep = monotonicity_sweep(corpus, n_max);
            std::ostringstream os;
            os << "# " << config_line("monotonicity", {{"pairs", std::to_string(pairs)},
                                                       {"seed", std::to_string(seed)},
                                                       {"n-max", std::to_string(n_max)}})
               << "\n";
            os << "pairs_checked," << rep.pairs_checked << "\n";
            os << "violations," << rep.violations.size() << "\n";
            for (const auto& v : rep.violations)
                os << "violation," << v.mu.str() << "," << v.nu.str() << "," << v.detail << "\n";
            emit(os.str(), out_path);
            return rep.ok() ? 0 : 1;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
