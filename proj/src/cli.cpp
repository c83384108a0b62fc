#include "primeq/cli.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "primeq/grover.hpp"
#include "primeq/mr_oracle.hpp"
#include "primeq/ntheory.hpp"
#include "primeq/pi_table.hpp"
#include "primeq/prime_state.hpp"
#include "primeq/qcount.hpp"
#include "primeq/qstate.hpp"

namespace primeq::cli {

namespace {

using nlohmann::json;

constexpr int kSieveFallbackMaxN = 26;  // lazy sieve bound for figure scans

std::string join_u64(const std::vector<uint64_t>& v, char sep) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += sep;
        s += std::to_string(v[i]);
    }
    return s;
}

std::string resolved_format(const RunConfig& cfg) {
    if (!cfg.format.empty()) return cfg.format;
    // density matrices are structured records, better served as JSON
    return cfg.command == Command::qubit_density ? "json" : "csv";
}

ntheory::WitnessSet witness_set(const RunConfig& cfg) {
    if (cfg.prob_k > 0) return ntheory::WitnessSet::probabilistic(cfg.prob_k, cfg.seed);
    if (!cfg.witnesses.empty()) return ntheory::WitnessSet::fixed(cfg.witnesses);
    return ntheory::WitnessSet::deterministic();
}

void cmd_state(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ntheory::PrimeTable table = ntheory::sieve(uint64_t(1) << cfg.n);
    qstate::QuantumState st = cfg.odd
                                  ? prime_state::build_odd_prime_state(cfg.n, table)
                                  : prime_state::build_prime_state(cfg.n, table);
    std::vector<uint64_t> indices;
    double a = 0.0;
    for (uint64_t x = 0; x < st.dim(); ++x) {
        if (st.amp[x] == std::complex<double>{0.0, 0.0}) continue;
        indices.push_back(x);
        a = st.amp[x].real();
    }
    err << "prime superposition over " << indices.size() << " basis states\n";
    if (resolved_format(cfg) == "json") {
        json j{{"n", cfg.n}, {"odd", cfg.odd}, {"amplitude", a}, {"indices", indices}};
        out << j.dump() << "\n";
        return;
    }
    out << "index,amplitude\n";
    for (uint64_t x : indices) out << x << "," << fmt(a) << "\n";
}

void cmd_entropy_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ntheory::PrimeTable table = ntheory::sieve(uint64_t(1) << cfg.n);
    qstate::QuantumState st = prime_state::build_prime_state(cfg.n, table);
    int lo = cfg.l_min < 0 ? 1 : cfg.l_min;
    int hi = cfg.l_max < 0 ? cfg.n - 1 : cfg.l_max;
    json rows = json::array();
    bool csv = resolved_format(cfg) == "csv";
    if (csv) out << "n,l,entropy_nats,entropy_bits\n";
    for (int l = lo; l <= hi; ++l) {
        err << "cut l=" << l << "\n";
        qstate::EntropyRecord rec = qstate::bipartition_entropy(st, l);
        if (csv)
            out << rec.n << "," << rec.l << "," << fmt(rec.entropy_nats) << ","
                << fmt(rec.entropy_bits) << "\n";
        else
            rows.push_back({{"n", rec.n},
                            {"l", rec.l},
                            {"entropy_nats", rec.entropy_nats},
                            {"entropy_bits", rec.entropy_bits}});
    }
    if (!csv) out << rows.dump() << "\n";
}

void cmd_qubit_density(const RunConfig& cfg, std::ostream& out, std::ostream&) {
    ntheory::PrimeTable table = ntheory::sieve(uint64_t(1) << cfg.n);
    qstate::QuantumState st = prime_state::build_prime_state(cfg.n, table);
    qstate::DensityMatrix rho = qstate::single_qubit_density(st, cfg.i);
    if (resolved_format(cfg) == "json") {
        std::vector<double> pairs;
        for (int r = 0; r < rho.dim; ++r)
            for (int c = 0; c < rho.dim; ++c) {
                pairs.push_back(rho.entries(r, c).real());
                pairs.push_back(rho.entries(r, c).imag());
            }
        json j{{"n", cfg.n}, {"i", cfg.i}, {"dim", rho.dim}, {"entries", pairs}};
        out << j.dump() << "\n";
        return;
    }
    out << "row,col,re,im\n";
    for (int r = 0; r < rho.dim; ++r)
        for (int c = 0; c < rho.dim; ++c)
            out << r << "," << c << "," << fmt(rho.entries(r, c).real()) << ","
                << fmt(rho.entries(r, c).imag()) << "\n";
}

void cmd_bias_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    err << "sieving to " << cfg.limit << "\n";
    ntheory::PrimeTable table = ntheory::sieve(cfg.limit);
    bool csv = resolved_format(cfg) == "csv";
    if (csv) out << "x,pi41,pi43,delta,pi2_1,pi2_3,delta2\n";
    json rows = json::array();
    // one incremental pass; checkpoints land on multiples of step
    uint64_t pi41 = 0, pi43 = 0, pi2_1 = 0, pi2_3 = 0;
    uint64_t next = cfg.step;
    for (uint64_t x = 2; x < cfg.limit && next < cfg.limit; ++x) {
        if (table.is_prime(x)) {
            if ((x & 3) == 1) ++pi41;
            else if ((x & 3) == 3) ++pi43;
            if (x >= 5 && table.is_prime(x - 2))
                (((x - 2) & 3) == 1 ? pi2_1 : pi2_3) += 1;
        }
        if (x == next) {
            int64_t delta = int64_t(pi43) - int64_t(pi41);
            int64_t delta2 = int64_t(pi2_3) - int64_t(pi2_1);
            if (csv)
                out << x << "," << pi41 << "," << pi43 << "," << delta << "," << pi2_1
                    << "," << pi2_3 << "," << delta2 << "\n";
            else
                rows.push_back({{"x", x},
                                {"pi41", pi41},
                                {"pi43", pi43},
                                {"delta", delta},
                                {"pi2_1", pi2_1},
                                {"pi2_3", pi2_3},
                                {"delta2", delta2}});
            next += cfg.step;
            if ((next & ((uint64_t(1) << 22) - 1)) == 0) err << "x=" << next << "\n";
        }
    }
    if (!csv) out << rows.dump() << "\n";
}

void cmd_grover_fig(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    std::map<int, uint64_t> file_table;
    if (!cfg.pi_table_path.empty()) {
        file_table = pi_table::load(cfg.pi_table_path);
        err << "pi table: " << cfg.pi_table_path << " (" << file_table.size()
            << " records)\n";
    }
    // values from the file first, a bounded sieve for the rest
    std::shared_ptr<ntheory::PrimeTable> lazy;
    int sieve_n = std::min(cfg.n_max, kSieveFallbackMaxN);
    grover::PiProvider provider = [&, sieve_n](int n) -> std::optional<uint64_t> {
        auto it = file_table.find(n);
        if (it != file_table.end()) return it->second;
        if (n > sieve_n) return std::nullopt;
        if (!lazy) {
            err << "sieving to 2^" << sieve_n << " for missing table rows\n";
            lazy = std::make_shared<ntheory::PrimeTable>(
                ntheory::sieve(uint64_t(1) << sieve_n));
        }
        return ntheory::pi(*lazy, (uint64_t(1) << n) - 1);
    };
    std::vector<grover::FigureRow> rows = grover::figure_scan(cfg.n_min, cfg.n_max, provider);
    bool csv = resolved_format(cfg) == "csv";
    if (csv) {
        out << "n,R,Rmax,PG\n";
        for (const auto& r : rows) {
            if (r.have_pi)
                out << r.n << "," << r.R << "," << r.Rmax << "," << fmt(r.PG) << "\n";
            else
                out << r.n << ",,,\n";  // gap marker
        }
        return;
    }
    json jrows = json::array();
    for (const auto& r : rows) {
        json j{{"n", r.n}, {"Rmax", r.Rmax}};
        if (r.have_pi) {
            j["R"] = r.R;
            j["PG"] = r.PG;
        } else {
            j["R"] = nullptr;
            j["PG"] = nullptr;
        }
        jrows.push_back(j);
    }
    out << jrows.dump() << "\n";
}

void cmd_oracle_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    ntheory::PrimeTable table = ntheory::sieve(uint64_t(1) << cfg.n);
    ntheory::WitnessSet ws = witness_set(cfg);
    mr_oracle::EquivalenceReport rep = mr_oracle::oracle_equivalence_scan(cfg.n, ws, table);
    out << "x,expected,got,witnesses\n";
    for (const auto& row : rep.mismatches)
        out << row.x << "," << (row.expected ? 1 : 0) << "," << (row.got ? 1 : 0) << ","
            << join_u64(row.witnesses, ';') << "\n";
    err << "tested " << rep.tested << " odd values, " << rep.mismatches.size()
        << " mismatches, all ancillae restored: " << (rep.all_restored ? "yes" : "no")
        << ", all-witnesses-skipped: " << rep.flagged_all_skipped << "\n";
}

void cmd_count_sim(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    uint64_t N = uint64_t(1) << cfg.n;
    ntheory::PrimeTable table = ntheory::sieve(N);
    uint64_t M = ntheory::pi(table, N - 1);
    qcount::CountingDistribution dist = qcount::counting_distribution(N, M, cfg.t);
    bool csv = resolved_format(cfg) == "csv";
    json samples = json::array();
    if (csv) out << "sample,y,M_tilde,abs_err,bound,within\n";
    int hits = 0;
    double bound = 0.0, c = 0.0;
    for (int s = 0; s < cfg.samples; ++s) {
        qcount::CountEstimate est = qcount::estimate_M(dist, N, cfg.seed + uint64_t(s));
        bound = est.bound;
        c = est.c;
        double abs_err = std::abs(est.M_tilde - double(M));
        bool within = abs_err < est.bound;
        hits += within ? 1 : 0;
        if (csv)
            out << s << "," << est.y_observed << "," << fmt(est.M_tilde) << ","
                << fmt(abs_err) << "," << fmt(est.bound) << "," << (within ? 1 : 0)
                << "\n";
        else
            samples.push_back({{"sample", s},
                               {"y", est.y_observed},
                               {"M_tilde", est.M_tilde},
                               {"abs_err", abs_err},
                               {"within", within}});
    }
    if (!csv) {
        json j{{"N", N},     {"M", M},         {"t", cfg.t},
               {"theta", dist.theta}, {"c", c}, {"bound", bound},
               {"samples", samples}};
        out << j.dump() << "\n";
    }
    err << "N=" << N << " M=" << M << " t=" << cfg.t << " calls=" << ((uint64_t(1) << cfg.t) - 1)
        << " success " << hits << "/" << cfg.samples << "\n";
}

void cmd_rh_scan(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    uint64_t limit = (uint64_t(1) << cfg.n_max) + 2;
    err << "sieving to " << limit << "\n";
    ntheory::PrimeTable table = ntheory::sieve(limit);
    std::vector<qcount::RhRow> rows =
        qcount::rh_comparison_scan(table, cfg.n_min, cfg.n_max, cfg.c);
    bool csv = resolved_format(cfg) == "csv";
    if (csv) out << "n,x,pi,li,abs_err,qc_bound,rh_scale\n";
    json jrows = json::array();
    for (const auto& r : rows) {
        if (csv)
            out << r.n << "," << uint64_t(r.x) << "," << r.pi << "," << fmt(r.li) << ","
                << fmt(r.abs_err) << "," << fmt(r.qc_bound) << "," << fmt(r.rh_scale)
                << "\n";
        else
            jrows.push_back({{"n", r.n},
                             {"x", r.x},
                             {"pi", r.pi},
                             {"li", r.li},
                             {"abs_err", r.abs_err},
                             {"qc_bound", r.qc_bound},
                             {"rh_scale", r.rh_scale}});
    }
    if (!csv) out << jrows.dump() << "\n";
}

}  // namespace

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

std::vector<std::string> validate(const RunConfig& cfg) {
    std::vector<std::string> errors;
    auto need = [&](bool ok, const std::string& msg) {
        if (!ok) errors.push_back(msg);
    };
    if (!cfg.format.empty())
        need(cfg.format == "csv" || cfg.format == "json", "format must be csv or json");
    auto qubit_range = [&](int n) {
        need(n >= 2, "n >= 2 required; 2^n must be composite");
        need(n <= 24, "n <= 24 required (statevector capacity)");
    };
    switch (cfg.command) {
        case Command::state:
            qubit_range(cfg.n);
            break;
        case Command::entropy_scan: {
            qubit_range(cfg.n);
            int lo = cfg.l_min < 0 ? 1 : cfg.l_min;
            int hi = cfg.l_max < 0 ? cfg.n - 1 : cfg.l_max;
            need(lo >= 1 && lo <= hi && hi <= cfg.n - 1, "need 1 <= l_min <= l_max <= n-1");
            for (int l = std::max(1, lo); l <= hi && l <= cfg.n - 1; ++l)
                if (std::min(l, cfg.n - l) > 11) {
                    errors.push_back("bipartition side exceeds 2^11 at l=" +
                                     std::to_string(l));
                    break;
                }
            break;
        }
        case Command::qubit_density:
            qubit_range(cfg.n);
            need(cfg.i >= 0 && cfg.i < cfg.n, "qubit index i must be in [0, n-1]");
            break;
        case Command::bias_scan:
            need(cfg.limit >= 4 && cfg.limit <= ntheory::kSieveMaxLimit,
                 "limit must be in [4, 2^34]");
            need(cfg.step >= 1, "step must be >= 1");
            break;
        case Command::grover_fig:
            need(cfg.n_min >= 2 && cfg.n_min <= cfg.n_max, "need 2 <= n-min <= n-max");
            need(cfg.n_max <= 62, "n-max capped at 62");
            break;
        case Command::oracle_verify:
            need(cfg.n >= 2, "n >= 2 required; 2^n must be composite");
            need(cfg.n <= 20, "oracle scan capped at n = 20");
            need(cfg.prob_k == 0 || cfg.witnesses.empty(),
                 "choose either explicit witnesses or probabilistic mode");
            for (uint64_t a : cfg.witnesses)
                if (a < 2) {
                    errors.push_back("witnesses must be >= 2");
                    break;
                }
            break;
        case Command::count_sim:
            need(cfg.n >= 2, "n >= 2 required; 2^n must be composite");
            need(cfg.n <= kSieveFallbackMaxN, "count-sim capped at n = 26");
            need(cfg.t >= 1 && cfg.t <= 20, "t must be in [1, 20]");
            need(cfg.samples >= 1, "samples must be >= 1");
            break;
        case Command::rh_scan:
            need(cfg.n_min >= 2 && cfg.n_min <= cfg.n_max, "need 2 <= n-min <= n-max");
            need(cfg.n_max <= 30, "rh-scan capped at n-max = 30");
            need(cfg.c > 0.0, "c must be positive");
            break;
        case Command::none:
            errors.push_back("no subcommand selected");
            break;
    }
    return errors;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"prime-state quantum simulation toolkit"};
    app.require_subcommand(1);
    RunConfig cfg;
    if (const char* env = std::getenv(pi_table::kEnvVar)) cfg.pi_table_path = env;

    auto add_format = [&](CLI::App* sub) {
        sub->add_option("--format", cfg.format, "output format: csv or json");
    };

    CLI::App* state = app.add_subcommand("state", "prime superposition amplitudes");
    state->add_option("--n", cfg.n, "qubit count")->required();
    state->add_flag("--odd", cfg.odd, "leave |2> out");
    add_format(state);
    state->callback([&] { cfg.command = Command::state; });

    CLI::App* escan = app.add_subcommand("entropy-scan", "bipartition entropy across cuts");
    escan->add_option("--n", cfg.n, "qubit count")->required();
    escan->add_option("--l-min", cfg.l_min, "first cut (default 1)");
    escan->add_option("--l-max", cfg.l_max, "last cut (default n-1)");
    add_format(escan);
    escan->callback([&] { cfg.command = Command::entropy_scan; });

    CLI::App* qd = app.add_subcommand("qubit-density", "single-qubit reduced density matrix");
    qd->add_option("--n", cfg.n, "qubit count")->required();
    qd->add_option("--i", cfg.i, "qubit index")->required();
    add_format(qd);
    qd->callback([&] { cfg.command = Command::qubit_density; });

    CLI::App* bias = app.add_subcommand("bias-scan", "prime and twin residue-class counts");
    bias->add_option("--limit", cfg.limit, "sieve bound (exclusive)")->required();
    bias->add_option("--step", cfg.step, "checkpoint spacing")->required();
    add_format(bias);
    bias->callback([&] { cfg.command = Command::bias_scan; });

    CLI::App* fig = app.add_subcommand("grover-fig", "iteration schedule and overlap scan");
    fig->add_option("--n-min", cfg.n_min, "first qubit count")->default_val(2);
    fig->add_option("--n-max", cfg.n_max, "last qubit count")->required();
    fig->add_option("--pi-table", cfg.pi_table_path, "pi(2^n) table file");
    add_format(fig);
    fig->callback([&] { cfg.command = Command::grover_fig; });

    CLI::App* over = app.add_subcommand("oracle-verify",
                                        "reversible pipeline vs sieve ground truth");
    over->add_option("--n", cfg.n, "bit width of scanned inputs")->required();
    over->add_option("--witness", cfg.witnesses, "explicit witness list")->delimiter(',');
    over->add_option("--probabilistic", cfg.prob_k, "draw K random witnesses per input");
    over->add_option("--seed", cfg.seed, "seed for probabilistic witnesses");
    add_format(over);
    over->callback([&] { cfg.command = Command::oracle_verify; });

    CLI::App* cs = app.add_subcommand("count-sim", "phase-estimation counting of primes");
    cs->add_option("--n", cfg.n, "qubit count (N = 2^n)")->required();
    cs->add_option("--t", cfg.t, "phase register bits")->required();
    cs->add_option("--samples", cfg.samples, "number of draws")->default_val(1);
    cs->add_option("--seed", cfg.seed, "base seed")->default_val(0);
    add_format(cs);
    cs->callback([&] { cfg.command = Command::count_sim; });

    CLI::App* rh = app.add_subcommand("rh-scan", "counting bound vs RH fluctuation scale");
    rh->add_option("--n-min", cfg.n_min, "first exponent")->default_val(10);
    rh->add_option("--n-max", cfg.n_max, "last exponent")->required();
    rh->add_option("--c", cfg.c, "oracle-call constant")->default_val(2.0 * std::numbers::pi);
    add_format(rh);
    rh->callback([&] { cfg.command = Command::rh_scan; });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("primeq");
    for (const auto& s : args) argv.push_back(s.c_str());

    try {
        app.parse(int(argv.size()), argv.data());
    } catch (const CLI::CallForHelp& e) {
        app.exit(e, out, err);
        return 0;
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return 2;
    }

    std::vector<std::string> problems = validate(cfg);
    if (!problems.empty()) {
        for (const auto& p : problems) err << "error: " << p << "\n";
        return 2;
    }

    try {
        switch (cfg.command) {
            case Command::state: cmd_state(cfg, out, err); break;
            case Command::entropy_scan: cmd_entropy_scan(cfg, out, err); break;
            case Command::qubit_density: cmd_qubit_density(cfg, out, err); break;
            case Command::bias_scan: cmd_bias_scan(cfg, out, err); break;
            case Command::grover_fig: cmd_grover_fig(cfg, out, err); break;
            case Command::oracle_verify: cmd_oracle_verify(cfg, out, err); break;
            case Command::count_sim: cmd_count_sim(cfg, out, err); break;
            case Command::rh_scan: cmd_rh_scan(cfg, out, err); break;
            case Command::none: return 2;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

}  // namespace primeq::cli
