// Command-line driver: construction, verification suites, and benchmarks
// over the exact operator-matrix Pfaffian library.

#include "skewcap/action.hpp"
#include "skewcap/capelli.hpp"
#include "skewcap/forms.hpp"
#include "skewcap/jsonio.hpp"
#include "skewcap/parse.hpp"
#include "skewcap/suite.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

namespace {

using namespace skewcap;

constexpr int kExitPass = 0;
constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct GlobalOpts {
    std::string format = "text";
    int threads = 0;  // 0 = machine parallelism
    int max_dim = 12;
    long timeout_secs = 0;  // 0 = no limit
};

PfBackend backend_from_name(const std::string& name) {
    if (name == "full") return PfBackend::Full;
    if (name == "restricted") return PfBackend::Restricted;
    if (name == "forms") return PfBackend::Forms;
    if (name == "commutative") return PfBackend::Commutative;
    throw CLI::ValidationError("--backend", "unknown backend: " + name);
}

void apply_globals(const GlobalOpts& g) {
    pf_threads() = g.threads > 0 ? g.threads : static_cast<int>(std::thread::hardware_concurrency());
    if (pf_threads() < 1) pf_threads() = 1;
    pf_guards().restricted_max = g.max_dim;
    pf_guards().full_max = std::min(8, g.max_dim);
}

class Deadline {
  public:
    explicit Deadline(long secs) : limit_(secs), start_(std::chrono::steady_clock::now()) {}
    void check(const char* what) const {
        if (limit_ <= 0) return;
        const auto elapsed =
            std::chrono::duration_cast<std::chrono::seconds>(std::chrono::steady_clock::now() - start_)
                .count();
        if (elapsed > limit_) throw std::runtime_error(std::string("timeout exceeded during ") + what);
    }

  private:
    long limit_;
    std::chrono::steady_clock::time_point start_;
};

int cmd_verify(int n, const std::string& backend_name, const GlobalOpts& g) {
    apply_globals(g);
    if (2 * n > pf_guards().restricted_max) {
        std::cerr << "error: 2n = " << 2 * n << " exceeds --max-dim " << pf_guards().restricted_max << "\n";
        return kExitUsage;
    }
    const PfBackend backend = backend_from_name(backend_name);
    if (backend != PfBackend::Restricted && backend != PfBackend::Forms) {
        std::cerr << "error: verify supports the restricted and forms backends\n";
        return kExitUsage;
    }
    Deadline dl(g.timeout_secs);
    const MainIdentityReport rep = main_identity_check(n, backend);
    dl.check("verify");
    if (g.format == "json") {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        std::cout << "Pf(Phi(u)) = " << rep.pf.to_string() << "\n";
        std::cout << "identity Pf(Phi(u)) = sum_k a_{n-2k}(u) Gamma_k: " << (rep.pass ? "PASS" : "FAIL")
                  << " (n=" << rep.n << ", backend=" << rep.backend
                  << ", delta terms=" << rep.delta_term_count << ", " << rep.millis << " ms)\n";
        if (!rep.pass) std::cout << "delta = " << rep.delta.to_string() << "\n";
    }
    return rep.pass ? kExitPass : kExitFail;
}

int cmd_gamma(int n, int k, const GlobalOpts& g) {
    const GammaOperator go = gamma(n, k);
    if (g.format == "json") {
        nlohmann::json j = {{"n", go.n}, {"k", go.k}, {"element", to_json(go.element)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Gamma_" << k << " (n=" << n << ") = " << go.element.to_string() << "\n";
    }
    return kExitPass;
}

int cmd_hermite(int m, const GlobalOpts& g) {
    const UPoly h = hermite(m);
    const UPoly a = a_poly(m);
    if (g.format == "json") {
        nlohmann::json j = {{"m", m}, {"hermite", to_json(h)}, {"a", to_json(a)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "H_" << m << " = " << h.to_string("x") << "; a_" << m << " = " << a.to_string() << "\n";
    }
    return kExitPass;
}

int cmd_symbol(int n, const GlobalOpts& g) {
    const bool ok = symbol_identity_check(n);
    if (g.format == "json") {
        nlohmann::json j = {{"n", n}, {"pass", ok}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "sigma(Pf) = sum_k u^{n-2k} gamma_k: " << (ok ? "PASS" : "FAIL") << " (n=" << n << ")\n";
    }
    return ok ? kExitPass : kExitFail;
}

int cmd_pfaffian(const std::string& file, const std::string& backend_name, bool anti, bool show,
                 const std::optional<std::string>& expect, const GlobalOpts& g) {
    apply_globals(g);
    std::ifstream in(file);
    if (!in) {
        std::cerr << "error: cannot open " << file << "\n";
        return kExitUsage;
    }
    std::stringstream buf;
    buf << in.rdbuf();

    ParsedMatrix pm = parse_matrix_file(buf.str());
    const OpMatrix x = anti ? complete_anti_alternating(pm) : complete_alternating(pm);
    const PfBackend backend = backend_from_name(backend_name);
    if (show && g.format == "text") std::cout << to_grid_string(x);
    const WeylElement pf = anti ? pf_anti(x, backend) : pfaffian_alternating(x, backend);

    if (g.format == "json") {
        nlohmann::json j = {{"file", file}, {"dim", pm.dim}, {"pfaffian", to_json(pf)}};
        std::cout << j.dump() << "\n";
    } else {
        std::cout << "Pf = " << pf.to_string() << "\n";
    }
    if (expect) {
        const WeylElement want = parse_weyl_element(pm.n, *expect);
        if (!(pf == want)) {
            std::cout << "expectation FAILED: computed Pf differs from --expect\n";
            return kExitFail;
        }
        std::cout << "expectation holds\n";
    }
    return kExitPass;
}

int cmd_suite(std::uint64_t seed, const GlobalOpts& g) {
    apply_globals(g);
    const SuiteReport rep = run_suite(seed);
    if (g.format == "json") {
        std::cout << to_json(rep).dump() << "\n";
    } else {
        std::cout << suite_report_text(rep);
    }
    if (!rep.all_pass()) {
        for (const auto& r : rep.results)
            if (!r.ok()) std::cerr << "failing property: " << r.name << "\n";
        return kExitFail;
    }
    return kExitPass;
}

int cmd_bench(int n_lo, int n_hi, const GlobalOpts& g) {
    apply_globals(g);
    Deadline dl(g.timeout_secs);
    nlohmann::json rows = nlohmann::json::array();
    if (g.format == "text") std::cout << "n    full(ms)    restricted(ms)    forms(ms)\n";
    for (int n = n_lo; n <= n_hi; ++n) {
        const OpMatrix phi = build_phi(n);
        const OpMatrix alt = op_matmul(phi, op_from_scalar(j_matrix(2 * n), n));
        auto time_backend = [&](PfBackend b, bool enabled) -> long {
            if (!enabled) return -1;
            const auto t0 = std::chrono::steady_clock::now();
            (void)pfaffian_alternating(alt, b);
            const auto t1 = std::chrono::steady_clock::now();
            return std::chrono::duration_cast<std::chrono::milliseconds>(t1 - t0).count();
        };
        const long tf = time_backend(PfBackend::Full, 2 * n <= pf_guards().full_max);
        const long tr = time_backend(PfBackend::Restricted, 2 * n <= pf_guards().restricted_max);
        const long tv = time_backend(PfBackend::Forms, true);
        dl.check("bench");
        if (g.format == "json") {
            rows.push_back({{"n", n}, {"full_ms", tf}, {"restricted_ms", tr}, {"forms_ms", tv}});
        } else {
            auto cell = [](long v) { return v < 0 ? std::string("-") : std::to_string(v); };
            std::cout << n << "    " << cell(tf) << "    " << cell(tr) << "    " << cell(tv) << "\n";
        }
    }
    if (g.format == "json") std::cout << rows.dump() << "\n";
    return kExitPass;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact noncommutative Pfaffian calculator for operator matrices on Alt_n"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--format", g.format, "output format")->check(CLI::IsMember({"text", "json"}));
    app.add_option("--threads", g.threads, "worker threads (0 = machine parallelism)");
    app.add_option("--max-dim", g.max_dim, "largest matrix dimension accepted");
    app.add_option("--timeout-secs", g.timeout_secs, "soft wall-clock limit");

    int n = 2, k = 0, m = 0, bench_lo = 1, bench_hi = 4;
    std::string backend = "restricted";
    std::string file;
    bool anti = false;
    bool show = false;
    std::optional<std::string> expect;
    std::uint64_t seed = 0;

    CLI::App* verify = app.add_subcommand("verify", "check the generating-function identity for one n");
    verify->fallthrough();
    verify->add_option("--n", n, "size of Alt_n")->required()->check(CLI::Range(1, 64));
    verify->add_option("--backend", backend, "pfaffian backend");

    CLI::App* gammac = app.add_subcommand("gamma", "print Gamma_k");
    gammac->fallthrough();
    gammac->add_option("--n", n)->required()->check(CLI::Range(1, 64));
    gammac->add_option("--k", k)->required();

    CLI::App* hermitec = app.add_subcommand("hermite", "print H_m and a_m");
    hermitec->fallthrough();
    hermitec->add_option("--m", m)->required();

    CLI::App* symbolc = app.add_subcommand("symbol", "check the principal-symbol identity");
    symbolc->fallthrough();
    symbolc->add_option("--n", n)->required()->check(CLI::Range(1, 64));

    CLI::App* pfc = app.add_subcommand("pfaffian", "Pfaffian of a matrix file");
    pfc->fallthrough();
    pfc->add_option("--file", file)->required();
    pfc->add_option("--backend", backend);
    pfc->add_flag("--anti", anti, "treat the input as anti-alternating");
    pfc->add_flag("--show", show, "print the completed matrix grid");
    pfc->add_option("--expect", expect, "expression the Pfaffian must equal (exit 1 on mismatch)");

    CLI::App* suitec = app.add_subcommand("suite", "run every module's randomized invariant suite");
    suitec->fallthrough();
    suitec->add_option("--seed", seed)->required();

    CLI::App* benchc = app.add_subcommand("bench", "time the Pfaffian backends on Phi(u)");
    benchc->fallthrough();
    benchc->add_option("--n-lo", bench_lo);
    benchc->add_option("--n-hi", bench_hi);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kExitUsage;
    }

    try {
        if (verify->parsed()) return cmd_verify(n, backend, g);
        if (gammac->parsed()) return cmd_gamma(n, k, g);
        if (hermitec->parsed()) return cmd_hermite(m, g);
        if (symbolc->parsed()) return cmd_symbol(n, g);
        if (pfc->parsed()) return cmd_pfaffian(file, backend, anti, show, expect, g);
        if (suitec->parsed()) return cmd_suite(seed, g);
        if (benchc->parsed()) return cmd_bench(bench_lo, bench_hi, g);
    } catch (const ParseError& e) {
        std::cerr << "input error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
