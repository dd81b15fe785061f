#pragma once
// Identity registry and batch verification. Every identity the library
// realizes is registered under a stable id with desk-scale default bounds;
// run_case executes one, run_all sweeps the registry (in parallel, capped
// by FOCKFORGE_THREADS). All checks are exact; a failing case carries the
// first counterexample found.

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "category.hpp"
#include "correspondence.hpp"
#include "fock.hpp"
#include "linop.hpp"
#include "partition.hpp"
#include "schur_poly.hpp"
#include "serialize.hpp"
#include "symring.hpp"

namespace fockforge {

struct IdentityCase {
    std::string id;
    std::map<std::string, long long> params;
    int window = 0;
};

struct Counterexample {
    std::string input;
    std::string lhs;
    std::string rhs;
};

struct Report {
    IdentityCase c;
    bool pass = false;
    long long checked = 0;
    std::optional<Counterexample> counterexample;
    long long elapsed_ms = 0;
};

inline OrderedJson to_json(const Report& r) {
    OrderedJson params = OrderedJson::object();
    for (const auto& [k, v] : r.c.params) params[k] = v;
    OrderedJson j;
    j["case"] = {{"id", r.c.id}, {"params", params}, {"window", r.c.window}};
    j["status"] = r.pass ? "pass" : "fail";
    j["checked"] = r.checked;
    if (r.counterexample) {
        j["counterexample"] = {{"input", r.counterexample->input},
                               {"lhs", r.counterexample->lhs},
                               {"rhs", r.counterexample->rhs}};
    } else {
        j["counterexample"] = nullptr;
    }
    j["elapsed_ms"] = r.elapsed_ms;
    return j;
}

inline std::string report_text(const Report& r) {
    std::string line = (r.pass ? "PASS " : "FAIL ") + r.c.id;
    line += " window=" + std::to_string(r.c.window);
    for (const auto& [k, v] : r.c.params) line += " " + k + "=" + std::to_string(v);
    line += " checked=" + std::to_string(r.checked);
    line += " (" + std::to_string(r.elapsed_ms) + " ms)";
    if (r.counterexample) {
        line += "\n  at " + r.counterexample->input;
        line += "\n  lhs = " + r.counterexample->lhs;
        line += "\n  rhs = " + r.counterexample->rhs;
    }
    return line;
}

// ---------------------------------------------------------------------------
// Jacobi triple product: three independently computed coefficient tables of
// t^n q^{k/2}. Bosonic side by geometric-series accumulation, fermionic
// side by multiplying out the product, and the direct Fock basis count.

struct JacobiTables {
    int t_max = 0;
    int q_halves_max = 0;
    // indexed [n + t_max][halves]
    std::vector<std::vector<std::int64_t>> boson, fermion, fock;
};

inline JacobiTables jacobi_tables(int t_max, int q_halves_max) {
    if (t_max < 0 || q_halves_max < 0) throw std::invalid_argument("bounds must be nonnegative");
    JacobiTables t;
    t.t_max = t_max;
    t.q_halves_max = q_halves_max;
    const int width = 2 * t_max + 1;
    const int H = q_halves_max;
    auto zeros = std::vector<std::vector<std::int64_t>>(
        static_cast<std::size_t>(width), std::vector<std::int64_t>(static_cast<std::size_t>(H) + 1, 0));
    t.boson = zeros;
    t.fermion = zeros;
    t.fock = zeros;

    // (i) sum_n t^n q^{n^2/2} / prod_j (1 - q^j)
    for (int n = -t_max; n <= t_max; ++n) {
        long long base = static_cast<long long>(n) * n;  // halves
        if (base > H) continue;
        auto& row = t.boson[static_cast<std::size_t>(n + t_max)];
        row[static_cast<std::size_t>(base)] = 1;
        for (int j = 1; 2 * j <= H; ++j)
            for (int h = 2 * j; h <= H; ++h)
                row[static_cast<std::size_t>(h)] += row[static_cast<std::size_t>(h) - 2 * j];
    }

    // (ii) prod_j (1 + t q^{j-1/2})(1 + t^{-1} q^{j-1/2}); factors with
    // 2j-1 > H are the identity on the window, so the truncation is exact.
    {
        const int J = (H + 1) / 2;
        const int span = J + 1;  // |t-degree| never exceeds the factor count
        std::map<std::pair<int, int>, std::int64_t> poly{{{0, 0}, 1}};
        for (int j = 1; j <= J; ++j) {
            int w = 2 * j - 1;
            for (int dir : {+1, -1}) {
                std::map<std::pair<int, int>, std::int64_t> next = poly;
                for (const auto& [key, c] : poly) {
                    auto [n, h] = key;
                    if (h + w > H || std::abs(n + dir) > span) continue;
                    next[{n + dir, h + w}] += c;
                }
                poly = std::move(next);
            }
        }
        for (const auto& [key, c] : poly) {
            auto [n, h] = key;
            if (std::abs(n) <= t_max && h <= H)
                t.fermion[static_cast<std::size_t>(n + t_max)][static_cast<std::size_t>(h)] = c;
        }
    }

    // (iii) direct count of charged partitions
    for (int n = -t_max; n <= t_max; ++n)
        for (int h = 0; h <= H; ++h)
            t.fock[static_cast<std::size_t>(n + t_max)][static_cast<std::size_t>(h)] =
                count_basis(n, h);

    return t;
}

// ---------------------------------------------------------------------------
// Registry.

namespace detail {

struct RegistryEntry {
    std::string description;
    int default_window = 0;
    std::map<std::string, long long> default_params;
    std::set<std::string> optional_params;      // accepted on top of the defaults
    std::vector<std::string> bound_keys;        // params a global --bound override scales
    std::function<Report(const IdentityCase&)> run;
};

inline long long param(const IdentityCase& c, const std::string& key, long long fallback) {
    auto it = c.params.find(key);
    return it == c.params.end() ? fallback : it->second;
}

// shared harness: iterate instances, stop at the first mismatch
struct CaseRun {
    Report report;
    explicit CaseRun(const IdentityCase& c) { report.c = c; report.pass = true; }

    void op_identity(const std::string& label, const LinOp& lhs, const LinOp& rhs, int window) {
        if (!report.pass) return;
        report.checked += 1;
        if (auto bad = find_op_mismatch(lhs, rhs, window)) {
            report.pass = false;
            report.counterexample = Counterexample{label + " at s[" + std::get<0>(*bad).str() + "]",
                                                   std::get<1>(*bad).str(), std::get<2>(*bad).str()};
        }
    }

    void equal_sym(const std::string& label, const SymFunc& lhs, const SymFunc& rhs) {
        if (!report.pass) return;
        report.checked += 1;
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample = Counterexample{label, lhs.str(), rhs.str()};
        }
    }

    void equal_fock(const std::string& label, const FockVector& lhs, const FockVector& rhs) {
        if (!report.pass) return;
        report.checked += 1;
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample = Counterexample{label, lhs.str(), rhs.str()};
        }
    }

    void equal_int(const std::string& label, long long lhs, long long rhs) {
        if (!report.pass) return;
        report.checked += 1;
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample =
                Counterexample{label, std::to_string(lhs), std::to_string(rhs)};
        }
    }

    void equal_kclass(const std::string& label, const KClass& lhs, const KClass& rhs) {
        if (!report.pass) return;
        report.checked += 1;
        if (lhs != rhs) {
            report.pass = false;
            report.counterexample = Counterexample{label, lhs.str(), rhs.str()};
        }
    }
};

inline const std::map<std::string, RegistryEntry>& registry();

}  // namespace detail

inline std::vector<std::string> registry_ids() {
    std::vector<std::string> ids;
    for (const auto& [id, entry] : detail::registry()) ids.push_back(id);
    return ids;
}

inline std::string registry_description(const std::string& id) {
    const auto& reg = detail::registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw std::invalid_argument("unknown identity id: '" + id + "'");
    return it->second.description;
}

// Run one registry case: unknown ids and unknown/negative parameters are
// rejected before any work happens.
inline Report run_case(const IdentityCase& c) {
    const auto& reg = detail::registry();
    auto it = reg.find(c.id);
    if (it == reg.end()) throw std::invalid_argument("unknown identity id: '" + c.id + "'");
    const auto& entry = it->second;
    if (c.window < 0) throw std::invalid_argument("window must be nonnegative");
    for (const auto& [k, v] : c.params) {
        if (!entry.default_params.count(k) && !entry.optional_params.count(k))
            throw std::invalid_argument("unknown parameter '" + k + "' for case '" + c.id + "'");
        if (v < 0) throw std::invalid_argument("parameter '" + k + "' must be nonnegative");
    }
    IdentityCase full = c;
    for (const auto& [k, v] : entry.default_params)
        full.params.emplace(k, v);  // keeps explicit values
    auto start = std::chrono::steady_clock::now();
    Report r = entry.run(full);
    r.c = full;
    r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                       std::chrono::steady_clock::now() - start)
                       .count();
    return r;
}

inline int thread_cap() {
    unsigned hw = std::max(1u, std::thread::hardware_concurrency());
    if (const char* env = std::getenv("FOCKFORGE_THREADS")) {
        try {
            int v = std::stoi(env);
            if (v >= 1) return std::min<unsigned>(static_cast<unsigned>(v), hw * 4);
        } catch (const std::exception&) {
        }
    }
    return static_cast<int>(hw);
}

// Run the whole registry; window/bound overrides apply where meaningful.
// Reports come back sorted by case id regardless of completion order.
inline std::vector<Report> run_all(std::optional<int> window_override = std::nullopt,
                                   std::optional<long long> bound_override = std::nullopt) {
    const auto& reg = detail::registry();
    std::vector<IdentityCase> cases;
    for (const auto& [id, entry] : reg) {
        IdentityCase c;
        c.id = id;
        c.window = window_override.value_or(entry.default_window);
        c.params = entry.default_params;
        if (bound_override)
            for (const auto& key : entry.bound_keys) c.params[key] = *bound_override;
        cases.push_back(std::move(c));
    }
    std::vector<Report> reports(cases.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        while (true) {
            std::size_t i = next.fetch_add(1);
            if (i >= cases.size()) return;
            reports[i] = run_case(cases[i]);
        }
    };
    int threads = std::min<int>(thread_cap(), static_cast<int>(cases.size()));
    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < threads; ++i) pool.emplace_back(worker);
        for (auto& th : pool) th.join();
    }
    std::sort(reports.begin(), reports.end(),
              [](const Report& a, const Report& b) { return a.c.id < b.c.id; });
    return reports;
}

// One case with optional window/bound overrides on top of the registered
// defaults; explicitly given params win over both.
inline Report run_single(const std::string& id, std::map<std::string, long long> params,
                         std::optional<int> window = std::nullopt,
                         std::optional<long long> bound = std::nullopt) {
    const auto& reg = detail::registry();
    auto it = reg.find(id);
    if (it == reg.end()) throw std::invalid_argument("unknown identity id: '" + id + "'");
    IdentityCase c;
    c.id = id;
    c.window = window.value_or(it->second.default_window);
    c.params = it->second.default_params;
    if (bound)
        for (const auto& key : it->second.bound_keys) c.params[key] = *bound;
    for (const auto& [k, v] : params) c.params[k] = v;
    return run_case(c);
}

// Three-way Jacobi coefficient comparison as a Report.
inline Report jacobi_check(int q_halves_max, int t_max) {
    IdentityCase c{"jacobi", {{"t_max", t_max}, {"q_halves_max", q_halves_max}}, 0};
    return run_case(c);
}

// ---------------------------------------------------------------------------
// Registry definition.

namespace detail {

inline Report run_jacobi(const IdentityCase& c) {
    CaseRun run(c);
    int t_max = static_cast<int>(param(c, "t_max", 5));
    int H = static_cast<int>(param(c, "q_halves_max", 10));
    JacobiTables t = jacobi_tables(t_max, H);
    for (int n = -t_max; n <= t_max && run.report.pass; ++n)
        for (int h = 0; h <= H; ++h) {
            std::string where =
                "coefficient of t^" + std::to_string(n) + " q^{" + std::to_string(h) + "/2}";
            auto b = t.boson[static_cast<std::size_t>(n + t_max)][static_cast<std::size_t>(h)];
            auto f = t.fermion[static_cast<std::size_t>(n + t_max)][static_cast<std::size_t>(h)];
            auto k = t.fock[static_cast<std::size_t>(n + t_max)][static_cast<std::size_t>(h)];
            run.equal_int(where + " (series vs product)", b, f);
            run.equal_int(where + " (series vs basis count)", b, k);
        }
    return run.report;
}

inline Report run_clifford(const IdentityCase& c) {
    CaseRun run(c);
    int cm = static_cast<int>(param(c, "charge_max", 3));
    int em = static_cast<int>(param(c, "energy_max", 5));
    int im = static_cast<int>(param(c, "index_max", 5));
    for (int m = -cm; m <= cm && run.report.pass; ++m)
        for (const auto& b : sector_basis(m, em)) {
            if (!run.report.pass) break;
            FockVector v = FockVector::basis(b);
            for (int i = -im; i <= im && run.report.pass; ++i)
                for (int j = -im; j <= im && run.report.pass; ++j) {
                    std::string at = "|" + b.str() + "> i=" + std::to_string(i) +
                                     " j=" + std::to_string(j);
                    run.equal_fock("psi psi + psi psi on " + at,
                                   psi(i, psi(j, v)) + psi(j, psi(i, v)), FockVector::zero());
                    run.equal_fock("psi* psi* + psi* psi* on " + at,
                                   psi_star(i, psi_star(j, v)) + psi_star(j, psi_star(i, v)),
                                   FockVector::zero());
                    FockVector rhs = i == j ? v : FockVector::zero();
                    run.equal_fock("psi psi* + psi* psi on " + at,
                                   psi(i, psi_star(j, v)) + psi_star(j, psi(i, v)), rhs);
                }
        }
    return run.report;
}

inline Report run_heisenberg(const IdentityCase& c) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "max", 5));
    auto pairs = [&]() -> std::vector<std::pair<int, int>> {
        if (c.params.count("m") && c.params.count("k"))
            return {{static_cast<int>(c.params.at("m")), static_cast<int>(c.params.at("k"))}};
        std::vector<std::pair<int, int>> all;
        for (int m = 1; m <= bound; ++m)
            for (int k = 1; k <= bound; ++k) all.emplace_back(m, k);
        return all;
    }();
    for (auto [m, k] : pairs) {
        LinOp commutator = skew_p(m) * mul_p(k) - mul_p(k) * skew_p(m);
        LinOp expect = m == k ? Rational(k) * LinOp::identity() : LinOp::zero();
        run.op_identity("[p*_" + std::to_string(m) + ", p_" + std::to_string(k) + "]",
                        commutator, expect, c.window);
    }
    return run.report;
}

inline Report run_heisenberg_fermion(const IdentityCase& c) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "max", 5));
    int cm = static_cast<int>(param(c, "charge_max", 2));
    int em = c.window;
    for (int m = 1; m <= bound && run.report.pass; ++m)
        for (int k = 1; k <= bound && run.report.pass; ++k)
            for (int ch = -cm; ch <= cm && run.report.pass; ++ch)
                for (const auto& b : sector_basis(ch, em)) {
                    FockVector v = FockVector::basis(b);
                    FockVector lhs = fermion_p_star(m, fermion_p(k, v)) -
                                     fermion_p(k, fermion_p_star(m, v));
                    FockVector rhs = m == k ? Rational(k) * v : FockVector::zero();
                    run.equal_fock("[p*_" + std::to_string(m) + ", p_" + std::to_string(k) +
                                       "] on |" + b.str() + ">",
                                   lhs, rhs);
                    if (!run.report.pass) break;
                }
    return run.report;
}

inline Report run_symid(const IdentityCase& c) {
    CaseRun run(c);
    int n_max = static_cast<int>(param(c, "n_max", 8));
    for (int n = 0; n <= n_max; ++n) {
        run.equal_sym("h_" + std::to_string(n) + " from H(z)", gf_h(n),
                      SymFunc::schur(Partition(n ? std::vector<int>{n} : std::vector<int>{})));
        run.equal_sym("e_" + std::to_string(n) + " from E(z)", gf_e(n),
                      SymFunc::schur(Partition(std::vector<int>(static_cast<std::size_t>(n), 1))));
    }
    return run.report;
}

inline Report run_koszul(const IdentityCase& c, bool starred) {
    CaseRun run(c);
    int k_max = static_cast<int>(param(c, "k_max", 10));
    for (int k = 1; k <= k_max; ++k) {
        LinOp acc = LinOp::zero();
        for (int m = 0; m <= k; ++m) {
            int n = k - m;
            LinOp term = starred ? skew_h(n) * skew_e(m) : mul_h(n) * mul_e(m);
            acc = acc + Rational(m % 2 ? -1 : 1) * term;
        }
        run.op_identity((starred ? "koszul* k=" : "koszul k=") + std::to_string(k), acc,
                        LinOp::zero(), c.window);
    }
    return run.report;
}

inline Report run_ex(const IdentityCase& c, int family) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "bound", 5));
    auto pairs = [&]() -> std::vector<std::pair<int, int>> {
        if (c.params.count("m") && c.params.count("n"))
            return {{static_cast<int>(c.params.at("m")), static_cast<int>(c.params.at("n"))}};
        std::vector<std::pair<int, int>> all;
        for (int m = 0; m <= bound; ++m)
            for (int n = 0; n <= bound; ++n) all.emplace_back(m, n);
        return all;
    }();
    for (auto [m, n] : pairs) {
        LinOp lhs, rhs;
        switch (family) {
            case 1:
                lhs = skew_h(m) * mul_h(n);
                rhs = mul_h(n) * skew_h(m) + skew_h(m - 1) * mul_h(n - 1);
                break;
            case 2:
                lhs = skew_e(m) * mul_e(n);
                rhs = mul_e(n) * skew_e(m) + skew_e(m - 1) * mul_e(n - 1);
                break;
            case 3:
                lhs = skew_e(m) * mul_h(n);
                rhs = mul_h(n) * skew_e(m) + mul_h(n - 1) * skew_e(m - 1);
                break;
            default:
                lhs = skew_h(m) * mul_e(n);
                rhs = mul_e(n) * skew_h(m) + mul_e(n - 1) * skew_h(m - 1);
                break;
        }
        run.op_identity("ex" + std::to_string(family) + " m=" + std::to_string(m) +
                            " n=" + std::to_string(n),
                        lhs, rhs, c.window);
        if (!run.report.pass) break;
    }
    return run.report;
}

inline Report run_vertex(const IdentityCase& c, int family) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "bound", 4));
    for (int a = -bound; a <= bound && run.report.pass; ++a)
        for (int b = -bound; b <= bound && run.report.pass; ++b) {
            LinOp lhs, rhs;
            if (family == 1) {
                lhs = vertex_X(a) * vertex_X(b) + vertex_X(b - 1) * vertex_X(a + 1);
                rhs = LinOp::zero();
            } else if (family == 2) {
                lhs = vertex_Xstar(a) * vertex_Xstar(b) +
                      vertex_Xstar(b - 1) * vertex_Xstar(a + 1);
                rhs = LinOp::zero();
            } else {
                lhs = vertex_X(a) * vertex_Xstar(b) + vertex_Xstar(b + 1) * vertex_X(a - 1);
                rhs = a + b == 0 ? LinOp::identity() : LinOp::zero();
            }
            run.op_identity("v" + std::to_string(family) + " a=" + std::to_string(a) +
                                " b=" + std::to_string(b),
                            lhs, rhs, c.window);
        }
    return run.report;
}

inline Report run_zchar(const IdentityCase& c) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "bound", 3));
    for (int a = -bound; a <= bound && run.report.pass; ++a)
        for (int b = -bound; b <= bound && run.report.pass; ++b) {
            LinOp total = euler_Z_diagonal_sum(a, b, c.window);
            LinOp expect = a + b == 0 ? LinOp::identity() : LinOp::zero();
            run.op_identity("zchar a=" + std::to_string(a) + " b=" + std::to_string(b), total,
                            expect, c.window);
        }
    return run.report;
}

inline Report run_socle(const IdentityCase& c) {
    CaseRun run(c);
    int size_max = static_cast<int>(param(c, "size_max", 4));
    int invert_max = static_cast<int>(param(c, "invert_max", 3));
    for (int dl = 0; dl <= size_max && run.report.pass; ++dl)
        for (const Partition& lam : partitions_of(dl))
            for (int dm = 0; dm <= size_max; ++dm)
                for (const Partition& mu : partitions_of(dm)) {
                    KClass inj = injective_class(lam, mu);
                    KClass layered;
                    for (int k = 0; k <= std::min(dl, dm) + 1; ++k)
                        layered += socle_layer(lam, mu, k);
                    std::string at = "[" + lam.str() + ";" + mu.str() + "]";
                    run.equal_kclass("layer sum vs injective at " + at, layered, inj);
                    run.equal_int("unit socle coefficient at " + at, inj.coeff({lam, mu}), 1);
                    bool triangular = true;
                    for (const auto& [l, v] : inj.terms())
                        if (!(l == SimpleLabel{lam, mu}) &&
                            l.lam.size() + l.mu.size() >= dl + dm)
                            triangular = false;
                    run.equal_int("unitriangularity at " + at, triangular ? 1 : 0, 1);
                    if (!run.report.pass) break;
                }
    for (int dl = 0; dl <= invert_max && run.report.pass; ++dl)
        for (const Partition& lam : partitions_of(dl))
            for (int dm = 0; dm <= invert_max; ++dm)
                for (const Partition& mu : partitions_of(dm)) {
                    KClass recon;
                    for (const auto& [l, cc] : simple_in_injectives(lam, mu))
                        recon += cc * injective_class(l.lam, l.mu);
                    run.equal_kclass("injective-basis round trip at [" + lam.str() + ";" +
                                         mu.str() + "]",
                                     recon, KClass::simple(lam, mu));
                    if (!run.report.pass) break;
                }
    return run.report;
}

inline Report run_homdim(const IdentityCase& c) {
    CaseRun run(c);
    int size_max = static_cast<int>(param(c, "size_max", 4));
    for (int dl = 1; dl <= size_max && run.report.pass; ++dl)
        for (const Partition& lam : partitions_of(dl))
            for (int dm = 1; dm <= size_max; ++dm)
                for (const Partition& mu : partitions_of(dm)) {
                    for (const Partition& lp : partitions_of(dl - 1))
                        for (const Partition& mp : partitions_of(dm - 1)) {
                            long long d = hom_dim(lam, mu, lp, mp);
                            long long expect =
                                (lam.contains(lp) && mu.contains(mp)) ? 1 : 0;
                            run.equal_int("hom dim [" + lam.str() + ";" + mu.str() + "] -> [" +
                                              lp.str() + ";" + mp.str() + "]",
                                          d, expect);
                            if (!run.report.pass) return run.report;
                        }
                }
    return run.report;
}

inline Report run_exx(const IdentityCase& c, int family) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "bound", 5));
    for (int m = 1; m <= bound && run.report.pass; ++m)
        for (int n = 1; n <= bound; ++n) {
            Partition row_m({m}), row_n({n});
            Partition col_m(std::vector<int>(static_cast<std::size_t>(m), 1));
            Partition col_n(std::vector<int>(static_cast<std::size_t>(n), 1));
            Partition row_m1 = m > 1 ? Partition({m - 1}) : Partition();
            Partition row_n1 = n > 1 ? Partition({n - 1}) : Partition();
            Partition col_m1(std::vector<int>(static_cast<std::size_t>(m) - 1, 1));
            Partition col_n1(std::vector<int>(static_cast<std::size_t>(n) - 1, 1));
            std::string at = " m=" + std::to_string(m) + " n=" + std::to_string(n);
            switch (family) {
                case 1:
                    run.equal_kclass("exx1" + at,
                                     injective_class(row_m, row_n) -
                                         injective_class(row_m1, row_n1),
                                     KClass::simple(row_m, row_n));
                    break;
                case 2:
                    run.equal_kclass("exx2" + at,
                                     injective_class(col_m, col_n) -
                                         injective_class(col_m1, col_n1),
                                     KClass::simple(col_m, col_n));
                    break;
                case 3:
                    run.equal_kclass("exx3" + at, injective_class(col_m, row_n),
                                     KClass::simple(col_m, row_n) +
                                         KClass::simple(col_m1, row_n1));
                    break;
                default:
                    run.equal_kclass("exx4" + at, injective_class(row_m, col_n),
                                     KClass::simple(row_m, col_n) +
                                         KClass::simple(row_m1, col_n1));
                    break;
            }
            if (!run.report.pass) break;
        }
    return run.report;
}

inline Report run_hookid(const IdentityCase& c) {
    CaseRun run(c);
    int bound = static_cast<int>(param(c, "bound", 5));
    for (int k = 1; k <= bound && run.report.pass; ++k)
        for (int m = 1; m <= bound; ++m) {
            KClass expect;
            if (k == m) expect = static_cast<std::int64_t>(k) * KClass::simple(Partition(), Partition());
            run.equal_kclass("hookid k=" + std::to_string(k) + " m=" + std::to_string(m),
                             hook_identity_check(k, m), expect);
            if (!run.report.pass) break;
        }
    return run.report;
}

inline Report run_auxp(const IdentityCase& c) {
    CaseRun run(c);
    int m_max = static_cast<int>(param(c, "m_max", 5));
    for (int m = 1; m <= m_max && run.report.pass; ++m)
        for (int dn = 0; dn < m; ++dn)
            for (const Partition& nu : partitions_of(dn))
                for (int dg = 0; dg <= m; ++dg) {
                    for (const Partition& gamma : partitions_of(dg)) {
                        long long expect = 0;
                        if (nu.empty() && gamma.is_hook() && gamma.size() == m)
                            expect = gamma.hook_leg() % 2 ? -1 : 1;
                        run.equal_int("auxp m=" + std::to_string(m) + " nu=" + nu.str() +
                                          " gamma=" + gamma.str(),
                                      auxp_sum(m, nu, gamma), expect);
                        if (!run.report.pass) return run.report;
                    }
                }
    return run.report;
}

inline Report run_bf_square(const IdentityCase& c) {
    CaseRun run(c);
    int cm = static_cast<int>(param(c, "charge_max", 2));
    int em = static_cast<int>(param(c, "energy_max", 4));
    int im = static_cast<int>(param(c, "index_max", 4));
    for (int m = -cm; m <= cm && run.report.pass; ++m)
        for (const auto& b : sector_basis(m, em)) {
            FockVector v = FockVector::basis(b);
            for (int i = -im; i <= im; ++i) {
                std::string at = "|" + b.str() + "> i=" + std::to_string(i);
                run.equal_fock("psi vs vertex at " + at, psi(i, v), clifford_psi(-1 - i, v));
                run.equal_fock("psi* vs vertex at " + at, psi_star(i, v),
                               clifford_psi_star(-1 - i, v));
                if (!run.report.pass) return run.report;
            }
        }
    return run.report;
}

inline Report run_conj63(const IdentityCase& c) {
    CaseRun run(c);
    int deg_max = static_cast<int>(param(c, "deg_max", 5));
    int a_max = static_cast<int>(param(c, "a_max", 4));
    for (int d = 0; d <= deg_max && run.report.pass; ++d)
        for (const Partition& lam : partitions_of(d))
            for (int a = -a_max; a <= a_max; ++a) {
                SymFunc img = vertex_X(a).apply(lam);
                bool ok = img.support_size() <= 1;
                if (ok && img.support_size() == 1) {
                    const auto& [p, coeff] = *img.terms().begin();
                    ok = coeff == 1 || coeff == -1;
                }
                run.equal_int("X_" + std::to_string(a) + " s[" + lam.str() +
                                  "] is 0 or one signed Schur term (got " + img.str() + ")",
                              ok ? 1 : 0, 1);
                if (!run.report.pass) return run.report;
            }
    return run.report;
}

inline Report run_lr_oracle(const IdentityCase& c) {
    CaseRun run(c);
    int size_max = static_cast<int>(param(c, "size_max", 8));
    for (int d = 0; d <= size_max && run.report.pass; ++d)
        for (const Partition& lam : partitions_of(d))
            for (int k = 0; k <= d; ++k) {
                for (const Partition& mu : partitions_of(k))
                    for (const Partition& nu : partitions_of(d - k)) {
                        run.equal_int("N^{" + lam.str() + "}_{" + mu.str() + "," + nu.str() + "}",
                                      lr_coefficient(lam, mu, nu),
                                      lr_tableau_count(lam, mu, nu));
                        if (!run.report.pass) return run.report;
                    }
            }
    return run.report;
}

inline Report run_schur_products(const IdentityCase& c) {
    CaseRun run(c);
    int size_max = static_cast<int>(param(c, "size_max", 8));
    for (int dm = 0; dm <= size_max && run.report.pass; ++dm)
        for (const Partition& mu : partitions_of(dm))
            for (int dn = dm; dm + dn <= size_max && dn <= size_max - dm; ++dn)
                for (const Partition& nu : partitions_of(dn)) {
                    bool ok = oracle::product_matches_monomials(mu, nu);
                    run.equal_int("s_{" + mu.str() + "} * s_{" + nu.str() +
                                      "} vs monomial expansion",
                                  ok ? 1 : 0, 1);
                    if (!run.report.pass) return run.report;
                }
    return run.report;
}

inline const std::map<std::string, RegistryEntry>& registry() {
    static const std::map<std::string, RegistryEntry> reg = [] {
        std::map<std::string, RegistryEntry> r;
        r["jacobi"] = {"Jacobi triple product: series, product and basis-count tables agree",
                       0,
                       {{"t_max", 5}, {"q_halves_max", 10}},
                       {},
                       {"t_max"},
                       run_jacobi};
        r["clifford"] = {"Clifford relations for the Maya-diagram generators",
                         0,
                         {{"charge_max", 3}, {"energy_max", 5}, {"index_max", 5}},
                         {},
                         {"index_max"},
                         run_clifford};
        r["heisenberg"] = {"[p*_m, p_k] = k delta Id on symmetric functions",
                           8,
                           {{"max", 5}},
                           {"m", "k"},
                           {"max"},
                           run_heisenberg};
        r["heisenberg-fermion"] = {"[p*_m, p_k] = k delta Id on the Fock space",
                                   8,
                                   {{"max", 5}, {"charge_max", 2}},
                                   {},
                                   {"max"},
                                   run_heisenberg_fermion};
        r["symid"] = {"generating functions H(z), E(z) reproduce h_n, e_n",
                      0,
                      {{"n_max", 8}},
                      {},
                      {"n_max"},
                      run_symid};
        r["koz2"] = {"Koszul sum of h and e multiplication operators vanishes",
                     10,
                     {{"k_max", 10}},
                     {},
                     {"k_max"},
                     [](const IdentityCase& c) { return run_koszul(c, false); }};
        r["koz3"] = {"Koszul sum of skew h and e operators vanishes",
                     10,
                     {{"k_max", 10}},
                     {},
                     {"k_max"},
                     [](const IdentityCase& c) { return run_koszul(c, true); }};
        for (int fam = 1; fam <= 4; ++fam) {
            r["ex" + std::to_string(fam)] = {
                "half-vertex exchange identity " + std::to_string(fam),
                8,
                {{"bound", 5}},
                {"m", "n"},
                {"bound"},
                [fam](const IdentityCase& c) { return run_ex(c, fam); }};
        }
        for (int fam = 1; fam <= 3; ++fam) {
            r["v" + std::to_string(fam)] = {
                "vertex coefficient anticommutation relation " + std::to_string(fam),
                6,
                {{"bound", 4}},
                {},
                {"bound"},
                [fam](const IdentityCase& c) { return run_vertex(c, fam); }};
        }
        r["zchar"] = {"diagonal Euler characteristic sums of the Z complexes",
                      5,
                      {{"bound", 3}},
                      {},
                      {"bound"},
                      run_zchar};
        r["socle"] = {"socle layers sum to the injective class; expansion inverts",
                      0,
                      {{"size_max", 4}, {"invert_max", 3}},
                      {},
                      {"size_max"},
                      run_socle};
        r["homdim"] = {"hom dimension dichotomy for one-box removals",
                       0,
                       {{"size_max", 4}},
                       {},
                       {"size_max"},
                       run_homdim};
        for (int fam = 1; fam <= 4; ++fam) {
            r["exx" + std::to_string(fam)] = {
                "K-class form of the elementary injective resolution " + std::to_string(fam),
                0,
                {{"bound", 5}},
                {},
                {"bound"},
                [fam](const IdentityCase& c) { return run_exx(c, fam); }};
        }
        r["hookid"] = {"alternating hook sum of reduced injectives is k delta [C]",
                       0,
                       {{"bound", 5}},
                       {},
                       {"bound"},
                       run_hookid};
        r["auxp"] = {"alternating hook LR sums follow the sign law",
                     0,
                     {{"m_max", 5}},
                     {},
                     {"m_max"},
                     run_auxp};
        r["bf-square"] = {"Maya and vertex-built Clifford generators agree (i <-> -1-i)",
                          0,
                          {{"charge_max", 2}, {"energy_max", 4}, {"index_max", 4}},
                          {},
                          {"index_max"},
                          run_bf_square};
        r["conj63"] = {"vertex coefficients send Schur elements to signed Schur elements",
                       0,
                       {{"deg_max", 5}, {"a_max", 4}},
                       {},
                       {"deg_max"},
                       run_conj63};
        r["lr-oracle"] = {"production LR coefficients equal tableau enumeration",
                          0,
                          {{"size_max", 8}},
                          {},
                          {"size_max"},
                          run_lr_oracle};
        r["schur-products"] = {"Schur products match finite-variable monomial expansion",
                               0,
                               {{"size_max", 8}},
                               {},
                               {"size_max"},
                               run_schur_products};
        return r;
    }();
    return reg;
}

}  // namespace detail

}  // namespace fockforge
