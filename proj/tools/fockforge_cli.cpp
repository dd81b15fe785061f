// Command-line surface: exact queries against the symmetric-function /
// Fock-space engine and the identity verification registry.
//
// Exit codes: 0 all good, 1 verification failure, 2 usage or input error.

#include <CLI11.hpp>

#include <iostream>
#include <string>
#include <vector>

#include "fockforge/fockforge.hpp"

namespace {

using namespace fockforge;

std::string display(const Partition& p) { return p.empty() ? "\xE2\x88\x85" : p.str(); }

void print_symfunc(const SymFunc& f, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(f).dump() << "\n";
        return;
    }
    if (f.is_zero()) {
        std::cout << "0\n";
        return;
    }
    for (const auto& [lam, c] : f.terms())
        std::cout << display(lam) << ": " << rational_str(c) << "\n";
}

void print_kclass(const KClass& k, const std::string& format) {
    if (format == "json") {
        std::cout << to_json(k).dump() << "\n";
        return;
    }
    if (k.is_zero()) {
        std::cout << "0\n";
        return;
    }
    for (const auto& [l, c] : k.terms())
        std::cout << display(l.lam) << ";" << display(l.mu) << ": " << c << "\n";
}

int print_reports(const std::vector<Report>& reports, const std::string& format) {
    bool all = true;
    for (const auto& r : reports) all = all && r.pass;
    if (format == "json") {
        OrderedJson arr = OrderedJson::array();
        for (const auto& r : reports) arr.push_back(to_json(r));
        std::cout << arr.dump(2) << "\n";
    } else {
        for (const auto& r : reports) std::cout << report_text(r) << "\n";
        std::cout << (all ? "all identities verified" : "verification FAILED") << "\n";
    }
    return all ? 0 : 1;
}

std::map<std::string, long long> parse_params(const std::vector<std::string>& kvs) {
    std::map<std::string, long long> params;
    for (const auto& kv : kvs) {
        auto eq = kv.find('=');
        if (eq == std::string::npos)
            throw std::invalid_argument("expected key=value, got '" + kv + "'");
        params[kv.substr(0, eq)] = std::stoll(kv.substr(eq + 1));
    }
    return params;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"fockforge: exact boson-fermion correspondence calculator"};
    app.require_subcommand(1);
    app.fallthrough();

    std::string format = "text";
    app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

    // ---- lr ----------------------------------------------------------------
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson coefficient N^lam_{mu,nu}");
    std::string lr_lam, lr_mu, lr_nu;
    lr->add_option("--lam", lr_lam, "outer partition")->required();
    lr->add_option("--mu", lr_mu, "first factor")->required();
    lr->add_option("--nu", lr_nu, "second factor")->required();

    // ---- socle -------------------------------------------------------------
    auto* socle = app.add_subcommand("socle", "socle filtration layer of an injective hull");
    std::string socle_lam, socle_mu;
    int socle_layer_idx = 0;
    bool socle_full = false;
    socle->add_option("--lam", socle_lam)->required();
    socle->add_option("--mu", socle_mu)->required();
    socle->add_option("--layer", socle_layer_idx, "layer index (0 = socle)");
    socle->add_flag("--full", socle_full, "whole injective class instead of one layer");

    // ---- schur-expand ------------------------------------------------------
    auto* expand = app.add_subcommand("schur-expand", "power-sum expansion of a Schur function");
    std::string expand_lam;
    expand->add_option("--lam", expand_lam)->required();

    // ---- vertex-apply ------------------------------------------------------
    auto* vertex = app.add_subcommand("vertex-apply", "apply a vertex operator coefficient");
    int vertex_a = 0;
    std::string vertex_input;
    bool vertex_star = false;
    vertex->add_option("--a", vertex_a, "coefficient index")->required();
    vertex->add_option("--input", vertex_input, "partition the operator acts on")->required();
    vertex->add_flag("--star", vertex_star, "use X* instead of X");

    // ---- run ---------------------------------------------------------------
    auto* run = app.add_subcommand("run", "run one identity from the registry");
    std::string run_id;
    int run_window = -1;
    long long run_bound = -1;
    std::vector<std::string> run_params;
    run->add_option("--case", run_id, "identity id")->required();
    run->add_option("--window", run_window, "degree window")->check(CLI::NonNegativeNumber);
    run->add_option("--bound", run_bound, "index bound override")->check(CLI::NonNegativeNumber);
    run->add_option("--param", run_params, "extra case parameter key=value")->take_all();

    // ---- run-all -----------------------------------------------------------
    auto* runall = app.add_subcommand("run-all", "run the whole identity registry");
    int all_window = -1;
    long long all_bound = -1;
    runall->add_option("--window", all_window, "degree window override")
        ->check(CLI::NonNegativeNumber);
    runall->add_option("--bound", all_bound, "index bound override")
        ->check(CLI::NonNegativeNumber);

    // ---- jacobi ------------------------------------------------------------
    auto* jac = app.add_subcommand("jacobi", "Jacobi triple product coefficient check");
    int jac_tmax = 5, jac_qmax = 10;
    jac->add_option("--tmax", jac_tmax, "charge range");
    jac->add_option("--qmax", jac_qmax, "q exponent bound, in half steps");

    // ---- list --------------------------------------------------------------
    auto* list = app.add_subcommand("list", "list registered identity ids");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*lr) {
            auto value = lr_coefficient(Partition::parse(lr_lam), Partition::parse(lr_mu),
                                        Partition::parse(lr_nu));
            if (format == "json")
                std::cout << OrderedJson{{"lam", lr_lam}, {"mu", lr_mu}, {"nu", lr_nu},
                                         {"value", value}}
                                 .dump()
                          << "\n";
            else
                std::cout << value << "\n";
            return 0;
        }
        if (*socle) {
            Partition lam = Partition::parse(socle_lam), mu = Partition::parse(socle_mu);
            KClass k = socle_full ? injective_class(lam, mu) : socle_layer(lam, mu, socle_layer_idx);
            print_kclass(k, format);
            return 0;
        }
        if (*expand) {
            PowerExpansion e = to_p_basis(SymFunc::schur(Partition::parse(expand_lam)));
            if (format == "json") {
                OrderedJson j = OrderedJson::object();
                for (const auto& [rho, c] : e) j[rho.str()] = rational_str(c);
                std::cout << j.dump() << "\n";
            } else if (e.empty()) {
                std::cout << "0\n";
            } else {
                for (const auto& [rho, c] : e)
                    std::cout << "p[" << display(rho) << "]: " << rational_str(c) << "\n";
            }
            return 0;
        }
        if (*vertex) {
            LinOp op = vertex_star ? vertex_Xstar(vertex_a) : vertex_X(vertex_a);
            print_symfunc(op.apply(SymFunc::schur(Partition::parse(vertex_input))), format);
            return 0;
        }
        if (*run) {
            Report r = run_single(
                run_id, parse_params(run_params),
                run_window >= 0 ? std::optional<int>(run_window) : std::nullopt,
                run_bound >= 0 ? std::optional<long long>(run_bound) : std::nullopt);
            return print_reports({r}, format);
        }
        if (*runall) {
            auto reports =
                run_all(all_window >= 0 ? std::optional<int>(all_window) : std::nullopt,
                        all_bound >= 0 ? std::optional<long long>(all_bound) : std::nullopt);
            return print_reports(reports, format);
        }
        if (*jac) {
            Report r = jacobi_check(jac_qmax, jac_tmax);
            return print_reports({r}, format);
        }
        if (*list) {
            for (const auto& id : registry_ids())
                std::cout << id << "  -  " << registry_description(id) << "\n";
            return 0;
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
