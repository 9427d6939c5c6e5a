#include <chrono>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "qlab/alexander.hpp"
#include "qlab/braid.hpp"
#include "qlab/cohomology.hpp"
#include "qlab/data.hpp"
#include "qlab/surface.hpp"
#include "qlab/tables.hpp"
#include "qlab/torus.hpp"

using json = nlohmann::json;
using namespace qlab;

namespace {

json ring_to_json(const GroupRing& x) {
    json coeffs = json::object();
    for (const auto& [e, c] : x.coeffs()) coeffs[std::to_string(e)] = c.str();
    return json{{"modulus", x.modulus()}, {"coeffs", coeffs}};
}

struct Output {
    bool as_json = false;
    json j;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();

    void emit_value(const std::string& command, const json& inputs, const GroupRing& value) {
        if (!as_json) {
            std::cout << value.to_string() << "\n";
            return;
        }
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
        j = {{"command", command},
             {"inputs", inputs},
             {"value", ring_to_json(value)},
             {"colorings", value.augmentation().str()},
             {"elapsed_ms", ms.count()}};
        std::cout << j.dump() << "\n";
    }
};

Cochain cli_cocycle(const std::string& name, const Quandle& q, long long mod_override, int degree) {
    if (name == "zero") {
        if (mod_override < 0) throw std::invalid_argument("--cocycle zero needs --mod");
        return zero_cochain(q, degree, mod_override);
    }
    return load_cocycle(name, q, mod_override);
}

void print_table(const Quandle& q) {
    std::cout << "order " << q.order() << "  (" << q.label() << ")\n";
    for (Element a = 0; a < q.order(); ++a) {
        for (Element b = 0; b < q.order(); ++b) std::cout << (b ? " " : "") << q.op(a, b);
        std::cout << "\n";
    }
}

int report_exit(const TableReport& rep) {
    for (const auto& c : rep.cells) {
        std::string status = c.skipped ? "SKIP" : c.pass ? "PASS" : "FAIL";
        std::cout << status << "  " << c.desc;
        if (!c.skipped) {
            std::cout << "  expected " << c.expected << "  got " << c.got;
            if (!c.erratum.empty()) std::cout << "  [" << c.erratum << "]";
        } else {
            std::cout << "  (time budget exceeded)";
        }
        std::cout << "\n";
    }
    std::cout << rep.which << ": " << rep.passed << " passed, " << rep.failed << " failed, " << rep.skipped
              << " skipped";
    if (rep.errata) std::cout << " (" << rep.errata << " annotated)";
    std::cout << "\n";
    return rep.all_pass() ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"quandle cohomology and cocycle state-sum invariants"};
    app.require_subcommand(1);
    Output out;
    double budget_sec = 600.0;
    std::string data_override;
    app.add_flag("--json", out.as_json, "machine-readable output");
    app.add_option("--budget-sec", budget_sec, "time budget for table regeneration");
    app.add_option("--data", data_override, "data directory (overrides QUANDLE_LAB_DATA)");

    // quandle
    std::string q_spec, q_iso;
    bool q_dual = false, q_self_dual = false;
    auto* quandle_cmd = app.add_subcommand("quandle", "construct and inspect a quandle");
    quandle_cmd->add_option("--quandle", q_spec, "quandle spec (T:n | R:n | S4 | A:n:c0,..,ck | L:p:a)")->required();
    quandle_cmd->add_flag("--dual", q_dual, "print the dual quandle's table");
    quandle_cmd->add_flag("--self-dual", q_self_dual, "test whether the quandle is isomorphic to its dual");
    quandle_cmd->add_option("--isomorphic-to", q_iso, "search for an isomorphism onto this quandle");

    // cohomology
    std::string c_spec;
    int c_degree = 2;
    long long c_mod = 0;
    bool c_integral = false, c_crosscheck = false;
    auto* coh = app.add_subcommand("cohomology", "cohomology dimensions and groups");
    coh->add_option("--quandle", c_spec)->required();
    coh->add_option("--degree", c_degree)->required();
    coh->add_option("--mod", c_mod, "coefficient order (prime or prime power)");
    coh->add_flag("--integral", c_integral, "integral cohomology group");
    coh->add_flag("--crosscheck", c_crosscheck, "report mod-p dimensions next to the integral answer");

    // cocycle
    std::string k_spec, k_out;
    int k_degree = 2;
    long long k_mod = 2;
    auto* coc = app.add_subcommand("cocycle", "emit a cocycle basis");
    coc->add_option("--quandle", k_spec)->required();
    coc->add_option("--degree", k_degree)->required();
    coc->add_option("--mod", k_mod)->required();
    coc->add_option("--out", k_out, "write to file instead of stdout");

    // invariant
    auto* inv = app.add_subcommand("invariant", "cocycle state-sum invariants");
    inv->require_subcommand(1);
    std::string i_spec, i_cocycle, i_braid, i_table, i_method = "movie";
    int i_strands = 2, i_n = 2, i_k = 0, i_m = 3;
    long long i_mod = -1;
    auto* ik = inv->add_subcommand("knot", "closed-braid 2-cocycle invariant");
    ik->add_option("--quandle", i_spec)->required();
    ik->add_option("--cocycle", i_cocycle)->required();
    ik->add_option("--braid", i_braid, "comma-separated signed letters");
    ik->add_option("--strands", i_strands);
    ik->add_option("--table", i_table, "knot table TSV; runs every record");
    ik->add_option("--mod", i_mod, "override coefficient order");
    auto* it = inv->add_subcommand("torus", "torus link invariant");
    it->add_option("--n", i_n)->required();
    it->add_option("--k", i_k)->required();
    it->add_option("--quandle", i_spec)->required();
    it->add_option("--cocycle", i_cocycle)->required();
    it->add_option("--mod", i_mod);
    auto* iw = inv->add_subcommand("twistspin", "twist-spun torus knot invariant");
    iw->add_option("--m", i_m)->required();
    iw->add_option("--k", i_k);
    iw->add_option("--quandle", i_spec)->required();
    iw->add_option("--cocycle", i_cocycle)->required();
    iw->add_option("--method", i_method, "movie | chart | both (chart needs k = 2)");
    iw->add_option("--mod", i_mod);
    auto* i8 = inv->add_subcommand("fig8", "deform-spun figure-8 invariant");
    i8->add_option("--cocycle", i_cocycle)->required();
    i8->add_option("--mod", i_mod);

    // period
    std::string p_spec;
    int p_n = 2;
    long long p_cap = 0;
    auto* per = app.add_subcommand("period", "color period of the torus braid block map");
    per->add_option("--quandle", p_spec)->required();
    per->add_option("--n", p_n)->required();
    per->add_option("--cap", p_cap);

    // table
    std::string t_which;
    bool t_ext = false;
    auto* tab = app.add_subcommand("table", "regenerate a reference table and diff it");
    tab->add_option("--which", t_which, "cohomology | knots | torus | twistspin | fig8")->required();
    tab->add_flag("--extensions", t_ext, "also compute cells absent from the source table");

    CLI11_PARSE(app, argc, argv);
    if (!data_override.empty()) setenv("QUANDLE_LAB_DATA", data_override.c_str(), 1);

    try {
        if (quandle_cmd->parsed()) {
            Quandle q = parse_quandle_spec(q_spec);
            if (q_dual) {
                print_table(dual(q));
            } else if (!q_iso.empty()) {
                auto f = is_isomorphic(q, parse_quandle_spec(q_iso));
                if (!f) {
                    std::cout << "not isomorphic\n";
                } else {
                    std::cout << "isomorphic:";
                    for (Element x : *f) std::cout << " " << x;
                    std::cout << "\n";
                }
            } else if (q_self_dual) {
                std::cout << (is_isomorphic(q, dual(q)) ? "self-dual" : "not self-dual") << "\n";
            } else {
                print_table(q);
            }
            return 0;
        }
        if (coh->parsed()) {
            Quandle q = parse_quandle_spec(c_spec);
            if (c_integral) {
                CohomologyGroup g = cohomology_group_integral(q, c_degree);
                std::cout << "H^" << c_degree << "(" << q.label() << ", Z) = " << g.to_string() << "\n";
                if (c_crosscheck) {
                    std::cout << "crosscheck: integral free rank " << g.free_rank << "; mod-p dims:";
                    for (long long p : {2, 3, 5, 7, 11})
                        std::cout << " " << p << ":" << cohomology_dim(q, c_degree, p);
                    std::cout << "\n";
                }
                return 0;
            }
            if (c_mod < 2) throw std::invalid_argument("need --mod or --integral");
            bool prime = true;
            for (long long f = 2; f * f <= c_mod; ++f)
                if (c_mod % f == 0) prime = false;
            if (prime) {
                std::cout << "dim = " << cohomology_dim(q, c_degree, c_mod) << "\n";
            } else {
                std::cout << "H^" << c_degree << "(" << q.label() << ", Z_" << c_mod
                          << ") = " << cohomology_group_mod(q, c_degree, c_mod).to_string() << "\n";
            }
            return 0;
        }
        if (coc->parsed()) {
            Quandle q = parse_quandle_spec(k_spec);
            auto basis = cocycle_basis(q, k_degree, k_mod);
            std::ostringstream os;
            os << "# cocycle basis: " << q.label() << " degree " << k_degree << " mod " << k_mod << " (dim "
               << basis.size() << ")\n";
            for (size_t i = 0; i < basis.size(); ++i) {
                os << "# basis " << i << "\n" << serialize_cochain(basis[i]);
            }
            if (k_out.empty()) {
                std::cout << os.str();
            } else {
                std::ofstream f(k_out);
                f << os.str();
            }
            return 0;
        }
        if (ik->parsed()) {
            Quandle q = parse_quandle_spec(i_spec);
            Cochain phi = cli_cocycle(i_cocycle, q, i_mod, 2);
            if (!i_table.empty()) {
                for (const auto& rec : load_knot_table(i_table)) {
                    GroupRing v = state_sum(q, phi, rec.braid);
                    std::cout << rec.name << "\t" << v.to_string() << "\n";
                }
                return 0;
            }
            BraidWord w = BraidWord::parse(i_strands, i_braid);
            out.emit_value("invariant knot",
                           {{"quandle", i_spec}, {"cocycle", i_cocycle}, {"braid", i_braid}, {"strands", i_strands}},
                           state_sum(q, phi, w));
            return 0;
        }
        if (it->parsed()) {
            Quandle q = parse_quandle_spec(i_spec);
            Cochain phi = cli_cocycle(i_cocycle, q, i_mod, 2);
            out.emit_value("invariant torus", {{"quandle", i_spec}, {"cocycle", i_cocycle}, {"n", i_n}, {"k", i_k}},
                           torus_invariant(q, phi, i_n, i_k));
            return 0;
        }
        if (iw->parsed()) {
            Quandle q = parse_quandle_spec(i_spec);
            Cochain theta = cli_cocycle(i_cocycle, q, i_mod, 3);
            json inputs = {{"quandle", i_spec}, {"cocycle", i_cocycle}, {"m", i_m}, {"k", i_k}, {"method", i_method}};
            if (i_method == "movie") {
                out.emit_value("invariant twistspin", inputs, twist_spin_movie(q, theta, i_m, i_k));
            } else if (i_method == "chart") {
                if (i_k != 2) throw std::invalid_argument("chart method is the 2-twist spin; use --k 2");
                out.emit_value("invariant twistspin", inputs, twist_spin_chart(q, theta, i_m));
            } else if (i_method == "both") {
                if (i_k != 2) throw std::invalid_argument("both needs --k 2 (chart is the 2-twist spin)");
                GroupRing movie = twist_spin_movie(q, theta, i_m, 2);
                GroupRing chart = twist_spin_chart(q, theta, i_m);
                std::cout << "movie: " << movie.to_string() << "\n";
                std::cout << "chart: " << chart.to_string() << "\n";
                std::cout << "conjugate(movie) == chart: " << (conjugate(movie) == chart ? "yes" : "NO") << "\n";
                return conjugate(movie) == chart ? 0 : 1;
            } else {
                throw std::invalid_argument("unknown method: " + i_method);
            }
            return 0;
        }
        if (i8->parsed()) {
            Quandle s4 = make_s4();
            Cochain theta = cli_cocycle(i_cocycle, s4, i_mod, 3);
            out.emit_value("invariant fig8", {{"cocycle", i_cocycle}, {"mod", i_mod}}, deform_spun_fig8(theta));
            return 0;
        }
        if (per->parsed()) {
            Quandle q = parse_quandle_spec(p_spec);
            PeriodReport r = color_period(q, p_n, p_cap);
            if (out.as_json) {
                json j = {{"command", "period"},
                          {"inputs", {{"quandle", p_spec}, {"n", p_n}, {"cap", r.cap}}},
                          {"period", r.exceeded() ? json(nullptr) : json(r.period)}};
                std::cout << j.dump() << "\n";
            } else if (r.exceeded()) {
                std::cout << "period exceeds cap " << r.cap << "\n";
            } else {
                std::cout << "period = " << r.period << "\n";
            }
            return 0;
        }
        if (tab->parsed()) {
            TableReport rep = run_table(t_which, Budget(budget_sec), t_ext);
            return report_exit(rep);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
