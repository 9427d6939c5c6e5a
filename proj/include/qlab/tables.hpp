#pragma once

#include <chrono>
#include <fstream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qlab/braid.hpp"
#include "qlab/cohomology.hpp"
#include "qlab/data.hpp"
#include "qlab/surface.hpp"
#include "qlab/torus.hpp"

namespace qlab {

/// Wall-clock budget for long regeneration runs.
class Budget {
   public:
    explicit Budget(double seconds = 600.0)
        : end_(std::chrono::steady_clock::now() + std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                                                      std::chrono::duration<double>(seconds))) {}
    bool expired() const { return std::chrono::steady_clock::now() >= end_; }

   private:
    std::chrono::steady_clock::time_point end_;
};

struct CellResult {
    std::string desc;
    std::string expected;
    std::string got;
    bool pass = false;
    bool skipped = false;   // budget ran out
    std::string erratum;    // nonempty: value disagrees with the printed source table (documented)
};

struct TableReport {
    std::string which;
    std::vector<CellResult> cells;
    size_t passed = 0, failed = 0, skipped = 0, errata = 0;

    void add(CellResult c) {
        if (c.skipped)
            ++skipped;
        else if (c.pass)
            ++passed;
        else
            ++failed;
        if (!c.erratum.empty()) ++errata;
        cells.push_back(std::move(c));
    }
    bool all_pass() const { return failed == 0 && skipped == 0; }
};

namespace detail {

inline std::vector<std::vector<std::string>> read_tsv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open data file: " + path);
    std::vector<std::vector<std::string>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::vector<std::string> f;
        std::stringstream ss(line);
        std::string tok;
        while (std::getline(ss, tok, '\t')) f.push_back(tok);
        rows.push_back(std::move(f));
    }
    return rows;
}

inline Cochain resolve_cocycle(const std::string& name, const Quandle& q, long long modulus) {
    if (name == "zero2") return zero_cochain(q, 2, modulus);
    if (name == "zero3") return zero_cochain(q, 3, modulus);
    return load_cocycle(name, q, modulus);
}

}  // namespace detail

/// Dimension table: rows quandle spec, then eight H^2 dims (q = 2,3,5,7,11,13,17,19)
/// and five H^3 dims (q = 2,3,5,7,11); "-" marks cells absent from the source
/// table, a trailing "!" marks corrected source misprints.
inline TableReport cohomology_table(const Budget& budget, bool extensions = false) {
    static const long long h2q[] = {2, 3, 5, 7, 11, 13, 17, 19};
    static const long long h3q[] = {2, 3, 5, 7, 11};
    TableReport rep;
    rep.which = "cohomology";
    // corrected rows are only accepted once the isomorphism justifying the
    // correction has been re-verified
    std::map<std::string, std::string> witness = {{"A:2:1,0,1", "R:4"}, {"A:3:1,1,1", "L:9:4"}};
    std::set<std::string> iso_checked;
    for (auto& row : detail::read_tsv(data_dir() + "/expected/cohomology_dims.tsv")) {
        const std::string& spec = row[0];
        Quandle q = parse_quandle_spec(spec);
        for (size_t i = 1; i < row.size() && i <= 13; ++i) {
            std::string cell = row[i];
            int degree = i <= 8 ? 2 : 3;
            long long p = i <= 8 ? h2q[i - 1] : h3q[i - 9];
            if (cell == "-" && !extensions) continue;
            CellResult r;
            r.desc = spec + " H^" + std::to_string(degree) + "(Z_" + std::to_string(p) + ")";
            if (budget.expired()) {
                r.skipped = true;
                rep.add(std::move(r));
                continue;
            }
            size_t dim = cohomology_dim(q, degree, p);
            r.got = std::to_string(dim);
            if (cell == "-") {
                r.expected = "(not in source table)";
                r.pass = true;
                r.erratum = "extension";
            } else if (!cell.empty() && cell.back() == '!') {
                if (witness.count(spec) && !iso_checked.count(spec)) {
                    if (!is_isomorphic(q, parse_quandle_spec(witness[spec])))
                        throw std::logic_error("correction witness failed: " + spec + " vs " + witness[spec]);
                    iso_checked.insert(spec);
                }
                r.expected = cell.substr(0, cell.size() - 1);
                r.pass = r.got == r.expected;
                r.erratum = witness.count(spec)
                                ? "source value inconsistent with the verified isomorphism onto " + witness[spec]
                                : "source value inconsistent with the direct computation (corrected)";
                if (!witness.count(spec)) {
                    // corroborate by the independent integral/universal-coefficient route
                    CohomologyGroup g = cohomology_group_mod(q, degree, p);
                    if (g.torsion.size() != dim)
                        throw std::logic_error("correction cross-check failed for " + r.desc);
                }
            } else {
                r.expected = cell;
                r.pass = r.got == r.expected;
            }
            rep.add(std::move(r));
        }
    }
    return rep;
}

/// Knot table: runs both shipped quandle/cocycle pairs over knots.tsv and
/// diffs against the expected-value files.
inline TableReport knots_table(const Budget& budget) {
    TableReport rep;
    rep.which = "knots";
    auto records = load_knot_table(data_dir() + "/knots.tsv");
    struct Run {
        const char* quandle;
        const char* cocycle;
        const char* expected_file;
    };
    for (const Run& run : {Run{"S4", "s4-phi", "knots_s4.tsv"}, Run{"A:3:1,0,1", "z3-phi", "knots_z3.tsv"}}) {
        Quandle q = parse_quandle_spec(run.quandle);
        Cochain phi = load_cocycle(run.cocycle, q);
        std::map<std::string, std::pair<std::string, std::string>> expected;  // name -> value, erratum
        for (auto& row : detail::read_tsv(data_dir() + "/expected/" + run.expected_file))
            expected[row[0]] = {row[1], row.size() > 2 ? row[2] : ""};
        bool all_integer = true;
        for (auto& rec : records) {
            CellResult r;
            r.desc = std::string(run.quandle) + "/" + run.cocycle + " " + rec.name;
            if (budget.expired()) {
                r.skipped = true;
                rep.add(std::move(r));
                continue;
            }
            GroupRing value = state_sum(q, phi, rec.braid);
            r.got = value.to_string();
            auto it = expected.find(rec.name);
            if (it == expected.end()) {
                r.expected = "(missing expectation)";
                r.pass = false;
            } else {
                r.expected = it->second.first;
                r.pass = r.got == r.expected;
                r.erratum = it->second.second;
            }
            if (value.coeffs().size() != 1) all_integer = false;
            rep.add(std::move(r));
        }
        (void)all_integer;
    }
    return rep;
}

/// Torus table rows: quandle, cocycle, n, k, expected value, optional erratum note.
inline TableReport torus_table(const Budget& budget) {
    TableReport rep;
    rep.which = "torus";
    for (auto& row : detail::read_tsv(data_dir() + "/expected/torus.tsv")) {
        CellResult r;
        r.desc = "T(" + row[2] + "," + row[3] + ") " + row[0] + "/" + row[1];
        if (budget.expired()) {
            r.skipped = true;
            rep.add(std::move(r));
            continue;
        }
        Quandle q = parse_quandle_spec(row[0]);
        Cochain phi = detail::resolve_cocycle(row[1], q, -1);
        GroupRing value = torus_invariant(q, phi, std::stoi(row[2]), std::stoi(row[3]));
        r.got = value.to_string();
        r.expected = row[4];
        r.pass = r.got == r.expected;
        if (row.size() > 5) r.erratum = row[5];
        rep.add(std::move(r));
    }
    return rep;
}

/// Twist-spin table rows: m, k, quandle, modulus, cocycle (builtin name,
/// neg:name, or "any" = every basis cocycle of Z^3), expected value.
inline TableReport twistspin_table(const Budget& budget) {
    TableReport rep;
    rep.which = "twistspin";
    for (auto& row : detail::read_tsv(data_dir() + "/expected/twistspin.tsv")) {
        int m = std::stoi(row[0]), k = std::stoi(row[1]);
        long long mod = std::stoll(row[3]);
        CellResult r;
        r.desc = "tau^" + row[1] + " T(2," + row[0] + ") " + row[2] + "/" + row[4] + " mod " + row[3];
        if (budget.expired()) {
            r.skipped = true;
            rep.add(std::move(r));
            continue;
        }
        Quandle q = parse_quandle_spec(row[2]);
        r.expected = row[5];
        if (row[4] == "any") {
            auto basis = cocycle_basis(q, 3, mod);
            bool ok = true;
            std::string got;
            for (auto& theta : basis) {
                GroupRing v = twist_spin_movie(q, theta, m, k);
                if (got.empty()) got = v.to_string();
                if (v.to_string() != r.expected) {
                    ok = false;
                    got = v.to_string();
                    break;
                }
            }
            r.got = got + " (over " + std::to_string(basis.size()) + " basis cocycles)";
            r.pass = ok;
        } else {
            Cochain theta = detail::resolve_cocycle(row[4], q, mod);
            GroupRing v = twist_spin_movie(q, theta, m, k);
            r.got = v.to_string();
            r.pass = r.got == r.expected;
        }
        if (row.size() > 6) r.erratum = row[6];
        rep.add(std::move(r));
    }
    return rep;
}

/// The four published deform-spun figure-8 values.
inline TableReport fig8_table(const Budget& budget) {
    TableReport rep;
    rep.which = "fig8";
    struct Row {
        const char* cocycle;
        long long mod;
        const char* expected;
    };
    for (const Row& row : {Row{"eta11", 0, "16"}, Row{"eta1", 2, "4+12t"}, Row{"2eta1", 4, "4+12t^2"},
                           Row{"eta2", 2, "4+12t"}, Row{"eta2", 4, "4+12t"}}) {
        CellResult r;
        r.desc = std::string("fig8 ") + row.cocycle + " mod " + std::to_string(row.mod);
        if (budget.expired()) {
            r.skipped = true;
            rep.add(std::move(r));
            continue;
        }
        Quandle s4 = make_s4();
        Cochain theta = load_cocycle(row.cocycle, s4, row.mod);
        r.got = deform_spun_fig8(theta).to_string();
        r.expected = row.expected;
        r.pass = r.got == r.expected;
        rep.add(std::move(r));
    }
    return rep;
}

inline TableReport run_table(const std::string& which, const Budget& budget, bool extensions = false) {
    if (which == "cohomology") return cohomology_table(budget, extensions);
    if (which == "knots") return knots_table(budget);
    if (which == "torus") return torus_table(budget);
    if (which == "twistspin") return twistspin_table(budget);
    if (which == "fig8") return fig8_table(budget);
    throw std::invalid_argument("unknown table: " + which);
}

}  // namespace qlab
