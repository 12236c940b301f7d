/* voa-modular: command-line front end for the exact VOA / modular-forms
 * library.  Subcommands: eisenstein, qv, kacdet, genus2, mlde, theta, verify.
 * Exit codes: 0 success, 1 computational error, 2 usage error. */

#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "verify_suite.hpp"
#include "voam/genus2.hpp"
#include "voam/heisenberg.hpp"
#include "voam/lattice.hpp"
#include "voam/mlde.hpp"
#include "voam/polyc.hpp"
#include "voam/qseries.hpp"
#include "voam/quasimodular.hpp"
#include "voam/virasoro.hpp"

using json = nlohmann::json;
using namespace voam;

namespace {

json qseries_json(const QSeries& f) {
    json coeffs = json::array();
    for (const Rational& a : f.coeffs()) coeffs.push_back(a.str());
    return json{{"offset", f.offset().str()}, {"coeffs", coeffs}};
}

json qm_json(const QuasiModular& f) {
    json out = json::array();
    for (const auto& [m, c] : f.terms())
        out.push_back(json{{"P", m[0]}, {"Q", m[1]}, {"R", m[2]}, {"coeff", c.str()}});
    return out;
}

void print_qseries(const QSeries& f, const std::string& format) {
    if (format == "json") {
        std::cout << qseries_json(f).dump(2) << "\n";
    } else if (format == "csv") {
        std::cout << "exponent,coeff\n";
        for (int n = 0; n <= f.trunc_order(); ++n)
            std::cout << (f.offset() + Rational(n)).str() << "," << f.coeff(n).str() << "\n";
    } else {
        std::cout << f.str() << "\n";
    }
}

int default_jobs() {
    if (const char* env = std::getenv("VOA_MODULAR_JOBS")) {
        int j = std::atoi(env);
        if (j > 0) return j;
    }
    return 1;
}

int cmd_eisenstein(int k, int order, const std::string& format) {
    QSeries s = eisenstein_qexp(k, order);
    if (format == "json") {
        json out{{"weight", k}, {"qexp", qseries_json(s)}};
        if (k >= 2 && k % 2 == 0) {
            QuasiModular f = eisenstein_qm(k);
            out["pqr"] = qm_json(f);
            out["e_basis"] = f.str_e();
        }
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    if (k >= 2 && k % 2 == 0) {
        QuasiModular f = eisenstein_qm(k);
        if (format == "text")
            std::cout << "E" << k << " = " << f.str_pqr() << " = " << f.str_e() << "\n";
    }
    print_qseries(s, format);
    return 0;
}

int cmd_qv(const std::string& partition, int order, const std::string& format) {
    Partition p = Partition::parse(partition);
    QuasiModular qv = qv_involution_sum(p);
    if (qv != qv_zhu_recursion(p)) throw std::domain_error("internal recursion cross-check failed");
    if (format == "json") {
        json out{{"partition", p.str()},
                 {"weight", p.weight()},
                 {"pqr", qm_json(qv)},
                 {"e_basis", qv.str_e()},
                 {"z1", qseries_json(z1_heisenberg(p, order))}};
        std::cout << out.dump(2) << "\n";
        return 0;
    }
    std::cout << qv.str_e() << "\n";
    if (format == "text") {
        std::cout << "P,Q,R form: " << qv.str_pqr() << "\n";
        std::cout << "Z(v) = Q_v/eta: " << z1_heisenberg(p, order).str() << "\n";
    }
    return 0;
}

int cmd_kacdet(int n, const std::string& format) {
    PolyC det = kac_det(n);
    if (format == "json") {
        json coeffs = json::array();
        for (const Rational& a : det.coeffs()) coeffs.push_back(a.str());
        std::cout << json{{"n", n}, {"coeffs", coeffs}, {"factored", det.factored_str()}}.dump(2)
                  << "\n";
        return 0;
    }
    std::cout << det.factored_str() << "\n";
    if (format == "text") std::cout << "expanded: " << det.str() << "\n";
    return 0;
}

void print_eps_table(const EpsSeries& s, const std::string& format, const std::string& name) {
    if (format == "json") {
        json rows = json::array();
        for (int n = 0; n <= s.trunc_order(); ++n)
            rows.push_back(json{{"eps_power", n}, {"value", s.coeff(n).str_e()}});
        std::cout << json{{"series", name}, {"rows", rows}}.dump(2) << "\n";
        return;
    }
    if (format == "csv") {
        std::cout << "eps_power,value\n";
        for (int n = 0; n <= s.trunc_order(); ++n)
            std::cout << n << ",\"" << s.coeff(n).str_e() << "\"\n";
        return;
    }
    std::cout << name << ":\n";
    for (int n = 0; n <= s.trunc_order(); ++n)
        std::cout << "  eps^" << n << " : " << s.coeff(n).str_e() << "\n";
}

int cmd_genus2(int order, int rank, const std::string& what, const std::string& format) {
    int K = 2 * order;  // provably safe cutoff
    if (what == "det") {
        print_eps_table(det_series(K, order), format, "det(I - A1 A2)");
    } else if (what == "omega") {
        PeriodMatrix pm = period_matrix(K, order);
        print_eps_table(pm.om11, format, "2 pi i Omega11 - 2 pi i tau1");
        print_eps_table(pm.om22, format, "2 pi i Omega22 - 2 pi i tau2");
        print_eps_table(pm.om12, format, "2 pi i Omega12");
    } else if (what == "z2") {
        Z2Heisenberg z = z2_heisenberg(rank, K, order);
        if (format == "text") std::cout << "prefactor: " << z.prefactor << "\n";
        print_eps_table(z.series, format, "Z2 series part");
    } else if (what == "oracle") {
        EpsSeries oracle(order);
        for (int n = 0; n <= order; ++n) oracle.set_coeff(n, chequered_oracle(n));
        print_eps_table(oracle, format, "chequered-diagram oracle");
    } else {
        throw CLI::ValidationError("--what must be det|omega|z2|oracle");
    }
    return 0;
}

int cmd_mlde(const std::string& c_str, const std::string& table, bool deligne, int order,
             const std::string& format) {
    if (!table.empty()) {
        TableReport rep = table == "k2" ? verify_k2_table() : verify_k3_table();
        if (format == "json") {
            json rows = json::array();
            for (const auto& r : rep.rows)
                rows.push_back(json{{"c", r.c.str()},
                                    {"expected", r.expected.str()},
                                    {"computed", r.computed.str()},
                                    {"match", r.match}});
            std::cout << json{{"table", table}, {"rows", rows}, {"all_match", rep.all_match}}.dump(2)
                      << "\n";
        } else {
            for (const auto& r : rep.rows)
                std::cout << r.c.str() << " | " << r.computed.str()
                          << (r.match ? "" : "  (MISMATCH, expected " + r.expected.str() + ")")
                          << "\n";
        }
        return rep.all_match ? 0 : 1;
    }
    if (deligne) {
        json rows = json::array();
        for (const auto& [c, dim] : deligne_scan(250)) {
            if (format == "json")
                rows.push_back(json{{"c", c.str()}, {"d", dim}});
            else
                std::cout << "c = " << c.str() << "  d = " << dim << "\n";
        }
        if (format == "json") std::cout << rows.dump(2) << "\n";
        return 0;
    }
    Rational c = Rational::parse(c_str);
    MLDESolution sol = solve_mlde2(c, order);
    if (format == "json") {
        std::cout << json{{"c", c.str()}, {"mu", sol.mu.str()}, {"coeffs", qseries_json(sol.coeffs)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    auto [r0, r1] = indicial_roots(c);
    if (format == "text")
        std::cout << "indicial roots: " << r0.str() << ", " << r1.str() << "\n";
    print_qseries(sol.coeffs, format);
    return 0;
}

int cmd_theta(const std::string& gram_file, int order, const std::string& format) {
    EvenLattice L;
    if (gram_file == "e8") {
        L = e8_lattice();
    } else {
        std::ifstream in(gram_file);
        if (!in) throw CLI::ValidationError("cannot open " + gram_file);
        json rows = json::parse(in);
        for (const auto& row : rows) {
            std::vector<long> r;
            for (const auto& x : row) r.push_back(x.get<long>());
            L.gram.push_back(std::move(r));
        }
    }
    L.validate();
    QSeries theta = theta_series(L, order);
    QSeries z = lattice_voa_partition(L, order);
    if (format == "json") {
        std::cout << json{{"rank", L.rank()},
                          {"theta", qseries_json(theta)},
                          {"partition_function", qseries_json(z)}}
                         .dump(2)
                  << "\n";
        return 0;
    }
    if (format == "text") std::cout << "theta_L: ";
    print_qseries(theta, format);
    if (format == "text") {
        std::cout << "Z_{V_L}: ";
        print_qseries(z, format);
    }
    return 0;
}

int cmd_verify(int jobs, const std::string& format) {
    auto outcomes = voam::verify::run_all(jobs);
    bool all = true;
    json rows = json::array();
    for (const auto& o : outcomes) {
        all &= o.pass;
        if (format == "json") {
            rows.push_back(
                json{{"id", o.id}, {"name", o.name}, {"pass", o.pass}, {"detail", o.detail}});
        } else {
            std::cout << (o.pass ? "PASS" : "FAIL") << " " << o.id << ": " << o.name;
            if (!o.pass && !o.detail.empty()) std::cout << " [" << o.detail << "]";
            std::cout << "\n";
        }
    }
    if (format == "json") std::cout << json{{"items", rows}, {"all_pass", all}}.dump(2) << "\n";
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact computations with VOA characters and quasimodular forms"};
    app.require_subcommand(1);

    std::string format = "text";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"text", "json", "csv"}))
        ->capture_default_str();
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "Worker threads for independent verification items");

    int order = 20;
    int eps_order = 6;

    auto* eis = app.add_subcommand("eisenstein", "Eisenstein series E_k");
    int weight = 4;
    eis->add_option("--weight,-k", weight, "Weight k")->required();
    eis->add_option("--order,-N", order, "q-truncation order");

    auto* qv = app.add_subcommand("qv", "Heisenberg one-point function Q_v");
    std::string partition;
    qv->add_option("--partition", partition, "Partition, e.g. \"1,1,2\" or \"1^3 2^2 5\"")
        ->required();
    qv->add_option("--order,-N", order, "q-truncation order for Z(v)");

    auto* kd = app.add_subcommand("kacdet", "Kac determinant det M_n(c)");
    int level = 2;
    kd->add_option("--n", level, "Level n")->required();

    auto* g2 = app.add_subcommand("genus2", "Genus-two sewing expansions");
    int rank = 1;
    std::string what = "z2";
    g2->add_option("--order,-N", eps_order, "epsilon-truncation order");
    g2->add_option("--rank", rank, "Heisenberg rank");
    g2->add_option("--what", what, "det|omega|z2|oracle")
        ->check(CLI::IsMember({"det", "omega", "z2", "oracle"}));

    auto* ml = app.add_subcommand("mlde", "Second-order MLDE characters and dimension tables");
    std::string c_str, table;
    bool deligne = false;
    ml->add_option("--c", c_str, "Central charge as rational \"p/q\"");
    ml->add_option("--table", table, "k2|k3")->check(CLI::IsMember({"k2", "k3"}));
    ml->add_flag("--deligne", deligne, "Scan for rational central charges with integral d(c)");
    ml->add_option("--order,-N", order, "q-truncation order");

    auto* th = app.add_subcommand("theta", "Even-lattice theta series");
    std::string gram_file;
    th->add_option("--gram", gram_file, "JSON file of integer Gram rows, or \"e8\"")->required();
    th->add_option("--order,-N", order, "q-truncation order");

    auto* vf = app.add_subcommand("verify", "Run the full acceptance suite");

    for (CLI::App* sub : {eis, qv, kd, g2, ml, th, vf}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (eis->parsed()) return cmd_eisenstein(weight, order, format);
        if (qv->parsed()) return cmd_qv(partition, order, format);
        if (kd->parsed()) return cmd_kacdet(level, format);
        if (g2->parsed()) return cmd_genus2(eps_order, rank, what, format);
        if (ml->parsed()) {
            if (table.empty() && !deligne && c_str.empty())
                throw CLI::ValidationError("mlde requires --c, --table, or --deligne");
            return cmd_mlde(c_str, table, deligne, order, format);
        }
        if (th->parsed()) return cmd_theta(gram_file, order, format);
        if (vf->parsed()) return cmd_verify(jobs, format);
    } catch (const CLI::ValidationError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
