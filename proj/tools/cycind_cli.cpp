// cycind: command-line front end. Exit codes: 0 ok, 1 domain error or failed
// certification, 2 budget exceeded.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "cycind/classdata.hpp"
#include "cycind/cycle_index.hpp"
#include "cycind/oracle.hpp"
#include "cycind/serialize.hpp"

using namespace cycind;

namespace
{

struct RunConfig {
    std::string format = "table";
    std::string output;
    double eps = 1e-12;
    std::uint64_t group_budget = 0, orbit_budget = 0, poly_budget = 0;
    int series_budget = 0;

    Budgets budgets() const
    {
        Budgets b = default_budgets();
        if (group_budget)
            b.group_order = group_budget;
        if (orbit_budget)
            b.orbit_order = orbit_budget;
        if (poly_budget)
            b.poly_enumeration = poly_budget;
        if (series_budget)
            b.series_degree = series_budget;
        return b;
    }
};

// What a subcommand produced, in all three shapes.
struct Output {
    std::string table;
    Json json;
    std::vector<std::string> csv; // rows without header
    bool csv_ok = false;
    int status = 0;
};

std::string trim_decimal(std::string s)
{
    if (s.find('.') == std::string::npos)
        return s;
    while (s.back() == '0')
        s.pop_back();
    if (s.back() == '.')
        s.pop_back();
    return s;
}

std::string show(const Rational& r, int digits = 12)
{
    std::string dec = trim_decimal(to_decimal(r, digits));
    return r.get_den() == 1 ? to_string(r) : to_string(r) + " = " + dec;
}

Rational eps_rational(double eps)
{
    if (!(eps > 0))
        throw DomainError("--eps must be positive");
    Rational r(eps);
    return r;
}

std::uint64_t checked_q(long long q)
{
    if (q < 2)
        throw DomainError("--q must be a prime power >= 2");
    field_spec(static_cast<std::uint64_t>(q));
    return static_cast<std::uint64_t>(q);
}

bool is_single_orthogonal(const std::string& f)
{
    return f == "O+" || f == "O-" || f == "Oplus" || f == "Ominus";
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"cycind: cycle indices of the finite classical groups"};
    app.require_subcommand(1);
    RunConfig cfg;
    app.add_option("--format", cfg.format, "table, json or csv")->check(CLI::IsMember({"table", "json", "csv"}));
    app.add_option("-o,--output", cfg.output, "write to this file instead of stdout");
    app.add_option("--group-budget", cfg.group_budget, "largest |G| to enumerate");
    app.add_option("--orbit-budget", cfg.orbit_budget, "largest |G| for conjugation orbits");
    app.add_option("--poly-budget", cfg.poly_budget, "largest polynomial scan");
    app.add_option("--series-budget", cfg.series_budget, "largest series truncation");

    Output out;
    std::function<void()> run;

    // irred
    auto* irred = app.add_subcommand("irred", "monic irreducible polynomials over F_q");
    std::string irred_mode;
    long long iq = 0;
    int im = 0;
    bool self_tilde = false, self_bar = false;
    irred->add_option("mode", irred_mode, "count or list")->required()->check(CLI::IsMember({"count", "list"}));
    irred->add_option("--q", iq, "field size (subfield size with --self-tilde)")->required();
    irred->add_option("--m", im, "degree")->required();
    auto* st = irred->add_flag("--self-tilde", self_tilde, "tilde-fixed, over F_{q^2}");
    irred->add_flag("--self-bar", self_bar, "bar-fixed, over F_q")->excludes(st);
    irred->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(iq);
            if (im < 1)
                throw DomainError("--m must be at least 1");
            Budgets b = cfg.budgets();
            Field F(self_tilde ? q * q : q);
            std::string kind = self_tilde ? "self-tilde" : self_bar ? "self-bar" : "all";
            if (irred_mode == "count") {
                Integer c = self_tilde ? self_tilde_count(q, im) : self_bar ? self_bar_count(q, im)
                                                                            : irreducible_count(q, im, false);
                out.table = c.get_str() + "\n";
                out.json = {{"q", q}, {"m", im}, {"kind", kind}, {"count", c.get_str()}};
                out.csv = {csv_row("irred-" + kind, im, q, "count", Rational(c), 0)};
                out.csv_ok = true;
            } else {
                auto list = self_tilde ? enumerate_self_tilde(F, static_cast<std::uint32_t>(q), im, b)
                            : self_bar ? enumerate_self_bar(F, im, b)
                                       : enumerate_monic_irreducibles(F, im, b);
                Json arr = Json::array();
                for (auto& p : list) {
                    out.table += to_string(F, p) + "\n";
                    arr.push_back(to_string(F, p));
                }
                out.json = {{"q", q}, {"m", im}, {"kind", kind}, {"polys", arr}};
            }
        };
    });

    // classes
    auto* classes = app.add_subcommand("classes", "conjugacy class data with sizes");
    std::string cfam;
    int cn = 0;
    long long cq = 0;
    bool sizes_only = false;
    classes->add_option("--family", cfam, "GL, Mat, U, Sp, O+, O-")->required();
    classes->add_option("--n", cn, "matrix dimension")->required();
    classes->add_option("--q", cq, "field size")->required();
    classes->add_flag("--sizes-only", sizes_only, "print class sizes only");
    classes->callback([&] {
        run = [&] {
            GroupId g{parse_family(cfam), cn, static_cast<std::uint32_t>(checked_q(cq))};
            auto list = enumerate_classes(g, cfg.budgets());
            Json arr = Json::array();
            std::ostringstream t;
            Integer total = 0;
            for (auto& c : list) {
                total += c.size;
                Json d = datum_to_json(g, c.datum);
                if (sizes_only)
                    t << c.size.get_str() << "\n";
                else
                    t << c.size.get_str() << "\t" << c.centralizer.get_str() << "\t" << d["data"].dump() << "\n";
                arr.push_back({{"datum", d}, {"centralizer", c.centralizer.get_str()}, {"size", c.size.get_str()}});
            }
            if (!sizes_only)
                t << "# " << list.size() << " classes, total " << total.get_str() << "\n";
            out.table = sizes_only ? t.str() : "# size\tcentralizer\tdata\n" + t.str();
            out.json = {{"group", g.name()}, {"classes", arr}, {"total", total.get_str()}};
        };
    });

    // prob
    auto* prob = app.add_subcommand("prob", "probability of a class property");
    std::string pfam, pprop;
    int pn = 0;
    long long pq = 0;
    prob->add_option("--family", pfam, "GL, Mat, U, Sp, O (average of both signs), O+, O-")->required();
    prob->add_option("--n", pn, "matrix dimension")->required();
    prob->add_option("--q", pq, "field size")->required();
    prob->add_option("--property", pprop, "semisimple, regular, regular-semisimple")->required();
    prob->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(pq);
            Property p = parse_property(pprop);
            Rational v;
            if (is_single_orthogonal(pfam))
                v = probability_by_classes(GroupId{parse_family(pfam), pn, static_cast<std::uint32_t>(q)}, p,
                                           cfg.budgets());
            else
                v = finite_n_probability(parse_series_family(pfam), pn, q, p, cfg.budgets());
            out.table = show(v) + "\n";
            out.json = {{"family", pfam}, {"n", pn}, {"q", q}, {"property", property_name(p)},
                        {"exact", to_string(v)}, {"decimal", to_decimal(v, 12)}};
            out.csv = {csv_row(pfam, pn, q, property_name(p), v)};
            out.csv_ok = true;
        };
    });

    // limit
    auto* limit = app.add_subcommand("limit", "n -> infinity limit of a class property");
    std::string lkind;
    long long lq = 0;
    limit->add_option("--kind", lkind, "ss-Mat, ss-GL, rss-Mat, reg-Mat, rss-GL, reg-GL")->required();
    limit->add_option("--q", lq, "field size")->required();
    limit->add_option("--eps", cfg.eps, "width of the certified interval");
    limit->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(lq);
            LimitKind k = parse_limit_kind(lkind);
            LimitValue v = limit_probability(k, q, eps_rational(cfg.eps));
            Rational mid = v.midpoint();
            if (v.exact()) {
                out.table = trim_decimal(to_decimal(mid, 15)) + "\nexact " + to_string(mid) + "\n";
            } else {
                int digits = 1;
                for (Rational e = v.error_bound(); e < 1 && digits < 60; e *= 10)
                    ++digits;
                out.table = trim_decimal(to_decimal(mid, digits)) + "\nerror <= " + to_decimal(v.error_bound(), digits + 2) +
                            " (" + std::to_string(v.terms) + " factors)\n";
            }
            out.json = {{"kind", limit_kind_name(k)},   {"q", q},
                        {"exact", v.exact()},           {"value", to_decimal(mid, 30)},
                        {"lower", to_decimal(v.lower, 30)}, {"upper", to_decimal(v.upper, 30)},
                        {"factors", v.terms}};
            if (v.exact())
                out.json["rational"] = to_string(mid);
            out.csv = {series_family_name(limit_family(k)) + ",inf," + std::to_string(q) + "," + limit_kind_name(k) + "," +
                        (v.exact() ? to_string(mid) : std::string()) + "," + to_decimal(mid, 30)};
            out.csv_ok = true;
        };
    });

    // charpoly
    auto* charpoly = app.add_subcommand("charpoly", "elements with a given characteristic polynomial");
    std::string cpfam, cppoly;
    long long cpq = 0;
    charpoly->add_option("--family", cpfam, "GL, Mat, U, Sp, O (O gives the averaged proportion)")->required();
    charpoly->add_option("--q", cpq, "field size (U: coefficients in F_{q^2})")->required();
    charpoly->add_option("--poly", cppoly, "coefficients low to high, e.g. 1,0,1 for z^2+1")->required();
    charpoly->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(cpq);
            SeriesFamily f = parse_series_family(cpfam);
            Field F(f == SeriesFamily::U ? q * q : q);
            Poly phi = parse_poly(F, cppoly);
            Rational v = charpoly_count(f, q, phi, cfg.budgets());
            out.table = show(v) + "\n";
            out.json = {{"family", series_family_name(f)}, {"q", q}, {"poly", to_string(F, phi)},
                        {"exact", to_string(v)}, {"decimal", to_decimal(v, 12)}};
            out.csv = {csv_row(series_family_name(f), phi.degree(), q, "charpoly " + to_string(F, phi), v)};
            out.csv_ok = true;
        };
    });

    // jordan-mean
    auto* jordan = app.add_subcommand("jordan-mean", "mean number of irreducible factors with multiplicity");
    std::string jfam;
    long long jq = 0;
    int jn = 0;
    jordan->add_option("--family", jfam, "GL, U, Sp (rows by half-dimension), O (average of both signs)")->required();
    jordan->add_option("--q", jq, "field size")->required();
    jordan->add_option("--n-max", jn, "largest row")->required();
    jordan->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(jq);
            SeriesFamily f = parse_series_family(jfam);
            auto rows = jordan_block_means(f, q, jn, cfg.budgets());
            std::ostringstream t;
            std::string c = to_string(jordan_constant(f));
            t << "# n\tE[X]\tE[X] - " << c << " H_n\texact\n";
            Json arr = Json::array();
            for (auto& r : rows) {
                t << r.n << "\t" << to_decimal(r.mean, 8) << "\t" << to_decimal(r.residual, 8) << "\t" << to_string(r.mean)
                  << "\n";
                arr.push_back({{"n", r.n}, {"mean", to_string(r.mean)}, {"residual", to_decimal(r.residual, 12)}});
                out.csv.push_back(csv_row(series_family_name(f), r.n, q, "jordan-mean", r.mean));
            }
            out.table = t.str();
            out.json = {{"family", series_family_name(f)}, {"q", q}, {"c", c}, {"rows", arr}};
            out.csv_ok = true;
        };
    });

    // gordon
    auto* gordon = app.add_subcommand("gordon", "check Gordon's identity to a given x-degree");
    int gk = 0, gi = 0, gm = 30;
    gordon->add_option("--k", gk, "k >= 2")->required();
    gordon->add_option("--i", gi, "1 <= i <= k")->required();
    gordon->add_option("--max-degree", gm, "truncation in x");
    gordon->callback([&] {
        run = [&] {
            auto r = gordon_check(gk, gi, gm);
            std::ostringstream t;
            t << "series: " << (r.equal() ? "equal" : "DIFFER") << " to x^" << gm << "\n";
            t << "coefficients:";
            for (int d = 0; d <= gm; ++d)
                t << " " << to_string(r.lhs[d]);
            t << "\n";
            Json cor = Json::array();
            if (gi == gk)
                for (std::uint64_t q : {2u, 3u}) {
                    auto c = gordon_centralizer_check(gk, q);
                    t << "c_GL form, q=" << q << ": " << (c.ok() ? "match" : "MISMATCH") << " (|diff| < q^-30)\n";
                    cor.push_back({{"q", q}, {"ok", c.ok()}, {"lhs", to_decimal(c.lhs, 40)}, {"rhs", to_decimal(c.rhs, 40)}});
                }
            out.table = t.str();
            out.json = {{"k", gk}, {"i", gi}, {"max_degree", gm}, {"equal", r.equal()},
                        {"lhs", series_to_json(r.lhs)}, {"rhs", series_to_json(r.rhs)}, {"c_gl_form", cor}};
            out.status = r.equal() ? 0 : 1;
        };
    });

    // weyl
    auto* weyl = app.add_subcommand("weyl", "factorization types of GL(n,q) against cycle types of S_n");
    int wn = 0;
    std::vector<long long> wqs;
    weyl->add_option("--n", wn, "dimension")->required();
    weyl->add_option("--q-list", wqs, "field sizes")->required()->delimiter(',');
    weyl->callback([&] {
        run = [&] {
            std::ostringstream t;
            t << "# q\tTV\texact\n";
            Json arr = Json::array();
            for (auto q0 : wqs) {
                std::uint64_t q = checked_q(q0);
                Rational d = weyl_limit_distance(wn, q);
                t << q << "\t" << to_decimal(d, 8) << "\t" << to_string(d) << "\n";
                arr.push_back({{"q", q}, {"tv", to_string(d)}, {"decimal", to_decimal(d, 12)}});
                out.csv.push_back(csv_row("GL", wn, q, "weyl-tv", d));
            }
            out.table = t.str();
            out.json = {{"n", wn}, {"distances", arr}};
            out.csv_ok = true;
        };
    });

    // avg-order-bound
    auto* avg = app.add_subcommand("avg-order-bound", "lower bound for the mean element order");
    std::string afam;
    int an = 0;
    long long aq = 0;
    avg->add_option("--family", afam, "U, Sp, O (average of both signs)")->required();
    avg->add_option("--n", an, "matrix dimension")->required();
    avg->add_option("--q", aq, "field size")->required();
    avg->callback([&] {
        run = [&] {
            std::uint64_t q = checked_q(aq);
            SeriesFamily f = parse_series_family(afam);
            Rational v = avg_order_lower_bound(f, an, q, cfg.budgets());
            out.table = show(v) + "\n";
            out.json = {{"family", series_family_name(f)}, {"n", an}, {"q", q}, {"exact", to_string(v)},
                        {"decimal", to_decimal(v, 12)}};
            out.csv = {csv_row(series_family_name(f), an, q, "avg-order-bound", v)};
            out.csv_ok = true;
        };
    });

    // certify
    auto* cert = app.add_subcommand("certify", "check the class formulas against brute force");
    std::string tfam;
    int tn = 0;
    long long tq = 0;
    cert->add_option("--family", tfam, "GL, Mat, U, Sp, O+, O-")->required();
    cert->add_option("--n", tn, "matrix dimension")->required();
    cert->add_option("--q", tq, "field size")->required();
    cert->callback([&] {
        run = [&] {
            GroupId g{parse_family(tfam), tn, static_cast<std::uint32_t>(checked_q(tq))};
            auto r = certify(g, cfg.budgets());
            std::ostringstream t;
            t << (r.pass() ? "PASS" : "FAIL") << " (" << r.classes << " classes, " << r.elements << " elements)\n";
            for (auto& c : r.failures())
                t << "  " << c.name << " " << c.datum << ": expected " << c.expected << ", observed " << c.observed
                  << "\n";
            out.table = t.str();
            out.json = report_to_json(r);
            out.status = r.pass() ? 0 : 1;
        };
    });

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        run();
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << "\n";
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }

    std::string text;
    if (cfg.format == "json") {
        text = out.json.dump(2) + "\n";
    } else if (cfg.format == "csv") {
        if (!out.csv_ok) {
            std::cerr << "error: this subcommand has no CSV form\n";
            return 1;
        }
        text = std::string(csv_header()) + "\n";
        for (auto& r : out.csv)
            text += r + "\n";
    } else {
        text = out.table;
    }
    if (cfg.output.empty()) {
        std::cout << text;
    } else {
        std::ofstream f(cfg.output);
        if (!f) {
            std::cerr << "error: cannot write " << cfg.output << "\n";
            return 1;
        }
        f << text;
    }
    return out.status;
}
