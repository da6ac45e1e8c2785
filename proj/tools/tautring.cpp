// tautring: exact symbolic calculator for the tautological rings of
// high-dimensional manifold bundles: kappa/psi/intersection classes with
// marked points, Gysin pushforwards, and kappa-class relation generation.

#include "taut/checks.hpp"
#include "taut/json_util.hpp"
#include "taut/parser.hpp"
#include "taut/pushforward.hpp"
#include "taut/relgen.hpp"
#include "taut/store.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

namespace {

using namespace taut;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Command {
    long g = 2;
    int d = 1;
    std::vector<int> points;
    std::string star_alias;
    std::string expr;
    std::string expr_b;
    std::string format = "text";  // text | json | latex
    std::string store_path;
    int n_max = 3;
    long A_bound = 2;
    int mult_degree = -1;  // default 2d
    int degree_min = 2;
    int degree_max = 8;

    RingParams params() const { return RingParams(d, g); }
    PointSet point_set(bool with_star) const {
        PointSet ps = PointSet::of(points);
        return with_star ? ps.with_star() : ps;
    }
};

void add_ring_flags(CLI::App* cmd, Command& c) {
    cmd->add_option("-g,--genus", c.g, "genus g >= 2")->capture_default_str();
    cmd->add_option("-d,--half-dim", c.d, "half fiber dimension d (odd)")
        ->capture_default_str();
}

void add_point_flags(CLI::App* cmd, Command& c) {
    cmd->add_option("--points", c.points, "marked point labels, e.g. --points 1,2")
        ->delimiter(',');
    cmd->add_option("--star", c.star_alias,
                    "alias for the reserved star point (always also 'star')");
}

std::string store_path_or_default(const Command& c) {
    if (!c.store_path.empty())
        return c.store_path;
    if (const char* env = std::getenv("TAUTRING_STORE"))
        return env;
    return "relations.jsonl";
}

void print_class(const TautClass& a, const std::string& format) {
    if (format == "json")
        std::cout << class_to_json(a).dump() << "\n";
    else
        std::cout << a.str() << "\n";
}

void print_kappa(const KappaPolynomial& p, const std::string& format) {
    if (format == "json")
        std::cout << kappa_poly_to_json(p).dump() << "\n";
    else if (format == "latex")
        std::cout << p.latex() << "\n";
    else
        std::cout << p.str() << "\n";
}

int run(int argc, char** argv) {
    CLI::App app{"exact calculator for tautological rings of manifold bundles"};
    app.require_subcommand(1);
    Command c;

    auto* eval = app.add_subcommand("eval", "parse an expression and print its canonical form");
    add_ring_flags(eval, c);
    add_point_flags(eval, c);
    eval->add_option("expr", c.expr, "expression")->required();
    eval->add_option("--format", c.format, "text | json")->capture_default_str();

    auto* push = app.add_subcommand("push", "pushforward forgetting the star point");
    add_ring_flags(push, c);
    add_point_flags(push, c);
    push->add_option("expr", c.expr, "expression on points + star")->required();
    bool to_base = false;
    push->add_flag("--to-base", to_base, "push all the way down to the base");
    push->add_option("--format", c.format, "text | json | latex")->capture_default_str();

    auto* centercmd = app.add_subcommand("center", "subtract the Euler correction so the "
                                                   "pushforward vanishes");
    add_ring_flags(centercmd, c);
    add_point_flags(centercmd, c);
    centercmd->add_option("expr", c.expr, "expression on points + star")->required();
    centercmd->add_option("--format", c.format, "text | json")->capture_default_str();

    auto* relate = app.add_subcommand("relate", "pushforward relation from classes with "
                                                "vanishing pushforward");
    add_ring_flags(relate, c);
    add_point_flags(relate, c);
    std::string schema = "square";
    relate->add_option("--schema", schema, "square | product")->capture_default_str();
    relate->add_option("-a,--a", c.expr, "class a on points + star")->required();
    relate->add_option("-b,--b", c.expr_b, "class b (product schema)");
    bool expand = false, save = false;
    relate->add_flag("--expand", expand, "also print the expanded kappa relation");
    relate->add_flag("--save", save, "append the expanded relation to the store");
    relate->add_option("--store", c.store_path, "store path (default $TAUTRING_STORE)");
    relate->add_option("--format", c.format, "text | json | latex")->capture_default_str();

    auto* irw = app.add_subcommand("irw", "generate kappa relations from powers of the "
                                          "omega classes");
    add_ring_flags(irw, c);
    irw->add_option("--n-max", c.n_max, "max number of marked points")->capture_default_str();
    irw->add_option("--a-bound", c.A_bound, "bound on the coefficient vectors A")
        ->capture_default_str();
    irw->add_option("--mult-degree", c.mult_degree,
                    "max multiplier degree (default 2d)");
    irw->add_option("--store", c.store_path, "store path (default $TAUTRING_STORE)");
    bool pontryagin_mults = false;
    irw->add_flag("--pontryagin-multipliers", pontryagin_mults,
                  "allow Pontryagin classes in multipliers (exploratory)");
    irw->add_option("--format", c.format, "text | json | latex")->capture_default_str();

    auto* verify = app.add_subcommand("verify", "run a named built-in verification");
    std::string check_name;
    verify->add_option("name", check_name, "one of: " + [] {
        std::string s;
        for (const auto& n : check_names())
            s += (s.empty() ? "" : ", ") + n;
        return s;
    }())->required();

    auto* decompose = app.add_subcommand("decompose", "certify kappa_{pq} decomposable "
                                                      "modulo a nilpotent");
    add_ring_flags(decompose, c);
    std::string p_text, q_text;
    unsigned exponent = 0;
    decompose->add_option("--p", p_text, "char-class monomial, e.g. e^2")->required();
    decompose->add_option("--q", q_text, "char-class monomial")->required();
    decompose->add_option("--exponent", exponent, "2g+1 (default), or g+1 when p == q");
    decompose->add_option("--format", c.format, "text | json | latex")->capture_default_str();

    auto* table = app.add_subcommand("table", "per-degree dimensions: kappa basis, relation "
                                              "rank, quotient");
    add_ring_flags(table, c);
    table->add_option("--degree-min", c.degree_min, "first degree")->capture_default_str();
    table->add_option("--degree-max", c.degree_max, "last degree")->capture_default_str();
    table->add_option("--n-max", c.n_max, "max marked points for generation")
        ->capture_default_str();
    table->add_option("--a-bound", c.A_bound, "bound on A vectors")->capture_default_str();
    table->add_option("--mult-degree", c.mult_degree, "max multiplier degree (default 2d)");
    bool classical = false;
    table->add_flag("--classical", classical,
                    "restrict to the classical subring Q[kappa_1, kappa_2, ...]");
    table->add_option("--format", c.format, "csv | latex")->default_val("csv");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;  // --help exits 0
    }

    if (eval->parsed()) {
        const auto params = c.params();
        const TautClass a =
            parse_expression(c.expr, params, c.point_set(true), c.star_alias);
        print_class(a, c.format);
        return 0;
    }

    if (push->parsed()) {
        const auto params = c.params();
        const TautClass a =
            parse_expression(c.expr, params, c.point_set(true), c.star_alias);
        if (to_base)
            print_kappa(push_to_base(a), c.format);
        else
            print_class(push_forget(a), c.format);
        return 0;
    }

    if (centercmd->parsed()) {
        const auto params = c.params();
        const TautClass a =
            parse_expression(c.expr, params, c.point_set(true), c.star_alias);
        print_class(center(a), c.format);
        return 0;
    }

    if (relate->parsed()) {
        const auto params = c.params();
        const PointSet base = c.point_set(false);
        const PointSet total = base.with_star();
        const TautClass a = parse_expression(c.expr, params, total, c.star_alias);
        PushedRelation rel =
            schema == "product"
                ? relation_product(a, parse_expression(c.expr_b, params, total, c.star_alias))
                : relation_square(a);
        std::cout << "pushed: " << rel.pushed.str() << "\n";
        std::cout << "exponent: " << rel.exponent << "\n";
        if (expand || save) {
            RelationRecord rec = schema == "product"
                                     ? make_product_record(params, base, c.expr, c.expr_b)
                                     : make_square_record(params, base, c.expr);
            if (expand) {
                std::cout << "relation: ";
                print_kappa(rec.poly, c.format);
            }
            if (save) {
                RelationStore st(store_path_or_default(c));
                std::cout << (st.append(rec) ? "stored: " : "duplicate: ") << st.path()
                          << "\n";
            }
        }
        return 0;
    }

    if (irw->parsed()) {
        const auto params = c.params();
        const int mult_deg = c.mult_degree < 0 ? 2 * params.d : c.mult_degree;
        const auto records =
            generate_irw(params, c.n_max, c.A_bound, mult_deg, pontryagin_mults);
        RelationStore st(store_path_or_default(c));
        const size_t added = st.append_all(records);
        std::cout << records.size() << " relations generated, " << added << " new in "
                  << st.path() << "\n";
        for (const auto& r : records) {
            std::cout << "deg " << r.degree << ": ";
            print_kappa(r.poly, c.format);
        }
        return 0;
    }

    if (verify->parsed()) {
        const CheckResult res = run_check(check_name);
        std::cout << (res.pass ? "PASS " : "FAIL ") << res.name << ": " << res.detail << "\n";
        return res.pass ? 0 : kExitFail;
    }

    if (decompose->parsed()) {
        const auto params = c.params();
        const auto cert = decomposability_check(params, parse_charclass(p_text, params),
                                                parse_charclass(q_text, params), exponent);
        std::cout << "nilpotent N: ";
        print_kappa(cert.nilpotent, c.format);
        std::cout << "exponent: " << cert.exponent << "\n";
        std::cout << "decomposable part (in the ideal of kappa_p, kappa_q): ";
        print_kappa(cert.decomposable_part, c.format);
        std::cout << "membership of N^" << cert.exponent
                  << " in the relation span: " << (cert.membership.ok() ? "ok" : "FAILED")
                  << "\n";
        return cert.membership.ok() ? 0 : kExitFail;
    }

    if (table->parsed()) {
        const auto params = c.params();
        const int mult_deg = c.mult_degree < 0 ? 2 * params.d : c.mult_degree;
        const auto records = generate_irw(params, c.n_max, c.A_bound, mult_deg);
        std::vector<KappaPolynomial> gens;
        for (const auto& r : records)
            gens.push_back(r.poly);
        const bool latex = c.format == "latex";
        if (latex)
            std::cout << "degree & dim & rank & quotient \\\\\n";
        else
            std::cout << "degree,kappa_dim,relation_rank,quotient_dim\n";
        for (int deg = c.degree_min; deg <= c.degree_max; deg += 2) {
            const size_t dim = kp_basis(params, deg, classical).size();
            const size_t rank = span_in_degree(gens, params, deg, classical).rank;
            if (latex)
                std::cout << deg << " & " << dim << " & " << rank << " & " << dim - rank
                          << " \\\\\n";
            else
                std::cout << deg << "," << dim << "," << rank << "," << dim - rank << "\n";
        }
        return 0;
    }

    return kExitUsage;
}

}  // namespace

int main(int argc, char** argv) {
    try {
        return run(argc, argv);
    } catch (const taut::ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitFail;
    }
}
