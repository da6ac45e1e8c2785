#include "taut/checks.hpp"

#include "taut/parser.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <stdexcept>

namespace taut {
namespace checks {

std::vector<RelationRecord> genus4_records(int d) {
    const RingParams params(d, 4);
    return generate_irw(params, /*n_max=*/3, /*A_bound=*/2,
                        /*multiplier_degree_max=*/2 * d);
}

std::string classical_form(const KappaPolynomial& p) {
    std::ostringstream os;
    for (const auto& [m, c] : p.terms()) {
        auto idx = m.classical_indices();
        if (!idx)
            return "<non-classical>";
        std::sort(idx->begin(), idx->end());
        os << "[";
        for (int i : *idx)
            os << i << ",";
        os << "]:" << rat_str(c) << ";";
    }
    return os.str();
}

namespace {

KappaPolynomial classical_poly(const RingParams& params,
                               const std::vector<std::pair<std::vector<int>, long>>& terms) {
    KappaPolynomial p(params);
    for (const auto& [indices, coeff] : terms) {
        KappaMonomial m;
        for (int i : indices)
            m = m * KappaMonomial::classical(params.d, i);
        p.add_term(m, rat(coeff));
    }
    return p;
}

std::string pass_fail(bool ok) {
    return ok ? "ok" : "MISMATCH";
}

}  // namespace

CheckResult check_g4_relations() {
    const RingParams params(1, 4);
    const auto records = genus4_records(1);
    std::vector<KappaPolynomial> gens;
    for (const auto& r : records)
        gens.push_back(r.poly);

    // Degree 4: the span is spanned by 3 k1^2 + 32 k2.
    const auto span4 = span_in_degree(gens, params, 4);
    const KappaPolynomial target4 = classical_poly(params, {{{1, 1}, 3}, {{2}, 32}});
    const auto cert4 = is_member(target4, gens, params, 4);
    const bool deg4_ok = span4.rank == 1 && cert4.ok() && cert4.verify(gens);

    // Degree 6: k3 and k1 k2 vanish.
    const KappaPolynomial k3 = classical_poly(params, {{{3}, 1}});
    const KappaPolynomial k1k2 = classical_poly(params, {{{1, 2}, 1}});
    const auto cert_k3 = is_member(k3, gens, params, 6);
    const auto cert_k1k2 = is_member(k1k2, gens, params, 6);
    const bool deg6_ok =
        cert_k3.ok() && cert_k3.verify(gens) && cert_k1k2.ok() && cert_k1k2.verify(gens);

    std::ostringstream os;
    os << "genus 4, d=1: " << records.size() << " generator records; "
       << "degree-4 span rank " << span4.rank << " (expected 1), "
       << "3*k1^2 + 32*k2 member: " << pass_fail(deg4_ok) << "; "
       << "degree-6: k3 member " << pass_fail(cert_k3.ok()) << ", k1*k2 member "
       << pass_fail(cert_k1k2.ok());
    return CheckResult{"g4-relations", deg4_ok && deg6_ok, os.str()};
}

CheckResult check_lowest_relation(int d) {
    const RingParams params(d, 2);
    const int s = small_basis_min_index(d);
    const PointSet none;
    const PointSet total = none.with_star();
    const CharClassMonomial ps = CharClassMonomial::pontryagin(d, s);

    const auto rel = relation_square(TautClass::psi(params, total, ps, PointSet::kStar));
    const TautClass expected = TautClass::kappa(params, none, ps.pow(2));
    const bool ok = rel.pushed == expected &&
                    rel.exponent == static_cast<unsigned>(params.g + 1);

    const int degree = ps.pow(2).degree() - 2 * d;
    std::ostringstream os;
    os << "d=" << d << ", s=" << s << ": push(psi(p" << s << ")^2) = "
       << push_to_base(rel.pushed).str() << " of degree " << degree << ", exponent "
       << rel.exponent << ": " << pass_fail(ok);
    return CheckResult{"lowest-relation-d" + std::to_string(d), ok, os.str()};
}

CheckResult check_fin_gen_inner() {
    const RingParams params(3, 2);
    const int d = params.d;
    const PointSet one = PointSet::of({1});
    const PointSet total = one.with_star();
    const Rational chi = params.chi;
    const CharClassMonomial e = CharClassMonomial::euler(d);

    bool all_ok = true;
    std::ostringstream os;
    os << "d=3: inner 4-term expression for";
    for (const char* ptext : {"e^2", "p1*e", "p2"}) {
        const CharClassMonomial p = parse_charclass(ptext, params);
        const TautClass a =
            center(TautClass::intersection(params, total, {1, PointSet::kStar}));
        const TautClass b = center(TautClass::psi(params, total, p, PointSet::kStar));
        const auto rel = relation_product(a, b);

        const TautClass expected =
            TautClass::psi(params, one, p, 1) -
            TautClass::kappa(params, one, e * p).scaled(1 / chi) -
            (TautClass::psi(params, one, e, 1) * TautClass::kappa(params, one, p))
                .scaled(1 / chi) +
            (TautClass::kappa(params, one, e.pow(2)) * TautClass::kappa(params, one, p))
                .scaled(1 / (chi * chi));

        const bool ok = rel.pushed == expected &&
                        rel.exponent == static_cast<unsigned>(2 * params.g + 1);
        all_ok = all_ok && ok;
        os << " p=" << std::string(ptext) << ": " << pass_fail(ok) << ";";
    }
    return CheckResult{"fin-gen-inner", all_ok, os.str()};
}

CheckResult check_binomial_g2k0() {
    const RingParams params(1, 2);
    const auto record = binomial_decompose(params, 0);  // route agreement is internal
    // kappa_2 = -(9/32) kappa_1^2, i.e. 9 k1^2 + 32 k2 after normalization.
    const KappaPolynomial expected =
        classical_poly(params, {{{1, 1}, 9}, {{2}, 32}});
    const bool ok = record.poly == expected.content_normalized();
    std::ostringstream os;
    os << "g=2, k=0: relation " << record.poly.str() << " (expected "
       << expected.content_normalized().str() << "): " << pass_fail(ok);
    return CheckResult{"binomial-g2k0", ok, os.str()};
}

CheckResult check_pullback_d5() {
    const RingParams p5(5, 2);
    const auto records = pullback_pontryagin_relations(p5, 14);

    // chi kappa_{e^2 p1} - kappa_{e p1} kappa_{e^2}
    const int d = 5;
    const CharClassMonomial e = CharClassMonomial::euler(d);
    const CharClassMonomial p1 = CharClassMonomial::pontryagin(d, 1);
    KappaPolynomial target =
        KappaPolynomial::monomial(p5, KappaMonomial({e.pow(2) * p1}, d)).scaled(p5.chi) -
        KappaPolynomial::monomial(p5, KappaMonomial({e * p1}, d)) *
            KappaPolynomial::monomial(p5, KappaMonomial({e.pow(2)}, d));
    const std::string want = kappa_poly_to_json(target.content_normalized()).dump();
    bool found = false;
    for (const auto& r : records)
        if (kappa_poly_to_json(r.poly).dump() == want)
            found = true;

    const RingParams p3(3, 2);
    const bool d3_empty = pullback_pontryagin_relations(p3, 14).empty();

    std::ostringstream os;
    os << "d=5: " << records.size() << " records, contains chi*k[e^2*p1] - k[e*p1]*k1: "
       << pass_fail(found) << "; d=3 list empty: " << pass_fail(d3_empty);
    return CheckResult{"pullback-d5", found && d3_empty, os.str()};
}

CheckResult check_d_independence() {
    std::set<std::string> forms[3];
    const int ds[3] = {1, 3, 5};
    for (int i = 0; i < 3; ++i) {
        for (const auto& r : genus4_records(ds[i])) {
            // Pair the d-independent classical form with the degree in
            // units of 2d, which must also match.
            forms[i].insert(std::to_string(r.degree / (2 * ds[i])) + "|" +
                            classical_form(r.poly));
        }
    }
    const bool ok = forms[0] == forms[1] && forms[1] == forms[2];
    std::ostringstream os;
    os << "genus 4 relation sets for d=1,3,5: " << forms[0].size() << "/" << forms[1].size()
       << "/" << forms[2].size() << " classical forms, identical: " << pass_fail(ok);
    return CheckResult{"d-independence", ok, os.str()};
}

}  // namespace checks

std::vector<std::string> check_names() {
    return {"g4-relations",  "lowest-relation-d3", "lowest-relation-d5", "fin-gen-inner",
            "binomial-g2k0", "pullback-d5",        "d-independence"};
}

CheckResult run_check(const std::string& name) {
    using namespace checks;
    if (name == "g4-relations")
        return check_g4_relations();
    if (name == "lowest-relation-d3")
        return check_lowest_relation(3);
    if (name == "lowest-relation-d5")
        return check_lowest_relation(5);
    if (name == "fin-gen-inner")
        return check_fin_gen_inner();
    if (name == "binomial-g2k0")
        return check_binomial_g2k0();
    if (name == "pullback-d5")
        return check_pullback_d5();
    if (name == "d-independence")
        return check_d_independence();
    throw std::invalid_argument("unknown check '" + name + "'; known checks: g4-relations, "
                                "lowest-relation-d3, lowest-relation-d5, fin-gen-inner, "
                                "binomial-g2k0, pullback-d5, d-independence");
}

}  // namespace taut
