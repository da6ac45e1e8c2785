#include "taut/relgen.hpp"

#include "taut/parser.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace taut {

std::string schema_name(Schema s) {
    switch (s) {
        case Schema::Square: return "square";
        case Schema::Product: return "product";
        case Schema::OmegaPower: return "omega_power";
        case Schema::PullbackPontryagin: return "pullback_pontryagin";
        case Schema::BinomialDecompose: return "binomial_decompose";
    }
    throw std::logic_error("unreachable");
}

Schema schema_from_name(const std::string& name) {
    if (name == "square") return Schema::Square;
    if (name == "product") return Schema::Product;
    if (name == "omega_power") return Schema::OmegaPower;
    if (name == "pullback_pontryagin") return Schema::PullbackPontryagin;
    if (name == "binomial_decompose") return Schema::BinomialDecompose;
    throw std::invalid_argument("unknown relation schema: " + name);
}

Json RelationRecord::to_json() const {
    Json j;
    j["schema"] = schema_name(schema);
    j["g"] = g;
    j["d"] = d;
    j["degree"] = degree;
    j["provenance"] = provenance;
    j["poly"] = kappa_poly_to_json(poly);
    return j;
}

RelationRecord RelationRecord::from_json(const Json& j) {
    const RingParams params(j.at("d").get<int>(), j.at("g").get<long>());
    return RelationRecord{schema_from_name(j.at("schema").get<std::string>()),
                          params.g,
                          params.d,
                          j.at("degree").get<int>(),
                          j.at("provenance"),
                          kappa_poly_from_json(j.at("poly"), params)};
}

namespace {

void require_zero_push(const TautClass& a, int star, const char* which) {
    if (!push_forget(a, star).is_zero())
        throw std::invalid_argument(std::string("relation schema: pushforward of ") + which +
                                    " is nonzero");
}

void require_even(const TautClass& a, const char* which) {
    for (const auto& [m, c] : a.terms())
        if (m.degree(a.params().d) % 2 != 0)
            throw std::invalid_argument(std::string("relation schema: ") + which +
                                        " has an odd-degree component");
}

}  // namespace

PushedRelation relation_square(const TautClass& a, int star) {
    require_zero_push(a, star, "a");
    require_even(a, "a");
    return PushedRelation{push_forget(a * a, star),
                          static_cast<unsigned>(a.params().g + 1)};
}

PushedRelation relation_product(const TautClass& a, const TautClass& b, int star) {
    require_zero_push(a, star, "a");
    require_zero_push(b, star, "b");
    require_even(a, "a");
    return PushedRelation{push_forget(a * b, star),
                          static_cast<unsigned>(2 * a.params().g + 1)};
}

TautClass omega(const TautClass& c, int star) {
    const RingParams& params = c.params();
    const int d = params.d;
    if (!c.is_zero() && c.homogeneous_degree() != std::optional<int>(2 * d))
        throw std::invalid_argument("omega: class must be homogeneous of degree 2d");

    const TautClass pushed = push_forget(c, star);
    Rational q(0);
    for (const auto& [m, coeff] : pushed.terms()) {
        if (!m.is_unit())
            throw std::invalid_argument("omega: pushforward of c is not a scalar");
        q = coeff;
    }

    const PointSet target = c.points().without(star);
    const TautClass e_star =
        TautClass::psi(params, c.points(), CharClassMonomial::euler(d), star);
    TautClass result = push_forget(c * c, star).scaled(params.chi * params.chi);
    result = result - push_forget(e_star * c, star).scaled(2 * q * params.chi);
    result = result +
             TautClass::kappa(params, target, CharClassMonomial::euler(d, 2)).scaled(q * q);
    return result;
}

TautClass omega_A(const RingParams& params, const std::vector<long>& A) {
    const int n = static_cast<int>(A.size());
    if (n < 1)
        throw std::invalid_argument("omega_A: need at least one point");
    const PointSet base = PointSet::range(n);
    const PointSet total = base.with_star();
    TautClass c = TautClass::zero(params, total);
    for (int i = 0; i < n; ++i) {
        if (A[i] == 0)
            continue;
        c = c + TautClass::intersection(params, total, {i + 1, PointSet::kStar})
                    .scaled(rat(A[i]));
    }
    return omega(c);
}

namespace {

// Families of disjoint blocks (size >= 2) inside {points[from:]}.
void block_families(const std::vector<int>& points, size_t from,
                    std::vector<std::vector<int>>& acc,
                    std::vector<std::vector<std::vector<int>>>& out) {
    if (from == points.size()) {
        out.push_back(acc);
        return;
    }
    // First remaining point stays free.
    block_families(points, from + 1, acc, out);
    // Or it heads a block with a nonempty subset of the later points.
    std::vector<int> rest(points.begin() + from + 1, points.end());
    const size_t r = rest.size();
    for (size_t mask = 1; mask < (1u << r); ++mask) {
        std::vector<int> block{points[from]};
        std::vector<int> remaining;
        for (size_t i = 0; i < r; ++i) {
            if (mask & (1u << i))
                block.push_back(rest[i]);
            else
                remaining.push_back(rest[i]);
        }
        acc.push_back(block);
        block_families(remaining, 0, acc, out);
        acc.pop_back();
    }
}

void psi_choices(const std::vector<int>& visible, size_t pos, int budget,
                 const std::vector<std::vector<CharClassMonomial>>& options,
                 std::vector<std::pair<int, CharClassMonomial>>& acc,
                 const RingParams& params, const PointSet& pts,
                 std::vector<TautMonomial>& out,
                 const std::vector<std::vector<int>>& blocks) {
    if (pos == visible.size()) {
        RawMonomial raw;
        raw.pis = blocks;
        raw.psis = acc;
        auto t = mono_normalize(raw, pts, params);
        out.push_back(t->mono);
        return;
    }
    for (const auto& c : options[pos]) {
        const int cost = c.degree();
        if (cost > budget)
            continue;
        if (!c.is_unit())
            acc.emplace_back(visible[pos], c);
        psi_choices(visible, pos + 1, budget - cost, options, acc, params, pts, out, blocks);
        if (!c.is_unit())
            acc.pop_back();
    }
}

}  // namespace

std::vector<TautMonomial> enumerate_multipliers(const RingParams& params, int n,
                                                int max_degree, bool pontryagin) {
    const int d = params.d;
    const PointSet pts = PointSet::range(n);
    std::vector<std::vector<std::vector<int>>> families;
    std::vector<std::vector<int>> acc;
    block_families(pts.labels, 0, acc, families);

    std::vector<TautMonomial> out;
    for (const auto& blocks : families) {
        int block_degree = 0;
        std::set<int> blocked;
        std::vector<int> visible;
        for (const auto& b : blocks) {
            block_degree += 2 * d * (static_cast<int>(b.size()) - 1);
            blocked.insert(b.begin() + 1, b.end());
        }
        if (block_degree > max_degree)
            continue;
        for (int p : pts.labels)
            if (!blocked.count(p))
                visible.push_back(p);

        const int budget = max_degree - block_degree;
        // Per-point factor options within the remaining budget.
        std::vector<CharClassMonomial> opts{CharClassMonomial::unit(d)};
        if (pontryagin) {
            for (int deg = 2; deg <= budget; deg += 2)
                for (const auto& c : cc_enumerate(params, deg))
                    opts.push_back(c);
        } else {
            for (int k = 1; 2 * d * k <= budget; ++k)
                opts.push_back(CharClassMonomial::euler(d, k));
        }
        std::vector<std::vector<CharClassMonomial>> options(visible.size(), opts);
        std::vector<std::pair<int, CharClassMonomial>> psi_acc;
        psi_choices(visible, 0, budget, options, psi_acc, params, pts, out, blocks);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<RelationRecord> generate_irw(const RingParams& params, int n_max, long A_bound,
                                         int multiplier_degree_max,
                                         bool pontryagin_multipliers) {
    if (n_max < 0 || A_bound < 0 || multiplier_degree_max < 0)
        throw std::invalid_argument("generate_irw: bounds must be >= 0");
    std::vector<RelationRecord> records;
    std::set<std::string> seen;
    const unsigned exponent = static_cast<unsigned>(params.g + 1);

    for (int n = 1; n <= n_max; ++n) {
        const PointSet pts = PointSet::range(n);
        const auto multipliers =
            enumerate_multipliers(params, n, multiplier_degree_max, pontryagin_multipliers);

        std::vector<long> A(n, -A_bound);
        while (true) {
            if (std::any_of(A.begin(), A.end(), [](long a) { return a != 0; })) {
                const TautClass om = omega_A(params, A);
                if (!om.is_zero()) {
                    const TautClass power = om.pow(exponent);
                    for (const auto& mult : multipliers) {
                        TautClass multiplied = power;
                        if (!mult.is_unit()) {
                            TautClass mc(params, pts);
                            mc.add_term(mult, rat(1));
                            multiplied = power * mc;
                        }
                        KappaPolynomial pushed = push_to_base(multiplied);
                        if (pushed.is_zero())
                            continue;
                        KappaPolynomial norm = pushed.content_normalized();
                        const std::string key = kappa_poly_to_json(norm).dump();
                        if (!seen.insert(key).second)
                            continue;
                        Json prov;
                        prov["n"] = n;
                        prov["A"] = A;
                        prov["multiplier"] = mult.str();
                        prov["exponent"] = exponent;
                        records.push_back(RelationRecord{Schema::OmegaPower, params.g, params.d,
                                                         *norm.homogeneous_degree(), prov,
                                                         std::move(norm)});
                    }
                }
            }
            // Next A, odometer order.
            int i = n - 1;
            while (i >= 0 && A[i] == A_bound)
                A[i--] = -A_bound;
            if (i < 0)
                break;
            ++A[i];
        }
    }
    return records;
}

namespace {

// kappa_c as a polynomial, with the degree conventions: unit and
// fiber degree < 2d give 0, e gives the scalar chi.
KappaPolynomial fold_kappa(const RingParams& params, const CharClassMonomial& c) {
    const int d = params.d;
    if (c.is_unit() || c.degree() < 2 * d)
        return KappaPolynomial::zero(params);
    if (c.degree() == 2 * d)
        return KappaPolynomial::scalar(params, params.chi);  // only e in this degree
    return KappaPolynomial::monomial(params, KappaMonomial({c}, d));
}

}  // namespace

RelationRecord binomial_decompose(const RingParams& params, int k) {
    if (k < 0)
        throw std::invalid_argument("binomial_decompose: k must be >= 0");
    const int d = params.d;
    const long g = params.g;
    const Rational denom = (params.chi - 2) * params.chi;

    // Closed form.
    KappaPolynomial direct(params);
    const KappaPolynomial kappa1 =
        KappaPolynomial::monomial(params, KappaMonomial::classical(d, 1));
    for (long i = 0; i <= g + 1; ++i) {
        const Rational coeff =
            Rational(binomial(g + 1, i)) / rat_pow(denom, static_cast<unsigned>(g + 1 - i));
        const KappaPolynomial tail = kappa1.pow(static_cast<unsigned>(g + 1 - i)).scaled(coeff);
        const KappaPolynomial head =
            fold_kappa(params, CharClassMonomial::euler(d, static_cast<int>(i) + k));
        direct = direct + head * tail;
    }

    // Square-relation route: push((chi pi_{1*} - psi(e)_*)^2)^{g+1} * psi(e)_1^k.
    const PointSet pts = PointSet::of({1});
    const PointSet total = pts.with_star();
    const TautClass a =
        TautClass::intersection(params, total, {1, PointSet::kStar}).scaled(params.chi) -
        TautClass::psi(params, total, CharClassMonomial::euler(d), PointSet::kStar);
    const PushedRelation rel = relation_square(a);
    TautClass w = rel.pushed.pow(rel.exponent);
    if (k > 0)
        w = w * TautClass::psi(params, pts, CharClassMonomial::euler(d, k), 1);
    const KappaPolynomial via_square =
        push_to_base(w).scaled(1 / rat_pow(denom, static_cast<unsigned>(g + 1)));

    if (direct != via_square)
        throw std::logic_error("binomial_decompose: derivation routes disagree");

    Json prov;
    prov["k"] = k;
    prov["exponent"] = g + 1;
    KappaPolynomial norm = direct.content_normalized();
    return RelationRecord{Schema::BinomialDecompose, g, d, 2 * d * static_cast<int>(g + k),
                          prov, std::move(norm)};
}

std::vector<RelationRecord> pullback_pontryagin_relations(const RingParams& params,
                                                          int degree_max) {
    const int d = params.d;
    std::vector<RelationRecord> records;
    std::set<std::string> seen;
    const int s0 = small_basis_min_index(d);
    for (int i = 1; i < s0; ++i) {
        const CharClassMonomial pi_class = CharClassMonomial::pontryagin(d, i);
        for (int rel_deg = 2; rel_deg <= degree_max; rel_deg += 2) {
            const int fiber_sum = rel_deg + 4 * d - 4 * i;
            for (int dm = 0; dm <= fiber_sum; dm += 2) {
                const int dm2 = fiber_sum - dm;
                for (const auto& m : cc_enumerate(params, dm)) {
                    for (const auto& m2 : cc_enumerate(params, dm2)) {
                        if (m == m2)
                            continue;
                        KappaPolynomial rel =
                            fold_kappa(params, pi_class * m) * fold_kappa(params, m2) -
                            fold_kappa(params, m) * fold_kappa(params, pi_class * m2);
                        if (rel.is_zero())
                            continue;
                        KappaPolynomial norm = rel.content_normalized();
                        const std::string key = kappa_poly_to_json(norm).dump();
                        if (!seen.insert(key).second)
                            continue;
                        Json prov;
                        prov["i"] = i;
                        prov["m"] = cc_to_json(m);
                        prov["m2"] = cc_to_json(m2);
                        records.push_back(RelationRecord{Schema::PullbackPontryagin, params.g,
                                                         params.d, rel_deg, prov,
                                                         std::move(norm)});
                    }
                }
            }
        }
    }
    return records;
}

namespace {

RelationRecord make_pushed_record(const RingParams& params, const PointSet& points,
                                  const std::string& a_text, const std::string* b_text) {
    const PointSet total = points.with_star();
    const TautClass a = parse_expression(a_text, params, total);
    const PushedRelation rel = b_text
        ? relation_product(a, parse_expression(*b_text, params, total))
        : relation_square(a);
    const KappaPolynomial poly = push_to_base(rel.pushed.pow(rel.exponent));
    Json prov;
    prov["a"] = a_text;
    if (b_text)
        prov["b"] = *b_text;
    prov["points"] = points.labels;
    prov["exponent"] = rel.exponent;
    KappaPolynomial norm = poly.content_normalized();
    const int degree = norm.is_zero() ? 0 : *norm.homogeneous_degree();
    return RelationRecord{b_text ? Schema::Product : Schema::Square, params.g, params.d,
                          degree, prov, std::move(norm)};
}

}  // namespace

RelationRecord make_square_record(const RingParams& params, const PointSet& points,
                                  const std::string& a_text) {
    return make_pushed_record(params, points, a_text, nullptr);
}

RelationRecord make_product_record(const RingParams& params, const PointSet& points,
                                   const std::string& a_text, const std::string& b_text) {
    return make_pushed_record(params, points, a_text, &b_text);
}

DecompositionCertificate decomposability_check(const RingParams& params,
                                               const CharClassMonomial& p,
                                               const CharClassMonomial& q,
                                               unsigned exponent) {
    const int d = params.d;
    if (p.degree() <= 2 * d || q.degree() <= 2 * d)
        throw std::invalid_argument("decomposability_check: p and q must have fiber degree > 2d");
    const unsigned product_exp = static_cast<unsigned>(2 * params.g + 1);
    const unsigned square_exp = static_cast<unsigned>(params.g + 1);
    if (exponent == 0)
        exponent = product_exp;
    if (exponent != product_exp && !(exponent == square_exp && p == q))
        throw std::invalid_argument("decomposability_check: exponent must be 2g+1, or g+1 when p == q");

    const Rational chi = params.chi;
    const CharClassMonomial e = CharClassMonomial::euler(d);
    auto k = [&](const CharClassMonomial& c) {
        return KappaPolynomial::monomial(params, KappaMonomial({c}, d));
    };
    // N = kappa_{pq} - kappa_{ep} kappa_q / chi - kappa_{eq} kappa_p / chi
    //       + kappa_{e^2} kappa_p kappa_q / chi^2
    const KappaPolynomial nilpotent =
        k(p * q) - (k(e * p) * k(q)).scaled(1 / chi) - (k(e * q) * k(p)).scaled(1 / chi) +
        (k(e.pow(2)) * k(p) * k(q)).scaled(1 / (chi * chi));

    // Same element through the centering-and-pushforward route.
    const PointSet none;
    const PointSet total = none.with_star();
    const TautClass cp = center(TautClass::psi(params, total, p, PointSet::kStar));
    const TautClass cq = center(TautClass::psi(params, total, q, PointSet::kStar));
    const PushedRelation rel = exponent == square_exp ? relation_square(cp)
                                                      : relation_product(cp, cq);
    const KappaPolynomial via_push = push_to_base(rel.pushed);
    if (via_push != nilpotent)
        throw std::logic_error("decomposability_check: routes for N disagree");

    const KappaPolynomial power = nilpotent.pow(exponent);
    Json prov;
    prov["p"] = cc_to_json(p);
    prov["q"] = cc_to_json(q);
    prov["exponent"] = exponent;
    KappaPolynomial norm = power.content_normalized();
    RelationRecord record{exponent == square_exp ? Schema::Square : Schema::Product,
                          params.g, params.d,
                          norm.is_zero() ? 0 : *norm.homogeneous_degree(), prov, norm};

    MembershipCertificate cert =
        is_member(power, {record.poly}, params, *power.homogeneous_degree());
    if (!cert.ok() || !cert.verify({record.poly}))
        throw std::logic_error("decomposability_check: membership certificate failed");

    return DecompositionCertificate{nilpotent, exponent, std::move(record), std::move(cert),
                                    k(p * q) - nilpotent};
}

KappaPolynomial regenerate(const RelationRecord& record) {
    const RingParams params(record.d, record.g);
    const Json& prov = record.provenance;
    switch (record.schema) {
        case Schema::OmegaPower: {
            const int n = prov.at("n").get<int>();
            const std::vector<long> A = prov.at("A").get<std::vector<long>>();
            const unsigned exponent = prov.at("exponent").get<unsigned>();
            const PointSet pts = PointSet::range(n);
            TautClass power = omega_A(params, A).pow(exponent);
            const std::string mult = prov.at("multiplier").get<std::string>();
            if (mult != "1")
                power = power * parse_expression(mult, params, pts);
            return push_to_base(power).content_normalized();
        }
        case Schema::BinomialDecompose:
            return binomial_decompose(params, prov.at("k").get<int>()).poly;
        case Schema::PullbackPontryagin: {
            const CharClassMonomial pi_class =
                CharClassMonomial::pontryagin(params.d, prov.at("i").get<int>());
            const CharClassMonomial m = cc_from_json(prov.at("m"));
            const CharClassMonomial m2 = cc_from_json(prov.at("m2"));
            return (fold_kappa(params, pi_class * m) * fold_kappa(params, m2) -
                    fold_kappa(params, m) * fold_kappa(params, pi_class * m2))
                .content_normalized();
        }
        case Schema::Square:
        case Schema::Product: {
            if (prov.contains("p")) {
                const auto cert = decomposability_check(params, cc_from_json(prov.at("p")),
                                                        cc_from_json(prov.at("q")),
                                                        prov.at("exponent").get<unsigned>());
                return cert.record.poly;
            }
            const PointSet points = PointSet::of(prov.at("points").get<std::vector<int>>());
            const std::string a = prov.at("a").get<std::string>();
            if (record.schema == Schema::Product)
                return make_product_record(params, points, a, prov.at("b").get<std::string>())
                    .poly;
            return make_square_record(params, points, a).poly;
        }
    }
    throw std::logic_error("unreachable");
}

}  // namespace taut
