#pragma once

#include "taut/json_util.hpp"
#include "taut/kappa.hpp"
#include "taut/pushforward.hpp"
#include "taut/tautmono.hpp"

#include <string>
#include <vector>

namespace taut {

enum class Schema { Square, Product, OmegaPower, PullbackPontryagin, BinomialDecompose };

std::string schema_name(Schema s);
Schema schema_from_name(const std::string& name);

// A kappa-polynomial asserted to vanish, together with the data needed to
// regenerate it bit-exactly. The polynomial is stored content-normalized:
// coprime integer coefficients, first term positive.
struct RelationRecord {
    Schema schema;
    long g;
    int d;
    int degree;
    Json provenance;
    KappaPolynomial poly;

    Json to_json() const;
    static RelationRecord from_json(const Json& j);
};

// Rebuild the relation polynomial from the record's provenance alone.
KappaPolynomial regenerate(const RelationRecord& record);

// Pushforward of a square or product of classes with vanishing
// pushforward; the asserted relation is pushed^exponent == 0.
struct PushedRelation {
    TautClass pushed;
    unsigned exponent;
};

// Requires push(a) == 0 and deg(a) even; exponent g+1.
PushedRelation relation_square(const TautClass& a, int star = PointSet::kStar);
// Requires push(a) == push(b) == 0 and deg(a) even; exponent 2g+1.
PushedRelation relation_product(const TautClass& a, const TautClass& b,
                                int star = PointSet::kStar);

// For homogeneous c of degree 2d with scalar pushforward q:
//   chi^2 push(c^2) - 2 q chi push(e_star c) + q^2 kappa_1,
// whose (g+1)-st power vanishes.
TautClass omega(const TautClass& c, int star = PointSet::kStar);

// omega applied to c_A = sum A_i pi_{i,star} on the points {1..n}.
TautClass omega_A(const RingParams& params, const std::vector<long>& A);

// Canonical psi/pi multiplier monomials on {1..n} of degree <= max_degree.
// Psi factors are powers of e unless pontryagin is set.
std::vector<TautMonomial> enumerate_multipliers(const RingParams& params, int n,
                                                int max_degree, bool pontryagin = false);

// Enumerate A in [-A_bound, A_bound]^n for n <= n_max, expand
// omega_A^{g+1}, multiply by each multiplier monomial, push down to the
// base and keep the distinct nonzero kappa-polynomials.
std::vector<RelationRecord> generate_irw(const RingParams& params, int n_max, long A_bound,
                                         int multiplier_degree_max,
                                         bool pontryagin_multipliers = false);

// The relation sum_i binom(g+1, i) kappa_{e^{i+k}} (kappa_1/((chi-2)chi))^{g+1-i},
// with kappa_{e^0} = 0 and kappa_{e^1} = chi. Built two ways (the closed
// form and the square-relation route) which must agree exactly.
RelationRecord binomial_decompose(const RingParams& params, int k);

// For every Pontryagin index i < ceil((d+1)/4) the class p_i is pulled
// back from the base, giving g-independent relations
//   kappa_{p_i m} kappa_{m'} - kappa_m kappa_{p_i m'}
// for all monomial pairs, with the usual folding of low-degree kappas.
std::vector<RelationRecord> pullback_pontryagin_relations(const RingParams& params,
                                                          int degree_max);

// Square/product relation records built from expression text; the
// expressions live on points + the reserved star point and must push
// forward to zero. The stored polynomial is push_to_base(pushed^exponent).
RelationRecord make_square_record(const RingParams& params, const PointSet& points,
                                  const std::string& a_text);
RelationRecord make_product_record(const RingParams& params, const PointSet& points,
                                   const std::string& a_text, const std::string& b_text);

struct DecompositionCertificate {
    KappaPolynomial nilpotent;  // N_{p,q}
    unsigned exponent;
    RelationRecord record;                 // poly = normalized N^exponent
    MembershipCertificate membership;      // N^exponent in span{record.poly}
    KappaPolynomial decomposable_part;     // kappa_{pq} - N, visibly in (kappa_p, kappa_q)
};

// Certify kappa_{pq} decomposable modulo the nilpotent N_{p,q}. The
// default exponent is 2g+1; g+1 is allowed when p == q.
DecompositionCertificate decomposability_check(const RingParams& params,
                                               const CharClassMonomial& p,
                                               const CharClassMonomial& q,
                                               unsigned exponent = 0);

}  // namespace taut
