#pragma once

#include "taut/charclass.hpp"
#include "taut/rational.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace taut {

// A monomial in the abstract polynomial ring Q[kappa_c], one generator per
// char-class monomial c of fiber degree > 2d. kappa_{e^{i+1}} is the
// classical kappa_i; its degree is 2di.
class KappaMonomial {
public:
    KappaMonomial() = default;  // unit
    explicit KappaMonomial(std::vector<CharClassMonomial> factors, int d);

    static KappaMonomial unit() { return KappaMonomial(); }
    static KappaMonomial classical(int d, int i);  // kappa_i = kappa_{e^{i+1}}

    const std::vector<CharClassMonomial>& factors() const { return factors_; }
    int degree(int d) const;  // sum (deg c - 2d)
    bool is_unit() const { return factors_.empty(); }

    KappaMonomial operator*(const KappaMonomial& o) const;
    auto operator<=>(const KappaMonomial&) const = default;

    // Multiset of classical indices when every factor is a power of e.
    std::optional<std::vector<int>> classical_indices() const;

    std::string str() const;    // "k1^2*k[p1*e]"
    std::string latex() const;  // "\kappa_1^2 \kappa_{p_1 e}"

private:
    std::vector<CharClassMonomial> factors_;  // sorted
};

// Element of Q[kappa_c] with exact rational coefficients.
class KappaPolynomial {
public:
    explicit KappaPolynomial(RingParams params);

    static KappaPolynomial zero(const RingParams& params);
    static KappaPolynomial scalar(const RingParams& params, const Rational& c);
    static KappaPolynomial monomial(const RingParams& params, const KappaMonomial& m,
                                    const Rational& c = Rational(1));

    const RingParams& params() const { return params_; }
    const std::map<KappaMonomial, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    bool operator==(const KappaPolynomial& o) const;
    bool operator!=(const KappaPolynomial& o) const { return !(*this == o); }
    KappaPolynomial operator+(const KappaPolynomial& o) const;
    KappaPolynomial operator-(const KappaPolynomial& o) const;
    KappaPolynomial operator*(const KappaPolynomial& o) const;
    KappaPolynomial operator-() const;
    KappaPolynomial scaled(const Rational& c) const;
    KappaPolynomial pow(unsigned k) const;

    std::optional<int> homogeneous_degree() const;
    KappaPolynomial degree_part(int degree) const;

    // Projective normal form: integer coefficients with gcd 1, the
    // coefficient of the smallest monomial positive. Zero stays zero.
    KappaPolynomial content_normalized() const;

    std::optional<Rational> coefficient(const KappaMonomial& m) const;
    void add_term(const KappaMonomial& m, const Rational& c);

    std::string str() const;
    std::string latex() const;

private:
    RingParams params_;
    std::map<KappaMonomial, Rational> terms_;
};

// All kappa-monomials of the given degree, in term order. The classical
// flag restricts factors to powers of e, i.e. the subring Q[kappa_1, ...].
std::vector<KappaMonomial> kp_basis(const RingParams& params, int degree,
                                    bool classical = false);

struct SpanResult {
    std::vector<KappaPolynomial> basis;  // reduced row-echelon representatives
    size_t rank = 0;
};

// Degree-D graded piece of the ideal generated by the (homogeneous parts
// of the) given polynomials: each generator is multiplied by every
// kappa-monomial of complementary degree and the rows are reduced over Q.
// With classical set, cofactors are restricted to the classical subring.
SpanResult span_in_degree(const std::vector<KappaPolynomial>& generators,
                          const RingParams& params, int degree, bool classical = false);

struct MembershipCertificate {
    KappaPolynomial target;
    // (generator index, cofactor); target = sum cofactor*generator + residual.
    std::vector<std::pair<size_t, KappaPolynomial>> combination;
    KappaPolynomial residual;

    bool ok() const { return residual.is_zero(); }
    // Re-expand the combination and compare against the target.
    bool verify(const std::vector<KappaPolynomial>& generators) const;
};

// Decide membership of a homogeneous polynomial in the degree-D piece of
// the ideal spanned by the generators. The returned certificate always
// satisfies target = sum + residual; it is a success iff residual == 0.
MembershipCertificate is_member(const KappaPolynomial& p,
                                const std::vector<KappaPolynomial>& generators,
                                const RingParams& params, int degree);

struct RadicalGenerators {
    std::vector<KappaMonomial> kept;            // positive-degree survivors
    std::vector<CharClassMonomial> dropped;     // scalars/zeros of degree <= 0
};

// The finite set {kappa_{p_i}, kappa_{p_i e} | 1 <= i <= d} generating the
// tautological ring modulo nilpotents, with p_d rewritten to e^2. Elements
// of non-positive degree are reported separately instead of kept.
RadicalGenerators radical_generator_set(const RingParams& params);

}  // namespace taut
