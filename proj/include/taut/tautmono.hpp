#pragma once

#include "taut/charclass.hpp"
#include "taut/rational.hpp"

#include <compare>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace taut {

// Marked points are small integer labels; the formal point used by the
// pushforward constructions is the reserved maximal label kStar and prints
// as "star".
struct PointSet {
    static constexpr int kStar = std::numeric_limits<int>::max();

    std::vector<int> labels;  // strictly increasing

    PointSet() = default;
    static PointSet of(std::vector<int> labels);
    static PointSet range(int n);  // {1, ..., n}

    PointSet with_star() const;
    PointSet without(int label) const;
    bool contains(int label) const;
    bool subset_of(const PointSet& o) const;
    size_t size() const { return labels.size(); }

    bool operator==(const PointSet&) const = default;
};

std::string point_name(int label);

struct RawMonomial;
struct NormalizedTerm;

// Canonical-form monomial in the fundamental tautological classes on a
// marked-point set, coefficient stripped:
//
//   product of kappa factors        (each of fiber degree > 2d)
//   product of psi factors          (one char-class monomial per point)
//   product of intersection classes (one per block of a partial partition)
//
// Invariants: blocks are disjoint, each of size >= 2; within a block all
// psi factors sit at the minimal point; no unit psi factors are stored.
class TautMonomial {
public:
    TautMonomial() = default;  // the unit monomial

    const std::vector<std::vector<int>>& blocks() const { return blocks_; }
    const std::vector<std::pair<int, CharClassMonomial>>& psis() const { return psis_; }
    const std::vector<CharClassMonomial>& kappas() const { return kappas_; }

    int degree(int d) const;
    bool is_unit() const;
    std::optional<CharClassMonomial> psi_at(int point) const;
    // Block containing the point, if any.
    const std::vector<int>* block_of(int point) const;

    // Term order: blocks, then psi assignments, then the kappa multiset.
    auto operator<=>(const TautMonomial&) const = default;

    std::string str() const;  // grammar syntax without coefficient

private:
    friend class TautClass;
    friend struct RawMonomial;
    friend std::optional<NormalizedTerm> mono_normalize(const RawMonomial&, const PointSet&,
                                                        const RingParams&);
    std::vector<std::vector<int>> blocks_;                   // sorted by first element
    std::vector<std::pair<int, CharClassMonomial>> psis_;    // sorted by point
    std::vector<CharClassMonomial> kappas_;                  // sorted
};

// Unnormalized monomial data fed to the rewriting system. Subsets may
// repeat and overlap, psi factors may repeat per point and sit anywhere
// in a future block, kappa factors may still need folding.
struct RawMonomial {
    Rational coeff = Rational(1);
    std::vector<CharClassMonomial> kappas;
    std::vector<std::pair<int, CharClassMonomial>> psis;
    std::vector<std::vector<int>> pis;  // intersection-class subsets, multiset

    static RawMonomial of(const TautMonomial& m, Rational coeff = Rational(1));
};

struct NormalizedTerm {
    TautMonomial mono;
    Rational coeff;
};

// The rewriting system in closed form: overlapping subsets merge into
// blocks, excess incidences become psi(e) factors at the block
// representative, psi factors migrate to the representative, kappa factors
// of fiber degree <= 2d fold into the coefficient or kill the term.
// Returns nullopt when the term is zero.
std::optional<NormalizedTerm> mono_normalize(const RawMonomial& raw, const PointSet& points,
                                             const RingParams& params);

// A finite Q-linear combination of canonical monomials on a fixed
// marked-point set. The zero polynomial has no terms.
class TautClass {
public:
    TautClass(RingParams params, PointSet points);

    static TautClass zero(const RingParams& params, const PointSet& points);
    static TautClass scalar(const RingParams& params, const PointSet& points, const Rational& c);
    static TautClass kappa(const RingParams& params, const PointSet& points,
                           const CharClassMonomial& c);
    static TautClass psi(const RingParams& params, const PointSet& points,
                         const CharClassMonomial& c, int point);
    static TautClass intersection(const RingParams& params, const PointSet& points,
                                  std::vector<int> subset);
    static TautClass from_raw(const RingParams& params, const PointSet& points,
                              const RawMonomial& raw);

    const RingParams& params() const { return params_; }
    const PointSet& points() const { return points_; }
    const std::map<TautMonomial, Rational>& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool operator==(const TautClass& o) const;
    bool operator!=(const TautClass& o) const { return !(*this == o); }

    TautClass operator+(const TautClass& o) const;
    TautClass operator-(const TautClass& o) const;
    TautClass operator*(const TautClass& o) const;
    TautClass operator-() const;
    TautClass scaled(const Rational& c) const;
    TautClass pow(unsigned k) const;

    // Rename points through a bijection of the point set.
    TautClass relabel(const std::map<int, int>& sigma) const;
    // View the same class on a larger point set (pullback along the
    // forgetful map).
    TautClass lift(const PointSet& larger) const;

    // Degree of a homogeneous class; nullopt for 0 or inhomogeneous.
    std::optional<int> homogeneous_degree() const;
    TautClass degree_part(int degree) const;

    std::string str() const;

    void add_term(const TautMonomial& m, const Rational& c);

private:
    RingParams params_;
    PointSet points_;
    std::map<TautMonomial, Rational> terms_;
};

}  // namespace taut
