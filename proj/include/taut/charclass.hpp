#pragma once

#include "taut/rational.hpp"

#include <compare>
#include <map>
#include <string>
#include <vector>

namespace taut {

// Parameters of the fiber: M is the connected sum of g copies of S^d x S^d,
// so the fiber dimension is 2d. The calculus requires d odd and g >= 2
// (chi = 2 - 2g appears in denominators).
struct RingParams {
    int d;         // half fiber dimension, odd, >= 1
    long g;        // genus, >= 2
    Rational chi;  // 2 - 2g

    RingParams(int d_, long g_);

    bool operator==(const RingParams& o) const { return d == o.d && g == o.g; }
    bool operator!=(const RingParams& o) const { return !(*this == o); }
};

// A monomial in H^*(BSO(2d); Q) = Q[p_1, ..., p_{d-1}, e].
//
// Stored as the exponent vector [a_0, a_1, ..., a_{d-1}] where a_0 is the
// Euler-class exponent (degree 2d each) and a_i the exponent of p_i
// (degree 4i each). There is no slot for p_d: p_d = e^2 is rewritten at
// construction, so equality of monomials is plain vector equality.
class CharClassMonomial {
public:
    CharClassMonomial(int d, int euler_exp, std::vector<int> pont_exps);

    static CharClassMonomial unit(int d);
    static CharClassMonomial euler(int d, int exp = 1);
    // index in 1..d; index == d folds into e^2.
    static CharClassMonomial pontryagin(int d, int index, int exp = 1);
    // Raw exponent map: key 0 = e, keys 1..d = p_i (p_d folded to e^2).
    static CharClassMonomial make(int d, const std::map<int, int>& raw_exps);

    int half_dim() const { return static_cast<int>(exps_.size()); }  // d
    int euler_exp() const { return exps_[0]; }
    int pont_exp(int i) const;  // i in 1..d-1
    const std::vector<int>& exps() const { return exps_; }

    int degree() const;  // 2d*a_0 + sum 4i*a_i
    bool is_unit() const;
    bool is_euler() const;  // exactly e^1

    CharClassMonomial operator*(const CharClassMonomial& o) const;
    CharClassMonomial pow(int k) const;

    auto operator<=>(const CharClassMonomial&) const = default;

    std::string str() const;  // e.g. "e^2*p1*p2^3", unit prints "1"

private:
    std::vector<int> exps_;  // size d: [euler, p_1, ..., p_{d-1}]
};

enum class BasisKind { Large, Small };

// All monomials of the given cohomological degree, lexicographically ordered
// on exponent vectors. BasisKind::Small restricts the Pontryagin generators
// to indices i >= ceil((d+1)/4); the Euler class is always allowed.
std::vector<CharClassMonomial> cc_enumerate(const RingParams& params, int degree,
                                            BasisKind kind = BasisKind::Large);

// ceil((d+1)/4): first Pontryagin index allowed in the small generator set.
int small_basis_min_index(int d);

}  // namespace taut
