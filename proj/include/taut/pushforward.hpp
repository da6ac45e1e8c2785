#pragma once

#include "taut/kappa.hpp"
#include "taut/tautmono.hpp"

namespace taut {

// The forgetful map dropping one marked point.
struct ForgetMap {
    PointSet source;
    PointSet target;
    int forgotten;

    static ForgetMap forgetting(const PointSet& source, int label);
};

// Gysin pushforward along the map forgetting one point. Lowers degree by
// exactly 2d; terms that would land in negative degree vanish.
TautClass push_forget(const TautClass& a, int forgotten = PointSet::kStar);

// Iterated pushforward down to the unmarked base, reinterpreted in the
// abstract kappa-ring. Points are forgotten in descending label order;
// the result is order-independent.
KappaPolynomial push_to_base(const TautClass& a);

// a - (1/chi) psi(e)_star * lift(push_forget(a)): the corrected class
// pushes forward to zero exactly.
TautClass center(const TautClass& a, int star = PointSet::kStar);

// push(a * lift(b)) == push(a) * b; true for every pair.
bool push_pull_check(const TautClass& a, const TautClass& b, int star = PointSet::kStar);

}  // namespace taut
