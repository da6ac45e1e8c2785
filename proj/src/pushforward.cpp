#include "taut/pushforward.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace taut {

ForgetMap ForgetMap::forgetting(const PointSet& source, int label) {
    if (!source.contains(label))
        throw std::invalid_argument("ForgetMap: point " + point_name(label) +
                                    " not in the source point set");
    return ForgetMap{source, source.without(label), label};
}

TautClass push_forget(const TautClass& a, int forgotten) {
    const auto fm = ForgetMap::forgetting(a.points(), forgotten);
    const RingParams& params = a.params();
    TautClass result(params, fm.target);

    for (const auto& [m, coeff] : a.terms()) {
        RawMonomial raw = RawMonomial::of(m, coeff);

        if (const auto* blk = m.block_of(forgotten)) {
            // pi_{B} = pi_{B'} * pi_{i,star}: the star factor integrates to 1.
            std::vector<int> rest;
            for (int p : *blk)
                if (p != forgotten)
                    rest.push_back(p);
            raw.pis.clear();
            for (const auto& b : m.blocks())
                if (&b != blk)
                    raw.pis.push_back(b);
            if (rest.size() >= 2)
                raw.pis.push_back(rest);
            // If the forgotten point was the block representative its psi
            // factors move within the (former) block.
            for (auto& [pt, c] : raw.psis)
                if (pt == forgotten)
                    pt = rest.front();
        } else if (auto c = m.psi_at(forgotten)) {
            // psi(c)_star integrates to kappa_c; mono_normalize folds the
            // low-degree cases (deg < 2d kills the term, kappa_e = chi).
            std::erase_if(raw.psis, [&](const auto& pc) { return pc.first == forgotten; });
            raw.kappas.push_back(*c);
        } else {
            // The monomial is a pullback; its pushforward vanishes.
            continue;
        }

        if (auto t = mono_normalize(raw, fm.target, params))
            result.add_term(t->mono, t->coeff);
    }
    return result;
}

KappaPolynomial push_to_base(const TautClass& a) {
    TautClass cur = a;
    std::vector<int> order = cur.points().labels;
    std::sort(order.rbegin(), order.rend());
    for (int label : order)
        cur = push_forget(cur, label);

    KappaPolynomial out(a.params());
    for (const auto& [m, c] : cur.terms()) {
        assert(m.blocks().empty() && m.psis().empty());
        out.add_term(KappaMonomial(m.kappas(), a.params().d), c);
    }
    return out;
}

TautClass center(const TautClass& a, int star) {
    const RingParams& params = a.params();
    const TautClass pushed = push_forget(a, star);
    const TautClass correction =
        TautClass::psi(params, a.points(), CharClassMonomial::euler(params.d), star) *
        pushed.lift(a.points());
    return a - correction.scaled(1 / params.chi);
}

bool push_pull_check(const TautClass& a, const TautClass& b, int star) {
    const TautClass lhs = push_forget(a * b.lift(a.points()), star);
    const TautClass rhs = push_forget(a, star) * b;
    return lhs == rhs;
}

}  // namespace taut
