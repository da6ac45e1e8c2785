#pragma once

// Seeded random generators for property tests.

#include "taut/charclass.hpp"
#include "taut/tautmono.hpp"

#include <random>
#include <vector>

namespace taut::testing {

inline Rational random_coeff(std::mt19937& rng) {
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 4);
    long n = num(rng);
    if (n == 0)
        n = 1;
    return rat(n, den(rng));
}

// Char-class monomial with exponents <= max_exp (possibly the unit).
inline CharClassMonomial random_charclass(std::mt19937& rng, const RingParams& params,
                                          int max_exp = 3) {
    std::uniform_int_distribution<int> exp(0, max_exp);
    std::vector<int> pont(params.d - 1, 0);
    // At most two active slots keeps the fiber degree desk-scale.
    std::uniform_int_distribution<int> slot(0, params.d - 1);
    const int s1 = slot(rng), s2 = slot(rng);
    int euler = 0;
    auto assign = [&](int s, int k) {
        if (s == 0)
            euler += k;
        else
            pont[s - 1] += k;
    };
    assign(s1, exp(rng));
    assign(s2, exp(rng) % 2);
    return CharClassMonomial(params.d, euler, std::move(pont));
}

inline CharClassMonomial random_kappa_factor(std::mt19937& rng, const RingParams& params,
                                             int max_exp = 3) {
    for (int tries = 0; tries < 64; ++tries) {
        const CharClassMonomial c = random_charclass(rng, params, max_exp);
        if (c.degree() > 2 * params.d)
            return c;
    }
    return CharClassMonomial::euler(params.d, 2);
}

// Raw monomial over the given points: random subsets, psi factors and
// kappa factors, all small.
inline RawMonomial random_raw(std::mt19937& rng, const RingParams& params,
                              const PointSet& points, int max_subsets = 2,
                              bool with_kappa = true) {
    RawMonomial raw;
    raw.coeff = random_coeff(rng);
    const auto& labels = points.labels;
    std::uniform_int_distribution<int> nsub(0, max_subsets);
    std::uniform_int_distribution<size_t> pick(0, labels.size() - 1);
    const int subsets = labels.size() >= 2 ? nsub(rng) : 0;
    for (int s = 0; s < subsets; ++s) {
        std::uniform_int_distribution<size_t> size(2, std::min<size_t>(labels.size(), 3));
        std::vector<int> pool = labels;
        std::shuffle(pool.begin(), pool.end(), rng);
        pool.resize(size(rng));
        raw.pis.push_back(std::move(pool));
    }
    std::uniform_int_distribution<int> npsi(0, 2);
    const int psis = npsi(rng);
    for (int s = 0; s < psis && !labels.empty(); ++s)
        raw.psis.emplace_back(labels[pick(rng)], random_charclass(rng, params, 2));
    if (with_kappa && std::uniform_int_distribution<int>(0, 3)(rng) == 0)
        raw.kappas.push_back(random_kappa_factor(rng, params, 2));
    return raw;
}

inline TautClass random_class(std::mt19937& rng, const RingParams& params,
                              const PointSet& points, int max_terms = 3,
                              bool with_kappa = true) {
    TautClass out(params, points);
    std::uniform_int_distribution<int> nterms(1, max_terms);
    const int terms = nterms(rng);
    for (int t = 0; t < terms; ++t) {
        const RawMonomial raw = random_raw(rng, params, points, 2, with_kappa);
        if (auto nt = mono_normalize(raw, points, params))
            out.add_term(nt->mono, nt->coeff);
    }
    return out;
}

}  // namespace taut::testing
