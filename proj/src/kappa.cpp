#include "taut/kappa.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace taut {

KappaMonomial::KappaMonomial(std::vector<CharClassMonomial> factors, int d)
    : factors_(std::move(factors)) {
    for (const auto& c : factors_) {
        if (c.half_dim() != d)
            throw std::invalid_argument("KappaMonomial: factor with wrong d");
        if (c.degree() <= 2 * d)
            throw std::invalid_argument("KappaMonomial: factor " + c.str() +
                                        " has fiber degree <= 2d");
    }
    std::sort(factors_.begin(), factors_.end());
}

KappaMonomial KappaMonomial::classical(int d, int i) {
    if (i < 1)
        throw std::invalid_argument("KappaMonomial::classical: index must be >= 1");
    return KappaMonomial({CharClassMonomial::euler(d, i + 1)}, d);
}

int KappaMonomial::degree(int d) const {
    int deg = 0;
    for (const auto& c : factors_)
        deg += c.degree() - 2 * d;
    return deg;
}

KappaMonomial KappaMonomial::operator*(const KappaMonomial& o) const {
    KappaMonomial r = *this;
    r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
    std::sort(r.factors_.begin(), r.factors_.end());
    return r;
}

std::optional<std::vector<int>> KappaMonomial::classical_indices() const {
    std::vector<int> idx;
    for (const auto& c : factors_) {
        const auto& e = c.exps();
        for (size_t i = 1; i < e.size(); ++i)
            if (e[i] != 0)
                return std::nullopt;
        idx.push_back(e[0] - 1);
    }
    return idx;
}

namespace {

std::string factor_str(const CharClassMonomial& c, bool latex) {
    const auto& e = c.exps();
    bool pure_euler = true;
    for (size_t i = 1; i < e.size(); ++i)
        if (e[i] != 0)
            pure_euler = false;
    if (pure_euler && e[0] >= 2) {
        const int idx = e[0] - 1;
        return latex ? "\\kappa_{" + std::to_string(idx) + "}" : "k" + std::to_string(idx);
    }
    if (latex) {
        std::string sub;
        auto part = [&sub](const std::string& name, int exp) {
            if (exp == 0)
                return;
            if (!sub.empty())
                sub += " ";
            sub += name;
            if (exp != 1)
                sub += "^{" + std::to_string(exp) + "}";
        };
        part("e", e[0]);
        for (size_t i = 1; i < e.size(); ++i)
            part("p_{" + std::to_string(i) + "}", e[i]);
        return "\\kappa_{" + sub + "}";
    }
    return "k[" + c.str() + "]";
}

}  // namespace

std::string KappaMonomial::str() const {
    if (factors_.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        size_t j = i;
        while (j + 1 < factors_.size() && factors_[j + 1] == factors_[i])
            ++j;
        if (!s.empty())
            s += "*";
        s += factor_str(factors_[i], false);
        if (j > i)
            s += "^" + std::to_string(j - i + 1);
        i = j;
    }
    return s;
}

std::string KappaMonomial::latex() const {
    if (factors_.empty())
        return "1";
    std::string s;
    for (size_t i = 0; i < factors_.size(); ++i) {
        size_t j = i;
        while (j + 1 < factors_.size() && factors_[j + 1] == factors_[i])
            ++j;
        if (!s.empty())
            s += " ";
        s += factor_str(factors_[i], true);
        if (j > i)
            s += "^{" + std::to_string(j - i + 1) + "}";
        i = j;
    }
    return s;
}

KappaPolynomial::KappaPolynomial(RingParams params) : params_(std::move(params)) {}

KappaPolynomial KappaPolynomial::zero(const RingParams& params) {
    return KappaPolynomial(params);
}

KappaPolynomial KappaPolynomial::scalar(const RingParams& params, const Rational& c) {
    KappaPolynomial r(params);
    r.add_term(KappaMonomial::unit(), c);
    return r;
}

KappaPolynomial KappaPolynomial::monomial(const RingParams& params, const KappaMonomial& m,
                                          const Rational& c) {
    KappaPolynomial r(params);
    r.add_term(m, c);
    return r;
}

void KappaPolynomial::add_term(const KappaMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool KappaPolynomial::operator==(const KappaPolynomial& o) const {
    return params_ == o.params_ && terms_ == o.terms_;
}

KappaPolynomial KappaPolynomial::operator+(const KappaPolynomial& o) const {
    if (params_ != o.params_)
        throw std::invalid_argument("KappaPolynomial: mismatched ring parameters");
    KappaPolynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

KappaPolynomial KappaPolynomial::operator-(const KappaPolynomial& o) const {
    if (params_ != o.params_)
        throw std::invalid_argument("KappaPolynomial: mismatched ring parameters");
    KappaPolynomial r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

KappaPolynomial KappaPolynomial::operator*(const KappaPolynomial& o) const {
    if (params_ != o.params_)
        throw std::invalid_argument("KappaPolynomial: mismatched ring parameters");
    KappaPolynomial r(params_);
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : o.terms_)
            r.add_term(ma * mb, ca * cb);
    return r;
}

KappaPolynomial KappaPolynomial::operator-() const {
    return scaled(rat(-1));
}

KappaPolynomial KappaPolynomial::scaled(const Rational& c) const {
    KappaPolynomial r(params_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

KappaPolynomial KappaPolynomial::pow(unsigned k) const {
    KappaPolynomial r = scalar(params_, rat(1));
    KappaPolynomial b = *this;
    while (k > 0) {
        if (k & 1u)
            r = r * b;
        if (k >>= 1u)
            b = b * b;
    }
    return r;
}

std::optional<int> KappaPolynomial::homogeneous_degree() const {
    std::optional<int> deg;
    for (const auto& [m, c] : terms_) {
        const int md = m.degree(params_.d);
        if (!deg)
            deg = md;
        else if (*deg != md)
            return std::nullopt;
    }
    return deg;
}

KappaPolynomial KappaPolynomial::degree_part(int degree) const {
    KappaPolynomial r(params_);
    for (const auto& [m, c] : terms_)
        if (m.degree(params_.d) == degree)
            r.terms_.emplace(m, c);
    return r;
}

KappaPolynomial KappaPolynomial::content_normalized() const {
    if (terms_.empty())
        return *this;
    Integer num_gcd(0), den_lcm(1);
    for (const auto& [m, c] : terms_) {
        mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
        mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
    }
    Rational scale(den_lcm, num_gcd);
    scale.canonicalize();
    if (terms_.begin()->second < 0)
        scale = -scale;
    return scaled(scale);
}

std::optional<Rational> KappaPolynomial::coefficient(const KappaMonomial& m) const {
    auto it = terms_.find(m);
    if (it == terms_.end())
        return std::nullopt;
    return it->second;
}

namespace {

std::string poly_str(const std::map<KappaMonomial, Rational>& terms, bool latex) {
    if (terms.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        const std::string ms = latex ? m.latex() : m.str();
        if (a == 1 && !m.is_unit())
            s += ms;
        else if (m.is_unit())
            s += rat_str(a);
        else if (latex) {
            const std::string as =
                a.get_den() == 1 ? a.get_num().get_str()
                                 : "\\tfrac{" + a.get_num().get_str() + "}{" +
                                       a.get_den().get_str() + "}";
            s += as + " " + ms;
        } else {
            s += rat_str(a) + "*" + ms;
        }
    }
    return s;
}

}  // namespace

std::string KappaPolynomial::str() const {
    return poly_str(terms_, false);
}

std::string KappaPolynomial::latex() const {
    return poly_str(terms_, true);
}

namespace {

// Multisets of generators with total degree exactly `remaining`, generators
// taken in non-decreasing position order.
void basis_rec(const std::vector<CharClassMonomial>& gens, const std::vector<int>& deg,
               size_t pos, int remaining, std::vector<CharClassMonomial>& acc, int d,
               std::vector<KappaMonomial>& out) {
    if (remaining == 0) {
        out.push_back(KappaMonomial(acc, d));
        return;
    }
    for (size_t i = pos; i < gens.size(); ++i) {
        if (deg[i] > remaining)
            continue;
        acc.push_back(gens[i]);
        basis_rec(gens, deg, i, remaining - deg[i], acc, d, out);
        acc.pop_back();
    }
}

}  // namespace

std::vector<KappaMonomial> kp_basis(const RingParams& params, int degree, bool classical) {
    if (degree < 0)
        throw std::invalid_argument("kp_basis: negative degree");
    const int d = params.d;
    std::vector<CharClassMonomial> gens;
    std::vector<int> degs;
    for (int k = 2; k <= degree; k += 2) {
        for (const auto& c : cc_enumerate(params, k + 2 * d)) {
            if (classical && c.euler_exp() * 2 * d != c.degree())
                continue;
            gens.push_back(c);
            degs.push_back(k);
        }
    }
    std::vector<CharClassMonomial> acc;
    std::vector<KappaMonomial> out;
    basis_rec(gens, degs, 0, degree, acc, d, out);
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

using Row = std::map<KappaMonomial, Rational>;

struct TrackedRow {
    Row row;
    std::vector<Rational> combo;  // coordinates in the original row list
};

void row_axpy(Row& r, const Rational& c, const Row& s) {
    for (const auto& [m, v] : s) {
        auto [it, inserted] = r.emplace(m, c * v);
        if (!inserted) {
            it->second += c * v;
            if (it->second == 0)
                r.erase(it);
        }
    }
}

void combo_axpy(std::vector<Rational>& r, const Rational& c, const std::vector<Rational>& s) {
    for (size_t i = 0; i < s.size(); ++i)
        r[i] += c * s[i];
}

// Gaussian elimination to reduced row echelon form over Q. Rows keep a
// record of how they combine the original rows. Pivots are the smallest
// monomial of each reduced row; processing order is deterministic.
std::vector<TrackedRow> rref(std::vector<TrackedRow> rows) {
    std::vector<TrackedRow> reduced;  // pivot monomials strictly increasing
    for (auto& tr : rows) {
        // Reduce against existing pivots.
        for (const auto& piv : reduced) {
            const auto& pm = piv.row.begin()->first;
            auto it = tr.row.find(pm);
            if (it == tr.row.end())
                continue;
            const Rational c = -it->second;
            row_axpy(tr.row, c, piv.row);
            combo_axpy(tr.combo, c, piv.combo);
        }
        if (tr.row.empty())
            continue;
        // Scale pivot to 1.
        const Rational inv = 1 / tr.row.begin()->second;
        for (auto& [m, v] : tr.row)
            v *= inv;
        for (auto& v : tr.combo)
            v *= inv;
        // Back-substitute into earlier rows.
        for (auto& piv : reduced) {
            auto it = piv.row.find(tr.row.begin()->first);
            if (it == piv.row.end())
                continue;
            const Rational c = -it->second;
            row_axpy(piv.row, c, tr.row);
            combo_axpy(piv.combo, c, tr.combo);
        }
        // Insert keeping pivot order.
        auto pos = std::lower_bound(reduced.begin(), reduced.end(), tr,
                                    [](const TrackedRow& a, const TrackedRow& b) {
                                        return a.row.begin()->first < b.row.begin()->first;
                                    });
        reduced.insert(pos, std::move(tr));
    }
    return reduced;
}

struct RowOrigin {
    size_t generator;
    KappaMonomial cofactor;
};

// Generator-times-cofactor rows spanning the degree-D piece of the ideal.
std::vector<std::pair<KappaPolynomial, RowOrigin>> build_rows(
    const std::vector<KappaPolynomial>& generators, const RingParams& params, int degree,
    bool classical = false) {
    // Proportional generators contribute identical rows; drop them early.
    std::vector<std::pair<KappaPolynomial, size_t>> gens;  // (homogeneous part, original index)
    std::vector<std::string> seen;
    for (size_t gi = 0; gi < generators.size(); ++gi) {
        const auto& g = generators[gi];
        if (g.params() != params)
            throw std::invalid_argument("span_in_degree: generator with wrong parameters");
        std::map<int, KappaPolynomial> parts;
        for (const auto& [m, c] : g.terms()) {
            auto [it, _] = parts.emplace(m.degree(params.d), KappaPolynomial::zero(params));
            it->second.add_term(m, c);
        }
        for (auto& [deg, part] : parts) {
            const std::string key = std::to_string(deg) + "|" + part.content_normalized().str();
            if (std::find(seen.begin(), seen.end(), key) != seen.end())
                continue;
            seen.push_back(key);
            gens.emplace_back(std::move(part), gi);
        }
    }
    std::vector<std::pair<KappaPolynomial, RowOrigin>> rows;
    for (auto& [g, gi] : gens) {
        const int gdeg = *g.homogeneous_degree();
        if (gdeg > degree)
            continue;
        for (const auto& cof : kp_basis(params, degree - gdeg, classical)) {
            KappaPolynomial prod = g * KappaPolynomial::monomial(params, cof);
            if (!prod.is_zero())
                rows.emplace_back(std::move(prod), RowOrigin{gi, cof});
        }
    }
    return rows;
}

}  // namespace

SpanResult span_in_degree(const std::vector<KappaPolynomial>& generators,
                          const RingParams& params, int degree, bool classical) {
    auto rows = build_rows(generators, params, degree, classical);
    std::vector<TrackedRow> tracked;
    tracked.reserve(rows.size());
    for (auto& [p, origin] : rows)
        tracked.push_back(TrackedRow{p.terms(), {}});
    auto reduced = rref(std::move(tracked));
    SpanResult res;
    res.rank = reduced.size();
    for (auto& tr : reduced) {
        KappaPolynomial p(params);
        for (auto& [m, c] : tr.row)
            p.add_term(m, c);
        res.basis.push_back(std::move(p));
    }
    return res;
}

bool MembershipCertificate::verify(const std::vector<KappaPolynomial>& generators) const {
    KappaPolynomial sum = residual;
    for (const auto& [gi, cof] : combination) {
        if (gi >= generators.size())
            return false;
        sum = sum + cof * generators[gi];
    }
    return sum == target;
}

MembershipCertificate is_member(const KappaPolynomial& p,
                                const std::vector<KappaPolynomial>& generators,
                                const RingParams& params, int degree) {
    if (!p.is_zero() && p.homogeneous_degree() != std::optional<int>(degree))
        throw std::invalid_argument("is_member: polynomial is not homogeneous of the stated degree");

    auto rows = build_rows(generators, params, degree);
    std::vector<TrackedRow> tracked;
    tracked.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); ++i) {
        std::vector<Rational> combo(rows.size(), Rational(0));
        combo[i] = 1;
        tracked.push_back(TrackedRow{rows[i].first.terms(), std::move(combo)});
    }
    auto reduced = rref(std::move(tracked));

    Row rem = p.terms();
    std::vector<Rational> combo(rows.size(), Rational(0));
    for (const auto& piv : reduced) {
        const auto& pm = piv.row.begin()->first;
        auto it = rem.find(pm);
        if (it == rem.end())
            continue;
        const Rational c = it->second;
        row_axpy(rem, -c, piv.row);
        combo_axpy(combo, c, piv.combo);
    }

    MembershipCertificate cert{p, {}, KappaPolynomial::zero(params)};
    for (auto& [m, c] : rem)
        cert.residual.add_term(m, c);
    std::map<size_t, KappaPolynomial> cofactors;
    for (size_t i = 0; i < rows.size(); ++i) {
        if (combo[i] == 0)
            continue;
        auto [it, _] = cofactors.emplace(rows[i].second.generator, KappaPolynomial::zero(params));
        it->second.add_term(rows[i].second.cofactor, combo[i]);
    }
    for (auto& [gi, cof] : cofactors)
        cert.combination.emplace_back(gi, std::move(cof));
    return cert;
}

RadicalGenerators radical_generator_set(const RingParams& params) {
    const int d = params.d;
    RadicalGenerators res;
    std::vector<CharClassMonomial> raw;
    for (int i = 1; i <= d; ++i)
        raw.push_back(CharClassMonomial::pontryagin(d, i));
    for (int i = 1; i <= d; ++i)
        raw.push_back(CharClassMonomial::pontryagin(d, i) * CharClassMonomial::euler(d));
    for (const auto& c : raw) {
        if (c.degree() > 2 * d)
            res.kept.push_back(KappaMonomial({c}, d));
        else
            res.dropped.push_back(c);
    }
    std::sort(res.kept.begin(), res.kept.end());
    res.kept.erase(std::unique(res.kept.begin(), res.kept.end()), res.kept.end());
    return res;
}

}  // namespace taut
