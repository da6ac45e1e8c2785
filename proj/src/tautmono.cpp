#include "taut/tautmono.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace taut {

PointSet PointSet::of(std::vector<int> labels) {
    std::sort(labels.begin(), labels.end());
    if (std::adjacent_find(labels.begin(), labels.end()) != labels.end())
        throw std::invalid_argument("PointSet: duplicate labels");
    PointSet p;
    p.labels = std::move(labels);
    return p;
}

PointSet PointSet::range(int n) {
    std::vector<int> v(n);
    std::iota(v.begin(), v.end(), 1);
    return of(std::move(v));
}

PointSet PointSet::with_star() const {
    if (contains(kStar))
        return *this;
    PointSet p = *this;
    p.labels.push_back(kStar);
    return p;
}

PointSet PointSet::without(int label) const {
    PointSet p;
    for (int l : labels)
        if (l != label)
            p.labels.push_back(l);
    return p;
}

bool PointSet::contains(int label) const {
    return std::binary_search(labels.begin(), labels.end(), label);
}

bool PointSet::subset_of(const PointSet& o) const {
    return std::includes(o.labels.begin(), o.labels.end(), labels.begin(), labels.end());
}

std::string point_name(int label) {
    return label == PointSet::kStar ? "star" : std::to_string(label);
}

int TautMonomial::degree(int d) const {
    int deg = 0;
    for (const auto& c : kappas_)
        deg += c.degree() - 2 * d;
    for (const auto& [pt, c] : psis_)
        deg += c.degree();
    for (const auto& b : blocks_)
        deg += 2 * d * (static_cast<int>(b.size()) - 1);
    return deg;
}

bool TautMonomial::is_unit() const {
    return blocks_.empty() && psis_.empty() && kappas_.empty();
}

std::optional<CharClassMonomial> TautMonomial::psi_at(int point) const {
    for (const auto& [pt, c] : psis_)
        if (pt == point)
            return c;
    return std::nullopt;
}

const std::vector<int>* TautMonomial::block_of(int point) const {
    for (const auto& b : blocks_)
        if (std::binary_search(b.begin(), b.end(), point))
            return &b;
    return nullptr;
}

std::string TautMonomial::str() const {
    std::string s;
    auto sep = [&s]() {
        if (!s.empty())
            s += "*";
    };
    for (const auto& c : kappas_) {
        sep();
        s += "kappa(" + c.str() + ")";
    }
    for (const auto& [pt, c] : psis_) {
        sep();
        s += "psi(" + c.str() + "," + point_name(pt) + ")";
    }
    for (const auto& b : blocks_) {
        sep();
        s += "pi(";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i)
                s += ",";
            s += point_name(b[i]);
        }
        s += ")";
    }
    return s.empty() ? "1" : s;
}

RawMonomial RawMonomial::of(const TautMonomial& m, Rational coeff) {
    RawMonomial raw;
    raw.coeff = std::move(coeff);
    raw.kappas = m.kappas_;
    raw.psis = m.psis_;
    raw.pis = m.blocks_;
    return raw;
}

namespace {

struct UnionFind {
    std::map<int, int> parent;

    void add(int x) {
        if (!parent.count(x))
            parent[x] = x;
    }
    int find(int x) {
        int r = x;
        while (parent[r] != r)
            r = parent[r];
        while (parent[x] != r) {
            int next = parent[x];
            parent[x] = r;
            x = next;
        }
        return r;
    }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

std::optional<NormalizedTerm> mono_normalize(const RawMonomial& raw, const PointSet& points,
                                             const RingParams& params) {
    if (raw.coeff == 0)
        return std::nullopt;
    const int d = params.d;
    Rational coeff = raw.coeff;

    // Fold kappa factors of low fiber degree.
    std::vector<CharClassMonomial> kappas;
    for (const auto& c : raw.kappas) {
        if (c.half_dim() != d)
            throw std::invalid_argument("mono_normalize: kappa factor with wrong d");
        const int deg = c.degree();
        if (deg < 2 * d || c.is_unit())
            return std::nullopt;  // pushforward of low-degree class vanishes
        if (deg == 2 * d) {
            // For d odd the only fiber-degree-2d monomial is e itself.
            assert(c.is_euler());
            coeff *= params.chi;
            continue;
        }
        kappas.push_back(c);
    }
    std::sort(kappas.begin(), kappas.end());

    // Merge overlapping intersection-class subsets into blocks.
    UnionFind uf;
    for (const auto& s : raw.pis) {
        if (s.size() < 2)
            throw std::invalid_argument("mono_normalize: intersection class needs >= 2 points");
        std::set<int> distinct(s.begin(), s.end());
        if (distinct.size() != s.size())
            throw std::invalid_argument("mono_normalize: repeated point in intersection class");
        for (int p : s) {
            if (!points.contains(p))
                throw std::invalid_argument("mono_normalize: unknown point " + point_name(p));
            uf.add(p);
        }
        for (size_t i = 1; i < s.size(); ++i)
            uf.unite(s[0], s[i]);
    }
    std::map<int, std::vector<int>> comps;  // root -> members
    for (const auto& [p, _] : uf.parent)
        comps[uf.find(p)].push_back(p);

    std::vector<std::vector<int>> blocks;
    std::map<int, int> excess;  // representative -> count of psi(e) factors
    for (auto& [root, members] : comps) {
        std::sort(members.begin(), members.end());
        excess[members.front()] = -(static_cast<int>(members.size()) - 1);
        blocks.push_back(std::move(members));
    }
    for (const auto& s : raw.pis) {
        const auto* blk = [&]() -> const std::vector<int>* {
            const int root = uf.find(s[0]);
            for (const auto& b : blocks)
                if (uf.find(b[0]) == root)
                    return &b;
            return nullptr;
        }();
        excess[blk->front()] += static_cast<int>(s.size()) - 1;
    }
    std::sort(blocks.begin(), blocks.end());

    // Collect psi factors; points inside a block contribute at the
    // block representative.
    std::map<int, CharClassMonomial> psi_map;
    auto add_psi = [&](int point, const CharClassMonomial& c) {
        if (c.half_dim() != d)
            throw std::invalid_argument("mono_normalize: psi factor with wrong d");
        auto it = psi_map.find(point);
        if (it == psi_map.end())
            psi_map.emplace(point, c);
        else
            it->second = it->second * c;
    };
    auto rep_of = [&](int point) {
        if (uf.parent.count(point)) {
            const int root = uf.find(point);
            for (const auto& b : blocks)
                if (uf.find(b[0]) == root)
                    return b.front();
        }
        return point;
    };
    for (const auto& [pt, c] : raw.psis) {
        if (!points.contains(pt))
            throw std::invalid_argument("mono_normalize: unknown point " + point_name(pt));
        add_psi(rep_of(pt), c);
    }
    for (const auto& [rep, k] : excess) {
        if (k < 0)
            throw std::logic_error("mono_normalize: negative incidence excess");
        if (k > 0)
            add_psi(rep, CharClassMonomial::euler(d, k));
    }

    TautMonomial m;
    m.kappas_ = std::move(kappas);
    m.blocks_ = std::move(blocks);
    for (const auto& [pt, c] : psi_map)
        if (!c.is_unit())
            m.psis_.emplace_back(pt, c);
    return NormalizedTerm{std::move(m), std::move(coeff)};
}

TautClass::TautClass(RingParams params, PointSet points)
    : params_(std::move(params)), points_(std::move(points)) {}

TautClass TautClass::zero(const RingParams& params, const PointSet& points) {
    return TautClass(params, points);
}

TautClass TautClass::scalar(const RingParams& params, const PointSet& points, const Rational& c) {
    TautClass r(params, points);
    r.add_term(TautMonomial{}, c);
    return r;
}

TautClass TautClass::kappa(const RingParams& params, const PointSet& points,
                           const CharClassMonomial& c) {
    RawMonomial raw;
    raw.kappas.push_back(c);
    return from_raw(params, points, raw);
}

TautClass TautClass::psi(const RingParams& params, const PointSet& points,
                         const CharClassMonomial& c, int point) {
    if (!points.contains(point))
        throw std::invalid_argument("psi: unknown point " + point_name(point));
    RawMonomial raw;
    raw.psis.emplace_back(point, c);
    return from_raw(params, points, raw);
}

TautClass TautClass::intersection(const RingParams& params, const PointSet& points,
                                  std::vector<int> subset) {
    RawMonomial raw;
    raw.pis.push_back(std::move(subset));
    return from_raw(params, points, raw);
}

TautClass TautClass::from_raw(const RingParams& params, const PointSet& points,
                              const RawMonomial& raw) {
    TautClass r(params, points);
    if (auto t = mono_normalize(raw, points, params))
        r.add_term(t->mono, t->coeff);
    return r;
}

void TautClass::add_term(const TautMonomial& m, const Rational& c) {
    if (c == 0)
        return;
    auto [it, inserted] = terms_.emplace(m, c);
    if (!inserted) {
        it->second += c;
        if (it->second == 0)
            terms_.erase(it);
    }
}

bool TautClass::operator==(const TautClass& o) const {
    return params_ == o.params_ && points_ == o.points_ && terms_ == o.terms_;
}

namespace {

void require_compatible(const TautClass& a, const TautClass& b) {
    if (a.params() != b.params())
        throw std::invalid_argument("TautClass: mismatched ring parameters");
    if (!(a.points() == b.points()))
        throw std::invalid_argument("TautClass: mismatched point sets");
}

}  // namespace

TautClass TautClass::operator+(const TautClass& o) const {
    require_compatible(*this, o);
    TautClass r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, c);
    return r;
}

TautClass TautClass::operator-(const TautClass& o) const {
    require_compatible(*this, o);
    TautClass r = *this;
    for (const auto& [m, c] : o.terms_)
        r.add_term(m, -c);
    return r;
}

TautClass TautClass::operator-() const {
    return scaled(rat(-1));
}

TautClass TautClass::scaled(const Rational& c) const {
    TautClass r(params_, points_);
    if (c == 0)
        return r;
    for (const auto& [m, k] : terms_)
        r.terms_.emplace(m, k * c);
    return r;
}

TautClass TautClass::operator*(const TautClass& o) const {
    require_compatible(*this, o);
    TautClass r(params_, points_);
    for (const auto& [ma, ca] : terms_) {
        for (const auto& [mb, cb] : o.terms_) {
            RawMonomial raw;
            raw.coeff = ca * cb;
            raw.kappas = ma.kappas_;
            raw.kappas.insert(raw.kappas.end(), mb.kappas_.begin(), mb.kappas_.end());
            raw.psis = ma.psis_;
            raw.psis.insert(raw.psis.end(), mb.psis_.begin(), mb.psis_.end());
            raw.pis = ma.blocks_;
            raw.pis.insert(raw.pis.end(), mb.blocks_.begin(), mb.blocks_.end());
            if (auto t = mono_normalize(raw, points_, params_))
                r.add_term(t->mono, t->coeff);
        }
    }
    return r;
}

TautClass TautClass::pow(unsigned k) const {
    TautClass r = scalar(params_, points_, rat(1));
    TautClass b = *this;
    while (k > 0) {
        if (k & 1u)
            r = r * b;
        if (k >>= 1u)
            b = b * b;
    }
    return r;
}

TautClass TautClass::relabel(const std::map<int, int>& sigma) const {
    // sigma must be a bijection of the point set.
    std::set<int> image;
    for (int l : points_.labels) {
        auto it = sigma.find(l);
        if (it == sigma.end())
            throw std::invalid_argument("relabel: map undefined on point " + point_name(l));
        if (!points_.contains(it->second))
            throw std::invalid_argument("relabel: image point outside the point set");
        image.insert(it->second);
    }
    if (image.size() != points_.size())
        throw std::invalid_argument("relabel: map is not a bijection");

    TautClass r(params_, points_);
    for (const auto& [m, c] : terms_) {
        RawMonomial raw = RawMonomial::of(m, c);
        for (auto& [pt, cc] : raw.psis)
            pt = sigma.at(pt);
        for (auto& b : raw.pis)
            for (auto& pt : b)
                pt = sigma.at(pt);
        if (auto t = mono_normalize(raw, points_, params_))
            r.add_term(t->mono, t->coeff);
    }
    return r;
}

TautClass TautClass::lift(const PointSet& larger) const {
    if (!points_.subset_of(larger))
        throw std::invalid_argument("lift: target point set does not contain the source");
    TautClass r(params_, larger);
    for (const auto& [m, c] : terms_)
        r.terms_.emplace(m, c);
    return r;
}

std::optional<int> TautClass::homogeneous_degree() const {
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

TautClass TautClass::degree_part(int degree) const {
    TautClass r(params_, points_);
    for (const auto& [m, c] : terms_)
        if (m.degree(params_.d) == degree)
            r.terms_.emplace(m, c);
    return r;
}

std::string TautClass::str() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [m, c] : terms_) {
        const bool neg = c < 0;
        const Rational a = neg ? Rational(-c) : c;
        if (s.empty())
            s += neg ? "-" : "";
        else
            s += neg ? " - " : " + ";
        if (a == 1 && !m.is_unit())
            s += m.str();
        else if (m.is_unit())
            s += rat_str(a);
        else
            s += rat_str(a) + "*" + m.str();
    }
    return s;
}

}  // namespace taut
