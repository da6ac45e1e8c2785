#include "taut/json_util.hpp"

#include <stdexcept>

namespace taut {

Json int_to_json(const Integer& z) {
    if (z.fits_slong_p())
        return static_cast<long>(z.get_si());
    return z.get_str();
}

Integer int_from_json(const Json& j) {
    if (j.is_string())
        return Integer(j.get<std::string>());
    if (j.is_number_integer())
        return Integer(static_cast<long>(j.get<long long>()));
    throw std::invalid_argument("expected integer or decimal string");
}

Json rat_to_json(const Rational& q) {
    return Json::array({int_to_json(Integer(q.get_num())), int_to_json(Integer(q.get_den()))});
}

Rational rat_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2)
        throw std::invalid_argument("expected [num, den]");
    Rational q(int_from_json(j[0]), int_from_json(j[1]));
    q.canonicalize();
    return q;
}

Json cc_to_json(const CharClassMonomial& c) {
    return Json(c.exps());
}

CharClassMonomial cc_from_json(const Json& j) {
    std::vector<int> exps = j.get<std::vector<int>>();
    if (exps.empty())
        throw std::invalid_argument("empty exponent vector");
    std::vector<int> pont(exps.begin() + 1, exps.end());
    return CharClassMonomial(static_cast<int>(exps.size()), exps[0], std::move(pont));
}

namespace {

Json point_to_json(int label) {
    if (label == PointSet::kStar)
        return "*";
    return label;
}

int point_from_json(const Json& j) {
    if (j.is_string()) {
        if (j.get<std::string>() == "*")
            return PointSet::kStar;
        throw std::invalid_argument("unexpected point name " + j.get<std::string>());
    }
    return j.get<int>();
}

}  // namespace

Json term_to_json(const TautMonomial& m, const Rational& coeff) {
    Json t;
    t["coeff"] = rat_to_json(coeff);
    t["kappas"] = Json::array();
    for (const auto& c : m.kappas())
        t["kappas"].push_back(cc_to_json(c));
    t["psis"] = Json::object();
    for (const auto& [pt, c] : m.psis())
        t["psis"][pt == PointSet::kStar ? "*" : std::to_string(pt)] = cc_to_json(c);
    t["blocks"] = Json::array();
    for (const auto& b : m.blocks()) {
        Json jb = Json::array();
        for (int pt : b)
            jb.push_back(point_to_json(pt));
        t["blocks"].push_back(jb);
    }
    return t;
}

Json class_to_json(const TautClass& a) {
    Json j;
    j["d"] = a.params().d;
    j["g"] = a.params().g;
    Json pts = Json::array();
    for (int l : a.points().labels)
        pts.push_back(point_to_json(l));
    j["points"] = pts;
    j["terms"] = Json::array();
    for (const auto& [m, c] : a.terms())
        j["terms"].push_back(term_to_json(m, c));
    return j;
}

TautClass class_from_json(const Json& j) {
    RingParams params(j.at("d").get<int>(), j.at("g").get<long>());
    std::vector<int> labels;
    for (const auto& p : j.at("points"))
        labels.push_back(point_from_json(p));
    const PointSet points = PointSet::of(std::move(labels));
    TautClass out(params, points);
    for (const auto& t : j.at("terms")) {
        RawMonomial raw;
        raw.coeff = rat_from_json(t.at("coeff"));
        for (const auto& c : t.at("kappas"))
            raw.kappas.push_back(cc_from_json(c));
        for (const auto& [key, c] : t.at("psis").items()) {
            const int pt = key == "*" ? PointSet::kStar : std::stoi(key);
            raw.psis.emplace_back(pt, cc_from_json(c));
        }
        for (const auto& b : t.at("blocks")) {
            std::vector<int> blk;
            for (const auto& p : b)
                blk.push_back(point_from_json(p));
            raw.pis.push_back(std::move(blk));
        }
        if (auto nt = mono_normalize(raw, points, params))
            out.add_term(nt->mono, nt->coeff);
    }
    return out;
}

Json kappa_poly_to_json(const KappaPolynomial& p) {
    Json terms = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json factors = Json::array();
        for (const auto& f : m.factors())
            factors.push_back(cc_to_json(f));
        terms.push_back(Json::array(
            {factors, int_to_json(Integer(c.get_num())), int_to_json(Integer(c.get_den()))}));
    }
    return terms;
}

KappaPolynomial kappa_poly_from_json(const Json& j, const RingParams& params) {
    KappaPolynomial p(params);
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw std::invalid_argument("expected [[factors], num, den]");
        std::vector<CharClassMonomial> factors;
        for (const auto& f : t[0])
            factors.push_back(cc_from_json(f));
        Rational c(int_from_json(t[1]), int_from_json(t[2]));
        c.canonicalize();
        p.add_term(KappaMonomial(std::move(factors), params.d), c);
    }
    return p;
}

}  // namespace taut
