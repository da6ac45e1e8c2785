#include "taut/charclass.hpp"

#include <algorithm>
#include <stdexcept>

namespace taut {

RingParams::RingParams(int d_, long g_) : d(d_), g(g_), chi(rat(2 - 2 * g_)) {
    if (d < 1 || d % 2 == 0)
        throw std::invalid_argument("RingParams: d must be a positive odd integer, got " +
                                    std::to_string(d));
    if (g < 2)
        throw std::invalid_argument("RingParams: g must be >= 2, got " + std::to_string(g));
}

CharClassMonomial::CharClassMonomial(int d, int euler_exp, std::vector<int> pont_exps) {
    if (d < 1)
        throw std::invalid_argument("CharClassMonomial: d must be >= 1");
    if (euler_exp < 0)
        throw std::invalid_argument("CharClassMonomial: negative Euler exponent");
    if (static_cast<int>(pont_exps.size()) != d - 1)
        throw std::invalid_argument("CharClassMonomial: expected " + std::to_string(d - 1) +
                                    " Pontryagin exponents");
    for (int a : pont_exps)
        if (a < 0)
            throw std::invalid_argument("CharClassMonomial: negative Pontryagin exponent");
    exps_.reserve(d);
    exps_.push_back(euler_exp);
    exps_.insert(exps_.end(), pont_exps.begin(), pont_exps.end());
}

CharClassMonomial CharClassMonomial::unit(int d) {
    return CharClassMonomial(d, 0, std::vector<int>(d - 1, 0));
}

CharClassMonomial CharClassMonomial::euler(int d, int exp) {
    return CharClassMonomial(d, exp, std::vector<int>(d - 1, 0));
}

CharClassMonomial CharClassMonomial::pontryagin(int d, int index, int exp) {
    std::map<int, int> raw;
    raw[index] = exp;
    return make(d, raw);
}

CharClassMonomial CharClassMonomial::make(int d, const std::map<int, int>& raw_exps) {
    int euler = 0;
    std::vector<int> pont(d >= 1 ? d - 1 : 0, 0);
    for (const auto& [index, exp] : raw_exps) {
        if (exp < 0)
            throw std::invalid_argument("cc_make: negative exponent for index " +
                                        std::to_string(index));
        if (index == 0) {
            euler += exp;
        } else if (index == d) {
            euler += 2 * exp;  // p_d = e^2
        } else if (index >= 1 && index < d) {
            pont[index - 1] += exp;
        } else {
            throw std::invalid_argument("cc_make: invalid generator index p" +
                                        std::to_string(index) + " for d = " + std::to_string(d));
        }
    }
    return CharClassMonomial(d, euler, std::move(pont));
}

int CharClassMonomial::pont_exp(int i) const {
    if (i < 1 || i >= half_dim())
        throw std::invalid_argument("pont_exp: index out of range");
    return exps_[i];
}

int CharClassMonomial::degree() const {
    const int d = half_dim();
    int deg = 2 * d * exps_[0];
    for (int i = 1; i < d; ++i)
        deg += 4 * i * exps_[i];
    return deg;
}

bool CharClassMonomial::is_unit() const {
    return std::all_of(exps_.begin(), exps_.end(), [](int a) { return a == 0; });
}

bool CharClassMonomial::is_euler() const {
    if (exps_[0] != 1)
        return false;
    return std::all_of(exps_.begin() + 1, exps_.end(), [](int a) { return a == 0; });
}

CharClassMonomial CharClassMonomial::operator*(const CharClassMonomial& o) const {
    if (half_dim() != o.half_dim())
        throw std::invalid_argument("CharClassMonomial: mixed d in product");
    CharClassMonomial r = *this;
    for (size_t i = 0; i < exps_.size(); ++i)
        r.exps_[i] += o.exps_[i];
    return r;
}

CharClassMonomial CharClassMonomial::pow(int k) const {
    if (k < 0)
        throw std::invalid_argument("CharClassMonomial::pow: negative exponent");
    CharClassMonomial r = *this;
    for (auto& a : r.exps_)
        a *= k;
    return r;
}

std::string CharClassMonomial::str() const {
    std::string s;
    auto factor = [&s](const std::string& name, int exp) {
        if (exp == 0)
            return;
        if (!s.empty())
            s += "*";
        s += name;
        if (exp != 1)
            s += "^" + std::to_string(exp);
    };
    factor("e", exps_[0]);
    for (int i = 1; i < half_dim(); ++i)
        factor("p" + std::to_string(i), exps_[i]);
    return s.empty() ? "1" : s;
}

int small_basis_min_index(int d) {
    return (d + 1 + 3) / 4;  // ceil((d+1)/4)
}

namespace {

// Recursive descent over the generator list, producing exponent vectors in
// lexicographic order.
void enumerate_rec(const std::vector<std::pair<int, int>>& gens,  // (slot, degree)
                   size_t pos, int remaining, std::vector<int>& exps, int d,
                   std::vector<CharClassMonomial>& out) {
    if (remaining == 0) {
        std::vector<int> pont(exps.begin() + 1, exps.end());
        out.emplace_back(d, exps[0], std::move(pont));
        return;
    }
    if (pos == gens.size())
        return;
    const auto [slot, deg] = gens[pos];
    const int max_exp = remaining / deg;
    for (int a = 0; a <= max_exp; ++a) {
        exps[slot] = a;
        enumerate_rec(gens, pos + 1, remaining - a * deg, exps, d, out);
    }
    exps[slot] = 0;
}

}  // namespace

std::vector<CharClassMonomial> cc_enumerate(const RingParams& params, int degree,
                                            BasisKind kind) {
    if (degree < 0)
        throw std::invalid_argument("cc_enumerate: negative degree");
    const int d = params.d;
    std::vector<std::pair<int, int>> gens;
    gens.emplace_back(0, 2 * d);  // Euler class
    const int min_index = kind == BasisKind::Small ? small_basis_min_index(d) : 1;
    for (int i = min_index; i <= d - 1; ++i)
        gens.emplace_back(i, 4 * i);
    std::vector<int> exps(d, 0);
    std::vector<CharClassMonomial> out;
    enumerate_rec(gens, 0, degree, exps, d, out);
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace taut
