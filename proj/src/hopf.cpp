#include "sl2comod/hopf.hpp"

#include <mutex>
#include <random>
#include <stdexcept>

namespace sl2comod {

namespace {

const char* kVarNames[4] = {"x11", "x12", "x21", "x22"};

std::string monomial_str(const Exp4& e) {
    std::string out;
    for (int i = 0; i < 4; ++i) {
        if (e[i] == 0) continue;
        if (!out.empty()) out += "*";
        out += kVarNames[i];
        if (e[i] != 1) out += "^" + std::to_string(e[i]);
    }
    return out;
}

Rational rat_pow(const Rational& q, int n) {
    Rational r(1);
    for (int i = 0; i < n; ++i) r *= q;
    return r;
}

}  // namespace

void HopfPoly::add_term(std::map<Exp4, Rational>& into, const Exp4& e, const Rational& coeff) {
    if (coeff == 0) return;
    for (int x : e)
        if (x < 0) throw std::invalid_argument("HopfPoly: negative exponent");
    std::vector<std::pair<Exp4, Rational>> work;
    work.emplace_back(e, coeff);
    while (!work.empty()) {
        auto [m, c] = work.back();
        work.pop_back();
        if (m[0] > 0 && m[3] > 0) {
            // x11*x22 = x12*x21 + 1 inside the monomial.
            work.emplace_back(Exp4{m[0] - 1, m[1] + 1, m[2] + 1, m[3] - 1}, c);
            work.emplace_back(Exp4{m[0] - 1, m[1], m[2], m[3] - 1}, c);
            continue;
        }
        auto it = into.find(m);
        if (it == into.end()) {
            into.emplace(m, c);
        } else {
            it->second += c;
            if (it->second == 0) into.erase(it);
        }
    }
}

HopfPoly& HopfPoly::operator+=(const HopfPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(terms_, e, c);
    return *this;
}

HopfPoly& HopfPoly::operator-=(const HopfPoly& o) {
    for (const auto& [e, c] : o.terms_) add_term(terms_, e, -c);
    return *this;
}

HopfPoly HopfPoly::operator-() const {
    HopfPoly r;
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

HopfPoly HopfPoly::operator*(const HopfPoly& o) const {
    HopfPoly r;
    for (const auto& [e1, c1] : terms_)
        for (const auto& [e2, c2] : o.terms_)
            add_term(r.terms_, Exp4{e1[0] + e2[0], e1[1] + e2[1], e1[2] + e2[2], e1[3] + e2[3]}, c1 * c2);
    return r;
}

HopfPoly HopfPoly::operator*(const Rational& c) const {
    HopfPoly r;
    if (c == 0) return r;
    for (const auto& [e, t] : terms_) r.terms_.emplace(e, t * c);
    return r;
}

int HopfPoly::degree() const {
    int d = -1;
    for (const auto& [e, c] : terms_) d = std::max(d, e[0] + e[1] + e[2] + e[3]);
    return d;
}

std::string HopfPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [e, c] : terms_) {
        Rational a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        std::string mono = monomial_str(e);
        std::string piece;
        if (mono.empty())
            piece = to_string(a);
        else if (a == 1)
            piece = mono;
        else
            piece = to_string(a) + "*" + mono;
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

TensorPoly TensorPoly::tensor(const HopfPoly& left, const HopfPoly& right) {
    TensorPoly r;
    for (const auto& [el, cl] : left.terms())
        for (const auto& [er, cr] : right.terms()) add_term(r.terms_, el, er, cl * cr);
    return r;
}

void TensorPoly::add_term(std::map<Key, Rational>& into, const Exp4& l, const Exp4& r, const Rational& coeff) {
    if (coeff == 0) return;
    std::map<Exp4, Rational> le, re;
    HopfPoly::add_term(le, l, coeff);
    HopfPoly::add_term(re, r, Rational(1));
    for (const auto& [ml, cl] : le)
        for (const auto& [mr, cr] : re) {
            Key key{ml, mr};
            auto it = into.find(key);
            if (it == into.end()) {
                into.emplace(key, cl * cr);
            } else {
                it->second += cl * cr;
                if (it->second == 0) into.erase(it);
            }
        }
}

TensorPoly& TensorPoly::operator+=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(terms_, k.first, k.second, c);
    return *this;
}

TensorPoly& TensorPoly::operator-=(const TensorPoly& o) {
    for (const auto& [k, c] : o.terms_) add_term(terms_, k.first, k.second, -c);
    return *this;
}

TensorPoly TensorPoly::operator*(const TensorPoly& o) const {
    TensorPoly r;
    for (const auto& [k1, c1] : terms_)
        for (const auto& [k2, c2] : o.terms_) {
            Exp4 l{k1.first[0] + k2.first[0], k1.first[1] + k2.first[1], k1.first[2] + k2.first[2],
                   k1.first[3] + k2.first[3]};
            Exp4 rr{k1.second[0] + k2.second[0], k1.second[1] + k2.second[1], k1.second[2] + k2.second[2],
                    k1.second[3] + k2.second[3]};
            add_term(r.terms_, l, rr, c1 * c2);
        }
    return r;
}

TensorPoly TensorPoly::operator*(const Rational& c) const {
    TensorPoly r;
    if (c == 0) return r;
    for (const auto& [k, t] : terms_) r.terms_.emplace(k, t * c);
    return r;
}

TensorPoly TensorPoly::swapped() const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(Key{k.second, k.first}, c);
    return r;
}

TensorPoly TensorPoly::map_left(HopfPoly (*fn)(const HopfPoly&)) const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) {
        HopfPoly img = fn(HopfPoly::monomial(k.first));
        for (const auto& [m, cm] : img.terms()) add_term(r.terms_, m, k.second, c * cm);
    }
    return r;
}

TensorPoly TensorPoly::map_right(HopfPoly (*fn)(const HopfPoly&)) const {
    TensorPoly r;
    for (const auto& [k, c] : terms_) {
        HopfPoly img = fn(HopfPoly::monomial(k.second));
        for (const auto& [m, cm] : img.terms()) add_term(r.terms_, k.first, m, c * cm);
    }
    return r;
}

std::string TensorPoly::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        Rational a = c;
        const bool neg = a < 0;
        if (neg) a = -a;
        std::string ml = monomial_str(k.first), mr = monomial_str(k.second);
        if (ml.empty()) ml = "1";
        if (mr.empty()) mr = "1";
        std::string piece = (a == 1 ? "" : to_string(a) + "*") + "(" + ml + ")(x)(" + mr + ")";
        if (first) {
            out = (neg ? "-" : "") + piece;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + piece;
        }
    }
    return out;
}

void Tensor3::add_term(std::map<Key, Rational>& into, const Exp4& a, const Exp4& b, const Exp4& c,
                       const Rational& coeff) {
    if (coeff == 0) return;
    std::map<Exp4, Rational> ae, be, ce;
    HopfPoly::add_term(ae, a, coeff);
    HopfPoly::add_term(be, b, Rational(1));
    HopfPoly::add_term(ce, c, Rational(1));
    for (const auto& [ma, ca] : ae)
        for (const auto& [mb, cb] : be)
            for (const auto& [mc, cc] : ce) {
                Key key{ma, mb, mc};
                auto it = into.find(key);
                if (it == into.end()) {
                    into.emplace(key, ca * cb * cc);
                } else {
                    it->second += ca * cb * cc;
                    if (it->second == 0) into.erase(it);
                }
            }
}

namespace {

TensorPoly generator_delta(int var, HopfVariant variant) {
    const Exp4 e11{1, 0, 0, 0}, e12{0, 1, 0, 0}, e21{0, 0, 1, 0}, e22{0, 0, 0, 1};
    auto pure = [](const Exp4& l, const Exp4& r) {
        return TensorPoly::tensor(HopfPoly::monomial(l), HopfPoly::monomial(r));
    };
    TensorPoly t;
    switch (var) {
        case 0: t = pure(e11, e11) + pure(e12, e21); break;
        case 1: t = pure(e11, e12) + pure(e12, e22); break;
        case 2: t = pure(e21, e11) + pure(e22, e21); break;
        case 3: t = pure(e21, e12) + pure(e22, e22); break;
        default: throw std::logic_error("generator_delta: bad generator index");
    }
    if (variant == HopfVariant::Op) t = t.swapped();
    return t;
}

// Cache of Delta(generator)^k per variant; powers are built incrementally.
const TensorPoly& cached_generator_power(int var, int exp, HopfVariant variant) {
    static std::mutex mu;
    static std::map<std::tuple<int, int, int>, TensorPoly> cache;
    std::scoped_lock lock(mu);
    auto key = std::make_tuple(var, exp, static_cast<int>(variant));
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    for (int k = 0; k <= exp; ++k) {
        auto kk = std::make_tuple(var, k, static_cast<int>(variant));
        if (cache.count(kk)) continue;
        TensorPoly value;
        if (k == 0)
            value = TensorPoly::tensor(HopfPoly(Rational(1)), HopfPoly(Rational(1)));
        else
            value = cache.at(std::make_tuple(var, k - 1, static_cast<int>(variant))) *
                    generator_delta(var, variant);
        cache.emplace(kk, std::move(value));
    }
    return cache.at(key);
}

}  // namespace

const TensorPoly& comultiply_monomial(const Exp4& e, HopfVariant variant) {
    static std::mutex mu;
    static std::map<std::pair<Exp4, int>, TensorPoly> cache;
    const std::pair<Exp4, int> key{e, static_cast<int>(variant)};
    {
        std::scoped_lock lock(mu);
        auto it = cache.find(key);
        if (it != cache.end()) return it->second;
    }
    TensorPoly value = TensorPoly::tensor(HopfPoly(Rational(1)), HopfPoly(Rational(1)));
    for (int var = 0; var < 4; ++var)
        if (e[var] > 0) value = value * cached_generator_power(var, e[var], variant);
    std::scoped_lock lock(mu);
    return cache.emplace(key, std::move(value)).first->second;
}

TensorPoly comultiply(const HopfPoly& p, HopfVariant variant) {
    TensorPoly out;
    for (const auto& [e, c] : p.terms()) out += comultiply_monomial(e, variant) * c;
    return out;
}

Tensor3 comultiply_left_factor(const TensorPoly& t, HopfVariant variant) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        const TensorPoly& d = comultiply_monomial(key.first, variant);
        for (const auto& [dk, dc] : d.terms()) Tensor3::add_term(out.terms_, dk.first, dk.second, key.second, c * dc);
    }
    return out;
}

Tensor3 comultiply_right_factor(const TensorPoly& t, HopfVariant variant) {
    Tensor3 out;
    for (const auto& [key, c] : t.terms()) {
        const TensorPoly& d = comultiply_monomial(key.second, variant);
        for (const auto& [dk, dc] : d.terms()) Tensor3::add_term(out.terms_, key.first, dk.first, dk.second, c * dc);
    }
    return out;
}

Rational counit(const HopfPoly& p) {
    Rational out(0);
    for (const auto& [e, c] : p.terms())
        if (e[1] == 0 && e[2] == 0) out += c;
    return out;
}

HopfPoly antipode(const HopfPoly& p) {
    HopfPoly r;
    for (const auto& [e, c] : p.terms()) {
        const Rational cc = ((e[1] + e[2]) % 2 != 0) ? Rational(-c) : c;
        r += HopfPoly::monomial(Exp4{e[3], e[1], e[2], e[0]}, cc);
    }
    return r;
}

HopfPoly transpose_vars(const HopfPoly& p) {
    HopfPoly r;
    for (const auto& [e, c] : p.terms()) r += HopfPoly::monomial(Exp4{e[0], e[2], e[1], e[3]}, c);
    return r;
}

HopfPoly transpose_inverse_vars(const HopfPoly& p) {
    HopfPoly r;
    for (const auto& [e, c] : p.terms()) {
        const Rational cc = ((e[1] + e[2]) % 2 != 0) ? Rational(-c) : c;
        r += HopfPoly::monomial(Exp4{e[3], e[2], e[1], e[0]}, cc);
    }
    return r;
}

HopfPoly multiply_factors(const TensorPoly& t) {
    HopfPoly out;
    for (const auto& [k, c] : t.terms())
        out += HopfPoly::monomial(Exp4{k.first[0] + k.second[0], k.first[1] + k.second[1], k.first[2] + k.second[2],
                                       k.first[3] + k.second[3]},
                                  c);
    return out;
}

HopfPoly counit_left_factor(const TensorPoly& t) {
    HopfPoly out;
    for (const auto& [k, c] : t.terms())
        if (k.first[1] == 0 && k.first[2] == 0) out += HopfPoly::monomial(k.second, c);
    return out;
}

HopfPoly counit_right_factor(const TensorPoly& t) {
    HopfPoly out;
    for (const auto& [k, c] : t.terms())
        if (k.second[1] == 0 && k.second[2] == 0) out += HopfPoly::monomial(k.first, c);
    return out;
}

Rational evaluate(const HopfPoly& p, const Mat<Rational>& g) {
    if (g.rows() != 2 || g.cols() != 2) throw std::invalid_argument("evaluate: expected a 2x2 matrix");
    Rational out(0);
    for (const auto& [e, c] : p.terms())
        out += c * rat_pow(g(0, 0), e[0]) * rat_pow(g(0, 1), e[1]) * rat_pow(g(1, 0), e[2]) * rat_pow(g(1, 1), e[3]);
    return out;
}

Rational evaluate(const TensorPoly& t, const Mat<Rational>& g, const Mat<Rational>& h) {
    if (g.rows() != 2 || g.cols() != 2 || h.rows() != 2 || h.cols() != 2)
        throw std::invalid_argument("evaluate: expected 2x2 matrices");
    Rational out(0);
    for (const auto& [k, c] : t.terms()) {
        const Exp4& a = k.first;
        const Exp4& b = k.second;
        out += c * rat_pow(g(0, 0), a[0]) * rat_pow(g(0, 1), a[1]) * rat_pow(g(1, 0), a[2]) * rat_pow(g(1, 1), a[3]) *
               rat_pow(h(0, 0), b[0]) * rat_pow(h(0, 1), b[1]) * rat_pow(h(1, 0), b[2]) * rat_pow(h(1, 1), b[3]);
    }
    return out;
}

Rational derivative_at_identity(const HopfPoly& p, const Mat<Rational>& direction) {
    if (direction.rows() != 2 || direction.cols() != 2)
        throw std::invalid_argument("derivative_at_identity: expected a 2x2 matrix");
    // d/dt of (1 + t*X00)^a (t*X01)^b (t*X10)^c (1 + t*X11)^d at t = 0:
    // only monomials with at most one off-diagonal variable survive.
    Rational out(0);
    for (const auto& [e, c] : p.terms()) {
        if (e[1] == 0 && e[2] == 0)
            out += c * (Rational(e[0]) * direction(0, 0) + Rational(e[3]) * direction(1, 1));
        else if (e[1] == 1 && e[2] == 0)
            out += c * direction(0, 1);
        else if (e[1] == 0 && e[2] == 1)
            out += c * direction(1, 0);
    }
    return out;
}

HopfCheckReport verify_hopf(HopfVariant variant, std::uint64_t seed, int n_random) {
    HopfCheckReport report;
    auto check = [&report](bool ok, const std::string& what) {
        if (!ok) {
            report.ok = false;
            report.failures.push_back(what);
        }
    };

    check(HopfPoly::x11() * HopfPoly::x22() - HopfPoly::x12() * HopfPoly::x21() == HopfPoly(Rational(1)),
          "determinant relation x11*x22 - x12*x21 = 1");

    std::vector<HopfPoly> samples = {HopfPoly::x11(), HopfPoly::x12(), HopfPoly::x21(), HopfPoly::x22()};
    std::mt19937_64 rng(seed);
    for (int i = 0; i < n_random; ++i) {
        HopfPoly f;
        const int n_terms = 1 + static_cast<int>(rng() % 4);
        for (int t = 0; t < n_terms; ++t) {
            Exp4 e{static_cast<int>(rng() % 3), static_cast<int>(rng() % 3), static_cast<int>(rng() % 3),
                   static_cast<int>(rng() % 3)};
            Rational c(1 + static_cast<int>(rng() % 5));
            if (rng() % 2 == 0) c = -c;
            f += HopfPoly::monomial(e, c);
        }
        samples.push_back(f);
    }

    const HopfVariant other = variant == HopfVariant::Std ? HopfVariant::Op : HopfVariant::Std;
    for (std::size_t i = 0; i < samples.size(); ++i) {
        const HopfPoly& f = samples[i];
        const std::string tag = " [sample " + std::to_string(i) + "]";
        TensorPoly d = comultiply(f, variant);

        check(comultiply_left_factor(d, variant) == comultiply_right_factor(d, variant), "coassociativity" + tag);
        check(counit_left_factor(d) == f, "left counit law" + tag);
        check(counit_right_factor(d) == f, "right counit law" + tag);

        const HopfPoly eps(counit(f));
        check(multiply_factors(d.map_left(&antipode)) == eps, "left antipode law" + tag);
        check(multiply_factors(d.map_right(&antipode)) == eps, "right antipode law" + tag);

        check(antipode(antipode(f)) == f, "antipode is an involution" + tag);
        check(transpose_vars(transpose_vars(f)) == f, "variable transposition is an involution" + tag);
        check(transpose_inverse_vars(transpose_inverse_vars(f)) == f, "transposed inverse is an involution" + tag);
        check(transpose_inverse_vars(transpose_vars(antipode(f))) == f,
              "transposed inverse = transposition o antipode" + tag);

        check(comultiply(f, other) == d.swapped(), "the two comultiplications are factor swaps" + tag);
        check(comultiply(transpose_inverse_vars(f), variant) ==
                  d.map_left(&transpose_inverse_vars).map_right(&transpose_inverse_vars),
              "transposed inverse is a coalgebra map" + tag);
        check(comultiply(transpose_vars(f), variant) ==
                  d.map_left(&transpose_vars).map_right(&transpose_vars).swapped(),
              "variable transposition is an anti-coalgebra map" + tag);
        check(comultiply(antipode(f), variant) == d.map_left(&antipode).map_right(&antipode).swapped(),
              "antipode is an anti-coalgebra map" + tag);
    }
    return report;
}

}  // namespace sl2comod
