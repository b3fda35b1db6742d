#include "sl2comod/ktheory.hpp"

#include "sl2comod/weights.hpp"

#include <stdexcept>

namespace sl2comod {

namespace {

void add_into(KClass& into, int w, const Int& c) {
    if (c == 0) return;
    auto it = into.find(w);
    if (it == into.end()) {
        into.emplace(w, c);
    } else {
        it->second += c;
        if (it->second == 0) into.erase(it);
    }
}

}  // namespace

KClass kclass_add(const KClass& a, const KClass& b) {
    KClass out = a;
    for (const auto& [w, c] : b) add_into(out, w, c);
    return out;
}

KClass kclass_sub(const KClass& a, const KClass& b) {
    KClass out = a;
    for (const auto& [w, c] : b) add_into(out, w, -c);
    return out;
}

KClass kclass_mul(const KClass& a, const KClass& b) {
    KClass out;
    for (const auto& [wa, ca] : a)
        for (const auto& [wb, cb] : b) add_into(out, wa + wb, ca * cb);
    return out;
}

bool kclass_is_zero(const KClass& a) { return a.empty(); }

std::string kclass_str(const KClass& a) {
    if (a.empty()) return "0";
    std::string out;
    bool first = true;
    for (auto it = a.rbegin(); it != a.rend(); ++it) {
        Int c = it->second;
        const bool neg = c < 0;
        if (neg) c = -c;
        std::string mono;
        if (it->first == 0)
            mono = to_string(c);
        else {
            mono = (c == 1 ? "" : to_string(c) + "*");
            mono += "z";
            if (it->first != 1) mono += "^" + std::to_string(it->first);
        }
        if (first) {
            out = (neg ? "-" : "") + mono;
            first = false;
        } else {
            out += (neg ? " - " : " + ") + mono;
        }
    }
    return out;
}

KClass kclass_of(const Comodule& c) {
    KClass out;
    for (const auto& [w, mult] : character_multiplicities(c)) add_into(out, w, Int(mult));
    return out;
}

KClass sym_character(int n) {
    if (n < 0) throw std::invalid_argument("sym_character: degree must be >= 0");
    KClass out;
    for (int w = -n; w <= n; w += 2) out.emplace(w, 1);
    return out;
}

std::map<int, Int> sym_expansion(KClass k) {
    std::map<int, Int> out;
    while (!k.empty()) {
        const int top = k.rbegin()->first;
        if (top < 0)
            throw std::invalid_argument("sym_expansion: character is not symmetric under z -> 1/z");
        const Int mult = k.rbegin()->second;
        k = kclass_sub(k, kclass_mul(sym_character(top), KClass{{0, mult}}));
        out.emplace(top, mult);
    }
    return out;
}

std::map<int, Int> expected_product_expansion(int n, int m) {
    std::map<int, Int> out;
    for (int i = 0; i <= std::min(n, m); ++i) out.emplace(n + m - 2 * i, 1);
    return out;
}

bool virtual_product_check(int n, int m) {
    return sym_expansion(kclass_mul(sym_character(n), sym_character(m))) == expected_product_expansion(n, m);
}

}  // namespace sl2comod
