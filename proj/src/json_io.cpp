#include "sl2comod/json_io.hpp"

#include <fstream>
#include <limits>
#include <stdexcept>

namespace sl2comod {

namespace {

[[noreturn]] void bad(const std::string& what) { throw std::invalid_argument("json: " + what); }

// All integers that appear in serialized values are small (coefficients of
// low-degree structure matrices), but the internal type is arbitrary
// precision, so the cast is checked.
std::int64_t checked_int64(const Int& v) {
    if (v > std::numeric_limits<std::int64_t>::max() || v < std::numeric_limits<std::int64_t>::min())
        throw std::invalid_argument("json: integer too large to serialize: " + to_string(v));
    return static_cast<std::int64_t>(v);
}

Int int_from_json(const Json& j) {
    if (!j.is_number_integer()) bad("expected an integer");
    return Int(j.get<std::int64_t>());
}

}  // namespace

Json ring_to_json(const BaseRing& ring) {
    switch (ring.kind()) {
        case RingKind::Integers: return Json{{"kind", "Z"}};
        case RingKind::Rationals: return Json{{"kind", "Q"}};
        case RingKind::LocalizedAtPrime: return Json{{"kind", "Z_p"}, {"p", checked_int64(ring.parameter())}};
        case RingKind::InvertedInteger: return Json{{"kind", "Z_inv"}, {"m", checked_int64(ring.parameter())}};
    }
    throw std::logic_error("ring_to_json: bad kind");
}

BaseRing ring_from_json(const Json& j) {
    if (!j.is_object() || !j.contains("kind") || !j["kind"].is_string()) bad("ring must be {\"kind\": ...}");
    const std::string kind = j["kind"].get<std::string>();
    if (kind == "Z") return BaseRing::integers();
    if (kind == "Q") return BaseRing::rationals();
    if (kind == "Z_p") {
        if (!j.contains("p")) bad("ring of kind Z_p needs \"p\"");
        return BaseRing::localized_at_prime(int_from_json(j["p"]));
    }
    if (kind == "Z_inv") {
        if (!j.contains("m")) bad("ring of kind Z_inv needs \"m\"");
        return BaseRing::inverted_integer(int_from_json(j["m"]));
    }
    bad("unknown ring kind \"" + kind + "\"");
}

BaseRing parse_ring_flag(const std::string& flag) {
    if (flag == "Z") return BaseRing::integers();
    if (flag == "Q") return BaseRing::rationals();
    const auto parameter = [&flag](const std::string& digits) {
        try {
            return Int(digits);
        } catch (const std::exception&) {
            bad("ring flag \"" + flag + "\" has a non-integer parameter");
        }
    };
    const auto colon = flag.find(':');
    if (colon != std::string::npos) {
        const std::string head = flag.substr(0, colon), tail = flag.substr(colon + 1);
        if (head == "Z_p") return BaseRing::localized_at_prime(parameter(tail));
        if (head == "Z_inv") return BaseRing::inverted_integer(parameter(tail));
    }
    // Also accept the display names the rings print themselves.
    if (flag.rfind("Z_(", 0) == 0 && flag.back() == ')')
        return BaseRing::localized_at_prime(parameter(flag.substr(3, flag.size() - 4)));
    if (flag.rfind("Z[1/", 0) == 0 && flag.back() == ']')
        return BaseRing::inverted_integer(parameter(flag.substr(4, flag.size() - 5)));
    bad("unknown ring flag \"" + flag + "\" (expected Z, Q, Z_p:<prime>, Z_inv:<m>, Z_(p) or Z[1/m])");
}

std::string ring_flag(const BaseRing& ring) {
    switch (ring.kind()) {
        case RingKind::Integers: return "Z";
        case RingKind::Rationals: return "Q";
        case RingKind::LocalizedAtPrime: return "Z_p:" + ring.parameter().str();
        case RingKind::InvertedInteger: return "Z_inv:" + ring.parameter().str();
    }
    throw std::logic_error("ring_flag: bad kind");
}

Json rational_to_json(const Rational& q) { return Json::array({checked_int64(num(q)), checked_int64(den(q))}); }

Rational rational_from_json(const Json& j) {
    if (!j.is_array() || j.size() != 2) bad("a rational must be [numerator, denominator]");
    const Int n = int_from_json(j[0]), d = int_from_json(j[1]);
    if (d == 0) bad("a rational must have a nonzero denominator");
    return Rational(n) / Rational(d);
}

Json int_matrix_to_json(const IntMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(checked_int64(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

IntMat int_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty() || !j[0].is_array()) bad("a matrix must be a nonempty array of rows");
    IntMat m(j.size(), j[0].size());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        if (!j[i].is_array() || j[i].size() != m.cols()) bad("matrix rows must have equal lengths");
        for (std::size_t k = 0; k < m.cols(); ++k) m(i, k) = int_from_json(j[i][k]);
    }
    return m;
}

Json rational_matrix_to_json(const RatMat& m) {
    Json rows = Json::array();
    for (std::size_t i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(rational_to_json(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

Json poly_to_json(const HopfPoly& p) {
    Json terms = Json::array();
    for (const auto& [e, coeff] : p.terms())
        terms.push_back(Json::array({rational_to_json(coeff), Json::array({e[0], e[1], e[2], e[3]})}));
    return terms;
}

HopfPoly poly_from_json(const Json& j) {
    if (!j.is_array()) bad("a polynomial must be an array of terms");
    HopfPoly p;
    for (const Json& term : j) {
        if (!term.is_array() || term.size() != 2) bad("a term must be [[num, den], [a, b, c, d]]");
        const Rational coeff = rational_from_json(term[0]);
        const Json& exps = term[1];
        if (!exps.is_array() || exps.size() != 4) bad("exponents must be a 4-tuple");
        Exp4 e;
        for (std::size_t t = 0; t < 4; ++t) {
            const Int v = int_from_json(exps[t]);
            if (v < 0) bad("exponents must be nonnegative");
            e[t] = static_cast<int>(v);
        }
        p += HopfPoly::monomial(e, coeff);
    }
    return p;
}

Json comodule_to_json(const Comodule& c) {
    Json matrix = Json::array();
    for (std::size_t i = 0; i < c.rank(); ++i) {
        Json row = Json::array();
        for (std::size_t j = 0; j < c.rank(); ++j) row.push_back(poly_to_json(c.matrix(i, j)));
        matrix.push_back(std::move(row));
    }
    return Json{{"ring", ring_to_json(c.ring)},
                {"rank", c.rank()},
                {"side", side_name(c.side)},
                {"variant", variant_name(c.variant)},
                {"labels", c.labels},
                {"matrix", std::move(matrix)}};
}

Comodule comodule_from_json(const Json& j, bool verify) {
    if (!j.is_object()) bad("a comodule must be a JSON object");
    for (const char* key : {"ring", "rank", "side", "variant", "labels", "matrix"})
        if (!j.contains(key)) bad(std::string("comodule is missing \"") + key + "\"");

    BaseRing ring = ring_from_json(j["ring"]);
    if (!j["rank"].is_number_integer()) bad("rank must be an integer");
    const auto rank = j["rank"].get<std::int64_t>();
    if (rank < 0) bad("rank must be nonnegative");
    const auto n = static_cast<std::size_t>(rank);

    const std::string side_str = j["side"].get<std::string>();
    Side side;
    if (side_str == "right")
        side = Side::Right;
    else if (side_str == "left")
        side = Side::Left;
    else
        bad("side must be \"right\" or \"left\"");

    const std::string variant_str = j["variant"].get<std::string>();
    HopfVariant variant;
    if (variant_str == "std")
        variant = HopfVariant::Std;
    else if (variant_str == "op")
        variant = HopfVariant::Op;
    else
        bad("variant must be \"std\" or \"op\"");

    if (!j["labels"].is_array() || j["labels"].size() != n) bad("labels must list one name per basis vector");
    std::vector<std::string> labels;
    for (const Json& l : j["labels"]) labels.push_back(l.get<std::string>());

    const Json& rows = j["matrix"];
    if (!rows.is_array() || rows.size() != n) bad("matrix must have `rank` rows");
    PolyMat matrix(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        if (!rows[i].is_array() || rows[i].size() != n) bad("matrix must be square of size `rank`");
        for (std::size_t k = 0; k < n; ++k) matrix(i, k) = poly_from_json(rows[i][k]);
    }

    Comodule c = make_comodule(ring, side, variant, std::move(matrix), std::move(labels));
    if (verify) {
        ComoduleCheckReport report = verify_comodule(c);
        if (!report.ok) bad("the loaded matrix is not a comodule: " + report.failures.front());
    }
    return c;
}

void store_comodule(const Comodule& c, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::invalid_argument("store_comodule: cannot open " + path);
    out << comodule_to_json(c).dump(2) << "\n";
    if (!out) throw std::invalid_argument("store_comodule: write to " + path + " failed");
}

Comodule load_comodule(const std::string& path, bool verify) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("load_comodule: cannot open " + path);
    Json j;
    try {
        in >> j;
    } catch (const Json::parse_error& e) {
        throw std::invalid_argument("load_comodule: " + path + " is not valid JSON: " + e.what());
    }
    return comodule_from_json(j, verify);
}

Json weight_map_to_json(const std::map<int, Int>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = checked_int64(v);
    return out;
}

Json multiplicity_map_to_json(const std::map<int, std::size_t>& m) {
    Json out = Json::object();
    for (const auto& [k, v] : m) out[std::to_string(k)] = v;
    return out;
}

}  // namespace sl2comod
