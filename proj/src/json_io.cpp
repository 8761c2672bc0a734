#include "arfcalc/json_io.hpp"

namespace arfcalc::io {

static json int_to_json(const Int& v) {
    static const Int lo = std::numeric_limits<long long>::min();
    static const Int hi = std::numeric_limits<long long>::max();
    if (v >= lo && v <= hi) return static_cast<long long>(v);
    return v.str();
}

Int int_from_json(const json& j) {
    if (j.is_number_integer()) return Int(j.get<long long>());
    if (j.is_string()) {
        try {
            return Int(j.get<std::string>());
        } catch (const std::exception&) {
            throw ParseError("invalid integer string: " + j.dump());
        }
    }
    throw ParseError("expected integer, got " + j.dump());
}

json poly_to_json(const IntPoly& p) {
    json a = json::array();
    for (const auto& v : p.c) a.push_back(int_to_json(v));
    return a;
}

IntPoly poly_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected polynomial array, got " + j.dump());
    IntPoly p;
    p.c.reserve(j.size());
    for (const auto& v : j) p.c.push_back(int_from_json(v));
    p.normalize();
    return p;
}

json respoly_to_json(const ResPoly& p) {
    json a = json::array();
    for (int v : p.c) a.push_back(v);
    return a;
}

ResPoly respoly_from_json(const json& j, int modulus) {
    if (!j.is_array()) throw ParseError("expected residue polynomial array, got " + j.dump());
    ResPoly p(modulus);
    for (const auto& v : j) {
        if (!v.is_number_integer()) throw ParseError("expected residue, got " + v.dump());
        p.c.push_back(v.get<int>());
    }
    p.normalize();
    return p;
}

json mat_to_json(const Mat& m) {
    json rows = json::array();
    for (int i = 0; i < m.rows; ++i) {
        json row = json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(poly_to_json(m.at(i, j)));
        rows.push_back(row);
    }
    return rows;
}

Mat mat_from_json(const json& j) {
    if (!j.is_array()) throw ParseError("expected matrix (array of rows), got " + j.dump());
    int r = static_cast<int>(j.size());
    int c = r ? static_cast<int>(j[0].size()) : 0;
    Mat m(r, c);
    for (int i = 0; i < r; ++i) {
        if (!j[i].is_array() || static_cast<int>(j[i].size()) != c) throw ParseError("ragged matrix rows");
        for (int k = 0; k < c; ++k) m.at(i, k) = poly_from_json(j[i][k]);
    }
    return m;
}

json form_to_json(const EpsForm& f) {
    return json{{"epsilon", f.epsilon}, {"psi", mat_to_json(f.psi)}};
}

EpsForm form_from_json(const json& j) {
    if (!j.is_object() || !j.contains("epsilon") || !j.contains("psi"))
        throw ParseError("form requires epsilon and psi");
    EpsForm f;
    f.epsilon = j.at("epsilon").get<int>();
    if (f.epsilon != 1 && f.epsilon != -1) throw ParseError("epsilon must be +1 or -1");
    f.psi = mat_from_json(j.at("psi"));
    return f;
}

json witness_to_json(const LagrangianWitness& w) {
    return json{{"inclusion", mat_to_json(w.inclusion)}, {"complement", mat_to_json(w.complement)}};
}

LagrangianWitness witness_from_json(const json& j) {
    if (!j.is_object() || !j.contains("inclusion") || !j.contains("complement"))
        throw ParseError("witness requires inclusion and complement");
    return {mat_from_json(j.at("inclusion")), mat_from_json(j.at("complement"))};
}

json resolution_to_json(const LinkingResolution& r) {
    return json{{"d", mat_to_json(r.d)}, {"delta", mat_to_json(r.delta)}, {"phi", mat_to_json(r.phi)}};
}

LinkingResolution resolution_from_json(const json& j) {
    if (!j.is_object() || !j.contains("d") || !j.contains("delta") || !j.contains("phi"))
        throw ParseError("resolution requires d, delta and phi");
    return {mat_from_json(j.at("d")), mat_from_json(j.at("delta")), mat_from_json(j.at("phi"))};
}

json formation_to_json(const SFormation& s) {
    return json{{"rank", s.rank},
                {"F", mat_to_json(s.f_inclusion)},
                {"G", mat_to_json(s.g_inclusion)}};
}

json q0class_to_json(const Q0ClassZx& c) {
    return json{{"group", "q0zx"},      {"s", c.s},
                {"t", respoly_to_json(c.t)},   {"u1", respoly_to_json(c.u1)},
                {"u2", respoly_to_json(c.u2)}, {"u3", respoly_to_json(c.u3)}};
}

json q3class_to_json(const Q3ClassZx& c) {
    return json{{"group", "q3zx"}, {"value", respoly_to_json(c.value)}};
}

json dyadic_to_json(const Dyadic& d) {
    return json{{"num", poly_to_json(d.num)}, {"denom_exp", d.k}};
}

} // namespace arfcalc::io
