#include "schub/json_io.hpp"

#include <fstream>

namespace schub {

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {  // graded-lex order
        Json t;
        t["exp"] = e;
        t["num"] = c.get_num().get_str();
        t["den"] = c.get_den().get_str();
        terms.push_back(std::move(t));
    }
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
    Poly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        Exp e = t.at("exp").get<Exp>();
        if (static_cast<int>(e.size()) != p.nvars())
            throw std::invalid_argument("malformed polynomial file: bad exponent length");
        Int num(t.at("num").get<std::string>());
        Int den(t.at("den").get<std::string>());
        if (den <= 0) throw std::invalid_argument("malformed polynomial file: den <= 0");
        Rat c(num, den);
        c.canonicalize();
        p.add_term(e, c);
    }
    return p;
}

Json weyl_element_to_json(const WeylElement& w) {
    return Json{{"word", w.word}, {"matrix", w.matrix}, {"length", w.length}};
}

Json root_system_to_json(const RootSystem& rs) {
    Json j;
    j["system"] = rs.name();
    j["coord_dim"] = rs.coord_dim();
    j["simple_roots"] = rs.simple_roots();
    j["positive_roots"] = rs.positive_roots();
    Json fw = Json::array();
    for (const auto& w : rs.fundamental_weights()) {
        Json v = Json::array();
        for (const auto& c : w) v.push_back(to_string(c));
        fw.push_back(std::move(v));
    }
    j["fundamental_weights"] = std::move(fw);
    if (auto rel = rs.linear_relation()) {
        Json v = Json::array();
        for (const auto& c : *rel) v.push_back(to_string(c));
        j["linear_relation"] = std::move(v);
    }
    return j;
}

Json weyl_group_to_json(const WeylGroup& W) {
    Json elems = Json::array();
    for (const auto& w : W.elements()) elems.push_back(weyl_element_to_json(w));
    return Json{{"system", W.system().name()},
                {"count", W.size()},
                {"elements", std::move(elems)}};
}

Json class_expansion_to_json(const ClassExpansion& ce) {
    Json entries = Json::array();
    for (const auto& e : ce.entries) {
        Json t;
        t["u_word"] = e.u_word;
        if (e.has_v) t["v_word"] = e.v_word;
        t["num"] = e.coeff.get_num().get_str();
        t["den"] = e.coeff.get_den().get_str();
        entries.push_back(std::move(t));
    }
    return Json{{"system", ce.system}, {"degree", ce.degree},
                {"entries", std::move(entries)}};
}

Json convention_block(const RootSystem& rs) {
    Json j;
    j["realization"] = rs.simple_roots();
    if (rs.family() == Family::G2) {
        j["bridge"] = {"x1 = -a2/3", "x2 = -a1 - a2/3", "x3 = a1 + 2*a2/3"};
        j["short_simple_reflection"] = "s1 (reflection in a1)";
    }
    j["sign_policy"] = "global signs are measured from the (id, w0) coefficient, never normalized";
    j["duality_pattern"] = "coefficient(u, v) = sign * delta(v, w0 * u)";
    return j;
}

Json verification_report_to_json(const VerificationReport& rep) {
    Json j;
    j["tool"] = kToolVersion;
    j["candidate"] = rep.candidate;
    j["system"] = rep.system;
    j["diag_eval_constant"] = to_string(rep.diag_eval_constant);
    j["kronecker_ok"] = rep.kronecker_ok;
    j["global_sign"] = rep.global_sign;
    Json mm = Json::array();
    for (const auto& m : rep.mismatches)
        mm.push_back(Json{{"u", m.u},
                          {"v", m.v},
                          {"got", to_string(m.lhs)},
                          {"expected", to_string(m.rhs)}});
    j["mismatches"] = std::move(mm);
    return j;
}

Json torsion_report_to_json(const TorsionReport& rep, bool full) {
    Json j;
    j["tool"] = kToolVersion;
    j["system"] = rep.system;
    j["top_degree"] = rep.top_degree;
    j["monomial_count"] = rep.monomial_count;
    j["torsion_index"] = rep.gcd.get_str();
    j["witness"] = rep.witness;
    if (full) {
        Json list = Json::array();
        for (const auto& [e, c] : rep.coefficients)
            list.push_back(Json{{"exp", e}, {"coeff", c.get_str()}});
        j["coefficients"] = std::move(list);
    }
    return j;
}

void save_weyl_cache(const std::string& path, const WeylGroup& W) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write cache file: " + path);
    out << weyl_group_to_json(W).dump();
}

std::optional<std::vector<WeylElement>> load_weyl_cache(const std::string& path,
                                                        const RootSystem& rs) {
    std::ifstream in(path);
    if (!in) return std::nullopt;
    try {
        Json j;
        in >> j;
        if (j.at("system").get<std::string>() != rs.name()) return std::nullopt;
        size_t count = j.at("count").get<size_t>();
        if (count != rs.weyl_order()) return std::nullopt;
        const auto& elems = j.at("elements");
        if (elems.size() != count) return std::nullopt;
        // Length statistics: exactly one longest element of length N, one
        // identity, and word sizes matching lengths.
        std::vector<WeylElement> out;
        size_t n_top = 0, n_id = 0;
        int top = static_cast<int>(rs.positive_roots().size());
        int dim = rs.coord_dim();
        for (const auto& e : elems) {
            WeylElement w;
            w.word = e.at("word").get<std::vector<int>>();
            w.matrix = e.at("matrix").get<IMat>();
            w.length = e.at("length").get<int>();
            if (w.word.size() != static_cast<size_t>(w.length)) return std::nullopt;
            if (w.matrix.size() != static_cast<size_t>(dim)) return std::nullopt;
            for (const auto& row : w.matrix)
                if (row.size() != static_cast<size_t>(dim)) return std::nullopt;
            if (w.length == top) ++n_top;
            if (w.length == 0) ++n_id;
            out.push_back(std::move(w));
        }
        if (n_top != 1 || n_id != 1) return std::nullopt;
        return out;
    } catch (...) {
        return std::nullopt;
    }
}

bool load_weyl_cache_valid(const std::string& path, const RootSystem& rs) {
    return load_weyl_cache(path, rs).has_value();
}

}  // namespace schub
