#include "symtau/jsonio.hpp"

namespace symtau {

namespace {

json poly_to_json(const ZetaPoly& p) {
    json a = json::array();
    for (const Rat& c : p.coeffs()) a.push_back(rat_str(c));
    return a;
}

ZetaPoly poly_from_json(const json& a) {
    std::vector<Rat> c;
    c.reserve(a.size());
    for (const auto& s : a) c.push_back(rat_parse(s.get<std::string>()));
    return ZetaPoly(std::move(c));
}

} // namespace

json to_json(const RatFun& f) {
    json j;
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatFun ratfun_from_json(const json& j) {
    return RatFun::make(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

json to_json(const MPoly& p) {
    json j;
    j["nvars"] = p.nvars();
    json terms = json::array();
    for (const auto& [e, c] : p.terms()) {
        json t;
        json exp = json::array();
        for (int i = 0; i < p.nvars(); ++i) exp.push_back(static_cast<int>(e[i]));
        t["exp"] = exp;
        t["coeff"] = to_json(c);
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

MPoly mpoly_from_json(const json& j) {
    MPoly p(j.at("nvars").get<int>());
    for (const auto& t : j.at("terms")) {
        Expo e(p.nvars());
        const auto& exp = t.at("exp");
        for (int i = 0; i < p.nvars(); ++i) e[i] = exp.at(i).get<uint16_t>();
        p.add_term(e, ratfun_from_json(t.at("coeff")));
    }
    return p;
}

std::string canonical_dump(const json& j) { return j.dump() + "\n"; }

} // namespace symtau
