#include "umbra/json_io.hpp"

namespace umbra {

json partition_to_json(const Partition& p) {
    json j = json::array();
    for (int x : p.parts()) j.push_back(x);
    return j;
}

Partition partition_from_json(const json& j) {
    if (!j.is_array()) throw domain_error("partition JSON must be an array");
    std::vector<int> v;
    for (auto& x : j) v.push_back(x.get<int>());
    return Partition::from_unsorted(std::move(v));
}

json symfunc_to_json(const SymFunc& f) {
    json arr = json::array();
    for (auto& [l, c] : f.terms()) {
        arr.push_back(json{{"part", partition_to_json(l)},
                           {"num", c.get_num().get_str()},
                           {"den", c.get_den().get_str()}});
    }
    return json{{"coeffs", arr}};
}

SymFunc symfunc_from_json(const json& j) {
    SymFunc f;
    for (auto& t : j.at("coeffs")) {
        Rat c = rat_from_string(t.at("num").get<std::string>() + "/" +
                                t.at("den").get<std::string>());
        f.add_term(partition_from_json(t.at("part")), c);
    }
    return f;
}

json fpseries_to_json(const FPSeries& f) {
    json arr = json::array();
    for (int k = 0; k <= f.truncation(); ++k) arr.push_back(rat_to_string(f.coeff(k)));
    return json{{"truncation", f.truncation()}, {"coeffs", arr}};
}

FPSeries fpseries_from_json(const json& j) {
    int T = j.at("truncation").get<int>();
    std::vector<Rat> c;
    for (auto& s : j.at("coeffs")) c.push_back(rat_from_string(s.get<std::string>()));
    return FPSeries(std::move(c), T);
}

json species_to_json(const QuasiSpecies& s) {
    json arr = json::array();
    for (auto& a : s.a) arr.push_back(rat_to_string(a));
    return json{{"a", arr}};
}

QuasiSpecies species_from_json(const json& j) {
    QuasiSpecies s;
    for (auto& x : j.at("a")) s.a.push_back(rat_from_string(x.get<std::string>()));
    return s;
}

json genus_to_json(const QuasiGenus& g) {
    json arr = json::array();
    for (auto& [l, v] : g.g)
        arr.push_back(json{{"part", partition_to_json(l)}, {"val", rat_to_string(v)}});
    return json{{"G", arr}};
}

QuasiGenus genus_from_json(const json& j) {
    QuasiGenus g;
    for (auto& t : j.at("G"))
        g.set(partition_from_json(t.at("part")), rat_from_string(t.at("val").get<std::string>()));
    return g;
}

json op_to_json(const ShiftInvOp& f) {
    json arr = json::array();
    for (auto& [l, c] : f.coeffs())
        arr.push_back(json{{"part", partition_to_json(l)}, {"coeff", rat_to_string(c)}});
    return arr;
}

ShiftInvOp op_from_json(const json& j) {
    ShiftInvOp f;
    for (auto& t : j)
        f.add(partition_from_json(t.at("part")), rat_from_string(t.at("coeff").get<std::string>()));
    return f;
}

json tensor_to_json(const TensorElem& t) {
    json arr = json::array();
    for (auto& [k, c] : t.terms()) {
        arr.push_back(json{{"left", partition_to_json(k.first)},
                           {"right", partition_to_json(k.second)},
                           {"num", c.get_num().get_str()},
                           {"den", c.get_den().get_str()}});
    }
    return arr;
}

TensorElem tensor_from_json(const json& j) {
    TensorElem t;
    for (auto& e : j) {
        Rat c = rat_from_string(e.at("num").get<std::string>() + "/" +
                                e.at("den").get<std::string>());
        t.add_term(partition_from_json(e.at("left")), partition_from_json(e.at("right")), c);
    }
    return t;
}

json unipoly_to_json(const UniPoly& p) {
    json arr = json::array();
    for (auto& c : p.coeffs()) arr.push_back(rat_to_string(c));
    return json{{"coeffs", arr}};
}

UniPoly unipoly_from_json(const json& j) {
    std::vector<Rat> c;
    for (auto& s : j.at("coeffs")) c.push_back(rat_from_string(s.get<std::string>()));
    return UniPoly(std::move(c));
}

json shifted_to_json(const ShiftedPoly& p) {
    json arr = json::array();
    for (int k = 0; k <= p.max_power(); ++k)
        arr.push_back(json{{"power", k}, {"value", symfunc_to_json(p.at_power(k))}});
    return arr;
}

}  // namespace umbra
