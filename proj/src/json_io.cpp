#include "leaky/json_io.hpp"

#include <stdexcept>

namespace leaky {

Json to_json(const Rational& r) { return r.str(); }

Json to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [mono, coeff] : p.sorted_terms()) {
        Json exps = Json::array();
        for (const auto& [var, e] : mono) {
            exps.push_back({var, e});
        }
        terms.push_back({{"exponents", exps}, {"coefficient", coeff.str()}});
    }
    return {{"expanded", p.str()}, {"factored", p.factored_str()}, {"degree", p.total_degree()}, {"terms", terms}};
}

Json to_json(const CoverGraph& c) {
    Json verts = Json::array();
    for (const auto& v : c.vertices) {
        verts.push_back({{"genus", v.genus}, {"ends", v.ends}});
    }
    Json edges = Json::array();
    for (const auto& e : c.edges) {
        Json w;
        if (const auto* value = std::get_if<std::int64_t>(&e.weight)) {
            w = *value;
        } else {
            w = std::get<LinForm>(e.weight).str();
        }
        edges.push_back({{"from", e.from}, {"to", e.to}, {"weight", w}});
    }
    return {{"vertices", verts}, {"edges", edges}, {"order", c.order}};
}

Json to_json(const WeightedCover& wc) {
    Json j = to_json(wc.cover);
    j["aut"] = wc.aut;
    j["edge_product"] = to_json(wc.edge_product);
    Json mults = Json::array();
    for (const auto& m : wc.vertex_mults) {
        mults.push_back(to_json(m));
    }
    j["vertex_mults"] = mults;
    j["multiplicity"] = to_json(wc.multiplicity);
    return j;
}

Json to_json(const Wall& w, std::int64_t k) {
    return {{"subset", w.subset}, {"form", w.form.str()}, {"form_at_k", w.form.str(k)}};
}

CoverGraph cover_from_json(const Json& j) {
    CoverGraph c;
    try {
        for (const auto& v : j.at("vertices")) {
            CoverVertex cv;
            cv.genus = v.at("genus").get<int>();
            cv.ends = v.at("ends").get<std::vector<int>>();
            c.vertices.push_back(std::move(cv));
        }
        for (const auto& e : j.at("edges")) {
            CoverEdge ce;
            ce.from = e.at("from").get<int>();
            ce.to = e.at("to").get<int>();
            const auto& w = e.at("weight");
            if (w.is_number_integer()) {
                ce.weight = w.get<std::int64_t>();
            } else {
                const auto text = w.get<std::string>();
                const LinForm f = LinForm::parse(text);
                if (f.coeffs().empty() && f.k_coeff() == 0) {
                    ce.weight = f.constant_term();
                } else {
                    ce.weight = f;
                }
            }
            c.edges.push_back(std::move(ce));
        }
        c.order = j.at("order").get<std::vector<int>>();
    } catch (const nlohmann::json::exception& err) {
        throw std::invalid_argument(std::string("malformed cover JSON: ") + err.what());
    }
    return c;
}

}  // namespace leaky
