#include "lenlab/json_io.hpp"

#include <algorithm>

namespace lenlab::io {

using groups::Element;
using groups::GroupSpec;
using lengths::LengthTable;
using lengths::LengthValue;
using lengths::WeightSpec;

json to_json(const GroupSpec& g) {
    json j;
    j["variant"] = groups::variant_name(g.variant);
    if (g.variant == groups::Variant::DirectProduct || g.variant == groups::Variant::FreeProduct) {
        json fs = json::array();
        for (const auto& f : g.factors) fs.push_back(to_json(f));
        j["params"] = fs;
    } else {
        j["params"] = g.param;
    }
    return j;
}

GroupSpec group_from_json(const json& j) {
    if (!j.is_object() || !j.contains("variant"))
        throw Error(Errc::ParseError, "GroupSpec JSON must be an object with a variant");
    std::string v = j.at("variant").get<std::string>();
    auto factors = [&] {
        std::vector<GroupSpec> fs;
        for (const auto& f : j.at("params")) fs.push_back(group_from_json(f));
        return fs;
    };
    GroupSpec g;
    if (v == "FreeGroup") g = GroupSpec::free_group(j.at("params").get<int>());
    else if (v == "FreeAbelian") g = GroupSpec::free_abelian(j.at("params").get<int>());
    else if (v == "CyclicFinite") g = GroupSpec::cyclic(j.at("params").get<int>());
    else if (v == "DirectProduct") g = GroupSpec::direct_product(factors());
    else if (v == "FreeProduct") g = GroupSpec::free_product(factors());
    else if (v == "VcGroup") g = GroupSpec::vc();
    else if (v == "AbTorsion") g = GroupSpec::ab_torsion(j.at("params").get<int>());
    else throw Error(Errc::ParseError, "unknown group variant '" + v + "'");
    return g;
}

json to_json(const LengthTable& t) {
    json entries = json::array();
    for (const auto& e : t.domain()) {
        LengthValue v = *t.get(e);
        if (v.capped) entries.push_back(json::array({e.token(), json{{"capped", v.value}}}));
        else entries.push_back(json::array({e.token(), v.value}));
    }
    return json{{"group", to_json(t.group())}, {"entries", entries}, {"exact_radius", t.exact_radius()}};
}

LengthTable table_from_json(const json& j) {
    GroupSpec g = group_from_json(j.at("group"));
    LengthTable t(g, j.value("exact_radius", 0));
    for (const auto& e : j.at("entries")) {
        Element el = Element::parse(g, e.at(0).get<std::string>());
        const json& v = e.at(1);
        if (v.is_object()) t.add(el, LengthValue{v.at("capped").get<std::int64_t>(), true});
        else t.add(el, LengthValue{v.get<std::int64_t>(), false});
    }
    return t;
}

json to_json(const WeightSpec& w) {
    json support = json::array();
    for (const auto& [e, v] : w.support) support.push_back(json::array({e.token(), v}));
    json en = json::array();
    for (const auto& e : w.enumeration.elements) en.push_back(e.token());
    return json{{"group", to_json(w.group)},
                {"support", support},
                {"default", json{{"rule", w.rule.proper ? "proper_ramp" : "constant"}, {"base", w.rule.base}}},
                {"enumeration", en}};
}

WeightSpec weight_from_json(const json& j) {
    GroupSpec g = group_from_json(j.at("group"));
    std::vector<std::pair<Element, std::int64_t>> support;
    for (const auto& e : j.at("support"))
        support.emplace_back(Element::parse(g, e.at(0).get<std::string>()), e.at(1).get<std::int64_t>());
    lengths::DefaultRule rule;
    if (j.contains("default")) {
        const json& d = j.at("default");
        std::string r = d.value("rule", "constant");
        if (r == "constant") rule = lengths::DefaultRule::constant(d.at("base").get<std::int64_t>());
        else if (r == "proper_ramp") rule = lengths::DefaultRule::proper_ramp(d.at("base").get<std::int64_t>());
        else throw Error(Errc::ParseError, "unknown default rule '" + r + "'");
    }
    groups::GeneratingSet en = groups::GeneratingSet::standard(g);
    if (j.contains("enumeration") && !j.at("enumeration").empty()) {
        std::vector<Element> els;
        for (const auto& t : j.at("enumeration")) els.push_back(Element::parse(g, t.get<std::string>()));
        en = groups::GeneratingSet::from_elements(g, els);
    }
    return WeightSpec::make(g, std::move(support), rule, std::move(en));
}

json to_json(const graphs::FiniteGraph& g) {
    json edges = json::array();
    for (std::size_t i = 0; i < g.size(); ++i) {
        auto nbrs = g.neighbors(static_cast<int>(i));
        std::sort(nbrs.begin(), nbrs.end());
        for (int j2 : nbrs)
            if (static_cast<int>(i) < j2) edges.push_back(json::array({i, j2}));
    }
    return json{{"vertices", g.vertex_names()}, {"edges", edges}};
}

graphs::FiniteGraph graph_from_json(const json& j) {
    graphs::FiniteGraph g(j.at("vertices").get<std::vector<std::string>>());
    for (const auto& e : j.at("edges")) g.add_edge(e.at(0).get<int>(), e.at(1).get<int>());
    return g;
}

namespace {

const char* status_name(kernels::KernelStatus s) {
    switch (s) {
        case kernels::KernelStatus::Accepted: return "Accepted";
        case kernels::KernelStatus::VacuouslyInD: return "VacuouslyInD";
        case kernels::KernelStatus::NotFoundWithinRadius: return "NotFoundWithinRadius";
    }
    return "Unknown";
}

} // namespace

json to_json(const kernels::ConstructionReport& r) {
    json j;
    j["kernel"] = r.kernel;
    json inputs = json::object();
    for (const auto& [k, v] : r.inputs) inputs[k] = v;
    j["inputs"] = inputs;
    j["status"] = status_name(r.status);
    j["witness"] = r.witness ? json(r.witness->token()) : json(nullptr);
    j["weight"] = r.weight ? to_json(*r.weight) : json(nullptr);
    json checks = json::array();
    for (const auto& c : r.checks)
        checks.push_back(json{{"description", c.description},
                              {"expected", c.expected},
                              {"actual", c.actual},
                              {"pass", c.pass}});
    j["checks"] = checks;
    json rejected = json::array();
    for (const auto& [cand, why] : r.rejected) rejected.push_back(json::array({cand, why}));
    j["rejected"] = rejected;
    j["overall"] = r.overall;
    return j;
}

std::string render_report(const kernels::ConstructionReport& r) {
    std::string s = "kernel: " + r.kernel + "\n";
    for (const auto& [k, v] : r.inputs) s += "  " + k + " = " + v + "\n";
    s += "status: " + std::string(status_name(r.status)) + "\n";
    if (r.witness) s += "witness: " + r.witness->token() + "\n";
    for (const auto& c : r.checks)
        s += std::string(c.pass ? "  [ok]   " : "  [FAIL] ") + c.description + " (expected " + c.expected +
             ", got " + c.actual + ")\n";
    if (!r.rejected.empty()) {
        s += "rejected candidates: " + std::to_string(r.rejected.size()) + "\n";
        std::size_t shown = std::min<std::size_t>(r.rejected.size(), 10);
        for (std::size_t i = 0; i < shown; ++i)
            s += "  " + r.rejected[i].first + ": " + r.rejected[i].second + "\n";
        if (shown < r.rejected.size()) s += "  ...\n";
    }
    s += std::string("overall: ") + (r.overall ? "pass" : "fail") + "\n";
    return s;
}

} // namespace lenlab::io
