#include "bck/json_io.hpp"

#include "bck/term.hpp"

namespace bck {

using nlohmann::json;

json to_json(const Degree& d) { return {{"count", d.count()}, {"total", d.total()}, {"reduced", d.str()}}; }

Degree degree_from_json(const json& j) { return Degree(j.at("count").get<std::uint64_t>(), j.at("total").get<std::uint64_t>()); }

json to_json(const AxiomReport& r) {
    json v = json::array();
    for (const auto& viol : r.violations)
        v.push_back({{"axiom", std::string(axiom_name(viol.axiom))}, {"witness", viol.witness}});
    return {{"valid", r.ok()}, {"violations", v}};
}

json to_json(const GapEvidence& ev) {
    json seq = json::array();
    for (std::size_t i = 0; i < ev.sequence.size(); ++i) {
        json d = to_json(ev.sequence[i]);
        d["n"] = i + 2;
        seq.push_back(d);
    }
    json out = {{"equation", to_string(ev.equation)},
                {"max_n", ev.max_n},
                {"sequence", seq},
                {"monotone_nonincreasing_after_first_sub_one", ev.monotone_nonincreasing_after_first_sub_one}};
    if (ev.sub_one_max) {
        out["sub_one_max"] = {{"n", ev.sub_one_max->first}, {"degree", to_json(ev.sub_one_max->second)}};
        out["candidate_gap"] = ev.candidate_gap()->str();
    } else {
        out["sub_one_max"] = nullptr;
        out["candidate_gap"] = nullptr;
    }
    return out;
}

json table_json(const BckAlgebra& a) { return a.table(); }

json to_json(const CatalogEntry& e) {
    json degrees = {{"cd", to_json(e.cd)}, {"pid", to_json(e.pid)}, {"id", to_json(e.id)}};
    degrees["dnd"] = e.dnd ? to_json(*e.dnd) : json(nullptr);
    degrees["emd"] = e.emd ? to_json(*e.emd) : json(nullptr);
    return {{"table", table_json(e.algebra)},
            {"bounded", e.bound.has_value()},
            {"bound", e.bound ? json(*e.bound) : json(nullptr)},
            {"linear", e.linear},
            {"commutative", e.commutative},
            {"positive_implicative", e.positive_implicative},
            {"implicative", e.implicative},
            {"emd_outside_hypothesis", e.emd_outside_hypothesis},
            {"degrees", degrees}};
}

json to_json(const SpectrumReport& r) {
    auto list = [](const std::vector<Degree>& ds) {
        json a = json::array();
        for (const auto& d : ds) a.push_back(d.str());
        return a;
    };
    json wit = json::object();
    for (const auto& [d, alg] : r.witnesses) wit[d.str()] = table_json(alg);
    return {{"order", r.order},      {"kind", std::string(kind_label(r.kind))},
            {"possible", list(r.possible)}, {"achieved", list(r.achieved)},
            {"missing", list(r.missing)},   {"unexpected", list(r.unexpected)},
            {"witnesses", wit}};
}

json to_json(const AuditReport& r) {
    json fails = json::array();
    for (const auto& f : r.failures)
        fails.push_back({{"check", f.check}, {"table", table_json(f.algebra)}, {"detail", f.detail}});
    return {{"order", r.order},
            {"pass", r.pass()},
            {"algebras_checked", r.algebras_checked},
            {"decompositions_verified", r.decompositions_verified},
            {"checks", r.checks},
            {"failures", fails}};
}

}  // namespace bck
