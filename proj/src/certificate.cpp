#include "bettipair/certificate.hpp"

namespace bettipair {

json sequence_to_json(const Sequence& s) {
    json j;
    j["values"] = s.values;
    if (s.eventual) j["eventual"] = *s.eventual;
    return j;
}

Sequence sequence_from_json(const json& j) {
    Sequence s;
    s.values = j.at("values").get<std::vector<i64>>();
    if (j.contains("eventual")) s.eventual = j.at("eventual").get<i64>();
    return s;
}

json monomial_ideal_to_json(const MonomialIdeal& J) {
    json gens = json::array();
    for (const auto& g : J.gens) {
        json e = json::array();
        for (int v = 0; v < J.nvars; ++v) e.push_back(g.e[v]);
        gens.push_back(e);
    }
    return json{{"nvars", J.nvars}, {"gens", gens}};
}

json polynomial_to_json(const Polynomial& f) {
    json terms = json::array();
    for (const auto& [m, c] : f.terms) {
        json e = json::array();
        for (int v = 0; v < f.nvars; ++v) e.push_back(m.e[v]);
        terms.push_back(json::array({c, e}));
    }
    return terms;
}

json point_set_to_json(const PointSet& pts) {
    json arr = json::array();
    for (const auto& p : pts.points) arr.push_back(json::array({p.c[0], p.c[1], p.c[2], p.c[3]}));
    return arr;
}

PointSet point_set_from_json(const json& j) {
    PointSet pts;
    for (const auto& entry : j) {
        PointP3 p;
        for (int k = 0; k < 4; ++k) p.c[k] = entry.at(k).get<i64>();
        pts.add(p, PointProvenance::SampledOnLine);
    }
    return pts;
}

json lines_to_json(const LinesUnion& u) {
    json arr = json::array();
    for (const auto& l : u.lines) {
        json forms = json::array();
        forms.push_back(json::array({l.form_a[0], l.form_a[1], l.form_a[2], l.form_a[3]}));
        forms.push_back(json::array({l.form_b[0], l.form_b[1], l.form_b[2], l.form_b[3]}));
        arr.push_back(forms);
    }
    return arr;
}

json betti_to_json(const BettiDiagram& b) {
    json j = json::object();
    for (const auto& [key, v] : b.entries) {
        std::string i = std::to_string(key.first);
        std::string deg = std::to_string(key.second);
        j[i][deg] = v;
    }
    return j;
}

json wlp_to_json(const WlpReport& r) {
    json rows = json::array();
    for (const auto& row : r.rows)
        rows.push_back(json{{"degree", row.degree},
                            {"dim_from", row.dim_from},
                            {"dim_to", row.dim_to},
                            {"best_rank", row.best_rank}});
    json j;
    j["holds"] = r.holds;
    j["failing_degrees"] = r.failing_degrees;
    j["rows"] = rows;
    j["seed"] = r.seed;
    j["trials"] = r.trials;
    j["reduction_form"] = r.reduction_form;
    json probes = json::array();
    for (const auto& f : r.probe_forms) probes.push_back(f);
    j["probe_forms"] = probes;
    j["note"] = "holds-verdicts are probabilistic over the sampled forms; "
                "fails-verdicts are exact rank deficits";
    return j;
}

json certificate(const WitnessPair& w) {
    json j;
    j["schema"] = "bettipair-certificate/1";
    j["tool_version"] = "1.0.0";
    j["prime"] = w.config.prime;
    j["seed"] = w.config.seed;
    j["lex_order"] = "x1 > x2 > x3";

    j["input"]["delta_h_bar"] = sequence_to_json(w.analysis.delta_h_bar);
    j["input"]["h_bar"] = sequence_to_json(w.analysis.h_bar);

    const auto& inv = w.analysis.inv;
    j["invariants"] = {{"d", inv.d},     {"t", inv.t},
                       {"s", inv.s},     {"d_even", inv.d_even},
                       {"ci_type", json::array({inv.ci_type.first, inv.ci_type.second})},
                       {"tail", inv.tail}};

    j["table"]["delta_h"] = sequence_to_json(w.analysis.table.delta_h);
    j["table"]["delta_ci"] = sequence_to_json(w.analysis.table.delta_ci);
    j["table"]["e_row"] = sequence_to_json(w.analysis.table.e_row);
    j["table"]["e_prime"] = sequence_to_json(w.analysis.table.e_prime);
    j["table"]["shift"] = w.analysis.table.shift;

    j["z"]["points"] = point_set_to_json(w.z.points);
    j["z"]["curve_ideal"] = monomial_ideal_to_json(w.z.curve_ideal_2v);
    j["z"]["curve_lines"] = lines_to_json(w.z.curve);
    j["z"]["hilbert"] = sequence_to_json(w.z.hilbert);
    j["z"]["betti"] = betti_to_json(w.betti_z);
    j["z"]["betti_text"] = w.betti_z.render();
    j["z"]["wlp"] = wlp_to_json(w.wlp_z);

    j["zprime"]["points"] = point_set_to_json(w.zprime.points);
    j["zprime"]["jprime"] = monomial_ideal_to_json(w.zprime.jprime);
    j["zprime"]["lifted_points"] = w.zprime.yprime.size();
    j["zprime"]["line_samples"] = w.zprime.points.size() - w.zprime.yprime.size();
    j["zprime"]["F"] = polynomial_to_json(w.zprime.F);
    j["zprime"]["Q"] = polynomial_to_json(w.zprime.Q);
    j["zprime"]["v_lines"] = lines_to_json(w.zprime.v_lines);
    j["zprime"]["iprime_mingens_degree_s_plus_2"] = w.zprime.iprime_mingens_s2;
    j["zprime"]["hilbert"] = sequence_to_json(w.zprime.hilbert);
    j["zprime"]["betti"] = betti_to_json(w.betti_zprime);
    j["zprime"]["betti_text"] = w.betti_zprime.render();
    j["zprime"]["wlp"] = wlp_to_json(w.wlp_zprime);

    json checks = json::array();
    for (const auto& c : w.checks)
        checks.push_back(json{{"name", c.name}, {"pass", c.pass}, {"details", c.details}});
    j["checks"] = checks;
    j["all_checks_pass"] = w.all_checks_pass;

    j["verdict"] = w.verdict.strongly_incomparable ? "strongly_incomparable"
                                                   : "common_descendant_exists";
    if (w.verdict.common_descendant)
        j["common_descendant"] = betti_to_json(*w.verdict.common_descendant);
    j["betti_window"] = w.betti_window;
    j["unverified_claims"] = json::array(
        {"UPP of the general element of the WLP component (out of scope)",
         "UPP failure on the non-WLP component (out of scope)"});
    return j;
}

std::string certificate_bytes(const WitnessPair& w) { return certificate(w).dump(2) + "\n"; }

} // namespace bettipair
