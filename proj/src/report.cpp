#include "polar/report.hpp"

#include <fstream>
#include <sstream>

#include "polar/errors.hpp"

namespace polar {

using nlohmann::json;

// --- problem loading -----------------------------------------------------

namespace {

Rational rational_from_json(const json& v, const std::string& at) {
    if (v.is_number_integer()) return Rational(static_cast<long>(v.get<long long>()));
    if (v.is_string()) {
        try {
            return rational_from_string(v.get<std::string>());
        } catch (const ParseError&) {
            throw ValidationError("malformed rational '" + v.get<std::string>() + "'", at);
        }
    }
    throw ValidationError("expected an integer or a rational string", at);
}

Polynomial poly_from_json(const json& v, const CtxPtr& ctx, const std::string& at) {
    if (!v.is_string()) throw ValidationError("expected a polynomial string", at);
    try {
        return parse_poly(v.get<std::string>(), ctx);
    } catch (const ParseError& e) {
        throw ValidationError(std::string("polynomial parse error: ") + e.what(), at);
    }
}

}  // namespace

ProblemSpec problem_from_json(const json& doc) {
    if (!doc.is_object()) throw ValidationError("problem document must be an object", "");
    for (const char* key : {"variables", "shift", "strata", "f", "g"})
        if (!doc.contains(key))
            throw ValidationError(std::string("missing required field '") + key + "'",
                                  std::string("/") + key);

    ProblemSpec spec;
    if (!doc["variables"].is_array() || doc["variables"].empty())
        throw ValidationError("variables must be a nonempty array", "/variables");
    std::vector<std::string> names;
    for (const auto& v : doc["variables"]) {
        if (!v.is_string()) throw ValidationError("variable names must be strings", "/variables");
        names.push_back(v.get<std::string>());
    }
    spec.ambient = VarContext::make(std::move(names));
    spec.doubled = VarContext::make_doubled(spec.ambient);

    if (doc.contains("space")) {
        const json& sp = doc["space"];
        if (!sp.is_object() || !sp.contains("components"))
            throw ValidationError("space must be {components:[...]}", "/space");
        std::size_t i = 0;
        for (const auto& c : sp["components"])
            spec.space_components.push_back(
                poly_from_json(c, spec.ambient, "/space/components/" + std::to_string(i++)));
    }

    if (!doc["shift"].is_number_integer())
        throw ValidationError("shift must be an integer", "/shift");
    spec.shift = doc["shift"].get<int>();

    if (!doc["strata"].is_array() || doc["strata"].empty())
        throw ValidationError("strata must be a nonempty array", "/strata");
    std::size_t si = 0;
    for (const auto& st : doc["strata"]) {
        const std::string at = "/strata/" + std::to_string(si++);
        if (!st.is_object()) throw ValidationError("stratum must be an object", at);
        for (const char* key : {"name", "closure", "dim"})
            if (!st.contains(key))
                throw ValidationError(std::string("missing stratum field '") + key + "'",
                                      at + "/" + key);
        StratumSpec out;
        out.name = st["name"].get<std::string>();
        std::size_t ci = 0;
        for (const auto& c : st["closure"])
            out.closure.push_back(
                poly_from_json(c, spec.ambient, at + "/closure/" + std::to_string(ci++)));
        if (st.contains("minus"))
            for (const auto& m : st["minus"]) out.minus.push_back(m.get<std::string>());
        if (!st["dim"].is_number_integer())
            throw ValidationError("dim must be an integer", at + "/dim");
        out.dim = st["dim"].get<int>();
        if (st.contains("test_point")) {
            const json& tp = st["test_point"];
            if (!tp.is_array() || tp.size() != spec.ambient->arity())
                throw ValidationError("test_point must list one rational per variable",
                                      at + "/test_point");
            RationalPoint p{spec.ambient, {}};
            std::size_t pi = 0;
            for (const auto& c : tp)
                p.coords.push_back(
                    rational_from_json(c, at + "/test_point/" + std::to_string(pi++)));
            out.test_point = std::move(p);
        }
        if (st.contains("morse")) {
            std::vector<MorseEntry> entries;
            std::size_t mi = 0;
            for (const auto& m : st["morse"]) {
                const std::string mat = at + "/morse/" + std::to_string(mi++);
                if (!m.is_object() || !m.contains("degree") || !m.contains("rank"))
                    throw ValidationError("morse entries need degree and rank", mat);
                std::vector<Integer> torsion;
                if (m.contains("torsion"))
                    for (const auto& d : m["torsion"])
                        torsion.push_back(Integer(static_cast<long>(d.get<long long>())));
                entries.push_back(
                    {m["degree"].get<int>(),
                     FGAbelianGroup(m["rank"].get<unsigned>(), std::move(torsion))});
            }
            out.morse_override = std::move(entries);
        }
        spec.strata.push_back(std::move(out));
    }

    spec.f = poly_from_json(doc["f"], spec.ambient, "/f");
    spec.g = poly_from_json(doc["g"], spec.ambient, "/g");

    if (doc.contains("candidates")) {
        std::size_t ci = 0;
        for (const auto& cand : doc["candidates"]) {
            const std::string at = "/candidates/" + std::to_string(ci++);
            if (!cand.is_array() || cand.empty())
                throw ValidationError("candidate must be a nonempty generator list", at);
            std::vector<Polynomial> gens;
            std::size_t gi = 0;
            for (const auto& g : cand)
                gens.push_back(poly_from_json(g, spec.ambient, at + "/" + std::to_string(gi++)));
            Ideal P(spec.ambient, std::move(gens));
            auto d = krull_dim(P);
            if (!d) throw ValidationError("candidate is the unit ideal", at);
            spec.candidates.add(P, *d);
        }
    }

    validate_problem(spec);
    return spec;
}

ProblemSpec load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw Error("cannot open problem file '" + path + "'");
    json doc;
    try {
        doc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw ValidationError(std::string("invalid JSON: ") + e.what(), "");
    }
    return problem_from_json(doc);
}

// --- JSON rendering ------------------------------------------------------

json group_json(const FGAbelianGroup& g) {
    json torsion = json::array();
    for (const auto& d : g.torsion()) torsion.push_back(d.get_str());
    return json{{"rank", g.rank()}, {"torsion", torsion}};
}

json ideal_json(const Ideal& I, const MonomialOrder& ord) {
    json gens = json::array();
    for (const auto& g : I.groebner(ord)) gens.push_back(g.str());
    return gens;
}

json cycle_json(const GradedEnrichedCycle& e, const MonomialOrder& ord) {
    // one entry per support, with all of its degrees
    std::map<std::string, json> by_support;
    for (const auto& [k, cyc] : e.by_degree()) {
        for (const auto& comp : cyc.components()) {
            std::string key = comp.support.str();
            auto it = by_support.find(key);
            if (it == by_support.end()) {
                json entry{{"generators", ideal_json(comp.support, ord)},
                           {"coeff_by_degree", json::object()}};
                it = by_support.emplace(key, std::move(entry)).first;
            }
            it->second["coeff_by_degree"][std::to_string(k)] = group_json(comp.group);
        }
    }
    json out = json::array();
    for (auto& [key, entry] : by_support) out.push_back(std::move(entry));
    return out;
}

namespace {

json morse_json(const std::vector<MorseEntry>& morse) {
    json out = json::array();
    for (const auto& e : morse) {
        json entry = group_json(e.group);
        entry["degree"] = e.degree;
        out.push_back(std::move(entry));
    }
    return out;
}

json assumptions_json() {
    return json::array({"stratification is trusted to be Whitney; condition (b) is not verified",
                        "gap-sheaf identities are asserted at the cycle level, not the scheme "
                        "level"});
}

json table_json(const std::map<int, FGAbelianGroup>& table) {
    json out = json::object();
    for (const auto& [k, g] : table) out[std::to_string(k)] = group_json(g);
    return out;
}

}  // namespace

json gecc_json(const GeccBuilder& b, const MonomialOrder& ord) {
    json strata = json::object();
    for (const auto& [name, info] : b.stratum_info()) {
        json entry{{"conormal", ideal_json(info.conormal.ideal, ord)},
                   {"morse", morse_json(info.morse)},
                   {"morse_source", info.morse_source},
                   {"saturation_index", info.conormal.sat_index}};
        if (info.transverse_mult) entry["transverse_multiplicity"] = *info.transverse_mult;
        if (info.link_form) entry["link_form"] = *info.link_form;
        strata[name] = std::move(entry);
    }
    return json{{"gecc", cycle_json(b.gecc(), ord)},
                {"strata", strata},
                {"assumptions", assumptions_json()}};
}

json polar_json(const PolarResult& pr, const MonomialOrder& ord) {
    json traces = json::array();
    for (const auto& tr : pr.traces) {
        json entry{{"stratum", tr.stratum}, {"used", tr.used}};
        if (!tr.used) entry["skip_reason"] = tr.skip_reason;
        if (tr.substituted) {
            entry["projected"] = ideal_json(*tr.substituted, ord);
            entry["empty"] = tr.substituted->is_unit();
        }
        if (tr.dim) entry["dim"] = *tr.dim;
        traces.push_back(std::move(entry));
    }
    json set = json::array();
    for (const auto& P : pr.set_components) set.push_back(ideal_json(P, ord));
    json out{{"curve", cycle_json(pr.curve, ord)},
             {"curve_ok", pr.curve_ok},
             {"origin_in_set", pr.origin_in_set},
             {"set_components", set},
             {"traces", traces},
             {"assumptions", assumptions_json()}};
    if (!pr.curve_ok) out["failure"] = pr.failure;
    return out;
}

json main1_json(const Main1Report& rep, const MonomialOrder& ord) {
    return json{{"polar", polar_json(rep.polar, ord)},
                {"verdicts",
                 json{{"support", rep.verdict_supp},
                      {"f", rep.verdict_f},
                      {"fg", rep.verdict_fg},
                      {"hold", rep.verdicts_hold}}},
                {"phipsi_containment", rep.phipsi_ok},
                {"stalk", table_json(rep.stalk)}};
}

json main2_json(const PairReport& rep, const MonomialOrder& ord) {
    json excluded = json::array();
    for (const auto& P : rep.excluded) excluded.push_back(ideal_json(P, ord));
    return json{{"gamma_hat", cycle_json(rep.gamma_hat, ord)},
                {"excluded", excluded},
                {"pair_with_f", table_json(rep.with_f)},
                {"pair_with_g", table_json(rep.with_g)}};
}

json emptiness_json(const EmptinessReport& rep) {
    json trials = json::array();
    for (const auto& tr : rep.trials)
        trials.push_back(json{{"form", tr.form.str()},
                              {"origin_in_polar", tr.origin_in_polar},
                              {"verdict_f", tr.verdict_f},
                              {"verdict_form", tr.verdict_l},
                              {"stalk_zero", tr.stalk_zero}});
    return json{{"trials", trials},
                {"exists_form_missing_origin", rep.exists_missing_origin},
                {"generic_form_misses_origin", rep.generic_missing_origin},
                {"generic_stalk_zero", rep.generic_stalk_zero},
                {"genericity_failure", rep.genericity_failure}};
}

json family_json(const FamilyReport& rep, const MonomialOrder&) {
    json samples = json::array();
    for (const auto& s : rep.samples) {
        json points = json::array();
        for (const auto& blk : s.points) {
            json coords = json::array();
            for (const auto& c : blk.point.coords) coords.push_back(c.get_str());
            points.push_back(json{{"point", coords}, {"groups", table_json(blk.groups)}});
        }
        samples.push_back(json{{"a", s.a.get_str()},
                               {"points", points},
                               {"unsplit_residual", s.unsplit_residual},
                               {"rank_match", s.rank_match}});
    }
    return json{{"verdict", rep.verdict},
                {"at_zero", table_json(rep.at_zero)},
                {"samples", samples}};
}

// --- human-readable rendering --------------------------------------------

namespace {

std::string ideal_text(const Ideal& I, const MonomialOrder& ord) {
    const auto& gb = I.groebner(ord);
    if (gb.empty()) return "V(0)";
    std::string out = "V(";
    for (std::size_t i = 0; i < gb.size(); ++i) {
        if (i) out += ", ";
        out += gb[i].str();
    }
    return out + ")";
}

std::string table_text(const std::map<int, FGAbelianGroup>& table, const std::string& indent) {
    if (table.empty()) return indent + "all degrees: 0\n";
    std::string out;
    for (const auto& [k, g] : table)
        out += indent + "degree " + std::to_string(k) + ": " + g.str() + "\n";
    return out;
}

}  // namespace

std::string cycle_text(const GradedEnrichedCycle& e, const MonomialOrder& ord) {
    if (e.is_zero()) return "  0\n";
    std::string out;
    for (const auto& [k, cyc] : e.by_degree()) {
        out += "  degree " + std::to_string(k) + ":\n";
        for (const auto& comp : cyc.components())
            out += "    " + comp.group.str() + " [" + ideal_text(comp.support, ord) + "]\n";
    }
    return out;
}

std::string gecc_text(const GeccBuilder& b, const MonomialOrder& ord) {
    std::string out = "graded enriched characteristic cycle:\n";
    out += cycle_text(b.gecc(), ord);
    out += "strata:\n";
    for (const auto& [name, info] : b.stratum_info()) {
        out += "  " + name + ": " + ideal_text(info.conormal.ideal, ord) + "\n";
        out += "    morse source: " + info.morse_source;
        if (info.transverse_mult)
            out += ", transverse multiplicity " + std::to_string(*info.transverse_mult);
        if (info.link_form) out += ", link certified by " + *info.link_form;
        out += "\n";
        for (const auto& e : info.morse)
            out += "    degree " + std::to_string(e.degree) + ": " + e.group.str() + "\n";
    }
    return out;
}

std::string polar_text(const PolarResult& pr, const MonomialOrder& ord) {
    std::string out = "relative polar curve:\n" + cycle_text(pr.curve, ord);
    out += "polar set components:\n";
    if (pr.set_components.empty()) out += "  (empty)\n";
    for (const auto& P : pr.set_components) out += "  " + ideal_text(P, ord) + "\n";
    out += std::string("origin in polar set: ") + (pr.origin_in_set ? "yes" : "no") + "\n";
    if (!pr.curve_ok) out += "POLAR_NOT_CURVE: " + pr.failure + "\n";
    return out;
}

std::string main1_text(const Main1Report& rep, const MonomialOrder& ord) {
    std::string out = polar_text(rep.polar, ord);
    out += std::string("dim verdicts (support, f, fg): ") + (rep.verdict_supp ? "T" : "F") +
           (rep.verdict_f ? "T" : "F") + (rep.verdict_fg ? "T" : "F") + "\n";
    out += std::string("containment of V(f) in V(g) on the polar set near 0: ") +
           (rep.phipsi_ok ? "holds" : "fails") + "\n";
    if (rep.verdicts_hold) {
        out += "stalk groups (polar . V(f))_0:\n" + table_text(rep.stalk, "  ");
    } else {
        out += "verdicts FALSE: no stalk table\n";
    }
    return out;
}

std::string main2_text(const PairReport& rep, const MonomialOrder& ord) {
    std::string out = "components off V(g):\n" + cycle_text(rep.gamma_hat, ord);
    if (!rep.excluded.empty()) {
        out += "excluded components inside V(g):\n";
        for (const auto& P : rep.excluded) out += "  " + ideal_text(P, ord) + "\n";
    }
    out += "pair numbers against V(f):\n" + table_text(rep.with_f, "  ");
    out += "pair numbers against V(g):\n" + table_text(rep.with_g, "  ");
    return out;
}

std::string emptiness_text(const EmptinessReport& rep) {
    std::string out = "sampled linear forms:\n";
    for (const auto& tr : rep.trials) {
        out += "  " + tr.form.str() + ": origin " +
               (tr.origin_in_polar ? "IN" : "NOT in") + " polar set, dim verdicts " +
               (tr.verdict_f ? "T" : "F") + (tr.verdict_l ? "T" : "F") + ", stalk " +
               (tr.stalk_zero ? "zero" : "nonzero") + "\n";
    }
    out += std::string("some form misses the origin: ") +
           (rep.exists_missing_origin ? "yes" : "no") + "\n";
    out += std::string("generic form misses the origin: ") +
           (rep.generic_missing_origin ? "yes" : "no") + "\n";
    out += std::string("generic stalk vanishes: ") + (rep.generic_stalk_zero ? "yes" : "no") +
           "\n";
    if (rep.genericity_failure) out += "GENERICITY_FAILURE: trials disagree\n";
    return out;
}

std::string family_text(const FamilyReport& rep, const MonomialOrder& ord) {
    (void)ord;
    std::string out =
        std::string("slice verdict dim_0(V(g) meet polar) <= 0: ") + (rep.verdict ? "T" : "F") + "\n";
    if (!rep.verdict) return out + "verdict FALSE: no additivity table\n";
    out += "groups at the origin:\n" + table_text(rep.at_zero, "  ");
    for (const auto& s : rep.samples) {
        out += "sample a = " + s.a.get_str() + ":\n";
        for (const auto& blk : s.points) {
            out += "  at " + blk.point.str() + ":\n" + table_text(blk.groups, "    ");
        }
        if (s.unsplit_residual)
            out += "  UNSPLIT residual rank " + std::to_string(s.unsplit_residual) + "\n";
        out += std::string("  rank additivity: ") + (s.rank_match ? "holds" : "FAILS") + "\n";
    }
    return out;
}

}  // namespace polar
