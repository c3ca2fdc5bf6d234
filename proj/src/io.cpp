#include "gwci/io.hpp"

#include <fstream>

namespace gwci {

json order_to_json(const MonomialOrder& ord, const std::vector<std::string>& vars) {
    bool identity = true;
    for (std::size_t i = 0; i < ord.precedence.size(); ++i)
        if (ord.precedence[i] != static_cast<int>(i)) identity = false;
    if (identity) return MonomialOrder::kind_name(ord.kind);
    json j;
    j["kind"] = MonomialOrder::kind_name(ord.kind);
    json prec = json::array();
    for (int v : ord.precedence) prec.push_back(vars[v]);
    j["precedence"] = prec;
    return j;
}

MonomialOrder order_from_json(const json& j, const std::vector<std::string>& vars) {
    if (j.is_string()) return MonomialOrder(MonomialOrder::kind_from_name(j.get<std::string>()),
                                            vars.size());
    if (!j.is_object() || !j.contains("kind"))
        fail(errc::schema_violation, "order must be a name or {kind, precedence}");
    MonomialOrder ord(MonomialOrder::kind_from_name(j["kind"].get<std::string>()), vars.size());
    if (j.contains("precedence")) {
        std::vector<int> prec;
        for (const auto& name : j["precedence"]) {
            auto it = std::find(vars.begin(), vars.end(), name.get<std::string>());
            if (it == vars.end())
                fail(errc::schema_violation, "precedence names unknown variable");
            int v = static_cast<int>(it - vars.begin());
            if (std::find(prec.begin(), prec.end(), v) != prec.end())
                fail(errc::schema_violation, "precedence repeats a variable");
            prec.push_back(v);
        }
        if (prec.size() != vars.size())
            fail(errc::schema_violation, "precedence must list every variable once");
        ord.precedence = prec;
    }
    return ord;
}

json expansion_to_json(const GExpansion& E, const GFrame& F) {
    json out = json::array();
    for (const auto& [N, c] : E.coeffs) {
        json e;
        e["N"] = N;
        e["coeff"] = format_poly(c, F.vars, F.order);
        out.push_back(e);
    }
    return out;
}

json koszul_to_json(const KoszulElement& w, const GFrame& F) {
    json out = json::array();
    for (const auto& [t, c] : w.terms()) {
        json e;
        json dg = json::array();
        for (int k : t) dg.push_back(k + 1);
        e["dg"] = dg;
        e["coeff"] = format_poly(c, F.vars, F.order);
        out.push_back(e);
    }
    return out;
}

KoszulElement koszul_from_json(const json& j, const GFrame& F) {
    KoszulElement w;
    if (!j.is_array()) fail(errc::schema_violation, "koszul element must be an array");
    for (const auto& e : j) {
        std::vector<int> t;
        for (const auto& k : e.at("dg")) {
            int v = k.get<int>();
            if (v < 1 || v > static_cast<int>(F.s()))
                fail(errc::schema_violation, "dg index out of range");
            t.push_back(v - 1);
        }
        w.add(t, parse_poly(e.at("coeff").get<std::string>(), F.vars));
    }
    return w;
}

json total_to_json(const TotalElement& w, const GFrame& F) {
    json out = json::array();
    for (const auto& [key, form] : w.entries) {
        json e;
        e["level"] = key.first;
        e["basis"] = key.second + 1;
        e["form"] = koszul_to_json(form, F);
        out.push_back(e);
    }
    return out;
}

json generator_set_to_json(const GeneratorSet& S, const GFrame& F) {
    json out;
    out["degree"] = S.degree;
    json gens = json::array();
    for (const auto& row : S.generators) {
        if (row.size() == 1) gens.push_back(koszul_to_json(row[0], F));
        else {
            json parts = json::array();
            for (const auto& z : row) parts.push_back(koszul_to_json(z, F));
            gens.push_back(parts);
        }
    }
    out["generators"] = gens;
    out["provenance"] = S.provenance;
    if (S.verification.ran) {
        json v;
        v["cycle"] = S.verification.cycle_ok;
        v["retract_match"] = S.verification.retract_match;
        v["sign"] = S.verification.sign;
        out["verified"] = v;
    }
    return out;
}

json resolution_to_json(const FreeResolution& R, const GFrame& F) {
    json out;
    out["ranks"] = R.ranks;
    json diffs = json::array();
    for (const auto& M : R.diffs) {
        json mat = json::array();
        for (const auto& row : M) {
            json r = json::array();
            for (const Poly& p : row) r.push_back(format_poly(p, F.vars, F.order));
            mat.push_back(r);
        }
        diffs.push_back(mat);
    }
    out["diffs"] = diffs;
    if (R.expansions) {
        json exps = json::array();
        for (const auto& M : *R.expansions) {
            json mat = json::array();
            for (const auto& row : M) {
                json r = json::array();
                for (const GExpansion& E : row) r.push_back(expansion_to_json(E, F));
                mat.push_back(r);
            }
            exps.push_back(mat);
        }
        out["expansions"] = exps;
    }
    return out;
}

json massey_to_json(const MasseyTable& T, const GFrame& F) {
    json out;
    json basis = json::object();
    for (const auto& [l, z] : T.basis) basis[l] = koszul_to_json(z, F);
    out["basis"] = basis;
    json mu = json::array();
    for (const auto& [args, z] : T.mu) {
        json e;
        e["args"] = args;
        e["value"] = koszul_to_json(z, F);
        mu.push_back(e);
    }
    out["mu"] = mu;
    return out;
}

MasseyTable massey_from_json(const json& j, const GFrame& F) {
    MasseyTable T;
    if (!j.contains("basis")) fail(errc::schema_violation, "massey table needs a basis");
    for (const auto& [l, z] : j.at("basis").items()) T.basis.emplace(l, koszul_from_json(z, F));
    if (j.contains("mu")) {
        for (const auto& e : j.at("mu")) {
            std::vector<std::string> args;
            for (const auto& a : e.at("args")) args.push_back(a.get<std::string>());
            T.mu.emplace(std::move(args), koszul_from_json(e.at("value"), F));
        }
    }
    return T;
}

GFrame ProblemFile::frame() const { return make_frame(vars, order, g); }

ProblemFile problem_from_json(const json& j) {
    ProblemFile P;
    if (!j.contains("ring") || !j.at("ring").contains("vars"))
        fail(errc::schema_violation, "problem needs ring.vars");
    for (const auto& v : j.at("ring").at("vars")) P.vars.push_back(v.get<std::string>());
    P.order = j.at("ring").contains("order")
                  ? order_from_json(j.at("ring").at("order"), P.vars)
                  : MonomialOrder(OrderKind::grevlex, P.vars.size());
    if (!j.contains("g")) fail(errc::schema_violation, "problem needs the sequence g");
    for (const auto& s : j.at("g")) P.g.push_back(parse_poly(s.get<std::string>(), P.vars));
    if (j.contains("ideal"))
        for (const auto& s : j.at("ideal"))
            P.ideal.push_back(parse_poly(s.get<std::string>(), P.vars));
    if (j.contains("resolution")) {
        const json& r = j.at("resolution");
        std::vector<int> ranks = r.at("ranks").get<std::vector<int>>();
        std::vector<PolyMatrix> diffs;
        for (const auto& mat : r.at("diffs")) {
            PolyMatrix M;
            for (const auto& row : mat) {
                std::vector<Poly> pr;
                for (const auto& s : row) pr.push_back(parse_poly(s.get<std::string>(), P.vars));
                M.push_back(std::move(pr));
            }
            diffs.push_back(std::move(M));
        }
        P.resolution = load_resolution(std::move(ranks), std::move(diffs));
    }
    if (j.contains("massey")) P.massey = j.at("massey");
    if (j.contains("queries"))
        for (const auto& q : j.at("queries")) P.queries.push_back(q.get<std::string>());
    return P;
}

ProblemFile load_problem(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(errc::schema_violation, "cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        fail(errc::schema_violation, std::string("invalid JSON: ") + e.what());
    }
    return problem_from_json(j);
}

} // namespace gwci
