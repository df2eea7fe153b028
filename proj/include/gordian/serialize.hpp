#pragma once

// JSON forms of every value the CLI emits. Fractions are `num/den` strings and
// integers are decimal strings, so documents never lose precision and can be
// re-read by an independent checker.

#include <gordian/gordian_graph.hpp>

#include <nlohmann/json.hpp>

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

namespace gordian {

using nlohmann::json;

inline json to_json(const Integer& v) { return v.str(); }
inline Integer integer_from_json(const json& j) {
    if (j.is_number_integer()) return Integer(j.get<long long>());
    return parse_integer(j.get<std::string>());
}

inline json to_json(const TurnAngle& t) { return t.to_string(); }
inline TurnAngle turn_from_json(const json& j) { return TurnAngle::parse(j.get<std::string>()); }

inline json to_json(const ArcSet& s) {
    json arcs = json::array();
    for (const auto& a : s.arcs()) arcs.push_back(json::array({a.lo.to_string(), a.hi.to_string()}));
    return {{"text", s.to_string()}, {"full", s.is_full()}, {"arcs", arcs}, {"measure", fraction_string(s.measure())}};
}
inline ArcSet arcset_from_json(const json& j) { return ArcSet::parse(j.at("text").get<std::string>()); }

inline json to_json(const IsolatingInterval& iv) { return json::array({compact_string(iv.lo), compact_string(iv.hi)}); }
inline IsolatingInterval interval_from_json(const json& j) {
    return {parse_rational(j.at(0).get<std::string>()), parse_rational(j.at(1).get<std::string>())};
}

inline json to_json(const Breakpoint& b) {
    if (b.is_exact()) return b.exact().to_string();
    const auto& a = b.algebraic();
    return {{"poly", a.poly.to_string()}, {"x", to_json(a.x)}, {"half", a.upper ? "upper" : "lower"}};
}
inline Breakpoint breakpoint_from_json(const json& j) {
    if (j.is_string()) return TurnAngle::parse(j.get<std::string>());
    AlgebraicTurn a{IntPoly::parse(j.at("poly").get<std::string>()), interval_from_json(j.at("x")), j.at("half").get<std::string>() == "upper"};
    return a;
}

inline json to_json(const StepFun& f) {
    json bps = json::array();
    for (const auto& b : f.breakpoints()) bps.push_back(to_json(b));
    json vals = json::array();
    for (const auto& v : f.values()) vals.push_back(to_json(v));
    return {{"breakpoints", bps}, {"values", vals}};
}
inline StepFun stepfun_from_json(const json& j) {
    std::vector<Breakpoint> bps;
    for (const auto& b : j.at("breakpoints")) bps.push_back(breakpoint_from_json(b));
    std::vector<Integer> vals;
    for (const auto& v : j.at("values")) vals.push_back(integer_from_json(v));
    return StepFun(std::move(bps), std::move(vals));
}

inline json to_json(const RootIsolation& r) {
    json ivs = json::array();
    for (const auto& iv : r.intervals) ivs.push_back(to_json(iv));
    return {{"chebyshev", r.q.to_string()},
            {"intervals", ivs},
            {"sign_pattern", r.sign_pattern},
            {"circle_roots", r.circle_root_count()}};
}

inline json to_json(const FormalKnot& k) {
    json out = json::array();
    for (const auto& [g, m] : k.generators()) out.push_back({{"p", g.p.str()}, {"mirrored", g.mirrored}, {"multiplicity", m}});
    return out;
}
inline FormalKnot knot_from_json(const json& j) {
    FormalKnot k;
    for (const auto& rec : j) {
        const unsigned long m = rec.contains("multiplicity") ? rec.at("multiplicity").get<unsigned long>() : 1;
        k = connected_sum(k, FormalKnot::generator(integer_from_json(rec.at("p")), rec.value("mirrored", false), m));
    }
    return k;
}

/// A knot as a JSON record list, or in the short form `K3 # !K15` (`U` for
/// the unknot, `!` marking a mirror image).
inline FormalKnot parse_knot(std::string_view text) {
    std::string s;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) s.push_back(c);
    }
    if (s.empty()) throw ParseError("empty knot description");
    if (s.front() == '[') {
        try {
            return knot_from_json(json::parse(s));
        } catch (const json::exception& e) {
            throw ParseError(std::string("bad knot record list: ") + e.what());
        }
    }
    FormalKnot k;
    std::size_t start = 0;
    while (true) {
        auto hash = s.find('#', start);
        std::string tok = s.substr(start, hash - start);
        if (tok != "U") {
            bool mirrored = false;
            if (!tok.empty() && tok.front() == '!') {
                mirrored = true;
                tok.erase(0, 1);
            }
            if (tok.size() < 2 || tok.front() != 'K') throw ParseError("bad generator '" + tok + "'");
            k = connected_sum(k, FormalKnot::generator(parse_integer(tok.substr(1)), mirrored));
        }
        if (hash == std::string::npos) break;
        start = hash + 1;
    }
    return k;
}

inline json to_json(const TreeVertex& v) { return v.to_string(); }

inline json to_json(const IsometryCertificate& c) {
    json cons = json::array();
    for (const auto& w : c.constraints) cons.push_back({{"index", w.index}, {"p", w.p.str()}, {"sign", w.sign}});
    return {{"x", to_json(c.x)},
            {"y", to_json(c.y)},
            {"meet", to_json(c.meet)},
            {"k", c.k},
            {"l", c.l},
            {"tree_distance", c.tree_distance()},
            {"constraints", cons},
            {"theta", to_json(c.theta)},
            {"sigma_x", to_json(c.sigma_x)},
            {"sigma_y", to_json(c.sigma_y)},
            {"difference", to_json(c.difference)},
            {"claimed_difference", to_json(c.claimed_difference)},
            {"claim_reproduced", c.claim_reproduced},
            {"lower", to_json(c.lower)},
            {"upper", to_json(c.upper)},
            {"valid", c.valid},
            {"axiom", "a connected sum with one gordian generator is one crossing change"}};
}
inline IsometryCertificate certificate_from_json(const json& j) {
    IsometryCertificate c;
    c.x = TreeVertex::parse(j.at("x").get<std::string>());
    c.y = TreeVertex::parse(j.at("y").get<std::string>());
    c.meet = TreeVertex::parse(j.at("meet").get<std::string>());
    c.k = j.at("k").get<unsigned long>();
    c.l = j.at("l").get<unsigned long>();
    for (const auto& w : j.at("constraints")) {
        c.constraints.push_back({w.at("index").get<unsigned long>(), integer_from_json(w.at("p")), w.at("sign").get<int>()});
    }
    c.theta = turn_from_json(j.at("theta"));
    c.sigma_x = integer_from_json(j.at("sigma_x"));
    c.sigma_y = integer_from_json(j.at("sigma_y"));
    c.difference = integer_from_json(j.at("difference"));
    c.claimed_difference = integer_from_json(j.at("claimed_difference"));
    c.claim_reproduced = j.at("claim_reproduced").get<bool>();
    c.lower = integer_from_json(j.at("lower"));
    c.upper = integer_from_json(j.at("upper"));
    c.valid = j.at("valid").get<bool>();
    return c;
}

inline json to_json(const DistinctnessCertificate& c) {
    if (c.kind == DistinctnessCertificate::Kind::signature) {
        return {{"kind", "signature"}, {"theta", to_json(*c.theta)}, {"sigma_a", to_json(c.sigma_a)}, {"sigma_b", to_json(c.sigma_b)}};
    }
    json fa = json::array();
    json fb = json::array();
    for (const auto& p : c.factors_a) fa.push_back(p.str());
    for (const auto& p : c.factors_b) fb.push_back(p.str());
    return {{"kind", "alexander"}, {"factors_a", fa}, {"factors_b", fb}};
}

inline json knot_list_to_json(const std::vector<FormalKnot>& ks) {
    json out = json::array();
    for (const auto& k : ks) out.push_back(to_json(k));
    return out;
}

inline std::vector<FormalKnot> knot_list_from_json(const json& j) {
    std::vector<FormalKnot> out;
    for (const auto& k : j) out.push_back(knot_from_json(k));
    return out;
}

inline json to_json(const DetourPlan& p) {
    return {{"forbidden", knot_list_to_json(p.forbidden)},
            {"path", knot_list_to_json(p.path)},
            {"detour_p", p.detour_p.str()},
            {"detoured_path", knot_list_to_json(p.detoured_path)}};
}
inline DetourPlan plan_from_json(const json& j) {
    return {knot_list_from_json(j.at("forbidden")), knot_list_from_json(j.at("path")), integer_from_json(j.at("detour_p")),
            knot_list_from_json(j.at("detoured_path"))};
}

inline json to_json(const DetourReport& r) {
    json checks = json::array();
    for (const auto& c : r.checks) checks.push_back({{"entry", c.entry}, {"forbidden", c.forbidden}, {"certificate", to_json(c.certificate)}});
    return {{"ok", r.ok}, {"issues", r.issues}, {"checks", checks}};
}

}  // namespace gordian
