#pragma once

// Command-line front end. run() never touches the process streams; the
// caller prints document() to stdout and summary to stderr.

#include <gordian/serialize.hpp>

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <functional>
#include <string>
#include <vector>

namespace gordian {

inline constexpr const char* version = "0.1.0";

struct CommandResult {
    enum class Status { ok, domain_error, usage_error };
    Status status = Status::ok;
    json payload;
    json provenance;
    std::string message;  // error text, empty on success
    std::string summary;  // human readable

    int exit_code() const { return static_cast<int>(status); }

    /// The single structured document printed for an invocation.
    json document() const {
        json doc{{"status", status == Status::ok ? "ok" : "error"}, {"provenance", provenance}};
        if (status == Status::ok) {
            doc["payload"] = payload;
        } else {
            doc["error"] = {{"kind", status == Status::usage_error ? "usage" : "domain"}, {"message", message}};
            if (!payload.is_null()) doc["payload"] = payload;
        }
        return doc;
    }
};

namespace detail {

inline std::vector<std::string> split_list(const std::string& text) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : text) {
        if (c == ',' || c == ' ') {
            if (!cur.empty()) out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    if (!cur.empty()) out.push_back(cur);
    return out;
}

inline std::vector<FormalKnot> read_knot_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    std::vector<FormalKnot> out;
    std::string line;
    while (std::getline(in, line)) {
        if (std::all_of(line.begin(), line.end(), [](unsigned char c) { return std::isspace(c); })) continue;
        out.push_back(parse_knot(line));
    }
    return out;
}

}  // namespace detail

/// Runs one invocation; args excludes the program name.
inline CommandResult run(const std::vector<std::string>& args) {
    CommandResult result;
    result.provenance = {{"command", args}, {"version", version}};

    CLI::App app{"Exact computations on normalized polynomials, signatures and the gordian graph", "gordian"};
    app.require_subcommand(1);
    app.set_help_flag("-h,--help", "Print this help and exit");

    std::function<void()> action;
    auto ok = [&](json payload, std::string summary) {
        result.payload = std::move(payload);
        result.summary = std::move(summary);
    };

    // poly
    auto* poly = app.add_subcommand("poly", "Laurent polynomial operations");
    poly->require_subcommand(1);
    std::string poly_text, coeff_text, half_text, p_text, theta_text, ps_text, signs_text;

    auto* normalize_cmd = poly->add_subcommand("normalize", "Normalized representative of +-t^k d");
    normalize_cmd->add_option("--poly", poly_text, "Laurent polynomial in t")->required();
    normalize_cmd->callback([&] {
        action = [&] {
            const LaurentPoly d = LaurentPoly::parse(poly_text);
            const LaurentPoly n = normalize(d);
            ok({{"poly", n.to_string()}, {"was_normalized", is_normalized(d)}}, "normalized: " + n.to_string());
        };
    });
    auto* basis_cmd = poly->add_subcommand("basis", "Basis coefficients of a normalized polynomial");
    basis_cmd->add_option("--poly", poly_text, "normalized Laurent polynomial")->required();
    basis_cmd->callback([&] {
        action = [&] {
            const BasisCoeffs a = to_basis(LaurentPoly::parse(poly_text));
            json vals = json::array();
            for (const auto& v : a.values()) vals.push_back(v.str());
            ok({{"coeffs", a.to_string()}, {"values", vals}}, "basis coefficients: (" + a.to_string() + ")");
        };
    });
    auto* frombasis_cmd = poly->add_subcommand("frombasis", "Polynomial with the given basis coefficients");
    frombasis_cmd->add_option("--coeffs", coeff_text, "comma separated a_0,a_1,...")->required()->allow_extra_args(false);
    frombasis_cmd->callback([&] {
        action = [&] {
            const LaurentPoly d = from_basis(BasisCoeffs::parse(coeff_text));
            ok(d.to_string(), "polynomial: " + d.to_string());
        };
    });
    auto* linking_cmd = poly->add_subcommand("linking", "Linking form with the given basis coefficients");
    linking_cmd->add_option("--coeffs", coeff_text, "comma separated a_0,a_1,...")->required();
    linking_cmd->callback([&] {
        action = [&] {
            const HalfLaurent f = linking_form(BasisCoeffs::parse(coeff_text));
            ok(f.to_string(), "linking form: " + f.to_string());
        };
    });
    auto* sym_cmd = poly->add_subcommand("symmetrize", "f(t) + f(1/t) for a half-integral f");
    sym_cmd->add_option("--half", half_text, "Laurent polynomial with half-integer coefficients")->required();
    sym_cmd->callback([&] {
        action = [&] {
            const LaurentPoly d = symmetrize(HalfLaurent::parse(half_text));
            ok(d.to_string(), "symmetrized: " + d.to_string());
        };
    });
    auto* cheb_cmd = poly->add_subcommand("chebyshev", "Q with Q(z + 1/z) = d(z)");
    cheb_cmd->add_option("--poly", poly_text, "symmetric Laurent polynomial")->required();
    cheb_cmd->callback([&] {
        action = [&] {
            const IntPoly q = to_chebyshev(LaurentPoly::parse(poly_text));
            ok(q.to_string(), "Q(x) = " + q.to_string());
        };
    });
    auto* torus_cmd = poly->add_subcommand("torus", "The torus polynomial D_p");
    torus_cmd->add_option("--p", p_text, "odd integer >= 3")->required();
    torus_cmd->callback([&] {
        action = [&] {
            const LaurentPoly d = torus_poly(parse_integer(p_text));
            ok(d.to_string(), "D_" + p_text + " = " + d.to_string());
        };
    });

    // circle
    auto* arcs_cmd = app.add_subcommand("arcs", "Arcs where D_p is negative");
    arcs_cmd->add_option("--p", p_text, "odd integer >= 3")->required();
    arcs_cmd->callback([&] {
        action = [&] {
            const ArcSet s = arcs_of_generator(parse_integer(p_text));
            ok(to_json(s), "A_" + p_text + " = " + s.to_string() + ", measure " + fraction_string(s.measure()));
        };
    });
    auto* sign_cmd = app.add_subcommand("sign-at", "Sign of D_p at a turn angle");
    sign_cmd->add_option("--p", p_text, "odd integer >= 3")->required();
    sign_cmd->add_option("--theta", theta_text, "turn angle num/den")->required();
    sign_cmd->callback([&] {
        action = [&] {
            const TurnAngle th = TurnAngle::parse(theta_text);
            const int s = generator_sign_at(parse_integer(p_text), th);
            ok({{"p", p_text}, {"theta", to_json(th)}, {"sign", s}}, "sign of D_" + p_text + " at " + th.to_string() + ": " + std::to_string(s));
        };
    });
    auto* witness_cmd = app.add_subcommand("witness", "A turn angle realizing a sign pattern");
    witness_cmd->add_option("--ps", ps_text, "comma separated increasing odd integers")->required();
    witness_cmd->add_option("--signs", signs_text, "comma separated +1/-1, one per p")->required();
    witness_cmd->callback([&] {
        action = [&] {
            std::vector<Integer> ps;
            for (const auto& s : detail::split_list(ps_text)) ps.push_back(parse_integer(s));
            std::vector<int> signs;
            for (const auto& s : detail::split_list(signs_text)) {
                const Integer v = parse_integer(s);
                if (v != 1 && v != -1) throw ParseError("signs must be +1 or -1, got " + s);
                signs.push_back(static_cast<int>(v));
            }
            const TurnAngle th = independence_witness(ps, signs);
            json checks = json::array();
            for (const auto& p : ps) checks.push_back({{"p", p.str()}, {"sign", generator_sign_at(p, th)}});
            ok({{"theta", to_json(th)}, {"signs", checks}}, "witness theta = " + th.to_string());
        };
    });

    // signature
    auto* sig_cmd = app.add_subcommand("signature", "Signature step function of a normalized polynomial");
    sig_cmd->add_option("--poly", poly_text, "normalized Laurent polynomial")->required();
    sig_cmd->callback([&] {
        action = [&] {
            const StepFun f = signature_of_poly(LaurentPoly::parse(poly_text));
            ok(to_json(f), "signature with " + std::to_string(f.breakpoints().size()) + " jumps");
        };
    });
    auto* iso_cmd = app.add_subcommand("rootiso", "Isolate the circle roots of a symmetric polynomial");
    iso_cmd->add_option("--poly", poly_text, "symmetric Laurent polynomial")->required();
    iso_cmd->callback([&] {
        action = [&] {
            const RootIsolation r = isolate_circle_roots(LaurentPoly::parse(poly_text));
            ok(to_json(r), std::to_string(r.circle_root_count()) + " circle roots");
        };
    });
    auto* gap_cmd = app.add_subcommand("gap", "Minimal gap between circle roots");
    gap_cmd->add_option("--poly", poly_text, "normalized Laurent polynomial")->required();
    gap_cmd->callback([&] {
        action = [&] {
            const RootGap g = min_root_gap(LaurentPoly::parse(poly_text));
            ok({{"gap", fraction_string(g.value)}, {"exact", g.exact}},
               std::string(g.exact ? "minimal root gap " : "minimal root gap at least ") + fraction_string(g.value) + " turn");
        };
    });
    std::string a_text, b_text;
    auto* bounds_cmd = app.add_subcommand("bounds", "Gordian distance bounds between two formal knots");
    bounds_cmd->add_option("--a", a_text, "knot, e.g. K3 # !K15")->required();
    bounds_cmd->add_option("--b", b_text, "knot")->required();
    bounds_cmd->callback([&] {
        action = [&] {
            const FormalKnot a = parse_knot(a_text);
            const FormalKnot b = parse_knot(b_text);
            const SignatureGap g = signature_gap(a, b);
            const Integer lo = ceil(Rational(g.sup, 2));
            const Integer hi = unknotting_upper_bound(a, b);
            json p{{"a", to_json(a)}, {"b", to_json(b)}, {"signature_gap", g.sup.str()}, {"lower", lo.str()}, {"upper", hi.str()}};
            if (g.theta) p["theta"] = to_json(*g.theta);
            ok(p, "distance in [" + lo.str() + ", " + hi.str() + "]");
        };
    });

    // gordian graph
    std::string vertex_text, x_text, y_text;
    auto* embed_cmd = app.add_subcommand("embed", "Knot attached to a binary tree vertex");
    embed_cmd->add_option("--vertex", vertex_text, "path such as 0.1.1, or root")->required();
    embed_cmd->callback([&] {
        action = [&] {
            const TreeVertex v = TreeVertex::parse(vertex_text);
            const FormalKnot k = phi(v);
            json edges = json::array();
            for (std::size_t d = 1; d <= v.depth(); ++d) edges.push_back(edge_number(v.prefix(d)).str());
            ok({{"vertex", to_json(v)}, {"edge_numbers", edges}, {"knot", to_json(k)}, {"text", k.to_string()}},
               "phi(" + v.to_string() + ") = " + k.to_string());
        };
    });
    auto* certify_cmd = app.add_subcommand("certify", "Distance certificate for two tree vertices");
    certify_cmd->add_option("--x", x_text, "tree vertex path")->required();
    certify_cmd->add_option("--y", y_text, "tree vertex path")->required();
    certify_cmd->callback([&] {
        action = [&] {
            const IsometryCertificate c = certify_pair(TreeVertex::parse(x_text), TreeVertex::parse(y_text));
            ok(to_json(c), "d_T = " + std::to_string(c.tree_distance()) + ", gordian distance in [" + c.lower.str() + ", " + c.upper.str() +
                               "]" + (c.valid ? "" : " (INVALID)"));
        };
    });
    std::size_t depth = 0;
    auto* all_cmd = app.add_subcommand("certify-all", "Certificates for every pair of vertices up to a depth");
    all_cmd->add_option("--depth", depth, "tree depth")->required()->check(CLI::Range(0, 8));
    all_cmd->callback([&] {
        action = [&] {
            const auto vs = vertices_to_depth(depth);
            json certs = json::array();
            std::size_t valid = 0;
            for (std::size_t i = 0; i < vs.size(); ++i) {
                for (std::size_t j = i + 1; j < vs.size(); ++j) {
                    const IsometryCertificate c = certify_pair(vs[i], vs[j]);
                    if (c.valid && validate_certificate(c)) ++valid;
                    certs.push_back(to_json(c));
                }
            }
            const std::size_t total = certs.size();
            ok({{"depth", depth}, {"vertices", vs.size()}, {"pairs", total}, {"all_valid", valid == total}, {"certificates", std::move(certs)}},
               std::to_string(valid) + "/" + std::to_string(total) + " certificates valid");
            if (valid != total) {
                result.status = CommandResult::Status::domain_error;
                result.message = "some certificates failed validation";
            }
        };
    });
    std::string path_file, forbidden_file;
    auto* detour_cmd = app.add_subcommand("detour", "Detour a path of knots around forbidden knots");
    detour_cmd->add_option("--path", path_file, "file with one knot per line")->required();
    detour_cmd->add_option("--forbidden", forbidden_file, "file with one knot per line")->required();
    detour_cmd->callback([&] {
        action = [&] {
            const DetourPlan plan = build_detour(detail::read_knot_file(path_file), detail::read_knot_file(forbidden_file));
            const DetourReport report = check_detour(plan);
            ok({{"plan", to_json(plan)}, {"verified", report.ok}, {"report", to_json(report)}},
               "detour through K" + plan.detour_p.str() + ": " + (report.ok ? "verified" : "NOT verified"));
            if (!report.ok) {
                result.status = CommandResult::Status::domain_error;
                result.message = "detour failed verification";
            }
        };
    });

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const CLI::App* deepest = &app;
        while (!deepest->get_subcommands().empty()) deepest = deepest->get_subcommands().front();
        if (dynamic_cast<const CLI::CallForHelp*>(&e) != nullptr || dynamic_cast<const CLI::CallForAllHelp*>(&e) != nullptr) {
            result.payload = {{"help", deepest->help()}};
            result.summary = deepest->help();
            return result;
        }
        result.status = CommandResult::Status::usage_error;
        result.message = std::string(e.what()) + "\n" + deepest->help();
        result.summary = "usage error: " + std::string(e.what());
        return result;
    } catch (const std::exception& e) {
        result.status = CommandResult::Status::domain_error;
        result.message = e.what();
        result.summary = "error: " + result.message;
        return result;
    }
    if (!action) {
        result.status = CommandResult::Status::usage_error;
        result.message = app.help();
        result.summary = "usage error: no command";
        return result;
    }
    try {
        action();
    } catch (const ParseError& e) {
        result = CommandResult{CommandResult::Status::usage_error, nullptr, result.provenance, e.what(), std::string("usage error: ") + e.what()};
    } catch (const std::exception& e) {
        result = CommandResult{CommandResult::Status::domain_error, nullptr, result.provenance, e.what(), std::string("error: ") + e.what()};
    }
    return result;
}

}  // namespace gordian
