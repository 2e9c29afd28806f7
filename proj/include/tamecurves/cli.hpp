/*
   Copyright 2026 The tamecurves Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef TAMECURVES_CLI_HPP
#define TAMECURVES_CLI_HPP

// Command-line front end. Needs CLI11.hpp on the include path.

#include <iostream>
#include <map>
#include <optional>
#include <set>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>

#include "tamecurves.hpp"

namespace tamecurves::cli {

enum class Format { Text, Structured };

struct CommandRequest {
    std::string subcommand;
    FieldPtr field;
    CurvePtr curve;
    std::map<std::string, FuncElem> functions;  // f, g, a, w
    std::optional<Place> place;
    std::optional<Divisor> bound;
    std::optional<GammaElem> gamma;
    std::optional<Elem> c;
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    Format format = Format::Text;
    long n = 0, trials = 0, cutoff = 2, attempts = 256;
    bool symbol = false, no_lift = false;
};

struct CommandReport {
    std::string subcommand;
    std::vector<std::pair<std::string, std::string>> payload;
    std::vector<std::pair<std::string, std::string>> diagnostics;
    int status = 0;
    std::string error_kind, error_message;

    void put(std::string k, std::string v) { payload.emplace_back(std::move(k), std::move(v)); }
};

inline const std::vector<std::string>& subcommands() {
    static const std::vector<std::string> names{"sy",          "decompose", "orbit", "pseudotame", "tame-lift",
                                                "ramify",      "rh-check",  "belyi", "conic",      "conic-point",
                                                "as-solve",    "ec-ordinary", "ec-supersingular", "sieve", "zeta"};
    return names;
}

namespace detail {

inline std::string b2s(bool b) { return b ? "true" : "false"; }

inline std::string q2s(const Rational& r) {
    std::string s = numerator(r).str();
    if (denominator(r) != 1) s += "/" + denominator(r).str();
    return s;
}

struct RawArgs {
    std::string field = "GF(2)", curve = "P1", format = "text";
    std::map<std::string, std::string> text;  // f, g, a, w, place, bound, gamma, c
    std::optional<std::uint64_t> seed;
    unsigned workers = 1;
    long n = 0, trials = 0, cutoff = 2, attempts = 256;
    bool symbol = false, no_lift = false;
};

// Which algebraic arguments each subcommand takes; a trailing '!' marks required ones.
inline const std::map<std::string, std::vector<std::string>>& argument_table() {
    static const std::map<std::string, std::vector<std::string>> t{
        {"sy", {"f!", "g!"}},
        {"decompose", {"f!", "g!"}},
        {"orbit", {"f!", "g", "gamma"}},
        {"pseudotame", {"f!", "place"}},
        {"tame-lift", {"f!"}},
        {"ramify", {"f!"}},
        {"rh-check", {"f!"}},
        {"belyi", {}},
        {"conic", {"g!", "a!"}},
        {"conic-point", {"g!", "a!", "bound"}},
        {"as-solve", {"w!", "bound"}},
        {"ec-ordinary", {}},
        {"ec-supersingular", {"c"}},
        {"sieve", {}},
        {"zeta", {}},
    };
    return t;
}

inline const std::map<std::string, std::string>& descriptions() {
    static const std::map<std::string, std::string> d{
        {"sy", "symbol SY(f, g) as h dx"},
        {"decompose", "quartic decomposition of f over g"},
        {"orbit", "orbit test for f and g, or the image of f under --gamma"},
        {"pseudotame", "pseudotameness of f, globally or at --place"},
        {"tame-lift", "tame element of the orbit of a pseudotame f"},
        {"ramify", "ramification profile of f"},
        {"rh-check", "Riemann-Hurwitz check for f"},
        {"belyi", "tame map branched over {0, 1, inf}"},
        {"conic", "conic fiber for g and a"},
        {"conic-point", "rational point on the conic fiber"},
        {"as-solve", "solve z^2 + z = w in the function field"},
        {"ec-ordinary", "ordinary elliptic curve analysis"},
        {"ec-supersingular", "supersingular elliptic curve analysis"},
        {"sieve", "random simply ramified maps and density statistics"},
        {"zeta", "point counts and zeta values"},
    };
    return d;
}

inline const std::set<std::string>& seeded() {
    static const std::set<std::string> s{"tame-lift", "belyi", "conic-point", "ec-ordinary", "ec-supersingular",
                                         "sieve"};
    return s;
}

}  // namespace detail

/// Parses and validates argv (without the program name).
inline CommandRequest parse_request(const std::vector<std::string>& argv) {
    CLI::App app{"Tame morphisms, symbols and conic fibers over finite fields", "tamecurves"};
    app.require_subcommand(1, 1);
    detail::RawArgs raw;
    std::map<std::string, CLI::App*> subs;
    for (const std::string& name : subcommands()) {
        CLI::App* sc = app.add_subcommand(name, detail::descriptions().at(name));
        subs[name] = sc;
        sc->add_option("--field", raw.field, "GF(p^m; mod=<poly in w>; gen=w)");
        sc->add_option("--curve", raw.curve, "P1 | EO(a=..., b=...) | ES(a=..., b=...) | W(A=..., B=...)");
        sc->add_option("--format", raw.format, "text | structured")->check(CLI::IsMember({"text", "structured"}));
        sc->add_option("--seed", raw.seed, "random seed");
        sc->add_option("--workers", raw.workers, "worker threads")->check(CLI::Range(1u, 256u));
        for (std::string a : detail::argument_table().at(name)) {
            if (a.back() == '!') a.pop_back();
            sc->add_option("--" + a, raw.text[a], a);
        }
        if (name == "conic" || name == "conic-point") sc->add_flag("--symbol", raw.symbol, "use b^2 = da/dg");
        if (name == "ec-ordinary" || name == "ec-supersingular") sc->add_flag("--no-lift", raw.no_lift, "skip the tame lift");
        if (name == "tame-lift") sc->add_option("--attempts", raw.attempts, "retry budget")->check(CLI::PositiveNumber);
        if (name == "sieve") {
            sc->add_option("--n", raw.n, "pole order bound")->required();
            sc->add_option("--trials", raw.trials, "trial count")->required()->check(CLI::NonNegativeNumber);
        }
        if (name == "sieve" || name == "zeta") sc->add_option("--cutoff", raw.cutoff, "place degree cutoff");
    }

    std::vector<const char*> cargv{"tamecurves"};
    for (const auto& s : argv) cargv.push_back(s.c_str());
    try {
        app.parse(static_cast<int>(cargv.size()), cargv.data());
    } catch (const CLI::CallForHelp&) {
        throw UsageError(app.help());
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    CommandRequest req;
    for (const auto& [name, sc] : subs)
        if (sc->parsed()) req.subcommand = name;
    req.format = raw.format == "structured" ? Format::Structured : Format::Text;
    req.seed = raw.seed;
    req.workers = raw.workers;
    req.n = raw.n;
    req.trials = raw.trials;
    req.cutoff = raw.cutoff;
    req.attempts = raw.attempts;
    req.symbol = raw.symbol;
    req.no_lift = raw.no_lift;

    std::vector<std::string> problems;
    auto attempt = [&](const std::string& what, auto&& fn) {
        try {
            fn();
        } catch (const Error& e) {
            problems.push_back(what + ": " + e.what());
        }
    };
    attempt("--field (grammar GF(p^m; mod=<poly in w>; gen=w))", [&] { req.field = parse_field(raw.field); });
    if (req.field)
        attempt("--curve (grammar P1 | EO(a=<elem>, b=<elem>) | ES(a=<elem>, b=<elem>) | W(A=<elem>, B=<elem>))",
                [&] { req.curve = parse_curve(req.field, raw.curve); });
    if (req.curve) {
        for (const auto& [key, val] : raw.text) {
            if (val.empty()) continue;
            const std::string label = "--" + key;
            if (key == "place")
                attempt(label + " (grammar (minpoly; x0, y0) | inf)", [&] { req.place = parse_place(req.curve, val); });
            else if (key == "bound")
                attempt(label + " (grammar n*place + ...)", [&] { req.bound = parse_divisor(req.curve, val); });
            else if (key == "gamma")
                attempt(label + " (grammar [[a, b], [c, d]])", [&] { req.gamma = parse_gamma(req.curve, val); });
            else if (key == "c")
                attempt(label + " (field element)", [&] { req.c = parse_elem(*req.field, val).raw(); });
            else
                attempt(label + " (function grammar in x, y)",
                        [&] { req.functions.emplace(key, parse_function(req.curve, val)); });
        }
    }
    for (std::string a : detail::argument_table().at(req.subcommand))
        if (a.back() == '!') {
            a.pop_back();
            if (raw.text[a].empty()) problems.push_back("--" + a + " is required");
        }
    if (req.subcommand == "orbit" && raw.text["g"].empty() && raw.text["gamma"].empty())
        problems.push_back("orbit needs --g or --gamma");
    if (detail::seeded().count(req.subcommand) && !req.seed)
        problems.push_back(req.subcommand + " is randomized and requires --seed");
    if (!problems.empty()) {
        std::string msg;
        for (const auto& p : problems) msg += (msg.empty() ? "" : "\n") + p;
        throw UsageError(msg);
    }
    return req;
}

namespace detail {

inline void put_point(CommandReport& r, const std::string& key, const ConicPoint& p) {
    r.put(key + ".t1", to_string(p.t1));
    r.put(key + ".t2", to_string(p.t2));
    r.put(key + ".t3", to_string(p.t3));
}

inline void put_profile(CommandReport& r, const RamificationProfile& prof) {
    r.put("degree", std::to_string(prof.degree));
    for (std::size_t i = 0; i < prof.entries.size(); ++i) {
        const auto& e = prof.entries[i];
        const std::string k = "entry[" + std::to_string(i) + "]";
        r.put(k + ".place", to_string(e.place));
        r.put(k + ".e", std::to_string(e.e));
        r.put(k + ".wild", b2s(e.wild));
        r.put(k + ".image", to_string(e.image));
    }
}

inline void put_ec(CommandReport& r, const EcReport& e, bool ordinary) {
    r.put("symbol", to_string(e.symbol));
    r.put("symbol_ok", b2s(e.symbol_ok));
    if (ordinary) r.put("decomposition_ok", b2s(e.decomposition_ok));
    r.put("split_ok", b2s(e.split_ok));
    r.put("regular_ok", b2s(e.regular_ok));
    r.put("conic.g", to_string(e.conic.g));
    r.put("conic.b", to_string(e.conic.b));
    r.put("conic_ok", b2s(e.conic_ok));
    if (!ordinary) r.put("simplified_ok", b2s(e.simplified_ok));
    if (ordinary) {
        r.put("trace_cases", "Tr(a)=" + std::to_string(e.traces[0]) + ", Tr(b)=" + std::to_string(e.traces[1]) +
                                 ", Tr(a+b)=" + std::to_string(e.traces[2]));
        if (e.uv_index) r.put("uv_index", std::to_string(*e.uv_index));
    }
    if (e.point) put_point(r, "point", *e.point);
    r.put("point_ok", b2s(e.point_ok));
    if (e.pseudotame) r.put("pseudotame", to_string(*e.pseudotame));
    if (e.tame) {
        r.put("tame", to_string(*e.tame));
        r.put("tame_degree", std::to_string(function_degree(*e.tame)));
    }
    r.put("tame_ok", b2s(e.tame_ok));
}

inline TameLiftOptions lift_options(const CommandRequest& q) {
    TameLiftOptions o;
    o.seed = q.seed.value_or(1);
    o.attempts = static_cast<int>(q.attempts);
    return o;
}

}  // namespace detail

/// Dispatches a validated request.
inline CommandReport run(const CommandRequest& q) {
    CommandReport r;
    r.subcommand = q.subcommand;
    const CurvePtr& X = q.curve;
    const Field& k = *q.field;
    auto fn = [&](const std::string& key) -> const FuncElem& { return q.functions.at(key); };
    auto has = [&](const std::string& key) { return q.functions.count(key) > 0; };
    try {
        const std::string& s = q.subcommand;
        if (s == "sy") {
            r.put("symbol", to_string(sy(fn("f"), fn("g"))));
        } else if (s == "decompose") {
            QuarticDecomp d = quartic_decompose(fn("f"), fn("g"));
            r.put("f0", to_string(d.f0));
            r.put("f1", to_string(d.f1));
            r.put("f2", to_string(d.f2));
            r.put("f3", to_string(d.f3));
            r.put("g", to_string(d.g));
            r.put("recomposes", detail::b2s(d.recompose() == fn("f")));
        } else if (s == "orbit") {
            if (q.gamma) {
                FuncElem img = gamma_apply(*q.gamma, fn("f"));
                r.put("image", to_string(img));
                r.put("same_orbit", detail::b2s(same_orbit(fn("f"), img)));
            }
            if (has("g")) {
                r.put("symbol", to_string(sy(fn("f"), fn("g"))));
                r.put("same_orbit", detail::b2s(same_orbit(fn("f"), fn("g"))));
            }
        } else if (s == "pseudotame") {
            if (q.place) {
                r.put("place", to_string(*q.place));
                r.put("pseudotame", detail::b2s(pseudotame_at(fn("f"), *q.place)));
            } else {
                const FuncElem& f = fn("f");
                r.put("pseudotame", detail::b2s(is_pseudotame(f)));
                if (!f.derivative().is_zero()) r.put("tame", detail::b2s(is_tame(f)));
                std::size_t i = 0;
                for (const auto& e : ramification_profile(f).entries) {
                    if (!e.wild) continue;
                    const std::string key = "wild[" + std::to_string(i++) + "]";
                    r.put(key + ".place", to_string(e.place));
                    r.put(key + ".pseudotame", detail::b2s(pseudotame_at(f, e.place)));
                }
            }
        } else if (s == "tame-lift") {
            const FuncElem& f = fn("f");
            FuncElem g = pseudotame_to_tame(f, detail::lift_options(q));
            r.put("tame", to_string(g));
            r.put("degree", std::to_string(function_degree(g)));
            r.put("is_tame", detail::b2s(is_tame(g)));
            r.put("same_orbit", detail::b2s(same_orbit(f, g)));
            r.put("holds", detail::b2s(riemann_hurwitz_check(g).holds));
        } else if (s == "ramify") {
            RamificationProfile prof = ramification_profile(fn("f"));
            detail::put_profile(r, prof);
            bool wild = false;
            for (const auto& e : prof.entries) wild = wild || e.wild;
            r.put("tame", detail::b2s(!wild));
        } else if (s == "rh-check") {
            RiemannHurwitz rh = riemann_hurwitz_check(fn("f"));
            r.put("holds", detail::b2s(rh.holds));
            r.put("lhs", std::to_string(rh.lhs));
            r.put("rhs", std::to_string(rh.rhs));
            if (rh.D) r.put("D", to_string(*rh.D));
            if (rh.d_error) r.put("d_error", *rh.d_error);
        } else if (s == "belyi") {
            BelyiOptions o;
            o.seed = *q.seed;
            BelyiResult b = belyi_construct(X, o);
            r.put("map", to_string(b.map));
            r.put("degree", std::to_string(function_degree(b.map)));
            r.put("base", to_string(b.base));
            r.put("q_prime", std::to_string(b.q_prime));
            for (std::size_t i = 0; i < b.branch.size(); ++i)
                r.put("branch[" + std::to_string(i) + "]", to_string(b.branch[i]));
            r.put("tame", detail::b2s(b.tame));
            r.diagnostics.emplace_back("base_from_search", detail::b2s(b.base_from_search));
        } else if (s == "conic" || s == "conic-point") {
            ConicFiber C = q.symbol ? symbol_conic(fn("g"), fn("a")) : conic_fiber(fn("g"), fn("a"));
            r.put("conic.g", to_string(C.g));
            r.put("conic.b", to_string(C.b));
            if (s == "conic-point") {
                ConicSearchOptions o;
                o.seed = *q.seed;
                o.bound = q.bound;
                auto pt = conic_point_search(C, o);
                detail::put_point(r, "point", *pt);
                r.put("on_conic", detail::b2s(conic_contains(C, *pt)));
                if (q.symbol) {
                    FuncElem f = point_to_function(C, *pt);
                    r.put("f", to_string(f));
                    r.put("verified", detail::b2s(sy(f, fn("g")) == Differential::d(fn("a"))));
                }
            }
        } else if (s == "as-solve") {
            AsSolution a = as_solve_funcfield(fn("w"), q.bound);
            r.put("z", a.z ? to_string(*a.z) : "absent");
            r.put("conclusive", detail::b2s(a.conclusive));
            r.put("forced", to_string(a.forced));
        } else if (s == "ec-ordinary") {
            if (X->kind() != CurveKind::Ordinary) throw InvalidCurve("ec-ordinary needs --curve EO(a=..., b=...)");
            EcReport e = ec_ordinary_analysis(q.field, X->param_a(), X->param_b(), !q.no_lift, detail::lift_options(q));
            detail::put_ec(r, e, true);
        } else if (s == "ec-supersingular") {
            if (X->kind() != CurveKind::Supersingular)
                throw InvalidCurve("ec-supersingular needs --curve ES(a=..., b=...)");
            const Elem c = q.c.value_or(0);
            r.put("c", to_string(k, c));
            EcReport e = ec_supersingular_analysis(q.field, X->param_a(), X->param_b(), c, !q.no_lift,
                                                   detail::lift_options(q));
            detail::put_ec(r, e, false);
        } else if (s == "sieve") {
            SieveOptions o;
            o.seed = *q.seed;
            o.workers = q.workers;
            o.cutoff = static_cast<int>(q.cutoff);
            auto [f, st] = random_simply_ramified_search(X, static_cast<int>(q.n), static_cast<std::uint64_t>(q.trials), o);
            r.put("trials", std::to_string(st.trials));
            r.put("successes", std::to_string(st.successes));
            r.put("empirical", detail::q2s(st.empirical));
            r.put("predicted", detail::q2s(st.predicted));
            r.put("zeta_limit", detail::q2s(st.zeta_limit));
            r.put("cutoff", std::to_string(st.cutoff));
            r.put("f", f ? to_string(*f) : "absent");
        } else if (s == "zeta") {
            const FrobeniusData fd = frobenius_data(X);
            r.put("q", std::to_string(fd.q));
            r.put("genus", std::to_string(fd.genus));
            if (fd.genus == 1) r.put("trace", std::to_string(fd.a));
            r.put("points[1]", point_count(fd, 1).str());
            r.put("points[2]", point_count(fd, 2).str());
            r.put("zeta_inv_sq", detail::q2s(zeta_inv_sq(X)));
            r.put("predicted", detail::q2s(predicted_density(X, static_cast<int>(q.cutoff))));
            r.put("cutoff", std::to_string(q.cutoff));
        }
    } catch (const Error& e) {
        r.status = 1;
        r.error_kind = e.kind();
        r.error_message = e.what();
    }
    return r;
}

inline void render(const CommandReport& r, Format fmt, std::ostream& out) {
    const char* sep = fmt == Format::Structured ? "=" : ": ";
    out << "command" << sep << r.subcommand << "\n";
    for (const auto& [k, v] : r.payload) out << k << sep << v << "\n";
    for (const auto& [k, v] : r.diagnostics) out << "diagnostic." << k << sep << v << "\n";
    if (r.status) {
        out << "error" << sep << r.error_kind << "\n";
        out << "message" << sep << r.error_message << "\n";
    }
}

/// Full CLI: returns the exit status.
inline int main_entry(const std::vector<std::string>& argv, std::ostream& out, std::ostream& err) {
    CommandRequest q;
    try {
        q = parse_request(argv);
    } catch (const UsageError& e) {
        const std::string msg = e.what();
        const bool help = msg.find("Usage:") != std::string::npos && msg.find("--help") != std::string::npos &&
                          (std::find(argv.begin(), argv.end(), "--help") != argv.end() ||
                           std::find(argv.begin(), argv.end(), "-h") != argv.end());
        if (help) {
            out << msg.substr(std::string("UsageError: ").size());
            return 0;
        }
        err << msg << "\n";
        return 2;
    }
    CommandReport r = run(q);
    render(r, q.format, out);
    return r.status;
}

}  // namespace tamecurves::cli

#endif  // TAMECURVES_CLI_HPP
