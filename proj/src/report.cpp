#include "spalg/report.hpp"

#include <functional>

#include "spalg/dim3.hpp"
#include "spalg/ext.hpp"
#include "spalg/twist.hpp"

namespace spalg {

namespace {

using json = nlohmann::ordered_json;

struct CheckLog {
    json checks = json::array();
    json failures = json::array();
    bool ok = true;

    void check(const std::string& name, bool pass, const std::string& detail = "") {
        json e;
        e["name"] = name;
        e["pass"] = pass;
        if (!detail.empty()) e["detail"] = detail;
        checks.push_back(std::move(e));
        ok = ok && pass;
    }

    /// Runs one pipeline stage; an Error becomes a structured failure entry.
    bool stage(const std::string& name, const std::function<void()>& body) {
        try {
            body();
            return true;
        } catch (const Error& e) {
            failures.push_back(json{{"stage", name}, {"error", e.what()}});
            ok = false;
            return false;
        }
    }
};

json rendered_basis(const TensorSubspace& s, const std::vector<std::string>& vars) {
    json out = json::array();
    for (std::size_t r = 0; r < s.rank(); ++r)
        out.push_back(render_tensor(s.basis_tensor(r), vars));
    return out;
}

json echo_input(const ParsedInput& in, const AnalyzeOptions& opts) {
    json e;
    e["field"] = in.field.name();
    e["vars"] = in.vars;
    e["mode"] = opts.relations_mode ? "relations" : "potential";
    if (in.w) e["potential"] = render_tensor(*in.w, in.vars);
    if (!in.relations.empty()) {
        json rels = json::array();
        for (const auto& r : in.relations) rels.push_back(render_tensor(r, in.vars));
        e["relations"] = rels;
    }
    if (!in.automorphisms.empty()) {
        json auts = json::array();
        for (const auto& [name, m] : in.automorphisms)
            auts.push_back(json{{"name", name}, {"matrix", render_matrix(m)}});
        e["automorphisms"] = auts;
    }
    return e;
}

std::string scalar_text(const json& v) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_boolean()) return v.get<bool>() ? "true" : "false";
    return v.dump();
}

}  // namespace

json analyze(const ParsedInput& in, const ParsedInput* twists, const AnalyzeOptions& opts) {
    CheckLog log;
    json report;
    report["input"] = echo_input(in, opts);

    const std::size_t n = in.vars.size();
    std::optional<Potential> w;
    std::optional<Presentation> P;
    std::size_t m = 0, ell = 0;
    std::optional<std::size_t> d;

    json profile;
    profile["n"] = n;

    log.stage("presentation", [&] {
        if (opts.relations_mode) {
            if (in.relations.empty()) fail("relations mode requires rel statements");
            if (!opts.ell) fail("relations mode requires a superpotential degree");
            m = in.relations.front().power();
            for (const auto& r : in.relations)
                if (r.power() != m) fail("relation degrees disagree");
            ell = *opts.ell;
            profile["m"] = m;
            profile["ell"] = ell;
            d = gorenstein_dimension(m, ell);
            P.emplace(n, m, TensorSubspace::span(in.relations));
            w.emplace(extract_superpotential(*P, ell));
            log.check("extraction_round_trip",
                      partial_power(TensorSubspace::span({w->tensor()}), ell - m) == P->R,
                      "derivatives of the extracted potential span the given relations");
        } else {
            if (!in.w) fail("potential mode requires a w statement");
            w.emplace(*in.w);
            m = opts.m;
            ell = w->ell();
            profile["m"] = m;
            profile["ell"] = ell;
            d = gorenstein_dimension(m, ell);
            TensorSubspace R = partial_power(TensorSubspace::span({w->tensor()}), ell - m);
            P.emplace(n, m, R);
            Potential back = extract_superpotential(*P, ell);
            log.check("extraction_round_trip", back.tensor() == w->tensor(),
                      "extracted potential reproduces the input");
            if (!in.relations.empty())
                log.check("declared_relations_match",
                          TensorSubspace::span(in.relations) == P->R,
                          "rel statements span the derived relation space");
        }
    });
    if (d) profile["d"] = *d;
    report["profile"] = profile;

    if (P) report["relations"] = rendered_basis(P->R, in.vars);

    if (w) {
        log.stage("superpotential", [&] {
            json sp;
            sp["w"] = render_tensor(w->tensor(), in.vars);
            sp["is_superpotential"] = is_superpotential(*w);
            TwistingResult tw = twisting_map(*w);
            json tj;
            tj["consistent"] = tw.consistent;
            tj["solution_dim"] = tw.solution_dim;
            if (tw.sigma) tj["sigma"] = render_matrix(*tw.sigma);
            sp["twisting_map"] = tj;
            report["superpotential"] = sp;
            log.check("potential_is_twisted_superpotential",
                      tw.consistent && tw.sigma.has_value());
        });
    }

    std::optional<Matrix> nu;
    if (w && d) {
        log.stage("nakayama", [&] {
            Matrix via_phi = nakayama_via_phi(*w, *d);
            NakayamaQ via_q = nakayama_via_q(*w, *d);
            nu = via_phi;
            json nk;
            nk["nu"] = render_matrix(via_phi);
            nk["q"] = render_matrix(via_q.q);
            bool match = via_phi == via_q.nu;
            nk["methods_match"] = match;
            log.check("nakayama_methods_match", match);
            try {
                Scalar h = check_hdet_nakayama(*w, *d);
                nk["hdet_nu"] = h.str();
                log.check("nakayama_hdet_is_one", true, "hdet(nu) = " + h.str());
            } catch (const Error& e) {
                log.check("nakayama_hdet_is_one", false, e.what());
            }
            report["nakayama"] = nk;
        });
        report["calabi_yau"] = is_calabi_yau(*w, *d);
    }

    std::optional<GradedAlgebra> alg;
    if (P) {
        log.stage("koszul", [&] {
            alg.emplace(*P);
            json kz;
            kz["depth"] = opts.koszul_depth;
            KoszulVerdict kv = alg->check_m_koszul(opts.koszul_depth);
            kz["verified"] = kv.verified;
            if (!kv.verified) {
                kz["fail_degree"] = kv.fail_degree;
                kz["fail_position"] = kv.fail_position;
            }
            kz["hilbert"] = alg->hilbert_function(opts.koszul_depth);
            json rs;
            ResolutionShape shape = alg->resolution_shape(ell);
            rs["top_dim"] = shape.top_dim;
            rs["sub_top_dim"] = shape.sub_top_dim;
            rs["relation_level_dim"] = shape.relation_level_dim;
            rs["consistent"] = shape.all();
            kz["resolution_shape"] = rs;
            report["koszul"] = kz;
            log.check("koszul_certificate", kv.verified,
                      kv.verified ? "complex exact through degree " +
                                        std::to_string(opts.koszul_depth)
                                  : "exactness fails in degree " +
                                        std::to_string(kv.fail_degree) + " at position " +
                                        std::to_string(kv.fail_position));
            log.check("resolution_shape", shape.all());
        });
    }

    std::optional<ExtFrobenius> ext;
    if (alg && w && d) {
        log.stage("ext", [&] {
            ext.emplace(*alg, *w, *d);
            json ej;
            json dims = json::array();
            for (std::size_t i = 0; i <= *d; ++i) dims.push_back(ext->ext_dim(i));
            ej["dims"] = dims;
            bool grams = true;
            for (std::size_t i = 0; i <= *d; ++i) grams = grams && ext->gram(i).is_invertible();
            ej["gram_invertible"] = grams;
            log.check("gram_invertible", grams);
            bool fixes = ext->mu_fixes_unit_and_top();
            ej["mu_fixes_unit_and_top"] = fixes;
            log.check("mu_fixes_unit_and_top", fixes);
            if (nu) {
                bool ident = ext->verify_nakayama_identity(*nu);
                ej["nakayama_identity"] = ident;
                log.check("ext_nakayama_identity", ident,
                          "mu agrees with the shriek of the signed Nakayama map");
            }
            report["ext"] = ej;
        });
    }

    if (!in.automorphisms.empty() && P && w) {
        json auts = json::array();
        bool central_all = true, pairing_all = true;
        bool any_aut = false, pairing_ran = false;
        for (const auto& [name, sigma] : in.automorphisms) {
            log.stage("automorphism " + name, [&, &name = name, &sigma = sigma] {
                json a;
                a["name"] = name;
                AutomorphismCheck ac = is_automorphism(sigma, *P, *w);
                a["is_automorphism"] = ac.verdict;
                if (ac.verdict) {
                    any_aut = true;
                    Scalar h = hdet(sigma, *w);
                    a["hdet"] = h.str();
                    a["det"] = sigma.det().str();
                    if (nu) {
                        bool central = check_centrality(*nu, {sigma});
                        a["commutes_with_nu"] = central;
                        central_all = central_all && central;
                    }
                    if (ext) {
                        bool pr = ext->check_hdet_pairing(sigma, h);
                        a["hdet_pairing"] = pr;
                        pairing_all = pairing_all && pr;
                        pairing_ran = true;
                    }
                }
                auts.push_back(std::move(a));
            });
        }
        report["automorphisms"] = auts;
        if (any_aut && nu) log.check("nu_central", central_all);
        if (pairing_ran) log.check("hdet_pairing", pairing_all);
    }

    if (twists && !twists->automorphisms.empty() && w && P && d && nu) {
        json tws = json::array();
        bool hdet_all = true, criterion_all = true;
        bool criterion_ran = false;
        for (const auto& [name, sigma] : twists->automorphisms) {
            log.stage("twist " + name, [&, &name = name, &sigma = sigma] {
                json t;
                t["name"] = name;
                Scalar h = hdet(sigma, *w);
                t["hdet"] = h.str();
                TwistReport tr = twist_report(*w, *P, *d, *nu, sigma);
                t["w_twisted"] = render_tensor(tr.w_twisted.tensor(), in.vars);
                t["relations_twisted"] = rendered_basis(tr.r_twisted, in.vars);
                t["hdet_preserved"] = tr.hdet_preserved;
                hdet_all = hdet_all && tr.hdet_preserved;
                t["nakayama_twisted"] = render_matrix(tr.nakayama_twisted);
                t["calabi_yau"] = tr.cy_status;
                if (nu->is_identity()) {
                    bool crit = cy_twist_criterion(sigma, *w, *nu);
                    t["cy_twist_criterion"] = crit;
                    criterion_all = criterion_all && crit == tr.cy_status;
                    criterion_ran = true;
                }
                tws.push_back(std::move(t));
            });
        }
        report["twists"] = tws;
        log.check("twist_hdet_preserved", hdet_all);
        if (criterion_ran)
            log.check("cy_twist_criterion_matches", criterion_all,
                      "verdict agrees with the twisted potential's status");
    }

    if (w && P && d && n == 3 && m == 2 && ell == 3) {
        log.stage("dim3", [&] {
            json d3;
            CubicDecomposition cd = cubic_decomposition(w->tensor());
            d3["mu_coefficient"] = cd.mu_coeff.str();
            HdetObstruction ob = hdet_obstruction(*P, *w, is_calabi_yau(*w, *d));
            d3["c_in_sym3"] = ob.c_in_sym3;
            d3["r_in_sym2"] = ob.r_in_sym2;
            switch (ob.verdict) {
                case ObstructionVerdict::possible: d3["hdet_neq_det"] = "possible"; break;
                case ObstructionVerdict::impossible: d3["hdet_neq_det"] = "impossible"; break;
                case ObstructionVerdict::undetermined: d3["hdet_neq_det"] = "undetermined"; break;
            }
            if (ob.witness) {
                d3["witness"] = render_matrix(*ob.witness);
                d3["witness_hdet"] = ob.witness_hdet->str();
                d3["witness_det"] = ob.witness_det->str();
                log.check("dim3_witness",
                          ob.witness_hdet->is_one() && *ob.witness_det == -in.field.one(),
                          "transposition with hdet 1 and det -1");
            }
            report["dim3"] = d3;
            log.check("dim3_decomposition", true,
                      "c(w) splits as symmetric part plus " + cd.mu_coeff.str() +
                          " times the alternating basis");
        });
    }

    report["checks"] = log.checks;
    report["failures"] = log.failures;
    report["all_checks_passed"] = log.ok;
    return report;
}

std::string render_text(const json& report) {
    std::string out;
    std::function<void(const json&, std::size_t)> walk = [&](const json& node, std::size_t ind) {
        std::string pad(2 * ind, ' ');
        if (node.is_object()) {
            for (const auto& [key, value] : node.items()) {
                if (value.is_object() || value.is_array()) {
                    out += pad + key + ":\n";
                    walk(value, ind + 1);
                } else {
                    out += pad + key + ": " + scalar_text(value) + "\n";
                }
            }
        } else if (node.is_array()) {
            for (const auto& value : node) {
                if (value.is_object() || value.is_array()) {
                    out += pad + "-\n";
                    walk(value, ind + 1);
                } else {
                    out += pad + "- " + scalar_text(value) + "\n";
                }
            }
        }
    };
    walk(report, 0);
    return out;
}

}  // namespace spalg
