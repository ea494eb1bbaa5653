#include "lgcy/report.hpp"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "lgcy/higgs.hpp"
#include "lgcy/monodromy.hpp"
#include "lgcy/oscillatory.hpp"
#include "lgcy/parse.hpp"

namespace lgcy {

namespace {

struct CheckSink {
    bool all_pass = true;
    Json failed = Json::array();

    void add(Json& section, const std::string& name, bool pass, const std::string& lhs,
             const std::string& rhs) {
        Json entry;
        entry["name"] = name;
        entry["pass"] = pass;
        entry["lhs"] = lhs;
        entry["rhs"] = rhs;
        section["checks"].push_back(entry);
        if (!pass) {
            all_pass = false;
            failed.push_back(name);
        }
    }
};

Json gauss_json(const GaussRational& g) {
    Json j;
    j["re"] = g.real().str();
    j["im"] = g.imag().str();
    return j;
}

std::string complex_str(const std::complex<double>& z) {
    std::ostringstream os;
    os.precision(15);
    os << z.real() << (z.imag() < 0 ? "" : "+") << z.imag() << "i";
    return os.str();
}

Json spec_echo(const SingularitySpec& spec, const WeightSystem& w) {
    Json j;
    j["variables"] = spec.variables;
    j["degree"] = spec.degree;
    j["f"] = spec.f_text;
    Json ws = Json::array();
    for (const auto& q : w.weights()) ws.push_back(q.str());
    j["weights"] = ws;
    j["deformations"] = spec.deformations;
    Json pts = Json::array();
    for (const auto& p : spec.points) {
        Json row = Json::array();
        for (const auto& c : p) row.push_back(c.str());
        pts.push_back(row);
    }
    j["points"] = pts;
    return j;
}

Json milnor_section(const MilnorRing& ring, const ResiduePairing& rp,
                    const std::vector<std::pair<std::string, DeformationClass>>& deform_classes,
                    CheckSink& sink) {
    Json j;
    j["mu"] = ring.mu;
    Json dims;
    for (const auto& [deg, dim] : ring.graded_dims) dims[std::to_string(deg)] = dim;
    j["graded_dims"] = dims;
    j["nondegenerate"] = true;
    j["no_mixed_quadratic_term"] = ring.no_mixed_quadratic_term;
    j["central_charge"] = ring.weights.central_charge().str();
    Json cls = Json::array();
    for (const auto& [text, dc] : deform_classes) {
        Json e;
        e["phi"] = text;
        e["class"] = to_string(dc.kind);
        e["parameter_weight"] = dc.parameter_weight.str();
        cls.push_back(e);
    }
    j["deformation_classes"] = cls;

    std::uint64_t total = 0;
    for (const auto& [deg, dim] : ring.graded_dims) total += dim;
    sink.add(j, "milnor.graded_dims_sum_to_mu", total == ring.mu, std::to_string(total),
             std::to_string(ring.mu));
    Rational hess_res = rp.grothendieck_residue(hessian_determinant(ring.f));
    sink.add(j, "milnor.residue_of_hessian_equals_mu", hess_res == Rational(long(ring.mu)),
             hess_res.str(), std::to_string(ring.mu));
    return j;
}

Json moduli_section(const MilnorRing& ring, CheckSink& sink) {
    const int n = static_cast<int>(ring.f.nvars()) - 2;
    const std::int64_t d = ring.weights.common_degree();
    ModuliReport rep = moduli_numbers(n, d, ring);
    Json j;
    j["n"] = rep.n;
    j["d"] = rep.d;
    j["formula_value"] = rep.formula_value.str();
    j["marginal_dimension"] = rep.marginal_dimension;
    j["match"] = rep.match;
    j["k3_exception"] = rep.k3_exception;
    if (rep.k3_exception) {
        j["complex_deformation_dim"] = *rep.complex_deformation_dim;
        j["annotation"] =
            "K3: algebraic deformation dimension 19 vs complex deformation dimension 20";
    }
    sink.add(j, "moduli.count_match", rep.match, rep.formula_value.str(),
             std::to_string(rep.marginal_dimension));
    return j;
}

Json steenbrink_section(const MilnorRing& ring, CheckSink& sink) {
    SteenbrinkReport rep = steenbrink_levels(ring);
    Json j;
    std::map<Rational, std::uint64_t> mult;
    for (const auto& e : rep.entries) mult[e.level] += 1;
    Json levels;
    for (const auto& [h, c] : mult) levels[h.str()] = c;
    j["level_multiset"] = levels;
    j["dim_w_lower"] = rep.dim_w_lower;
    j["dim_w_quotient"] = rep.dim_w_quotient;

    sink.add(j, "steenbrink.dims_sum_to_mu",
             rep.dim_w_lower + rep.dim_w_quotient == ring.mu,
             std::to_string(rep.dim_w_lower + rep.dim_w_quotient), std::to_string(ring.mu));
    // h integral iff deg === -N (mod d)
    const long N = long(ring.f.nvars());
    const long d = ring.weights.common_degree();
    bool cong = true;
    for (const auto& e : rep.entries)
        if (e.integral != ((long(e.monomial.degree()) + N) % d == 0)) cong = false;
    sink.add(j, "steenbrink.integrality_congruence_deg_mod_d", cong, "h in Z",
             "deg == -N mod d");
    return j;
}

Json monodromy_section(const MilnorRing& ring, const GradedSubring* sub, CheckSink& sink) {
    MonodromySpectrum spec = monodromy_spectrum(ring);
    Json j;
    std::map<Rational, std::uint64_t> mult;
    for (const auto& e : spec.entries) mult[e.exponent] += 1;
    Json ms;
    for (const auto& [v, c] : mult) ms[v.str()] = c;
    j["exponent_multiset"] = ms;
    j["invariant_dimension"] = spec.invariant_dimension;
    Rational refl = spectrum_duality_point(ring);
    j["duality_reflection_point"] = refl.str();
    j["central_charge"] = ring.weights.central_charge().str();

    sink.add(j, "monodromy.exponent_multiset_duality",
             spectrum_symmetric_about(spec, refl), "multiset", refl.str() + " - multiset");
    if (ring.weights.is_homogeneous()) {
        const long N = long(ring.f.nvars());
        const long d = ring.weights.common_degree();
        bool cong = true;
        for (const auto& e : spec.entries)
            if (e.invariant != ((long(e.monomial.degree()) + N) % d == 0)) cong = false;
        sink.add(j, "monodromy.invariance_congruence", cong, "angle == 0",
                 "deg == -N mod d");
    }
    if (sub) {
        InvarianceReport inv = invariance_realness_report(ring, *sub);
        Json ij;
        ij["invariant_dim"] = inv.invariant_dim;
        ij["subring_dim"] = inv.subring_dim;
        ij["realness_note"] = inv.realness_note;
        j["invariance"] = ij;
        sink.add(j, "monodromy.invariant_set_equals_graded_subring", inv.sets_equal,
                 std::to_string(inv.invariant_dim), std::to_string(inv.subring_dim));
    }
    return j;
}

Json hodge_section(const GradedSubring& sub, const ResiduePairing& rp,
                   const AnalysisOptions& opt, CheckSink& sink) {
    Json j;
    const int n = sub.n();
    j["n"] = n;
    j["d"] = sub.d();
    Json levels = Json::array();
    for (int a = 0; a <= n; ++a) {
        Json l;
        l["a"] = a;
        l["degree"] = sub.d() * a;
        l["dim"] = sub.level(a).size();
        l["hodge_bidegree"] = Json::array({n - a, a});
        levels.push_back(l);
    }
    j["levels"] = levels;
    HodgeNumbers hn = hodge_numbers(sub);
    j["hodge_numbers"] = hn.h;
    std::uint64_t bn = 0;
    for (auto x : hn.h) bn += x;
    j["primitive_betti"] = bn;
    j["socle_degree"] = *rp.socle_total_degree();
    j["pairing_convention"] = ResiduePairing::convention;

    Json constants;
    Json cas = Json::array(), kas = Json::array();
    for (int a = 0; a <= n; ++a) {
        cas.push_back(cech_constant(n, a).str());
        kas.push_back(pairing_constant(a, n - a).str());
    }
    constants["c_a"] = cas;
    constants["k_a_nminusa"] = kas;
    constants["k_N"] = gauss_json(lg_pairing_constant(n + 2));
    j["constants"] = constants;

    sink.add(j, "hodge.hodge_numbers_palindromic", hn.palindromic(), "h^{p,q}", "h^{q,p}");
    sink.add(j, "hodge.subring_closure", sub.closure_verified(), "products reduce into levels",
             "certified");

    bool chain = true;
    for (int a = 0; a < n; ++a)
        if (!sign_chain_holds(n, a)) chain = false;
    sink.add(j, "hodge.sign_chain", chain, "-(a+1) c_{a+1}/c_a", "(-1)^a");

    FrobeniusReport frob =
        verify_frobenius_isomorphism(sub, rp, opt.seed, opt.frobenius_triples);
    Json fj;
    fj["sampled"] = frob.sampled;
    fj["triples_checked"] = frob.triples_checked;
    Json blocks = Json::array();
    for (const auto& blk : frob.blocks) {
        Json b;
        b["a"] = blk.a;
        b["b"] = blk.b;
        b["transport_scalar"] = gauss_json(blk.transport_scalar);
        b["predicted_i_pow_k_ab"] = gauss_json(blk.predicted_scalar);
        b["block_constant"] = blk.block_constant;
        b["matches_formula"] = blk.matches_formula;
        blocks.push_back(b);
    }
    fj["bidegree_blocks"] = blocks;
    j["frobenius"] = fj;
    sink.add(j, "hodge.frobenius_compatibility", frob.frobenius_compatible, "Res(A*B, C)",
             "Res(A, B*C)");
    bool blocks_ok = true;
    for (const auto& blk : frob.blocks)
        if (!blk.block_constant || !blk.matches_formula) blocks_ok = false;
    sink.add(j, "hodge.transport_scalar_blocks", blocks_ok, "eta_CY / Res per block",
             "i^{a-b} k_ab");

    Json gram = Json::array();
    bool gram_ok = true;
    for (int a = 0; a <= n; ++a) {
        int b = n - a;
        GramBlock blk = gram_block(rp, std::uint64_t(sub.d() * a), std::uint64_t(sub.d() * b));
        std::size_t rank = blk.matrix.rank();
        bool nonsingular = blk.matrix.rows() == blk.matrix.cols() && rank == blk.matrix.rows();
        if (!nonsingular) gram_ok = false;
        Json g;
        g["deg_a"] = blk.deg_a;
        g["deg_b"] = blk.deg_b;
        g["size"] = blk.matrix.rows();
        g["rank"] = rank;
        g["nonsingular"] = nonsingular;
        gram.push_back(g);
    }
    j["gram_level_blocks"] = gram;
    sink.add(j, "hodge.gram_blocks_nonsingular", gram_ok, "rank", "full");
    return j;
}

Json higgs_point_json(const std::vector<Rational>& u, const HiggsField& h, CheckSink& sink,
                      Json& checks_home) {
    Json j;
    Json uv = Json::array();
    for (const auto& c : u) uv.push_back(c.str());
    j["u"] = uv;
    j["mu"] = h.ring->mu;
    HiggsStructureReport rep = verify_higgs_structure(h);
    Json s;
    s["commuting"] = rep.commuting;
    s["level_raising"] = rep.level_raising;
    s["nilpotency_indices"] = rep.nilpotency_index;
    s["max_nilpotency_index"] = rep.max_nilpotency_index;
    s["eta_symmetric"] = rep.eta_symmetric;
    j["structure"] = s;
    std::string at = "higgs.u=" + [&] {
        std::string t = "(";
        for (std::size_t i = 0; i < u.size(); ++i) t += (i ? "," : "") + u[i].str();
        return t + ")";
    }();
    sink.add(checks_home, at + ".commuting", rep.commuting, "[C_i, C_j]", "0");
    sink.add(checks_home, at + ".eta_symmetric", rep.eta_symmetric, "Res(C_i A, B)",
             "Res(A, C_i B)");
    sink.add(checks_home, at + ".nilpotency_at_most_n_plus_1",
             rep.max_nilpotency_index <= h.n() + 1, std::to_string(rep.max_nilpotency_index),
             "<= " + std::to_string(h.n() + 1));
    return j;
}

Json higgs_section(const Polynomial& f, const std::vector<Polynomial>& marginals,
                   const std::vector<std::string>& marginal_texts,
                   const std::vector<std::vector<Rational>>& points, const AnalysisOptions& opt,
                   CheckSink& sink) {
    Json j;
    j["directions"] = marginal_texts;
    Json pts = Json::array();
    bool saw_origin = false;
    for (const auto& u : points) {
        HiggsField h = higgs_matrices(f, marginals, u, opt.order, opt.budget);
        pts.push_back(higgs_point_json(u, h, sink, j));
        bool origin = true;
        for (const auto& c : u)
            if (!c.is_zero()) origin = false;
        if (origin && !saw_origin) {
            saw_origin = true;
            TransportReport tr = transported_higgs_check(h);
            Json tj = Json::array();
            for (const auto& lvl : tr.levels) {
                Json e;
                e["a"] = lvl.a;
                e["minus_(a+1)_c_ratio"] = lvl.lhs.str();
                e["expected_sign"] = lvl.rhs.str();
                e["ok"] = lvl.ok;
                tj.push_back(e);
            }
            j["transported_sign_per_level"] = tj;
            sink.add(j, "higgs.transported_sign_chain", tr.pass(), "-(a+1) c_{a+1}/c_a",
                     "(-1)^a");
        }
    }
    j["points"] = pts;

    if (marginals.size() >= 2) {
        PotentialityReport pot =
            potentiality_check(f, marginals, points, opt.potentiality_step, opt.order, opt.budget);
        Json pj;
        pj["step"] = pot.step.str();
        Json entries = Json::array();
        for (const auto& e : pot.entries) {
            Json ej;
            Json cv = Json::array();
            for (const auto& c : e.center) cv.push_back(c.str());
            ej["center"] = cv;
            ej["pair"] = Json::array({e.dir_i, e.dir_j});
            switch (e.status) {
                case PotentialityStatus::Zero: ej["status"] = "zero"; break;
                case PotentialityStatus::NonZero: ej["status"] = "nonzero"; break;
                case PotentialityStatus::BasisJump:
                    ej["status"] = "basis_jump_skipped";
                    break;
            }
            if (e.status == PotentialityStatus::NonZero) {
                ej["sample_level"] = e.sample_level;
                ej["sample_value"] = e.sample_value.str();
            }
            entries.push_back(ej);
            if (e.status != PotentialityStatus::BasisJump) {
                sink.add(pj, "higgs.potentiality_antisymmetry_zero",
                         e.status == PotentialityStatus::Zero,
                         e.status == PotentialityStatus::Zero ? "0" : e.sample_value.str(), "0");
            }
        }
        pj["entries"] = entries;
        j["potentiality"] = pj;
    }
    return j;
}

Json oscillatory_section(int m, const AnalysisOptions& opt, CheckSink& sink) {
    Json j;
    j["m"] = m;
    Json grid = Json::array();
    bool quad_ok = true;
    for (int k = 1; k <= m - 1; ++k)
        for (int jj = 0; jj <= m - 1; ++jj) {
            ThimbleIntegral t = oscillatory_quadrature(m, k, jj, 12.0, opt.nodes);
            Json e;
            e["k"] = k;
            e["j"] = jj;
            e["closed_form"] = complex_str(t.closed_form);
            e["quadrature"] = complex_str(t.quadrature);
            e["relative_error"] = t.relative_error;
            grid.push_back(e);
            if (t.relative_error >= opt.tol) quad_ok = false;
        }
    j["thimble_integrals"] = grid;
    sink.add(j, "oscillatory.quadrature_matches_closed_form", quad_ok, "relative error",
             "< tol");

    if (m == 2) {
        Json seg;
        seg["value"] = complex_str(straight_segment_integral(2, 1, 0, opt.nodes));
        seg["closed_form_descent_contour"] = complex_str(oscillatory_closed_form(2, 1, 0));
        seg["note"] = "straight chord between level-set roots; known to differ from the "
                      "descent-contour normalization";
        j["straight_segment_m2"] = seg;
    }
    if (m >= 3) {
        RealnessReport rr = realness_probe(m, 1e-8, opt.tol, opt.nodes);
        Json rj;
        Json samples = Json::array();
        for (const auto& s : rr.samples) {
            Json e;
            e["k"] = s.k;
            e["j"] = s.j;
            e["rho"] = complex_str(s.rho);
            e["gamma_ratio"] = s.predicted;
            samples.push_back(e);
        }
        rj["samples"] = samples;
        j["realness"] = rj;
        sink.add(j, "oscillatory.rho_real_positive", rr.real_positive, "Im rho, sign", "0, +");
        sink.add(j, "oscillatory.rho_j_independent", rr.j_independent, "rho_{k,j}", "rho_{k,0}");
        sink.add(j, "oscillatory.rho_matches_gamma_ratio", rr.matches_gamma_ratio, "rho_k",
                 "Gamma(k/m)/Gamma(1-k/m)");
    }
    return j;
}

}  // namespace

AnalysisResult analyze(const SingularitySpec& spec, const AnalysisOptions& opt) {
    AnalysisResult out;
    Json& rep = out.report;
    rep["schema"] = kReportSchema;
    CheckSink sink;

    try {
        if (spec.variables.empty()) throw ParseError("no variables", 0);
        WeightSystem weights =
            spec.weights ? WeightSystem(*spec.weights)
                         : WeightSystem::homogeneous(spec.variables.size(), spec.degree);
        Polynomial f = parse_polynomial(spec.f_text, spec.variables);
        if (!weights.is_quasi_homogeneous(f))
            throw NotQuasiHomogeneous("f is not quasi-homogeneous under the spec weights");

        std::vector<Polynomial> deformations;
        std::vector<std::pair<std::string, DeformationClass>> classes;
        for (const auto& text : spec.deformations) {
            Polynomial phi = parse_polynomial(text, spec.variables);
            DeformationClass dc = classify_deformation(phi, weights);
            deformations.push_back(std::move(phi));
            classes.emplace_back(text, dc);
        }

        rep["spec"] = spec_echo(spec, weights);

        auto ring = build_milnor_ring(f, weights, opt.order, opt.budget);
        ResiduePairing rp(ring);

        const std::size_t N = spec.variables.size();
        const bool homogeneous = weights.is_homogeneous();
        const bool cy = weights.is_calabi_yau() && N >= 2;

        Json milnor = milnor_section(*ring, rp, classes, sink);
        rep["milnor"] = milnor;

        if (homogeneous && N >= 3) rep["moduli"] = moduli_section(*ring, sink);

        std::optional<GradedSubring> sub;
        if (cy) sub.emplace(ring);

        if (cy) rep["hodge"] = hodge_section(*sub, rp, opt, sink);

        // marginal family for the Higgs section
        if (cy) {
            std::vector<Polynomial> marginals;
            std::vector<std::string> texts;
            for (std::size_t i = 0; i < deformations.size(); ++i)
                if (classes[i].second.kind == DeformationKind::Marginal) {
                    marginals.push_back(deformations[i]);
                    texts.push_back(classes[i].first);
                }
            if (!marginals.empty()) {
                std::vector<std::vector<Rational>> points = spec.points;
                if (points.empty())
                    points.push_back(std::vector<Rational>(marginals.size(), Rational(0)));
                for (const auto& p : points)
                    if (p.size() != marginals.size())
                        throw ParseError("point length != marginal direction count", 0);
                rep["higgs"] = higgs_section(f, marginals, texts, points, opt, sink);
            }
        }

        rep["monodromy"] = monodromy_section(*ring, sub ? &*sub : nullptr, sink);
        if (homogeneous) rep["steenbrink"] = steenbrink_section(*ring, sink);
        if (opt.oscillatory_m >= 2)
            rep["oscillatory"] = oscillatory_section(opt.oscillatory_m, opt, sink);

        Json summary;
        summary["all_checks_pass"] = sink.all_pass;
        summary["failed_checks"] = sink.failed;
        rep["summary"] = summary;
        out.status = sink.all_pass ? AnalysisStatus::Ok : AnalysisStatus::CheckFailure;
    } catch (const ParseError& e) {
        rep["error"] = Json{{"kind", "parse"}, {"message", e.what()}};
        out.status = AnalysisStatus::InvalidInput;
    } catch (const NotQuasiHomogeneous& e) {
        rep["error"] = Json{{"kind", "validation"}, {"message", e.what()}};
        out.status = AnalysisStatus::InvalidInput;
    } catch (const std::invalid_argument& e) {
        rep["error"] = Json{{"kind", "validation"}, {"message", e.what()}};
        out.status = AnalysisStatus::InvalidInput;
    } catch (const DegenerateSingularity& e) {
        rep["error"] = Json{{"kind", "degenerate_singularity"}, {"message", e.what()}};
        out.status = AnalysisStatus::Degenerate;
    } catch (const BudgetExceeded& e) {
        rep["error"] = Json{{"kind", "budget"}, {"message", e.what()}};
        out.status = AnalysisStatus::BudgetExhausted;
    }
    return out;
}

std::string canonical_dump(const Json& report) { return report.dump(2) + "\n"; }

namespace {

void render_node(std::ostream& os, const std::string& key, const Json& v, int depth) {
    std::string pad(std::size_t(depth) * 2, ' ');
    if (v.is_object()) {
        os << pad << key << ":\n";
        for (auto it = v.begin(); it != v.end(); ++it) render_node(os, it.key(), it.value(), depth + 1);
    } else if (v.is_array()) {
        if (!v.empty() && v[0].is_primitive()) {
            os << pad << key << " = " << v.dump() << "\n";
        } else {
            os << pad << key << ":\n";
            for (std::size_t i = 0; i < v.size(); ++i)
                render_node(os, "[" + std::to_string(i) + "]", v[i], depth + 1);
        }
    } else {
        os << pad << key << " = " << v.dump() << "\n";
    }
}

}  // namespace

std::string render_table(const Json& report) {
    std::ostringstream os;
    for (auto it = report.begin(); it != report.end(); ++it) {
        if (it.key() == "checks") continue;
        if (it.value().is_object() && it.value().contains("checks")) {
            os << it.key() << ":\n";
            for (auto s = it.value().begin(); s != it.value().end(); ++s) {
                if (s.key() == "checks") {
                    for (const auto& c : s.value())
                        os << "  [" << (c["pass"].get<bool>() ? "PASS" : "FAIL") << "] "
                           << c["name"].get<std::string>() << "\n";
                } else {
                    render_node(os, s.key(), s.value(), 1);
                }
            }
        } else {
            render_node(os, it.key(), it.value(), 0);
        }
    }
    return os.str();
}

SuiteSummary verify_suite(const std::string& directory, const AnalysisOptions& opt) {
    namespace fs = std::filesystem;
    SuiteSummary summary;
    std::vector<fs::path> specs;
    std::error_code ec;
    for (const auto& entry : fs::directory_iterator(directory, ec)) {
        if (entry.path().extension() == ".spec") specs.push_back(entry.path());
    }
    if (ec || specs.empty()) {
        summary.status = AnalysisStatus::InvalidInput;
        return summary;
    }
    std::sort(specs.begin(), specs.end());

    for (const auto& path : specs) {
        SuiteEntry e;
        e.spec_file = path.filename().string();
        fs::path golden = path;
        golden.replace_extension(".golden.json");
        std::ifstream gin(golden, std::ios::binary);
        if (!gin) {
            e.note = "missing golden " + golden.filename().string();
            summary.entries.push_back(e);
            summary.status = AnalysisStatus::InvalidInput;
            continue;
        }
        std::ostringstream gbuf;
        gbuf << gin.rdbuf();
        std::string expected = gbuf.str();

        std::string got;
        try {
            AnalysisResult res = analyze(load_singularity_spec(path.string()), opt);
            got = canonical_dump(res.report);
        } catch (const std::exception& ex) {
            e.note = std::string("analysis error: ") + ex.what();
            summary.entries.push_back(e);
            summary.status = AnalysisStatus::CheckFailure;
            continue;
        }
        if (got == expected) {
            e.matched = true;
            e.note = "match";
        } else {
            std::size_t at = 0;
            while (at < got.size() && at < expected.size() && got[at] == expected[at]) ++at;
            e.note = "differs at byte " + std::to_string(at);
            if (summary.status == AnalysisStatus::Ok) summary.status = AnalysisStatus::CheckFailure;
        }
        summary.entries.push_back(e);
    }
    return summary;
}

}  // namespace lgcy
