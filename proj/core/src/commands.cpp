#include "hopfdr/commands.hpp"

#include <chrono>
#include <ostream>
#include <random>

#include "hopfdr/builtins.hpp"
#include "hopfdr/document.hpp"
#include "hopfdr/hopf_lie.hpp"
#include "hopfdr/spectral.hpp"

namespace hopfdr {

namespace {

std::vector<std::string> echo(const CommandOptions& o, bool calculus) {
    std::vector<std::string> a{o.source};
    if (o.field) a.insert(a.end(), {"--field", *o.field});
    if (!calculus) return a;
    if (o.ideal) a.insert(a.end(), {"--ideal", *o.ideal});
    if (o.universal) a.push_back("--universal");
    a.insert(a.end(), {"--max-degree", std::to_string(o.max_degree)});
    if (o.wedge == WedgeRelations::antisymmetrizer) a.insert(a.end(), {"--wedge", "antisymmetrizer"});
    return a;
}

Report start(const std::string& command, const CommandOptions& o) {
    Report r;
    r.command = command;
    r.args = echo(o, command != "validate");
    return r;
}

std::vector<std::size_t> head(const std::vector<std::size_t>& v, std::size_t n) {
    return {v.begin(), v.begin() + static_cast<std::ptrdiff_t>(std::min(n, v.size()))};
}

// rows n, entries m with n + m ≤ s
std::vector<std::vector<std::size_t>> triangle(const std::vector<std::vector<std::size_t>>& t, std::size_t s) {
    std::vector<std::vector<std::size_t>> out;
    for (std::size_t n = 0; n <= s && n < t.size(); ++n) out.push_back(head(t[n], s - n + 1));
    return out;
}

Check make(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok ? Status::pass : Status::fail, ok ? "" : std::move(detail)};
}

struct Loaded {
    AlgebraDocument doc;
    FinHopfAlgebra p;
};

Loaded load(const CommandOptions& o) {
    std::optional<Field> f;
    if (o.field) f = parse_field(*o.field);
    AlgebraDocument doc = load_document(o.source, f);
    try {
        FinHopfAlgebra p = FinHopfAlgebra::validate(doc.data, doc.name);
        return {std::move(doc), std::move(p)};
    } catch (const InvalidHopfAlgebra& e) {
        throw InputError(std::string("not a Hopf algebra: ") + e.what());
    }
}

CalculusIdeal select_ideal(const Loaded& l, const CommandOptions& o) {
    std::string name = o.ideal.value_or("zero");
    if (name == "zero") return zero_ideal(l.p);
    if (name == "full") return counit_kernel_ideal(l.p);
    std::string known = "zero, full";
    for (const auto& [n, m] : l.doc.ideals) {
        known += ", " + n;
        if (n != name) continue;
        try {
            return check_ideal(l.p, m);
        } catch (const InvalidIdeal& e) {
            std::string msg = "ideal '" + name + "' rejected:";
            for (const auto& c : e.checks)
                if (c.status == Status::fail) msg += " [" + c.name + (c.detail.empty() ? "" : ": " + c.detail) + "]";
            throw InputError(msg);
        }
    }
    throw InputError("unknown ideal '" + name + "'; available: " + known);
}

ExteriorCalculus exterior(const Loaded& l, const CommandOptions& o, std::size_t cap) {
    CalculusIdeal ideal = select_ideal(l, o);
    try {
        return build_exterior(ideal, cap, o.wedge);
    } catch (const InvariantViolation& e) {
        if (o.wedge != WedgeRelations::symmetric) throw;
        throw InvariantViolation(std::string(e.what()) + " (try --wedge antisymmetrizer)");
    }
}

struct Forms {
    DGA omega;
    std::vector<Mat> lambda_bar;
    CheckList checks;
    std::string kind;
};

Forms forms(const Loaded& l, const CommandOptions& o, std::size_t cap) {
    if (o.universal) {
        if (o.ideal) throw InputError("--universal and --ideal cannot be combined");
        DGA u = universal_calculus(algebra_of(l.p), cap);
        auto ext = extend_coaction(l.p.comult(), u, tensor_dga(u, u));
        return {u, ext.lambda_bar, ext.checks, "universal"};
    }
    auto e = exterior(l, o, cap);
    std::vector<Mat> lb;
    for (std::size_t n = 0; n <= cap; ++n) lb.push_back(omega_left_coaction(e, n));
    return {build_omega(e), lb, e.checks, "bicovariant"};
}

// drops per-degree checks above the requested degree
CheckList up_to_degree(const CheckList& checks, std::size_t n) {
    CheckList out;
    for (const auto& c : checks) {
        auto at = c.name.rfind("(degree ");
        if (at != std::string::npos && std::stoul(c.name.substr(at + 8)) > n) continue;
        out.push_back(c);
    }
    return out;
}

bool prefixed_pass(const CheckList& checks, const std::vector<std::string>& prefixes) {
    for (const auto& c : checks)
        for (const auto& p : prefixes)
            if (c.name.rfind(p, 0) == 0 && c.status == Status::fail) return false;
    return true;
}

// random cochain complex with d_k = P_{k+1} E_k P_k⁻¹, E_k a partial identity
std::vector<Mat> random_complex(Field f, const std::vector<std::size_t>& dims, std::mt19937_64& rng) {
    std::size_t p = f.characteristic() == 0 ? 7 : f.characteristic();
    auto random_invertible = [&](std::size_t n) {
        for (;;) {
            Mat m(f, n, n);
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) m.set(i, j, f.from_int(static_cast<std::int64_t>(rng() % p)));
            if (auto inv = inverse(m)) return std::make_pair(m, *inv);
        }
    };
    std::vector<std::pair<Mat, Mat>> basis;
    for (auto d : dims) basis.push_back(random_invertible(d));
    std::vector<Mat> out;
    std::size_t prev = 0;
    for (std::size_t k = 0; k + 1 < dims.size(); ++k) {
        std::size_t room = std::min(dims[k] - prev, dims[k + 1]);
        std::size_t r = room == 0 ? 0 : rng() % (room + 1);
        Mat e(f, dims[k + 1], dims[k]);
        for (std::size_t i = 0; i < r; ++i) e.set(i, prev + i, f.one());
        out.push_back(basis[k + 1].first * e * basis[k].second);
        prev = r;
    }
    return out;
}

DoubleComplex product_double_complex(Field f, const std::vector<std::size_t>& a, const std::vector<Mat>& da,
                                     const std::vector<std::size_t>& b, const std::vector<Mat>& db) {
    std::size_t nc = a.size() - 1, mc = b.size() - 1;
    std::vector<std::vector<std::size_t>> dims(nc + 1, std::vector<std::size_t>(mc + 1));
    std::vector<std::vector<Mat>> dp(nc, std::vector<Mat>(mc + 1)), ds(nc + 1, std::vector<Mat>(mc));
    for (std::size_t n = 0; n <= nc; ++n)
        for (std::size_t m = 0; m <= mc; ++m) {
            dims[n][m] = a[n] * b[m];
            if (n < nc) dp[n][m] = kron(da[n], Mat::identity(f, b[m]));
            if (m < mc) {
                Mat t = kron(Mat::identity(f, a[n]), db[m]);
                ds[n][m] = n % 2 == 0 ? t : -t;
            }
        }
    return make_double_complex(f, dims, dp, ds);
}

DoubleComplex direct_sum(const DoubleComplex& x, const DoubleComplex& y) {
    auto dims = x.dims;
    auto dp = x.d_prime, ds = x.d_second;
    for (std::size_t n = 0; n <= x.n_cap; ++n)
        for (std::size_t m = 0; m <= x.m_cap; ++m) {
            dims[n][m] += y.dims[n][m];
            if (n < x.n_cap) dp[n][m] = block_diag({x.d_prime[n][m], y.d_prime[n][m]});
            if (m < x.m_cap) ds[n][m] = block_diag({x.d_second[n][m], y.d_second[n][m]});
        }
    return make_double_complex(x.field, dims, dp, ds);
}

}  // namespace

Report cmd_validate(const CommandOptions& o) {
    Report r = start("validate", o);
    std::optional<Field> f;
    if (o.field) f = parse_field(*o.field);
    AlgebraDocument doc = load_document(o.source, f);
    HopfData d = doc.data;
    r.fact("name", doc.name);
    r.fact("field", d.field.name());
    r.fact("dim", static_cast<std::int64_t>(d.dim));
    auto violations = check_hopf_axioms(d);
    for (const auto& axiom : hopf_axiom_names()) {
        std::string witness;
        for (const auto& v : violations)
            if (v.axiom == axiom) witness = "at " + v.witness_label;
        r.add("Hopf axioms", make(axiom, witness.empty(), witness));
    }
    if (!violations.empty()) return r;

    FinHopfAlgebra p = FinHopfAlgebra::validate(d, doc.name);
    r.fact("commutative", p.is_commutative());
    r.fact("cocommutative", p.is_cocommutative());
    r.fact("antipode_invertible", p.has_antipode_inverse());
    IntegralResult in = left_integral(p);
    r.fact("left_integral", in.exists);
    r.fact("normalised_integral", in.normalised);
    for (const auto& [name, m] : doc.ideals) r.add("ideal " + name, ideal_checks(p, m));
    return r;
}

Report cmd_cohomology(const CommandOptions& o) {
    Report r = start("cohomology", o);
    Loaded l = load(o);
    std::size_t shown = o.max_degree + 1;
    // one degree beyond the request keeps every reported degree exact
    Forms fm = forms(l, o, o.max_degree + 1);
    r.fact("calculus", fm.kind);
    r.add("calculus", fm.checks);
    CochainComplex c = complex_of(fm.omega);
    AveragingReport av = invariant_forms_check(l.p, fm.omega, c, left_comodules(l.p, fm.lambda_bar));
    r.fact("connected", av.connected);
    r.fact("cosemisimple", av.normalised_integral);
    r.fact("left_integral", left_integral(l.p).exists);
    r.table("de_rham", head(av.full.dims, shown));
    r.table("invariant_forms", head(av.invariant.dims, shown));
    CheckList shown_checks = up_to_degree(av.checks, o.max_degree);
    r.add("invariant forms", shown_checks);

    auto part = [&](int k, bool pre, const std::string& reason, const std::vector<std::string>& prefixes) {
        std::string name = "part " + std::to_string(k);
        if (!pre)
            r.add("theorem", Check{name, Status::skipped, reason});
        else
            r.add("theorem", make(name, prefixed_pass(shown_checks, prefixes)));
    };
    part(1, av.normalised_integral, "no normalised integral",
         {"averaging", "H(averaging)", "H(i) injective", "image of H(i)"});
    part(2, av.connected, "not connected", {"all classes coinvariant"});
    part(3, av.connected && av.normalised_integral, "needs a connected cosemisimple Hopf algebra",
         {"invariant and full cohomology agree"});
    return r;
}

Report cmd_vanest(const CommandOptions& o) {
    Report r = start("vanest", o);
    Loaded l = load(o);
    std::size_t shown = o.max_degree;
    // both caps one beyond the request, so every entry of total degree ≤ shown is exact
    Forms fm = forms(l, o, shown + 1);
    r.fact("calculus", fm.kind);
    r.add("calculus", fm.checks);
    HopfModuleComplex fc = forms_as_hopf_modules(l.p, fm.omega, fm.lambda_bar);
    VanEstReport ve = van_est_report(fc, shown + 1);
    r.table("E2_I", triangle(ve.first.page(2).dims, shown));
    r.table("Einf_I", triangle(ve.first.limit, shown));
    r.table("E2_II", triangle(ve.second.page(2).dims, shown));
    r.table("Einf_II", triangle(ve.second.limit, shown));
    r.table("hopf_cochain_cohomology", triangle(ve.hopf_cochain_dims, shown));
    r.table("total", head(ve.total.dims, shown + 1));
    r.table("invariant_forms", head(ve.invariant.dims, shown + 1));
    CheckList conv1 = convergence_check(ve.first, ve.total), conv2 = convergence_check(ve.second, ve.total);
    r.add("double complex", ve.ve.checks);
    r.add("filtration I", ve.first.checks);
    r.add("filtration I", conv1);
    r.add("filtration II", ve.second.checks);
    r.add("filtration II", conv2);
    // the report repeats the lists above before its own comparisons
    std::size_t skip = ve.ve.checks.size() + ve.first.checks.size() + ve.second.checks.size() + conv1.size() + conv2.size();
    r.add("van Est", CheckList(ve.checks.begin() + static_cast<std::ptrdiff_t>(skip), ve.checks.end()));
    return r;
}

Report cmd_hopflie(const CommandOptions& o) {
    Report r = start("hopflie", o);
    if (o.universal) throw InputError("the Hopf-Lie algebra needs a bicovariant calculus; pass --ideal");
    Loaded l = load(o);
    std::size_t cap = std::max<std::size_t>(o.max_degree, 1);
    ExteriorCalculus e = exterior(l, o, cap);
    r.add("calculus", e.checks);
    HopfLieAlgebra hl = build_hopf_lie(e);
    r.add("Hopf-Lie algebra", hl.checks);
    r.fact("g_dim", static_cast<std::int64_t>(hl.dim()));
    r.fact("bracket_zero", hl.bracket.is_zero());
    r.fact("t_available", hl.t_map.has_value());
    if (!hl.t_map) r.fact("t_defect", hl.t_defect);
    r.tensor("bracket", hl.bracket);
    r.tensor("sigma_g", hl.sigma_g);
    Field f = e.field();
    std::size_t m = hl.dim();
    if (hl.t_map) {
        r.tensor("T", *hl.t_map);
        if (f.characteristic() != 2 && e.sigma == flip(f, m, m)) {
            Mat half = (hl.bracket * hl.wedge[2].section).scaled(f.from_int(2).inverse());
            r.add("Hopf-Lie algebra", make("T = ½[,] for the flip braiding", *hl.t_map == half));
        }
    }

    try {
        HLComplex k = hl_complex(hl, e, HLConstruction::transpose);
        r.table("K", k.complex.dims);
        HLIsoReport iso = hl_cohomology_iso_check(k, e);
        r.table("H_HL", iso.hl_dims);
        r.table("invariant_forms", iso.invariant_dims);
        r.add("Hopf-Lie cohomology", iso.checks);
    } catch (const Unavailable& ex) {
        r.add("Hopf-Lie cohomology", Check{"H_HL = H(coP Ω)", Status::skipped, ex.what()});
    } catch (const InvariantViolation& ex) {
        r.add("Hopf-Lie cohomology", Check{"H_HL = H(coP Ω)", Status::fail, ex.what()});
    }
    try {
        HLComplex x = hl_complex(hl, e, HLConstruction::explicit_T);
        r.fact("explicit_T_descends", x.construction == HLConstruction::explicit_T);
        r.add("explicit T", x.checks);
    } catch (const Unavailable& ex) {
        r.add("explicit T", Check{"explicit differential descends to wedge quotients", Status::skipped, ex.what()});
    }
    return r;
}

std::string cmd_export(const CommandOptions& o) {
    std::optional<Field> f;
    if (o.field) f = parse_field(*o.field);
    return write_document(load_document(o.source, f));
}

Report cmd_selftest(const CommandOptions& o) {
    Report r;
    r.command = "selftest";
    r.args = {"--seed", std::to_string(o.seed), "--samples", std::to_string(o.samples)};

    for (const auto& name : builtin_names()) {
        FinHopfAlgebra p = builtin(name);
        AlgebraDocument doc = document_of(p, builtin_ideals(name, p));
        std::string text = write_document(doc);
        AlgebraDocument back = parse_document(text);
        const HopfData &a = doc.data, &b = back.data;
        bool same = a.mult == b.mult && a.unit == b.unit && a.comult == b.comult && a.counit == b.counit &&
                    a.antipode == b.antipode && a.labels == b.labels && write_document(back) == text;
        r.add("document round trip", make(name, same));
    }

    Field f5 = Field::prime(5);
    std::mt19937_64 rng(o.seed);
    for (std::size_t s = 0; s < o.samples; ++s) {
        auto dims = [&] {
            std::vector<std::size_t> d(4);
            for (auto& x : d) x = rng() % 3;
            return d;
        };
        auto a1 = dims(), b1 = dims(), a2 = dims(), b2 = dims();
        auto da1 = random_complex(f5, a1, rng), db1 = random_complex(f5, b1, rng);
        auto da2 = random_complex(f5, a2, rng), db2 = random_complex(f5, b2, rng);
        DoubleComplex dc = direct_sum(product_double_complex(f5, a1, da1, b1, db1),
                                      product_double_complex(f5, a2, da2, b2, db2));
        CohomologyResult total = cohomology(total_complex(dc).complex);
        for (auto filt : {Filtration::I, Filtration::II}) {
            std::string name = "sample " + std::to_string(s) + (filt == Filtration::I ? " filtration I" : " filtration II");
            try {
                convergence_check(spectral_pages(dc, filt), total);
                r.add("spectral convergence", make(name, true));
            } catch (const InvariantViolation& e) {
                r.add("spectral convergence", make(name, false, e.what()));
            }
        }
    }

    auto e = build_exterior(zero_ideal(builtin("fZ3")), 3);
    auto hl = build_hopf_lie(e);
    r.add("Hopf-Lie fZ3", hl.checks);
    r.add("Hopf-Lie fZ3", hl_cohomology_iso_check(hl_complex(hl, e, HLConstruction::transpose), e).checks);
    return r;
}

int run_command(const std::string& name, const CommandOptions& o, ReportFormat format, std::ostream& out,
                std::ostream& err) {
    auto t0 = std::chrono::steady_clock::now();
    try {
        if (name == "export") {
            out << cmd_export(o);
            return 0;
        }
        Report r;
        if (name == "validate")
            r = cmd_validate(o);
        else if (name == "cohomology")
            r = cmd_cohomology(o);
        else if (name == "vanest")
            r = cmd_vanest(o);
        else if (name == "hopflie")
            r = cmd_hopflie(o);
        else if (name == "selftest")
            r = cmd_selftest(o);
        else
            throw InputError("unknown command '" + name + "'");
        r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        out << (format == ReportFormat::json ? r.to_json() : r.to_text());
        return r.exit_code();
    } catch (const InvariantViolation& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
}

}  // namespace hopfdr
