#include "hopfdr/spectral.hpp"

#include <map>
#include <string>
#include <tuple>

#include "block.hpp"

namespace hopfdr {

namespace {

using Grid = std::vector<std::vector<std::size_t>>;

Check make_check(std::string name, bool ok, std::string detail = "") {
    return {std::move(name), ok ? Status::pass : Status::fail, std::move(detail)};
}

std::string at(std::size_t n, std::size_t m) { return " at (" + std::to_string(n) + "," + std::to_string(m) + ")"; }

Grid transpose_grid(const Grid& g) {
    if (g.empty()) return {};
    Grid t(g[0].size(), std::vector<std::size_t>(g.size()));
    for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[i].size(); ++j) t[j][i] = g[i][j];
    return t;
}

template <class T>
std::vector<std::vector<T>> transpose_table(std::vector<std::vector<T>> g) {
    if (g.empty()) return {};
    std::vector<std::vector<T>> t(g[0].size());
    for (std::size_t j = 0; j < g[0].size(); ++j)
        for (std::size_t i = 0; i < g.size(); ++i) t[j].push_back(std::move(g[i][j]));
    return t;
}

// columns of v moved into rows offset.. of an ambient space
Mat embed(const Mat& v, std::size_t offset, std::size_t ambient) {
    std::vector<SparseVec> cols;
    for (const auto& c : v.columns()) {
        SparseVec s;
        for (const auto& e : c) s.push_back({static_cast<std::uint32_t>(e.row + offset), e.value});
        cols.push_back(std::move(s));
    }
    return Mat::from_columns(v.field(), ambient, std::move(cols));
}

std::vector<std::size_t> range(std::size_t begin, std::size_t end) {
    std::vector<std::size_t> r;
    for (std::size_t i = begin; i < end; ++i) r.push_back(i);
    return r;
}

// The spectral sequence of the filtration F^pT^s = ⊕_{n>=p} C^{n,s-n}.
class ColumnFiltration {
public:
    explicit ColumnFiltration(const DoubleComplex& dc) : dc_(dc), tot_(total_complex(dc)) {}

    const TotalComplex& total() const { return tot_; }

    SpectralPage page(std::size_t r) {
        SpectralPage pg;
        pg.r = r;
        pg.dims.assign(dc_.n_cap + 1, std::vector<std::size_t>(dc_.m_cap + 1, 0));
        pg.entries.resize(dc_.n_cap + 1);
        pg.differential.resize(dc_.n_cap + 1);
        for (std::size_t p = 0; p <= dc_.n_cap; ++p)
            for (std::size_t q = 0; q <= dc_.m_cap; ++q) {
                pg.entries[p].push_back(entry(r, p, q));
                pg.dims[p][q] = pg.entries[p][q].representatives.cols();
            }
        Field f = dc_.field;
        for (std::size_t p = 0; p <= dc_.n_cap; ++p)
            for (std::size_t q = 0; q <= dc_.m_cap; ++q) {
                const auto& src = pg.entries[p][q];
                std::size_t tp = p + r;
                if (tp > dc_.n_cap || q + 1 < r) {
                    pg.differential[p].push_back(Mat(f, 0, src.representatives.cols()));
                    continue;
                }
                std::size_t tq = q + 1 - r;
                const auto& tgt = pg.entries[tp][tq];
                std::size_t s = p + q;
                Mat image = tot_.complex.d[s] * src.representatives;
                auto x = solve(hstack({tgt.representatives, tgt.b.basis()}), image);
                if (!x) throw InvariantViolation("spectral: D_r leaves Z_r" + at(p, q));
                pg.differential[p].push_back(x->select_rows(range(0, tgt.representatives.cols())));
            }
        return pg;
    }

private:
    std::size_t start(std::size_t s, std::ptrdiff_t p) const {
        if (s > dc_.total_cap()) return 0;
        std::size_t pc = p < 0 ? 0 : std::min<std::size_t>(static_cast<std::size_t>(p), dc_.n_cap + 1);
        return tot_.offsets[s][pc];
    }
    std::size_t dim_t(std::size_t s) const { return s > dc_.total_cap() ? 0 : tot_.complex.dims[s]; }

    // Z_r^{p} in T^s: x in F^p with dx in F^{p+r}
    const Subspace& z(std::size_t r, std::ptrdiff_t p, std::size_t s) {
        auto key = std::make_tuple(r, p, s);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        Field f = dc_.field;
        std::size_t lo = start(s, p), dim = dim_t(s);
        Mat cols;
        if (s == dc_.total_cap()) {
            cols = Mat::identity(f, dim).select_cols(range(lo, dim));
        } else {
            std::size_t hi = start(s + 1, p + static_cast<std::ptrdiff_t>(r));
            Mat block = tot_.complex.d[s].select_cols(range(lo, dim)).select_rows(range(0, hi));
            cols = embed(kernel(block).basis(), lo, dim);
        }
        return memo_.emplace(key, Subspace(cols)).first->second;
    }

    SpectralEntry entry(std::size_t r, std::size_t p, std::size_t q) {
        Field f = dc_.field;
        std::size_t s = p + q;
        auto pp = static_cast<std::ptrdiff_t>(p), rr = static_cast<std::ptrdiff_t>(r);
        SpectralEntry e;
        e.z = z(r, pp, s);
        Subspace deeper = z(r - 1, pp + 1, s);
        if (s > 0) {
            const Subspace& from = z(r - 1, pp - rr + 1, s - 1);
            e.b = sum(deeper, Subspace::span(tot_.complex.d[s - 1] * from.basis()));
        } else {
            e.b = deeper;
        }
        Reducer red(f, dim_t(s));
        for (const auto& v : e.b.basis().columns()) red.insert(v);
        e.representatives = Mat(f, dim_t(s), 0);
        for (const auto& v : e.z.basis().columns())
            if (red.insert(v)) e.representatives.push_col(v);
        return e;
    }

    const DoubleComplex& dc_;
    TotalComplex tot_;
    std::map<std::tuple<std::size_t, std::ptrdiff_t, std::size_t>, Subspace> memo_;
};

// E₂ of the column filtration: vertical cohomology, then the induced horizontal differential
Grid iterated_e2(const DoubleComplex& dc) {
    Field f = dc.field;
    std::vector<CohomologyResult> vertical;
    for (std::size_t n = 0; n <= dc.n_cap; ++n) {
        std::vector<Mat> d = dc.d_second[n];
        vertical.push_back(cohomology(make_complex(f, dc.dims[n], std::move(d), true)));
    }
    Grid out(dc.n_cap + 1, std::vector<std::size_t>(dc.m_cap + 1, 0));
    for (std::size_t m = 0; m <= dc.m_cap; ++m) {
        std::vector<std::size_t> dims;
        std::vector<Mat> maps;
        for (std::size_t n = 0; n <= dc.n_cap; ++n) {
            dims.push_back(vertical[n].dims[m]);
            if (n < dc.n_cap)
                maps.push_back(vertical[n + 1].classes(m, dc.d_prime[n][m] * vertical[n].representatives[m]));
        }
        auto h = cohomology(make_complex(f, std::move(dims), std::move(maps), true));
        for (std::size_t n = 0; n <= dc.n_cap; ++n) out[n][m] = h.dims[n];
    }
    return out;
}

SpectralSequence column_sequence(const DoubleComplex& dc, std::size_t r_max) {
    SpectralSequence ss;
    ColumnFiltration cf(dc);
    std::size_t last = std::max(r_max, std::max(dc.n_cap, dc.m_cap) + 2);
    for (std::size_t r = 2; r <= last; ++r) ss.pages.push_back(cf.page(r));
    ss.e2_iterated = iterated_e2(dc);
    ss.checks.push_back(make_check("E2 agrees with iterated cohomology", ss.pages[0].dims == ss.e2_iterated));
    for (std::size_t i = 0; i < ss.pages.size(); ++i) {
        const auto& pg = ss.pages[i];
        std::string r = std::to_string(pg.r);
        bool square = true, next = true, mono = true;
        for (std::size_t p = 0; p <= dc.n_cap; ++p)
            for (std::size_t q = 0; q <= dc.m_cap; ++q) {
                const Mat& out = pg.differential[p][q];
                std::size_t ker = out.cols() - rank(out);
                std::size_t im = 0;
                if (p >= pg.r && q + pg.r - 1 <= dc.m_cap) im = rank(pg.differential[p - pg.r][q + pg.r - 1]);
                if (p + pg.r <= dc.n_cap && q + 1 >= pg.r) {
                    const Mat& onward = pg.differential[p + pg.r][q + 1 - pg.r];
                    if (!(onward * out).is_zero()) square = false;
                }
                if (i + 1 < ss.pages.size()) {
                    std::size_t d = ss.pages[i + 1].dims[p][q];
                    if (d != ker - im) next = false;
                    if (d > pg.dims[p][q]) mono = false;
                }
            }
        ss.checks.push_back(make_check("D_r∘D_r = 0 on page " + r, square));
        if (i + 1 < ss.pages.size()) {
            ss.checks.push_back(make_check("E_{r+1} = H(E_r, D_r) on page " + r, next));
            ss.checks.push_back(make_check("E_{r+1} is a subquotient of E_r on page " + r, mono));
        }
    }
    ss.limit = ss.pages.back().dims;
    return ss;
}

}  // namespace

DoubleComplex make_double_complex(Field f, Grid dims, std::vector<std::vector<Mat>> d_prime,
                                  std::vector<std::vector<Mat>> d_second, bool n_truncated, bool m_truncated) {
    if (dims.empty() || dims[0].empty()) throw ShapeError("double complex: empty");
    std::size_t nc = dims.size() - 1, mc = dims[0].size() - 1;
    for (const auto& col : dims)
        if (col.size() != mc + 1) throw ShapeError("double complex: ragged dimension table");
    if (d_prime.size() != nc || d_second.size() != nc + 1)
        throw ShapeError("double complex: differential tables have the wrong size");
    for (std::size_t n = 0; n <= nc; ++n) {
        if (n < nc && d_prime[n].size() != mc + 1) throw ShapeError("double complex: d' table is ragged");
        if (d_second[n].size() != mc) throw ShapeError("double complex: d'' table is ragged");
        for (std::size_t m = 0; m <= mc; ++m) {
            if (n < nc && (d_prime[n][m].rows() != dims[n + 1][m] || d_prime[n][m].cols() != dims[n][m]))
                throw ShapeError("double complex: d'" + at(n, m) + " has shape " + shape_of(d_prime[n][m]));
            if (m < mc && (d_second[n][m].rows() != dims[n][m + 1] || d_second[n][m].cols() != dims[n][m]))
                throw ShapeError("double complex: d''" + at(n, m) + " has shape " + shape_of(d_second[n][m]));
        }
    }
    for (std::size_t n = 0; n <= nc; ++n)
        for (std::size_t m = 0; m <= mc; ++m) {
            if (n + 1 < nc && !(d_prime[n + 1][m] * d_prime[n][m]).is_zero())
                throw InvariantViolation("double complex: d'∘d' ≠ 0" + at(n, m));
            if (m + 1 < mc && !(d_second[n][m + 1] * d_second[n][m]).is_zero())
                throw InvariantViolation("double complex: d''∘d'' ≠ 0" + at(n, m));
            if (n < nc && m < mc &&
                !(d_second[n + 1][m] * d_prime[n][m] + d_prime[n][m + 1] * d_second[n][m]).is_zero())
                throw InvariantViolation("double complex: d' and d'' do not anticommute" + at(n, m));
        }
    return {f, nc, mc, std::move(dims), std::move(d_prime), std::move(d_second), n_truncated, m_truncated};
}

DoubleComplex transpose(const DoubleComplex& dc) {
    DoubleComplex t;
    t.field = dc.field;
    t.n_cap = dc.m_cap;
    t.m_cap = dc.n_cap;
    t.dims = transpose_grid(dc.dims);
    t.n_truncated = dc.m_truncated;
    t.m_truncated = dc.n_truncated;
    t.d_prime.resize(t.n_cap);
    t.d_second.resize(t.n_cap + 1);
    for (std::size_t m = 0; m <= dc.m_cap; ++m)
        for (std::size_t n = 0; n <= dc.n_cap; ++n) {
            if (m < dc.m_cap) t.d_prime[m].push_back(dc.d_second[n][m]);
            if (n < dc.n_cap) t.d_second[m].push_back(dc.d_prime[n][m]);
        }
    return t;
}

TotalComplex total_complex(const DoubleComplex& dc) {
    Field f = dc.field;
    TotalComplex t;
    std::vector<std::size_t> dims;
    for (std::size_t s = 0; s <= dc.total_cap(); ++s) {
        std::vector<std::size_t> off;
        std::size_t total = 0;
        for (std::size_t n = 0; n <= dc.n_cap + 1; ++n) {
            off.push_back(total);
            if (n <= dc.n_cap && s >= n) total += dc.dim(n, s - n);
        }
        t.offsets.push_back(std::move(off));
        dims.push_back(total);
    }
    std::vector<Mat> d;
    for (std::size_t s = 0; s < dc.total_cap(); ++s) {
        detail::BlockBuilder b(f, dims[s + 1], dims[s]);
        for (std::size_t n = 0; n <= std::min(s, dc.n_cap); ++n) {
            std::size_t m = s - n;
            if (m > dc.m_cap) continue;
            if (n < dc.n_cap) b.add(dc.d_prime[n][m], t.offsets[s + 1][n + 1], t.offsets[s][n], f.one());
            if (m < dc.m_cap) b.add(dc.d_second[n][m], t.offsets[s + 1][n], t.offsets[s][n], f.one());
        }
        d.push_back(b.take());
    }
    t.complex = make_complex(f, std::move(dims), std::move(d), true);
    return t;
}

SpectralSequence spectral_pages(const DoubleComplex& dc, Filtration filtration, std::size_t r_max) {
    if (filtration == Filtration::I) return column_sequence(dc, r_max);
    SpectralSequence ss = column_sequence(transpose(dc), r_max);
    ss.filtration = Filtration::II;
    for (auto& pg : ss.pages) {
        pg.dims = transpose_grid(pg.dims);
        pg.entries = transpose_table(std::move(pg.entries));
        pg.differential = transpose_table(std::move(pg.differential));
    }
    ss.e2_iterated = transpose_grid(ss.e2_iterated);
    ss.limit = transpose_grid(ss.limit);
    return ss;
}

CheckList convergence_check(const SpectralSequence& ss, const CohomologyResult& total) {
    CheckList out;
    std::size_t nc = ss.limit.size() - 1, mc = ss.limit[0].size() - 1;
    for (std::size_t s = 0; s <= nc + mc; ++s) {
        std::size_t sum = 0;
        for (std::size_t n = 0; n <= std::min(s, nc); ++n)
            if (s - n <= mc) sum += ss.limit[n][s - n];
        std::size_t h = s < total.dims.size() ? total.dims[s] : 0;
        std::string name = "E_∞ anti-diagonal " + std::to_string(s) + " sums to dim H^" + std::to_string(s);
        if (sum != h)
            throw InvariantViolation("spectral sequence does not converge in total degree " + std::to_string(s) +
                                     ": " + std::to_string(sum) + " vs " + std::to_string(h));
        out.push_back(make_check(name, true, std::to_string(sum)));
    }
    return out;
}

HopfModuleComplex forms_as_hopf_modules(const FinHopfAlgebra& p, const DGA& omega,
                                        const std::vector<Mat>& lambda_bar) {
    HopfModuleComplex h;
    h.coactions = left_comodules(p, lambda_bar);
    for (std::size_t n = 0; n <= omega.cap(); ++n) h.actions.push_back(omega.product(0, n));
    h.d = omega.differentials();
    h.vanishes_above_cap = omega.vanishes_above_cap();
    return h;
}

VanEst van_est(const HopfModuleComplex& fc, std::size_t n_cap) {
    if (fc.coactions.empty() || fc.d.size() + 1 != fc.coactions.size() || fc.actions.size() != fc.coactions.size())
        throw ShapeError("van Est: need coactions and actions in every degree and d between them");
    const auto& p = fc.coactions[0].algebra;
    Field f = p.field();
    std::size_t pd = p.dim(), mc = fc.d.size();
    VanEst ve;
    for (std::size_t m = 0; m <= mc; ++m) {
        auto defect = hopf_module_defect(fc.coactions[m], fc.actions[m]);
        if (defect) throw InvariantViolation("van Est: F^" + std::to_string(m) + " is not a Hopf module");
        if (m < mc) {
            Mat lhs = kron(p.identity(), fc.d[m]) * fc.coactions[m].coaction;
            if (!(lhs == fc.coactions[m + 1].coaction * fc.d[m]))
                throw InvariantViolation("van Est: d̄ is not colinear on F^" + std::to_string(m));
        }
    }
    ve.checks.push_back(make_check("coefficients are Hopf modules", true));
    ve.checks.push_back(make_check("d̄ is colinear", true));

    Grid dims(n_cap + 1, std::vector<std::size_t>(mc + 1));
    std::vector<std::vector<Mat>> dp(n_cap), ds(n_cap + 1);
    std::size_t pn = 1;
    for (std::size_t n = 0; n <= n_cap; ++n) {
        for (std::size_t m = 0; m <= mc; ++m) {
            dims[n][m] = pn * fc.coactions[m].dim;
            if (dims[n][m] > amitsur_entry_cap)
                throw CapExceeded("van Est: C^{" + std::to_string(n) + "," + std::to_string(m) + "} has " +
                                  std::to_string(dims[n][m]) + " basis elements");
            if (n < n_cap) dp[n].push_back(amitsur_reduced_d(fc.coactions[m], n));
            if (m < mc) {
                Mat d = kron(Mat::identity(f, pn), fc.d[m]);
                ds[n].push_back(n % 2 == 0 ? d : -d);
            }
        }
        pn *= pd;
    }
    ve.dc = make_double_complex(f, std::move(dims), std::move(dp), std::move(ds), true, !fc.vanishes_above_cap);
    return ve;
}

VanEstReport van_est_report(const HopfModuleComplex& fc, std::size_t n_cap) {
    VanEstReport r;
    r.ve = van_est(fc, n_cap);
    const auto& dc = r.ve.dc;
    const auto& p = fc.coactions[0].algebra;
    Field f = p.field();
    append(r.checks, r.ve.checks);

    r.total = cohomology(total_complex(dc).complex);
    r.first = spectral_pages(dc, Filtration::I);
    r.second = spectral_pages(dc, Filtration::II);
    append(r.checks, r.first.checks);
    append(r.checks, r.second.checks);
    append(r.checks, convergence_check(r.first, r.total));
    append(r.checks, convergence_check(r.second, r.total));

    std::vector<std::size_t> fdims;
    for (const auto& c : fc.coactions) fdims.push_back(c.dim);
    auto fcomplex = make_complex(f, fdims, fc.d, fc.vanishes_above_cap);
    r.invariant = cohomology(coinvariant_subcomplex(fcomplex, fc.coactions).sub);

    // H_c^n(P; H^m(F)) through the induced coaction on H^m(F)
    auto hf = cohomology(fcomplex);
    r.hopf_cochain_dims.assign(n_cap + 1, std::vector<std::size_t>(dc.m_cap + 1));
    for (std::size_t m = 0; m <= dc.m_cap; ++m) {
        Mat lam = induced_coaction(hf, m, fc.coactions[m].coaction, p.dim());
        Comodule hm{p, hf.dims[m], lam, Side::left};
        auto hc = cohomology(amitsur_complex(hm, AmitsurVariant::reduced, n_cap).complex);
        for (std::size_t n = 0; n <= n_cap; ++n) r.hopf_cochain_dims[n][m] = hc.dims[n];
    }
    r.checks.push_back(make_check("first E2 = H_c(P; H(F))", r.first.page(2).dims == r.hopf_cochain_dims));

    bool column = true, zero = true;
    for (std::size_t m = 0; m <= dc.m_cap; ++m) {
        if (r.second.page(2).dims[0][m] != r.invariant.dims[m]) column = false;
        for (std::size_t n = 1; n < n_cap; ++n)
            if (r.second.page(2).dims[n][m] != 0) zero = false;
    }
    r.checks.push_back(make_check("second E2 column 0 = H(coP F)", column));
    r.checks.push_back(make_check("second E2 vanishes in columns 1..n_cap-1", zero));

    for (std::size_t s = 0; s <= dc.total_cap(); ++s) {
        if (!dc.total_exact_in(s) || s >= r.invariant.dims.size() || !r.invariant.exact[s]) continue;
        r.checks.push_back(make_check("limit = H(coP F) in total degree " + std::to_string(s),
                                      r.total.dims[s] == r.invariant.dims[s],
                                      std::to_string(r.total.dims[s]) + " vs " + std::to_string(r.invariant.dims[s])));
    }
    return r;
}

}  // namespace hopfdr
