#include "hopfdr/builtins.hpp"

namespace hopfdr {

std::size_t CayleyTable::inverse(std::size_t g) const {
    for (std::size_t h = 0; h < order(); ++h)
        if (table[g][h] == 0) return h;
    throw Error("group element without inverse");
}

CayleyTable cyclic_group(std::size_t n) {
    CayleyTable g;
    g.table.assign(n, std::vector<std::size_t>(n));
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) g.table[a][b] = (a + b) % n;
        g.labels.push_back(a == 0 ? "e" : a == 1 ? "g" : "g^" + std::to_string(a));
    }
    return g;
}

void validate_group(const CayleyTable& g) {
    std::size_t n = g.order();
    if (n == 0) throw Error("empty group");
    for (const auto& row : g.table) {
        if (row.size() != n) throw Error("Cayley table is not square");
        for (auto x : row)
            if (x >= n) throw Error("Cayley table entry out of range");
    }
    for (std::size_t a = 0; a < n; ++a)
        if (g.table[0][a] != a || g.table[a][0] != a) throw Error("element 0 is not the identity");
    for (std::size_t a = 0; a < n; ++a) {
        g.inverse(a);
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                if (g.table[g.table[a][b]][c] != g.table[a][g.table[b][c]]) throw Error("Cayley table not associative");
    }
}

namespace {

std::vector<std::string> group_labels(const CayleyTable& g) {
    if (g.labels.size() == g.order()) return g.labels;
    std::vector<std::string> l;
    for (std::size_t i = 0; i < g.order(); ++i) l.push_back("t" + std::to_string(i));
    return l;
}

Scalar power(Scalar a, std::size_t e) {
    Scalar r = a.field().one();
    for (std::size_t i = 0; i < e; ++i) r *= a;
    return r;
}

bool primitive_root(const Scalar& q, std::size_t n) {
    Scalar x = q;
    for (std::size_t k = 1; k < n; ++k) {
        if (x.is_one()) return false;
        x *= q;
    }
    return x.is_one();
}

}  // namespace

FinHopfAlgebra group_algebra(const CayleyTable& g, Field f, std::string name) {
    validate_group(g);
    std::size_t n = g.order();
    HopfData d;
    d.field = f;
    d.dim = n;
    d.labels = group_labels(g);
    d.mult = Mat(f, n, n * n);
    d.comult = Mat(f, n * n, n);
    d.antipode = Mat(f, n, n);
    d.unit = Mat::unit_vector(f, n, 0);
    d.counit = Mat(f, 1, n);
    Scalar one = f.one();
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) d.mult.set(g.table[a][b], a * n + b, one);
        d.comult.set(a * n + a, a, one);
        d.antipode.set(g.inverse(a), a, one);
        d.counit.set(0, a, one);
    }
    return FinHopfAlgebra::validate(std::move(d), name.empty() ? "kG" : std::move(name));
}

FinHopfAlgebra function_algebra(const CayleyTable& g, Field f, std::string name) {
    validate_group(g);
    std::size_t n = g.order();
    HopfData d;
    d.field = f;
    d.dim = n;
    for (const auto& l : group_labels(g)) d.labels.push_back("d_" + l);
    d.mult = Mat(f, n, n * n);
    d.comult = Mat(f, n * n, n);
    d.antipode = Mat(f, n, n);
    d.unit = Mat(f, n, 1);
    d.counit = Mat::unit_vector(f, n, 0).transpose();
    Scalar one = f.one();
    for (std::size_t a = 0; a < n; ++a) {
        d.mult.set(a, a * n + a, one);
        d.unit.set(a, 0, one);
        d.antipode.set(g.inverse(a), a, one);
        for (std::size_t h = 0; h < n; ++h)
            for (std::size_t k = 0; k < n; ++k)
                if (g.table[h][k] == a) d.comult.set(h * n + k, a, one);
    }
    return FinHopfAlgebra::validate(std::move(d), name.empty() ? "k^G" : std::move(name));
}

FinHopfAlgebra taft(std::size_t n, Field f, std::optional<Scalar> q, std::string name) {
    if (n < 2) throw Error("Taft algebra needs n >= 2");
    if (q) {
        if (q->characteristic() != f.characteristic()) throw FieldMismatch("root of unity outside the field");
        if (!primitive_root(*q, n)) throw Unavailable(q->to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
    } else if (f.is_rational()) {
        if (n != 2) throw Unavailable("Q has no primitive " + std::to_string(n) + "-th root of unity");
        q = f.from_int(-1);
    } else {
        std::uint64_t p = f.characteristic();
        if ((p - 1) % n != 0) throw Unavailable(f.name() + " has no primitive " + std::to_string(n) + "-th root of unity");
        for (std::uint64_t c = 2; c < p && !q; ++c) {
            Scalar cand = f.from_int(static_cast<std::int64_t>(pow_mod(c, (p - 1) / n, p)));
            if (primitive_root(cand, n)) q = cand;
        }
        if (!q) throw Unavailable("no primitive root of unity found");
    }

    std::size_t dim = n * n;
    auto idx = [n](std::size_t i, std::size_t j) { return j * n + i; };
    HopfData d;
    d.field = f;
    d.dim = dim;
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            std::string gs = i == 0 ? "" : i == 1 ? "g" : "g^" + std::to_string(i);
            std::string xs = j == 0 ? "" : j == 1 ? "x" : "x^" + std::to_string(j);
            d.labels.push_back(gs.empty() && xs.empty() ? "1" : gs + xs);
        }
    d.mult = Mat(f, dim, dim * dim);
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            for (std::size_t c = 0; c < n; ++c)
                for (std::size_t e = 0; e < n; ++e) {
                    if (b + e >= n) continue;
                    // x^b g^c = q^{bc} g^c x^b
                    d.mult.set(idx((a + c) % n, b + e), idx(a, b) * dim + idx(c, e), power(*q, b * c));
                }
    d.unit = Mat::unit_vector(f, dim, idx(0, 0));
    d.counit = Mat(f, 1, dim);
    for (std::size_t i = 0; i < n; ++i) d.counit.set(0, idx(i, 0), f.one());

    // Δ and S are extended multiplicatively from the generators
    auto prod = [&](const SparseVec& u, const SparseVec& v) {
        SparseVec out;
        for (const auto& x : u)
            for (const auto& y : v) axpy(out, x.value * y.value, d.mult.col(x.row * dim + y.row));
        return out;
    };
    Mat tm = kron(d.mult, d.mult) * permutation_tensor(f, {dim, dim, dim, dim}, {0, 2, 1, 3});
    auto tprod = [&](const SparseVec& u, const SparseVec& v) {
        SparseVec uv;
        for (const auto& x : u)
            for (const auto& y : v) uv.push_back({static_cast<std::uint32_t>(x.row * dim * dim + y.row), x.value * y.value});
        return tm.apply(uv);
    };
    std::uint32_t gi = idx(1, 0), xi = idx(0, 1), one_i = idx(0, 0);
    auto ten = [&](std::uint32_t a, std::uint32_t b) { return static_cast<std::uint32_t>(a * dim + b); };
    SparseVec dg{{ten(gi, gi), f.one()}};
    SparseVec dx;
    axpy(dx, f.one(), SparseVec{{ten(xi, one_i), f.one()}});
    axpy(dx, f.one(), SparseVec{{ten(gi, xi), f.one()}});
    SparseVec sg{{static_cast<std::uint32_t>(idx(n - 1, 0)), f.one()}};
    SparseVec sx{{static_cast<std::uint32_t>(idx(n - 1, 1)), -f.one()}};
    d.comult = Mat(f, dim * dim, dim);
    d.antipode = Mat(f, dim, dim);
    for (std::size_t j = 0; j < n; ++j)
        for (std::size_t i = 0; i < n; ++i) {
            SparseVec del{{ten(one_i, one_i), f.one()}};
            SparseVec s{{one_i, f.one()}};
            for (std::size_t k = 0; k < i; ++k) {
                del = tprod(del, dg);
                s = prod(sg, s);
            }
            for (std::size_t k = 0; k < j; ++k) {
                del = tprod(del, dx);
                s = prod(sx, s);
            }
            d.comult.set_col(idx(i, j), del);
            d.antipode.set_col(idx(i, j), s);
        }
    if (name.empty()) name = "taft" + std::to_string(n);
    return FinHopfAlgebra::validate(std::move(d), std::move(name));
}

FinHopfAlgebra sweedler(Field f) {
    if (f.characteristic() == 2) throw Unavailable("Sweedler's algebra needs characteristic other than 2");
    return taft(2, f, f.from_int(-1), "sweedler");
}

FinHopfAlgebra dual_of(const FinHopfAlgebra& h) {
    HopfData d;
    d.field = h.field();
    d.dim = h.dim();
    for (const auto& l : h.labels()) d.labels.push_back(l + "*");
    d.mult = h.comult().transpose();
    d.comult = h.mult().transpose();
    d.unit = h.counit().transpose();
    d.counit = h.unit().transpose();
    d.antipode = h.antipode().transpose();
    return FinHopfAlgebra::validate(std::move(d), h.name() + "*");
}

std::vector<std::string> builtin_names() { return {"kZ2", "kZ3", "kZ4", "fZ2", "fZ3", "fZ4", "sweedler", "taft3"}; }

Field builtin_default_field(const std::string& name) {
    if (name == "taft3") return Field::prime(7);
    return Field::rationals();
}

FinHopfAlgebra builtin(const std::string& name, std::optional<Field> f) {
    Field fld = f ? *f : builtin_default_field(name);
    if (name.size() == 3 && (name[0] == 'k' || name[0] == 'f') && name[1] == 'Z' && name[2] >= '2' && name[2] <= '9') {
        CayleyTable g = cyclic_group(static_cast<std::size_t>(name[2] - '0'));
        return name[0] == 'k' ? group_algebra(g, fld, name) : function_algebra(g, fld, name);
    }
    if (name == "sweedler") return sweedler(fld);
    if (name == "taft3") return taft(3, fld, std::nullopt, name);
    throw Error("unknown builtin '" + name + "'");
}

std::vector<std::pair<std::string, Mat>> builtin_ideals(const std::string& name, const FinHopfAlgebra& p) {
    std::vector<std::pair<std::string, Mat>> out;
    Field f = p.field();
    if (name == "sweedler") {
        // span{g - 1, gx - x}
        out.push_back({"gx", Mat::from_ints(f, {{-1, 0}, {1, 0}, {0, -1}, {0, 1}})});
    }
    return out;
}

ComoduleAlgebra group_algebra_over_quotient(const CayleyTable& g, const FinHopfAlgebra& kh,
                                            const std::vector<std::size_t>& hom) {
    validate_group(g);
    std::size_t n = g.order();
    Field f = kh.field();
    if (hom.size() != n) throw ShapeError("homomorphism table has the wrong length");
    Mat mult(f, n, n * n);
    Mat lam(f, kh.dim() * n, n);
    for (std::size_t a = 0; a < n; ++a) {
        for (std::size_t b = 0; b < n; ++b) mult.set(g.table[a][b], a * n + b, f.one());
        lam.set(hom[a] * n + a, a, f.one());
    }
    Comodule c = make_comodule(kh, std::move(lam), Side::left);
    return make_comodule_algebra(n, group_labels(g), std::move(mult), Mat::unit_vector(f, n, 0), std::move(c));
}

}  // namespace hopfdr
