#include "hopfdr/hopf.hpp"

#include "accumulator.hpp"
#include "hopfdr/legs.hpp"

namespace hopfdr {

namespace {

void require_shape(const Mat& m, std::size_t r, std::size_t c, const char* what) {
    if (m.rows() != r || m.cols() != c) {
        throw ShapeError(std::string(what) + " has shape " + shape_of(m) + ", expected " + std::to_string(r) + "x" +
                         std::to_string(c));
    }
}

std::string label_of(const HopfData& d, std::size_t index, std::size_t legs) {
    std::vector<std::size_t> digits(legs);
    for (std::size_t i = legs; i-- > 0;) {
        digits[i] = index % d.dim;
        index /= d.dim;
    }
    std::string s;
    for (std::size_t i = 0; i < legs; ++i) {
        if (i) s += "⊗";
        s += d.labels.size() == d.dim ? d.labels[digits[i]] : "e" + std::to_string(digits[i]);
    }
    return s;
}

Mat tensor_mult_of(const HopfData& d) {
    Legs l(d.field, {d.dim, d.dim, d.dim, d.dim});
    l.permute({0, 2, 1, 3});
    l.apply(0, 2, d.mult, {d.dim});
    l.apply(1, 2, d.mult, {d.dim});
    return l.take();
}

}  // namespace

const std::vector<std::string>& hopf_axiom_names() {
    static const std::vector<std::string> names{
        "associativity", "left unit", "right unit", "coassociativity", "left counit", "right counit",
        "comultiplication is multiplicative", "comultiplication is unital", "counit is multiplicative",
        "counit is unital", "antipode m(S⊗id)Δ = uε", "antipode m(id⊗S)Δ = uε"};
    return names;
}

std::vector<AxiomViolation> check_hopf_axioms(const HopfData& d) {
    std::size_t n = d.dim;
    if (n == 0) throw ShapeError("Hopf algebra of dimension 0");
    require_shape(d.mult, n, n * n, "mult");
    require_shape(d.unit, n, 1, "unit");
    require_shape(d.comult, n * n, n, "comult");
    require_shape(d.counit, 1, n, "counit");
    require_shape(d.antipode, n, n, "antipode");
    for (const Mat* m : {&d.mult, &d.unit, &d.comult, &d.counit, &d.antipode})
        if (!(m->field() == d.field)) throw FieldMismatch("structure tensor outside the declared field");

    Field f = d.field;
    Mat id = Mat::identity(f, n);
    Mat one = Mat::identity(f, 1);
    std::vector<AxiomViolation> out;
    auto expect = [&](const std::string& axiom, const Mat& a, const Mat& b, std::size_t legs) {
        if (auto j = first_difference(a, b)) out.push_back({axiom, *j, label_of(d, *j, legs)});
    };

    expect("associativity", d.mult * kron(d.mult, id), d.mult * kron(id, d.mult), 3);
    expect("left unit", d.mult * kron(d.unit, id), id, 1);
    expect("right unit", d.mult * kron(id, d.unit), id, 1);
    expect("coassociativity", kron(d.comult, id) * d.comult, kron(id, d.comult) * d.comult, 1);
    expect("left counit", kron(d.counit, id) * d.comult, id, 1);
    expect("right counit", kron(id, d.counit) * d.comult, id, 1);
    expect("comultiplication is multiplicative", d.comult * d.mult, tensor_mult_of(d) * kron(d.comult, d.comult), 2);
    expect("comultiplication is unital", d.comult * d.unit, kron(d.unit, d.unit), 0);
    expect("counit is multiplicative", d.counit * d.mult, kron(d.counit, d.counit), 2);
    expect("counit is unital", d.counit * d.unit, one, 0);
    Mat ue = d.unit * d.counit;
    expect("antipode m(S⊗id)Δ = uε", d.mult * kron(d.antipode, id) * d.comult, ue, 1);
    expect("antipode m(id⊗S)Δ = uε", d.mult * kron(id, d.antipode) * d.comult, ue, 1);
    return out;
}

FinHopfAlgebra FinHopfAlgebra::validate(HopfData data, std::string name) {
    if (data.labels.size() != data.dim) {
        data.labels.clear();
        for (std::size_t i = 0; i < data.dim; ++i) data.labels.push_back("e" + std::to_string(i));
    }
    auto v = check_hopf_axioms(data);
    if (!v.empty()) {
        std::string msg = "Hopf axioms violated:";
        for (const auto& x : v) msg += " [" + x.axiom + " at " + x.witness_label + "]";
        throw InvalidHopfAlgebra(msg, std::move(v));
    }
    auto st = std::make_shared<State>();
    st->name = std::move(name);
    st->antipode_inverse = inverse(data.antipode);
    st->data = std::move(data);
    FinHopfAlgebra p;
    p.s_ = std::move(st);
    return p;
}

const Mat& FinHopfAlgebra::antipode_inverse() const {
    if (!s_->antipode_inverse) throw Unavailable("antipode of " + name() + " is not invertible");
    return *s_->antipode_inverse;
}

Mat FinHopfAlgebra::comult_iter(std::size_t n) const {
    Legs l(field(), {dim()});
    for (std::size_t k = 0; k < n; ++k) l.apply(0, 1, comult(), {dim(), dim()});
    return l.take();
}

Mat FinHopfAlgebra::mult_iter(std::size_t k) const {
    if (k == 0) return unit();
    std::vector<std::size_t> dims(k, dim());
    Legs l(field(), dims);
    for (std::size_t i = 1; i < k; ++i) l.apply(0, 2, mult(), {dim()});
    return l.take();
}

Mat FinHopfAlgebra::tensor_mult() const { return tensor_mult_of(data()); }

SparseVec FinHopfAlgebra::product(const SparseVec& a, const SparseVec& b) const {
    detail::Accumulator acc(field(), dim());
    for (const auto& x : a)
        for (const auto& y : b) acc.add(x.value * y.value, mult().col(x.row * dim() + y.row));
    return acc.take();
}

std::string FinHopfAlgebra::tensor_label(std::size_t index, std::size_t legs) const {
    return label_of(data(), index, legs);
}

bool FinHopfAlgebra::is_commutative() const { return mult() == mult() * flip(field(), dim(), dim()); }

bool FinHopfAlgebra::is_cocommutative() const { return comult() == flip(field(), dim(), dim()) * comult(); }

}  // namespace hopfdr
