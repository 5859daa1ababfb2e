#include "hopfdr/document.hpp"

#include <fstream>
#include <sstream>

#include "hopfdr/builtins.hpp"
#include "json.hpp"

namespace hopfdr {

using nlohmann::json;

namespace {

std::string as_decimal(const json& v, const std::string& where) {
    if (v.is_string()) return v.get<std::string>();
    if (v.is_number_integer()) return std::to_string(v.get<long long>());
    throw DocumentError(where + ": expected an integer or a decimal string");
}

Scalar parse_scalar(Field f, const json& v, const std::string& where) {
    std::string num, den = "1";
    if (v.is_array()) {
        if (v.size() != 2) throw DocumentError(where + ": expected [numerator, denominator]");
        num = as_decimal(v[0], where + "[0]");
        den = as_decimal(v[1], where + "[1]");
    } else {
        num = as_decimal(v, where);
    }
    try {
        return f.from_string(num, den);
    } catch (const std::exception& e) {
        throw DocumentError(where + ": " + e.what());
    }
}

json scalar_json(const Scalar& s) { return json::array({s.numerator(), s.denominator()}); }

const json& member(const json& doc, const std::string& key) {
    if (!doc.contains(key)) throw DocumentError("missing field '" + key + "'");
    return doc.at(key);
}

std::size_t index_in(const json& v, std::size_t bound, const std::string& where) {
    if (!v.is_number_integer() || v.get<long long>() < 0 || static_cast<std::size_t>(v.get<long long>()) >= bound)
        throw DocumentError(where + ": expected an index below " + std::to_string(bound));
    return static_cast<std::size_t>(v.get<long long>());
}

Mat parse_triples(Field f, const json& v, std::size_t n, bool comult, const std::string& key) {
    if (!v.is_array()) throw DocumentError(key + ": expected a list of [i, j, k, num, den]");
    Mat m = comult ? Mat(f, n * n, n) : Mat(f, n, n * n);
    for (std::size_t t = 0; t < v.size(); ++t) {
        std::string where = key + "[" + std::to_string(t) + "]";
        const json& e = v[t];
        if (!e.is_array() || (e.size() != 5 && e.size() != 4))
            throw DocumentError(where + ": expected [i, j, k, num, den]");
        std::size_t i = index_in(e[0], n, where + "[0]"), j = index_in(e[1], n, where + "[1]"),
                    k = index_in(e[2], n, where + "[2]");
        Scalar c = e.size() == 5 ? parse_scalar(f, json::array({e[3], e[4]}), where) : parse_scalar(f, e[3], where);
        std::size_t row = comult ? j * n + k : k, col = comult ? i : i * n + j;
        m.set(row, col, m.at(row, col) + c);
    }
    return m;
}

std::vector<Scalar> parse_vector(Field f, const json& v, std::size_t n, const std::string& where) {
    if (!v.is_array() || v.size() != n) throw DocumentError(where + ": expected " + std::to_string(n) + " entries");
    std::vector<Scalar> out;
    for (std::size_t i = 0; i < n; ++i) out.push_back(parse_scalar(f, v[i], where + "[" + std::to_string(i) + "]"));
    return out;
}

json triples_json(const Mat& m, std::size_t n, bool comult) {
    json out = json::array();
    for (std::size_t c = 0; c < m.cols(); ++c)
        for (const auto& e : m.col(c)) {
            std::size_t i = comult ? c : c / n, j = comult ? e.row / n : c % n, k = comult ? e.row % n : e.row;
            out.push_back(json::array({i, j, k, e.value.numerator(), e.value.denominator()}));
        }
    return out;
}

json vector_json(const Mat& m) {
    json out = json::array();
    for (const auto& s : m.dense_col(0)) out.push_back(scalar_json(s));
    return out;
}

std::string line_context(const std::string& text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return "line " + std::to_string(line) + ", column " + std::to_string(col);
}

}  // namespace

Field parse_field(const std::string& spec) {
    if (spec == "Q") return Field::rationals();
    if (spec.size() >= 2 && spec[0] == 'F' && spec.find_first_not_of("0123456789", 1) == std::string::npos) {
        try {
            return Field::prime(std::stoull(spec.substr(1)));
        } catch (const std::exception& e) {
            throw DocumentError("field '" + spec + "': " + e.what());
        }
    }
    throw DocumentError("field '" + spec + "': expected Q or F<p>");
}

AlgebraDocument parse_document(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw DocumentError("not valid JSON at " + line_context(text, e.byte) + ": " + e.what());
    }
    if (!doc.is_object()) throw DocumentError("document must be a JSON object");
    const json& version = member(doc, "schema_version");
    if (!version.is_string() || version.get<std::string>() != document_schema_version)
        throw DocumentError("schema_version: expected \"" + std::string(document_schema_version) + "\"");

    AlgebraDocument out;
    if (doc.contains("name")) out.name = doc["name"].get<std::string>();
    const json& fj = member(doc, "field");
    if (!fj.is_string()) throw DocumentError("field: expected a string");
    Field f = parse_field(fj.get<std::string>());
    const json& dj = member(doc, "dim");
    if (!dj.is_number_integer() || dj.get<long long>() <= 0) throw DocumentError("dim: expected a positive integer");
    std::size_t n = static_cast<std::size_t>(dj.get<long long>());

    HopfData& d = out.data;
    d.field = f;
    d.dim = n;
    if (doc.contains("labels")) {
        const json& l = doc["labels"];
        if (!l.is_array() || l.size() != n) throw DocumentError("labels: expected " + std::to_string(n) + " strings");
        for (const auto& s : l) d.labels.push_back(s.get<std::string>());
    } else {
        for (std::size_t i = 0; i < n; ++i) d.labels.push_back("e" + std::to_string(i));
    }
    d.mult = parse_triples(f, member(doc, "mult"), n, false, "mult");
    d.comult = parse_triples(f, member(doc, "comult"), n, true, "comult");
    d.unit = Mat::from_dense(f, n, 1, parse_vector(f, member(doc, "unit"), n, "unit"));
    d.counit = Mat::from_dense(f, 1, n, parse_vector(f, member(doc, "counit"), n, "counit"));
    const json& sj = member(doc, "antipode");
    if (!sj.is_array() || sj.size() != n) throw DocumentError("antipode: expected " + std::to_string(n) + " rows");
    std::vector<Scalar> s;
    for (std::size_t i = 0; i < n; ++i) {
        auto row = parse_vector(f, sj[i], n, "antipode[" + std::to_string(i) + "]");
        s.insert(s.end(), row.begin(), row.end());
    }
    d.antipode = Mat::from_dense(f, n, n, s);

    if (doc.contains("ideals")) {
        const json& ij = doc["ideals"];
        if (!ij.is_array()) throw DocumentError("ideals: expected a list");
        for (std::size_t t = 0; t < ij.size(); ++t) {
            std::string where = "ideals[" + std::to_string(t) + "]";
            const json& b = ij[t];
            if (!b.is_object() || !b.contains("name") || !b.contains("vectors"))
                throw DocumentError(where + ": expected {\"name\", \"vectors\"}");
            const json& vs = b["vectors"];
            if (!vs.is_array()) throw DocumentError(where + ".vectors: expected a list");
            Mat m(f, n, 0);
            for (std::size_t c = 0; c < vs.size(); ++c) {
                auto v = parse_vector(f, vs[c], n, where + ".vectors[" + std::to_string(c) + "]");
                m = hstack({m, Mat::from_dense(f, n, 1, v)});
            }
            out.ideals.emplace_back(b["name"].get<std::string>(), std::move(m));
        }
    }
    return out;
}

std::string write_document(const AlgebraDocument& doc) {
    const HopfData& d = doc.data;
    json out;
    out["schema_version"] = document_schema_version;
    out["name"] = doc.name;
    out["field"] = d.field.name();
    out["dim"] = d.dim;
    out["labels"] = d.labels;
    out["mult"] = triples_json(d.mult, d.dim, false);
    out["comult"] = triples_json(d.comult, d.dim, true);
    out["unit"] = vector_json(d.unit);
    out["counit"] = vector_json(d.counit.transpose());
    json s = json::array();
    for (const auto& row : d.antipode.to_dense()) {
        json r = json::array();
        for (const auto& x : row) r.push_back(scalar_json(x));
        s.push_back(r);
    }
    out["antipode"] = s;
    json ideals = json::array();
    for (const auto& [name, m] : doc.ideals) {
        json vs = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) vs.push_back(vector_json(m.col_range(c, c + 1)));
        ideals.push_back({{"name", name}, {"vectors", vs}});
    }
    out["ideals"] = ideals;
    return out.dump(1) + "\n";
}

AlgebraDocument document_of(const FinHopfAlgebra& p, std::vector<std::pair<std::string, Mat>> ideals) {
    return AlgebraDocument{p.name(), p.data(), std::move(ideals)};
}

AlgebraDocument load_document(const std::string& source, std::optional<Field> field) {
    const std::string prefix = "builtin:";
    if (source.rfind(prefix, 0) == 0) {
        std::string name = source.substr(prefix.size());
        FinHopfAlgebra p;
        try {
            p = builtin(name, field);
        } catch (const InvalidHopfAlgebra&) {
            throw;
        } catch (const Error& e) {
            throw DocumentError(source + ": " + e.what());
        }
        return document_of(p, builtin_ideals(name, p));
    }
    std::ifstream in(source);
    if (!in) throw DocumentError(source + ": cannot open");
    std::stringstream ss;
    ss << in.rdbuf();
    AlgebraDocument doc;
    try {
        doc = parse_document(ss.str());
    } catch (const DocumentError& e) {
        throw DocumentError(source + ": " + e.what());
    }
    if (field && !(*field == doc.data.field))
        throw DocumentError(source + ": document is over " + doc.data.field.name() + ", not " + field->name());
    if (doc.name.empty()) doc.name = source;
    return doc;
}

}  // namespace hopfdr
