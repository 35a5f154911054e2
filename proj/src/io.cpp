#include "kmu/io.hpp"

#include <fstream>
#include <set>

namespace kmu {

using nlohmann::json;

namespace {

void reject_unknown(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    if (!obj.is_object()) throw InputError(where + " must be an object");
    for (const auto& [key, _] : obj.items())
        if (!allowed.contains(key)) throw InputError("unknown field '" + key + "' in " + where);
}

const json& require(const json& obj, const std::string& key, const std::string& where) {
    auto it = obj.find(key);
    if (it == obj.end()) throw InputError("missing field '" + key + "' in " + where);
    return *it;
}

std::size_t index_value(const json& v, std::size_t dim, const std::string& what) {
    if (!v.is_number_integer()) throw InputError(what + " must be an integer");
    const auto x = v.get<long long>();
    if (x < 0 || static_cast<std::size_t>(x) >= dim)
        throw InputError(what + " = " + std::to_string(x) + " is out of range for dimension " + std::to_string(dim));
    return static_cast<std::size_t>(x);
}

template <Field S>
Vector<S> parse_vector(const json& j, std::size_t n, const std::string& what) {
    if (!j.is_array() || j.size() != n) throw InputError(what + " must be an array of length " + std::to_string(n));
    Vector<S> v;
    for (const auto& x : j) v.push_back(parse_scalar<S>(x));
    return v;
}

template <Field S>
AlgebraDocument<S> parse_typed(const json& j) {
    const std::size_t dim = [&] {
        const auto& d = require(j, "dim", "document");
        if (!d.is_number_integer() || d.get<long long>() < 1) throw InputError("dim must be a positive integer");
        return static_cast<std::size_t>(d.get<long long>());
    }();
    const auto& name_j = require(j, "name", "document");
    if (!name_j.is_string()) throw InputError("name must be a string");

    const auto& basis_j = require(j, "basis", "document");
    if (!basis_j.is_array() || basis_j.size() != dim) throw InputError("basis must list exactly dim labels");
    std::vector<std::string> labels;
    std::set<std::string> seen;
    for (const auto& l : basis_j) {
        if (!l.is_string()) throw InputError("basis labels must be strings");
        if (!seen.insert(l.get<std::string>()).second) throw InputError("duplicate basis label '" + l.get<std::string>() + "'");
        labels.push_back(l.get<std::string>());
    }

    std::vector<BracketEntry<S>> entries;
    const auto& br = require(j, "brackets", "document");
    if (!br.is_array()) throw InputError("brackets must be an array");
    for (std::size_t e = 0; e < br.size(); ++e) {
        const std::string where = "brackets[" + std::to_string(e) + "]";
        reject_unknown(br[e], {"i", "j", "terms"}, where);
        BracketEntry<S> entry;
        entry.i = index_value(require(br[e], "i", where), dim, where + ".i");
        entry.j = index_value(require(br[e], "j", where), dim, where + ".j");
        const auto& terms = require(br[e], "terms", where);
        if (!terms.is_array()) throw InputError(where + ".terms must be an array");
        for (std::size_t t = 0; t < terms.size(); ++t) {
            const std::string tw = where + ".terms[" + std::to_string(t) + "]";
            reject_unknown(terms[t], {"k", "value"}, tw);
            entry.terms.push_back(
                {index_value(require(terms[t], "k", tw), dim, tw + ".k"), parse_scalar<S>(require(terms[t], "value", tw))});
        }
        entries.push_back(std::move(entry));
    }

    LieAlgebra<S> alg = [&] {
        try {
            return LieAlgebra<S>(name_j.get<std::string>(), labels, entries);
        } catch (const std::invalid_argument& ex) {
            throw InputError(ex.what());
        }
    }();

    AlgebraDocument<S> doc;
    const auto& metric_j = require(j, "metric", "document");
    try {
        if (metric_j.is_string()) {
            if (metric_j.get<std::string>() != "orthonormal") throw InputError("metric must be \"orthonormal\" or a matrix");
            doc.metric = MetricLieAlgebra<S>(std::move(alg));
        } else {
            doc.metric = MetricLieAlgebra<S>(std::move(alg), parse_matrix<S>(metric_j, dim, dim, "metric"));
        }
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }

    if (auto it = j.find("contact"); it != j.end()) {
        reject_unknown(*it, {"xi", "eta", "phi"}, "contact");
        doc.contact = AlmostContactStructure<S>{parse_vector<S>(require(*it, "xi", "contact"), dim, "contact.xi"),
                                                parse_vector<S>(require(*it, "eta", "contact"), dim, "contact.eta"),
                                                parse_matrix<S>(require(*it, "phi", "contact"), dim, dim, "contact.phi")};
    }
    if (auto it = j.find("complex"); it != j.end()) {
        reject_unknown(*it, {"J"}, "complex");
        doc.complex = parse_matrix<S>(require(*it, "J", "complex"), dim, dim, "complex.J");
    }
    return doc;
}

template <Field S>
json matrix_json(const Matrix<S>& m) {
    json rows = json::array();
    for (std::size_t r = 0; r < m.rows(); ++r) {
        json row = json::array();
        for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_json(m(r, c)));
        rows.push_back(std::move(row));
    }
    return rows;
}

template <Field S>
json vector_json(const Vector<S>& v) {
    json out = json::array();
    for (const auto& x : v) out.push_back(scalar_json(x));
    return out;
}

}  // namespace

template <Field S>
S parse_scalar(const json& v) {
    try {
        if constexpr (is_exact_v<S>) {
            if (v.is_number_integer()) return S(v.get<long>());
            if (v.is_string()) return QSqrt2::parse(v.get<std::string>());
            throw InputError("exact values must be strings or integers");
        } else {
            if (v.is_number()) return v.get<double>();
            if (v.is_string()) return QSqrt2::parse(v.get<std::string>()).to_double();
            throw InputError("float values must be numbers");
        }
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
}

template <Field S>
json scalar_json(const S& x) {
    if constexpr (is_exact_v<S>)
        return x.to_string();
    else
        return x;
}

template <Field S>
Matrix<S> parse_matrix(const json& j, std::size_t rows, std::size_t cols, const std::string& what) {
    if (!j.is_array() || j.size() != rows)
        throw InputError(what + " must have " + std::to_string(rows) + " rows");
    Matrix<S> m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) {
        if (!j[r].is_array() || j[r].size() != cols)
            throw InputError(what + " row " + std::to_string(r) + " must have " + std::to_string(cols) + " entries");
        for (std::size_t c = 0; c < cols; ++c) m(r, c) = parse_scalar<S>(j[r][c]);
    }
    return m;
}

template <Field S>
ContactMetricAlgebra<S> AlgebraDocument<S>::contact_algebra() const {
    if (!contact) throw InputError("document '" + metric.name() + "' has no contact structure");
    return {metric, *contact};
}

template <Field S>
HermitianAlgebra<S> AlgebraDocument<S>::hermitian_algebra() const {
    if (!complex) throw InputError("document '" + metric.name() + "' has no complex structure");
    return {metric, *complex};
}

AnyDocument parse_document(const json& j) {
    reject_unknown(j, {"name", "field", "dim", "basis", "brackets", "metric", "contact", "complex"}, "document");
    const auto& field = require(j, "field", "document");
    if (!field.is_string()) throw InputError("field must be a string");
    if (field == FieldTraits<QSqrt2>::name) return parse_typed<QSqrt2>(j);
    if (field == FieldTraits<double>::name) return parse_typed<double>(j);
    throw InputError("unknown field '" + field.get<std::string>() + "'");
}

json read_json_file(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw InputError("cannot open " + path.string());
    try {
        return json::parse(in);
    } catch (const json::parse_error& ex) {
        throw InputError(path.string() + ": " + ex.what());
    }
}

AnyDocument load_document(const std::filesystem::path& path) { return parse_document(read_json_file(path)); }

template <Field S>
json to_json(const AlgebraDocument<S>& doc) {
    const auto& alg = doc.metric.algebra();
    json out;
    out["name"] = alg.name();
    out["field"] = FieldTraits<S>::name;
    out["dim"] = alg.dim();
    out["basis"] = alg.labels();
    json brackets = json::array();
    for (const auto& e : alg.entries()) {
        json terms = json::array();
        for (const auto& t : e.terms) terms.push_back({{"k", t.k}, {"value", scalar_json(t.value)}});
        brackets.push_back({{"i", e.i}, {"j", e.j}, {"terms", std::move(terms)}});
    }
    out["brackets"] = std::move(brackets);
    if (doc.metric.orthonormal())
        out["metric"] = "orthonormal";
    else
        out["metric"] = matrix_json(doc.metric.gram());
    if (doc.contact)
        out["contact"] = {{"xi", vector_json(doc.contact->xi)},
                          {"eta", vector_json(doc.contact->eta)},
                          {"phi", matrix_json(doc.contact->phi)}};
    if (doc.complex) out["complex"] = {{"J", matrix_json(*doc.complex)}};
    return out;
}

#define KMU_INSTANTIATE_IO(S)                                                                      \
    template struct AlgebraDocument<S>;                                                           \
    template S parse_scalar<S>(const json&);                                                      \
    template json scalar_json(const S&);                                                          \
    template Matrix<S> parse_matrix(const json&, std::size_t, std::size_t, const std::string&);   \
    template json to_json(const AlgebraDocument<S>&);

KMU_INSTANTIATE_IO(QSqrt2)
KMU_INSTANTIATE_IO(double)

}  // namespace kmu
