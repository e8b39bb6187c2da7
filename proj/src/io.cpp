#include "sba/io.hpp"

#include <cstdint>
#include <cstdio>
#include <fstream>
#include <sstream>

namespace sba::io {

using nlohmann::json;

std::string digest(const std::string& bytes) {
    std::uint64_t h = 0xcbf29ce484222325ull;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ull;
    }
    char buf[32];
    std::snprintf(buf, sizeof buf, "fnv1a:%016llx",
                  static_cast<unsigned long long>(h));
    return buf;
}

json field_to_json(const FieldDescriptor& f) {
    json j;
    j["kind"] = f.is_prime_field() ? "prime" : "rational";
    if (f.is_prime_field()) j["modulus"] = f.modulus;
    return j;
}

FieldDescriptor field_from_json(const json& j) {
    std::string kind = j.at("kind").get<std::string>();
    if (kind == "rational") return FieldDescriptor::rationals();
    if (kind == "prime")
        return FieldDescriptor::prime(j.at("modulus").get<std::uint64_t>());
    throw Error("unknown field kind: " + kind);
}

json matrix_to_json(const TorusMatrix& A) {
    json j;
    j["field"] = field_to_json(A.field());
    j["rows"] = A.rows();
    j["cols"] = A.cols();
    j["precision"] = A.precision();
    json entries = json::array();
    for (int m = 0; m < A.rows(); ++m) {
        json row = json::array();
        for (int n = 0; n < A.cols(); ++n) {
            json coeffs = json::array();
            for (int i = 1; i <= A.precision(); ++i)
                coeffs.push_back(A.at(m, n).coeff(i).to_string());
            row.push_back(std::move(coeffs));
        }
        entries.push_back(std::move(row));
    }
    j["entries"] = std::move(entries);
    return j;
}

TorusMatrix matrix_from_json(const json& j) {
    FieldDescriptor f = field_from_json(j.at("field"));
    int rows = j.at("rows").get<int>();
    int cols = j.at("cols").get<int>();
    int precision = j.at("precision").get<int>();
    TorusMatrix A(f, rows, cols, precision);
    const json& entries = j.at("entries");
    if (static_cast<int>(entries.size()) != rows)
        throw Error("entry grid has wrong row count");
    for (int m = 0; m < rows; ++m) {
        const json& row = entries.at(static_cast<size_t>(m));
        if (static_cast<int>(row.size()) != cols)
            throw Error("entry grid has wrong column count");
        for (int n = 0; n < cols; ++n) {
            const json& coeffs = row.at(static_cast<size_t>(n));
            if (static_cast<int>(coeffs.size()) != precision)
                throw Error("coefficient list length differs from precision");
            std::vector<Scalar> v;
            v.reserve(coeffs.size());
            for (const auto& c : coeffs)
                v.push_back(Scalar::parse(f, c.get<std::string>()));
            A.set(m, n, LaurentTail(f, std::move(v)));
        }
    }
    return A;
}

void write_matrix_file(const std::string& path, const TorusMatrix& A) {
    write_json_file(path, matrix_to_json(A));
}

TorusMatrix read_matrix_file(const std::string& path) {
    return matrix_from_json(read_json_file(path));
}

json poly_vector_to_json(const PolyVector& xi) {
    json j = json::array();
    for (const auto& p : xi.entries) {
        json coeffs = json::array();
        for (const auto& c : p.coeffs()) coeffs.push_back(c.to_string());
        j.push_back(std::move(coeffs));
    }
    return j;
}

json defect_report_to_json(const DefectReport& r) {
    json j;
    j["window"] = {{"maxSumU", r.window.max_sum_u},
                   {"maxSumV", r.window.max_sum_v},
                   {"precision", r.window.precision}};
    j["c2Observed"] = r.c2_observed;
    j["c1Derived"] = r.c1_derived;
    json per = json::array();
    for (const auto& rec : r.per_shape)
        per.push_back({{"shape", rec.shape.to_string()},
                       {"dim", rec.dim},
                       {"dirichletBound", rec.dirichlet_bound},
                       {"defect", rec.defect}});
    j["perShape"] = std::move(per);
    return j;
}

json star_certificate_to_json(const StarCertificate& c) {
    json j;
    j["matrixId"] = c.matrix_id;
    j["maxOrder"] = c.max_order;
    j["field"] = field_to_json(c.field);
    json shapes = json::array();
    for (const auto& [shape, det] : c.checked_shapes)
        shapes.push_back({{"shape", shape.to_string()}, {"det", det.to_string()}});
    j["checkedShapes"] = std::move(shapes);
    return j;
}

json failure_witness_to_json(const FailureWitness& w) {
    json rows = json::array();
    for (int r = 0; r < w.matrix.rows(); ++r) {
        json row = json::array();
        for (int c = 0; c < w.matrix.cols(); ++c)
            row.push_back(w.matrix.at(r, c).to_string());
        rows.push_back(std::move(row));
    }
    return {{"shape", w.shape.to_string()}, {"matrix", std::move(rows)}};
}

json min_product_report_to_json(const MinProductReport& r) {
    json j;
    j["degreeBound"] = r.degree_bound;
    if (r.min_log) {
        j["minLog"] = r.min_log->value();
        j["witness"] = poly_vector_to_json(r.witness);
    } else {
        j["minLog"] = nullptr;
    }
    json zf = json::array();
    for (const auto& w : r.zero_forms)
        zf.push_back({{"xi", poly_vector_to_json(w.xi)},
                      {"row", w.row},
                      {"zeroTo", w.zero_to}});
    j["zeroForms"] = std::move(zf);
    return j;
}

json generate_result_to_json(const GenerateResult& r) {
    json j;
    j["rows"] = r.matrix.rows();
    j["cols"] = r.matrix.cols();
    j["extensionOrder"] = r.extension_order;
    j["rejectionsPerLevel"] = r.rejections_per_level;
    j["certificate"] = star_certificate_to_json(r.certificate);
    return j;
}

json report_file(const std::string& kind, json payload,
                 const std::string& input_digest) {
    json j;
    j["kind"] = kind;
    j["toolVersion"] = kToolVersion;
    j["inputDigest"] = input_digest;
    j["payload"] = std::move(payload);
    return j;
}

void write_json_file(const std::string& path, const json& j) {
    std::string tmp = path + ".tmp";
    {
        std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
        if (!os) throw Error("cannot open for writing: " + tmp);
        os << j.dump(2) << "\n";
    }
    if (std::rename(tmp.c_str(), path.c_str()) != 0)
        throw Error("cannot rename into place: " + path);
}

json read_json_file(const std::string& path) {
    std::ifstream is(path, std::ios::binary);
    if (!is) throw Error("cannot open: " + path);
    try {
        return json::parse(is);
    } catch (const json::parse_error& e) {
        throw Error("malformed JSON in " + path + ": " + e.what());
    }
}

} // namespace sba::io
