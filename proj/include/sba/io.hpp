#ifndef SBA_IO_HPP
#define SBA_IO_HPP

#include <string>

#include <json.hpp>

#include "sba/constructor.hpp"
#include "sba/criterion.hpp"
#include "sba/series.hpp"

namespace sba::io {

inline constexpr const char* kToolVersion = "0.1.0";

// FNV-1a over the raw bytes, rendered as "fnv1a:<hex>".
std::string digest(const std::string& bytes);

nlohmann::json field_to_json(const FieldDescriptor& f);
FieldDescriptor field_from_json(const nlohmann::json& j);

// Matrix file: entries[m][n] is the list of tail coefficients as canonical
// scalar text, ascending index from 1; list length equals the precision.
nlohmann::json matrix_to_json(const TorusMatrix& A);
TorusMatrix matrix_from_json(const nlohmann::json& j);

void write_matrix_file(const std::string& path, const TorusMatrix& A);
TorusMatrix read_matrix_file(const std::string& path);

nlohmann::json poly_vector_to_json(const PolyVector& xi);
nlohmann::json defect_report_to_json(const DefectReport& r);
nlohmann::json star_certificate_to_json(const StarCertificate& c);
nlohmann::json failure_witness_to_json(const FailureWitness& w);
nlohmann::json min_product_report_to_json(const MinProductReport& r);
nlohmann::json generate_result_to_json(const GenerateResult& r);

// Report envelope: {kind, toolVersion, inputDigest, payload}.  Reports are
// self-contained; window bounds and precision live inside the payload.
nlohmann::json report_file(const std::string& kind, nlohmann::json payload,
                           const std::string& input_digest);

// Serializes with a stable layout (sorted keys, fixed indent) and writes
// via a temporary file plus rename.
void write_json_file(const std::string& path, const nlohmann::json& j);
nlohmann::json read_json_file(const std::string& path);

} // namespace sba::io

#endif
