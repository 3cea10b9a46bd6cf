#ifndef KOSZUL_IO_HPP
#define KOSZUL_IO_HPP

#include <string>

#include <json.hpp>

#include "koszul/et.hpp"
#include "koszul/magnus.hpp"
#include "koszul/quad.hpp"

namespace koszul {

// Key order is part of the format: identical inputs give byte-identical
// documents, so golden files and reruns can diff them directly.
using Json = nlohmann::ordered_json;

Json algebra_to_json(const QuadraticAlgebra& a);
QuadraticAlgebra algebra_from_json(const Json& j);

Json presentation_to_json(const GroupPresentation& g);
GroupPresentation presentation_from_json(const Json& j);

Json report_to_json(const VerificationReport& rep);
/// Validates a report document and returns it in canonical form; the identity
/// on documents produced by report_to_json.
Json report_from_json(const Json& j);

Json certificate_to_json(const PbwCertificate& cert, const std::vector<std::string>& labels);

Json table_to_json(const BigradedTable& t);

std::string read_text_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

std::string render_report_text(const VerificationReport& rep);

}  // namespace koszul

#endif
