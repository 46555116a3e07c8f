#pragma once

// JSON and CSV serialization for certificates, code records, and tables.
// Uses ordered JSON so re-running an instance reproduces its certificate
// byte for byte.

#include <json.hpp>

#include "negaconv/families.hpp"

namespace negaconv {

using Json = nlohmann::ordered_json;

Json field_to_json(const Field& f);                  // {p, m, modulus}
Json element_to_json(const Field& f, uint32_t idx);  // coordinate vector
Json poly_to_json(const Poly& p);
Json code_to_json(const NegacyclicCode& c, const std::string& distance_status);
Json poly_matrix_to_json(const PolyMatrix& g);
Json quantum_to_json(const QuantumConvParams& p);
Json certificate_to_json(const VerificationCertificate& c);
Json instance_to_json(const FamilyInstance& inst);

std::string table_csv(const TableReport& rep);
Json table_json(const TableReport& rep);

}  // namespace negaconv
