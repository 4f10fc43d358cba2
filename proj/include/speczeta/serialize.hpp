#pragma once

#include <string>
#include <vector>

#include "json.hpp"

#include "speczeta/characters.hpp"
#include "speczeta/cyclotomic.hpp"
#include "speczeta/lvalues.hpp"
#include "speczeta/numbers.hpp"
#include "speczeta/verify.hpp"

namespace speczeta {

// JSON uses insertion-ordered objects so output is byte-stable; exact values
// are always carried as "p/q" strings (or integer strings), never as floats.
using Json = nlohmann::ordered_json;

Json rational_to_json(const Rational& q);
Rational rational_from_json(const Json& j);

// A rational CycNum serializes to its plain "p/q" string; anything else to
// {"conductor": M, "coeffs": ["p/q", ...]} with phi(M) coefficients.
Json cycnum_to_json(const CycNum& z);
CycNum cycnum_from_json(const Json& j);

// {"pi_power": k, "coeff": <cycnum>}.
Json special_value_to_json(const SpecialValue& v);
SpecialValue special_value_from_json(const Json& j);

// {"index": i, "exponents": [...], "order": r, "parity": "even"|"odd",
//  "conductor": f, "primitive": bool}.
Json character_to_json(const DirichletCharacter& chi, unsigned long index);

// {"check_name": ..., "parameters": {...}, "status": "pass"|"fail",
//  "lhs": ..., "rhs": ..., "elapsed_ms": ...}.
Json report_entry_to_json(const ReportEntry& entry);
ReportEntry report_entry_from_json(const Json& j);

// --- CSV --------------------------------------------------------------------

// RFC-4180-style quoting, applied only when a field needs it.
std::string csv_escape(const std::string& field);
std::string csv_row(const std::vector<std::string>& fields);

// Same columns as the JSON schema, in the same order:
// check_name,parameters,status,lhs,rhs,elapsed_ms with parameters flattened
// to "k=v;k=v".
std::string report_entry_csv_header();
std::string report_entry_to_csv(const ReportEntry& entry);

}  // namespace speczeta
