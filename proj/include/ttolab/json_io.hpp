#pragma once

#include <json.hpp>
#include <string>

#include "ttolab/operators.hpp"

namespace ttolab {

// Order-preserving JSON keeps report output deterministic.
using Json = nlohmann::ordered_json;

// Complex numbers travel as [re, im] everywhere.
Json complex_to_json(Complex c);
Complex complex_from_json(const Json& j);

// {"zeros": [[re,im],...], "gamma": real, "mode": "plain"|"normalized"}
Json blaschke_to_json(const FiniteBlaschke& B);
FiniteBlaschke blaschke_from_json(const Json& j);

// {"blaschke": {...}, "basis": "kernel"|"monomial"|"example3"}
Json basis_to_json(const BasisDescriptor& basis);
BasisDescriptor basis_from_json(const Json& j);

// {"basis": {...}, "entries": [[[re,im],...],...]}
Json operator_to_json(const OperatorMatrix& M);
OperatorMatrix operator_from_json(const Json& j);

// {"psi": [...], "chi": [...]} or {"trig": {"-2": [re,im], ...}}
Json symbol_to_json(const SymbolSpec& symbol);
SymbolSpec symbol_from_json(const Json& j);

// Parse helpers that fold JSON syntax errors into InvalidArgument so the CLI
// can map every bad input to one exit path.
Json parse_json_text(const std::string& text);
Json load_json_file(const std::string& path);

}  // namespace ttolab
