#pragma once

#include "projrigid/cohomology.hpp"
#include "projrigid/rigidity.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace projrigid {

inline constexpr const char* kToolVersion = "0.1.0";

// Frozen string form of a field element: terms in the fixed order
// rational, r, i, i*r (r denotes sqrt(d)), zero coefficients skipped,
// "0" for zero, unit coefficients as bare symbols except a leading
// negative one, which renders as "-1*sym".
std::string render_field(const FieldElement& x);

// Grammar: element := term (('+'|'-') term)*, term := coeff ('*' symbol)? |
// symbol, symbol := 'i' | 'r' | 'i*r', coeff := int | int '/' posint.
FieldElement parse_field(const std::string& text, int d);

std::string render_rational(const Rational& q);

// Parsed input file: exact field tag, presentation, and the representation
// matrices as given (2x2 for form "sl2c", 4x4 for form "so31").
struct InputDocument {
    int d = 1;
    Presentation pres;
    std::string form;
    std::vector<Matrix> generator_matrices;
};

InputDocument load_input(const std::string& path);
nlohmann::json serialize_input(const InputDocument& doc);

// Lifts or validates the generator matrices into SO(3,1).
Representation build_representation(const InputDocument& doc);

// FNV-1a 64-bit hash of the raw file bytes, as 16 hex digits.
std::string file_hash(const std::string& path);

// Report skeleton with deterministic serialization: command name, input hash
// echo, results payload and tool version.
nlohmann::json report_document(const std::string& command, const std::string& hash,
                               nlohmann::json results);
std::string render_human(const nlohmann::json& report);

nlohmann::json matrix_to_json(const Matrix& m);
Matrix matrix_from_json(const nlohmann::json& j, int d);
nlohmann::json vector_to_json(const Vector& v);

// Auxiliary file loaders for the cocycle/invariant/automorphism commands.
Cochain1 load_cocycle(const std::string& path, const InputDocument& doc);
Matrix load_matrix_file(const std::string& path, const InputDocument& doc);
std::vector<Word> load_endomorphism(const std::string& path, const InputDocument& doc);

}  // namespace projrigid
