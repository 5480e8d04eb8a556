#pragma once

#include <stdexcept>
#include <string>

#include <json.hpp>

#include "ptsym/matrix.hpp"

namespace ptsym {

/// Malformed matrix input: carries a human-readable position (byte offset
/// for syntax errors, row/column for shape errors).
class MatrixParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ParsedMatrix {
    SquareMatrix<GaussianRational> matrix;
    bool saw_decimal = false;  // some scalar arrived as decimal/float text
};

/**
 * Matrix file format (UTF-8 JSON): either a plain array of rows or an
 * object {"dimension": n, "entries": [[...], ...]}. Each scalar is a JSON
 * number, a rational string "p/q" (decimal strings like "-1.25" are also
 * accepted), or a two-element array [re, im] of such scalars. All scalars
 * are converted exactly; decimal number tokens are promoted from their
 * literal text, not from a rounded double.
 */
ParsedMatrix parse_matrix_json(const std::string& text);

/// Canonical serialization: entries as "p/q" strings, complex entries as
/// [re, im] pairs; re-parsing yields an identical matrix.
nlohmann::ordered_json matrix_to_json(const SquareMatrix<GaussianRational>& m);

}  // namespace ptsym
