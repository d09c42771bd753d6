#pragma once

#include <iosfwd>
#include <string>

#include "birkhoff/matrix.hpp"

namespace birkhoff {

enum class MatrixFormat { csv, json };

/// One row per line, comma-separated decimal literals. Ragged input throws.
SquareMatrix read_matrix_csv(std::istream& in);

/// JSON array of arrays of numbers.
SquareMatrix read_matrix_json(std::istream& in);

/// Reads from the file at `path`, or stdin when path is "-".
SquareMatrix load_matrix(const std::string& path, MatrixFormat format);

/// .json extension selects JSON, anything else CSV.
MatrixFormat guess_format(const std::string& path);

void write_matrix_csv(std::ostream& out, const SquareMatrix& m);

/// 17 significant digits: round-trip exact for IEEE doubles and byte-stable
/// for golden files.
std::string format_double(double x);

}  // namespace birkhoff
