#include "birkhoff/matrix_io.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <vector>

#include <json.hpp>

namespace birkhoff {

namespace {

double parse_number(const std::string& token, std::size_t row, std::size_t col) {
    const char* begin = token.c_str();
    char* end = nullptr;
    const double v = std::strtod(begin, &end);
    // allow surrounding whitespace, nothing else
    while (end && *end != '\0' && std::isspace(static_cast<unsigned char>(*end))) ++end;
    if (end == begin || (end && *end != '\0')) {
        std::ostringstream msg;
        msg << "csv: cannot parse entry at row " << row << ", column " << col << ": '"
            << token << "'";
        throw ValidationError(msg.str());
    }
    return v;
}

}  // namespace

SquareMatrix read_matrix_csv(std::istream& in) {
    std::vector<std::vector<double>> rows;
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = true;
        for (char c : line)
            if (!std::isspace(static_cast<unsigned char>(c))) blank = false;
        if (blank) continue;
        std::vector<double> row;
        std::stringstream fields(line);
        std::string token;
        while (std::getline(fields, token, ','))
            row.push_back(parse_number(token, rows.size(), row.size()));
        rows.push_back(std::move(row));
    }
    if (rows.empty()) throw ValidationError("csv: no rows found");
    return SquareMatrix::from_rows(rows);
}

SquareMatrix read_matrix_json(std::istream& in) {
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        throw ValidationError(std::string("json: ") + e.what());
    }
    if (!doc.is_array()) throw ValidationError("json: expected an array of arrays of numbers");
    std::vector<std::vector<double>> rows;
    for (const auto& row : doc) {
        if (!row.is_array())
            throw ValidationError("json: expected an array of arrays of numbers");
        std::vector<double> values;
        for (const auto& v : row) {
            if (!v.is_number())
                throw ValidationError("json: expected an array of arrays of numbers");
            values.push_back(v.get<double>());
        }
        rows.push_back(std::move(values));
    }
    if (rows.empty()) throw ValidationError("json: no rows found");
    return SquareMatrix::from_rows(rows);
}

SquareMatrix load_matrix(const std::string& path, MatrixFormat format) {
    if (path == "-") {
        return format == MatrixFormat::json ? read_matrix_json(std::cin)
                                            : read_matrix_csv(std::cin);
    }
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot open file: " + path);
    return format == MatrixFormat::json ? read_matrix_json(in) : read_matrix_csv(in);
}

MatrixFormat guess_format(const std::string& path) {
    return path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0
               ? MatrixFormat::json
               : MatrixFormat::csv;
}

void write_matrix_csv(std::ostream& out, const SquareMatrix& m) {
    for (std::size_t i = 0; i < m.dim(); ++i) {
        for (std::size_t j = 0; j < m.dim(); ++j) {
            if (j) out << ',';
            out << format_double(m(i, j));
        }
        out << '\n';
    }
}

std::string format_double(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

}  // namespace birkhoff
