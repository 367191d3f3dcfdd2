#include "dsm/matrix_io.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace dsm {

using nlohmann::json;

MatrixFormat matrix_format_from_string(const std::string& name) {
    if (name == "json") return MatrixFormat::json;
    if (name == "csv") return MatrixFormat::csv;
    throw std::invalid_argument("unknown matrix format '" + name + "' (want json or csv)");
}

namespace {

json entry_to_json(const Rational& r) {
    if (r.fits_int64()) {
        return json(r.as_int64());
    }
    return json(r.str());
}

Rational entry_from_json(const json& j) {
    if (j.is_number_integer()) {
        return Rational(j.get<long long>());
    }
    if (j.is_string()) {
        return Rational::parse(j.get<std::string>());
    }
    throw std::invalid_argument("matrix json: entries must be integers or \"p/q\" strings");
}

}  // namespace

std::string to_json_text(const UMatrix& M) {
    json entries = json::array();
    for (int i = 0; i < M.rows(); ++i) {
        json row = json::array();
        for (int j = 0; j < M.cols(); ++j) {
            row.push_back(entry_to_json(M.at(i, j)));
        }
        entries.push_back(std::move(row));
    }
    json doc;
    doc["n"] = M.rows();
    doc["m"] = M.cols();
    doc["entries"] = std::move(entries);
    return doc.dump() + "\n";
}

UMatrix from_json_text(const std::string& text) {
    json doc;
    try {
        doc = json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::invalid_argument(std::string("matrix json: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("n") || !doc.contains("m") || !doc.contains("entries")) {
        throw std::invalid_argument("matrix json: want an object with n, m, entries");
    }
    if (!doc["n"].is_number_integer() || !doc["m"].is_number_integer()) {
        throw std::invalid_argument("matrix json: n and m must be integers");
    }
    const long long n = doc["n"].get<long long>();
    const long long m = doc["m"].get<long long>();
    if (n < 1 || m < 1) {
        throw std::invalid_argument("matrix json: dimensions must be positive");
    }
    const json& entries = doc["entries"];
    if (!entries.is_array() || static_cast<long long>(entries.size()) != n) {
        throw std::invalid_argument("matrix json: entries must hold n rows");
    }
    UMatrix M(static_cast<int>(n), static_cast<int>(m));
    for (int i = 0; i < M.rows(); ++i) {
        const json& row = entries[i];
        if (!row.is_array() || static_cast<long long>(row.size()) != m) {
            throw std::invalid_argument("matrix json: row " + std::to_string(i + 1) +
                                        " must hold m entries");
        }
        for (int j = 0; j < M.cols(); ++j) {
            M.at(i, j) = entry_from_json(row[j]);
        }
    }
    return M;
}

std::string to_csv_text(const UMatrix& M) {
    std::ostringstream out;
    for (int i = 0; i < M.rows(); ++i) {
        for (int j = 0; j < M.cols(); ++j) {
            if (j) out << ',';
            out << M.at(i, j).str();
        }
        out << '\n';
    }
    return out.str();
}

UMatrix from_csv_text(const std::string& text) {
    std::vector<std::vector<Rational>> rows;
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        bool blank = line.find_first_not_of(" \t") == std::string::npos;
        if (blank) continue;
        std::vector<Rational> row;
        std::istringstream cells(line);
        std::string cell;
        while (std::getline(cells, cell, ',')) {
            row.push_back(Rational::parse(cell));
        }
        rows.push_back(std::move(row));
    }
    if (rows.empty()) {
        throw std::invalid_argument("matrix csv: no rows");
    }
    for (size_t i = 1; i < rows.size(); ++i) {
        if (rows[i].size() != rows[0].size()) {
            throw std::invalid_argument("matrix csv: ragged row " + std::to_string(i + 1));
        }
    }
    return UMatrix::from_rows(rows);
}

void write_matrix_file(const std::string& path, const UMatrix& M, MatrixFormat format) {
    std::ofstream out(path, std::ios::binary);
    if (!out) {
        throw std::runtime_error("cannot open '" + path + "' for writing");
    }
    out << (format == MatrixFormat::json ? to_json_text(M) : to_csv_text(M));
    if (!out) {
        throw std::runtime_error("failed writing '" + path + "'");
    }
}

UMatrix read_matrix_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::invalid_argument("cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    const std::string text = buffer.str();
    const size_t first = text.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        throw std::invalid_argument("'" + path + "' is empty");
    }
    return text[first] == '{' ? from_json_text(text) : from_csv_text(text);
}

}  // namespace dsm
