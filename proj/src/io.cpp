#include "symhorn/io.hpp"

#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include <json.hpp>

namespace symhorn::io {

namespace {

using json = nlohmann::json;

bool parse_double(const std::string& token, double& out) {
    if (token.empty()) return false;
    char* end = nullptr;
    errno = 0;
    out = std::strtod(token.c_str(), &end);
    return end == token.c_str() + token.size() && errno != ERANGE && std::isfinite(out);
}

std::size_t parse_count(const std::string& token, const char* what) {
    if (token.empty() || token.find_first_not_of("0123456789") != std::string::npos) {
        throw ParseError(std::string("expected a non-negative integer for ") + what + ", got '" + token + "'");
    }
    return static_cast<std::size_t>(std::stoull(token));
}

std::vector<std::string> tokenize_text(const std::string& content) {
    std::vector<std::string> tokens;
    std::istringstream lines(content);
    std::string line;
    while (std::getline(lines, line)) {
        if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
        std::istringstream words(line);
        std::string w;
        while (words >> w) tokens.push_back(w);
    }
    return tokens;
}

std::vector<double> take_numbers(const std::vector<std::string>& tokens, std::size_t& pos, std::size_t count) {
    std::vector<double> out(count);
    for (std::size_t k = 0; k < count; ++k) {
        if (pos >= tokens.size()) throw ParseError("unexpected end of input: expected " + std::to_string(count) + " values");
        if (!parse_double(tokens[pos], out[k])) throw ParseError("not a finite number: '" + tokens[pos] + "'");
        ++pos;
    }
    return out;
}

Document parse_text(const std::string& content) {
    const std::vector<std::string> tokens = tokenize_text(content);
    Document doc;
    std::size_t pos = 0;
    while (pos < tokens.size()) {
        const std::string& head = tokens[pos++];
        if (head == "matrix") {
            if (pos + 2 > tokens.size()) throw ParseError("truncated matrix header");
            const std::size_t rows = parse_count(tokens[pos++], "rows");
            const std::size_t cols = parse_count(tokens[pos++], "cols");
            std::vector<double> data = take_numbers(tokens, pos, rows * cols);
            if (!doc.matrix) doc.matrix = Matrix(rows, cols, std::move(data));
        } else if (head == "vector") {
            if (pos + 1 > tokens.size()) throw ParseError("truncated vector header");
            const std::size_t len = parse_count(tokens[pos++], "length");
            std::vector<double> data = take_numbers(tokens, pos, len);
            if (!doc.vector) doc.vector = std::move(data);
        } else {
            throw ParseError("expected 'matrix' or 'vector' header, got '" + head + "'");
        }
    }
    return doc;
}

std::vector<double> json_numbers(const json& arr, const char* what) {
    if (!arr.is_array()) throw ParseError(std::string(what) + " must be an array");
    std::vector<double> out;
    out.reserve(arr.size());
    for (const json& v : arr) {
        if (!v.is_number()) throw ParseError(std::string(what) + " contains a non-numeric entry");
        out.push_back(v.get<double>());
    }
    return out;
}

Document parse_structured(const std::string& content) {
    json root;
    try {
        root = json::parse(content);
    } catch (const json::parse_error& e) {
        throw ParseError(std::string("invalid structured file: ") + e.what());
    }
    if (!root.is_object()) throw ParseError("structured file must hold a JSON object");

    Document doc;
    if (root.contains("matrix")) {
        const json& rows = root["matrix"];
        if (!rows.is_array()) throw ParseError("'matrix' must be an array of rows");
        const std::size_t r = rows.size();
        const std::size_t c = r == 0 ? 0 : rows[0].size();
        std::vector<double> data;
        data.reserve(r * c);
        for (const json& row : rows) {
            std::vector<double> vals = json_numbers(row, "matrix row");
            if (vals.size() != c) throw ParseError("'matrix' rows have unequal lengths");
            data.insert(data.end(), vals.begin(), vals.end());
        }
        doc.matrix = Matrix(r, c, std::move(data));
        if (root.contains("n")) {
            if (!root["n"].is_number_unsigned()) throw ParseError("'n' must be a non-negative integer");
            const auto n = root["n"].get<std::size_t>();
            if (r != 2 * n && r != n) {
                throw ParseError("declared n=" + std::to_string(n) + " inconsistent with " + std::to_string(r) +
                                 " rows");
            }
        }
    }
    if (root.contains("v")) doc.vector = json_numbers(root["v"], "'v'");
    return doc;
}

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

Document parse_document(const std::string& content) {
    const auto first = content.find_first_not_of(" \t\r\n");
    if (first != std::string::npos && content[first] == '{') return parse_structured(content);
    return parse_text(content);
}

Document read_document(const std::string& path) { return parse_document(slurp(path)); }

Matrix read_matrix(const std::string& path) {
    Document doc = read_document(path);
    if (!doc.matrix) throw ParseError("'" + path + "' contains no matrix");
    return std::move(*doc.matrix);
}

std::vector<double> read_vector(const std::string& path) {
    Document doc = read_document(path);
    if (!doc.vector) throw ParseError("'" + path + "' contains no vector");
    return std::move(*doc.vector);
}

std::string format_number(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string join_numbers(std::span<const double> v, const std::string& sep) {
    std::string out;
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += sep;
        out += format_number(v[i]);
    }
    return out;
}

std::string render(const Document& doc, Format format) {
    if (format == Format::structured) {
        // raw numbers are emitted by hand to keep 17 significant digits
        std::string out = "{";
        bool first = true;
        if (doc.matrix) {
            const Matrix& m = *doc.matrix;
            if (m.is_square() && m.rows() % 2 == 0) out += "\"n\": " + std::to_string(m.rows() / 2) + ", ";
            out += "\"matrix\": [";
            for (std::size_t i = 0; i < m.rows(); ++i) {
                if (i) out += ", ";
                out += "[" + join_numbers(m.data().subspan(i * m.cols(), m.cols()), ", ") + "]";
            }
            out += "]";
            first = false;
        }
        if (doc.vector) {
            if (!first) out += ", ";
            out += "\"v\": [" + join_numbers(*doc.vector, ", ") + "]";
        }
        return out + "}\n";
    }

    std::string out;
    if (doc.matrix) {
        const Matrix& m = *doc.matrix;
        out += "matrix " + std::to_string(m.rows()) + " " + std::to_string(m.cols()) + "\n";
        for (std::size_t i = 0; i < m.rows(); ++i) out += join_numbers(m.data().subspan(i * m.cols(), m.cols())) + "\n";
    }
    if (doc.vector) {
        out += "vector " + std::to_string(doc.vector->size()) + "\n";
        out += join_numbers(*doc.vector) + "\n";
    }
    return out;
}

void write_document(const std::string& path, const Document& doc, Format format) {
    std::ofstream out(path);
    if (!out) throw ParseError("cannot write '" + path + "'");
    out << render(doc, format);
    if (!out) throw ParseError("failed writing '" + path + "'");
}

std::optional<std::vector<double>> parse_number_list(const std::string& text) {
    std::string spaced = text;
    for (char& c : spaced)
        if (c == ',') c = ' ';
    std::istringstream in(spaced);
    std::vector<double> out;
    std::string token;
    while (in >> token) {
        double v;
        if (!parse_double(token, v)) return std::nullopt;
        out.push_back(v);
    }
    if (out.empty()) return std::nullopt;
    return out;
}

}  // namespace symhorn::io
