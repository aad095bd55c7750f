#pragma once

#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "symhorn/error.hpp"
#include "symhorn/linalg.hpp"

namespace symhorn::io {

class ParseError : public Error {
public:
    using Error::Error;
};

enum class Format { text, structured };

// Contents of a matrix and/or vector file.
//
// Text layout: blank lines and '#' comments are ignored; a block is either
//   matrix <rows> <cols>   followed by rows*cols reals, row by row
//   vector <len>           followed by len reals
// Structured layout: a JSON object {"n": n, "matrix": [[...], ...], "v": [...]}
// where every field is optional, but "n" (if present) must satisfy
// rows == 2n or rows == n.
struct Document {
    std::optional<Matrix> matrix;
    std::optional<std::vector<double>> vector;
};

// Format is detected from the first non-blank character ('{' means structured).
Document parse_document(const std::string& content);
Document read_document(const std::string& path);

// Throw ParseError when the requested block is missing.
Matrix read_matrix(const std::string& path);
std::vector<double> read_vector(const std::string& path);

// 17 significant digits, round-trippable.
std::string format_number(double v);
std::string join_numbers(std::span<const double> v, const std::string& sep = " ");

std::string render(const Document& doc, Format format);
void write_document(const std::string& path, const Document& doc, Format format);

// "a,b,c" (commas and/or whitespace). Returns nothing unless every token is a number.
std::optional<std::vector<double>> parse_number_list(const std::string& text);

}  // namespace symhorn::io
