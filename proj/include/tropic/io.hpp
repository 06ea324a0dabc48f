#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "tropic/cone.hpp"
#include "tropic/hypergraph.hpp"
#include "tropic/models.hpp"

namespace tropic {

/// Parse failure with a 1-based line number for diagnostics.
class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// --- matrices -------------------------------------------------------------
// text: first line "p n", then p lines of n tokens (integer, a/b or -inf);
// json: array of arrays with "-inf" as a string and rationals as strings.

Matrix parse_matrix(std::istream& in);
Matrix parse_matrix_json(const std::string& text);
/// Reads a file, sniffing JSON (first non-space byte '[') vs text.
Matrix load_matrix(const std::string& path);
std::string format_matrix(const Matrix& m);
std::string format_matrix_json(const Matrix& m);

// --- vectors ---------------------------------------------------------------

Vector parse_vector_line(const std::string& line, std::size_t lineno);
std::string format_vector(const Vector& v);

// --- inequalities ----------------------------------------------------------
// one per line: "a_1 ... a_n <= b_1 ... b_n"

Inequality parse_inequality_line(const std::string& line, std::size_t lineno);
InequalitySystem parse_system(std::istream& in);
InequalitySystem parse_system_json(const std::string& text);
InequalitySystem load_system(const std::string& path);
std::string format_inequality(const Inequality& q);
std::string format_system(const InequalitySystem& sys);

// --- hypergraphs -----------------------------------------------------------
// first line "num_nodes num_hyperedges"; node ids are 1-based in files.
// undirected hyperedge lines: "size ids..."
// directed hyperedge lines:   "tail_size ids... head_size ids..."

UndirectedHypergraph parse_hypergraph(std::istream& in);
UndirectedHypergraph load_hypergraph(const std::string& path);
DirectedHypergraph parse_directed_hypergraph(std::istream& in);
std::string format_hypergraph(const UndirectedHypergraph& h);

// --- game files ------------------------------------------------------------
// "p n" header, then A and B as p-row blocks, then c and d as single rows.

struct GameFile {
  Matrix A, B;
  Vector c, d;
};

GameFile parse_game(std::istream& in);
GameFile load_game(const std::string& path);
std::string format_game(const GameFile& g);

}  // namespace tropic
