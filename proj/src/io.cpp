#include "tropic/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace tropic {
namespace {

std::vector<std::string> tokens_of(const std::string& line) {
  std::istringstream ss(line);
  std::vector<std::string> out;
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

Scalar parse_scalar_token(const std::string& tok, std::size_t lineno) {
  auto s = Scalar::parse(tok);
  if (!s) throw ParseError(lineno, "bad scalar token '" + tok + "'");
  return *s;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '[' || ch == '{';
  }
  return false;
}

Scalar scalar_from_json(const nlohmann::json& v, std::size_t lineno) {
  if (v.is_string()) return parse_scalar_token(v.get<std::string>(), lineno);
  if (v.is_number_integer()) return Scalar(Rat(static_cast<long long>(v.get<long long>())));
  throw ParseError(lineno, "json scalar must be an integer or a string token");
}

nlohmann::json scalar_to_json(const Scalar& s) { return s.str(); }

std::string read_content_line(std::istream& in, std::size_t& lineno) {
  std::string line;
  while (std::getline(in, line)) {
    ++lineno;
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (!blank && line[0] != '#') return line;
  }
  throw ParseError(lineno + 1, "unexpected end of input");
}

}  // namespace

Matrix parse_matrix(std::istream& in) {
  std::size_t lineno = 0;
  auto header = tokens_of(read_content_line(in, lineno));
  if (header.size() != 2) throw ParseError(lineno, "expected header 'p n'");
  std::size_t p = 0, n = 0;
  try {
    p = std::stoul(header[0]);
    n = std::stoul(header[1]);
  } catch (...) {
    throw ParseError(lineno, "expected header 'p n'");
  }
  if (p == 0 || n == 0) throw ParseError(lineno, "matrix dimensions must be positive");
  Matrix m(p, n);
  for (std::size_t r = 0; r < p; ++r) {
    auto toks = tokens_of(read_content_line(in, lineno));
    if (toks.size() != n)
      throw ParseError(lineno, "expected " + std::to_string(n) + " entries, found " +
                                   std::to_string(toks.size()));
    for (std::size_t c = 0; c < n; ++c) m(r, c) = parse_scalar_token(toks[c], lineno);
  }
  return m;
}

Matrix parse_matrix_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty() || !j[0].is_array())
    throw ParseError(1, "json matrix must be an array of arrays");
  Matrix m(j.size(), j[0].size());
  for (std::size_t r = 0; r < j.size(); ++r) {
    if (!j[r].is_array() || j[r].size() != m.cols())
      throw ParseError(1, "json matrix rows must have equal length");
    for (std::size_t c = 0; c < m.cols(); ++c) m(r, c) = scalar_from_json(j[r][c], 1);
  }
  return m;
}

Matrix load_matrix(const std::string& path) {
  std::string text = slurp(path);
  if (looks_like_json(text)) return parse_matrix_json(text);
  std::istringstream in(text);
  return parse_matrix(in);
}

std::string format_matrix(const Matrix& m) {
  std::ostringstream out;
  out << m.rows() << ' ' << m.cols() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) out << (c ? " " : "") << m(r, c).str();
    out << '\n';
  }
  return out.str();
}

std::string format_matrix_json(const Matrix& m) {
  nlohmann::json rows = nlohmann::json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) {
    nlohmann::json row = nlohmann::json::array();
    for (std::size_t c = 0; c < m.cols(); ++c) row.push_back(scalar_to_json(m(r, c)));
    rows.push_back(std::move(row));
  }
  return rows.dump();
}

Vector parse_vector_line(const std::string& line, std::size_t lineno) {
  auto toks = tokens_of(line);
  if (toks.empty()) throw ParseError(lineno, "empty vector");
  Vector v(toks.size());
  for (std::size_t i = 0; i < toks.size(); ++i) v[i] = parse_scalar_token(toks[i], lineno);
  return v;
}

std::string format_vector(const Vector& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? " " : "") << v[i].str();
  return out.str();
}

Inequality parse_inequality_line(const std::string& line, std::size_t lineno) {
  auto toks = tokens_of(line);
  auto sep = std::find(toks.begin(), toks.end(), "<=");
  if (sep == toks.end()) throw ParseError(lineno, "inequality must contain '<='");
  std::size_t na = sep - toks.begin();
  std::size_t nb = toks.end() - sep - 1;
  if (na == 0 || na != nb)
    throw ParseError(lineno, "inequality sides must have equal positive length");
  Inequality q{Vector(na), Vector(nb)};
  for (std::size_t i = 0; i < na; ++i) q.a[i] = parse_scalar_token(toks[i], lineno);
  for (std::size_t i = 0; i < nb; ++i) q.b[i] = parse_scalar_token(toks[na + 1 + i], lineno);
  return q;
}

InequalitySystem parse_system(std::istream& in) {
  InequalitySystem sys;
  std::string line;
  std::size_t lineno = 0;
  std::size_t width = 0;
  while (std::getline(in, line)) {
    ++lineno;
    bool blank = true;
    for (char ch : line) blank = blank && std::isspace(static_cast<unsigned char>(ch));
    if (blank || line[0] == '#') continue;
    Inequality q = parse_inequality_line(line, lineno);
    if (width == 0) width = q.a.size();
    if (q.a.size() != width) throw ParseError(lineno, "inconsistent dimension");
    sys.push_back(std::move(q));
  }
  if (sys.empty()) throw ParseError(lineno, "empty system");
  return sys;
}

InequalitySystem parse_system_json(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  if (!j.is_array() || j.empty()) throw ParseError(1, "json system must be a nonempty array");
  InequalitySystem sys;
  for (const auto& item : j) {
    if (!item.contains("a") || !item.contains("b"))
      throw ParseError(1, "json inequality needs fields 'a' and 'b'");
    const auto &ja = item["a"], &jb = item["b"];
    if (!ja.is_array() || !jb.is_array() || ja.size() != jb.size() || ja.empty())
      throw ParseError(1, "json inequality sides must be equal-length arrays");
    Inequality q{Vector(ja.size()), Vector(jb.size())};
    for (std::size_t i = 0; i < ja.size(); ++i) {
      q.a[i] = scalar_from_json(ja[i], 1);
      q.b[i] = scalar_from_json(jb[i], 1);
    }
    sys.push_back(std::move(q));
  }
  return sys;
}

InequalitySystem load_system(const std::string& path) {
  std::string text = slurp(path);
  if (looks_like_json(text)) return parse_system_json(text);
  std::istringstream in(text);
  return parse_system(in);
}

std::string format_inequality(const Inequality& q) {
  return format_vector(q.a) + " <= " + format_vector(q.b);
}

std::string format_system(const InequalitySystem& sys) {
  std::ostringstream out;
  for (const auto& q : sys) out << format_inequality(q) << '\n';
  return out.str();
}

UndirectedHypergraph parse_hypergraph(std::istream& in) {
  std::size_t lineno = 0;
  auto header = tokens_of(read_content_line(in, lineno));
  if (header.size() != 2) throw ParseError(lineno, "expected header 'num_nodes num_hyperedges'");
  UndirectedHypergraph h;
  std::size_t ne = 0;
  try {
    h.num_nodes = std::stoul(header[0]);
    ne = std::stoul(header[1]);
  } catch (...) {
    throw ParseError(lineno, "expected header 'num_nodes num_hyperedges'");
  }
  for (std::size_t e = 0; e < ne; ++e) {
    auto toks = tokens_of(read_content_line(in, lineno));
    if (toks.empty()) throw ParseError(lineno, "empty hyperedge line");
    std::size_t sz = std::stoul(toks[0]);
    if (toks.size() != sz + 1) throw ParseError(lineno, "hyperedge size mismatch");
    std::set<std::size_t> edge;
    for (std::size_t t = 1; t < toks.size(); ++t) {
      std::size_t v = std::stoul(toks[t]);
      if (v < 1 || v > h.num_nodes) throw ParseError(lineno, "node id out of range");
      edge.insert(v - 1);
    }
    h.edges.push_back(std::move(edge));
  }
  return h;
}

UndirectedHypergraph load_hypergraph(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream in(text);
  return parse_hypergraph(in);
}

DirectedHypergraph parse_directed_hypergraph(std::istream& in) {
  std::size_t lineno = 0;
  auto header = tokens_of(read_content_line(in, lineno));
  if (header.size() != 2) throw ParseError(lineno, "expected header 'num_nodes num_hyperedges'");
  DirectedHypergraph h;
  std::size_t nn = 0, ne = 0;
  try {
    nn = std::stoul(header[0]);
    ne = std::stoul(header[1]);
  } catch (...) {
    throw ParseError(lineno, "expected header 'num_nodes num_hyperedges'");
  }
  for (std::size_t v = 1; v <= nn; ++v) h.nodes.insert(v - 1);
  for (std::size_t e = 0; e < ne; ++e) {
    auto toks = tokens_of(read_content_line(in, lineno));
    std::size_t at = 0;
    auto read_set = [&](std::set<std::size_t>& dst) {
      if (at >= toks.size()) throw ParseError(lineno, "truncated hyperedge");
      std::size_t sz = std::stoul(toks[at++]);
      for (std::size_t t = 0; t < sz; ++t) {
        if (at >= toks.size()) throw ParseError(lineno, "truncated hyperedge");
        std::size_t v = std::stoul(toks[at++]);
        if (v < 1 || v > nn) throw ParseError(lineno, "node id out of range");
        dst.insert(v - 1);
      }
    };
    Hyperedge edge;
    read_set(edge.tail);
    read_set(edge.head);
    if (at != toks.size()) throw ParseError(lineno, "trailing tokens on hyperedge line");
    h.edges.push_back(std::move(edge));
  }
  return h;
}

std::string format_hypergraph(const UndirectedHypergraph& h) {
  std::ostringstream out;
  out << h.num_nodes << ' ' << h.edges.size() << '\n';
  for (const auto& e : h.edges) {
    out << e.size();
    for (std::size_t v : e) out << ' ' << v + 1;
    out << '\n';
  }
  return out.str();
}

GameFile parse_game(std::istream& in) {
  std::size_t lineno = 0;
  auto header = tokens_of(read_content_line(in, lineno));
  if (header.size() != 2) throw ParseError(lineno, "expected header 'p n'");
  std::size_t p = 0, n = 0;
  try {
    p = std::stoul(header[0]);
    n = std::stoul(header[1]);
  } catch (...) {
    throw ParseError(lineno, "expected header 'p n'");
  }
  if (p == 0 || n == 0) throw ParseError(lineno, "game dimensions must be positive");
  GameFile g{Matrix(p, n), Matrix(p, n), Vector(n), Vector(n)};
  auto read_row = [&](Vector& dst) {
    auto toks = tokens_of(read_content_line(in, lineno));
    if (toks.size() != n) throw ParseError(lineno, "expected " + std::to_string(n) + " entries");
    for (std::size_t c = 0; c < n; ++c) dst[c] = parse_scalar_token(toks[c], lineno);
  };
  Vector row(n);
  for (std::size_t r = 0; r < p; ++r) {
    read_row(row);
    for (std::size_t c = 0; c < n; ++c) g.A(r, c) = row[c];
  }
  for (std::size_t r = 0; r < p; ++r) {
    read_row(row);
    for (std::size_t c = 0; c < n; ++c) g.B(r, c) = row[c];
  }
  read_row(g.c);
  read_row(g.d);
  return g;
}

GameFile load_game(const std::string& path) {
  std::string text = slurp(path);
  std::istringstream in(text);
  return parse_game(in);
}

std::string format_game(const GameFile& g) {
  std::ostringstream out;
  out << g.A.rows() << ' ' << g.A.cols() << '\n';
  for (std::size_t r = 0; r < g.A.rows(); ++r) out << format_vector(g.A.row(r)) << '\n';
  for (std::size_t r = 0; r < g.B.rows(); ++r) out << format_vector(g.B.row(r)) << '\n';
  out << format_vector(g.c) << '\n' << format_vector(g.d) << '\n';
  return out.str();
}

}  // namespace tropic
