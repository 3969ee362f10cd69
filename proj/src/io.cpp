#include "grnet/io.hpp"

#include <fstream>
#include <sstream>

#include "grnet/rational.hpp"
#include "grnet/subspace.hpp"

namespace grnet {

namespace {

// Significant lines only: comments stripped, blanks skipped.
class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  bool next(std::vector<std::string>& tokens) {
    std::string line;
    while (std::getline(in_, line)) {
      ++line_no_;
      if (auto hash = line.find('#'); hash != std::string::npos)
        line.erase(hash);
      std::istringstream ss(line);
      tokens.clear();
      std::string tok;
      while (ss >> tok) tokens.push_back(tok);
      if (!tokens.empty()) return true;
    }
    return false;
  }

  int line_no() const { return line_no_; }

 private:
  std::istream& in_;
  int line_no_ = 0;
};

[[noreturn]] void fail(const LineReader& reader, const std::string& what) {
  std::ostringstream out;
  out << "line " << reader.line_no() << ": " << what;
  throw ParseError(out.str());
}

int parse_int(const LineReader& reader, const std::string& tok) {
  try {
    std::size_t used = 0;
    int v = std::stoi(tok, &used);
    if (used != tok.size()) throw std::invalid_argument(tok);
    return v;
  } catch (const std::exception&) {
    fail(reader, "expected integer, got '" + tok + "'");
  }
}

// key=value token; returns the value part after checking the key.
std::string expect_kv(const LineReader& reader, const std::string& tok,
                      const std::string& key) {
  if (tok.size() < key.size() + 1 || tok.compare(0, key.size(), key) != 0 ||
      tok[key.size()] != '=')
    fail(reader, "expected " + key + "=..., got '" + tok + "'");
  return tok.substr(key.size() + 1);
}

Matrix read_matrix_rows(LineReader& reader, int rows, int cols) {
  Matrix m(rows, cols);
  std::vector<std::string> tokens;
  for (int i = 0; i < rows; ++i) {
    if (!reader.next(tokens)) fail(reader, "unexpected end of matrix");
    if (static_cast<int>(tokens.size()) != cols)
      fail(reader, "expected " + std::to_string(cols) + " entries");
    for (int j = 0; j < cols; ++j) {
      try {
        m.at(i, j) = parse_rational(tokens[j]);
      } catch (const ParseError& e) {
        fail(reader, e.what());
      }
    }
  }
  return m;
}

void write_matrix_rows(std::ostream& out, const Matrix& m) {
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << to_string(m.at(i, j));
    }
    out << '\n';
  }
}

VertexIndex parse_vertex(const LineReader& reader,
                         const std::vector<std::string>& tokens, int from,
                         int n_axes) {
  if (static_cast<int>(tokens.size()) < from + n_axes)
    fail(reader, "vertex has too few coordinates");
  VertexIndex v(n_axes);
  for (int k = 0; k < n_axes; ++k)
    v[k] = parse_int(reader, tokens[from + k]);
  return v;
}

struct Header {
  int n_axes = 0;
  int r = 0;
  int d = 0;
};

Header read_net_header(LineReader& reader, const char* tag) {
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) fail(reader, "empty file");
  if (tokens.size() != 4 || tokens[0] != tag)
    fail(reader, std::string("expected header '") + tag + " N=.. r=.. d=..'");
  Header h;
  h.n_axes = parse_int(reader, expect_kv(reader, tokens[1], "N"));
  h.r = parse_int(reader, expect_kv(reader, tokens[2], "r"));
  h.d = parse_int(reader, expect_kv(reader, tokens[3], "d"));
  if (h.n_axes < 1 || h.r < 0 || h.d < 1) fail(reader, "bad header values");
  return h;
}

}  // namespace

void write_qnet(std::ostream& out, const QNet& net) {
  out << "qnet N=" << net.n_axes << " r=" << net.r << " d=" << net.d << '\n';
  for (const auto& [v, plane] : net.vertices) {
    out << "vertex";
    for (int c : v) out << ' ' << c;
    out << '\n';
    write_matrix_rows(out, plane.basis());
  }
}

QNet read_qnet(std::istream& in) {
  LineReader reader(in);
  Header h = read_net_header(reader, "qnet");
  QNet net{h.n_axes, h.r, h.d, {}};
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "vertex") fail(reader, "expected 'vertex' record");
    if (static_cast<int>(tokens.size()) != 1 + h.n_axes)
      fail(reader, "vertex record has wrong coordinate count");
    VertexIndex v = parse_vertex(reader, tokens, 1, h.n_axes);
    Matrix basis = read_matrix_rows(reader, h.r + 1, h.d + 1);
    try {
      net.set(v, Subspace(std::move(basis)));
    } catch (const Error& e) {
      fail(reader, e.what());
    }
  }
  return net;
}

void write_edgenet(std::ostream& out, const EdgeNet& net) {
  out << "edgenet N=" << net.n_axes << " r=" << net.r << " d=" << net.d
      << '\n';
  for (const auto& [key, plane] : net.edges) {
    out << "edge";
    for (int c : key.at) out << ' ' << c;
    out << " axis=" << key.axis << '\n';
    write_matrix_rows(out, plane.basis());
  }
}

EdgeNet read_edgenet(std::istream& in) {
  LineReader reader(in);
  Header h = read_net_header(reader, "edgenet");
  EdgeNet net{h.n_axes, h.r, h.d, {}};
  std::vector<std::string> tokens;
  while (reader.next(tokens)) {
    if (tokens[0] != "edge") fail(reader, "expected 'edge' record");
    if (static_cast<int>(tokens.size()) != 2 + h.n_axes)
      fail(reader, "edge record has wrong token count");
    VertexIndex v = parse_vertex(reader, tokens, 1, h.n_axes);
    int axis = parse_int(
        reader, expect_kv(reader, tokens[1 + h.n_axes], "axis"));
    if (axis < 0 || axis >= h.n_axes) fail(reader, "axis out of range");
    Matrix basis = read_matrix_rows(reader, h.r + 1, h.d + 1);
    try {
      net.set(v, axis, Subspace(std::move(basis)));
    } catch (const Error& e) {
      fail(reader, e.what());
    }
  }
  return net;
}

namespace {

const char* kind_name(FieldKind kind) {
  switch (kind) {
    case FieldKind::Vertex:
      return "vertex";
    case FieldKind::Edge:
      return "edge";
    case FieldKind::Plaquette:
      return "plaquette";
  }
  return "?";
}

void write_field_header(std::ostream& out, FieldKind kind, int n_axes, int r,
                        int rows, int cols) {
  out << "field kind=" << kind_name(kind) << " N=" << n_axes << " r=" << r
      << " rows=" << rows << " cols=" << cols << '\n';
}

template <typename Entries>
std::pair<int, int> field_shape(const Entries& entries) {
  for (const auto& [key, m] : entries) return {m.rows(), m.cols()};
  return {0, 0};
}

}  // namespace

void write_vertex_field(std::ostream& out, const VertexField<Matrix>& f,
                        int n_axes, int r) {
  auto [rows, cols] = field_shape(f.entries());
  write_field_header(out, FieldKind::Vertex, n_axes, r, rows, cols);
  for (const auto& [v, m] : f.entries()) {
    out << "at";
    for (int c : v) out << ' ' << c;
    out << '\n';
    write_matrix_rows(out, m);
  }
}

void write_edge_field(std::ostream& out, const EdgeField<Matrix>& f,
                      int n_axes, int r) {
  auto [rows, cols] = field_shape(f.entries());
  write_field_header(out, FieldKind::Edge, n_axes, r, rows, cols);
  for (const auto& [key, m] : f.entries()) {
    out << "at";
    for (int c : key.at) out << ' ' << c;
    out << " axis=" << key.axis << '\n';
    write_matrix_rows(out, m);
  }
}

void write_plaquette_field(std::ostream& out, const PlaquetteField<Matrix>& f,
                           int n_axes, int r) {
  auto [rows, cols] = field_shape(f.entries());
  write_field_header(out, FieldKind::Plaquette, n_axes, r, rows, cols);
  for (const auto& [key, m] : f.entries()) {
    out << "at";
    for (int c : key.at) out << ' ' << c;
    out << " i=" << key.i << " j=" << key.j << '\n';
    write_matrix_rows(out, m);
  }
}

MatrixFieldFile read_matrix_field(std::istream& in) {
  LineReader reader(in);
  std::vector<std::string> tokens;
  if (!reader.next(tokens)) fail(reader, "empty file");
  if (tokens.size() != 6 || tokens[0] != "field")
    fail(reader, "expected header 'field kind=.. N=.. r=.. rows=.. cols=..'");
  MatrixFieldFile file;
  std::string kind = expect_kv(reader, tokens[1], "kind");
  if (kind == "vertex")
    file.kind = FieldKind::Vertex;
  else if (kind == "edge")
    file.kind = FieldKind::Edge;
  else if (kind == "plaquette")
    file.kind = FieldKind::Plaquette;
  else
    fail(reader, "unknown field kind '" + kind + "'");
  file.n_axes = parse_int(reader, expect_kv(reader, tokens[2], "N"));
  file.r = parse_int(reader, expect_kv(reader, tokens[3], "r"));
  int rows = parse_int(reader, expect_kv(reader, tokens[4], "rows"));
  int cols = parse_int(reader, expect_kv(reader, tokens[5], "cols"));
  if (file.n_axes < 1 || file.r < 0 || rows < 0 || cols < 0)
    fail(reader, "bad header values");

  while (reader.next(tokens)) {
    if (tokens[0] != "at") fail(reader, "expected 'at' record");
    int expected = 1 + file.n_axes +
                   (file.kind == FieldKind::Edge
                        ? 1
                        : file.kind == FieldKind::Plaquette ? 2 : 0);
    if (static_cast<int>(tokens.size()) != expected)
      fail(reader, "record has wrong token count");
    VertexIndex v = parse_vertex(reader, tokens, 1, file.n_axes);
    if (file.kind == FieldKind::Vertex) {
      file.vertex.set(v, read_matrix_rows(reader, rows, cols));
    } else if (file.kind == FieldKind::Edge) {
      int axis = parse_int(
          reader, expect_kv(reader, tokens[1 + file.n_axes], "axis"));
      if (axis < 0 || axis >= file.n_axes) fail(reader, "axis out of range");
      file.edge.set(v, axis, read_matrix_rows(reader, rows, cols));
    } else {
      int i = parse_int(reader,
                        expect_kv(reader, tokens[1 + file.n_axes], "i"));
      int j = parse_int(reader,
                        expect_kv(reader, tokens[2 + file.n_axes], "j"));
      if (i < 0 || i >= file.n_axes || j < 0 || j >= file.n_axes || i == j)
        fail(reader, "axis pair out of range");
      file.plaquette.set(v, i, j, read_matrix_rows(reader, rows, cols));
    }
  }
  return file;
}

void write_obj_mesh(std::ostream& out, const QNet& net, int axis_u,
                    int axis_v, int ext_u, int ext_v,
                    const VertexIndex& anchor) {
  if (net.r != 0) throw Error("mesh export needs a point net (r = 0)");
  if (axis_u == axis_v || axis_u < 0 || axis_v < 0 || axis_u >= net.n_axes ||
      axis_v >= net.n_axes)
    throw Error("mesh export needs two distinct axes");
  out << "# quad mesh, " << (ext_u + 1) << " x " << (ext_v + 1)
      << " vertices\n";
  for (int v = 0; v <= ext_v; ++v)
    for (int u = 0; u <= ext_u; ++u) {
      VertexIndex n = anchor;
      n[axis_u] += u;
      n[axis_v] += v;
      AffineRep rep = to_affine(net.at(n));
      out << "v";
      for (int c = 0; c < 3; ++c)
        out << ' ' << (c < rep.block.cols() ? rep.block.at(0, c).get_d() : 0.0);
      out << '\n';
    }
  for (int v = 0; v < ext_v; ++v)
    for (int u = 0; u < ext_u; ++u) {
      int base = v * (ext_u + 1) + u + 1;  // OBJ indices are 1-based
      out << "f " << base << ' ' << base + 1 << ' ' << base + ext_u + 2 << ' '
          << base + ext_u + 1 << '\n';
    }
}

namespace {

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open '" + path + "' for writing");
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  return in;
}

}  // namespace

void save_qnet(const std::string& path, const QNet& net) {
  auto out = open_out(path);
  write_qnet(out, net);
}

QNet load_qnet(const std::string& path) {
  auto in = open_in(path);
  return read_qnet(in);
}

void save_edgenet(const std::string& path, const EdgeNet& net) {
  auto out = open_out(path);
  write_edgenet(out, net);
}

EdgeNet load_edgenet(const std::string& path) {
  auto in = open_in(path);
  return read_edgenet(in);
}

MatrixFieldFile load_matrix_field(const std::string& path) {
  auto in = open_in(path);
  return read_matrix_field(in);
}

std::string report_line(
    const std::vector<std::pair<std::string, std::string>>& fields) {
  std::string line;
  for (const auto& [key, value] : fields) {
    if (!line.empty()) line += ' ';
    line += key + "=" + value;
  }
  return line;
}

std::string vertex_csv(const VertexIndex& v) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (k) s += ',';
    s += std::to_string(v[k]);
  }
  return s;
}

}  // namespace grnet
