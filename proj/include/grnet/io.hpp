#pragma once

#include <iosfwd>
#include <string>
#include <utility>
#include <vector>

#include "grnet/darboux_net.hpp"
#include "grnet/lattice.hpp"
#include "grnet/matrix.hpp"
#include "grnet/qnet.hpp"

namespace grnet {

/// Text formats. All of them are line oriented, tokens separated by
/// whitespace, '#' starts a comment, rationals written as "p/q" or "p".
/// Axes and coordinates are 0-based. Writers emit records in sorted key
/// order, so equal values produce identical bytes.
///
/// Vertex net:        qnet N=<axes> r=<r> d=<d>
///                    vertex <c0> ... <cN-1>   followed by r+1 basis rows
/// Edge net:          edgenet N=<axes> r=<r> d=<d>
///                    edge <c0> ... <cN-1> axis=<i>  followed by r+1 rows
/// Matrix field:      field kind=<vertex|edge|plaquette> N=<axes> r=<r>
///                          rows=<rows> cols=<cols>
///                    at <c0> ... <cN-1> [axis=<i> | i=<i> j=<j>]
///                    followed by <rows> matrix rows.

void write_qnet(std::ostream& out, const QNet& net);
QNet read_qnet(std::istream& in);

void write_edgenet(std::ostream& out, const EdgeNet& net);
EdgeNet read_edgenet(std::istream& in);

enum class FieldKind { Vertex, Edge, Plaquette };

struct MatrixFieldFile {
  FieldKind kind = FieldKind::Vertex;
  int n_axes = 0;
  int r = 0;
  VertexField<Matrix> vertex;
  EdgeField<Matrix> edge;
  PlaquetteField<Matrix> plaquette;
};

void write_vertex_field(std::ostream& out, const VertexField<Matrix>& f,
                        int n_axes, int r);
void write_edge_field(std::ostream& out, const EdgeField<Matrix>& f,
                      int n_axes, int r);
void write_plaquette_field(std::ostream& out, const PlaquetteField<Matrix>& f,
                           int n_axes, int r);
MatrixFieldFile read_matrix_field(std::istream& in);

/// Wavefront OBJ quad mesh of a two-axis slice of a point net (r = 0).
/// Grid vertices run over anchor + u*e_axis_u + v*e_axis_v with
/// 0 <= u <= ext_u, 0 <= v <= ext_v; affine coordinates are emitted as
/// doubles, truncated or zero-padded to three components.
void write_obj_mesh(std::ostream& out, const QNet& net, int axis_u,
                    int axis_v, int ext_u, int ext_v,
                    const VertexIndex& anchor);

/// File helpers; throw Error when the file cannot be opened.
void save_qnet(const std::string& path, const QNet& net);
QNet load_qnet(const std::string& path);
void save_edgenet(const std::string& path, const EdgeNet& net);
EdgeNet load_edgenet(const std::string& path);
MatrixFieldFile load_matrix_field(const std::string& path);

/// One line of a key=value report.
std::string report_line(
    const std::vector<std::pair<std::string, std::string>>& fields);

std::string vertex_csv(const VertexIndex& v);

}  // namespace grnet
