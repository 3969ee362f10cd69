// Command line front end: generate, propagate, verify, extract, evolve,
// consistency, export-mesh. Exit codes: 0 success (and all checks passed),
// 2 a verification reported failures, 1 usage or data error.
#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "grnet/coefficients.hpp"
#include "grnet/darboux_net.hpp"
#include "grnet/darboux_system.hpp"
#include "grnet/errors.hpp"
#include "grnet/io.hpp"
#include "grnet/qnet.hpp"

using namespace grnet;

namespace {

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      throw Error("bad integer list '" + text + "'");
    }
  }
  if (out.empty()) throw Error("empty integer list");
  return out;
}

std::string sniff_header_tag(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::string line;
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    std::istringstream ss(line);
    std::string tag;
    if (ss >> tag) return tag;
  }
  throw Error("'" + path + "' is empty");
}

std::ostream& report_stream(std::ofstream& file, const std::string& path) {
  if (path.empty()) return std::cout;
  file.open(path);
  if (!file) throw Error("cannot open '" + path + "' for writing");
  return file;
}

std::string bool_text(bool v) { return v ? "true" : "false"; }

int run_generate(const std::string& kind, int n_axes, int rank, int dim,
                 std::uint64_t seed, long bound, const std::string& region_str,
                 const std::string& out_path) {
  Region region = parse_int_list(region_str);
  Rng rng(seed);
  if (kind == "qnet") {
    if (n_axes >= 3 && dim < 4 * rank + 3)
      throw Error("propagating nets needs dim >= 4*rank + 3");
    QNet net = generate_initial_data(n_axes, rank, dim, region, rng, bound);
    save_qnet(out_path, net);
  } else if (kind == "darboux") {
    DarbouxState walls = random_wall_state(n_axes, rank, region, rng, bound);
    std::ofstream out(out_path);
    if (!out) throw Error("cannot open '" + out_path + "' for writing");
    write_plaquette_field(out, walls.b, n_axes, rank);
  } else {
    throw Error("unknown kind '" + kind + "' (use qnet or darboux)");
  }
  return 0;
}

int run_propagate(const std::string& in_path, const std::string& region_str,
                  const std::string& out_path, const std::string& triple) {
  Region region = parse_int_list(region_str);
  QNet net = load_qnet(in_path);
  TripleChoice choice =
      triple == "largest" ? TripleChoice::Largest : TripleChoice::Smallest;
  QNet full = propagate_net(net, region, choice);
  save_qnet(out_path, full);
  return 0;
}

int run_verify(const std::string& in_path, const std::string& region_str,
               const std::string& report_path) {
  Region region = parse_int_list(region_str);
  std::ofstream file;
  std::ostream& out = report_stream(file, report_path);
  std::string tag = sniff_header_tag(in_path);
  int squares = 0, failures = 0;
  if (tag == "qnet") {
    QNet net = load_qnet(in_path);
    for (const VertexIndex& n : region_vertices(region))
      for (int i = 0; i < net.n_axes; ++i)
        for (int j = i + 1; j < net.n_axes; ++j) {
          if (n[i] >= region[i] || n[j] >= region[j]) continue;
          SquareCheck check = check_square(net, n, i, j);
          ++squares;
          if (!check.planar) ++failures;
          out << report_line({{"record", "square"},
                              {"at", vertex_csv(n)},
                              {"axes", format_axes({i, j})},
                              {"dim", std::to_string(check.span_projective_dim)},
                              {"bound", std::to_string(check.bound)},
                              {"pass", bool_text(check.planar)}})
              << '\n';
        }
  } else if (tag == "edgenet") {
    EdgeNet net = load_edgenet(in_path);
    for (const VertexIndex& n : region_vertices(region))
      for (int i = 0; i < net.n_axes; ++i)
        for (int j = i + 1; j < net.n_axes; ++j) {
          if (n[i] >= region[i] || n[j] >= region[j]) continue;
          EdgeSquareCheck check = check_edge_square(net, n, i, j);
          ++squares;
          if (!check.within_bound) ++failures;
          out << report_line({{"record", "edge-square"},
                              {"at", vertex_csv(n)},
                              {"axes", format_axes({i, j})},
                              {"dim", std::to_string(check.span_projective_dim)},
                              {"bound", std::to_string(check.bound)},
                              {"pass", bool_text(check.within_bound)}})
              << '\n';
        }
  } else {
    throw Error("'" + in_path + "' is neither a vertex nor an edge net");
  }
  out << report_line({{"record", "summary"},
                      {"squares", std::to_string(squares)},
                      {"failures", std::to_string(failures)},
                      {"pass", bool_text(failures == 0)}})
      << '\n';
  return failures == 0 ? 0 : 2;
}

int run_extract(const std::string& in_path, const std::string& region_str,
                const std::string& what, const std::string& out_path) {
  Region region = parse_int_list(region_str);
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open '" + out_path + "' for writing");
  std::string tag = sniff_header_tag(in_path);
  if (tag == "qnet") {
    QNet net = load_qnet(in_path);
    PlaquetteField<Matrix> a = extract_coefficients(net, region);
    if (what == "coefficients") {
      write_plaquette_field(out, a, net.n_axes, net.r);
      return 0;
    }
    EdgeField<Matrix> h = integrate_axis_potentials(a, region);
    if (what == "potentials")
      write_edge_field(out, h, net.n_axes, net.r);
    else if (what == "rotation")
      write_plaquette_field(out, rotation_from_potentials(h, region),
                            net.n_axes, net.r);
    else if (what == "variables")
      write_edge_field(out, edge_variables(net, h, region), net.n_axes,
                       net.r);
    else
      throw Error("unknown extraction '" + what + "'");
  } else if (tag == "edgenet") {
    EdgeNet net = load_edgenet(in_path);
    PlaquetteField<Matrix> t = extract_edge_rotations(net, region);
    if (what == "coefficients") {
      write_plaquette_field(out, t, net.n_axes, net.r);
      return 0;
    }
    EdgeField<Matrix> s = potentials_from_rotations(t, region);
    if (what == "potentials")
      write_edge_field(out, s, net.n_axes, net.r);
    else if (what == "rotation")
      write_plaquette_field(out, rotation_from_edge_potentials(s, region),
                            net.n_axes, net.r);
    else if (what == "variables")
      write_edge_field(out, edge_net_variables(net, s, region), net.n_axes,
                       net.r);
    else
      throw Error("unknown extraction '" + what + "'");
  } else {
    throw Error("'" + in_path + "' is neither a vertex nor an edge net");
  }
  return 0;
}

int run_evolve(const std::string& in_path, const std::string& region_str,
               const std::string& out_path) {
  Region region = parse_int_list(region_str);
  MatrixFieldFile file = load_matrix_field(in_path);
  if (file.kind != FieldKind::Plaquette)
    throw Error("evolution input must be a plaquette field");
  DarbouxState walls{file.n_axes, file.r, file.plaquette};
  DarbouxState full = evolve(walls, region);
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open '" + out_path + "' for writing");
  write_plaquette_field(out, full.b, file.n_axes, file.r);
  return 0;
}

int run_consistency(const std::string& kind, int rank, int dim,
                    std::uint64_t seed, long bound,
                    const std::string& report_path) {
  std::ofstream file;
  std::ostream& out = report_stream(file, report_path);
  if (kind == "qnet") {
    if (dim < 5 * rank + 4)
      throw Error("4D consistency needs dim >= 5*rank + 4");
    Rng rng(seed);
    QNet data = generate_initial_data(4, rank, dim, {1, 1, 1, 1}, rng, bound);
    ConsistencyReport report = check_4d_consistency(data);
    out << report_line({{"record", "consistency"},
                        {"kind", "qnet"},
                        {"rank", std::to_string(rank)},
                        {"dim", std::to_string(dim)},
                        {"seed", std::to_string(seed)},
                        {"candidates",
                         std::to_string(report.candidates.size())},
                        {"consistent", bool_text(report.consistent)}})
        << '\n';
    return report.consistent ? 0 : 2;
  }
  if (kind == "map") {
    Rng rng(seed);
    DarbouxState state = random_origin_state(rank, rng, bound);
    MapConsistencyReport report = check_map_4d_consistency(state);
    out << report_line({{"record", "consistency"},
                        {"kind", "map"},
                        {"rank", std::to_string(rank)},
                        {"seed", std::to_string(seed)},
                        {"comparisons", std::to_string(report.comparisons)},
                        {"consistent", bool_text(report.consistent)}})
        << '\n';
    return report.consistent ? 0 : 2;
  }
  throw Error("unknown kind '" + kind + "' (use qnet or map)");
}

int run_export_mesh(const std::string& in_path, const std::string& axes_str,
                    const std::string& ext_str, const std::string& anchor_str,
                    const std::string& out_path) {
  QNet net = load_qnet(in_path);
  std::vector<int> axes = parse_int_list(axes_str);
  std::vector<int> ext = parse_int_list(ext_str);
  if (axes.size() != 2 || ext.size() != 2)
    throw Error("--axes and --ext need exactly two entries");
  VertexIndex anchor(net.n_axes, 0);
  if (!anchor_str.empty()) {
    anchor = parse_int_list(anchor_str);
    if (static_cast<int>(anchor.size()) != net.n_axes)
      throw Error("--anchor arity does not match the net");
  }
  std::ofstream out(out_path);
  if (!out) throw Error("cannot open '" + out_path + "' for writing");
  write_obj_mesh(out, net, axes[0], axes[1], ext[0], ext[1], anchor);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"lattice nets of planes: generation, propagation, checks"};
  app.require_subcommand(1);

  std::string kind = "qnet", what = "rotation", triple = "smallest";
  std::string in_path, out_path, report_path, region_str, axes_str = "0,1",
              ext_str, anchor_str;
  int n_axes = 3, rank = 0, dim = 3;
  std::uint64_t seed = 1;
  long bound = 9;

  CLI::App* generate = app.add_subcommand("generate", "random initial data");
  generate->add_option("--kind", kind, "qnet or darboux");
  generate->add_option("--n", n_axes, "number of lattice axes");
  generate->add_option("--rank", rank, "plane dimension r");
  generate->add_option("--dim", dim, "ambient projective dimension d");
  generate->add_option("--seed", seed, "random seed");
  generate->add_option("--bound", bound, "entry bound / denominator scale");
  generate->add_option("--region", region_str, "box extents, e.g. 2,2,2")
      ->required();
  generate->add_option("--out", out_path, "output file")->required();

  CLI::App* propagate = app.add_subcommand("propagate", "fill a box from walls");
  propagate->add_option("--in", in_path)->required();
  propagate->add_option("--region", region_str)->required();
  propagate->add_option("--out", out_path)->required();
  propagate->add_option("--triple", triple, "smallest or largest axis triple");

  CLI::App* verify = app.add_subcommand("verify", "check square spans");
  verify->add_option("--in", in_path)->required();
  verify->add_option("--region", region_str)->required();
  verify->add_option("--report", report_path, "report file (default stdout)");

  CLI::App* extract = app.add_subcommand("extract", "coefficient data");
  extract->add_option("--in", in_path)->required();
  extract->add_option("--region", region_str)->required();
  extract->add_option("--what", what,
                      "coefficients, potentials, rotation or variables");
  extract->add_option("--out", out_path)->required();

  CLI::App* evolve_cmd = app.add_subcommand("evolve", "evolve wall rotation data");
  evolve_cmd->add_option("--in", in_path)->required();
  evolve_cmd->add_option("--region", region_str)->required();
  evolve_cmd->add_option("--out", out_path)->required();

  CLI::App* consistency = app.add_subcommand("consistency", "4D checks");
  consistency->add_option("--kind", kind, "qnet or map");
  consistency->add_option("--rank", rank)->required();
  consistency->add_option("--dim", dim);
  consistency->add_option("--seed", seed);
  consistency->add_option("--bound", bound);
  consistency->add_option("--report", report_path);

  CLI::App* mesh = app.add_subcommand("export-mesh", "OBJ quads of a point net");
  mesh->add_option("--in", in_path)->required();
  mesh->add_option("--axes", axes_str, "the two grid axes, e.g. 0,1");
  mesh->add_option("--ext", ext_str, "grid extents, e.g. 4,4")->required();
  mesh->add_option("--anchor", anchor_str, "fixed coordinates of the slice");
  mesh->add_option("--out", out_path)->required();

  CLI11_PARSE(app, argc, argv);

  try {
    if (generate->parsed())
      return run_generate(kind, n_axes, rank, dim, seed, bound, region_str,
                          out_path);
    if (propagate->parsed())
      return run_propagate(in_path, region_str, out_path, triple);
    if (verify->parsed()) return run_verify(in_path, region_str, report_path);
    if (extract->parsed())
      return run_extract(in_path, region_str, what, out_path);
    if (evolve_cmd->parsed())
      return run_evolve(in_path, region_str, out_path);
    if (consistency->parsed()) {
      if (consistency->count("--dim") == 0) dim = 5 * rank + 4;
      return run_consistency(kind, rank, dim, seed, bound, report_path);
    }
    if (mesh->parsed())
      return run_export_mesh(in_path, axes_str, ext_str, anchor_str, out_path);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 1;
}
