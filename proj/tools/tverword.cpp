// Command line front end. Every subcommand is pure input -> output with
// exit code 0 on success, 1 on a negative answer (no certificate, no
// witness, predicate false), and 2 on usage or format errors.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "tverword/gd_graph.hpp"
#include "tverword/geometry.hpp"
#include "tverword/partition.hpp"
#include "tverword/simplicial_complex.hpp"
#include "tverword/word.hpp"

namespace {

using namespace tvw;

std::ifstream open_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path + "'");
  return in;
}

Word word_input(const std::string& file) {
  if (file.empty()) return read_word(std::cin);
  auto in = open_file(file);
  return read_word(in);
}

PointSequence points_input(const std::string& file) {
  if (file.empty()) return read_points(std::cin);
  auto in = open_file(file);
  return read_points(in);
}

SimplicialComplex complex_input(const std::string& file) {
  auto in = open_file(file);
  return read_complex(in);
}

Partition partition_input(const std::string& file) {
  auto in = open_file(file);
  return read_partition(in);
}

// Space-separated distinct non-negative letters.
Face face_arg(const std::string& text) {
  std::istringstream in(text);
  std::string token;
  std::vector<VertexId> vs;
  while (in >> token) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != token.size() || v < 0) {
      throw std::runtime_error("bad vertex token '" + token + "'");
    }
    for (VertexId seen : vs) {
      if (seen == v) {
        throw std::runtime_error("duplicate vertex " + token);
      }
    }
    vs.push_back(v);
  }
  return Face(vs);
}

void print_witness(const TverbergWitness& witness) {
  std::cout << format_witness(witness);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "tverword: exact tools for colorful words, simplicial complexes and "
      "Tverberg partitions.\nSet TVERWORD_THREADS to evaluate candidate "
      "faces in parallel (default: sequential)."};
  app.footer(
      "Text formats:\n"
      "  word       one line of space-separated decimal letters\n"
      "  complex    one facet per line, vertices space-separated; '#' "
      "comments\n"
      "  points     header 'dim d', then one point per line; coordinates "
      "'num/den' or integers\n"
      "  parts      points format with each part introduced by a line "
      "'part'\n"
      "  partition  one part per line, 'label: i1 i2 ...' (1-based indices)\n"
      "  certificate  'alphabet | d | positions' (1-based positions)\n"
      "Exit codes: 0 success, 1 negative answer, 2 usage/format error.");
  app.require_subcommand(1);
  int result = 0;

  std::string file, points_file, parts_file, complex_file, sigma_text,
      tau_text, base_text;
  int d = 1, r = 2, r_max = 2, n = 1, max_len = 1;
  std::int64_t mult = 1, max_vertices = 1'000'000;
  VertexId letter = 0;
  bool show_relabeling = false;

  // --- word ---
  auto* word_cmd = app.add_subcommand("word", "operations on words");
  word_cmd->require_subcommand(1);

  auto* w_check = word_cmd->add_subcommand("check", "is the word d-colorful");
  w_check->add_option("--d", d, "block count minus one")->required();
  w_check->add_option("--file", file, "word file (default: stdin)");
  w_check->callback([&] {
    if (is_colorful(word_input(file), d)) {
      std::cout << "colorful\n";
    } else {
      std::cout << "not colorful\n";
      result = 1;
    }
  });

  auto* w_find = word_cmd->add_subcommand(
      "find", "least d-colorful subword certificate on an alphabet");
  w_find->add_option("--d", d)->required();
  w_find->add_option("--sigma", sigma_text, "alphabet, e.g. \"2 3 4\"")
      ->required();
  w_find->add_option("--file", file, "word file (default: stdin)");
  w_find->callback([&] {
    const auto cert = find_colorful_subword(word_input(file),
                                            face_arg(sigma_text), d);
    if (cert) {
      std::cout << format_certificate(*cert) << '\n';
    } else {
      std::cout << "none\n";
      result = 1;
    }
  });

  auto* w_delta = word_cmd->add_subcommand(
      "delta", "facets of the complex the word d-colorfully represents");
  w_delta->add_option("--d", d)->required();
  w_delta->add_option("--file", file, "word file (default: stdin)");
  w_delta->callback(
      [&] { std::cout << format_complex(delta_complex(word_input(file), d)); });

  auto* w_reduce =
      word_cmd->add_subcommand("reduce", "collapse consecutive equal letters");
  w_reduce->add_option("--file", file, "word file (default: stdin)");
  w_reduce->callback(
      [&] { std::cout << format_word(reduce(word_input(file))) << '\n'; });

  auto* w_restrict =
      word_cmd->add_subcommand("restrict", "keep only letters from tau");
  w_restrict->add_option("--tau", tau_text, "letters to keep")->required();
  w_restrict->add_option("--file", file, "word file (default: stdin)");
  w_restrict->callback([&] {
    std::cout << format_word(restrict(word_input(file), face_arg(tau_text)))
              << '\n';
  });

  // --- construct ---
  auto* construct = app.add_subcommand("construct", "word constructions");
  construct->require_subcommand(1);

  auto* c_canonical = construct->add_subcommand(
      "canonical", "zigzag d-colorful word on an alphabet");
  c_canonical->add_option("--sigma", sigma_text)->required();
  c_canonical->add_option("--d", d)->required();
  c_canonical->callback([&] {
    std::cout << format_word(canonical_word(face_arg(sigma_text), d)) << '\n';
  });

  auto* c_facets = construct->add_subcommand(
      "facets", "word representing a complex at d = facets + 1");
  c_facets->add_option("--file", complex_file, "complex file")->required();
  c_facets->callback([&] {
    std::cout << format_word(facet_concat_word(complex_input(complex_file)))
              << '\n';
  });

  auto* c_lift = construct->add_subcommand(
      "lift", "represent the same complex one dimension up");
  c_lift->add_option("--file", file, "word file (default: stdin)");
  c_lift->add_flag("--show-relabeling", show_relabeling,
                   "print the applied relabeling to stderr");
  c_lift->callback([&] {
    const auto lifted = lift_word(word_input(file));
    std::cout << format_word(lifted.word) << '\n';
    if (show_relabeling) {
      for (const auto& [from, to] : lifted.relabeling) {
        std::cerr << from << " -> " << to << '\n';
      }
    }
  });

  auto* c_delete = construct->add_subcommand(
      "delete", "remove a letter from a colorful word");
  c_delete->add_option("--i", letter, "letter to remove")->required();
  c_delete->add_option("--file", file, "word file (default: stdin)");
  c_delete->callback([&] {
    std::cout << format_word(delete_letter(word_input(file), letter)) << '\n';
  });

  // --- geom ---
  auto* geom = app.add_subcommand("geom", "exact rational geometry");
  geom->require_subcommand(1);

  auto* g_moment =
      geom->add_subcommand("moment", "points on the moment curve");
  g_moment->add_option("--n", n, "point count")->required();
  g_moment->add_option("--d", d, "ambient dimension")->required();
  g_moment->add_option("--base", base_text, "growth base, rational > 1")
      ->required();
  g_moment->callback([&] {
    std::cout << format_points(moment_curve(n, d, parse_rational(base_text)));
  });

  auto* g_gp = geom->add_subcommand("gp", "general position test");
  g_gp->add_option("--file", file, "points file (default: stdin)");
  g_gp->callback([&] {
    if (in_general_position(points_input(file))) {
      std::cout << "true\n";
    } else {
      std::cout << "false\n";
      result = 1;
    }
  });

  auto* g_sgp = geom->add_subcommand("sgp", "strong general position test");
  g_sgp->add_option("--file", file, "points file (default: stdin)");
  g_sgp->callback([&] {
    if (in_strong_general_position(points_input(file))) {
      std::cout << "true\n";
    } else {
      std::cout << "false\n";
      result = 1;
    }
  });

  auto* g_intersect = geom->add_subcommand(
      "intersect", "common point of the parts' convex hulls");
  g_intersect->add_option("--parts", parts_file, "parts file")->required();
  g_intersect->callback([&] {
    auto in = open_file(parts_file);
    int dim = 0;
    const auto parts = read_point_parts(in, &dim);
    const auto witness = convex_hulls_intersect(parts);
    if (witness) {
      std::cout << format_point(*witness) << '\n';
    } else {
      std::cout << "none\n";
      result = 1;
    }
  });

  // --- tverberg ---
  auto* tverberg = app.add_subcommand("tverberg", "Tverberg partitions");
  tverberg->require_subcommand(1);

  auto* t_nerve =
      tverberg->add_subcommand("nerve", "nerve of a partition's hulls");
  t_nerve->add_option("--parts", parts_file, "partition file")->required();
  t_nerve->add_option("--points", points_file, "points file (default: stdin)");
  t_nerve->callback([&] {
    std::cout << format_complex(
        nerve(points_input(points_file), partition_input(parts_file)));
  });

  auto* t_minimal = tverberg->add_subcommand(
      "minimal", "all minimal Tverberg partitions with r parts");
  t_minimal->add_option("--r", r, "part count")->required();
  t_minimal->add_option("--points", points_file,
                        "points file (default: stdin)");
  t_minimal->callback([&] {
    const auto witnesses =
        enumerate_minimal_tverberg(points_input(points_file), r);
    if (witnesses.empty()) {
      std::cout << "none\n";
      result = 1;
      return;
    }
    for (std::size_t i = 0; i < witnesses.size(); ++i) {
      if (i) std::cout << '\n';
      print_witness(witnesses[i]);
    }
  });

  auto* t_check = tverberg->add_subcommand(
      "colorful-check",
      "are minimal Tverberg partitions exactly the d-colorful ones");
  t_check->add_option("--d", d)->required();
  t_check->add_option("--rmax", r_max)->required();
  t_check->add_option("--points", points_file, "points file (default: stdin)");
  t_check->callback([&] {
    if (colorful_minimality_check(points_input(points_file), d, r_max)) {
      std::cout << "true\n";
    } else {
      std::cout << "false\n";
      result = 1;
    }
  });

  auto* t_find =
      tverberg->add_subcommand("find", "some Tverberg partition with r parts");
  t_find->add_option("--r", r)->required();
  t_find->add_option("--points", points_file, "points file (default: stdin)");
  t_find->callback([&] {
    const auto witness = find_tverberg_partition(points_input(points_file), r);
    if (witness) {
      print_witness(*witness);
    } else {
      std::cout << "none\n";
      result = 1;
    }
  });

  auto* t_w2p = tverberg->add_subcommand(
      "word2part", "partition of the points labeled by a word");
  t_w2p->add_option("--points", points_file, "points file")->required();
  t_w2p->add_option("--file", file, "word file (default: stdin)");
  t_w2p->callback([&] {
    std::cout << format_partition(
        word_to_partition(word_input(file), points_input(points_file)));
  });

  auto* t_p2w = tverberg->add_subcommand(
      "part2word", "label word of a partition, in sequence order");
  t_p2w->add_option("--parts", parts_file, "partition file")->required();
  t_p2w->add_option("--points", points_file, "points file (default: stdin)");
  t_p2w->callback([&] {
    std::cout << format_word(partition_to_word(points_input(points_file),
                                               partition_input(parts_file)))
              << '\n';
  });

  auto* t_cone = tverberg->add_subcommand(
      "extend-cone", "absorb uncovered points into a cone vertex part");
  t_cone->add_option("--complex", complex_file, "cone complex file")
      ->required();
  t_cone->add_option("--parts", parts_file, "partition file")->required();
  t_cone->add_option("--points", points_file, "points file (default: stdin)");
  t_cone->callback([&] {
    std::cout << format_partition(extend_partition_for_cone(
        complex_input(complex_file), points_input(points_file),
        partition_input(parts_file)));
  });

  // --- graph ---
  auto* graph = app.add_subcommand("graph", "graph family and word search");
  graph->require_subcommand(1);

  auto* gd = graph->add_subcommand("gd", "capped bipartite family G_d");
  gd->add_option("--n", n, "size of part A")->required();
  gd->add_option("--d", d, "target dimension")->required();
  gd->add_option("--mult", mult, "copies per neighborhood")->required();
  gd->add_option("--max-vertices", max_vertices, "vertex cap");
  gd->callback([&] {
    GdParams params;
    params.n = n;
    params.d = d;
    params.multiplicity = mult;
    params.max_vertices = max_vertices;
    std::cout << format_complex(build_gd(params));
  });

  auto* search = graph->add_subcommand(
      "search", "shortlex-least word representing a complex");
  search->add_option("--d", d)->required();
  search->add_option("--max-len", max_len, "length bound")->required();
  search->add_option("--file", complex_file, "complex file")->required();
  search->callback([&] {
    const auto word = search_word(complex_input(complex_file), d, max_len);
    if (word) {
      std::cout << format_word(*word) << '\n';
    } else {
      std::cout << "none\n";
      result = 1;
    }
  });

  // --- complex ---
  auto* complex_cmd =
      app.add_subcommand("complex", "simplicial complex utilities");
  complex_cmd->require_subcommand(1);

  auto* k_normalize = complex_cmd->add_subcommand(
      "normalize", "deduplicate and canonically order facets");
  k_normalize->add_option("--file", complex_file, "complex file")->required();
  k_normalize->callback(
      [&] { std::cout << format_complex(complex_input(complex_file)); });

  auto* k_induced =
      complex_cmd->add_subcommand("induced", "induced subcomplex on tau");
  k_induced->add_option("--tau", tau_text)->required();
  k_induced->add_option("--file", complex_file, "complex file")->required();
  k_induced->callback([&] {
    std::cout << format_complex(
        complex_input(complex_file).induced(face_arg(tau_text)));
  });

  auto* k_cone =
      complex_cmd->add_subcommand("cone", "common vertices of all facets");
  k_cone->add_option("--file", complex_file, "complex file")->required();
  k_cone->callback([&] {
    const Face cone = complex_input(complex_file).cone_vertices();
    if (cone.empty()) {
      std::cout << "none\n";
      result = 1;
    } else {
      std::cout << format_face(cone) << '\n';
    }
  });

  auto* k_skeleton = complex_cmd->add_subcommand(
      "skeleton", "edges and isolated vertices of the complex");
  k_skeleton->add_option("--file", complex_file, "complex file")->required();
  k_skeleton->callback([&] {
    std::cout << format_complex(complex_input(complex_file).one_skeleton());
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return result;
}
