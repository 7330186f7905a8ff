#pragma once

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace tvw {

// Vertices are non-negative integer labels.
using VertexId = int;

// A finite set of vertices, stored sorted and without duplicates.
class Face {
 public:
  Face() = default;
  Face(std::initializer_list<VertexId> vertices);
  explicit Face(std::vector<VertexId> vertices);

  const std::vector<VertexId>& vertices() const { return vertices_; }
  std::size_t size() const { return vertices_.size(); }
  bool empty() const { return vertices_.empty(); }

  bool contains(VertexId v) const;
  bool subset_of(const Face& other) const;
  Face intersect(const Face& other) const;
  Face unite(const Face& other) const;
  Face without(VertexId v) const;

  auto begin() const { return vertices_.begin(); }
  auto end() const { return vertices_.end(); }

  bool operator==(const Face&) const = default;

 private:
  std::vector<VertexId> vertices_;
};

// Canonical facet order: by size, then lexicographically.
bool facet_less(const Face& a, const Face& b);

// A simplicial complex stored by its inclusion-maximal faces. Face
// membership, induced subcomplexes and skeleta are derived on demand.
// The empty complex is represented by the facet list [∅], so the empty
// face is a face of every complex.
class SimplicialComplex {
 public:
  // The empty complex.
  SimplicialComplex();

  // Downward closure of the given faces: dominated and duplicate faces are
  // dropped and the rest are put in canonical order, so equality of
  // complexes is structural equality of facet lists.
  static SimplicialComplex from_facets(std::vector<Face> candidate_faces);

  const std::vector<Face>& facets() const { return facets_; }

  // Union of all facets.
  Face vertices() const;

  // True iff sigma is contained in some facet.
  bool is_face(const Face& sigma) const;

  // Subcomplex of all faces contained in tau.
  SimplicialComplex induced(const Face& tau) const;

  // Intersection of all facets; nonempty iff the complex is a cone.
  Face cone_vertices() const;

  // Complex whose facets are the edges and isolated vertices.
  SimplicialComplex one_skeleton() const;

  bool is_empty_complex() const;

  bool operator==(const SimplicialComplex&) const = default;

 private:
  std::vector<Face> facets_;
};

// Text format: one facet per line, vertices as space-separated decimal
// integers; blank lines are ignored and lines starting with '#' are
// comments. The empty complex serializes to an empty document.
SimplicialComplex read_complex(std::istream& in);
SimplicialComplex parse_complex(const std::string& text);
std::string format_complex(const SimplicialComplex& complex);

std::string format_face(const Face& face);

}  // namespace tvw
