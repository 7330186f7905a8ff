#include "tverword/simplicial_complex.hpp"

#include <algorithm>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace tvw {

namespace {

std::vector<VertexId> normalized(std::vector<VertexId> vertices) {
  for (VertexId v : vertices) {
    if (v < 0) {
      throw std::invalid_argument("vertex labels must be non-negative");
    }
  }
  std::sort(vertices.begin(), vertices.end());
  vertices.erase(std::unique(vertices.begin(), vertices.end()),
                 vertices.end());
  return vertices;
}

}  // namespace

Face::Face(std::initializer_list<VertexId> vertices)
    : vertices_(normalized(std::vector<VertexId>(vertices))) {}

Face::Face(std::vector<VertexId> vertices)
    : vertices_(normalized(std::move(vertices))) {}

bool Face::contains(VertexId v) const {
  return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::subset_of(const Face& other) const {
  return std::includes(other.vertices_.begin(), other.vertices_.end(),
                       vertices_.begin(), vertices_.end());
}

Face Face::intersect(const Face& other) const {
  std::vector<VertexId> out;
  std::set_intersection(vertices_.begin(), vertices_.end(),
                        other.vertices_.begin(), other.vertices_.end(),
                        std::back_inserter(out));
  Face f;
  f.vertices_ = std::move(out);  // already sorted/unique
  return f;
}

Face Face::unite(const Face& other) const {
  std::vector<VertexId> out;
  std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                 other.vertices_.end(), std::back_inserter(out));
  Face f;
  f.vertices_ = std::move(out);
  return f;
}

Face Face::without(VertexId v) const {
  std::vector<VertexId> out;
  out.reserve(vertices_.size());
  for (VertexId u : vertices_) {
    if (u != v) out.push_back(u);
  }
  Face f;
  f.vertices_ = std::move(out);
  return f;
}

bool facet_less(const Face& a, const Face& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a.vertices() < b.vertices();
}

SimplicialComplex::SimplicialComplex() : facets_{Face{}} {}

SimplicialComplex SimplicialComplex::from_facets(
    std::vector<Face> candidate_faces) {
  std::sort(candidate_faces.begin(), candidate_faces.end(), facet_less);
  candidate_faces.erase(
      std::unique(candidate_faces.begin(), candidate_faces.end()),
      candidate_faces.end());
  std::vector<Face> maximal;
  for (const Face& f : candidate_faces) {
    bool dominated = false;
    for (const Face& g : candidate_faces) {
      if (g.size() > f.size() && f.subset_of(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) maximal.push_back(f);
  }
  SimplicialComplex k;
  if (maximal.empty()) maximal.push_back(Face{});
  k.facets_ = std::move(maximal);
  return k;
}

Face SimplicialComplex::vertices() const {
  Face all;
  for (const Face& f : facets_) all = all.unite(f);
  return all;
}

bool SimplicialComplex::is_face(const Face& sigma) const {
  for (const Face& f : facets_) {
    if (sigma.subset_of(f)) return true;
  }
  return false;
}

SimplicialComplex SimplicialComplex::induced(const Face& tau) const {
  std::vector<Face> cuts;
  cuts.reserve(facets_.size());
  for (const Face& f : facets_) cuts.push_back(f.intersect(tau));
  return from_facets(std::move(cuts));
}

Face SimplicialComplex::cone_vertices() const {
  Face common = facets_.front();
  for (std::size_t i = 1; i < facets_.size(); ++i) {
    common = common.intersect(facets_[i]);
  }
  return common;
}

SimplicialComplex SimplicialComplex::one_skeleton() const {
  std::vector<Face> parts;
  for (const Face& f : facets_) {
    if (f.size() <= 1) {
      parts.push_back(f);
      continue;
    }
    const auto& vs = f.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
      for (std::size_t j = i + 1; j < vs.size(); ++j) {
        parts.push_back(Face{vs[i], vs[j]});
      }
    }
  }
  return from_facets(std::move(parts));
}

bool SimplicialComplex::is_empty_complex() const {
  return facets_.size() == 1 && facets_.front().empty();
}

SimplicialComplex read_complex(std::istream& in) {
  std::vector<Face> faces;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ls(line);
    std::string token;
    std::vector<VertexId> vs;
    bool comment = false;
    while (ls >> token) {
      if (token.front() == '#') {
        comment = true;
        break;
      }
      try {
        std::size_t used = 0;
        const int v = std::stoi(token, &used);
        if (used != token.size() || v < 0) throw std::invalid_argument(token);
        vs.push_back(v);
      } catch (const std::exception&) {
        throw std::runtime_error("bad vertex token '" + token + "'");
      }
    }
    if (comment && vs.empty()) continue;
    if (!vs.empty()) faces.emplace_back(std::move(vs));
  }
  return SimplicialComplex::from_facets(std::move(faces));
}

SimplicialComplex parse_complex(const std::string& text) {
  std::istringstream in(text);
  return read_complex(in);
}

std::string format_face(const Face& face) {
  std::string out;
  for (std::size_t i = 0; i < face.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(face.vertices()[i]);
  }
  return out;
}

std::string format_complex(const SimplicialComplex& complex) {
  std::string out;
  for (const Face& f : complex.facets()) {
    if (f.empty()) continue;
    out += format_face(f);
    out += '\n';
  }
  return out;
}

}  // namespace tvw
