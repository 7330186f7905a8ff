#include "tverword/word.hpp"

#include <algorithm>
#include <cstdlib>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "face_growth.hpp"

namespace tvw {

namespace {

int parallelism_degree() {
  static const int degree = [] {
    const char* env = std::getenv("TVERWORD_THREADS");
    if (env == nullptr) return 1;
    const int v = std::atoi(env);
    return v > 1 ? v : 1;
  }();
  return degree;
}

bool block_is_permutation(const Word& word, std::size_t start, std::size_t r,
                          const Face& sigma) {
  std::vector<VertexId> block(word.begin() + start,
                              word.begin() + start + r);
  std::sort(block.begin(), block.end());
  return block == sigma.vertices();
}

}  // namespace

Face alphabet(const Word& word) {
  return Face(word);
}

bool ColorfulCertificate::valid_for(const Word& host) const {
  const std::size_t r = alphabet.size();
  if (r == 0 || d < 0) return false;
  const std::size_t want =
      r == 1 ? 1 : static_cast<std::size_t>(d + 1) * (r - 1) + 1;
  if (positions.size() != want) return false;
  for (std::size_t i = 0; i < positions.size(); ++i) {
    if (positions[i] < 1 ||
        positions[i] > static_cast<int>(host.size())) {
      return false;
    }
    if (i > 0 && positions[i] <= positions[i - 1]) return false;
  }
  Word sub;
  sub.reserve(positions.size());
  for (int p : positions) sub.push_back(host[p - 1]);
  if (r == 1) return sub.front() == alphabet.vertices().front();
  for (int b = 0; b <= d; ++b) {
    if (!block_is_permutation(sub, static_cast<std::size_t>(b) * (r - 1), r,
                              alphabet)) {
      return false;
    }
  }
  return true;
}

bool is_colorful(const Word& word, int d) {
  if (d < 0) return false;
  const Face sigma = alphabet(word);
  const std::size_t r = sigma.size();
  if (r < 2) return false;
  if (word.size() != static_cast<std::size_t>(d + 1) * (r - 1) + 1) {
    return false;
  }
  for (int b = 0; b <= d; ++b) {
    if (!block_is_permutation(word, static_cast<std::size_t>(b) * (r - 1), r,
                              sigma)) {
      return false;
    }
  }
  return true;
}

std::optional<ColorfulCertificate> find_colorful_subword(const Word& word,
                                                         const Face& sigma,
                                                         int d) {
  if (sigma.empty()) {
    throw std::invalid_argument("alphabet sigma must be nonempty");
  }
  if (d < 0) {
    throw std::invalid_argument("d must be non-negative");
  }
  const int r = static_cast<int>(sigma.size());
  if (r == 1) {
    const VertexId target = sigma.vertices().front();
    for (std::size_t i = 0; i < word.size(); ++i) {
      if (word[i] == target) {
        return ColorfulCertificate{sigma, d,
                                   {static_cast<int>(i) + 1}};
      }
    }
    return std::nullopt;
  }

  const int n = static_cast<int>(word.size());
  const std::size_t need = static_cast<std::size_t>(d + 1) * (r - 1) + 1;
  if (static_cast<std::size_t>(n) < need) return std::nullopt;

  // Bit index of each sigma letter; -1 for letters outside sigma.
  const auto& sigma_letters = sigma.vertices();
  const auto bit_at = [&](int pos) -> int {
    const auto it = std::lower_bound(sigma_letters.begin(),
                                     sigma_letters.end(), word[pos]);
    if (it == sigma_letters.end() || *it != word[pos]) return -1;
    return static_cast<int>(it - sigma_letters.begin());
  };

  const int blocks = d + 1;
  const unsigned full = (1u << r) - 1;
  // feasible[pos][block][mask]: starting at word position pos with `mask`
  // consumed in block `block`, the remaining blocks can be completed.
  // block runs 1..blocks; the first block starts from the empty mask.
  const std::size_t masks = 1u << r;
  auto idx = [&](int pos, int block, unsigned mask) {
    return (static_cast<std::size_t>(pos) * (blocks + 1) + block) * masks +
           mask;
  };
  std::vector<char> feasible(static_cast<std::size_t>(n + 1) * (blocks + 1) *
                                 masks,
                             0);
  for (int pos = n - 1; pos >= 0; --pos) {
    const int b = bit_at(pos);
    for (int block = blocks; block >= 1; --block) {
      for (unsigned mask = 0; mask < masks; ++mask) {
        char ok = feasible[idx(pos + 1, block, mask)];
        if (!ok && b >= 0 && !(mask & (1u << b))) {
          const unsigned next = mask | (1u << b);
          if (next != full) {
            ok = feasible[idx(pos + 1, block, next)];
          } else if (block == blocks) {
            ok = 1;
          } else {
            ok = feasible[idx(pos + 1, block + 1, 1u << b)];
          }
        }
        feasible[idx(pos, block, mask)] = ok;
      }
    }
  }

  if (!feasible[idx(0, 1, 0)]) return std::nullopt;

  // Greedy walk: always take the earliest position that keeps the remaining
  // blocks feasible; this yields the lexicographically least certificate.
  std::vector<int> positions;
  positions.reserve(need);
  int pos = 0;
  int block = 1;
  unsigned mask = 0;
  while (positions.size() < need) {
    for (;; ++pos) {
      if (pos >= n) throw std::logic_error("colorful DP walk out of bounds");
      const int b = bit_at(pos);
      if (b < 0 || (mask & (1u << b))) continue;
      const unsigned next = mask | (1u << b);
      bool take = false;
      if (next != full) {
        take = feasible[idx(pos + 1, block, next)];
      } else if (block == blocks) {
        take = true;
      } else {
        take = feasible[idx(pos + 1, block + 1, 1u << b)];
      }
      if (take) {
        positions.push_back(pos + 1);
        if (next == full && block < blocks) {
          block += 1;
          mask = 1u << b;
        } else {
          mask = next;
        }
        ++pos;
        break;
      }
    }
  }
  return ColorfulCertificate{sigma, d, std::move(positions)};
}

SimplicialComplex delta_complex(const Word& word, int d) {
  const Face alpha = alphabet(word);
  if (alpha.empty()) return SimplicialComplex();
  return detail::grow_faces(
      alpha.vertices(),
      [&](const Face& f) {
        return find_colorful_subword(word, f, d).has_value();
      },
      parallelism_degree());
}

Word reduce(const Word& word) {
  Word out;
  for (VertexId c : word) {
    if (out.empty() || out.back() != c) out.push_back(c);
  }
  return out;
}

Word restrict(const Word& word, const Face& tau) {
  Word out;
  for (VertexId c : word) {
    if (tau.contains(c)) out.push_back(c);
  }
  return out;
}

Word canonical_word(const Face& sigma, int d) {
  if (sigma.size() < 2) {
    throw std::invalid_argument("canonical_word needs |sigma| >= 2");
  }
  if (d < 0) {
    throw std::invalid_argument("d must be non-negative");
  }
  const auto& p = sigma.vertices();
  const std::size_t r = p.size();
  Word out(p.begin(), p.end());
  for (int b = 1; b <= d; ++b) {
    if (b % 2 == 1) {
      // reversed alphabet minus its first letter
      for (std::size_t i = r - 1; i-- > 0;) out.push_back(p[i]);
    } else {
      for (std::size_t i = 1; i < r; ++i) out.push_back(p[i]);
    }
  }
  return out;
}

Word delete_letter(const Word& word, VertexId letter) {
  const Face sigma = alphabet(word);
  const std::size_t r = sigma.size();
  if (r < 3) {
    throw std::invalid_argument("delete_letter needs an alphabet of size >= 3");
  }
  if (!sigma.contains(letter)) {
    throw std::invalid_argument("letter does not occur in the word");
  }
  if ((word.size() - 1) % (r - 1) != 0) {
    throw std::invalid_argument("word length does not match any d");
  }
  const int d = static_cast<int>((word.size() - 1) / (r - 1)) - 1;
  if (d < 0 || !is_colorful(word, d)) {
    throw std::invalid_argument("word is not colorful for the inferred d");
  }

  // 1-based overlap positions between consecutive blocks.
  const auto is_overlap = [&](std::size_t pos) {
    return pos > 1 && pos < word.size() && (pos - 1) % (r - 1) == 0;
  };
  std::vector<char> drop(word.size() + 1, 0);
  for (std::size_t pos = 1; pos <= word.size(); ++pos) {
    if (word[pos - 1] != letter) continue;
    drop[pos] = 1;
    if (is_overlap(pos)) {
      const VertexId prev = word[pos - 2];
      // The copy of `prev` inside the block starting at this overlap.
      for (std::size_t q = pos + 1; q <= pos + r - 1; ++q) {
        if (word[q - 1] == prev) {
          drop[q] = 1;
          break;
        }
      }
    }
  }
  Word out;
  out.reserve(word.size());
  for (std::size_t pos = 1; pos <= word.size(); ++pos) {
    if (!drop[pos]) out.push_back(word[pos - 1]);
  }
  if (is_colorful(out, d)) return out;

  // The overlap rule can delete a copy that the block after next still
  // needs as its boundary letter. In that case extract the least d-colorful
  // subword on the smaller alphabet instead; one always exists.
  const auto cert = find_colorful_subword(word, sigma.without(letter), d);
  if (!cert) {
    throw std::logic_error("no colorful subword on the reduced alphabet");
  }
  Word fallback;
  fallback.reserve(cert->positions.size());
  for (int p : cert->positions) fallback.push_back(word[p - 1]);
  return fallback;
}

Word facet_concat_word(const SimplicialComplex& complex) {
  if (complex.is_empty_complex()) return Word{};
  int m = 0;
  for (const Face& f : complex.facets()) {
    if (!f.empty()) ++m;
  }
  const int d = m + 1;
  Word out;
  for (const Face& f : complex.facets()) {
    if (f.size() >= 2) {
      const Word w = canonical_word(f, d);
      out.insert(out.end(), w.begin(), w.end());
    }
  }
  for (const Face& f : complex.facets()) {
    if (f.size() == 1) out.push_back(f.vertices().front());
  }
  return out;
}

LiftResult lift_word(const Word& word) {
  const Face alpha = alphabet(word);
  // Letters in order of first occurrence.
  std::vector<VertexId> first_seen;
  for (VertexId c : word) {
    if (std::find(first_seen.begin(), first_seen.end(), c) ==
        first_seen.end()) {
      first_seen.push_back(c);
    }
  }
  LiftResult result;
  const auto& sorted = alpha.vertices();
  for (std::size_t i = 0; i < first_seen.size(); ++i) {
    result.relabeling[first_seen[i]] = sorted[i];
  }
  Word lifted(sorted.rbegin(), sorted.rend());
  for (VertexId c : word) lifted.push_back(result.relabeling.at(c));
  result.word = std::move(lifted);
  return result;
}

Word minimize_letter(const Word& word, VertexId letter, int d) {
  if (!alphabet(word).contains(letter)) {
    throw std::invalid_argument("letter does not occur in the word");
  }
  const SimplicialComplex target = delta_complex(word, d);
  Word current = word;
  bool deleted = true;
  while (deleted) {
    deleted = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (current[i] != letter) continue;
      Word candidate = current;
      candidate.erase(candidate.begin() + i);
      if (delta_complex(candidate, d) == target) {
        current = std::move(candidate);
        deleted = true;
        break;
      }
    }
  }
  return current;
}

std::vector<Chunk> chunks(const Word& word, const Face& a) {
  const Word r = restrict(word, a);
  std::vector<Chunk> out;
  std::size_t i = 0;
  while (i < r.size()) {
    std::size_t j = i;
    while (j + 1 < r.size() && r[j + 1] == r[i]) ++j;
    out.push_back(Chunk{r[i], static_cast<int>(i) + 1,
                        static_cast<int>(j) + 1});
    i = j + 1;
  }
  return out;
}

Word read_word(std::istream& in) {
  Word out;
  std::string token;
  while (in >> token) {
    try {
      std::size_t used = 0;
      const int v = std::stoi(token, &used);
      if (used != token.size() || v < 0) throw std::invalid_argument(token);
      out.push_back(v);
    } catch (const std::exception&) {
      throw std::runtime_error("bad letter token '" + token + "'");
    }
  }
  return out;
}

Word parse_word(const std::string& text) {
  std::istringstream in(text);
  return read_word(in);
}

std::string format_word(const Word& word) {
  std::string out;
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (i) out += ' ';
    out += std::to_string(word[i]);
  }
  return out;
}

std::string format_certificate(const ColorfulCertificate& certificate) {
  std::string out = format_face(certificate.alphabet);
  out += " | ";
  out += std::to_string(certificate.d);
  out += " |";
  for (int p : certificate.positions) {
    out += ' ';
    out += std::to_string(p);
  }
  return out;
}

}  // namespace tvw
