#pragma once

#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "tverword/simplicial_complex.hpp"

namespace tvw {

// A word is a finite sequence of vertex letters. Positions are 1-based in
// certificates and in all documentation.
using Word = std::vector<VertexId>;

// Set of letters occurring in the word.
Face alphabet(const Word& word);

// Witness that a host word contains a d-colorful subword on `alphabet`:
// `positions` is the strictly increasing list of 1-based host indices of the
// subword. For r = |alphabet| >= 2 the subword has length (d+1)(r-1)+1 and
// splits into d+1 blocks of length r, consecutive blocks sharing their
// boundary letter, each block a permutation of the alphabet. For r = 1 the
// certificate is a single occurrence of the letter.
struct ColorfulCertificate {
  Face alphabet;
  int d = 0;
  std::vector<int> positions;

  // Checks the structural invariants against a host word.
  bool valid_for(const Word& host) const;

  bool operator==(const ColorfulCertificate&) const = default;
};

// Maximal run of one letter inside a restriction W(A); start/end are 1-based
// inclusive indices into the restriction.
struct Chunk {
  VertexId letter = 0;
  int start = 0;
  int end = 0;

  bool operator==(const Chunk&) const = default;
};

// True iff the word is d-colorful on its own alphabet: with r = |alphabet|,
// r >= 2, the length is exactly (d+1)(r-1)+1 and each of the d+1 blocks is a
// permutation of the alphabet.
bool is_colorful(const Word& word, int d);

// Searches for a d-colorful subword on alphabet sigma and returns the
// lexicographically least certificate, or nullopt. Runs a left-to-right
// dynamic program over states (block number, subset of sigma consumed in the
// current block); a completed block seeds the next one with its final
// letter. Time O(|word| * (d+1) * 2^|sigma|). For |sigma| = 1 the result is
// the first occurrence of the letter. Throws if sigma is empty or d < 0.
std::optional<ColorfulCertificate> find_colorful_subword(const Word& word,
                                                         const Face& sigma,
                                                         int d);

// The complex d-colorfully represented by the word: vertices are the letters
// that occur, and a face of size >= 2 is present iff the word contains a
// d-colorful subword on it. Faces are grown upward from singletons; only
// candidates all of whose codimension-1 subsets are already faces get
// tested. Honors TVERWORD_THREADS for candidate evaluation (default 1); the
// result is independent of the thread count.
SimplicialComplex delta_complex(const Word& word, int d);

// Collapses consecutive equal letters.
Word reduce(const Word& word);

// Subsequence of the letters that lie in tau, order preserved.
Word restrict(const Word& word, const Face& tau);

// Deterministic d-colorful word on sigma (|sigma| >= 2): the sorted alphabet
// followed by alternating reversed/forward copies with the shared boundary
// letter elided, for d+1 blocks in total.
Word canonical_word(const Face& sigma, int d);

// Removes the letter from a colorful word by the block-overlap procedure:
// whenever the letter sits at a block overlap, it is deleted together with
// the occurrence, inside the block starting there, of the letter that
// immediately precedes it; all its other occurrences are simply deleted.
// On the edge case where that occurrence is itself the next block boundary
// the rule breaks down, and the least d-colorful subword on the smaller
// alphabet is extracted instead. The input must be d-colorful for the d
// inferred from its length, with at least 3 letters in its alphabet; the
// result is d-colorful on the smaller alphabet either way.
Word delete_letter(const Word& word, VertexId letter);

// Word representing K at d = m+1, where m is the number of nonempty facets:
// the concatenation of canonical (m+1)-colorful words for the facets of size
// >= 2 in canonical order, followed by one letter per singleton facet.
Word facet_concat_word(const SimplicialComplex& complex);

struct LiftResult {
  Word word;
  // Applied to the input's letters before prepending the reversed alphabet.
  std::map<VertexId, VertexId> relabeling;
};

// Relabels the word so that letters are ordered by first occurrence, then
// prepends the (sorted) alphabet in reverse. The result represents at d+1
// the relabeled image of what the input represents at d, for every d.
LiftResult lift_word(const Word& word);

// Deletes instances of `letter`, leftmost first and restarting after every
// deletion, as long as delta_complex(word, d) is unchanged.
Word minimize_letter(const Word& word, VertexId letter, int d);

// The chunks of restrict(word, a), in order.
std::vector<Chunk> chunks(const Word& word, const Face& a);

// Text format: a single line of space-separated decimal letters.
Word read_word(std::istream& in);
Word parse_word(const std::string& text);
std::string format_word(const Word& word);

// Certificate format: "alphabet | d | positions", decimals space-separated.
std::string format_certificate(const ColorfulCertificate& certificate);

}  // namespace tvw
