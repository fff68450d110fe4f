#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidtk {

// Positive braid word on a fixed number of strands. Letters are generator
// indices in [1, strands-1]; every crossing is positive. The empty word is
// legal only when constructed explicitly (the text grammar requires at least
// one term).
struct BraidWord {
    int strands = 1;
    std::vector<int> letters;

    BraidWord() = default;
    BraidWord(int n, std::vector<int> ls);

    int length() const { return static_cast<int>(letters.size()); }
    bool operator==(const BraidWord& o) const = default;

    std::string text() const;  // "s3 s1 s2 ..." form, round-trips through parse_braid
};

struct ParseError : std::runtime_error {
    std::size_t position;
    ParseError(const std::string& msg, std::size_t pos)
        : std::runtime_error(msg), position(pos) {}
};

struct MoveError : std::runtime_error {
    explicit MoveError(const std::string& msg) : std::runtime_error(msg) {}
};

struct PreconditionError : std::runtime_error {
    explicit PreconditionError(const std::string& msg) : std::runtime_error(msg) {}
};

// Grammar: braid := [ "N=" int ";" ] term+ ; term := "s" int [ "^" int ].
// Whitespace separated, exponents >= 1. Strand count is inferred as
// (max letter)+1 when not declared.
BraidWord parse_braid(const std::string& text);

// Closure data of a positive braid word. For split words the disk-band
// surface is disconnected; `blocks` counts its connected components (1 for
// non-split) and betti/genus are totals over components.
struct ClosureSummary {
    int strands = 1;
    int crossings = 0;
    std::vector<int> permutation;  // 1-based images, permutation[i-1] = image of strand i
    int components = 1;            // cycles of the permutation
    int betti = 0;                 // c - N + blocks
    int genus = 0;                 // (betti - components + blocks) / 2
    bool split = false;            // some generator in [1, N-1] unused
    bool prime = false;            // non-split and linking graph connected
    int blocks = 1;
};

ClosureSummary closure_summary(const BraidWord& w);

// Left-to-right product of the adjacent transpositions named by the word.
std::vector<int> word_permutation(const BraidWord& w);

enum class MoveKind {
    FarCommutation,        // pos: swap letters pos, pos+1 (|difference| >= 2)
    BraidRelation,         // pos: (i, i±1, i) -> (i±1, i, i±1) at pos..pos+2
    ElementaryConjugation, // aux=+1: last letter to front; aux=-1: first to back
    MarkovStabilize,       // append sigma_N, strands -> N+1
    MarkovDestabilize,     // remove the unique sigma_{N-1}, strands -> N-1
    StrandReduction,       // pos: column index, delegates to strand_reduce
};

struct Move {
    MoveKind kind = MoveKind::ElementaryConjugation;
    int pos = 0;
    int aux = 0;
};

// Applies the move after checking it is legal at the stated position; throws
// MoveError otherwise. Replaying a move on its source word always yields the
// same target word.
BraidWord apply_move(const BraidWord& w, const Move& m);

// Strand reduction at columns (i, i+1): requires a prime word on N >= 3
// strands whose two-column subword has a path linking graph. Returns a word
// on N-1 strands with the same closure. `budget` caps normalization steps.
BraidWord strand_reduce(const BraidWord& w, int column, int budget = 10000);

// True iff the Garside half twist on N strands left-divides the word in the
// positive braid monoid.
bool half_twist_divides(const BraidWord& w);

// Move (de)serialization used by certificate files.
std::string move_kind_name(MoveKind k);
std::optional<MoveKind> move_kind_from_name(const std::string& s);

}  // namespace braidtk
