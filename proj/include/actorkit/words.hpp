#pragma once

// Axiom-2 words: signed integer combinations of the twelve bracketed
// monomials in x, y, z. W1 rewrites (y*z)*x, W2 rewrites x*(y*z).

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "actorkit/algebra.hpp"
#include "actorkit/report.hpp"

namespace actorkit {

enum class WordMode { plain, comm, anticomm };

std::string_view to_string(WordMode m);
// Throws InputError on unknown tags.
WordMode parse_word_mode(std::string_view tag);

struct Monomial3 {
    std::array<std::uint8_t, 3> vars;  // 0 = x, 1 = y, 2 = z, in reading order
    bool left;                         // (u*v)*w if true, u*(v*w) otherwise

    int index() const;  // 0..11
    friend auto operator<=>(const Monomial3&, const Monomial3&) = default;
};

std::string to_string(const Monomial3& m);

struct Term {
    std::int64_t coeff;
    Monomial3 mono;

    friend bool operator==(const Term&, const Term&) = default;
};

enum class WordSide { none, w1, w2 };

// Terms sorted by monomial index, like terms combined, zeros dropped.
struct Word {
    std::vector<Term> terms;
    WordSide side = WordSide::none;

    bool empty() const { return terms.empty(); }
    friend bool operator==(const Word& a, const Word& b) { return a.terms == b.terms; }
};

// Grammar: term (('+'|'-') term)*, term = [int ['*']] product,
// product = v*(v*v) | (v*v)*v with x, y, z each used once; "0" is empty.
// Throws InputError on malformed text.
Word parse_word(std::string_view text, WordSide side = WordSide::none);
std::string to_string(const Word& w);

// Sign and representative of a monomial modulo (anti)commutativity. Under
// comm/anticomm every monomial is +-(a*b)*c with a < b.
std::pair<int, Monomial3> canonical(const Monomial3& m, WordMode mode);
Word canonicalize(const Word& w, WordMode mode);

// The four pairs of the set T.
std::array<std::array<Monomial3, 2>, 4> t_set();

Report check_T_coverage(const Word& w1, const Word& w2, WordMode mode);

// Swap y and z, canonicalize under the mode, compare with sign * w.
// The mode defaults to comm for sign +1 and anticomm for -1.
Report check_w2_symmetry(const Word& w2, int sign);
Report check_w2_symmetry(const Word& w2, int sign, WordMode mode);

enum class Cond4Outcome { equal, unequal_at_depth, undetermined };
std::string_view to_string(Cond4Outcome o);

struct Cond4Result {
    Cond4Outcome outcome;
    std::array<Cond4Outcome, 4> pairs;
    Report report;
};

// Compares the two Axiom-2 expansions of ((x*y)*z)*t, t*((x*y)*z),
// (z*(x*y))*t and t*(z*(x*y)) by bounded rewriting with the words as rules.
// Throws InputError for depth < 1.
Cond4Result expand_condition4(const Word& w1, const Word& w2, int depth = 3, WordMode mode = WordMode::plain);

// (y*z)*x = w1 and x*(y*z) = w2 on every basis triple; an empty word skips its side.
Report validate_word_on_algebra(const Algebra& a, const Word& w1, const Word& w2);

struct WordSuite {
    Word w1;
    Word w2;
    WordMode mode;
};
// Words for lie, leibniz, associative, commutative and alternative.
// Throws UnsupportedError otherwise.
WordSuite canonical_words(Category c);

}  // namespace actorkit
