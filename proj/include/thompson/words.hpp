#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "thompson/plmap.hpp"

namespace thompson {

/// One generator letter with a nonzero exponent.  Bases are the standard
/// generators x_n of PL2([0,1]) plus the two shortcuts a = x0^2 and
/// b = x1 x2^-1.
struct Letter {
  enum class Base { X, A, B };

  Base base = Base::X;
  long index = 0;  // the n of x_n; unused for a, b
  long exp = 1;    // != 0

  friend bool operator==(const Letter& l, const Letter& r) = default;
};

/// A word over the generators.  Letters apply left to right, matching the
/// right-action convention of PLMap: "x0 x1" means x0 first, then x1.
struct Word {
  std::vector<Letter> letters;

  friend bool operator==(const Word& u, const Word& v) = default;
  std::string str() const;
};

/// Grammar: word := letter*; letter := base ("^" signed-int)?;
/// base := "x" natural | "a" | "b"; whitespace separates letters; a
/// missing exponent means 1 and exponent 0 drops the letter.
/// Throws SyntaxError with the offending position.
Word parse_word(std::string_view text);

/// Reversed word with negated exponents; evaluates to the inverse map.
Word inverse(const Word& w);

/// Concatenation (the group product in right-action order).
Word operator*(const Word& u, const Word& v);

/// The exact map of x_n: x0 and x1 from their breakpoint tables, and
/// x_n = x0^{-n+1} x1 x0^{n-1} for n >= 2.
PLMap generator_map(long n);

/// a = x0^2.
PLMap a_map();

/// b = x1 x2^-1 (equivalently x1 x0^-1 x1^-1 x0).
PLMap b_map();

/// a^-k b a^k, the generator of the k-th coordinate subgroup.
PLMap basis_conjugate_map(long k);

PLMap eval_word(const Word& w);

bool is_trivial(const Word& w);

}  // namespace thompson
