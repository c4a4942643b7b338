#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ans {

/// A letter of an alphabet, encoded as a radix-(|base|+1) number with one
/// digit per track. Digit 0 is the pad symbol '#', digit k is base symbol
/// k-1, and track 0 is the most significant digit. Code 0 would be the
/// all-pad tuple, which is not a letter; valid codes are 1..letter_count().
using Letter = std::uint32_t;

/// Index of a base symbol inside an Alphabet; kPad marks the pad '#'.
using SymbolIdx = int;
inline constexpr SymbolIdx kPad = -1;

/// A word is a sequence of letters of some alphabet.
using Word = std::vector<Letter>;

/// A finite totally ordered alphabet of named symbols, together with an
/// arity d. For d == 1 the letters are exactly the base symbols, in the
/// declared order. For d > 1 the letters are all d-tuples over
/// base ∪ {'#'} except the all-'#' tuple; tuples compare lexicographically
/// by track with '#' before every base symbol. The declared symbol order
/// is the total order used everywhere (radix order, serialization).
class Alphabet {
 public:
  Alphabet() = default;
  /// Throws InvalidInput if symbols are empty, contain duplicates or "#",
  /// or arity < 1.
  Alphabet(std::vector<std::string> symbols, int arity = 1);

  int arity() const { return arity_; }
  std::size_t base_size() const { return base_.size(); }
  const std::vector<std::string>& symbols() const { return base_; }

  /// Number of letters: (|base|+1)^d - 1, which equals |base| when d == 1.
  std::size_t letter_count() const { return letter_count_; }

  Letter first_letter() const { return 1; }
  bool is_letter(Letter l) const { return l >= 1 && l <= letter_count_; }

  /// Digit of `l` on `track` (0-based): kPad or a base symbol index.
  SymbolIdx track(Letter l, int track) const;

  /// All per-track digits of `l`.
  std::vector<SymbolIdx> digits(Letter l) const;

  /// Builds a letter from per-track digits (kPad allowed, not all-pad).
  Letter make_letter(std::span<const SymbolIdx> digits) const;

  /// Arity-1 convenience: the letter of base symbol `sym`.
  Letter letter_of(SymbolIdx sym) const { return static_cast<Letter>(sym) + 1; }
  SymbolIdx symbol_of(Letter l) const { return static_cast<SymbolIdx>(l) - 1; }

  std::optional<SymbolIdx> find_symbol(const std::string& name) const;

  /// "a" for arity 1, "a|#|b" for tuples.
  std::string letter_name(Letter l) const;
  std::optional<Letter> parse_letter(const std::string& name) const;

  /// The arity-1 alphabet with the same base symbols.
  Alphabet base_alphabet() const { return Alphabet(base_, 1); }
  /// Same base symbols, different arity.
  Alphabet with_arity(int arity) const { return Alphabet(base_, arity); }

  bool operator==(const Alphabet& other) const = default;

 private:
  std::vector<std::string> base_;
  int arity_ = 1;
  std::size_t letter_count_ = 0;
};

}  // namespace ans
