#pragma once

#include <optional>
#include <vector>

#include "ans/ans.hpp"
#include "ans/automaton.hpp"

namespace ans {

/// Unpadded track contents: one symbol sequence per track.
using TrackWords = std::vector<std::vector<SymbolIdx>>;

/// Right-pads every track with '#' to the longest length and convolves
/// them into one word over `tuple_alphabet` (whose arity must match).
Word pad(const Alphabet& tuple_alphabet, const TrackWords& tracks);

/// Inverse of pad. Throws InvalidInput when the word is ill-padded (a
/// track resumes after '#').
TrackWords unpad(const Alphabet& tuple_alphabet, const Word& w);

/// DFA of all well-padded words: on each track, once '#' appears it
/// persists to the end. (The all-'#' letter is not in the alphabet.)
Automaton well_padded_automaton(const Alphabet& tuple_alphabet);

/// True iff every accepted word is well-padded.
bool validate_padded(const Automaton& a);

/// { (w_1,...,w_d)^# : w_i ∈ L(track_i) } for arity-1 automata over a
/// shared base alphabet.
Automaton padded_product(const std::vector<Automaton>& tracks);

/// A relation on d-tuples of words, stored as an acceptor of the padded
/// convolution. Construction validates the well-padded invariant.
class PaddedRelation {
 public:
  explicit PaddedRelation(Automaton automaton);

  const Automaton& automaton() const { return aut_; }
  const Alphabet& alphabet() const { return aut_.alphabet(); }
  int arity() const { return aut_.alphabet().arity(); }

  bool accepts_tuple(const TrackWords& tracks) const;

 private:
  Automaton aut_;
};

/// Inserts a fresh track at position `at` (0-based, `at` == arity appends)
/// ranging over all of Σ* or, when given, over L(constrain) (arity 1).
PaddedRelation cylindrify(const PaddedRelation& rel, int at,
                          const std::optional<Automaton>& constrain = std::nullopt);

/// Drops a track and repairs the padding: letters that lose their last
/// non-'#' component vanish, which on well-padded inputs only happens in
/// suffixes. Requires arity >= 2.
PaddedRelation project(const PaddedRelation& rel, int drop);

/// Reorders tracks: target track i carries source track perm[i].
PaddedRelation permute_tracks(const PaddedRelation& rel, const std::vector<int>& perm);

/// { (x,z)^# : ∃y (x,y) ∈ r1 and (y,z) ∈ r2 } for arity-2 relations.
PaddedRelation compose(const PaddedRelation& r1, const PaddedRelation& r2);

/// { (w,w)^# : w ∈ L }.
PaddedRelation identity_relation(const Ans& s);

/// { (x,y)^# : x,y ∈ L, x <= y in radix order }, i.e. val(x) <= val(y).
PaddedRelation radix_leq(const Ans& s);

/// radix_leq minus the identity.
PaddedRelation strict_less(const Ans& s);

/// { (rep(n), rep(n+1))^# : n ∈ ℕ }, derived as < minus (< ∘ <).
PaddedRelation successor(const Ans& s);

/// { (rep(n), rep(n+k))^# : n ∈ ℕ }; k-fold composition of the successor.
PaddedRelation shift_k(const Ans& s, unsigned k);

/// Embeds an arity-2 relation into width `d`: tracks (ta, tb) carry the
/// pair (in that role order), the rest range over all of Σ*.
PaddedRelation embed_pair(const PaddedRelation& pair_rel, int d, int ta, int tb);

}  // namespace ans
