#pragma once

#include <map>
#include <span>
#include <vector>

#include "ans/alphabet.hpp"

namespace ans {

using State = int;

/// A finite automaton over an Alphabet. States are 0-based indices; an NFA
/// may have several initial states and multiple targets per (state, letter).
/// The `deterministic` flag asserts a single initial state and at most one
/// target per (state, letter); transitions may still be partial (missing
/// entries are a dead end). Instances are treated as immutable once built,
/// so they are safe to share across threads.
class Automaton {
 public:
  Automaton() = default;
  explicit Automaton(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}

  const Alphabet& alphabet() const { return alphabet_; }
  int num_states() const { return static_cast<int>(accepting_.size()); }
  bool deterministic() const { return deterministic_; }

  State add_state(bool accepting = false);
  void set_initial(State q);
  void set_accepting(State q, bool value = true);
  void add_transition(State from, Letter l, State to);
  /// Recomputes the deterministic flag from the transition structure.
  void refresh_deterministic();

  const std::vector<State>& initial() const { return initial_; }
  bool is_accepting(State q) const { return accepting_[static_cast<std::size_t>(q)]; }
  const std::map<Letter, std::vector<State>>& post(State q) const {
    return trans_[static_cast<std::size_t>(q)];
  }
  const std::vector<State>* targets(State q, Letter l) const;
  /// Unique target for deterministic automata; -1 if undefined.
  State next(State q, Letter l) const;

  std::size_t num_transitions() const;
  bool accepts(std::span<const Letter> word) const;

  bool operator==(const Automaton& other) const = default;

 private:
  Alphabet alphabet_;
  std::vector<State> initial_;
  std::vector<bool> accepting_;
  std::vector<std::map<Letter, std::vector<State>>> trans_;
  bool deterministic_ = false;
};

enum class BoolOp { kUnion, kIntersect, kComplement, kDifference };

/// Subset construction. Result is a complete DFA with the same language.
Automaton determinize(const Automaton& a);

/// Minimal complete DFA with canonical state numbering (breadth-first
/// discovery order following the letter order), so two automata have equal
/// languages iff their minimizations serialize identically.
/// Throws InvalidInput if `a` is not deterministic.
Automaton minimize(const Automaton& a);

/// minimize(determinize(a)) — the canonical form used for equality tests.
Automaton canonicalize(const Automaton& a);

Automaton complement(const Automaton& a);
Automaton intersect(const Automaton& a, const Automaton& b);
Automaton unite(const Automaton& a, const Automaton& b);
Automaton difference(const Automaton& a, const Automaton& b);
/// Dispatcher over the four boolean operations; `b` is ignored for
/// complement. Throws InvalidInput on alphabet mismatch.
Automaton boolean(BoolOp op, const Automaton& a, const Automaton* b = nullptr);

bool is_empty(const Automaton& a);
bool equivalent(const Automaton& a, const Automaton& b);

/// Restriction to states that are both reachable and co-reachable.
Automaton trim(const Automaton& a);
/// True iff some cycle survives trimming, i.e. the language is infinite.
bool has_live_cycle(const Automaton& a);

/// The first `count` accepted words in radix order (shorter first, then
/// lexicographically by the letter order); fewer if the language is smaller.
std::vector<Word> enumerate_radix(const Automaton& a, std::size_t count);

// Small constructions used to assemble languages.
Automaton empty_language(const Alphabet& alphabet);
Automaton universal_language(const Alphabet& alphabet);
Automaton word_automaton(const Alphabet& alphabet, const Word& w);
Automaton word_set_automaton(const Alphabet& alphabet, const std::vector<Word>& ws);
Automaton concat(const Automaton& a, const Automaton& b);
Automaton star(const Automaton& a);

}  // namespace ans
