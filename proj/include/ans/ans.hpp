#pragma once

#include <gmpxx.h>

#include <memory>
#include <vector>

#include "ans/automaton.hpp"
#include "ans/counting.hpp"

namespace ans {

/// Eventually periodic behavior of the per-state word counts modulo r.
/// W(m) collects u_q(m) mod r for every state plus V(m) mod r (number of
/// accepted words shorter than m); the table stores W(m) for m < preperiod
/// + period and satisfies W(m + period) = W(m) for all m >= preperiod.
struct ModClassTable {
  unsigned modulus = 1;
  std::size_t preperiod = 0;  // P
  std::size_t period = 1;     // p
  // rows[m] = (u_q(m) mod r ... , V(m) mod r), for m < preperiod + period.
  std::vector<std::vector<unsigned>> rows;

  std::size_t class_count() const { return preperiod + period; }
  unsigned count_mod(std::size_t cls, State q) const {
    return rows[cls][static_cast<std::size_t>(q)];
  }
  unsigned shorter_mod(std::size_t cls) const { return rows[cls].back(); }
};

/// An abstract numeration system: an infinite regular language L over an
/// ordered alphabet, with rank maps in both directions. rep(n) is the
/// (n+1)-th word of L in radix order and val is its inverse. Immutable
/// after construction except for the internal count memo.
class Ans {
 public:
  /// Validates, determinizes and trims `language`. Throws InvalidInput if
  /// the alphabet is not `order` (arity 1) or the language is finite.
  Ans(const Automaton& language, const Alphabet& order);
  explicit Ans(const Automaton& language) : Ans(language, language.alphabet()) {}

  const Alphabet& alphabet() const { return order_; }
  /// The trimmed deterministic automaton for L.
  const Automaton& language() const { return *dfa_; }
  const WordCounter& counter() const { return *counter_; }

  Word rep(const mpz_class& n) const;
  /// Throws InvalidInput when w is not in L.
  mpz_class val(const Word& w) const;
  bool contains(const Word& w) const { return dfa_->accepts(w); }

  ModClassTable mod_class_table(unsigned r) const;

  /// DFA for { rep(r*n + s) : n >= threshold }. r == 0 denotes the
  /// singleton { rep(s) }. Any s is accepted; s >= r is normalized by
  /// raising the threshold, preserving the denoted set exactly.
  Automaton progression_recognizer(unsigned r, unsigned long s,
                                   unsigned long threshold = 0) const;

  /// DFA over the padded pair alphabet accepting
  /// { (rep(m), rep(n))^# : n - m ≡ s (mod r) }, r >= 1, 0 <= s < r.
  Automaton congruence_pair_recognizer(unsigned r, unsigned s) const;

 private:
  Alphabet order_;
  std::shared_ptr<const Automaton> dfa_;
  std::shared_ptr<const WordCounter> counter_;
};

}  // namespace ans
