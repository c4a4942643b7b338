#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <mutex>
#include <vector>

#include "ans/automaton.hpp"

namespace ans {

/// Exact path counting on a deterministic automaton. count(q, m) is the
/// number of length-m words accepted from state q; shorter_total(m) is the
/// number of accepted words of length < m from the initial state. Counts
/// grow exponentially, so everything is arbitrary precision. The table
/// extends lazily; a filled entry never changes, and fills are serialized
/// behind a mutex so readers on several threads see a pure memo.
class WordCounter {
 public:
  /// Keeps a reference to `dfa`; the automaton must outlive the counter
  /// and be deterministic (missing transitions count as a dead end).
  explicit WordCounter(const Automaton& dfa);

  mpz_class count(State q, std::size_t len) const;
  mpz_class shorter_total(std::size_t len) const;

  /// Smallest m with shorter_total(m) <= n < shorter_total(m+1), i.e. the
  /// length of the (n+1)-th accepted word. Diverges if fewer than n+1
  /// words exist; callers guard with an infinite-language check.
  std::size_t length_of_rank(const mpz_class& n) const;

 private:
  void extend(std::size_t len) const;

  const Automaton& dfa_;
  mutable std::mutex mutex_;
  mutable std::vector<std::vector<mpz_class>> table_;  // table_[m][q]
  mutable std::vector<mpz_class> cumulative_;          // cumulative_[m]
};

/// u_q(m): number of length-m words accepted from state q of a
/// deterministic automaton. Throws InvalidInput for unknown states or
/// nondeterministic input.
mpz_class count_words(const Automaton& a, State q, std::size_t len);

}  // namespace ans
