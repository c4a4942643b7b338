#pragma once

// Test-only oracles. These deliberately avoid the library's counting /
// ranking machinery so acceptance checks never compare an algorithm with
// itself: enumeration is breadth-first generation over live prefixes,
// representability is a plain DP table.

#include <cstddef>
#include <span>
#include <vector>

#include "ans/automaton.hpp"

namespace ans::testing {

/// First `count` accepted words in radix order by breadth-first prefix
/// generation (letters expanded in alphabet order, dead prefixes pruned
/// via co-reachability of the current state set).
std::vector<Word> oracle_enumerate(const Automaton& a, std::size_t count);

/// All accepted words of length exactly `len`, lexicographic order.
std::vector<Word> oracle_words_of_length(const Automaton& a, std::size_t len);

/// table[n] = can n be written as a nonnegative integer combination of cs.
std::vector<bool> oracle_representable(std::span<const unsigned long> cs,
                                       std::size_t bound);

}  // namespace ans::testing
