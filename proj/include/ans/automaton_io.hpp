#pragma once

#include <iosfwd>
#include <string>

#include "ans/automaton.hpp"

namespace ans {

/// Line-based UTF-8 automaton format:
///
///   alphabet a b          # base symbols in increasing order
///   arity 1               # tuple width; letters for arity k>1 written a|#|b
///   states q0 q1
///   initial q0
///   accepting q1
///   trans q0 a q1
///
/// Lines whose first non-blank character is '#' are comments, as is any
/// line tail starting at a '#' that is surrounded by whitespace (a '#'
/// inside a letter like `#|a` is never followed by whitespace, so letters
/// survive). Parse errors carry 1-based line numbers.
Automaton parse_automaton(std::istream& in);
Automaton parse_automaton(const std::string& text);
Automaton load_automaton(const std::string& path);

std::string serialize_automaton(const Automaton& a);
void save_automaton(const Automaton& a, const std::string& path);

/// serialize_automaton(minimize(determinize(a))): equal languages give
/// byte-identical text.
std::string canonical_text(const Automaton& a);

}  // namespace ans
