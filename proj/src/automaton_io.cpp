#include "ans/automaton_io.hpp"

#include <fstream>
#include <map>
#include <sstream>

#include "ans/errors.hpp"

namespace ans {

namespace {

bool is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

/// Strips comments: whole-line '#' comments and tails at a standalone '#'.
std::string strip_comment(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() && is_blank(line[i])) ++i;
  if (i < line.size() && line[i] == '#') return "";
  for (std::size_t j = i; j < line.size(); ++j) {
    if (line[j] != '#') continue;
    bool blank_before = j == 0 || is_blank(line[j - 1]);
    bool blank_after = j + 1 == line.size() || is_blank(line[j + 1]);
    if (blank_before && blank_after) return line.substr(0, j);
  }
  return line;
}

std::vector<std::string> tokenize(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) tokens.push_back(tok);
  return tokens;
}

}  // namespace

Automaton parse_automaton(std::istream& in) {
  std::vector<std::string> symbols;
  int arity = 1;
  bool saw_alphabet = false, saw_arity = false;

  struct Trans {
    std::string from, letter, to;
    int line;
  };
  std::vector<std::string> state_names;
  std::map<std::string, State> state_index;
  std::vector<std::pair<std::string, int>> initial_names, accepting_names;
  std::vector<Trans> raw_trans;

  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto tokens = tokenize(strip_comment(line));
    if (tokens.empty()) continue;
    const std::string& kw = tokens[0];
    if (kw == "alphabet") {
      if (saw_alphabet) throw ParseError("duplicate alphabet line", lineno);
      if (tokens.size() < 2) throw ParseError("alphabet needs at least one symbol", lineno);
      symbols.assign(tokens.begin() + 1, tokens.end());
      saw_alphabet = true;
    } else if (kw == "arity") {
      if (saw_arity) throw ParseError("duplicate arity line", lineno);
      if (tokens.size() != 2) throw ParseError("arity takes one number", lineno);
      try {
        arity = std::stoi(tokens[1]);
      } catch (const std::exception&) {
        throw ParseError("bad arity: " + tokens[1], lineno);
      }
      if (arity < 1) throw ParseError("arity must be >= 1", lineno);
      saw_arity = true;
    } else if (kw == "states") {
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        if (state_index.count(tokens[i]))
          throw ParseError("duplicate state name: " + tokens[i], lineno);
        state_index[tokens[i]] = static_cast<State>(state_names.size());
        state_names.push_back(tokens[i]);
      }
    } else if (kw == "initial") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        initial_names.emplace_back(tokens[i], lineno);
    } else if (kw == "accepting") {
      for (std::size_t i = 1; i < tokens.size(); ++i)
        accepting_names.emplace_back(tokens[i], lineno);
    } else if (kw == "trans") {
      if (tokens.size() != 4)
        throw ParseError("trans takes: from-state letter to-state", lineno);
      raw_trans.push_back({tokens[1], tokens[2], tokens[3], lineno});
    } else {
      throw ParseError("unknown keyword: " + kw, lineno);
    }
  }

  if (!saw_alphabet) throw ParseError("missing alphabet line");
  Alphabet alphabet;
  try {
    alphabet = Alphabet(symbols, arity);
  } catch (const InvalidInput& e) {
    throw ParseError(e.what());
  }

  Automaton a(alphabet);
  for (const auto& name : state_names) {
    (void)name;
    a.add_state(false);
  }
  auto lookup = [&](const std::string& name, int at_line) {
    auto it = state_index.find(name);
    if (it == state_index.end())
      throw ParseError("unknown state: " + name, at_line);
    return it->second;
  };
  for (const auto& [name, at_line] : initial_names) a.set_initial(lookup(name, at_line));
  for (const auto& [name, at_line] : accepting_names)
    a.set_accepting(lookup(name, at_line));
  for (const auto& t : raw_trans) {
    auto letter = alphabet.parse_letter(t.letter);
    if (!letter) throw ParseError("unknown letter: " + t.letter, t.line);
    a.add_transition(lookup(t.from, t.line), *letter, lookup(t.to, t.line));
  }
  a.refresh_deterministic();
  return a;
}

Automaton parse_automaton(const std::string& text) {
  std::istringstream ss(text);
  return parse_automaton(ss);
}

Automaton load_automaton(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_automaton(in);
}

std::string serialize_automaton(const Automaton& a) {
  std::ostringstream out;
  out << "alphabet";
  for (const auto& s : a.alphabet().symbols()) out << ' ' << s;
  out << "\narity " << a.alphabet().arity() << "\nstates";
  for (State q = 0; q < a.num_states(); ++q) out << " q" << q;
  out << "\ninitial";
  for (State q : a.initial()) out << " q" << q;
  out << "\naccepting";
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) out << " q" << q;
  out << '\n';
  for (State q = 0; q < a.num_states(); ++q)
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts)
        out << "trans q" << q << ' ' << a.alphabet().letter_name(l) << " q" << t << '\n';
  return out.str();
}

void save_automaton(const Automaton& a, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_automaton(a);
}

std::string canonical_text(const Automaton& a) {
  return serialize_automaton(canonicalize(a));
}

}  // namespace ans
