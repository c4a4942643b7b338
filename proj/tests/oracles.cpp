#include "oracles.hpp"

#include <deque>
#include <set>

namespace ans::testing {

namespace {

std::vector<bool> live_states(const Automaton& a) {
  std::vector<std::vector<State>> rev(static_cast<std::size_t>(a.num_states()));
  for (State q = 0; q < a.num_states(); ++q)
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts) rev[static_cast<std::size_t>(t)].push_back(q);
  std::vector<bool> live(static_cast<std::size_t>(a.num_states()), false);
  std::deque<State> queue;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) {
      live[static_cast<std::size_t>(q)] = true;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : rev[static_cast<std::size_t>(q)])
      if (!live[static_cast<std::size_t>(p)]) {
        live[static_cast<std::size_t>(p)] = true;
        queue.push_back(p);
      }
  }
  return live;
}

}  // namespace

std::vector<Word> oracle_enumerate(const Automaton& a, std::size_t count) {
  std::vector<Word> out;
  if (count == 0 || a.num_states() == 0) return out;
  std::vector<bool> live = live_states(a);

  using Node = std::pair<std::set<State>, Word>;
  std::deque<Node> queue;
  std::set<State> start;
  for (State q : a.initial())
    if (live[static_cast<std::size_t>(q)]) start.insert(q);
  if (start.empty()) return out;
  queue.push_back({start, {}});

  while (!queue.empty() && out.size() < count) {
    auto [states, word] = queue.front();
    queue.pop_front();
    for (State q : states)
      if (a.is_accepting(q)) {
        out.push_back(word);
        break;
      }
    for (Letter l = 1; l <= a.alphabet().letter_count(); ++l) {
      std::set<State> next;
      for (State q : states) {
        const auto* tg = a.targets(q, l);
        if (!tg) continue;
        for (State t : *tg)
          if (live[static_cast<std::size_t>(t)]) next.insert(t);
      }
      if (next.empty()) continue;
      Word w = word;
      w.push_back(l);
      queue.push_back({std::move(next), std::move(w)});
    }
  }
  return out;
}

std::vector<Word> oracle_words_of_length(const Automaton& a, std::size_t len) {
  std::vector<Word> out;
  Word prefix;
  auto dfs = [&](auto&& self, const std::set<State>& states, std::size_t rest) -> void {
    if (rest == 0) {
      for (State q : states)
        if (a.is_accepting(q)) {
          out.push_back(prefix);
          return;
        }
      return;
    }
    for (Letter l = 1; l <= a.alphabet().letter_count(); ++l) {
      std::set<State> next;
      for (State q : states) {
        const auto* tg = a.targets(q, l);
        if (tg) next.insert(tg->begin(), tg->end());
      }
      if (next.empty()) continue;
      prefix.push_back(l);
      self(self, next, rest - 1);
      prefix.pop_back();
    }
  };
  std::set<State> start(a.initial().begin(), a.initial().end());
  if (!start.empty()) dfs(dfs, start, len);
  return out;
}

std::vector<bool> oracle_representable(std::span<const unsigned long> cs,
                                       std::size_t bound) {
  std::vector<bool> table(bound + 1, false);
  table[0] = true;
  for (std::size_t n = 1; n <= bound; ++n)
    for (unsigned long c : cs)
      if (c > 0 && c <= n && table[n - c]) {
        table[n] = true;
        break;
      }
  return table;
}

}  // namespace ans::testing
