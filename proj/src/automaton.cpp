#include "ans/automaton.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <queue>
#include <set>

#include "ans/counting.hpp"
#include "ans/errors.hpp"

namespace ans {

State Automaton::add_state(bool accepting) {
  accepting_.push_back(accepting);
  trans_.emplace_back();
  return num_states() - 1;
}

void Automaton::set_initial(State q) {
  if (q < 0 || q >= num_states()) throw InvalidInput("unknown state");
  auto it = std::lower_bound(initial_.begin(), initial_.end(), q);
  if (it == initial_.end() || *it != q) initial_.insert(it, q);
  deterministic_ = false;
}

void Automaton::set_accepting(State q, bool value) {
  if (q < 0 || q >= num_states()) throw InvalidInput("unknown state");
  accepting_[static_cast<std::size_t>(q)] = value;
}

void Automaton::add_transition(State from, Letter l, State to) {
  if (from < 0 || from >= num_states() || to < 0 || to >= num_states())
    throw InvalidInput("unknown state");
  if (!alphabet_.is_letter(l)) throw InvalidInput("letter outside alphabet");
  auto& tgts = trans_[static_cast<std::size_t>(from)][l];
  auto it = std::lower_bound(tgts.begin(), tgts.end(), to);
  if (it == tgts.end() || *it != to) tgts.insert(it, to);
  deterministic_ = false;
}

void Automaton::refresh_deterministic() {
  deterministic_ = initial_.size() == 1;
  for (const auto& post : trans_)
    for (const auto& [l, tgts] : post)
      if (tgts.size() > 1) deterministic_ = false;
}

const std::vector<State>* Automaton::targets(State q, Letter l) const {
  const auto& post = trans_[static_cast<std::size_t>(q)];
  auto it = post.find(l);
  return it == post.end() ? nullptr : &it->second;
}

State Automaton::next(State q, Letter l) const {
  const auto* t = targets(q, l);
  return t && !t->empty() ? t->front() : -1;
}

std::size_t Automaton::num_transitions() const {
  std::size_t n = 0;
  for (const auto& post : trans_)
    for (const auto& [l, tgts] : post) n += tgts.size();
  return n;
}

bool Automaton::accepts(std::span<const Letter> word) const {
  std::set<State> cur(initial_.begin(), initial_.end());
  for (Letter l : word) {
    std::set<State> nxt;
    for (State q : cur) {
      const auto* t = targets(q, l);
      if (t) nxt.insert(t->begin(), t->end());
    }
    cur.swap(nxt);
    if (cur.empty()) return false;
  }
  for (State q : cur)
    if (is_accepting(q)) return true;
  return false;
}

namespace {

void require_same_alphabet(const Automaton& a, const Automaton& b) {
  if (!(a.alphabet() == b.alphabet()))
    throw InvalidInput("alphabet mismatch between automata");
}

std::vector<bool> reachable_states(const Automaton& a) {
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  std::deque<State> queue;
  for (State q : a.initial()) {
    seen[static_cast<std::size_t>(q)] = true;
    queue.push_back(q);
  }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts)
        if (!seen[static_cast<std::size_t>(t)]) {
          seen[static_cast<std::size_t>(t)] = true;
          queue.push_back(t);
        }
  }
  return seen;
}

std::vector<bool> coreachable_states(const Automaton& a) {
  std::vector<std::vector<State>> rev(static_cast<std::size_t>(a.num_states()));
  for (State q = 0; q < a.num_states(); ++q)
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts) rev[static_cast<std::size_t>(t)].push_back(q);
  std::vector<bool> seen(static_cast<std::size_t>(a.num_states()), false);
  std::deque<State> queue;
  for (State q = 0; q < a.num_states(); ++q)
    if (a.is_accepting(q)) {
      seen[static_cast<std::size_t>(q)] = true;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : rev[static_cast<std::size_t>(q)])
      if (!seen[static_cast<std::size_t>(p)]) {
        seen[static_cast<std::size_t>(p)] = true;
        queue.push_back(p);
      }
  }
  return seen;
}

}  // namespace

Automaton determinize(const Automaton& a) {
  using Subset = std::vector<State>;
  Automaton out(a.alphabet());
  std::map<Subset, State> index;
  std::deque<Subset> queue;

  auto intern = [&](const Subset& s) {
    auto it = index.find(s);
    if (it != index.end()) return it->second;
    bool acc = std::any_of(s.begin(), s.end(),
                           [&](State q) { return a.is_accepting(q); });
    State id = out.add_state(acc);
    index.emplace(s, id);
    queue.push_back(s);
    return id;
  };

  Subset start(a.initial().begin(), a.initial().end());
  State start_id = intern(start);
  out.set_initial(start_id);

  const std::size_t nletters = a.alphabet().letter_count();
  while (!queue.empty()) {
    Subset s = queue.front();
    queue.pop_front();
    State sid = index.at(s);
    for (Letter l = 1; l <= nletters; ++l) {
      std::set<State> nxt;
      for (State q : s) {
        const auto* t = a.targets(q, l);
        if (t) nxt.insert(t->begin(), t->end());
      }
      Subset nv(nxt.begin(), nxt.end());
      State tid = intern(nv);
      out.add_transition(sid, l, tid);
    }
  }
  out.refresh_deterministic();
  return out;
}

namespace {

/// Completes a deterministic automaton in place (dead state on demand).
Automaton complete_dfa(const Automaton& a) {
  Automaton out = a;
  const std::size_t nletters = a.alphabet().letter_count();
  State dead = -1;
  bool missing = false;
  for (State q = 0; q < a.num_states() && !missing; ++q)
    for (Letter l = 1; l <= nletters; ++l)
      if (a.next(q, l) < 0) {
        missing = true;
        break;
      }
  if (a.num_states() == 0 || a.initial().empty()) missing = true;
  if (!missing) return out;
  dead = out.add_state(false);
  if (out.initial().empty()) out.set_initial(dead);
  for (State q = 0; q < out.num_states(); ++q)
    for (Letter l = 1; l <= nletters; ++l)
      if (out.next(q, l) < 0) out.add_transition(q, l, dead);
  out.refresh_deterministic();
  return out;
}

}  // namespace

Automaton minimize(const Automaton& a) {
  if (!a.deterministic()) throw InvalidInput("minimize requires a deterministic automaton");
  Automaton d = complete_dfa(a);

  // Restrict to reachable states.
  std::vector<bool> reach = reachable_states(d);
  std::vector<State> remap(static_cast<std::size_t>(d.num_states()), -1);
  Automaton r(d.alphabet());
  for (State q = 0; q < d.num_states(); ++q)
    if (reach[static_cast<std::size_t>(q)])
      remap[static_cast<std::size_t>(q)] = r.add_state(d.is_accepting(q));
  for (State q = 0; q < d.num_states(); ++q) {
    if (!reach[static_cast<std::size_t>(q)]) continue;
    for (const auto& [l, tgts] : d.post(q))
      r.add_transition(remap[static_cast<std::size_t>(q)], l,
                       remap[static_cast<std::size_t>(tgts.front())]);
  }
  r.set_initial(remap[static_cast<std::size_t>(d.initial().front())]);

  // Moore partition refinement on the complete reachable DFA.
  const std::size_t nletters = r.alphabet().letter_count();
  std::vector<int> cls(static_cast<std::size_t>(r.num_states()));
  for (State q = 0; q < r.num_states(); ++q) cls[static_cast<std::size_t>(q)] = r.is_accepting(q) ? 1 : 0;
  std::size_t ncls = 2;
  while (true) {
    std::map<std::vector<int>, int> sig_to_cls;
    std::vector<int> next_cls(static_cast<std::size_t>(r.num_states()));
    for (State q = 0; q < r.num_states(); ++q) {
      std::vector<int> sig;
      sig.reserve(nletters + 1);
      sig.push_back(cls[static_cast<std::size_t>(q)]);
      for (Letter l = 1; l <= nletters; ++l)
        sig.push_back(cls[static_cast<std::size_t>(r.next(q, l))]);
      auto [it, fresh] = sig_to_cls.emplace(std::move(sig), static_cast<int>(sig_to_cls.size()));
      next_cls[static_cast<std::size_t>(q)] = it->second;
    }
    if (sig_to_cls.size() == ncls) {
      cls = next_cls;
      break;
    }
    ncls = sig_to_cls.size();
    cls = next_cls;
  }

  // Quotient, then canonical breadth-first renumbering in letter order.
  int init_cls = cls[static_cast<std::size_t>(r.initial().front())];
  std::map<int, State> order;
  std::vector<int> bfs{init_cls};
  order.emplace(init_cls, 0);
  std::vector<State> rep_of_cls(ncls, -1);
  for (State q = 0; q < r.num_states(); ++q)
    if (rep_of_cls[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] < 0)
      rep_of_cls[static_cast<std::size_t>(cls[static_cast<std::size_t>(q)])] = q;
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    State q = rep_of_cls[static_cast<std::size_t>(bfs[i])];
    for (Letter l = 1; l <= nletters; ++l) {
      int c = cls[static_cast<std::size_t>(r.next(q, l))];
      if (order.emplace(c, static_cast<State>(order.size())).second) bfs.push_back(c);
    }
  }

  Automaton out(r.alphabet());
  for (std::size_t i = 0; i < bfs.size(); ++i)
    out.add_state(r.is_accepting(rep_of_cls[static_cast<std::size_t>(bfs[i])]));
  for (std::size_t i = 0; i < bfs.size(); ++i) {
    State q = rep_of_cls[static_cast<std::size_t>(bfs[i])];
    for (Letter l = 1; l <= nletters; ++l)
      out.add_transition(static_cast<State>(i), l,
                         order.at(cls[static_cast<std::size_t>(r.next(q, l))]));
  }
  out.set_initial(0);
  out.refresh_deterministic();
  return out;
}

Automaton canonicalize(const Automaton& a) {
  return minimize(a.deterministic() ? a : determinize(a));
}

Automaton complement(const Automaton& a) {
  Automaton d = a.deterministic() ? complete_dfa(a) : determinize(a);
  Automaton out = d;
  for (State q = 0; q < out.num_states(); ++q) out.set_accepting(q, !d.is_accepting(q));
  return out;
}

Automaton intersect(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out(a.alphabet());
  std::map<std::pair<State, State>, State> index;
  std::deque<std::pair<State, State>> queue;
  auto intern = [&](State qa, State qb) {
    auto key = std::make_pair(qa, qb);
    auto it = index.find(key);
    if (it != index.end()) return it->second;
    State id = out.add_state(a.is_accepting(qa) && b.is_accepting(qb));
    index.emplace(key, id);
    queue.push_back(key);
    return id;
  };
  for (State qa : a.initial())
    for (State qb : b.initial()) out.set_initial(intern(qa, qb));
  while (!queue.empty()) {
    auto [qa, qb] = queue.front();
    queue.pop_front();
    State sid = index.at({qa, qb});
    for (const auto& [l, ta] : a.post(qa)) {
      const auto* tb = b.targets(qb, l);
      if (!tb) continue;
      for (State x : ta)
        for (State y : *tb) out.add_transition(sid, l, intern(x, y));
    }
  }
  out.refresh_deterministic();
  return out;
}

Automaton unite(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out = a;
  const State offset = a.num_states();
  for (State q = 0; q < b.num_states(); ++q) out.add_state(b.is_accepting(q));
  for (State q = 0; q < b.num_states(); ++q)
    for (const auto& [l, tgts] : b.post(q))
      for (State t : tgts) out.add_transition(q + offset, l, t + offset);
  for (State q : b.initial()) out.set_initial(q + offset);
  out.refresh_deterministic();
  return out;
}

Automaton difference(const Automaton& a, const Automaton& b) {
  return intersect(a, complement(b));
}

Automaton boolean(BoolOp op, const Automaton& a, const Automaton* b) {
  switch (op) {
    case BoolOp::kComplement:
      return complement(a);
    case BoolOp::kUnion:
      if (!b) throw InvalidInput("union needs two automata");
      return unite(a, *b);
    case BoolOp::kIntersect:
      if (!b) throw InvalidInput("intersection needs two automata");
      return intersect(a, *b);
    case BoolOp::kDifference:
      if (!b) throw InvalidInput("difference needs two automata");
      return difference(a, *b);
  }
  throw InvalidInput("unknown boolean operation");
}

bool is_empty(const Automaton& a) {
  std::vector<bool> reach = reachable_states(a);
  for (State q = 0; q < a.num_states(); ++q)
    if (reach[static_cast<std::size_t>(q)] && a.is_accepting(q)) return false;
  return true;
}

bool equivalent(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  return canonicalize(a) == canonicalize(b);
}

Automaton trim(const Automaton& a) {
  std::vector<bool> reach = reachable_states(a);
  std::vector<bool> coreach = coreachable_states(a);
  std::vector<State> remap(static_cast<std::size_t>(a.num_states()), -1);
  Automaton out(a.alphabet());
  for (State q = 0; q < a.num_states(); ++q)
    if (reach[static_cast<std::size_t>(q)] && coreach[static_cast<std::size_t>(q)])
      remap[static_cast<std::size_t>(q)] = out.add_state(a.is_accepting(q));
  for (State q = 0; q < a.num_states(); ++q) {
    if (remap[static_cast<std::size_t>(q)] < 0) continue;
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts)
        if (remap[static_cast<std::size_t>(t)] >= 0)
          out.add_transition(remap[static_cast<std::size_t>(q)], l,
                             remap[static_cast<std::size_t>(t)]);
  }
  for (State q : a.initial())
    if (remap[static_cast<std::size_t>(q)] >= 0)
      out.set_initial(remap[static_cast<std::size_t>(q)]);
  out.refresh_deterministic();
  return out;
}

bool has_live_cycle(const Automaton& a) {
  Automaton t = trim(a);
  // Iterative three-color DFS over all trimmed states.
  std::vector<int> color(static_cast<std::size_t>(t.num_states()), 0);
  for (State root = 0; root < t.num_states(); ++root) {
    if (color[static_cast<std::size_t>(root)] != 0) continue;
    std::vector<std::pair<State, bool>> stack{{root, false}};
    while (!stack.empty()) {
      auto [q, done] = stack.back();
      stack.pop_back();
      if (done) {
        color[static_cast<std::size_t>(q)] = 2;
        continue;
      }
      if (color[static_cast<std::size_t>(q)] == 1) continue;
      color[static_cast<std::size_t>(q)] = 1;
      stack.push_back({q, true});
      for (const auto& [l, tgts] : t.post(q))
        for (State s : tgts) {
          if (color[static_cast<std::size_t>(s)] == 1) return true;
          if (color[static_cast<std::size_t>(s)] == 0) stack.push_back({s, false});
        }
    }
  }
  return false;
}

std::vector<Word> enumerate_radix(const Automaton& a, std::size_t count) {
  std::vector<Word> out;
  if (count == 0) return out;
  Automaton d = trim(a.deterministic() ? a : determinize(a));
  if (d.num_states() == 0) return out;
  WordCounter counter(d);
  const State init = d.initial().front();
  const std::size_t nletters = d.alphabet().letter_count();
  const bool finite = !has_live_cycle(d);
  const std::size_t max_len =
      finite ? static_cast<std::size_t>(d.num_states()) : static_cast<std::size_t>(-1);

  Word prefix;
  // Count-pruned descent: only subtrees containing accepted words are entered.
  auto descend = [&](auto&& self, State q, std::size_t remaining) -> void {
    if (out.size() >= count) return;
    if (remaining == 0) {
      if (d.is_accepting(q)) out.push_back(prefix);
      return;
    }
    for (Letter l = 1; l <= nletters && out.size() < count; ++l) {
      State t = d.next(q, l);
      if (t < 0 || counter.count(t, remaining - 1) == 0) continue;
      prefix.push_back(l);
      self(self, t, remaining - 1);
      prefix.pop_back();
    }
  };

  for (std::size_t m = 0; out.size() < count && m <= max_len; ++m) {
    if (counter.count(init, m) == 0) continue;
    descend(descend, init, m);
  }
  return out;
}

Automaton empty_language(const Alphabet& alphabet) {
  Automaton a(alphabet);
  State q = a.add_state(false);
  a.set_initial(q);
  a.refresh_deterministic();
  return a;
}

Automaton universal_language(const Alphabet& alphabet) {
  Automaton a(alphabet);
  State q = a.add_state(true);
  a.set_initial(q);
  for (Letter l = 1; l <= alphabet.letter_count(); ++l) a.add_transition(q, l, q);
  a.refresh_deterministic();
  return a;
}

Automaton word_automaton(const Alphabet& alphabet, const Word& w) {
  Automaton a(alphabet);
  State cur = a.add_state(w.empty());
  a.set_initial(cur);
  for (std::size_t i = 0; i < w.size(); ++i) {
    State nxt = a.add_state(i + 1 == w.size());
    a.add_transition(cur, w[i], nxt);
    cur = nxt;
  }
  a.refresh_deterministic();
  return a;
}

Automaton word_set_automaton(const Alphabet& alphabet, const std::vector<Word>& ws) {
  // Trie construction; deterministic by design.
  Automaton a(alphabet);
  State root = a.add_state(false);
  a.set_initial(root);
  for (const Word& w : ws) {
    State cur = root;
    for (Letter l : w) {
      State t = a.next(cur, l);
      if (t < 0) {
        t = a.add_state(false);
        a.add_transition(cur, l, t);
      }
      cur = t;
    }
    a.set_accepting(cur);
  }
  a.refresh_deterministic();
  return a;
}

Automaton concat(const Automaton& a, const Automaton& b) {
  require_same_alphabet(a, b);
  Automaton out = a;
  const State offset = a.num_states();
  for (State q = 0; q < b.num_states(); ++q) out.add_state(false);
  for (State q = 0; q < b.num_states(); ++q)
    for (const auto& [l, tgts] : b.post(q))
      for (State t : tgts) out.add_transition(q + offset, l, t + offset);

  bool b_has_eps = false;
  for (State q : b.initial())
    if (b.is_accepting(q)) b_has_eps = true;
  // Accepting states of the result: b's accepting, plus a's when ε ∈ L(b).
  for (State q = 0; q < b.num_states(); ++q)
    if (b.is_accepting(q)) out.set_accepting(q + offset);
  for (State q = 0; q < a.num_states(); ++q)
    out.set_accepting(q, b_has_eps && a.is_accepting(q));

  // Bridge: a's accepting states take b's initial out-transitions.
  for (State f = 0; f < a.num_states(); ++f) {
    if (!a.is_accepting(f)) continue;
    for (State i : b.initial())
      for (const auto& [l, tgts] : b.post(i))
        for (State t : tgts) out.add_transition(f, l, t + offset);
  }

  bool a_has_eps = false;
  for (State q : a.initial())
    if (a.is_accepting(q)) a_has_eps = true;
  if (a_has_eps)
    for (State q : b.initial()) out.set_initial(q + offset);
  out.refresh_deterministic();
  return out;
}

Automaton star(const Automaton& a) {
  Automaton result(a.alphabet());
  for (State q = 0; q < a.num_states(); ++q) result.add_state(a.is_accepting(q));
  State s = result.add_state(true);
  for (State q = 0; q < a.num_states(); ++q)
    for (const auto& [l, tgts] : a.post(q))
      for (State t : tgts) result.add_transition(q, l, t);
  // Restart edges from the fresh start and every accepting state.
  for (State q = 0; q < result.num_states(); ++q) {
    if (q != s && !result.is_accepting(q)) continue;
    for (State i : a.initial())
      for (const auto& [l, tgts] : a.post(i))
        for (State t : tgts) result.add_transition(q, l, t);
  }
  result.set_initial(s);
  result.refresh_deterministic();
  return result;
}

}  // namespace ans
