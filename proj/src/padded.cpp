#include "ans/padded.hpp"

#include <algorithm>
#include <array>
#include <deque>
#include <map>
#include <tuple>

#include "ans/errors.hpp"

namespace ans {

Word pad(const Alphabet& tuple_alphabet, const TrackWords& tracks) {
  const int d = tuple_alphabet.arity();
  if (static_cast<int>(tracks.size()) != d)
    throw InvalidInput("track count does not match alphabet arity");
  std::size_t m = 0;
  for (const auto& t : tracks) m = std::max(m, t.size());
  Word out;
  out.reserve(m);
  std::vector<SymbolIdx> digits(static_cast<std::size_t>(d));
  for (std::size_t i = 0; i < m; ++i) {
    for (int t = 0; t < d; ++t)
      digits[static_cast<std::size_t>(t)] =
          i < tracks[static_cast<std::size_t>(t)].size()
              ? tracks[static_cast<std::size_t>(t)][i]
              : kPad;
    out.push_back(tuple_alphabet.make_letter(digits));
  }
  return out;
}

TrackWords unpad(const Alphabet& tuple_alphabet, const Word& w) {
  const int d = tuple_alphabet.arity();
  TrackWords tracks(static_cast<std::size_t>(d));
  std::vector<bool> ended(static_cast<std::size_t>(d), false);
  for (Letter l : w) {
    for (int t = 0; t < d; ++t) {
      SymbolIdx s = tuple_alphabet.track(l, t);
      if (s == kPad) {
        ended[static_cast<std::size_t>(t)] = true;
      } else {
        if (ended[static_cast<std::size_t>(t)])
          throw InvalidInput("ill-padded word: track resumes after '#'");
        tracks[static_cast<std::size_t>(t)].push_back(s);
      }
    }
  }
  return tracks;
}

Automaton well_padded_automaton(const Alphabet& tuple_alphabet) {
  const int d = tuple_alphabet.arity();
  Automaton a(tuple_alphabet);
  // One state per set of finished tracks, reachable subsets only.
  std::map<unsigned, State> index;
  std::deque<unsigned> queue;
  auto intern = [&](unsigned mask) {
    auto it = index.find(mask);
    if (it != index.end()) return it->second;
    State id = a.add_state(true);
    index.emplace(mask, id);
    queue.push_back(mask);
    return id;
  };
  a.set_initial(intern(0));
  while (!queue.empty()) {
    unsigned mask = queue.front();
    queue.pop_front();
    State sid = index.at(mask);
    for (Letter l = 1; l <= tuple_alphabet.letter_count(); ++l) {
      unsigned pads = 0;
      for (int t = 0; t < d; ++t)
        if (tuple_alphabet.track(l, t) == kPad) pads |= 1u << t;
      if ((pads & mask) != mask) continue;  // a finished track resumed
      a.add_transition(sid, l, intern(pads));
    }
  }
  a.refresh_deterministic();
  return a;
}

bool validate_padded(const Automaton& a) {
  return is_empty(difference(a, well_padded_automaton(a.alphabet())));
}

Automaton padded_product(const std::vector<Automaton>& tracks) {
  if (tracks.empty()) throw InvalidInput("padded_product needs at least one track");
  const Alphabet base = tracks.front().alphabet();
  if (base.arity() != 1) throw InvalidInput("padded_product tracks must have arity 1");
  for (const auto& t : tracks)
    if (!(t.alphabet() == base)) throw InvalidInput("alphabet mismatch between tracks");
  const int d = static_cast<int>(tracks.size());
  Alphabet tuple = base.with_arity(d);
  Automaton out(tuple);

  // Per-track state n_t means "track finished" (word consumed, was accepted).
  using Key = std::vector<State>;
  std::map<Key, State> index;
  std::deque<Key> queue;
  auto done_of = [&](int t) { return tracks[static_cast<std::size_t>(t)].num_states(); };
  auto accepting_key = [&](const Key& k) {
    for (int t = 0; t < d; ++t) {
      State q = k[static_cast<std::size_t>(t)];
      if (q != done_of(t) && !tracks[static_cast<std::size_t>(t)].is_accepting(q))
        return false;
    }
    return true;
  };
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    State id = out.add_state(accepting_key(k));
    index.emplace(k, id);
    queue.push_back(k);
    return id;
  };

  // Cross product of the initial sets.
  std::vector<Key> starts{{}};
  for (int t = 0; t < d; ++t) {
    std::vector<Key> next;
    for (const auto& k : starts)
      for (State i : tracks[static_cast<std::size_t>(t)].initial()) {
        Key k2 = k;
        k2.push_back(i);
        next.push_back(std::move(k2));
      }
    starts = std::move(next);
  }
  for (const auto& k : starts) out.set_initial(intern(k));

  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    State sid = index.at(key);
    for (Letter l = 1; l <= tuple.letter_count(); ++l) {
      std::vector<std::vector<State>> moves(static_cast<std::size_t>(d));
      bool dead = false;
      for (int t = 0; t < d && !dead; ++t) {
        const Automaton& ta = tracks[static_cast<std::size_t>(t)];
        State q = key[static_cast<std::size_t>(t)];
        SymbolIdx s = tuple.track(l, t);
        auto& mv = moves[static_cast<std::size_t>(t)];
        if (s == kPad) {
          if (q == done_of(t) || ta.is_accepting(q)) mv.push_back(done_of(t));
        } else {
          if (q != done_of(t))
            if (const auto* tg = ta.targets(q, base.letter_of(s)))
              mv = *tg;
        }
        if (mv.empty()) dead = true;
      }
      if (dead) continue;
      // Cross product of per-track moves.
      std::vector<Key> combos{{}};
      for (int t = 0; t < d; ++t) {
        std::vector<Key> next;
        for (const auto& c : combos)
          for (State m : moves[static_cast<std::size_t>(t)]) {
            Key c2 = c;
            c2.push_back(m);
            next.push_back(std::move(c2));
          }
        combos = std::move(next);
      }
      for (const auto& c : combos) out.add_transition(sid, l, intern(c));
    }
  }
  out.refresh_deterministic();
  return out;
}

PaddedRelation::PaddedRelation(Automaton automaton) : aut_(std::move(automaton)) {
  if (aut_.alphabet().arity() < 1) throw InvalidInput("relation needs arity >= 1");
  if (!validate_padded(aut_))
    throw InvalidInput("relation automaton accepts ill-padded words");
}

bool PaddedRelation::accepts_tuple(const TrackWords& tracks) const {
  Word w = pad(aut_.alphabet(), tracks);
  return aut_.accepts(w);
}

PaddedRelation cylindrify(const PaddedRelation& rel, int at,
                          const std::optional<Automaton>& constrain) {
  const int d = rel.arity();
  if (at < 0 || at > d) throw InvalidInput("cylindrify position out of range");
  const Alphabet base = rel.alphabet().base_alphabet();
  Automaton track = constrain ? *constrain : universal_language(base);
  if (!(track.alphabet() == base))
    throw InvalidInput("cylindrify constraint over a different alphabet");

  const Automaton& R = rel.automaton();
  const Alphabet tuple = base.with_arity(d + 1);
  const State kRelDone = R.num_states();
  const State kTrkDone = track.num_states();
  Automaton out(tuple);

  using Key = std::pair<State, State>;
  std::map<Key, State> index;
  std::deque<Key> queue;
  auto accepting_key = [&](const Key& k) {
    bool ra = k.first == kRelDone || R.is_accepting(k.first);
    bool ta = k.second == kTrkDone || track.is_accepting(k.second);
    return ra && ta;
  };
  auto intern = [&](Key k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    State id = out.add_state(accepting_key(k));
    index.emplace(k, id);
    queue.push_back(k);
    return id;
  };
  for (State r : R.initial())
    for (State t : track.initial()) out.set_initial(intern({r, t}));

  std::vector<SymbolIdx> rest(static_cast<std::size_t>(d));
  while (!queue.empty()) {
    auto [r, t] = queue.front();
    queue.pop_front();
    State sid = index.at({r, t});
    for (Letter l = 1; l <= tuple.letter_count(); ++l) {
      SymbolIdx sigma = tuple.track(l, at);
      bool rest_all_pad = true;
      for (int i = 0, j = 0; i <= d; ++i) {
        if (i == at) continue;
        SymbolIdx s = tuple.track(l, i);
        rest[static_cast<std::size_t>(j++)] = s;
        if (s != kPad) rest_all_pad = false;
      }

      std::vector<State> rel_moves;
      if (rest_all_pad) {
        if (r == kRelDone || R.is_accepting(r)) rel_moves.push_back(kRelDone);
      } else if (r != kRelDone) {
        Letter rl = rel.alphabet().make_letter(rest);
        if (const auto* tg = R.targets(r, rl)) rel_moves = *tg;
      }
      if (rel_moves.empty()) continue;

      std::vector<State> trk_moves;
      if (sigma == kPad) {
        if (t == kTrkDone || track.is_accepting(t)) trk_moves.push_back(kTrkDone);
      } else if (t != kTrkDone) {
        if (const auto* tg = track.targets(t, base.letter_of(sigma))) trk_moves = *tg;
      }
      if (trk_moves.empty()) continue;

      for (State r2 : rel_moves)
        for (State t2 : trk_moves) out.add_transition(sid, l, intern({r2, t2}));
    }
  }
  out.refresh_deterministic();
  return PaddedRelation(out);
}

PaddedRelation project(const PaddedRelation& rel, int drop) {
  const int d = rel.arity();
  if (d < 2) throw InvalidInput("project requires arity >= 2");
  if (drop < 0 || drop >= d) throw InvalidInput("project track out of range");
  const Automaton& R = rel.automaton();
  const Alphabet tuple = rel.alphabet().base_alphabet().with_arity(d - 1);
  Automaton out(tuple);
  for (State q = 0; q < R.num_states(); ++q) out.add_state(R.is_accepting(q));
  for (State q : R.initial()) out.set_initial(q);

  // Letters whose remaining tracks are all '#' become erasing edges; they
  // occur only in suffixes of well-padded words, so closing the accepting
  // set backwards over them is a full ε-elimination here.
  std::vector<std::vector<State>> eps_rev(static_cast<std::size_t>(R.num_states()));
  std::vector<SymbolIdx> reduced(static_cast<std::size_t>(d - 1));
  for (State q = 0; q < R.num_states(); ++q) {
    for (const auto& [l, tgts] : R.post(q)) {
      bool all_pad = true;
      for (int i = 0, j = 0; i < d; ++i) {
        if (i == drop) continue;
        SymbolIdx s = rel.alphabet().track(l, i);
        reduced[static_cast<std::size_t>(j++)] = s;
        if (s != kPad) all_pad = false;
      }
      if (all_pad) {
        for (State t : tgts) eps_rev[static_cast<std::size_t>(t)].push_back(q);
      } else {
        Letter rl = tuple.make_letter(reduced);
        for (State t : tgts) out.add_transition(q, rl, t);
      }
    }
  }
  std::deque<State> queue;
  std::vector<bool> closed(static_cast<std::size_t>(R.num_states()), false);
  for (State q = 0; q < R.num_states(); ++q)
    if (R.is_accepting(q)) {
      closed[static_cast<std::size_t>(q)] = true;
      queue.push_back(q);
    }
  while (!queue.empty()) {
    State q = queue.front();
    queue.pop_front();
    for (State p : eps_rev[static_cast<std::size_t>(q)])
      if (!closed[static_cast<std::size_t>(p)]) {
        closed[static_cast<std::size_t>(p)] = true;
        out.set_accepting(p);
        queue.push_back(p);
      }
  }
  out.refresh_deterministic();
  return PaddedRelation(intersect(out, well_padded_automaton(tuple)));
}

PaddedRelation permute_tracks(const PaddedRelation& rel, const std::vector<int>& perm) {
  const int d = rel.arity();
  if (static_cast<int>(perm.size()) != d) throw InvalidInput("permutation arity mismatch");
  const Automaton& R = rel.automaton();
  Automaton out(rel.alphabet());
  for (State q = 0; q < R.num_states(); ++q) out.add_state(R.is_accepting(q));
  for (State q : R.initial()) out.set_initial(q);
  std::vector<SymbolIdx> digits(static_cast<std::size_t>(d));
  for (State q = 0; q < R.num_states(); ++q)
    for (const auto& [l, tgts] : R.post(q)) {
      for (int i = 0; i < d; ++i)
        digits[static_cast<std::size_t>(i)] =
            rel.alphabet().track(l, perm[static_cast<std::size_t>(i)]);
      Letter nl = rel.alphabet().make_letter(digits);
      for (State t : tgts) out.add_transition(q, nl, t);
    }
  out.refresh_deterministic();
  return PaddedRelation(out);
}

PaddedRelation compose(const PaddedRelation& r1, const PaddedRelation& r2) {
  if (r1.arity() != 2 || r2.arity() != 2)
    throw InvalidInput("compose requires arity-2 relations");
  if (!(r1.alphabet() == r2.alphabet()))
    throw InvalidInput("alphabet mismatch between relations");
  PaddedRelation c1 = cylindrify(r1, 2);  // (x, y, *)
  PaddedRelation c2 = cylindrify(r2, 0);  // (*, y, z)
  PaddedRelation meet(intersect(c1.automaton(), c2.automaton()));
  PaddedRelation proj = project(meet, 1);
  return PaddedRelation(minimize(determinize(proj.automaton())));
}

PaddedRelation identity_relation(const Ans& s) {
  const Automaton& L = s.language();
  const Alphabet base = s.alphabet();
  Alphabet tuple = base.with_arity(2);
  Automaton out(tuple);
  for (State q = 0; q < L.num_states(); ++q) out.add_state(L.is_accepting(q));
  for (State q : L.initial()) out.set_initial(q);
  std::vector<SymbolIdx> digits(2);
  for (State q = 0; q < L.num_states(); ++q)
    for (const auto& [l, tgts] : L.post(q)) {
      digits[0] = digits[1] = base.symbol_of(l);
      for (State t : tgts) out.add_transition(q, tuple.make_letter(digits), t);
    }
  out.refresh_deterministic();
  return PaddedRelation(out);
}

PaddedRelation radix_leq(const Ans& s) {
  const Automaton& L = s.language();
  const Alphabet base = s.alphabet();
  const Alphabet tuple = base.with_arity(2);
  const State kXDone = L.num_states();
  enum Flag { kEq = 0, kLt = 1, kGt = 2 };

  Automaton out(tuple);
  using Key = std::array<State, 3>;  // x state (or done), y state, flag
  std::map<Key, State> index;
  std::deque<Key> queue;
  auto accepting_key = [&](const Key& k) {
    if (!L.is_accepting(k[1])) return false;
    if (k[0] == kXDone) return true;  // |x| < |y|
    return L.is_accepting(k[0]) && k[2] != kGt;
  };
  auto intern = [&](const Key& k) {
    auto it = index.find(k);
    if (it != index.end()) return it->second;
    State id = out.add_state(accepting_key(k));
    index.emplace(k, id);
    queue.push_back(k);
    return id;
  };
  for (State xi : L.initial())
    for (State yi : L.initial()) out.set_initial(intern({xi, yi, kEq}));

  while (!queue.empty()) {
    Key key = queue.front();
    queue.pop_front();
    State sid = index.at(key);
    auto [x, y, f] = std::tuple{key[0], key[1], key[2]};
    for (Letter l = 1; l <= tuple.letter_count(); ++l) {
      SymbolIdx sx = tuple.track(l, 0);
      SymbolIdx sy = tuple.track(l, 1);
      if (sy == kPad) continue;  // y ended first: |x| > |y|, never x <= y
      State y2 = L.next(y, base.letter_of(sy));
      if (y2 < 0) continue;
      if (sx == kPad) {
        if (x == kXDone || L.is_accepting(x))
          out.add_transition(sid, l, intern({kXDone, y2, f}));
      } else {
        if (x == kXDone) continue;
        State x2 = L.next(x, base.letter_of(sx));
        if (x2 < 0) continue;
        State f2 = f;
        if (f == kEq && sx != sy) f2 = sx < sy ? kLt : kGt;
        out.add_transition(sid, l, intern({x2, y2, f2}));
      }
    }
  }
  out.refresh_deterministic();
  return PaddedRelation(out);
}

PaddedRelation strict_less(const Ans& s) {
  Automaton lt = difference(radix_leq(s).automaton(), identity_relation(s).automaton());
  return PaddedRelation(minimize(determinize(lt)));
}

PaddedRelation successor(const Ans& s) {
  PaddedRelation lt = strict_less(s);
  PaddedRelation skip = compose(lt, lt);
  Automaton succ = difference(lt.automaton(), skip.automaton());
  return PaddedRelation(minimize(determinize(succ)));
}

PaddedRelation shift_k(const Ans& s, unsigned k) {
  if (k == 0) return identity_relation(s);
  PaddedRelation succ = successor(s);
  PaddedRelation acc = succ;
  for (unsigned i = 1; i < k; ++i) acc = compose(acc, succ);
  return acc;
}

PaddedRelation embed_pair(const PaddedRelation& pair_rel, int d, int ta, int tb) {
  if (pair_rel.arity() != 2) throw InvalidInput("embed_pair needs an arity-2 relation");
  if (ta == tb || ta < 0 || tb < 0 || ta >= d || tb >= d)
    throw InvalidInput("bad track indices for embed_pair");
  PaddedRelation rel = ta < tb ? pair_rel : permute_tracks(pair_rel, {1, 0});
  int lo = std::min(ta, tb), hi = std::max(ta, tb);
  std::vector<int> placed{lo, hi};
  for (int t = 0; t < d; ++t) {
    if (t == lo || t == hi) continue;
    int pos = static_cast<int>(
        std::lower_bound(placed.begin(), placed.end(), t) - placed.begin());
    rel = cylindrify(rel, pos);
    placed.insert(std::lower_bound(placed.begin(), placed.end(), t), t);
  }
  return rel;
}

}  // namespace ans
