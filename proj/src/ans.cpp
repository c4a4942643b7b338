#include "ans/ans.hpp"

#include <algorithm>
#include <map>

#include "ans/errors.hpp"
#include "ans/padded.hpp"

namespace ans {

Ans::Ans(const Automaton& language, const Alphabet& order) : order_(order) {
  if (order_.arity() != 1)
    throw InvalidInput("a numeration system needs an arity-1 alphabet");
  if (!(language.alphabet() == order_))
    throw InvalidInput("language alphabet does not match the declared order");
  Automaton d = trim(language.deterministic() ? language : determinize(language));
  if (d.num_states() == 0 || is_empty(d))
    throw InvalidInput("FiniteLanguage: the language is empty");
  if (!has_live_cycle(d))
    throw InvalidInput("FiniteLanguage: a numeration system needs an infinite language");
  dfa_ = std::make_shared<const Automaton>(std::move(d));
  counter_ = std::make_shared<const WordCounter>(*dfa_);
}

Word Ans::rep(const mpz_class& n) const {
  if (n < 0) throw InvalidInput("rep is defined on naturals");
  std::size_t m = counter_->length_of_rank(n);
  mpz_class k = n - counter_->shorter_total(m);
  Word w;
  w.reserve(m);
  State q = dfa_->initial().front();
  for (std::size_t rest = m; rest > 0; --rest) {
    for (Letter l = 1; l <= order_.letter_count(); ++l) {
      State t = dfa_->next(q, l);
      if (t < 0) continue;
      mpz_class c = counter_->count(t, rest - 1);
      if (k < c) {
        w.push_back(l);
        q = t;
        break;
      }
      k -= c;
    }
  }
  return w;
}

mpz_class Ans::val(const Word& w) const {
  if (!dfa_->accepts(w)) throw InvalidInput("word is not in the language");
  mpz_class rank = counter_->shorter_total(w.size());
  State q = dfa_->initial().front();
  for (std::size_t i = 0; i < w.size(); ++i) {
    for (Letter l = 1; l < w[i]; ++l) {
      State t = dfa_->next(q, l);
      if (t >= 0) rank += counter_->count(t, w.size() - i - 1);
    }
    q = dfa_->next(q, w[i]);
  }
  return rank;
}

ModClassTable Ans::mod_class_table(unsigned r) const {
  if (r < 1) throw InvalidInput("modulus must be >= 1");
  const std::size_t nq = static_cast<std::size_t>(dfa_->num_states());

  // W(m) evolves by a fixed map over a finite set, so scanning for the
  // first repeated vector yields the minimal (preperiod, period).
  auto step = [&](const std::vector<unsigned>& row) {
    std::vector<unsigned> next(nq + 1, 0);
    for (State q = 0; q < dfa_->num_states(); ++q) {
      unsigned long sum = 0;
      for (const auto& [l, tgts] : dfa_->post(q))
        sum += row[static_cast<std::size_t>(tgts.front())];
      next[static_cast<std::size_t>(q)] = static_cast<unsigned>(sum % r);
    }
    next[nq] = (row[nq] + row[static_cast<std::size_t>(dfa_->initial().front())]) % r;
    return next;
  };

  std::vector<std::vector<unsigned>> seq;
  std::map<std::vector<unsigned>, std::size_t> seen;
  std::vector<unsigned> row(nq + 1, 0);
  for (State q = 0; q < dfa_->num_states(); ++q)
    row[static_cast<std::size_t>(q)] = (dfa_->is_accepting(q) ? 1u : 0u) % r;
  row[nq] = 0;  // V(0)
  std::size_t preperiod = 0, period = 1;
  while (true) {
    auto it = seen.find(row);
    if (it != seen.end()) {
      preperiod = it->second;
      period = seq.size() - preperiod;
      break;
    }
    seen.emplace(row, seq.size());
    seq.push_back(row);
    row = step(seq.back());
  }

  ModClassTable table;
  table.modulus = r;
  table.preperiod = preperiod;
  table.period = period;
  table.rows.assign(seq.begin(), seq.begin() + static_cast<long>(preperiod + period));

  // Sanity: the detected period really repeats a few times over.
  std::vector<std::vector<unsigned>> ext = seq;
  while (ext.size() < preperiod + 4 * period) ext.push_back(step(ext.back()));
  for (std::size_t m = preperiod; m + period < ext.size(); ++m)
    if (ext[m] != ext[m + period])
      throw InvalidInput("internal error: mod-class table period check failed");
  return table;
}

Automaton Ans::progression_recognizer(unsigned r, unsigned long s,
                                      unsigned long threshold) const {
  const Alphabet& base = order_;
  if (r == 0) {
    // {0*n + s : n >= threshold} is the singleton {s}.
    return minimize(word_automaton(base, rep(s)));
  }
  unsigned srem = static_cast<unsigned>(s % r);
  unsigned long n0 = threshold + (s - srem) / r;

  const ModClassTable table = mod_class_table(r);
  const std::size_t classes = table.class_count();
  const std::size_t pre = table.preperiod;
  const std::size_t nq = static_cast<std::size_t>(dfa_->num_states());

  // NFA states (q, rank mod r, class of the remaining length). The class
  // is guessed at the start; decrement is deterministic except at the
  // preperiod boundary, and a run certifies its guess by reaching class 0
  // exactly at the end of the word.
  Automaton nfa(base);
  auto id = [&](State q, unsigned acc, std::size_t cls) {
    return static_cast<State>((static_cast<std::size_t>(q) * r + acc) * classes + cls);
  };
  for (std::size_t i = 0; i < nq * r * classes; ++i) nfa.add_state(false);
  for (State q = 0; q < dfa_->num_states(); ++q)
    for (unsigned acc = 0; acc < r; ++acc)
      if (dfa_->is_accepting(q) && acc == srem % r)
        nfa.set_accepting(id(q, acc, 0));

  State init = dfa_->initial().front();
  for (std::size_t cls = 0; cls < classes; ++cls)
    nfa.set_initial(id(init, table.shorter_mod(cls) % r, cls));

  auto decrements = [&](std::size_t cls) {
    std::vector<std::size_t> out;
    if (cls >= 1) out.push_back(cls - 1);
    if (cls == pre && table.period > 0) {
      std::size_t wrap = pre + table.period - 1;
      if (wrap != cls - 1 || cls == 0) out.push_back(wrap);
    }
    return out;
  };

  for (State q = 0; q < dfa_->num_states(); ++q) {
    for (const auto& [l, tgts] : dfa_->post(q)) {
      State t = tgts.front();
      for (std::size_t cls = 0; cls < classes; ++cls) {
        for (std::size_t cls2 : decrements(cls)) {
          // Rank gained by picking `l` here: words through smaller letters.
          unsigned gain = 0;
          for (Letter smaller = 1; smaller < l; ++smaller) {
            State u = dfa_->next(q, smaller);
            if (u >= 0) gain = (gain + table.count_mod(cls2, u)) % r;
          }
          for (unsigned acc = 0; acc < r; ++acc)
            nfa.add_transition(id(q, acc, cls), l, id(t, (acc + gain) % r, cls2));
        }
      }
    }
  }
  Automaton result = minimize(determinize(nfa));

  if (n0 > 0) {
    std::vector<Word> skipped;
    for (unsigned long n = 0; n < n0; ++n)
      skipped.push_back(rep(mpz_class(static_cast<unsigned long>(r)) * n + srem));
    result = minimize(determinize(
        difference(result, word_set_automaton(base, skipped))));
  }
  return result;
}

Automaton Ans::congruence_pair_recognizer(unsigned r, unsigned s) const {
  if (r < 1) throw InvalidInput("congruence modulus must be >= 1");
  if (s >= r) throw InvalidInput("congruence offset must satisfy 0 <= s < r");
  std::vector<Automaton> residue_dfas;
  residue_dfas.reserve(r);
  for (unsigned c = 0; c < r; ++c)
    residue_dfas.push_back(progression_recognizer(r, c, 0));

  Automaton acc = empty_language(order_.with_arity(2));
  for (unsigned c = 0; c < r; ++c) {
    Automaton prod = padded_product(
        {residue_dfas[c], residue_dfas[(c + s) % r]});
    acc = unite(acc, prod);
  }
  return minimize(determinize(acc));
}

}  // namespace ans
