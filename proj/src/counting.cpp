#include "ans/counting.hpp"

#include "ans/errors.hpp"

namespace ans {

WordCounter::WordCounter(const Automaton& dfa) : dfa_(dfa) {
  if (!dfa_.deterministic())
    throw InvalidInput("word counting requires a deterministic automaton");
  std::vector<mpz_class> base(static_cast<std::size_t>(dfa_.num_states()));
  for (State q = 0; q < dfa_.num_states(); ++q)
    base[static_cast<std::size_t>(q)] = dfa_.is_accepting(q) ? 1 : 0;
  table_.push_back(std::move(base));
  cumulative_.push_back(0);
}

void WordCounter::extend(std::size_t len) const {
  while (table_.size() <= len) {
    const std::vector<mpz_class>& prev = table_.back();
    std::vector<mpz_class> next(static_cast<std::size_t>(dfa_.num_states()));
    for (State q = 0; q < dfa_.num_states(); ++q) {
      mpz_class sum = 0;
      for (const auto& [l, tgts] : dfa_.post(q))
        sum += prev[static_cast<std::size_t>(tgts.front())];
      next[static_cast<std::size_t>(q)] = sum;
    }
    table_.push_back(std::move(next));
  }
  while (cumulative_.size() <= len) {
    std::size_t m = cumulative_.size();
    mpz_class v = cumulative_.back();
    if (!dfa_.initial().empty())
      v += table_[m - 1][static_cast<std::size_t>(dfa_.initial().front())];
    cumulative_.push_back(v);
  }
}

mpz_class WordCounter::count(State q, std::size_t len) const {
  if (q < 0 || q >= dfa_.num_states()) throw InvalidInput("unknown state");
  std::lock_guard<std::mutex> lock(mutex_);
  extend(len);
  return table_[len][static_cast<std::size_t>(q)];
}

mpz_class WordCounter::shorter_total(std::size_t len) const {
  std::lock_guard<std::mutex> lock(mutex_);
  extend(len);
  return cumulative_[len];
}

std::size_t WordCounter::length_of_rank(const mpz_class& n) const {
  std::lock_guard<std::mutex> lock(mutex_);
  for (std::size_t m = 0;; ++m) {
    extend(m + 1);
    if (cumulative_[m + 1] > n) return m;
  }
}

mpz_class count_words(const Automaton& a, State q, std::size_t len) {
  if (q < 0 || q >= a.num_states()) throw InvalidInput("unknown state");
  WordCounter counter(a);
  return counter.count(q, len);
}

}  // namespace ans
