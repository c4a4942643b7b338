#include "ans/compiler.hpp"

#include <algorithm>
#include <sstream>

#include "ans/errors.hpp"

namespace ans {

namespace {

TrackWords tuple_reps(const Ans& s, std::span<const unsigned long> tuple) {
  TrackWords tracks;
  tracks.reserve(tuple.size());
  for (unsigned long v : tuple) {
    Word w = s.rep(static_cast<unsigned long>(v));
    std::vector<SymbolIdx> syms;
    syms.reserve(w.size());
    for (Letter l : w) syms.push_back(s.alphabet().symbol_of(l));
    tracks.push_back(std::move(syms));
  }
  return tracks;
}

/// Tracks ∈ L everywhere except `free_tracks`, which run over all of Σ*.
Automaton language_frame(const Ans& s, int dim, const std::vector<int>& free_tracks) {
  std::vector<Automaton> tracks;
  tracks.reserve(static_cast<std::size_t>(dim));
  for (int t = 0; t < dim; ++t) {
    bool free = std::find(free_tracks.begin(), free_tracks.end(), t) != free_tracks.end();
    tracks.push_back(free ? universal_language(s.alphabet()) : s.language());
  }
  return padded_product(tracks);
}

/// Single-track constraint: track j runs `lang`, every other track runs L.
Automaton track_constraint(const Ans& s, int dim, int j, const Automaton& lang) {
  std::vector<Automaton> tracks;
  tracks.reserve(static_cast<std::size_t>(dim));
  for (int t = 0; t < dim; ++t)
    tracks.push_back(t == j ? lang : s.language());
  return padded_product(tracks);
}

/// Pair relation on (k, j) with all remaining tracks constrained to L.
Automaton pair_constraint(const Ans& s, int dim, int k, int j,
                          const PaddedRelation& rel) {
  PaddedRelation embedded = embed_pair(rel, dim, k, j);
  Automaton frame = language_frame(s, dim, {k, j});
  return trim(intersect(embedded.automaton(), frame));
}

Automaton compile_reference_progression(const Ans& s, const YSet& y, int dim) {
  // x_j = x_k + r·n + s with n >= N and r > 0: intersect, over a guessed
  // extra track g carrying rep(val(x_k) + r·N + s),
  //   - the constant shift from x_k to g,
  //   - the radix-order check g <= x_j,
  //   - the congruence (val(x_j) - val(x_k)) ≡ s (mod r),
  //   - L on all remaining tracks,
  // then project g away. The order check plus congruence pin down
  // val(x_j) = val(x_k) + r·n + s for some n >= N.
  unsigned r = static_cast<unsigned>(y.r);
  unsigned srem = static_cast<unsigned>(y.s % y.r);
  unsigned long n0 = y.threshold + (y.s - srem) / y.r;
  const int g = dim;  // guessed track appended at the end
  const int wide = dim + 1;

  PaddedRelation shift = shift_k(s, static_cast<unsigned>(y.r * n0 + srem));
  PaddedRelation leq = radix_leq(s);
  PaddedRelation cong{s.congruence_pair_recognizer(r, srem)};

  Automaton acc = pair_constraint(s, wide, y.k, g, shift);
  acc = trim(intersect(acc, embed_pair(leq, wide, g, y.j).automaton()));
  acc = trim(intersect(acc, embed_pair(cong, wide, y.k, y.j).automaton()));
  PaddedRelation joint(acc);
  PaddedRelation projected = project(joint, g);
  return minimize(determinize(projected.automaton()));
}

}  // namespace

bool CompiledSet::contains(std::span<const unsigned long> tuple) const {
  return relation.accepts_tuple(tuple_reps(system, tuple));
}

CompiledSet compile_yset(const Ans& s, const YSet& y, int dim) {
  if (y.j < 0 || y.j >= dim) throw InvalidInput("Y-set axis out of range");
  if (y.uses_reference() && (y.k < 0 || y.k >= dim || y.k == y.j))
    throw InvalidInput("Y-set reference axis invalid");

  Automaton result(s.alphabet().with_arity(dim));
  switch (y.form) {
    case YSet::Form::kOnlyJ: {
      Automaton prog = s.progression_recognizer(static_cast<unsigned>(y.r), y.s,
                                                y.threshold);
      result = track_constraint(s, dim, y.j, prog);
      break;
    }
    case YSet::Form::kOnlyJFinite: {
      std::vector<Word> words;
      for (unsigned long n : y.finite_set) words.push_back(s.rep(y.r * n + y.s));
      result = track_constraint(s, dim, y.j, word_set_automaton(s.alphabet(), words));
      break;
    }
    case YSet::Form::kJAndK: {
      if (y.r == 0) {
        PaddedRelation shift = shift_k(s, static_cast<unsigned>(y.s));
        result = pair_constraint(s, dim, y.k, y.j, shift);
      } else {
        result = compile_reference_progression(s, y, dim);
      }
      break;
    }
    case YSet::Form::kJAndKFinite: {
      Automaton acc = empty_language(s.alphabet().with_arity(dim));
      for (unsigned long n : y.finite_set) {
        PaddedRelation shift = shift_k(s, static_cast<unsigned>(y.r * n + y.s));
        acc = unite(acc, pair_constraint(s, dim, y.k, y.j, shift));
      }
      result = acc;
      break;
    }
  }
  result = minimize(determinize(result));
  std::ostringstream src;
  src << "yset j=" << y.j + 1;
  CompiledSet out{PaddedRelation(result), s, src.str()};
  return out;
}

CompiledSet compile(const Ans& s, const NormalFormUnion& x) {
  if (x.empty()) throw InvalidInput("cannot infer dimension from an empty union");
  return compile(s, x, x.front().dim);
}

CompiledSet compile(const Ans& s, const NormalFormUnion& x, int dim) {
  Automaton acc = empty_language(s.alphabet().with_arity(dim));
  for (const NormalForm& nf : x) {
    if (nf.dim != dim) throw InvalidInput("dimension mismatch in union");
    YDecomposition dec = y_decompose(nf);

    auto compile_intersection = [&](const std::vector<YSet>& ys) {
      Automaton meet = language_frame(s, dim, {});
      for (const YSet& y : ys)
        meet = trim(intersect(meet, compile_yset(s, y, dim).relation.automaton()));
      return minimize(determinize(meet));
    };

    Automaton nf_aut = compile_intersection(dec.b_sets);
    for (const auto& term : dec.a_terms)
      nf_aut = unite(nf_aut, compile_intersection(term));
    acc = unite(acc, nf_aut);
  }
  Automaton result = minimize(determinize(acc));
  std::ostringstream src;
  src << "union of " << x.size() << " summand(s), dim " << dim;
  return CompiledSet{PaddedRelation(result), s, src.str()};
}

std::string VerifyReport::to_string() const {
  std::ostringstream out;
  if (ok()) {
    out << "OK n_checked=" << checked;
    return out.str();
  }
  for (std::size_t i = 0; i < failures.size(); ++i) {
    if (i) out << '\n';
    out << "FAIL tuple=(";
    for (std::size_t t = 0; t < failures[i].tuple.size(); ++t)
      out << (t ? "," : "") << failures[i].tuple[t];
    out << ") direction=" << (failures[i].missing ? "missing" : "spurious");
  }
  return out.str();
}

VerifyReport verify(const Ans& s, const NormalFormUnion& x,
                    const CompiledSet& compiled, unsigned long bound) {
  VerifyReport report;
  const int d = compiled.dim();
  const Alphabet tuple_alphabet = compiled.relation.alphabet();

  // Direction one: agreement on the whole box [0,bound]^d.
  std::vector<TrackWords> rep_cache;  // rep(v) as raw symbols, v <= bound
  for (unsigned long v = 0; v <= bound; ++v)
    rep_cache.push_back(tuple_reps(s, std::vector<unsigned long>{v}));

  std::vector<unsigned long> tuple(static_cast<std::size_t>(d), 0);
  while (true) {
    bool oracle = member(tuple, x);
    TrackWords tracks;
    tracks.reserve(static_cast<std::size_t>(d));
    for (unsigned long v : tuple) tracks.push_back(rep_cache[v].front());
    Word w = pad(tuple_alphabet, tracks);
    bool accepted = compiled.relation.automaton().accepts(w);
    ++report.checked;
    if (oracle != accepted) report.failures.push_back({tuple, oracle});

    int pos = d - 1;
    while (pos >= 0 && tuple[static_cast<std::size_t>(pos)] == bound) {
      tuple[static_cast<std::size_t>(pos)] = 0;
      --pos;
    }
    if (pos < 0) break;
    ++tuple[static_cast<std::size_t>(pos)];
  }

  // Direction two: every accepted word up to the box's rep length decodes
  // into the set (this sees tuples outside the box as well).
  const std::size_t max_len = s.rep(bound).size();
  Automaton aut = trim(compiled.relation.automaton());
  if (aut.num_states() > 0) {
    // can_finish[m][q]: an accepted word of length <= m starts at q.
    std::vector<std::vector<bool>> can_finish(
        max_len + 1, std::vector<bool>(static_cast<std::size_t>(aut.num_states()), false));
    for (State q = 0; q < aut.num_states(); ++q)
      can_finish[0][static_cast<std::size_t>(q)] = aut.is_accepting(q);
    for (std::size_t m = 1; m <= max_len; ++m)
      for (State q = 0; q < aut.num_states(); ++q) {
        bool ok = can_finish[m - 1][static_cast<std::size_t>(q)] || aut.is_accepting(q);
        if (!ok)
          for (const auto& [l, tgts] : aut.post(q)) {
            for (State tq : tgts)
              if (can_finish[m - 1][static_cast<std::size_t>(tq)]) {
                ok = true;
                break;
              }
            if (ok) break;
          }
        can_finish[m][static_cast<std::size_t>(q)] = ok;
      }

    Word prefix;
    auto decode_check = [&]() {
      ++report.checked;
      try {
        TrackWords tracks = unpad(tuple_alphabet, prefix);
        std::vector<unsigned long> decoded;
        decoded.reserve(tracks.size());
        for (auto& track : tracks) {
          Word w;
          for (SymbolIdx sym : track) w.push_back(s.alphabet().letter_of(sym));
          decoded.push_back(s.val(w).get_ui());
        }
        if (!member(decoded, x)) report.failures.push_back({decoded, false});
      } catch (const InvalidInput&) {
        // Accepted word with a track outside L: spurious by definition.
        report.failures.push_back({{}, false});
      }
    };
    auto dfs = [&](auto&& self, const std::vector<State>& states,
                   std::size_t remaining) -> void {
      bool accepting = std::any_of(states.begin(), states.end(),
                                   [&](State q) { return aut.is_accepting(q); });
      if (accepting) decode_check();
      if (remaining == 0) return;
      for (Letter l = 1; l <= tuple_alphabet.letter_count(); ++l) {
        std::vector<State> next;
        for (State q : states) {
          const auto* tg = aut.targets(q, l);
          if (!tg) continue;
          for (State tq : *tg)
            if (can_finish[remaining - 1][static_cast<std::size_t>(tq)])
              next.push_back(tq);
        }
        if (next.empty()) continue;
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        prefix.push_back(l);
        self(self, next, remaining - 1);
        prefix.pop_back();
      }
    };
    std::vector<State> start(aut.initial().begin(), aut.initial().end());
    if (!start.empty()) dfs(dfs, start, max_len);
  }
  return report;
}

}  // namespace ans
