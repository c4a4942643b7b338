#include <doctest.h>

#include <random>

#include "ans/automaton_io.hpp"
#include "ans/errors.hpp"
#include "ans/padded.hpp"
#include "fleet.hpp"

using namespace ans;
using namespace ans::testing;

namespace {

Word pad_pair(const Alphabet& tuple, const Ans& s, unsigned long m, unsigned long n) {
  return pad(tuple, {rep_syms(s, m), rep_syms(s, n)});
}

Alphabet unary_pair() { return Alphabet({"a"}, 2); }

Letter uletter(const Alphabet& al, std::initializer_list<int> digits) {
  std::vector<SymbolIdx> d(digits.begin(), digits.end());
  return al.make_letter(d);
}

// Builds a word of `n` copies of the given letter.
Word reps(Letter l, std::size_t n) { return Word(n, l); }

}  // namespace

TEST_CASE("pad and unpad") {
  Alphabet ab2 = Alphabet({"a", "b"}, 2);
  SUBCASE("pad appends '#' to the shorter track") {
    // ("ab", "a") -> (a,a)(b,#)
    Word w = pad(ab2, {{0, 1}, {0}});
    REQUIRE(w.size() == 2);
    CHECK(ab2.letter_name(w[0]) == "a|a");
    CHECK(ab2.letter_name(w[1]) == "b|#");
  }
  SUBCASE("the (n, 2n) shape from unary pairs") {
    Alphabet u2 = unary_pair();
    Word w = pad(u2, {std::vector<SymbolIdx>(2, 0), std::vector<SymbolIdx>(4, 0)});
    REQUIRE(w.size() == 4);
    CHECK(u2.letter_name(w[0]) == "a|a");
    CHECK(u2.letter_name(w[1]) == "a|a");
    CHECK(u2.letter_name(w[2]) == "#|a");
    CHECK(u2.letter_name(w[3]) == "#|a");
  }
  SUBCASE("unpad inverts pad") {
    Word w = pad(ab2, {{0, 1}, {0}});
    TrackWords t = unpad(ab2, w);
    CHECK(t[0] == std::vector<SymbolIdx>{0, 1});
    CHECK(t[1] == std::vector<SymbolIdx>{0});
  }
  SUBCASE("unpad rejects ill-padded words") {
    Alphabet u2 = unary_pair();
    Word bad{uletter(u2, {kPad, 0}), uletter(u2, {0, 0})};
    CHECK_THROWS_AS(unpad(u2, bad), InvalidInput);
  }
  SUBCASE("round trip on random tuples") {
    std::mt19937 rng(5);
    for (int round = 0; round < 200; ++round) {
      int d = 1 + static_cast<int>(rng() % 4);
      Alphabet tuple({"a", "b"}, d);
      TrackWords tracks(static_cast<std::size_t>(d));
      for (auto& t : tracks) {
        std::size_t len = rng() % 9;
        for (std::size_t i = 0; i < len; ++i)
          t.push_back(static_cast<SymbolIdx>(rng() % 2));
      }
      CHECK(unpad(tuple, pad(tuple, tracks)) == tracks);
    }
  }
}

TEST_CASE("validate_padded") {
  Alphabet u2 = unary_pair();
  SUBCASE("(a,a)*(#,a)* is well padded") {
    Automaton good = concat(star(word_automaton(u2, {uletter(u2, {0, 0})})),
                            star(word_automaton(u2, {uletter(u2, {kPad, 0})})));
    CHECK(validate_padded(good));
  }
  SUBCASE("a resumed track is rejected") {
    Automaton bad =
        word_automaton(u2, {uletter(u2, {kPad, 0}), uletter(u2, {0, 0})});
    CHECK(!validate_padded(bad));
    CHECK_THROWS_AS(PaddedRelation{bad}, InvalidInput);
  }
}

TEST_CASE("cylindrify adds a free or constrained track") {
  Ans ab{ab_automaton()};
  PaddedRelation eq = identity_relation(ab);

  PaddedRelation cyl = cylindrify(eq, 2);
  CHECK(cyl.arity() == 3);
  CHECK(validate_padded(cyl.automaton()));

  SUBCASE("accepts (w, w, u) for arbitrary u") {
    CHECK(cyl.accepts_tuple({{0, 1}, {0, 1}, {1, 1, 1, 0}}));
    CHECK(cyl.accepts_tuple({{0, 1}, {0, 1}, {}}));
    CHECK(!cyl.accepts_tuple({{0, 1}, {1, 1}, {0}}));
  }
  SUBCASE("projecting the cylinder back yields the relation") {
    PaddedRelation back = project(cyl, 2);
    CHECK(equivalent(back.automaton(), eq.automaton()));
  }
  SUBCASE("constrained track") {
    Automaton odd_len = ab.progression_recognizer(2, 1, 0);
    PaddedRelation c = cylindrify(eq, 0, odd_len);
    CHECK(c.accepts_tuple({ rep_syms(ab, 1), {0, 1}, {0, 1} }));
    CHECK(!c.accepts_tuple({ rep_syms(ab, 0), {0, 1}, {0, 1} }));
  }
}

TEST_CASE("project drops a track and repairs padding") {
  Ans ab{ab_automaton()};
  PaddedRelation succ = successor(ab);

  SUBCASE("middle track of a successor chain gives the double shift") {
    PaddedRelation c1 = cylindrify(succ, 2);  // (x, y, *)
    PaddedRelation c2 = cylindrify(succ, 0);  // (*, y, z)
    PaddedRelation chain{intersect(c1.automaton(), c2.automaton())};
    PaddedRelation two = project(chain, 1);
    CHECK(equivalent(two.automaton(), shift_k(ab, 2).automaton()));
  }
  SUBCASE("projection output is well padded across the fleet") {
    for (const auto& [name, s] : fleet()) {
      INFO(name);
      PaddedRelation rel = cylindrify(radix_leq(s), 1, s.language());
      for (int drop = 0; drop < 3; ++drop) {
        PaddedRelation p = project(rel, drop);
        CHECK(validate_padded(p.automaton()));
      }
    }
  }
}

TEST_CASE("compose") {
  SUBCASE("successor composed with itself is the 2-shift") {
    for (const auto& [name, s] : fleet()) {
      INFO(name);
      PaddedRelation succ = successor(s);
      CHECK(equivalent(compose(succ, succ).automaton(), shift_k(s, 2).automaton()));
    }
  }
  SUBCASE("identity is neutral") {
    Ans bin{bin_automaton()};
    PaddedRelation succ = successor(bin);
    CHECK(equivalent(compose(identity_relation(bin), succ).automaton(),
                     succ.automaton()));
    CHECK(equivalent(compose(succ, identity_relation(bin)).automaton(),
                     succ.automaton()));
  }
  SUBCASE("associativity sample") {
    Ans ab{ab_automaton()};
    PaddedRelation s1 = successor(ab);
    PaddedRelation lt = strict_less(ab);
    Automaton left = compose(compose(s1, lt), s1).automaton();
    Automaton right = compose(s1, compose(lt, s1)).automaton();
    CHECK(equivalent(left, right));
  }
  SUBCASE("composition follows rank arithmetic") {
    Ans ab{ab_automaton()};
    PaddedRelation sh3 = compose(shift_k(ab, 1), shift_k(ab, 2));
    const Alphabet tuple = sh3.alphabet();
    for (unsigned long n = 0; n < 300; ++n) {
      CHECK(sh3.automaton().accepts(pad_pair(tuple, ab, n, n + 3)));
      CHECK(!sh3.automaton().accepts(pad_pair(tuple, ab, n, n + 2)));
    }
  }
}

TEST_CASE("radix order relation") {
  for (const auto& [name, s] : fleet()) {
    INFO(name);
    PaddedRelation leq = radix_leq(s);
    const Alphabet tuple = leq.alphabet();
    CHECK(leq.automaton().accepts(pad_pair(tuple, s, 3, 5)));
    CHECK(!leq.automaton().accepts(pad_pair(tuple, s, 5, 3)));
    for (unsigned long n = 0; n < 100; ++n)
      CHECK(leq.automaton().accepts(pad_pair(tuple, s, n, n)));
    // Totality: exactly one strict direction for distinct values.
    for (unsigned long m = 0; m < 40; ++m)
      for (unsigned long n = m + 1; n < 40; ++n) {
        bool mn = leq.automaton().accepts(pad_pair(tuple, s, m, n));
        bool nm = leq.automaton().accepts(pad_pair(tuple, s, n, m));
        CHECK(mn);
        CHECK(!nm);
      }
  }
}

TEST_CASE("successor and shifts") {
  SUBCASE("unary successor is (a,a)*(#,a)") {
    Ans unary{unary_automaton()};
    Alphabet u2 = unary_pair();
    Automaton expect = concat(star(word_automaton(u2, {uletter(u2, {0, 0})})),
                              word_automaton(u2, {uletter(u2, {kPad, 0})}));
    CHECK(equivalent(successor(unary).automaton(), expect));
  }
  SUBCASE("successor pairs and non-pairs over {a,b}*") {
    Ans ab{ab_automaton()};
    PaddedRelation succ = successor(ab);
    const Alphabet tuple = succ.alphabet();
    for (unsigned long n = 0; n < 1000; ++n)
      CHECK(succ.automaton().accepts(pad_pair(tuple, ab, n, n + 1)));
    std::mt19937 rng(29);
    for (int round = 0; round < 300; ++round) {
      unsigned long m = rng() % 400, n = rng() % 400;
      if (n == m + 1) continue;
      CHECK(!succ.automaton().accepts(pad_pair(tuple, ab, m, n)));
    }
  }
  SUBCASE("successor is a function graph") {
    for (const auto& [name, s] : fleet()) {
      INFO(name);
      PaddedRelation succ = successor(s);
      const Alphabet tuple = succ.alphabet();
      for (unsigned long x = 0; x < 60; ++x) {
        int images = 0;
        for (unsigned long y = 0; y < 62; ++y)
          if (succ.automaton().accepts(pad_pair(tuple, s, x, y))) ++images;
        CHECK(images == 1);
      }
    }
  }
  SUBCASE("shift by three") {
    Ans bin{bin_automaton()};
    PaddedRelation sh = shift_k(bin, 3);
    const Alphabet tuple = sh.alphabet();
    for (unsigned long n = 0; n < 200; ++n) {
      CHECK(sh.automaton().accepts(pad_pair(tuple, bin, n, n + 3)));
      CHECK(!sh.automaton().accepts(pad_pair(tuple, bin, n + 3, n)));
    }
  }
}

TEST_CASE("padded products mirror set products") {
  Ans ab{ab_automaton()};
  Automaton evens = ab.progression_recognizer(2, 0, 0);
  Automaton odds = ab.progression_recognizer(2, 1, 0);
  Automaton ones = ab.progression_recognizer(3, 1, 0);
  Automaton all = ab.language();

  Automaton left = intersect(padded_product({evens, all}), padded_product({all, ones}));
  Automaton right = padded_product({intersect(evens, all), intersect(all, ones)});
  CHECK(equivalent(left, right));

  Automaton empty_cross = intersect(padded_product({evens, ones}),
                                    padded_product({odds, ones}));
  CHECK(is_empty(trim(empty_cross)));
}

TEST_CASE("the paper pair example: multiples of 5 against multiples of 6") {
  // R = {(a^{5n}, a^{6m})}: R^# as a union of chain products equals the
  // direct product automaton.
  Alphabet u1({"a"});
  Alphabet u2 = unary_pair();
  Letter aa = uletter(u2, {0, 0});
  Letter pa = uletter(u2, {kPad, 0});
  Letter ap = uletter(u2, {0, kPad});

  Automaton block30 = star(word_automaton(u2, reps(aa, 30)));
  Automaton acc = empty_language(u2);
  for (std::size_t l = 0; l <= 5; ++l) {
    // (a^{30},a^{30})* (a^{5l}#^l, a^{6l}) ((#,a)^6)*
    Word mid = reps(aa, 5 * l);
    Word tailp = reps(pa, l);
    mid.insert(mid.end(), tailp.begin(), tailp.end());
    Automaton piece = concat(concat(block30, word_automaton(u2, mid)),
                             star(word_automaton(u2, reps(pa, 6))));
    acc = unite(acc, piece);
  }
  for (std::size_t l = 0; l <= 4; ++l) {
    // (a^{30},a^{30})* (a^{5(l+1)}, a^{6l}#^{5-l}) ((a,#)^5)*
    Word mid = reps(aa, 6 * l);
    Word tailp = reps(ap, 5 - l);
    mid.insert(mid.end(), tailp.begin(), tailp.end());
    Automaton piece = concat(concat(block30, word_automaton(u2, mid)),
                             star(word_automaton(u2, reps(ap, 5))));
    acc = unite(acc, piece);
  }

  Automaton mod5 = star(word_automaton(u1, Word(5, 1)));
  Automaton mod6 = star(word_automaton(u1, Word(6, 1)));
  Automaton direct = padded_product({mod5, mod6});
  CHECK(equivalent(acc, direct));
  CHECK(validate_padded(acc));
}
