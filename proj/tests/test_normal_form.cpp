#include <doctest.h>

#include <random>

#include "ans/automaton_io.hpp"
#include "ans/errors.hpp"
#include "ans/normal_form.hpp"
#include "ans/padded.hpp"
#include "oracles.hpp"

using namespace ans;
using namespace ans::testing;

namespace {

const char* kExPart1 =
    "dim 4\n"
    "level A={1,2,3,4} c=5 b=(0,0,0,0)\n"
    "level A={2,3}     c=4 b=(0,0,0,0)\n"
    "level A={2,3}     c=6 b=(0,1,1,0)\n"
    "level A={3}       c=0 b=(0,0,2,0)\n";

// ((a,a,a,a)^5)* ((#,a,a,#)^4)* ((#,a,a,#)^6)* (#,a,a,#) (#,#,a,#)^2
Automaton expart1_regex_automaton() {
  Alphabet u4({"a"}, 4);
  auto letter = [&](std::initializer_list<int> axes) {
    std::vector<SymbolIdx> d(4, kPad);
    for (int a : axes) d[static_cast<std::size_t>(a)] = 0;
    return u4.make_letter(d);
  };
  Letter full = letter({0, 1, 2, 3});
  Letter mid = letter({1, 2});
  Letter third = letter({2});
  Automaton acc = star(word_automaton(u4, Word(5, full)));
  acc = concat(acc, star(word_automaton(u4, Word(4, mid))));
  acc = concat(acc, star(word_automaton(u4, Word(6, mid))));
  acc = concat(acc, word_automaton(u4, Word(1, mid)));
  acc = concat(acc, word_automaton(u4, Word(2, third)));
  return acc;
}

// Reference membership for the example set
// {(5n, 5n+4m+6l+1, 5n+4m+6l+3, 5n)}.
bool expart1_member(unsigned long x0, unsigned long x1, unsigned long x2,
                    unsigned long x3) {
  if (x0 != x3 || x0 % 5 != 0) return false;
  if (x1 < x0 + 1 || x2 != x1 + 2) return false;
  unsigned long rest = x1 - x0 - 1;  // 4m + 6l
  for (unsigned long m = 0; 4 * m <= rest; ++m)
    if ((rest - 4 * m) % 6 == 0) return true;
  return false;
}

NormalForm random_normal_form(std::mt19937& rng, int dim) {
  NormalForm nf;
  nf.dim = dim;
  std::vector<int> support;
  for (int i = 0; i < dim; ++i)
    if (rng() % 2) support.push_back(i);
  if (support.empty()) support.push_back(static_cast<int>(rng() % dim));
  int levels = 1 + static_cast<int>(rng() % 3);
  for (int l = 0; l < levels && !support.empty(); ++l) {
    NormalForm::Level level;
    level.axes = support;
    level.coeff = rng() % 8;
    level.offsets.assign(static_cast<std::size_t>(dim), 0);
    unsigned long beta = rng() % 5;
    for (int a : support) level.offsets[static_cast<std::size_t>(a)] = beta;
    nf.levels.push_back(std::move(level));
    // Shrink (sometimes strictly) for the next level.
    std::vector<int> next;
    for (int a : support)
      if (rng() % 3) next.push_back(a);
    support = std::move(next);
  }
  return nf;
}

std::vector<unsigned long> tup(std::initializer_list<unsigned long> v) {
  return std::vector<unsigned long>(v);
}

}  // namespace

TEST_CASE("normal form file format") {
  NormalFormUnion u = parse_normal_forms(kExPart1);
  REQUIRE(u.size() == 1);
  const NormalForm& nf = u[0];
  CHECK(nf.dim == 4);
  REQUIRE(nf.levels.size() == 4);
  CHECK(nf.levels[0].axes == std::vector<int>{0, 1, 2, 3});
  CHECK(nf.levels[0].coeff == 5);
  CHECK(nf.levels[2].axes == std::vector<int>{1, 2});
  CHECK(nf.level_offset(2) == 1);
  CHECK(nf.levels[3].axes == std::vector<int>{2});
  CHECK(nf.level_offset(3) == 2);

  SUBCASE("serialize round-trips") {
    CHECK(parse_normal_forms(serialize_normal_forms(u)) == u);
  }
  SUBCASE("union blocks") {
    NormalFormUnion two = parse_normal_forms(
        "dim 2\nlevel A={1,2} c=1 b=(0,0)\n---\nlevel A={2} c=0 b=(0,3)\n");
    CHECK(two.size() == 2);
    CHECK(parse_normal_forms(serialize_normal_forms(two)) == two);
  }
  SUBCASE("rejects malformed input") {
    CHECK_THROWS_AS(parse_normal_forms("level A={1} c=1 b=(0)\n"), ParseError);
    CHECK_THROWS_AS(parse_normal_forms("dim 2\nlevel A={3} c=1 b=(0,0)\n"),
                    ParseError);
    CHECK_THROWS_AS(
        parse_normal_forms("dim 2\nlevel A={1} c=1 b=(0,1)\n"),  // b off support
        ParseError);
    CHECK_THROWS_AS(
        parse_normal_forms("dim 2\nlevel A={2} c=1 b=(0,0)\nlevel A={1} c=1 b=(0,0)\n"),
        ParseError);  // not a chain
  }
}

TEST_CASE("membership oracle") {
  NormalFormUnion u = parse_normal_forms(kExPart1);
  CHECK(member(tup({0, 1, 3, 0}), u));       // n = m = l = 0
  CHECK(member(tup({5, 6, 8, 5}), u));       // n = 1
  CHECK(member(tup({5, 10, 12, 5}), u));     // n = 1, m = 1
  CHECK(!member(tup({1, 1, 1, 1}), u));
  CHECK(!member(tup({5, 6, 8, 0}), u));
  for (unsigned long x0 = 0; x0 <= 12; ++x0)
    for (unsigned long x1 = 0; x1 <= 12; ++x1)
      for (unsigned long x2 = 0; x2 <= 12; ++x2)
        for (unsigned long x3 = 0; x3 <= 12; ++x3)
          CHECK(member(tup({x0, x1, x2, x3}), u) ==
                expart1_member(x0, x1, x2, x3));
}

TEST_CASE("normal form to automaton") {
  SUBCASE("the running 4-dimensional example matches its product form") {
    NormalFormUnion u = parse_normal_forms(kExPart1);
    Automaton generated = normal_form_to_unary_dfa(u, 4);
    CHECK(equivalent(generated, expart1_regex_automaton()));
    CHECK(validate_padded(generated));
  }
  SUBCASE("dimension one, the whole of ℕ") {
    NormalFormUnion u = parse_normal_forms("dim 1\nlevel A={1} c=1 b=(0)\n");
    CHECK(equivalent(normal_form_to_unary_dfa(u, 1),
                     universal_language(Alphabet({"a"}))));
  }
  SUBCASE("the diagonal") {
    NormalFormUnion u = parse_normal_forms("dim 2\nlevel A={1,2} c=1 b=(0,0)\n");
    Alphabet u2({"a"}, 2);
    Automaton diag = star(word_automaton(
        u2, {u2.make_letter(std::vector<SymbolIdx>{0, 0})}));
    CHECK(equivalent(normal_form_to_unary_dfa(u, 2), diag));
  }
}

TEST_CASE("decompose_unary") {
  SUBCASE("the running example round-trips exactly") {
    Automaton input = expart1_regex_automaton();
    NormalFormUnion dec = decompose_unary(input);
    CHECK(canonical_text(normal_form_to_unary_dfa(dec, 4)) ==
          canonical_text(input));
    for (unsigned long x0 = 0; x0 <= 11; ++x0)
      for (unsigned long x1 = 0; x1 <= 11; ++x1)
        for (unsigned long x2 = 0; x2 <= 11; ++x2)
          for (unsigned long x3 = 0; x3 <= 11; ++x3)
            CHECK(member(tup({x0, x1, x2, x3}), dec) ==
                  expart1_member(x0, x1, x2, x3));
  }
  SUBCASE("the diagonal decomposes to the single expected summand") {
    Alphabet u2({"a"}, 2);
    Automaton diag = star(word_automaton(
        u2, {u2.make_letter(std::vector<SymbolIdx>{0, 0})}));
    NormalFormUnion dec = decompose_unary(diag);
    REQUIRE(dec.size() == 1);
    REQUIRE(dec[0].levels.size() == 1);
    CHECK(dec[0].levels[0].axes == std::vector<int>{0, 1});
    CHECK(dec[0].levels[0].coeff == 1);
    CHECK(dec[0].level_offset(0) == 0);
  }
  SUBCASE("multiples of 5 against multiples of 6") {
    Alphabet u1({"a"});
    Automaton mod5 = star(word_automaton(u1, Word(5, 1)));
    Automaton mod6 = star(word_automaton(u1, Word(6, 1)));
    Automaton input = padded_product({mod5, mod6});
    NormalFormUnion dec = decompose_unary(input);
    CHECK(canonical_text(normal_form_to_unary_dfa(dec, 2)) ==
          canonical_text(input));
    for (unsigned long x = 0; x <= 40; ++x)
      for (unsigned long y = 0; y <= 40; ++y)
        CHECK(member(tup({x, y}), dec) == (x % 5 == 0 && y % 6 == 0));
  }
  SUBCASE("emitted summands satisfy the chain and offset constraints") {
    std::mt19937 rng(41);
    for (int round = 0; round < 25; ++round) {
      int dim = 1 + static_cast<int>(rng() % 3);
      NormalFormUnion u{random_normal_form(rng, dim)};
      if (rng() % 2) u.push_back(random_normal_form(rng, dim));
      Automaton aut = normal_form_to_unary_dfa(u, dim);
      NormalFormUnion dec = decompose_unary(aut);
      for (const NormalForm& nf : dec) CHECK_NOTHROW(nf.validate());
      CHECK(canonical_text(normal_form_to_unary_dfa(dec, dim)) ==
            canonical_text(aut));
    }
  }
  SUBCASE("rejects ill-padded and non-unary input") {
    Alphabet u2({"a"}, 2);
    Automaton bad = word_automaton(
        u2, {u2.make_letter(std::vector<SymbolIdx>{kPad, 0}),
             u2.make_letter(std::vector<SymbolIdx>{0, 0})});
    CHECK_THROWS_AS(decompose_unary(bad), InvalidInput);
    Automaton pairs = universal_language(Alphabet({"a", "b"}, 2));
    CHECK_THROWS_AS(decompose_unary(pairs), InvalidInput);
  }
}

TEST_CASE("frobenius bounds and residue sets") {
  SUBCASE("values from the worked example") {
    std::vector<unsigned long> cs46{4, 6};
    CHECK(frobenius_bound(2, cs46) == 2);
    CHECK(residue_set(2, cs46, 2) == std::vector<unsigned long>{0});

    std::vector<unsigned long> cs5{5};
    CHECK(frobenius_bound(5, cs5) == 0);
    CHECK(residue_set(5, cs5, 0).empty());

    std::vector<unsigned long> cs0{0};
    CHECK(frobenius_bound(0, cs0) == 0);
    CHECK(residue_set(0, cs0, 0).empty());
  }
  SUBCASE("coprime pair 3, 5") {
    std::vector<unsigned long> cs{3, 5};
    CHECK(frobenius_bound(1, cs) == 8);  // 7 is the largest gap
    CHECK(residue_set(1, cs, 8) == std::vector<unsigned long>({0, 3, 5, 6}));
  }
  SUBCASE("wrong gcd is rejected") {
    std::vector<unsigned long> cs{4, 6};
    CHECK_THROWS_AS(frobenius_bound(1, cs), InvalidInput);
  }
  SUBCASE("matches the DP oracle on random instances") {
    std::mt19937 rng(43);
    for (int round = 0; round < 200; ++round) {
      std::vector<unsigned long> cs;
      int len = 1 + static_cast<int>(rng() % 4);
      for (int i = 0; i < len; ++i) cs.push_back(rng() % 31);
      unsigned long g = 0;
      for (unsigned long c : cs) g = std::gcd(g, c);
      unsigned long bound_n = 0;
      for (unsigned long c : cs) bound_n = std::max(bound_n, c * c + 2);
      auto rep_table = oracle_representable(cs, g * bound_n + 1);
      unsigned long expect_n = 0;
      for (unsigned long n = 0; n <= bound_n; ++n)
        if (g > 0 && !rep_table[g * n]) expect_n = n + 1;
      CHECK(frobenius_bound(g, cs) == expect_n);
      std::vector<unsigned long> expect_c;
      for (unsigned long n = 0; n < expect_n; ++n)
        if (rep_table[g * n]) expect_c.push_back(n);
      CHECK(residue_set(g, cs, expect_n) == expect_c);
    }
  }
}

TEST_CASE("y_decompose") {
  SUBCASE("the running example reproduces the worked structure") {
    NormalForm nf = parse_normal_forms(kExPart1)[0];
    YDecomposition dec = y_decompose(nf);

    REQUIRE(dec.b_sets.size() == 4);
    // Y_1: first coordinate is 5n.
    CHECK(dec.b_sets[0].form == YSet::Form::kOnlyJ);
    CHECK(dec.b_sets[0].j == 0);
    CHECK(dec.b_sets[0].r == 5);
    CHECK(dec.b_sets[0].s == 0);
    CHECK(dec.b_sets[0].threshold == 0);
    // Y_4 ties coordinate 4 to coordinate 1.
    CHECK(dec.b_sets[1].form == YSet::Form::kJAndK);
    CHECK(dec.b_sets[1].j == 3);
    CHECK(dec.b_sets[1].k == 0);
    CHECK(dec.b_sets[1].r == 0);
    // Y_2: coordinate 2 = x_1 + 2n + 1, n >= 2.
    CHECK(dec.b_sets[2].form == YSet::Form::kJAndK);
    CHECK(dec.b_sets[2].j == 1);
    CHECK(dec.b_sets[2].k == 0);
    CHECK(dec.b_sets[2].r == 2);
    CHECK(dec.b_sets[2].s == 1);
    CHECK(dec.b_sets[2].threshold == 2);
    // Y_3: coordinate 3 = x_2 + 2.
    CHECK(dec.b_sets[3].form == YSet::Form::kJAndK);
    CHECK(dec.b_sets[3].j == 2);
    CHECK(dec.b_sets[3].k == 1);
    CHECK(dec.b_sets[3].r == 0);
    CHECK(dec.b_sets[3].s == 2);
    CHECK(dec.b_sets[3].threshold == 0);

    // A = Y_1 ∩ Y_2' ∩ Y_3 ∩ Y_4 with C_2 = {0}; the other residue sets
    // are empty, so exactly one union term appears.
    REQUIRE(dec.a_terms.size() == 1);
    const auto& term = dec.a_terms[0];
    REQUIRE(term.size() == 4);
    CHECK(term[2].form == YSet::Form::kJAndKFinite);
    CHECK(term[2].j == 1);
    CHECK(term[2].finite_set == std::vector<unsigned long>{0});

    for (unsigned long x0 = 0; x0 <= 11; ++x0)
      for (unsigned long x1 = 0; x1 <= 11; ++x1)
        for (unsigned long x2 = 0; x2 <= 11; ++x2)
          for (unsigned long x3 = 0; x3 <= 11; ++x3)
            CHECK(dec.contains(tup({x0, x1, x2, x3})) ==
                  expart1_member(x0, x1, x2, x3));
  }
  SUBCASE("diagonal: a pure progression plus one tie") {
    NormalForm nf = parse_normal_forms("dim 2\nlevel A={1,2} c=1 b=(0,0)\n")[0];
    YDecomposition dec = y_decompose(nf);
    REQUIRE(dec.b_sets.size() == 2);
    CHECK(dec.b_sets[0].form == YSet::Form::kOnlyJ);
    CHECK(dec.b_sets[0].r == 1);
    CHECK(dec.b_sets[0].threshold == 0);
    CHECK(dec.b_sets[1].form == YSet::Form::kJAndK);
    CHECK(dec.b_sets[1].j == 1);
    CHECK(dec.b_sets[1].k == 0);
    CHECK(dec.a_terms.empty());  // C = ∅ everywhere
  }
  SUBCASE("odd numbers in dimension one") {
    NormalForm nf = parse_normal_forms("dim 1\nlevel A={1} c=2 b=(1)\n")[0];
    YDecomposition dec = y_decompose(nf);
    REQUIRE(dec.b_sets.size() == 1);
    CHECK(dec.b_sets[0].r == 2);
    CHECK(dec.b_sets[0].s == 1);
    CHECK(dec.b_sets[0].threshold == 0);
    CHECK(dec.a_terms.empty());
    for (unsigned long n = 0; n < 30; ++n)
      CHECK(dec.contains(tup({n})) == (n % 2 == 1));
  }
  SUBCASE("two blocks with nonempty residue sets need a joint union term") {
    // x = 4a+6b, y = x + 4e+6f: both increments live in <4,6>, whose gap
    // residues C = {0} appear in both blocks; (0,0) is only covered when
    // both leaders take the finite variant at once.
    NormalForm nf = parse_normal_forms(
        "dim 2\n"
        "level A={1,2} c=4 b=(0,0)\n"
        "level A={1,2} c=6 b=(0,0)\n"
        "level A={2}   c=4 b=(0,0)\n"
        "level A={2}   c=6 b=(0,0)\n")[0];
    YDecomposition dec = y_decompose(nf);
    CHECK(dec.a_terms.size() == 3);  // {1}, {2}, {1,2}
    CHECK(dec.contains(tup({0, 0})));
    CHECK(dec.contains(tup({0, 4})));
    CHECK(dec.contains(tup({4, 4})));
    CHECK(!dec.contains(tup({2, 2})));
    auto semigroup = [](unsigned long v) {
      for (unsigned long a = 0; 4 * a <= v; ++a)
        if ((v - 4 * a) % 6 == 0) return true;
      return false;
    };
    for (unsigned long x = 0; x <= 30; ++x)
      for (unsigned long y = 0; y <= 30; ++y) {
        bool expect = semigroup(x) && y >= x && semigroup(y - x);
        CHECK(dec.contains(tup({x, y})) == expect);
        CHECK(member(tup({x, y}), nf) == expect);
      }
  }
  SUBCASE("membership agrees between normal form and decomposition") {
    std::mt19937 rng(47);
    for (int round = 0; round < 40; ++round) {
      int dim = 1 + static_cast<int>(rng() % 4);
      NormalForm nf = random_normal_form(rng, dim);
      YDecomposition dec = y_decompose(nf);
      std::vector<unsigned long> x(static_cast<std::size_t>(dim), 0);
      const unsigned long bound = dim <= 2 ? 20 : 12;
      while (true) {
        CHECK(member(x, nf) == dec.contains(x));
        int pos = dim - 1;
        while (pos >= 0 && x[static_cast<std::size_t>(pos)] == bound) {
          x[static_cast<std::size_t>(pos)] = 0;
          --pos;
        }
        if (pos < 0) break;
        ++x[static_cast<std::size_t>(pos)];
      }
    }
  }
}
