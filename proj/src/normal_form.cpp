#include "ans/normal_form.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "ans/errors.hpp"
#include "ans/padded.hpp"

namespace ans {

void NormalForm::validate() const {
  if (dim < 1) throw InvalidInput("normal form dimension must be >= 1");
  if (levels.empty()) throw InvalidInput("normal form needs at least one level");
  for (std::size_t l = 0; l < levels.size(); ++l) {
    const Level& lv = levels[l];
    if (lv.axes.empty()) throw InvalidInput("level support must be nonempty");
    if (!std::is_sorted(lv.axes.begin(), lv.axes.end()) ||
        std::adjacent_find(lv.axes.begin(), lv.axes.end()) != lv.axes.end())
      throw InvalidInput("level axes must be sorted and distinct");
    if (lv.axes.front() < 0 || lv.axes.back() >= dim)
      throw InvalidInput("level axis out of range");
    if (lv.offsets.size() != static_cast<std::size_t>(dim))
      throw InvalidInput("level offsets must have one entry per axis");
    unsigned long common = lv.offsets[static_cast<std::size_t>(lv.axes.front())];
    for (int axis = 0; axis < dim; ++axis) {
      bool in = std::binary_search(lv.axes.begin(), lv.axes.end(), axis);
      unsigned long b = lv.offsets[static_cast<std::size_t>(axis)];
      if (!in && b != 0)
        throw InvalidInput("offset must be zero outside the support");
      if (in && b != common)
        throw InvalidInput("offsets must agree on the support");
    }
    if (l > 0) {
      const auto& prev = levels[l - 1].axes;
      for (int axis : lv.axes)
        if (!std::binary_search(prev.begin(), prev.end(), axis))
          throw InvalidInput("supports must form a non-increasing chain");
    }
  }
}

unsigned long NormalForm::level_offset(std::size_t l) const {
  const Level& lv = levels[l];
  return lv.offsets[static_cast<std::size_t>(lv.axes.front())];
}

bool NormalForm::operator<(const NormalForm& o) const {
  if (dim != o.dim) return dim < o.dim;
  auto key = [](const Level& lv) { return std::tie(lv.axes, lv.coeff, lv.offsets); };
  return std::lexicographical_compare(
      levels.begin(), levels.end(), o.levels.begin(), o.levels.end(),
      [&](const Level& a, const Level& b) { return key(a) < key(b); });
}

namespace {

bool member_search(const NormalForm& nf, std::size_t l,
                   std::vector<unsigned long>& rem) {
  if (l == nf.levels.size())
    return std::all_of(rem.begin(), rem.end(), [](unsigned long v) { return v == 0; });
  const NormalForm::Level& lv = nf.levels[l];
  // Axes outside this support receive nothing from here on.
  for (int axis = 0; axis < nf.dim; ++axis)
    if (!std::binary_search(lv.axes.begin(), lv.axes.end(), axis) &&
        rem[static_cast<std::size_t>(axis)] != 0)
      return false;
  unsigned long beta = nf.level_offset(l);
  for (int axis : lv.axes)
    if (rem[static_cast<std::size_t>(axis)] < beta) return false;
  for (int axis : lv.axes) rem[static_cast<std::size_t>(axis)] -= beta;
  bool found = false;
  if (lv.coeff == 0) {
    found = member_search(nf, l + 1, rem);
  } else {
    unsigned long nmax = rem[static_cast<std::size_t>(lv.axes.front())] / lv.coeff;
    for (int axis : lv.axes)
      nmax = std::min(nmax, rem[static_cast<std::size_t>(axis)] / lv.coeff);
    for (unsigned long n = 0; n <= nmax && !found; ++n) {
      for (int axis : lv.axes) rem[static_cast<std::size_t>(axis)] -= lv.coeff * n;
      found = member_search(nf, l + 1, rem);
      for (int axis : lv.axes) rem[static_cast<std::size_t>(axis)] += lv.coeff * n;
    }
  }
  for (int axis : lv.axes) rem[static_cast<std::size_t>(axis)] += beta;
  return found;
}

}  // namespace

bool member(std::span<const unsigned long> x, const NormalForm& nf) {
  if (static_cast<int>(x.size()) != nf.dim)
    throw InvalidInput("tuple dimension mismatch");
  std::vector<unsigned long> rem(x.begin(), x.end());
  return member_search(nf, 0, rem);
}

bool member(std::span<const unsigned long> x, const NormalFormUnion& u) {
  return std::any_of(u.begin(), u.end(),
                     [&](const NormalForm& nf) { return member(x, nf); });
}

namespace {

Alphabet unary_tuple_alphabet(int dim) { return Alphabet({"a"}, dim); }

Letter support_letter(const Alphabet& alphabet, const std::vector<int>& axes) {
  std::vector<SymbolIdx> digits(static_cast<std::size_t>(alphabet.arity()), kPad);
  for (int a : axes) digits[static_cast<std::size_t>(a)] = 0;
  return alphabet.make_letter(digits);
}

Automaton repeated_letter_word(const Alphabet& alphabet, Letter l, unsigned long n) {
  return word_automaton(alphabet, Word(static_cast<std::size_t>(n), l));
}

}  // namespace

Automaton normal_form_to_unary_dfa(const NormalForm& nf) {
  nf.validate();
  const Alphabet alphabet = unary_tuple_alphabet(nf.dim);
  Automaton acc = word_automaton(alphabet, {});  // {ε}
  for (std::size_t l = 0; l < nf.levels.size(); ++l) {
    Letter x = support_letter(alphabet, nf.levels[l].axes);
    if (nf.levels[l].coeff > 0)
      acc = concat(acc, star(repeated_letter_word(alphabet, x, nf.levels[l].coeff)));
    unsigned long beta = nf.level_offset(l);
    if (beta > 0) acc = concat(acc, repeated_letter_word(alphabet, x, beta));
  }
  return minimize(determinize(acc));
}

Automaton normal_form_to_unary_dfa(const NormalFormUnion& u, int dim) {
  const Alphabet alphabet = unary_tuple_alphabet(dim);
  Automaton acc = empty_language(alphabet);
  for (const NormalForm& nf : u) {
    if (nf.dim != dim) throw InvalidInput("dimension mismatch in union");
    acc = unite(acc, normal_form_to_unary_dfa(nf));
  }
  return minimize(determinize(acc));
}

namespace {

unsigned support_mask_of_letter(const Alphabet& alphabet, Letter l) {
  unsigned mask = 0;
  for (int t = 0; t < alphabet.arity(); ++t)
    if (alphabet.track(l, t) != kPad) mask |= 1u << t;
  return mask;
}

std::vector<int> axes_of_mask(unsigned mask, int dim) {
  std::vector<int> axes;
  for (int t = 0; t < dim; ++t)
    if (mask & (1u << t)) axes.push_back(t);
  return axes;
}

struct SegmentWalk {
  // walk[i] = state reached after i+1 steps; cycle_start is the 1-based
  // position where the cycle begins (0 when the walk is a pure tail).
  std::vector<State> walk;
  std::size_t cycle_start = 0;
  std::size_t cycle_len = 0;
};

SegmentWalk rho_walk(const Automaton& dfa, State from, Letter l) {
  SegmentWalk out;
  std::map<State, std::size_t> pos;
  State cur = from;
  while (true) {
    State nxt = dfa.next(cur, l);
    if (nxt < 0) break;
    auto it = pos.find(nxt);
    if (it != pos.end()) {
      out.cycle_start = it->second;
      out.cycle_len = out.walk.size() + 1 - it->second;
      break;
    }
    out.walk.push_back(nxt);
    pos.emplace(nxt, out.walk.size());
    cur = nxt;
  }
  return out;
}

void decompose_dfs(const Automaton& dfa, int dim, State state, unsigned last_mask,
                   bool first, std::vector<NormalForm::Level>& stack,
                   std::set<NormalForm>& out) {
  const unsigned full = (1u << dim) - 1;
  for (unsigned mask = 1; mask <= full; ++mask) {
    if (first ? ((mask & ~full) != 0) : !((mask & ~last_mask) == 0 && mask != last_mask))
      continue;
    std::vector<int> axes = axes_of_mask(mask, dim);
    Letter l = support_letter(dfa.alphabet(), axes);
    SegmentWalk seg = rho_walk(dfa, state, l);
    for (std::size_t i = 0; i < seg.walk.size(); ++i) {
      std::size_t k = i + 1;
      bool on_cycle = seg.cycle_len > 0 && k >= seg.cycle_start;
      NormalForm::Level level;
      level.axes = axes;
      level.coeff = on_cycle ? static_cast<unsigned long>(seg.cycle_len) : 0;
      level.offsets.assign(static_cast<std::size_t>(dim), 0);
      for (int a : axes) level.offsets[static_cast<std::size_t>(a)] = k;
      stack.push_back(level);
      State v = seg.walk[i];
      if (dfa.is_accepting(v)) out.insert(NormalForm{dim, stack});
      decompose_dfs(dfa, dim, v, mask, false, stack, out);
      stack.pop_back();
    }
  }
}

}  // namespace

NormalFormUnion decompose_unary(const Automaton& a) {
  if (a.alphabet().base_size() != 1)
    throw InvalidInput("decompose requires a unary base alphabet");
  if (!validate_padded(a))
    throw InvalidInput("decompose requires a well-padded automaton");
  const int dim = a.alphabet().arity();
  if (dim > 24) throw InvalidInput("dimension too large");
  Automaton dfa = trim(canonicalize(a));
  NormalFormUnion result;
  if (dfa.num_states() == 0) return result;

  // Consecutive letters on any path of a trim automaton with a well-padded
  // language have non-increasing supports; anything else is a bug.
  for (State q = 0; q < dfa.num_states(); ++q) {
    unsigned in_meet = (1u << dim) - 1;
    bool has_in = false;
    for (State p = 0; p < dfa.num_states(); ++p)
      for (const auto& [l, tgts] : dfa.post(p))
        for (State t : tgts)
          if (t == q) {
            in_meet &= support_mask_of_letter(dfa.alphabet(), l);
            has_in = true;
          }
    if (!has_in) continue;
    for (const auto& [l, tgts] : dfa.post(q)) {
      unsigned m = support_mask_of_letter(dfa.alphabet(), l);
      if ((m & ~in_meet) != 0)
        throw InvalidInput("internal error: support sequence is not a chain");
    }
  }

  std::set<NormalForm> summands;
  const State init = dfa.initial().front();
  if (dfa.is_accepting(init)) {
    // The empty word encodes the zero vector.
    NormalForm zero;
    zero.dim = dim;
    NormalForm::Level lv;
    lv.axes = {0};
    lv.coeff = 0;
    lv.offsets.assign(static_cast<std::size_t>(dim), 0);
    zero.levels.push_back(std::move(lv));
    summands.insert(std::move(zero));
  }
  std::vector<NormalForm::Level> stack;
  decompose_dfs(dfa, dim, init, (1u << dim) - 1, true, stack, summands);
  result.assign(summands.begin(), summands.end());

  // Fold the zero-vector summand into a single-level progression that
  // starts one period in: {0} ∪ {c(n+1)·χ} = {c·n·χ}.
  auto is_zero_summand = [](const NormalForm& nf) {
    return nf.levels.size() == 1 && nf.levels[0].coeff == 0 &&
           nf.level_offset(0) == 0;
  };
  auto zero_it = std::find_if(result.begin(), result.end(), is_zero_summand);
  if (zero_it != result.end()) {
    for (NormalForm& nf : result) {
      if (nf.levels.size() != 1 || nf.levels[0].coeff == 0 ||
          nf.level_offset(0) != nf.levels[0].coeff)
        continue;
      for (int axis : nf.levels[0].axes)
        nf.levels[0].offsets[static_cast<std::size_t>(axis)] = 0;
      result.erase(zero_it);
      break;
    }
  }
  for (const NormalForm& nf : result) nf.validate();
  return result;
}

namespace {

/// Minimal combination value in each residue class modulo `base` (the
/// Apéry set); coins must have gcd 1 and minimum `base`.
std::vector<unsigned long> apery_table(unsigned long base,
                                       const std::vector<unsigned long>& coins) {
  const unsigned long kInf = ~0ul;
  std::vector<unsigned long> dist(base, kInf);
  dist[0] = 0;
  // Plain Dijkstra over the residue graph; base is tiny here.
  std::vector<bool> done(base, false);
  for (std::size_t round = 0; round < base; ++round) {
    unsigned long best = kInf;
    std::size_t u = base;
    for (std::size_t v = 0; v < base; ++v)
      if (!done[v] && dist[v] < best) {
        best = dist[v];
        u = v;
      }
    if (u == base) break;
    done[u] = true;
    for (unsigned long c : coins) {
      std::size_t v = (u + c) % base;
      if (dist[u] + c < dist[v]) dist[v] = dist[u] + c;
    }
  }
  return dist;
}

struct SemigroupView {
  unsigned long g = 0;                  // gcd of the coefficients
  unsigned long base = 0;               // min reduced coin
  std::vector<unsigned long> apery;     // empty when trivial

  // Is r*n (with r == g) a combination, i.e. n in the reduced semigroup?
  bool representable(unsigned long n) const {
    if (g == 0) return n == 0;
    if (base == 1) return true;
    return n >= apery[n % base];
  }
};

SemigroupView semigroup_view(unsigned long r, std::span<const unsigned long> cs) {
  std::vector<unsigned long> nonzero;
  for (unsigned long c : cs)
    if (c > 0) nonzero.push_back(c);
  unsigned long g = 0;
  for (unsigned long c : nonzero) g = std::gcd(g, c);
  if (r != g)
    throw InvalidInput("r must be the gcd of the coefficients");
  SemigroupView view;
  view.g = g;
  if (g == 0) return view;
  for (unsigned long& c : nonzero) c /= g;
  view.base = *std::min_element(nonzero.begin(), nonzero.end());
  if (view.base > 1) view.apery = apery_table(view.base, nonzero);
  return view;
}

}  // namespace

unsigned long frobenius_bound(unsigned long r, std::span<const unsigned long> cs) {
  SemigroupView view = semigroup_view(r, cs);
  if (view.g == 0 || view.base == 1) return 0;
  unsigned long widest = *std::max_element(view.apery.begin(), view.apery.end());
  return widest - view.base + 1;  // largest gap is max(Apéry) - base
}

std::vector<unsigned long> residue_set(unsigned long r,
                                       std::span<const unsigned long> cs,
                                       unsigned long threshold) {
  SemigroupView view = semigroup_view(r, cs);
  std::vector<unsigned long> out;
  for (unsigned long n = 0; n < threshold; ++n)
    if (view.representable(n)) out.push_back(n);
  return out;
}

bool YSet::contains(std::span<const unsigned long> x) const {
  unsigned long lhs = x[static_cast<std::size_t>(j)];
  unsigned long base = s;
  if (uses_reference()) {
    unsigned long xk = x[static_cast<std::size_t>(k)];
    if (lhs < xk) return false;
    lhs -= xk;
  }
  if (lhs < base) return false;
  unsigned long rest = lhs - base;
  if (is_finite_form()) {
    if (r == 0) return rest == 0 && !finite_set.empty();
    if (rest % r != 0) return false;
    return std::binary_search(finite_set.begin(), finite_set.end(), rest / r);
  }
  if (r == 0) return rest == 0;  // any n >= threshold works
  if (rest % r != 0) return false;
  return rest / r >= threshold;
}

bool YDecomposition::contains(std::span<const unsigned long> x) const {
  auto all = [&](const std::vector<YSet>& ys) {
    return std::all_of(ys.begin(), ys.end(),
                       [&](const YSet& y) { return y.contains(x); });
  };
  if (all(b_sets)) return true;
  return std::any_of(a_terms.begin(), a_terms.end(), all);
}

YDecomposition y_decompose(const NormalForm& nf) {
  nf.validate();
  const std::size_t t = nf.levels.size() - 1;

  auto support_set = [&](std::size_t l) {
    return std::set<int>(nf.levels[l].axes.begin(), nf.levels[l].axes.end());
  };

  std::vector<YSet> zero_axes;
  std::set<int> a0 = support_set(0);
  for (int axis = 0; axis < nf.dim; ++axis)
    if (!a0.count(axis)) {
      YSet y;
      y.form = YSet::Form::kOnlyJ;
      y.j = axis;  // coordinate pinned to 0
      zero_axes.push_back(y);
    }

  // Chain drop positions split the levels into constant-support blocks.
  std::vector<std::size_t> drops;
  for (std::size_t l = 0; l < t; ++l) {
    std::set<int> cur = support_set(l), nxt = support_set(l + 1);
    if (!std::includes(nxt.begin(), nxt.end(), cur.begin(), cur.end()))
      drops.push_back(l);
  }

  struct Block {
    std::vector<int> elements;  // axes introduced by this block, ascending
    unsigned long r = 0, s = 0, threshold = 0;
    std::vector<unsigned long> residues;
  };
  std::vector<Block> blocks;
  std::size_t lo = 0;
  for (std::size_t p = 0; p <= drops.size(); ++p) {
    std::size_t hi = p < drops.size() ? drops[p] : t;
    Block block;
    if (p < drops.size()) {
      std::set<int> cur = support_set(hi), nxt = support_set(hi + 1);
      for (int axis : cur)
        if (!nxt.count(axis)) block.elements.push_back(axis);
    } else {
      block.elements = nf.levels[t].axes;
    }
    std::vector<unsigned long> cs;
    unsigned long ssum = 0;
    for (std::size_t l = lo; l <= hi; ++l) {
      cs.push_back(nf.levels[l].coeff);
      ssum += nf.level_offset(l);  // the leader axis lies in every A_l here
    }
    unsigned long g = 0;
    for (unsigned long c : cs) g = std::gcd(g, c);
    block.r = g;
    block.s = ssum;
    block.threshold = frobenius_bound(g, cs);
    block.residues = residue_set(g, cs, block.threshold);
    blocks.push_back(std::move(block));
    lo = hi + 1;
  }

  auto leader_yset = [&](std::size_t p, bool primed) {
    const Block& b = blocks[p];
    YSet y;
    y.j = b.elements.front();
    y.r = b.r;
    y.s = b.s;
    if (p == 0) {
      y.form = primed ? YSet::Form::kOnlyJFinite : YSet::Form::kOnlyJ;
    } else {
      y.form = primed ? YSet::Form::kJAndKFinite : YSet::Form::kJAndK;
      y.k = blocks[p - 1].elements.front();
    }
    if (primed)
      y.finite_set = b.residues;
    else
      y.threshold = b.threshold;
    return y;
  };
  auto followers = [&](std::size_t p) {
    std::vector<YSet> out;
    const Block& b = blocks[p];
    for (std::size_t i = 1; i < b.elements.size(); ++i) {
      YSet y;
      y.form = YSet::Form::kJAndK;
      y.j = b.elements[i];
      y.k = b.elements[i - 1];
      out.push_back(y);
    }
    return out;
  };

  YDecomposition dec;
  dec.b_sets = zero_axes;
  for (std::size_t p = 0; p < blocks.size(); ++p) {
    dec.b_sets.push_back(leader_yset(p, false));
    for (YSet& y : followers(p)) dec.b_sets.push_back(std::move(y));
  }

  // One union term per nonempty choice of blocks that take their finite
  // residue variant; blocks with an empty residue set cannot be chosen.
  std::vector<std::size_t> eligible;
  for (std::size_t p = 0; p < blocks.size(); ++p)
    if (!blocks[p].residues.empty()) eligible.push_back(p);
  for (std::size_t pick = 1; pick < (1u << eligible.size()); ++pick) {
    std::set<std::size_t> primed;
    for (std::size_t i = 0; i < eligible.size(); ++i)
      if (pick & (1u << i)) primed.insert(eligible[i]);
    std::vector<YSet> term = zero_axes;
    for (std::size_t p = 0; p < blocks.size(); ++p) {
      term.push_back(leader_yset(p, primed.count(p) > 0));
      for (YSet& y : followers(p)) term.push_back(std::move(y));
    }
    dec.a_terms.push_back(std::move(term));
  }
  return dec;
}

namespace {

bool nf_is_blank(char c) { return c == ' ' || c == '\t' || c == '\r'; }

std::string nf_strip(const std::string& line) {
  std::size_t i = 0;
  while (i < line.size() && nf_is_blank(line[i])) ++i;
  if (i < line.size() && line[i] == '#') return "";
  std::string out = line;
  while (!out.empty() && nf_is_blank(out.back())) out.pop_back();
  return out;
}

std::vector<unsigned long> parse_number_list(const std::string& text, int line) {
  std::vector<unsigned long> out;
  std::string cur;
  for (char c : text) {
    if (c == ',') {
      if (cur.empty()) throw ParseError("empty entry in list", line);
      out.push_back(std::stoul(cur));
      cur.clear();
    } else if (c >= '0' && c <= '9') {
      cur += c;
    } else {
      throw ParseError(std::string("unexpected character '") + c + "' in list", line);
    }
  }
  if (!cur.empty()) out.push_back(std::stoul(cur));
  return out;
}

}  // namespace

NormalFormUnion parse_normal_forms(std::istream& in) {
  NormalFormUnion result;
  NormalForm cur;
  bool saw_dim = false, block_has_levels = false;
  int dim = 0;
  int lineno = 0;

  auto flush = [&](int at_line) {
    if (!block_has_levels) throw ParseError("summand has no levels", at_line);
    cur.dim = dim;
    try {
      cur.validate();
    } catch (const InvalidInput& e) {
      throw ParseError(e.what(), at_line);
    }
    result.push_back(cur);
    cur = NormalForm{};
    block_has_levels = false;
  };

  std::string raw;
  while (std::getline(in, raw)) {
    ++lineno;
    std::string line = nf_strip(raw);
    if (line.empty()) continue;
    if (line == "---") {
      flush(lineno);
      continue;
    }
    std::istringstream ss(line);
    std::string kw;
    ss >> kw;
    if (kw == "dim") {
      int d;
      if (!(ss >> d) || d < 1) throw ParseError("bad dimension", lineno);
      if (saw_dim && d != dim)
        throw ParseError("dimension differs between summands", lineno);
      dim = d;
      saw_dim = true;
    } else if (kw == "level") {
      if (!saw_dim) throw ParseError("level before dim", lineno);
      NormalForm::Level level;
      level.offsets.assign(static_cast<std::size_t>(dim), 0);
      bool saw_axes = false, saw_coeff = false, saw_offsets = false;
      std::string tok;
      while (ss >> tok) {
        if (tok.rfind("A={", 0) == 0 && tok.back() == '}') {
          for (unsigned long axis : parse_number_list(tok.substr(3, tok.size() - 4), lineno)) {
            if (axis < 1 || static_cast<int>(axis) > dim)
              throw ParseError("axis out of range (axes are 1-based)", lineno);
            level.axes.push_back(static_cast<int>(axis) - 1);
          }
          std::sort(level.axes.begin(), level.axes.end());
          saw_axes = true;
        } else if (tok.rfind("c=", 0) == 0) {
          level.coeff = std::stoul(tok.substr(2));
          saw_coeff = true;
        } else if (tok.rfind("b=(", 0) == 0 && tok.back() == ')') {
          auto values = parse_number_list(tok.substr(3, tok.size() - 4), lineno);
          if (values.size() != static_cast<std::size_t>(dim))
            throw ParseError("offset vector length differs from dim", lineno);
          level.offsets = values;
          saw_offsets = true;
        } else {
          throw ParseError("unknown level field: " + tok, lineno);
        }
      }
      if (!saw_axes || !saw_coeff || !saw_offsets)
        throw ParseError("level needs A={...} c=... b=(...)", lineno);
      cur.levels.push_back(std::move(level));
      block_has_levels = true;
    } else {
      throw ParseError("unknown keyword: " + kw, lineno);
    }
  }
  if (block_has_levels) flush(lineno);
  if (result.empty()) throw ParseError("no summands found");
  return result;
}

NormalFormUnion parse_normal_forms(const std::string& text) {
  std::istringstream ss(text);
  return parse_normal_forms(ss);
}

NormalFormUnion load_normal_forms(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open " + path);
  return parse_normal_forms(in);
}

std::string serialize_normal_forms(const NormalFormUnion& u) {
  std::ostringstream out;
  for (std::size_t i = 0; i < u.size(); ++i) {
    if (i > 0) out << "---\n";
    if (i == 0) out << "dim " << u[i].dim << '\n';
    for (const auto& level : u[i].levels) {
      out << "level A={";
      for (std::size_t a = 0; a < level.axes.size(); ++a)
        out << (a ? "," : "") << level.axes[a] + 1;
      out << "} c=" << level.coeff << " b=(";
      for (std::size_t a = 0; a < level.offsets.size(); ++a)
        out << (a ? "," : "") << level.offsets[a];
      out << ")\n";
    }
  }
  return out.str();
}

void save_normal_forms(const NormalFormUnion& u, const std::string& path) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write " + path);
  out << serialize_normal_forms(u);
}

}  // namespace ans
