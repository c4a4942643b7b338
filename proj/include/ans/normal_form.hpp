#pragma once

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "ans/automaton.hpp"

namespace ans {

/// One summand of the normal form for 1-recognizable subsets of ℕ^d: a
/// non-increasing chain of supports A_0 ⊇ A_1 ⊇ ... ⊇ A_t with per-level
/// coefficients and offsets, denoting
///   { Σ_ℓ (c_ℓ·n_ℓ·χ(A_ℓ) + b_ℓ) : n_ℓ ∈ ℕ }.
/// Offsets vanish off the support and agree on it.
struct NormalForm {
  struct Level {
    std::vector<int> axes;                 // sorted, 0-based, nonempty
    unsigned long coeff = 0;               // c_ℓ
    std::vector<unsigned long> offsets;    // b_{ℓ,i}, one per axis of ℕ^d

    bool operator==(const Level&) const = default;
  };

  int dim = 1;
  std::vector<Level> levels;  // at least one

  /// Throws InvalidInput on a malformed chain or offset pattern.
  void validate() const;
  /// The common offset value on level ℓ's support.
  unsigned long level_offset(std::size_t l) const;

  bool operator==(const NormalForm&) const = default;
  bool operator<(const NormalForm&) const;
};

/// A finite union of summands; the public shape of a 1-recognizable set.
using NormalFormUnion = std::vector<NormalForm>;

/// Direct arithmetic membership (bounded search over the n_ℓ); this is the
/// brute-force oracle the automata constructions are checked against.
bool member(std::span<const unsigned long> x, const NormalForm& nf);
bool member(std::span<const unsigned long> x, const NormalFormUnion& u);

/// DFA over the unary tuple alphabet (base {a}, arity dim) accepting
/// exactly the padded unary representations of the denoted set. Minimized,
/// canonical.
Automaton normal_form_to_unary_dfa(const NormalForm& nf);
Automaton normal_form_to_unary_dfa(const NormalFormUnion& u, int dim);

/// Inverse of the generator: splits a well-padded unary automaton along
/// its support-constant segments and reads each segment's tail-plus-cycle
/// walk off as an arithmetic progression. Throws InvalidInput for
/// ill-padded input or a base alphabet that is not unary.
NormalFormUnion decompose_unary(const Automaton& a);

/// One plus the largest n such that r·n is not a nonnegative integer
/// combination of cs; 0 when every r·n is representable or r == 0.
/// Requires r == gcd(cs) (gcd of the empty or all-zero list being 0).
unsigned long frobenius_bound(unsigned long r, std::span<const unsigned long> cs);

/// The n < threshold for which r·n is a nonnegative integer combination
/// of cs.
std::vector<unsigned long> residue_set(unsigned long r,
                                       std::span<const unsigned long> cs,
                                       unsigned long threshold);

/// One of the four coordinate-constraint shapes a normal form splits into.
/// Membership of x: there is n >= threshold (or n in finite_set) with
///   x_j = r·n + s            (kOnlyJ / kOnlyJFinite)
///   x_j = x_k + r·n + s      (kJAndK / kJAndKFinite);
/// all other coordinates are free.
struct YSet {
  enum class Form { kOnlyJ, kJAndK, kOnlyJFinite, kJAndKFinite };

  Form form = Form::kOnlyJ;
  int j = 0;   // constrained axis, 0-based
  int k = -1;  // reference axis for the kJAndK forms
  unsigned long r = 0, s = 0;
  unsigned long threshold = 0;            // N
  std::vector<unsigned long> finite_set;  // C, sorted

  bool uses_reference() const {
    return form == Form::kJAndK || form == Form::kJAndKFinite;
  }
  bool is_finite_form() const {
    return form == Form::kOnlyJFinite || form == Form::kJAndKFinite;
  }
  bool contains(std::span<const unsigned long> x) const;
};

/// A normal form rewritten as (⋃ over a_terms of ⋂) ∪ (⋂ of b_sets).
struct YDecomposition {
  std::vector<YSet> b_sets;
  std::vector<std::vector<YSet>> a_terms;

  bool contains(std::span<const unsigned long> x) const;
};

/// Splits a normal form into Y-sets: one leader per maximal constant-
/// support block of the chain (carrying the gcd, offset sum and Frobenius
/// threshold of that block), reference ties between consecutive block
/// leaders and within-block followers, plus finite residue variants
/// unioned over every combination of blocks with nonempty residue sets.
YDecomposition y_decompose(const NormalForm& nf);

/// Text format, axes 1-based, summands separated by "---":
///
///   dim 4
///   level A={1,2,3,4} c=5 b=(0,0,0,0)
///   level A={2,3}     c=4 b=(0,0,0,0)
NormalFormUnion parse_normal_forms(std::istream& in);
NormalFormUnion parse_normal_forms(const std::string& text);
NormalFormUnion load_normal_forms(const std::string& path);
std::string serialize_normal_forms(const NormalFormUnion& u);
void save_normal_forms(const NormalFormUnion& u, const std::string& path);

}  // namespace ans
