#pragma once

#include <string>
#include <vector>

#include "ans/ans.hpp"
#include "ans/normal_form.hpp"
#include "ans/padded.hpp"

namespace ans {

/// An automaton over the padded tuple alphabet accepting exactly
/// { (rep(n_1),...,rep(n_d))^# : (n_1,...,n_d) ∈ X } for the compiled set
/// X and numeration system it was built for.
struct CompiledSet {
  PaddedRelation relation;
  Ans system;
  std::string source;

  int dim() const { return relation.arity(); }
  bool contains(std::span<const unsigned long> tuple) const;
};

/// Compiles a single Y-set over `s` into width `dim`. Free coordinates
/// run over L; the constrained coordinate uses the progression
/// recognizer (pure progressions), the k-shift relation (reference ties
/// and finite forms) or, for references with r > 0, the product of the
/// congruence relation, a constant shift onto a guessed track and the
/// radix-order check, with the guessed track projected away.
CompiledSet compile_yset(const Ans& s, const YSet& y, int dim);

/// Compiles a finite union of normal forms via their Y-decompositions.
CompiledSet compile(const Ans& s, const NormalFormUnion& x);
CompiledSet compile(const Ans& s, const NormalFormUnion& x, int dim);

struct VerifyReport {
  struct Counterexample {
    std::vector<unsigned long> tuple;
    bool missing = false;  // true: in the set but rejected; false: spurious
  };
  unsigned long checked = 0;
  std::vector<Counterexample> failures;

  bool ok() const { return failures.empty(); }
  /// "OK n_checked=…" or one "FAIL tuple=(…) direction=…" line per failure.
  std::string to_string() const;
};

/// Two-sided check of a compiled set against the arithmetic oracle:
/// every tuple in [0,bound]^d must agree, and every accepted word of
/// length <= |rep(bound)| must decode into the set.
VerifyReport verify(const Ans& s, const NormalFormUnion& x,
                    const CompiledSet& compiled, unsigned long bound);

}  // namespace ans
