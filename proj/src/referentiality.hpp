#pragma once

#include "lexicon.hpp"
#include "source_ir.hpp"
#include "types.hpp"

namespace npgen {

struct Referentiality {
  ReferentialityKind kind = ReferentialityKind::Referential;
  int fired_test = 8;  // 1..8
};

// Classifies one NP by the first matching test of the ordered sequence:
//   1 restrictively modified            -> referential
//   2 subject of a generic-subject verb -> generic
//   3 copula subject whose category is subsumed by the complement's -> generic
//   4 purpose target ("for NP")         -> generic
//   5 object of a generic-object verb   -> generic
//   6 copula complement                 -> ascriptive
//   7 appositive                        -> ascriptive
//   8 default                           -> referential
// Pure function of (np, sentence, lexicon); throws UnknownLemmaError when a
// consulted lemma is missing.
Referentiality classify_np(const NPNode& np, const SentenceIR& sentence, const Lexicon& lexicon);

// One-line description of a test, for traces.
const char* referentiality_test_name(int test);

}  // namespace npgen
