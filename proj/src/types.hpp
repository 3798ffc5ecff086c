#pragma once

#include <cstdint>
#include <optional>
#include <string>

namespace npgen {

enum class Number : std::uint8_t { Singular, Plural };

// Major noun countability preference classes.
enum class MajorNcp : std::uint8_t {
  FullyCountable,
  StronglyCountable,
  WeaklyCountable,
  Uncountable,
  PluraliaTantum,
};

enum class EnvironmentKind : std::uint8_t {
  Denumerated,
  MassCountable,
  MassUncountable,
};

enum class Article : std::uint8_t { AAn, The, Some, None };

enum class ReferentialityKind : std::uint8_t { Generic, Referential, Ascriptive };

enum class SyntacticRole : std::uint8_t {
  Subject,
  Object,
  CopulaComplement,
  AppositiveTo,
  Other,
};

enum class CardinalStyle : std::uint8_t { Digits, Words };

inline const char* to_string(Number n) {
  return n == Number::Singular ? "singular" : "plural";
}

inline const char* to_string(MajorNcp m) {
  switch (m) {
    case MajorNcp::FullyCountable: return "fully_countable";
    case MajorNcp::StronglyCountable: return "strongly_countable";
    case MajorNcp::WeaklyCountable: return "weakly_countable";
    case MajorNcp::Uncountable: return "uncountable";
    case MajorNcp::PluraliaTantum: return "pluralia_tantum";
  }
  return "?";
}

inline const char* to_string(EnvironmentKind k) {
  switch (k) {
    case EnvironmentKind::Denumerated: return "denumerated";
    case EnvironmentKind::MassCountable: return "mass_countable";
    case EnvironmentKind::MassUncountable: return "mass_uncountable";
  }
  return "?";
}

inline const char* to_string(Article a) {
  switch (a) {
    case Article::AAn: return "a_an";
    case Article::The: return "the";
    case Article::Some: return "some";
    case Article::None: return "none";
  }
  return "?";
}

inline const char* to_string(ReferentialityKind k) {
  switch (k) {
    case ReferentialityKind::Generic: return "generic";
    case ReferentialityKind::Referential: return "referential";
    case ReferentialityKind::Ascriptive: return "ascriptive";
  }
  return "?";
}

inline const char* to_string(SyntacticRole r) {
  switch (r) {
    case SyntacticRole::Subject: return "SUBJECT";
    case SyntacticRole::Object: return "OBJECT";
    case SyntacticRole::CopulaComplement: return "COPULA_COMPLEMENT";
    case SyntacticRole::AppositiveTo: return "APPOSITIVE_TO";
    case SyntacticRole::Other: return "OTHER";
  }
  return "?";
}

}  // namespace npgen
