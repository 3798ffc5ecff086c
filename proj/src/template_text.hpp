#pragma once

#include <string>
#include <variant>
#include <vector>

namespace npgen {

// Sentence templates carry literal target text plus three placeholder forms:
// {np:ID} substitutes one NP, {be:ID} renders is/are by that NP's number, and
// {list:ID,ID,...} joins NPs with ", " and a final " and ".
struct TemplateSegment {
  enum class Kind { Text, Np, Be, List } kind = Kind::Text;
  std::string text;       // Kind::Text
  int np_id = 0;          // Kind::Np / Kind::Be
  std::vector<int> list;  // Kind::List
};

struct TemplateParts {
  std::vector<TemplateSegment> segments;
  std::vector<int> np_placeholders;  // every substituted id, list members included
  std::vector<int> be_slots;
};

// Throws ParseError on malformed placeholder syntax.
TemplateParts parse_template(const std::string& template_text, const std::string& where);

}  // namespace npgen
