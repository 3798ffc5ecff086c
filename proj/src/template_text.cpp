#include "template_text.hpp"

#include "errors.hpp"

namespace npgen {
namespace {

int parse_id(const std::string& s, const std::string& where) {
  if (s.empty()) throw ParseError(where + ": empty placeholder id");
  std::size_t used = 0;
  int id = 0;
  try {
    id = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw ParseError(where + ": bad placeholder id '" + s + "'");
  }
  if (used != s.size()) throw ParseError(where + ": bad placeholder id '" + s + "'");
  return id;
}

}  // namespace

TemplateParts parse_template(const std::string& template_text, const std::string& where) {
  TemplateParts parts;
  std::string pending;
  std::size_t pos = 0;
  auto flush = [&]() {
    if (!pending.empty()) {
      parts.segments.push_back({TemplateSegment::Kind::Text, pending, 0, {}});
      pending.clear();
    }
  };
  while (pos < template_text.size()) {
    char c = template_text[pos];
    if (c != '{') {
      pending += c;
      ++pos;
      continue;
    }
    std::size_t close = template_text.find('}', pos);
    if (close == std::string::npos) {
      throw ParseError(where + ": unterminated placeholder in template");
    }
    std::string body = template_text.substr(pos + 1, close - pos - 1);
    std::size_t colon = body.find(':');
    if (colon == std::string::npos) {
      throw ParseError(where + ": bad placeholder '{" + body + "}'");
    }
    std::string kind = body.substr(0, colon);
    std::string arg = body.substr(colon + 1);
    flush();
    if (kind == "np") {
      int id = parse_id(arg, where);
      parts.segments.push_back({TemplateSegment::Kind::Np, "", id, {}});
      parts.np_placeholders.push_back(id);
    } else if (kind == "be") {
      int id = parse_id(arg, where);
      parts.segments.push_back({TemplateSegment::Kind::Be, "", id, {}});
      parts.be_slots.push_back(id);
    } else if (kind == "list") {
      std::vector<int> ids;
      std::size_t start = 0;
      for (;;) {
        std::size_t comma = arg.find(',', start);
        std::string piece =
            comma == std::string::npos ? arg.substr(start) : arg.substr(start, comma - start);
        ids.push_back(parse_id(piece, where));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (ids.empty()) throw ParseError(where + ": empty list placeholder");
      for (int id : ids) parts.np_placeholders.push_back(id);
      parts.segments.push_back({TemplateSegment::Kind::List, "", 0, ids});
    } else {
      throw ParseError(where + ": unknown placeholder kind '" + kind + "'");
    }
    pos = close + 1;
  }
  flush();
  return parts;
}

}  // namespace npgen
